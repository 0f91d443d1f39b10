#include "suspension/text.hpp"

#include <cctype>

#include "suspension/errors.hpp"

namespace susp {

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;

    explicit Cursor(const std::string& text) : s(text) {}

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }

    bool eof() {
        skip();
        return i >= s.size();
    }

    char peek() {
        skip();
        return i < s.size() ? s[i] : '\0';
    }

    bool try_eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }

    bool try_eat(const char* lit) {
        skip();
        std::size_t n = 0;
        while (lit[n]) ++n;
        if (s.compare(i, n, lit) == 0) {
            i += n;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!try_eat(c)) fail(std::string("expected '") + c + "'");
    }

    [[noreturn]] void fail(const std::string& msg) {
        std::size_t line = 1, col = 1;
        for (std::size_t k = 0; k < i && k < s.size(); ++k) {
            if (s[k] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(msg, line, col);
    }

    std::uint64_t nat() {
        skip();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            fail("expected number");
        std::uint64_t n = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            std::uint64_t d = static_cast<std::uint64_t>(s[i] - '0');
            if (n > (UINT64_MAX - d) / 10) fail("number too large");
            n = n * 10 + d;
            ++i;
        }
        return n;
    }

    bool ident_start() {
        char c = peek();
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }

    std::string ident() {
        skip();
        if (!ident_start()) fail("expected identifier");
        std::size_t start = i;
        while (i < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_' ||
                s[i] == '\''))
            ++i;
        return s.substr(start, i - start);
    }

    void done() {
        if (!eof()) fail("trailing input");
    }
};

// Type annotations inside term grammars; right-associative arrows.
TypePtr cur_type(Cursor& c) {
    TypePtr lhs;
    if (c.try_eat('(')) {
        lhs = cur_type(c);
        c.expect(')');
    } else {
        lhs = tybase(c.ident());
    }
    if (c.try_eat("->")) return tyarrow(lhs, cur_type(c));
    return lhs;
}

// ---------- named terms ----------

void show_named(const NamedPtr& t, int prec, std::string& out) {
    // prec 0: any form; 1: function position; 2: argument position
    if (auto* c = std::get_if<NamedTerm::Const>(&t->node)) {
        out += "c:" + c->name;
        return;
    }
    if (auto* v = std::get_if<NamedTerm::Var>(&t->node)) {
        out += v->name;
        return;
    }
    if (auto* a = std::get_if<NamedTerm::App>(&t->node)) {
        bool paren = prec >= 2;
        if (paren) out += '(';
        show_named(a->fun, 1, out);
        out += ' ';
        show_named(a->arg, 2, out);
        if (paren) out += ')';
        return;
    }
    const auto& l = std::get<NamedTerm::Abs>(t->node);
    bool paren = prec >= 1;
    if (paren) out += '(';
    out += '\\' + l.binder;
    if (l.ann) out += ':' + show_type(l.ann);
    out += ". ";
    show_named(l.body, 0, out);
    if (paren) out += ')';
}

NamedPtr named_term(Cursor& c);

NamedPtr named_atom(Cursor& c) {
    if (c.try_eat('(')) {
        NamedPtr t = named_term(c);
        c.expect(')');
        return t;
    }
    if (c.peek() == '\\') {
        c.expect('\\');
        std::string binder = c.ident();
        TypePtr ann;
        if (c.try_eat(':')) ann = cur_type(c);
        c.expect('.');
        return nabs(binder, named_term(c), ann);
    }
    std::string name = c.ident();
    if (name == "c" && c.try_eat(':')) return nconst(c.ident());
    return nvar(name);
}

bool named_atom_ahead(Cursor& c) {
    char ch = c.peek();
    return ch == '(' || ch == '\\' || c.ident_start();
}

NamedPtr named_term(Cursor& c) {
    NamedPtr t = named_atom(c);
    while (named_atom_ahead(c)) t = napp(t, named_atom(c));
    return t;
}

// ---------- de Bruijn terms ----------

void show_db(const DbPtr& t, int prec, std::string& out) {
    if (auto* c = std::get_if<DbTerm::Const>(&t->node)) {
        out += "c:" + c->name;
        return;
    }
    if (auto* i = std::get_if<DbTerm::Index>(&t->node)) {
        out += '#' + std::to_string(i->i);
        return;
    }
    if (auto* a = std::get_if<DbTerm::App>(&t->node)) {
        bool paren = prec >= 2;
        if (paren) out += '(';
        show_db(a->fun, 1, out);
        out += ' ';
        show_db(a->arg, 2, out);
        if (paren) out += ')';
        return;
    }
    const auto& l = std::get<DbTerm::Abs>(t->node);
    bool paren = prec >= 1;
    if (paren) out += '(';
    if (l.ann)
        out += "\\:" + show_type(l.ann) + ". ";
    else
        out += "\\ ";
    show_db(l.body, 0, out);
    if (paren) out += ')';
}

DbPtr db_term(Cursor& c);

DbPtr db_atom(Cursor& c) {
    if (c.try_eat('(')) {
        DbPtr t = db_term(c);
        c.expect(')');
        return t;
    }
    if (c.try_eat('#')) return dindex(c.nat());
    if (c.try_eat('\\')) {
        TypePtr ann;
        if (c.try_eat(':')) {
            ann = cur_type(c);
            c.expect('.');
        }
        return dabs(db_term(c), ann);
    }
    std::string name = c.ident();
    if (name == "c" && c.try_eat(':')) return dconst(c.ident());
    c.fail("expected a de Bruijn term");
}

bool db_atom_ahead(Cursor& c) {
    char ch = c.peek();
    return ch == '(' || ch == '\\' || ch == '#' || c.ident_start();
}

DbPtr db_term(Cursor& c) {
    DbPtr t = db_atom(c);
    while (db_atom_ahead(c)) t = dapp(t, db_atom(c));
    return t;
}

// ---------- suspension expressions ----------

void show_susp_term(const TermPtr& t, std::string& out);
void show_susp_env(const EnvPtr& e, std::string& out);

void show_susp_term(const TermPtr& t, std::string& out) {
    if (auto* c = std::get_if<SuspTerm::Const>(&t->node)) {
        out += "c:" + c->name;
        return;
    }
    if (auto* m = std::get_if<SuspTerm::Meta>(&t->node)) {
        out += '?' + m->name;
        return;
    }
    if (auto* i = std::get_if<SuspTerm::Index>(&t->node)) {
        out += '#' + std::to_string(i->i);
        return;
    }
    if (auto* a = std::get_if<SuspTerm::App>(&t->node)) {
        out += '(';
        show_susp_term(a->fun, out);
        out += ' ';
        show_susp_term(a->arg, out);
        out += ')';
        return;
    }
    if (auto* l = std::get_if<SuspTerm::Abs>(&t->node)) {
        if (l->ann)
            out += "\\:" + show_type(l->ann) + ". ";
        else
            out += "\\ ";
        show_susp_term(l->body, out);
        return;
    }
    const auto& s = std::get<SuspTerm::Susp>(t->node);
    out += '[';
    show_susp_term(s.term, out);
    out += ',' + std::to_string(s.ol) + ',' + std::to_string(s.nl) + ',';
    show_susp_env(s.env, out);
    out += ']';
}

void show_susp_env(const EnvPtr& e, std::string& out) {
    if (std::holds_alternative<SuspEnv::Nil>(e->node)) {
        out += "nil";
        return;
    }
    if (auto* c = std::get_if<SuspEnv::Cons>(&e->node)) {
        out += '(';
        show_susp_term(c->head.term, out);
        out += ',' + std::to_string(c->head.level) + ")::";
        show_susp_env(c->tail, out);
        return;
    }
    const auto& m = std::get<SuspEnv::Merged>(e->node);
    out += '{';
    show_susp_env(m.e1, out);
    out += ',' + std::to_string(m.nl1) + ',' + std::to_string(m.ol2) + ',';
    show_susp_env(m.e2, out);
    out += '}';
}

TermPtr susp_term(Cursor& c);
EnvPtr susp_env(Cursor& c);

TermPtr susp_term(Cursor& c) {
    if (c.try_eat('?')) return smeta(c.ident());
    if (c.try_eat('#')) return sindex(c.nat());
    if (c.try_eat('\\')) {
        TypePtr ann;
        if (c.try_eat(':')) {
            ann = cur_type(c);
            c.expect('.');
        }
        return sabs(susp_term(c), ann);
    }
    if (c.try_eat('(')) {
        TermPtr f = susp_term(c);
        TermPtr a = susp_term(c);
        c.expect(')');
        return sapp(f, a);
    }
    if (c.try_eat('[')) {
        TermPtr t = susp_term(c);
        c.expect(',');
        std::uint64_t ol = c.nat();
        c.expect(',');
        std::uint64_t nl = c.nat();
        c.expect(',');
        EnvPtr e = susp_env(c);
        c.expect(']');
        return ssusp(t, ol, nl, e);
    }
    std::string name = c.ident();
    if (name == "c" && c.try_eat(':')) return sconst(c.ident());
    c.fail("expected a suspension term");
}

EnvPtr susp_env(Cursor& c) {
    if (c.try_eat("nil")) return enil();
    if (c.try_eat('(')) {
        TermPtr t = susp_term(c);
        c.expect(',');
        std::uint64_t lev = c.nat();
        c.expect(')');
        if (!c.try_eat("::")) c.fail("expected '::'");
        return econs(EnvItem{t, lev}, susp_env(c));
    }
    if (c.try_eat('{')) {
        EnvPtr e1 = susp_env(c);
        c.expect(',');
        std::uint64_t nl1 = c.nat();
        c.expect(',');
        std::uint64_t ol2 = c.nat();
        c.expect(',');
        EnvPtr e2 = susp_env(c);
        c.expect('}');
        return emerged(e1, nl1, ol2, e2);
    }
    c.fail("expected an environment");
}

// ---------- lambda-upsilon ----------

void show_ups_term(const ups::TermPtr& t, std::string& out);
void show_ups_sub(const ups::SubPtr& s, std::string& out);

void show_ups_term(const ups::TermPtr& t, std::string& out) {
    if (auto* i = std::get_if<ups::Term::Index>(&t->node)) {
        out += std::to_string(i->n);
        return;
    }
    if (auto* a = std::get_if<ups::Term::App>(&t->node)) {
        out += '(';
        show_ups_term(a->fun, out);
        out += ' ';
        show_ups_term(a->arg, out);
        out += ')';
        return;
    }
    if (auto* l = std::get_if<ups::Term::Abs>(&t->node)) {
        out += "\\ ";
        show_ups_term(l->body, out);
        return;
    }
    const auto& c = std::get<ups::Term::Closure>(t->node);
    if (std::holds_alternative<ups::Term::Abs>(c.a->node)) {
        out += '(';
        show_ups_term(c.a, out);
        out += ')';
    } else {
        show_ups_term(c.a, out);
    }
    out += '[';
    show_ups_sub(c.s, out);
    out += ']';
}

void show_ups_sub(const ups::SubPtr& s, std::string& out) {
    if (auto* sl = std::get_if<ups::Sub::Slash>(&s->node)) {
        show_ups_term(sl->a, out);
        out += '/';
        return;
    }
    if (auto* li = std::get_if<ups::Sub::Lift>(&s->node)) {
        out += "^(";
        show_ups_sub(li->s, out);
        out += ')';
        return;
    }
    out += '!';
}

ups::TermPtr ups_term(Cursor& c);
ups::SubPtr ups_sub(Cursor& c);

ups::TermPtr ups_atom(Cursor& c) {
    if (std::isdigit(static_cast<unsigned char>(c.peek())))
        return ups::index(c.nat());
    if (c.try_eat('#')) return ups::index(c.nat());
    if (c.try_eat('\\')) return ups::abs(ups_term(c));
    if (c.try_eat('(')) {
        ups::TermPtr first = ups_term(c);
        if (c.try_eat(')')) return first;
        ups::TermPtr second = ups_term(c);
        c.expect(')');
        return ups::app(first, second);
    }
    c.fail("expected a lambda-upsilon term");
}

ups::TermPtr ups_term(Cursor& c) {
    ups::TermPtr t = ups_atom(c);
    while (c.try_eat('[')) {
        ups::SubPtr s = ups_sub(c);
        c.expect(']');
        t = ups::closure(t, s);
    }
    return t;
}

ups::SubPtr ups_sub(Cursor& c) {
    if (c.try_eat('!')) return ups::shift();
    if (c.try_eat('^')) {
        c.expect('(');
        ups::SubPtr s = ups_sub(c);
        c.expect(')');
        return ups::lift(s);
    }
    ups::TermPtr t = ups_term(c);
    c.expect('/');
    return ups::slash(t);
}

// ---------- lambda-s ----------

void show_ls(const ls::TermPtr& t, std::string& out);

void show_ls_wrapped(const ls::TermPtr& t, std::string& out) {
    bool paren = std::holds_alternative<ls::Term::Sigma>(t->node) ||
                 std::holds_alternative<ls::Term::Abs>(t->node);
    if (paren) out += '(';
    show_ls(t, out);
    if (paren) out += ')';
}

void show_ls(const ls::TermPtr& t, std::string& out) {
    if (auto* i = std::get_if<ls::Term::Index>(&t->node)) {
        out += std::to_string(i->n);
        return;
    }
    if (auto* a = std::get_if<ls::Term::App>(&t->node)) {
        out += '(';
        show_ls(a->fun, out);
        out += ' ';
        show_ls(a->arg, out);
        out += ')';
        return;
    }
    if (auto* l = std::get_if<ls::Term::Abs>(&t->node)) {
        out += "\\ ";
        show_ls(l->body, out);
        return;
    }
    if (auto* s = std::get_if<ls::Term::Sigma>(&t->node)) {
        if (std::holds_alternative<ls::Term::Abs>(s->a->node)) {
            out += '(';
            show_ls(s->a, out);
            out += ')';
        } else {
            show_ls(s->a, out);
        }
        out += " s{" + std::to_string(s->i) + "} ";
        show_ls_wrapped(s->b, out);
        return;
    }
    const auto& p = std::get<ls::Term::Phi>(t->node);
    out += "phi{" + std::to_string(p.k) + ',' + std::to_string(p.i) + "} ";
    show_ls_wrapped(p.a, out);
}

ls::TermPtr ls_term(Cursor& c);

ls::TermPtr ls_atom(Cursor& c) {
    if (std::isdigit(static_cast<unsigned char>(c.peek())))
        return ls::index(c.nat());
    if (c.try_eat('#')) return ls::index(c.nat());
    if (c.try_eat('\\')) return ls::abs(ls_term(c));
    if (c.try_eat('(')) {
        ls::TermPtr first = ls_term(c);
        if (c.try_eat(')')) return first;
        ls::TermPtr second = ls_term(c);
        c.expect(')');
        return ls::app(first, second);
    }
    c.fail("expected a lambda-s term");
}

ls::TermPtr ls_prefix(Cursor& c) {
    if (c.try_eat("phi{")) {
        std::uint64_t k = c.nat();
        c.expect(',');
        std::uint64_t i = c.nat();
        c.expect('}');
        return ls::phi(k, i, ls_prefix(c));
    }
    return ls_atom(c);
}

ls::TermPtr ls_term(Cursor& c) {
    ls::TermPtr t = ls_prefix(c);
    while (c.try_eat("s{")) {
        std::uint64_t i = c.nat();
        c.expect('}');
        t = ls::sigma(t, i, ls_prefix(c));
    }
    return t;
}

// ---------- lambda-sigma ----------

void show_sig_term(const sig::TermPtr& t, std::string& out);
void show_sig_sub(const sig::SubPtr& s, std::string& out);

void show_sig_term(const sig::TermPtr& t, std::string& out) {
    if (std::holds_alternative<sig::Term::One>(t->node)) {
        out += '1';
        return;
    }
    if (auto* a = std::get_if<sig::Term::App>(&t->node)) {
        out += '(';
        show_sig_term(a->fun, out);
        out += ' ';
        show_sig_term(a->arg, out);
        out += ')';
        return;
    }
    if (auto* l = std::get_if<sig::Term::Abs>(&t->node)) {
        out += "\\ ";
        show_sig_term(l->body, out);
        return;
    }
    const auto& c = std::get<sig::Term::Closure>(t->node);
    if (std::holds_alternative<sig::Term::Abs>(c.a->node)) {
        out += '(';
        show_sig_term(c.a, out);
        out += ')';
    } else {
        show_sig_term(c.a, out);
    }
    out += '[';
    show_sig_sub(c.s, out);
    out += ']';
}

void show_sig_sub_operand(const sig::SubPtr& s, std::string& out) {
    if (std::holds_alternative<sig::Sub::Cons>(s->node)) {
        out += '(';
        show_sig_sub(s, out);
        out += ')';
    } else {
        show_sig_sub(s, out);
    }
}

void show_sig_sub(const sig::SubPtr& s, std::string& out) {
    if (std::holds_alternative<sig::Sub::Id>(s->node)) {
        out += "id";
        return;
    }
    if (std::holds_alternative<sig::Sub::Shift>(s->node)) {
        out += '!';
        return;
    }
    if (auto* c = std::get_if<sig::Sub::Cons>(&s->node)) {
        show_sig_term(c->a, out);
        out += " . ";
        show_sig_sub(c->s, out);
        return;
    }
    const auto& p = std::get<sig::Sub::Comp>(s->node);
    out += '(';
    show_sig_sub_operand(p.s, out);
    out += " o ";
    show_sig_sub_operand(p.t, out);
    out += ')';
}

sig::TermPtr sig_term(Cursor& c);
sig::SubPtr sig_sub(Cursor& c);

sig::TermPtr sig_atom(Cursor& c) {
    if (c.try_eat('1')) return sig::one();
    if (c.try_eat('\\')) return sig::abs(sig_term(c));
    if (c.try_eat('(')) {
        sig::TermPtr first = sig_term(c);
        if (c.try_eat(')')) return first;
        sig::TermPtr second = sig_term(c);
        c.expect(')');
        return sig::app(first, second);
    }
    c.fail("expected a lambda-sigma term");
}

sig::TermPtr sig_term(Cursor& c) {
    sig::TermPtr t = sig_atom(c);
    while (c.try_eat('[')) {
        sig::SubPtr s = sig_sub(c);
        c.expect(']');
        t = sig::closure(t, s);
    }
    return t;
}

sig::SubPtr sig_sub_atom(Cursor& c) {
    if (c.try_eat("id")) return sig::id();
    if (c.try_eat('!')) return sig::shift();
    if (c.try_eat('(')) {
        sig::SubPtr s = sig_sub(c);
        c.expect(')');
        return s;
    }
    c.fail("expected a substitution");
}

sig::SubPtr sig_sub(Cursor& c) {
    std::size_t mark = c.i;
    try {
        sig::TermPtr a = sig_term(c);
        if (c.try_eat('.')) return sig::cons(a, sig_sub(c));
    } catch (const ParseError&) {
    }
    c.i = mark;
    sig::SubPtr s = sig_sub_atom(c);
    while (c.try_eat('o')) s = sig::comp(s, sig_sub_atom(c));
    return s;
}

} // namespace

std::string print_named(const NamedPtr& t) {
    std::string out;
    show_named(t, 0, out);
    return out;
}

NamedPtr parse_named(const std::string& text) {
    Cursor c(text);
    NamedPtr t = named_term(c);
    c.done();
    return t;
}

std::string print_db(const DbPtr& t) {
    std::string out;
    show_db(t, 0, out);
    return out;
}

DbPtr parse_db(const std::string& text) {
    Cursor c(text);
    DbPtr t = db_term(c);
    c.done();
    return t;
}

std::string print_susp(const TermPtr& t) {
    std::string out;
    show_susp_term(t, out);
    return out;
}

std::string print_susp_env(const EnvPtr& e) {
    std::string out;
    show_susp_env(e, out);
    return out;
}

std::string print_expr(const Expr& x) {
    if (auto* t = std::get_if<TermPtr>(&x)) return print_susp(*t);
    if (auto* e = std::get_if<EnvPtr>(&x)) return print_susp_env(*e);
    const auto& item = std::get<EnvItem>(x);
    return "(" + print_susp(item.term) + "," + std::to_string(item.level) + ")";
}

TermPtr parse_susp(const std::string& text) {
    Cursor c(text);
    TermPtr t = susp_term(c);
    c.done();
    return t;
}

EnvPtr parse_susp_env(const std::string& text) {
    Cursor c(text);
    EnvPtr e = susp_env(c);
    c.done();
    return e;
}

std::string print_ups(const ups::TermPtr& t) {
    std::string out;
    show_ups_term(t, out);
    return out;
}

ups::TermPtr parse_ups(const std::string& text) {
    Cursor c(text);
    ups::TermPtr t = ups_term(c);
    c.done();
    return t;
}

std::string print_ls(const ls::TermPtr& t) {
    std::string out;
    show_ls(t, out);
    return out;
}

ls::TermPtr parse_ls(const std::string& text) {
    Cursor c(text);
    ls::TermPtr t = ls_term(c);
    c.done();
    return t;
}

std::string print_sigma(const sig::TermPtr& t) {
    std::string out;
    show_sig_term(t, out);
    return out;
}

std::string print_sigma_sub(const sig::SubPtr& s) {
    std::string out;
    show_sig_sub(s, out);
    return out;
}

sig::TermPtr parse_sigma(const std::string& text) {
    Cursor c(text);
    sig::TermPtr t = sig_term(c);
    c.done();
    return t;
}

std::string print_position(const Position& pos) {
    if (pos.empty()) return "-";
    std::string out;
    for (std::size_t k = 0; k < pos.size(); ++k) {
        if (k) out += '/';
        out += std::to_string(pos[k]);
    }
    return out;
}

Position parse_position(const std::string& text) {
    if (text == "-") return {};
    Position out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t slash = text.find('/', start);
        std::string part = text.substr(
            start, slash == std::string::npos ? std::string::npos : slash - start);
        if (part.empty()) throw ParseError("empty position component", 1, start + 1);
        for (char ch : part)
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                throw ParseError("bad position component", 1, start + 1);
        out.push_back(std::stoi(part));
        if (slash == std::string::npos) break;
        start = slash + 1;
    }
    return out;
}

} // namespace susp
