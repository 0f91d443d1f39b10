#include "suspension/syntax.hpp"

#include <functional>
#include <random>

#include "suspension/errors.hpp"

namespace susp {

TermPtr sconst(std::string name) {
    return std::make_shared<SuspTerm>(SuspTerm{SuspTerm::Const{std::move(name)}});
}
TermPtr smeta(std::string name) {
    return std::make_shared<SuspTerm>(SuspTerm{SuspTerm::Meta{std::move(name)}});
}
TermPtr sindex(std::uint64_t i) {
    if (i < 1) throw IndexUnderflow();
    return std::make_shared<SuspTerm>(SuspTerm{SuspTerm::Index{i}});
}
TermPtr sapp(TermPtr fun, TermPtr arg) {
    return std::make_shared<SuspTerm>(
        SuspTerm{SuspTerm::App{std::move(fun), std::move(arg)}});
}
TermPtr sabs(TermPtr body, TypePtr ann) {
    return std::make_shared<SuspTerm>(
        SuspTerm{SuspTerm::Abs{std::move(ann), std::move(body)}});
}
TermPtr ssusp(TermPtr term, std::uint64_t ol, std::uint64_t nl, EnvPtr env) {
    return std::make_shared<SuspTerm>(
        SuspTerm{SuspTerm::Susp{std::move(term), ol, nl, std::move(env)}});
}
EnvPtr enil() {
    static const EnvPtr nil = std::make_shared<SuspEnv>(SuspEnv{SuspEnv::Nil{}});
    return nil;
}
EnvPtr econs(EnvItem head, EnvPtr tail) {
    return std::make_shared<SuspEnv>(
        SuspEnv{SuspEnv::Cons{std::move(head), std::move(tail)}});
}
EnvPtr emerged(EnvPtr e1, std::uint64_t nl1, std::uint64_t ol2, EnvPtr e2) {
    return std::make_shared<SuspEnv>(
        SuspEnv{SuspEnv::Merged{std::move(e1), nl1, ol2, std::move(e2)}});
}

bool term_eq(const TermPtr& a, const TermPtr& b) {
    if (a == b) return true;
    if (a->node.index() != b->node.index()) return false;
    if (auto* c = std::get_if<SuspTerm::Const>(&a->node))
        return c->name == std::get<SuspTerm::Const>(b->node).name;
    if (auto* m = std::get_if<SuspTerm::Meta>(&a->node))
        return m->name == std::get<SuspTerm::Meta>(b->node).name;
    if (auto* i = std::get_if<SuspTerm::Index>(&a->node))
        return i->i == std::get<SuspTerm::Index>(b->node).i;
    if (auto* ap = std::get_if<SuspTerm::App>(&a->node)) {
        const auto& bp = std::get<SuspTerm::App>(b->node);
        return term_eq(ap->fun, bp.fun) && term_eq(ap->arg, bp.arg);
    }
    if (auto* la = std::get_if<SuspTerm::Abs>(&a->node)) {
        const auto& lb = std::get<SuspTerm::Abs>(b->node);
        if ((la->ann == nullptr) != (lb.ann == nullptr)) return false;
        if (la->ann && !type_eq(la->ann, lb.ann)) return false;
        return term_eq(la->body, lb.body);
    }
    const auto& sa = std::get<SuspTerm::Susp>(a->node);
    const auto& sb = std::get<SuspTerm::Susp>(b->node);
    return sa.ol == sb.ol && sa.nl == sb.nl && term_eq(sa.term, sb.term) &&
           env_eq(sa.env, sb.env);
}

bool env_eq(const EnvPtr& a, const EnvPtr& b) {
    if (a == b) return true;
    if (a->node.index() != b->node.index()) return false;
    if (std::holds_alternative<SuspEnv::Nil>(a->node)) return true;
    if (auto* ca = std::get_if<SuspEnv::Cons>(&a->node)) {
        const auto& cb = std::get<SuspEnv::Cons>(b->node);
        return ca->head.level == cb.head.level &&
               term_eq(ca->head.term, cb.head.term) && env_eq(ca->tail, cb.tail);
    }
    const auto& ma = std::get<SuspEnv::Merged>(a->node);
    const auto& mb = std::get<SuspEnv::Merged>(b->node);
    return ma.nl1 == mb.nl1 && ma.ol2 == mb.ol2 && env_eq(ma.e1, mb.e1) &&
           env_eq(ma.e2, mb.e2);
}

bool expr_eq(const Expr& a, const Expr& b) {
    if (a.index() != b.index()) return false;
    if (auto* t = std::get_if<TermPtr>(&a)) return term_eq(*t, std::get<TermPtr>(b));
    if (auto* e = std::get_if<EnvPtr>(&a)) return env_eq(*e, std::get<EnvPtr>(b));
    const auto& ia = std::get<EnvItem>(a);
    const auto& ib = std::get<EnvItem>(b);
    return ia.level == ib.level && term_eq(ia.term, ib.term);
}

std::size_t expr_nodes(const Expr& x) {
    std::size_t n = 0;
    walk_positions(x, [&](const Expr&, const Position&) {
        ++n;
        return true;
    });
    return n;
}

std::uint64_t env_len(const EnvPtr& e) {
    if (std::holds_alternative<SuspEnv::Nil>(e->node)) return 0;
    if (auto* c = std::get_if<SuspEnv::Cons>(&e->node))
        return checked_add(1, env_len(c->tail));
    const auto& m = std::get<SuspEnv::Merged>(e->node);
    return checked_add(env_len(m.e1), monus(m.ol2, m.nl1));
}

std::uint64_t env_lev(const EnvPtr& e) {
    if (std::holds_alternative<SuspEnv::Nil>(e->node)) return 0;
    if (auto* c = std::get_if<SuspEnv::Cons>(&e->node)) return c->head.level;
    const auto& m = std::get<SuspEnv::Merged>(e->node);
    return checked_add(env_lev(m.e2), monus(m.nl1, m.ol2));
}

std::uint64_t env_ind(const EnvPtr& e, std::uint64_t i) {
    if (std::holds_alternative<SuspEnv::Nil>(e->node)) return 0;
    if (auto* c = std::get_if<SuspEnv::Cons>(&e->node))
        return i == 0 ? c->head.level : env_ind(c->tail, i - 1);
    const auto& me = std::get<SuspEnv::Merged>(e->node);
    std::uint64_t l = env_len(me.e1);
    if (i < l) {
        std::uint64_t m = monus(me.nl1, env_ind(me.e1, i));
        if (env_len(me.e2) > m)
            return checked_add(env_ind(me.e2, m), monus(me.nl1, me.ol2));
        return env_ind(me.e1, i);
    }
    return env_ind(me.e2, checked_add(checked_sub(i, l), me.nl1));
}

namespace {

void check_wf(const Expr& x, Position& here, std::optional<Violation>& out);

void check_wf_term(const TermPtr& t, Position& here, std::optional<Violation>& out) {
    if (out) return;
    if (auto* a = std::get_if<SuspTerm::App>(&t->node)) {
        here.push_back(0);
        check_wf_term(a->fun, here, out);
        here.back() = 1;
        check_wf_term(a->arg, here, out);
        here.pop_back();
        return;
    }
    if (auto* l = std::get_if<SuspTerm::Abs>(&t->node)) {
        here.push_back(0);
        check_wf_term(l->body, here, out);
        here.pop_back();
        return;
    }
    if (auto* s = std::get_if<SuspTerm::Susp>(&t->node)) {
        std::uint64_t len = env_len(s->env);
        if (len != s->ol) {
            out = Violation{here, "len(env) = " + std::to_string(len) +
                                      " but ol = " + std::to_string(s->ol)};
            return;
        }
        std::uint64_t lev = env_lev(s->env);
        if (lev > s->nl) {
            out = Violation{here, "lev(env) = " + std::to_string(lev) +
                                      " exceeds nl = " + std::to_string(s->nl)};
            return;
        }
        here.push_back(0);
        check_wf_term(s->term, here, out);
        here.back() = 1;
        check_wf(Expr{s->env}, here, out);
        here.pop_back();
    }
}

void check_wf_env(const EnvPtr& e, Position& here, std::optional<Violation>& out) {
    if (out) return;
    if (auto* c = std::get_if<SuspEnv::Cons>(&e->node)) {
        std::uint64_t lev = env_lev(c->tail);
        if (lev > c->head.level) {
            out = Violation{here, "lev(tail) = " + std::to_string(lev) +
                                      " exceeds entry level " +
                                      std::to_string(c->head.level)};
            return;
        }
        here.push_back(0);
        here.push_back(0);
        check_wf_term(c->head.term, here, out);
        here.pop_back();
        here.back() = 1;
        check_wf_env(c->tail, here, out);
        here.pop_back();
        return;
    }
    if (auto* m = std::get_if<SuspEnv::Merged>(&e->node)) {
        std::uint64_t len = env_len(m->e2);
        if (len != m->ol2) {
            out = Violation{here, "len(e2) = " + std::to_string(len) +
                                      " but ol2 = " + std::to_string(m->ol2)};
            return;
        }
        std::uint64_t lev = env_lev(m->e1);
        if (lev > m->nl1) {
            out = Violation{here, "lev(e1) = " + std::to_string(lev) +
                                      " exceeds nl1 = " + std::to_string(m->nl1)};
            return;
        }
        here.push_back(0);
        check_wf_env(m->e1, here, out);
        here.back() = 1;
        check_wf_env(m->e2, here, out);
        here.pop_back();
    }
}

void check_wf(const Expr& x, Position& here, std::optional<Violation>& out) {
    if (auto* t = std::get_if<TermPtr>(&x)) {
        check_wf_term(*t, here, out);
    } else if (auto* e = std::get_if<EnvPtr>(&x)) {
        check_wf_env(*e, here, out);
    } else {
        here.push_back(0);
        check_wf_term(std::get<EnvItem>(x).term, here, out);
        here.pop_back();
    }
}

} // namespace

std::optional<Violation> check_wellformed(const Expr& x) {
    std::optional<Violation> out;
    Position here;
    check_wf(x, here, out);
    return out;
}

bool is_simple(const EnvPtr& e) {
    const SuspEnv* cur = e.get();
    for (;;) {
        if (std::holds_alternative<SuspEnv::Nil>(cur->node)) return true;
        if (auto* c = std::get_if<SuspEnv::Cons>(&cur->node)) {
            cur = c->tail.get();
            continue;
        }
        return false;
    }
}

EnvPtr env_truncate(const EnvPtr& e, std::uint64_t i) {
    if (!is_simple(e)) throw NotSimple();
    EnvPtr cur = e;
    for (std::uint64_t k = 0; k < i; ++k) {
        if (auto* c = std::get_if<SuspEnv::Cons>(&cur->node))
            cur = c->tail;
        else
            return enil();
    }
    return cur;
}

namespace {

std::optional<Expr> child_of(const Expr& x, int ordinal) {
    if (auto* tp = std::get_if<TermPtr>(&x)) {
        const SuspTerm& t = **tp;
        if (auto* a = std::get_if<SuspTerm::App>(&t.node)) {
            if (ordinal == 0) return Expr{a->fun};
            if (ordinal == 1) return Expr{a->arg};
        } else if (auto* l = std::get_if<SuspTerm::Abs>(&t.node)) {
            if (ordinal == 0) return Expr{l->body};
        } else if (auto* s = std::get_if<SuspTerm::Susp>(&t.node)) {
            if (ordinal == 0) return Expr{s->term};
            if (ordinal == 1) return Expr{s->env};
        }
        return std::nullopt;
    }
    if (auto* ep = std::get_if<EnvPtr>(&x)) {
        const SuspEnv& e = **ep;
        if (auto* c = std::get_if<SuspEnv::Cons>(&e.node)) {
            if (ordinal == 0) return Expr{c->head};
            if (ordinal == 1) return Expr{c->tail};
        } else if (auto* m = std::get_if<SuspEnv::Merged>(&e.node)) {
            if (ordinal == 0) return Expr{m->e1};
            if (ordinal == 1) return Expr{m->e2};
        }
        return std::nullopt;
    }
    if (ordinal == 0) return Expr{std::get<EnvItem>(x).term};
    return std::nullopt;
}

int child_count(const Expr& x) {
    if (auto* tp = std::get_if<TermPtr>(&x)) {
        const SuspTerm& t = **tp;
        if (std::holds_alternative<SuspTerm::App>(t.node)) return 2;
        if (std::holds_alternative<SuspTerm::Abs>(t.node)) return 1;
        if (std::holds_alternative<SuspTerm::Susp>(t.node)) return 2;
        return 0;
    }
    if (auto* ep = std::get_if<EnvPtr>(&x)) {
        const SuspEnv& e = **ep;
        if (std::holds_alternative<SuspEnv::Nil>(e.node)) return 0;
        return 2;
    }
    return 1;
}

Expr rebuild(const Expr& x, int ordinal, const Expr& child) {
    auto as_term = [](const Expr& c) -> TermPtr {
        if (auto* t = std::get_if<TermPtr>(&c)) return *t;
        throw BadPosition("replacement is not a term");
    };
    auto as_env = [](const Expr& c) -> EnvPtr {
        if (auto* e = std::get_if<EnvPtr>(&c)) return *e;
        throw BadPosition("replacement is not an environment");
    };
    if (auto* tp = std::get_if<TermPtr>(&x)) {
        const SuspTerm& t = **tp;
        if (auto* a = std::get_if<SuspTerm::App>(&t.node)) {
            if (ordinal == 0) return Expr{sapp(as_term(child), a->arg)};
            if (ordinal == 1) return Expr{sapp(a->fun, as_term(child))};
        } else if (auto* l = std::get_if<SuspTerm::Abs>(&t.node)) {
            if (ordinal == 0) return Expr{sabs(as_term(child), l->ann)};
        } else if (auto* s = std::get_if<SuspTerm::Susp>(&t.node)) {
            if (ordinal == 0) return Expr{ssusp(as_term(child), s->ol, s->nl, s->env)};
            if (ordinal == 1) return Expr{ssusp(s->term, s->ol, s->nl, as_env(child))};
        }
        throw BadPosition();
    }
    if (auto* ep = std::get_if<EnvPtr>(&x)) {
        const SuspEnv& e = **ep;
        if (auto* c = std::get_if<SuspEnv::Cons>(&e.node)) {
            if (ordinal == 0) {
                if (auto* item = std::get_if<EnvItem>(&child))
                    return Expr{econs(*item, c->tail)};
                throw BadPosition("replacement is not an environment term");
            }
            if (ordinal == 1) return Expr{econs(c->head, as_env(child))};
        } else if (auto* m = std::get_if<SuspEnv::Merged>(&e.node)) {
            if (ordinal == 0) return Expr{emerged(as_env(child), m->nl1, m->ol2, m->e2)};
            if (ordinal == 1) return Expr{emerged(m->e1, m->nl1, m->ol2, as_env(child))};
        }
        throw BadPosition();
    }
    const auto& item = std::get<EnvItem>(x);
    if (ordinal == 0) {
        if (auto* t = std::get_if<TermPtr>(&child))
            return Expr{EnvItem{*t, item.level}};
        throw BadPosition("replacement is not a term");
    }
    throw BadPosition();
}

} // namespace

Expr subexpr(const Expr& x, const Position& pos) {
    Expr cur = x;
    for (int ordinal : pos) {
        auto next = child_of(cur, ordinal);
        if (!next) throw BadPosition();
        cur = *next;
    }
    return cur;
}

Expr replace_subexpr(const Expr& x, const Position& pos, const Expr& replacement) {
    std::function<Expr(const Expr&, std::size_t)> go = [&](const Expr& cur,
                                                           std::size_t k) -> Expr {
        if (k == pos.size()) return replacement;
        auto next = child_of(cur, pos[k]);
        if (!next) throw BadPosition();
        return rebuild(cur, pos[k], go(*next, k + 1));
    };
    return go(x, 0);
}

void walk_positions(const Expr& x,
                    const std::function<bool(const Expr&, const Position&)>& visit) {
    Position here;
    bool stop = false;
    std::function<void(const Expr&)> go = [&](const Expr& cur) {
        if (stop) return;
        if (!visit(cur, here)) {
            stop = true;
            return;
        }
        int n = child_count(cur);
        for (int i = 0; i < n && !stop; ++i) {
            here.push_back(i);
            go(*child_of(cur, i));
            here.pop_back();
        }
    };
    go(x);
}

namespace {

struct Gen {
    std::mt19937_64 rng;
    bool allow_meta;
    bool allow_const;
    bool allow_merged;
    int budget;

    std::uint64_t pick(std::uint64_t n) { // uniform in [0, n)
        return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng);
    }

    TermPtr leaf() {
        static const char* consts[] = {"a", "b", "c", "d", "e"};
        static const char* metas[] = {"m1", "m2", "m3"};
        for (;;) {
            switch (pick(3)) {
            case 0:
                if (allow_const) return sconst(consts[pick(5)]);
                break;
            case 1:
                return sindex(1 + pick(4));
            default:
                if (allow_meta) return smeta(metas[pick(3)]);
                break;
            }
        }
    }

    TermPtr term() {
        if (budget <= 1) {
            budget -= 1;
            return leaf();
        }
        budget -= 1;
        switch (pick(10)) {
        case 0:
        case 1:
        case 2:
            return sapp(term(), term());
        case 3:
        case 4:
            return sabs(term());
        case 5:
        case 6:
        case 7: {
            EnvPtr e = env();
            std::uint64_t ol = env_len(e);
            std::uint64_t nl = checked_add(env_lev(e), pick(3));
            return ssusp(term(), ol, nl, e);
        }
        default:
            return leaf();
        }
    }

    EnvPtr env() {
        if (budget <= 0) return enil();
        switch (pick(20)) {
        case 0:
        case 1:
        case 2:
        case 3:
        case 4:
            return enil();
        default:
            break;
        }
        budget -= 1;
        if (allow_merged && pick(10) < 3) {
            EnvPtr e2 = env();
            EnvPtr e1 = env();
            std::uint64_t ol2 = env_len(e2);
            std::uint64_t nl1 = checked_add(env_lev(e1), pick(3));
            return emerged(e1, nl1, ol2, e2);
        }
        EnvPtr tail = env();
        TermPtr t = term();
        std::uint64_t l = checked_add(env_lev(tail), pick(3));
        return econs(EnvItem{t, l}, tail);
    }
};

} // namespace

TermPtr gen_term(std::uint64_t seed, int size, bool allow_meta, bool allow_const,
                 bool allow_merged) {
    Gen g{std::mt19937_64(seed), allow_meta, allow_const, allow_merged, size};
    return g.term();
}

EnvPtr gen_env(std::uint64_t seed, int size, bool allow_meta) {
    Gen g{std::mt19937_64(seed), allow_meta, true, true, size};
    return g.env();
}

Expr gen_expr(std::uint64_t seed, int size, bool allow_meta) {
    return Expr{gen_term(seed, size, allow_meta)};
}

TermPtr susp_of_db(const DbPtr& t) {
    if (auto* c = std::get_if<DbTerm::Const>(&t->node)) return sconst(c->name);
    if (auto* i = std::get_if<DbTerm::Index>(&t->node)) return sindex(i->i);
    if (auto* a = std::get_if<DbTerm::App>(&t->node))
        return sapp(susp_of_db(a->fun), susp_of_db(a->arg));
    const auto& l = std::get<DbTerm::Abs>(t->node);
    return sabs(susp_of_db(l.body), l.ann);
}

std::optional<DbPtr> db_of_susp(const TermPtr& t) {
    if (auto* c = std::get_if<SuspTerm::Const>(&t->node)) return dconst(c->name);
    if (auto* i = std::get_if<SuspTerm::Index>(&t->node)) return dindex(i->i);
    if (auto* a = std::get_if<SuspTerm::App>(&t->node)) {
        auto f = db_of_susp(a->fun);
        auto x = db_of_susp(a->arg);
        if (!f || !x) return std::nullopt;
        return dapp(*f, *x);
    }
    if (auto* l = std::get_if<SuspTerm::Abs>(&t->node)) {
        auto b = db_of_susp(l->body);
        if (!b) return std::nullopt;
        return dabs(*b, l->ann);
    }
    return std::nullopt;
}

} // namespace susp
