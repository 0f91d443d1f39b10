#include "suspension/alt.hpp"

#include <functional>
#include <random>

#include "suspension/errors.hpp"

namespace susp::ups {

TermPtr index(std::uint64_t n) {
    if (n < 1) throw IndexUnderflow();
    return std::make_shared<Term>(Term{Term::Index{n}});
}
TermPtr app(TermPtr f, TermPtr a) {
    return std::make_shared<Term>(Term{Term::App{std::move(f), std::move(a)}});
}
TermPtr abs(TermPtr b) {
    return std::make_shared<Term>(Term{Term::Abs{std::move(b)}});
}
TermPtr closure(TermPtr a, SubPtr s) {
    return std::make_shared<Term>(Term{Term::Closure{std::move(a), std::move(s)}});
}
SubPtr slash(TermPtr a) {
    return std::make_shared<Sub>(Sub{Sub::Slash{std::move(a)}});
}
SubPtr lift(SubPtr s) {
    return std::make_shared<Sub>(Sub{Sub::Lift{std::move(s)}});
}
SubPtr shift() {
    static const SubPtr sh = std::make_shared<Sub>(Sub{Sub::Shift{}});
    return sh;
}

const char* rule_name(Rule r) {
    switch (r) {
    case Rule::B: return "ups.B";
    case Rule::App: return "ups.App";
    case Rule::Lambda: return "ups.Lambda";
    case Rule::FVar: return "ups.FVar";
    case Rule::RVar: return "ups.RVar";
    case Rule::VarShift: return "ups.VarShift";
    case Rule::FVarLift: return "ups.FVarLift";
    case Rule::RVarLift: return "ups.RVarLift";
    }
    return "?";
}

bool eq(const Expr& a, const Expr& b) {
    if (a.index() != b.index()) return false;
    if (auto* ta = std::get_if<TermPtr>(&a)) {
        const TermPtr& tb = std::get<TermPtr>(b);
        if ((*ta)->node.index() != tb->node.index()) return false;
        if (auto* i = std::get_if<Term::Index>(&(*ta)->node))
            return i->n == std::get<Term::Index>(tb->node).n;
        if (auto* ap = std::get_if<Term::App>(&(*ta)->node)) {
            const auto& bp = std::get<Term::App>(tb->node);
            return eq(Expr{ap->fun}, Expr{bp.fun}) && eq(Expr{ap->arg}, Expr{bp.arg});
        }
        if (auto* l = std::get_if<Term::Abs>(&(*ta)->node))
            return eq(Expr{l->body}, Expr{std::get<Term::Abs>(tb->node).body});
        const auto& ca = std::get<Term::Closure>((*ta)->node);
        const auto& cb = std::get<Term::Closure>(tb->node);
        return eq(Expr{ca.a}, Expr{cb.a}) && eq(Expr{ca.s}, Expr{cb.s});
    }
    const SubPtr& sa = std::get<SubPtr>(a);
    const SubPtr& sb = std::get<SubPtr>(b);
    if (sa->node.index() != sb->node.index()) return false;
    if (auto* sl = std::get_if<Sub::Slash>(&sa->node))
        return eq(Expr{sl->a}, Expr{std::get<Sub::Slash>(sb->node).a});
    if (auto* li = std::get_if<Sub::Lift>(&sa->node))
        return eq(Expr{li->s}, Expr{std::get<Sub::Lift>(sb->node).s});
    return true;
}

namespace {

int child_count(const Expr& x) {
    if (auto* t = std::get_if<TermPtr>(&x)) {
        if (std::holds_alternative<Term::App>((*t)->node)) return 2;
        if (std::holds_alternative<Term::Abs>((*t)->node)) return 1;
        if (std::holds_alternative<Term::Closure>((*t)->node)) return 2;
        return 0;
    }
    const SubPtr& s = std::get<SubPtr>(x);
    if (std::holds_alternative<Sub::Shift>(s->node)) return 0;
    return 1;
}

Expr child_of(const Expr& x, int k) {
    if (auto* t = std::get_if<TermPtr>(&x)) {
        if (auto* a = std::get_if<Term::App>(&(*t)->node))
            return k == 0 ? Expr{a->fun} : Expr{a->arg};
        if (auto* l = std::get_if<Term::Abs>(&(*t)->node)) return Expr{l->body};
        const auto& c = std::get<Term::Closure>((*t)->node);
        return k == 0 ? Expr{c.a} : Expr{c.s};
    }
    const SubPtr& s = std::get<SubPtr>(x);
    if (auto* sl = std::get_if<Sub::Slash>(&s->node)) return Expr{sl->a};
    return Expr{std::get<Sub::Lift>(s->node).s};
}

Expr rebuild(const Expr& x, int k, const Expr& c) {
    auto term = [](const Expr& e) { return std::get<TermPtr>(e); };
    auto sub = [](const Expr& e) { return std::get<SubPtr>(e); };
    if (auto* t = std::get_if<TermPtr>(&x)) {
        if (auto* a = std::get_if<Term::App>(&(*t)->node))
            return k == 0 ? Expr{app(term(c), a->arg)} : Expr{app(a->fun, term(c))};
        if (std::holds_alternative<Term::Abs>((*t)->node)) return Expr{abs(term(c))};
        const auto& cl = std::get<Term::Closure>((*t)->node);
        return k == 0 ? Expr{closure(term(c), cl.s)} : Expr{closure(cl.a, sub(c))};
    }
    const SubPtr& s = std::get<SubPtr>(x);
    if (std::holds_alternative<Sub::Slash>(s->node)) return Expr{slash(term(c))};
    return Expr{lift(sub(c))};
}

std::optional<Rule> rule_at(const Expr& x, bool include_beta) {
    auto* tp = std::get_if<TermPtr>(&x);
    if (!tp) return std::nullopt;
    if (auto* a = std::get_if<Term::App>(&(*tp)->node)) {
        if (include_beta && std::holds_alternative<Term::Abs>(a->fun->node))
            return Rule::B;
        return std::nullopt;
    }
    auto* c = std::get_if<Term::Closure>(&(*tp)->node);
    if (!c) return std::nullopt;
    if (std::holds_alternative<Term::App>(c->a->node)) return Rule::App;
    if (std::holds_alternative<Term::Abs>(c->a->node)) return Rule::Lambda;
    if (auto* i = std::get_if<Term::Index>(&c->a->node)) {
        if (std::holds_alternative<Sub::Slash>(c->s->node))
            return i->n == 1 ? Rule::FVar : Rule::RVar;
        if (std::holds_alternative<Sub::Shift>(c->s->node)) return Rule::VarShift;
        return i->n == 1 ? Rule::FVarLift : Rule::RVarLift;
    }
    return std::nullopt;
}

Expr contractum(const Expr& x, Rule r) {
    auto bad = [&]() -> Expr { throw RuleNotApplicable(rule_name(r)); };
    auto* tp = std::get_if<TermPtr>(&x);
    if (!tp) return bad();
    if (r == Rule::B) {
        auto* a = std::get_if<Term::App>(&(*tp)->node);
        if (!a) return bad();
        auto* l = std::get_if<Term::Abs>(&a->fun->node);
        if (!l) return bad();
        return Expr{closure(l->body, slash(a->arg))};
    }
    auto* c = std::get_if<Term::Closure>(&(*tp)->node);
    if (!c) return bad();
    switch (r) {
    case Rule::App: {
        auto* a = std::get_if<Term::App>(&c->a->node);
        if (!a) return bad();
        return Expr{app(closure(a->fun, c->s), closure(a->arg, c->s))};
    }
    case Rule::Lambda: {
        auto* l = std::get_if<Term::Abs>(&c->a->node);
        if (!l) return bad();
        return Expr{abs(closure(l->body, lift(c->s)))};
    }
    case Rule::FVar: {
        auto* sl = std::get_if<Sub::Slash>(&c->s->node);
        auto* i = std::get_if<Term::Index>(&c->a->node);
        if (!sl || !i || i->n != 1) return bad();
        return Expr{sl->a};
    }
    case Rule::RVar: {
        auto* i = std::get_if<Term::Index>(&c->a->node);
        if (!std::holds_alternative<Sub::Slash>(c->s->node) || !i || i->n < 2)
            return bad();
        return Expr{index(i->n - 1)};
    }
    case Rule::VarShift: {
        auto* i = std::get_if<Term::Index>(&c->a->node);
        if (!std::holds_alternative<Sub::Shift>(c->s->node) || !i) return bad();
        return Expr{index(checked_add(i->n, 1))};
    }
    case Rule::FVarLift: {
        auto* i = std::get_if<Term::Index>(&c->a->node);
        if (!std::holds_alternative<Sub::Lift>(c->s->node) || !i || i->n != 1)
            return bad();
        return Expr{index(1)};
    }
    case Rule::RVarLift: {
        auto* li = std::get_if<Sub::Lift>(&c->s->node);
        auto* i = std::get_if<Term::Index>(&c->a->node);
        if (!li || !i || i->n < 2) return bad();
        return Expr{closure(closure(index(i->n - 1), li->s), shift())};
    }
    default:
        return bad();
    }
}

void walk(const Expr& x, susp::Position& here,
          const std::function<bool(const Expr&, const susp::Position&)>& f,
          bool& stop) {
    if (stop) return;
    if (!f(x, here)) {
        stop = true;
        return;
    }
    int n = child_count(x);
    for (int k = 0; k < n && !stop; ++k) {
        here.push_back(k);
        walk(child_of(x, k), here, f, stop);
        here.pop_back();
    }
}

Expr replace(const Expr& x, const susp::Position& pos, std::size_t k,
             const Expr& repl) {
    if (k == pos.size()) return repl;
    if (pos[k] < 0 || pos[k] >= child_count(x)) throw BadPosition();
    return rebuild(x, pos[k], replace(child_of(x, pos[k]), pos, k + 1, repl));
}

} // namespace

std::size_t size(const Expr& x) {
    std::size_t n = 0;
    susp::Position here;
    bool stop = false;
    walk(x, here, [&](const Expr&, const susp::Position&) {
        ++n;
        return true;
    }, stop);
    return n;
}

std::vector<std::pair<susp::Position, Rule>>
redexes(const Expr& x, bool include_beta) {
    std::vector<std::pair<susp::Position, Rule>> out;
    susp::Position here;
    bool stop = false;
    walk(x, here, [&](const Expr& sub, const susp::Position& pos) {
        if (auto r = rule_at(sub, include_beta)) out.emplace_back(pos, *r);
        return true;
    }, stop);
    return out;
}

Expr step(const Expr& x, const susp::Position& pos, Rule r) {
    Expr sub = x;
    for (int k : pos) {
        if (k < 0 || k >= child_count(sub)) throw BadPosition();
        sub = child_of(sub, k);
    }
    return replace(x, pos, 0, contractum(sub, r));
}

NormResult normalize(const Expr& x, std::size_t budget, bool include_beta) {
    NormResult out;
    out.expr = x;
    for (;;) {
        std::optional<std::pair<susp::Position, Rule>> first;
        susp::Position here;
        bool stop = false;
        walk(out.expr, here, [&](const Expr& sub, const susp::Position& pos) {
            if (auto r = rule_at(sub, include_beta)) {
                first = {pos, *r};
                return false;
            }
            return true;
        }, stop);
        if (!first) return out;
        if (out.steps == budget) {
            out.exhausted = true;
            return out;
        }
        ++out.steps;
        out.expr = step(out.expr, first->first, first->second);
    }
}

namespace {

SubPtr gen_sub(std::mt19937_64& rng, int& budget);

TermPtr gen_term(std::mt19937_64& rng, int& budget) {
    auto pick = [&](std::uint64_t n) {
        return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng);
    };
    if (budget <= 1) {
        budget -= 1;
        return index(1 + pick(3));
    }
    budget -= 1;
    switch (pick(8)) {
    case 0:
    case 1:
        return app(gen_term(rng, budget), gen_term(rng, budget));
    case 2:
    case 3:
        return abs(gen_term(rng, budget));
    case 4:
    case 5:
        return closure(gen_term(rng, budget), gen_sub(rng, budget));
    default:
        return index(1 + pick(3));
    }
}

SubPtr gen_sub(std::mt19937_64& rng, int& budget) {
    auto pick = [&](std::uint64_t n) {
        return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng);
    };
    if (budget <= 1) {
        budget -= 1;
        return shift();
    }
    budget -= 1;
    switch (pick(4)) {
    case 0:
        return slash(gen_term(rng, budget));
    case 1:
        return lift(gen_sub(rng, budget));
    default:
        return shift();
    }
}

} // namespace

TermPtr gen(std::uint64_t seed, int size) {
    std::mt19937_64 rng(seed);
    int budget = size;
    return gen_term(rng, budget);
}

} // namespace susp::ups

namespace susp::ls {

TermPtr index(std::uint64_t n) {
    if (n < 1) throw IndexUnderflow();
    return std::make_shared<Term>(Term{Term::Index{n}});
}
TermPtr app(TermPtr f, TermPtr a) {
    return std::make_shared<Term>(Term{Term::App{std::move(f), std::move(a)}});
}
TermPtr abs(TermPtr b) {
    return std::make_shared<Term>(Term{Term::Abs{std::move(b)}});
}
TermPtr sigma(TermPtr a, std::uint64_t i, TermPtr b) {
    if (i < 1) throw IndexUnderflow();
    return std::make_shared<Term>(Term{Term::Sigma{std::move(a), i, std::move(b)}});
}
TermPtr phi(std::uint64_t k, std::uint64_t i, TermPtr a) {
    if (i < 1) throw IndexUnderflow();
    return std::make_shared<Term>(Term{Term::Phi{k, i, std::move(a)}});
}

const char* rule_name(Rule r) {
    switch (r) {
    case Rule::SigmaGeneration: return "ls.sigma-generation";
    case Rule::SigmaLambda: return "ls.sigma-lambda";
    case Rule::SigmaApp: return "ls.sigma-app";
    case Rule::SigmaDestruction: return "ls.sigma-destruction";
    case Rule::PhiLambda: return "ls.phi-lambda";
    case Rule::PhiApp: return "ls.phi-app";
    case Rule::PhiDestruction: return "ls.phi-destruction";
    case Rule::SigmaSigma: return "se.sigma-sigma";
    case Rule::SigmaPhi1: return "se.sigma-phi-1";
    case Rule::SigmaPhi2: return "se.sigma-phi-2";
    case Rule::PhiSigma: return "se.phi-sigma";
    case Rule::PhiPhi1: return "se.phi-phi-1";
    case Rule::PhiPhi2: return "se.phi-phi-2";
    }
    return "?";
}

bool eq(const TermPtr& a, const TermPtr& b) {
    if (a == b) return true;
    if (a->node.index() != b->node.index()) return false;
    if (auto* i = std::get_if<Term::Index>(&a->node))
        return i->n == std::get<Term::Index>(b->node).n;
    if (auto* ap = std::get_if<Term::App>(&a->node)) {
        const auto& bp = std::get<Term::App>(b->node);
        return eq(ap->fun, bp.fun) && eq(ap->arg, bp.arg);
    }
    if (auto* l = std::get_if<Term::Abs>(&a->node))
        return eq(l->body, std::get<Term::Abs>(b->node).body);
    if (auto* sa = std::get_if<Term::Sigma>(&a->node)) {
        const auto& sb = std::get<Term::Sigma>(b->node);
        return sa->i == sb.i && eq(sa->a, sb.a) && eq(sa->b, sb.b);
    }
    const auto& pa = std::get<Term::Phi>(a->node);
    const auto& pb = std::get<Term::Phi>(b->node);
    return pa.k == pb.k && pa.i == pb.i && eq(pa.a, pb.a);
}

namespace {

int child_count(const TermPtr& t) {
    if (std::holds_alternative<Term::App>(t->node)) return 2;
    if (std::holds_alternative<Term::Abs>(t->node)) return 1;
    if (std::holds_alternative<Term::Sigma>(t->node)) return 2;
    if (std::holds_alternative<Term::Phi>(t->node)) return 1;
    return 0;
}

TermPtr child_of(const TermPtr& t, int k) {
    if (auto* a = std::get_if<Term::App>(&t->node))
        return k == 0 ? a->fun : a->arg;
    if (auto* l = std::get_if<Term::Abs>(&t->node)) return l->body;
    if (auto* s = std::get_if<Term::Sigma>(&t->node)) return k == 0 ? s->a : s->b;
    return std::get<Term::Phi>(t->node).a;
}

TermPtr rebuild(const TermPtr& t, int k, const TermPtr& c) {
    if (auto* a = std::get_if<Term::App>(&t->node))
        return k == 0 ? app(c, a->arg) : app(a->fun, c);
    if (std::holds_alternative<Term::Abs>(t->node)) return abs(c);
    if (auto* s = std::get_if<Term::Sigma>(&t->node))
        return k == 0 ? sigma(c, s->i, s->b) : sigma(s->a, s->i, c);
    const auto& p = std::get<Term::Phi>(t->node);
    return phi(p.k, p.i, c);
}

std::optional<Rule> rule_at(const TermPtr& t, RuleSet rs) {
    bool se = rs == RuleSet::SeFull || rs == RuleSet::SeOnly;
    if (auto* a = std::get_if<Term::App>(&t->node)) {
        if ((rs == RuleSet::Full || rs == RuleSet::SeFull) &&
            std::holds_alternative<Term::Abs>(a->fun->node))
            return Rule::SigmaGeneration;
        return std::nullopt;
    }
    if (auto* s = std::get_if<Term::Sigma>(&t->node)) {
        if (std::holds_alternative<Term::Abs>(s->a->node)) return Rule::SigmaLambda;
        if (std::holds_alternative<Term::App>(s->a->node)) return Rule::SigmaApp;
        if (std::holds_alternative<Term::Index>(s->a->node))
            return Rule::SigmaDestruction;
        if (se) {
            if (auto* in = std::get_if<Term::Sigma>(&s->a->node)) {
                if (in->i <= s->i) return Rule::SigmaSigma;
            } else if (auto* ph = std::get_if<Term::Phi>(&s->a->node)) {
                if (ph->k < s->i && s->i < ph->k + ph->i) return Rule::SigmaPhi1;
                if (ph->k + ph->i <= s->i) return Rule::SigmaPhi2;
            }
        }
        return std::nullopt;
    }
    if (auto* p = std::get_if<Term::Phi>(&t->node)) {
        if (std::holds_alternative<Term::Abs>(p->a->node)) return Rule::PhiLambda;
        if (std::holds_alternative<Term::App>(p->a->node)) return Rule::PhiApp;
        if (std::holds_alternative<Term::Index>(p->a->node))
            return Rule::PhiDestruction;
        if (se) {
            if (auto* in = std::get_if<Term::Sigma>(&p->a->node)) {
                if (in->i <= p->k + 1) return Rule::PhiSigma;
            } else if (auto* ph = std::get_if<Term::Phi>(&p->a->node)) {
                if (ph->k + ph->i <= p->k) return Rule::PhiPhi1;
                if (ph->k <= p->k && p->k < ph->k + ph->i) return Rule::PhiPhi2;
            }
        }
        return std::nullopt;
    }
    return std::nullopt;
}

TermPtr contractum(const TermPtr& t, Rule r) {
    auto bad = [&]() -> TermPtr { throw RuleNotApplicable(rule_name(r)); };
    switch (r) {
    case Rule::SigmaGeneration: {
        auto* a = std::get_if<Term::App>(&t->node);
        if (!a) return bad();
        auto* l = std::get_if<Term::Abs>(&a->fun->node);
        if (!l) return bad();
        return sigma(l->body, 1, a->arg);
    }
    case Rule::SigmaLambda: {
        auto* s = std::get_if<Term::Sigma>(&t->node);
        if (!s) return bad();
        auto* l = std::get_if<Term::Abs>(&s->a->node);
        if (!l) return bad();
        return abs(sigma(l->body, checked_add(s->i, 1), s->b));
    }
    case Rule::SigmaApp: {
        auto* s = std::get_if<Term::Sigma>(&t->node);
        if (!s) return bad();
        auto* a = std::get_if<Term::App>(&s->a->node);
        if (!a) return bad();
        return app(sigma(a->fun, s->i, s->b), sigma(a->arg, s->i, s->b));
    }
    case Rule::SigmaDestruction: {
        auto* s = std::get_if<Term::Sigma>(&t->node);
        if (!s) return bad();
        auto* n = std::get_if<Term::Index>(&s->a->node);
        if (!n) return bad();
        if (n->n > s->i) return index(n->n - 1);
        if (n->n == s->i) return phi(0, s->i, s->b);
        return index(n->n);
    }
    case Rule::PhiLambda: {
        auto* p = std::get_if<Term::Phi>(&t->node);
        if (!p) return bad();
        auto* l = std::get_if<Term::Abs>(&p->a->node);
        if (!l) return bad();
        return abs(phi(checked_add(p->k, 1), p->i, l->body));
    }
    case Rule::PhiApp: {
        auto* p = std::get_if<Term::Phi>(&t->node);
        if (!p) return bad();
        auto* a = std::get_if<Term::App>(&p->a->node);
        if (!a) return bad();
        return app(phi(p->k, p->i, a->fun), phi(p->k, p->i, a->arg));
    }
    case Rule::PhiDestruction: {
        auto* p = std::get_if<Term::Phi>(&t->node);
        if (!p) return bad();
        auto* n = std::get_if<Term::Index>(&p->a->node);
        if (!n) return bad();
        if (n->n > p->k) return index(checked_add(n->n, p->i) - 1);
        return index(n->n);
    }
    case Rule::SigmaSigma: {
        auto* s = std::get_if<Term::Sigma>(&t->node);
        if (!s) return bad();
        auto* in = std::get_if<Term::Sigma>(&s->a->node);
        if (!in || in->i > s->i) return bad();
        return sigma(sigma(in->a, checked_add(s->i, 1), s->b), in->i,
                     sigma(in->b, s->i - in->i + 1, s->b));
    }
    case Rule::SigmaPhi1: {
        auto* s = std::get_if<Term::Sigma>(&t->node);
        if (!s) return bad();
        auto* p = std::get_if<Term::Phi>(&s->a->node);
        if (!p || !(p->k < s->i && s->i < p->k + p->i)) return bad();
        return phi(p->k, p->i - 1, p->a);
    }
    case Rule::SigmaPhi2: {
        auto* s = std::get_if<Term::Sigma>(&t->node);
        if (!s) return bad();
        auto* p = std::get_if<Term::Phi>(&s->a->node);
        if (!p || p->k + p->i > s->i) return bad();
        return phi(p->k, p->i, sigma(p->a, s->i - p->i + 1, s->b));
    }
    case Rule::PhiSigma: {
        auto* p = std::get_if<Term::Phi>(&t->node);
        if (!p) return bad();
        auto* s = std::get_if<Term::Sigma>(&p->a->node);
        if (!s || s->i > p->k + 1) return bad();
        return sigma(phi(checked_add(p->k, 1), p->i, s->a), s->i,
                     phi(p->k + 1 - s->i, p->i, s->b));
    }
    case Rule::PhiPhi1: {
        auto* p = std::get_if<Term::Phi>(&t->node);
        if (!p) return bad();
        auto* in = std::get_if<Term::Phi>(&p->a->node);
        if (!in || in->k + in->i > p->k) return bad();
        return phi(in->k, in->i, phi(p->k + 1 - in->i, p->i, in->a));
    }
    case Rule::PhiPhi2: {
        auto* p = std::get_if<Term::Phi>(&t->node);
        if (!p) return bad();
        auto* in = std::get_if<Term::Phi>(&p->a->node);
        if (!in || !(in->k <= p->k && p->k < in->k + in->i)) return bad();
        return phi(in->k, checked_add(in->i, p->i) - 1, in->a);
    }
    default:
        return bad();
    }
}

void collect(const TermPtr& t, susp::Position& here, RuleSet rs,
             std::vector<std::pair<susp::Position, Rule>>& out) {
    if (auto r = rule_at(t, rs)) out.emplace_back(here, *r);
    int n = child_count(t);
    for (int k = 0; k < n; ++k) {
        here.push_back(k);
        collect(child_of(t, k), here, rs, out);
        here.pop_back();
    }
}

} // namespace

std::size_t size(const TermPtr& x) {
    std::size_t n = 1;
    int c = child_count(x);
    for (int k = 0; k < c; ++k) n += size(child_of(x, k));
    return n;
}

std::vector<std::pair<susp::Position, Rule>> redexes(const TermPtr& x, RuleSet rs) {
    std::vector<std::pair<susp::Position, Rule>> out;
    susp::Position here;
    collect(x, here, rs, out);
    return out;
}

TermPtr step(const TermPtr& x, const susp::Position& pos, Rule r) {
    std::function<TermPtr(const TermPtr&, std::size_t)> go =
        [&](const TermPtr& cur, std::size_t k) -> TermPtr {
        if (k == pos.size()) return contractum(cur, r);
        if (pos[k] < 0 || pos[k] >= child_count(cur)) throw BadPosition();
        return rebuild(cur, pos[k], go(child_of(cur, pos[k]), k + 1));
    };
    return go(x, 0);
}

NormResult normalize(const TermPtr& x, std::size_t budget, RuleSet rs) {
    NormResult out;
    out.term = x;
    for (;;) {
        auto all = redexes(out.term, rs);
        if (all.empty()) return out;
        if (out.steps == budget) {
            out.exhausted = true;
            return out;
        }
        ++out.steps;
        out.term = step(out.term, all.front().first, all.front().second);
    }
}

TermPtr gen(std::uint64_t seed, int size) {
    std::mt19937_64 rng(seed);
    auto pick = [&](std::uint64_t n) {
        return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng);
    };
    int budget = size;
    std::function<TermPtr()> go = [&]() -> TermPtr {
        if (budget <= 1) {
            budget -= 1;
            return index(1 + pick(4));
        }
        budget -= 1;
        switch (pick(9)) {
        case 0:
        case 1:
            return app(go(), go());
        case 2:
        case 3:
            return abs(go());
        case 4:
        case 5: {
            TermPtr a = go();
            TermPtr b = go();
            return sigma(a, 1 + pick(3), b);
        }
        case 6:
            return phi(pick(3), 1 + pick(3), go());
        default:
            return index(1 + pick(4));
        }
    };
    return go();
}

} // namespace susp::ls

namespace susp::sig {

TermPtr one() {
    static const TermPtr o = std::make_shared<Term>(Term{Term::One{}});
    return o;
}
TermPtr app(TermPtr f, TermPtr a) {
    return std::make_shared<Term>(Term{Term::App{std::move(f), std::move(a)}});
}
TermPtr abs(TermPtr b) {
    return std::make_shared<Term>(Term{Term::Abs{std::move(b)}});
}
TermPtr closure(TermPtr a, SubPtr s) {
    return std::make_shared<Term>(Term{Term::Closure{std::move(a), std::move(s)}});
}
SubPtr id() {
    static const SubPtr i = std::make_shared<Sub>(Sub{Sub::Id{}});
    return i;
}
SubPtr shift() {
    static const SubPtr sh = std::make_shared<Sub>(Sub{Sub::Shift{}});
    return sh;
}
SubPtr cons(TermPtr a, SubPtr s) {
    return std::make_shared<Sub>(Sub{Sub::Cons{std::move(a), std::move(s)}});
}
SubPtr comp(SubPtr s, SubPtr t) {
    return std::make_shared<Sub>(Sub{Sub::Comp{std::move(s), std::move(t)}});
}

const char* rule_name(Rule r) {
    switch (r) {
    case Rule::Beta: return "sigma.Beta";
    case Rule::App: return "sigma.App";
    case Rule::Abs: return "sigma.Abs";
    case Rule::Clos: return "sigma.Clos";
    case Rule::Map: return "sigma.Map";
    case Rule::Ass: return "sigma.Ass";
    case Rule::VarId: return "sigma.VarId";
    case Rule::VarCons: return "sigma.VarCons";
    case Rule::IdL: return "sigma.IdL";
    case Rule::ShiftId: return "sigma.ShiftId";
    case Rule::ShiftCons: return "sigma.ShiftCons";
    }
    return "?";
}

bool eq(const Expr& a, const Expr& b) {
    if (a.index() != b.index()) return false;
    if (auto* ta = std::get_if<TermPtr>(&a)) {
        const TermPtr& tb = std::get<TermPtr>(b);
        if ((*ta)->node.index() != tb->node.index()) return false;
        if (std::holds_alternative<Term::One>((*ta)->node)) return true;
        if (auto* ap = std::get_if<Term::App>(&(*ta)->node)) {
            const auto& bp = std::get<Term::App>(tb->node);
            return eq(Expr{ap->fun}, Expr{bp.fun}) && eq(Expr{ap->arg}, Expr{bp.arg});
        }
        if (auto* l = std::get_if<Term::Abs>(&(*ta)->node))
            return eq(Expr{l->body}, Expr{std::get<Term::Abs>(tb->node).body});
        const auto& ca = std::get<Term::Closure>((*ta)->node);
        const auto& cb = std::get<Term::Closure>(tb->node);
        return eq(Expr{ca.a}, Expr{cb.a}) && eq(Expr{ca.s}, Expr{cb.s});
    }
    const SubPtr& sa = std::get<SubPtr>(a);
    const SubPtr& sb = std::get<SubPtr>(b);
    if (sa->node.index() != sb->node.index()) return false;
    if (auto* ca = std::get_if<Sub::Cons>(&sa->node)) {
        const auto& cb = std::get<Sub::Cons>(sb->node);
        return eq(Expr{ca->a}, Expr{cb.a}) && eq(Expr{ca->s}, Expr{cb.s});
    }
    if (auto* pa = std::get_if<Sub::Comp>(&sa->node)) {
        const auto& pb = std::get<Sub::Comp>(sb->node);
        return eq(Expr{pa->s}, Expr{pb.s}) && eq(Expr{pa->t}, Expr{pb.t});
    }
    return true;
}

namespace {

int child_count(const Expr& x) {
    if (auto* t = std::get_if<TermPtr>(&x)) {
        if (std::holds_alternative<Term::App>((*t)->node)) return 2;
        if (std::holds_alternative<Term::Abs>((*t)->node)) return 1;
        if (std::holds_alternative<Term::Closure>((*t)->node)) return 2;
        return 0;
    }
    const SubPtr& s = std::get<SubPtr>(x);
    if (std::holds_alternative<Sub::Cons>(s->node)) return 2;
    if (std::holds_alternative<Sub::Comp>(s->node)) return 2;
    return 0;
}

Expr child_of(const Expr& x, int k) {
    if (auto* t = std::get_if<TermPtr>(&x)) {
        if (auto* a = std::get_if<Term::App>(&(*t)->node))
            return k == 0 ? Expr{a->fun} : Expr{a->arg};
        if (auto* l = std::get_if<Term::Abs>(&(*t)->node)) return Expr{l->body};
        const auto& c = std::get<Term::Closure>((*t)->node);
        return k == 0 ? Expr{c.a} : Expr{c.s};
    }
    const SubPtr& s = std::get<SubPtr>(x);
    if (auto* c = std::get_if<Sub::Cons>(&s->node))
        return k == 0 ? Expr{c->a} : Expr{c->s};
    const auto& p = std::get<Sub::Comp>(s->node);
    return k == 0 ? Expr{p.s} : Expr{p.t};
}

Expr rebuild(const Expr& x, int k, const Expr& c) {
    auto term = [](const Expr& e) { return std::get<TermPtr>(e); };
    auto sub = [](const Expr& e) { return std::get<SubPtr>(e); };
    if (auto* t = std::get_if<TermPtr>(&x)) {
        if (auto* a = std::get_if<Term::App>(&(*t)->node))
            return k == 0 ? Expr{app(term(c), a->arg)} : Expr{app(a->fun, term(c))};
        if (std::holds_alternative<Term::Abs>((*t)->node)) return Expr{abs(term(c))};
        const auto& cl = std::get<Term::Closure>((*t)->node);
        return k == 0 ? Expr{closure(term(c), cl.s)} : Expr{closure(cl.a, sub(c))};
    }
    const SubPtr& s = std::get<SubPtr>(x);
    if (auto* co = std::get_if<Sub::Cons>(&s->node))
        return k == 0 ? Expr{cons(term(c), co->s)} : Expr{cons(co->a, sub(c))};
    const auto& p = std::get<Sub::Comp>(s->node);
    return k == 0 ? Expr{comp(sub(c), p.t)} : Expr{comp(p.s, sub(c))};
}

std::optional<Rule> rule_at(const Expr& x, bool include_beta) {
    if (auto* tp = std::get_if<TermPtr>(&x)) {
        if (auto* a = std::get_if<Term::App>(&(*tp)->node)) {
            if (include_beta && std::holds_alternative<Term::Abs>(a->fun->node))
                return Rule::Beta;
            return std::nullopt;
        }
        auto* c = std::get_if<Term::Closure>(&(*tp)->node);
        if (!c) return std::nullopt;
        if (std::holds_alternative<Term::App>(c->a->node)) return Rule::App;
        if (std::holds_alternative<Term::Abs>(c->a->node)) return Rule::Abs;
        if (std::holds_alternative<Term::Closure>(c->a->node)) return Rule::Clos;
        if (std::holds_alternative<Sub::Id>(c->s->node)) return Rule::VarId;
        if (std::holds_alternative<Sub::Cons>(c->s->node)) return Rule::VarCons;
        return std::nullopt;
    }
    const SubPtr& s = std::get<SubPtr>(x);
    auto* p = std::get_if<Sub::Comp>(&s->node);
    if (!p) return std::nullopt;
    if (std::holds_alternative<Sub::Cons>(p->s->node)) return Rule::Map;
    if (std::holds_alternative<Sub::Comp>(p->s->node)) return Rule::Ass;
    if (std::holds_alternative<Sub::Id>(p->s->node)) return Rule::IdL;
    if (std::holds_alternative<Sub::Shift>(p->s->node)) {
        if (std::holds_alternative<Sub::Id>(p->t->node)) return Rule::ShiftId;
        if (std::holds_alternative<Sub::Cons>(p->t->node)) return Rule::ShiftCons;
    }
    return std::nullopt;
}

Expr contractum(const Expr& x, Rule r) {
    auto bad = [&]() -> Expr { throw RuleNotApplicable(rule_name(r)); };
    if (auto* tp = std::get_if<TermPtr>(&x)) {
        if (r == Rule::Beta) {
            auto* a = std::get_if<Term::App>(&(*tp)->node);
            if (!a) return bad();
            auto* l = std::get_if<Term::Abs>(&a->fun->node);
            if (!l) return bad();
            return Expr{closure(l->body, cons(a->arg, id()))};
        }
        auto* c = std::get_if<Term::Closure>(&(*tp)->node);
        if (!c) return bad();
        switch (r) {
        case Rule::App: {
            auto* a = std::get_if<Term::App>(&c->a->node);
            if (!a) return bad();
            return Expr{app(closure(a->fun, c->s), closure(a->arg, c->s))};
        }
        case Rule::Abs: {
            auto* l = std::get_if<Term::Abs>(&c->a->node);
            if (!l) return bad();
            return Expr{abs(closure(l->body, cons(one(), comp(c->s, shift()))))};
        }
        case Rule::Clos: {
            auto* in = std::get_if<Term::Closure>(&c->a->node);
            if (!in) return bad();
            return Expr{closure(in->a, comp(in->s, c->s))};
        }
        case Rule::VarId:
            if (!std::holds_alternative<Term::One>(c->a->node) ||
                !std::holds_alternative<Sub::Id>(c->s->node))
                return bad();
            return Expr{one()};
        case Rule::VarCons: {
            auto* co = std::get_if<Sub::Cons>(&c->s->node);
            if (!std::holds_alternative<Term::One>(c->a->node) || !co)
                return bad();
            return Expr{co->a};
        }
        default:
            return bad();
        }
    }
    const SubPtr& s = std::get<SubPtr>(x);
    auto* p = std::get_if<Sub::Comp>(&s->node);
    if (!p) return bad();
    switch (r) {
    case Rule::Map: {
        auto* co = std::get_if<Sub::Cons>(&p->s->node);
        if (!co) return bad();
        return Expr{cons(closure(co->a, p->t), comp(co->s, p->t))};
    }
    case Rule::Ass: {
        auto* in = std::get_if<Sub::Comp>(&p->s->node);
        if (!in) return bad();
        return Expr{comp(in->s, comp(in->t, p->t))};
    }
    case Rule::IdL:
        if (!std::holds_alternative<Sub::Id>(p->s->node)) return bad();
        return Expr{p->t};
    case Rule::ShiftId:
        if (!std::holds_alternative<Sub::Shift>(p->s->node) ||
            !std::holds_alternative<Sub::Id>(p->t->node))
            return bad();
        return Expr{shift()};
    case Rule::ShiftCons: {
        auto* co = std::get_if<Sub::Cons>(&p->t->node);
        if (!std::holds_alternative<Sub::Shift>(p->s->node) || !co) return bad();
        return Expr{co->s};
    }
    default:
        return bad();
    }
}

void collect(const Expr& x, susp::Position& here, bool include_beta,
             std::vector<std::pair<susp::Position, Rule>>& out) {
    if (auto r = rule_at(x, include_beta)) out.emplace_back(here, *r);
    int n = child_count(x);
    for (int k = 0; k < n; ++k) {
        here.push_back(k);
        collect(child_of(x, k), here, include_beta, out);
        here.pop_back();
    }
}

Expr replace(const Expr& x, const susp::Position& pos, std::size_t k,
             const Expr& repl) {
    if (k == pos.size()) return repl;
    if (pos[k] < 0 || pos[k] >= child_count(x)) throw BadPosition();
    return rebuild(x, pos[k], replace(child_of(x, pos[k]), pos, k + 1, repl));
}

} // namespace

std::size_t size(const Expr& x) {
    std::size_t n = 1;
    int c = child_count(x);
    for (int k = 0; k < c; ++k) n += size(child_of(x, k));
    return n;
}

std::vector<std::pair<susp::Position, Rule>>
redexes(const Expr& x, bool include_beta) {
    std::vector<std::pair<susp::Position, Rule>> out;
    susp::Position here;
    collect(x, here, include_beta, out);
    return out;
}

Expr step(const Expr& x, const susp::Position& pos, Rule r) {
    Expr sub = x;
    for (int k : pos) {
        if (k < 0 || k >= child_count(sub)) throw BadPosition();
        sub = child_of(sub, k);
    }
    return replace(x, pos, 0, contractum(sub, r));
}

NormResult normalize(const Expr& x, std::size_t budget, bool include_beta) {
    NormResult out;
    out.expr = x;
    std::size_t cap = include_beta ? budget : kSigmaFuel;
    for (;;) {
        auto all = redexes(out.expr, include_beta);
        if (all.empty()) return out;
        if (out.steps == cap) {
            if (!include_beta)
                throw SigmaFuelExhausted("sigma normalization fuel exhausted");
            out.exhausted = true;
            return out;
        }
        ++out.steps;
        out.expr = step(out.expr, all.front().first, all.front().second);
    }
}

namespace {

SubPtr gen_sub_impl(std::mt19937_64& rng, int& budget);

TermPtr gen_term_impl(std::mt19937_64& rng, int& budget) {
    auto pick = [&](std::uint64_t n) {
        return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng);
    };
    if (budget <= 1) {
        budget -= 1;
        return one();
    }
    budget -= 1;
    switch (pick(8)) {
    case 0:
    case 1:
        return app(gen_term_impl(rng, budget), gen_term_impl(rng, budget));
    case 2:
    case 3:
        return abs(gen_term_impl(rng, budget));
    case 4:
    case 5:
        return closure(gen_term_impl(rng, budget), gen_sub_impl(rng, budget));
    default:
        return one();
    }
}

SubPtr gen_sub_impl(std::mt19937_64& rng, int& budget) {
    auto pick = [&](std::uint64_t n) {
        return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng);
    };
    if (budget <= 1) {
        budget -= 1;
        return pick(2) == 0 ? id() : shift();
    }
    budget -= 1;
    switch (pick(6)) {
    case 0:
    case 1:
        return cons(gen_term_impl(rng, budget), gen_sub_impl(rng, budget));
    case 2:
    case 3:
        return comp(gen_sub_impl(rng, budget), gen_sub_impl(rng, budget));
    case 4:
        return id();
    default:
        return shift();
    }
}

} // namespace

TermPtr gen_term(std::uint64_t seed, int size) {
    std::mt19937_64 rng(seed);
    int budget = size;
    return gen_term_impl(rng, budget);
}

SubPtr gen_sub(std::uint64_t seed, int size) {
    std::mt19937_64 rng(seed);
    int budget = size;
    return gen_sub_impl(rng, budget);
}

namespace {

// The self-referential substitution that drives unbounded growth:
// Comp(X, Comp(Shift, Cons(Closure(b, X), Id))) with X equal on both sides.
std::optional<susp::Position> find_cycle_seat(const Expr& x, const TermPtr& b) {
    std::optional<susp::Position> found;
    susp::Position here;
    std::function<void(const Expr&)> go = [&](const Expr& cur) {
        if (found) return;
        if (auto* sp = std::get_if<SubPtr>(&cur)) {
            if (auto* outer = std::get_if<Sub::Comp>(&(*sp)->node)) {
                if (auto* mid = std::get_if<Sub::Comp>(&outer->t->node)) {
                    if (std::holds_alternative<Sub::Shift>(mid->s->node)) {
                        if (auto* co = std::get_if<Sub::Cons>(&mid->t->node)) {
                            auto* cl = std::get_if<Term::Closure>(&co->a->node);
                            if (cl &&
                                std::holds_alternative<Sub::Id>(co->s->node) &&
                                eq(Expr{cl->a}, Expr{b}) &&
                                eq(Expr{cl->s}, Expr{outer->s})) {
                                found = here;
                                return;
                            }
                        }
                    }
                }
            }
        }
        int n = child_count(cur);
        for (int k = 0; k < n && !found; ++k) {
            here.push_back(k);
            go(child_of(cur, k));
            here.pop_back();
        }
    };
    go(x);
    return found;
}

} // namespace

MelliesReport mellies_unfold(const TermPtr& a, const TermPtr& b,
                             std::size_t cycles) {
    MelliesReport report;
    TermPtr redex = app(abs(a), b);
    SubPtr s0 = cons(redex, id());
    Expr cur{closure(redex, s0)};
    auto fire = [&](Rule r, const susp::Position& pos) {
        cur = step(cur, pos, r);
        report.trace.push_back({r, pos});
    };
    fire(Rule::App, {});
    fire(Rule::Abs, {0});
    fire(Rule::Beta, {});
    fire(Rule::Clos, {});
    fire(Rule::Map, {1});
    fire(Rule::Ass, {1, 1});
    std::size_t prev_size = size(cur);
    report.strictly_growing = true;
    for (std::size_t c = 0; c < cycles; ++c) {
        auto seat = find_cycle_seat(cur, b);
        if (!seat) throw PatternNotFound("growth pattern not present");
        susp::Position p = *seat;
        // Peel composition layers until the cons core is in function position.
        for (;;) {
            Expr at = cur;
            for (int k : p) at = child_of(at, k);
            const SubPtr& sp = std::get<SubPtr>(at);
            const auto& outer = std::get<Sub::Comp>(sp->node);
            auto* left = std::get_if<Sub::Comp>(&outer.s->node);
            if (!left) break;
            if (!std::holds_alternative<Sub::Shift>(left->s->node))
                throw PatternNotFound("unexpected composition shape");
            fire(Rule::Ass, p);
            susp::Position q = p;
            q.push_back(1);
            fire(Rule::Map, q);
            susp::Position q1 = q;
            q1.push_back(1);
            fire(Rule::IdL, q1);
            susp::Position q0 = q;
            q0.push_back(0);
            fire(Rule::Clos, q0);
            p = q0;
            p.push_back(1);
        }
        {
            Expr at = cur;
            for (int k : p) at = child_of(at, k);
            const SubPtr& sp = std::get<SubPtr>(at);
            const auto& outer = std::get<Sub::Comp>(sp->node);
            if (!std::holds_alternative<Sub::Cons>(outer.s->node))
                throw PatternNotFound("cons core not exposed");
        }
        fire(Rule::Map, p);
        susp::Position q = p;
        q.push_back(1);
        fire(Rule::IdL, q);
        susp::Position h = p;
        h.push_back(0);
        fire(Rule::App, h);
        susp::Position h0 = h;
        h0.push_back(0);
        fire(Rule::Abs, h0);
        fire(Rule::Beta, h);
        fire(Rule::Clos, h);
        susp::Position h1 = h;
        h1.push_back(1);
        fire(Rule::Map, h1);
        susp::Position h11 = h1;
        h11.push_back(1);
        fire(Rule::Ass, h11);
        std::size_t sz = size(cur);
        report.sizes_after_cycle.push_back(sz);
        if (sz <= prev_size) report.strictly_growing = false;
        prev_size = sz;
    }
    report.final_term = std::get<TermPtr>(cur);
    return report;
}

} // namespace susp::sig

namespace susp {

TermPtr ups_to_susp(const ups::TermPtr& a) {
    if (auto* i = std::get_if<ups::Term::Index>(&a->node)) return sindex(i->n);
    if (auto* ap = std::get_if<ups::Term::App>(&a->node))
        return sapp(ups_to_susp(ap->fun), ups_to_susp(ap->arg));
    if (auto* l = std::get_if<ups::Term::Abs>(&a->node))
        return sabs(ups_to_susp(l->body));
    const auto& c = std::get<ups::Term::Closure>(a->node);
    EnvTriple t = ups_sub_to_susp(c.s);
    return ssusp(ups_to_susp(c.a), t.ol, t.nl, t.env);
}

EnvTriple ups_sub_to_susp(const ups::SubPtr& s) {
    if (auto* sl = std::get_if<ups::Sub::Slash>(&s->node))
        return {1, 0, econs(EnvItem{ups_to_susp(sl->a), 0}, enil())};
    if (std::holds_alternative<ups::Sub::Shift>(s->node)) return {0, 1, enil()};
    const auto& li = std::get<ups::Sub::Lift>(s->node);
    EnvTriple inner = ups_sub_to_susp(li.s);
    std::uint64_t nl = checked_add(inner.nl, 1);
    return {checked_add(inner.ol, 1), nl,
            econs(EnvItem{sindex(1), nl}, inner.env)};
}

TermPtr ls_to_susp(const ls::TermPtr& a) {
    if (auto* i = std::get_if<ls::Term::Index>(&a->node)) return sindex(i->n);
    if (auto* ap = std::get_if<ls::Term::App>(&a->node))
        return sapp(ls_to_susp(ap->fun), ls_to_susp(ap->arg));
    if (auto* l = std::get_if<ls::Term::Abs>(&a->node))
        return sabs(ls_to_susp(l->body));
    if (auto* s = std::get_if<ls::Term::Sigma>(&a->node)) {
        EnvPtr e = econs(EnvItem{ls_to_susp(s->b), 0}, enil());
        for (std::uint64_t lv = 1; lv < s->i; ++lv)
            e = econs(EnvItem{sindex(1), lv}, e);
        return ssusp(ls_to_susp(s->a), s->i, s->i - 1, e);
    }
    const auto& p = std::get<ls::Term::Phi>(a->node);
    EnvPtr e = enil();
    for (std::uint64_t lv = p.i; lv < checked_add(p.k, p.i); ++lv)
        e = econs(EnvItem{sindex(1), lv}, e);
    return ssusp(ls_to_susp(p.a), p.k, checked_add(p.k, p.i) - 1, e);
}

namespace {

sig::SubPtr shift_chain(std::uint64_t n) {
    sig::SubPtr s = sig::shift();
    for (std::uint64_t k = 1; k < n; ++k) s = sig::comp(s, sig::shift());
    return s;
}

// Recognizes the left-nested chain shift o shift o ... and returns its length.
std::optional<std::uint64_t> chain_length(const sig::SubPtr& s) {
    if (std::holds_alternative<sig::Sub::Shift>(s->node)) return 1;
    auto* c = std::get_if<sig::Sub::Comp>(&s->node);
    if (!c || !std::holds_alternative<sig::Sub::Shift>(c->t->node))
        return std::nullopt;
    auto inner = chain_length(c->s);
    if (!inner) return std::nullopt;
    return checked_add(*inner, 1);
}

} // namespace

sig::TermPtr susp_to_sigma(const TermPtr& t) {
    if (auto* i = std::get_if<SuspTerm::Index>(&t->node)) {
        if (i->i == 1) return sig::one();
        return sig::closure(sig::one(), shift_chain(i->i - 1));
    }
    if (auto* a = std::get_if<SuspTerm::App>(&t->node))
        return sig::app(susp_to_sigma(a->fun), susp_to_sigma(a->arg));
    if (auto* l = std::get_if<SuspTerm::Abs>(&t->node))
        return sig::abs(susp_to_sigma(l->body));
    if (auto* s = std::get_if<SuspTerm::Susp>(&t->node))
        return sig::closure(susp_to_sigma(s->term),
                            susp_env_to_sigma(s->env, s->nl));
    throw IllFormedInputs("constants and metavariables have no sigma image");
}

sig::SubPtr susp_env_to_sigma(const EnvPtr& e, std::uint64_t j) {
    auto wrap = [](sig::SubPtr s, std::uint64_t n) {
        for (std::uint64_t k = 0; k < n; ++k) s = sig::comp(s, sig::shift());
        return s;
    };
    if (std::holds_alternative<SuspEnv::Nil>(e->node))
        return wrap(sig::id(), j);
    if (auto* c = std::get_if<SuspEnv::Cons>(&e->node)) {
        if (j < c->head.level)
            throw IllFormedInputs("environment index below its lev");
        return wrap(sig::cons(susp_to_sigma(c->head.term),
                              susp_env_to_sigma(c->tail, c->head.level)),
                    j - c->head.level);
    }
    const auto& m = std::get<SuspEnv::Merged>(e->node);
    std::uint64_t drop = monus(m.nl1, m.ol2);
    if (j < drop) throw IllFormedInputs("environment index below its lev");
    return sig::comp(susp_env_to_sigma(m.e1, m.nl1),
                     susp_env_to_sigma(m.e2, j - drop));
}

TermPtr sigma_to_susp(const sig::TermPtr& a) {
    if (std::holds_alternative<sig::Term::One>(a->node)) return sindex(1);
    if (auto* ap = std::get_if<sig::Term::App>(&a->node))
        return sapp(sigma_to_susp(ap->fun), sigma_to_susp(ap->arg));
    if (auto* l = std::get_if<sig::Term::Abs>(&a->node))
        return sabs(sigma_to_susp(l->body));
    const auto& c = std::get<sig::Term::Closure>(a->node);
    if (std::holds_alternative<sig::Term::One>(c.a->node)) {
        if (auto n = chain_length(c.s)) return sindex(checked_add(*n, 1));
    }
    EnvTriple t = sigma_sub_to_susp(c.s);
    return ssusp(sigma_to_susp(c.a), t.ol, t.nl, t.env);
}

EnvTriple sigma_sub_to_susp(const sig::SubPtr& s) {
    if (std::holds_alternative<sig::Sub::Id>(s->node)) return {0, 0, enil()};
    if (std::holds_alternative<sig::Sub::Shift>(s->node)) return {0, 1, enil()};
    if (auto* c = std::get_if<sig::Sub::Cons>(&s->node)) {
        EnvTriple inner = sigma_sub_to_susp(c->s);
        return {checked_add(inner.ol, 1), inner.nl,
                econs(EnvItem{sigma_to_susp(c->a), inner.nl}, inner.env)};
    }
    const auto& p = std::get<sig::Sub::Comp>(s->node);
    if (std::holds_alternative<sig::Sub::Shift>(p.t->node)) {
        EnvTriple inner = sigma_sub_to_susp(p.s);
        return {inner.ol, checked_add(inner.nl, 1), inner.env};
    }
    EnvTriple t1 = sigma_sub_to_susp(p.s);
    EnvTriple t2 = sigma_sub_to_susp(p.t);
    return {checked_add(t1.ol, monus(t2.ol, t1.nl)),
            checked_add(t2.nl, monus(t1.nl, t2.ol)),
            emerged(t1.env, t1.nl, t2.ol, t2.env)};
}

} // namespace susp
