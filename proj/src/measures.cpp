#include "suspension/measures.hpp"

#include <algorithm>

#include "suspension/errors.hpp"

namespace susp {

FOPtr fstar() {
    static const FOPtr star = std::make_shared<FOTerm>(FOTerm{FOTerm::Star{}});
    return star;
}
FOPtr flam(FOPtr arg) {
    return std::make_shared<FOTerm>(FOTerm{FOTerm::Lam{std::move(arg)}});
}
FOPtr fapp(FOPtr a, FOPtr b) {
    return std::make_shared<FOTerm>(FOTerm{FOTerm::AppF{std::move(a), std::move(b)}});
}
FOPtr fcons(FOPtr a, FOPtr b) {
    return std::make_shared<FOTerm>(FOTerm{FOTerm::ConsF{std::move(a), std::move(b)}});
}
FOPtr fs(std::uint64_t i, FOPtr a, FOPtr b) {
    return std::make_shared<FOTerm>(FOTerm{FOTerm::S{i, std::move(a), std::move(b)}});
}

bool fo_eq(const FOPtr& a, const FOPtr& b) {
    if (a == b) return true;
    if (a->node.index() != b->node.index()) return false;
    if (std::holds_alternative<FOTerm::Star>(a->node)) return true;
    if (auto* la = std::get_if<FOTerm::Lam>(&a->node))
        return fo_eq(la->arg, std::get<FOTerm::Lam>(b->node).arg);
    if (auto* aa = std::get_if<FOTerm::AppF>(&a->node)) {
        const auto& ab = std::get<FOTerm::AppF>(b->node);
        return fo_eq(aa->a, ab.a) && fo_eq(aa->b, ab.b);
    }
    if (auto* ca = std::get_if<FOTerm::ConsF>(&a->node)) {
        const auto& cb = std::get<FOTerm::ConsF>(b->node);
        return fo_eq(ca->a, cb.a) && fo_eq(ca->b, cb.b);
    }
    const auto& sa = std::get<FOTerm::S>(a->node);
    const auto& sb = std::get<FOTerm::S>(b->node);
    return sa.i == sb.i && fo_eq(sa.a, sb.a) && fo_eq(sa.b, sb.b);
}

std::string show_fo(const FOPtr& t) {
    if (std::holds_alternative<FOTerm::Star>(t->node)) return "*";
    if (auto* l = std::get_if<FOTerm::Lam>(&t->node))
        return "lam(" + show_fo(l->arg) + ")";
    if (auto* a = std::get_if<FOTerm::AppF>(&t->node))
        return "app(" + show_fo(a->a) + "," + show_fo(a->b) + ")";
    if (auto* c = std::get_if<FOTerm::ConsF>(&t->node))
        return "cons(" + show_fo(c->a) + "," + show_fo(c->b) + ")";
    const auto& s = std::get<FOTerm::S>(t->node);
    return "s_" + std::to_string(s.i) + "(" + show_fo(s.a) + "," + show_fo(s.b) + ")";
}

namespace {

std::uint64_t mu_term(const TermPtr& t);
std::uint64_t mu_env(const EnvPtr& e);

std::uint64_t mu_term(const TermPtr& t) {
    if (auto* a = std::get_if<SuspTerm::App>(&t->node))
        return std::max(mu_term(a->fun), mu_term(a->arg));
    if (auto* l = std::get_if<SuspTerm::Abs>(&t->node)) return mu_term(l->body);
    if (auto* s = std::get_if<SuspTerm::Susp>(&t->node))
        return checked_add(checked_add(mu_term(s->term), mu_env(s->env)), 1);
    return 0;
}

std::uint64_t mu_env(const EnvPtr& e) {
    if (auto* c = std::get_if<SuspEnv::Cons>(&e->node))
        return std::max(mu_term(c->head.term), mu_env(c->tail));
    if (auto* m = std::get_if<SuspEnv::Merged>(&e->node))
        return checked_add(checked_add(mu_env(m->e1), mu_env(m->e2)), 1);
    return 0;
}

std::uint64_t eta_term(std::uint64_t i, const TermPtr& t);
std::uint64_t eta_env(std::uint64_t i, const EnvPtr& e);

std::uint64_t eta_term(std::uint64_t i, const TermPtr& t) {
    if (auto* a = std::get_if<SuspTerm::App>(&t->node))
        return checked_add(std::max(eta_term(i, a->fun), eta_term(i, a->arg)), 1);
    // An abstraction weighs more the deeper it sits under suspensions;
    // this offsets the #1 that rule (r6) pushes onto the environment.
    if (auto* l = std::get_if<SuspTerm::Abs>(&t->node))
        return checked_add(eta_term(i, l->body), checked_add(i, 1));
    if (auto* s = std::get_if<SuspTerm::Susp>(&t->node)) {
        std::uint64_t a = eta_term(checked_add(i, 1), s->term);
        std::uint64_t b =
            eta_env(checked_add(checked_add(i, 1), mu_term(s->term)), s->env);
        return checked_add(checked_add(a, b), 1);
    }
    return 1;
}

std::uint64_t eta_env(std::uint64_t i, const EnvPtr& e) {
    if (auto* c = std::get_if<SuspEnv::Cons>(&e->node))
        return std::max(eta_term(i, c->head.term), eta_env(i, c->tail));
    if (auto* m = std::get_if<SuspEnv::Merged>(&e->node)) {
        std::uint64_t a = eta_env(checked_add(i, 1), m->e1);
        std::uint64_t b =
            eta_env(checked_add(checked_add(i, 1), mu_env(m->e1)), m->e2);
        return checked_add(checked_add(a, b), 1);
    }
    return 0;
}

FOPtr essence_term(const TermPtr& t);
FOPtr essence_env(const EnvPtr& e);

FOPtr essence_term(const TermPtr& t) {
    if (auto* a = std::get_if<SuspTerm::App>(&t->node))
        return fapp(essence_term(a->fun), essence_term(a->arg));
    if (auto* l = std::get_if<SuspTerm::Abs>(&t->node))
        return flam(essence_term(l->body));
    if (std::holds_alternative<SuspTerm::Susp>(t->node))
        return fs(eta_term(0, t),
                  essence_term(std::get<SuspTerm::Susp>(t->node).term),
                  essence_env(std::get<SuspTerm::Susp>(t->node).env));
    return fstar();
}

FOPtr essence_env(const EnvPtr& e) {
    if (auto* c = std::get_if<SuspEnv::Cons>(&e->node))
        return fcons(essence_term(c->head.term), essence_env(c->tail));
    if (std::holds_alternative<SuspEnv::Merged>(e->node))
        return fs(eta_env(0, e), essence_env(std::get<SuspEnv::Merged>(e->node).e1),
                  essence_env(std::get<SuspEnv::Merged>(e->node).e2));
    return fstar();
}

// Head symbols: s_i with index, then lam/app/cons/star mutually incomparable.
struct Head {
    bool is_s = false;
    std::uint64_t i = 0;
    std::size_t tag = 0; // variant index, distinguishes the fixed symbols
};

Head head_of(const FOPtr& t) {
    Head h;
    h.tag = t->node.index();
    if (auto* s = std::get_if<FOTerm::S>(&t->node)) {
        h.is_s = true;
        h.i = s->i;
    }
    return h;
}

bool head_eq(const Head& a, const Head& b) {
    return a.tag == b.tag && a.i == b.i;
}

bool head_gt(const Head& a, const Head& b) {
    if (!a.is_s) return false;
    return !b.is_s || a.i > b.i;
}

std::vector<FOPtr> args_of(const FOPtr& t) {
    if (auto* l = std::get_if<FOTerm::Lam>(&t->node)) return {l->arg};
    if (auto* a = std::get_if<FOTerm::AppF>(&t->node)) return {a->a, a->b};
    if (auto* c = std::get_if<FOTerm::ConsF>(&t->node)) return {c->a, c->b};
    if (auto* s = std::get_if<FOTerm::S>(&t->node)) return {s->a, s->b};
    return {};
}

bool lrpo_ge(const FOPtr& a, const FOPtr& b) {
    return fo_eq(a, b) || lrpo_gt(a, b);
}

} // namespace

bool lrpo_gt(const FOPtr& a, const FOPtr& b) {
    std::vector<FOPtr> as = args_of(a);
    for (const FOPtr& ai : as)
        if (lrpo_ge(ai, b)) return true;
    std::vector<FOPtr> bs = args_of(b);
    Head ha = head_of(a), hb = head_of(b);
    if (head_gt(ha, hb)) {
        for (const FOPtr& bj : bs)
            if (!lrpo_gt(a, bj)) return false;
        return true;
    }
    if (head_eq(ha, hb)) {
        std::size_t k = 0;
        while (k < as.size() && k < bs.size() && fo_eq(as[k], bs[k])) ++k;
        if (k >= as.size() || k >= bs.size()) return false;
        if (!lrpo_gt(as[k], bs[k])) return false;
        for (std::size_t j = k + 1; j < bs.size(); ++j)
            if (!lrpo_gt(a, bs[j])) return false;
        return true;
    }
    return false;
}

std::uint64_t mu(const Expr& x) {
    if (auto* t = std::get_if<TermPtr>(&x)) return mu_term(*t);
    if (auto* e = std::get_if<EnvPtr>(&x)) return mu_env(*e);
    return mu_term(std::get<EnvItem>(x).term);
}

std::uint64_t eta(std::uint64_t i, const Expr& x) {
    if (auto* t = std::get_if<TermPtr>(&x)) return eta_term(i, *t);
    if (auto* e = std::get_if<EnvPtr>(&x)) return eta_env(i, *e);
    return eta_term(i, std::get<EnvItem>(x).term);
}

FOPtr essence(const Expr& x) {
    if (auto* t = std::get_if<TermPtr>(&x)) return essence_term(*t);
    if (auto* e = std::get_if<EnvPtr>(&x)) return essence_env(*e);
    return essence_term(std::get<EnvItem>(x).term);
}

bool expr_gg(const Expr& x, const Expr& y) {
    return lrpo_gt(essence(x), essence(y));
}

} // namespace susp
