#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>

#include "suspension/measures.hpp"
#include "suspension/rewrite.hpp"
#include "util.hpp"

using namespace susp;

namespace {

FOPtr gen_fo(testutil::Rng& rng, int size) {
    if (size <= 1) return fstar();
    switch (testutil::pick(rng, 4)) {
    case 0: return flam(gen_fo(rng, size - 1));
    case 1: return fapp(gen_fo(rng, size / 2), gen_fo(rng, size / 2));
    case 2: return fcons(gen_fo(rng, size / 2), gen_fo(rng, size / 2));
    default:
        return fs(1 + testutil::pick(rng, 5), gen_fo(rng, size / 2),
                  gen_fo(rng, size / 2));
    }
}

void each_child(const FOPtr& t, const std::function<void(const FOPtr&)>& f) {
    if (auto* l = std::get_if<FOTerm::Lam>(&t->node)) {
        f(l->arg);
    } else if (auto* a = std::get_if<FOTerm::AppF>(&t->node)) {
        f(a->a);
        f(a->b);
    } else if (auto* c = std::get_if<FOTerm::ConsF>(&t->node)) {
        f(c->a);
        f(c->b);
    } else if (auto* s = std::get_if<FOTerm::S>(&t->node)) {
        f(s->a);
        f(s->b);
    }
}

} // namespace

TEST_CASE("mu") {
    CHECK(mu(Expr{sconst("c")}) == 0);
    TermPtr s1 = ssusp(sconst("c"), 0, 0, enil());
    CHECK(mu(Expr{s1}) == 1);
    CHECK(mu(Expr{ssusp(s1, 0, 0, enil())}) == 2);
}

TEST_CASE("eta") {
    for (std::uint64_t i = 0; i < 5; ++i)
        CHECK(eta(i, Expr{sconst("c")}) == 1);
    CHECK(eta(0, Expr{sabs(sconst("c"))}) == 2);
    CHECK(eta(0, Expr{ssusp(sconst("c"), 0, 0, enil())}) == 2);
}

TEST_CASE("essence") {
    CHECK(fo_eq(essence(Expr{sconst("c")}), fstar()));
    CHECK(fo_eq(essence(Expr{sapp(sconst("c"), sconst("d"))}),
                fapp(fstar(), fstar())));
    CHECK(fo_eq(essence(Expr{ssusp(sconst("c"), 0, 0, enil())}),
                fs(2, fstar(), fstar())));
}

TEST_CASE("lrpo_gt") {
    CHECK(lrpo_gt(fs(2, fstar(), fstar()), fstar()));
    CHECK_FALSE(lrpo_gt(fstar(), fstar()));
    CHECK(lrpo_gt(fs(3, fstar(), fstar()), fs(2, fstar(), fstar())));
    CHECK_FALSE(lrpo_gt(fs(2, fstar(), fstar()), fs(3, fstar(), fstar())));
    // fixed symbols are mutually incomparable
    CHECK_FALSE(lrpo_gt(fapp(fstar(), fstar()), flam(fstar())));
    CHECK_FALSE(lrpo_gt(flam(fstar()), fapp(fstar(), fstar())));
}

TEST_CASE("expr_gg") {
    CHECK(expr_gg(Expr{ssusp(sconst("c"), 0, 0, enil())}, Expr{sconst("c")}));
    CHECK_FALSE(expr_gg(Expr{sconst("c")}, Expr{sconst("c")}));
}

TEST_CASE("every rm rule instance decreases the order") {
    for (std::uint64_t seed = 0; seed < 250; ++seed) {
        Expr x = gen_expr(seed, 25, true);
        for (const auto& [pos, rule] :
             enumerate_redexes(x, rm_rules(), MetaMode::Graftable)) {
            Expr y = apply_rule(x, rule, pos);
            CHECK(expr_gg(subexpr(x, pos), subexpr(y, pos)));
            CHECK(expr_gg(x, y)); // monotone through contexts
            CHECK(mu(x) >= mu(y));
            for (std::uint64_t i = 0; i <= 8; ++i)
                CHECK(eta(i, x) >= eta(i, y));
        }
    }
}

TEST_CASE("order sanity") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        testutil::Rng rng(seed);
        FOPtr a = gen_fo(rng, 8);
        FOPtr b = gen_fo(rng, 8);
        FOPtr c = gen_fo(rng, 8);
        CHECK_FALSE(lrpo_gt(a, a));
        if (lrpo_gt(a, b) && lrpo_gt(b, c)) CHECK(lrpo_gt(a, c));
        if (lrpo_gt(a, b)) CHECK_FALSE(lrpo_gt(b, a));
        each_child(a, [&](const FOPtr& child) { CHECK(lrpo_gt(a, child)); });
    }
}
