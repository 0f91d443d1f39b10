#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>
#include <string>

#include "suspension/errors.hpp"
#include "suspension/lambda.hpp"
#include "suspension/text.hpp"
#include "util.hpp"

using namespace susp;

namespace {

// Contract the redex of a named term at a de Bruijn-style position.
NamedPtr named_beta_at(const NamedPtr& t, const Position& pos, std::size_t k = 0) {
    if (k == pos.size()) {
        const auto& a = std::get<NamedTerm::App>(t->node);
        const auto& l = std::get<NamedTerm::Abs>(a.fun->node);
        return subst_named(l.body, a.arg, l.binder);
    }
    if (auto* a = std::get_if<NamedTerm::App>(&t->node)) {
        if (pos[k] == 0)
            return napp(named_beta_at(a->fun, pos, k + 1), a->arg);
        return napp(a->fun, named_beta_at(a->arg, pos, k + 1));
    }
    const auto& l = std::get<NamedTerm::Abs>(t->node);
    return nabs(l.binder, named_beta_at(l.body, pos, k + 1), l.ann);
}

std::uint64_t max_free_index(const DbPtr& t, std::uint64_t depth = 0) {
    if (auto* i = std::get_if<DbTerm::Index>(&t->node))
        return i->i > depth ? i->i - depth : 0;
    if (auto* a = std::get_if<DbTerm::App>(&t->node))
        return std::max(max_free_index(a->fun, depth),
                        max_free_index(a->arg, depth));
    if (auto* l = std::get_if<DbTerm::Abs>(&t->node))
        return max_free_index(l->body, depth + 1);
    return 0;
}

} // namespace

TEST_CASE("free variables") {
    CHECK(free_vars(nabs("x", nvar("x"))).empty());
    CHECK(free_vars(nabs("x", napp(nvar("y"), nvar("x")))) ==
          std::set<std::string>{"y"});
    CHECK(free_vars(napp(nvar("x"), nabs("x", nvar("x")))) ==
          std::set<std::string>{"x"});
}

TEST_CASE("substitution") {
    CHECK(alpha_eq(subst_named(nvar("y"), nconst("c"), "x"), nvar("y")));
    // binder renamed to dodge capture of the free y being substituted in
    NamedPtr r = subst_named(nabs("y", nvar("x")), nvar("y"), "x");
    CHECK(alpha_eq(r, nabs("z", nvar("y"))));
    CHECK(free_vars(r) == std::set<std::string>{"y"});
    CHECK(alpha_eq(subst_named(nabs("x", nvar("x")), nconst("c"), "x"),
                   nabs("x", nvar("x"))));
}

TEST_CASE("alpha equivalence") {
    CHECK(alpha_eq(nabs("x", napp(nvar("x"), nvar("x"))),
                   nabs("y", napp(nvar("y"), nvar("y")))));
    CHECK_FALSE(alpha_eq(nabs("x", nabs("y", nvar("x"))),
                         nabs("x", nabs("y", nvar("y")))));
    CHECK_FALSE(alpha_eq(nvar("x"), nvar("y")));
}

TEST_CASE("to_debruijn") {
    NamedPtr t1 = nabs("x", napp(nabs("y", nvar("y")), nabs("z", nvar("x"))));
    CHECK(db_eq(to_debruijn(t1, {}),
                dabs(dapp(dabs(dindex(1)), dabs(dindex(2))))));
    NamedPtr t2 = nabs("x", napp(nvar("y"), nvar("x")));
    CHECK(db_eq(to_debruijn(t2, {"y"}), dabs(dapp(dindex(2), dindex(1)))));
    NamedPtr t3 = nabs(
        "x", napp(nabs("y", napp(nabs("z", nvar("x")), nvar("x"))), nvar("x")));
    CHECK(db_eq(to_debruijn(t3, {}),
                dabs(dapp(dabs(dapp(dabs(dindex(3)), dindex(2))), dindex(1)))));
    CHECK_THROWS_AS(to_debruijn(nvar("w"), {}), UnknownFreeVariable);
}

TEST_CASE("from_debruijn") {
    CHECK(alpha_eq(from_debruijn(dabs(dindex(1)), {}), nabs("x", nvar("x"))));
    DbPtr t = dabs(dapp(dindex(2), dindex(1)));
    CHECK(alpha_eq(from_debruijn(t, {"y"}),
                   nabs("x", napp(nvar("y"), nvar("x")))));
    CHECK_THROWS_AS(from_debruijn(dindex(1), {}), DanglingIndex);
}

TEST_CASE("round trip to_debruijn after from_debruijn") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        testutil::Rng rng(seed);
        DbPtr t = testutil::gen_db(rng, 12, 0, 3);
        std::vector<std::string> fo;
        for (std::uint64_t k = 0; k < max_free_index(t); ++k)
            fo.push_back("v" + std::to_string(k + 1));
        CHECK(db_eq(to_debruijn(from_debruijn(t, fo), fo), t));
    }
}

TEST_CASE("db_shift") {
    CHECK(db_eq(db_shift(dindex(1), 1, 0), dindex(2)));
    CHECK(db_eq(db_shift(dabs(dindex(1)), 5, 0), dabs(dindex(1))));
    CHECK(db_eq(db_shift(dabs(dindex(3)), 2, 0), dabs(dindex(5))));
    CHECK_THROWS_AS(db_shift(dindex(1), -1, 0), IndexUnderflow);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        DbPtr t = testutil::gen_closed_db(seed + 900, 10);
        CHECK(db_eq(db_shift(t, 0, seed % 4), t));
    }
}

TEST_CASE("db_beta_contract") {
    CHECK(db_eq(db_beta_contract(dapp(dindex(1), dindex(1)), dconst("c")),
                dapp(dconst("c"), dconst("c"))));
    // (\ \ ((\ \ #2) #2)) -> \ \ \ #3 after contracting the inner redex
    DbPtr whole = dabs(dabs(dapp(dabs(dabs(dindex(2))), dindex(2))));
    CHECK(db_eq(beta_step(whole, {0, 0}), dabs(dabs(dabs(dindex(3))))));
    CHECK(db_eq(db_beta_contract(dabs(dindex(2)), dindex(1)), dabs(dindex(2))));
}

TEST_CASE("beta_step") {
    CHECK(db_eq(beta_step(dapp(dabs(dindex(1)), dconst("c")), {}), dconst("c")));
    CHECK(db_eq(beta_step(dabs(dapp(dabs(dindex(1)), dconst("c"))), {0}),
                dabs(dconst("c"))));
    CHECK_THROWS_AS(beta_step(dapp(dconst("c"), dconst("d")), {}), NotARedex);
}

TEST_CASE("beta_normalize") {
    DbNormResult r1 = beta_normalize(dapp(dabs(dindex(1)), dconst("c")), 10);
    CHECK_FALSE(r1.exhausted);
    CHECK(db_eq(r1.term, dconst("c")));

    DbPtr omega = dabs(dapp(dindex(1), dindex(1)));
    DbNormResult r2 = beta_normalize(dapp(omega, omega), 50);
    CHECK(r2.exhausted);

    DbNormResult r3 =
        beta_normalize(dapp(testutil::church(2), testutil::church(2)), 100);
    CHECK_FALSE(r3.exhausted);
    CHECK(db_eq(r3.term, testutil::church(4)));
}

TEST_CASE("head normalization stops at hnf") {
    // \ ((\ #1) c) d: function part reduced, argument left alone
    DbPtr t = dapp(dabs(dapp(dabs(dindex(1)), dconst("c"))),
                   dapp(dabs(dindex(1)), dconst("d")));
    DbNormResult r = db_head_normalize(t, 100);
    CHECK_FALSE(r.exhausted);
    CHECK(db_eq(r.term, dconst("c")));
}

TEST_CASE("named contraction agrees with de Bruijn contraction") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        DbPtr t = testutil::gen_closed_db(seed, 14);
        std::vector<Position> reds = db_redexes(t);
        if (reds.empty()) continue;
        NamedPtr named = from_debruijn(t, {});
        for (const Position& p : reds) {
            DbPtr via_db = beta_step(t, p);
            DbPtr via_named = to_debruijn(named_beta_at(named, p), {});
            CHECK(db_eq(via_db, via_named));
        }
    }
}

TEST_CASE("Church-Rosser at desk scale") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        DbPtr t = testutil::gen_closed_db(seed + 5000, 12);
        DbNormResult nf = beta_normalize(t, 2000);
        if (nf.exhausted) continue;
        for (const Position& p : db_redexes(t)) {
            DbNormResult other = beta_normalize(beta_step(t, p), 4000);
            if (other.exhausted) continue;
            CHECK(db_eq(other.term, nf.term));
        }
    }
}
