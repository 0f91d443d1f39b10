#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "suspension/errors.hpp"
#include "suspension/rewrite.hpp"
#include "suspension/text.hpp"
#include "util.hpp"

using namespace susp;

namespace {

EnvPtr entry(TermPtr t, std::uint64_t l, EnvPtr tail) {
    return econs({std::move(t), l}, std::move(tail));
}

bool contains_meta(const Expr& x) {
    bool found = false;
    walk_positions(x, [&](const Expr& sub, const Position&) {
        if (auto* t = std::get_if<TermPtr>(&sub))
            if (std::holds_alternative<SuspTerm::Meta>((*t)->node)) found = true;
        return !found;
    });
    return found;
}

bool contains_merged(const Expr& x) {
    bool found = false;
    walk_positions(x, [&](const Expr& sub, const Position&) {
        if (auto* e = std::get_if<EnvPtr>(&sub))
            if (std::holds_alternative<SuspEnv::Merged>((*e)->node)) found = true;
        return !found;
    });
    return found;
}

// Meta-free term with at least one beta_s redex somewhere inside.
TermPtr gen_with_redex(std::uint64_t seed) {
    testutil::Rng rng(seed);
    TermPtr body = gen_term(seed * 3 + 1, 8, false);
    TermPtr arg = gen_term(seed * 3 + 2, 8, false);
    TermPtr redex = sapp(sabs(body), arg);
    switch (testutil::pick(rng, 3)) {
    case 0: return redex;
    case 1: return sabs(redex);
    default: return sapp(redex, gen_term(seed * 3 + 3, 6, false));
    }
}

} // namespace

TEST_CASE("rule names round trip") {
    for (RuleId r : {RuleId::BetaS, RuleId::R1, RuleId::R7, RuleId::M1,
                     RuleId::M6}) {
        auto back = rule_from_name(rule_name(r));
        REQUIRE(back.has_value());
        CHECK(*back == r);
    }
    CHECK(std::string(rule_name(RuleId::BetaS)) == "beta_s");
    CHECK_FALSE(rule_from_name("r9").has_value());
}

TEST_CASE("applicable_rules") {
    Expr beta{sapp(sabs(sconst("t")), sconst("s"))};
    CHECK(applicable_rules(beta, {}, MetaMode::Graftable) ==
          std::vector<RuleId>{RuleId::BetaS});

    Expr overlap{emerged(enil(), 0, 0, enil())};
    CHECK(applicable_rules(overlap, {}, MetaMode::Graftable) ==
          std::vector<RuleId>{RuleId::M2, RuleId::M3});

    Expr r3{ssusp(sindex(1), 1, 0, entry(sconst("c"), 0, enil()))};
    CHECK(applicable_rules(r3, {}, MetaMode::Graftable) ==
          std::vector<RuleId>{RuleId::R3});

    Expr meta{ssusp(smeta("v"), 0, 0, enil())};
    CHECK(applicable_rules(meta, {}, MetaMode::Graftable).empty());
    CHECK(applicable_rules(meta, {}, MetaMode::Logical) ==
          std::vector<RuleId>{RuleId::R7});
}

TEST_CASE("apply_rule") {
    Expr x2{ssusp(sindex(3), 0, 2, enil())};
    CHECK(expr_eq(apply_rule(x2, RuleId::R2, {}), Expr{sindex(5)}));

    Expr x3{ssusp(sindex(1), 2, 3,
                  entry(sconst("c"), 1, entry(sconst("d"), 0, enil())))};
    CHECK(expr_eq(apply_rule(x3, RuleId::R3, {}),
                  Expr{ssusp(sconst("c"), 0, 2, enil())}));

    Expr x4{ssusp(ssusp(sindex(1), 1, 0, entry(sconst("c"), 0, enil())), 0, 1,
                  enil())};
    Expr want{ssusp(sindex(1), 1, 1,
                    emerged(entry(sconst("c"), 0, enil()), 0, 0, enil()))};
    CHECK(expr_eq(apply_rule(x4, RuleId::M1, {}), want));

    CHECK_THROWS_AS(apply_rule(x2, RuleId::M1, {}), RuleNotApplicable);
}

TEST_CASE("enumerate_redexes") {
    Expr pure{susp_of_db(testutil::gen_closed_db(3, 12))};
    CHECK(enumerate_redexes(pure, rm_rules(), MetaMode::Graftable).empty());

    Expr beta{sapp(sabs(sindex(1)), sconst("c"))};
    auto reds = enumerate_redexes(beta, RuleSet{true, false, false},
                                  MetaMode::Graftable);
    REQUIRE(reds.size() == 1);
    CHECK(reds[0].first.empty());
    CHECK(reds[0].second == RuleId::BetaS);
}

TEST_CASE("rm_normalize") {
    CHECK(expr_eq(rm_normalize(Expr{ssusp(sconst("c"), 1, 5,
                                          entry(sconst("d"), 0, enil()))}),
                  Expr{sconst("c")}));
    CHECK(expr_eq(rm_normalize(Expr{ssusp(sabs(sindex(2)), 0, 1, enil())}),
                  Expr{sabs(sindex(3))}));
    CHECK(expr_eq(rm_normalize(Expr{ssusp(sindex(1), 1, 0,
                                          entry(sconst("c"), 0, enil()))}),
                  Expr{sconst("c")}));
}

TEST_CASE("rm_normalize matches de Bruijn shifting") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        DbPtr t = testutil::gen_closed_db(seed, 10);
        std::uint64_t nl = seed % 4;
        Expr x{ssusp(susp_of_db(t), 0, nl, enil())};
        auto back = db_of_susp(std::get<TermPtr>(rm_normalize(x)));
        REQUIRE(back.has_value());
        CHECK(db_eq(*back, db_shift(t, std::int64_t(nl), 0)));
    }
}

TEST_CASE("env_to_simple") {
    CHECK(env_eq(env_to_simple(emerged(enil(), 0, 1,
                                       entry(sconst("c"), 0, enil()))),
                 entry(sconst("c"), 0, enil())));

    EnvPtr e2 = entry(sconst("a"), 1, entry(sconst("b"), 0, enil()));
    EnvPtr merged = emerged(entry(sconst("t"), 0, enil()), 0, 2, e2);
    EnvPtr want = entry(ssusp(sconst("t"), 2, 1, e2), 1, e2);
    CHECK(env_eq(env_to_simple(merged), want));

    CHECK(env_eq(env_to_simple(emerged(enil(), 1, 1,
                                       entry(sconst("c"), 0, enil()))),
                 enil()));
}

TEST_CASE("full_normalize reproduces the graftable meta example") {
    // (\ \ (\ ?t ?s1) ?s2)
    TermPtr start = sapp(sabs(sabs(sapp(sabs(smeta("t")), smeta("s1")))),
                         smeta("s2"));
    NormResult r = full_normalize(Expr{start}, 100);
    CHECK_FALSE(r.exhausted);
    EnvPtr tail = entry(sindex(1), 1, entry(smeta("s2"), 0, enil()));
    TermPtr want = sabs(ssusp(
        smeta("t"), 3, 1, entry(ssusp(smeta("s1"), 2, 1, tail), 1, tail)));
    CHECK(expr_eq(r.expr, Expr{want}));
}

TEST_CASE("full_normalize basics") {
    NormResult ok = full_normalize(Expr{sapp(sabs(sindex(1)), sconst("c"))}, 10);
    CHECK_FALSE(ok.exhausted);
    CHECK(expr_eq(ok.expr, Expr{sconst("c")}));

    TermPtr self = sabs(sapp(sindex(1), sindex(1)));
    NormResult diverge = full_normalize(Expr{sapp(self, self)}, 20);
    CHECK(diverge.exhausted);
    CHECK(diverge.beta_steps >= 20);
}

TEST_CASE("head_normalize") {
    NormResult r1 = head_normalize(Expr{sabs(sapp(sabs(sindex(1)),
                                               sconst("c")))}, 100);
    CHECK_FALSE(r1.exhausted);
    CHECK(expr_eq(r1.expr, Expr{sabs(sconst("c"))}));

    NormResult r2 = head_normalize(
        Expr{sapp(sabs(sindex(1)), sapp(sconst("c"), sconst("d")))}, 100);
    CHECK_FALSE(r2.exhausted);
    auto hnf = hnf_decompose(r2.expr);
    REQUIRE(hnf.has_value());
    CHECK(hnf->binders == 0);
    CHECK(term_eq(hnf->head, sconst("c")));
    REQUIRE(hnf->args.size() == 1);
    CHECK(expr_eq(rm_normalize(Expr{hnf->args[0]}), Expr{sconst("d")}));

    TermPtr self = sabs(sapp(sindex(1), sindex(1)));
    CHECK(head_normalize(Expr{sapp(self, self)}, 20).exhausted);
}

TEST_CASE("hnf_decompose") {
    auto h1 = hnf_decompose(
        Expr{sabs(sabs(sapp(sapp(sconst("c"), sindex(1)), sindex(2))))});
    REQUIRE(h1.has_value());
    CHECK(h1->binders == 2);
    CHECK(term_eq(h1->head, sconst("c")));
    REQUIRE(h1->args.size() == 2);
    CHECK(term_eq(h1->args[0], sindex(1)));
    CHECK(term_eq(h1->args[1], sindex(2)));

    auto h2 = hnf_decompose(Expr{sconst("c")});
    REQUIRE(h2.has_value());
    CHECK(h2->binders == 0);
    CHECK(h2->args.empty());

    CHECK_FALSE(hnf_decompose(Expr{sapp(sabs(sindex(1)), sconst("c"))})
                    .has_value());
}

TEST_CASE("parallel_beta_step") {
    CHECK(expr_eq(parallel_beta_step(Expr{sconst("c")}), Expr{sconst("c")}));

    TermPtr ra = sapp(sabs(sindex(1)), sconst("a"));
    TermPtr rb = sapp(sabs(sindex(1)), sconst("b"));
    TermPtr da = ssusp(sindex(1), 1, 0, entry(sconst("a"), 0, enil()));
    TermPtr db = ssusp(sindex(1), 1, 0, entry(sconst("b"), 0, enil()));
    CHECK(expr_eq(parallel_beta_step(Expr{sapp(ra, rb)}), Expr{sapp(da, db)}));

    TermPtr nested = sapp(sabs(sindex(1)), ra);
    TermPtr want = ssusp(sindex(1), 1, 0, entry(da, 0, enil()));
    CHECK(expr_eq(parallel_beta_step(Expr{nested}), Expr{want}));
}

TEST_CASE("parallel step strong confluence") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Expr x{gen_with_redex(seed)};
        Expr full = parallel_beta_step(x);
        // the maximal development wraps every redex, so one more pass is a
        // no-op and every single-step successor develops straight to it
        CHECK(expr_eq(parallel_beta_step(full), full));
        for (const auto& [pos, rule] :
             enumerate_redexes(x, RuleSet{true, false, false},
                               MetaMode::Graftable)) {
            Expr y = apply_rule(x, rule, pos);
            CHECK(expr_eq(parallel_beta_step(y), full));
        }
    }
}

TEST_CASE("similar") {
    Expr x = gen_expr(11, 20, true);
    CHECK(similar(x, x));

    EnvPtr a = entry(ssusp(sconst("c"), 0, 2, enil()), 3, enil());
    EnvPtr b = entry(ssusp(sconst("c"), 0, 5, enil()), 6, enil());
    CHECK(similar(Expr{a}, Expr{b}));

    CHECK_FALSE(similar(Expr{entry(sconst("c"), 3, enil())},
                        Expr{entry(sconst("c"), 4, enil())}));
}

TEST_CASE("similarity theorem at desk scale") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        testutil::Rng rng(seed);
        EnvPtr r = gen_env(seed * 7 + 1, 8, false);
        std::uint64_t ol = env_len(r);
        std::uint64_t nl = env_lev(r) + testutil::pick(rng, 3);
        std::uint64_t k = testutil::pick(rng, 3);
        std::uint64_t d = 1 + testutil::pick(rng, 3);
        TermPtr inner = gen_term(seed * 7 + 2, 6, false);

        EnvPtr env1 = entry(ssusp(inner, ol, nl, r), nl + k, enil());
        EnvPtr env2 = entry(ssusp(inner, ol, nl + d, r), nl + d + k, enil());
        REQUIRE(similar(Expr{env1}, Expr{env2}));
        CHECK(similar(Expr{env_to_simple(env1)}, Expr{env_to_simple(env2)}));

        TermPtr body = gen_term(seed * 7 + 3, 6, false);
        std::uint64_t outer = nl + d + k + testutil::pick(rng, 2);
        Expr t1{ssusp(body, 1, outer, env1)};
        Expr t2{ssusp(body, 1, outer, env2)};
        REQUIRE_FALSE(check_wellformed(t1).has_value());
        REQUIRE_FALSE(check_wellformed(t2).has_value());
        CHECK(expr_eq(rm_normalize(t1), rm_normalize(t2)));
    }
}

TEST_CASE("check_local_confluence") {
    Expr pure{susp_of_db(testutil::gen_closed_db(9, 10))};
    CHECK(check_local_confluence(pure, MetaMode::Graftable, 0).ok);

    Expr peak{ssusp(ssusp(sindex(2), 0, 1, enil()), 0, 1, enil())};
    CHECK(check_local_confluence(peak, MetaMode::Graftable, 0).ok);
    CHECK(expr_eq(rm_normalize(peak), Expr{sindex(4)}));

    Expr overlap{ssusp(sindex(1), 0, 0, emerged(enil(), 0, 0, enil()))};
    CHECK(check_local_confluence(overlap, MetaMode::Graftable, 0).ok);

    for (std::uint64_t seed = 0; seed < 100; ++seed)
        CHECK(check_local_confluence(gen_expr(seed, 18, true),
                                     MetaMode::Graftable, 0)
                  .ok);
}

TEST_CASE("check_assoc") {
    CHECK(check_assoc(enil(), 0, 0, enil(), 0, 0, enil()).ok);

    EnvPtr e1 = entry(sconst("a"), 0, enil());
    EnvPtr e2 = entry(sconst("b"), 1, enil());
    CHECK(check_assoc(e1, 0, 1, e2, 1, 0, enil()).ok);

    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        testutil::Rng rng(seed);
        EnvPtr g1 = gen_env(seed * 5 + 1, 8, false);
        EnvPtr g2 = gen_env(seed * 5 + 2, 8, false);
        EnvPtr g3 = gen_env(seed * 5 + 3, 8, false);
        CHECK(check_assoc(g1, env_lev(g1) + testutil::pick(rng, 3), env_len(g2),
                          g2, env_lev(g2) + testutil::pick(rng, 3), env_len(g3),
                          g3)
                  .ok);
    }
}

TEST_CASE("rewrites preserve wellformedness") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Expr x = gen_expr(seed, 25, true);
        for (const auto& [pos, rule] :
             enumerate_redexes(x, all_rules(), MetaMode::Graftable)) {
            Expr y = apply_rule(x, rule, pos);
            CHECK_FALSE(check_wellformed(y).has_value());
            if (auto* e = std::get_if<EnvPtr>(&x)) {
                auto* f = std::get_if<EnvPtr>(&y);
                REQUIRE(f);
                CHECK(env_len(*f) == env_len(*e));
                CHECK(env_lev(*f) <= env_lev(*e));
            }
        }
    }
}

TEST_CASE("randomized rm strategies agree") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        Expr x = gen_expr(seed, 25, true);
        Expr a = rm_normalize_random(x, seed * 2 + 1);
        Expr b = rm_normalize_random(x, seed * 17 + 5);
        CHECK(expr_eq(a, b));
        CHECK(expr_eq(a, rm_normalize(x)));
    }
}

TEST_CASE("meta-free rm-normal forms are pure") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        Expr x{gen_term(seed, 25, false)};
        Expr n = rm_normalize(x);
        CHECK_FALSE(contains_meta(n));
        CHECK(db_of_susp(std::get<TermPtr>(n)).has_value());
    }
}

TEST_CASE("reading rules suffice for simple environments") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Expr x{gen_term(seed, 20, false, true, /*allow_merged=*/false)};
        REQUIRE_FALSE(contains_merged(x));
        Expr via_r = rm_normalize_traced(x, nullptr, r_rules());
        CHECK(enumerate_redexes(via_r, rm_rules(), MetaMode::Graftable).empty());
        CHECK(expr_eq(via_r, rm_normalize(x)));
    }
}

TEST_CASE("backwards pruning of unused inner environments") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        testutil::Rng rng(seed);
        EnvPtr e1 = gen_env(seed * 9 + 1, 10, true);
        EnvPtr e2 = gen_env(seed * 9 + 2, 10, true);
        std::uint64_t ol2 = env_len(e2);
        std::uint64_t nl1 = env_lev(e1) + ol2 + testutil::pick(rng, 3);
        EnvPtr merged = emerged(e1, nl1, ol2, e2);
        REQUIRE_FALSE(check_wellformed(Expr{merged}).has_value());
        CHECK(env_eq(env_to_simple(merged), env_to_simple(e1)));
    }
}

TEST_CASE("one-step simulation is sound over the oracle") {
    std::size_t done = 0;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Expr x1{gen_with_redex(seed)};
        auto reds = enumerate_redexes(x1, RuleSet{true, false, false},
                                      MetaMode::Graftable);
        REQUIRE_FALSE(reds.empty());
        Expr x2 = apply_rule(x1, reds[0].second, reds[0].first);
        auto d1 = db_of_susp(std::get<TermPtr>(rm_normalize(x1)));
        auto d2 = db_of_susp(std::get<TermPtr>(rm_normalize(x2)));
        REQUIRE(d1.has_value());
        REQUIRE(d2.has_value());
        int fuel = 2000;
        bool found = testutil::beta_reaches(*d1, *d2, fuel);
        CHECK(found);
        if (found) ++done;
    }
    CHECK(done == 60);
}

TEST_CASE("one-step simulation is complete over the oracle") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        DbPtr d1 = testutil::gen_closed_db(seed + 333, 12);
        std::vector<Position> reds = db_redexes(d1);
        if (reds.empty()) continue;
        Position p = reds[seed % reds.size()];
        DbPtr d2 = beta_step(d1, p);
        Expr stepped = apply_rule(Expr{susp_of_db(d1)}, RuleId::BetaS, p);
        CHECK(expr_eq(rm_normalize(stepped), Expr{susp_of_db(d2)}));
    }
}
