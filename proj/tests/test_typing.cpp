#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "suspension/errors.hpp"
#include "suspension/rewrite.hpp"
#include "suspension/typing.hpp"
#include "util.hpp"

using namespace susp;

namespace {

EnvPtr entry(TermPtr t, std::uint64_t l, EnvPtr tail) {
    return econs({std::move(t), l}, std::move(tail));
}

const TypePtr tyA = tybase("a");
const TypePtr tyB = tybase("b");

// A well-typed suspension term together with its context and type, made by
// generating a typed de Bruijn term and walking a few rewrite steps.
struct TypedSample {
    TermPtr term;
    Context ctx;
    TypePtr type;
};

TypedSample gen_typed_susp(std::uint64_t seed, const Signature& sig) {
    testutil::Rng rng(seed);
    TypePtr ty = testutil::gen_type(rng, 2);
    DbPtr db = testutil::gen_typed_db(rng, {}, ty, sig, 5);
    Expr x{susp_of_db(db)};
    for (int k = 0; k < 4; ++k) {
        auto reds = enumerate_redexes(x, all_rules(), MetaMode::Graftable);
        if (reds.empty()) break;
        auto& [pos, rule] = reds[testutil::pick(rng, reds.size())];
        x = apply_rule(x, rule, pos);
    }
    return {std::get<TermPtr>(x), {}, ty};
}

} // namespace

TEST_CASE("type syntax") {
    CHECK(type_eq(parse_type("a -> b -> a"),
                  tyarrow(tyA, tyarrow(tyB, tyA))));
    CHECK(type_eq(parse_type("(a -> b) -> a"),
                  tyarrow(tyarrow(tyA, tyB), tyA)));
    CHECK(show_type(parse_type("(a -> b) -> a")) == "(a -> b) -> a");
    Signature sig = parse_signature("# constants\nc : a\nf : a -> a\n\n");
    CHECK(sig.size() == 2);
    CHECK(type_eq(sig.at("f"), tyarrow(tyA, tyA)));
}

TEST_CASE("typecheck_db") {
    Signature sig = testutil::test_signature();
    CHECK(type_eq(typecheck_db({}, sig, dabs(dindex(1), tyA)),
                  tyarrow(tyA, tyA)));
    CHECK(type_eq(typecheck_db({tyA}, sig, dindex(1)), tyA));
    CHECK_THROWS_AS(typecheck_db({}, sig,
                                 dapp(dabs(dindex(1), tyA), dconst("kb"))),
                    ApplicationMismatch);
    CHECK_THROWS_AS(typecheck_db({}, sig, dindex(1)), UnboundIndex);
    CHECK_THROWS_AS(typecheck_db({}, sig, dconst("nope")), UnknownConstant);
    CHECK_THROWS_AS(typecheck_db({}, sig, dabs(dindex(1))), MissingAnnotation);
}

TEST_CASE("typecheck_susp") {
    Signature sig = testutil::test_signature();
    // beta_s image: A.0 |- #1 : A and 0 |- ka : A give the suspension type A
    TermPtr img = ssusp(sindex(1), 1, 0, entry(sconst("ka"), 0, enil()));
    CHECK(type_eq(typecheck_susp({}, sig, img), tyA));
    CHECK(type_eq(typecheck_susp({}, sig, ssusp(sconst("ka"), 0, 0, enil())),
                  tyA));
    CHECK(type_eq(typecheck_susp({tyA, tyB}, sig,
                                 ssusp(sindex(1), 0, 1, enil())),
                  tyB));
    CHECK_THROWS_AS(typecheck_susp({}, sig, smeta("v")), MetaVarNotTypeable);
    CHECK_THROWS_AS(typecheck_susp({}, sig, ssusp(sindex(1), 0, 1, enil())),
                    ContextUnderflow);
    CHECK_THROWS_AS(typecheck_susp({}, sig,
                                   ssusp(sconst("ka"), 3, 0, enil())),
                    IllFormedInputs);
}

TEST_CASE("infer_env") {
    Signature sig = testutil::test_signature();
    Context gamma{tyA, tyB};
    CHECK(infer_env(gamma, sig, enil(), 0) == gamma);
    CHECK(infer_env(gamma, sig, enil(), 1) == Context{tyB});
    Context pushed = infer_env(gamma, sig, entry(sconst("kb"), 0, enil()), 0);
    REQUIRE(pushed.size() == 3);
    CHECK(type_eq(pushed[0], tyB));
    CHECK(type_eq(pushed[1], tyA));
}

TEST_CASE("agreement with the de Bruijn checker") {
    Signature sig = testutil::test_signature();
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        testutil::Rng rng(seed);
        TypePtr ty = testutil::gen_type(rng, 2);
        DbPtr db = testutil::gen_typed_db(rng, {}, ty, sig, 5);
        TypePtr via_db = typecheck_db({}, sig, db);
        TypePtr via_susp = typecheck_susp({}, sig, susp_of_db(db));
        CHECK(type_eq(via_db, via_susp));
        CHECK(type_eq(via_db, ty));
    }
}

TEST_CASE("subject reduction") {
    Signature sig = testutil::test_signature();
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        TypedSample s = gen_typed_susp(seed, sig);
        REQUIRE(type_eq(typecheck_susp(s.ctx, sig, s.term), s.type));
        Expr x{s.term};
        for (const auto& [pos, rule] :
             enumerate_redexes(x, all_rules(), MetaMode::Graftable)) {
            Expr y = apply_rule(x, rule, pos);
            CHECK(type_eq(typecheck_susp(s.ctx, sig, std::get<TermPtr>(y)),
                          s.type));
        }
    }
}

TEST_CASE("well-typed terms normalize") {
    Signature sig = testutil::test_signature();
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        TypedSample s = gen_typed_susp(seed + 777, sig);
        NormResult r = full_normalize(Expr{s.term}, 10000);
        CHECK_FALSE(r.exhausted);
        CHECK(type_eq(typecheck_susp(s.ctx, sig,
                                     std::get<TermPtr>(r.expr)),
                      s.type));
    }
}
