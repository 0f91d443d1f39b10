#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "suspension/errors.hpp"
#include "suspension/text.hpp"
#include "util.hpp"

using namespace susp;

TEST_CASE("suspension grammar round trip") {
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
        TermPtr t = gen_term(seed, 25, true);
        CHECK(term_eq(parse_susp(print_susp(t)), t));
        EnvPtr e = gen_env(seed, 20, true);
        CHECK(env_eq(parse_susp_env(print_susp_env(e)), e));
    }
}

TEST_CASE("suspension grammar fixed points") {
    TermPtr t = parse_susp("[c:a, 1, 5, (c:b,0)::nil]");
    CHECK(term_eq(t, ssusp(sconst("a"), 1, 5,
                           econs({sconst("b"), 0}, enil()))));
    CHECK(print_susp(t) == "[c:a,1,5,(c:b,0)::nil]");
    CHECK(term_eq(parse_susp("(\\ \\ (\\ ?t ?s1) ?s2)"),
                  sapp(sabs(sabs(sapp(sabs(smeta("t")), smeta("s1")))),
                       smeta("s2"))));
    EnvPtr e = parse_susp_env("{(c:a,0)::nil,1,2,(c:b,1)::(c:b,0)::nil}");
    CHECK(env_len(e) == 2);
    TermPtr ann = parse_susp("\\:a -> b. #1");
    CHECK(print_susp(ann) == "\\:a -> b. #1");
    CHECK_THROWS_AS(parse_susp("[c:a"), ParseError);
    CHECK_THROWS_AS(parse_susp("#0"), Error);
}

TEST_CASE("de Bruijn grammar") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        testutil::Rng rng(seed);
        DbPtr t = testutil::gen_db(rng, 16, 0, 2);
        CHECK(db_eq(parse_db(print_db(t)), t));
    }
    CHECK(db_eq(parse_db("\\ (#1 c:k)"), dabs(dapp(dindex(1), dconst("k")))));
    DbPtr ann = parse_db("\\:a. #1");
    REQUIRE(std::holds_alternative<DbTerm::Abs>(ann->node));
    CHECK(std::get<DbTerm::Abs>(ann->node).ann != nullptr);
    CHECK(db_eq(parse_db(print_db(ann)), ann));
}

TEST_CASE("named grammar") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        testutil::Rng rng(seed);
        DbPtr t = testutil::gen_db(rng, 14, 0, 2);
        NamedPtr n = from_debruijn(t, {"u", "w"});
        NamedPtr back = parse_named(print_named(n));
        CHECK(alpha_eq(back, n));
    }
    NamedPtr t = parse_named("\\x:a. f x (c:k x)");
    CHECK(free_vars(t) == std::set<std::string>{"f"});
    CHECK(alpha_eq(parse_named(print_named(t)), t));
}

TEST_CASE("upsilon grammar") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        ups::TermPtr t = ups::gen(seed, 16);
        CHECK(ups::eq(ups::Expr{parse_ups(print_ups(t))}, ups::Expr{t}));
    }
    ups::TermPtr t = parse_ups("4[^(^(#1/))]");
    CHECK(ups::eq(ups::Expr{t},
                  ups::Expr{ups::closure(
                      ups::index(4),
                      ups::lift(ups::lift(ups::slash(ups::index(1)))))}));
    CHECK(ups::eq(ups::Expr{parse_ups("1[!][!]")},
                  ups::Expr{ups::closure(ups::closure(ups::index(1),
                                                      ups::shift()),
                                         ups::shift())}));
}

TEST_CASE("lambda-s grammar") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        ls::TermPtr t = ls::gen(seed, 16);
        CHECK(ls::eq(parse_ls(print_ls(t)), t));
    }
    CHECK(ls::eq(parse_ls("1 s{1} 2"), ls::sigma(ls::index(1), 1,
                                                 ls::index(2))));
    CHECK(ls::eq(parse_ls("phi{0,1} 2"), ls::phi(0, 1, ls::index(2))));
    // sigma chains associate to the left
    CHECK(ls::eq(parse_ls("1 s{1} 2 s{2} 3"),
                 ls::sigma(ls::sigma(ls::index(1), 1, ls::index(2)), 2,
                           ls::index(3))));
}

TEST_CASE("lambda-sigma grammar") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        sig::TermPtr t = sig::gen_term(seed, 16);
        CHECK(sig::eq(sig::Expr{parse_sigma(print_sigma(t))}, sig::Expr{t}));
    }
    CHECK(sig::eq(sig::Expr{parse_sigma("1[(! o !)]")},
                  sig::Expr{sig::closure(sig::one(),
                                         sig::comp(sig::shift(),
                                                   sig::shift()))}));
    CHECK(sig::eq(sig::Expr{parse_sigma("1[1 . id]")},
                  sig::Expr{sig::closure(sig::one(),
                                         sig::cons(sig::one(), sig::id()))}));
}

TEST_CASE("positions") {
    CHECK(print_position({}) == "-");
    CHECK(print_position({0, 1, 0}) == "0/1/0");
    CHECK(parse_position("-").empty());
    CHECK(parse_position("0/1/0") == Position{0, 1, 0});
}
