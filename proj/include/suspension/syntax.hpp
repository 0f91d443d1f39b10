#pragma once

// Suspension expression trees, the len/lev/ind measures, wellformedness,
// simple environments, truncation, and the wellformed-by-construction
// random generator.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "suspension/lambda.hpp"
#include "suspension/types.hpp"

namespace susp {

struct SuspTerm;
struct SuspEnv;
using TermPtr = std::shared_ptr<const SuspTerm>;
using EnvPtr = std::shared_ptr<const SuspEnv>;

struct EnvItem {
    TermPtr term;
    std::uint64_t level = 0;
};

struct SuspTerm {
    struct Const {
        std::string name;
    };
    struct Meta {
        std::string name;
    };
    struct Index {
        std::uint64_t i; // >= 1
    };
    struct App {
        TermPtr fun;
        TermPtr arg;
    };
    struct Abs {
        TypePtr ann; // may be null
        TermPtr body;
    };
    struct Susp {
        TermPtr term;
        std::uint64_t ol;
        std::uint64_t nl;
        EnvPtr env;
    };
    std::variant<Const, Meta, Index, App, Abs, Susp> node;
};

struct SuspEnv {
    struct Nil {};
    struct Cons {
        EnvItem head;
        EnvPtr tail;
    };
    struct Merged {
        EnvPtr e1;
        std::uint64_t nl1;
        std::uint64_t ol2;
        EnvPtr e2;
    };
    std::variant<Nil, Cons, Merged> node;
};

TermPtr sconst(std::string name);
TermPtr smeta(std::string name);
TermPtr sindex(std::uint64_t i);
TermPtr sapp(TermPtr fun, TermPtr arg);
TermPtr sabs(TermPtr body, TypePtr ann = nullptr);
TermPtr ssusp(TermPtr term, std::uint64_t ol, std::uint64_t nl, EnvPtr env);
EnvPtr enil();
EnvPtr econs(EnvItem head, EnvPtr tail);
EnvPtr emerged(EnvPtr e1, std::uint64_t nl1, std::uint64_t ol2, EnvPtr e2);

// One tree family: terms, environments, and environment terms.
// Child ordinals: App fun=0/arg=1; Abs body=0; Susp term=0/env=1;
// Cons head=0/tail=1; EnvItem term=0; Merged e1=0/e2=1.
using Expr = std::variant<TermPtr, EnvPtr, EnvItem>;

bool term_eq(const TermPtr& a, const TermPtr& b);
bool env_eq(const EnvPtr& a, const EnvPtr& b);
bool expr_eq(const Expr& a, const Expr& b);
std::size_t expr_nodes(const Expr& x);

std::uint64_t env_len(const EnvPtr& e);
std::uint64_t env_lev(const EnvPtr& e);
std::uint64_t env_ind(const EnvPtr& e, std::uint64_t i);

struct Violation {
    Position pos;
    std::string reason;
};
std::optional<Violation> check_wellformed(const Expr& x);

bool is_simple(const EnvPtr& e);
EnvPtr env_truncate(const EnvPtr& e, std::uint64_t i);

Expr subexpr(const Expr& x, const Position& pos);
Expr replace_subexpr(const Expr& x, const Position& pos, const Expr& replacement);
// Preorder visit of every position; return false from the callback to stop.
void walk_positions(const Expr& x,
                    const std::function<bool(const Expr&, const Position&)>& visit);

// Deterministic in seed; output always passes check_wellformed; node count
// <= size. Always produces a term.
Expr gen_expr(std::uint64_t seed, int size, bool allow_meta);
TermPtr gen_term(std::uint64_t seed, int size, bool allow_meta,
                 bool allow_const = true, bool allow_merged = true);
EnvPtr gen_env(std::uint64_t seed, int size, bool allow_meta);

TermPtr susp_of_db(const DbPtr& t);
// Null when the term still contains Susp or Meta nodes.
std::optional<DbPtr> db_of_susp(const TermPtr& t);

} // namespace susp
