#pragma once

// Named and de Bruijn lambda terms: the reference oracle for everything else.

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "suspension/types.hpp"

namespace susp {

using Position = std::vector<int>;

struct NamedTerm;
using NamedPtr = std::shared_ptr<const NamedTerm>;

struct NamedTerm {
    struct Const {
        std::string name;
    };
    struct Var {
        std::string name;
    };
    struct App {
        NamedPtr fun;
        NamedPtr arg;
    };
    struct Abs {
        std::string binder;
        TypePtr ann; // may be null
        NamedPtr body;
    };
    std::variant<Const, Var, App, Abs> node;
};

NamedPtr nconst(std::string name);
NamedPtr nvar(std::string name);
NamedPtr napp(NamedPtr fun, NamedPtr arg);
NamedPtr nabs(std::string binder, NamedPtr body, TypePtr ann = nullptr);

struct DbTerm;
using DbPtr = std::shared_ptr<const DbTerm>;

struct DbTerm {
    struct Const {
        std::string name;
    };
    struct Index {
        std::uint64_t i; // >= 1
    };
    struct App {
        DbPtr fun;
        DbPtr arg;
    };
    struct Abs {
        TypePtr ann; // may be null
        DbPtr body;
    };
    std::variant<Const, Index, App, Abs> node;
};

DbPtr dconst(std::string name);
DbPtr dindex(std::uint64_t i);
DbPtr dapp(DbPtr fun, DbPtr arg);
DbPtr dabs(DbPtr body, TypePtr ann = nullptr);

bool db_eq(const DbPtr& a, const DbPtr& b);

std::set<std::string> free_vars(const NamedPtr& t);
NamedPtr subst_named(const NamedPtr& t, const NamedPtr& s, const std::string& x);
bool alpha_eq(const NamedPtr& t1, const NamedPtr& t2);

DbPtr to_debruijn(const NamedPtr& t, const std::vector<std::string>& free_order);
NamedPtr from_debruijn(const DbPtr& t, const std::vector<std::string>& free_order);

DbPtr db_shift(const DbPtr& t, std::int64_t delta, std::uint64_t cutoff);
DbPtr db_beta_contract(const DbPtr& body, const DbPtr& arg);

// All beta-redex positions in normal order: preorder, function before
// argument, outer before inner.
std::vector<Position> db_redexes(const DbPtr& t);
DbPtr beta_step(const DbPtr& t, const Position& pos);

struct DbNormResult {
    DbPtr term;
    std::size_t steps = 0;
    bool exhausted = false;
};
DbNormResult beta_normalize(const DbPtr& t, std::size_t budget);

// Normal-order reduction stopping at head normal form.
DbNormResult db_head_normalize(const DbPtr& t, std::size_t budget);

} // namespace susp
