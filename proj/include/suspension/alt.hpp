#pragma once

// Engines for the lambda-upsilon, lambda-s / lambda-s_e, and lambda-sigma
// calculi, the four translations into/out of the suspension calculus, and
// the Mellies counterexample unfolding.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "suspension/syntax.hpp"

namespace susp::ups {

struct Term;
struct Sub;
using TermPtr = std::shared_ptr<const Term>;
using SubPtr = std::shared_ptr<const Sub>;

struct Term {
    struct Index {
        std::uint64_t n; // >= 1
    };
    struct App {
        TermPtr fun;
        TermPtr arg;
    };
    struct Abs {
        TermPtr body;
    };
    struct Closure {
        TermPtr a;
        SubPtr s;
    };
    std::variant<Index, App, Abs, Closure> node;
};

struct Sub {
    struct Slash {
        TermPtr a;
    };
    struct Lift {
        SubPtr s;
    };
    struct Shift {};
    std::variant<Slash, Lift, Shift> node;
};

TermPtr index(std::uint64_t n);
TermPtr app(TermPtr f, TermPtr a);
TermPtr abs(TermPtr b);
TermPtr closure(TermPtr a, SubPtr s);
SubPtr slash(TermPtr a);
SubPtr lift(SubPtr s);
SubPtr shift();

// Substitutions participate in positions: Closure a=0/s=1, Slash a=0, Lift s=0.
using Expr = std::variant<TermPtr, SubPtr>;

enum class Rule { B, App, Lambda, FVar, RVar, VarShift, FVarLift, RVarLift };
const char* rule_name(Rule r);

bool eq(const Expr& a, const Expr& b);
std::size_t size(const Expr& x);

std::vector<std::pair<susp::Position, Rule>>
redexes(const Expr& x, bool include_beta);
Expr step(const Expr& x, const susp::Position& pos, Rule r);

struct NormResult {
    Expr expr;
    std::size_t steps = 0;
    bool exhausted = false;
};
// include_beta=false is the upsilon-only ruleset (always terminates, fuel
// guarded); with (B) the budget bounds the number of steps.
NormResult normalize(const Expr& x, std::size_t budget, bool include_beta);

TermPtr gen(std::uint64_t seed, int size);

} // namespace susp::ups

namespace susp::ls {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
    struct Index {
        std::uint64_t n; // >= 1
    };
    struct App {
        TermPtr fun;
        TermPtr arg;
    };
    struct Abs {
        TermPtr body;
    };
    struct Sigma { // a sigma^i b
        TermPtr a;
        std::uint64_t i; // >= 1
        TermPtr b;
    };
    struct Phi { // phi^i_k a
        std::uint64_t k; // >= 0
        std::uint64_t i; // >= 1
        TermPtr a;
    };
    std::variant<Index, App, Abs, Sigma, Phi> node;
};

TermPtr index(std::uint64_t n);
TermPtr app(TermPtr f, TermPtr a);
TermPtr abs(TermPtr b);
TermPtr sigma(TermPtr a, std::uint64_t i, TermPtr b);
TermPtr phi(std::uint64_t k, std::uint64_t i, TermPtr a);

enum class Rule {
    SigmaGeneration,
    SigmaLambda,
    SigmaApp,
    SigmaDestruction,
    PhiLambda,
    PhiApp,
    PhiDestruction,
    // lambda-s_e extensions
    SigmaSigma,
    SigmaPhi1,
    SigmaPhi2,
    PhiSigma,
    PhiPhi1,
    PhiPhi2,
};
const char* rule_name(Rule r);

enum class RuleSet { SOnly, Full, SeOnly, SeFull };

bool eq(const TermPtr& a, const TermPtr& b);
std::size_t size(const TermPtr& x);

std::vector<std::pair<susp::Position, Rule>> redexes(const TermPtr& x, RuleSet rs);
TermPtr step(const TermPtr& x, const susp::Position& pos, Rule r);

struct NormResult {
    TermPtr term;
    std::size_t steps = 0;
    bool exhausted = false;
};
NormResult normalize(const TermPtr& x, std::size_t budget, RuleSet rs);

TermPtr gen(std::uint64_t seed, int size);

} // namespace susp::ls

namespace susp::sig {

struct Term;
struct Sub;
using TermPtr = std::shared_ptr<const Term>;
using SubPtr = std::shared_ptr<const Sub>;

struct Term {
    struct One {};
    struct App {
        TermPtr fun;
        TermPtr arg;
    };
    struct Abs {
        TermPtr body;
    };
    struct Closure {
        TermPtr a;
        SubPtr s;
    };
    std::variant<One, App, Abs, Closure> node;
};

struct Sub {
    struct Id {};
    struct Shift {};
    struct Cons {
        TermPtr a;
        SubPtr s;
    };
    struct Comp {
        SubPtr s;
        SubPtr t;
    };
    std::variant<Id, Shift, Cons, Comp> node;
};

TermPtr one();
TermPtr app(TermPtr f, TermPtr a);
TermPtr abs(TermPtr b);
TermPtr closure(TermPtr a, SubPtr s);
SubPtr id();
SubPtr shift();
SubPtr cons(TermPtr a, SubPtr s);
SubPtr comp(SubPtr s, SubPtr t);

using Expr = std::variant<TermPtr, SubPtr>;

enum class Rule {
    Beta, App, Abs, Clos, Map, Ass,
    VarId, VarCons, IdL, ShiftId, ShiftCons,
};
const char* rule_name(Rule r);

bool eq(const Expr& a, const Expr& b);
std::size_t size(const Expr& x);

std::vector<std::pair<susp::Position, Rule>>
redexes(const Expr& x, bool include_beta);
Expr step(const Expr& x, const susp::Position& pos, Rule r);

struct NormResult {
    Expr expr;
    std::size_t steps = 0;
    bool exhausted = false;
};
constexpr std::size_t kSigmaFuel = 1'000'000;
// include_beta=false is the sigma-only ruleset; its fuel exhaustion raises
// SigmaFuelExhausted (termination of that fragment is cited, not proved here).
NormResult normalize(const Expr& x, std::size_t budget, bool include_beta);

TermPtr gen_term(std::uint64_t seed, int size);
SubPtr gen_sub(std::uint64_t seed, int size);

struct MelliesStep {
    Rule rule;
    susp::Position pos;
};
struct MelliesReport {
    TermPtr final_term;
    std::vector<MelliesStep> trace;
    std::vector<std::size_t> sizes_after_cycle;
    bool strictly_growing = false;
};
MelliesReport mellies_unfold(const TermPtr& a, const TermPtr& b, std::size_t cycles);

} // namespace susp::sig

namespace susp {

// Translations between the calculi. Substitution translations return
// (ol, nl, env) triples.
struct EnvTriple {
    std::uint64_t ol = 0;
    std::uint64_t nl = 0;
    EnvPtr env;
};

TermPtr ups_to_susp(const ups::TermPtr& a);
EnvTriple ups_sub_to_susp(const ups::SubPtr& s);

TermPtr ls_to_susp(const ls::TermPtr& a);

sig::TermPtr susp_to_sigma(const TermPtr& t);
sig::SubPtr susp_env_to_sigma(const EnvPtr& e, std::uint64_t j);

TermPtr sigma_to_susp(const sig::TermPtr& a);
EnvTriple sigma_sub_to_susp(const sig::SubPtr& s);

} // namespace susp
