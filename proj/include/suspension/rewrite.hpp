#pragma once

// The suspension rewrite engine: rules (beta_s), (r1)-(r7), (m1)-(m6),
// redex enumeration, the rm/full/generalized-head normalizers, parallel
// beta_s development, the similarity relation, and the local-confluence
// and associativity checkers.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "suspension/syntax.hpp"

namespace susp {

enum class RuleId {
    BetaS,
    R1, R2, R3, R4, R5, R6, R7,
    M1, M2, M3, M4, M5, M6,
};

const char* rule_name(RuleId rule);
std::optional<RuleId> rule_from_name(const std::string& name);

enum class MetaMode { Graftable, Logical };

struct RuleSet {
    bool beta_s = false;
    bool reading = false; // (r1)-(r6), plus (r7) when the mode is Logical
    bool merging = false;
    bool contains(RuleId r) const;
};
inline RuleSet rm_rules() { return {false, true, true}; }
inline RuleSet r_rules() { return {false, true, false}; }
inline RuleSet m_rules() { return {false, false, true}; }
inline RuleSet all_rules() { return {true, true, true}; }

struct TraceStep {
    RuleId rule;
    Position pos;
    Expr before; // whole expression snapshots
    Expr after;
    std::size_t step_index = 0;
};

std::vector<RuleId> applicable_rules(const Expr& x, const Position& pos, MetaMode mode);
Expr apply_rule(const Expr& x, RuleId rule, const Position& pos);

std::vector<std::pair<Position, RuleId>>
enumerate_redexes(const Expr& x, const RuleSet& rules, MetaMode mode);

std::optional<std::pair<Position, RuleId>>
find_first_redex(const Expr& x, const RuleSet& rules, MetaMode mode);

constexpr std::size_t kRmFuel = 10'000'000;

Expr rm_normalize(const Expr& x);
Expr rm_normalize_traced(const Expr& x, std::vector<TraceStep>* trace,
                         RuleSet rules = rm_rules(),
                         MetaMode mode = MetaMode::Graftable);
// Picks a uniformly random redex at every step.
Expr rm_normalize_random(const Expr& x, std::uint64_t seed);

EnvPtr env_to_simple(const EnvPtr& e);

struct NormResult {
    Expr expr;
    std::vector<TraceStep> trace;
    std::size_t beta_steps = 0;
    bool exhausted = false;
};

// Leftmost-outermost over beta_s + rm (+ r7 in Logical mode); budget counts
// beta_s steps only, rm steps are capped by the internal fuel.
NormResult full_normalize(const Expr& x, std::size_t budget,
                          MetaMode mode = MetaMode::Graftable);

// Generalized head reduction: the head beta_s-redex on the spine, or the
// rm-redex closest to the root above it.
NormResult head_normalize(const Expr& x, std::size_t budget);

struct Hnf {
    std::uint64_t binders = 0;
    TermPtr head;
    std::vector<TermPtr> args;
};
std::optional<Hnf> hnf_decompose(const Expr& x);

// Maximal parallel development: every visible beta_s-redex contracted at once.
Expr parallel_beta_step(const Expr& x);

bool similar(const Expr& x, const Expr& y);

struct ConfluenceReport {
    bool ok = true;
    // First failing pair of one-step successors and their normal forms.
    std::optional<std::pair<Expr, Expr>> successors;
    std::optional<std::pair<Expr, Expr>> normal_forms;
};
ConfluenceReport check_local_confluence(const Expr& x, MetaMode mode, std::size_t budget);

struct AssocReport {
    bool ok = true;
    Expr lhs_normal; // rm-normal forms of the two associations
    Expr rhs_normal;
};
AssocReport check_assoc(const EnvPtr& e1, std::uint64_t nl1, std::uint64_t ol2,
                        const EnvPtr& e2, std::uint64_t nl2, std::uint64_t ol3,
                        const EnvPtr& e3);

} // namespace susp
