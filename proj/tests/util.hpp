#pragma once

// Shared test helpers: random de Bruijn / named term generation and a
// rule-directed generator for well-typed terms.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "suspension/lambda.hpp"
#include "suspension/rewrite.hpp"
#include "suspension/typing.hpp"

namespace testutil {

using Rng = std::mt19937_64;

inline std::uint64_t pick(Rng& rng, std::uint64_t n) {
    return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng);
}

// Random de Bruijn term; indices stay within depth + free_width so the
// result is closed once free_width == 0.
inline susp::DbPtr gen_db(Rng& rng, int size, std::uint64_t depth,
                          std::uint64_t free_width) {
    using namespace susp;
    if (size <= 1 || pick(rng, 4) == 0) {
        std::uint64_t span = depth + free_width;
        if (span == 0 || pick(rng, 3) == 0)
            return dconst(std::string(1, char('a' + pick(rng, 3))));
        return dindex(1 + pick(rng, span));
    }
    switch (pick(rng, 3)) {
    case 0:
        return dabs(gen_db(rng, size - 1, depth + 1, free_width));
    case 1: {
        int left = 1 + int(pick(rng, std::uint64_t(size - 1)));
        return dapp(gen_db(rng, left, depth, free_width),
                    gen_db(rng, size - 1 - left, depth, free_width));
    }
    default:
        // bias toward redexes so beta-oriented properties have material
        return dapp(dabs(gen_db(rng, (size - 1) / 2, depth + 1, free_width)),
                    gen_db(rng, (size - 1) / 2, depth, free_width));
    }
}

inline susp::DbPtr gen_closed_db(std::uint64_t seed, int size) {
    Rng rng(seed);
    return gen_db(rng, size, 0, 0);
}

inline susp::DbPtr church(std::uint64_t n) {
    using namespace susp;
    DbPtr body = dindex(1);
    for (std::uint64_t k = 0; k < n; ++k) body = dapp(dindex(2), body);
    return dabs(dabs(body));
}

// --- well-typed term generation ------------------------------------------

inline susp::Signature test_signature() {
    using namespace susp;
    Signature sig;
    sig["ka"] = tybase("a");
    sig["kb"] = tybase("b");
    sig["f"] = tyarrow(tybase("a"), tybase("a"));
    sig["g"] = tyarrow(tybase("a"), tybase("b"));
    return sig;
}

inline susp::TypePtr gen_type(Rng& rng, int depth) {
    using namespace susp;
    if (depth <= 0 || pick(rng, 2) == 0)
        return tybase(pick(rng, 2) == 0 ? "a" : "b");
    return tyarrow(gen_type(rng, depth - 1), gen_type(rng, depth - 1));
}

// Builds a term of the requested type under ctx; annotations are always
// present so the result typechecks syntax-directedly.
inline susp::DbPtr gen_typed_db(Rng& rng, const susp::Context& ctx,
                                const susp::TypePtr& ty,
                                const susp::Signature& sig, int fuel) {
    using namespace susp;
    std::vector<std::uint64_t> hits;
    for (std::size_t k = 0; k < ctx.size(); ++k)
        if (type_eq(ctx[k], ty)) hits.push_back(k + 1);

    if (fuel > 0 && pick(rng, 3) == 0) {
        // application: pick a domain, build both sides
        TypePtr dom = gen_type(rng, 1);
        return dapp(gen_typed_db(rng, ctx, tyarrow(dom, ty), sig, fuel - 1),
                    gen_typed_db(rng, ctx, dom, sig, fuel - 1));
    }
    if (auto* arrow = std::get_if<SimpleType::Arrow>(&ty->node)) {
        Context extended;
        extended.reserve(ctx.size() + 1);
        extended.push_back(arrow->dom);
        extended.insert(extended.end(), ctx.begin(), ctx.end());
        return dabs(gen_typed_db(rng, extended, arrow->cod, sig, fuel - 1),
                    arrow->dom);
    }
    if (!hits.empty() && pick(rng, 2) == 0)
        return dindex(hits[pick(rng, hits.size())]);
    for (const auto& [name, cty] : sig)
        if (type_eq(cty, ty) && pick(rng, 2) == 0) return dconst(name);
    if (!hits.empty()) return dindex(hits.front());
    for (const auto& [name, cty] : sig)
        if (type_eq(cty, ty)) return dconst(name);
    // unreachable for base types over the test signature
    return dconst("ka");
}

// b reachable from a by beta steps: a one-step beta_s contraction turns into
// contracting the redex's residual copies, so differences sit exactly at
// redex roots and the search can be change-directed.
inline bool beta_reaches(const susp::DbPtr& a, const susp::DbPtr& b, int& fuel) {
    using namespace susp;
    if (fuel <= 0) return false;
    --fuel;
    if (db_eq(a, b)) return true;
    if (a->node.index() == b->node.index()) {
        if (auto* aa = std::get_if<DbTerm::App>(&a->node)) {
            const auto& bb = std::get<DbTerm::App>(b->node);
            int save = fuel;
            if (beta_reaches(aa->fun, bb.fun, fuel) &&
                beta_reaches(aa->arg, bb.arg, fuel))
                return true;
            fuel = save;
        } else if (auto* al = std::get_if<DbTerm::Abs>(&a->node)) {
            const auto& bl = std::get<DbTerm::Abs>(b->node);
            int save = fuel;
            if (beta_reaches(al->body, bl.body, fuel)) return true;
            fuel = save;
        }
    }
    if (auto* aa = std::get_if<DbTerm::App>(&a->node))
        if (std::holds_alternative<DbTerm::Abs>(aa->fun->node))
            return beta_reaches(beta_step(a, {}), b, fuel);
    return false;
}

// Certificate for "from rewrites to to by one or more reading rules":
// leftmost-outermost path check, then a bounded breadth-first fallback.
inline bool r_plus_reaches(const susp::Expr& from, const susp::Expr& to) {
    using namespace susp;
    Expr cur = from;
    for (int k = 0; k < 400; ++k) {
        if (k > 0 && expr_eq(cur, to)) return true;
        auto red = find_first_redex(cur, r_rules(), MetaMode::Graftable);
        if (!red) break;
        cur = apply_rule(cur, red->second, red->first);
    }
    std::vector<Expr> frontier{from};
    for (int depth = 0; depth < 32; ++depth) {
        std::vector<Expr> next;
        for (const Expr& x : frontier)
            for (const auto& [pos, rule] :
                 enumerate_redexes(x, r_rules(), MetaMode::Graftable)) {
                Expr y = apply_rule(x, rule, pos);
                if (expr_eq(y, to)) return true;
                next.push_back(y);
            }
        if (next.empty() || next.size() > 4000) break;
        frontier = std::move(next);
    }
    return false;
}

} // namespace testutil
