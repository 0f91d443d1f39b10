#include "suspension/rewrite.hpp"

#include <random>

#include "suspension/errors.hpp"

namespace susp {

const char* rule_name(RuleId rule) {
    switch (rule) {
    case RuleId::BetaS: return "beta_s";
    case RuleId::R1: return "r1";
    case RuleId::R2: return "r2";
    case RuleId::R3: return "r3";
    case RuleId::R4: return "r4";
    case RuleId::R5: return "r5";
    case RuleId::R6: return "r6";
    case RuleId::R7: return "r7";
    case RuleId::M1: return "m1";
    case RuleId::M2: return "m2";
    case RuleId::M3: return "m3";
    case RuleId::M4: return "m4";
    case RuleId::M5: return "m5";
    case RuleId::M6: return "m6";
    }
    return "?";
}

std::optional<RuleId> rule_from_name(const std::string& name) {
    static const RuleId all[] = {
        RuleId::BetaS, RuleId::R1, RuleId::R2, RuleId::R3, RuleId::R4,
        RuleId::R5,    RuleId::R6, RuleId::R7, RuleId::M1, RuleId::M2,
        RuleId::M3,    RuleId::M4, RuleId::M5, RuleId::M6,
    };
    for (RuleId r : all)
        if (name == rule_name(r)) return r;
    return std::nullopt;
}

bool RuleSet::contains(RuleId r) const {
    if (r == RuleId::BetaS) return beta_s;
    if (r >= RuleId::R1 && r <= RuleId::R7) return reading;
    return merging;
}

namespace {

std::vector<RuleId> rules_at(const Expr& x, MetaMode mode) {
    std::vector<RuleId> out;
    if (auto* tp = std::get_if<TermPtr>(&x)) {
        const SuspTerm& t = **tp;
        if (auto* a = std::get_if<SuspTerm::App>(&t.node)) {
            if (std::holds_alternative<SuspTerm::Abs>(a->fun->node))
                out.push_back(RuleId::BetaS);
            return out;
        }
        if (auto* s = std::get_if<SuspTerm::Susp>(&t.node)) {
            const auto& inner = s->term->node;
            if (std::holds_alternative<SuspTerm::Const>(inner)) {
                out.push_back(RuleId::R1);
            } else if (auto* i = std::get_if<SuspTerm::Index>(&inner)) {
                if (s->ol == 0 && std::holds_alternative<SuspEnv::Nil>(s->env->node))
                    out.push_back(RuleId::R2);
                if (std::holds_alternative<SuspEnv::Cons>(s->env->node)) {
                    if (i->i == 1)
                        out.push_back(RuleId::R3);
                    else
                        out.push_back(RuleId::R4);
                }
            } else if (std::holds_alternative<SuspTerm::App>(inner)) {
                out.push_back(RuleId::R5);
            } else if (std::holds_alternative<SuspTerm::Abs>(inner)) {
                out.push_back(RuleId::R6);
            } else if (std::holds_alternative<SuspTerm::Meta>(inner)) {
                if (mode == MetaMode::Logical) out.push_back(RuleId::R7);
            } else {
                out.push_back(RuleId::M1);
            }
            return out;
        }
        return out;
    }
    if (auto* ep = std::get_if<EnvPtr>(&x)) {
        auto* m = std::get_if<SuspEnv::Merged>(&(*ep)->node);
        if (!m) return out;
        bool e1_nil = std::holds_alternative<SuspEnv::Nil>(m->e1->node);
        auto* e1_cons = std::get_if<SuspEnv::Cons>(&m->e1->node);
        bool e2_cons = std::holds_alternative<SuspEnv::Cons>(m->e2->node);
        if (m->ol2 == 0 && std::holds_alternative<SuspEnv::Nil>(m->e2->node))
            out.push_back(RuleId::M2);
        if (e1_nil && m->nl1 == 0) out.push_back(RuleId::M3);
        if (e1_nil && m->nl1 >= 1 && e2_cons) out.push_back(RuleId::M4);
        if (e1_cons && e2_cons) {
            if (m->nl1 > e1_cons->head.level)
                out.push_back(RuleId::M5);
            else if (m->nl1 == e1_cons->head.level)
                out.push_back(RuleId::M6);
        }
        return out;
    }
    return out;
}

Expr contractum(const Expr& x, RuleId rule) {
    auto bad = [&]() -> Expr { throw RuleNotApplicable(rule_name(rule)); };
    if (auto* tp = std::get_if<TermPtr>(&x)) {
        const SuspTerm& t = **tp;
        if (rule == RuleId::BetaS) {
            auto* a = std::get_if<SuspTerm::App>(&t.node);
            if (!a) return bad();
            auto* l = std::get_if<SuspTerm::Abs>(&a->fun->node);
            if (!l) return bad();
            return Expr{ssusp(l->body, 1, 0, econs(EnvItem{a->arg, 0}, enil()))};
        }
        auto* s = std::get_if<SuspTerm::Susp>(&t.node);
        if (!s) return bad();
        switch (rule) {
        case RuleId::R1:
            if (!std::holds_alternative<SuspTerm::Const>(s->term->node)) return bad();
            return Expr{s->term};
        case RuleId::R2: {
            auto* i = std::get_if<SuspTerm::Index>(&s->term->node);
            if (!i || s->ol != 0 ||
                !std::holds_alternative<SuspEnv::Nil>(s->env->node))
                return bad();
            return Expr{sindex(checked_add(i->i, s->nl))};
        }
        case RuleId::R3: {
            auto* i = std::get_if<SuspTerm::Index>(&s->term->node);
            auto* c = std::get_if<SuspEnv::Cons>(&s->env->node);
            if (!i || i->i != 1 || !c) return bad();
            return Expr{ssusp(c->head.term, 0, checked_sub(s->nl, c->head.level),
                              enil())};
        }
        case RuleId::R4: {
            auto* i = std::get_if<SuspTerm::Index>(&s->term->node);
            auto* c = std::get_if<SuspEnv::Cons>(&s->env->node);
            if (!i || i->i <= 1 || !c) return bad();
            return Expr{ssusp(sindex(i->i - 1), checked_sub(s->ol, 1), s->nl,
                              c->tail)};
        }
        case RuleId::R5: {
            auto* a = std::get_if<SuspTerm::App>(&s->term->node);
            if (!a) return bad();
            return Expr{sapp(ssusp(a->fun, s->ol, s->nl, s->env),
                             ssusp(a->arg, s->ol, s->nl, s->env))};
        }
        case RuleId::R6: {
            auto* l = std::get_if<SuspTerm::Abs>(&s->term->node);
            if (!l) return bad();
            std::uint64_t nl1 = checked_add(s->nl, 1);
            return Expr{sabs(ssusp(l->body, checked_add(s->ol, 1), nl1,
                                   econs(EnvItem{sindex(1), nl1}, s->env)),
                             l->ann)};
        }
        case RuleId::R7:
            if (!std::holds_alternative<SuspTerm::Meta>(s->term->node)) return bad();
            return Expr{s->term};
        case RuleId::M1: {
            auto* in = std::get_if<SuspTerm::Susp>(&s->term->node);
            if (!in) return bad();
            std::uint64_t ol = checked_add(in->ol, monus(s->ol, in->nl));
            std::uint64_t nl = checked_add(s->nl, monus(in->nl, s->ol));
            return Expr{ssusp(in->term, ol, nl,
                              emerged(in->env, in->nl, s->ol, s->env))};
        }
        default:
            return bad();
        }
    }
    auto* ep = std::get_if<EnvPtr>(&x);
    if (!ep) return bad();
    auto* m = std::get_if<SuspEnv::Merged>(&(*ep)->node);
    if (!m) return bad();
    switch (rule) {
    case RuleId::M2:
        if (m->ol2 != 0 || !std::holds_alternative<SuspEnv::Nil>(m->e2->node))
            return bad();
        return Expr{m->e1};
    case RuleId::M3:
        if (m->nl1 != 0 || !std::holds_alternative<SuspEnv::Nil>(m->e1->node))
            return bad();
        return Expr{m->e2};
    case RuleId::M4: {
        auto* c2 = std::get_if<SuspEnv::Cons>(&m->e2->node);
        if (!std::holds_alternative<SuspEnv::Nil>(m->e1->node) || m->nl1 < 1 || !c2)
            return bad();
        return Expr{emerged(m->e1, checked_sub(m->nl1, 1), checked_sub(m->ol2, 1),
                            c2->tail)};
    }
    case RuleId::M5: {
        auto* c1 = std::get_if<SuspEnv::Cons>(&m->e1->node);
        auto* c2 = std::get_if<SuspEnv::Cons>(&m->e2->node);
        if (!c1 || !c2 || m->nl1 <= c1->head.level) return bad();
        return Expr{emerged(m->e1, checked_sub(m->nl1, 1), checked_sub(m->ol2, 1),
                            c2->tail)};
    }
    case RuleId::M6: {
        auto* c1 = std::get_if<SuspEnv::Cons>(&m->e1->node);
        auto* c2 = std::get_if<SuspEnv::Cons>(&m->e2->node);
        if (!c1 || !c2 || m->nl1 != c1->head.level) return bad();
        std::uint64_t n = c1->head.level;
        std::uint64_t l = c2->head.level;
        TermPtr head = ssusp(c1->head.term, m->ol2, l, m->e2);
        std::uint64_t lev = checked_add(l, monus(n, m->ol2));
        return Expr{econs(EnvItem{head, lev}, emerged(c1->tail, n, m->ol2, m->e2))};
    }
    default:
        return bad();
    }
}

} // namespace

std::vector<RuleId> applicable_rules(const Expr& x, const Position& pos,
                                     MetaMode mode) {
    return rules_at(subexpr(x, pos), mode);
}

Expr apply_rule(const Expr& x, RuleId rule, const Position& pos) {
    return replace_subexpr(x, pos, contractum(subexpr(x, pos), rule));
}

std::vector<std::pair<Position, RuleId>>
enumerate_redexes(const Expr& x, const RuleSet& rules, MetaMode mode) {
    std::vector<std::pair<Position, RuleId>> out;
    walk_positions(x, [&](const Expr& sub, const Position& pos) {
        for (RuleId r : rules_at(sub, mode))
            if (rules.contains(r)) out.emplace_back(pos, r);
        return true;
    });
    return out;
}

std::optional<std::pair<Position, RuleId>>
find_first_redex(const Expr& x, const RuleSet& rules, MetaMode mode) {
    std::optional<std::pair<Position, RuleId>> out;
    walk_positions(x, [&](const Expr& sub, const Position& pos) {
        for (RuleId r : rules_at(sub, mode)) {
            if (rules.contains(r)) {
                out = {pos, r};
                return false;
            }
        }
        return true;
    });
    return out;
}

Expr rm_normalize(const Expr& x) {
    return rm_normalize_traced(x, nullptr);
}

Expr rm_normalize_traced(const Expr& x, std::vector<TraceStep>* trace,
                         RuleSet rules, MetaMode mode) {
    Expr cur = x;
    for (std::size_t fuel = 0; fuel < kRmFuel; ++fuel) {
        auto next = find_first_redex(cur, rules, mode);
        if (!next) return cur;
        Expr after = apply_rule(cur, next->second, next->first);
        if (trace)
            trace->push_back(
                {next->second, next->first, cur, after, trace->size()});
        cur = std::move(after);
    }
    throw InternalFuelExhausted("rm normalization fuel exhausted");
}

Expr rm_normalize_random(const Expr& x, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Expr cur = x;
    for (std::size_t fuel = 0; fuel < kRmFuel; ++fuel) {
        auto redexes = enumerate_redexes(cur, rm_rules(), MetaMode::Graftable);
        if (redexes.empty()) return cur;
        std::uniform_int_distribution<std::size_t> pick(0, redexes.size() - 1);
        const auto& [pos, rule] = redexes[pick(rng)];
        cur = apply_rule(cur, rule, pos);
    }
    throw InternalFuelExhausted("rm normalization fuel exhausted");
}

namespace {

EnvPtr merge_simple(const EnvPtr& e1_in, std::uint64_t nl1, std::uint64_t ol2,
                    const EnvPtr& e2_in) {
    EnvPtr e1 = e1_in, e2 = e2_in;
    for (;;) {
        if (ol2 == 0 && std::holds_alternative<SuspEnv::Nil>(e2->node)) return e1;
        if (std::holds_alternative<SuspEnv::Nil>(e1->node)) {
            if (nl1 == 0) return e2;
            auto* c2 = std::get_if<SuspEnv::Cons>(&e2->node);
            if (!c2) throw IllFormedInputs("merge of ill-formed environments");
            nl1 -= 1;
            ol2 = checked_sub(ol2, 1);
            e2 = c2->tail;
            continue;
        }
        auto* c1 = std::get_if<SuspEnv::Cons>(&e1->node);
        if (!c1) throw IllFormedInputs("merge of ill-formed environments");
        if (nl1 > c1->head.level) {
            auto* c2 = std::get_if<SuspEnv::Cons>(&e2->node);
            if (!c2) throw IllFormedInputs("merge of ill-formed environments");
            nl1 -= 1;
            ol2 = checked_sub(ol2, 1);
            e2 = c2->tail;
            continue;
        }
        if (nl1 == c1->head.level) {
            auto* c2 = std::get_if<SuspEnv::Cons>(&e2->node);
            if (!c2) throw IllFormedInputs("merge of ill-formed environments");
            std::uint64_t n = c1->head.level;
            std::uint64_t l = c2->head.level;
            TermPtr head = ssusp(c1->head.term, ol2, l, e2);
            std::uint64_t lev = checked_add(l, monus(n, ol2));
            return econs(EnvItem{head, lev}, merge_simple(c1->tail, n, ol2, e2));
        }
        throw IllFormedInputs("merge of ill-formed environments");
    }
}

} // namespace

EnvPtr env_to_simple(const EnvPtr& e) {
    if (std::holds_alternative<SuspEnv::Nil>(e->node)) return e;
    if (auto* c = std::get_if<SuspEnv::Cons>(&e->node)) {
        EnvPtr tail = env_to_simple(c->tail);
        return tail == c->tail ? e : econs(c->head, tail);
    }
    const auto& m = std::get<SuspEnv::Merged>(e->node);
    return merge_simple(env_to_simple(m.e1), m.nl1, m.ol2, env_to_simple(m.e2));
}

NormResult full_normalize(const Expr& x, std::size_t budget, MetaMode mode) {
    NormResult out;
    out.expr = x;
    std::size_t rm_fuel = 0;
    for (;;) {
        auto next = find_first_redex(out.expr, all_rules(), mode);
        if (!next) return out;
        if (next->second == RuleId::BetaS) {
            if (out.beta_steps == budget) {
                out.exhausted = true;
                return out;
            }
            ++out.beta_steps;
        } else if (++rm_fuel > kRmFuel) {
            throw InternalFuelExhausted("rm normalization fuel exhausted");
        }
        Expr after = apply_rule(out.expr, next->second, next->first);
        out.trace.push_back(
            {next->second, next->first, out.expr, after, out.trace.size()});
        out.expr = std::move(after);
    }
}

std::optional<Hnf> hnf_decompose(const Expr& x) {
    auto* tp = std::get_if<TermPtr>(&x);
    if (!tp) return std::nullopt;
    Hnf out;
    TermPtr cur = *tp;
    while (auto* l = std::get_if<SuspTerm::Abs>(&cur->node)) {
        ++out.binders;
        cur = l->body;
    }
    std::vector<TermPtr> rev_args;
    while (auto* a = std::get_if<SuspTerm::App>(&cur->node)) {
        rev_args.push_back(a->arg);
        cur = a->fun;
    }
    if (std::holds_alternative<SuspTerm::Abs>(cur->node) ||
        std::holds_alternative<SuspTerm::Susp>(cur->node))
        return std::nullopt;
    out.head = cur;
    out.args.assign(rev_args.rbegin(), rev_args.rend());
    return out;
}

NormResult head_normalize(const Expr& x, std::size_t budget) {
    auto* root = std::get_if<TermPtr>(&x);
    if (!root) throw IllFormedInputs("head normalization expects a term");
    NormResult out;
    out.expr = x;
    std::size_t rm_fuel = 0;
    auto record = [&](RuleId rule, const Position& pos) {
        Expr after = apply_rule(out.expr, rule, pos);
        out.trace.push_back({rule, pos, out.expr, after, out.trace.size()});
        out.expr = std::move(after);
    };
    for (;;) {
        TermPtr cur = std::get<TermPtr>(out.expr);
        Position pos;
        bool stepped = false;
        for (;;) {
            if (auto* l = std::get_if<SuspTerm::Abs>(&cur->node)) {
                pos.push_back(0);
                cur = l->body;
                continue;
            }
            if (auto* a = std::get_if<SuspTerm::App>(&cur->node)) {
                if (std::holds_alternative<SuspTerm::Abs>(a->fun->node)) {
                    if (out.beta_steps == budget) {
                        out.exhausted = true;
                        return out;
                    }
                    ++out.beta_steps;
                    record(RuleId::BetaS, pos);
                    stepped = true;
                    break;
                }
                pos.push_back(0);
                cur = a->fun;
                continue;
            }
            if (auto* s = std::get_if<SuspTerm::Susp>(&cur->node)) {
                auto here = rules_at(Expr{cur}, MetaMode::Graftable);
                if (!here.empty()) {
                    if (++rm_fuel > kRmFuel)
                        throw InternalFuelExhausted(
                            "rm normalization fuel exhausted");
                    record(here.front(), pos);
                    stepped = true;
                    break;
                }
                // A stuck suspension on the spine: the index head is waiting
                // for its merged environment, so push the leftmost rm-redex
                // inside that environment instead.
                auto inner =
                    find_first_redex(Expr{s->env}, rm_rules(), MetaMode::Graftable);
                if (inner) {
                    if (++rm_fuel > kRmFuel)
                        throw InternalFuelExhausted(
                            "rm normalization fuel exhausted");
                    Position p = pos;
                    p.push_back(1);
                    p.insert(p.end(), inner->first.begin(), inner->first.end());
                    record(inner->second, p);
                    stepped = true;
                    break;
                }
                out.exhausted = true; // graftable metavariable blocks the head
                return out;
            }
            return out; // constant, metavariable, or index head: hnf reached
        }
        if (!stepped) return out;
    }
}

namespace {

TermPtr parallel_term(const TermPtr& t);
EnvPtr parallel_env(const EnvPtr& e);

TermPtr parallel_term(const TermPtr& t) {
    if (auto* a = std::get_if<SuspTerm::App>(&t->node)) {
        if (auto* l = std::get_if<SuspTerm::Abs>(&a->fun->node))
            return ssusp(parallel_term(l->body), 1, 0,
                         econs(EnvItem{parallel_term(a->arg), 0}, enil()));
        return sapp(parallel_term(a->fun), parallel_term(a->arg));
    }
    if (auto* l = std::get_if<SuspTerm::Abs>(&t->node))
        return sabs(parallel_term(l->body), l->ann);
    if (auto* s = std::get_if<SuspTerm::Susp>(&t->node))
        return ssusp(parallel_term(s->term), s->ol, s->nl, parallel_env(s->env));
    return t;
}

EnvPtr parallel_env(const EnvPtr& e) {
    if (auto* c = std::get_if<SuspEnv::Cons>(&e->node))
        return econs(EnvItem{parallel_term(c->head.term), c->head.level},
                     parallel_env(c->tail));
    if (auto* m = std::get_if<SuspEnv::Merged>(&e->node))
        return emerged(parallel_env(m->e1), m->nl1, m->ol2, parallel_env(m->e2));
    return e;
}

} // namespace

Expr parallel_beta_step(const Expr& x) {
    if (auto* t = std::get_if<TermPtr>(&x)) return Expr{parallel_term(*t)};
    if (auto* e = std::get_if<EnvPtr>(&x)) return Expr{parallel_env(*e)};
    const auto& item = std::get<EnvItem>(x);
    return Expr{EnvItem{parallel_term(item.term), item.level}};
}

namespace {

bool similar_term(const TermPtr& a, const TermPtr& b);
bool similar_env(const EnvPtr& a, const EnvPtr& b);

bool similar_item(const EnvItem& a, const EnvItem& b) {
    if (a.level == b.level && similar_term(a.term, b.term)) return true;
    auto* sa = std::get_if<SuspTerm::Susp>(&a.term->node);
    auto* sb = std::get_if<SuspTerm::Susp>(&b.term->node);
    if (!sa || !sb || sa->ol != sb->ol) return false;
    if (a.level < sa->nl || b.level < sb->nl) return false;
    if (a.level - sa->nl != b.level - sb->nl) return false;
    return similar_term(sa->term, sb->term) && similar_env(sa->env, sb->env);
}

bool similar_term(const TermPtr& a, const TermPtr& b) {
    if (a->node.index() != b->node.index()) return false;
    if (auto* ap = std::get_if<SuspTerm::App>(&a->node)) {
        const auto& bp = std::get<SuspTerm::App>(b->node);
        return similar_term(ap->fun, bp.fun) && similar_term(ap->arg, bp.arg);
    }
    if (auto* la = std::get_if<SuspTerm::Abs>(&a->node))
        return similar_term(la->body, std::get<SuspTerm::Abs>(b->node).body);
    if (auto* sa = std::get_if<SuspTerm::Susp>(&a->node)) {
        const auto& sb = std::get<SuspTerm::Susp>(b->node);
        return sa->ol == sb.ol && sa->nl == sb.nl &&
               similar_term(sa->term, sb.term) && similar_env(sa->env, sb.env);
    }
    return term_eq(a, b);
}

bool similar_env(const EnvPtr& a, const EnvPtr& b) {
    if (a->node.index() != b->node.index()) return false;
    if (std::holds_alternative<SuspEnv::Nil>(a->node)) return true;
    if (auto* ca = std::get_if<SuspEnv::Cons>(&a->node)) {
        const auto& cb = std::get<SuspEnv::Cons>(b->node);
        return similar_item(ca->head, cb.head) && similar_env(ca->tail, cb.tail);
    }
    const auto& ma = std::get<SuspEnv::Merged>(a->node);
    const auto& mb = std::get<SuspEnv::Merged>(b->node);
    return ma.nl1 == mb.nl1 && ma.ol2 == mb.ol2 && similar_env(ma.e1, mb.e1) &&
           similar_env(ma.e2, mb.e2);
}

} // namespace

bool similar(const Expr& x, const Expr& y) {
    if (x.index() != y.index()) return false;
    if (auto* t = std::get_if<TermPtr>(&x))
        return similar_term(*t, std::get<TermPtr>(y));
    if (auto* e = std::get_if<EnvPtr>(&x))
        return similar_env(*e, std::get<EnvPtr>(y));
    return similar_item(std::get<EnvItem>(x), std::get<EnvItem>(y));
}

namespace {

Expr rm_norm_fueled(const Expr& x, std::size_t fuel) {
    Expr cur = x;
    for (std::size_t k = 0; k < fuel; ++k) {
        auto next = find_first_redex(cur, rm_rules(), MetaMode::Graftable);
        if (!next) return cur;
        cur = apply_rule(cur, next->second, next->first);
    }
    throw InternalFuelExhausted("rm normalization fuel exhausted");
}

} // namespace

ConfluenceReport check_local_confluence(const Expr& x, MetaMode mode,
                                        std::size_t budget) {
    ConfluenceReport report;
    std::size_t fuel = budget == 0 ? kRmFuel : budget;
    auto redexes = enumerate_redexes(x, rm_rules(), mode);
    if (redexes.size() < 2) return report;
    Expr first = apply_rule(x, redexes[0].second, redexes[0].first);
    Expr first_nf = rm_norm_fueled(first, fuel);
    for (std::size_t k = 1; k < redexes.size(); ++k) {
        Expr other = apply_rule(x, redexes[k].second, redexes[k].first);
        Expr other_nf = rm_norm_fueled(other, fuel);
        if (!expr_eq(first_nf, other_nf)) {
            report.ok = false;
            report.successors = {first, other};
            report.normal_forms = {first_nf, other_nf};
            return report;
        }
    }
    return report;
}

AssocReport check_assoc(const EnvPtr& e1, std::uint64_t nl1, std::uint64_t ol2,
                        const EnvPtr& e2, std::uint64_t nl2, std::uint64_t ol3,
                        const EnvPtr& e3) {
    if (env_len(e2) != ol2 || env_len(e3) != ol3 || env_lev(e1) > nl1 ||
        env_lev(e2) > nl2)
        throw IllFormedInputs("environment triple violates wellformedness");
    std::uint64_t nl12 = checked_add(nl2, monus(nl1, ol2));
    std::uint64_t ol23 = checked_add(ol2, monus(ol3, nl2));
    EnvPtr lhs = emerged(emerged(e1, nl1, ol2, e2), nl12, ol3, e3);
    EnvPtr rhs = emerged(e1, nl1, ol23, emerged(e2, nl2, ol3, e3));
    AssocReport report;
    report.lhs_normal = rm_normalize(Expr{lhs});
    report.rhs_normal = rm_normalize(Expr{rhs});
    report.ok = expr_eq(report.lhs_normal, report.rhs_normal);
    return report;
}

} // namespace susp
