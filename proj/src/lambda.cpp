#include "suspension/lambda.hpp"

#include <algorithm>

#include "suspension/errors.hpp"

namespace susp {

NamedPtr nconst(std::string name) {
    return std::make_shared<NamedTerm>(NamedTerm{NamedTerm::Const{std::move(name)}});
}
NamedPtr nvar(std::string name) {
    return std::make_shared<NamedTerm>(NamedTerm{NamedTerm::Var{std::move(name)}});
}
NamedPtr napp(NamedPtr fun, NamedPtr arg) {
    return std::make_shared<NamedTerm>(
        NamedTerm{NamedTerm::App{std::move(fun), std::move(arg)}});
}
NamedPtr nabs(std::string binder, NamedPtr body, TypePtr ann) {
    return std::make_shared<NamedTerm>(
        NamedTerm{NamedTerm::Abs{std::move(binder), std::move(ann), std::move(body)}});
}

DbPtr dconst(std::string name) {
    return std::make_shared<DbTerm>(DbTerm{DbTerm::Const{std::move(name)}});
}
DbPtr dindex(std::uint64_t i) {
    if (i < 1) throw IndexUnderflow();
    return std::make_shared<DbTerm>(DbTerm{DbTerm::Index{i}});
}
DbPtr dapp(DbPtr fun, DbPtr arg) {
    return std::make_shared<DbTerm>(DbTerm{DbTerm::App{std::move(fun), std::move(arg)}});
}
DbPtr dabs(DbPtr body, TypePtr ann) {
    return std::make_shared<DbTerm>(DbTerm{DbTerm::Abs{std::move(ann), std::move(body)}});
}

bool db_eq(const DbPtr& a, const DbPtr& b) {
    if (a == b) return true;
    if (a->node.index() != b->node.index()) return false;
    if (auto* c = std::get_if<DbTerm::Const>(&a->node))
        return c->name == std::get<DbTerm::Const>(b->node).name;
    if (auto* i = std::get_if<DbTerm::Index>(&a->node))
        return i->i == std::get<DbTerm::Index>(b->node).i;
    if (auto* ap = std::get_if<DbTerm::App>(&a->node)) {
        const auto& bp = std::get<DbTerm::App>(b->node);
        return db_eq(ap->fun, bp.fun) && db_eq(ap->arg, bp.arg);
    }
    const auto& aa = std::get<DbTerm::Abs>(a->node);
    const auto& ba = std::get<DbTerm::Abs>(b->node);
    if ((aa.ann == nullptr) != (ba.ann == nullptr)) return false;
    if (aa.ann && !type_eq(aa.ann, ba.ann)) return false;
    return db_eq(aa.body, ba.body);
}

std::set<std::string> free_vars(const NamedPtr& t) {
    std::set<std::string> out;
    std::function<void(const NamedPtr&, std::vector<std::string>&)> go =
        [&](const NamedPtr& u, std::vector<std::string>& bound) {
            if (std::holds_alternative<NamedTerm::Const>(u->node)) return;
            if (auto* v = std::get_if<NamedTerm::Var>(&u->node)) {
                if (std::find(bound.begin(), bound.end(), v->name) == bound.end())
                    out.insert(v->name);
                return;
            }
            if (auto* a = std::get_if<NamedTerm::App>(&u->node)) {
                go(a->fun, bound);
                go(a->arg, bound);
                return;
            }
            const auto& l = std::get<NamedTerm::Abs>(u->node);
            bound.push_back(l.binder);
            go(l.body, bound);
            bound.pop_back();
        };
    std::vector<std::string> bound;
    go(t, bound);
    return out;
}

namespace {

std::string fresh_name(const std::set<std::string>& avoid) {
    for (std::uint64_t k = 1;; ++k) {
        std::string cand = "x" + std::to_string(k);
        if (!avoid.count(cand)) return cand;
    }
}

} // namespace

NamedPtr subst_named(const NamedPtr& t, const NamedPtr& s, const std::string& x) {
    if (std::holds_alternative<NamedTerm::Const>(t->node)) return t;
    if (auto* v = std::get_if<NamedTerm::Var>(&t->node))
        return v->name == x ? s : t;
    if (auto* a = std::get_if<NamedTerm::App>(&t->node))
        return napp(subst_named(a->fun, s, x), subst_named(a->arg, s, x));
    const auto& l = std::get<NamedTerm::Abs>(t->node);
    if (l.binder == x) return t;
    auto fvs = free_vars(s);
    if (fvs.count(l.binder)) {
        std::set<std::string> avoid = free_vars(l.body);
        avoid.insert(fvs.begin(), fvs.end());
        avoid.insert(x);
        std::string y = fresh_name(avoid);
        NamedPtr renamed = subst_named(l.body, nvar(y), l.binder);
        return nabs(y, subst_named(renamed, s, x), l.ann);
    }
    return nabs(l.binder, subst_named(l.body, s, x), l.ann);
}

DbPtr to_debruijn(const NamedPtr& t, const std::vector<std::string>& free_order) {
    std::function<DbPtr(const NamedPtr&, std::vector<std::string>&)> go =
        [&](const NamedPtr& u, std::vector<std::string>& bound) -> DbPtr {
        if (auto* c = std::get_if<NamedTerm::Const>(&u->node)) return dconst(c->name);
        if (auto* v = std::get_if<NamedTerm::Var>(&u->node)) {
            for (std::size_t d = 0; d < bound.size(); ++d)
                if (bound[bound.size() - 1 - d] == v->name)
                    return dindex(d + 1);
            for (std::size_t k = 0; k < free_order.size(); ++k)
                if (free_order[k] == v->name)
                    return dindex(bound.size() + k + 1);
            throw UnknownFreeVariable("unknown free variable: " + v->name);
        }
        if (auto* a = std::get_if<NamedTerm::App>(&u->node))
            return dapp(go(a->fun, bound), go(a->arg, bound));
        const auto& l = std::get<NamedTerm::Abs>(u->node);
        bound.push_back(l.binder);
        DbPtr body = go(l.body, bound);
        bound.pop_back();
        return dabs(body, l.ann);
    };
    std::vector<std::string> bound;
    return go(t, bound);
}

NamedPtr from_debruijn(const DbPtr& t, const std::vector<std::string>& free_order) {
    std::function<NamedPtr(const DbPtr&, std::uint64_t)> go =
        [&](const DbPtr& u, std::uint64_t depth) -> NamedPtr {
        if (auto* c = std::get_if<DbTerm::Const>(&u->node)) return nconst(c->name);
        if (auto* ix = std::get_if<DbTerm::Index>(&u->node)) {
            if (ix->i <= depth)
                return nvar("x" + std::to_string(depth - ix->i + 1));
            std::uint64_t k = ix->i - depth; // 1-based into free_order
            if (k > free_order.size()) throw DanglingIndex();
            return nvar(free_order[k - 1]);
        }
        if (auto* a = std::get_if<DbTerm::App>(&u->node))
            return napp(go(a->fun, depth), go(a->arg, depth));
        const auto& l = std::get<DbTerm::Abs>(u->node);
        std::string binder = "x" + std::to_string(depth + 1);
        return nabs(binder, go(l.body, depth + 1), l.ann);
    };
    return go(t, 0);
}

bool alpha_eq(const NamedPtr& t1, const NamedPtr& t2) {
    auto f1 = free_vars(t1);
    auto f2 = free_vars(t2);
    if (f1 != f2) return false;
    std::vector<std::string> order(f1.begin(), f1.end());
    return db_eq(to_debruijn(t1, order), to_debruijn(t2, order));
}

DbPtr db_shift(const DbPtr& t, std::int64_t delta, std::uint64_t cutoff) {
    std::function<DbPtr(const DbPtr&, std::uint64_t)> go =
        [&](const DbPtr& u, std::uint64_t c) -> DbPtr {
        if (std::holds_alternative<DbTerm::Const>(u->node)) return u;
        if (auto* ix = std::get_if<DbTerm::Index>(&u->node)) {
            if (ix->i <= c) return u;
            std::int64_t j = static_cast<std::int64_t>(ix->i) + delta;
            if (j < 1) throw IndexUnderflow();
            return dindex(static_cast<std::uint64_t>(j));
        }
        if (auto* a = std::get_if<DbTerm::App>(&u->node))
            return dapp(go(a->fun, c), go(a->arg, c));
        const auto& l = std::get<DbTerm::Abs>(u->node);
        return dabs(go(l.body, c + 1), l.ann);
    };
    return go(t, cutoff);
}

DbPtr db_beta_contract(const DbPtr& body, const DbPtr& arg) {
    // S(body; arg, #1, #2, ...): index d+1 at depth d becomes arg shifted
    // by d, larger indices drop by one.
    std::function<DbPtr(const DbPtr&, std::uint64_t)> go =
        [&](const DbPtr& u, std::uint64_t d) -> DbPtr {
        if (std::holds_alternative<DbTerm::Const>(u->node)) return u;
        if (auto* ix = std::get_if<DbTerm::Index>(&u->node)) {
            if (ix->i == d + 1) return db_shift(arg, static_cast<std::int64_t>(d), 0);
            if (ix->i > d + 1) return dindex(ix->i - 1);
            return u;
        }
        if (auto* a = std::get_if<DbTerm::App>(&u->node))
            return dapp(go(a->fun, d), go(a->arg, d));
        const auto& l = std::get<DbTerm::Abs>(u->node);
        return dabs(go(l.body, d + 1), l.ann);
    };
    return go(body, 0);
}

namespace {

bool is_db_redex(const DbPtr& t) {
    auto* a = std::get_if<DbTerm::App>(&t->node);
    return a && std::holds_alternative<DbTerm::Abs>(a->fun->node);
}

void collect_redexes(const DbPtr& t, Position& here, std::vector<Position>& out) {
    if (is_db_redex(t)) out.push_back(here);
    if (auto* a = std::get_if<DbTerm::App>(&t->node)) {
        here.push_back(0);
        collect_redexes(a->fun, here, out);
        here.back() = 1;
        collect_redexes(a->arg, here, out);
        here.pop_back();
    } else if (auto* l = std::get_if<DbTerm::Abs>(&t->node)) {
        here.push_back(0);
        collect_redexes(l->body, here, out);
        here.pop_back();
    }
}

DbPtr replace_db(const DbPtr& t, const Position& pos, std::size_t k, const DbPtr& sub) {
    if (k == pos.size()) return sub;
    int child = pos[k];
    if (auto* a = std::get_if<DbTerm::App>(&t->node)) {
        if (child == 0) return dapp(replace_db(a->fun, pos, k + 1, sub), a->arg);
        if (child == 1) return dapp(a->fun, replace_db(a->arg, pos, k + 1, sub));
    } else if (auto* l = std::get_if<DbTerm::Abs>(&t->node)) {
        if (child == 0) return dabs(replace_db(l->body, pos, k + 1, sub), l->ann);
    }
    throw BadPosition();
}

DbPtr db_at(const DbPtr& t, const Position& pos, std::size_t k) {
    if (k == pos.size()) return t;
    int child = pos[k];
    if (auto* a = std::get_if<DbTerm::App>(&t->node)) {
        if (child == 0) return db_at(a->fun, pos, k + 1);
        if (child == 1) return db_at(a->arg, pos, k + 1);
    } else if (auto* l = std::get_if<DbTerm::Abs>(&t->node)) {
        if (child == 0) return db_at(l->body, pos, k + 1);
    }
    throw BadPosition();
}

} // namespace

std::vector<Position> db_redexes(const DbPtr& t) {
    std::vector<Position> out;
    Position here;
    collect_redexes(t, here, out);
    return out;
}

DbPtr beta_step(const DbPtr& t, const Position& pos) {
    DbPtr sub = db_at(t, pos, 0);
    if (!is_db_redex(sub)) throw NotARedex();
    const auto& a = std::get<DbTerm::App>(sub->node);
    const auto& l = std::get<DbTerm::Abs>(a.fun->node);
    return replace_db(t, pos, 0, db_beta_contract(l.body, a.arg));
}

DbNormResult beta_normalize(const DbPtr& t, std::size_t budget) {
    DbPtr cur = t;
    for (std::size_t n = 0;; ++n) {
        auto rs = db_redexes(cur);
        if (rs.empty()) return {cur, n, false};
        if (n >= budget) return {cur, n, true};
        cur = beta_step(cur, rs.front());
    }
}

namespace {

// Head redex position of a non-hnf term, if any: walk through binders and
// down the application spine.
std::optional<Position> db_head_redex(const DbPtr& t) {
    Position here;
    DbPtr cur = t;
    for (;;) {
        if (auto* l = std::get_if<DbTerm::Abs>(&cur->node)) {
            here.push_back(0);
            cur = l->body;
            continue;
        }
        if (auto* a = std::get_if<DbTerm::App>(&cur->node)) {
            if (std::holds_alternative<DbTerm::Abs>(a->fun->node)) return here;
            here.push_back(0);
            cur = a->fun;
            continue;
        }
        return std::nullopt;
    }
}

} // namespace

DbNormResult db_head_normalize(const DbPtr& t, std::size_t budget) {
    DbPtr cur = t;
    for (std::size_t n = 0;; ++n) {
        auto pos = db_head_redex(cur);
        if (!pos) return {cur, n, false};
        if (n >= budget) return {cur, n, true};
        cur = beta_step(cur, *pos);
    }
}

} // namespace susp
