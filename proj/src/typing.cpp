#include "suspension/typing.hpp"

#include "suspension/errors.hpp"

namespace susp {

TypePtr typecheck_db(const Context& ctx, const Signature& sig, const DbPtr& t) {
    if (auto* c = std::get_if<DbTerm::Const>(&t->node)) {
        auto it = sig.find(c->name);
        if (it == sig.end()) throw UnknownConstant(c->name);
        return it->second;
    }
    if (auto* i = std::get_if<DbTerm::Index>(&t->node)) {
        if (i->i > ctx.size()) throw UnboundIndex("#" + std::to_string(i->i));
        return ctx[i->i - 1];
    }
    if (auto* a = std::get_if<DbTerm::App>(&t->node)) {
        TypePtr f = typecheck_db(ctx, sig, a->fun);
        TypePtr x = typecheck_db(ctx, sig, a->arg);
        auto* arrow = std::get_if<SimpleType::Arrow>(&f->node);
        if (!arrow || !type_eq(arrow->dom, x))
            throw ApplicationMismatch("applied " + show_type(f) + " to " +
                                      show_type(x));
        return arrow->cod;
    }
    const auto& l = std::get<DbTerm::Abs>(t->node);
    if (!l.ann) throw MissingAnnotation();
    Context extended;
    extended.reserve(ctx.size() + 1);
    extended.push_back(l.ann);
    extended.insert(extended.end(), ctx.begin(), ctx.end());
    return tyarrow(l.ann, typecheck_db(extended, sig, l.body));
}

TypePtr typecheck_susp(const Context& ctx, const Signature& sig, const TermPtr& t) {
    if (auto* c = std::get_if<SuspTerm::Const>(&t->node)) {
        auto it = sig.find(c->name);
        if (it == sig.end()) throw UnknownConstant(c->name);
        return it->second;
    }
    if (std::holds_alternative<SuspTerm::Meta>(t->node))
        throw MetaVarNotTypeable();
    if (auto* i = std::get_if<SuspTerm::Index>(&t->node)) {
        if (i->i > ctx.size()) throw UnboundIndex("#" + std::to_string(i->i));
        return ctx[i->i - 1];
    }
    if (auto* a = std::get_if<SuspTerm::App>(&t->node)) {
        TypePtr f = typecheck_susp(ctx, sig, a->fun);
        TypePtr x = typecheck_susp(ctx, sig, a->arg);
        auto* arrow = std::get_if<SimpleType::Arrow>(&f->node);
        if (!arrow || !type_eq(arrow->dom, x))
            throw ApplicationMismatch("applied " + show_type(f) + " to " +
                                      show_type(x));
        return arrow->cod;
    }
    if (auto* l = std::get_if<SuspTerm::Abs>(&t->node)) {
        if (!l->ann) throw MissingAnnotation();
        Context extended;
        extended.reserve(ctx.size() + 1);
        extended.push_back(l->ann);
        extended.insert(extended.end(), ctx.begin(), ctx.end());
        return tyarrow(l->ann, typecheck_susp(extended, sig, l->body));
    }
    const auto& s = std::get<SuspTerm::Susp>(t->node);
    if (env_len(s.env) != s.ol || env_lev(s.env) > s.nl)
        throw IllFormedInputs("suspension violates wellformedness");
    Context inner = infer_env(ctx, sig, s.env, s.nl);
    return typecheck_susp(inner, sig, s.term);
}

Context infer_env(const Context& ctx, const Signature& sig, const EnvPtr& e,
                  std::uint64_t nl) {
    if (std::holds_alternative<SuspEnv::Nil>(e->node)) {
        if (nl == 0) return ctx;
        if (ctx.empty()) throw ContextUnderflow();
        return infer_env(Context(ctx.begin() + 1, ctx.end()), sig, e, nl - 1);
    }
    if (auto* c = std::get_if<SuspEnv::Cons>(&e->node)) {
        if (nl > c->head.level) {
            if (ctx.empty()) throw ContextUnderflow();
            return infer_env(Context(ctx.begin() + 1, ctx.end()), sig, e, nl - 1);
        }
        if (nl < c->head.level)
            throw EnvJudgmentFailure("entry level exceeds the environment level");
        TypePtr a = typecheck_susp(ctx, sig, c->head.term);
        Context tail = infer_env(ctx, sig, c->tail, nl);
        Context out;
        out.reserve(tail.size() + 1);
        out.push_back(a);
        out.insert(out.end(), tail.begin(), tail.end());
        return out;
    }
    const auto& m = std::get<SuspEnv::Merged>(e->node);
    std::uint64_t drop = monus(m.nl1, m.ol2);
    if (nl < drop)
        throw EnvJudgmentFailure("merged environment level too small");
    Context mid = infer_env(ctx, sig, m.e2, nl - drop);
    return infer_env(mid, sig, m.e1, m.nl1);
}

} // namespace susp
