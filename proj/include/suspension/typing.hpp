#pragma once

// Simple types over de Bruijn and suspension terms, including the
// environment judgment ctx |- e =nl=> ctx'.

#include "suspension/lambda.hpp"
#include "suspension/syntax.hpp"
#include "suspension/types.hpp"

namespace susp {

TypePtr typecheck_db(const Context& ctx, const Signature& sig, const DbPtr& t);
TypePtr typecheck_susp(const Context& ctx, const Signature& sig, const TermPtr& t);
Context infer_env(const Context& ctx, const Signature& sig, const EnvPtr& e,
                  std::uint64_t nl);

} // namespace susp
