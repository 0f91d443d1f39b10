#pragma once

// Termination machinery: internal embedding potential mu, the eta_i size
// family, the essence translation into first-order terms, and the
// lexicographic recursive path ordering used to certify rm-rule decrease.

#include <cstdint>
#include <memory>
#include <string>
#include <variant>

#include "suspension/syntax.hpp"

namespace susp {

struct FOTerm;
using FOPtr = std::shared_ptr<const FOTerm>;

struct FOTerm {
    struct Star {};
    struct Lam {
        FOPtr arg;
    };
    struct AppF {
        FOPtr a;
        FOPtr b;
    };
    struct ConsF {
        FOPtr a;
        FOPtr b;
    };
    struct S {
        std::uint64_t i; // >= 1
        FOPtr a;
        FOPtr b;
    };
    std::variant<Star, Lam, AppF, ConsF, S> node;
};

FOPtr fstar();
FOPtr flam(FOPtr arg);
FOPtr fapp(FOPtr a, FOPtr b);
FOPtr fcons(FOPtr a, FOPtr b);
FOPtr fs(std::uint64_t i, FOPtr a, FOPtr b);

bool fo_eq(const FOPtr& a, const FOPtr& b);
std::string show_fo(const FOPtr& t);

std::uint64_t mu(const Expr& x);
std::uint64_t eta(std::uint64_t i, const Expr& x);
FOPtr essence(const Expr& x);

bool lrpo_gt(const FOPtr& a, const FOPtr& b);
bool expr_gg(const Expr& x, const Expr& y);

} // namespace susp
