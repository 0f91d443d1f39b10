#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace susp {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define SUSP_DEFINE_ERROR(NAME)                                               \
    struct NAME : Error {                                                     \
        explicit NAME(const std::string& msg = #NAME) : Error(msg) {}         \
    }

SUSP_DEFINE_ERROR(UnknownFreeVariable);
SUSP_DEFINE_ERROR(DanglingIndex);
SUSP_DEFINE_ERROR(IndexUnderflow);
SUSP_DEFINE_ERROR(NotARedex);
SUSP_DEFINE_ERROR(BadPosition);
SUSP_DEFINE_ERROR(RuleNotApplicable);
SUSP_DEFINE_ERROR(InternalFuelExhausted);
SUSP_DEFINE_ERROR(NotSimple);
SUSP_DEFINE_ERROR(LevelsOverflow);
SUSP_DEFINE_ERROR(UnboundIndex);
SUSP_DEFINE_ERROR(UnknownConstant);
SUSP_DEFINE_ERROR(ApplicationMismatch);
SUSP_DEFINE_ERROR(MissingAnnotation);
SUSP_DEFINE_ERROR(ContextUnderflow);
SUSP_DEFINE_ERROR(LevelMismatch);
SUSP_DEFINE_ERROR(EnvJudgmentFailure);
SUSP_DEFINE_ERROR(MetaVarNotTypeable);
SUSP_DEFINE_ERROR(IllFormedInputs);
SUSP_DEFINE_ERROR(LevelViolation);
SUSP_DEFINE_ERROR(PatternNotFound);
SUSP_DEFINE_ERROR(SigmaFuelExhausted);

#undef SUSP_DEFINE_ERROR

struct ParseError : Error {
    std::size_t line;
    std::size_t col;
    ParseError(const std::string& msg, std::size_t line_, std::size_t col_)
        : Error(msg + " at " + std::to_string(line_) + ":" + std::to_string(col_)),
          line(line_), col(col_) {}
};

// Checked arithmetic on 64-bit levels. Rewriting only ever adds small
// increments, so an overflow means a malformed input or an engine bug.
inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    if (a > UINT64_MAX - b) throw LevelsOverflow();
    return a + b;
}

inline std::uint64_t checked_sub(std::uint64_t a, std::uint64_t b) {
    if (b > a) throw LevelsOverflow("checked_sub underflow");
    return a - b;
}

// Truncated subtraction (monus).
inline std::uint64_t monus(std::uint64_t a, std::uint64_t b) {
    return a > b ? a - b : 0;
}

} // namespace susp
