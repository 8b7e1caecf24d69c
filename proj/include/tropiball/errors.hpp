#pragma once

#include <stdexcept>
#include <string>

namespace tropiball {

// Base class for all domain errors. `code()` is a stable machine-readable
// identifier used by the CLI when emitting JSON errors.
class TropicalError : public std::runtime_error {
public:
    TropicalError(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define TROPIBALL_DECLARE_ERROR(Name)                                   \
    class Name : public TropicalError {                                 \
    public:                                                             \
        explicit Name(const std::string& msg) : TropicalError(#Name, msg) {} \
    }

TROPIBALL_DECLARE_ERROR(InvalidPoint);
TROPIBALL_DECLARE_ERROR(DimensionError);
TROPIBALL_DECLARE_ERROR(NotASimplex);
TROPIBALL_DECLARE_ERROR(DegenerateSimplex);
TROPIBALL_DECLARE_ERROR(NoTrunk);
TROPIBALL_DECLARE_ERROR(TooFewVertices);
TROPIBALL_DECLARE_ERROR(InsufficientSamples);
TROPIBALL_DECLARE_ERROR(InvalidStart);
TROPIBALL_DECLARE_ERROR(DegenerateBall);
TROPIBALL_DECLARE_ERROR(ParseError);

#undef TROPIBALL_DECLARE_ERROR

} // namespace tropiball
