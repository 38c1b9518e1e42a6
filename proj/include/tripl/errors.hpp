#pragma once

#include <stdexcept>
#include <string>

namespace tripl {

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Precision exhausted or a value is not determined at the requested precision.
struct PrecisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AmbiguityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IterationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SlopeNotIsolatedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct HypothesisViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct HenselError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegeneracyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NormalizationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ExtensionNeeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace tripl
