#pragma once

#include <stdexcept>
#include <string>

namespace sympoly {

// Error taxonomy. Precondition violations derive from std::domain_error,
// iteration/optimization breakdowns from std::runtime_error, and internal
// consistency alarms from std::logic_error.

struct NotAContraction : std::domain_error {
    using std::domain_error::domain_error;
};

struct SingularResolvent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RowColumnNotContractive : std::domain_error {
    using std::domain_error::domain_error;
};

struct NoConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PoleAtZ : std::domain_error {
    using std::domain_error::domain_error;
};

struct GuardViolated : std::domain_error {
    using std::domain_error::domain_error;
};

struct QOnCircle : std::domain_error {
    using std::domain_error::domain_error;
};

struct ConstructionFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateDenominator : std::domain_error {
    using std::domain_error::domain_error;
};

struct PoleHit : std::domain_error {
    using std::domain_error::domain_error;
};

struct NotInKn : std::domain_error {
    using std::domain_error::domain_error;
};

struct DetMismatch : std::domain_error {
    using std::domain_error::domain_error;
};

struct ClosedFormMismatch : std::logic_error {
    using std::logic_error::logic_error;
};

struct ParityMismatch : std::domain_error {
    using std::domain_error::domain_error;
};

struct UnknownSuite : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NonFiniteInput : std::domain_error {
    using std::domain_error::domain_error;
};

} // namespace sympoly
