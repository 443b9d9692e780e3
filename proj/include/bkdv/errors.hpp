#pragma once

#include <stdexcept>
#include <string>

namespace bkdv {

struct AlgebraError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionNotExact : AlgebraError {
    using AlgebraError::AlgebraError;
};
struct NonInvertibleDenominator : AlgebraError {
    using AlgebraError::AlgebraError;
};
struct NotExact : AlgebraError {
    using AlgebraError::AlgebraError;
};
struct DecompositionFailure : AlgebraError {
    using AlgebraError::AlgebraError;
};
struct HalfPowerResidue : AlgebraError {
    using AlgebraError::AlgebraError;
};
struct NonzeroConstantTerm : AlgebraError {
    using AlgebraError::AlgebraError;
};
struct SingularDiagonal : AlgebraError {
    using AlgebraError::AlgebraError;
};
struct NonzeroVGradient : AlgebraError {
    using AlgebraError::AlgebraError;
};
struct GradientMismatch : AlgebraError {
    using AlgebraError::AlgebraError;
};
struct ClosedPartContaminated : AlgebraError {
    using AlgebraError::AlgebraError;
};
struct OracleMismatch : AlgebraError {
    using AlgebraError::AlgebraError;
};
struct RoundtripFailure : AlgebraError {
    using AlgebraError::AlgebraError;
};
struct CrossCheckMismatch : AlgebraError {
    using AlgebraError::AlgebraError;
};
struct TruncationExceeded : AlgebraError {
    using AlgebraError::AlgebraError;
};
struct IntegrabilityFailure : AlgebraError {
    using AlgebraError::AlgebraError;
};
struct ConvergenceFailure : AlgebraError {
    using AlgebraError::AlgebraError;
};
struct UnknownExpr : AlgebraError {
    using AlgebraError::AlgebraError;
};
struct ParseError : AlgebraError {
    using AlgebraError::AlgebraError;
};

} // namespace bkdv
