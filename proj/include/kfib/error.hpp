#pragma once

#include <stdexcept>
#include <string>

namespace kfib {

/// Base class for every failure this library signals deliberately.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A divisibility-checked division did not come out exact. Outside of the
/// deliberate erratum probes this always means a falsified formula or a bug,
/// never a value to be rounded.
struct InexactDivision : Error {
    using Error::Error;
};

/// The inverse of a matrix is not representable with integer numerators over
/// a power-of-two denominator.
struct NotInvertibleExactly : Error {
    using Error::Error;
};

/// A matrix handed to generic_power does not satisfy the characteristic
/// relation it was claimed to satisfy.
struct RelationViolated : Error {
    using Error::Error;
};

/// A basis-change matrix for conjugate_fixture must have determinant +1 or -1
/// and scale 0.
struct NotUnimodular : Error {
    using Error::Error;
};

/// Index outside the window where the floating-point cross-check is reliable.
struct IndexTooLarge : Error {
    using Error::Error;
};

/// Two independent evaluation routes that must agree did not.
struct CrossCheckFailed : Error {
    using Error::Error;
};

}  // namespace kfib
