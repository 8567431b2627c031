#pragma once

#include <stdexcept>
#include <string>

namespace secant {

// Base class for all numerical failures raised by this library. Invalid
// arguments (precondition violations) use std::invalid_argument instead.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An iterative method ran out of its budget before meeting tolerance.
class NonConvergence : public Error {
public:
    using Error::Error;
};

// find_root was given endpoints that do not bracket a sign change.
class InvalidBracket : public Error {
public:
    using Error::Error;
};

// The radial solution has not decayed at r_max.
class DomainTooSmall : public Error {
public:
    using Error::Error;
};

// A sine transform was requested at a wavenumber the grid cannot resolve.
class AliasedTransform : public Error {
public:
    using Error::Error;
};

// The momentum tail decays too slowly for the requested integral to exist.
class DivergentTail : public Error {
public:
    using Error::Error;
};

// More than one sign change was found while scanning for a root that the
// defining equation is supposed to determine uniquely.
class MultipleRoots : public Error {
public:
    using Error::Error;
};

// Masses below the supported range are rejected rather than extrapolated.
class MassTooSmall : public Error {
public:
    using Error::Error;
};

// A secant slope outside (0, 1/(2m)) has no second kinetic crossing.
class InvalidBeta : public Error {
public:
    using Error::Error;
};

// No reference value exists for the requested mass.
class UnsupportedMass : public Error {
public:
    using Error::Error;
};

}  // namespace secant
