#pragma once

#include <stdexcept>
#include <string>

namespace qshuffle {

// Error hierarchy. Every failure mode of the library surfaces as one of
// these; CLI maps evaluation errors to exit code 1 and usage errors to 2.

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Denominator of a parameter fraction vanishes at the evaluation point.
struct DenominatorVanishes : Error {
    using Error::Error;
};

// Generic-mode context admits q1^a q2^b = 1 within the guard bound, or a
// torsion-mode context fails its defining identity / minimality.
struct GenericityViolation : Error {
    GenericityViolation(const std::string& msg, int a_, int b_)
        : Error(msg), a(a_), b(b_) {}
    int a = 0;
    int b = 0;
};

struct ArityMismatch : Error {
    using Error::Error;
};

// Two coordinates of an evaluation point coincide (pole of 1/Vandermonde).
struct DistinctnessViolation : Error {
    using Error::Error;
};

struct ZeroCoordinate : Error {
    using Error::Error;
};

// Internal consistency failure: a division that is exact by construction
// left a remainder. Signals an implementation bug, never user input.
struct InexactDivision : Error {
    using Error::Error;
};

// Two grid vertices map to the same coordinate under the current context.
struct CoordinateCollision : Error {
    using Error::Error;
};

// rewrite_step called on a position that is already in normal form.
struct NotApplicable : Error {
    using Error::Error;
};

// Rewriting exhausted its step budget without reaching normal form.
struct Divergence : Error {
    using Error::Error;
};

// Operation requires an admissible grid subset (common zero) and got none.
struct NotAdmissible : Error {
    using Error::Error;
};

// A multiplicity condition failed on a sampled generator; carries enough
// context to reproduce the witness.
struct ConditionFailure : Error {
    using Error::Error;
};

struct MalformedPath : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace qshuffle
