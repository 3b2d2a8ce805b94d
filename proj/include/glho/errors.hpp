#pragma once

#include <stdexcept>
#include <string>

namespace glho {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed textual or JSON input.
struct ParseError : Error {
    using Error::Error;
};

/// A weight that violates dominance or shape constraints.
struct InvalidWeight : Error {
    using Error::Error;
};

/// Block coordinates requested for a typical (atypicality 0) weight.
struct TypicalWeight : Error {
    using Error::Error;
};

/// Operation requires n = 1 (a GL(m|1) weight).
struct WrongShape : Error {
    using Error::Error;
};

/// Indecomposable has no Kac or anti-Kac flag (odd-length R/B).
struct NoFlag : Error {
    using Error::Error;
};

/// Suspension is undefined on this summand (even-length R with k != 0).
struct UnsupportedShift : Error {
    using Error::Error;
};

/// Hom space outside the computed domain (mixed even-R configurations).
struct UnsupportedHom : Error {
    using Error::Error;
};

/// Source/target disagreement when composing morphisms.
struct CompositionMismatch : Error {
    using Error::Error;
};

/// Basis arrow violating the existence rule (source < target or parity).
struct InvalidMorphism : Error {
    using Error::Error;
};

/// Series labels have no block key attached.
struct UnknownBlock : Error {
    using Error::Error;
};

/// Partition has more rows than the rank allows.
struct TooManyRows : Error {
    using Error::Error;
};

}  // namespace glho
