#pragma once

#include <stdexcept>
#include <string>

namespace pradius {

// Base class for everything this library throws on bad input or blown limits.
// Each concrete type corresponds to one contract violation so tests can catch
// precisely the failure they provoked.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// ---- poset construction / queries ----------------------------------------

// Cover/relation closure produced x <= y and y <= x for distinct x, y.
struct CycleError : Error {
    using Error::Error;
};

// An element label fell outside 1..n.
struct RangeError : Error {
    using Error::Error;
};

// An adjacency matrix failed reflexivity, antisymmetry or transitivity.
struct NotAPartialOrder : Error {
    using Error::Error;
};

// Induced subposet requested on the empty set.
struct EmptyIdeal : Error {
    using Error::Error;
};

// ---- vectors / codes -------------------------------------------------------

struct LengthMismatch : Error {
    using Error::Error;
};

struct ModulusMismatch : Error {
    using Error::Error;
};

// The field modulus must be a prime.
struct NotPrime : Error {
    using Error::Error;
};

// Generator rows are linearly dependent (or k > n).
struct InvalidGenerator : Error {
    using Error::Error;
};

// Codeword enumeration would exceed the configured cap.
struct CapExceeded : Error {
    using Error::Error;
};

// Operation needs k >= 1.
struct ZeroDimensionalCode : Error {
    using Error::Error;
};

// Packing radius of the zero vector is undefined.
struct ZeroVector : Error {
    using Error::Error;
};

// ---- partition solvers -----------------------------------------------------

struct EmptyList : Error {
    using Error::Error;
};

// Brute-force enumeration refused (instance too large for 2^n scan).
struct TooLarge : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

// ---- signed-entry matrices -------------------------------------------------

// Vector combination would merge two columns that already share a committed
// element on opposite sides.
struct OverlappingCommitments : Error {
    using Error::Error;
};

struct TooFewColumns : Error {
    using Error::Error;
};

struct EmptyMatrix : Error {
    using Error::Error;
};

// Exhaustive partition enumeration refused (more than 24 maximal elements).
struct TooManyMaximal : Error {
    using Error::Error;
};

// Radius-preserving matrix edits validate their preconditions.
struct NotNullRow : Error {
    using Error::Error;
};

struct NotDominated : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

// ---- text formats ----------------------------------------------------------

struct ParseError : Error {
    using Error::Error;
};

}  // namespace pradius
