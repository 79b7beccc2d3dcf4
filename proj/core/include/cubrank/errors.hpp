#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cubrank {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Argument has norm divisible by 3 where a unit-normalized element is required.
class NonCoprimeToThreeError : public Error {
public:
    using Error::Error;
};

/// Rational prime is not split (not congruent to 1 mod 3).
class NotSplitError : public Error {
public:
    using Error::Error;
};

/// Rational argument expected to be prime is composite.
class NotPrimeError : public Error {
public:
    using Error::Error;
};

/// Residue-symbol modulus is not primary or has norm divisible by 3.
class InvalidModulusError : public Error {
public:
    using Error::Error;
};

/// Prime does not divide the conductor of the field in question.
class NotRamifiedError : public Error {
public:
    using Error::Error;
};

/// Index vectors live over different (p, k).
class DimensionMismatchError : public Error {
public:
    using Error::Error;
};

/// Exhaustive enumeration requested beyond its supported size.
class TooLargeError : public Error {
public:
    using Error::Error;
};

/// Integer is not a squarefree product of primes congruent to 1 mod 3 and/or 3.
class InadmissibleDError : public Error {
public:
    using Error::Error;
};

/// An internal contract failed; indicates an implementation bug, never bad data.
class InternalInvariantError : public Error {
public:
    using Error::Error;
};

/// Malformed input file; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Filesystem read/write failure.
class IoError : public Error {
public:
    using Error::Error;
};

/// A reference-table row cannot be aligned to a unique field.
class AmbiguousMatchError : public Error {
public:
    using Error::Error;
};

}  // namespace cubrank
