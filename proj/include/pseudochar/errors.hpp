#pragma once

#include <stdexcept>
#include <string>

namespace pseudochar {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Operands come from different backends (rational vs residue, matrix vs word, ...).
class BackendMismatch : public Error {
   public:
    using Error::Error;
};

/// Residues with different moduli were combined.
class ModulusMismatch : public Error {
   public:
    using Error::Error;
};

/// Matrix sizes or partial-bijection shapes disagree.
class DimensionMismatch : public Error {
   public:
    using Error::Error;
};

/// An inverse was requested that does not exist in the scalar ring.
class NotInvertible : public Error {
   public:
    using Error::Error;
};

/// A combinatorial cap or term budget would be exceeded.
class BudgetExceeded : public Error {
   public:
    using Error::Error;
};

/// A homomorphism was applied to a word containing an unassigned letter.
class UnknownLetter : public Error {
   public:
    using Error::Error;
};

/// Malformed text input (matrix files, group tables, config files).
class ParseError : public Error {
   public:
    using Error::Error;
};

/// An operation's documented precondition does not hold.
class PreconditionFailed : public Error {
   public:
    using Error::Error;
};

}  // namespace pseudochar
