#pragma once

#include <stdexcept>
#include <string>

namespace amalgam {

/// Base of every error raised by the library. The CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Matrix dimensions do not fit the operation (non-square input, wrong index-list length).
class DimensionError : public Error { public: using Error::Error; };

/// A variable name is not part of the polynomial's universe, or was left unassigned.
class NameError : public Error { public: using Error::Error; };

/// Inversion of a singular matrix.
class SingularError : public Error { public: using Error::Error; };

/// Tableau or matrix shapes are incompatible.
class ShapeError : public Error { public: using Error::Error; };

class IndexError : public Error { public: using Error::Error; };

/// A configured size cap (tableau count, permutation count) would be exceeded.
class ResourceError : public Error { public: using Error::Error; };

/// Two routes that must agree did not; signals an implementation bug.
class ConsistencyError : public Error { public: using Error::Error; };

/// Random draws kept producing singular inputs.
class DegenerateInputError : public Error { public: using Error::Error; };

class DomainError : public Error { public: using Error::Error; };

class ArgumentError : public Error { public: using Error::Error; };

/// Malformed text or JSON input.
class ParseError : public Error { public: using Error::Error; };

}  // namespace amalgam
