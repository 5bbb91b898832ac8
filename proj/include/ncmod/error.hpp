#pragma once

#include <stdexcept>
#include <string>

namespace ncmod {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Incompatible matrix/vector shapes or element counts.
class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& what) : Error(what) {}
};

/// Malformed textual input (rational strings, element strings, polynomials).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

/// Operation outside its mathematical domain: division by zero, unknown
/// algebra, mixing elements of different algebras, tensor operations over a
/// nonassociative algebra.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

/// Structurally invalid input file (bad JSON, bad schema, bad constants).
class FileError : public Error {
public:
    explicit FileError(const std::string& what) : Error(what) {}
};

} // namespace ncmod
