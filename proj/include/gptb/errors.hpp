#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gptb {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact and float scalars met in one expression.
class ScalarModeError : public Error {
public:
    using Error::Error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

/// H-rep vertex enumeration detected a recession direction.
class UnboundedError : public Error {
public:
    using Error::Error;
};

/// Affine-map reconstruction failure; pair_index is the offending
/// source/image pair when the failure is an inconsistency, -1 otherwise.
class AffineMapError : public Error {
public:
    explicit AffineMapError(const std::string& what, std::ptrdiff_t pair = -1)
        : Error(what), pair_index(pair) {}
    std::ptrdiff_t pair_index;
};

class EnumerationCapError : public Error {
public:
    using Error::Error;
};

}  // namespace gptb
