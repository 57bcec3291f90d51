#pragma once

#include <stdexcept>
#include <string>

namespace rcb {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Precondition violation (zero inversion, x = 0, wrong dimension, ...).
struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

// Operation needs the exact backend but was handed floats (or vice versa).
struct BackendError : Error {
    explicit BackendError(const std::string& what) : Error(what) {}
};

// Denominator of a fractional transform (or of T^a) vanished at the point.
struct PoleError : Error {
    explicit PoleError(const std::string& what) : Error(what) {}
};

// Point outside the certified evaluation ball of a rectifier.
struct OutOfDomainError : Error {
    explicit OutOfDomainError(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace rcb
