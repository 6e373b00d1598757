#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>

namespace onecob {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad documents, broken invariants, incompatible boundaries.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A matrix that had to be invertible is not.
class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

// A requested matrix would exceed the configured cell cap.
class SizeCapError : public Error {
 public:
  using Error::Error;
};

// Default cap on materialized matrix cells (rows * cols).
inline constexpr std::uint64_t kDefaultMaxCells = std::uint64_t{1} << 24;

// base^exp, throwing SizeCapError if the result would exceed cap.
std::uint64_t checked_pow(std::uint64_t base, std::size_t exp, std::uint64_t cap);

// a*b with the same guard.
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, std::uint64_t cap);

}  // namespace onecob
