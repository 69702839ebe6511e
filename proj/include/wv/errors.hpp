/*
 * errors.hpp
 * ----------
 * Error types shared by the whole library.  Input and precondition
 * problems are runtime errors; InvariantViolation signals a bug in the
 * library itself and is never raised on well-formed input.
 */
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wv {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IndexOutOfRange : Error {
  using Error::Error;
};

struct IndexOverflow : Error {
  using Error::Error;
};

struct KindMismatch : Error {
  using Error::Error;
};

struct ZeroElement : Error {
  using Error::Error;
};

struct ZeroGenerator : Error {
  using Error::Error;
};

struct NotHomogeneous : Error {
  using Error::Error;
};

struct NotReducible : Error {
  using Error::Error;
};

struct PreconditionViolated : Error {
  using Error::Error;
};

struct UnsupportedKind : Error {
  using Error::Error;
};

struct IterationBudgetExceeded : Error {
  using Error::Error;
};

struct ResourceLimit : Error {
  using Error::Error;
};

struct InsufficientData : Error {
  using Error::Error;
};

/// Parse failure; `position` is a 1-based character offset into the input.
struct ParseError : Error {
  std::size_t position;
  ParseError(const std::string& what, std::size_t pos)
      : Error(what + " at offset " + std::to_string(pos)), position(pos) {}
};

struct InvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

// Checked 64-bit index arithmetic.  Generator indices never wrap.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw IndexOverflow("index addition overflow");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw IndexOverflow("index subtraction overflow");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw IndexOverflow("index multiplication overflow");
  return r;
}

inline std::int64_t checked_neg(std::int64_t a) { return checked_sub(0, a); }

inline std::int64_t checked_abs(std::int64_t a) { return a < 0 ? checked_neg(a) : a; }

}  // namespace wv
