#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nesto {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range argument.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Text that could not be parsed. `position` is a byte offset, or an item
/// index when the syntax was fine but the content was not.
class ParseError : public InvalidInput {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InvalidInput(what + " (at position " + std::to_string(position) + ")"),
        detail_(what),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }
  /// The message without the position suffix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string detail_;
  std::size_t position_;
};

/// A family violating the union-closure condition of building sets.
class NotABuildingSet : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Problem size beyond what an exhaustive routine accepts.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Exact integer result that does not fit in 64 bits.
class OverflowError : public Error {
 public:
  using Error::Error;
};

using Coeff = std::int64_t;

inline Coeff checked_add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline Coeff checked_sub(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline Coeff checked_mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

inline void require_capacity(bool ok, const std::string& what) {
  if (!ok) throw CapacityError(what);
}

}  // namespace nesto
