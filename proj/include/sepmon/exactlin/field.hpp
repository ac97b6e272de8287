#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sepmon::exactlin {

/// Raised when two values from different coefficient fields meet.
class FieldMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised on non-conformable matrix shapes.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The coefficient field: either the rationals or a prime field F_p.
///
/// Primes are limited to p < 2^31 so that a product of two residues fits
/// in 64 bits.
class Field {
 public:
  constexpr Field() = default;

  static constexpr Field rationals() { return Field{}; }
  static Field prime(std::uint32_t p);

  /// Parses "q" (or "Q") and "fp:P".
  static Field parse(std::string_view text);

  constexpr bool is_rational() const { return p_ == 0; }
  constexpr std::uint32_t characteristic() const { return p_; }

  /// "Q" or "F_p".
  std::string name() const;
  /// Inverse of parse(): "q" or "fp:p".
  std::string spec() const;

  friend constexpr bool operator==(Field a, Field b) { return a.p_ == b.p_; }

 private:
  friend class Scalar;
  explicit constexpr Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

void require_same_field(Field a, Field b, const char* where);

}  // namespace sepmon::exactlin
