#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "sepmon/exactlin/field.hpp"

namespace sepmon::exactlin {

/// An exact scalar: a rational number or a residue modulo a prime.
///
/// Rationals are kept in lowest terms with a positive denominator. Values
/// whose numerator and denominator fit in 62 bits live inline; anything
/// larger is promoted to a shared, immutable GMP rational and demoted
/// again as soon as it fits.
class Scalar {
 public:
  /// Rational zero.
  Scalar() = default;

  static Scalar zero(Field f);
  static Scalar one(Field f);
  static Scalar from_int(Field f, std::int64_t v);
  /// Rational num/den; den must be non-zero.
  static Scalar fraction(std::int64_t num, std::int64_t den);
  static Scalar from_mpq(const mpq_class& q);
  /// Accepts "a" or "a/b" (decimal integers, arbitrary size).
  static Scalar parse(Field f, std::string_view text);

  Field field() const;

  bool is_zero() const { return num_ == 0 && !big_; }
  bool is_one() const;
  /// Rationals: denominator 1. Prime-field values are always integral.
  bool is_integer() const;
  /// Sign of a rational (-1, 0, 1); prime-field values report 0 or 1.
  int sign() const;

  Scalar operator-() const;
  Scalar inverse() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Rationals only.
  mpq_class to_mpq() const;
  /// Prime fields only: representative in 0..p-1.
  std::uint64_t residue() const;

  std::string to_string() const;
  std::size_t hash() const;

  /// Integer gcd of two integral rationals (non-negative result).
  static Scalar gcd(const Scalar& a, const Scalar& b);
  /// Exact quotient of two integral rationals where b divides a.
  static Scalar exact_div(const Scalar& a, const Scalar& b);

  /// Absolute value comparison helper for pivot selection (rationals);
  /// returns a coarse size class, 0 for zero.
  std::size_t size_class() const;

 private:
  static Scalar normalize_big(mpq_class q);
  static Scalar small(std::int64_t num, std::int64_t den);
  bool is_fp() const { return den_ < 0; }
  std::uint64_t p() const { return static_cast<std::uint64_t>(-den_); }

  // Rational: num_/den_ with den_ > 0, or big_ when set.
  // Prime field: num_ in [0, p), den_ = -p.
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

}  // namespace sepmon::exactlin
