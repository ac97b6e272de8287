#include "sepmon/exactlin/scalar.hpp"

#include <numeric>
#include <stdexcept>

namespace sepmon::exactlin {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kLimit = std::int64_t{1} << 62;

bool fits(i128 v) { return v > -kLimit && v < kLimit; }

std::uint64_t uabs(std::int64_t v) {
  return v < 0 ? static_cast<std::uint64_t>(-v) : static_cast<std::uint64_t>(v);
}

u128 uabs128(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool mpz_small(const mpz_class& z) { return mpz_sizeinbase(z.get_mpz_t(), 2) <= 62; }

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

[[noreturn]] void mixed_fields(const char* op) {
  throw FieldMismatch(std::string("scalar ") + op + ": operands from different fields");
}

}  // namespace

Scalar Scalar::small(std::int64_t num, std::int64_t den) {
  Scalar s;
  s.num_ = num;
  s.den_ = den;
  return s;
}

Scalar Scalar::normalize_big(mpq_class q) {
  if (mpz_small(q.get_num()) && mpz_small(q.get_den())) {
    return small(q.get_num().get_si(), q.get_den().get_si());
  }
  Scalar s;
  s.big_ = std::make_shared<const mpq_class>(std::move(q));
  return s;
}

Scalar Scalar::zero(Field f) { return from_int(f, 0); }
Scalar Scalar::one(Field f) { return from_int(f, 1); }

Scalar Scalar::from_int(Field f, std::int64_t v) {
  if (f.is_rational()) {
    if (fits(v)) return small(v, 1);
    return normalize_big(mpq_class(mpz_class(static_cast<long>(v))));
  }
  auto p = static_cast<std::int64_t>(f.characteristic());
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return small(r, -p);
}

Scalar Scalar::fraction(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("zero denominator");
  mpq_class q(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  q.canonicalize();
  return normalize_big(std::move(q));
}

Scalar Scalar::from_mpq(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return normalize_big(std::move(c));
}

Scalar Scalar::parse(Field f, std::string_view text) {
  std::string t(text);
  mpq_class q;
  if (q.set_str(t, 10) != 0) throw std::invalid_argument("cannot parse scalar '" + t + "'");
  if (q.get_den() == 0) throw std::domain_error("zero denominator in '" + t + "'");
  q.canonicalize();
  if (f.is_rational()) return normalize_big(std::move(q));
  mpz_class p = f.characteristic();
  mpz_class n = q.get_num() % p;
  mpz_class d = q.get_den() % p;
  if (d == 0) throw std::domain_error("denominator vanishes mod " + std::to_string(f.characteristic()));
  if (n < 0) n += p;
  return from_int(f, n.get_si()) / from_int(f, d.get_si());
}

Field Scalar::field() const {
  return is_fp() ? Field{static_cast<std::uint32_t>(p())} : Field::rationals();
}

bool Scalar::is_one() const { return !big_ && num_ == 1 && (den_ == 1 || den_ < 0); }

bool Scalar::is_integer() const {
  if (is_fp()) return true;
  if (big_) return big_->get_den() == 1;
  return den_ == 1;
}

int Scalar::sign() const {
  if (is_zero()) return 0;
  if (is_fp()) return 1;
  if (big_) return sgn(*big_);
  return num_ < 0 ? -1 : 1;
}

Scalar Scalar::operator-() const {
  if (is_fp()) return small(num_ == 0 ? 0 : static_cast<std::int64_t>(p()) - num_, den_);
  if (big_) return normalize_big(-*big_);
  return small(-num_, den_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (is_fp()) {
    return small(static_cast<std::int64_t>(pow_mod(static_cast<std::uint64_t>(num_), p() - 2, p())), den_);
  }
  if (big_) return normalize_big(1 / *big_);
  return num_ < 0 ? small(-den_, -num_) : small(den_, num_);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_fp() || b.is_fp()) {
    if (a.den_ != b.den_) mixed_fields("+");
    std::uint64_t s = static_cast<std::uint64_t>(a.num_) + static_cast<std::uint64_t>(b.num_);
    if (s >= a.p()) s -= a.p();
    return Scalar::small(static_cast<std::int64_t>(s), a.den_);
  }
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0) return b;
    if (b.num_ == 0) return a;
    if (a.den_ == 1 && b.den_ == 1) {
      i128 s = static_cast<i128>(a.num_) + b.num_;
      if (fits(s)) return Scalar::small(static_cast<std::int64_t>(s), 1);
    } else {
      std::uint64_t g = std::gcd(static_cast<std::uint64_t>(a.den_), static_cast<std::uint64_t>(b.den_));
      i128 n = static_cast<i128>(a.num_) * (b.den_ / static_cast<std::int64_t>(g)) +
               static_cast<i128>(b.num_) * (a.den_ / static_cast<std::int64_t>(g));
      i128 d = static_cast<i128>(a.den_) * (b.den_ / static_cast<std::int64_t>(g));
      if (n == 0) return Scalar::small(0, 1);
      u128 g2 = gcd128(uabs128(n), static_cast<u128>(g));
      n /= static_cast<i128>(g2);
      d /= static_cast<i128>(g2);
      if (fits(n) && fits(d)) return Scalar::small(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
    }
  }
  return Scalar::normalize_big(a.to_mpq() + b.to_mpq());
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_fp() || b.is_fp()) {
    if (a.den_ != b.den_) mixed_fields("*");
    return Scalar::small(
        static_cast<std::int64_t>(static_cast<std::uint64_t>(a.num_) * static_cast<std::uint64_t>(b.num_) % a.p()),
        a.den_);
  }
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0 || b.num_ == 0) return Scalar::small(0, 1);
    if (a.den_ == 1 && b.den_ == 1) {
      i128 p = static_cast<i128>(a.num_) * b.num_;
      if (fits(p)) return Scalar::small(static_cast<std::int64_t>(p), 1);
    } else {
      auto g1 = static_cast<std::int64_t>(std::gcd(uabs(a.num_), static_cast<std::uint64_t>(b.den_)));
      auto g2 = static_cast<std::int64_t>(std::gcd(uabs(b.num_), static_cast<std::uint64_t>(a.den_)));
      i128 n = static_cast<i128>(a.num_ / g1) * (b.num_ / g2);
      i128 d = static_cast<i128>(a.den_ / g2) * (b.den_ / g1);
      if (fits(n) && fits(d)) return Scalar::small(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
    }
  }
  return Scalar::normalize_big(a.to_mpq() * b.to_mpq());
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.big_ || b.big_) {
    if (!a.big_ || !b.big_) return false;
    return *a.big_ == *b.big_;
  }
  return a.num_ == b.num_ && a.den_ == b.den_;
}

mpq_class Scalar::to_mpq() const {
  if (is_fp()) throw FieldMismatch("to_mpq on a prime-field scalar");
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

std::uint64_t Scalar::residue() const {
  if (!is_fp()) throw FieldMismatch("residue on a rational scalar");
  return static_cast<std::uint64_t>(num_);
}

std::string Scalar::to_string() const {
  if (big_) return big_->get_str();
  if (is_fp() || den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::size_t Scalar::hash() const {
  if (big_) return std::hash<std::string>{}(big_->get_str());
  return std::hash<std::int64_t>{}(num_) * 1000003u ^ std::hash<std::int64_t>{}(den_);
}

Scalar Scalar::gcd(const Scalar& a, const Scalar& b) {
  if (!a.big_ && !b.big_ && a.den_ == 1 && b.den_ == 1) {
    return small(static_cast<std::int64_t>(std::gcd(uabs(a.num_), uabs(b.num_))), 1);
  }
  mpq_class qa = a.to_mpq(), qb = b.to_mpq();
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), qa.get_num_mpz_t(), qb.get_num_mpz_t());
  return normalize_big(mpq_class(g));
}

Scalar Scalar::exact_div(const Scalar& a, const Scalar& b) {
  if (!a.big_ && !b.big_ && a.den_ == 1 && b.den_ == 1) return small(a.num_ / b.num_, 1);
  mpq_class qa = a.to_mpq(), qb = b.to_mpq();
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), qa.get_num_mpz_t(), qb.get_num_mpz_t());
  return normalize_big(mpq_class(q));
}

std::size_t Scalar::size_class() const {
  if (is_zero()) return 0;
  if (is_fp()) return 1;
  if (big_) return 128 + mpz_sizeinbase(big_->get_num_mpz_t(), 2) + mpz_sizeinbase(big_->get_den_mpz_t(), 2);
  return static_cast<std::size_t>(64 - __builtin_clzll(uabs(num_))) +
         static_cast<std::size_t>(64 - __builtin_clzll(static_cast<std::uint64_t>(den_))) - 1;
}

}  // namespace sepmon::exactlin
