#include "sepmon/exactlin/field.hpp"

#include <charconv>

namespace sepmon::exactlin {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31)) throw std::invalid_argument("prime must be below 2^31");
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  return Field{p};
}

Field Field::parse(std::string_view text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.substr(0, 3) == "fp:") {
    auto digits = text.substr(3);
    std::uint32_t p = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc{} || end != digits.data() + digits.size()) {
      throw std::invalid_argument("bad prime in field spec '" + std::string(text) + "'");
    }
    return prime(p);
  }
  throw std::invalid_argument("field spec must be 'q' or 'fp:P', got '" + std::string(text) + "'");
}

std::string Field::name() const {
  return is_rational() ? "Q" : "F_" + std::to_string(p_);
}

std::string Field::spec() const {
  return is_rational() ? "q" : "fp:" + std::to_string(p_);
}

void require_same_field(Field a, Field b, const char* where) {
  if (!(a == b)) {
    throw FieldMismatch(std::string(where) + ": field mismatch (" + a.name() + " vs " + b.name() + ")");
  }
}

}  // namespace sepmon::exactlin
