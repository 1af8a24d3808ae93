#include "paltrip/natural.hpp"

#include <ostream>
#include <stdexcept>

namespace paltrip {

Natural Natural::from_u128(unsigned __int128 v) {
  Backend b = static_cast<std::uint64_t>(v >> 64);
  b <<= 64;
  b += static_cast<std::uint64_t>(v);
  return Natural(std::move(b));
}

Natural Natural::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty numeral");
  for (char ch : text) {
    if (ch < '0' || ch > '9') throw std::invalid_argument("not a decimal numeral: '" + std::string(text) + "'");
  }
  // cpp_int reads a leading 0 as an octal prefix.
  const auto first = text.find_first_not_of('0');
  if (first == std::string_view::npos) return Natural();
  return Natural(Backend(std::string(text.substr(first))));
}

Natural Natural::pow10(unsigned exponent) { return Natural(boost::multiprecision::pow(Backend(10), exponent)); }

std::string Natural::str() const { return v_.str(); }

std::optional<std::uint64_t> Natural::to_u64() const {
  if (v_ > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return v_.convert_to<std::uint64_t>();
}

std::uint32_t Natural::mod(std::uint32_t m) const {
  if (m == 0) throw std::domain_error("modulus by zero");
  return static_cast<std::uint32_t>(boost::multiprecision::integer_modulus(v_, m));
}

Natural& Natural::operator-=(const Natural& o) {
  if (o.v_ > v_) throw std::domain_error("Natural subtraction underflow");
  v_ -= o.v_;
  return *this;
}

Natural& Natural::operator/=(const Natural& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

Natural& Natural::operator%=(const Natural& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  v_ %= o.v_;
  return *this;
}

Natural gcd(const Natural& a, const Natural& b) { return Natural(boost::multiprecision::gcd(a.v_, b.v_)); }

Natural isqrt(const Natural& n) { return Natural(boost::multiprecision::sqrt(n.v_)); }

std::optional<Natural> exact_sqrt(const Natural& n) {
  Natural r = isqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

std::ostream& operator<<(std::ostream& os, const Natural& n) { return os << n.str(); }

}  // namespace paltrip
