#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace paltrip {

/// Arbitrary-precision non-negative integer.
///
/// Thin value wrapper around boost's cpp_int that keeps the value >= 0:
/// subtraction that would go negative throws std::domain_error.
class Natural {
 public:
  using Backend = boost::multiprecision::cpp_int;

  Natural() = default;
  Natural(std::uint64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  static Natural from_u128(unsigned __int128 v);

  /// Parses a plain decimal string: digits only, no sign, no whitespace.
  /// Leading zeros are accepted ("007" -> 7).
  static Natural parse(std::string_view text);

  static Natural pow10(unsigned exponent);

  std::string str() const;

  bool is_zero() const { return v_.is_zero(); }
  bool is_odd() const { return bit_test(v_, 0); }
  bool is_even() const { return !is_odd(); }

  std::optional<std::uint64_t> to_u64() const;

  /// Remainder by a small modulus.
  std::uint32_t mod(std::uint32_t m) const;

  const Backend& backend() const { return v_; }

  Natural& operator+=(const Natural& o) {
    v_ += o.v_;
    return *this;
  }
  Natural& operator-=(const Natural& o);
  Natural& operator*=(const Natural& o) {
    v_ *= o.v_;
    return *this;
  }
  Natural& operator/=(const Natural& o);
  Natural& operator%=(const Natural& o);

  friend Natural operator+(Natural a, const Natural& b) { return a += b; }
  friend Natural operator-(Natural a, const Natural& b) { return a -= b; }
  friend Natural operator*(Natural a, const Natural& b) { return a *= b; }
  friend Natural operator/(Natural a, const Natural& b) { return a /= b; }
  friend Natural operator%(Natural a, const Natural& b) { return a %= b; }

  friend bool operator==(const Natural& a, const Natural& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
    int c = a.v_.compare(b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  explicit Natural(Backend v) : v_(std::move(v)) {}

  Backend v_;

  friend Natural gcd(const Natural& a, const Natural& b);
  friend Natural isqrt(const Natural& n);
};

Natural gcd(const Natural& a, const Natural& b);

/// Floor of the square root.
Natural isqrt(const Natural& n);

/// Returns the exact square root when n is a perfect square.
std::optional<Natural> exact_sqrt(const Natural& n);

inline Natural square(const Natural& n) { return n * n; }

std::ostream& operator<<(std::ostream& os, const Natural& n);

inline namespace literals {
inline Natural operator""_nat(const char* text) { return Natural::parse(text); }
}  // namespace literals

}  // namespace paltrip

template <>
struct std::hash<paltrip::Natural> {
  std::size_t operator()(const paltrip::Natural& n) const noexcept {
    return boost::multiprecision::hash_value(n.backend());
  }
};
