#pragma once

#include "paltrip/natural.hpp"

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace paltrip {

/// Positive integers (a, b, c) with a^2 + b^2 = c^2.
///
/// Components are stored in canonical order: when exactly one leg is odd it
/// comes first (so for primitive triples a is the odd leg and b the even leg),
/// otherwise the smaller leg comes first. c is always the hypotenuse.
///
/// Instantiated for Natural (the public type) and std::uint64_t (used by the
/// search engines, with 128-bit intermediate squares).
template <class T>
class BasicTriple {
 public:
  /// Validates and canonicalizes; throws std::invalid_argument when a
  /// component is zero or the Pythagorean identity fails.
  static BasicTriple make(T x, T y, T z);

  /// Builds 2st, s^2 - t^2, s^2 + t^2 from already validated generators.
  static BasicTriple from_generators(const T& s, const T& t);

  const T& a() const { return a_; }
  const T& b() const { return b_; }
  const T& c() const { return c_; }

  /// Component by canonical position 0, 1, 2.
  const T& operator[](std::size_t i) const { return i == 0 ? a_ : (i == 1 ? b_ : c_); }

  friend bool operator==(const BasicTriple&, const BasicTriple&) = default;

  /// Orders by hypotenuse, then first leg.
  friend auto operator<=>(const BasicTriple& x, const BasicTriple& y) {
    if (auto r = x.c_ <=> y.c_; r != 0) return r;
    if (auto r = x.a_ <=> y.a_; r != 0) return r;
    return x.b_ <=> y.b_;
  }

 private:
  BasicTriple(T a, T b, T c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}

  T a_;
  T b_;
  T c_;
};

extern template class BasicTriple<Natural>;
extern template class BasicTriple<std::uint64_t>;

using Triple = BasicTriple<Natural>;
using Triple64 = BasicTriple<std::uint64_t>;

Triple widen(const Triple64& t);

std::string to_string(const Triple& t);
std::ostream& operator<<(std::ostream& os, const Triple& t);

/// Generator pair of the Euclid parameterization: s > t > 0, gcd(s, t) = 1,
/// s and t of opposite parity.
class EuclidParams {
 public:
  /// Throws std::invalid_argument naming the violated condition.
  EuclidParams(Natural s, Natural t);

  const Natural& s() const { return s_; }
  const Natural& t() const { return t_; }

 private:
  Natural s_;
  Natural t_;
};

/// Primitive triple with odd leg s^2 - t^2, even leg 2st, hypotenuse s^2 + t^2.
Triple from_euclid(const EuclidParams& p);

template <class T>
bool is_primitive(const BasicTriple<T>& t);

/// Componentwise product, re-canonicalized. Throws std::invalid_argument for m = 0.
Triple scale(const Triple& t, const Natural& m);

enum class DigitParity : char { odd = 'O', even = 'E' };

struct PalindromeProfile {
  std::array<bool, 3> flags{};
  int count = 0;
  std::array<DigitParity, 3> parity_pattern{};

  /// Three characters over {O, E}, e.g. "OOE".
  std::string parity_string() const;

  friend bool operator==(const PalindromeProfile&, const PalindromeProfile&) = default;
};

template <class T>
PalindromeProfile profile(const BasicTriple<T>& t);

struct Lemma42Report {
  bool exactly_one_leg_div3 = false;
  bool even_leg_div4 = false;
  bool exactly_one_component_div5 = false;

  bool all() const { return exactly_one_leg_div3 && even_leg_div4 && exactly_one_component_div5; }
  friend bool operator==(const Lemma42Report&, const Lemma42Report&) = default;
};

/// Divisibility by 3, 4 and 5 in a primitive triple. Throws
/// std::invalid_argument for non-primitive input.
template <class T>
Lemma42Report lemma42_report(const BasicTriple<T>& t);

struct DigitParityForm {
  std::array<DigitParity, 3> pattern{};
  /// At most one component has an even number of digits.
  bool admissible = false;
};

template <class T>
DigitParityForm digit_parity_form(const BasicTriple<T>& t);

/// Where the factors 3, 4 and 5 sit in a primitive triple
/// (odd leg, even leg, hypotenuse).
enum class Table3Form {
  f15a_4b_c,   // 15a-4b-c
  f5a_12b_c,   // 5a-12b-c
  f3a_20b_c,   // 3a-20b-c
  fa_60b_c,    // a-60b-c
  f3a_4b_5c,   // 3a-4b-5c
  fa_12b_5c,   // a-12b-5c
};

std::string_view to_string(Table3Form f);

/// Throws std::invalid_argument for non-primitive input.
template <class T>
Table3Form table3_form(const BasicTriple<T>& t);

/// Cheap necessary conditions for a primitive triple to have three palindrome
/// components:
///   - at most one component with an even digit count,
///   - the even leg is not divisible by 5 (it would end in 0),
///   - the component divisible by 5 starts and ends with the digit 5.
/// Never false for a primitive all-palindrome triple. Throws
/// std::invalid_argument for non-primitive input.
template <class T>
bool all_palindrome_prefilter(const BasicTriple<T>& t);

}  // namespace paltrip
