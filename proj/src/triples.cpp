#include "paltrip/triples.hpp"

#include "paltrip/digits.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace paltrip {

namespace {

using u128 = unsigned __int128;

bool odd(const Natural& n) { return n.is_odd(); }
bool odd(std::uint64_t n) { return (n & 1U) != 0; }

bool is_zero(const Natural& n) { return n.is_zero(); }
bool is_zero(std::uint64_t n) { return n == 0; }

unsigned mod_small(const Natural& n, unsigned m) { return n.mod(m); }
unsigned mod_small(std::uint64_t n, unsigned m) { return static_cast<unsigned>(n % m); }

Natural gcd3(const Natural& x, const Natural& y, const Natural& z) { return gcd(gcd(x, y), z); }
std::uint64_t gcd3(std::uint64_t x, std::uint64_t y, std::uint64_t z) { return std::gcd(std::gcd(x, y), z); }

bool is_one(const Natural& n) { return n == Natural(1); }
bool is_one(std::uint64_t n) { return n == 1; }

bool pythagorean(const Natural& x, const Natural& y, const Natural& z) { return x * x + y * y == z * z; }
bool pythagorean(std::uint64_t x, std::uint64_t y, std::uint64_t z) {
  // Overflows u128 only when a component exceeds ~1.3e19.
  if (x > (std::uint64_t{1} << 63) || y > (std::uint64_t{1} << 63) || z > (std::uint64_t{1} << 63)) {
    return pythagorean(Natural(x), Natural(y), Natural(z));
  }
  return u128{x} * x + u128{y} * y == u128{z} * z;
}

template <class T>
void require_primitive(const BasicTriple<T>& t, const char* what) {
  if (!is_primitive(t)) throw std::invalid_argument(std::string(what) + ": triple is not primitive");
}

}  // namespace

template <class T>
BasicTriple<T> BasicTriple<T>::make(T x, T y, T z) {
  if (is_zero(x) || is_zero(y) || is_zero(z)) throw std::invalid_argument("triple components must be positive");
  if (x > z) std::swap(x, z);
  if (y > z) std::swap(y, z);
  if (!pythagorean(x, y, z)) throw std::invalid_argument("components do not satisfy x^2 + y^2 = z^2");
  if (odd(x) != odd(y)) {
    if (!odd(x)) std::swap(x, y);
  } else if (y < x) {
    std::swap(x, y);
  }
  return BasicTriple(std::move(x), std::move(y), std::move(z));
}

template <class T>
BasicTriple<T> BasicTriple<T>::from_generators(const T& s, const T& t) {
  const T ss = s * s;
  const T tt = t * t;
  return BasicTriple(ss - tt, T(2) * s * t, ss + tt);
}

template class BasicTriple<Natural>;
template class BasicTriple<std::uint64_t>;

Triple widen(const Triple64& t) { return Triple::make(Natural(t.a()), Natural(t.b()), Natural(t.c())); }

std::string to_string(const Triple& t) {
  return "(" + t.a().str() + ", " + t.b().str() + ", " + t.c().str() + ")";
}

std::ostream& operator<<(std::ostream& os, const Triple& t) { return os << to_string(t); }

EuclidParams::EuclidParams(Natural s, Natural t) : s_(std::move(s)), t_(std::move(t)) {
  if (t_.is_zero()) throw std::invalid_argument("Euclid parameters: require t > 0");
  if (!(s_ > t_)) throw std::invalid_argument("Euclid parameters: require s > t");
  if (gcd(s_, t_) != Natural(1)) throw std::invalid_argument("Euclid parameters: s and t must be coprime");
  if (s_.is_odd() == t_.is_odd()) throw std::invalid_argument("Euclid parameters: s and t must have opposite parity");
}

Triple from_euclid(const EuclidParams& p) { return Triple::from_generators(p.s(), p.t()); }

template <class T>
bool is_primitive(const BasicTriple<T>& t) {
  return is_one(gcd3(t.a(), t.b(), t.c()));
}

Triple scale(const Triple& t, const Natural& m) {
  if (m.is_zero()) throw std::invalid_argument("scale: multiplier must be positive");
  return Triple::make(t.a() * m, t.b() * m, t.c() * m);
}

std::string PalindromeProfile::parity_string() const {
  std::string s;
  for (auto p : parity_pattern) s += static_cast<char>(p);
  return s;
}

template <class T>
PalindromeProfile profile(const BasicTriple<T>& t) {
  PalindromeProfile p;
  for (std::size_t i = 0; i < 3; ++i) {
    p.flags[i] = is_palindrome(t[i]);
    p.count += p.flags[i] ? 1 : 0;
    p.parity_pattern[i] = digit_count(t[i]) % 2 == 0 ? DigitParity::even : DigitParity::odd;
  }
  return p;
}

template <class T>
Lemma42Report lemma42_report(const BasicTriple<T>& t) {
  require_primitive(t, "lemma42_report");
  // Primitive: a is the odd leg, b the even leg.
  const bool a3 = mod_small(t.a(), 3) == 0;
  const bool b3 = mod_small(t.b(), 3) == 0;
  int fives = 0;
  for (std::size_t i = 0; i < 3; ++i) fives += mod_small(t[i], 5) == 0 ? 1 : 0;
  return {a3 != b3, mod_small(t.b(), 4) == 0, fives == 1};
}

template <class T>
DigitParityForm digit_parity_form(const BasicTriple<T>& t) {
  DigitParityForm f;
  int evens = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    const bool even = digit_count(t[i]) % 2 == 0;
    f.pattern[i] = even ? DigitParity::even : DigitParity::odd;
    evens += even ? 1 : 0;
  }
  f.admissible = evens <= 1;
  return f;
}

std::string_view to_string(Table3Form f) {
  switch (f) {
    case Table3Form::f15a_4b_c: return "15a-4b-c";
    case Table3Form::f5a_12b_c: return "5a-12b-c";
    case Table3Form::f3a_20b_c: return "3a-20b-c";
    case Table3Form::fa_60b_c: return "a-60b-c";
    case Table3Form::f3a_4b_5c: return "3a-4b-5c";
    case Table3Form::fa_12b_5c: return "a-12b-5c";
  }
  return "?";
}

template <class T>
Table3Form table3_form(const BasicTriple<T>& t) {
  require_primitive(t, "table3_form");
  // In a primitive triple 4 always divides the even leg, 3 divides exactly
  // one leg and 5 exactly one component, so (who has 3) x (who has 5) picks
  // exactly one row.
  const bool three_in_odd_leg = mod_small(t.a(), 3) == 0;
  if (mod_small(t.a(), 5) == 0) return three_in_odd_leg ? Table3Form::f15a_4b_c : Table3Form::f5a_12b_c;
  if (mod_small(t.b(), 5) == 0) return three_in_odd_leg ? Table3Form::f3a_20b_c : Table3Form::fa_60b_c;
  return three_in_odd_leg ? Table3Form::f3a_4b_5c : Table3Form::fa_12b_5c;
}

template <class T>
bool all_palindrome_prefilter(const BasicTriple<T>& t) {
  require_primitive(t, "all_palindrome_prefilter");
  if (!digit_parity_form(t).admissible) return false;
  const Table3Form form = table3_form(t);
  if (form == Table3Form::f3a_20b_c || form == Table3Form::fa_60b_c) return false;
  const T& fives = mod_small(t.a(), 5) == 0 ? t.a() : t.c();
  return last_digit(fives) == 5 && leading_digit(fives) == 5;
}

#define PALTRIP_INSTANTIATE(T)                                          \
  template bool is_primitive(const BasicTriple<T>&);                    \
  template PalindromeProfile profile(const BasicTriple<T>&);            \
  template Lemma42Report lemma42_report(const BasicTriple<T>&);         \
  template DigitParityForm digit_parity_form(const BasicTriple<T>&);    \
  template Table3Form table3_form(const BasicTriple<T>&);               \
  template bool all_palindrome_prefilter(const BasicTriple<T>&);

PALTRIP_INSTANTIATE(Natural)
PALTRIP_INSTANTIATE(std::uint64_t)

#undef PALTRIP_INSTANTIATE

}  // namespace paltrip
