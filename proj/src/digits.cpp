#include "paltrip/digits.hpp"

#include <algorithm>
#include <stdexcept>

namespace paltrip {

namespace {

void require_positive(const Natural& n, const char* what) {
  if (n.is_zero()) throw std::domain_error(std::string(what) + ": requires n >= 1");
}

void require_positive(std::uint64_t n, const char* what) {
  if (n == 0) throw std::domain_error(std::string(what) + ": requires n >= 1");
}

bool is_decimal(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

bool is_palindrome(const Natural& n) {
  require_positive(n, "is_palindrome");
  const std::string s = n.str();
  return std::equal(s.begin(), s.begin() + s.size() / 2, s.rbegin());
}

bool is_palindrome(std::uint64_t n) {
  require_positive(n, "is_palindrome");
  std::uint64_t rev = 0;
  for (std::uint64_t m = n; m != 0; m /= 10) {
    // A 20-digit n can overflow rev; fall back to the string comparison.
    if (rev > (std::numeric_limits<std::uint64_t>::max() - 9) / 10) return is_palindrome(Natural(n));
    rev = rev * 10 + m % 10;
  }
  return rev == n;
}

Natural reverse_digits(const Natural& n) {
  std::string s = n.str();
  std::reverse(s.begin(), s.end());
  return Natural::parse(s);
}

unsigned digit_count(const Natural& n) {
  require_positive(n, "digit_count");
  return static_cast<unsigned>(n.str().size());
}

unsigned digit_count(std::uint64_t n) {
  require_positive(n, "digit_count");
  unsigned d = 0;
  for (; n != 0; n /= 10) ++d;
  return d;
}

unsigned leading_digit(const Natural& n) {
  require_positive(n, "leading_digit");
  return static_cast<unsigned>(n.str().front() - '0');
}

unsigned leading_digit(std::uint64_t n) {
  require_positive(n, "leading_digit");
  while (n >= 10) n /= 10;
  return static_cast<unsigned>(n);
}

Natural concat_copies(const Natural& a, unsigned copies) {
  require_positive(a, "concat_copies");
  const std::string block = a.str();
  std::string out;
  out.reserve(block.size() * (copies + 1));
  for (unsigned i = 0; i <= copies; ++i) out += block;
  return Natural::parse(out);
}

Natural repeat_digit(unsigned d, unsigned k) {
  if (d < 1 || d > 9) throw std::invalid_argument("repeat_digit: digit must be in 1..9");
  if (k == 0) throw std::invalid_argument("repeat_digit: repeat count must be positive");
  return Natural::parse(std::string(k, static_cast<char>('0' + d)));
}

std::int64_t alternating_digit_sum(const Natural& n) {
  require_positive(n, "alternating_digit_sum");
  const std::string s = n.str();
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const int d = s[i] - '0';
    sum += (i % 2 == 0) ? d : -d;
  }
  return sum;
}

DigitTemplate::DigitTemplate(std::vector<DigitRun> runs) {
  for (auto& r : runs) add(r.digits, r.repeat);
}

DigitTemplate& DigitTemplate::add(std::string_view digits, unsigned repeat) {
  if (!is_decimal(digits)) throw std::invalid_argument("digit run must be a nonempty decimal string");
  if (repeat > 0) runs_.push_back({std::string(digits), repeat});
  return *this;
}

std::string DigitTemplate::expand() const {
  std::string out;
  for (const auto& r : runs_)
    for (unsigned i = 0; i < r.repeat; ++i) out += r.digits;
  return out;
}

std::string DigitTemplate::notation() const {
  std::string out;
  for (const auto& r : runs_) {
    out += r.digits;
    if (r.repeat != 1) out += "{" + std::to_string(r.repeat) + "}";
  }
  return out;
}

Natural render_template(const DigitTemplate& t) {
  const std::string s = t.expand();
  if (s.empty()) throw std::invalid_argument("render_template: empty template");
  if (s.front() == '0') throw std::invalid_argument("render_template: expansion starts with 0");
  return Natural::parse(s);
}

Natural palindrome_count(unsigned d) {
  if (d == 0) throw std::invalid_argument("palindrome_count: digit count must be positive");
  return Natural(9) * Natural::pow10((d + 1) / 2 - 1);
}

PalindromeStream::PalindromeStream(unsigned min_digits, unsigned max_digits, std::optional<Parity> parity)
    : digits_(min_digits), max_digits_(max_digits), parity_(parity) {
  if (min_digits < 1 || min_digits > max_digits)
    throw std::invalid_argument("enumerate_palindromes: require 1 <= min_digits <= max_digits");
  start_length(min_digits);
}

void PalindromeStream::start_length(unsigned d) {
  digits_ = d;
  const unsigned half = (d + 1) / 2;
  prefix_ = Natural::pow10(half - 1);
  prefix_end_ = Natural::pow10(half);
}

std::optional<Natural> PalindromeStream::next() {
  while (digits_ <= max_digits_) {
    if (prefix_ >= prefix_end_) {
      if (digits_ == max_digits_) {
        ++digits_;
        break;
      }
      start_length(digits_ + 1);
      continue;
    }
    const std::string head = prefix_.str();
    prefix_ += 1;
    // The value's last digit is the prefix's first digit.
    if (parity_) {
      const bool odd = ((head.front() - '0') % 2) == 1;
      if (odd != (*parity_ == Parity::odd)) continue;
    }
    std::string tail(head.rbegin() + static_cast<std::ptrdiff_t>(digits_ % 2), head.rend());
    return Natural::parse(head + tail);
  }
  return std::nullopt;
}

std::vector<Natural> enumerate_palindromes(unsigned min_digits, unsigned max_digits, std::optional<Parity> parity) {
  PalindromeStream stream(min_digits, max_digits, parity);
  std::vector<Natural> out;
  while (auto p = stream.next()) out.push_back(std::move(*p));
  return out;
}

}  // namespace paltrip
