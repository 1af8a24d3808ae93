#pragma once

// Decimal digit algebra over Natural: palindromes, digit templates and the
// alternating digit sum used for divisibility by 11.

#include "paltrip/natural.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace paltrip {

// Palindromicity and digit counts are defined for positive values only;
// every function below that takes a value n >= 1 throws std::domain_error on 0.

bool is_palindrome(const Natural& n);
bool is_palindrome(std::uint64_t n);

Natural reverse_digits(const Natural& n);

unsigned digit_count(const Natural& n);
unsigned digit_count(std::uint64_t n);

unsigned leading_digit(const Natural& n);
unsigned leading_digit(std::uint64_t n);

inline unsigned last_digit(const Natural& n) { return n.mod(10); }
inline unsigned last_digit(std::uint64_t n) { return static_cast<unsigned>(n % 10); }

/// a concatenated with itself so that the result holds copies + 1 blocks of a:
/// concat_copies(11, 3) == 11111111, concat_copies(11, 0) == 11.
Natural concat_copies(const Natural& a, unsigned copies);

/// The k-digit number ddd...d, for 1 <= d <= 9 and k >= 1.
Natural repeat_digit(unsigned d, unsigned k);

/// First digit minus second plus third ..., starting at the most significant digit.
/// Congruent to n modulo 11 up to sign: n % 11 == 0 iff the result % 11 == 0.
std::int64_t alternating_digit_sum(const Natural& n);

struct DigitRun {
  std::string digits;
  unsigned repeat = 1;

  friend bool operator==(const DigitRun&, const DigitRun&) = default;
};

/// A decimal string described as a sequence of repeated digit blocks, e.g.
/// {("1",1),("2",1),("0",2),("3",3),("1",1)} expands to 12003331.
class DigitTemplate {
 public:
  DigitTemplate() = default;
  explicit DigitTemplate(std::vector<DigitRun> runs);

  /// Appends a run; runs with repeat == 0 are dropped so templates such as
  /// 1 3_{n-1} 2 can be built directly at n = 1.
  DigitTemplate& add(std::string_view digits, unsigned repeat = 1);

  const std::vector<DigitRun>& runs() const { return runs_; }

  /// The expanded decimal string, without validation.
  std::string expand() const;

  /// Compact notation: single runs verbatim, repeated runs as block{count},
  /// e.g. "13{2}2" for 1332.
  std::string notation() const;

  friend bool operator==(const DigitTemplate&, const DigitTemplate&) = default;

 private:
  std::vector<DigitRun> runs_;
};

/// Expands a template into a Natural. Throws std::invalid_argument on an empty
/// template, a malformed run, or an expansion beginning with 0.
Natural render_template(const DigitTemplate& t);

enum class Parity { odd, even };

/// Number of palindromes with exactly d digits: 9 * 10^(ceil(d/2) - 1).
Natural palindrome_count(unsigned d);

/// Ascending stream of all palindromes whose digit count lies in
/// [min_digits, max_digits], generated from half-prefixes. The optional parity
/// filter restricts the parity of the value itself.
class PalindromeStream {
 public:
  PalindromeStream(unsigned min_digits, unsigned max_digits, std::optional<Parity> parity = std::nullopt);

  std::optional<Natural> next();

 private:
  void start_length(unsigned d);

  unsigned digits_;
  unsigned max_digits_;
  std::optional<Parity> parity_;
  Natural prefix_;
  Natural prefix_end_;
};

/// Collects a PalindromeStream into a vector.
std::vector<Natural> enumerate_palindromes(unsigned min_digits, unsigned max_digits,
                                           std::optional<Parity> parity = std::nullopt);

}  // namespace paltrip
