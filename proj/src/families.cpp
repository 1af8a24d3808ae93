#include "paltrip/families.hpp"

#include <stdexcept>
#include <string>

namespace paltrip {

namespace {

DigitTemplate literal(const Natural& n) { return DigitTemplate{}.add(n.str()); }

Natural nth_power(std::uint64_t base, unsigned exp) {
  Natural r(1);
  for (unsigned i = 0; i < exp; ++i) r *= Natural(base);
  return r;
}

FamilyMember scaled_member(FamilyId f, unsigned index, const Triple& base, Natural multiplier,
                           std::array<DigitTemplate, 3> pattern, int pal_count) {
  FamilyMember m;
  m.family = f;
  m.index = index;
  m.triple = scale(base, multiplier);
  m.generator = std::move(multiplier);
  m.predicted_pattern = std::move(pattern);
  m.declared_pal_count = pal_count;
  m.primitive = is_primitive(m.triple);
  return m;
}

}  // namespace

std::string_view to_string(FamilyId f) {
  switch (f) {
    case FamilyId::nppt_1a: return "NPPT-1A";
    case FamilyId::nppt_1b: return "NPPT-1B";
    case FamilyId::nppt_2a: return "NPPT-2A";
    case FamilyId::nppt_2b: return "NPPT-2B";
    case FamilyId::nppt_3: return "NPPT-3";
    case FamilyId::ppt_1: return "PPT-1";
  }
  return "?";
}

std::optional<FamilyId> parse_family(std::string_view name) {
  for (FamilyId f : kAllFamilies)
    if (to_string(f) == name) return f;
  return std::nullopt;
}

unsigned first_index(FamilyId f) { return f == FamilyId::nppt_1a ? 0 : 1; }

Natural f_multiplier(unsigned n) {
  Natural f(1);
  for (unsigned i = 0; i < n; ++i) f = f * Natural(100) + Natural(1);
  return f;
}

Natural ppt1_s_value(unsigned n) {
  if (n == 0) throw std::invalid_argument("ppt1_s_value: index is 1-based");
  // Position in the full sequence 2, 4, 22, 44, ... (s = 2 dropped).
  Natural pos(n);
  for (unsigned digits = 1;; ++digits) {
    const unsigned half = (digits + 1) / 2;
    const Natural tail_count = nth_power(5, half - 1);
    const Natural in_length = Natural(2) * tail_count;
    if (pos >= in_length) {
      pos -= in_length;
      continue;
    }
    // Half-prefix: lead digit 2 or 4, then half-1 base-5 digits.
    std::string head(1, pos < tail_count ? '2' : '4');
    Natural rest = pos % tail_count;
    std::string tail_digits(half - 1, '0');
    for (unsigned i = 0; i + 1 < half; ++i) {
      tail_digits[half - 2 - i] = static_cast<char>('0' + rest.mod(5));
      rest /= Natural(5);
    }
    head += tail_digits;
    std::string mirror(head.rbegin() + static_cast<std::ptrdiff_t>(digits % 2), head.rend());
    return Natural::parse(head + mirror);
  }
}

std::vector<Natural> ppt1_s_values(unsigned limit) {
  if (limit == 0) throw std::invalid_argument("ppt1_s_values: limit must be positive");
  std::vector<Natural> out;
  out.reserve(limit);
  for (unsigned i = 1; i <= limit; ++i) out.push_back(ppt1_s_value(i));
  return out;
}

FamilyMember member(FamilyId f, unsigned index) {
  if (index < first_index(f))
    throw std::invalid_argument(std::string(to_string(f)) + ": index must be >= " + std::to_string(first_index(f)));

  const Triple t345 = Triple::make(3, 4, 5);
  const unsigned n = index;
  switch (f) {
    case FamilyId::nppt_1a:
      return scaled_member(f, n, Triple::make(11, 60, 61), f_multiplier(n),
                           {DigitTemplate{}.add("11", n + 1), DigitTemplate{}.add("60", n + 1),
                            DigitTemplate{}.add("61", n + 1)},
                           1);
    case FamilyId::nppt_1b:
      return scaled_member(f, n, t345, repeat_digit(3, n),
                           {DigitTemplate{}.add("9", n), DigitTemplate{}.add("1").add("3", n - 1).add("2"),
                            DigitTemplate{}.add("1").add("6", n - 1).add("5")},
                           1);
    case FamilyId::nppt_2a: {
      const Natural base = Natural::pow10(n) + Natural(1);
      std::array<DigitTemplate, 3> pattern;
      if (n == 1) {
        pattern = {literal(363), literal(484), literal(605)};
      } else {
        pattern = {DigitTemplate{}.add("3").add("0", n - 1).add("6").add("0", n - 1).add("3"),
                   DigitTemplate{}.add("4").add("0", n - 1).add("8").add("0", n - 1).add("4"),
                   DigitTemplate{}.add("5").add("0", n - 2).add("1").add("0", n).add("5")};
      }
      return scaled_member(f, n, t345, base * base, std::move(pattern), 2);
    }
    case FamilyId::nppt_2b:
      return scaled_member(f, n, t345, repeat_digit(2, n),
                           {DigitTemplate{}.add("6", n), DigitTemplate{}.add("8", n),
                            DigitTemplate{}.add("1", n).add("0")},
                           2);
    case FamilyId::nppt_3:
      return scaled_member(f, n, t345, repeat_digit(1, n),
                           {DigitTemplate{}.add("3", n), DigitTemplate{}.add("4", n), DigitTemplate{}.add("5", n)},
                           3);
    case FamilyId::ppt_1: {
      FamilyMember m;
      m.family = f;
      m.index = n;
      m.generator = ppt1_s_value(n);
      m.triple = from_euclid(EuclidParams(m.generator, Natural(1)));
      // Digits of s are at most 4, so 2s doubles each digit without carry.
      std::string doubled = m.generator.str();
      for (char& ch : doubled) ch = static_cast<char>('0' + 2 * (ch - '0'));
      const Natural ss = m.generator * m.generator;
      m.predicted_pattern = {literal(ss - Natural(1)), DigitTemplate{}.add(doubled), literal(ss + Natural(1))};
      m.declared_pal_count = 1;
      m.primitive = is_primitive(m.triple);
      return m;
    }
  }
  throw std::invalid_argument("unknown family");
}

std::optional<bool> expected_primitive(FamilyId f, unsigned index) {
  switch (f) {
    case FamilyId::nppt_1a: return index == 0 ? std::nullopt : std::optional<bool>(false);
    case FamilyId::nppt_3: return index == 1 ? std::nullopt : std::optional<bool>(false);
    case FamilyId::ppt_1: return true;
    default: return false;
  }
}

bool pattern_check(const FamilyMember& m) {
  for (std::size_t i = 0; i < 3; ++i) {
    try {
      if (render_template(m.predicted_pattern[i]) != m.triple[i]) return false;
    } catch (const std::invalid_argument&) {
      return false;
    }
  }
  const PalindromeProfile p = profile(m.triple);
  if (m.family == FamilyId::ppt_1) {
    if (!p.flags[1] || (p.flags[0] && p.flags[2])) return false;
  } else if (p.count != m.declared_pal_count) {
    return false;
  }
  if (auto expected = expected_primitive(m.family, m.index); expected && *expected != m.primitive) return false;
  return true;
}

}  // namespace paltrip
