#pragma once

// Infinite families of Pythagorean triples with a prescribed number of
// palindrome components. Each member is computed by actual multiplication
// (or from Euclid generators) and carries the digit templates the family
// predicts, so the two can be checked against each other.

#include "paltrip/digits.hpp"
#include "paltrip/natural.hpp"
#include "paltrip/triples.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace paltrip {

enum class FamilyId {
  nppt_1a,  // f(n) * (11, 60, 61), f the base-100 repunit
  nppt_1b,  // 3_n * (3, 4, 5)
  nppt_2a,  // (10^k + 1)^2 * (3, 4, 5)
  nppt_2b,  // 2_n * (3, 4, 5)
  nppt_3,   // 1_k * (3, 4, 5)
  ppt_1,    // Euclid (s, 1), s an even palindrome over digits 0..4
};

inline constexpr std::array<FamilyId, 6> kAllFamilies = {FamilyId::nppt_1a, FamilyId::nppt_1b, FamilyId::nppt_2a,
                                                         FamilyId::nppt_2b, FamilyId::nppt_3,  FamilyId::ppt_1};

std::string_view to_string(FamilyId f);

/// Accepts the names printed by to_string ("NPPT-1A", ..., "PPT-1").
std::optional<FamilyId> parse_family(std::string_view name);

/// Smallest valid member index: 0 for NPPT-1A, 1 otherwise.
unsigned first_index(FamilyId f);

struct FamilyMember {
  FamilyId family{};
  unsigned index = 0;
  /// The multiplier applied to the base triple; for PPT-1 the generator s.
  Natural generator;
  Triple triple = Triple::make(3, 4, 5);
  /// Predicted decimal layout of each canonical component.
  std::array<DigitTemplate, 3> predicted_pattern;
  int declared_pal_count = 0;
  bool primitive = false;
};

/// f(0) = 1, f(n) = 100 f(n-1) + 1.
Natural f_multiplier(unsigned n);

/// The n-th (1-based) admissible PPT-1 generator: even palindromes with all
/// digits in {0,...,4}, excluding s = 2. Sequence starts 4, 22, 44, 202, 212.
Natural ppt1_s_value(unsigned n);

/// The first `limit` PPT-1 generators in ascending order.
std::vector<Natural> ppt1_s_values(unsigned limit);

/// Throws std::invalid_argument when index < first_index(f).
FamilyMember member(FamilyId f, unsigned index);

/// Expected primitivity at a given index, or nullopt where the family makes
/// no claim (NPPT-1A at n = 0 and NPPT-3 at k = 1, both primitive).
std::optional<bool> expected_primitive(FamilyId f, unsigned index);

/// True iff every predicted template renders to its component, the palindrome
/// count matches the family's claim and primitivity matches expectation.
/// For PPT-1 the palindrome claim is: even leg palindromic, odd leg and
/// hypotenuse not both palindromic.
bool pattern_check(const FamilyMember& m);

}  // namespace paltrip
