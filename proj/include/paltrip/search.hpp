#pragma once

// Search engines over Pythagorean triples:
//   - Euclid-parameter sweep (primitive triples, optionally their multiples),
//   - palindrome-anchored search that completes each anchor via factor pairs,
//   - evidence search for primitive triples with three palindrome components.
//
// All engines are blocking and deterministic: internal worker threads split
// the work into disjoint slices and the merged output is sorted before it is
// returned, so results are identical for every thread count.

#include "paltrip/natural.hpp"
#include "paltrip/triples.hpp"

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace paltrip {

enum class SearchMode { euclid, anchored, evidence };
enum class Role { odd_leg, even_leg, hypotenuse };

std::string_view to_string(SearchMode m);
std::string_view to_string(Role r);
std::optional<Role> parse_role(std::string_view name);  // "odd-leg", "even-leg", "hypotenuse"

struct DigitRange {
  unsigned min = 1;
  unsigned max = 1;
};

struct SearchQuery {
  SearchMode mode = SearchMode::euclid;
  std::optional<std::uint64_t> max_s;
  std::optional<std::uint64_t> max_c;
  std::optional<Role> anchor_role;
  std::optional<DigitRange> anchor_digits;
  int min_pal_count = 0;
  bool primitive_only = true;

  /// Throws std::invalid_argument when the fields required by `mode` are missing.
  void validate() const;
};

struct Provenance {
  SearchMode mode = SearchMode::euclid;
  /// Ordered key/value pairs: generators (s, t, k) or the anchor (role, anchor).
  std::vector<std::pair<std::string, std::string>> params;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct SearchHit {
  Triple triple;
  PalindromeProfile profile;
  bool primitive = false;
  Provenance provenance;
};

struct SearchOptions {
  unsigned threads = 1;
  /// Evidence search only: apply the digit and divisibility filters before
  /// the full palindrome test. Disabling it gives the reference sweep.
  bool prune = true;
};

/// Calls fn(triple, s, t) for every primitive triple generated by valid
/// (s, t) with s <= max_s and c <= max_c. Only s in {first_s, first_s + step, ...}
/// are visited, which lets callers split the sweep across workers.
template <class F>
void visit_primitive_triples(std::uint64_t max_s, std::uint64_t max_c, F&& fn, std::uint64_t first_s = 2,
                             std::uint64_t step = 1) {
  for (std::uint64_t s = first_s; s <= max_s; s += step) {
    if (s * s + 1 > max_c) break;
    for (std::uint64_t t = (s % 2 == 0) ? 1 : 2; t < s; t += 2) {
      if (s * s + t * t > max_c) break;
      if (std::gcd(s, t) != 1) continue;
      fn(Triple64::from_generators(s, t), s, t);
    }
  }
}

/// Largest s worth visiting for a hypotenuse bound (s^2 + 1 <= max_c), capped
/// so that s^2 + t^2 stays within 64 bits.
std::uint64_t max_generator_for(std::uint64_t max_c);

/// Euclid sweep. Requires max_s or max_c. Hits are primitive triples (plus,
/// when primitive_only is false and max_c is set, their multiples up to max_c)
/// whose palindrome count is at least min_pal_count, sorted by (c, a).
std::vector<SearchHit> search_euclid(const SearchQuery& q, const SearchOptions& opt = {});

/// All triples with the given odd leg (a >= 3), sorted by hypotenuse.
std::vector<Triple> decompose_odd_leg(const Natural& a);

/// All triples with the given even leg (b >= 4), sorted by hypotenuse.
std::vector<Triple> decompose_even_leg(const Natural& b);

/// All triples with hypotenuse c, or only the primitive ones; sorted by the
/// smaller leg. Empty when c is not a hypotenuse.
std::vector<Triple> decompose_hypotenuse(const Natural& c, bool primitive_only);

/// Enumerates palindromes in the anchor digit range (parity matched to the
/// role), completes each into triples and keeps those meeting the filters.
/// A triple reachable from several anchors is reported once, with its
/// smallest anchor.
std::vector<SearchHit> anchored_search(const SearchQuery& q, const SearchOptions& opt = {});

/// Primitive triples with c <= max_c and three palindrome components.
std::vector<SearchHit> evidence_search(std::uint64_t max_c, const SearchOptions& opt = {});

/// Runs whichever engine q.mode names.
std::vector<SearchHit> run_search(const SearchQuery& q, const SearchOptions& opt = {});

}  // namespace paltrip
