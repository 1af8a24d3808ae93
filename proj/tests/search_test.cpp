#include "paltrip/search.hpp"

#include "paltrip/digits.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace paltrip;

namespace {

Triple T(std::uint64_t x, std::uint64_t y, std::uint64_t z) { return Triple::make(x, y, z); }

std::vector<Triple> triples_of(const std::vector<SearchHit>& hits) {
  std::vector<Triple> out;
  for (const auto& h : hits) out.push_back(h.triple);
  return out;
}

bool contains(const std::vector<SearchHit>& hits, const Triple& t) {
  return std::any_of(hits.begin(), hits.end(), [&](const SearchHit& h) { return h.triple == t; });
}

std::set<oracle::Key> keys(const std::vector<Triple>& ts) {
  std::set<oracle::Key> out;
  for (const auto& t : ts) out.insert(oracle::key(*t.a().to_u64(), *t.b().to_u64(), *t.c().to_u64()));
  return out;
}

SearchQuery euclid_query(std::optional<std::uint64_t> max_s, std::optional<std::uint64_t> max_c, int min_pal) {
  SearchQuery q;
  q.mode = SearchMode::euclid;
  q.max_s = max_s;
  q.max_c = max_c;
  q.min_pal_count = min_pal;
  q.primitive_only = true;
  return q;
}

SearchQuery anchored_query(Role role, unsigned lo, unsigned hi, int min_pal, bool primitive_only = true) {
  SearchQuery q;
  q.mode = SearchMode::anchored;
  q.anchor_role = role;
  q.anchor_digits = DigitRange{lo, hi};
  q.min_pal_count = min_pal;
  q.primitive_only = primitive_only;
  return q;
}

void expect_same(const std::vector<SearchHit>& x, const std::vector<SearchHit>& y) {
  ASSERT_EQ(x.size(), y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    EXPECT_EQ(x[i].triple, y[i].triple);
    EXPECT_EQ(x[i].provenance, y[i].provenance);
  }
}

}  // namespace

TEST(SearchEuclid, ReproducesTableOne) {
  const auto hits = search_euclid(euclid_query(81, 5999, 2));
  for (auto t : {T(3, 4, 5), T(99, 20, 101), T(225, 272, 353), T(275, 252, 373), T(33, 544, 545), T(555, 572, 797),
                 T(777, 464, 905), T(595, 468, 757)})
    EXPECT_TRUE(contains(hits, t)) << t;
  EXPECT_EQ(hits.size(), 8U);
  EXPECT_TRUE(std::is_sorted(hits.begin(), hits.end(),
                             [](const SearchHit& a, const SearchHit& b) { return a.triple < b.triple; }));
}

TEST(SearchEuclid, SmallSweepMatchesBruteForce) {
  const auto hits = search_euclid(euclid_query(5, std::nullopt, 0));
  std::set<oracle::Key> expected;
  for (std::uint64_t a = 1; a <= 50; ++a)
    for (std::uint64_t b = a + 1; b <= 50; ++b)
      if (oracle::is_square(a * a + b * b)) {
        const auto c = oracle::isqrt(a * a + b * b);
        const auto odd = (a % 2 == 1) ? a : b;
        // Generator s satisfies s^2 = (c + odd leg) / 2.
        if (std::gcd(a, b) == 1 && (c + odd) / 2 <= 25) expected.insert(oracle::key(a, b, c));
      }
  // Generators (2,1) (3,2) (4,1) (4,3) (5,2) (5,4); every leg is at most 40.
  EXPECT_EQ(keys(triples_of(hits)), expected);
  EXPECT_EQ(hits.size(), 6U);
}

TEST(SearchEuclid, EachPrimitiveTripleOnce) {
  const auto hits = search_euclid(euclid_query(100, std::nullopt, 0));
  std::size_t generators = 0;
  for (std::uint64_t s = 2; s <= 100; ++s)
    for (std::uint64_t t = 1; t < s; ++t) generators += ((s + t) % 2 == 1 && std::gcd(s, t) == 1) ? 1 : 0;
  EXPECT_EQ(hits.size(), generators);
  EXPECT_EQ(keys(triples_of(hits)).size(), generators);
}

TEST(SearchEuclid, MultiplesWhenNotPrimitiveOnly) {
  auto q = euclid_query(std::nullopt, 100, 3);
  q.primitive_only = false;
  const auto hits = search_euclid(q);
  // Brute force over c <= 100 gives exactly these two all-palindrome triples.
  EXPECT_EQ(triples_of(hits), (std::vector<Triple>{T(3, 4, 5), T(33, 44, 55)}));
  EXPECT_EQ(hits[1].provenance.params.back(), (std::pair<std::string, std::string>{"k", "11"}));
}

TEST(SearchEuclid, DeterministicAcrossThreadCounts) {
  const auto q = euclid_query(300, 50000, 1);
  const auto one = search_euclid(q, {1});
  expect_same(one, search_euclid(q, {3}));
  expect_same(one, search_euclid(q, {8}));
}

TEST(SearchEuclid, HitsAreReverified) {
  for (const auto& h : search_euclid(euclid_query(150, std::nullopt, 2))) {
    EXPECT_EQ(h.triple.a() * h.triple.a() + h.triple.b() * h.triple.b(), h.triple.c() * h.triple.c());
    EXPECT_EQ(h.profile, profile(h.triple));
    EXPECT_GE(h.profile.count, 2);
    EXPECT_TRUE(h.primitive);
  }
}

TEST(SearchQuery, ValidateRequiresModeFields) {
  SearchQuery q;
  q.mode = SearchMode::euclid;
  EXPECT_THROW(q.validate(), std::invalid_argument);
  q.mode = SearchMode::anchored;
  EXPECT_THROW(q.validate(), std::invalid_argument);
  q.anchor_role = Role::odd_leg;
  EXPECT_THROW(q.validate(), std::invalid_argument);
  q.anchor_digits = DigitRange{3, 2};
  EXPECT_THROW(q.validate(), std::invalid_argument);
  q.mode = SearchMode::evidence;
  EXPECT_THROW(q.validate(), std::invalid_argument);
  q.max_c = 100;
  q.min_pal_count = 4;
  EXPECT_THROW(q.validate(), std::invalid_argument);
}

TEST(DecomposeOddLeg, Examples) {
  EXPECT_EQ(decompose_odd_leg(313), (std::vector<Triple>{T(313, 48984, 48985)}));
  EXPECT_EQ(decompose_odd_leg(3), (std::vector<Triple>{T(3, 4, 5)}));
  EXPECT_EQ(decompose_odd_leg(9), (std::vector<Triple>{T(9, 12, 15), T(9, 40, 41)}));
  EXPECT_THROW(decompose_odd_leg(4), std::invalid_argument);
  EXPECT_THROW(decompose_odd_leg(1), std::invalid_argument);
}

TEST(DecomposeEvenLeg, Examples) {
  EXPECT_EQ(decompose_even_leg(4), (std::vector<Triple>{T(3, 4, 5)}));
  EXPECT_EQ(decompose_even_leg(20), (std::vector<Triple>{T(15, 20, 25), T(21, 20, 29), T(20, 48, 52), T(99, 20, 101)}));
  const auto big = decompose_even_leg(48984);
  EXPECT_NE(std::find(big.begin(), big.end(), T(313, 48984, 48985)), big.end());
  EXPECT_THROW(decompose_even_leg(7), std::invalid_argument);
  EXPECT_THROW(decompose_even_leg(2), std::invalid_argument);
}

TEST(DecomposeHypotenuse, Examples) {
  EXPECT_EQ(decompose_hypotenuse(5, true), (std::vector<Triple>{T(3, 4, 5)}));
  EXPECT_EQ(decompose_hypotenuse(25, false), (std::vector<Triple>{T(7, 24, 25), T(15, 20, 25)}));
  EXPECT_EQ(decompose_hypotenuse(25, true), (std::vector<Triple>{T(7, 24, 25)}));
  const auto big = decompose_hypotenuse(48985, true);
  EXPECT_NE(std::find(big.begin(), big.end(), T(313, 48984, 48985)), big.end());
  EXPECT_TRUE(decompose_hypotenuse(7, false).empty());
  EXPECT_TRUE(decompose_hypotenuse(4, false).empty());
}

TEST(Decompose, OddLegsMatchBruteForce) {
  for (std::uint64_t a = 3; a <= 301; a += 2) ASSERT_EQ(keys(decompose_odd_leg(a)), oracle::triples_with_leg(a)) << a;
}

TEST(Decompose, EvenLegsMatchBruteForce) {
  for (std::uint64_t b = 4; b <= 300; b += 2) ASSERT_EQ(keys(decompose_even_leg(b)), oracle::triples_with_leg(b)) << b;
}

TEST(Decompose, HypotenusesMatchBruteForce) {
  for (std::uint64_t c = 5; c <= 1000; ++c) {
    ASSERT_EQ(keys(decompose_hypotenuse(c, false)), oracle::triples_with_hypotenuse(c)) << c;
    std::set<oracle::Key> primitive;
    for (const auto& k : oracle::triples_with_hypotenuse(c))
      if (std::gcd(k[0], k[1]) == 1) primitive.insert(k);
    ASSERT_EQ(keys(decompose_hypotenuse(c, true)), primitive) << c;
  }
}

TEST(Decompose, SortedAsDocumented) {
  const auto odd = decompose_odd_leg(105);
  EXPECT_TRUE(std::is_sorted(odd.begin(), odd.end(), [](auto& x, auto& y) { return x.c() < y.c(); }));
  const auto hyp = decompose_hypotenuse(5525, false);
  EXPECT_TRUE(std::is_sorted(hyp.begin(), hyp.end(), [](auto& x, auto& y) {
    return std::min(x.a(), x.b()) < std::min(y.a(), y.b());
  }));
}

TEST(AnchoredSearch, Examples) {
  auto hits = anchored_search(anchored_query(Role::odd_leg, 1, 3, 2));
  EXPECT_TRUE(contains(hits, T(3, 4, 5)));
  EXPECT_TRUE(contains(hits, T(313, 48984, 48985)));

  hits = anchored_search(anchored_query(Role::odd_leg, 5, 5, 2));
  EXPECT_TRUE(contains(hits, T(34743, 42824, 55145)));
  EXPECT_TRUE(contains(hits, T(55755, 25652, 61373)));
  EXPECT_TRUE(contains(hits, T(52625, 80808, 96433)));

  hits = anchored_search(anchored_query(Role::hypotenuse, 1, 1, 3));
  EXPECT_EQ(triples_of(hits), (std::vector<Triple>{T(3, 4, 5)}));
}

TEST(AnchoredSearch, DeduplicatesTriplesReachedFromTwoAnchors) {
  const auto hits = anchored_search(anchored_query(Role::even_leg, 2, 2, 2, false));
  const auto n = std::count_if(hits.begin(), hits.end(), [](const SearchHit& h) { return h.triple == T(66, 88, 110); });
  EXPECT_EQ(n, 1);
  const auto it = std::find_if(hits.begin(), hits.end(), [](const SearchHit& h) { return h.triple == T(66, 88, 110); });
  EXPECT_EQ(it->provenance.params[1].second, "66");
}

TEST(AnchoredSearch, EvenLegAnchorsFindTableTwoRow) {
  const auto hits = anchored_search(anchored_query(Role::even_leg, 5, 5, 2));
  EXPECT_TRUE(contains(hits, T(5578755, 80308, 5579333)));
  EXPECT_TRUE(contains(hits, T(52625, 80808, 96433)));
}

TEST(AnchoredSearch, DeterministicAcrossThreadCounts) {
  const auto q = anchored_query(Role::odd_leg, 1, 5, 1);
  expect_same(anchored_search(q, {1}), anchored_search(q, {8}));
}

TEST(AnchoredSearch, HitsMeetFilters) {
  for (const auto& h : anchored_search(anchored_query(Role::hypotenuse, 1, 4, 2))) {
    EXPECT_TRUE(h.primitive);
    EXPECT_GE(h.profile.count, 2);
    EXPECT_TRUE(is_palindrome(h.triple.c()));
  }
}

TEST(EvidenceSearch, Examples) {
  const auto hits = evidence_search(100000);
  EXPECT_EQ(triples_of(hits), (std::vector<Triple>{T(3, 4, 5)}));
  EXPECT_TRUE(evidence_search(4).empty());
}

TEST(EvidenceSearch, PrunedAgreesWithReference) {
  for (std::uint64_t max_c : {5ULL, 1000ULL, 100000ULL}) {
    expect_same(evidence_search(max_c, {1, true}), evidence_search(max_c, {1, false}));
  }
  expect_same(evidence_search(100000, {4, true}), evidence_search(100000, {1, false}));
}

TEST(EvidenceSearch, ReferenceSweepFindsNoOtherAllPalindromeTriple) {
  // Independent check: brute force over generators with string palindromes.
  std::size_t found = 0;
  for (std::uint64_t s = 2; s * s < 100000; ++s)
    for (std::uint64_t t = 1; t < s && s * s + t * t <= 100000; ++t) {
      if ((s + t) % 2 == 0 || std::gcd(s, t) != 1) continue;
      if (oracle::palindrome(s * s - t * t) && oracle::palindrome(2 * s * t) && oracle::palindrome(s * s + t * t)) ++found;
    }
  EXPECT_EQ(found, 1U);
}

TEST(RunSearch, Dispatches) {
  SearchQuery q;
  q.mode = SearchMode::evidence;
  q.max_c = 1000;
  EXPECT_EQ(run_search(q).size(), 1U);
  EXPECT_EQ(parse_role("even-leg"), Role::even_leg);
  EXPECT_FALSE(parse_role("leg").has_value());
}
