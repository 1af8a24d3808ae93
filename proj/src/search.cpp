#include "paltrip/search.hpp"

#include "paltrip/digits.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <stdexcept>
#include <thread>

namespace paltrip {

namespace {

using u128 = unsigned __int128;

constexpr std::uint64_t kGeneratorCap = std::uint64_t{1} << 31;

std::uint64_t isqrt64(std::uint64_t n) {
  u128 r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return static_cast<std::uint64_t>(r);
}

std::uint64_t require_u64(const Natural& n, const char* what) {
  auto v = n.to_u64();
  if (!v) throw std::out_of_range(std::string(what) + ": value exceeds the supported 64-bit range");
  return *v;
}

/// Prime factorization by trial division, as (prime, exponent) pairs.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  auto take = [&](std::uint64_t p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  };
  take(2);
  for (std::uint64_t p = 3; p <= n / p; p += 2) take(p);
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

/// Divisors of n^power (power 1 or 2), unsorted.
std::vector<u128> divisors_of_power(std::uint64_t n, unsigned power) {
  std::vector<u128> divs{1};
  for (auto [p, e] : factorize(n)) {
    const std::size_t base = divs.size();
    u128 pk = 1;
    for (unsigned k = 1; k <= e * power; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

std::vector<Triple> primitive_with_hypotenuse(std::uint64_t c) {
  std::vector<Triple> out;
  for (std::uint64_t t = 1; 2 * t * t < c; ++t) {
    const std::uint64_t rest = c - t * t;
    const std::uint64_t s = isqrt64(rest);
    if (s * s != rest || s <= t) continue;
    if ((s + t) % 2 == 0 || std::gcd(s, t) != 1) continue;
    out.push_back(widen(Triple64::from_generators(s, t)));
  }
  return out;
}

/// Runs work(worker) on `threads` workers and rethrows the first failure.
template <class Work>
void fan_out(unsigned threads, Work&& work) {
  threads = std::max(1U, threads);
  if (threads == 1) {
    work(0U);
    return;
  }
  std::vector<std::exception_ptr> errors(threads);
  {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        try {
          work(w);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

SearchHit make_hit(Triple t, Provenance prov) {
  SearchHit h{std::move(t), {}, false, std::move(prov)};
  h.profile = profile(h.triple);
  h.primitive = is_primitive(h.triple);
  return h;
}

Provenance generator_provenance(SearchMode mode, std::uint64_t s, std::uint64_t t, std::uint64_t k = 1) {
  Provenance p{mode, {{"s", std::to_string(s)}, {"t", std::to_string(t)}}};
  if (k != 1) p.params.emplace_back("k", std::to_string(k));
  return p;
}

void sort_hits(std::vector<SearchHit>& hits) {
  std::sort(hits.begin(), hits.end(), [](const SearchHit& x, const SearchHit& y) { return x.triple < y.triple; });
}

/// Merges per-worker buckets and sorts.
std::vector<SearchHit> merge(std::vector<std::vector<SearchHit>>& buckets) {
  std::vector<SearchHit> out;
  for (auto& b : buckets) std::move(b.begin(), b.end(), std::back_inserter(out));
  sort_hits(out);
  return out;
}

}  // namespace

std::string_view to_string(SearchMode m) {
  switch (m) {
    case SearchMode::euclid: return "euclid";
    case SearchMode::anchored: return "anchored";
    case SearchMode::evidence: return "evidence";
  }
  return "?";
}

std::string_view to_string(Role r) {
  switch (r) {
    case Role::odd_leg: return "odd-leg";
    case Role::even_leg: return "even-leg";
    case Role::hypotenuse: return "hypotenuse";
  }
  return "?";
}

std::optional<Role> parse_role(std::string_view name) {
  for (Role r : {Role::odd_leg, Role::even_leg, Role::hypotenuse})
    if (to_string(r) == name) return r;
  return std::nullopt;
}

void SearchQuery::validate() const {
  if (min_pal_count < 0 || min_pal_count > 3) throw std::invalid_argument("min palindrome count must be in 0..3");
  switch (mode) {
    case SearchMode::euclid:
      if (!max_s && !max_c) throw std::invalid_argument("euclid search requires max_s or max_c");
      break;
    case SearchMode::anchored:
      if (!anchor_role) throw std::invalid_argument("anchored search requires an anchor role");
      if (!anchor_digits) throw std::invalid_argument("anchored search requires a digit range");
      if (anchor_digits->min < 1 || anchor_digits->min > anchor_digits->max)
        throw std::invalid_argument("anchored search requires 1 <= min digits <= max digits");
      if (anchor_digits->max > 19) throw std::invalid_argument("anchored search supports at most 19-digit anchors");
      break;
    case SearchMode::evidence:
      if (!max_c) throw std::invalid_argument("evidence search requires max_c");
      break;
  }
}

std::uint64_t max_generator_for(std::uint64_t max_c) {
  if (max_c < 2) return 1;
  return std::min(isqrt64(max_c - 1), kGeneratorCap);
}

std::vector<SearchHit> search_euclid(const SearchQuery& q, const SearchOptions& opt) {
  q.validate();
  const std::uint64_t max_c = q.max_c.value_or(std::numeric_limits<std::uint64_t>::max());
  const std::uint64_t max_s = std::min(q.max_s.value_or(kGeneratorCap), max_generator_for(max_c));
  const bool multiples = !q.primitive_only && q.max_c.has_value();
  const unsigned threads = std::max(1U, opt.threads);

  std::vector<std::vector<SearchHit>> buckets(threads);
  fan_out(threads, [&](unsigned w) {
    auto& out = buckets[w];
    visit_primitive_triples(
        max_s, max_c,
        [&](const Triple64& t, std::uint64_t s, std::uint64_t r) {
          if (profile(t).count >= q.min_pal_count) out.push_back(make_hit(widen(t), generator_provenance(SearchMode::euclid, s, r)));
          if (!multiples) return;
          for (std::uint64_t k = 2; t.c() <= max_c / k; ++k) {
            const Triple64 m = Triple64::make(k * t.a(), k * t.b(), k * t.c());
            if (profile(m).count >= q.min_pal_count)
              out.push_back(make_hit(widen(m), generator_provenance(SearchMode::euclid, s, r, k)));
          }
        },
        2 + w, threads);
  });
  return merge(buckets);
}

std::vector<Triple> decompose_odd_leg(const Natural& a) {
  if (a.is_even() || a < Natural(3)) throw std::invalid_argument("decompose_odd_leg: requires an odd leg >= 3");
  const std::uint64_t leg = require_u64(a, "decompose_odd_leg");
  const u128 square = u128{leg} * leg;
  std::vector<Triple> out;
  // a^2 = (c - b)(c + b) with both factors odd.
  for (u128 e : divisors_of_power(leg, 2)) {
    if (e >= leg) continue;
    const u128 d = square / e;
    out.push_back(Triple::make(a, Natural::from_u128((d - e) / 2), Natural::from_u128((d + e) / 2)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Triple> decompose_even_leg(const Natural& b) {
  if (b.is_odd() || b < Natural(4)) throw std::invalid_argument("decompose_even_leg: requires an even leg >= 4");
  const std::uint64_t half = require_u64(b, "decompose_even_leg") / 2;
  const u128 square = u128{half} * half;
  std::vector<Triple> out;
  // (b/2)^2 = m n with c - a = 2m and c + a = 2n.
  for (u128 m : divisors_of_power(half, 2)) {
    if (m >= half) continue;
    const u128 n = square / m;
    out.push_back(Triple::make(Natural::from_u128(n - m), b, Natural::from_u128(n + m)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Triple> decompose_hypotenuse(const Natural& c, bool primitive_only) {
  if (c < Natural(5)) return {};
  const std::uint64_t hyp = require_u64(c, "decompose_hypotenuse");
  if (hyp > (std::uint64_t{1} << 62)) throw std::out_of_range("decompose_hypotenuse: value exceeds the supported range");
  std::vector<Triple> out;
  if (primitive_only) {
    out = primitive_with_hypotenuse(hyp);
  } else {
    // Every triple is g times a primitive one whose hypotenuse is c / g.
    for (u128 g : divisors_of_power(hyp, 1)) {
      const auto reduced = static_cast<std::uint64_t>(hyp / g);
      if (reduced < 5) continue;
      for (const Triple& p : primitive_with_hypotenuse(reduced)) out.push_back(scale(p, Natural::from_u128(g)));
    }
  }
  std::sort(out.begin(), out.end(), [](const Triple& x, const Triple& y) {
    return std::min(x.a(), x.b()) < std::min(y.a(), y.b());
  });
  return out;
}

std::vector<SearchHit> anchored_search(const SearchQuery& q, const SearchOptions& opt) {
  q.validate();
  const Role role = *q.anchor_role;
  std::optional<Parity> parity;
  Natural minimum;
  switch (role) {
    case Role::odd_leg:
      parity = Parity::odd;
      minimum = 3;
      break;
    case Role::even_leg:
      parity = Parity::even;
      minimum = 4;
      break;
    case Role::hypotenuse:
      minimum = 5;
      break;
  }

  std::vector<Natural> anchors;
  for (Natural& p : enumerate_palindromes(q.anchor_digits->min, q.anchor_digits->max, parity))
    if (p >= minimum) anchors.push_back(std::move(p));

  const unsigned threads = std::max(1U, opt.threads);
  std::vector<std::vector<SearchHit>> buckets(threads);
  fan_out(threads, [&](unsigned w) {
    for (std::size_t i = w; i < anchors.size(); i += threads) {
      const Natural& anchor = anchors[i];
      std::vector<Triple> triples;
      switch (role) {
        case Role::odd_leg: triples = decompose_odd_leg(anchor); break;
        case Role::even_leg: triples = decompose_even_leg(anchor); break;
        case Role::hypotenuse: triples = decompose_hypotenuse(anchor, q.primitive_only); break;
      }
      for (Triple& t : triples) {
        if (q.primitive_only && !is_primitive(t)) continue;
        if (profile(t).count < q.min_pal_count) continue;
        buckets[w].push_back(make_hit(std::move(t), Provenance{SearchMode::anchored,
                                                               {{"role", std::string(to_string(role))},
                                                                {"anchor", anchor.str()}}}));
      }
    }
  });

  std::vector<SearchHit> hits = merge(buckets);
  // Keep the smallest anchor per triple; anchors are compared numerically.
  auto anchor_of = [](const SearchHit& h) { return Natural::parse(h.provenance.params[1].second); };
  std::stable_sort(hits.begin(), hits.end(), [&](const SearchHit& x, const SearchHit& y) {
    if (x.triple != y.triple) return x.triple < y.triple;
    return anchor_of(x) < anchor_of(y);
  });
  hits.erase(std::unique(hits.begin(), hits.end(),
                         [](const SearchHit& x, const SearchHit& y) { return x.triple == y.triple; }),
             hits.end());
  return hits;
}

std::vector<SearchHit> evidence_search(std::uint64_t max_c, const SearchOptions& opt) {
  if (max_c < 5) return {};
  const unsigned threads = std::max(1U, opt.threads);
  const std::uint64_t max_s = max_generator_for(max_c);

  std::vector<std::vector<SearchHit>> buckets(threads);
  fan_out(threads, [&](unsigned w) {
    visit_primitive_triples(
        max_s, max_c,
        [&](const Triple64& t, std::uint64_t s, std::uint64_t r) {
          if (opt.prune) {
            // A palindrome never ends in 0.
            if (last_digit(t.a()) == 0 || last_digit(t.b()) == 0 || last_digit(t.c()) == 0) return;
            if (!digit_parity_form(t).admissible) return;
            if (!all_palindrome_prefilter(t)) return;
          }
          if (profile(t).count == 3) buckets[w].push_back(make_hit(widen(t), generator_provenance(SearchMode::evidence, s, r)));
        },
        2 + w, threads);
  });
  return merge(buckets);
}

std::vector<SearchHit> run_search(const SearchQuery& q, const SearchOptions& opt) {
  q.validate();
  switch (q.mode) {
    case SearchMode::euclid: return search_euclid(q, opt);
    case SearchMode::anchored: return anchored_search(q, opt);
    case SearchMode::evidence: return evidence_search(*q.max_c, opt);
  }
  return {};
}

}  // namespace paltrip
