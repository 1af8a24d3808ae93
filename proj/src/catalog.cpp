#include "paltrip/catalog.hpp"

#include "paltrip/digits.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace paltrip {

namespace {

struct PrintedRow {
  const char* x;
  const char* y;
  const char* z;
};

// Verbatim, including the row whose hypotenuse does not satisfy the identity.
constexpr std::array<PrintedRow, 8> kTable1 = {{
    {"3", "4", "5"},
    {"99", "20", "101"},
    {"225", "272", "353"},
    {"275", "252", "373"},
    {"33", "544", "545"},
    {"595", "468", "797"},
    {"555", "572", "797"},
    {"777", "464", "905"},
}};

constexpr std::array<PrintedRow, 13> kTable2 = {{
    {"313", "48984", "48985"},
    {"34743", "42824", "55145"},
    {"55755", "25652", "61373"},
    {"52625", "80808", "96433"},
    {"575575", "2152512", "2228137"},
    {"5578755", "80308", "5579333"},
    {"5853585", "2532352", "6377873"},
    {"5679765", "23711732", "24382493"},
    {"304070403", "402080204", "504110405"},
    {"341484143", "420282024", "541524145"},
    {"345696543", "422282224", "545736545"},
    {"359575953", "401141104", "538710545"},
    {"55873637855", "27280108272", "62177710753"},
}};

template <std::size_t N>
std::vector<GoldenRow> load(const std::array<PrintedRow, N>& rows, TableId source, const char* note) {
  std::vector<GoldenRow> out;
  for (std::size_t i = 0; i < N; ++i) {
    out.push_back({Natural::parse(rows[i].x), Natural::parse(rows[i].y), Natural::parse(rows[i].z), source,
                   static_cast<unsigned>(i + 1), note});
  }
  return out;
}

std::optional<Natural> solve_leg(const Natural& hyp, const Natural& other) {
  if (other >= hyp) return std::nullopt;
  return exact_sqrt(hyp * hyp - other * other);
}

}  // namespace

std::string_view to_string(TableId t) { return t == TableId::table1 ? "table1" : "table2"; }

const std::vector<GoldenRow>& golden_rows(TableId source) {
  static const std::vector<GoldenRow> t1 =
      load(kTable1, TableId::table1, "two palindrome components, s <= 81, hypotenuse < 6000");
  static const std::vector<GoldenRow> t2 = load(kTable2, TableId::table2, "further primitive triples with two palindrome components");
  return source == TableId::table1 ? t1 : t2;
}

RowVerdict verify_row(const GoldenRow& row) {
  RowVerdict v;
  v.row = row;
  v.pythagorean = row.x * row.x + row.y * row.y == row.z * row.z;
  v.primitive = gcd(gcd(row.x, row.y), row.z) == Natural(1);
  for (const Natural* n : {&row.x, &row.y, &row.z}) v.pal_count += is_palindrome(*n) ? 1 : 0;
  if (v.pythagorean) return v;

  // Try replacing one component at a time.
  if (auto z = exact_sqrt(row.x * row.x + row.y * row.y)) {
    v.erratum_note = "z := " + z->str() + " satisfies identity";
    v.correction = Triple::make(row.x, row.y, *z);
  } else if (auto y = solve_leg(row.z, row.x); y && !y->is_zero()) {
    v.erratum_note = "y := " + y->str() + " satisfies identity";
    v.correction = Triple::make(row.x, *y, row.z);
  } else if (auto x = solve_leg(row.z, row.y); x && !x->is_zero()) {
    v.erratum_note = "x := " + x->str() + " satisfies identity";
    v.correction = Triple::make(*x, row.y, row.z);
  } else {
    v.erratum_note = "no single-component correction";
  }
  return v;
}

std::vector<RowVerdict> verify_catalog() {
  std::vector<RowVerdict> out;
  for (TableId t : {TableId::table1, TableId::table2})
    for (const GoldenRow& r : golden_rows(t)) out.push_back(verify_row(r));
  return out;
}

CatalogDiff diff_against_search(const std::vector<SearchHit>& hits, TableId source) {
  CatalogDiff diff;
  std::vector<bool> used(hits.size(), false);
  for (const GoldenRow& row : golden_rows(source)) {
    const RowVerdict v = verify_row(row);
    std::optional<Triple> key = v.pythagorean ? std::optional<Triple>(Triple::make(row.x, row.y, row.z)) : v.correction;
    bool found = false;
    if (key) {
      for (std::size_t i = 0; i < hits.size(); ++i) {
        if (hits[i].triple == *key) {
          used[i] = true;
          found = true;
        }
      }
    }
    (found ? diff.matched : diff.missing).push_back(row);
  }
  for (std::size_t i = 0; i < hits.size(); ++i)
    if (!used[i]) diff.extra.push_back(hits[i]);
  return diff;
}

}  // namespace paltrip
