#pragma once

// Golden copies of the two published tables of primitive triples with at
// least two palindrome components, stored exactly as printed, plus a row
// verifier and a differ against fresh search output.

#include "paltrip/natural.hpp"
#include "paltrip/search.hpp"
#include "paltrip/triples.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace paltrip {

enum class TableId { table1, table2 };

std::string_view to_string(TableId t);

struct GoldenRow {
  Natural x;
  Natural y;
  Natural z;
  TableId source = TableId::table1;
  /// 1-based row number within its table.
  unsigned row = 0;
  std::string note;

  friend bool operator==(const GoldenRow&, const GoldenRow&) = default;
};

struct RowVerdict {
  GoldenRow row;
  bool pythagorean = false;
  bool primitive = false;
  int pal_count = 0;
  /// Present iff the row fails x^2 + y^2 = z^2, e.g. "z := 757 satisfies identity".
  std::optional<std::string> erratum_note;
  /// The row with its single corrected component, when one exists.
  std::optional<Triple> correction;

  /// Pythagorean, primitive, and at least two palindrome components.
  bool passes() const { return pythagorean && primitive && pal_count >= 2; }
};

const std::vector<GoldenRow>& golden_rows(TableId source);

RowVerdict verify_row(const GoldenRow& row);

/// Verdicts for table 1 followed by table 2.
std::vector<RowVerdict> verify_catalog();

struct CatalogDiff {
  std::vector<GoldenRow> matched;
  std::vector<GoldenRow> missing;
  std::vector<SearchHit> extra;
};

/// Compares search hits with a table. Rows failing the identity are matched on
/// their corrected values.
CatalogDiff diff_against_search(const std::vector<SearchHit>& hits, TableId source);

}  // namespace paltrip
