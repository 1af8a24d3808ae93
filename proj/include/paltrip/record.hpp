#pragma once

// Flat, serializable view of a triple plus where it came from. This is the
// schema of the CLI output (JSON lines, CSV, aligned table) and of the
// shipped golden-table resource.

#include "paltrip/catalog.hpp"
#include "paltrip/families.hpp"
#include "paltrip/search.hpp"

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace paltrip {

struct OutputRecord {
  // Decimal strings: components routinely exceed 64 bits.
  std::string x;
  std::string y;
  std::string z;
  bool primitive = false;
  std::array<bool, 3> pal_flags{};
  int pal_count = 0;
  std::string digit_parity;
  std::string source;
  std::vector<std::pair<std::string, std::string>> params;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

enum class OutputFormat { json, csv, table };

std::optional<OutputFormat> parse_format(std::string_view name);

/// Fills every derived field from three positive components, which need not
/// form a Pythagorean triple (golden rows are kept as printed).
OutputRecord make_record(const Natural& x, const Natural& y, const Natural& z, std::string source);

OutputRecord to_record(const SearchHit& hit);
OutputRecord to_record(const Triple& t, std::string source);
OutputRecord to_record(const FamilyMember& m);
OutputRecord to_record(const GoldenRow& row);

std::string to_json_line(const OutputRecord& r);

/// Throws std::invalid_argument on malformed input or missing fields.
OutputRecord record_from_json(std::string_view line);

/// Parses a JSON-lines document, skipping blank lines and '#'-prefixed
/// metadata lines.
std::vector<OutputRecord> read_json_lines(std::istream& in);

/// The metadata header written before persisted records: '#' followed by a
/// JSON object with tool, version, query and timestamp.
std::string metadata_line(std::string_view query, std::string_view timestamp);

/// JSON lines, CSV with a header row, or an aligned text table.
void write_records(std::ostream& out, const std::vector<OutputRecord>& records, OutputFormat format);

}  // namespace paltrip
