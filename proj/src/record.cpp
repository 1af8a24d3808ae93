#include "paltrip/record.hpp"

#include "paltrip/digits.hpp"

#include <json.hpp>

#include <algorithm>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace paltrip {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::array<std::string_view, 9> kColumns = {"x",           "y",           "z",      "primitive", "pal_flags",
                                                      "pal_count",   "digit_parity", "source", "params"};

std::string flags_string(const std::array<bool, 3>& f) {
  std::string s;
  for (bool b : f) s += b ? 'P' : '-';
  return s;
}

std::string params_string(const OutputRecord& r) {
  std::string s;
  for (const auto& [k, v] : r.params) {
    if (!s.empty()) s += ';';
    s += k + "=" + v;
  }
  return s;
}

std::vector<std::string> cells(const OutputRecord& r) {
  return {r.x,
          r.y,
          r.z,
          r.primitive ? "true" : "false",
          flags_string(r.pal_flags),
          std::to_string(r.pal_count),
          r.digit_parity,
          r.source,
          params_string(r)};
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  if (name == "table") return OutputFormat::table;
  return std::nullopt;
}

OutputRecord make_record(const Natural& x, const Natural& y, const Natural& z, std::string source) {
  OutputRecord r;
  r.x = x.str();
  r.y = y.str();
  r.z = z.str();
  r.primitive = gcd(gcd(x, y), z) == Natural(1);
  const std::array<const Natural*, 3> parts = {&x, &y, &z};
  for (std::size_t i = 0; i < 3; ++i) {
    r.pal_flags[i] = is_palindrome(*parts[i]);
    r.pal_count += r.pal_flags[i] ? 1 : 0;
    r.digit_parity += digit_count(*parts[i]) % 2 == 0 ? 'E' : 'O';
  }
  r.source = std::move(source);
  return r;
}

OutputRecord to_record(const Triple& t, std::string source) { return make_record(t.a(), t.b(), t.c(), std::move(source)); }

OutputRecord to_record(const SearchHit& hit) {
  OutputRecord r = to_record(hit.triple, std::string(to_string(hit.provenance.mode)));
  r.params = hit.provenance.params;
  return r;
}

OutputRecord to_record(const FamilyMember& m) {
  OutputRecord r = to_record(m.triple, std::string(to_string(m.family)));
  std::string pattern;
  for (const auto& t : m.predicted_pattern) pattern += (pattern.empty() ? "" : " ") + t.notation();
  r.params = {{"index", std::to_string(m.index)},
              {"generator", m.generator.str()},
              {"pattern", pattern},
              {"declared_pal_count", std::to_string(m.declared_pal_count)}};
  return r;
}

OutputRecord to_record(const GoldenRow& row) {
  OutputRecord r = make_record(row.x, row.y, row.z, std::string(to_string(row.source)));
  r.params = {{"row", std::to_string(row.row)}, {"note", row.note}};
  return r;
}

std::string to_json_line(const OutputRecord& r) {
  ordered_json j;
  j["x"] = r.x;
  j["y"] = r.y;
  j["z"] = r.z;
  j["primitive"] = r.primitive;
  j["pal_flags"] = r.pal_flags;
  j["pal_count"] = r.pal_count;
  j["digit_parity"] = r.digit_parity;
  j["source"] = r.source;
  j["params"] = ordered_json::object();
  for (const auto& [k, v] : r.params) j["params"][k] = v;
  return j.dump();
}

OutputRecord record_from_json(std::string_view line) {
  ordered_json j;
  try {
    j = ordered_json::parse(line);
    OutputRecord r;
    r.x = j.at("x").get<std::string>();
    r.y = j.at("y").get<std::string>();
    r.z = j.at("z").get<std::string>();
    r.primitive = j.at("primitive").get<bool>();
    r.pal_flags = j.at("pal_flags").get<std::array<bool, 3>>();
    r.pal_count = j.at("pal_count").get<int>();
    r.digit_parity = j.at("digit_parity").get<std::string>();
    r.source = j.at("source").get<std::string>();
    for (const auto& [k, v] : j.at("params").items()) r.params.emplace_back(k, v.get<std::string>());
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed record: ") + e.what());
  }
}

std::vector<OutputRecord> read_json_lines(std::istream& in) {
  std::vector<OutputRecord> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') continue;
    out.push_back(record_from_json(line));
  }
  return out;
}

std::string metadata_line(std::string_view query, std::string_view timestamp) {
  ordered_json j;
  j["tool"] = "paltrip";
  j["version"] = PALTRIP_VERSION;
  j["query"] = query;
  j["timestamp"] = timestamp;
  return "#" + j.dump();
}

void write_records(std::ostream& out, const std::vector<OutputRecord>& records, OutputFormat format) {
  switch (format) {
    case OutputFormat::json:
      for (const auto& r : records) out << to_json_line(r) << '\n';
      return;
    case OutputFormat::csv: {
      for (std::size_t i = 0; i < kColumns.size(); ++i) out << (i ? "," : "") << kColumns[i];
      out << '\n';
      for (const auto& r : records) {
        const auto row = cells(r);
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_escape(row[i]);
        out << '\n';
      }
      return;
    }
    case OutputFormat::table: {
      std::vector<std::vector<std::string>> rows;
      std::array<std::size_t, kColumns.size()> width{};
      for (std::size_t i = 0; i < kColumns.size(); ++i) width[i] = kColumns[i].size();
      for (const auto& r : records) {
        rows.push_back(cells(r));
        for (std::size_t i = 0; i < kColumns.size(); ++i) width[i] = std::max(width[i], rows.back()[i].size());
      }
      auto emit = [&](auto&& get) {
        std::string line;
        for (std::size_t i = 0; i < kColumns.size(); ++i) {
          std::string cell(get(i));
          if (i + 1 < kColumns.size()) cell.resize(width[i] + 2, ' ');
          line += cell;
        }
        out << line << '\n';
      };
      emit([&](std::size_t i) { return kColumns[i]; });
      for (const auto& row : rows) emit([&](std::size_t i) -> const std::string& { return row[i]; });
      return;
    }
  }
}

}  // namespace paltrip
