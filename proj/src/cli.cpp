#include "paltrip/cli.hpp"

#include "paltrip/catalog.hpp"
#include "paltrip/families.hpp"
#include "paltrip/record.hpp"
#include "paltrip/search.hpp"
#include "paltrip/triples.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <ostream>
#include <thread>

namespace paltrip::cli {

namespace {

struct Options {
  std::string format = "json";
  std::string out_file;
  unsigned threads = 0;

  std::string family_name;
  unsigned from = 0;
  bool from_set = false;
  unsigned count = 1;
  bool verify = false;

  std::uint64_t max_s = 0;
  std::uint64_t max_z = 0;
  int min_pal = 0;
  bool primitive_only = false;
  std::string role;
  unsigned min_digits = 1;
  unsigned max_digits = 1;

  std::string number;
  bool no_prune = false;
  std::vector<std::string> components;
};

unsigned default_threads() {
  if (const char* env = std::getenv("PAL_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Role require_role(const std::string& name) {
  auto r = parse_role(name);
  if (!r) throw CLI::ValidationError("--role", "expected odd-leg, even-leg or hypotenuse, got '" + name + "'");
  return *r;
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

int cmd_family(const Options& o, std::vector<OutputRecord>& records, std::ostream& err) {
  const auto fam = parse_family(o.family_name);
  if (!fam) throw CLI::ValidationError("family", "unknown family '" + o.family_name + "'");
  const unsigned from = o.from_set ? o.from : first_index(*fam);
  int failures = 0;
  for (unsigned i = 0; i < o.count; ++i) {
    const FamilyMember m = member(*fam, from + i);
    OutputRecord r = to_record(m);
    if (o.verify) {
      const bool ok = pattern_check(m);
      r.params.emplace_back("pattern_check", ok ? "pass" : "fail");
      if (!ok) {
        ++failures;
        err << to_string(*fam) << " member " << m.index << " " << to_string(m.triple) << " fails its pattern check\n";
      }
    }
    records.push_back(std::move(r));
  }
  return failures ? kExitVerifyFailed : kExitOk;
}

int cmd_classify(const Options& o, std::vector<OutputRecord>& records) {
  const Triple t = Triple::make(Natural::parse(o.components.at(0)), Natural::parse(o.components.at(1)),
                                Natural::parse(o.components.at(2)));
  OutputRecord r = to_record(t, "classify");
  const DigitParityForm form = digit_parity_form(t);
  r.params.emplace_back("digit_parity_admissible", yes_no(form.admissible));
  if (is_primitive(t)) {
    const Lemma42Report l = lemma42_report(t);
    r.params.emplace_back("exactly_one_leg_div3", yes_no(l.exactly_one_leg_div3));
    r.params.emplace_back("even_leg_div4", yes_no(l.even_leg_div4));
    r.params.emplace_back("exactly_one_component_div5", yes_no(l.exactly_one_component_div5));
    r.params.emplace_back("table3_form", std::string(to_string(table3_form(t))));
    r.params.emplace_back("prefilter", yes_no(all_palindrome_prefilter(t)));
  } else {
    for (const char* key : {"exactly_one_leg_div3", "even_leg_div4", "exactly_one_component_div5", "table3_form", "prefilter"})
      r.params.emplace_back(key, "n/a");
  }
  records.push_back(std::move(r));
  return kExitOk;
}

int cmd_verify_tables(std::vector<OutputRecord>& records, std::ostream& err) {
  int failures = 0;
  for (const RowVerdict& v : verify_catalog()) {
    OutputRecord r = to_record(v.row);
    r.params.emplace_back("pythagorean", yes_no(v.pythagorean));
    r.params.emplace_back("verdict", v.passes() ? "pass" : "fail");
    if (v.erratum_note) r.params.emplace_back("erratum", *v.erratum_note);
    if (!v.passes()) {
      ++failures;
      err << to_string(v.row.source) << " row " << v.row.row << " (" << v.row.x << ", " << v.row.y << ", " << v.row.z
          << ")";
      if (!v.pythagorean) err << " fails x^2 + y^2 = z^2";
      if (!v.primitive) err << " is not primitive";
      if (v.pal_count < 2) err << " has fewer than two palindrome components";
      if (v.erratum_note) err << "; " << *v.erratum_note;
      err << '\n';
    }
    records.push_back(std::move(r));
  }
  return failures ? kExitVerifyFailed : kExitOk;
}

std::vector<OutputRecord> to_records(const std::vector<SearchHit>& hits) {
  std::vector<OutputRecord> out;
  out.reserve(hits.size());
  for (const auto& h : hits) out.push_back(to_record(h));
  return out;
}

std::string joined(const std::vector<std::string>& args) {
  std::string s;
  for (std::size_t i = 1; i < args.size(); ++i) s += (i > 1 ? " " : "") + args[i];
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Pythagorean triples with palindromic components", "paltrip"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--out", o.out_file, "Also persist records as JSON lines with a metadata header");
  app.add_option("--threads", o.threads, "Worker threads (default: $PAL_THREADS, else all cores)")
      ->check(CLI::PositiveNumber);

  auto* family = app.add_subcommand("family", "Members of a constructive family");
  family->add_option("name", o.family_name, "NPPT-1A|NPPT-1B|NPPT-2A|NPPT-2B|NPPT-3|PPT-1")->required();
  family->add_option("--from", o.from, "First member index")->each([&](const std::string&) { o.from_set = true; });
  family->add_option("--count", o.count, "Number of members")->check(CLI::PositiveNumber);
  family->add_flag("--verify", o.verify, "Check each member against its predicted digit pattern");

  auto* search = app.add_subcommand("search", "Search for triples");
  search->require_subcommand(1);
  auto* euclid = search->add_subcommand("euclid", "Sweep Euclid generators");
  euclid->add_option("--max-s", o.max_s, "Largest generator s");
  euclid->add_option("--max-z", o.max_z, "Largest hypotenuse");
  euclid->add_option("--min-pal", o.min_pal, "Minimum palindrome components")->check(CLI::Range(0, 3));
  euclid->add_flag("--primitive-only", o.primitive_only, "Primitive triples only");
  auto* anchored = search->add_subcommand("anchored", "Complete palindromic anchors into triples");
  anchored->add_option("--role", o.role, "odd-leg|even-leg|hypotenuse")->required();
  anchored->add_option("--min-digits", o.min_digits, "Fewest anchor digits")->required()->check(CLI::PositiveNumber);
  anchored->add_option("--max-digits", o.max_digits, "Most anchor digits")->required()->check(CLI::PositiveNumber);
  anchored->add_option("--min-pal", o.min_pal, "Minimum palindrome components")->check(CLI::Range(0, 3));
  anchored->add_flag("--primitive-only", o.primitive_only, "Primitive triples only");

  auto* decompose = app.add_subcommand("decompose", "All triples containing a given leg or hypotenuse");
  decompose->add_option("--role", o.role, "odd-leg|even-leg|hypotenuse")->required();
  decompose->add_option("number", o.number, "Component value")->required();
  decompose->add_flag("--primitive-only", o.primitive_only, "Primitive triples only");

  auto* evidence = app.add_subcommand("evidence", "Primitive triples with three palindrome components");
  evidence->add_option("--max-z", o.max_z, "Largest hypotenuse")->required();
  evidence->add_flag("--no-prune", o.no_prune, "Disable the digit and divisibility filters");

  auto* classify = app.add_subcommand("classify", "Palindrome profile and divisibility form of a triple");
  classify->add_option("components", o.components, "X Y Z")->required()->expected(3);

  auto* verify_tables = app.add_subcommand("verify-tables", "Check the golden tables");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  const OutputFormat format = *parse_format(o.format);
  const SearchOptions search_opts{o.threads ? o.threads : default_threads(), !o.no_prune};
  std::vector<OutputRecord> records;
  int status = kExitOk;
  try {
    if (family->parsed()) {
      status = cmd_family(o, records, err);
    } else if (euclid->parsed()) {
      SearchQuery q;
      q.mode = SearchMode::euclid;
      if (euclid->count("--max-s")) q.max_s = o.max_s;
      if (euclid->count("--max-z")) q.max_c = o.max_z;
      q.min_pal_count = o.min_pal;
      q.primitive_only = o.primitive_only;
      records = to_records(search_euclid(q, search_opts));
    } else if (anchored->parsed()) {
      SearchQuery q;
      q.mode = SearchMode::anchored;
      q.anchor_role = require_role(o.role);
      q.anchor_digits = DigitRange{o.min_digits, o.max_digits};
      q.min_pal_count = o.min_pal;
      q.primitive_only = o.primitive_only;
      records = to_records(anchored_search(q, search_opts));
    } else if (decompose->parsed()) {
      const Role role = require_role(o.role);
      const Natural n = Natural::parse(o.number);
      std::vector<Triple> triples;
      switch (role) {
        case Role::odd_leg: triples = decompose_odd_leg(n); break;
        case Role::even_leg: triples = decompose_even_leg(n); break;
        case Role::hypotenuse: triples = decompose_hypotenuse(n, o.primitive_only); break;
      }
      for (const Triple& t : triples) {
        if (o.primitive_only && !is_primitive(t)) continue;
        OutputRecord r = to_record(t, "decompose");
        r.params = {{"role", o.role}, {"value", n.str()}};
        records.push_back(std::move(r));
      }
    } else if (evidence->parsed()) {
      records = to_records(evidence_search(o.max_z, search_opts));
    } else if (classify->parsed()) {
      status = cmd_classify(o, records);
    } else if (verify_tables->parsed()) {
      status = cmd_verify_tables(records, err);
    }
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  write_records(out, records, format);
  if (!o.out_file.empty()) {
    std::ofstream file(o.out_file);
    if (!file) {
      err << "error: cannot open " << o.out_file << " for writing\n";
      return kExitUsage;
    }
    file << metadata_line(joined(args), utc_timestamp()) << '\n';
    write_records(file, records, OutputFormat::json);
  }
  return status;
}

}  // namespace paltrip::cli
