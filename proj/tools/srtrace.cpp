// Command-line front end for canonical-trace classification of
// Stanley-Reisner rings.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "srtrace/builtins.hpp"
#include "srtrace/error.hpp"
#include "srtrace/report.hpp"
#include "srtrace/sweep.hpp"

namespace {

using namespace srtrace;
using nlohmann::json;

enum ExitCode { kOk = 0, kFailure = 1, kParseError = 2, kUnsupported = 3, kInvariant = 4 };

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Dim1Unsupported:
    case ErrorCode::TrivialFactor:
    case ErrorCode::Disconnected:
    case ErrorCode::NotPseudomanifold:
      return kUnsupported;
    case ErrorCode::InvariantViolation:
      return kInvariant;
    case ErrorCode::IndexOutOfRange:
      return kFailure;
    default:
      return kParseError;
  }
}

std::string slurp(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MalformedInput, "cannot read '" + path + "'");
  return slurp(in);
}

// "-" reads stdin, an existing path is parsed, anything else is a builtin name.
ParsedComplex load_complex(const std::string& source) {
  if (source == "-") return parse_complex(slurp(std::cin));
  if (std::ifstream probe(source); probe) return parse_complex(slurp(probe));
  return {builtin(source), {}};
}

struct Common {
  std::string input;
  std::string field = "q";
  bool json_out = false;
  bool strict = false;
  bool all_faces = false;
};

void emit(const Report& report, bool as_json) {
  if (as_json)
    std::cout << json(report).dump(2) << '\n';
  else
    std::cout << render_text(report);
}

int cmd_analyze(const Common& opt) {
  auto parsed = load_complex(opt.input);
  const auto field = FieldSpec::parse(opt.field);
  emit(analyze_report(parsed.complex, field, {opt.all_faces}, std::move(parsed.warnings)),
       opt.json_out);
  return kOk;
}

int cmd_homology(const Common& opt) {
  auto parsed = load_complex(opt.input);
  const auto field = FieldSpec::parse(opt.field);
  emit(homology_report(parsed.complex, field, std::move(parsed.warnings)), opt.json_out);
  return kOk;
}

int cmd_classify(const Common& opt) {
  auto parsed = load_complex(opt.input);
  const auto field = FieldSpec::parse(opt.field);
  const auto r = classify_report(parsed.complex, field, {opt.all_faces}, std::move(parsed.warnings));
  emit(r, opt.json_out);
  if (opt.strict && has_non_normal_component(r)) {
    std::cerr << "error: non-normal input rejected by --strict\n";
    return kUnsupported;
  }
  return kOk;
}

int cmd_combine(const std::vector<std::string>& paths, bool as_json) {
  std::vector<RingDescriptor> descriptors;
  for (const auto& p : paths) {
    json doc;
    try {
      doc = json::parse(p == "-" ? slurp(std::cin) : read_file(p));
    } catch (const json::parse_error& e) {
      throw Error(ErrorCode::InvalidDescriptor, "'" + p + "': " + e.what());
    }
    // A file holds one descriptor or an array of them.
    if (doc.is_array())
      for (const auto& d : doc) descriptors.push_back(d.get<RingDescriptor>());
    else
      descriptors.push_back(doc.get<RingDescriptor>());
  }
  if (descriptors.size() < 2)
    throw Error(ErrorCode::InvalidDescriptor, "combine needs at least two descriptors");
  emit(combine_report(descriptors), as_json);
  return kOk;
}

int cmd_builtin(const std::string& name, bool list) {
  if (list || name.empty()) {
    for (const auto& n : builtin_names()) std::cout << n << '\n';
    return kOk;
  }
  std::cout << to_facet_list(builtin(name));
  return kOk;
}

int cmd_sweep(std::size_t max_vertices, std::size_t disconnected, bool as_json) {
  SweepOptions options;
  options.max_vertices = max_vertices;
  options.disconnected_max_vertices = disconnected;
  const auto s = run_sweep(options);
  json j = {{"complexes", s.complexes},
            {"connected", s.connected},
            {"connected_normal", s.connected_normal},
            {"field_checks", s.field_checks},
            {"betti_mismatches", s.betti_mismatches},
            {"euler_violations", s.euler_violations},
            {"gorenstein_not_cm", s.gorenstein_not_cm},
            {"cm_connected_not_normal", s.cm_connected_not_normal},
            {"punctured_equivalence_violations", s.punctured_equivalence_violations},
            {"unknown_verdicts", s.unknown_verdicts},
            {"unknown_verdicts_cm", s.unknown_verdicts_cm},
            {"max_ideal_in_high_dim", s.max_ideal_in_high_dim},
            {"cone_point_violations", s.cone_point_violations},
            {"pseudomanifold_top_violations", s.pseudomanifold_top_violations},
            {"disconnected_checked", s.disconnected_checked},
            {"disconnected_skipped_unknown", s.disconnected_skipped_unknown},
            {"disconnected_mismatches", s.disconnected_mismatches},
            {"failures", s.failures},
            {"ok", s.ok()}};
  if (as_json) {
    std::cout << j.dump(2) << '\n';
  } else {
    for (const auto& [key, value] : j.items())
      if (key != "failures") std::cout << key << ": " << value.dump() << '\n';
    for (const auto& f : s.failures) std::cout << "failure: " << f << '\n';
  }
  return s.ok() ? kOk : kInvariant;
}

void add_common(CLI::App* sub, Common& opt, bool with_strict) {
  sub->add_option("input", opt.input, "facet-list file, '-' for stdin, or a builtin name")
      ->required();
  sub->add_option("--field", opt.field, "coefficient field: q or fp:<p>");
  sub->add_flag("--json", opt.json_out, "emit JSON");
  sub->add_flag("--all-faces", opt.all_faces,
                "check Gorenstein-on-punctured at every face rather than at vertices");
  if (with_strict)
    sub->add_flag("--strict", opt.strict, "exit with status 3 on non-normal input");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Canonical trace ideals of Stanley-Reisner rings"};
  app.require_subcommand(1);

  Common analyze_opt, classify_opt, homology_opt;
  auto* analyze = app.add_subcommand("analyze", "scope flags and reduced homology");
  add_common(analyze, analyze_opt, false);
  auto* classify = app.add_subcommand("classify", "canonical trace classification");
  add_common(classify, classify_opt, true);
  auto* homology = app.add_subcommand("homology", "reduced Betti numbers");
  add_common(homology, homology_opt, false);

  std::vector<std::string> descriptor_paths;
  bool combine_json = false;
  auto* combine = app.add_subcommand("combine", "fiber-product trace of ring descriptors");
  combine->add_option("descriptors", descriptor_paths, "RingDescriptor JSON files")->required();
  combine->add_flag("--json", combine_json, "emit JSON");

  std::string builtin_name;
  bool builtin_list = false;
  auto* builtin_cmd = app.add_subcommand("builtin", "print a builtin complex as a facet list");
  builtin_cmd->add_option("name", builtin_name, "builtin name");
  builtin_cmd->add_flag("--list", builtin_list, "list builtin names");

  std::size_t sweep_vertices = 5;
  std::size_t sweep_disconnected = 6;
  bool sweep_json = false;
  auto* sweep = app.add_subcommand("sweep", "exhaustive property run over small complexes");
  sweep->add_option("--max-vertices", sweep_vertices, "largest vertex count (<= 5)");
  sweep->add_option("--disconnected-max-vertices", sweep_disconnected,
                    "largest total vertex count for disjoint unions (0 disables)");
  sweep->add_flag("--json", sweep_json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kParseError;
  }

  try {
    if (*analyze) return cmd_analyze(analyze_opt);
    if (*classify) return cmd_classify(classify_opt);
    if (*homology) return cmd_homology(homology_opt);
    if (*combine) return cmd_combine(descriptor_paths, combine_json);
    if (*builtin_cmd) return cmd_builtin(builtin_name, builtin_list);
    if (*sweep) return cmd_sweep(sweep_vertices, sweep_disconnected, sweep_json);
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kFailure;
}
