// SPDX-License-Identifier: Apache-2.0
#include "octaq/cli.hpp"

#include "octaq/classify.hpp"
#include "octaq/mesh.hpp"
#include "octaq/report_json.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <memory>
#include <optional>

namespace octaq::cli {

namespace {

struct CoefficientError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

QuarticCoefficients parse_coeffs(const std::string& text) {
  std::vector<Rational> vals;
  std::size_t pos = 0;
  while (true) {
    auto comma = text.find(',', pos);
    std::string part = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      vals.push_back(parse_rational(part));
    } catch (const std::exception& e) {
      throw CoefficientError(std::string("invalid coefficient: ") + e.what());
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (vals.size() != 4) throw CoefficientError("--coeffs expects four values A,B,C,D");
  try {
    return QuarticCoefficients::make(vals[0], vals[1], vals[2], vals[3]);
  } catch (const NotAQuartic& e) {
    throw CoefficientError(e.what());
  }
}

int default_resolution() {
  if (const char* env = std::getenv("OCTAQ_RESOLUTION")) {
    try {
      std::size_t used = 0;
      int v = std::stoi(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw CLI::ValidationError("OCTAQ_RESOLUTION", "must be an integer");
  }
  return 64;
}

// Writes to --out when given, stdout otherwise.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::runtime_error("cannot open " + path);
      os_ = file_.get();
    }
  }
  std::ostream& operator*() { return *os_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* os_;
};

void print_text(const TopologyReport& r, std::ostream& os) {
  os << "case_label: " << r.case_label << '\n'
     << "components: " << r.components << '\n'
     << "unbounded: " << (r.unbounded ? "true" : "false") << '\n'
     << "nesting_depth: " << r.nesting_depth << '\n'
     << "singular_orbits:";
  for (const auto& o : r.singular_orbits) os << ' ' << to_string(o.locus) << '/' << o.size;
  os << '\n' << "case: " << r.bullet.id << " (" << to_string(r.bullet.status) << ")\n";
  for (const auto& c : r.conflicts) os << "conflict: " << c << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classifier and numerical verifier for octahedral-invariant quartic surfaces",
               "octaq"};
  app.require_subcommand(1);

  std::string coeffs, out_path, format, family = "eps", k_range, d_range;
  std::optional<int> resolution;
  int eps1 = 1, eps2 = -1;
  std::string beta = "1", c_value = "-1", b_value = "-1";
  bool dump = false;

  auto* classify_cmd = app.add_subcommand("classify", "classify a quartic");
  classify_cmd->add_option("--coeffs", coeffs, "A,B,C,D (integers, decimals or p/q)")->required();
  classify_cmd->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  classify_cmd->add_option("--out", out_path, "output path");

  auto* verify_cmd = app.add_subcommand("verify", "cross-check the classifier on a grid");
  verify_cmd->add_option("--coeffs", coeffs, "A,B,C,D")->required();
  verify_cmd->add_option("--resolution", resolution, "grid cells per axis");
  verify_cmd->add_option("--format", format, "json")->check(CLI::IsMember({"json"}));
  verify_cmd->add_option("--out", out_path, "output path");

  auto* sweep_cmd = app.add_subcommand("sweep", "classify along a parameter line");
  sweep_cmd->add_option("--family", family, "a0, b0, c0 or eps")
      ->check(CLI::IsMember({"a0", "b0", "c0", "eps"}));
  sweep_cmd->add_option("--eps1", eps1, "sign of B (eps)")->check(CLI::IsMember({-1, 1}));
  sweep_cmd->add_option("--eps2", eps2, "sign of C (eps)")->check(CLI::IsMember({-1, 1}));
  sweep_cmd->add_option("--beta", beta, "|A/B| (eps)");
  sweep_cmd->add_option("--c", c_value, "C with A=0,B=1 (a0) or A=1,B=0 (b0)");
  sweep_cmd->add_option("--b", b_value, "B with A=1,C=0 (c0)");
  sweep_cmd->add_option("--k-range", k_range, "LO:HI:STEP over k (eps)");
  sweep_cmd->add_option("--d-range", d_range, "LO:HI:STEP over D (a0, b0, c0)");
  sweep_cmd->add_option("--format", format, "csv")->check(CLI::IsMember({"csv"}));
  sweep_cmd->add_option("--out", out_path, "output path");

  auto* mesh_cmd = app.add_subcommand("mesh", "marching-cubes mesh as Wavefront OBJ");
  mesh_cmd->add_option("--coeffs", coeffs, "A,B,C,D")->required();
  mesh_cmd->add_option("--resolution", resolution, "grid cells per axis");
  mesh_cmd->add_option("--format", format, "obj")->check(CLI::IsMember({"obj"}));
  mesh_cmd->add_option("--out", out_path, "output path");

  auto* group_cmd = app.add_subcommand("group", "the 48-element symmetry group");
  group_cmd->add_flag("--dump", dump, "print all elements as JSON");
  group_cmd->add_option("--out", out_path, "output path");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "octaq: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*classify_cmd) {
      QuarticCoefficients q = parse_coeffs(coeffs);
      TopologyReport r = classify(q);
      Sink sink(out_path, out);
      if (format == "text")
        print_text(r, *sink);
      else
        *sink << to_json(r).dump(2) << '\n';
      return kOk;
    }
    if (*verify_cmd) {
      QuarticCoefficients q = parse_coeffs(coeffs);
      int n = resolution ? *resolution : default_resolution();
      if (n < 16 || n > kMaxResolution) throw CLI::ValidationError("--resolution", "must be in [16, 256]");
      TopologyReport r = classify(q);
      OracleReport o = verify(q, r, n);
      Sink sink(out_path, out);
      *sink << to_json(o).dump(2) << '\n';
      return o.agreement == Agreement::agree      ? kOk
             : o.agreement == Agreement::disagree ? kDisagree
                                                  : kInconclusive;
    }
    if (*sweep_cmd) {
      SweepSpec spec;
      spec.family = family == "a0"   ? Family::a_zero
                    : family == "b0" ? Family::b_zero
                    : family == "c0" ? Family::c_zero
                                     : Family::eps;
      spec.eps1 = eps1;
      spec.eps2 = eps2;
      try {
        spec.beta = parse_rational(beta);
        spec.c = parse_rational(c_value);
        spec.b = parse_rational(b_value);
      } catch (const std::exception& e) {
        throw CLI::ValidationError("sweep", e.what());
      }
      if (sign(spec.beta) <= 0) throw CLI::ValidationError("--beta", "must be positive");
      const std::string& range = spec.family == Family::eps ? k_range : d_range;
      if (range.empty())
        throw CLI::ValidationError("sweep", spec.family == Family::eps ? "--k-range is required"
                                                                       : "--d-range is required");
      try {
        spec.range = parse_range(range);
      } catch (const std::exception& e) {
        throw CLI::ValidationError("range", e.what());
      }
      Sink sink(out_path, out);
      *sink << sweep_csv_header() << '\n';
      for (const SweepRow& row : sweep(spec)) *sink << sweep_csv_row(row, spec) << '\n';
      return kOk;
    }
    if (*mesh_cmd) {
      QuarticCoefficients q = parse_coeffs(coeffs);
      int n = resolution ? *resolution : default_resolution();
      if (n < 16 || n > kMaxResolution || n % 2)
        throw CLI::ValidationError("--resolution", "must be even and in [16, 256]");
      Mesh m = extract_mesh(q, choose_box(q), n);
      Sink sink(out_path, out);
      m.write_obj(*sink);
      return kOk;
    }
    if (*group_cmd) {
      if (!dump) throw CLI::ValidationError("group", "nothing to do without --dump");
      Sink sink(out_path, out);
      *sink << to_json(octahedral_group()).dump(2) << '\n';
      return kOk;
    }
  } catch (const CoefficientError& e) {
    err << "octaq: " << e.what() << '\n';
    return kInvalidCoefficients;
  } catch (const CLI::Error& e) {
    err << "octaq: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "octaq: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace octaq::cli
