#include "annlat/classification.hpp"
#include "annlat/error.hpp"
#include "annlat/io.hpp"
#include "annlat/suites.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace annlat;
using ojson = nlohmann::ordered_json;

namespace {

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NoUnit: return 3;
    case ErrorCode::NotPositive: return 4;
    case ErrorCode::UnknownSuite: return 5;
    default: return 2; // parse / malformed input
  }
}

struct RunConfig {
  std::string input;
  std::string mode = "exact";
  double tol = 1e-9;
  std::uint64_t seed = 0;
  int samples = 200;
  std::string out;
  std::string format = "text";

  NumericPolicy policy() const {
    NumericPolicy p;
    p.mode = (mode == "float") ? NumericMode::Float : NumericMode::Exact;
    p.tolerance = tol;
    p.seed = seed;
    p.samples = samples;
    return p;
  }
};

void add_common(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--input", cfg.input, "input file")->required();
  cmd->add_option("--mode", cfg.mode, "numeric mode")
      ->check(CLI::IsMember({"exact", "float"}));
  cmd->add_option("--tol", cfg.tol, "float-mode tolerance")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", cfg.seed, "sampling seed");
  cmd->add_option("--samples", cfg.samples, "sample count")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--out", cfg.out, "write the report to this file");
  cmd->add_option("--format", cfg.format, "report format")
      ->check(CLI::IsMember({"text", "structured"}));
}

void emit(const RunConfig& cfg, const std::string& report) {
  if (!cfg.out.empty())
    write_file(cfg.out, report);
  else
    std::cout << report;
}

int cmd_generate(const RunConfig& cfg) {
  StarAlgebra a = realize_algebra(parse_algebra(read_file(cfg.input)));
  if (cfg.format == "structured") {
    ojson j;
    j["name"] = a.name();
    j["ambient_dim"] = a.ambient_dim();
    j["dim"] = a.dim();
    j["center_dim"] = a.center_basis().size();
    j["unital"] = true;
    j["unit"] = a.unit().to_string();
    emit(cfg, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << a.name() << ": dim " << a.dim() << ", center dim "
       << a.center_basis().size() << ", unital\nunit:\n"
       << a.unit().to_string() << "\n";
    emit(cfg, os.str());
  }
  return 0;
}

int cmd_annihilator(const RunConfig& cfg, const std::vector<int>& gen_indices) {
  AlgebraFile file = parse_algebra(read_file(cfg.input));
  StarAlgebra a = realize_algebra(file);
  std::vector<SquareMatrix> S;
  if (gen_indices.empty()) {
    S = file.generators;
  } else {
    for (int i : gen_indices) {
      if (i < 0 || i >= static_cast<int>(file.generators.size()))
        throw Error(ErrorCode::ParseError, "generator index out of range");
      S.push_back(file.generators[static_cast<std::size_t>(i)]);
    }
  }
  for (const SquareMatrix& s : S)
    if (!is_positive(a, s))
      throw Error(ErrorCode::NotPositive, "selected generator is not positive");
  Annihilator v = annihilator(a, S);
  // Hereditary cross-check: the kernel route must land on the corner at p.
  bool hereditary_ok = (v == corner_annihilator(a, v.unit_projection)) &&
                       v.span == corner_annihilator(a, v.unit_projection).span;
  if (cfg.format == "structured") {
    ojson j;
    j["algebra"] = a.name();
    j["dim"] = v.dim();
    j["unit_projection"] = v.unit_projection.to_string();
    j["hereditary"] = hereditary_ok;
    emit(cfg, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "annihilator in " << a.name() << ": dim " << v.dim()
       << "\nunit projection:\n" << v.unit_projection.to_string()
       << "\nhereditary: " << (hereditary_ok ? "yes" : "NO") << "\n";
    emit(cfg, os.str());
  }
  return 0;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite) {
  StarAlgebra a = realize_algebra(parse_algebra(read_file(cfg.input)));
  std::vector<SuiteResult> results;
  if (suite.empty() || suite == "all")
    results = run_all_suites(a, cfg.policy());
  else
    results.push_back(run_suite(suite, a, cfg.policy()));
  emit(cfg, cfg.format == "structured" ? format_suite_results_json(results)
                                       : format_suite_results_text(results));
  for (const SuiteResult& r : results)
    if (!r.pass) return 1;
  return 0;
}

int cmd_classify(const RunConfig& cfg) {
  StarAlgebra a = realize_algebra(parse_algebra(read_file(cfg.input)));
  TypeReport t = classify_type_In(a, cfg.policy());
  emit(cfg, cfg.format == "structured" ? format_type_report_json(t)
                                       : format_type_report_text(t));
  return 0;
}

int cmd_lattice(const RunConfig& cfg) {
  AbstractOrtholattice l = realize_lattice(parse_lattice(read_file(cfg.input)));
  const bool with_ortho = l.has_ortho();
  SuiteReport ortho, om;
  if (with_ortho) {
    ortho = verify_ortholattice(l);
    om = verify_orthomodular_exhaustive(l);
  } else {
    // Plain lattice: only the modularity verdict applies.
    ortho.fail("no orthocomplement given");
    om.fail("no orthocomplement given");
  }
  ModularityReport mod = verify_modular(l);
  std::vector<std::string> center;
  std::string type_label;
  std::vector<std::pair<std::string, std::string>> summands;
  if (om.pass) {
    center = lattice_center_abstract(l);
    LatticeTypeReport t = classify_lattice_type(l);
    type_label = t.label;
    summands = t.summands;
  }
  if (cfg.format == "structured") {
    ojson j;
    j["elements"] = l.elements.size();
    if (with_ortho) {
      j["ortholattice"] = ortho.pass;
      if (!ortho.witness.empty()) j["ortholattice_witness"] = ortho.witness;
      j["orthomodular"] = om.pass;
      if (!om.witness.empty()) j["orthomodular_witness"] = om.witness;
    }
    j["modular"] = mod.modular;
    if (!mod.witness.empty()) j["modular_witness"] = mod.witness;
    j["valuation_certified"] = mod.valuation_certified;
    if (om.pass) {
      j["center"] = center;
      j["type"] = type_label;
      ojson parts = ojson::array();
      for (const auto& [atom, label] : summands)
        parts.push_back(ojson{{"atom", atom}, {"label", label}});
      j["summands"] = std::move(parts);
    }
    emit(cfg, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "elements: " << l.elements.size() << "\n";
    if (with_ortho) {
      os << "ortholattice: " << (ortho.pass ? "yes" : "NO");
      if (!ortho.witness.empty()) os << ", witness " << ortho.witness;
      os << "\northomodular: " << (om.pass ? "yes" : "NO");
      if (!om.witness.empty()) os << ", witness " << om.witness;
      os << "\n";
    }
    os << "modular: " << (mod.modular ? "yes" : "NO");
    if (!mod.witness.empty()) os << ", witness " << mod.witness;
    if (mod.modular)
      os << " (height valuation "
         << (mod.valuation_certified ? "certified" : "not certified") << ")";
    if (om.pass) {
      os << "\ncenter: {";
      for (std::size_t i = 0; i < center.size(); ++i)
        os << (i ? ", " : "") << center[i];
      os << "}\ntype: " << type_label;
      for (const auto& [atom, label] : summands)
        os << "\n  [0, " << atom << "]: " << label;
    }
    os << "\n";
    emit(cfg, os.str());
  }
  if (!with_ortho) return mod.modular ? 0 : 1;
  return (ortho.pass && om.pass) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"annihilator lattices of finite-dimensional matrix *-algebras"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::vector<int> gen_indices;
  std::string suite;

  CLI::App* generate = app.add_subcommand("generate", "build an algebra and summarize it");
  add_common(generate, cfg);
  CLI::App* ann = app.add_subcommand("ann", "annihilator of selected generators");
  add_common(ann, cfg);
  ann->add_option("--gen", gen_indices, "generator indices (default: all)");
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  add_common(verify, cfg);
  verify->add_option("--suite", suite, "suite name, or 'all'");
  CLI::App* classify = app.add_subcommand("classify", "type classification");
  add_common(classify, cfg);
  CLI::App* lattice = app.add_subcommand("lattice", "abstract lattice checks");
  add_common(lattice, cfg);

  CLI11_PARSE(app, argc, argv);

  if (const char* env_seed = std::getenv("ANNLAT_SEED"))
    cfg.seed = std::strtoull(env_seed, nullptr, 10);

  try {
    if (generate->parsed()) return cmd_generate(cfg);
    if (ann->parsed()) return cmd_annihilator(cfg, gen_indices);
    if (verify->parsed()) return cmd_verify(cfg, suite);
    if (classify->parsed()) return cmd_classify(cfg);
    if (lattice->parsed()) return cmd_lattice(cfg);
  } catch (const Error& e) {
    std::cerr << "error [" << error_code_name(e.code()) << "]: " << e.what()
              << "\n";
    return exit_code_for(e.code());
  }
  return 2;
}
