#include "annlat/io.hpp"

#include "annlat/error.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>

namespace annlat {
namespace {

using json = nlohmann::ordered_json;

json matrix_to_json(const SquareMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.dim(); ++j) {
      const Scalar& s = m.at(i, j);
      row.push_back(json::array(
          {format_rational(s.re), format_rational(s.im)}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

SquareMatrix matrix_from_json(const json& rows, int expect_dim) {
  if (!rows.is_array() || static_cast<int>(rows.size()) != expect_dim)
    throw Error(ErrorCode::ParseError, "matrix must have ambient_dim rows");
  SquareMatrix m(expect_dim);
  for (int i = 0; i < expect_dim; ++i) {
    const json& row = rows[i];
    if (!row.is_array() || static_cast<int>(row.size()) != expect_dim)
      throw Error(ErrorCode::ParseError, "matrix row of wrong length");
    for (int j = 0; j < expect_dim; ++j) {
      const json& entry = row[j];
      if (!entry.is_array() || entry.size() != 2)
        throw Error(ErrorCode::ParseError, "entry must be [re, im]");
      m.at(i, j) = Scalar(parse_rational(entry[0].get<std::string>()),
                          parse_rational(entry[1].get<std::string>()));
    }
  }
  return m;
}

json parse_or_throw(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw Error(ErrorCode::ParseError, "invalid JSON");
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

} // namespace

AlgebraFile parse_algebra(const std::string& json_text) {
  json j = parse_or_throw(json_text);
  AlgebraFile f;
  try {
    f.name = j.at("name").get<std::string>();
    f.ambient_dim = j.at("ambient_dim").get<int>();
    if (f.ambient_dim <= 0)
      throw Error(ErrorCode::ParseError, "ambient_dim must be positive");
    for (const json& g : j.at("generators"))
      f.generators.push_back(matrix_from_json(g, f.ambient_dim));
    if (j.contains("verbatim_basis"))
      f.verbatim_basis = j.at("verbatim_basis").get<bool>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return f;
}

std::string serialize_algebra(const AlgebraFile& file) {
  json j;
  j["name"] = file.name;
  j["ambient_dim"] = file.ambient_dim;
  json gens = json::array();
  for (const auto& g : file.generators) gens.push_back(matrix_to_json(g));
  j["generators"] = std::move(gens);
  if (file.verbatim_basis) j["verbatim_basis"] = true;
  return dump(j);
}

AlgebraFile algebra_file_from(const StarAlgebra& algebra) {
  AlgebraFile f;
  f.name = algebra.name();
  f.ambient_dim = algebra.ambient_dim();
  f.generators = algebra.basis();
  return f;
}

StarAlgebra realize_algebra(const AlgebraFile& file) {
  if (file.verbatim_basis)
    // Diagnostic mode: the span is taken as-is, without closure validation.
    // A span that is *- and product-closed always carries a unit, so this is
    // the only route on which the no-unit error is observable.
    return detail_finish_algebra(
        file.ambient_dim,
        span_of_matrices(file.generators, file.ambient_dim), file.name);
  return generate_star_algebra(file.ambient_dim, file.generators, file.name);
}

LatticeFile parse_lattice(const std::string& json_text) {
  json j = parse_or_throw(json_text);
  LatticeFile f;
  try {
    for (const json& e : j.at("elements"))
      f.elements.push_back(e.get<std::string>());
    for (const json& p : j.at("leq_pairs")) {
      if (!p.is_array() || p.size() != 2)
        throw Error(ErrorCode::ParseError, "leq pair must be [a, b]");
      f.leq_pairs.emplace_back(p[0].get<std::string>(),
                               p[1].get<std::string>());
    }
    if (j.contains("ortho"))
      for (const auto& [k, v] : j.at("ortho").items())
        f.ortho.emplace_back(k, v.get<std::string>());
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return f;
}

std::string serialize_lattice(const LatticeFile& file) {
  json j;
  j["elements"] = file.elements;
  json pairs = json::array();
  for (const auto& [a, b] : file.leq_pairs)
    pairs.push_back(json::array({a, b}));
  j["leq_pairs"] = std::move(pairs);
  if (!file.ortho.empty()) {
    json ortho;
    for (const auto& [a, b] : file.ortho) ortho[a] = b;
    j["ortho"] = std::move(ortho);
  }
  return dump(j);
}

AbstractOrtholattice realize_lattice(const LatticeFile& file) {
  std::map<std::string, std::string> ortho(file.ortho.begin(),
                                           file.ortho.end());
  return make_lattice(file.elements, file.leq_pairs, ortho);
}

std::string serialize_annihilator(const Annihilator& v) {
  json j;
  j["algebra_name"] = v.algebra->name();
  j["unit_projection"] = matrix_to_json(v.unit_projection);
  return dump(j);
}

std::string format_suite_results_text(const std::vector<SuiteResult>& results) {
  std::ostringstream os;
  for (const auto& r : results) {
    os << r.suite << " [" << r.anchor << "]: "
       << (r.pass ? "pass" : "FAIL") << " (" << r.checks << " checks)";
    if (!r.witness.empty()) os << "\n  witness: " << r.witness;
    if (!r.notes.empty()) os << "\n  note: " << r.notes;
    os << "\n";
  }
  return os.str();
}

std::string format_suite_results_json(const std::vector<SuiteResult>& results) {
  json arr = json::array();
  for (const auto& r : results) {
    json e;
    e["suite"] = r.suite;
    e["anchor"] = r.anchor;
    e["pass"] = r.pass;
    e["checks"] = r.checks;
    if (!r.witness.empty()) e["witness"] = r.witness;
    if (!r.notes.empty()) e["notes"] = r.notes;
    arr.push_back(std::move(e));
  }
  return dump(arr);
}

std::string format_type_report_text(const TypeReport& report) {
  std::ostringstream os;
  os << "factor: " << (report.is_factor ? "yes" : "no") << "\n"
     << "type: " << report.type_label << "\n"
     << "certificate: " << report.certificate_level << "\n"
     << "abelian family size: " << report.abelian_family.size() << "\n";
  return os.str();
}

std::string format_type_report_json(const TypeReport& report) {
  json j;
  j["factor"] = report.is_factor;
  j["type"] = report.type_label;
  j["multiset"] = report.type_multiset;
  j["certificate"] = report.certificate_level;
  j["abelian_family_size"] = report.abelian_family.size();
  return dump(j);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorCode::ParseError, "cannot read file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw Error(ErrorCode::ParseError, "cannot write file: " + path);
  out << content;
}

} // namespace annlat
