#ifndef ANNLAT_IO_HPP
#define ANNLAT_IO_HPP

#include "annlat/abstract_lattice.hpp"
#include "annlat/annihilator.hpp"
#include "annlat/classification.hpp"
#include "annlat/suites.hpp"

#include <string>
#include <utility>
#include <vector>

namespace annlat {

/// On-disk algebra description. Entries are fraction strings ("3/2"), pairs
/// [re, im]; round-trips are bit-exact. With verbatim_basis the generator
/// list is taken as an already closed span (diagnostic mode: lets one feed a
/// span without a unit and observe the no-unit error).
struct AlgebraFile {
  std::string name;
  int ambient_dim = 0;
  std::vector<SquareMatrix> generators;
  bool verbatim_basis = false;
};

AlgebraFile parse_algebra(const std::string& json_text); // ParseError
std::string serialize_algebra(const AlgebraFile& file);
AlgebraFile algebra_file_from(const StarAlgebra& algebra);
StarAlgebra realize_algebra(const AlgebraFile& file); // may throw NoUnit

struct LatticeFile {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> leq_pairs;
  std::vector<std::pair<std::string, std::string>> ortho; // empty = plain
};

LatticeFile parse_lattice(const std::string& json_text);
std::string serialize_lattice(const LatticeFile& file);
AbstractOrtholattice realize_lattice(const LatticeFile& file);

std::string serialize_annihilator(const Annihilator& v);

std::string format_suite_results_text(const std::vector<SuiteResult>& results);
std::string format_suite_results_json(const std::vector<SuiteResult>& results);

std::string format_type_report_text(const TypeReport& report);
std::string format_type_report_json(const TypeReport& report);

std::string read_file(const std::string& path);  // ParseError on I/O failure
void write_file(const std::string& path, const std::string& content);

} // namespace annlat

#endif
