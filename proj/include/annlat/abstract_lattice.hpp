#ifndef ANNLAT_ABSTRACT_LATTICE_HPP
#define ANNLAT_ABSTRACT_LATTICE_HPP

#include "annlat/ortholattice.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace annlat {

/// Finite poset with optional orthocomplement, small enough for exhaustive
/// checks. Join/meet tables hold -1 where the bound is not unique.
struct AbstractOrtholattice {
  std::vector<std::string> elements;
  std::vector<std::vector<bool>> leq; // reflexive-transitive closure
  std::vector<int> ortho;             // empty for plain lattices
  int bottom = -1;
  int top = -1;
  std::vector<std::vector<int>> join_table;
  std::vector<std::vector<int>> meet_table;

  int size() const { return static_cast<int>(elements.size()); }
  bool has_ortho() const { return !ortho.empty(); }
  int index(const std::string& label) const;

  bool le(int x, int y) const { return leq[x][y]; }
  int join(int x, int y) const { return join_table[x][y]; }
  int meet(int x, int y) const { return meet_table[x][y]; }
};

/// Validates the poset (antisymmetry, bottom, top) and, when an
/// orthocomplement is given, involutivity and order reversal.
/// Throws MalformedPoset on violation; missing joins/meets are not an error
/// here (verify_ortholattice reports them).
AbstractOrtholattice make_lattice(
    std::vector<std::string> elements,
    const std::vector<std::pair<std::string, std::string>>& leq_pairs,
    const std::map<std::string, std::string>& ortho = {});

/// Ortholattice axioms, exhaustively: all joins/meets exist,
/// x and x-perp = 0, x or x-perp = 1, De Morgan.
SuiteReport verify_ortholattice(const AbstractOrtholattice& l);

/// y = x or (y and x-perp) for every comparable pair x <= y.
SuiteReport verify_orthomodular_exhaustive(const AbstractOrtholattice& l);

struct ModularityReport {
  bool modular = true;
  int checks = 0;
  std::string witness;
  // When modular: element heights, certified to satisfy
  // r(x) + r(y) = r(x or y) + r(x and y).
  std::vector<int> height;
  bool valuation_certified = false;
};

/// x <= z implies x or (y and z) = (x or y) and z, all triples; plain
/// lattices accepted. On a modular verdict the height valuation is computed
/// and certified.
ModularityReport verify_modular(const AbstractOrtholattice& l);

/// x commutes with y: x = (x and y) or (x and y-perp).
bool lattice_commutes(const AbstractOrtholattice& l, int x, int y);

/// {z : z commutes with every element}; verified closed under join, meet and
/// orthocomplement. Throws NotOrthomodular when l fails the orthomodular law.
std::vector<std::string> lattice_center_abstract(const AbstractOrtholattice& l);

/// [0, v] with the relative orthocomplement x -> x-perp and v.
AbstractOrtholattice interval_sublattice(const AbstractOrtholattice& l, int v);

// Stock fixtures.
AbstractOrtholattice boolean_lattice(int k);
AbstractOrtholattice mo2(); // 0, 1, p, p', q, q'
AbstractOrtholattice o6();  // hexagon: 0 < a < b < 1, 0 < b' < a' < 1
AbstractOrtholattice n5();  // pentagon, plain
AbstractOrtholattice chain_lattice(int n); // plain, n elements
AbstractOrtholattice horizontal_sum(const AbstractOrtholattice& a,
                                    const AbstractOrtholattice& b);
AbstractOrtholattice lattice_product(const AbstractOrtholattice& a,
                                     const AbstractOrtholattice& b);

} // namespace annlat

#endif
