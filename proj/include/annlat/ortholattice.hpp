#ifndef ANNLAT_ORTHOLATTICE_HPP
#define ANNLAT_ORTHOLATTICE_HPP

#include "annlat/annihilator.hpp"
#include "annlat/policy.hpp"

#include <string>
#include <vector>

namespace annlat {

/// Exact rational in [0, 1]; D(V) = Tr(p_V) / Tr(unit).
using DimensionValue = Rational;

struct SuiteReport {
  std::string name;
  bool pass = true;
  int checks = 0;
  std::string witness; // first counterexample, human-readable

  void fail(std::string w) {
    if (pass) witness = std::move(w);
    pass = false;
  }
};

/// The lattice P of double annihilators of A. Never materialized; carries the
/// bounds and the sampling policy.
struct AnnLattice {
  const StarAlgebra* algebra = nullptr;
  NumericPolicy policy;
  Annihilator zero;
  Annihilator one;
};

AnnLattice make_ann_lattice(const StarAlgebra& algebra,
                            NumericPolicy policy = {});

/// V <= W (subspace containment, equivalently p_V p_W = p_V).
bool leq(const Annihilator& V, const Annihilator& W);

/// V or W = Ann(Ann({p_V, p_W})): the corner at the range of p_V + p_W.
Annihilator join(const Annihilator& V, const Annihilator& W);
Annihilator join_many(const StarAlgebra& algebra,
                      const std::vector<Annihilator>& parts);

/// V and W: the corner at unit - range((unit-p_V) + (unit-p_W)).
Annihilator meet(const Annihilator& V, const Annihilator& W);
Annihilator meet_many(const StarAlgebra& algebra,
                      const std::vector<Annihilator>& parts);

/// Ann(V): the corner at unit - p_V.
Annihilator orthocomplement(const Annihilator& V);

/// dV intersect d(V-perp) = {0}. For a corner pAp, x a y = x (pap) y for all
/// x, y in the corner, so the single pair (p, p) generates the whole
/// constraint family and dV = d(span{p}).
bool is_central(const Annihilator& V);

/// Smallest central annihilator containing V: the corner at the projection
/// onto span(A p C^n), verified central after the fact.
Annihilator central_support(const Annihilator& V);

/// X = (X and Y) or (X and Y-perp).
bool commutes(const Annihilator& X, const Annihilator& Y);

/// Every maximal commutative *-subalgebra of the corner has unit p_V;
/// checked against the deterministic greedy construction.
bool check_condition_A(const Annihilator& V);

DimensionValue dimension_function(const Annihilator& V);

/// Random element of P: the corner at the range of a random x*x.
Annihilator random_annihilator(const StarAlgebra& algebra, Sampler& sampler);

/// Draws `samples` comparable pairs X <= Y (X = V and W, Y = V) and checks
/// Y = X or (Y and X-perp) exactly.
SuiteReport verify_orthomodular_sampled(const AnnLattice& lattice, int samples);

} // namespace annlat

#endif
