#ifndef ANNLAT_CLASSIFICATION_HPP
#define ANNLAT_CLASSIFICATION_HPP

#include "annlat/abstract_lattice.hpp"
#include "annlat/annihilator.hpp"
#include "annlat/ortholattice.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace annlat {

struct TypeReport {
  bool is_factor = false;
  Annihilator A_I, A_II, A_III;
  std::vector<Annihilator> abelian_family;
  std::vector<int> type_multiset; // n per central summand, e.g. {2, 1}
  std::string type_label;         // "I_2 + I_1"
  std::string certificate_level;  // "exact" or "float(<tol>)"
};

struct EquivalenceWitness {
  std::string kind; // "trace-certificate"
  // (Tr(c p_V), Tr(c p_W)) for each center basis element c.
  std::vector<std::pair<Scalar, Scalar>> trace_pairs;
};

/// Rational eigenvalues of a self-adjoint element: numeric eigenvalues are
/// rationalized and verified as exact roots of the minimal polynomial.
std::vector<Rational> rational_eigenvalues(const SquareMatrix& x);

/// Exact spectral projection of self-adjoint x for the rational eigenvalue
/// lambda != 0: g(x)/g(lambda) with minpoly = (t - lambda) g. Stays inside
/// any algebra containing x.
SquareMatrix exact_spectral_projection(const SquareMatrix& x,
                                       const Rational& lambda);

bool is_abelian_annihilator(const Annihilator& V);

/// dim center == 1; cross-validated in float mode by a witness-ideal search.
bool is_factor(const StarAlgebra& algebra);

/// An exact nonzero Abelian annihilator inside the corner R, found by
/// rational spectral splitting; nullopt when R = {0} or every split is
/// irrational.
std::optional<Annihilator> find_abelian_annihilator(const StarAlgebra& algebra,
                                                    const Annihilator& R);

/// Always true in finite dimension; the interest is the certificate.
bool has_nonzero_abelian_annihilator(const StarAlgebra& algebra,
                                     Annihilator* certificate = nullptr);

/// Minimal central projections. Splitting uses rational eigenvalues first;
/// summands whose central idempotents are irrational stay merged in `exact`
/// and get float refinements in `approx`.
struct CentralAtoms {
  // Orthogonal central projections summing to the unit.
  std::vector<SquareMatrix> exact;
  // exact[i] has a 1-dimensional corner center (a true atom); uncertified
  // entries need float refinement.
  std::vector<bool> atom_certified;
  bool all_exact = true;
};

CentralAtoms central_atoms(const StarAlgebra& algebra, double tol = 1e-9);

/// Theorem-21-style decomposition. Finite dimension always lands in A_I; the
/// II/III branches still execute on Ann(A_I).
TypeReport decompose_types(const StarAlgebra& algebra, NumericPolicy policy = {});

/// Per-central-summand I_n classification via maximal families of pairwise
/// orthogonal Abelian annihilators; n cross-checked against sqrt(dim) of the
/// summand span.
TypeReport classify_type_In(const StarAlgebra& algebra, NumericPolicy policy = {});

/// V ~ W via the exact center-trace criterion.
std::pair<bool, EquivalenceWitness> equivalent_annihilators(
    const Annihilator& V, const Annihilator& W);

/// Murray-von Neumann equivalence of projections, same criterion.
bool projections_equivalent(const StarAlgebra& algebra, const SquareMatrix& p,
                            const SquareMatrix& q);

/// No proper subprojection is equivalent to p. The ambient trace is faithful
/// and center-trace equality forces equal traces, so in this model every
/// projection is finite; validated and returned as such.
bool is_finite_projection(const StarAlgebra& algebra, const SquareMatrix& p);

struct LatticeTypeReport {
  std::string label; // modular | locally modular | purely nonmodular |
                     // has-abelian-atoms | mixed
  std::vector<std::pair<std::string, std::string>> summands; // (atom, label)
};

/// Type predicates on a finite orthomodular lattice, per central summand.
LatticeTypeReport classify_lattice_type(const AbstractOrtholattice& l);

} // namespace annlat

#endif
