#ifndef ANNLAT_ALGEBRA_HPP
#define ANNLAT_ALGEBRA_HPP

#include "annlat/linalg.hpp"
#include "annlat/matrix.hpp"
#include "annlat/policy.hpp"

#include <string>
#include <utility>
#include <vector>

namespace annlat {

/// A *-closed, product-closed matrix subspace with distinguished unit,
/// presented inside M_N. Immutable after construction; the basis is the
/// canonical RREF basis of the span, so equal algebras compare equal.
class StarAlgebra {
public:
  int ambient_dim() const { return ambient_dim_; }
  const std::vector<SquareMatrix>& basis() const { return basis_; }
  const SquareMatrix& unit() const { return unit_; }
  const Subspace& span() const { return span_; }
  const std::vector<SquareMatrix>& center_basis() const {
    return center_basis_;
  }
  const std::string& name() const { return name_; }

  std::size_t dim() const { return basis_.size(); }

  bool contains(const SquareMatrix& m) const {
    return m.dim() == ambient_dim_ && span_.contains(flatten(m));
  }

  friend bool operator==(const StarAlgebra& a, const StarAlgebra& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.span_ == b.span_;
  }

private:
  friend StarAlgebra detail_finish_algebra(int, Subspace, std::string);
  StarAlgebra() = default;

  int ambient_dim_ = 0;
  std::vector<SquareMatrix> basis_;
  SquareMatrix unit_;
  Subspace span_;
  std::vector<SquareMatrix> center_basis_;
  std::string name_;
};

/// Internal assembly step shared by the construction paths; validates the
/// unit and caches basis/center.
StarAlgebra detail_finish_algebra(int ambient_dim, Subspace span,
                                  std::string name);

/// Smallest subspace containing the generators and their adjoints, closed
/// under products, with the two-sided unit projection computed exactly.
/// Throws DimensionMismatch or NoUnit.
StarAlgebra generate_star_algebra(int ambient_dim,
                                  std::vector<SquareMatrix> generators,
                                  std::string name = "");

/// Wraps an already *-closed, product-closed span (e.g. a hereditary corner
/// pAp) without re-running the closure. Validates closure and unit.
StarAlgebra star_algebra_from_closed_span(int ambient_dim, const Subspace& span,
                                          std::string name = "");

/// s >= 0, decided exactly: s self-adjoint and the characteristic polynomial
/// t^n + c1 t^{n-1} + ... + cn has (-1)^k c_k >= 0 for every k (all roots are
/// real for self-adjoint s, so the sign pattern is equivalent to positivity).
/// Throws NotInAlgebra when s is outside the span.
bool is_positive(const StarAlgebra& algebra, const SquareMatrix& s);

/// Orthogonal projection onto the column space of a positive element, computed
/// as V (V*V)^-1 V* over a column basis V of range(s). Always lands back in
/// the algebra (asserted). Throws NotPositive.
SquareMatrix range_projection(const StarAlgebra& algebra,
                              const SquareMatrix& s);

/// Range projection of an arbitrary positive semidefinite matrix, without an
/// algebra membership postcondition.
SquareMatrix matrix_range_projection(const SquareMatrix& s);

/// Orthogonal projection onto the span of the given length-n columns,
/// via V (V*V)^-1 V* on an independent subset.
SquareMatrix projection_onto_columns(const std::vector<Vec>& columns, int n);

/// Exact basis of {z in A : zb = bz for all b}; always contains the unit.
std::vector<SquareMatrix> center(const StarAlgebra& algebra);

/// A commutative *-subalgebra of A containing the seed with no strictly larger
/// commutative extension inside A (greedy over the deterministic basis order).
/// Throws SeedNotCommuting / NotInAlgebra.
StarAlgebra maximal_commutative_subalgebra(
    const StarAlgebra& algebra, const std::vector<SquareMatrix>& seed);

/// a = x + i*y with both parts self-adjoint and in A.
std::pair<SquareMatrix, SquareMatrix> decompose_selfadjoint(
    const StarAlgebra& algebra, const SquareMatrix& a);

/// Random element of the span with small rational coefficients.
SquareMatrix sample_element(const StarAlgebra& algebra, Sampler& sampler);

/// Random positive element x*x of the span.
SquareMatrix sample_positive(const StarAlgebra& algebra, Sampler& sampler);

/// Deterministic random multi-matrix algebra with ambient N <= max_dim;
/// used by the seeded verification suites.
StarAlgebra random_star_algebra(Sampler& sampler, int max_dim = 6);

} // namespace annlat

#endif
