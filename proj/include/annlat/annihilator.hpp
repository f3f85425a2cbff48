#ifndef ANNLAT_ANNIHILATOR_HPP
#define ANNLAT_ANNIHILATOR_HPP

#include "annlat/algebra.hpp"

#include <utility>
#include <vector>

namespace annlat {

/// A hereditary corner pAp of a StarAlgebra, arising as the annihilator of a
/// set of positive elements. Canonicalized by the unit projection p: two
/// annihilators over the same algebra are equal iff their p's are equal.
struct Annihilator {
  const StarAlgebra* algebra = nullptr;
  std::vector<SquareMatrix> space; // canonical basis of pAp
  Subspace span;
  SquareMatrix unit_projection;
  std::vector<SquareMatrix> generators; // the generating set; may be empty

  std::size_t dim() const { return space.size(); }
  bool is_zero() const { return space.empty(); }
  bool is_whole() const { return unit_projection == algebra->unit(); }

  bool contains(const SquareMatrix& m) const {
    return m.dim() == algebra->ambient_dim() && span.contains(flatten(m));
  }

  friend bool operator==(const Annihilator& a, const Annihilator& b) {
    return a.unit_projection == b.unit_projection;
  }
  friend bool operator!=(const Annihilator& a, const Annihilator& b) {
    return !(a == b);
  }
};

/// Ann(S) = {a in A : as + sa = 0 for all s in S}, S positive. Computed as the
/// exact kernel of a |-> (as+sa)_s over the algebra basis; the result is the
/// corner pAp with p = unit - range_projection(sum S) (asserted). Empty S
/// returns the whole algebra.
Annihilator annihilator(const StarAlgebra& algebra,
                        const std::vector<SquareMatrix>& S);

/// Ann(Ann(S)); the canonical element of the lattice generated by S.
Annihilator double_annihilator(const StarAlgebra& algebra,
                               const std::vector<SquareMatrix>& S);

/// Ann_B(S) = Ann_A(S) intersected with B, for S inside the hereditary corner
/// B. Still a corner of the ambient algebra.
Annihilator relative_annihilator(const Annihilator& B,
                                 const std::vector<SquareMatrix>& S);

/// dV = {a in A : x a y + y a x = 0 for all x, y in V}; basis of the exact
/// kernel over the constraint family generated by basis pairs of V.
std::vector<SquareMatrix> d_operator(const StarAlgebra& algebra,
                                     const std::vector<SquareMatrix>& V);

/// The corner pAp as an Annihilator (it equals Ann({unit - p})).
/// Throws NotAProjection.
Annihilator hereditary(const StarAlgebra& algebra, const SquareMatrix& p);

/// Same corner, built directly from p without the kernel solve. The lattice
/// layer leans on this: all lattice operations reduce to projection algebra.
Annihilator corner_annihilator(const StarAlgebra& algebra, SquareMatrix p);

/// Convenience for callers with a non-positive s: {s*s, ss*} has the same
/// two-sided annihilator as {s, s*}.
std::pair<SquareMatrix, SquareMatrix> positive_pair(const StarAlgebra& algebra,
                                                    const SquareMatrix& s);

Annihilator zero_annihilator(const StarAlgebra& algebra);
Annihilator whole_annihilator(const StarAlgebra& algebra);

} // namespace annlat

#endif
