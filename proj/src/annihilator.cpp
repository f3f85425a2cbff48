#include "annlat/annihilator.hpp"

#include "annlat/error.hpp"

#include <cassert>

namespace annlat {
namespace {

Subspace corner_span(const StarAlgebra& a, const SquareMatrix& p) {
  std::vector<SquareMatrix> pbp;
  pbp.reserve(a.basis().size());
  for (const auto& b : a.basis()) pbp.push_back(p * b * p);
  return span_of_matrices(pbp, a.ambient_dim());
}

Annihilator make(const StarAlgebra& a, Subspace span, SquareMatrix p,
                 std::vector<SquareMatrix> gens) {
  Annihilator v;
  v.algebra = &a;
  v.space = matrix_basis(span, a.ambient_dim());
  v.span = std::move(span);
  v.unit_projection = std::move(p);
  v.generators = std::move(gens);
  return v;
}

} // namespace

Annihilator annihilator(const StarAlgebra& algebra,
                        const std::vector<SquareMatrix>& S) {
  const int n = algebra.ambient_dim();
  for (const auto& s : S) {
    if (!is_positive(algebra, s))
      throw Error(ErrorCode::NotPositive,
                  "annihilator generators must be positive");
  }
  if (S.empty())
    return make(algebra, algebra.span(), algebra.unit(), {});

  // Kernel of a |-> (as + sa)_{s in S} over the algebra basis.
  std::vector<Vec> images;
  images.reserve(algebra.basis().size());
  for (const auto& b : algebra.basis()) {
    Vec img;
    img.reserve(S.size() * n * n);
    for (const auto& s : S) {
      Vec part = flatten(b * s + s * b);
      img.insert(img.end(), part.begin(), part.end());
    }
    images.push_back(std::move(img));
  }
  Subspace span((std::size_t)n * n);
  for (const auto& c : kernel_coefficients(images)) {
    SquareMatrix m(n);
    for (std::size_t i = 0; i < c.size(); ++i)
      if (!c[i].is_zero()) m += c[i] * algebra.basis()[i];
    span.add(flatten(m));
  }

  SquareMatrix total(n);
  for (const auto& s : S) total += s;
  SquareMatrix p = algebra.unit() - range_projection(algebra, total);
  // The kernel is exactly the corner pAp; both routes must agree.
  assert(span == corner_span(algebra, p));
  return make(algebra, std::move(span), std::move(p), S);
}

Annihilator double_annihilator(const StarAlgebra& algebra,
                               const std::vector<SquareMatrix>& S) {
  Annihilator inner = annihilator(algebra, S);
  // Ann(V+) = Ann({p_V}) for a corner V: p_V dominates the range of every
  // positive element of V.
  Annihilator outer = annihilator(algebra, {inner.unit_projection});
  outer.generators = S;
  return outer;
}

Annihilator relative_annihilator(const Annihilator& B,
                                 const std::vector<SquareMatrix>& S) {
  const StarAlgebra& a = *B.algebra;
  for (const auto& s : S) {
    if (!B.contains(s))
      throw Error(ErrorCode::NotInSubalgebra,
                  "relative annihilator generators must lie in the corner");
  }
  Annihilator abs = annihilator(a, S);
  Subspace span = intersect(abs.span, B.span);
  SquareMatrix p = abs.unit_projection * B.unit_projection;
  // p_Ann and p_B commute (both are functions of elements of B and the unit),
  // so the product is the meet projection.
  assert(p.is_projection());
  assert(span == corner_span(a, p));
  return make(a, std::move(span), std::move(p), S);
}

std::vector<SquareMatrix> d_operator(const StarAlgebra& algebra,
                                     const std::vector<SquareMatrix>& V) {
  const int n = algebra.ambient_dim();
  std::vector<SquareMatrix> vbasis;
  for (const auto& x : V) {
    if (!algebra.contains(x))
      throw Error(ErrorCode::NotInAlgebra, "d-operator argument outside A");
    vbasis.push_back(x);
  }
  // Reduce to a basis so the constraint family stays small.
  vbasis = matrix_basis(span_of_matrices(vbasis, n), n);

  std::vector<Vec> images;
  for (const auto& b : algebra.basis()) {
    Vec img;
    for (std::size_t i = 0; i < vbasis.size(); ++i)
      for (std::size_t j = i; j < vbasis.size(); ++j) {
        Vec part =
            flatten(vbasis[i] * b * vbasis[j] + vbasis[j] * b * vbasis[i]);
        img.insert(img.end(), part.begin(), part.end());
      }
    if (img.empty()) img.assign(1, Scalar()); // V = {0}: vacuous constraints
    images.push_back(std::move(img));
  }
  Subspace span((std::size_t)n * n);
  for (const auto& c : kernel_coefficients(images)) {
    SquareMatrix m(n);
    for (std::size_t i = 0; i < c.size(); ++i)
      if (!c[i].is_zero()) m += c[i] * algebra.basis()[i];
    span.add(flatten(m));
  }
  return matrix_basis(span, n);
}

Annihilator hereditary(const StarAlgebra& algebra, const SquareMatrix& p) {
  if (!algebra.contains(p) || !p.is_projection())
    throw Error(ErrorCode::NotAProjection,
                "hereditary corner requires a projection in A");
  return annihilator(algebra, {algebra.unit() - p});
}

Annihilator corner_annihilator(const StarAlgebra& algebra, SquareMatrix p) {
  if (!algebra.contains(p) || !p.is_projection())
    throw Error(ErrorCode::NotAProjection,
                "corner requires a projection in A");
  Subspace span = corner_span(algebra, p);
  return make(algebra, std::move(span), std::move(p), {});
}

std::pair<SquareMatrix, SquareMatrix> positive_pair(const StarAlgebra& algebra,
                                                    const SquareMatrix& s) {
  if (!algebra.contains(s))
    throw Error(ErrorCode::NotInAlgebra, "element outside A");
  return {s.adjoint() * s, s * s.adjoint()};
}

Annihilator zero_annihilator(const StarAlgebra& algebra) {
  return annihilator(algebra, {algebra.unit()});
}

Annihilator whole_annihilator(const StarAlgebra& algebra) {
  return annihilator(algebra, {});
}

} // namespace annlat
