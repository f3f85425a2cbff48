#include "annlat/ortholattice.hpp"

#include "annlat/error.hpp"

#include <sstream>

namespace annlat {
namespace {

void require_same_algebra(const Annihilator& a, const Annihilator& b) {
  if (!(*a.algebra == *b.algebra))
    throw Error(ErrorCode::AlgebraMismatch,
                "lattice operands belong to different algebras");
}

Subspace span_of(const StarAlgebra& a, const std::vector<SquareMatrix>& mats) {
  return span_of_matrices(mats, a.ambient_dim());
}

} // namespace

AnnLattice make_ann_lattice(const StarAlgebra& algebra, NumericPolicy policy) {
  AnnLattice l;
  l.algebra = &algebra;
  l.policy = policy;
  l.zero = corner_annihilator(algebra, SquareMatrix(algebra.ambient_dim()));
  l.one = corner_annihilator(algebra, algebra.unit());
  return l;
}

bool leq(const Annihilator& V, const Annihilator& W) {
  require_same_algebra(V, W);
  return V.unit_projection * W.unit_projection == V.unit_projection;
}

Annihilator join(const Annihilator& V, const Annihilator& W) {
  require_same_algebra(V, W);
  SquareMatrix p = range_projection(*V.algebra,
                                    V.unit_projection + W.unit_projection);
  return corner_annihilator(*V.algebra, std::move(p));
}

Annihilator join_many(const StarAlgebra& algebra,
                      const std::vector<Annihilator>& parts) {
  SquareMatrix sum(algebra.ambient_dim());
  for (const auto& v : parts) {
    if (!(*v.algebra == algebra))
      throw Error(ErrorCode::AlgebraMismatch, "join over mixed algebras");
    sum += v.unit_projection;
  }
  return corner_annihilator(algebra, range_projection(algebra, sum));
}

Annihilator meet(const Annihilator& V, const Annihilator& W) {
  require_same_algebra(V, W);
  const SquareMatrix& e = V.algebra->unit();
  SquareMatrix q = range_projection(
      *V.algebra, (e - V.unit_projection) + (e - W.unit_projection));
  return corner_annihilator(*V.algebra, e - q);
}

Annihilator meet_many(const StarAlgebra& algebra,
                      const std::vector<Annihilator>& parts) {
  SquareMatrix sum(algebra.ambient_dim());
  for (const auto& v : parts) {
    if (!(*v.algebra == algebra))
      throw Error(ErrorCode::AlgebraMismatch, "meet over mixed algebras");
    sum += algebra.unit() - v.unit_projection;
  }
  return corner_annihilator(algebra,
                            algebra.unit() - range_projection(algebra, sum));
}

Annihilator orthocomplement(const Annihilator& V) {
  return corner_annihilator(*V.algebra,
                            V.algebra->unit() - V.unit_projection);
}

bool is_central(const Annihilator& V) {
  const StarAlgebra& a = *V.algebra;
  const SquareMatrix& p = V.unit_projection;
  Subspace dv = span_of(a, d_operator(a, {p}));
  Subspace dvp = span_of(a, d_operator(a, {a.unit() - p}));
  return intersect(dv, dvp).dim() == 0;
}

Annihilator central_support(const Annihilator& V) {
  const StarAlgebra& a = *V.algebra;
  const int n = a.ambient_dim();
  std::vector<Vec> columns;
  for (const auto& b : a.basis()) {
    SquareMatrix bp = b * V.unit_projection;
    for (int j = 0; j < n; ++j) {
      Vec col(n);
      for (int i = 0; i < n; ++i) col[i] = bp.at(i, j);
      columns.push_back(std::move(col));
    }
  }
  SquareMatrix z = projection_onto_columns(columns, n);
  Annihilator c = corner_annihilator(a, std::move(z));
  if (!leq(V, c) || !is_central(c))
    throw Error(ErrorCode::NotInAlgebra,
                "central support verification failed");
  return c;
}

bool commutes(const Annihilator& X, const Annihilator& Y) {
  require_same_algebra(X, Y);
  return join(meet(X, Y), meet(X, orthocomplement(Y))) == X;
}

bool check_condition_A(const Annihilator& V) {
  if (V.is_zero()) return true;
  StarAlgebra corner = star_algebra_from_closed_span(
      V.algebra->ambient_dim(), V.span, V.algebra->name() + ".corner");
  StarAlgebra mc = maximal_commutative_subalgebra(corner, {});
  return mc.unit() == V.unit_projection;
}

DimensionValue dimension_function(const Annihilator& V) {
  Scalar num = V.unit_projection.trace();
  Scalar den = V.algebra->unit().trace();
  return num.re / den.re;
}

Annihilator random_annihilator(const StarAlgebra& algebra, Sampler& sampler) {
  SquareMatrix s = sample_positive(algebra, sampler);
  return corner_annihilator(algebra, range_projection(algebra, s));
}

SuiteReport verify_orthomodular_sampled(const AnnLattice& lattice,
                                        int samples) {
  const StarAlgebra& a = *lattice.algebra;
  const SquareMatrix& e = a.unit();
  Sampler sampler(lattice.policy.seed);
  SuiteReport report;
  report.name = "orthomodular-sampled";
  // Elements of P are determined by their unit projections, so the law is
  // checked on projections alone; skipping the corner bases keeps the large
  // sample counts cheap.
  auto pr_join = [&](const SquareMatrix& p, const SquareMatrix& q) {
    return range_projection(a, p + q);
  };
  auto pr_meet = [&](const SquareMatrix& p, const SquareMatrix& q) {
    return e - range_projection(a, (e - p) + (e - q));
  };
  for (int k = 0; k < samples; ++k) {
    SquareMatrix v = range_projection(a, sample_positive(a, sampler));
    SquareMatrix w = range_projection(a, sample_positive(a, sampler));
    SquareMatrix x = pr_meet(v, w);
    const SquareMatrix& y = v;
    SquareMatrix rebuilt = pr_join(x, pr_meet(y, e - x));
    ++report.checks;
    if (rebuilt != y) {
      std::ostringstream os;
      os << "sample " << k << ": X = " << x.to_string()
         << ", Y = " << y.to_string();
      report.fail(os.str());
    }
  }
  return report;
}

} // namespace annlat
