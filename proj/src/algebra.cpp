#include "annlat/algebra.hpp"

#include "annlat/error.hpp"

#include <algorithm>

namespace annlat {

namespace {

/// Closes a span under matrix products (the span of a *-closed generating set
/// stays *-closed, since (ab)* = b*a* is again a product of members).
Subspace close_under_products(Subspace span, int dim) {
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<SquareMatrix> basis = matrix_basis(span, dim);
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j)
        if (span.add(flatten(basis[i] * basis[j]))) grew = true;
  }
  return span;
}

/// Solves for the two-sided identity of the span, e*b = b*e = b for every
/// basis element; nullopt when no identity exists in the span.
std::optional<SquareMatrix> solve_unit(const Subspace& span, int dim) {
  std::vector<SquareMatrix> basis = matrix_basis(span, dim);
  if (basis.empty()) return std::nullopt;
  std::size_t block = static_cast<std::size_t>(dim) * dim;
  std::vector<Vec> columns;
  Vec rhs(2 * block * basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Vec col(2 * block * basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
      Vec left = flatten(basis[i] * basis[j]);
      Vec right = flatten(basis[j] * basis[i]);
      std::copy(left.begin(), left.end(),
                col.begin() + static_cast<long>(2 * j * block));
      std::copy(right.begin(), right.end(),
                col.begin() + static_cast<long>((2 * j + 1) * block));
    }
    columns.push_back(std::move(col));
  }
  for (std::size_t j = 0; j < basis.size(); ++j) {
    Vec b = flatten(basis[j]);
    std::copy(b.begin(), b.end(),
              rhs.begin() + static_cast<long>(2 * j * block));
    std::copy(b.begin(), b.end(),
              rhs.begin() + static_cast<long>((2 * j + 1) * block));
  }
  auto x = solve_linear(columns, rhs);
  if (!x) return std::nullopt;
  SquareMatrix unit(dim);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if ((*x)[i].is_zero()) continue;
    unit += (*x)[i] * basis[i];
  }
  return unit;
}

std::vector<SquareMatrix> center_of_span(const Subspace& span, int dim) {
  std::vector<SquareMatrix> basis = matrix_basis(span, dim);
  std::vector<Vec> images;
  for (const auto& bi : basis) {
    Vec img;
    img.reserve(basis.size() * basis[0].flat().size());
    for (const auto& bj : basis) {
      Vec comm = flatten(bi * bj - bj * bi);
      img.insert(img.end(), comm.begin(), comm.end());
    }
    images.push_back(std::move(img));
  }
  std::vector<Vec> ker = kernel_coefficients(images);
  Subspace zspan(static_cast<std::size_t>(dim) * dim);
  for (const auto& c : ker) {
    SquareMatrix z(dim);
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (!c[i].is_zero()) z += c[i] * basis[i];
    zspan.add(flatten(z));
  }
  return matrix_basis(zspan, dim);
}
} // namespace

StarAlgebra detail_finish_algebra(int ambient_dim, Subspace span,
                                  std::string name) {
  auto unit = solve_unit(span, ambient_dim);
  if (!unit)
    throw Error(ErrorCode::NoUnit,
                "generated span has no two-sided unit projection");
  if (!unit->is_projection())
    throw Error(ErrorCode::NoUnit, "algebra identity is not a projection");
  StarAlgebra a;
  a.ambient_dim_ = ambient_dim;
  a.basis_ = matrix_basis(span, ambient_dim);
  a.unit_ = std::move(*unit);
  a.span_ = std::move(span);
  a.center_basis_ = center_of_span(a.span_, ambient_dim);
  a.name_ = std::move(name);
  return a;
}

StarAlgebra generate_star_algebra(int ambient_dim,
                                  std::vector<SquareMatrix> generators,
                                  std::string name) {
  Subspace span(static_cast<std::size_t>(ambient_dim) * ambient_dim);
  for (const auto& g : generators) {
    if (g.dim() != ambient_dim)
      throw Error(ErrorCode::DimensionMismatch,
                  "generator dimension does not match ambient");
    span.add(flatten(g));
    span.add(flatten(g.adjoint()));
  }
  span = close_under_products(std::move(span), ambient_dim);
  return detail_finish_algebra(ambient_dim, std::move(span), std::move(name));
}

StarAlgebra star_algebra_from_closed_span(int ambient_dim, const Subspace& span,
                                          std::string name) {
  std::vector<SquareMatrix> basis = matrix_basis(span, ambient_dim);
  for (const auto& b : basis) {
    if (!span.contains(flatten(b.adjoint())))
      throw Error(ErrorCode::NotInAlgebra, "span is not *-closed");
  }
  for (const auto& bi : basis)
    for (const auto& bj : basis)
      if (!span.contains(flatten(bi * bj)))
        throw Error(ErrorCode::NotInAlgebra, "span is not product-closed");
  return detail_finish_algebra(ambient_dim, span, std::move(name));
}

bool is_positive(const StarAlgebra& algebra, const SquareMatrix& s) {
  if (!algebra.contains(s))
    throw Error(ErrorCode::NotInAlgebra, "element is outside the algebra span");
  if (!s.is_self_adjoint()) return false;
  std::vector<Scalar> coeffs = characteristic_polynomial(s);
  // Self-adjoint => real spectrum, so s >= 0 iff (-1)^k c_k >= 0 for all k.
  for (std::size_t k = 1; k < coeffs.size(); ++k) {
    if (!coeffs[k].is_real()) return false;
    Rational signed_coeff = (k % 2 == 0) ? coeffs[k].re : -coeffs[k].re;
    if (signed_coeff < 0) return false;
  }
  return true;
}

SquareMatrix projection_onto_columns(const std::vector<Vec>& columns, int n) {
  Subspace colspace(static_cast<std::size_t>(n));
  std::vector<Vec> cols;
  for (const Vec& col : columns)
    if (colspace.add(col)) cols.push_back(col);
  std::size_t r = cols.size();
  if (r == 0) return SquareMatrix(n);
  // Gram matrix V*V and its inverse.
  std::vector<Vec> gram(r, Vec(r));
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) {
      Scalar acc;
      for (int i = 0; i < n; ++i) acc += cols[a][i].conj() * cols[b][i];
      gram[a][b] = acc;
    }
  std::vector<Vec> ginv = invert_square(gram);
  SquareMatrix p(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Scalar acc;
      for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b)
          acc += cols[a][i] * ginv[a][b] * cols[b][j].conj();
      p.at(i, j) = acc;
    }
  return p;
}

SquareMatrix matrix_range_projection(const SquareMatrix& s) {
  int n = s.dim();
  std::vector<Vec> cols;
  cols.reserve(n);
  for (int j = 0; j < n; ++j) {
    Vec col(n);
    for (int i = 0; i < n; ++i) col[i] = s.at(i, j);
    cols.push_back(std::move(col));
  }
  return projection_onto_columns(cols, n);
}

SquareMatrix range_projection(const StarAlgebra& algebra,
                              const SquareMatrix& s) {
  if (!is_positive(algebra, s))
    throw Error(ErrorCode::NotPositive, "range projection needs s >= 0");
  SquareMatrix p = matrix_range_projection(s);
  if (!p.is_projection() || !algebra.contains(p))
    throw Error(ErrorCode::NotInAlgebra,
                "range projection left the algebra span");
  return p;
}

std::vector<SquareMatrix> center(const StarAlgebra& algebra) {
  return algebra.center_basis();
}

StarAlgebra maximal_commutative_subalgebra(
    const StarAlgebra& algebra, const std::vector<SquareMatrix>& seed) {
  int n = algebra.ambient_dim();
  for (const auto& s : seed) {
    if (!algebra.contains(s))
      throw Error(ErrorCode::NotInAlgebra, "seed element outside the algebra");
    if (!s.is_self_adjoint())
      throw Error(ErrorCode::SeedNotCommuting,
                  "seed elements must be self-adjoint");
  }
  for (std::size_t i = 0; i < seed.size(); ++i)
    for (std::size_t j = i + 1; j < seed.size(); ++j)
      if (seed[i] * seed[j] != seed[j] * seed[i])
        throw Error(ErrorCode::SeedNotCommuting, "seed does not commute");

  Subspace cspan(static_cast<std::size_t>(n) * n);
  for (const auto& s : seed) cspan.add(flatten(s));
  cspan = close_under_products(std::move(cspan), n);

  for (;;) {
    // Commutant of the current commutative algebra inside A.
    std::vector<SquareMatrix> cbasis = matrix_basis(cspan, n);
    std::vector<Vec> images;
    for (const auto& b : algebra.basis()) {
      Vec img;
      for (const auto& c : cbasis) {
        Vec comm = flatten(b * c - c * b);
        img.insert(img.end(), comm.begin(), comm.end());
      }
      if (cbasis.empty()) img.assign(1, Scalar(0));
      images.push_back(std::move(img));
    }
    std::vector<Vec> ker = kernel_coefficients(images);
    Subspace commutant(static_cast<std::size_t>(n) * n);
    for (const auto& c : ker) {
      SquareMatrix z(n);
      for (std::size_t i = 0; i < algebra.basis().size(); ++i)
        if (!c[i].is_zero()) z += c[i] * algebra.basis()[i];
      commutant.add(flatten(z));
    }
    if (commutant == cspan) break;
    // Extend by the first self-adjoint direction of the commutant not yet in
    // the algebra; it commutes with everything collected so far, so closure
    // stays commutative.
    bool extended = false;
    for (const auto& row : commutant.rows()) {
      SquareMatrix b = unflatten(row, n);
      SquareMatrix x = b + b.adjoint();
      SquareMatrix y =
          Scalar(Rational(0), Rational(-1)) * (b - b.adjoint());
      for (const SquareMatrix* cand : {&x, &y}) {
        if (!cand->is_zero() && !cspan.contains(flatten(*cand))) {
          cspan.add(flatten(*cand));
          cspan = close_under_products(std::move(cspan), n);
          extended = true;
          break;
        }
      }
      if (extended) break;
    }
    if (!extended) break;
  }
  return star_algebra_from_closed_span(n, cspan,
                                       algebra.name() + ".maxcomm");
}

std::pair<SquareMatrix, SquareMatrix> decompose_selfadjoint(
    const StarAlgebra& algebra, const SquareMatrix& a) {
  if (!algebra.contains(a))
    throw Error(ErrorCode::NotInAlgebra, "element is outside the algebra span");
  Scalar half(Rational(1, 2));
  SquareMatrix x = half * (a + a.adjoint());
  // (a - a*) / (2i) = -i/2 * (a - a*)
  SquareMatrix y = Scalar(Rational(0), Rational(-1, 2)) * (a - a.adjoint());
  return {x, y};
}

SquareMatrix sample_element(const StarAlgebra& algebra, Sampler& sampler) {
  SquareMatrix x(algebra.ambient_dim());
  for (const auto& b : algebra.basis()) {
    if (sampler.uniform(0, 2) != 0) continue; // sparse combinations
    x += sampler.small_scalar() * b;
  }
  return x;
}

SquareMatrix sample_positive(const StarAlgebra& algebra, Sampler& sampler) {
  SquareMatrix x = sample_element(algebra, sampler);
  return x.adjoint() * x;
}

StarAlgebra random_star_algebra(Sampler& sampler, int max_dim) {
  int n = sampler.uniform(2, max_dim);
  int style = sampler.uniform(0, 2);
  std::vector<SquareMatrix> gens;
  if (style == 0) {
    // One sparse integer matrix.
    SquareMatrix g(n);
    int entries = sampler.uniform(n, 2 * n);
    for (int k = 0; k < entries; ++k)
      g.at(sampler.uniform(0, n - 1), sampler.uniform(0, n - 1)) =
          Scalar(sampler.uniform(-2, 2));
    gens.push_back(g);
  } else if (style == 1) {
    gens.push_back(SquareMatrix::unit_entry(n, sampler.uniform(0, n - 1),
                                            sampler.uniform(0, n - 1)));
    std::vector<Scalar> diag(n);
    for (auto& d : diag) d = Scalar(sampler.uniform(0, 2));
    gens.push_back(SquareMatrix::diagonal(diag));
  } else {
    // Block-diagonal: full matrix blocks of random sizes.
    int at = 0;
    while (at < n) {
      int size = std::min(n - at, sampler.uniform(1, 3));
      if (size == 1) {
        gens.push_back(SquareMatrix::unit_entry(n, at, at));
      } else {
        for (int k = 0; k + 1 < size; ++k)
          gens.push_back(SquareMatrix::unit_entry(n, at + k, at + k + 1));
      }
      at += size;
    }
  }
  return generate_star_algebra(n, std::move(gens), "random");
}

} // namespace annlat
