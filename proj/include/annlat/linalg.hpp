#ifndef ANNLAT_LINALG_HPP
#define ANNLAT_LINALG_HPP

#include "annlat/matrix.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace annlat {

using Vec = std::vector<Scalar>;

/// Row space of a set of vectors kept in reduced row echelon form. RREF over
/// the field Q(i) is canonical, so two subspaces are equal iff their stored
/// rows are identical.
class Subspace {
public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  /// Adds a vector to the span; returns true when it enlarged the space.
  bool add(Vec v);

  /// Residual of v after reduction against the span (zero iff contained).
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  /// Coordinates of v in terms of a spanning set that was inserted via
  /// add_tracked; plain Subspace only answers membership.
  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) {
    return !(a == b);
  }

private:
  std::size_t ambient_ = 0;
  std::vector<Vec> rows_;  // RREF, pivots strictly increasing
  std::vector<int> pivots_;
};

Subspace span_of(const std::vector<Vec>& vectors, std::size_t ambient);
Subspace span_of_matrices(const std::vector<SquareMatrix>& mats, int dim);

/// Canonical matrix basis of the span (RREF rows reshaped to dim x dim).
std::vector<SquareMatrix> matrix_basis(const Subspace& space, int dim);

Vec flatten(const SquareMatrix& m);
SquareMatrix unflatten(const Vec& v, int dim);

/// Kernel of the linear map x -> images(x) restricted to the column span of
/// `basis`: returns coefficient vectors c with sum_i c_i * images[i] = 0.
/// images[i] is the image of basis vector i, all of equal length.
std::vector<Vec> kernel_coefficients(const std::vector<Vec>& images);

/// Intersection of two subspaces.
Subspace intersect(const Subspace& a, const Subspace& b);

/// Solves sum_i x_i columns[i] = rhs exactly; nullopt when inconsistent.
std::optional<Vec> solve_linear(const std::vector<Vec>& columns, const Vec& rhs);

/// Hermitian positive definite inverse via Gaussian elimination; used by the
/// range-projection formula V (V*V)^-1 V*.
/// `m` is given as row-major square data of size n.
std::vector<Vec> invert_square(const std::vector<Vec>& rows);

} // namespace annlat

#endif
