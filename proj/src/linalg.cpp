#include "annlat/linalg.hpp"

#include "annlat/error.hpp"

#include <algorithm>

namespace annlat {

bool Subspace::add(Vec v) {
  if (v.size() != ambient_)
    throw Error(ErrorCode::DimensionMismatch, "subspace ambient mismatch");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Scalar& c = v[pivots_[r]];
    if (c.is_zero()) continue;
    Scalar factor = c;
    for (std::size_t k = pivots_[r]; k < ambient_; ++k)
      if (!rows_[r][k].is_zero()) v[k] -= factor * rows_[r][k];
  }
  int pivot = -1;
  for (std::size_t k = 0; k < ambient_; ++k)
    if (!v[k].is_zero()) {
      pivot = static_cast<int>(k);
      break;
    }
  if (pivot < 0) return false;
  Scalar lead = v[pivot];
  for (auto& e : v) e /= lead;
  // Back-eliminate the new pivot from existing rows to stay in RREF.
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Scalar& c = rows_[r][pivot];
    if (c.is_zero()) continue;
    Scalar factor = c;
    for (std::size_t k = pivot; k < ambient_; ++k)
      if (!v[k].is_zero()) rows_[r][k] -= factor * v[k];
  }
  auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), pivot);
  std::size_t idx = pos - pivots_.begin();
  pivots_.insert(pos, pivot);
  rows_.insert(rows_.begin() + idx, std::move(v));
  return true;
}

Vec Subspace::reduce(Vec v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Scalar& c = v[pivots_[r]];
    if (c.is_zero()) continue;
    Scalar factor = c;
    for (std::size_t k = pivots_[r]; k < ambient_; ++k)
      if (!rows_[r][k].is_zero()) v[k] -= factor * rows_[r][k];
  }
  return v;
}

bool Subspace::contains(const Vec& v) const {
  Vec res = reduce(v);
  for (const auto& e : res)
    if (!e.is_zero()) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& row : other.rows())
    if (!contains(row)) return false;
  return true;
}

Subspace span_of(const std::vector<Vec>& vectors, std::size_t ambient) {
  Subspace s(ambient);
  for (const auto& v : vectors) s.add(v);
  return s;
}

Subspace span_of_matrices(const std::vector<SquareMatrix>& mats, int dim) {
  Subspace s(static_cast<std::size_t>(dim) * dim);
  for (const auto& m : mats) s.add(flatten(m));
  return s;
}

std::vector<SquareMatrix> matrix_basis(const Subspace& space, int dim) {
  std::vector<SquareMatrix> out;
  out.reserve(space.dim());
  for (const auto& row : space.rows()) out.push_back(unflatten(row, dim));
  return out;
}

Vec flatten(const SquareMatrix& m) { return m.flat(); }

SquareMatrix unflatten(const Vec& v, int dim) {
  SquareMatrix m(dim);
  m.flat() = v;
  return m;
}

std::vector<Vec> kernel_coefficients(const std::vector<Vec>& images) {
  std::size_t k = images.size();
  if (k == 0) return {};
  std::size_t len = images[0].size();
  // Row-reduce the len x k matrix whose columns are the images.
  std::vector<Vec> rows(len, Vec(k));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < len; ++i) rows[i][j] = images[j][i];

  std::vector<int> pivot_of_col(k, -1);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < k && rank < len; ++col) {
    std::size_t sel = rank;
    while (sel < len && rows[sel][col].is_zero()) ++sel;
    if (sel == len) continue;
    std::swap(rows[rank], rows[sel]);
    Scalar lead = rows[rank][col];
    for (std::size_t j = col; j < k; ++j) rows[rank][j] /= lead;
    for (std::size_t i = 0; i < len; ++i) {
      if (i == rank) continue;
      const Scalar& c = rows[i][col];
      if (c.is_zero()) continue;
      Scalar factor = c;
      for (std::size_t j = col; j < k; ++j)
        rows[i][j] -= factor * rows[rank][j];
    }
    pivot_of_col[col] = static_cast<int>(rank);
    ++rank;
  }

  std::vector<Vec> kernel;
  for (std::size_t col = 0; col < k; ++col) {
    if (pivot_of_col[col] >= 0) continue;
    Vec x(k);
    x[col] = Scalar(1);
    for (std::size_t c2 = 0; c2 < col; ++c2)
      if (pivot_of_col[c2] >= 0) x[c2] = -rows[pivot_of_col[c2]][col];
    kernel.push_back(std::move(x));
  }
  return kernel;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient())
    throw Error(ErrorCode::DimensionMismatch, "intersect ambient mismatch");
  std::vector<Vec> images;
  for (const auto& r : a.rows()) images.push_back(r);
  for (const auto& r : b.rows()) {
    Vec neg(r.size());
    for (std::size_t k = 0; k < r.size(); ++k) neg[k] = -r[k];
    images.push_back(std::move(neg));
  }
  std::vector<Vec> ker = kernel_coefficients(images);
  Subspace out(a.ambient());
  for (const auto& c : ker) {
    Vec v(a.ambient());
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (c[i].is_zero()) continue;
      for (std::size_t k = 0; k < a.ambient(); ++k)
        v[k] += c[i] * a.rows()[i][k];
    }
    out.add(std::move(v));
  }
  return out;
}

std::optional<Vec> solve_linear(const std::vector<Vec>& columns,
                                const Vec& rhs) {
  std::vector<Vec> images = columns;
  images.push_back(rhs);
  std::vector<Vec> ker = kernel_coefficients(images);
  std::size_t k = columns.size();
  for (const auto& c : ker) {
    if (c[k].is_zero()) continue;
    Vec x(k);
    for (std::size_t i = 0; i < k; ++i) x[i] = -(c[i] / c[k]);
    return x;
  }
  return std::nullopt;
}

std::vector<Vec> invert_square(const std::vector<Vec>& rows_in) {
  std::size_t n = rows_in.size();
  std::vector<Vec> work(n, Vec(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) work[i][j] = rows_in[i][j];
    work[i][n + i] = Scalar(1);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && work[sel][col].is_zero()) ++sel;
    if (sel == n)
      throw Error(ErrorCode::DimensionMismatch, "singular matrix in inverse");
    std::swap(work[col], work[sel]);
    Scalar lead = work[col][col];
    for (auto& e : work[col]) e /= lead;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col) continue;
      const Scalar& c = work[i][col];
      if (c.is_zero()) continue;
      Scalar factor = c;
      for (std::size_t j = 0; j < 2 * n; ++j)
        work[i][j] -= factor * work[col][j];
    }
  }
  std::vector<Vec> inv(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = work[i][n + j];
  return inv;
}

} // namespace annlat
