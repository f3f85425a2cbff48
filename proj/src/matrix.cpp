#include "annlat/matrix.hpp"

#include "annlat/error.hpp"

#include <sstream>

namespace annlat {

SquareMatrix SquareMatrix::identity(int dim) {
  SquareMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = Scalar(1);
  return m;
}

SquareMatrix SquareMatrix::unit_entry(int dim, int i, int j, Scalar value) {
  SquareMatrix m(dim);
  m.at(i, j) = std::move(value);
  return m;
}

SquareMatrix SquareMatrix::diagonal(const std::vector<Scalar>& diag) {
  SquareMatrix m(static_cast<int>(diag.size()));
  for (int i = 0; i < m.dim(); ++i) m.at(i, i) = diag[i];
  return m;
}

bool SquareMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

bool SquareMatrix::is_self_adjoint() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = i; j < dim_; ++j)
      if (at(i, j) != at(j, i).conj()) return false;
  return true;
}

bool SquareMatrix::is_projection() const {
  return is_self_adjoint() && (*this) * (*this) == *this;
}

SquareMatrix SquareMatrix::adjoint() const {
  SquareMatrix m(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) m.at(j, i) = at(i, j).conj();
  return m;
}

Scalar SquareMatrix::trace() const {
  Scalar t;
  for (int i = 0; i < dim_; ++i) t += at(i, i);
  return t;
}

SquareMatrix& SquareMatrix::operator+=(const SquareMatrix& o) {
  if (dim_ != o.dim_)
    throw Error(ErrorCode::DimensionMismatch, "matrix sum dimension mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
  return *this;
}

SquareMatrix& SquareMatrix::operator-=(const SquareMatrix& o) {
  if (dim_ != o.dim_)
    throw Error(ErrorCode::DimensionMismatch, "matrix sum dimension mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
  return *this;
}

SquareMatrix& SquareMatrix::operator*=(const Scalar& c) {
  for (auto& e : entries_) e *= c;
  return *this;
}

SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
  if (a.dim_ != b.dim_)
    throw Error(ErrorCode::DimensionMismatch,
                "matrix product dimension mismatch");
  SquareMatrix out(a.dim_);
  for (int i = 0; i < a.dim_; ++i)
    for (int k = 0; k < a.dim_; ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < a.dim_; ++j) {
        const Scalar& bkj = b.at(k, j);
        if (bkj.is_zero()) continue;
        out.at(i, j) += aik * bkj;
      }
    }
  return out;
}

std::string SquareMatrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < dim_; ++i) {
    os << (i == 0 ? "[" : " ") << "[";
    for (int j = 0; j < dim_; ++j)
      os << format_scalar(at(i, j)) << (j + 1 < dim_ ? ", " : "");
    os << "]" << (i + 1 < dim_ ? "\n" : "]");
  }
  return os.str();
}

std::vector<Scalar> characteristic_polynomial(const SquareMatrix& m) {
  int n = m.dim();
  std::vector<Scalar> coeffs(n + 1);
  coeffs[0] = Scalar(1);
  SquareMatrix mk = m;
  for (int k = 1; k <= n; ++k) {
    Scalar ck = mk.trace();
    ck = Scalar(0) - ck / Scalar(k);
    coeffs[k] = ck;
    if (k < n) {
      SquareMatrix adj = mk;
      for (int i = 0; i < n; ++i) adj.at(i, i) += ck;
      mk = m * adj;
    }
  }
  return coeffs;
}

SquareMatrix evaluate_polynomial(const std::vector<Scalar>& coeffs,
                                 const SquareMatrix& m) {
  SquareMatrix acc(m.dim());
  for (const auto& c : coeffs) {
    acc = acc * m;
    acc += c * SquareMatrix::identity(m.dim());
  }
  return acc;
}

Scalar evaluate_polynomial(const std::vector<Scalar>& coeffs, const Scalar& t) {
  Scalar acc;
  for (const auto& c : coeffs) acc = acc * t + c;
  return acc;
}

std::vector<Scalar> minimal_polynomial(const SquareMatrix& m) {
  // Find the first power of m linearly dependent on the lower powers, by
  // Gaussian elimination on flattened matrices.
  int n = m.dim();
  std::vector<std::vector<Scalar>> rows;       // reduced powers
  std::vector<std::vector<Scalar>> combos;     // expression of each reduced row
  std::vector<int> pivots;
  SquareMatrix power = SquareMatrix::identity(n);
  for (int d = 0;; ++d) {
    std::vector<Scalar> v = power.flat();
    std::vector<Scalar> combo(d + 1);
    combo[d] = Scalar(1); // v = m^d - (reductions applied below)
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Scalar& lead = v[pivots[r]];
      if (lead.is_zero()) continue;
      Scalar factor = lead;
      for (std::size_t k = 0; k < v.size(); ++k)
        v[k] -= factor * rows[r][k];
      for (std::size_t k = 0; k < combos[r].size() && k < combo.size(); ++k)
        combo[k] -= factor * combos[r][k];
    }
    int pivot = -1;
    for (std::size_t k = 0; k < v.size(); ++k)
      if (!v[k].is_zero()) {
        pivot = static_cast<int>(k);
        break;
      }
    if (pivot < 0) {
      // m^d = -sum of lower terms; combo holds the dependency coefficients.
      // combo[k] multiplies m^k; normalize to a monic polynomial highest-first.
      std::vector<Scalar> poly(d + 1);
      for (int k = 0; k <= d; ++k) poly[d - k] = combo[k];
      return poly;
    }
    Scalar lead = v[pivot];
    for (auto& e : v) e /= lead;
    for (auto& e : combo) e /= lead;
    rows.push_back(std::move(v));
    combos.push_back(std::move(combo));
    pivots.push_back(pivot);
    power = power * m;
  }
}

} // namespace annlat
