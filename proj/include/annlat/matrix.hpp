#ifndef ANNLAT_MATRIX_HPP
#define ANNLAT_MATRIX_HPP

#include "annlat/scalar.hpp"

#include <string>
#include <vector>

namespace annlat {

/// Dense N x N matrix over exact complex rationals, the ambient B(H) surrogate.
class SquareMatrix {
public:
  SquareMatrix() : dim_(0) {}
  explicit SquareMatrix(int dim) : dim_(dim), entries_(dim * dim) {}

  static SquareMatrix identity(int dim);
  /// Matrix unit E_ij (1-based indexing would invite mistakes; i, j are 0-based).
  static SquareMatrix unit_entry(int dim, int i, int j,
                                 Scalar value = Scalar(1));
  static SquareMatrix diagonal(const std::vector<Scalar>& diag);

  int dim() const { return dim_; }

  Scalar& at(int i, int j) { return entries_[i * dim_ + j]; }
  const Scalar& at(int i, int j) const { return entries_[i * dim_ + j]; }

  const std::vector<Scalar>& flat() const { return entries_; }
  std::vector<Scalar>& flat() { return entries_; }

  bool is_zero() const;
  bool is_self_adjoint() const;
  bool is_projection() const;

  SquareMatrix adjoint() const;
  Scalar trace() const;

  SquareMatrix& operator+=(const SquareMatrix& o);
  SquareMatrix& operator-=(const SquareMatrix& o);
  SquareMatrix& operator*=(const Scalar& c);

  friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) {
    return a += b;
  }
  friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) {
    return a -= b;
  }
  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b);
  friend SquareMatrix operator*(const Scalar& c, SquareMatrix a) {
    return a *= c;
  }
  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const SquareMatrix& a, const SquareMatrix& b) {
    return !(a == b);
  }

  std::string to_string() const;

private:
  int dim_;
  std::vector<Scalar> entries_; // row-major
};

/// Coefficients of det(t*I - m) as [1, c1, ..., cn], exact
/// (Faddeev-LeVerrier recursion).
std::vector<Scalar> characteristic_polynomial(const SquareMatrix& m);

/// Monic minimal polynomial of m, lowest degree p with p(m) = 0.
std::vector<Scalar> minimal_polynomial(const SquareMatrix& m);

/// Evaluates a monic-or-not polynomial given as [a_0-first? no:] coefficients
/// ordered highest degree first, i.e. p = c[0] t^d + ... + c[d].
SquareMatrix evaluate_polynomial(const std::vector<Scalar>& coeffs,
                                 const SquareMatrix& m);
Scalar evaluate_polynomial(const std::vector<Scalar>& coeffs, const Scalar& t);

} // namespace annlat

#endif
