#include "annlat/floatops.hpp"

namespace annlat {

CMat to_eigen(const SquareMatrix& m) {
  const int n = m.dim();
  CMat out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = m.at(i, j).to_complex();
  return out;
}

std::optional<SquareMatrix> rationalized(const CMat& m, long max_den,
                                         double tol) {
  const int n = static_cast<int>(m.rows());
  SquareMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational re, im;
      if (!rationalize(m(i, j).real(), re, max_den, tol) ||
          !rationalize(m(i, j).imag(), im, max_den, tol))
        return std::nullopt;
      out.at(i, j) = Scalar(re, im);
    }
  return out;
}

std::vector<double> selfadjoint_eigenvalues(const SquareMatrix& x) {
  Eigen::SelfAdjointEigenSolver<CMat> solver(to_eigen(x));
  std::vector<double> out(solver.eigenvalues().data(),
                          solver.eigenvalues().data() + x.dim());
  return out;
}

CMat numeric_spectral_projection(const SquareMatrix& x, double lambda,
                                 double tol) {
  Eigen::SelfAdjointEigenSolver<CMat> solver(to_eigen(x));
  const int n = x.dim();
  CMat p = CMat::Zero(n, n);
  for (int k = 0; k < n; ++k)
    if (std::abs(solver.eigenvalues()[k] - lambda) < tol) {
      CMat v = solver.eigenvectors().col(k);
      p += v * v.adjoint();
    }
  return p;
}

bool approx_equal(const CMat& a, const CMat& b, double tol) {
  return (a - b).cwiseAbs().maxCoeff() < tol;
}

bool approx_projection(const CMat& m, double tol) {
  return approx_equal(m * m, m, tol) && approx_equal(m.adjoint(), m, tol);
}

double membership_residual(const StarAlgebra& algebra, const CMat& m) {
  const int n = algebra.ambient_dim();
  const int k = static_cast<int>(algebra.basis().size());
  Eigen::MatrixXcd cols(n * n, k);
  for (int j = 0; j < k; ++j) {
    CMat b = to_eigen(algebra.basis()[j]);
    cols.col(j) = Eigen::Map<Eigen::VectorXcd>(b.data(), n * n);
  }
  CMat mm = m;
  Eigen::VectorXcd v = Eigen::Map<Eigen::VectorXcd>(mm.data(), n * n);
  Eigen::VectorXcd sol = cols.colPivHouseholderQr().solve(v);
  return (cols * sol - v).norm();
}

int numeric_rank(const std::vector<CMat>& mats, double tol) {
  if (mats.empty()) return 0;
  const int len = static_cast<int>(mats.front().size());
  Eigen::MatrixXcd stacked(static_cast<int>(mats.size()), len);
  for (std::size_t i = 0; i < mats.size(); ++i) {
    CMat m = mats[i];
    stacked.row(static_cast<int>(i)) =
        Eigen::Map<Eigen::VectorXcd>(m.data(), len).transpose();
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(stacked);
  int r = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()[i] > tol) ++r;
  return r;
}

bool float_is_positive(const SquareMatrix& s, double tol) {
  CMat m = to_eigen(s);
  if (!approx_equal(m, m.adjoint(), tol)) return false;
  Eigen::SelfAdjointEigenSolver<CMat> solver(m);
  return solver.eigenvalues().minCoeff() > -tol;
}

CMat float_range_projection(const CMat& s, double tol) {
  Eigen::JacobiSVD<CMat> svd(s, Eigen::ComputeFullU);
  const int n = static_cast<int>(s.rows());
  CMat p = CMat::Zero(n, n);
  for (int k = 0; k < svd.singularValues().size(); ++k)
    if (svd.singularValues()[k] > tol) {
      CMat u = svd.matrixU().col(k);
      p += u * u.adjoint();
    }
  return p;
}

bool float_partial_isometry(const StarAlgebra& algebra, const SquareMatrix& p,
                            const SquareMatrix& q, double tol,
                            Sampler& sampler) {
  CMat pf = to_eigen(p), qf = to_eigen(q);
  for (int attempt = 0; attempt < 8; ++attempt) {
    // Dense combination: a sparse draw can miss the block that carries the
    // isometry and produce a false negative.
    SquareMatrix w(algebra.ambient_dim());
    for (const auto& b : algebra.basis()) w += sampler.small_scalar() * b;
    CMat m = pf * to_eigen(w) * qf;
    Eigen::JacobiSVD<CMat> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const int n = static_cast<int>(m.rows());
    CMat x = CMat::Zero(n, n);
    for (int k = 0; k < svd.singularValues().size(); ++k)
      if (svd.singularValues()[k] > tol)
        x += svd.matrixU().col(k) * svd.matrixV().col(k).adjoint();
    if (approx_equal(x * x.adjoint(), pf, tol) &&
        approx_equal(x.adjoint() * x, qf, tol) &&
        membership_residual(algebra, x) < tol)
      return true;
  }
  return false;
}

} // namespace annlat
