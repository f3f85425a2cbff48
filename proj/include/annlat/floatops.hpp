#ifndef ANNLAT_FLOATOPS_HPP
#define ANNLAT_FLOATOPS_HPP

#include "annlat/algebra.hpp"
#include "annlat/policy.hpp"

#include <Eigen/Dense>

#include <optional>
#include <vector>

namespace annlat {

using CMat = Eigen::MatrixXcd;

CMat to_eigen(const SquareMatrix& m);

/// Entrywise continued-fraction rationalization; nullopt when some entry has
/// no good rational approximation within the denominator bound.
std::optional<SquareMatrix> rationalized(const CMat& m, long max_den = 1000000,
                                         double tol = 1e-7);

/// Eigenvalues of a self-adjoint element, ascending.
std::vector<double> selfadjoint_eigenvalues(const SquareMatrix& x);

/// Sum of eigenprojections of self-adjoint x for eigenvalues within tol of
/// lambda.
CMat numeric_spectral_projection(const SquareMatrix& x, double lambda,
                                 double tol);

bool approx_equal(const CMat& a, const CMat& b, double tol);
bool approx_projection(const CMat& m, double tol);

/// Distance from m to the float span of the algebra basis.
double membership_residual(const StarAlgebra& algebra, const CMat& m);

/// Rank of the matrix whose rows are the flattened inputs (SVD threshold).
int numeric_rank(const std::vector<CMat>& mats, double tol);

bool float_is_positive(const SquareMatrix& s, double tol);

/// Projection onto the column space of a PSD matrix, numerically.
CMat float_range_projection(const CMat& s, double tol);

/// Searches for x in A with x x* ~ p and x* x ~ q via the SVD of p w q for a
/// few random w; a generic w succeeds exactly when p and q are
/// Murray-von Neumann equivalent in A.
bool float_partial_isometry(const StarAlgebra& algebra, const SquareMatrix& p,
                            const SquareMatrix& q, double tol,
                            Sampler& sampler);

} // namespace annlat

#endif
