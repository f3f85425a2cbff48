#ifndef ANNLAT_TEST_FIXTURES_HPP
#define ANNLAT_TEST_FIXTURES_HPP

#include "annlat/algebra.hpp"

namespace annlat::fixtures {

inline SquareMatrix E(int dim, int i, int j) {
  return SquareMatrix::unit_entry(dim, i, j);
}

/// All of M_2, generated by E12.
inline StarAlgebra full2() {
  return generate_star_algebra(2, {E(2, 0, 1)}, "FULL2");
}

/// Diagonal matrices in M_3.
inline StarAlgebra diag3() {
  return generate_star_algebra(3, {E(3, 0, 0), E(3, 1, 1), E(3, 2, 2)},
                               "DIAG3");
}

/// M_2 (+) C block-diagonal in M_3.
inline StarAlgebra block21() {
  return generate_star_algebra(3, {E(3, 0, 1), E(3, 2, 2)}, "BLOCK21");
}

/// Scalars C * I_2.
inline StarAlgebra scalar2() {
  return generate_star_algebra(2, {SquareMatrix::identity(2)}, "SCALAR2");
}

/// M_2 (+) C (+) C in M_4 (three central blocks).
inline StarAlgebra block3() {
  return generate_star_algebra(4, {E(4, 0, 1), E(4, 2, 2), E(4, 3, 3)},
                               "BLOCK3");
}

/// M_3 in M_3.
inline StarAlgebra full3() {
  return generate_star_algebra(3, {E(3, 0, 1), E(3, 1, 2)}, "FULL3");
}

/// M_4 in M_4.
inline StarAlgebra full4() {
  return generate_star_algebra(4, {E(4, 0, 1), E(4, 1, 2), E(4, 2, 3)},
                               "FULL4");
}

/// M_2 embedded in M_4 with multiplicity 2 (a (+) a on two copies).
inline StarAlgebra full2_mult2() {
  SquareMatrix g(4);
  g.at(0, 1) = Scalar(1);
  g.at(2, 3) = Scalar(1);
  return generate_star_algebra(4, {g}, "FULL2x2");
}

/// M_3 embedded in M_6 with multiplicity 2.
inline StarAlgebra full3_mult2() {
  SquareMatrix g1(6), g2(6);
  g1.at(0, 1) = Scalar(1);
  g1.at(3, 4) = Scalar(1);
  g2.at(1, 2) = Scalar(1);
  g2.at(4, 5) = Scalar(1);
  return generate_star_algebra(6, {g1, g2}, "FULL3x2");
}

/// M_4 embedded in M_8 with multiplicity 2.
inline StarAlgebra full4_mult2() {
  std::vector<SquareMatrix> gens;
  for (int k = 0; k + 1 < 4; ++k) {
    SquareMatrix g(8);
    g.at(k, k + 1) = Scalar(1);
    g.at(4 + k, 4 + k + 1) = Scalar(1);
    gens.push_back(g);
  }
  return generate_star_algebra(8, gens, "FULL4x2");
}

/// Commutative dim-2 algebra spanned by g, g^2 for the tridiagonal g with
/// eigenvalues 0, +-sqrt(2); its minimal idempotents are irrational, so it
/// exercises the float atom-splitting path.
inline StarAlgebra irr3() {
  SquareMatrix g(3);
  g.at(0, 1) = Scalar(1);
  g.at(1, 0) = Scalar(1);
  g.at(1, 2) = Scalar(1);
  g.at(2, 1) = Scalar(1);
  return generate_star_algebra(3, {g}, "IRR3");
}

inline std::vector<StarAlgebra> all_basic() {
  std::vector<StarAlgebra> v;
  v.push_back(full2());
  v.push_back(diag3());
  v.push_back(block21());
  v.push_back(scalar2());
  return v;
}

} // namespace annlat::fixtures

#endif
