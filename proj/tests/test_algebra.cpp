#include "doctest.h"

#include "annlat/algebra.hpp"
#include "annlat/error.hpp"
#include "fixtures.hpp"

using namespace annlat;
using fixtures::E;

TEST_CASE("generate_star_algebra closes generators under product and adjoint") {
  StarAlgebra full2 = fixtures::full2();
  CHECK(full2.dim() == 4);
  CHECK(full2.unit() == SquareMatrix::identity(2));

  StarAlgebra diag3 = fixtures::diag3();
  CHECK(diag3.dim() == 3);
  CHECK(diag3.unit() == SquareMatrix::identity(3));

  StarAlgebra block21 = fixtures::block21();
  CHECK(block21.dim() == 5);
  CHECK(block21.unit() == SquareMatrix::identity(3));

  StarAlgebra scalar2 = fixtures::scalar2();
  CHECK(scalar2.dim() == 1);
}

TEST_CASE("generate_star_algebra rejects mismatched generator dimensions") {
  CHECK_THROWS_AS(generate_star_algebra(2, {E(3, 0, 0)}), Error);
}

TEST_CASE("generate_star_algebra is idempotent on a returned basis") {
  StarAlgebra block21 = fixtures::block21();
  StarAlgebra again =
      generate_star_algebra(3, block21.basis(), "BLOCK21-regen");
  CHECK(again.span() == block21.span());
  CHECK(again.unit() == block21.unit());
}

TEST_CASE("is_positive matches the characteristic polynomial certificate") {
  StarAlgebra full2 = fixtures::full2();
  CHECK(is_positive(full2, E(2, 0, 0)));
  SquareMatrix ones(2);
  ones.at(0, 0) = ones.at(0, 1) = ones.at(1, 0) = ones.at(1, 1) = Scalar(1);
  CHECK(is_positive(full2, ones)); // eigenvalues {0, 2}
  CHECK_FALSE(is_positive(full2, E(2, 0, 1)));
  SquareMatrix neg = Scalar(-1) * E(2, 0, 0);
  CHECK_FALSE(is_positive(full2, neg));
  SquareMatrix outside = E(2, 0, 0);
  StarAlgebra scalar2 = fixtures::scalar2();
  CHECK_THROWS_AS(is_positive(scalar2, outside), Error);
}

TEST_CASE("range_projection returns the exact column-space projection") {
  StarAlgebra full2 = fixtures::full2();
  SquareMatrix ones(2);
  ones.at(0, 0) = ones.at(0, 1) = ones.at(1, 0) = ones.at(1, 1) = Scalar(1);
  SquareMatrix p = range_projection(full2, ones);
  SquareMatrix expect(2);
  Scalar half{Rational(1, 2)};
  expect.at(0, 0) = expect.at(0, 1) = expect.at(1, 0) = expect.at(1, 1) = half;
  CHECK(p == expect);

  StarAlgebra diag3 = fixtures::diag3();
  SquareMatrix d = SquareMatrix::diagonal({Scalar(2), Scalar(3), Scalar(0)});
  CHECK(range_projection(diag3, d) ==
        SquareMatrix::diagonal({Scalar(1), Scalar(1), Scalar(0)}));

  CHECK(range_projection(full2, SquareMatrix::identity(2)) ==
        SquareMatrix::identity(2));
  CHECK_THROWS_AS(range_projection(full2, E(2, 0, 1)), Error);
}

TEST_CASE("range projection commutes with its argument: ps = sp = s on range") {
  StarAlgebra full2 = fixtures::full2();
  Sampler sampler(7);
  for (int k = 0; k < 25; ++k) {
    SquareMatrix s = sample_positive(full2, sampler);
    SquareMatrix p = range_projection(full2, s);
    CHECK(p.is_projection());
    CHECK(p * s == s);
    CHECK(s * p == s);
  }
}

TEST_CASE("center bases") {
  StarAlgebra full2 = fixtures::full2();
  CHECK(center(full2).size() == 1);

  StarAlgebra diag3 = fixtures::diag3();
  CHECK(center(diag3).size() == 3);

  StarAlgebra block21 = fixtures::block21();
  auto z = center(block21);
  REQUIRE(z.size() == 2);
  Subspace zspan = span_of_matrices(z, 3);
  CHECK(zspan.contains(flatten(E(3, 0, 0) + E(3, 1, 1))));
  CHECK(zspan.contains(flatten(E(3, 2, 2))));
  // The unit is always central.
  CHECK(zspan.contains(flatten(block21.unit())));
}

TEST_CASE("maximal commutative subalgebras") {
  StarAlgebra full2 = fixtures::full2();
  StarAlgebra mc = maximal_commutative_subalgebra(full2, {E(2, 0, 0)});
  CHECK(mc.dim() == 2);
  CHECK(mc.contains(E(2, 1, 1)));
  CHECK(mc.unit() == SquareMatrix::identity(2));

  StarAlgebra diag3 = fixtures::diag3();
  StarAlgebra whole = maximal_commutative_subalgebra(diag3, {});
  CHECK(whole.span() == diag3.span());

  StarAlgebra block21 = fixtures::block21();
  StarAlgebra mc2 = maximal_commutative_subalgebra(block21, {E(3, 2, 2)});
  CHECK(mc2.dim() == 3);
  CHECK(mc2.contains(E(3, 0, 0)));
  CHECK(mc2.contains(E(3, 1, 1)));

  SquareMatrix nc1 = E(2, 0, 0);
  SquareMatrix x12 = E(2, 0, 1) + E(2, 1, 0);
  CHECK_THROWS_AS(maximal_commutative_subalgebra(full2, {nc1, x12}), Error);
}

TEST_CASE("decompose_selfadjoint") {
  StarAlgebra full2 = fixtures::full2();
  auto [x, y] = decompose_selfadjoint(full2, E(2, 0, 1));
  CHECK(x.is_self_adjoint());
  CHECK(y.is_self_adjoint());
  CHECK(x + Scalar::i() * y == E(2, 0, 1));

  auto [x2, y2] = decompose_selfadjoint(full2, E(2, 0, 0));
  CHECK(x2 == E(2, 0, 0));
  CHECK(y2.is_zero());

  auto [x3, y3] = decompose_selfadjoint(
      full2, Scalar::i() * SquareMatrix::identity(2));
  CHECK(x3.is_zero());
  CHECK(y3 == SquareMatrix::identity(2));
}

TEST_CASE("adjoint reverses products exactly on random elements") {
  StarAlgebra block21 = fixtures::block21();
  Sampler sampler(11);
  for (int k = 0; k < 50; ++k) {
    SquareMatrix a = sample_element(block21, sampler);
    SquareMatrix b = sample_element(block21, sampler);
    CHECK((a * b).adjoint() == b.adjoint() * a.adjoint());
  }
}

TEST_CASE("minimal polynomial annihilates and divides the characteristic") {
  StarAlgebra full3 = fixtures::full3();
  Sampler sampler(3);
  for (int k = 0; k < 10; ++k) {
    SquareMatrix a = sample_element(full3, sampler);
    auto mp = minimal_polynomial(a);
    CHECK(evaluate_polynomial(mp, a).is_zero());
    CHECK(mp.size() <= 4u);
  }
}

TEST_CASE("random_star_algebra yields valid algebras") {
  Sampler sampler(42);
  for (int k = 0; k < 8; ++k) {
    StarAlgebra a = random_star_algebra(sampler, 5);
    CHECK(a.dim() >= 1);
    CHECK(a.contains(a.unit()));
    CHECK(a.unit().is_projection());
  }
}
