#include "doctest.h"

#include "annlat/annihilator.hpp"
#include "annlat/error.hpp"
#include "fixtures.hpp"

using namespace annlat;
using fixtures::E;

namespace {

Subspace corner(const StarAlgebra& a, const SquareMatrix& p) {
  std::vector<SquareMatrix> pbp;
  for (const auto& b : a.basis()) pbp.push_back(p * b * p);
  return span_of_matrices(pbp, a.ambient_dim());
}

} // namespace

TEST_CASE("annihilator of positive sets") {
  StarAlgebra full2 = fixtures::full2();
  Annihilator v = annihilator(full2, {E(2, 0, 0)});
  CHECK(v.dim() == 1);
  CHECK(v.unit_projection == E(2, 1, 1));
  CHECK(v.contains(E(2, 1, 1)));

  StarAlgebra diag3 = fixtures::diag3();
  CHECK(annihilator(diag3, {SquareMatrix::identity(3)}).is_zero());

  StarAlgebra block21 = fixtures::block21();
  Annihilator w = annihilator(block21, {E(3, 2, 2)});
  CHECK(w.dim() == 4);
  CHECK(w.unit_projection == E(3, 0, 0) + E(3, 1, 1));

  Annihilator whole = annihilator(full2, {});
  CHECK(whole.is_whole());
  CHECK(whole.dim() == full2.dim());

  CHECK_THROWS_AS(annihilator(full2, {E(2, 0, 1)}), Error);
}

TEST_CASE("double annihilator") {
  StarAlgebra diag3 = fixtures::diag3();
  SquareMatrix d = SquareMatrix::diagonal({Scalar(2), Scalar(3), Scalar(0)});
  Annihilator v = double_annihilator(diag3, {d});
  CHECK(v.dim() == 2);
  CHECK(v.unit_projection == SquareMatrix::diagonal(
                                 {Scalar(1), Scalar(1), Scalar(0)}));

  StarAlgebra full2 = fixtures::full2();
  Annihilator u = double_annihilator(full2, {E(2, 0, 0)});
  CHECK(u.dim() == 1);
  CHECK(u.unit_projection == E(2, 0, 0));

  CHECK(double_annihilator(full2, {full2.unit()}).is_whole());
}

TEST_CASE("relative annihilator") {
  StarAlgebra diag3 = fixtures::diag3();
  Annihilator b = annihilator(diag3, {E(3, 2, 2)}); // span{E11,E22}
  Annihilator r = relative_annihilator(b, {E(3, 0, 0)});
  CHECK(r.dim() == 1);
  CHECK(r.unit_projection == E(3, 1, 1));

  Annihilator whole = whole_annihilator(diag3);
  CHECK(relative_annihilator(whole, {E(3, 0, 0)}) ==
        annihilator(diag3, {E(3, 0, 0)}));

  CHECK(relative_annihilator(b, {b.unit_projection}).is_zero());

  // E33 lies outside the corner span{E11,E22}.
  CHECK_THROWS_AS(relative_annihilator(b, {E(3, 2, 2)}), Error);
}

TEST_CASE("d operator") {
  StarAlgebra full2 = fixtures::full2();
  auto dv = d_operator(full2, {E(2, 0, 0)});
  REQUIRE(dv.size() == 3);
  Subspace dspan = span_of_matrices(dv, 2);
  CHECK(dspan.contains(flatten(E(2, 0, 1))));
  CHECK(dspan.contains(flatten(E(2, 1, 0))));
  CHECK(dspan.contains(flatten(E(2, 1, 1))));
  CHECK_FALSE(dspan.contains(flatten(E(2, 0, 0))));

  StarAlgebra diag3 = fixtures::diag3();
  auto dv3 = d_operator(diag3, {E(3, 0, 0)});
  Subspace dspan3 = span_of_matrices(dv3, 3);
  CHECK(dv3.size() == 2);
  CHECK(dspan3.contains(flatten(E(3, 1, 1))));
  CHECK(dspan3.contains(flatten(E(3, 2, 2))));

  CHECK(d_operator(full2, {}).size() == full2.dim());
}

TEST_CASE("hereditary corners and the positive pair") {
  StarAlgebra block21 = fixtures::block21();
  Annihilator h = hereditary(block21, E(3, 0, 0));
  CHECK(h.dim() == 1);
  CHECK(h.unit_projection == E(3, 0, 0));
  CHECK_THROWS_AS(hereditary(block21, E(3, 0, 1)), Error);

  StarAlgebra full2 = fixtures::full2();
  auto [l, r] = positive_pair(full2, E(2, 0, 1));
  CHECK(is_positive(full2, l));
  CHECK(is_positive(full2, r));
  // Ann({s*s, ss*}) kills exactly what annihilates s and s* together.
  Annihilator v = annihilator(full2, {l, r});
  CHECK(v.is_zero()); // E12, E21 together have full range
}

TEST_CASE("triple annihilator law and Lemma-2-style closure on samples") {
  Sampler sampler(19);
  for (StarAlgebra& a : fixtures::all_basic()) {
    for (int k = 0; k < 6; ++k) {
      SquareMatrix s = sample_positive(a, sampler);
      Annihilator ann_s = annihilator(a, {s});
      Annihilator dd = double_annihilator(a, {s});
      // Ann(Ann(Ann(S))) = Ann(S): both are corners, compare projections.
      Annihilator triple = annihilator(a, {dd.unit_projection});
      CHECK(triple == ann_s);

      // Closure of the annihilator under product, adjoint, and x A x.
      if (!ann_s.is_zero()) {
        SquareMatrix x = ann_s.space.front();
        SquareMatrix y = ann_s.space.back();
        CHECK(ann_s.contains(x * y));
        CHECK(ann_s.contains(x.adjoint()));
        SquareMatrix c = sample_element(a, sampler);
        CHECK(ann_s.contains(x * c * x));
      }

      // Hereditary form: the space is exactly pAp.
      CHECK(ann_s.span == corner(a, ann_s.unit_projection));
      // Unit projection really is the unit of the corner.
      for (const auto& m : ann_s.space) {
        CHECK(ann_s.unit_projection * m == m);
        CHECK(m * ann_s.unit_projection == m);
      }
    }
  }
}

TEST_CASE("d operator detects central corners in commutative fixtures") {
  StarAlgebra diag3 = fixtures::diag3();
  Annihilator v = double_annihilator(diag3, {E(3, 0, 0)});
  Annihilator vperp = annihilator(diag3, {E(3, 0, 0)});
  Subspace a = span_of_matrices(d_operator(diag3, v.space), 3);
  Subspace b = span_of_matrices(d_operator(diag3, vperp.space), 3);
  CHECK(intersect(a, b).dim() == 0);
}
