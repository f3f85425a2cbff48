#include "annlat/suites.hpp"

#include "annlat/classification.hpp"
#include "annlat/error.hpp"
#include "annlat/floatops.hpp"
#include "annlat/ortholattice.hpp"

#include <algorithm>
#include <sstream>

namespace annlat {
namespace {

void check(SuiteResult& r, bool ok, const std::string& witness) {
  ++r.checks;
  if (!ok && r.pass) { r.pass = false; r.witness = witness; }
}

std::string mat_str(const SquareMatrix& m) { return m.to_string(); }

SuiteResult suite_lemma1(const StarAlgebra& a, const NumericPolicy& policy) {
  SuiteResult r{"lemma1", "Lemma 1"};
  Sampler sampler(policy.seed);
  for (int k = 0; k < policy.samples; ++k) {
    SquareMatrix pos = sample_positive(a, sampler);
    SquareMatrix b = sample_element(a, sampler);
    // 2): ab + ba = 0 iff ab = ba = 0 for positive a.
    bool anti = (pos * b + b * pos).is_zero();
    bool both = (pos * b).is_zero() && (b * pos).is_zero();
    check(r, anti == both, "a = " + mat_str(pos) + ", b = " + mat_str(b));
    // 1) on the self-adjoint part.
    auto [x, y] = decompose_selfadjoint(a, b);
    bool xa = (pos * x + x * pos).is_zero();
    bool xb = (pos * x).is_zero();
    bool xc = (x * pos).is_zero();
    check(r, xa == xb && xb == xc, "a = " + mat_str(pos) + ", x = " + mat_str(x));
    if (!r.pass) break;
  }
  return r;
}

SuiteResult suite_lemma2(const StarAlgebra& a, const NumericPolicy& policy) {
  SuiteResult r{"lemma2", "Lemma 2"};
  Sampler sampler(policy.seed);
  for (int k = 0; k < std::max(1, policy.samples / 4); ++k) {
    SquareMatrix s = sample_positive(a, sampler);
    for (const Annihilator& v :
         {annihilator(a, {s}), double_annihilator(a, {s})}) {
      if (v.is_zero()) continue;
      const SquareMatrix& x = v.space[sampler.uniform(0, static_cast<int>(v.space.size()) - 1)];
      const SquareMatrix& y = v.space[sampler.uniform(0, static_cast<int>(v.space.size()) - 1)];
      check(r, v.contains(x * y), "product left the annihilator");
      check(r, v.contains(x.adjoint()), "adjoint left the annihilator");
      SquareMatrix c = sample_element(a, sampler);
      check(r, v.contains(x * c * x), "xAx left the annihilator");
    }
    if (!r.pass) break;
  }
  return r;
}

SuiteResult suite_lemma56(const StarAlgebra& a, const NumericPolicy& policy) {
  SuiteResult r{"lemma5-6", "Lemmas 5-6"};
  Sampler sampler(policy.seed);
  // Pool of lattice elements for the brute-force join/meet oracle.
  std::vector<Annihilator> pool;
  AnnLattice l = make_ann_lattice(a, policy);
  pool.push_back(l.zero);
  pool.push_back(l.one);
  for (int k = 0; k < 10; ++k) pool.push_back(random_annihilator(a, sampler));

  for (int k = 0; k < std::max(1, policy.samples / 4); ++k) {
    Annihilator v = random_annihilator(a, sampler);
    Annihilator w = random_annihilator(a, sampler);
    Annihilator j = join(v, w);
    Annihilator m = meet(v, w);
    // Lemma 5 formulas.
    check(r, j == double_annihilator(a, {v.unit_projection, w.unit_projection}),
          "join formula mismatch");
    check(r,
          m == orthocomplement(double_annihilator(
                   a, {orthocomplement(v).unit_projection,
                       orthocomplement(w).unit_projection})),
          "meet formula mismatch");
    // Oracle: j is an upper bound below every pool upper bound; dually for m.
    check(r, leq(v, j) && leq(w, j) && leq(m, v) && leq(m, w),
          "join/meet not bounds");
    for (const Annihilator& c : pool) {
      if (leq(v, c) && leq(w, c)) check(r, leq(j, c), "join not least");
      if (leq(c, v) && leq(c, w)) check(r, leq(c, m), "meet not greatest");
    }
    // Lemma 6: complements, double complement, De Morgan.
    check(r, meet(v, orthocomplement(v)).is_zero(), "X and X-perp != 0");
    check(r, join(v, orthocomplement(v)).is_whole(), "X or X-perp != A");
    check(r, orthocomplement(orthocomplement(v)) == v, "double complement");
    check(r,
          orthocomplement(j) ==
              meet(orthocomplement(v), orthocomplement(w)),
          "De Morgan (join)");
    check(r,
          orthocomplement(m) ==
              join(orthocomplement(v), orthocomplement(w)),
          "De Morgan (meet)");
    if (!r.pass) break;
  }
  return r;
}

SuiteResult suite_lemma78(const StarAlgebra& a, const NumericPolicy& policy) {
  SuiteResult r{"lemma7-8", "Lemmas 7-8"};
  CentralAtoms atoms = central_atoms(a, policy.tolerance);
  const std::size_t k = atoms.exact.size();
  // All 2^k sums of the central projections: the boolean algebra Z(P).
  std::vector<Annihilator> centrals;
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    SquareMatrix z(a.ambient_dim());
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (std::size_t{1} << i)) z += atoms.exact[i];
    centrals.push_back(corner_annihilator(a, z));
  }
  for (const auto& x : centrals) check(r, is_central(x), "not central");
  for (const auto& x : centrals)
    for (const auto& y : centrals) {
      check(r, commutes(x, y), "central elements fail to commute");
      // Boolean: distributivity within Z(P).
      for (const auto& z : centrals)
        check(r, meet(x, join(y, z)) == join(meet(x, y), meet(x, z)),
              "central distributivity");
    }
  if (!atoms.all_exact)
    r.notes = "central atoms have irrational refinements; boolean check ran "
              "on the exact central projections";
  return r;
}

SuiteResult suite_lemma13(const StarAlgebra& a, const NumericPolicy& policy) {
  SuiteResult r{"lemma13", "Lemma 13"};
  Sampler sampler(policy.seed);
  for (int k = 0; k < std::max(1, policy.samples / 8); ++k) {
    Annihilator v = random_annihilator(a, sampler);
    if (v.is_zero()) continue;
    // a) relative annihilators of V are absolute annihilators <= V.
    SquareMatrix s = sample_positive(a, sampler);
    SquareMatrix inside = v.unit_projection * s * v.unit_projection;
    Annihilator rel = relative_annihilator(v, {inside});
    check(r, leq(rel, v), "relative annihilator escaped V");
    check(r, rel == meet(annihilator(a, {inside}), v),
          "relative != absolute-and-V");
    // b) for central Z >= V: Ann_Z(Ann_Z(V)) = V.
    Annihilator z = central_support(v);
    Annihilator inner = relative_annihilator(z, {v.unit_projection});
    Annihilator back =
        inner.is_zero() ? z : relative_annihilator(z, {inner.unit_projection});
    check(r, back == v, "relative double annihilator in central Z");
    // c) sub-annihilators of Abelian annihilators are Abelian.
    if (is_abelian_annihilator(v)) {
      Annihilator w = meet(random_annihilator(a, sampler), v);
      check(r, is_abelian_annihilator(w), "sub-annihilator not Abelian");
    }
    if (!r.pass) break;
  }
  return r;
}

SuiteResult suite_theorem12(const StarAlgebra& a, const NumericPolicy& policy) {
  SuiteResult r{"theorem12", "Theorem 12"};
  AnnLattice l = make_ann_lattice(a, policy);
  SuiteReport rep = verify_orthomodular_sampled(l, policy.samples);
  r.pass = rep.pass;
  r.checks = rep.checks;
  r.witness = rep.witness;
  return r;
}

SuiteResult suite_theorem15(const StarAlgebra& a, const NumericPolicy& policy) {
  SuiteResult r{"theorem15", "Theorem 15"};
  Sampler sampler(policy.seed);
  AnnLattice l = make_ann_lattice(a, policy);
  check(r, orthocomplement(l.one) == l.zero && orthocomplement(l.zero) == l.one,
        "bounds");
  int converse_failures = 0;
  for (int k = 0; k < std::max(1, policy.samples / 4); ++k) {
    Annihilator v = random_annihilator(a, sampler);
    Annihilator w = random_annihilator(a, sampler);
    // (c) order reversal of the orthocomplementation.
    if (leq(v, w))
      check(r, leq(orthocomplement(w), orthocomplement(v)), "order reversal");
    // (e) V.W = {0} implies lattice orthogonality; only this direction is an
    // invariant, the converse is measured and reported informationally.
    Annihilator u = meet(w, orthocomplement(v));
    check(r, leq(v, orthocomplement(u)), "stated orthogonality direction");
    if (leq(v, orthocomplement(w)) &&
        !(v.unit_projection * w.unit_projection).is_zero())
      ++converse_failures;
    if (!r.pass) break;
  }
  std::ostringstream os;
  os << "converse of 15(e) failed on " << converse_failures
     << " sampled pairs (informational)";
  r.notes = os.str();
  return r;
}

SuiteResult suite_theorem21(const StarAlgebra& a, const NumericPolicy& policy) {
  SuiteResult r{"theorem21", "Theorem 21"};
  TypeReport t = decompose_types(a, policy);
  check(r, t.A_I.is_whole(), "A_I != A on finite-dimensional input");
  check(r, t.A_II.is_zero() && t.A_III.is_zero(), "A_II or A_III nonzero");
  Annihilator total = join_many(a, {t.A_I, t.A_II, t.A_III});
  check(r, orthocomplement(total).is_zero(),
        "Ann(A_I + A_II + A_III) != {0}");
  // Corollary-22 shape: A_NGCR = Ann(A_I).
  Annihilator ngcr = orthocomplement(t.A_I);
  check(r, orthocomplement(join(t.A_I, ngcr)).is_zero(),
        "Ann(A_I + A_NGCR) != {0}");
  // Uniqueness under a different seed.
  NumericPolicy other = policy;
  other.seed = policy.seed * 7919 + 17;
  TypeReport t2 = decompose_types(a, other);
  check(r, t.A_I == t2.A_I && t.A_II == t2.A_II && t.A_III == t2.A_III,
        "decomposition depends on the seed");
  r.notes = "certificate " + t.certificate_level;
  return r;
}

SuiteResult suite_lemma2627(const StarAlgebra& a, const NumericPolicy& policy) {
  SuiteResult r{"lemma26-27", "Lemmas 26-27"};
  Sampler sampler(policy.seed);
  std::vector<Annihilator> pool;
  for (int k = 0; k < 6; ++k) pool.push_back(random_annihilator(a, sampler));
  for (const auto& v : pool)
    for (const auto& w : pool) {
      bool eq = equivalent_annihilators(v, w).first;
      // Lemma 26 bridge.
      check(r,
            eq == projections_equivalent(a, v.unit_projection,
                                         w.unit_projection),
            "annihilator/projection equivalence mismatch");
      if (policy.mode == NumericMode::Float)
        check(r,
              eq == float_partial_isometry(a, v.unit_projection,
                                           w.unit_projection, policy.tolerance,
                                           sampler),
              "isometry oracle disagrees");
      // Lemma 27(b): transitivity via a third element.
      for (const auto& u : pool)
        if (eq && equivalent_annihilators(w, u).first)
          check(r, equivalent_annihilators(v, u).first, "transitivity");
    }
  return r;
}

SuiteResult suite_dimension(const StarAlgebra& a, const NumericPolicy& policy) {
  SuiteResult r{"dimension", "Dimension function (Theorem 28 context)"};
  Sampler sampler(policy.seed);
  AnnLattice l = make_ann_lattice(a, policy);
  check(r, dimension_function(l.one) == 1 && dimension_function(l.zero) == 0,
        "normalization");
  for (int k = 0; k < std::max(1, policy.samples / 2); ++k) {
    Annihilator v = random_annihilator(a, sampler);
    Annihilator w = meet(random_annihilator(a, sampler), orthocomplement(v));
    check(r,
          dimension_function(join(v, w)) ==
              dimension_function(v) + dimension_function(w),
          "additivity on orthogonal pairs");
    check(r, (dimension_function(v) == 0) == v.is_zero(), "faithfulness");
    check(r, dimension_function(meet(v, w)) <= dimension_function(v),
          "monotonicity");
    if (equivalent_annihilators(v, w).first)
      check(r, dimension_function(v) == dimension_function(w),
            "equivalence invariance");
    if (!r.pass) break;
  }
  return r;
}

} // namespace

std::vector<std::string> suite_names() {
  return {"dimension",  "lemma1",    "lemma13",   "lemma2",     "lemma26-27",
          "lemma5-6",   "lemma7-8",  "theorem12", "theorem15",  "theorem21"};
}

SuiteResult run_suite(const std::string& name, const StarAlgebra& algebra,
                      const NumericPolicy& policy) {
  if (name == "lemma1") return suite_lemma1(algebra, policy);
  if (name == "lemma2") return suite_lemma2(algebra, policy);
  if (name == "lemma5-6") return suite_lemma56(algebra, policy);
  if (name == "lemma7-8") return suite_lemma78(algebra, policy);
  if (name == "lemma13") return suite_lemma13(algebra, policy);
  if (name == "theorem12") return suite_theorem12(algebra, policy);
  if (name == "theorem15") return suite_theorem15(algebra, policy);
  if (name == "theorem21") return suite_theorem21(algebra, policy);
  if (name == "lemma26-27") return suite_lemma2627(algebra, policy);
  if (name == "dimension") return suite_dimension(algebra, policy);
  throw Error(ErrorCode::UnknownSuite, "no suite named '" + name + "'");
}

std::vector<SuiteResult> run_all_suites(const StarAlgebra& algebra,
                                        const NumericPolicy& policy) {
  std::vector<SuiteResult> out;
  for (const std::string& name : suite_names())
    out.push_back(run_suite(name, algebra, policy));
  return out;
}

} // namespace annlat
