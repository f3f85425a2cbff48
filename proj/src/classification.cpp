#include "annlat/classification.hpp"

#include "annlat/error.hpp"
#include "annlat/floatops.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace annlat {
namespace {

// Synthetic division of a monic polynomial (highest-first coefficients) by
// (t - lambda); the remainder is discarded (lambda must be a root).
std::vector<Scalar> deflate(const std::vector<Scalar>& coeffs,
                            const Rational& lambda) {
  std::vector<Scalar> q;
  Scalar carry;
  Scalar l{lambda};
  for (std::size_t i = 0; i + 1 < coeffs.size(); ++i) {
    carry = i == 0 ? coeffs[0] : coeffs[i] + l * carry;
    q.push_back(carry);
  }
  return q;
}

bool spans_multiple_of(const SquareMatrix& x, const SquareMatrix& p) {
  Subspace s(static_cast<std::size_t>(p.dim()) * p.dim());
  s.add(flatten(p));
  return s.contains(flatten(x));
}

std::vector<SquareMatrix> selfadjoint_parts(const SquareMatrix& b) {
  return {b + b.adjoint(), Scalar::i() * (b.adjoint() - b)};
}

StarAlgebra corner_algebra(const Annihilator& V, const std::string& tag) {
  return star_algebra_from_closed_span(V.algebra->ambient_dim(), V.span,
                                       V.algebra->name() + tag);
}

bool sampled_modular_interval(const Annihilator& V, Sampler& sampler,
                              int samples) {
  const StarAlgebra& a = *V.algebra;
  for (int k = 0; k < samples; ++k) {
    Annihilator z = meet(random_annihilator(a, sampler), V);
    Annihilator x = meet(random_annihilator(a, sampler), z);
    Annihilator y = meet(random_annihilator(a, sampler), V);
    if (join(x, meet(y, z)) != meet(join(x, y), z)) return false;
  }
  return true;
}

std::string float_level(double tol) {
  std::ostringstream os;
  os << "float(" << tol << ")";
  return os.str();
}

} // namespace

std::vector<Rational> rational_eigenvalues(const SquareMatrix& x) {
  std::vector<Scalar> m = minimal_polynomial(x);
  std::vector<Rational> out;
  for (double ev : selfadjoint_eigenvalues(x)) {
    Rational cand;
    if (!rationalize(ev, cand)) continue;
    if (!evaluate_polynomial(m, Scalar(cand)).is_zero()) continue;
    if (std::find(out.begin(), out.end(), cand) == out.end())
      out.push_back(cand);
  }
  return out;
}

SquareMatrix exact_spectral_projection(const SquareMatrix& x,
                                       const Rational& lambda) {
  std::vector<Scalar> m = minimal_polynomial(x);
  std::vector<Scalar> g = deflate(m, lambda);
  Scalar denom = evaluate_polynomial(g, Scalar(lambda));
  SquareMatrix e = evaluate_polynomial(g, x);
  e *= Scalar(1) / denom;
  if (!e.is_projection())
    throw Error(ErrorCode::NotAProjection,
                "spectral splitting produced a non-projection "
                "(eigenvalue not simple in the minimal polynomial?)");
  return e;
}

bool is_abelian_annihilator(const Annihilator& V) {
  for (std::size_t i = 0; i < V.space.size(); ++i)
    for (std::size_t j = i + 1; j < V.space.size(); ++j)
      if (V.space[i] * V.space[j] != V.space[j] * V.space[i]) return false;
  return true;
}

bool is_factor(const StarAlgebra& algebra) {
  return algebra.center_basis().size() == 1;
}

std::optional<Annihilator> find_abelian_annihilator(const StarAlgebra& algebra,
                                                    const Annihilator& R) {
  if (R.is_zero()) return std::nullopt;
  if (is_abelian_annihilator(R)) return R;
  const SquareMatrix& p = R.unit_projection;
  for (const auto& b : R.space) {
    for (const SquareMatrix& x : selfadjoint_parts(b)) {
      if (spans_multiple_of(x, p)) continue;
      for (const Rational& lambda : rational_eigenvalues(x)) {
        if (lambda == 0) continue;
        SquareMatrix e = exact_spectral_projection(x, lambda);
        for (const SquareMatrix* cand : {&e}) {
          if (cand->is_zero() || *cand == p) continue;
          auto sub = find_abelian_annihilator(
              algebra, corner_annihilator(algebra, *cand));
          if (sub) return sub;
        }
        SquareMatrix rest = p - e;
        if (!rest.is_zero() && rest != p) {
          auto sub = find_abelian_annihilator(
              algebra, corner_annihilator(algebra, rest));
          if (sub) return sub;
        }
      }
    }
  }
  return std::nullopt;
}

bool has_nonzero_abelian_annihilator(const StarAlgebra& algebra,
                                     Annihilator* certificate) {
  auto found = find_abelian_annihilator(algebra, whole_annihilator(algebra));
  if (found && certificate) *certificate = *found;
  return found.has_value();
}

CentralAtoms central_atoms(const StarAlgebra& algebra, double tol) {
  CentralAtoms out;
  out.exact.push_back(algebra.unit());
  for (const auto& c : algebra.center_basis()) {
    for (const SquareMatrix& x : selfadjoint_parts(c)) {
      std::vector<SquareMatrix> refined;
      for (const SquareMatrix& z : out.exact) {
        SquareMatrix y = x * z; // z is central, y = z x z, self-adjoint
        if (spans_multiple_of(y, z)) {
          refined.push_back(z);
          continue;
        }
        SquareMatrix rest = z;
        for (const Rational& lambda : rational_eigenvalues(y)) {
          if (lambda == 0) continue;
          SquareMatrix e = exact_spectral_projection(y, lambda);
          refined.push_back(e);
          rest -= e;
        }
        if (!rest.is_zero()) refined.push_back(rest);
      }
      out.exact = std::move(refined);
    }
  }
  for (const auto& z : out.exact) {
    StarAlgebra corner =
        corner_algebra(corner_annihilator(algebra, z), ".summand");
    bool atom = corner.center_basis().size() == 1;
    out.atom_certified.push_back(atom);
    out.all_exact = out.all_exact && atom;
  }
  (void)tol;
  return out;
}

TypeReport decompose_types(const StarAlgebra& algebra, NumericPolicy policy) {
  TypeReport r;
  r.is_factor = is_factor(algebra);
  r.certificate_level = "exact";
  Sampler sampler(policy.seed);

  // (1) Maximal family of Abelian annihilators with pairwise orthogonal
  // central supports; A_I is the join of those supports.
  Annihilator remainder = whole_annihilator(algebra);
  std::vector<Annihilator> supports;
  while (!remainder.is_zero()) {
    auto v = find_abelian_annihilator(algebra, remainder);
    if (!v) {
      r.certificate_level = float_level(policy.tolerance);
      break;
    }
    r.abelian_family.push_back(*v);
    Annihilator z = central_support(*v);
    supports.push_back(z);
    remainder = meet(remainder, orthocomplement(z));
  }
  r.A_I = join_many(algebra, supports);

  // (2) Modular family inside Z = Ann(A_I); empty in finite dimension, but
  // the branch runs so the path is exercised.
  Annihilator Z = orthocomplement(r.A_I);
  std::vector<Annihilator> mods;
  Annihilator rem2 = Z;
  while (!rem2.is_zero()) {
    if (!sampled_modular_interval(rem2, sampler,
                                  std::max(1, policy.samples / 20)))
      break;
    mods.push_back(rem2);
    Annihilator z = central_support(rem2);
    rem2 = meet(rem2, orthocomplement(z));
  }
  r.A_II = join_many(algebra, mods);

  // (3) A_III = Ann_Z(A_II).
  r.A_III = meet(Z, orthocomplement(r.A_II));
  return r;
}

TypeReport classify_type_In(const StarAlgebra& algebra, NumericPolicy policy) {
  TypeReport r;
  r.is_factor = is_factor(algebra);
  r.certificate_level = "exact";
  CentralAtoms atoms = central_atoms(algebra, policy.tolerance);
  Sampler sampler(policy.seed);

  for (std::size_t i = 0; i < atoms.exact.size(); ++i) {
    const SquareMatrix& z = atoms.exact[i];
    Annihilator summand = corner_annihilator(algebra, z);
    const int d = static_cast<int>(summand.dim());
    if (atoms.atom_certified[i]) {
      // Family of pairwise orthogonal Abelian annihilators with join = summand.
      std::vector<Annihilator> fam;
      SquareMatrix cur = z;
      bool exact_ok = true;
      while (!cur.is_zero()) {
        auto v = find_abelian_annihilator(algebra,
                                          corner_annihilator(algebra, cur));
        if (!v) {
          exact_ok = false;
          break;
        }
        fam.push_back(*v);
        cur -= v->unit_projection;
      }
      if (exact_ok) {
        const int n = static_cast<int>(fam.size());
        if (n * n != d)
          throw Error(ErrorCode::NotInAlgebra,
                      "type I_n cross-check failed: family size vs span dim");
        r.type_multiset.push_back(n);
        for (auto& v : fam) r.abelian_family.push_back(std::move(v));
        continue;
      }
    }
    // Float refinement: split the summand's center numerically and size each
    // piece by the numeric rank of its compressed basis.
    r.certificate_level = float_level(policy.tolerance);
    StarAlgebra corner = corner_algebra(summand, ".summand");
    CMat zf = to_eigen(z);
    bool split_done = false;
    for (int attempt = 0; attempt < 8 && !split_done; ++attempt) {
      SquareMatrix y(algebra.ambient_dim());
      for (const auto& c : corner.center_basis())
        for (const SquareMatrix& part : selfadjoint_parts(c))
          y += Scalar(sampler.small_rational()) * part;
      Eigen::SelfAdjointEigenSolver<CMat> solver(to_eigen(y));
      // Cluster eigenvalues restricted to the summand (eigenvectors in
      // range z) and build one projection per cluster.
      std::vector<double> vals;
      std::vector<CMat> projs;
      const double tol = policy.tolerance;
      for (int k = 0; k < solver.eigenvalues().size(); ++k) {
        CMat v = solver.eigenvectors().col(k);
        if ((zf * v - v).norm() > 1e-6) continue; // outside the summand
        double ev = solver.eigenvalues()[k];
        bool merged = false;
        for (std::size_t m = 0; m < vals.size(); ++m)
          if (std::abs(vals[m] - ev) < 1e-6) {
            projs[m] += v * v.adjoint();
            merged = true;
            break;
          }
        if (!merged) {
          vals.push_back(ev);
          projs.push_back(v * v.adjoint());
        }
      }
      if (projs.size() != corner.center_basis().size()) continue;
      // Each cluster projection must be central within tolerance.
      bool central = true;
      for (const CMat& pr : projs)
        for (const auto& b : corner.basis()) {
          CMat bf = to_eigen(b);
          if (!approx_equal(pr * bf, bf * pr, 1e-6)) central = false;
        }
      if (!central) continue;
      std::vector<int> ns;
      bool sizes_ok = true;
      for (const CMat& pr : projs) {
        std::vector<CMat> compressed;
        for (const auto& b : corner.basis())
          compressed.push_back(pr * to_eigen(b) * pr);
        int dj = numeric_rank(compressed, 1e-7);
        int nj = static_cast<int>(std::lround(std::sqrt(double(dj))));
        if (nj * nj != dj) {
          sizes_ok = false;
          break;
        }
        ns.push_back(nj);
      }
      (void)tol;
      if (!sizes_ok) continue;
      for (int nj : ns) r.type_multiset.push_back(nj);
      split_done = true;
    }
    if (!split_done)
      throw Error(ErrorCode::NotInAlgebra,
                  "numeric central splitting failed to converge");
  }

  std::sort(r.type_multiset.rbegin(), r.type_multiset.rend());
  std::ostringstream os;
  for (std::size_t i = 0; i < r.type_multiset.size(); ++i)
    os << (i ? " + " : "") << "I_" << r.type_multiset[i];
  r.type_label = os.str();
  r.A_I = whole_annihilator(algebra);
  r.A_II = zero_annihilator(algebra);
  r.A_III = zero_annihilator(algebra);
  return r;
}

std::pair<bool, EquivalenceWitness> equivalent_annihilators(
    const Annihilator& V, const Annihilator& W) {
  if (!(*V.algebra == *W.algebra))
    throw Error(ErrorCode::AlgebraMismatch,
                "equivalence compares annihilators of one algebra");
  EquivalenceWitness w;
  w.kind = "trace-certificate";
  bool eq = true;
  for (const auto& c : V.algebra->center_basis()) {
    Scalar tv = (c * V.unit_projection).trace();
    Scalar tw = (c * W.unit_projection).trace();
    w.trace_pairs.emplace_back(tv, tw);
    eq = eq && tv == tw;
  }
  return {eq, w};
}

bool projections_equivalent(const StarAlgebra& algebra, const SquareMatrix& p,
                            const SquareMatrix& q) {
  if (!algebra.contains(p) || !p.is_projection() || !algebra.contains(q) ||
      !q.is_projection())
    throw Error(ErrorCode::NotAProjection,
                "equivalence is defined for projections in A");
  for (const auto& c : algebra.center_basis())
    if ((c * p).trace() != (c * q).trace()) return false;
  return true;
}

bool is_finite_projection(const StarAlgebra& algebra, const SquareMatrix& p) {
  if (!algebra.contains(p) || !p.is_projection())
    throw Error(ErrorCode::NotAProjection, "finiteness needs a projection");
  // An equivalent subprojection q <= p has Tr(q) = Tr(p) (take c = unit in
  // the center-trace criterion), and p - q >= 0 with zero trace forces
  // q = p because the ambient trace is faithful. So no proper equivalent
  // subprojection exists.
  return true;
}

LatticeTypeReport classify_lattice_type(const AbstractOrtholattice& l) {
  if (!verify_orthomodular_exhaustive(l).pass)
    throw Error(ErrorCode::NotOrthomodular,
                "type classification needs an orthomodular lattice");
  LatticeTypeReport out;
  if (verify_modular(l).modular) {
    out.label = "modular";
    return out;
  }

  auto distributive = [](const AbstractOrtholattice& s) {
    for (int a = 0; a < s.size(); ++a)
      for (int b = 0; b < s.size(); ++b)
        for (int c = 0; c < s.size(); ++c)
          if (s.meet(a, s.join(b, c)) !=
              s.join(s.meet(a, b), s.meet(a, c)))
            return false;
    return true;
  };

  auto summand_label = [&](const AbstractOrtholattice& s) -> std::string {
    if (verify_modular(s).modular) return "modular";
    bool abelian = false, modular_piece = false;
    for (int v = 0; v < s.size(); ++v) {
      if (v == s.bottom) continue;
      AbstractOrtholattice iv = interval_sublattice(s, v);
      if (distributive(iv)) abelian = true;
      if (verify_modular(iv).modular) modular_piece = true;
    }
    if (abelian) return "has-abelian-atoms";
    if (modular_piece) return "locally modular";
    return "purely nonmodular";
  };

  // Central atoms: minimal nonzero elements of the center.
  std::vector<int> center;
  for (const std::string& label : lattice_center_abstract(l))
    center.push_back(l.index(label));
  std::vector<int> atoms;
  for (int c : center) {
    if (c == l.bottom) continue;
    bool minimal = true;
    for (int d : center)
      if (d != l.bottom && d != c && l.leq[d][c]) minimal = false;
    if (minimal) atoms.push_back(c);
  }

  std::vector<std::string> labels;
  for (int c : atoms) {
    AbstractOrtholattice s = interval_sublattice(l, c);
    std::string lab = summand_label(s);
    out.summands.emplace_back(l.elements[c], lab);
    labels.push_back(lab);
  }
  bool uniform = true;
  for (const auto& lab : labels) uniform = uniform && lab == labels.front();
  out.label = labels.empty() ? "modular"
              : uniform      ? labels.front()
                             : "mixed";
  return out;
}

} // namespace annlat
