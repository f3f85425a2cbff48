#include "annlat/abstract_lattice.hpp"

#include "annlat/error.hpp"

#include <algorithm>
#include <sstream>

namespace annlat {
namespace {

void compute_tables(AbstractOrtholattice& l) {
  const int n = l.size();
  l.join_table.assign(n, std::vector<int>(n, -1));
  l.meet_table.assign(n, std::vector<int>(n, -1));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      for (int u = 0; u < n; ++u) {
        if (!(l.leq[x][u] && l.leq[y][u])) continue;
        bool least = true;
        for (int w = 0; w < n && least; ++w)
          if (l.leq[x][w] && l.leq[y][w] && !l.leq[u][w]) least = false;
        if (least) {
          l.join_table[x][y] = u;
          break;
        }
      }
      for (int u = 0; u < n; ++u) {
        if (!(l.leq[u][x] && l.leq[u][y])) continue;
        bool greatest = true;
        for (int w = 0; w < n && greatest; ++w)
          if (l.leq[w][x] && l.leq[w][y] && !l.leq[w][u]) greatest = false;
        if (greatest) {
          l.meet_table[x][y] = u;
          break;
        }
      }
    }
}

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::MalformedPoset, what);
}

} // namespace

int AbstractOrtholattice::index(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (elements[i] == label) return i;
  return -1;
}

AbstractOrtholattice make_lattice(
    std::vector<std::string> elements,
    const std::vector<std::pair<std::string, std::string>>& leq_pairs,
    const std::map<std::string, std::string>& ortho) {
  AbstractOrtholattice l;
  l.elements = std::move(elements);
  const int n = l.size();
  if (n == 0) malformed("empty lattice");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (l.elements[i] == l.elements[j]) malformed("duplicate label");

  l.leq.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) l.leq[i][i] = true;
  for (const auto& [a, b] : leq_pairs) {
    int x = l.index(a), y = l.index(b);
    if (x < 0 || y < 0) malformed("leq pair references unknown label");
    l.leq[x][y] = true;
  }
  for (int k = 0; k < n; ++k) // transitive closure
    for (int i = 0; i < n; ++i)
      if (l.leq[i][k])
        for (int j = 0; j < n; ++j)
          if (l.leq[k][j]) l.leq[i][j] = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && l.leq[i][j] && l.leq[j][i])
        malformed("antisymmetry violated: " + l.elements[i] + " ~ " +
                  l.elements[j]);

  for (int i = 0; i < n; ++i) {
    bool bot = true, top = true;
    for (int j = 0; j < n; ++j) {
      bot = bot && l.leq[i][j];
      top = top && l.leq[j][i];
    }
    if (bot) l.bottom = i;
    if (top) l.top = i;
  }
  if (l.bottom < 0 || l.top < 0) malformed("poset lacks bottom or top");

  if (!ortho.empty()) {
    l.ortho.assign(n, -1);
    for (const auto& [a, b] : ortho) {
      int x = l.index(a), y = l.index(b);
      if (x < 0 || y < 0) malformed("ortho map references unknown label");
      l.ortho[x] = y;
    }
    for (int i = 0; i < n; ++i)
      if (l.ortho[i] < 0) malformed("ortho map is not total");
    for (int i = 0; i < n; ++i)
      if (l.ortho[l.ortho[i]] != i)
        malformed("orthocomplement is not an involution at " + l.elements[i]);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (l.leq[i][j] && !l.leq[l.ortho[j]][l.ortho[i]])
          malformed("orthocomplement is not order-reversing");
  }

  compute_tables(l);
  return l;
}

SuiteReport verify_ortholattice(const AbstractOrtholattice& l) {
  if (!l.has_ortho()) malformed("ortholattice check needs an orthocomplement");
  SuiteReport r;
  r.name = "ortholattice-axioms";
  const int n = l.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      ++r.checks;
      if (l.join(x, y) < 0 || l.meet(x, y) < 0) {
        r.fail("no join/meet for (" + l.elements[x] + ", " + l.elements[y] +
               ")");
        return r;
      }
    }
  for (int x = 0; x < n; ++x) {
    ++r.checks;
    if (l.meet(x, l.ortho[x]) != l.bottom || l.join(x, l.ortho[x]) != l.top) {
      r.fail("complement law fails at " + l.elements[x]);
      return r;
    }
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      ++r.checks;
      if (l.ortho[l.join(x, y)] != l.meet(l.ortho[x], l.ortho[y]) ||
          l.ortho[l.meet(x, y)] != l.join(l.ortho[x], l.ortho[y])) {
        r.fail("De Morgan fails at (" + l.elements[x] + ", " + l.elements[y] +
               ")");
        return r;
      }
    }
  return r;
}

SuiteReport verify_orthomodular_exhaustive(const AbstractOrtholattice& l) {
  if (!l.has_ortho()) malformed("orthomodularity needs an orthocomplement");
  SuiteReport r;
  r.name = "orthomodular-exhaustive";
  for (int x = 0; x < l.size(); ++x)
    for (int y = 0; y < l.size(); ++y) {
      if (!l.leq[x][y]) continue;
      ++r.checks;
      int m = l.meet(y, l.ortho[x]);
      int rebuilt = m < 0 ? -1 : l.join(x, m);
      if (rebuilt != y) {
        r.fail("(" + l.elements[x] + ", " + l.elements[y] + ")");
        return r;
      }
    }
  return r;
}

ModularityReport verify_modular(const AbstractOrtholattice& l) {
  ModularityReport r;
  const int n = l.size();
  for (int x = 0; x < n && r.modular; ++x)
    for (int z = 0; z < n && r.modular; ++z) {
      if (!l.leq[x][z]) continue;
      for (int y = 0; y < n; ++y) {
        ++r.checks;
        int yz = l.meet(y, z);
        int lhs = yz < 0 ? -1 : l.join(x, yz);
        int xy = l.join(x, y);
        int rhs = xy < 0 ? -1 : l.meet(xy, z);
        if (lhs < 0 || rhs < 0 || lhs != rhs) {
          r.modular = false;
          r.witness = "(" + l.elements[x] + ", " + l.elements[y] + ", " +
                      l.elements[z] + ")";
          break;
        }
      }
    }
  if (!r.modular) return r;

  // Height = longest chain from bottom; a valuation exactly when modular.
  r.height.assign(n, 0);
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    int ca = 0, cb = 0;
    for (int j = 0; j < n; ++j) {
      ca += l.leq[j][a];
      cb += l.leq[j][b];
    }
    return ca < cb;
  });
  for (int i : order)
    for (int j = 0; j < n; ++j)
      if (j != i && l.leq[j][i]) r.height[i] = std::max(r.height[i], r.height[j] + 1);
  r.valuation_certified = true;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (r.height[x] + r.height[y] !=
          r.height[l.join(x, y)] + r.height[l.meet(x, y)])
        r.valuation_certified = false;
  return r;
}

bool lattice_commutes(const AbstractOrtholattice& l, int x, int y) {
  int a = l.meet(x, y);
  int b = l.meet(x, l.ortho[y]);
  if (a < 0 || b < 0) return false;
  return l.join(a, b) == x;
}

std::vector<std::string> lattice_center_abstract(
    const AbstractOrtholattice& l) {
  if (!verify_orthomodular_exhaustive(l).pass)
    throw Error(ErrorCode::NotOrthomodular,
                "center is defined for orthomodular lattices only");
  std::vector<int> center;
  for (int z = 0; z < l.size(); ++z) {
    bool ok = true;
    for (int x = 0; x < l.size() && ok; ++x)
      ok = lattice_commutes(l, z, x) && lattice_commutes(l, x, z);
    if (ok) center.push_back(z);
  }
  // Boolean-subalgebra sanity: closed under the operations.
  auto in_center = [&](int v) {
    return std::find(center.begin(), center.end(), v) != center.end();
  };
  for (int a : center)
    for (int b : center)
      if (!in_center(l.join(a, b)) || !in_center(l.meet(a, b)) ||
          !in_center(l.ortho[a]))
        throw Error(ErrorCode::NotOrthomodular,
                    "center failed to close under the lattice operations");
  std::vector<std::string> labels;
  for (int z : center) labels.push_back(l.elements[z]);
  return labels;
}

AbstractOrtholattice interval_sublattice(const AbstractOrtholattice& l,
                                         int v) {
  std::vector<std::string> elems;
  std::vector<int> keep;
  for (int i = 0; i < l.size(); ++i)
    if (l.leq[i][v]) {
      keep.push_back(i);
      elems.push_back(l.elements[i]);
    }
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int i : keep)
    for (int j : keep)
      if (l.leq[i][j]) pairs.emplace_back(l.elements[i], l.elements[j]);
  std::map<std::string, std::string> ortho;
  if (l.has_ortho()) {
    bool total = true;
    std::map<std::string, std::string> rel;
    for (int i : keep) {
      int c = l.meet(l.ortho[i], v); // relative complement in [0, v]
      if (c < 0 || !l.leq[c][v]) {
        total = false;
        break;
      }
      rel[l.elements[i]] = l.elements[c];
    }
    if (total) {
      // Only keep it when it really is an involution (true in OMLs).
      bool invol = true;
      for (auto& [a, b] : rel) invol = invol && rel[b] == a;
      if (invol) ortho = rel;
    }
  }
  return make_lattice(std::move(elems), pairs, ortho);
}

AbstractOrtholattice boolean_lattice(int k) {
  const int n = 1 << k;
  std::vector<std::string> elems;
  for (int m = 0; m < n; ++m) {
    std::string s;
    for (int b = 0; b < k; ++b) s += (m >> b) & 1 ? '1' : '0';
    elems.push_back(s.empty() ? "e" : s);
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  std::map<std::string, std::string> ortho;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if ((a & b) == a) pairs.emplace_back(elems[a], elems[b]);
    ortho[elems[a]] = elems[(n - 1) ^ a];
  }
  return make_lattice(std::move(elems), pairs, ortho);
}

AbstractOrtholattice mo2() {
  std::vector<std::string> elems{"0", "p", "p'", "q", "q'", "1"};
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& e : elems) {
    pairs.emplace_back("0", e);
    pairs.emplace_back(e, "1");
  }
  return make_lattice(std::move(elems), pairs,
                      {{"0", "1"}, {"1", "0"}, {"p", "p'"}, {"p'", "p"},
                       {"q", "q'"}, {"q'", "q"}});
}

AbstractOrtholattice o6() {
  std::vector<std::string> elems{"0", "a", "b", "b'", "a'", "1"};
  std::vector<std::pair<std::string, std::string>> pairs{
      {"a", "b"}, {"b'", "a'"}};
  for (const auto& e : elems) {
    pairs.emplace_back("0", e);
    pairs.emplace_back(e, "1");
  }
  return make_lattice(std::move(elems), pairs,
                      {{"0", "1"}, {"1", "0"}, {"a", "a'"}, {"a'", "a"},
                       {"b", "b'"}, {"b'", "b"}});
}

AbstractOrtholattice n5() {
  return make_lattice({"0", "x", "z", "y", "1"},
                      {{"0", "x"}, {"x", "z"}, {"z", "1"}, {"0", "y"},
                       {"y", "1"}});
}

AbstractOrtholattice chain_lattice(int n) {
  std::vector<std::string> elems;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int i = 0; i < n; ++i) {
    elems.push_back("c" + std::to_string(i));
    if (i) pairs.emplace_back("c" + std::to_string(i - 1), elems.back());
  }
  return make_lattice(std::move(elems), pairs);
}

AbstractOrtholattice horizontal_sum(const AbstractOrtholattice& a,
                                    const AbstractOrtholattice& b) {
  // Glue at shared bottom/top; every other element keeps a side prefix.
  auto tag = [](const AbstractOrtholattice& l, int i, const char* side) {
    if (i == l.bottom) return std::string("0");
    if (i == l.top) return std::string("1");
    return std::string(side) + ":" + l.elements[i];
  };
  std::vector<std::string> elems{"0", "1"};
  std::vector<std::pair<std::string, std::string>> pairs;
  std::map<std::string, std::string> ortho;
  for (const AbstractOrtholattice* lp : {&a, &b}) {
    const char* side = lp == &a ? "a" : "b";
    const AbstractOrtholattice& l = *lp;
    for (int i = 0; i < l.size(); ++i) {
      std::string li = tag(l, i, side);
      if (li != "0" && li != "1") elems.push_back(li);
      for (int j = 0; j < l.size(); ++j)
        if (l.leq[i][j]) pairs.emplace_back(li, tag(l, j, side));
      if (l.has_ortho()) ortho[li] = tag(l, l.ortho[i], side);
    }
  }
  return make_lattice(std::move(elems), pairs, ortho);
}

AbstractOrtholattice lattice_product(const AbstractOrtholattice& a,
                                     const AbstractOrtholattice& b) {
  std::vector<std::string> elems;
  auto tag = [&](int i, int j) {
    return a.elements[i] + "|" + b.elements[j];
  };
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < b.size(); ++j) elems.push_back(tag(i, j));
  std::vector<std::pair<std::string, std::string>> pairs;
  std::map<std::string, std::string> ortho;
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < b.size(); ++j) {
      for (int k = 0; k < a.size(); ++k)
        for (int m = 0; m < b.size(); ++m)
          if (a.leq[i][k] && b.leq[j][m])
            pairs.emplace_back(tag(i, j), tag(k, m));
      if (a.has_ortho() && b.has_ortho())
        ortho[tag(i, j)] = tag(a.ortho[i], b.ortho[j]);
    }
  return make_lattice(std::move(elems), pairs, ortho);
}

} // namespace annlat
