#include "doctest.h"

#include "annlat/abstract_lattice.hpp"
#include "annlat/error.hpp"

using namespace annlat;

TEST_CASE("make_lattice validates posets and orthocomplements") {
  CHECK_THROWS_AS(make_lattice({"a", "b"}, {{"a", "b"}, {"b", "a"}}), Error);
  CHECK_THROWS_AS(make_lattice({"a", "b"}, {}), Error); // no bottom/top
  // Involution violation: a -> b but b -> a missing.
  CHECK_THROWS_AS(make_lattice({"0", "a", "b", "1"},
                               {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}},
                               {{"0", "1"}, {"1", "0"}, {"a", "b"}, {"b", "1"}}),
                  Error);

  AbstractOrtholattice b2 = boolean_lattice(2);
  CHECK(b2.size() == 4);
  CHECK(b2.bottom == b2.index("00"));
  CHECK(b2.top == b2.index("11"));
}

TEST_CASE("ortholattice axioms") {
  CHECK(verify_ortholattice(boolean_lattice(2)).pass);
  CHECK(verify_ortholattice(mo2()).pass);
  // O6 is an ortholattice even though it is not orthomodular.
  CHECK(verify_ortholattice(o6()).pass);
}

TEST_CASE("orthomodularity, exhaustive") {
  CHECK(verify_orthomodular_exhaustive(mo2()).pass);
  for (int k = 1; k <= 4; ++k)
    CHECK(verify_orthomodular_exhaustive(boolean_lattice(k)).pass);

  SuiteReport r = verify_orthomodular_exhaustive(o6());
  CHECK_FALSE(r.pass);
  CHECK(r.witness == "(a, b)");
}

TEST_CASE("modularity and the height valuation") {
  ModularityReport m = verify_modular(mo2());
  CHECK(m.modular);
  CHECK(m.valuation_certified);
  AbstractOrtholattice l = mo2();
  CHECK(m.height[l.index("p")] == 1);
  CHECK(m.height[l.top] == 2);

  ModularityReport n = verify_modular(n5());
  CHECK_FALSE(n.modular);
  CHECK_FALSE(n.witness.empty());

  CHECK(verify_modular(chain_lattice(5)).modular);
  for (int k = 1; k <= 4; ++k) {
    ModularityReport b = verify_modular(boolean_lattice(k));
    CHECK(b.modular);
    CHECK(b.valuation_certified);
  }
}

TEST_CASE("abstract center") {
  auto c = lattice_center_abstract(mo2());
  REQUIRE(c.size() == 2);
  CHECK(c[0] == "0");
  CHECK(c[1] == "1");

  CHECK(lattice_center_abstract(boolean_lattice(2)).size() == 4);

  AbstractOrtholattice prod = lattice_product(mo2(), boolean_lattice(1));
  auto pc = lattice_center_abstract(prod);
  // Images of the 2^1 factor: (0, x) and (1, x), four elements total.
  CHECK(pc.size() == 4);

  CHECK_THROWS_AS(lattice_center_abstract(o6()), Error);
}

TEST_CASE("horizontal sum of boolean blocks is a nonmodular OML") {
  AbstractOrtholattice hs = horizontal_sum(boolean_lattice(3),
                                           boolean_lattice(2));
  CHECK(verify_ortholattice(hs).pass);
  CHECK(verify_orthomodular_exhaustive(hs).pass);
  CHECK_FALSE(verify_modular(hs).modular);
}

TEST_CASE("interval sublattices keep the relative orthocomplement") {
  AbstractOrtholattice b3 = boolean_lattice(3);
  int v = b3.index("110");
  AbstractOrtholattice iv = interval_sublattice(b3, v);
  CHECK(iv.size() == 4);
  CHECK(verify_orthomodular_exhaustive(iv).pass);
  CHECK(verify_modular(iv).modular);
}
