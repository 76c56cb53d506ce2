#include <random>

#include <doctest.h>

#include "fsc/catalog.hpp"
#include "fsc/invariants.hpp"

using namespace fsc;

namespace {

Polynomial P(const std::string& s) { return parse_polynomial(s, space_ring()); }

Polynomial small_unit(std::mt19937_64& rng) {
  auto r = space_ring();
  Polynomial u = Polynomial::constant(r, Rational(1 + static_cast<long>(rng() % 3)));
  for (std::size_t v = 0; v < 3; ++v) {
    Rational c(static_cast<long>(rng() % 7) - 3);
    u += Polynomial::variable(r, v) * Polynomial::constant(r, c);
  }
  return u;
}

}  // namespace

TEST_CASE("maximal minors of the C111 matrix") {
  const MatrixGerm m = MatrixGerm::parse("x, y, 0; 0, y, z", space_ring());
  const auto minors = maximal_minors(m);
  REQUIRE(minors.size() == 3);
  CHECK(minors[0] == P("y*z"));
  CHECK(minors[1] == P("-x*z"));
  CHECK(minors[2] == P("x*y"));
  CHECK(corank(m) == 2);
}

TEST_CASE("matrix text round trip") {
  const MatrixGerm m = MatrixGerm::parse("x, y, z^2; 0, y + x^2, z", space_ring());
  CHECK(MatrixGerm::parse(m.to_string(), space_ring()) == m);
}

TEST_CASE("minor ideal membership") {
  const MatrixGerm m = MatrixGerm::parse("x, y, 0; 0, y, z", space_ring());
  CHECK(in_minor_ideal(P("x*y + 3*x*z"), m));
  CHECK_FALSE(in_minor_ideal(P("x"), m));
}

TEST_CASE("tau is unchanged by adding a minor to the function") {
  const CatalogEntry e = instantiate(EntryId::parse("C:1,1,1"));
  const int base = tjurina(e.pair);
  CurveFunctionPair shifted = e.pair;
  shifted.function += P("y*z");
  CHECK(tjurina(shifted) == base);
}

TEST_CASE("tau is invariant under equivalence") {
  std::mt19937_64 rng(5);
  for (const char* name : {"A3", "C:1,1,1", "B3"}) {
    const CatalogEntry e = instantiate(EntryId::parse(name));
    const int base = tjurina(e.pair);
    for (int trial = 0; trial < 3; ++trial) {
      EquivalenceWitness w;
      const std::size_t n = e.pair.matrix.rows();
      auto r = space_ring();
      w.a.assign(n, std::vector<Polynomial>(n, Polynomial(r)));
      w.b.assign(n + 1, std::vector<Polynomial>(n + 1, Polynomial(r)));
      for (std::size_t i = 0; i < n; ++i) w.a[i][i] = small_unit(rng);
      for (std::size_t i = 0; i <= n; ++i) w.b[i][i] = small_unit(rng);
      w.h = {P("x + y*z"), P("y - x^2"), P("z + x*y")};
      w.g = Polynomial(r);
      const CurveFunctionPair moved = apply_equivalence(e.pair, w);
      CHECK_MESSAGE(tjurina(moved) == base, name);
    }
  }
}
