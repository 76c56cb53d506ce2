#include <doctest.h>

#include "fsc/invariants.hpp"

using namespace fsc;

TEST_CASE("milnor number equals tau on small entries") {
  GenericityConfig cfg;
  cfg.seed = 3;
  for (const char* s : {"A1", "A3", "B4", "C:2,1", "F5", "C:1,1,1", "C:2,1,1"}) {
    const ConjectureReport rep = conjecture_check(instantiate(EntryId::parse(s)), cfg);
    CHECK_MESSAGE(rep.status == "equal", s);
    CHECK(rep.equal());
  }
}

TEST_CASE("milnor count does not depend on the seed") {
  const CatalogEntry e = instantiate(EntryId::parse("C:3,2"));
  int first = -1;
  for (std::uint64_t seed : {0u, 1u, 2u}) {
    GenericityConfig cfg;
    cfg.seed = seed;
    const int mu = milnor_plane(*e.plane_curve, *e.plane_function, cfg);
    if (first < 0) first = mu;
    CHECK(mu == first);
  }
  CHECK(first == 5);
}

TEST_CASE("miniversal basis sizes") {
  for (const char* s : {"A3", "C:1,1,1", "C:2,2,1"}) {
    const CatalogEntry e = instantiate(EntryId::parse(s));
    const Deformation full = miniversal_basis(e.pair, false);
    const Deformation trunc = miniversal_basis(e.pair, true);
    CHECK(full.base_dimension == static_cast<std::size_t>(e.expected_tau));
    CHECK(trunc.base_dimension + 1 == full.base_dimension);
    CHECK(trunc.truncated);
  }
}

TEST_CASE("function that is not finitely determined") {
  auto r = space_ring();
  CurveFunctionPair pair = embed_plane_curve(parse_polynomial("x*y", r), parse_polynomial("x", r));
  CHECK_THROWS_AS(tjurina(pair), NotFinitelyDetermined);
}
