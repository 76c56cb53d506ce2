#include <doctest.h>

#include "fsc/catalog.hpp"
#include "fsc/invariants.hpp"

using namespace fsc;

TEST_CASE("entry names round trip") {
  for (const char* s : {"A3", "B4", "C:3,2", "C:1,1,1", "F6", "Fdot:5", "E6", "X9:2", "J10:5/2"}) {
    CHECK(EntryId::parse(s).to_string() == s);
  }
  CHECK(EntryId::parse("C:1,1,1").label() == "C_{1,1,1}");
}

TEST_CASE("malformed entries are rejected") {
  CHECK_THROWS(EntryId::parse("Q7"));
  CHECK_THROWS(instantiate(EntryId::parse("C:1,2")));
}

TEST_CASE("normal forms are quasi-homogeneous") {
  for (const char* s : {"A4", "B5", "C:3,2", "F7", "C:2,1,1", "E6"}) {
    const CatalogEntry e = instantiate(EntryId::parse(s));
    const auto& w = e.weights;
    const auto& f = e.pair.function;
    for (const auto& [m, c] : f.terms()) {
      long deg = 0;
      for (std::size_t v = 0; v < 3; ++v) deg += w.var[v] * m.exp[v];
      CHECK_MESSAGE(deg == w.d, s);
    }
    for (std::size_t a = 0; a < e.pair.matrix.rows(); ++a) {
      for (std::size_t b = 0; b < e.pair.matrix.cols(); ++b) {
        for (const auto& [m, c] : e.pair.matrix(a, b).terms()) {
          long deg = 0;
          for (std::size_t v = 0; v < 3; ++v) deg += w.var[v] * m.exp[v];
          CHECK_MESSAGE(deg == w.entry_weight(a, b), s);
        }
      }
    }
  }
}

TEST_CASE("tjurina numbers of small entries") {
  for (const char* s : {"A1", "A2", "A5", "B3", "B6", "C:2,1", "C:4,3", "F5", "F8", "C:1,1,1",
                        "C:2,2,1", "E6", "E7"}) {
    const CatalogEntry e = instantiate(EntryId::parse(s));
    CHECK_MESSAGE(tjurina(e.pair) == e.expected_tau, s);
  }
}

TEST_CASE("adjacent entries have smaller tau") {
  for (const char* s : {"A4", "B5", "C:3,2", "F6", "C:2,1,1"}) {
    const EntryId id = EntryId::parse(s);
    const int tau = instantiate(id).expected_tau;
    const auto adj = adjacencies(id);
    CHECK_FALSE(adj.empty());
    for (const EntryId& t : adj) CHECK_MESSAGE(instantiate(t).expected_tau < tau, s);
  }
}

TEST_CASE("default range is sorted and capped") {
  RangeConfig cfg;
  cfg.max_tau = 6;
  const auto ids = catalog_range(cfg);
  CHECK_FALSE(ids.empty());
  for (const auto& id : ids) CHECK(instantiate(id).expected_tau <= 6);
}
