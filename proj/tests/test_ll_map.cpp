#include <random>

#include <doctest.h>

#include "fsc/invariants.hpp"
#include "fsc/ll_map.hpp"

using namespace fsc;

TEST_CASE("ll degree agrees with the closed forms") {
  for (const char* s : {"A2", "A5", "B4", "C:3,2", "F6", "F7", "C:1,1,1", "C:2,1,1", "C:3,2,2",
                        "E6", "E7", "E8"}) {
    const EntryId id = EntryId::parse(s);
    const auto printed = printed_ll_degree(id);
    REQUIRE(printed);
    CHECK_MESSAGE(Rational(ll_degree(weight_profile(instantiate(id)))) == *printed, s);
  }
}

TEST_CASE("A_k ll degree") {
  CHECK(ll_degree(weight_profile(instantiate(EntryId::parse("A3")))) == 16);
  CHECK(ll_degree(weight_profile(instantiate(EntryId::parse("A4")))) == 125);
}

TEST_CASE("critical values of a cubic") {
  const RationalFunction1V f(UPoly({Rational(0), Rational(-3), Rational(0), Rational(1)}),
                             UPoly::constant(1));
  const CriticalData cd = critical_values(f);
  CHECK(cd.count == 2);
  CHECK(cd.morse);
  CHECK(cd.distinct_values);
  // Critical values +-2.
  CHECK(cd.values == UPoly({Rational(-4), Rational(0), Rational(1)}));
}

TEST_CASE("C111 has four critical points") {
  CpqrParams c;
  c.alpha = 1;
  c.beta = 2;
  c.gamma = 3;
  c.lam0 = 0;
  const CriticalData cd = critical_values(restricted_function_Cpqr(c));
  CHECK(cd.count == 4);
  CHECK(cd.morse);
}

TEST_CASE("ll point is monic of degree tau") {
  const std::vector<Rational> v = {Rational(1, 2), Rational(1), Rational(-2), Rational(3)};
  const LLPoint pt = ll_point(EntryId::parse("C:1,1,1"), v);
  CHECK(pt.poly.degree() == 4);
  CHECK(pt.poly.lead() == 1);
  CHECK_THROWS(ll_point(EntryId::parse("C:1,1,1"), std::vector<Rational>{Rational(1)}));
}

TEST_CASE("jacobian of the ll map") {
  std::mt19937_64 rng(7);
  int nonsingular = 0;
  for (int i = 0; i < 10; ++i) {
    std::vector<Rational> v;
    for (int j = 0; j < 4; ++j) v.emplace_back(static_cast<long>(rng() % 19) - 9, 1 + rng() % 4);
    for (auto& x : v) x.canonicalize();
    if (v[1] == 0 || v[2] == 0 || v[3] == 0) continue;
    const JacobianReport rep = ll_jacobian_check(EntryId::parse("C:1,1,1"), v);
    if (rep.nonsingular) {
      ++nonsingular;
      CHECK(rep.det_squared != 0);
    }
  }
  CHECK(nonsingular > 0);
  // On a nonsmooth curve there are fewer than tau critical points.
  const std::vector<Rational> on = {Rational(1), Rational(0), Rational(2), Rational(3)};
  CHECK_FALSE(ll_jacobian_check(EntryId::parse("C:1,1,1"), on).nonsingular);
}

TEST_CASE("fiber over the origin for C111") {
  const FiberReport rep = ll_fiber_origin_check(1, 1, 1, 1, 200);
  CHECK(rep.ok());
}
