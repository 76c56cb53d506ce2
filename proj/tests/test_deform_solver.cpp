#include <doctest.h>

#include "fsc/deform_solver.hpp"
#include "fsc/upoly.hpp"

using namespace fsc;

namespace {

Polynomial lambda0_power(const VectorFieldMatrix& v) {
  return Polynomial::variable(v.ring, 0).pow(static_cast<unsigned>(v.size()));
}

}  // namespace

TEST_CASE("real root isolation") {
  // (t - 1/3)(t^2 - 2)
  const UPoly p = UPoly::from_roots(std::vector<Rational>{Rational(1, 3)}) *
                  UPoly({Rational(-2), Rational(0), Rational(1)});
  const auto roots = real_roots(p, Rational(1, 1000000));
  REQUIRE(roots.size() == 3);
  int exact = 0;
  for (const auto& r : roots) {
    if (r.exact()) {
      ++exact;
      CHECK(r.lo == Rational(1, 3));
    } else {
      CHECK(r.hi - r.lo <= Rational(1, 1000000));
      CHECK(p(r.lo) * p(r.hi) < 0);
    }
  }
  CHECK(exact == 1);
  CHECK(simplest_between(Rational(3, 10), Rational(2, 5)) == Rational(1, 3));
}

TEST_CASE("discriminant matrix of A2") {
  const VectorFieldMatrix v = discriminant_matrix(EntryId::parse("A2"));
  REQUIRE(v.size() == 2);
  CHECK(v.det == parse_polynomial("lam0^2 + 4/27*lam1^3", v.ring));
  for (const auto& d : v.decompositions) {
    CHECK(verify_decomposition(printed_miniversal(EntryId::parse("A2"), false), d));
  }
  CHECK(rows_tangent(v));
}

TEST_CASE("discriminant matrices restrict to a power of lambda_0") {
  for (const char* s : {"A1", "A3", "C:1,1,1"}) {
    const VectorFieldMatrix v = discriminant_matrix(EntryId::parse(s));
    CHECK_MESSAGE(axis_restriction(v) == lambda0_power(v), s);
    CHECK(rows_tangent(v));
  }
}

TEST_CASE("discriminant vanishes on sampled points") {
  const EntryId id = EntryId::parse("C:1,1,1");
  const VectorFieldMatrix v = discriminant_matrix(id);
  for (bool nonsmooth : {false, true}) {
    const SampleResult s = sample_discriminant(id, 10, 1, nonsmooth);
    CHECK(s.points.size() == 10);
    for (const auto& pt : s.points) CHECK(vanishes_at(v.det, pt).ok());
  }
}

TEST_CASE("bifurcation matrix of C111") {
  const EntryId id = EntryId::parse("C:1,1,1");
  const VectorFieldMatrix w = bifurcation_matrix(id);
  REQUIRE(w.size() == 3);
  CHECK(w.row_degrees == std::vector<long>{1, 2, 3});
  CHECK(rows_tangent(w));
  CHECK(euler_in_span(w));
  CHECK(is_reduced(w.det, 4));
  // Three planes and a cubic.
  const Polynomial planes = parse_polynomial("alpha*beta*gamma", w.ring);
  CHECK(w.det.divide_exact(planes).total_degree() == 3);
  for (SigmaComponent c : {SigmaComponent::Nonsmooth, SigmaComponent::Degenerate}) {
    const SampleResult s = sample_sigma(id, 10, 2, c);
    CHECK(s.points.size() == 10);
    for (const auto& pt : s.points) CHECK(vanishes_at(w.det, pt).ok());
  }
}

TEST_CASE("level component of A3") {
  const EntryId id = EntryId::parse("A3");
  const VectorFieldMatrix w = bifurcation_matrix(id);
  const SampleResult s = sample_sigma(id, 10, 3, SigmaComponent::Level);
  CHECK_FALSE(s.empty);
  CHECK(s.points.size() == 10);
  for (const auto& pt : s.points) CHECK(vanishes_at(w.det, pt).ok());
}
