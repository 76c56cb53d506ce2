#include <random>

#include <doctest.h>

#include "fsc/local_algebra.hpp"

using namespace fsc;

namespace {

RingPtr xyz() { return make_ring({"x", "y", "z"}); }

ModuleElement scalar(const RingPtr& r, const std::string& text) {
  return ModuleElement({parse_polynomial(text, r)});
}

std::vector<ModuleElement> ideal(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<ModuleElement> out;
  for (const char* g : gens) out.push_back(scalar(r, g));
  return out;
}

Polynomial random_poly(const RingPtr& r, std::mt19937_64& rng, unsigned max_deg) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> den(1, 3);
  Polynomial p(r);
  for (unsigned a = 0; a <= max_deg; ++a) {
    for (unsigned b = 0; a + b <= max_deg; ++b) {
      for (unsigned e = 0; a + b + e <= max_deg; ++e) {
        if (rng() % 2) continue;
        Monomial m;
        m.exp[0] = a;
        m.exp[1] = b;
        m.exp[2] = e;
        Rational c(coeff(rng), den(rng));
        c.canonicalize();
        p += Polynomial::term(r, m, c);
      }
    }
  }
  return p;
}

}  // namespace

TEST_CASE("arithmetic round trip") {
  auto r = xyz();
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const Polynomial a = random_poly(r, rng, 4);
    const Polynomial b = random_poly(r, rng, 4);
    CHECK((a + b) - b == a);
    CHECK((a * b) - b * a == Polynomial(r));
    if (!b.is_zero()) CHECK((a * b).divide_exact(b) == a);
  }
}

TEST_CASE("parser") {
  auto r = xyz();
  const Polynomial p = parse_polynomial("3/2*x^2*y - z", r);
  CHECK(p.to_string() == "3/2*x^2*y - z");
  CHECK(parse_polynomial("(x+y)^2", r) == parse_polynomial("x^2 + 2*x*y + y^2", r));
  CHECK_THROWS_AS(parse_polynomial("1.5*x", r), InvalidInput);
  CHECK_THROWS_AS(parse_polynomial("2e3", r), InvalidInput);
  CHECK_THROWS_AS(parse_polynomial("w + 1", r), InvalidInput);
  CHECK_THROWS_AS(parse_polynomial("x +", r), InvalidInput);
}

TEST_CASE("local order puts the constant first") {
  LocalOrder ord;
  Monomial one;
  const Monomial x = unit_monomial(0);
  const Monomial y2 = unit_monomial(1, 2);
  CHECK(ord.compare(one, x) > 0);
  CHECK(ord.compare(x, y2) > 0);
  CHECK(ord.compare(unit_monomial(0), unit_monomial(1)) > 0);
}

TEST_CASE("normal form examples") {
  auto r = xyz();
  const auto sb1 = standard_basis(ideal(r, {"x^2 - y^3"}), r, 1);
  CHECK(normal_form(scalar(r, "x^2"), sb1) == scalar(r, "y^3"));

  const auto sb2 = standard_basis(ideal(r, {"x", "y", "z"}), r, 1);
  CHECK(normal_form(scalar(r, "1"), sb2) == scalar(r, "1"));
  CHECK(sb2.generators().size() == 3);
  CHECK(sb2.dimension() == 1);

  CHECK(quotient_dimension(ideal(r, {"x^2", "y^3", "z"}), r, 1) == 6);

  const auto sb3 = standard_basis(ideal(r, {"x*y", "x*z", "y*z"}), r, 1);
  CHECK(sb3.generators().size() == 3);
  CHECK_FALSE(sb3.dimension().has_value());
}

TEST_CASE("unit in the local ring") {
  auto r = xyz();
  // 1 + x is a unit, so the ideal is the whole local ring.
  CHECK(quotient_dimension(ideal(r, {"x + x^2", "y", "z"}), r, 1) == 1);
  CHECK(quotient_dimension(ideal(r, {"x - x^3", "y", "z"}), r, 1) == 1);
  CHECK(quotient_dimension(ideal(r, {"1 + x"}), r, 1) == 0);
  // Jacobian ideal of x^2*y + y^4 (D5) plus z.
  CHECK(quotient_dimension(ideal(r, {"2*x*y", "x^2 + 4*y^3", "z"}), r, 1) == 5);
  CHECK(quotient_dimension(ideal(r, {"2*x*y", "x^2 + 4*y^3 + x^5", "z - y^7"}), r, 1) == 5);
}

TEST_CASE("standard basis invariants") {
  auto r = xyz();
  std::mt19937_64 rng(5);
  const auto gens = ideal(r, {"x^2 + y*z", "y^2 - x*z^2", "z^3 + x*y", "x*y*z"});
  const auto sb = standard_basis(gens, r, 1);
  const auto dim = sb.dimension();
  REQUIRE(dim.has_value());
  for (const auto& g : gens) CHECK(normal_form(g, sb).is_zero());

  // Members of the module reduce to zero; normal form is idempotent.
  for (int i = 0; i < 20; ++i) {
    ModuleElement m(r, 1);
    for (const auto& g : gens) m += random_poly(r, rng, 2) * g;
    CHECK(normal_form(m, sb).is_zero());
    const ModuleElement e = scalar(r, random_poly(r, rng, 5).to_string());
    const ModuleElement n = normal_form(e, sb);
    CHECK(normal_form(n, sb) == n);
    // Leading terms of the result are not divisible by basis leading terms.
    for (const auto& t : n[0].terms()) {
      for (const auto& l : sb.leading_terms()) CHECK_FALSE(l.mono.divides(t.mono));
    }
  }

  // Permutations and random combinations leave the dimension alone.
  auto perm = gens;
  for (int i = 0; i < 5; ++i) {
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(quotient_dimension(perm, r, 1) == dim);
  }
  auto extended = gens;
  for (int i = 0; i < 20; ++i) {
    ModuleElement m(r, 1);
    for (const auto& g : gens) m += random_poly(r, rng, 2) * g;
    extended.push_back(m);
  }
  CHECK(quotient_dimension(extended, r, 1) == dim);

  // No leading monomial divides another.
  const auto& lts = sb.leading_terms();
  for (std::size_t i = 0; i < lts.size(); ++i) {
    for (std::size_t j = 0; j < lts.size(); ++j) {
      if (i != j) CHECK_FALSE(lts[i].mono.divides(lts[j].mono));
    }
  }
}

TEST_CASE("module order choice does not change the dimension") {
  auto r = xyz();
  auto e = [&](const char* a, const char* b) {
    return ModuleElement({parse_polynomial(a, r), parse_polynomial(b, r)});
  };
  const std::vector<ModuleElement> gens = {e("x", "y"), e("y", "0"), e("z", "x^2"), e("0", "y^2"),
                                           e("0", "z"), e("x^2", "0")};
  ModuleOrder top;
  top.priority = ModulePriority::TermOverPosition;
  const auto a = quotient_dimension(gens, r, 2);
  const auto b = quotient_dimension(gens, r, 2, top);
  REQUIRE(a.has_value());
  CHECK(a == b);
  LocalOrder perm{{2, 0, 1}};
  CHECK(quotient_dimension(gens, r, 2, ModuleOrder{perm, ModulePriority::PositionOverTerm}) == a);
}

TEST_CASE("errors") {
  auto r = xyz();
  auto r2 = make_ring({"x", "y"});
  const auto sb = standard_basis(ideal(r, {"x", "y", "z"}), r, 1);
  CHECK_THROWS_AS(normal_form(ModuleElement(r, 2), sb), InvalidInput);
  CHECK_THROWS_AS(normal_form(ModuleElement(r2, 1), sb), InvalidInput);
  std::vector<ModuleElement> mixed = {ModuleElement(r, 1), ModuleElement(r, 2)};
  CHECK_THROWS_AS(standard_basis(mixed, r, 1), InvalidInput);
}

TEST_CASE("standard basis modulo a power of the maximal ideal") {
  auto r = xyz();
  const auto gens = ideal(r, {"x^2 + y^3*z", "y^2 - x*z^2", "z^3 + x*y"});
  const auto exact = standard_basis(gens, r, 1);
  REQUIRE(exact.dimension());
  const auto bounded = standard_basis_mod_power(gens, r, 1, 16);
  CHECK(bounded.dimension() == exact.dimension());
  CHECK(bounded.standard_monomials() == exact.standard_monomials());
  // A low bound cuts the quotient short.
  CHECK(*standard_basis_mod_power(gens, r, 1, 2).dimension() < *exact.dimension());
}
