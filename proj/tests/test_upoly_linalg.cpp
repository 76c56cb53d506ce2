#include <random>

#include <doctest.h>

#include "fsc/linalg.hpp"
#include "fsc/upoly.hpp"

using namespace fsc;

namespace {

Rational q(long a, long b = 1) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

UPoly roots_poly(std::initializer_list<long> roots) {
  std::vector<Rational> rs;
  for (long r : roots) rs.push_back(q(r));
  return UPoly::from_roots(rs);
}

}  // namespace

TEST_CASE("univariate arithmetic") {
  const UPoly p = roots_poly({1, 2, 3});
  CHECK(p.to_string() == "t^3 - 6*t^2 + 11*t - 6");
  CHECK(p(q(2)) == 0);
  const UPoly d = roots_poly({1, 5});
  const auto [quot, rem] = divmod(p, d);
  CHECK(quot * d + rem == p);
  CHECK(rem.degree() < d.degree());
  CHECK(gcd(p, roots_poly({3, 7})) == roots_poly({3}));
  CHECK(is_squarefree(p));
  CHECK_FALSE(is_squarefree(roots_poly({1, 1, 2})));
  CHECK(squarefree_part(roots_poly({1, 1, 2})) == roots_poly({1, 2}));
  CHECK(UPoly({q(1), q(1)}).pow(3) == UPoly({q(1), q(3), q(3), q(1)}));
  CHECK(p.compose(UPoly({q(1), q(1)})) == roots_poly({0, 1, 2}));
}

TEST_CASE("inverse modulo") {
  const UPoly m = roots_poly({1, 2, 3});
  const UPoly a({q(5), q(0), q(1)});
  const UPoly inv = inverse_mod(a, m);
  CHECK((a * inv) % m == UPoly::constant(1));
  CHECK_THROWS_AS(inverse_mod(roots_poly({2}), m), InvalidInput);
}

TEST_CASE("resultant and discriminant") {
  // Res(prod (t - a_i), prod (t - b_j)) = prod (a_i - b_j).
  CHECK(resultant(roots_poly({1, 2}), roots_poly({4, 7})) == q((1 - 4) * (1 - 7) * (2 - 4) * (2 - 7)));
  CHECK(resultant(roots_poly({1, 2}), roots_poly({2})) == 0);
  // t^2 + b t + c has discriminant b^2 - 4c.
  CHECK(discriminant(UPoly({q(3), q(5), q(1)})) == q(25 - 12));
  // t^3 + a t + b has discriminant -4a^3 - 27b^2.
  CHECK(discriminant(UPoly({q(2), q(-3), q(0), q(1)})) == q(4 * 27 - 27 * 4));
}

TEST_CASE("interpolation") {
  const UPoly p({q(1, 2), q(-3), q(0), q(7, 3)});
  std::vector<Rational> xs, ys;
  for (long k = -2; k < 3; ++k) {
    xs.push_back(q(k));
    ys.push_back(p(q(k)));
  }
  CHECK(interpolate(xs, ys) == p);
}

TEST_CASE("dense linear algebra") {
  QMatrix m = {{q(2), q(1), q(0)}, {q(1), q(3), q(1)}, {q(0), q(1), q(4)}};
  CHECK(determinant(m) == q(18));
  CHECK(rank(m) == 3);
  QMatrix s = {{q(1), q(2)}, {q(2), q(4)}, {q(3), q(6)}};
  CHECK(rank(s) == 1);
  const UPoly cp = charpoly(m);
  CHECK(cp.degree() == 3);
  CHECK(cp.coeff(0) == -determinant(m));
  CHECK(cp.coeff(2) == q(-9));

  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> dist(-4, 4);
  for (int trial = 0; trial < 20; ++trial) {
    QMatrix a(5, std::vector<Rational>(5));
    for (auto& row : a)
      for (auto& e : row) e = q(dist(rng));
    const UPoly c = charpoly(a);
    // Cayley-Hamilton via evaluation at the matrix.
    QMatrix acc(5, std::vector<Rational>(5, q(0)));
    for (int k = c.degree(); k >= 0; --k) {
      QMatrix next(5, std::vector<Rational>(5, q(0)));
      for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
          for (int l = 0; l < 5; ++l) next[i][j] += acc[i][l] * a[l][j];
      for (int i = 0; i < 5; ++i) next[i][i] += c.coeff(k);
      acc = next;
    }
    for (const auto& row : acc)
      for (const auto& e : row) CHECK(e == 0);
  }
}

TEST_CASE("polynomial determinant") {
  auto r = make_ring({"a", "b"});
  auto P = [&](const char* s) { return parse_polynomial(s, r); };
  PolyMatrix m = {{P("0"), P("a"), P("1")}, {P("b"), P("0"), P("a")}, {P("1"), P("b"), P("0")}};
  CHECK(determinant(m) == P("a^2 + b^2"));
  PolyMatrix v = {{P("1"), P("a"), P("a^2")}, {P("1"), P("b"), P("b^2")}, {P("1"), P("a+b"), P("(a+b)^2")}};
  CHECK(determinant(v) == P("(b - a)*(b)*(a)"));
}

TEST_CASE("sparse solver") {
  SparseLinearSystem s(4);
  s.add_equation({{0, q(1)}, {1, q(1)}}, q(3));
  s.add_equation({{1, q(1)}, {2, q(-1)}}, q(1));
  s.add_equation({{0, q(1)}, {2, q(1)}}, q(2));  // dependent
  s.add_equation({{3, q(2)}}, q(5));
  auto x = s.solve();
  REQUIRE(x.has_value());
  CHECK((*x)[0] + (*x)[1] == 3);
  CHECK((*x)[1] - (*x)[2] == 1);
  CHECK((*x)[3] == q(5, 2));
  CHECK(s.rank() == 3);
  s.add_equation({{0, q(1)}, {2, q(1)}}, q(7));
  CHECK_FALSE(s.solve().has_value());
}
