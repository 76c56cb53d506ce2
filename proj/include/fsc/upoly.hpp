#pragma once

#include <span>
#include <string>
#include <vector>

#include "fsc/polynomial.hpp"

namespace fsc {

/// Dense univariate polynomial over the rationals, coefficients stored from
/// the constant term upwards with no trailing zeros.
class UPoly {
public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  static UPoly constant(const Rational& c);
  // c * t^k
  static UPoly monomial(unsigned k, const Rational& c = 1);
  // prod (t - r_i)
  static UPoly from_roots(std::span<const Rational> roots);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  Rational lead() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational operator()(const Rational& t) const;
  UPoly derivative() const;
  UPoly monic() const;
  UPoly pow(unsigned e) const;
  // p(q(t))
  UPoly compose(const UPoly& q) const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const Rational& s, UPoly a);
  UPoly operator-() const;

  bool operator==(const UPoly& o) const { return c_ == o.c_; }

  std::string to_string(const std::string& var = "t") const;

  // Converts a polynomial in one variable of its ring; throws if others occur.
  static UPoly from_polynomial(const Polynomial& p, std::size_t var);
  Polynomial to_polynomial(const RingPtr& ring, std::size_t var) const;

private:
  void trim();
  std::vector<Rational> c_;
};

struct DivMod {
  UPoly quot;
  UPoly rem;
};

DivMod divmod(const UPoly& a, const UPoly& b);
UPoly operator%(const UPoly& a, const UPoly& b);
// Exact quotient; throws when b does not divide a.
UPoly divide_exact(const UPoly& a, const UPoly& b);

// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);
bool is_squarefree(const UPoly& p);
UPoly squarefree_part(const UPoly& p);

// Inverse of a modulo m; throws when gcd(a, m) is not constant.
UPoly inverse_mod(const UPoly& a, const UPoly& m);

// j-th subresultant of a and b taken at formal degrees m >= deg a and
// n >= deg b; j = 0 gives the resultant as a constant.
UPoly formal_subresultant(const UPoly& a, const UPoly& b, int m, int n, int j);

// Resultant via the Sylvester determinant at the true degrees.
Rational resultant(const UPoly& a, const UPoly& b);
Rational discriminant(const UPoly& p);

// Lagrange interpolation through distinct nodes.
UPoly interpolate(std::span<const Rational> nodes, std::span<const Rational> values);

/// A real root inside [lo, hi]; exact roots have lo == hi.
struct RootInterval {
  Rational lo;
  Rational hi;
  bool exact() const { return lo == hi; }
  Rational mid() const;
};

// Distinct real roots in increasing order, isolated with a Sturm sequence and
// refined until hi - lo < width. Rational roots are found exactly when the
// simplest rational of an isolating interval is a root.
std::vector<RootInterval> real_roots(const UPoly& p, const Rational& width);

// The rational of smallest denominator in [lo, hi].
Rational simplest_between(Rational lo, Rational hi);

}  // namespace fsc
