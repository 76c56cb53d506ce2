#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace fsc {

using Rational = mpq_class;
using Integer = mpz_class;

/// Thrown for malformed input: bad syntax, mismatched rings, shape errors.
class InvalidInput : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kMaxVars = 16;

/// Ordered list of variable names shared by all polynomials of a computation.
class Ring {
public:
  explicit Ring(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }

  // Index of `name`, or size() when absent.
  std::size_t index_of(std::string_view name) const;

  bool operator==(const Ring& other) const { return names_ == other.names_; }

private:
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names);

bool same_ring(const RingPtr& a, const RingPtr& b);

/// Exponent vector. Slots beyond the ring size stay zero.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};

  unsigned degree() const;
  bool is_one() const { return degree() == 0; }
  bool divides(const Monomial& other) const;

  // Weighted degree; weights.size() must cover every nonzero slot.
  long weighted_degree(std::span<const long> weights) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  // Requires a.divides(b); returns b / a.
  friend Monomial quotient(const Monomial& b, const Monomial& a);
  friend Monomial lcm(const Monomial& a, const Monomial& b);

  auto operator<=>(const Monomial&) const = default;
};

Monomial unit_monomial(std::size_t var, unsigned power = 1);

struct Term {
  Monomial mono;
  Rational coeff;
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept sorted ascending by exponent vector and never hold a zero
/// coefficient, so structural equality is value equality.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial variable(RingPtr ring, std::string_view name);
  static Polynomial term(RingPtr ring, const Monomial& m, const Rational& c);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;
  // Largest total degree of a term; -1 for zero.
  int total_degree() const;
  int min_degree() const;
  int degree_in(std::size_t var) const;
  bool involves(std::size_t var) const;

  long weighted_degree(std::span<const long> weights) const;
  bool is_weighted_homogeneous(std::span<const long> weights) const;
  // Terms of exact weighted degree `deg`.
  Polynomial weighted_part(std::span<const long> weights, long deg) const;
  // Drops every term of total degree >= bound.
  Polynomial truncated(unsigned bound) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  // this += c * m * other, the inner step of every reduction.
  // Products of total degree >= bound are dropped.
  void add_scaled(const Polynomial& other, const Rational& c, const Monomial& m,
                  unsigned bound = kNoBound);
  static constexpr unsigned kNoBound = ~0u;

  Polynomial pow(unsigned e) const;
  Polynomial derivative(std::size_t var) const;

  // Substitutes images[i] for variable i; images share a common target ring.
  Polynomial compose(std::span<const Polynomial> images) const;
  // Substitutes a rational value for one variable, staying in the same ring.
  Polynomial substitute(std::size_t var, const Rational& value) const;
  Rational evaluate(std::span<const Rational> point) const;

  // Re-expresses the polynomial over `target`, matching variables by name.
  Polynomial in_ring(const RingPtr& target) const;

  // Exact division; throws InvalidInput when `divisor` does not divide.
  Polynomial divide_exact(const Polynomial& divisor) const;

  bool operator==(const Polynomial& o) const;

  std::string to_string() const;

private:
  void normalize();
  void check_ring(const Polynomial& o) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Parses `3/2*x^2*y - z` style text against a ring; rejects float literals.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

}  // namespace fsc
