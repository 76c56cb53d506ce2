#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "fsc/polynomial.hpp"

namespace fsc {

/// Negative-degree lexicographic order: lower total degree is larger, ties
/// broken lexicographically along `priority` (identity when empty). The
/// constant monomial is the unique maximum.
struct LocalOrder {
  std::vector<std::size_t> priority;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
};

enum class ModulePriority {
  PositionOverTerm,  // component index first; lower index is larger
  TermOverPosition,  // local monomial order first, component index breaks ties
};

struct ModuleOrder {
  LocalOrder local;
  ModulePriority priority = ModulePriority::PositionOverTerm;

  std::strong_ordering compare(std::size_t ca, const Monomial& a, std::size_t cb,
                               const Monomial& b) const;
};

struct LeadingTerm {
  std::size_t component = 0;
  Monomial mono;
  Rational coeff;
};

/// Element of the free module R^rank over a polynomial ring, read in the
/// localization at the origin.
class ModuleElement {
public:
  ModuleElement() = default;
  ModuleElement(RingPtr ring, std::size_t rank);
  explicit ModuleElement(std::vector<Polynomial> components);

  static ModuleElement unit(RingPtr ring, std::size_t rank, std::size_t component,
                            const Monomial& m = {}, const Rational& c = 1);

  std::size_t rank() const { return components_.size(); }
  const RingPtr& ring() const { return ring_; }
  const Polynomial& operator[](std::size_t i) const { return components_[i]; }
  Polynomial& operator[](std::size_t i) { return components_[i]; }
  const std::vector<Polynomial>& components() const { return components_; }

  bool is_zero() const;
  // Largest total degree over all terms; -1 for zero.
  int max_degree() const;
  std::size_t term_count() const;

  LeadingTerm leading(const ModuleOrder& order) const;
  // Total degree spread max_degree - deg(leading monomial).
  int ecart(const ModuleOrder& order) const;

  ModuleElement& operator+=(const ModuleElement& o);
  ModuleElement& operator-=(const ModuleElement& o);
  friend ModuleElement operator+(ModuleElement a, const ModuleElement& b) { return a += b; }
  friend ModuleElement operator-(ModuleElement a, const ModuleElement& b) { return a -= b; }
  friend ModuleElement operator*(const Polynomial& p, const ModuleElement& e);
  friend ModuleElement operator*(const Rational& c, ModuleElement e);

  void add_scaled(const ModuleElement& o, const Rational& c, const Monomial& m,
                  unsigned bound = Polynomial::kNoBound);
  ModuleElement truncated(unsigned bound) const;

  bool operator==(const ModuleElement& o) const { return components_ == o.components_; }

  std::string to_string() const;

private:
  void check_compatible(const ModuleElement& o) const;

  RingPtr ring_;
  std::vector<Polynomial> components_;
};

/// Standard basis of a submodule under a local module order.
///
/// Invariants: every input generator reduces to zero; no leading monomial
/// divides another leading monomial of the same component.
class StandardBasis {
public:
  StandardBasis(RingPtr ring, std::size_t rank, ModuleOrder order,
                std::vector<ModuleElement> generators);

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  const ModuleOrder& order() const { return order_; }
  const std::vector<ModuleElement>& generators() const { return generators_; }
  const std::vector<LeadingTerm>& leading_terms() const { return leading_; }

  /// Number of standard monomials, or nullopt when the staircase is unbounded.
  std::optional<std::size_t> dimension() const { return dimension_; }

  /// (component, monomial) pairs outside the leading-term staircase, in
  /// decreasing module order. Throws InfiniteQuotient when unbounded.
  std::vector<std::pair<std::size_t, Monomial>> standard_monomials() const;

private:
  RingPtr ring_;
  std::size_t rank_;
  ModuleOrder order_;
  std::vector<ModuleElement> generators_;
  std::vector<LeadingTerm> leading_;
  std::optional<std::size_t> dimension_;
};

class InfiniteQuotient : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Reduces `e` modulo the basis. With a finite quotient the result is fully
/// reduced and e - result lies in the module; otherwise only the leading term
/// is reduced (Mora weak normal form: u*e - result lies in the module for a
/// unit u), which still vanishes exactly on module members.
ModuleElement normal_form(const ModuleElement& e, const StandardBasis& basis);

/// Mora's tangent-cone algorithm.
StandardBasis standard_basis(const std::vector<ModuleElement>& generators, const RingPtr& ring,
                             std::size_t rank, const ModuleOrder& order = {});

/// Standard basis of <generators> + m^bound R_loc^rank. Terms of degree >=
/// bound are dropped throughout, so no tail grows past the bound.
StandardBasis standard_basis_mod_power(const std::vector<ModuleElement>& generators,
                                       const RingPtr& ring, std::size_t rank, unsigned bound,
                                       const ModuleOrder& order = {});

/// Tries standard_basis_mod_power at growing bounds and keeps the first
/// result whose colength is below its bound; falls back to Mora's algorithm.
StandardBasis standard_basis_auto(const std::vector<ModuleElement>& generators, const RingPtr& ring,
                                  std::size_t rank, const ModuleOrder& order = {});

/// Dimension of R_loc^rank / <generators>, or nullopt when infinite.
std::optional<std::size_t> quotient_dimension(const std::vector<ModuleElement>& generators,
                                              const RingPtr& ring, std::size_t rank,
                                              const ModuleOrder& order = {});

/// Coordinates of a fully reduced element in the standard-monomial basis.
std::vector<Rational> coordinates(const ModuleElement& reduced,
                                  const std::vector<std::pair<std::size_t, Monomial>>& basis);

}  // namespace fsc
