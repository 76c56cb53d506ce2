#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fsc/catalog.hpp"
#include "fsc/upoly.hpp"

namespace fsc {

/// num / den in one variable, kept in lowest terms with a monic denominator.
struct RationalFunction1V {
  UPoly num;
  UPoly den = UPoly::constant(1);

  RationalFunction1V() = default;
  RationalFunction1V(UPoly n, UPoly d);

  Rational operator()(const Rational& y) const;
  RationalFunction1V derivative() const;
  // Numerator of the derivative in lowest terms.
  UPoly critical_numerator() const;
};

/// Parameters of the printed C_{p,q,r} deformation.
struct CpqrParams {
  int p = 1, q = 1, r = 1;
  Rational alpha, beta, gamma;
  std::vector<Rational> lam1, lam2, lam3;  // sizes p-1, q-1, r-1
  Rational lam0;

  // From values in the parameter order of printed_miniversal (full).
  static CpqrParams from_values(int p, int q, int r, std::span<const Rational> values);
  std::vector<Rational> values() const;
};

// F(y) obtained by solving the curve equations for x and z; denominator
// y^r (y + gamma)^p before cancellation.
RationalFunction1V restricted_function_Cpqr(const CpqrParams& c);

/// F(y) with the parameters left symbolic: numerator and denominator over the
/// ring (y, params of printed_miniversal in order).
struct SymbolicRestriction {
  RingPtr ring;
  Polynomial num;
  Polynomial den;
};
SymbolicRestriction restricted_function_symbolic(int p, int q, int r);

/// Quasi-homogeneous weights of a catalog normal form and its miniversal
/// parameters (source[0] is the free term of the function).
struct WeightProfile {
  long d = 1;
  std::vector<long> var;
  std::vector<long> source;
  int tau = 0;

  std::vector<long> truncated() const { return {source.begin() + 1, source.end()}; }
};

WeightProfile weight_profile(const CatalogEntry& entry);

// prod_{k=2}^{tau} k d / prod(truncated source weights).
Integer ll_degree(const WeightProfile& wp);

// Closed forms of the index table; nullopt for families it does not list.
std::optional<Rational> printed_ll_degree(const EntryId& id);

struct CriticalData {
  UPoly points;  // numerator of F' in lowest terms
  std::size_t count = 0;  // degree of points
  std::size_t distinct = 0;
  bool morse = false;  // all critical points simple
  UPoly values;  // prod (t - F(y_i)) over critical points with multiplicity
  bool distinct_values = false;
};

CriticalData critical_values(const RationalFunction1V& f);

struct LLPoint {
  UPoly poly;  // monic of degree tau
  bool truncated = false;
  bool in_xi = false;  // multiple root
};

// Supports A_k (parameters lam0, lam1.. as in printed_miniversal) and C_{p,q,r}.
LLPoint ll_point(const EntryId& id, std::span<const Rational> values, bool truncated = false);

struct JacobianReport {
  bool nonsingular = false;
  std::string reason;
  // Square of the Jacobian determinant of the LL map at the point.
  Rational det_squared;
};

JacobianReport ll_jacobian_check(const EntryId& id, std::span<const Rational> values);

struct ExtendedMatrixReport {
  // det_{tau+1} / (gamma^{p+1} det_tau) is one constant over all draws.
  bool literal_relation = false;
  // det_{tau+1} = +-B gamma^{p+1} det[P_1..P_{tau-1}, y^{r+1}] on every draw.
  bool laplace_relation = false;
  bool extended_nonzero = false;
  std::string detail;
};

ExtendedMatrixReport extended_matrix_check(int p, int q, int r, std::uint64_t seed, int draws);

struct FiberReport {
  int p = 0, q = 0, r = 0;
  bool smooth_degree_ok = false;  // numerator of F - a has degree p+q+r
  bool node_degree_ok = false;  // line contributes p, hyperbola q + r
  bool lines_degree_ok = false;
  int draws = 0;
  int counterexamples = 0;  // nonzero parameter points with LLbar = t^tau
  std::string detail;
  bool ok() const {
    return smooth_degree_ok && node_degree_ok && lines_degree_ok && counterexamples == 0;
  }
};

FiberReport ll_fiber_origin_check(int p, int q, int r, std::uint64_t seed, int draws);

}  // namespace fsc
