#include "fsc/invariants.hpp"

#include <numeric>

#include "fsc/ll_map.hpp"
#include "fsc/random.hpp"
#include "fsc/upoly.hpp"

namespace fsc {

StandardBasis tangent_basis(const CurveFunctionPair& pair, const ModuleOrder& order) {
  return standard_basis_auto(tangent_space(pair), pair.ring(), pair.module_rank(), order);
}

int tjurina(const CurveFunctionPair& pair) {
  const auto dim = tangent_basis(pair).dimension();
  if (!dim) throw NotFinitelyDetermined("tangent space has infinite codimension");
  return static_cast<int>(*dim);
}

Deformation miniversal_basis(const CurveFunctionPair& pair, bool truncated) {
  const auto sb = tangent_basis(pair);
  if (!sb.dimension()) throw NotFinitelyDetermined("tangent space has infinite codimension");
  Deformation d;
  d.truncated = truncated;
  const std::size_t fslot = pair.module_rank() - 1;
  for (const auto& [comp, mono] : sb.standard_monomials()) {
    if (truncated && comp == fslot && mono.is_one()) continue;
    d.monomials.emplace_back(comp, mono);
    d.directions.push_back(ModuleElement::unit(pair.ring(), pair.module_rank(), comp, mono));
  }
  if (truncated && d.monomials.size() == *sb.dimension()) {
    throw InvalidInput("constant function direction is not a standard monomial");
  }
  d.base_dimension = d.directions.size();
  return d;
}

namespace {

// Positive integer weights (wx, wy) making g and f weighted homogeneous.
std::array<long, 2> plane_weights(const Polynomial& g, const Polynomial& f) {
  std::vector<std::array<long, 2>> constraints;
  for (const Polynomial* p : {&g, &f}) {
    const auto& t = p->terms();
    for (std::size_t i = 1; i < t.size(); ++i) {
      const long da = static_cast<long>(t[i].mono.exp[0]) - t[0].mono.exp[0];
      const long db = static_cast<long>(t[i].mono.exp[1]) - t[0].mono.exp[1];
      constraints.push_back({da, db});
    }
  }
  std::array<long, 2> w = {1, 1};
  for (const auto& c : constraints) {
    if (c[0] == 0 && c[1] == 0) continue;
    // c0 * wx + c1 * wy = 0
    long wx = std::abs(c[1]);
    long wy = std::abs(c[0]);
    if ((c[0] > 0) == (c[1] > 0) || wx == 0 || wy == 0) {
      throw InvalidInput("plane pair is not quasi-homogeneous with positive weights");
    }
    const long g0 = std::gcd(wx, wy);
    w = {wx / g0, wy / g0};
    break;
  }
  for (const auto& c : constraints) {
    if (c[0] * w[0] + c[1] * w[1] != 0) {
      throw InvalidInput("plane pair is not quasi-homogeneous");
    }
  }
  return w;
}

// Reduces p(X(u), Y(u)) modulo r.
UPoly reduce_composition(const Polynomial& p, const UPoly& x, const UPoly& y, const UPoly& r) {
  int max_a = 0, max_b = 0;
  for (const auto& t : p.terms()) {
    max_a = std::max<int>(max_a, t.mono.exp[0]);
    max_b = std::max<int>(max_b, t.mono.exp[1]);
  }
  std::vector<UPoly> xp(max_a + 1), yp(max_b + 1);
  xp[0] = yp[0] = UPoly::constant(1);
  for (int k = 1; k <= max_a; ++k) xp[k] = (xp[k - 1] * x) % r;
  for (int k = 1; k <= max_b; ++k) yp[k] = (yp[k - 1] * y) % r;
  UPoly acc;
  for (const auto& t : p.terms()) acc += t.coeff * ((xp[t.mono.exp[0]] * yp[t.mono.exp[1]]) % r);
  return acc % r;
}

struct PlaneDraw {
  bool ok = false;
  int count = 0;
  std::string why;
};

PlaneDraw plane_draw(const Polynomial& g, const Polynomial& f, const std::array<long, 2>& w,
                     RationalSampler& rs) {
  const RingPtr ring = g.ring();
  const Polynomial x = Polynomial::variable(ring, 0);
  const Polynomial y = Polynomial::variable(ring, 1);
  const long d = f.weighted_degree(w);
  Polynomial ft = f;
  // Only terms of weight below d are small perturbations.
  if (w[0] < d) ft += rs.nonzero() * x;
  if (w[1] < d) ft += rs.nonzero() * y;
  const Rational eps = rs.nonzero();
  const Rational c = rs.nonzero();

  const Polynomial jac = ft.derivative(0) * g.derivative(1) - ft.derivative(1) * g.derivative(0);
  const std::vector<Polynomial> shear = {x - c * y, y};
  const Polynomial G = g.compose(shear) - Polynomial::constant(ring, eps);
  const Polynomial J = jac.compose(shear);
  if (J.is_zero()) return {false, 0, "critical locus is not isolated"};
  const int m = G.total_degree();
  const int n = J.total_degree();
  if (G.degree_in(1) != m || G.coefficient(unit_monomial(1, m)) == 0) {
    return {false, 0, "sheared curve is not monic in y"};
  }
  if (n == 0) return {true, 0, ""};

  const int points = m * n + m + n + 1;
  std::vector<Rational> nodes, res, s1, s0;
  for (int k = 0; k < points; ++k) {
    const Rational u(k);
    nodes.push_back(u);
    const UPoly gu = UPoly::from_polynomial(G.substitute(0, u), 1);
    const UPoly ju = UPoly::from_polynomial(J.substitute(0, u), 1);
    res.push_back(formal_subresultant(gu, ju, m, n, 0).coeff(0));
    const UPoly sub = formal_subresultant(gu, ju, m, n, 1);
    s0.push_back(sub.coeff(0));
    s1.push_back(sub.coeff(1));
  }
  const UPoly R = interpolate(nodes, res);
  if (R.is_zero()) return {false, 0, "resultant vanishes identically"};
  if (R.degree() == 0) return {true, 0, ""};
  if (!is_squarefree(R)) return {false, 0, "multiple or coincident critical points"};
  UPoly Y;
  if (m == 1) {
    // G = lead * y + G0(u).
    const Rational lead = G.coefficient(unit_monomial(1, 1));
    Y = (Rational(-1) / lead) * UPoly::from_polynomial(G.substitute(1, Rational(0)), 0) % R;
  } else {
    const UPoly S1 = interpolate(nodes, s1);
    const UPoly S0 = interpolate(nodes, s0);
    if (gcd(S1, R).degree() != 0) return {false, 0, "subresultant degenerates"};
    Y = (-(S0 * inverse_mod(S1, R))) % R;
  }
  const UPoly X = (UPoly({Rational(0), Rational(1)}) - c * Y) % R;
  // Every root of R must come from a genuine solution.
  if (!reduce_composition(g - Polynomial::constant(ring, eps), X, Y, R).is_zero() ||
      !reduce_composition(jac, X, Y, R).is_zero()) {
    return {false, 0, "extraneous resultant factor"};
  }
  const UPoly values = reduce_composition(ft, X, Y, R);
  if (!is_squarefree(charpoly(multiplication_matrix(values, R)))) {
    return {false, 0, "two critical points share a level"};
  }
  return {true, R.degree(), ""};
}

template <typename Draw>
int agreeing_count(const GenericityConfig& cfg, const std::string& tag, Draw draw) {
  RationalSampler rs(mix_seed(cfg.seed, tag), cfg.coefficient_range);
  std::vector<int> counts;
  std::string last;
  const int attempts = cfg.retries + cfg.agreeing_draws;
  for (int i = 0; i < attempts && static_cast<int>(counts.size()) < cfg.agreeing_draws; ++i) {
    const auto r = draw(rs);
    if (r.ok) {
      counts.push_back(r.count);
    } else {
      last = r.why;
    }
  }
  if (static_cast<int>(counts.size()) < cfg.agreeing_draws) {
    throw PersistentDegeneracy("no generic draw for " + tag + ": " + last);
  }
  for (int c : counts) {
    if (c != counts.front()) throw PersistentDegeneracy("draws disagree for " + tag);
  }
  return counts.front();
}

}  // namespace

int milnor_plane(const Polynomial& g, const Polynomial& f, const GenericityConfig& cfg) {
  const RingPtr ring = plane_ring();
  const Polynomial gp = g.in_ring(ring);
  const Polynomial fp = f.in_ring(ring);
  if (gp.constant_term() != 0) throw InvalidInput("curve must pass through the origin");
  if (fp.constant_term() != 0) throw InvalidInput("function must vanish at the origin");
  const auto w = plane_weights(gp, fp);
  if (!gp.is_weighted_homogeneous(w) || !fp.is_weighted_homogeneous(w)) {
    throw InvalidInput("plane pair is not quasi-homogeneous");
  }
  return agreeing_count(cfg, "milnor_plane:" + gp.to_string() + "|" + fp.to_string(),
                        [&](RationalSampler& rs) { return plane_draw(gp, fp, w, rs); });
}

int milnor_C_space(int p, int q, int r, const GenericityConfig& cfg) {
  if (!(p >= q && q >= r && r >= 1)) throw InvalidInput("need p >= q >= r >= 1");
  const std::string tag = "milnor_C:" + std::to_string(p) + "," + std::to_string(q) + "," +
                          std::to_string(r);
  return agreeing_count(cfg, tag, [&](RationalSampler& rs) {
    CpqrParams c;
    c.p = p;
    c.q = q;
    c.r = r;
    c.alpha = rs.any();
    c.beta = rs.any();
    c.gamma = rs.any();
    if (c.alpha == 0 || c.beta == 0 || c.gamma == 0) return PlaneDraw{false, 0, "singular curve"};
    for (int i = 1; i < p; ++i) c.lam1.push_back(rs.any());
    for (int i = 1; i < q; ++i) c.lam2.push_back(rs.any());
    for (int i = 1; i < r; ++i) c.lam3.push_back(rs.any());
    c.lam0 = rs.any();
    const CriticalData cd = critical_values(restricted_function_Cpqr(c));
    if (!cd.morse) return PlaneDraw{false, 0, "degenerate critical point"};
    if (!cd.distinct_values) return PlaneDraw{false, 0, "two critical points share a level"};
    return PlaneDraw{true, static_cast<int>(cd.distinct), ""};
  });
}

ConjectureReport conjecture_check(const CatalogEntry& entry, const GenericityConfig& cfg) {
  ConjectureReport rep;
  rep.id = entry.id;
  rep.tau = tjurina(entry.pair);
  try {
    if (entry.is_plane()) {
      rep.mu = milnor_plane(*entry.plane_curve, *entry.plane_function, cfg);
    } else if (entry.id.family == Family::CSpace) {
      const auto& ix = entry.id.indices;
      rep.mu = milnor_C_space(ix[0], ix[1], ix[2], cfg);
    } else {
      rep.status = "skipped";
      return rep;
    }
  } catch (const PersistentDegeneracy& e) {
    rep.status = std::string("error: ") + e.what();
    return rep;
  }
  rep.status = rep.equal() ? "equal" : "mismatch";
  return rep;
}

}  // namespace fsc
