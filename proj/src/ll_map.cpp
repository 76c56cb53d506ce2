#include "fsc/ll_map.hpp"

#include <sstream>

#include "fsc/invariants.hpp"
#include "fsc/linalg.hpp"
#include "fsc/random.hpp"

namespace fsc {

RationalFunction1V::RationalFunction1V(UPoly n, UPoly d) {
  if (d.is_zero()) throw InvalidInput("rational function with zero denominator");
  const UPoly g = gcd(n, d);
  if (g.degree() > 0) {
    n = divide_exact(n, g);
    d = divide_exact(d, g);
  }
  const Rational lc = d.lead();
  num = (1 / lc) * n;
  den = (1 / lc) * d;
}

Rational RationalFunction1V::operator()(const Rational& y) const {
  const Rational d = den(y);
  if (d == 0) throw InvalidInput("evaluation at a pole");
  return num(y) / d;
}

RationalFunction1V RationalFunction1V::derivative() const {
  return {num.derivative() * den - num * den.derivative(), den * den};
}

UPoly RationalFunction1V::critical_numerator() const { return derivative().num; }

CpqrParams CpqrParams::from_values(int p, int q, int r, std::span<const Rational> values) {
  const std::size_t want = static_cast<std::size_t>(p + q + r + 1);
  if (values.size() != want) throw InvalidInput("C_{p,q,r} takes p+q+r+1 parameter values");
  CpqrParams c;
  c.p = p;
  c.q = q;
  c.r = r;
  c.lam0 = values[0];
  c.alpha = values[1];
  c.beta = values[2];
  c.gamma = values[3];
  std::size_t k = 4;
  for (int i = 1; i < p; ++i) c.lam1.push_back(values[k++]);
  for (int i = 1; i < q; ++i) c.lam2.push_back(values[k++]);
  for (int i = 1; i < r; ++i) c.lam3.push_back(values[k++]);
  return c;
}

std::vector<Rational> CpqrParams::values() const {
  std::vector<Rational> v = {lam0, alpha, beta, gamma};
  v.insert(v.end(), lam1.begin(), lam1.end());
  v.insert(v.end(), lam2.begin(), lam2.end());
  v.insert(v.end(), lam3.begin(), lam3.end());
  return v;
}

SymbolicRestriction restricted_function_symbolic(int p, int q, int r) {
  const ParametricPair def = printed_miniversal({Family::CSpace, {p, q, r}, std::nullopt}, false);
  std::vector<std::string> names = {"y"};
  names.insert(names.end(), def.params.begin(), def.params.end());
  SymbolicRestriction s;
  s.ring = make_ring(names);
  auto var = [&](const std::string& n) { return Polynomial::variable(s.ring, n); };
  const Polynomial y = var("y");
  const Polynomial one = Polynomial::constant(s.ring, 1);
  const Polynomial yg = y + var("gamma");
  const Polynomial by = var("beta") * y;
  const Polynomial ag = var("alpha") * yg;
  // Common denominator y^r (y+gamma)^p.
  s.den = y.pow(r) * yg.pow(p);
  Polynomial num(s.ring);
  // (beta y / (y+gamma))^j = (beta y)^j (y+gamma)^(p-j) y^r / den
  auto x_block = [&](int j) { return by.pow(j) * yg.pow(p - j) * y.pow(r); };
  // (alpha (y+gamma) / y)^j = (alpha (y+gamma))^j y^(r-j) (y+gamma)^p / den
  auto z_block = [&](int j) { return ag.pow(j) * y.pow(r - j) * yg.pow(p); };
  num += x_block(p);
  for (int j = 1; j < p; ++j) num += var("lam1_" + std::to_string(j)) * x_block(p - j);
  num += y.pow(q) * s.den;
  for (int j = 1; j < q; ++j) num += var("lam2_" + std::to_string(j)) * y.pow(q - j) * s.den;
  num += z_block(r);
  for (int j = 1; j < r; ++j) num += var("lam3_" + std::to_string(j)) * z_block(r - j);
  num += var("lam0") * s.den;
  s.num = num;
  (void)one;
  return s;
}

namespace {

UPoly specialize(const Polynomial& p, std::span<const Rational> values) {
  Polynomial s = p;
  for (std::size_t i = 0; i < values.size(); ++i) s = s.substitute(i + 1, values[i]);
  return UPoly::from_polynomial(s, 0);
}

}  // namespace

RationalFunction1V restricted_function_Cpqr(const CpqrParams& c) {
  if (c.alpha == 0 || c.beta == 0 || c.gamma == 0) {
    throw InvalidInput("restricted function needs alpha, beta, gamma nonzero");
  }
  const SymbolicRestriction s = restricted_function_symbolic(c.p, c.q, c.r);
  const auto v = c.values();
  return {specialize(s.num, v), specialize(s.den, v)};
}

WeightProfile weight_profile(const CatalogEntry& entry) {
  if (entry.is_bounding()) {
    throw InvalidInput("entries with a modulus have no finite LL map");
  }
  const Deformation def = miniversal_basis(entry.pair, false);
  WeightProfile wp;
  wp.d = entry.weights.d;
  wp.var = entry.weights.var;
  wp.tau = static_cast<int>(def.base_dimension);
  const std::size_t fslot = entry.pair.module_rank() - 1;
  bool have_free = false;
  std::vector<long> rest;
  for (const auto& [comp, mono] : def.monomials) {
    const long w = entry.weights.component_weight(comp) - mono.weighted_degree(wp.var);
    if (w <= 0) throw InvalidInput("miniversal parameter of non-positive weight");
    if (comp == fslot && mono.is_one()) {
      have_free = true;
    } else {
      rest.push_back(w);
    }
  }
  if (!have_free) throw InvalidInput("free term is not a miniversal direction");
  wp.source.push_back(wp.d);
  wp.source.insert(wp.source.end(), rest.begin(), rest.end());
  return wp;
}

Integer ll_degree(const WeightProfile& wp) {
  Integer num = 1;
  Integer den = 1;
  for (int k = 2; k <= wp.tau; ++k) num *= Integer(k) * wp.d;
  for (long w : wp.truncated()) den *= w;
  if (num % den != 0) throw InvalidInput("weight ratio is not an integer");
  return num / den;
}

std::optional<Rational> printed_ll_degree(const EntryId& id) {
  auto fact = [](long n) {
    Integer f = 1;
    for (long k = 2; k <= n; ++k) f *= k;
    return f;
  };
  auto pw = [](long b, long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), Integer(b).get_mpz_t(), static_cast<unsigned long>(e));
    return r;
  };
  const auto& ix = id.indices;
  switch (id.family) {
    case Family::A: return Rational(pw(ix[0] + 1, ix[0] - 1 >= 0 ? ix[0] - 1 : 0));
    case Family::B: return Rational(1);
    case Family::CPlane: {
      const long p = ix[0], q = ix[1];
      Rational v(fact(p + q - 1) * pw(p, p) * pw(q, q), fact(p - 1) * fact(q - 1));
      v.canonicalize();
      return v;
    }
    case Family::F: {
      const long r = ix[0];
      Rational v(Integer(r - 2) * pw(r - 1, r) * r, 24);
      v.canonicalize();
      return v;
    }
    case Family::CSpace: {
      const long p = ix[0], q = ix[1], r = ix[2];
      Rational v(fact(p + q + r + 1) * pw(p, p) * pw(q, q) * pw(r, r),
                 fact(p - 1) * fact(q - 1) * fact(r - 1));
      v.canonicalize();
      return v;
    }
    case Family::FDot: {
      const long r = ix[0];
      Rational v(pw(r - 3, r) * (r - 2) * (r - 1) * r, 24);
      v.canonicalize();
      return v;
    }
    case Family::ECheck:
      if (ix[0] == 6) return Rational(pw(3, 5));
      if (ix[0] == 7) return Rational(pw(2, 7) * 7);
      return Rational(pw(2, 4) * pw(3, 5));
    default: return std::nullopt;
  }
}

CriticalData critical_values(const RationalFunction1V& f) {
  CriticalData cd;
  cd.points = f.critical_numerator();
  if (cd.points.is_zero()) throw InvalidInput("function is constant");
  cd.points = cd.points.monic();
  cd.count = static_cast<std::size_t>(cd.points.degree());
  cd.distinct = static_cast<std::size_t>(squarefree_part(cd.points).degree());
  cd.morse = is_squarefree(cd.points);
  if (cd.count == 0) {
    cd.values = UPoly::constant(1);
    cd.distinct_values = true;
    return cd;
  }
  // Value map y -> F(y) on Q[y]/(points); the denominator is invertible there.
  const UPoly v = (f.num * inverse_mod(f.den, cd.points)) % cd.points;
  cd.values = charpoly(multiplication_matrix(v, cd.points));
  cd.distinct_values = is_squarefree(cd.values);
  return cd;
}

namespace {

struct Family1V {
  RationalFunction1V f;
  std::vector<RationalFunction1V> partials;  // d f / d param_j
  int tau = 0;
};

// The one-variable function of the deformation and its parameter derivatives.
Family1V one_variable_family(const EntryId& id, std::span<const Rational> values) {
  Family1V out;
  if (id.family == Family::A) {
    const int k = id.indices.at(0);
    if (values.size() != static_cast<std::size_t>(k)) throw InvalidInput("A_k takes k values");
    // f = x^{k+1} + sum lam_i x^i + lam0, values = (lam0, lam1, ...).
    std::vector<Rational> c(k + 2, Rational(0));
    c[k + 1] = 1;
    c[0] = values[0];
    for (int i = 1; i < k; ++i) c[i] = values[i];
    out.f = {UPoly(c), UPoly::constant(1)};
    out.partials.push_back({UPoly::constant(1), UPoly::constant(1)});
    for (int i = 1; i < k; ++i) out.partials.push_back({UPoly::monomial(i), UPoly::constant(1)});
    out.tau = k;
    return out;
  }
  if (id.family != Family::CSpace) throw InvalidInput("LL point not implemented for " + id.to_string());
  const int p = id.indices[0], q = id.indices[1], r = id.indices[2];
  const CpqrParams c = CpqrParams::from_values(p, q, r, values);
  if (c.alpha == 0 || c.beta == 0 || c.gamma == 0) {
    throw InvalidInput("curve is not smooth at this parameter point");
  }
  const SymbolicRestriction s = restricted_function_symbolic(p, q, r);
  out.f = {specialize(s.num, values), specialize(s.den, values)};
  const UPoly den = specialize(s.den, values);
  for (std::size_t j = 0; j < values.size(); ++j) {
    // d(N/D) = (N_j D - N D_j) / D^2
    const Polynomial n = s.num.derivative(j + 1) * s.den - s.num * s.den.derivative(j + 1);
    out.partials.push_back({specialize(n, values), den * den});
  }
  out.tau = p + q + r + 1;
  return out;
}

}  // namespace

LLPoint ll_point(const EntryId& id, std::span<const Rational> values, bool truncated) {
  const Family1V fam = one_variable_family(id, values);
  const CriticalData cd = critical_values(fam.f);
  if (static_cast<int>(cd.count) != fam.tau) {
    throw InvalidInput("critical points escape the chart at this parameter point");
  }
  LLPoint pt;
  pt.poly = cd.values;
  pt.truncated = truncated;
  if (truncated) {
    const Rational mean = -pt.poly.coeff(fam.tau - 1) / fam.tau;
    pt.poly = pt.poly.compose(UPoly({mean, Rational(1)}));
  }
  pt.in_xi = !is_squarefree(pt.poly);
  return pt;
}

JacobianReport ll_jacobian_check(const EntryId& id, std::span<const Rational> values) {
  JacobianReport rep;
  Family1V fam;
  try {
    fam = one_variable_family(id, values);
  } catch (const InvalidInput& e) {
    rep.reason = e.what();
    return rep;
  }
  const CriticalData cd = critical_values(fam.f);
  if (static_cast<int>(cd.count) != fam.tau) {
    rep.reason = "critical points escape the chart";
    return rep;
  }
  // Column j: d F / d param_j modulo the critical polynomial. Evaluating at
  // the critical points multiplies by a Vandermonde matrix in the y_i, and
  // passing from critical values to coefficients by one in the values.
  const std::size_t n = static_cast<std::size_t>(fam.tau);
  QMatrix m(n, std::vector<Rational>(n));
  for (std::size_t j = 0; j < n; ++j) {
    const auto& pj = fam.partials[j];
    const UPoly red = (pj.num * inverse_mod(pj.den, cd.points)) % cd.points;
    for (std::size_t i = 0; i < n; ++i) m[i][j] = red.coeff(i);
  }
  const Rational dm = determinant(m);
  rep.det_squared = discriminant(cd.points) * discriminant(cd.values) * dm * dm;
  rep.nonsingular = rep.det_squared != 0;
  if (rep.nonsingular) {
    rep.reason = "ok";
  } else if (!cd.morse) {
    rep.reason = "degenerate critical point";
  } else if (!cd.distinct_values) {
    rep.reason = "two critical points share a level";
  } else {
    rep.reason = "parameter derivatives are dependent";
  }
  return rep;
}

ExtendedMatrixReport extended_matrix_check(int p, int q, int r, std::uint64_t seed, int draws) {
  ExtendedMatrixReport rep;
  const RingPtr ring = make_ring({"gamma", "A", "B"});
  const Polynomial gamma = Polynomial::variable(ring, 0);
  const Polynomial A = Polynomial::variable(ring, 1);
  const Polynomial B = Polynomial::variable(ring, 2);
  const int tau = p + q + r + 1;
  RationalSampler rs(mix_seed(seed, "extended_matrix"), 40);

  // The transformed system evaluated at y.
  auto system = [&](const Rational& yv) {
    const Polynomial y = Polynomial::constant(ring, yv);
    const Polynomial yg = y + gamma;
    std::vector<Polynomial> row;
    for (int j = 1; j <= p; ++j) row.push_back(y.pow(r + 1) * yg.pow(j));
    for (int k = q + r; k >= 1; --k) row.push_back(y.pow(k) * yg.pow(p + 1));
    row.push_back(A * y.pow(r + 1) + B * yg.pow(p + 1));
    return row;
  };
  auto extra = [&](const Rational& yv) { return Polynomial::constant(ring, yv).pow(r + 1); };

  std::optional<Polynomial> ratio;
  bool literal = true;
  bool laplace = true;
  bool nonzero = true;
  std::ostringstream detail;
  for (int d = 0; d < draws; ++d) {
    std::vector<Rational> pts;
    while (static_cast<int>(pts.size()) < tau) {
      const Rational v = rs.nonzero();
      if (std::find(pts.begin(), pts.end(), v) == pts.end()) pts.push_back(v);
    }
    PolyMatrix orig, ext, minor;
    for (const auto& v : pts) {
      auto row = system(v);
      orig.push_back(row);
      auto erow = row;
      erow.push_back(extra(v));
      ext.push_back(erow);
      auto mrow = std::vector<Polynomial>(row.begin(), row.end() - 1);
      mrow.push_back(extra(v));
      minor.push_back(mrow);
    }
    auto zrow = system(Rational(0));
    zrow.push_back(extra(Rational(0)));
    ext.push_back(zrow);

    const Polynomial det_t = determinant(orig);
    const Polynomial det_e = determinant(ext);
    const Polynomial det_m = determinant(minor);
    if (det_e.is_zero()) nonzero = false;
    const Polynomial factor = B * gamma.pow(p + 1);
    if (det_e != factor * det_m && det_e != -(factor * det_m)) laplace = false;
    if (literal) {
      try {
        const Polynomial qt = det_e.divide_exact(gamma.pow(p + 1) * det_t);
        if (qt.involves(0)) literal = false;
        if (ratio && *ratio != qt) literal = false;
        ratio = qt;
      } catch (const InvalidInput&) {
        literal = false;
      }
      if (!literal) {
        detail << "det_ext = " << det_e.to_string() << " is not a fixed multiple of gamma^"
               << (p + 1) << " * det_orig = " << det_t.to_string();
      }
    }
  }
  rep.literal_relation = literal;
  rep.laplace_relation = laplace;
  rep.extended_nonzero = nonzero;
  rep.detail = detail.str();
  return rep;
}

FiberReport ll_fiber_origin_check(int p, int q, int r, std::uint64_t seed, int draws) {
  FiberReport rep;
  rep.p = p;
  rep.q = q;
  rep.r = r;
  rep.draws = draws;
  const int tau = p + q + r + 1;
  RationalSampler rs(mix_seed(seed, "fiber"), 30);
  const SymbolicRestriction s = restricted_function_symbolic(p, q, r);
  const std::size_t np = static_cast<std::size_t>(tau);
  auto draw = [&] {
    std::vector<Rational> v(np);
    for (auto& x : v) x = rs.any();
    return v;
  };

  // Smooth stratum: the numerator of F - a, before cancellation, has degree p+q+r.
  rep.smooth_degree_ok = true;
  for (int i = 0; i < 50; ++i) {
    auto v = draw();
    if (v[1] == 0 || v[2] == 0 || v[3] == 0) continue;
    const Rational a = rs.any();
    const UPoly n = specialize(s.num, v) - a * specialize(s.den, v);
    if (n.degree() != p + q + r) rep.smooth_degree_ok = false;
  }

  // One node (beta = 0): line y = -gamma, z = 0 carries a polynomial of degree p
  // in x; the hyperbola x = 0, yz = alpha (y + gamma) carries a numerator of
  // degree q + r over y^r.
  const ParametricPair def = printed_miniversal({Family::CSpace, {p, q, r}, std::nullopt}, false);
  rep.node_degree_ok = true;
  rep.lines_degree_ok = true;
  const RingPtr& R = def.ring;
  for (int i = 0; i < 50; ++i) {
    auto v = draw();
    v[2] = 0;
    if (v[1] == 0 || v[3] == 0) continue;
    Polynomial f = def.function;
    for (std::size_t j = 0; j < v.size(); ++j) f = f.substitute(def.param_var(j), v[j]);
    // Line: y = -gamma, z = 0.
    const Polynomial on_line = f.substitute(1, -v[3]).substitute(2, Rational(0));
    if (UPoly::from_polynomial(on_line, 0).degree() != p) rep.node_degree_ok = false;
    // Hyperbola: x = 0, z = alpha (y + gamma) / y; clear y^r.
    const Polynomial fx0 = f.substitute(0, Rational(0));
    const Polynomial y = Polynomial::variable(R, 1);
    const Polynomial zt = Polynomial::constant(R, v[1]) * (y + Polynomial::constant(R, v[3]));
    Polynomial cleared(R);
    for (const auto& t : fx0.terms()) {
      const int ez = t.mono.exp[2];
      Monomial m = t.mono;
      m.exp[2] = 0;
      cleared += Polynomial::term(R, m, t.coeff) * zt.pow(ez) * y.pow(r - ez);
    }
    // phi - phi(m) has the same numerator degree as phi.
    if (UPoly::from_polynomial(cleared, 1).degree() != q + r) rep.node_degree_ok = false;

    // Two nodes (beta = gamma = 0): x-axis, z-axis and the line x = 0, z = alpha.
    auto w = v;
    w[3] = 0;
    Polynomial g = def.function;
    for (std::size_t j = 0; j < w.size(); ++j) g = g.substitute(def.param_var(j), w[j]);
    const int dx = UPoly::from_polynomial(g.substitute(1, Rational(0)).substitute(2, Rational(0)), 0).degree();
    const int dz = UPoly::from_polynomial(g.substitute(0, Rational(0)).substitute(1, Rational(0)), 2).degree();
    const int dy = UPoly::from_polynomial(g.substitute(0, Rational(0)).substitute(2, w[1]), 1).degree();
    if (dx != p || dy != q || dz != r || dx + dy + dz >= tau) rep.lines_degree_ok = false;
  }

  // Search for nonzero points whose only critical value is 0.
  const EntryId id{Family::CSpace, {p, q, r}, std::nullopt};
  const UPoly target = UPoly::monomial(static_cast<unsigned>(tau));
  for (int i = 0; i < draws; ++i) {
    auto v = draw();
    if (v[1] == 0 || v[2] == 0 || v[3] == 0) continue;
    // Shrink half of the draws towards the origin.
    if (i % 2 == 1) {
      for (auto& x : v) x /= 1000;
    }
    try {
      if (ll_point(id, v).poly == target) ++rep.counterexamples;
    } catch (const InvalidInput&) {
    }
  }
  std::ostringstream out;
  out << "smooth=" << rep.smooth_degree_ok << " node=" << rep.node_degree_ok
      << " lines=" << rep.lines_degree_ok << " counterexamples=" << rep.counterexamples;
  rep.detail = out.str();
  return rep;
}

}  // namespace fsc
