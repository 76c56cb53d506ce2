#include "fsc/deform_solver.hpp"

#include <cmath>
#include <map>

#include "fsc/curve_model.hpp"
#include "fsc/linalg.hpp"
#include "fsc/ll_map.hpp"
#include "fsc/random.hpp"
#include "fsc/upoly.hpp"

namespace fsc {

QuasiHomogeneity deformation_weights(const EntryId& id) { return instantiate(id).weights; }

namespace {

// Monomials in `vars` of weighted degree exactly `deg`.
void monomials_of_degree(const std::vector<std::size_t>& vars, std::span<const long> wt, long deg,
                         std::size_t pos, Monomial cur, std::vector<Monomial>& out) {
  if (pos == vars.size()) {
    if (deg == 0) out.push_back(cur);
    return;
  }
  const std::size_t v = vars[pos];
  for (long e = 0; e * wt[v] <= deg; ++e) {
    cur.exp[v] = static_cast<std::uint16_t>(e);
    monomials_of_degree(vars, wt, deg - e * wt[v], pos + 1, cur, out);
  }
}

std::vector<Monomial> monomials_of_degree(const std::vector<std::size_t>& vars, std::span<const long> wt,
                                          long deg) {
  std::vector<Monomial> out;
  if (deg >= 0) monomials_of_degree(vars, wt, deg, 0, Monomial{}, out);
  return out;
}

std::vector<long> all_weights(const ParametricPair& def, const QuasiHomogeneity& w) {
  std::vector<long> wt = w.var;
  wt.insert(wt.end(), def.param_weights.begin(), def.param_weights.end());
  return wt;
}

// (M, F) as one list: entries row-major, then the function.
std::vector<Polynomial> components(const ParametricPair& def) {
  std::vector<Polynomial> c = def.matrix.entries();
  c.push_back(def.function);
  return c;
}

std::vector<Polynomial> derivative(const std::vector<Polynomial>& v, std::size_t var) {
  std::vector<Polynomial> d;
  for (const auto& p : v) d.push_back(p.derivative(var));
  return d;
}

void check_homogeneous(const ParametricPair& def, const QuasiHomogeneity& w, std::span<const long> wt) {
  const std::size_t cols = def.matrix.cols();
  for (std::size_t a = 0; a < def.matrix.rows(); ++a) {
    for (std::size_t b = 0; b < cols; ++b) {
      const Polynomial& e = def.matrix(a, b);
      if (e.is_zero()) continue;
      if (!e.is_weighted_homogeneous(wt) || e.weighted_degree(wt) != w.entry_weight(a, b)) {
        throw InvalidInput("deformation matrix is not quasi-homogeneous");
      }
    }
  }
  if (!def.function.is_weighted_homogeneous(wt) || def.function.weighted_degree(wt) != w.d) {
    throw InvalidInput("deformation function is not quasi-homogeneous");
  }
}

std::vector<Polynomial> lhs_of(const ParametricPair& def, std::size_t index, DecompositionMode mode) {
  const auto comps = components(def);
  std::vector<Polynomial> lhs(comps.size(), Polynomial(def.ring));
  if (mode == DecompositionMode::Delta) {
    for (std::size_t k = 0; k < comps.size(); ++k) {
      lhs[k] = def.function * comps[k].derivative(def.param_var(index));
    }
  } else {
    lhs.back() = def.function.pow(static_cast<unsigned>(index));
  }
  return lhs;
}

}  // namespace

GradedDecomposition solve_decomposition(const ParametricPair& def, const QuasiHomogeneity& w,
                                        std::size_t index, DecompositionMode mode) {
  const RingPtr& ring = def.ring;
  const auto wt = all_weights(def, w);
  check_homogeneous(def, w, wt);
  const std::size_t n = def.matrix.rows();
  const std::size_t m = def.matrix.cols();
  const std::size_t fslot = n * m;
  const std::size_t np = def.params.size();

  GradedDecomposition dec;
  dec.index = index;
  dec.mode = mode;
  if (mode == DecompositionMode::Delta) {
    if (!def.constant_param) throw InvalidInput("discriminant rows need the full deformation");
    if (index >= np) throw InvalidInput("row index out of range");
    dec.shift = w.d - def.param_weights[index];
  } else {
    if (def.constant_param) throw InvalidInput("bifurcation rows need the truncated deformation");
    if (index < 1 || index > np) throw InvalidInput("row index out of range");
    dec.shift = static_cast<long>(index - 1) * w.d;
  }
  const long delta = dec.shift;
  const auto comps = components(def);
  const auto minors = maximal_minors(def.matrix);

  std::vector<std::size_t> all_vars(ring->size());
  for (std::size_t v = 0; v < all_vars.size(); ++v) all_vars[v] = v;
  std::vector<std::size_t> param_vars;
  for (std::size_t j = 0; j < np; ++j) param_vars.push_back(def.param_var(j));

  // Each unknown multiplies a fixed module element; its coefficients run over
  // the monomials that make the product homogeneous of the lhs degree.
  struct Unknown {
    std::vector<Polynomial> basis;
    std::vector<Monomial> monos;
    std::size_t first_column = 0;
  };
  std::vector<Unknown> unknowns;
  auto add_unknown = [&](std::vector<Polynomial> basis, long deg, bool params_only) {
    Unknown u;
    u.basis = std::move(basis);
    u.monos = monomials_of_degree(params_only ? param_vars : all_vars, wt, deg);
    unknowns.push_back(std::move(u));
  };
  const Polynomial zero(ring);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<Polynomial> basis(fslot + 1, zero);
      for (std::size_t b = 0; b < m; ++b) basis[a * m + b] = def.matrix(c, b);
      add_unknown(std::move(basis), delta + w.row[a] - w.row[c], false);
    }
  }
  for (std::size_t c = 0; c < m; ++c) {
    for (std::size_t b = 0; b < m; ++b) {
      std::vector<Polynomial> basis(fslot + 1, zero);
      for (std::size_t a = 0; a < n; ++a) basis[a * m + b] = def.matrix(a, c);
      add_unknown(std::move(basis), delta + w.col[b] - w.col[c], false);
    }
  }
  for (const auto& mi : minors) {
    std::vector<Polynomial> basis(fslot + 1, zero);
    basis[fslot] = mi;
    const long deg = mi.is_zero() ? -1 : w.d + delta - mi.weighted_degree(wt);
    add_unknown(std::move(basis), deg, false);
  }
  for (std::size_t r = 0; r < 3; ++r) add_unknown(derivative(comps, r), delta + w.var[r], false);
  const std::size_t first_row_unknown = unknowns.size();
  for (std::size_t j = 0; j < np; ++j) {
    add_unknown(derivative(comps, def.param_var(j)), delta + def.param_weights[j], true);
  }
  if (mode == DecompositionMode::Sigma) {
    std::vector<Polynomial> basis(fslot + 1, zero);
    basis[fslot] = Polynomial::constant(ring, 1);
    add_unknown(std::move(basis), delta + w.d, true);
  }

  std::size_t columns = 0;
  for (auto& u : unknowns) {
    u.first_column = columns;
    columns += u.monos.size();
  }
  dec.unknowns = columns;

  std::map<std::pair<std::size_t, Monomial>, SparseLinearSystem::Row> equations;
  for (const auto& u : unknowns) {
    for (std::size_t k = 0; k <= fslot; ++k) {
      for (const auto& t : u.basis[k].terms()) {
        for (std::size_t i = 0; i < u.monos.size(); ++i) {
          equations[{k, u.monos[i] * t.mono}].emplace_back(u.first_column + i, t.coeff);
        }
      }
    }
  }
  const auto lhs = lhs_of(def, index, mode);
  std::map<std::pair<std::size_t, Monomial>, Rational> rhs;
  for (std::size_t k = 0; k <= fslot; ++k) {
    for (const auto& t : lhs[k].terms()) {
      rhs[{k, t.mono}] = t.coeff;
      equations[{k, t.mono}];
    }
  }
  SparseLinearSystem sys(columns);
  for (auto& [key, row] : equations) {
    auto it = rhs.find(key);
    sys.add_equation(std::move(row), it == rhs.end() ? Rational(0) : it->second);
  }
  const auto sol = sys.solve();
  if (!sol) {
    throw DecompositionFailure("no decomposition at quasi-degree shift " + std::to_string(delta) +
                               " for row " + std::to_string(index));
  }

  auto value = [&](const Unknown& u) {
    Polynomial p(ring);
    for (std::size_t i = 0; i < u.monos.size(); ++i) {
      const Rational& c = (*sol)[u.first_column + i];
      if (c != 0) p += Polynomial::term(ring, u.monos[i], c);
    }
    return p;
  };
  std::size_t k = 0;
  dec.a.assign(n, std::vector<Polynomial>(n, zero));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t c = 0; c < n; ++c) dec.a[a][c] = value(unknowns[k++]);
  }
  dec.b.assign(m, std::vector<Polynomial>(m, zero));
  for (std::size_t c = 0; c < m; ++c) {
    for (std::size_t b = 0; b < m; ++b) dec.b[c][b] = value(unknowns[k++]);
  }
  dec.g = zero;
  for (std::size_t s = 0; s < minors.size(); ++s) {
    dec.minor_coeffs.push_back(value(unknowns[k++]));
    dec.g += dec.minor_coeffs.back() * minors[s];
  }
  for (std::size_t r = 0; r < 3; ++r) dec.h.push_back(value(unknowns[k++]));
  for (std::size_t j = 0; j < np; ++j) dec.row.push_back(value(unknowns[first_row_unknown + j]));
  k = first_row_unknown + np;
  if (mode == DecompositionMode::Sigma) dec.absorber = value(unknowns[k++]);

  if (!verify_decomposition(def, dec)) {
    throw DecompositionFailure("solved decomposition does not re-expand for row " +
                               std::to_string(index));
  }
  return dec;
}

bool verify_decomposition(const ParametricPair& def, const GradedDecomposition& dec) {
  const std::size_t n = def.matrix.rows();
  const std::size_t m = def.matrix.cols();
  const auto comps = components(def);
  std::vector<Polynomial> rhs(comps.size(), Polynomial(def.ring));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      Polynomial& e = rhs[a * m + b];
      for (std::size_t c = 0; c < n; ++c) e += dec.a[a][c] * def.matrix(c, b);
      for (std::size_t c = 0; c < m; ++c) e += def.matrix(a, c) * dec.b[c][b];
    }
  }
  const auto minors = maximal_minors(def.matrix);
  Polynomial g(def.ring);
  for (std::size_t s = 0; s < minors.size(); ++s) g += dec.minor_coeffs.at(s) * minors[s];
  if (!(g == dec.g)) return false;
  rhs.back() += g;
  if (dec.absorber) rhs.back() += *dec.absorber;
  for (std::size_t k = 0; k < comps.size(); ++k) {
    for (std::size_t r = 0; r < 3; ++r) rhs[k] += dec.h[r] * comps[k].derivative(r);
    for (std::size_t j = 0; j < dec.row.size(); ++j) {
      rhs[k] += dec.row[j] * comps[k].derivative(def.param_var(j));
    }
  }
  return rhs == lhs_of(def, dec.index, dec.mode);
}

namespace {

VectorFieldMatrix field_matrix(const EntryId& id, DecompositionMode mode) {
  const bool truncated = mode == DecompositionMode::Sigma;
  const ParametricPair def = printed_miniversal(id, truncated);
  const QuasiHomogeneity w = deformation_weights(id);
  VectorFieldMatrix v;
  v.id = id;
  v.mode = mode;
  v.ring = make_ring(def.params);
  v.param_weights = def.param_weights;
  const std::size_t np = def.params.size();
  for (std::size_t r = 0; r < np; ++r) {
    const std::size_t index = truncated ? r + 1 : r;
    GradedDecomposition dec = solve_decomposition(def, w, index, mode);
    std::vector<Polynomial> row;
    for (const auto& e : dec.row) row.push_back(e.in_ring(v.ring));
    v.entries.push_back(std::move(row));
    v.row_degrees.push_back(dec.shift + def.param_weights[r]);
    v.decompositions.push_back(std::move(dec));
  }
  const Polynomial raw = np == 0 ? Polynomial::constant(v.ring, 1) : determinant(v.entries);
  if (raw.is_zero()) throw DecompositionFailure("vector field matrix is degenerate");
  if (mode == DecompositionMode::Delta) {
    Polynomial axis = raw;
    for (std::size_t j = 1; j < np; ++j) axis = axis.substitute(j, Rational(0));
    const Monomial target = unit_monomial(0, static_cast<unsigned>(np));
    if (axis.size() != 1 || !(axis.terms().front().mono == target)) {
      throw DecompositionFailure("determinant is not a multiple of lambda_0^tau on the axis");
    }
    v.scale = axis.terms().front().coeff;
  } else {
    // Leading coefficient under total degree, then exponent vector.
    const Term* best = &raw.terms().front();
    for (const auto& t : raw.terms()) {
      if (t.mono.degree() > best->mono.degree() ||
          (t.mono.degree() == best->mono.degree() && best->mono < t.mono)) {
        best = &t;
      }
    }
    v.scale = best->coeff;
  }
  v.det = raw * (1 / v.scale);
  return v;
}

}  // namespace

VectorFieldMatrix discriminant_matrix(const EntryId& id) {
  return field_matrix(id, DecompositionMode::Delta);
}

VectorFieldMatrix bifurcation_matrix(const EntryId& id) {
  return field_matrix(id, DecompositionMode::Sigma);
}

Polynomial axis_restriction(const VectorFieldMatrix& v) {
  Polynomial axis = v.det;
  for (std::size_t j = 1; j < v.ring->size(); ++j) axis = axis.substitute(j, Rational(0));
  return axis;
}

Polynomial apply_field(std::span<const Polynomial> row, const Polynomial& p) {
  Polynomial out(p.ring());
  for (std::size_t j = 0; j < row.size(); ++j) out += row[j] * p.derivative(j);
  return out;
}

bool rows_tangent(const VectorFieldMatrix& v) {
  for (const auto& row : v.entries) {
    try {
      (void)apply_field(row, v.det).divide_exact(v.det);
    } catch (const InvalidInput&) {
      return false;
    }
  }
  return true;
}

bool euler_in_span(const VectorFieldMatrix& v) {
  // Flatten fields to coefficient vectors indexed by (j, monomial).
  std::map<std::pair<std::size_t, Monomial>, std::size_t> index;
  auto flatten = [&](const std::vector<Polynomial>& row) {
    std::vector<std::pair<std::size_t, Rational>> out;
    for (std::size_t j = 0; j < row.size(); ++j) {
      for (const auto& t : row[j].terms()) {
        auto [it, fresh] = index.emplace(std::make_pair(j, t.mono), index.size());
        out.emplace_back(it->second, t.coeff);
      }
    }
    return out;
  };
  std::vector<std::vector<std::pair<std::size_t, Rational>>> rows;
  for (const auto& r : v.entries) rows.push_back(flatten(r));
  std::vector<Polynomial> euler;
  for (std::size_t j = 0; j < v.ring->size(); ++j) {
    euler.push_back(v.param_weights[j] * Polynomial::variable(v.ring, j));
  }
  const auto e = flatten(euler);
  auto dense = [&](const std::vector<std::vector<std::pair<std::size_t, Rational>>>& rs) {
    QMatrix m(rs.size(), std::vector<Rational>(index.size(), Rational(0)));
    for (std::size_t i = 0; i < rs.size(); ++i) {
      for (const auto& [c, x] : rs[i]) m[i][c] += x;
    }
    return m;
  };
  const std::size_t r0 = rank(dense(rows));
  rows.push_back(e);
  return rank(dense(rows)) == r0;
}

bool is_reduced(const Polynomial& p, std::uint64_t seed, int lines) {
  if (p.is_zero()) return false;
  if (p.is_constant()) return true;
  RationalSampler rs(mix_seed(seed, "is_reduced"), 50);
  const RingPtr tr = make_ring({"t"});
  const Polynomial t = Polynomial::variable(tr, 0);
  for (int l = 0; l < lines; ++l) {
    std::vector<Polynomial> images;
    for (std::size_t j = 0; j < p.ring()->size(); ++j) {
      images.push_back(Polynomial::constant(tr, rs.any()) + rs.nonzero() * t);
    }
    const UPoly u = UPoly::from_polynomial(p.compose(images), 0);
    if (u.degree() != p.total_degree() || !is_squarefree(u)) return false;
  }
  return true;
}

std::string component_name(SigmaComponent c) {
  switch (c) {
    case SigmaComponent::Nonsmooth: return "nonsmooth";
    case SigmaComponent::Degenerate: return "degenerate";
    case SigmaComponent::Level: return "level";
  }
  return "?";
}

VanishingCheck vanishes_at(const Polynomial& p, const ParameterPoint& point) {
  VanishingCheck vc;
  const Rational v = p.evaluate(point.values);
  vc.exact_zero = v == 0;
  if (vc.exact_zero) return vc;
  Rational scale = 0;
  for (const auto& t : p.terms()) {
    Rational tv = t.coeff;
    for (std::size_t j = 0; j < point.values.size(); ++j) {
      for (unsigned e = 0; e < t.mono.exp[j]; ++e) tv *= point.values[j];
    }
    scale += abs(tv);
  }
  vc.relative = scale == 0 ? 0.0 : Rational(abs(v) / scale).get_d();
  return vc;
}

namespace {

/// F(y) = N / D for the printed deformation over the ring (y, full params).
struct OneVariable {
  RingPtr ring;
  Polynomial num;
  Polynomial den;
  std::vector<std::string> params;
};

OneVariable one_variable(const EntryId& id) {
  OneVariable ov;
  const ParametricPair def = printed_miniversal(id, false);
  ov.params = def.params;
  if (id.family == Family::CSpace) {
    const auto s = restricted_function_symbolic(id.indices[0], id.indices[1], id.indices[2]);
    ov.ring = s.ring;
    ov.num = s.num;
    ov.den = s.den;
    return ov;
  }
  std::vector<std::string> names = {"y"};
  names.insert(names.end(), def.params.begin(), def.params.end());
  ov.ring = make_ring(names);
  // x is the coordinate along the smooth curve y = z = 0.
  const Polynomial& f = def.function;
  std::vector<Polynomial> images = {Polynomial::variable(ov.ring, 0), Polynomial(ov.ring),
                                    Polynomial(ov.ring)};
  for (std::size_t j = 0; j < def.params.size(); ++j) {
    images.push_back(Polynomial::variable(ov.ring, j + 1));
  }
  ov.num = f.compose(images);
  ov.den = Polynomial::constant(ov.ring, 1);
  return ov;
}

bool is_curve_param(const std::string& name) {
  return name == "alpha" || name == "beta" || name == "gamma";
}

// Parameters (full indexing, lam0 excluded) entering N affinely and jointly,
// and not entering D.
std::vector<std::size_t> linear_params(const OneVariable& ov, std::size_t max_count) {
  std::vector<std::size_t> out;
  for (std::size_t j = 1; j < ov.params.size() && out.size() < max_count; ++j) {
    const std::size_t v = j + 1;
    if (ov.den.involves(v) || ov.num.degree_in(v) > 1) continue;
    bool mixed = false;
    for (std::size_t o : out) {
      for (const auto& t : ov.num.terms()) {
        if (t.mono.exp[v] > 0 && t.mono.exp[o + 1] > 0) mixed = true;
      }
    }
    if (!mixed) out.push_back(j);
  }
  return out;
}

/// N = n0 + sum_l n_l L_l, D, and G = N'D - ND' = g0 + sum_l g_l L_l at a
/// fixed value of every other parameter.
struct AffineFamily {
  UPoly n0, d, g0;
  std::vector<UPoly> nl, gl;

  Rational value(const Rational& y, std::span<const Rational> ls) const {
    Rational nv = n0(y);
    for (std::size_t l = 0; l < ls.size(); ++l) nv += nl[l](y) * ls[l];
    return nv / d(y);
  }
};

AffineFamily affine_family(const OneVariable& ov, const std::vector<Rational>& vals,
                           const std::vector<std::size_t>& solve) {
  auto reduce = [&](const Polynomial& p, std::optional<std::size_t> keep) {
    Polynomial s = p;
    for (std::size_t j = 0; j < vals.size(); ++j) {
      bool solved = std::find(solve.begin(), solve.end(), j) != solve.end();
      if (keep && *keep == j) continue;
      s = s.substitute(j + 1, solved ? Rational(0) : vals[j]);
    }
    return s;
  };
  AffineFamily af;
  const Polynomial g = ov.num.derivative(0) * ov.den - ov.num * ov.den.derivative(0);
  af.d = UPoly::from_polynomial(reduce(ov.den, std::nullopt), 0);
  af.n0 = UPoly::from_polynomial(reduce(ov.num, std::nullopt), 0);
  af.g0 = UPoly::from_polynomial(reduce(g, std::nullopt), 0);
  for (std::size_t j : solve) {
    af.nl.push_back(UPoly::from_polynomial(reduce(ov.num.derivative(j + 1), std::nullopt), 0));
    af.gl.push_back(UPoly::from_polynomial(reduce(g.derivative(j + 1), std::nullopt), 0));
  }
  return af;
}

std::vector<Rational> random_values(const OneVariable& ov, RationalSampler& rs) {
  std::vector<Rational> v(ov.params.size());
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = is_curve_param(ov.params[j]) ? rs.nonzero() : rs.any();
  if (!v.empty()) v[0] = 0;
  return v;
}

// The curve is smooth and y is a regular point of the chart.
bool smooth_at(const OneVariable& ov, const std::vector<Rational>& vals, const AffineFamily& af,
               const Rational& y) {
  for (std::size_t j = 0; j < vals.size(); ++j) {
    if (is_curve_param(ov.params[j]) && vals[j] == 0) return false;
  }
  return af.d(y) != 0;
}

// Strips every factor t - y0 from p.
UPoly strip_root(UPoly p, const Rational& y0) {
  const UPoly lin({-y0, Rational(1)});
  while (!p.is_zero() && p.degree() > 0 && p(y0) == 0) p = divide_exact(p, lin);
  return p;
}

UPoly strip_common(UPoly p, const UPoly& q) {
  if (q.is_zero()) return p;
  while (p.degree() > 0) {
    const UPoly g = gcd(p, q);
    if (g.degree() <= 0) break;
    p = divide_exact(p, g);
  }
  return p;
}

const Rational& root_width() {
  static const Rational w(Integer(1), Integer("1000000000000000000000000000000000000000"));
  return w;
}

struct Candidate {
  Rational t;
  bool exact;
};

std::vector<Candidate> candidates(const UPoly& r) {
  std::vector<Candidate> out;
  if (r.degree() < 1) return out;
  for (const auto& ri : real_roots(r, root_width())) out.push_back({ri.mid(), ri.exact()});
  return out;
}

ParameterPoint make_point(std::vector<Rational> vals, bool truncated, bool exact, std::string stratum) {
  ParameterPoint pt;
  if (truncated) vals.erase(vals.begin());
  pt.values = std::move(vals);
  pt.exact = exact;
  pt.stratum = std::move(stratum);
  return pt;
}

void check_family(const EntryId& id) {
  if (id.family != Family::A && id.family != Family::CSpace) {
    throw InvalidInput("sampling needs a printed deformation: " + id.to_string());
  }
}

}  // namespace

SampleResult sample_discriminant(const EntryId& id, std::size_t n, std::uint64_t seed, bool nonsmooth) {
  check_family(id);
  SampleResult res;
  const OneVariable ov = one_variable(id);
  RationalSampler rs(mix_seed(seed, "delta:" + id.to_string() + (nonsmooth ? ":ns" : "")), 30);
  if (nonsmooth) {
    if (id.family != Family::CSpace) {
      res.empty = true;
      res.note = "the curve of the deformation is smooth for every parameter";
      return res;
    }
    // alpha = 0: the curve acquires a node at the origin, where F = lambda_0.
    for (std::size_t i = 0; i < n; ++i) {
      auto v = random_values(ov, rs);
      v[1] = 0;
      v[0] = 0;
      res.points.push_back(make_point(std::move(v), false, true, "node on zero level"));
    }
    return res;
  }
  const auto solve = linear_params(ov, 1);
  const std::size_t max_attempts = 50 * n + 50;
  for (std::size_t attempt = 0; attempt < max_attempts && res.points.size() < n; ++attempt) {
    auto v = random_values(ov, rs);
    const AffineFamily af = affine_family(ov, v, solve);
    std::vector<Candidate> ys;
    std::vector<Rational> ls;
    if (solve.empty()) {
      ys = candidates(af.g0);
      if (ys.empty()) continue;
      ys = {ys[attempt % ys.size()]};
    } else {
      const Rational y0 = rs.nonzero();
      if (af.gl[0](y0) == 0) continue;
      ys = {{y0, true}};
      ls = {Rational(-af.g0(y0) / af.gl[0](y0))};
      v[solve[0]] = ls[0];
    }
    const Rational y0 = ys[0].t;
    if (!smooth_at(ov, v, af, y0)) continue;
    v[0] = Rational(-af.value(y0, ls));
    res.points.push_back(make_point(std::move(v), false, ys[0].exact, "critical value zero"));
  }
  if (res.points.size() < n) res.note = "fewer points than requested";
  return res;
}

SampleResult sample_sigma(const EntryId& id, std::size_t n, std::uint64_t seed, SigmaComponent component) {
  check_family(id);
  SampleResult res;
  const OneVariable ov = one_variable(id);
  RationalSampler rs(mix_seed(seed, "sigma:" + id.to_string() + ":" + component_name(component)), 30);
  const std::string label = component_name(component);
  if (ov.params.size() <= 1) {
    res.empty = true;
    res.note = "the truncated base is a point";
    return res;
  }

  if (component == SigmaComponent::Nonsmooth) {
    if (id.family != Family::CSpace) {
      res.empty = true;
      res.note = "the curve of the deformation is smooth for every parameter";
      return res;
    }
    // alpha, beta or gamma = 0, in turn.
    for (std::size_t i = 0; i < n; ++i) {
      auto v = random_values(ov, rs);
      v[1 + i % 3] = 0;
      res.points.push_back(make_point(std::move(v), true, true, label + ":" + ov.params[1 + i % 3]));
    }
    return res;
  }

  const auto solve = linear_params(ov, 2);
  if (solve.empty()) {
    res.empty = true;
    res.note = "no parameter enters the function linearly";
    return res;
  }
  const std::size_t max_attempts = 20 * n + 40;
  std::size_t nonconstant = 0;
  std::size_t attempts = 0;
  for (; attempts < max_attempts && res.points.size() < n; ++attempts) {
    auto v = random_values(ov, rs);
    const AffineFamily af = affine_family(ov, v, solve);
    // Each candidate: a location t and the solved parameters there.
    struct Solved {
      Rational t;
      std::vector<Rational> ls;
      bool exact;
    };
    std::vector<Solved> found;
    if (component == SigmaComponent::Degenerate) {
      if (solve.size() == 2) {
        const Rational y0 = rs.nonzero();
        const UPoly dg0 = af.g0.derivative(), dg1 = af.gl[0].derivative(), dg2 = af.gl[1].derivative();
        const Rational det = af.gl[0](y0) * dg2(y0) - af.gl[1](y0) * dg1(y0);
        if (det == 0) continue;
        const Rational l1 = (af.gl[1](y0) * dg0(y0) - af.g0(y0) * dg2(y0)) / det;
        const Rational l2 = (af.g0(y0) * dg1(y0) - af.gl[0](y0) * dg0(y0)) / det;
        found.push_back({y0, {l1, l2}, true});
      } else {
        const UPoly r = af.g0 * af.gl[0].derivative() - af.g0.derivative() * af.gl[0];
        if (r.is_zero()) continue;
        if (r.degree() > 0) ++nonconstant;
        for (const auto& c : candidates(strip_common(r, af.gl[0]))) {
          found.push_back({c.t, {Rational(-af.g0(c.t) / af.gl[0](c.t))}, c.exact});
        }
      }
    } else {
      const Rational y1 = rs.nonzero();
      UPoly r;
      std::vector<UPoly> lnum;  // solved parameters as lnum / lden in t
      UPoly lden;
      if (solve.size() == 2) {
        const UPoly& g0 = af.g0;
        const UPoly& g1 = af.gl[0];
        const UPoly& g2 = af.gl[1];
        lden = g1(y1) * g2 - g2(y1) * g1;
        lnum = {Rational(-g0(y1)) * g2 + g2(y1) * g0, Rational(-g1(y1)) * g0 + g0(y1) * g1};
        auto scaled_num = [&](const Rational& y) {
          return af.n0(y) * lden + af.nl[0](y) * lnum[0] + af.nl[1](y) * lnum[1];
        };
        const UPoly n_t = af.n0 * lden + af.nl[0] * lnum[0] + af.nl[1] * lnum[1];
        r = scaled_num(y1) * af.d - af.d(y1) * n_t;
        r = strip_common(r, lden);
        for (std::size_t l = 0; l < 2; ++l) {
          if (is_curve_param(ov.params[solve[l]])) r = strip_common(r, lnum[l]);
        }
      } else {
        if (af.gl[0](y1) == 0) continue;
        const Rational l1 = -af.g0(y1) / af.gl[0](y1);
        const UPoly g = af.g0 + l1 * af.gl[0];
        const UPoly nn = af.n0 + l1 * af.nl[0];
        const UPoly level = nn * UPoly::constant(af.d(y1)) - UPoly::constant(nn(y1)) * af.d;
        r = gcd(g, level);
        lden = UPoly::constant(1);
        lnum = {UPoly::constant(l1)};
      }
      if (r.is_zero()) continue;
      r = strip_root(r, y1);
      r = strip_common(r, af.d);
      if (r.degree() > 0) ++nonconstant;
      for (const auto& c : candidates(r)) {
        std::vector<Rational> ls;
        const Rational den = lden(c.t);
        if (den == 0) continue;
        for (const auto& ln : lnum) ls.push_back(ln(c.t) / den);
        found.push_back({c.t, ls, c.exact});
      }
    }
    for (const auto& s : found) {
      auto w = v;
      for (std::size_t l = 0; l < solve.size(); ++l) w[solve[l]] = s.ls[l];
      if (!smooth_at(ov, w, af, s.t)) continue;
      res.points.push_back(make_point(std::move(w), true, s.exact, label));
      if (res.points.size() == n) break;
    }
  }
  if (res.points.empty() && nonconstant == 0) {
    res.empty = true;
    res.note = "the elimination polynomial is constant after removing spurious factors at all " +
               std::to_string(attempts) + " draws";
  } else if (res.points.size() < n) {
    res.note = "fewer points than requested";
  }
  return res;
}

}  // namespace fsc
