#include "fsc/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fsc {

namespace {

Polynomial P(const std::string& text, const RingPtr& ring) { return parse_polynomial(text, ring); }

std::string join(const std::vector<int>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

[[noreturn]] void restriction(const EntryId& id, const std::string& what) {
  throw InvalidInput("entry " + id.to_string() + " violates restriction: " + what);
}

void need_indices(const EntryId& id, std::size_t n) {
  if (id.indices.size() != n) {
    throw InvalidInput("entry " + family_name(id.family) + " takes " + std::to_string(n) +
                       " indices");
  }
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::CPlane: return "C_plane";
    case Family::F: return "F";
    case Family::CSpace: return "C_space";
    case Family::FDot: return "Fdot";
    case Family::ECheck: return "E";
    case Family::X9Star: return "X9star";
    case Family::J10Star: return "J10star";
  }
  return "?";
}

std::string EntryId::to_string() const {
  switch (family) {
    case Family::A: return "A" + join(indices, ",");
    case Family::B: return "B" + join(indices, ",");
    case Family::F: return "F" + join(indices, ",");
    case Family::ECheck: return "E" + join(indices, ",");
    case Family::CPlane:
    case Family::CSpace: return "C:" + join(indices, ",");
    case Family::FDot: return "Fdot:" + join(indices, ",");
    case Family::X9Star: return "X9:" + fsc::to_string(modulus.value_or(Rational(0)));
    case Family::J10Star: return "J10:" + fsc::to_string(modulus.value_or(Rational(0)));
  }
  return "?";
}

std::string EntryId::label() const {
  switch (family) {
    case Family::CPlane:
    case Family::CSpace: return "C_{" + join(indices, ",") + "}";
    case Family::FDot: return "Fdot_" + join(indices, ",");
    case Family::ECheck: return "Echeck_" + join(indices, ",");
    case Family::X9Star:
      return "X9*(alpha=" + fsc::to_string(modulus.value_or(Rational(0))) + ")";
    case Family::J10Star:
      return "J10*(alpha=" + fsc::to_string(modulus.value_or(Rational(0))) + ")";
    default: return family_name(family) + "_" + join(indices, ",");
  }
}

EntryId EntryId::parse(std::string_view text) {
  auto fail = [&]() -> EntryId {
    throw InvalidInput("cannot parse entry '" + std::string(text) + "'");
  };
  auto ints = [&](std::string_view s) {
    std::vector<int> out;
    std::size_t start = 0;
    while (start <= s.size()) {
      const std::size_t end = std::min(s.find(',', start), s.size());
      const std::string tok(s.substr(start, end - start));
      if (tok.empty() || !std::all_of(tok.begin(), tok.end(), ::isdigit) || tok.size() > 6) fail();
      out.push_back(std::stoi(tok));
      start = end + 1;
    }
    return out;
  };
  EntryId id;
  auto rest_after = [&](std::string_view prefix) -> std::optional<std::string_view> {
    if (text.substr(0, prefix.size()) != prefix) return std::nullopt;
    return text.substr(prefix.size());
  };
  if (auto r = rest_after("Fdot:")) {
    id.family = Family::FDot;
    id.indices = ints(*r);
  } else if (auto r = rest_after("X9:")) {
    id.family = Family::X9Star;
    id.modulus = parse_rational(*r);
  } else if (auto r = rest_after("J10:")) {
    id.family = Family::J10Star;
    id.modulus = parse_rational(*r);
  } else if (auto r = rest_after("C:")) {
    id.indices = ints(*r);
    if (id.indices.size() == 2) {
      id.family = Family::CPlane;
    } else if (id.indices.size() == 3) {
      id.family = Family::CSpace;
    } else {
      fail();
    }
  } else if (!text.empty() && (text[0] == 'A' || text[0] == 'B' || text[0] == 'F' ||
                               text[0] == 'E')) {
    id.family = text[0] == 'A'   ? Family::A
                : text[0] == 'B' ? Family::B
                : text[0] == 'F' ? Family::F
                                 : Family::ECheck;
    id.indices = ints(text.substr(1));
    if (id.indices.size() != 1) fail();
  } else {
    fail();
  }
  return id;
}

long QuasiHomogeneity::component_weight(std::size_t k) const {
  const std::size_t entries = row.size() * col.size();
  if (k == entries) return d;
  return entry_weight(k / col.size(), k % col.size());
}

RingPtr plane_ring() {
  static const RingPtr ring = make_ring({"x", "y"});
  return ring;
}

CatalogEntry instantiate(const EntryId& id) {
  CatalogEntry e;
  e.id = id;
  const RingPtr s = space_ring();
  const RingPtr pl = plane_ring();
  auto plane = [&](const std::string& g, const std::string& f, std::vector<long> var, long d) {
    e.plane_curve = P(g, pl);
    e.plane_function = P(f, pl);
    e.pair = embed_plane_curve(*e.plane_curve, *e.plane_function);
    const long wg = e.plane_curve->weighted_degree(var);
    e.weights = {var, {0}, {wg, var[2]}, d};
  };
  auto space = [&](const std::string& m, const std::string& f, std::vector<long> var,
                   std::vector<long> row, std::vector<long> col, long d) {
    e.pair = {MatrixGerm::parse(m, s), P(f, s)};
    e.weights = {std::move(var), std::move(row), std::move(col), d};
  };
  const auto& ix = id.indices;
  if ((id.family == Family::X9Star || id.family == Family::J10Star)) {
    if (!id.modulus) throw InvalidInput("bounding entry requires a modulus");
    if (!ix.empty()) throw InvalidInput("bounding entries take no indices");
  } else if (id.modulus) {
    throw InvalidInput("only bounding entries take a modulus");
  }

  switch (id.family) {
    case Family::A: {
      need_indices(id, 1);
      const int k = ix[0];
      if (k < 0) restriction(id, "k >= 0");
      plane("y", "x^" + std::to_string(k + 1), {1, 1, 1}, k + 1);
      e.expected_tau = k;
      break;
    }
    case Family::CPlane: {
      need_indices(id, 2);
      const int p = ix[0], q = ix[1];
      if (!(p >= q && q >= 1)) restriction(id, "p >= q >= 1");
      const long l = std::lcm(p, q);
      plane("x*y", "x^" + std::to_string(p) + " + y^" + std::to_string(q), {l / p, l / q, 1}, l);
      e.expected_tau = p + q;
      break;
    }
    case Family::B: {
      need_indices(id, 1);
      const int k = ix[0];
      if (k < 3) restriction(id, "k >= 3");
      plane("x^2 + y^" + std::to_string(k), "y", {k, 2, 1}, 2);
      e.expected_tau = k;
      break;
    }
    case Family::F: {
      need_indices(id, 1);
      const int r = ix[0];
      if (r < 4) restriction(id, "subscript >= 4");
      if (r % 2 == 1) {
        const int k = (r - 1) / 2;
        plane("x^2 + y^3", "y^" + std::to_string(k), {3, 2, 1}, 2 * k);
      } else {
        const int k = (r - 4) / 2;
        plane("x^2 + y^3", "x*y^" + std::to_string(k), {3, 2, 1}, 3 + 2 * k);
      }
      e.expected_tau = r;
      break;
    }
    case Family::X9Star: {
      plane("x^2 + y^4", "x + " + fsc::to_string(*id.modulus) + "*y^2", {2, 1, 1}, 2);
      e.expected_tau = 6;
      break;
    }
    case Family::J10Star: {
      plane("x^3 + y^3", "x + " + fsc::to_string(*id.modulus) + "*y", {1, 1, 1}, 1);
      e.expected_tau = 6;
      break;
    }
    case Family::CSpace: {
      need_indices(id, 3);
      const int p = ix[0], q = ix[1], r = ix[2];
      if (!(p >= q && q >= r && r >= 1)) restriction(id, "p >= q >= r >= 1");
      const long l = std::lcm(std::lcm(p, q), r);
      const long wx = l / p, wy = l / q, wz = l / r;
      space("x, y, 0; 0, y, z",
            "x^" + std::to_string(p) + " + y^" + std::to_string(q) + " + z^" + std::to_string(r),
            {wx, wy, wz}, {0, 0}, {wx, wy, wz}, l);
      e.expected_tau = p + q + r + 1;
      break;
    }
    case Family::FDot: {
      need_indices(id, 1);
      const int r = ix[0];
      if (r < 4) restriction(id, "subscript >= 4");
      long wz = 0;
      std::string f;
      if (r % 2 == 0) {
        const int k = (r - 2) / 2;
        wz = 2 * k;
        f = "z + y^" + std::to_string(k);
      } else {
        const int k = (r - 5) / 2;
        wz = 3 + 2 * k;
        f = "z + x*y^" + std::to_string(k);
      }
      space("x, y, 0; y^2, x, z", f, {3, 2, wz}, {0, 1}, {3, 2, wz - 1}, wz);
      e.expected_tau = r;
      break;
    }
    case Family::ECheck: {
      need_indices(id, 1);
      switch (ix[0]) {
        case 6: space("x, y, z; z^2, x, y", "z", {5, 4, 3}, {0, 1}, {5, 4, 3}, 3); break;
        case 7: space("x, y, z; y*z, x, y", "z", {4, 3, 2}, {0, 1}, {4, 3, 2}, 2); break;
        case 8: space("x, y, z; z^3, x, y", "z", {7, 5, 3}, {0, 2}, {7, 5, 3}, 3); break;
        default: restriction(id, "subscript in {6, 7, 8}");
      }
      e.expected_tau = ix[0];
      break;
    }
  }
  return e;
}

std::vector<EntryId> catalog_range(const RangeConfig& cfg) {
  std::vector<EntryId> out;
  auto add = [&](Family f, std::vector<int> ix, std::optional<Rational> mod = std::nullopt) {
    out.push_back({f, std::move(ix), std::move(mod)});
  };
  for (int k = 1; k <= cfg.a_max; ++k) add(Family::A, {k});
  for (int k = 3; k <= cfg.b_max; ++k) add(Family::B, {k});
  for (int p = 1; p < cfg.c_plane_sum_max; ++p) {
    for (int q = 1; q <= p && p + q <= cfg.c_plane_sum_max; ++q) add(Family::CPlane, {p, q});
  }
  for (int r = 4; r <= cfg.f_max; ++r) add(Family::F, {r});
  for (int p = 1; p <= cfg.c_space_max; ++p) {
    for (int q = 1; q <= p; ++q) {
      for (int r = 1; r <= q; ++r) add(Family::CSpace, {p, q, r});
    }
  }
  for (int r = 4; r <= cfg.fdot_max; ++r) add(Family::FDot, {r});
  for (int k = 6; k <= 8; ++k) add(Family::ECheck, {k});
  for (const auto& m : cfg.moduli) add(Family::X9Star, {}, m);
  for (const auto& m : cfg.moduli) add(Family::J10Star, {}, m);
  if (cfg.max_tau > 0) {
    std::erase_if(out, [&](const EntryId& id) { return instantiate(id).expected_tau > cfg.max_tau; });
  }
  return out;
}

std::vector<EntryId> adjacencies(const EntryId& id) {
  std::vector<EntryId> out;
  const auto& ix = id.indices;
  auto add = [&](Family f, std::vector<int> v) { out.push_back({f, std::move(v), std::nullopt}); };
  // B_2 = C_{1,1} and F_3 = B_3.
  auto add_b = [&](int k) {
    if (k == 2) {
      add(Family::CPlane, {1, 1});
    } else if (k >= 3) {
      add(Family::B, {k});
    }
  };
  auto add_f = [&](int r) {
    if (r == 3) {
      add(Family::B, {3});
    } else if (r >= 4) {
      add(Family::F, {r});
    }
  };
  switch (id.family) {
    case Family::A:
      if (ix[0] >= 1) add(Family::A, {ix[0] - 1});
      break;
    case Family::CPlane: {
      const int p = ix[0], q = ix[1];
      if (p - 1 >= q) add(Family::CPlane, {p - 1, q});
      if (q - 1 >= 1) add(Family::CPlane, {p, q - 1});
      add(Family::A, {p + q - 1});
      break;
    }
    case Family::B: add_b(ix[0] - 1); break;
    case Family::F: {
      const int r = ix[0];
      add_f(r - 1);
      for (int p = r - 2; p >= 1; --p) {
        const int q = r - 1 - p;
        if (q >= 1 && p >= q) add(Family::CPlane, {p, q});
      }
      break;
    }
    case Family::CSpace: {
      const int p = ix[0], q = ix[1], r = ix[2];
      if (p - 1 >= q) add(Family::CSpace, {p - 1, q, r});
      if (q - 1 >= r) add(Family::CSpace, {p, q - 1, r});
      if (r - 1 >= 1) add(Family::CSpace, {p, q, r - 1});
      add(Family::CPlane, {p, q});
      break;
    }
    case Family::FDot: {
      const int r = ix[0];
      if (r - 1 >= 4) add(Family::FDot, {r - 1});
      add_f(r - 1);
      for (int p = r - 4; p >= 1; --p) {
        const int q = r - 3 - p;
        if (q >= 1 && p >= q) add(Family::CSpace, {p, q, 1});
      }
      break;
    }
    case Family::ECheck:
      if (ix[0] > 6) add(Family::ECheck, {ix[0] - 1});
      if (ix[0] == 6) add(Family::FDot, {5});
      break;
    case Family::X9Star:
      add(Family::B, {4});
      add(Family::F, {4});
      add(Family::CPlane, {3, 1});
      break;
    case Family::J10Star:
      add(Family::B, {4});
      add(Family::F, {4});
      break;
  }
  return out;
}

CurveFunctionPair ParametricPair::at(std::span<const Rational> values) const {
  if (values.size() != params.size()) throw InvalidInput("parameter count mismatch");
  auto subst = [&](Polynomial p) {
    for (std::size_t i = 0; i < values.size(); ++i) p = p.substitute(param_var(i), values[i]);
    return p.in_ring(space_ring());
  };
  std::vector<Polynomial> entries;
  for (const auto& e : matrix.entries()) entries.push_back(subst(e));
  return {MatrixGerm(matrix.rows(), std::move(entries)), subst(function)};
}

ParametricPair printed_miniversal(const EntryId& id, bool truncated) {
  ParametricPair d;
  std::vector<std::string> names = {"x", "y", "z"};
  std::vector<std::string> fterms;
  std::vector<long> weights;
  std::vector<std::string> params;
  auto param = [&](const std::string& name, long w) {
    params.push_back(name);
    weights.push_back(w);
  };
  std::string matrix;
  if (id.family == Family::A) {
    need_indices(id, 1);
    const int k = id.indices[0];
    if (k < 1) restriction(id, "k >= 1");
    matrix = "y, z";
    if (!truncated) param("lam0", k + 1);
    for (int i = 1; i < k; ++i) param("lam" + std::to_string(i), k + 1 - i);
    fterms.push_back("x^" + std::to_string(k + 1));
    for (int i = 1; i < k; ++i) {
      fterms.push_back("lam" + std::to_string(i) + "*x^" + std::to_string(i));
    }
  } else if (id.family == Family::CSpace) {
    const CatalogEntry e = instantiate(id);
    const int p = id.indices[0], q = id.indices[1], r = id.indices[2];
    const long wx = e.weights.var[0], wy = e.weights.var[1], wz = e.weights.var[2];
    matrix = "x, y, alpha; beta, y + gamma, z";
    if (!truncated) param("lam0", e.weights.d);
    param("alpha", wz);
    param("beta", wx);
    param("gamma", wy);
    const std::array<std::pair<int, long>, 3> blocks = {{{p, wx}, {q, wy}, {r, wz}}};
    const char* vars[] = {"x", "y", "z"};
    for (std::size_t b = 0; b < 3; ++b) {
      const int deg = blocks[b].first;
      fterms.push_back(std::string(vars[b]) + "^" + std::to_string(deg));
      for (int j = 1; j < deg; ++j) {
        const std::string name = "lam" + std::to_string(b + 1) + "_" + std::to_string(j);
        param(name, j * blocks[b].second);
        fterms.push_back(name + "*" + vars[b] + "^" + std::to_string(deg - j));
      }
    }
  } else {
    throw InvalidInput("no printed deformation for " + id.to_string());
  }
  if (!truncated) fterms.push_back("lam0");
  for (const auto& n : params) names.push_back(n);
  d.ring = make_ring(names);
  d.matrix = MatrixGerm::parse(matrix, d.ring);
  std::string f;
  for (std::size_t i = 0; i < fterms.size(); ++i) f += (i > 0 ? " + " : "") + fterms[i];
  d.function = parse_polynomial(f, d.ring);
  d.params = std::move(params);
  d.param_weights = std::move(weights);
  if (!truncated) d.constant_param = 0;
  return d;
}

}  // namespace fsc
