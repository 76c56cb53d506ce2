#include "checks.hpp"

#include <algorithm>
#include <set>

#include "fsc/deform_solver.hpp"
#include "fsc/ll_map.hpp"
#include "fsc/random.hpp"

namespace fsc::cli {

namespace {

Polynomial random_poly(const RingPtr& ring, RationalSampler& rs, unsigned lo, unsigned hi, int terms) {
  Polynomial p(ring);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    const unsigned deg = static_cast<unsigned>(rs.integer(lo, hi));
    for (unsigned k = 0; k < deg; ++k) ++m.exp[rs.integer(0, static_cast<long>(ring->size()) - 1)];
    p += Polynomial::term(ring, m, rs.nonzero());
  }
  return p;
}

Polynomial linear_form(const RingPtr& ring, RationalSampler& rs) {
  Polynomial p(ring);
  for (std::size_t v = 0; v < ring->size(); ++v) {
    p += Polynomial::constant(ring, Rational(rs.integer(-3, 3))) * Polynomial::variable(ring, v);
  }
  return p;
}

// Square matrix, invertible at the origin, with linear tails.
PolyMatrix random_unit_matrix(const RingPtr& ring, std::size_t n, RationalSampler& rs) {
  while (true) {
    PolyMatrix m(n, std::vector<Polynomial>(n, Polynomial(ring)));
    QMatrix at0(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        at0[i][j] = Rational(rs.integer(-2, 2));
        m[i][j] = Polynomial::constant(ring, at0[i][j]) + linear_form(ring, rs);
      }
    }
    if (determinant(at0) != 0) return m;
  }
}

long weighted_degree(const Monomial& m, std::span<const long> w) {
  long d = 0;
  for (std::size_t i = 0; i < w.size(); ++i) d += w[i] * static_cast<long>(m.exp[i]);
  return d;
}

Json values_json(std::span<const Rational> v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(rational_text(q));
  return out;
}

std::string count_text(std::size_t good, std::size_t total) {
  return std::to_string(good) + "/" + std::to_string(total);
}

}  // namespace

Json to_json(const Check& c) {
  Json j;
  j["name"] = c.name;
  j["status"] = c.pass ? "pass" : "fail";
  j["summary"] = c.summary;
  j["details"] = c.details;
  return j;
}

std::string rational_text(const Rational& q) { return fsc::to_string(q); }

Json entry_json(const EntryId& id) {
  Json j;
  j["family"] = family_name(id.family);
  j["indices"] = id.indices;
  if (id.modulus) j["modulus"] = rational_text(*id.modulus);
  return j;
}

Json catalog_record(const CatalogEntry& e) {
  Json j = entry_json(e.id);
  j["tau"] = e.expected_tau;
  j["matrix"] = e.pair.matrix.to_string();
  j["function"] = e.pair.function.to_string();
  return j;
}

Json conjecture_json(const ConjectureReport& r) {
  Json j = entry_json(r.id);
  j["tau"] = r.tau;
  j["mu"] = r.mu ? Json(*r.mu) : Json(nullptr);
  j["status"] = r.status;
  return j;
}

Check check_tau_calibration(const RangeConfig& range) {
  Check c{"tau calibration"};
  Json bad = Json::array();
  const auto ids = catalog_range(range);
  for (const auto& id : ids) {
    const CatalogEntry e = instantiate(id);
    Json row;
    row["entry"] = id.to_string();
    row["expected"] = e.expected_tau;
    try {
      const int tau = tjurina(e.pair);
      if (tau == e.expected_tau) continue;
      row["computed"] = tau;
    } catch (const std::exception& ex) {
      row["error"] = ex.what();
    }
    bad.push_back(row);
  }
  c.pass = bad.empty();
  c.summary = count_text(ids.size() - bad.size(), ids.size()) + " entries match";
  c.details["mismatches"] = bad;
  return c;
}

Check check_conjecture(const RangeConfig& range, std::span<const std::uint64_t> seeds) {
  Check c{"milnor equals tjurina"};
  Json bad = Json::array();
  Json skipped = Json::array();
  std::size_t equal = 0;
  const auto ids = catalog_range(range);
  for (const auto& id : ids) {
    const CatalogEntry e = instantiate(id);
    const bool out_of_scope = id.family == Family::FDot || id.family == Family::ECheck;
    bool all_equal = true;
    bool all_skipped = true;
    for (const auto seed : seeds) {
      GenericityConfig cfg;
      cfg.seed = seed;
      const ConjectureReport rep = conjecture_check(e, cfg);
      all_skipped = all_skipped && rep.status == "skipped";
      if (rep.status == "skipped" && out_of_scope) continue;
      if (!rep.equal()) {
        all_equal = false;
        Json row = conjecture_json(rep);
        row["seed"] = seed;
        bad.push_back(row);
      }
    }
    if (all_skipped && out_of_scope) {
      skipped.push_back(id.to_string());
    } else if (all_equal) {
      ++equal;
    }
  }
  c.pass = bad.empty();
  c.summary = std::to_string(equal) + " entries equal on " + std::to_string(seeds.size()) +
              " seeds, " + std::to_string(skipped.size()) + " skipped, " +
              std::to_string(bad.size()) + " failures";
  c.details["seeds"] = std::vector<std::uint64_t>(seeds.begin(), seeds.end());
  c.details["skipped"] = skipped;
  c.details["failures"] = bad;
  return c;
}

Check check_ll_table(const RangeConfig& range) {
  Check c{"ll degree table"};
  Json bad = Json::array();
  std::size_t total = 0;
  for (const auto& id : catalog_range(range)) {
    const CatalogEntry e = instantiate(id);
    if (e.is_bounding()) continue;
    ++total;
    Json row;
    row["entry"] = id.to_string();
    try {
      const Integer deg = ll_degree(weight_profile(e));
      const auto printed = printed_ll_degree(id);
      row["computed"] = deg.get_str();
      if (!printed) {
        row["printed"] = nullptr;
      } else if (Rational(deg) == *printed) {
        continue;
      } else {
        row["printed"] = rational_text(*printed);
      }
    } catch (const std::exception& ex) {
      row["error"] = ex.what();
    }
    bad.push_back(row);
  }
  c.pass = bad.empty();
  c.summary = count_text(total - bad.size(), total) + " entries agree with the closed forms";
  c.details["mismatches"] = bad;
  return c;
}

Check check_discriminant(std::uint64_t seed, std::size_t points) {
  Check c{"discriminant free divisor"};
  Json rows = Json::array();
  bool pass = true;
  for (const char* name : {"A1", "A2", "A3", "C:1,1,1"}) {
    const EntryId id = EntryId::parse(name);
    const VectorFieldMatrix v = discriminant_matrix(id);
    const ParametricPair def = printed_miniversal(id, false);
    bool decompositions = true;
    for (const auto& d : v.decompositions) decompositions = decompositions && verify_decomposition(def, d);
    const Polynomial power = Polynomial::variable(v.ring, 0).pow(static_cast<unsigned>(v.size()));
    const bool axis = axis_restriction(v) == power;
    const SampleResult s = sample_discriminant(id, points, seed);
    std::size_t exact_zero = 0;
    std::set<std::vector<Rational>> distinct;
    Json misses = Json::array();
    for (const auto& pt : s.points) {
      distinct.insert(pt.values);
      if (pt.exact && vanishes_at(v.det, pt).exact_zero) {
        ++exact_zero;
      } else if (misses.size() < 5) {
        misses.push_back(values_json(pt.values));
      }
    }
    const bool ok = decompositions && axis && exact_zero >= points;
    pass = pass && ok;
    Json row;
    row["entry"] = id.to_string();
    row["det"] = v.det.to_string();
    row["axis_restriction"] = axis_restriction(v).to_string();
    row["decompositions_verified"] = decompositions;
    row["sampled"] = s.points.size();
    row["distinct"] = distinct.size();
    row["exact_zero"] = exact_zero;
    if (!misses.empty()) row["nonvanishing"] = misses;
    if (!s.note.empty()) row["note"] = s.note;
    rows.push_back(row);
  }
  c.pass = pass;
  c.summary = pass ? "det V restricts to lambda_0^tau and vanishes on every sample"
                   : "identity or vanishing failed";
  c.details["entries"] = rows;
  return c;
}

Check check_bifurcation(std::uint64_t seed, std::size_t points) {
  Check c{"bifurcation diagram of C_{1,1,1}"};
  const EntryId id = EntryId::parse("C:1,1,1");
  const VectorFieldMatrix w = bifurcation_matrix(id);
  const ParametricPair def = printed_miniversal(id, true);
  bool decompositions = true;
  for (const auto& d : w.decompositions) decompositions = decompositions && verify_decomposition(def, d);
  const bool rows_ok = w.row_degrees == std::vector<long>{1, 2, 3};
  std::set<long> degrees;
  for (const auto& t : w.det.terms()) degrees.insert(weighted_degree(t.mono, w.param_weights));
  const bool quasi_degree = degrees == std::set<long>{6};
  const bool reduced = is_reduced(w.det, seed);
  const bool euler = euler_in_span(w);
  const bool tangent = rows_tangent(w);

  bool components_ok = true;
  Json comps = Json::array();
  for (SigmaComponent sc : {SigmaComponent::Nonsmooth, SigmaComponent::Degenerate, SigmaComponent::Level}) {
    const SampleResult s = sample_sigma(id, points, seed, sc);
    std::size_t vanish = 0, exact = 0;
    Json misses = Json::array();
    for (const auto& pt : s.points) {
      if (pt.exact) ++exact;
      const VanishingCheck vc = vanishes_at(w.det, pt);
      if (vc.ok()) {
        ++vanish;
      } else if (misses.size() < 5) {
        misses.push_back(values_json(pt.values));
      }
    }
    const bool ok = vanish >= points;
    components_ok = components_ok && ok;
    Json row;
    row["component"] = component_name(sc);
    row["sampled"] = s.points.size();
    row["exact"] = exact;
    row["vanishing"] = vanish;
    row["empty"] = s.empty;
    if (!s.note.empty()) row["note"] = s.note;
    if (!misses.empty()) row["nonvanishing"] = misses;
    comps.push_back(row);
  }

  c.pass = decompositions && rows_ok && quasi_degree && reduced && euler && components_ok;
  c.summary = std::string("rows ") + (rows_ok ? "ok" : "wrong") + ", det " +
              (quasi_degree && reduced ? "reduced of degree 6" : "wrong") + ", euler " +
              (euler ? "in span" : "missing") + ", components " + (components_ok ? "ok" : "short");
  c.details["det"] = w.det.to_string();
  c.details["row_degrees"] = w.row_degrees;
  c.details["decompositions_verified"] = decompositions;
  c.details["quasi_degrees"] = std::vector<long>(degrees.begin(), degrees.end());
  c.details["reduced"] = reduced;
  c.details["euler_in_span"] = euler;
  c.details["rows_tangent"] = tangent;
  c.details["components"] = comps;
  return c;
}

Check check_covering(std::uint64_t seed, const CoveringConfig& cfg,
                     std::vector<std::array<int, 3>> entries) {
  Check c{"covering property"};
  if (entries.empty()) entries = {{1, 1, 1}, {2, 1, 1}, {2, 2, 1}, {2, 2, 2}};
  Json rows = Json::array();
  bool pass = true;
  bool jac_all = true, literal_all = true, laplace_all = true, fiber_all = true;
  for (const auto& [p, q, r] : entries) {
    const EntryId id{Family::CSpace, {p, q, r}, std::nullopt};
    const std::size_t nparams = printed_miniversal(id, false).params.size();
    Json row;
    row["entry"] = id.to_string();

    RationalSampler rs(mix_seed(seed, "covering:off:" + id.to_string()), 30);
    int off = 0, off_ok = 0, redraws = 0;
    Json off_bad = Json::array();
    while (off < cfg.off_sigma && redraws < 10 * cfg.off_sigma) {
      std::vector<Rational> v(nparams);
      for (std::size_t i = 0; i < nparams; ++i) v[i] = (i >= 1 && i <= 3) ? rs.nonzero() : rs.any();
      bool on_sigma = false;
      try {
        on_sigma = ll_point(id, v).in_xi;
      } catch (const InvalidInput&) {
        on_sigma = true;
      }
      if (on_sigma) {
        ++redraws;
        continue;
      }
      ++off;
      const JacobianReport jr = ll_jacobian_check(id, v);
      if (jr.nonsingular) {
        ++off_ok;
      } else if (off_bad.size() < 5) {
        off_bad.push_back({{"values", values_json(v)}, {"reason", jr.reason}});
      }
    }

    RationalSampler rl(mix_seed(seed, "covering:on:" + id.to_string()), 30);
    const SampleResult s = sample_sigma(id, static_cast<std::size_t>(cfg.on_sigma), seed,
                                        SigmaComponent::Degenerate);
    int on = 0, on_ok = 0;
    Json on_bad = Json::array();
    for (const auto& pt : s.points) {
      if (!pt.exact || on >= cfg.on_sigma) continue;
      std::vector<Rational> v = pt.values;
      v.insert(v.begin(), rl.any());
      ++on;
      const JacobianReport jr = ll_jacobian_check(id, v);
      if (!jr.nonsingular) {
        ++on_ok;
      } else if (on_bad.size() < 5) {
        on_bad.push_back(values_json(v));
      }
    }

    const ExtendedMatrixReport ext = extended_matrix_check(p, q, r, seed, cfg.extended_draws);
    const FiberReport fib = ll_fiber_origin_check(p, q, r, seed, cfg.fiber_draws);

    const bool ok = off == cfg.off_sigma && off_ok == off && on == cfg.on_sigma && on_ok == on &&
                    ext.literal_relation && fib.ok();
    pass = pass && ok;
    jac_all = jac_all && off == cfg.off_sigma && off_ok == off && on == cfg.on_sigma && on_ok == on;
    literal_all = literal_all && ext.literal_relation;
    laplace_all = laplace_all && ext.laplace_relation && ext.extended_nonzero;
    fiber_all = fiber_all && fib.ok();
    row["off_sigma_nonsingular"] = count_text(static_cast<std::size_t>(off_ok), static_cast<std::size_t>(off));
    row["on_sigma_singular"] = count_text(static_cast<std::size_t>(on_ok), static_cast<std::size_t>(on));
    if (!off_bad.empty()) row["off_sigma_failures"] = off_bad;
    if (!on_bad.empty()) row["on_sigma_failures"] = on_bad;
    row["extended_literal_relation"] = ext.literal_relation;
    row["extended_laplace_relation"] = ext.laplace_relation;
    row["extended_nonzero"] = ext.extended_nonzero;
    if (!ext.detail.empty()) row["extended_detail"] = ext.detail;
    row["fiber_smooth_degree"] = fib.smooth_degree_ok;
    row["fiber_node_degree"] = fib.node_degree_ok;
    row["fiber_lines_degree"] = fib.lines_degree_ok;
    row["fiber_draws"] = fib.draws;
    row["fiber_counterexamples"] = fib.counterexamples;
    rows.push_back(row);
  }
  c.pass = pass;
  auto word = [](bool b) { return b ? "ok" : "fails"; };
  c.summary = std::string("jacobian ") + word(jac_all) + ", extended literal relation " + word(literal_all) +
              ", laplace relation " + word(laplace_all) + ", fiber " + word(fiber_all);
  c.details["entries"] = rows;
  return c;
}

EquivalenceWitness random_witness(const CurveFunctionPair& pair, std::uint64_t seed) {
  RationalSampler rs(seed, 6);
  const RingPtr& ring = pair.ring();
  const std::size_t n = pair.matrix.rows();
  EquivalenceWitness w;
  w.a = random_unit_matrix(ring, n, rs);
  w.b = random_unit_matrix(ring, n + 1, rs);
  while (true) {
    QMatrix lin(3, std::vector<Rational>(3));
    for (auto& row : lin) {
      for (auto& x : row) x = Rational(rs.integer(-2, 2));
    }
    if (determinant(lin) == 0) continue;
    w.h.clear();
    for (std::size_t i = 0; i < 3; ++i) {
      Polynomial hi(ring);
      for (std::size_t j = 0; j < 3; ++j) {
        hi += Polynomial::constant(ring, lin[i][j]) * Polynomial::variable(ring, j);
      }
      Monomial quad;
      ++quad.exp[rs.integer(0, 2)];
      ++quad.exp[rs.integer(0, 2)];
      hi += Polynomial::term(ring, quad, Rational(rs.integer(1, 3)));
      w.h.push_back(hi);
    }
    break;
  }
  w.g = Polynomial(ring);
  for (const auto& minor : maximal_minors(pair.matrix)) {
    w.g += (Polynomial::constant(ring, Rational(rs.integer(-2, 2))) + linear_form(ring, rs)) * minor;
  }
  return w;
}

Check check_equivalence_invariance(const RangeConfig& range, std::uint64_t seed, int witnesses) {
  Check c{"tau invariance under equivalence"};
  Json bad = Json::array();
  std::size_t entries = 0;
  for (const auto& id : catalog_range(range)) {
    const CatalogEntry e = instantiate(id);
    ++entries;
    const int base = tjurina(e.pair);
    for (int k = 0; k < witnesses; ++k) {
      const EquivalenceWitness w =
          random_witness(e.pair, mix_seed(seed, "witness:" + id.to_string() + ":" + std::to_string(k)));
      const CurveFunctionPair moved = apply_equivalence(e.pair, w);
      Json row;
      try {
        const int tau = tjurina(moved);
        if (tau == base) continue;
        row["computed"] = tau;
      } catch (const std::exception& ex) {
        row["error"] = ex.what();
      }
      row["entry"] = id.to_string();
      row["witness"] = k;
      row["tau"] = base;
      row["matrix"] = moved.matrix.to_string();
      row["function"] = moved.function.to_string();
      bad.push_back(row);
    }
  }
  c.pass = bad.empty();
  c.summary = std::to_string(entries) + " entries x " + std::to_string(witnesses) + " witnesses, " +
              std::to_string(bad.size()) + " changed tau";
  c.details["failures"] = bad;
  return c;
}

Check check_standard_basis_properties(std::uint64_t seed) {
  Check c{"standard basis properties"};
  RationalSampler rs(mix_seed(seed, "standard-basis"), 12);
  Json bad = Json::array();
  auto fail = [&](const std::string& module, const std::string& what) {
    bad.push_back({{"module", module}, {"property", what}});
  };

  struct Case {
    std::string name;
    RingPtr ring;
    std::size_t rank;
    std::vector<ModuleElement> gens;
  };
  std::vector<Case> cases;
  for (const char* name : {"A3", "B4", "C:2,1", "C:1,1,1", "C:2,1,1", "E6"}) {
    const CatalogEntry e = instantiate(EntryId::parse(name));
    cases.push_back({std::string("tangent ") + name, e.pair.ring(), e.pair.module_rank(),
                     tangent_space(e.pair)});
  }
  const RingPtr xyz = space_ring();
  for (int k = 0; k < 3; ++k) {
    std::vector<ModuleElement> gens;
    for (std::size_t v = 0; v < 3; ++v) {
      const unsigned a = static_cast<unsigned>(rs.integer(2, 3));
      Polynomial g = Polynomial::term(xyz, unit_monomial(v, a), Rational(1));
      g += random_poly(xyz, rs, a + 1, a + 2, 2);
      gens.push_back(ModuleElement({g}));
    }
    cases.push_back({"random ideal " + std::to_string(k), xyz, 1, gens});
  }

  auto random_element = [&](const Case& cs, unsigned deg) {
    std::vector<Polynomial> comps;
    for (std::size_t i = 0; i < cs.rank; ++i) comps.push_back(random_poly(cs.ring, rs, 0, deg, 2));
    return ModuleElement(comps);
  };
  auto combination = [&](const Case& cs) {
    ModuleElement m(cs.ring, cs.rank);
    for (const auto& g : cs.gens) {
      if (rs.integer(0, 2) == 0) m += random_poly(cs.ring, rs, 0, 2, 2) * g;
    }
    return m;
  };

  for (const Case& cs : cases) {
    const StandardBasis sb = standard_basis_auto(cs.gens, cs.ring, cs.rank);
    const auto dim = sb.dimension();
    if (!dim) {
      fail(cs.name, "finite quotient");
      continue;
    }
    for (int k = 0; k < 5; ++k) {
      if (!normal_form(combination(cs), sb).is_zero()) fail(cs.name, "members reduce to zero");
      const ModuleElement nf = normal_form(random_element(cs, 3), sb);
      if (!(normal_form(nf, sb) == nf)) fail(cs.name, "normal form is idempotent");
    }
    std::vector<ModuleElement> shuffled = cs.gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rs.engine());
    if (quotient_dimension(shuffled, cs.ring, cs.rank) != dim) fail(cs.name, "permutation invariance");
    std::vector<ModuleElement> extended = cs.gens;
    for (int k = 0; k < 20; ++k) extended.push_back(combination(cs));
    if (quotient_dimension(extended, cs.ring, cs.rank) != dim) fail(cs.name, "redundant generators");
    ModuleOrder top;
    top.priority = ModulePriority::TermOverPosition;
    if (quotient_dimension(cs.gens, cs.ring, cs.rank, top) != dim) fail(cs.name, "module order choice");
  }

  for (int k = 0; k < 50; ++k) {
    const Polynomial a = random_poly(xyz, rs, 0, 4, 4);
    const Polynomial b = random_poly(xyz, rs, 0, 4, 4);
    if (!((a + b) - b == a)) fail("arithmetic", "sum round trip");
    if (!b.is_zero() && !((a * b).divide_exact(b) == a)) fail("arithmetic", "product round trip");
  }

  c.pass = bad.empty();
  c.summary = std::to_string(cases.size()) + " modules, " + std::to_string(bad.size()) + " violations";
  c.details["violations"] = bad;
  return c;
}

}  // namespace fsc::cli
