#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "checks.hpp"
#include "fsc/deform_solver.hpp"
#include "fsc/ll_map.hpp"

using namespace fsc;
using namespace fsc::cli;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::uint64_t seed = 0;
  bool json = false;
  int max_tau = 0;
  bool timing = false;
  std::string echo;
};

RangeConfig range_for(const Globals& g) {
  RangeConfig r;
  r.max_tau = g.max_tau;
  return r;
}

EntryId parse_entry(const std::string& text) {
  try {
    const EntryId id = EntryId::parse(text);
    instantiate(id);
    return id;
  } catch (const InvalidInput& e) {
    throw UsageError(e.what());
  }
}

std::string decimal(const Rational& q) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", q.get_d());
  return buf;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

/// Shared envelope of every command's output.
class Report {
public:
  Report(const Globals& g, std::string command) : g_(g), start_(std::chrono::steady_clock::now()) {
    j_["command"] = g.echo;
    j_["subcommand"] = std::move(command);
    j_["seed"] = g.seed;
    j_["results"] = Json::array();
  }

  void result(Json r) { j_["results"].push_back(std::move(r)); }
  void check(const Check& c) {
    if (!j_.contains("checks")) j_["checks"] = Json::array();
    j_["checks"].push_back(to_json(c));
    failed_ = failed_ || !c.pass;
    text_ << (c.pass ? "PASS  " : "FAIL  ") << c.name << ": " << c.summary << "\n";
  }
  void fail() { failed_ = true; }
  std::ostream& text() { return text_; }

  int emit() {
    j_["status"] = failed_ ? "fail" : "pass";
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    if (g_.timing) j_["elapsed_seconds"] = elapsed;
    if (g_.json) {
      std::cout << j_.dump(2) << "\n";
    } else {
      std::cout << "# " << g_.echo << "\n# seed " << g_.seed << "\n" << text_.str();
      std::cout << "status: " << (failed_ ? "fail" : "pass") << "\n";
      if (g_.timing) std::cout << "elapsed: " << elapsed << " s\n";
    }
    return failed_ ? kFail : kPass;
  }

private:
  const Globals& g_;
  std::chrono::steady_clock::time_point start_;
  Json j_;
  std::ostringstream text_;
  bool failed_ = false;
};

// ---------------------------------------------------------------------------

struct CatalogArgs {
  std::string action = "list";
  std::string entry;
  std::string family;
  int max = 0;
};

std::optional<Family> family_from(const std::string& name) {
  for (Family f : {Family::A, Family::B, Family::CPlane, Family::F, Family::CSpace, Family::FDot,
                   Family::ECheck, Family::X9Star, Family::J10Star}) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

int run_catalog(const Globals& g, const CatalogArgs& a) {
  Report rep(g, "catalog " + a.action);
  if (a.action == "list") {
    RangeConfig range = range_for(g);
    if (a.max > 0) {
      range.a_max = range.b_max = range.f_max = range.fdot_max = a.max;
      range.c_space_max = a.max;
      range.c_plane_sum_max = 2 * a.max;
    }
    std::optional<Family> fam;
    if (!a.family.empty()) {
      fam = family_from(a.family);
      if (!fam) throw UsageError("unknown family " + a.family);
    }
    for (const auto& id : catalog_range(range)) {
      if (fam && id.family != *fam) continue;
      if (a.max > 0 && !id.indices.empty() && id.family == Family::CPlane && id.indices[0] > a.max) continue;
      const CatalogEntry e = instantiate(id);
      rep.result(catalog_record(e));
      rep.text() << pad(id.to_string(), 10) << pad("tau " + std::to_string(e.expected_tau), 8)
                 << "[" << e.pair.matrix.to_string() << "]  f = " << e.pair.function.to_string() << "\n";
    }
    return rep.emit();
  }
  if (a.entry.empty()) throw UsageError("catalog " + a.action + " needs an entry");
  const EntryId id = parse_entry(a.entry);
  const CatalogEntry e = instantiate(id);
  Json adj = Json::array();
  for (const auto& t : adjacencies(id)) adj.push_back(t.to_string());
  if (a.action == "show") {
    Json r = catalog_record(e);
    r["label"] = id.label();
    r["adjacencies"] = adj;
    rep.result(r);
    rep.text() << id.label() << "\n  matrix   [" << e.pair.matrix.to_string() << "]\n  function "
               << e.pair.function.to_string() << "\n  tau      " << e.expected_tau << "\n";
  } else if (a.action == "adjacencies") {
    rep.result({{"entry", id.to_string()}, {"adjacencies", adj}});
    rep.text() << id.to_string() << " ->";
    for (const auto& t : adj) rep.text() << " " << t.get<std::string>();
    rep.text() << "\n";
  } else {
    throw UsageError("unknown catalog action " + a.action);
  }
  return rep.emit();
}

// ---------------------------------------------------------------------------

std::vector<EntryId> selected(const Globals& g, const std::vector<std::string>& entries) {
  if (entries.empty()) return catalog_range(range_for(g));
  std::vector<EntryId> out;
  for (const auto& s : entries) out.push_back(parse_entry(s));
  return out;
}

int run_invariant(const Globals& g, const std::string& which, const std::vector<std::string>& entries) {
  Report rep(g, which);
  GenericityConfig cfg;
  cfg.seed = g.seed;
  for (const auto& id : selected(g, entries)) {
    const CatalogEntry e = instantiate(id);
    ConjectureReport r;
    r.id = id;
    if (which == "tjurina") {
      try {
        r.tau = tjurina(e.pair);
        r.status = r.tau == e.expected_tau ? "ok" : "mismatch";
      } catch (const NotFinitelyDetermined& ex) {
        r.status = std::string("error: ") + ex.what();
      }
      if (r.status != "ok") rep.fail();
    } else {
      r = conjecture_check(e, cfg);
      const bool skip_ok = r.status == "skipped";
      if (!r.equal() && !skip_ok) rep.fail();
    }
    Json row = conjecture_json(r);
    if (which == "tjurina") row["expected"] = e.expected_tau;
    rep.result(row);
    rep.text() << pad(id.to_string(), 10) << pad("tau " + std::to_string(r.tau), 9)
               << pad("mu " + (r.mu ? std::to_string(*r.mu) : std::string("-")), 8) << r.status << "\n";
  }
  return rep.emit();
}

// ---------------------------------------------------------------------------

int run_ll_degree(const Globals& g, const std::vector<std::string>& entries) {
  Report rep(g, "ll-degree");
  rep.text() << pad("entry", 10) << pad("tau", 5) << pad("degree", 22) << pad("printed", 22) << "\n";
  for (const auto& id : selected(g, entries)) {
    const CatalogEntry e = instantiate(id);
    if (e.is_bounding()) continue;
    Json row = entry_json(id);
    row["label"] = id.label();
    const WeightProfile wp = weight_profile(e);
    const Integer deg = ll_degree(wp);
    const auto printed = printed_ll_degree(id);
    row["tau"] = wp.tau;
    row["d"] = wp.d;
    row["variable_weights"] = wp.var;
    row["parameter_weights"] = wp.truncated();
    row["degree"] = deg.get_str();
    row["printed"] = printed ? Json(rational_text(*printed)) : Json(nullptr);
    const bool ok = printed && Rational(deg) == *printed;
    row["status"] = ok ? "equal" : "mismatch";
    if (!ok) rep.fail();
    rep.result(row);
    rep.text() << pad(id.to_string(), 10) << pad(std::to_string(wp.tau), 5) << pad(deg.get_str(), 22)
               << pad(printed ? rational_text(*printed) : "-", 22) << (ok ? "" : "MISMATCH") << "\n";
  }
  return rep.emit();
}

int run_ll_check(const Globals& g, const std::string& entry, const CoveringConfig& cfg) {
  const EntryId id = parse_entry(entry);
  if (id.family != Family::CSpace) throw UsageError("ll-check takes a C_{p,q,r} entry");
  Report rep(g, "ll-check");
  const Check c = check_covering(g.seed, cfg, {{id.indices[0], id.indices[1], id.indices[2]}});
  rep.check(c);
  for (const auto& row : c.details["entries"]) {
    for (const auto& [k, v] : row.items()) rep.text() << "  " << pad(k, 28) << v.dump() << "\n";
  }
  return rep.emit();
}

// ---------------------------------------------------------------------------

int run_free_divisor(const Globals& g, const std::string& entry, const std::string& mode) {
  const EntryId id = parse_entry(entry);
  if (mode != "sigma" && mode != "delta") throw UsageError("mode must be sigma or delta");
  if (!(id.family == Family::A || id.family == Family::CSpace)) {
    throw UsageError("free-divisor supports A_k and C_{p,q,r}");
  }
  Report rep(g, "free-divisor");
  const bool sigma = mode == "sigma";
  const VectorFieldMatrix v = sigma ? bifurcation_matrix(id) : discriminant_matrix(id);
  const ParametricPair def = printed_miniversal(id, sigma);
  bool decompositions = true;
  for (const auto& d : v.decompositions) decompositions = decompositions && verify_decomposition(def, d);
  Json r = entry_json(id);
  r["mode"] = mode;
  r["parameters"] = def.params;
  r["parameter_weights"] = v.param_weights;
  Json rows = Json::array();
  for (const auto& row : v.entries) {
    Json jr = Json::array();
    for (const auto& p : row) jr.push_back(p.to_string());
    rows.push_back(jr);
  }
  r["entries"] = rows;
  r["row_degrees"] = v.row_degrees;
  r["det"] = v.det.to_string();
  r["scale"] = rational_text(v.scale);
  Json ver;
  ver["decompositions_verified"] = decompositions;
  ver["rows_tangent"] = rows_tangent(v);
  ver["euler_in_span"] = euler_in_span(v);
  ver["reduced"] = is_reduced(v.det, g.seed);
  if (!sigma) {
    const Polynomial power = Polynomial::variable(v.ring, 0).pow(static_cast<unsigned>(v.size()));
    ver["axis_restriction"] = axis_restriction(v).to_string();
    ver["axis_is_power"] = axis_restriction(v) == power;
  }
  for (const auto& [k, val] : ver.items()) {
    if (val.is_boolean() && !val.get<bool>()) rep.fail();
  }
  r["verification"] = ver;
  rep.result(r);
  rep.text() << id.label() << " " << mode << " matrix, parameters";
  for (const auto& p : def.params) rep.text() << " " << p;
  rep.text() << "\n";
  for (std::size_t i = 0; i < v.size(); ++i) {
    rep.text() << "  row " << i << " (degree " << v.row_degrees[i] << "):";
    for (const auto& p : v.entries[i]) rep.text() << "  " << p.to_string();
    rep.text() << "\n";
  }
  rep.text() << "  det = " << v.det.to_string() << "\n";
  for (const auto& [k, val] : ver.items()) rep.text() << "  " << pad(k, 24) << val.dump() << "\n";
  return rep.emit();
}

// ---------------------------------------------------------------------------

std::vector<SigmaComponent> components_from(const std::string& name) {
  if (name == "all") return {SigmaComponent::Nonsmooth, SigmaComponent::Degenerate, SigmaComponent::Level};
  for (SigmaComponent c : {SigmaComponent::Nonsmooth, SigmaComponent::Degenerate, SigmaComponent::Level}) {
    if (component_name(c) == name) return {c};
  }
  throw UsageError("unknown component " + name);
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  return out;
}

struct SampleArgs {
  std::string entry = "C:1,1,1";
  std::string component = "all";
  std::size_t n = 100;
  bool real = false;
  std::string out;
};

int run_sample_sigma(const Globals& g, const SampleArgs& a) {
  const EntryId id = parse_entry(a.entry);
  const auto comps = components_from(a.component);
  Report rep(g, "sample-sigma");
  const ParametricPair def = printed_miniversal(id, true);
  const VectorFieldMatrix w = bifurcation_matrix(id);
  std::ostringstream csv;
  csv << "component";
  for (std::size_t i = 1; i <= def.params.size(); ++i) csv << ",l" << i;
  csv << "\n";
  for (SigmaComponent c : comps) {
    const SampleResult s = sample_sigma(id, a.n, g.seed, c);
    std::size_t vanish = 0, exact = 0;
    Json pts = Json::array();
    for (const auto& pt : s.points) {
      if (pt.exact) ++exact;
      if (vanishes_at(w.det, pt).ok()) ++vanish;
      csv << component_name(c);
      Json jp = Json::array();
      for (const auto& q : pt.values) {
        const std::string t = a.real || !pt.exact ? decimal(q) : rational_text(q);
        csv << "," << t;
        jp.push_back(t);
      }
      csv << "\n";
      if (a.out.empty()) pts.push_back(jp);
    }
    if (vanish != s.points.size()) rep.fail();
    Json r;
    r["component"] = component_name(c);
    r["points"] = s.points.size();
    r["exact"] = exact;
    r["on_det_w"] = vanish;
    r["empty"] = s.empty;
    if (!s.note.empty()) r["note"] = s.note;
    if (a.out.empty()) r["values"] = pts;
    rep.result(r);
    rep.text() << pad(component_name(c), 12) << s.points.size() << " points, " << exact << " exact, "
               << vanish << " on det W = 0" << (s.note.empty() ? "" : "  (" + s.note + ")") << "\n";
  }
  if (!a.out.empty()) {
    open_out(a.out) << csv.str();
    rep.text() << "wrote " << a.out << "\n";
  } else if (!g.json) {
    rep.text() << csv.str();
  }
  return rep.emit();
}

int run_emit_figure(const Globals& g, const std::string& path, std::size_t n) {
  Report rep(g, "emit-figure");
  const EntryId id = EntryId::parse("C:1,1,1");
  const VectorFieldMatrix w = bifurcation_matrix(id);
  std::ostream* sink = &std::cout;
  std::ofstream file;
  std::ostringstream buffer;
  if (!path.empty()) {
    file = open_out(path);
    sink = &file;
  } else {
    sink = &buffer;
  }
  *sink << "component,l1,l2,l3\n";
  std::set<std::size_t> planes;
  bool members = true;
  for (SigmaComponent c : {SigmaComponent::Nonsmooth, SigmaComponent::Degenerate, SigmaComponent::Level}) {
    const SampleResult s = n == 0 ? SampleResult{} : sample_sigma(id, n, g.seed, c);
    std::size_t written = 0;
    for (const auto& pt : s.points) {
      // Projectivize onto l1 + l2 + l3 = 1; det W is homogeneous.
      Rational sum = 0;
      for (const auto& q : pt.values) sum += q;
      if (sum == 0) continue;
      ParameterPoint chart = pt;
      for (auto& q : chart.values) q /= sum;
      if (!vanishes_at(w.det, chart).ok()) members = false;
      if (c == SigmaComponent::Nonsmooth) {
        for (std::size_t i = 0; i < 3; ++i) {
          if (chart.values[i] == 0) planes.insert(i);
        }
      }
      *sink << component_name(c);
      for (const auto& q : chart.values) *sink << "," << decimal(q);
      *sink << "\n";
      ++written;
    }
    rep.result({{"component", component_name(c)}, {"points", written}, {"empty", s.empty}});
    rep.text() << pad(component_name(c), 12) << written << " points\n";
  }
  if (!members) rep.fail();
  Json summary;
  summary["nonsmooth_planes"] = planes.size();
  summary["all_on_det_w"] = members;
  summary["out"] = path.empty() ? Json(nullptr) : Json(path);
  rep.result(summary);
  rep.text() << "nonsmooth planes " << planes.size() << ", all points on det W = 0: "
             << (members ? "yes" : "no") << "\n";
  if (path.empty()) rep.text() << buffer.str();
  return rep.emit();
}

int run_verify_all(const Globals& g) {
  Report rep(g, "verify-all");
  const RangeConfig range = range_for(g);
  const std::uint64_t seeds[] = {g.seed};
  rep.check(check_tau_calibration(range));
  rep.check(check_conjecture(range, seeds));
  rep.check(check_ll_table(range));
  rep.check(check_discriminant(g.seed));
  rep.check(check_bifurcation(g.seed));
  return rep.emit();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Functions on determinantal space curves: invariants, deformations, LL map"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "seed for every random draw")->capture_default_str();
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_option("--max-tau", g.max_tau, "drop catalog entries with larger tau (0 keeps all)");
  app.add_flag("--timing", g.timing, "append elapsed time (output is then not reproducible)");

  CatalogArgs cat;
  auto* c_cat = app.add_subcommand("catalog", "list, show, or follow adjacencies of catalog entries");
  c_cat->add_option("action", cat.action, "list | show | adjacencies")->capture_default_str();
  c_cat->add_option("entry", cat.entry, "entry such as C:1,1,1 or E6");
  c_cat->add_option("--family", cat.family, "A, B, C_plane, F, C_space, Fdot, E, X9star, J10star");
  c_cat->add_option("--max", cat.max, "largest index");

  std::vector<std::string> tj_entries, mi_entries, vc_entries, ll_entries;
  auto* c_tj = app.add_subcommand("tjurina", "Tjurina numbers");
  c_tj->add_option("--entry", tj_entries, "entries (default: the whole range)");
  auto* c_mi = app.add_subcommand("milnor", "Milnor numbers of generic smoothings");
  c_mi->add_option("--entry", mi_entries, "entries (default: the whole range)");
  auto* c_vc = app.add_subcommand("verify-conjecture", "compare Milnor and Tjurina numbers");
  c_vc->add_option("--entry", vc_entries, "entries (default: the whole range)");

  bool ll_all = false;
  auto* c_ll = app.add_subcommand("ll-degree", "degree of the Lyashko-Looijenga map");
  c_ll->add_option("--entry", ll_entries, "entries");
  c_ll->add_flag("--all", ll_all, "the whole range");

  std::string llc_entry = "C:1,1,1";
  CoveringConfig cov;
  auto* c_llc = app.add_subcommand("ll-check", "covering checks for C_{p,q,r}");
  c_llc->add_option("--entry", llc_entry)->capture_default_str();
  c_llc->add_option("--draws", cov.off_sigma, "random parameter draws off Sigma")->capture_default_str();
  c_llc->add_option("--on-sigma", cov.on_sigma, "draws on Sigma")->capture_default_str();
  c_llc->add_option("--fiber-draws", cov.fiber_draws, "draws hunting for LL = t^tau")->capture_default_str();

  std::string fd_entry = "C:1,1,1", fd_mode = "sigma";
  auto* c_fd = app.add_subcommand("free-divisor", "vector-field matrix of the discriminant or of Sigma");
  c_fd->add_option("--entry", fd_entry)->capture_default_str();
  c_fd->add_option("--mode", fd_mode, "sigma | delta")->capture_default_str();

  SampleArgs ss;
  auto* c_ss = app.add_subcommand("sample-sigma", "points on the components of Sigma");
  c_ss->add_option("--entry", ss.entry)->capture_default_str();
  c_ss->add_option("--component", ss.component, "nonsmooth | degenerate | level | all")->capture_default_str();
  c_ss->add_option("-n,--points", ss.n, "points per component")->capture_default_str();
  c_ss->add_flag("--real", ss.real, "decimal coordinates");
  c_ss->add_option("--out", ss.out, "CSV path");

  std::string fig_out;
  std::size_t fig_n = 200;
  auto* c_fig = app.add_subcommand("emit-figure", "CSV of the projectivized real Sigma of C_{1,1,1}");
  c_fig->add_option("--out", fig_out, "CSV path (default stdout)");
  c_fig->add_option("-n,--points", fig_n, "draws per component")->capture_default_str();

  auto* c_va = app.add_subcommand("verify-all", "tau, mu, LL table and free-divisor identities");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--timing") continue;
    if (!g.echo.empty()) g.echo += " ";
    g.echo += a;
  }

  try {
    if (*c_cat) return run_catalog(g, cat);
    if (*c_tj) return run_invariant(g, "tjurina", tj_entries);
    if (*c_mi) return run_invariant(g, "milnor", mi_entries);
    if (*c_vc) return run_invariant(g, "verify-conjecture", vc_entries);
    if (*c_ll) {
      if (ll_entries.empty() && !ll_all) throw UsageError("ll-degree needs --entry or --all");
      return run_ll_degree(g, ll_entries);
    }
    if (*c_llc) return run_ll_check(g, llc_entry, cov);
    if (*c_fd) return run_free_divisor(g, fd_entry, fd_mode);
    if (*c_ss) return run_sample_sigma(g, ss);
    if (*c_fig) return run_emit_figure(g, fig_out, fig_n);
    if (*c_va) return run_verify_all(g);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
