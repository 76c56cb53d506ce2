#include <algorithm>
#include <deque>
#include <initializer_list>
#include <set>
#include <sstream>
#include <tuple>

#include "fsc/local_algebra.hpp"

namespace fsc {

std::strong_ordering LocalOrder::compare(const Monomial& a, const Monomial& b) const {
  const unsigned da = a.degree();
  const unsigned db = b.degree();
  if (da != db) return db <=> da;
  if (priority.empty()) {
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (a.exp[i] != b.exp[i]) return a.exp[i] <=> b.exp[i];
    }
    return std::strong_ordering::equal;
  }
  for (auto i : priority) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] <=> b.exp[i];
  }
  // Slots outside the priority list are compared last so the order stays total.
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] <=> b.exp[i];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering ModuleOrder::compare(std::size_t ca, const Monomial& a, std::size_t cb,
                                          const Monomial& b) const {
  if (priority == ModulePriority::PositionOverTerm) {
    if (ca != cb) return cb <=> ca;
    return local.compare(a, b);
  }
  const auto c = local.compare(a, b);
  if (c != 0) return c;
  return cb <=> ca;
}

// ---------------------------------------------------------------------------
// ModuleElement

ModuleElement::ModuleElement(RingPtr ring, std::size_t rank)
    : ring_(std::move(ring)), components_(rank, Polynomial(ring_)) {}

ModuleElement::ModuleElement(std::vector<Polynomial> components)
    : components_(std::move(components)) {
  if (components_.empty()) throw InvalidInput("module element of rank zero");
  ring_ = components_.front().ring();
  for (auto& c : components_) {
    if (!c.ring()) c = Polynomial(ring_);
    if (!same_ring(c.ring(), ring_)) throw InvalidInput("module components over different rings");
  }
}

ModuleElement ModuleElement::unit(RingPtr ring, std::size_t rank, std::size_t component,
                                  const Monomial& m, const Rational& c) {
  ModuleElement e(ring, rank);
  e.components_.at(component) = Polynomial::term(ring, m, c);
  return e;
}

bool ModuleElement::is_zero() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](const Polynomial& p) { return p.is_zero(); });
}

int ModuleElement::max_degree() const {
  int d = -1;
  for (const auto& c : components_) d = std::max(d, c.total_degree());
  return d;
}

std::size_t ModuleElement::term_count() const {
  std::size_t n = 0;
  for (const auto& c : components_) n += c.size();
  return n;
}

LeadingTerm ModuleElement::leading(const ModuleOrder& order) const {
  const Term* best = nullptr;
  std::size_t best_comp = 0;
  for (std::size_t c = 0; c < components_.size(); ++c) {
    for (const auto& t : components_[c].terms()) {
      if (best == nullptr || order.compare(c, t.mono, best_comp, best->mono) > 0) {
        best = &t;
        best_comp = c;
      }
    }
    if (best != nullptr && order.priority == ModulePriority::PositionOverTerm) break;
  }
  if (best == nullptr) throw InvalidInput("leading term of zero module element");
  return {best_comp, best->mono, best->coeff};
}

int ModuleElement::ecart(const ModuleOrder& order) const {
  return max_degree() - static_cast<int>(leading(order).mono.degree());
}

void ModuleElement::check_compatible(const ModuleElement& o) const {
  if (rank() != o.rank()) throw InvalidInput("module elements of different rank");
  if (!same_ring(ring_, o.ring_)) throw InvalidInput("module elements over different rings");
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < rank(); ++i) components_[i] += o.components_[i];
  return *this;
}

ModuleElement& ModuleElement::operator-=(const ModuleElement& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < rank(); ++i) components_[i] -= o.components_[i];
  return *this;
}

ModuleElement operator*(const Polynomial& p, const ModuleElement& e) {
  ModuleElement r = e;
  for (auto& c : r.components_) c = p * c;
  return r;
}

ModuleElement operator*(const Rational& c, ModuleElement e) {
  for (auto& p : e.components_) p *= c;
  return e;
}

void ModuleElement::add_scaled(const ModuleElement& o, const Rational& c, const Monomial& m,
                               unsigned bound) {
  check_compatible(o);
  for (std::size_t i = 0; i < rank(); ++i) components_[i].add_scaled(o.components_[i], c, m, bound);
}

ModuleElement ModuleElement::truncated(unsigned bound) const {
  ModuleElement r = *this;
  for (auto& c : r.components_) c = c.truncated(bound);
  return r;
}

std::string ModuleElement::to_string() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < rank(); ++i) {
    if (i > 0) out << ", ";
    out << components_[i].to_string();
  }
  out << ")";
  return out.str();
}

// ---------------------------------------------------------------------------
// Reduction engine

namespace {

struct Entry {
  ModuleElement element;
  LeadingTerm lead;
  int ecart = 0;
};

// Scales the elements by one common factor to integer coefficients with no
// common divisor.
void make_primitive(std::initializer_list<ModuleElement*> es) {
  Integer den = 1, num = 0;
  for (const ModuleElement* e : es) {
    for (const auto& c : e->components()) {
      for (const auto& t : c.terms()) {
        den = lcm(den, Integer(t.coeff.get_den()));
        num = gcd(num, Integer(t.coeff.get_num()));
      }
    }
  }
  if (num == 0 || (den == 1 && num == 1)) return;
  Rational s(den, num);
  s.canonicalize();
  for (ModuleElement* e : es) *e = s * std::move(*e);
}

void make_primitive(ModuleElement& e) { make_primitive({&e}); }

Entry make_entry(ModuleElement e, const ModuleOrder& order, bool integral = false) {
  Entry en;
  if (integral) {
    make_primitive(e);
    en.lead = e.leading(order);
    en.ecart = e.max_degree() - static_cast<int>(en.lead.mono.degree());
    en.element = std::move(e);
    return en;
  }
  en.lead = e.leading(order);
  // Monic leading coefficient keeps intermediate coefficients small.
  if (en.lead.coeff != 1) {
    const Rational inv = 1 / en.lead.coeff;
    e = inv * std::move(e);
    en.lead.coeff = 1;
  }
  en.ecart = e.max_degree() - static_cast<int>(en.lead.mono.degree());
  en.element = std::move(e);
  return en;
}

// h -= (lt_h / lt_g) * g, cancelling the leading term of h.
void reduce_step(ModuleElement& h, const LeadingTerm& lh, const Entry& g,
                 unsigned bound = Polynomial::kNoBound) {
  const Monomial m = quotient(lh.mono, g.lead.mono);
  h.add_scaled(g.element, -lh.coeff / g.lead.coeff, m, bound);
}

const Entry* pick_reducer(const std::vector<const Entry*>& set, const LeadingTerm& lh) {
  const Entry* best = nullptr;
  for (const Entry* g : set) {
    if (g->lead.component != lh.component || !g->lead.mono.divides(lh.mono)) continue;
    if (best == nullptr || g->ecart < best->ecart) best = g;
    if (best->ecart == 0) break;
  }
  return best;
}

// Mora's normal form: reducers are chosen with minimal ecart, and h joins the
// reducer set whenever it has smaller ecart than the chosen reducer.
ModuleElement mora_weak_nf(ModuleElement h, const std::vector<const Entry*>& basis,
                           const ModuleOrder& order) {
  std::vector<const Entry*> set = basis;
  std::deque<Entry> extra;
  while (!h.is_zero()) {
    const LeadingTerm lh = h.leading(order);
    const Entry* g = pick_reducer(set, lh);
    if (g == nullptr) break;
    const int eh = h.max_degree() - static_cast<int>(lh.mono.degree());
    if (g->ecart > eh) {
      extra.push_back(make_entry(h, order));
      set.push_back(&extra.back());
    }
    reduce_step(h, lh, *g);
  }
  return h;
}

// Full reduction modulo terms of degree >= bound, valid when m^bound lies in
// the module.
ModuleElement full_nf(ModuleElement h, const std::vector<const Entry*>& basis,
                      const ModuleOrder& order, unsigned bound) {
  h = h.truncated(bound);
  ModuleElement out(h.ring(), h.rank());
  while (!h.is_zero()) {
    const LeadingTerm lh = h.leading(order);
    const Entry* g = pick_reducer(basis, lh);
    if (g == nullptr) {
      out[lh.component] += Polynomial::term(h.ring(), lh.mono, lh.coeff);
      h[lh.component] -= Polynomial::term(h.ring(), lh.mono, lh.coeff);
      continue;
    }
    reduce_step(h, lh, *g);
    h = h.truncated(bound);
  }
  return out;
}

ModuleElement spoly(const Entry& a, const Entry& b) {
  const Monomial l = lcm(a.lead.mono, b.lead.mono);
  ModuleElement s(a.element.ring(), a.element.rank());
  s.add_scaled(a.element, 1 / a.lead.coeff, quotient(l, a.lead.mono));
  s.add_scaled(b.element, -1 / b.lead.coeff, quotient(l, b.lead.mono));
  return s;
}

std::optional<std::size_t> staircase_size(const std::vector<LeadingTerm>& leads,
                                          std::size_t nvars, std::size_t rank,
                                          std::vector<std::pair<std::size_t, Monomial>>* out) {
  std::size_t total = 0;
  for (std::size_t c = 0; c < rank; ++c) {
    std::vector<Monomial> lts;
    for (const auto& l : leads) {
      if (l.component == c) lts.push_back(l.mono);
    }
    const bool killed =
        std::any_of(lts.begin(), lts.end(), [](const Monomial& m) { return m.is_one(); });
    if (killed) continue;
    // Each variable needs a pure power among the leading monomials.
    std::vector<unsigned> bound(nvars, 0);
    for (std::size_t v = 0; v < nvars; ++v) {
      for (const auto& m : lts) {
        if (m.degree() == m.exp[v] && m.exp[v] > 0) {
          if (bound[v] == 0 || m.exp[v] < bound[v]) bound[v] = m.exp[v];
        }
      }
      if (bound[v] == 0) return std::nullopt;
    }
    Monomial cur;
    while (true) {
      const bool divisible =
          std::any_of(lts.begin(), lts.end(), [&](const Monomial& m) { return m.divides(cur); });
      if (!divisible) {
        ++total;
        if (out != nullptr) out->emplace_back(c, cur);
      }
      std::size_t v = 0;
      while (v < nvars) {
        if (++cur.exp[v] < bound[v]) break;
        cur.exp[v] = 0;
        ++v;
      }
      if (v == nvars) break;
    }
  }
  return total;
}

void check_generators(const std::vector<ModuleElement>& gens, const RingPtr& ring,
                      std::size_t rank) {
  if (rank == 0) throw InvalidInput("module rank must be positive");
  for (const auto& g : gens) {
    if (g.rank() != rank) throw InvalidInput("generator rank differs from module rank");
    if (!same_ring(g.ring(), ring)) throw InvalidInput("generator over a different variable list");
  }
}

std::vector<const Entry*> as_pointers(const std::vector<Entry>& entries) {
  std::vector<const Entry*> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(&e);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// StandardBasis

StandardBasis::StandardBasis(RingPtr ring, std::size_t rank, ModuleOrder order,
                             std::vector<ModuleElement> generators)
    : ring_(std::move(ring)), rank_(rank), order_(std::move(order)),
      generators_(std::move(generators)) {
  check_generators(generators_, ring_, rank_);
  for (const auto& g : generators_) leading_.push_back(g.leading(order_));
  dimension_ = staircase_size(leading_, ring_->size(), rank_, nullptr);
}

std::vector<std::pair<std::size_t, Monomial>> StandardBasis::standard_monomials() const {
  std::vector<std::pair<std::size_t, Monomial>> out;
  if (!staircase_size(leading_, ring_->size(), rank_, &out)) {
    throw InfiniteQuotient("quotient is infinite-dimensional");
  }
  std::sort(out.begin(), out.end(), [this](const auto& a, const auto& b) {
    return order_.compare(a.first, a.second, b.first, b.second) > 0;
  });
  return out;
}

namespace {

void monomials_of_degree(std::size_t nvars, unsigned deg, std::size_t pos, Monomial& cur,
                         std::vector<Monomial>& out) {
  if (pos + 1 == nvars) {
    cur.exp[pos] = deg;
    out.push_back(cur);
    cur.exp[pos] = 0;
    return;
  }
  for (unsigned e = 0; e <= deg; ++e) {
    cur.exp[pos] = e;
    monomials_of_degree(nvars, deg - e, pos + 1, cur, out);
  }
  cur.exp[pos] = 0;
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned deg) {
  std::vector<Monomial> out;
  Monomial cur;
  monomials_of_degree(nvars, deg, 0, cur, out);
  return out;
}

// Full reduction with every term of degree >= bound dropped. Fraction-free:
// the running element stays primitive integral and reducers are integral.
ModuleElement truncated_nf(ModuleElement h, const std::vector<const Entry*>& basis,
                           const ModuleOrder& order, unsigned bound) {
  h = h.truncated(bound);
  ModuleElement rem(h.ring(), h.rank());
  make_primitive(h);
  while (!h.is_zero()) {
    const LeadingTerm lh = h.leading(order);
    const Entry* g = pick_reducer(basis, lh);
    if (g == nullptr) {
      const Polynomial t = Polynomial::term(h.ring(), lh.mono, lh.coeff);
      rem[lh.component] += t;
      h[lh.component] -= t;
      continue;
    }
    const Integer a(g->lead.coeff.get_num());
    const Integer b(lh.coeff.get_num());
    const Integer d = gcd(a, b);
    if (d != a) {
      const Rational s(Integer(a / d));
      h = s * std::move(h);
      rem = s * std::move(rem);
    }
    h.add_scaled(g->element, Rational(Integer(-b / d)), quotient(lh.mono, g->lead.mono), bound);
    make_primitive({&h, &rem});
  }
  return rem;
}

StandardBasis buchberger(const std::vector<ModuleElement>& generators, const RingPtr& ring,
                         std::size_t rank, const ModuleOrder& order,
                         std::optional<unsigned> bound) {
  check_generators(generators, ring, rank);

  std::vector<Entry> basis;
  basis.reserve(generators.size() * 4);
  // Pending pairs keyed by (lcm degree, i, j): lowest degree first.
  std::set<std::tuple<unsigned, std::size_t, std::size_t>> pending;
  std::vector<std::vector<bool>> in_pending;

  auto lcm_degree = [&](std::size_t i, std::size_t j) {
    return lcm(basis[i].lead.mono, basis[j].lead.mono).degree();
  };
  auto add = [&](ModuleElement e) {
    // Reserve keeps pointers handed to the reducers stable between additions.
    if (basis.size() == basis.capacity()) basis.reserve(basis.capacity() * 2 + 8);
    basis.push_back(make_entry(std::move(e), order, bound.has_value()));
    const std::size_t k = basis.size() - 1;
    for (auto& row : in_pending) row.push_back(false);
    in_pending.emplace_back(basis.size(), false);
    for (std::size_t i = 0; i < k; ++i) {
      if (basis[i].lead.component != basis[k].lead.component) continue;
      pending.emplace(lcm_degree(i, k), i, k);
      in_pending[i][k] = in_pending[k][i] = true;
    }
  };

  for (const auto& g : generators) {
    ModuleElement e = bound ? g.truncated(*bound) : g;
    if (!e.is_zero()) add(std::move(e));
  }

  while (!pending.empty()) {
    const auto [deg, i, j] = *pending.begin();
    pending.erase(pending.begin());
    in_pending[i][j] = in_pending[j][i] = false;

    // Buchberger's chain criterion.
    const Monomial l = lcm(basis[i].lead.mono, basis[j].lead.mono);
    bool skip = false;
    for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == i || k == j || basis[k].lead.component != basis[i].lead.component) continue;
      if (!basis[k].lead.mono.divides(l)) continue;
      if (!in_pending[i][k] && !in_pending[j][k]) skip = true;
    }
    if (skip) continue;

    ModuleElement h = bound ? truncated_nf(spoly(basis[i], basis[j]), as_pointers(basis), order, *bound)
                            : mora_weak_nf(spoly(basis[i], basis[j]), as_pointers(basis), order);
    if (!h.is_zero()) add(std::move(h));
  }

  // Drop elements whose leading monomial is divisible by another's.
  std::vector<ModuleElement> kept;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < basis.size() && !redundant; ++k) {
      if (k == i || basis[k].lead.component != basis[i].lead.component) continue;
      if (!basis[k].lead.mono.divides(basis[i].lead.mono)) continue;
      redundant = basis[k].lead.mono != basis[i].lead.mono || k < i;
    }
    if (!redundant) kept.push_back(basis[i].element);
  }
  if (bound) {
    for (std::size_t c = 0; c < rank; ++c) {
      for (const Monomial& m : monomials_of_degree(ring->size(), *bound)) {
        kept.push_back(ModuleElement::unit(ring, rank, c, m));
      }
    }
  }
  return StandardBasis(ring, rank, order, std::move(kept));
}

}  // namespace

StandardBasis standard_basis(const std::vector<ModuleElement>& generators, const RingPtr& ring,
                             std::size_t rank, const ModuleOrder& order) {
  return buchberger(generators, ring, rank, order, std::nullopt);
}

StandardBasis standard_basis_mod_power(const std::vector<ModuleElement>& generators,
                                       const RingPtr& ring, std::size_t rank, unsigned bound,
                                       const ModuleOrder& order) {
  if (bound == 0) throw InvalidInput("power of the maximal ideal must be positive");
  return buchberger(generators, ring, rank, order, bound);
}

ModuleElement normal_form(const ModuleElement& e, const StandardBasis& basis) {
  if (e.rank() != basis.rank()) throw InvalidInput("normal_form: rank mismatch");
  if (!same_ring(e.ring(), basis.ring())) throw InvalidInput("normal_form: variable list mismatch");
  std::vector<Entry> entries;
  entries.reserve(basis.generators().size());
  for (const auto& g : basis.generators()) entries.push_back(make_entry(g, basis.order()));
  const auto ptrs = as_pointers(entries);
  if (const auto dim = basis.dimension()) {
    // m^dim annihilates a quotient of length dim, so higher terms vanish.
    return full_nf(e, ptrs, basis.order(), static_cast<unsigned>(*dim));
  }
  return mora_weak_nf(e, ptrs, basis.order());
}

StandardBasis standard_basis_auto(const std::vector<ModuleElement>& generators, const RingPtr& ring,
                                  std::size_t rank, const ModuleOrder& order) {
  // dim Q/m^k Q >= k until m^k Q = 0, so a colength below the bound is
  // already the full colength; it is also at most the full colength, so the
  // next bound can jump past it.
  unsigned bound = 2;
  while (bound <= 32) {
    auto sb = standard_basis_mod_power(generators, ring, rank, bound, order);
    const auto dim = static_cast<unsigned>(*sb.dimension());
    if (dim < bound) return sb;
    bound = dim + 1;
  }
  return standard_basis(generators, ring, rank, order);
}

std::optional<std::size_t> quotient_dimension(const std::vector<ModuleElement>& generators,
                                              const RingPtr& ring, std::size_t rank,
                                              const ModuleOrder& order) {
  return standard_basis_auto(generators, ring, rank, order).dimension();
}

std::vector<Rational> coordinates(const ModuleElement& reduced,
                                  const std::vector<std::pair<std::size_t, Monomial>>& basis) {
  std::vector<Rational> out;
  out.reserve(basis.size());
  std::size_t matched = 0;
  for (const auto& [c, m] : basis) {
    out.push_back(reduced[c].coefficient(m));
    if (out.back() != 0) ++matched;
  }
  if (matched != reduced.term_count()) {
    throw InvalidInput("element is not reduced against the standard monomials");
  }
  return out;
}

}  // namespace fsc
