#include "fsc/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fsc {

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxVars) {
    throw InvalidInput("ring has more than " + std::to_string(kMaxVars) + " variables");
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw InvalidInput("empty variable name");
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) throw InvalidInput("duplicate variable name " + names_[i]);
    }
  }
}

std::size_t Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return names_.size();
}

RingPtr make_ring(std::vector<std::string> names) {
  return std::make_shared<const Ring>(std::move(names));
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (auto e : exp) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (exp[i] > other.exp[i]) return false;
  }
  return true;
}

long Monomial::weighted_degree(std::span<const long> weights) const {
  long d = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (exp[i] == 0) continue;
    if (i >= weights.size()) throw InvalidInput("weight vector too short");
    d += weights[i] * static_cast<long>(exp[i]);
  }
  return d;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exp[i] = static_cast<std::uint16_t>(a.exp[i] + b.exp[i]);
  }
  return r;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exp[i] = static_cast<std::uint16_t>(b.exp[i] - a.exp[i]);
  }
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = std::max(a.exp[i], b.exp[i]);
  return r;
}

Monomial unit_monomial(std::size_t var, unsigned power) {
  Monomial m;
  m.exp.at(var) = static_cast<std::uint16_t>(power);
  return m;
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  Polynomial p(std::move(ring));
  if (c != 0) p.terms_.push_back({Monomial{}, c});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->size()) throw InvalidInput("variable index out of range");
  Polynomial p(std::move(ring));
  p.terms_.push_back({unit_monomial(index), Rational(1)});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::string_view name) {
  const auto idx = ring->index_of(name);
  if (idx == ring->size()) throw InvalidInput("unknown variable " + std::string(name));
  return variable(std::move(ring), idx);
}

Polynomial Polynomial::term(RingPtr ring, const Monomial& m, const Rational& c) {
  Polynomial p(std::move(ring));
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& k) { return t.mono < k; });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return 0;
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.front().mono.is_one()) return terms_.front().coeff;
  return 0;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
  return d;
}

int Polynomial::min_degree() const {
  if (terms_.empty()) return -1;
  int d = static_cast<int>(terms_.front().mono.degree());
  for (const auto& t : terms_) d = std::min(d, static_cast<int>(t.mono.degree()));
  return d;
}

int Polynomial::degree_in(std::size_t var) const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.exp[var]));
  return d;
}

bool Polynomial::involves(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [var](const Term& t) { return t.mono.exp[var] != 0; });
}

long Polynomial::weighted_degree(std::span<const long> weights) const {
  long d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.weighted_degree(weights));
  return d;
}

bool Polynomial::is_weighted_homogeneous(std::span<const long> weights) const {
  if (terms_.empty()) return true;
  const long d = terms_.front().mono.weighted_degree(weights);
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) {
    return t.mono.weighted_degree(weights) == d;
  });
}

Polynomial Polynomial::weighted_part(std::span<const long> weights, long deg) const {
  Polynomial r(ring_);
  for (const auto& t : terms_) {
    if (t.mono.weighted_degree(weights) == deg) r.terms_.push_back(t);
  }
  return r;
}

Polynomial Polynomial::truncated(unsigned bound) const {
  Polynomial r(ring_);
  for (const auto& t : terms_) {
    if (t.mono.degree() < bound) r.terms_.push_back(t);
  }
  return r;
}

void Polynomial::check_ring(const Polynomial& o) const {
  if (!same_ring(ring_, o.ring_)) {
    // A default-constructed zero adopts any ring.
    if (ring_ == nullptr || o.ring_ == nullptr) return;
    throw InvalidInput("polynomials over different variable lists");
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  add_scaled(o, Rational(1), Monomial{});
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  add_scaled(o, Rational(-1), Monomial{});
  return *this;
}

void Polynomial::add_scaled(const Polynomial& other, const Rational& c, const Monomial& m,
                            unsigned bound) {
  check_ring(other);
  if (&other == this) {
    const Polynomial copy = other;
    add_scaled(copy, c, m, bound);
    return;
  }
  if (!ring_) ring_ = other.ring_;
  if (other.terms_.empty() || c == 0) return;
  const unsigned shift = m.degree();
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end()) {
      out.push_back(std::move(*a++));
      continue;
    }
    if (bound != kNoBound && b->mono.degree() + shift >= bound) {
      ++b;
      continue;
    }
    const Monomial bm = b->mono * m;
    if (a == terms_.end() || bm < a->mono) {
      out.push_back({bm, c * b->coeff});
      ++b;
    } else if (a->mono < bm) {
      out.push_back(std::move(*a++));
    } else {
      Rational s = a->coeff + c * b->coeff;
      if (s != 0) out.push_back({bm, std::move(s)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  Polynomial r(a.ring_ ? a.ring_ : b.ring_);
  if (a.terms_.empty() || b.terms_.empty()) return r;
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    const auto& single = a.terms_.size() == 1 ? a : b;
    const auto& other = a.terms_.size() == 1 ? b : a;
    r.add_scaled(other, single.terms_[0].coeff, single.terms_[0].mono);
    return r;
  }
  r.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) r.terms_.push_back({s.mono * t.mono, s.coeff * t.coeff});
  }
  r.normalize();
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& s, const Term& t) { return s.mono < t.mono; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  terms_ = std::move(out);
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  Polynomial r(ring_);
  for (const auto& t : terms_) {
    const auto e = t.mono.exp[var];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.exp[var] = static_cast<std::uint16_t>(e - 1);
    r.terms_.push_back({m, t.coeff * static_cast<long>(e)});
  }
  r.normalize();
  return r;
}

Polynomial Polynomial::compose(std::span<const Polynomial> images) const {
  const std::size_t n = ring_ ? ring_->size() : 0;
  if (images.size() != n) throw InvalidInput("compose: image count differs from variable count");
  RingPtr target = n > 0 ? images[0].ring() : ring_;
  // powers[i][k] = images[i]^k, grown lazily.
  std::vector<std::vector<Polynomial>> powers(n);
  auto power = [&](std::size_t i, unsigned k) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(target, 1));
    while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
    return cache[k];
  };
  Polynomial r(target);
  for (const auto& t : terms_) {
    Polynomial prod = constant(target, t.coeff);
    for (std::size_t i = 0; i < n; ++i) {
      if (t.mono.exp[i] != 0) prod = prod * power(i, t.mono.exp[i]);
    }
    r += prod;
  }
  return r;
}

Polynomial Polynomial::substitute(std::size_t var, const Rational& value) const {
  Polynomial r(ring_);
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    const auto e = m.exp[var];
    m.exp[var] = 0;
    Rational c = t.coeff;
    if (e > 0) {
      Rational p;
      mpz_pow_ui(p.get_num_mpz_t(), value.get_num_mpz_t(), e);
      mpz_pow_ui(p.get_den_mpz_t(), value.get_den_mpz_t(), e);
      p.canonicalize();
      c *= p;
    }
    r.terms_.push_back({m, c});
  }
  r.normalize();
  return r;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  const std::size_t n = ring_ ? ring_->size() : 0;
  if (point.size() != n) throw InvalidInput("evaluate: point dimension mismatch");
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < n; ++i) {
      for (unsigned k = 0; k < t.mono.exp[i]; ++k) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::in_ring(const RingPtr& target) const {
  if (same_ring(ring_, target)) {
    Polynomial r = *this;
    r.ring_ = target;
    return r;
  }
  std::vector<std::size_t> map;
  const std::size_t n = ring_ ? ring_->size() : 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto j = target->index_of(ring_->name(i));
    if (j == target->size()) {
      if (involves(i)) throw InvalidInput("variable " + ring_->name(i) + " missing from target ring");
    }
    map.push_back(j);
  }
  Polynomial r(target);
  for (const auto& t : terms_) {
    Monomial m;
    for (std::size_t i = 0; i < n; ++i) {
      if (t.mono.exp[i] != 0) m.exp[map[i]] = t.mono.exp[i];
    }
    r.terms_.push_back({m, t.coeff});
  }
  r.normalize();
  return r;
}

Polynomial Polynomial::divide_exact(const Polynomial& divisor) const {
  check_ring(divisor);
  if (divisor.is_zero()) throw InvalidInput("division by zero polynomial");
  Polynomial rem = *this;
  Polynomial q(ring_ ? ring_ : divisor.ring_);
  const Term& lead = divisor.terms_.back();
  while (!rem.is_zero()) {
    const Term& t = rem.terms_.back();
    if (!lead.mono.divides(t.mono)) throw InvalidInput("inexact polynomial division");
    const Monomial m = quotient(t.mono, lead.mono);
    const Rational c = t.coeff / lead.coeff;
    q.terms_.push_back({m, c});
    rem.add_scaled(divisor, -c, m);
  }
  q.normalize();
  return q;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff) return false;
  }
  return true;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  // Display order: descending total degree, then descending exponent vector.
  std::vector<const Term*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](const Term* a, const Term* b) {
    const auto da = a->mono.degree();
    const auto db = b->mono.degree();
    if (da != db) return da > db;
    return a->mono > b->mono;
  });
  std::ostringstream out;
  bool first = true;
  const std::size_t n = ring_ ? ring_->size() : 0;
  for (const Term* t : order) {
    Rational c = t->coeff;
    if (first) {
      if (c < 0) {
        out << "-";
        c = -c;
      }
    } else {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    const bool one = t->mono.is_one();
    if (c != 1 || one) {
      out << c.get_str();
      if (!one) out << "*";
    }
    bool first_var = true;
    for (std::size_t i = 0; i < n; ++i) {
      const auto e = t->mono.exp[i];
      if (e == 0) continue;
      if (!first_var) out << "*";
      first_var = false;
      out << ring_->name(i);
      if (e > 1) out << "^" << e;
    }
  }
  return out.str();
}

}  // namespace fsc
