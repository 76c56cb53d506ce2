#include "fsc/upoly.hpp"

#include <algorithm>
#include <sstream>

#include "fsc/linalg.hpp"

namespace fsc {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const Rational& c) { return UPoly(std::vector<Rational>{c}); }

UPoly UPoly::monomial(unsigned k, const Rational& c) {
  std::vector<Rational> v(k + 1, Rational(0));
  v[k] = c;
  return UPoly(std::move(v));
}

UPoly UPoly::from_roots(std::span<const Rational> roots) {
  UPoly p = constant(1);
  for (const auto& r : roots) p = p * UPoly({-r, Rational(1)});
  return p;
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UPoly::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (c_.empty()) return {};
  return (1 / lead()) * *this;
}

UPoly UPoly::pow(unsigned e) const {
  UPoly r = constant(1);
  UPoly b = *this;
  while (e > 0) {
    if (e & 1U) r = r * b;
    e >>= 1U;
    if (e > 0) b = b * b;
  }
  return r;
}

UPoly UPoly::compose(const UPoly& q) const {
  UPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + constant(*it);
  return acc;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(r));
}

UPoly operator*(const Rational& s, UPoly a) {
  if (s == 0) return {};
  for (auto& c : a.c_) c *= s;
  return a;
}

UPoly UPoly::operator-() const { return Rational(-1) * *this; }

std::string UPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = c_[k];
    if (c == 0) continue;
    Rational a = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = a == 1;
    if (k == 0 || !unit) out << fsc::to_string(a);
    if (k > 0) {
      if (!unit) out << "*";
      out << var;
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

UPoly UPoly::from_polynomial(const Polynomial& p, std::size_t var) {
  std::vector<Rational> v;
  for (const auto& t : p.terms()) {
    Monomial rest = t.mono;
    const unsigned e = rest.exp[var];
    rest.exp[var] = 0;
    if (!rest.is_one()) throw InvalidInput("polynomial is not univariate");
    if (v.size() <= e) v.resize(e + 1, Rational(0));
    v[e] += t.coeff;
  }
  return UPoly(std::move(v));
}

Polynomial UPoly::to_polynomial(const RingPtr& ring, std::size_t var) const {
  Polynomial p(ring);
  for (std::size_t k = 0; k < c_.size(); ++k) {
    p += Polynomial::term(ring, unit_monomial(var, static_cast<unsigned>(k)), c_[k]);
  }
  return p;
}

DivMod divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw InvalidInput("polynomial division by zero");
  std::vector<Rational> r = a.coeffs();
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return {UPoly(), a};
  std::vector<Rational> q(da - db + 1, Rational(0));
  const Rational inv = 1 / b.lead();
  for (int k = da; k >= db; --k) {
    if (r[k] == 0) continue;
    const Rational f = r[k] * inv;
    q[k - db] = f;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= f * b.coeffs()[j];
  }
  r.resize(db);
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).rem; }

UPoly divide_exact(const UPoly& a, const UPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InvalidInput("inexact univariate division");
  return q;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a;
  UPoly y = b;
  while (!y.is_zero()) {
    UPoly r = x % y;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

bool is_squarefree(const UPoly& p) {
  if (p.is_zero()) return false;
  return gcd(p, p.derivative()).degree() == 0;
}

UPoly squarefree_part(const UPoly& p) {
  if (p.degree() <= 0) return p;
  return divide_exact(p, gcd(p, p.derivative())).monic();
}

UPoly inverse_mod(const UPoly& a, const UPoly& m) {
  // Extended Euclid tracking the coefficient of a.
  UPoly r0 = m;
  UPoly r1 = a % m;
  UPoly s0;
  UPoly s1 = UPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    UPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw InvalidInput("polynomial is not invertible modulo the modulus");
  return ((1 / r0.lead()) * s0) % m;
}

Rational resultant(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  const int m = a.degree();
  const int n = b.degree();
  if (m == 0 && n == 0) return 1;
  if (m == 0) return pow_rational(a.lead(), static_cast<unsigned>(n));
  if (n == 0) return pow_rational(b.lead(), static_cast<unsigned>(m));
  const std::size_t size = static_cast<std::size_t>(m + n);
  QMatrix s(size, std::vector<Rational>(size, Rational(0)));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k <= m; ++k) s[i][i + k] = a.coeffs()[m - k];
  }
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k <= n; ++k) s[n + i][i + k] = b.coeffs()[n - k];
  }
  return determinant(s);
}

UPoly formal_subresultant(const UPoly& a, const UPoly& b, int m, int n, int j) {
  if (a.degree() > m || b.degree() > n || j < 0 || j > std::min(m, n)) {
    throw InvalidInput("subresultant degrees out of range");
  }
  const int rows = m + n - 2 * j;
  if (rows == 0) return UPoly::constant(1);
  // Column c holds the coefficient of t^(m+n-j-1-c); the first rows-1
  // columns are fixed and the last one runs over t^i, i = 0..j.
  auto coef = [](const UPoly& p, int shift, int power) {
    const int k = power - shift;
    return k < 0 ? Rational(0) : p.coeff(static_cast<std::size_t>(k));
  };
  std::vector<Rational> out(static_cast<std::size_t>(j) + 1);
  for (int i = 0; i <= j; ++i) {
    QMatrix s(rows, std::vector<Rational>(rows));
    for (int r = 0; r < rows; ++r) {
      const bool from_a = r < n - j;
      const UPoly& p = from_a ? a : b;
      const int shift = from_a ? n - j - 1 - r : m - j - 1 - (r - (n - j));
      for (int c = 0; c + 1 < rows; ++c) s[r][c] = coef(p, shift, m + n - j - 1 - c);
      s[r][rows - 1] = coef(p, shift, i);
    }
    out[i] = determinant(std::move(s));
  }
  return UPoly(std::move(out));
}

Rational discriminant(const UPoly& p) {
  const int n = p.degree();
  if (n < 1) throw InvalidInput("discriminant of a constant");
  Rational r = resultant(p, p.derivative()) / p.lead();
  if ((n * (n - 1) / 2) % 2 != 0) r = -r;
  return r;
}

QMatrix multiplication_matrix(const UPoly& v, const UPoly& modulus) {
  const int n = modulus.degree();
  QMatrix m(n, std::vector<Rational>(n, Rational(0)));
  UPoly col = v % modulus;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) m[i][j] = col.coeff(i);
    col = (col * UPoly::monomial(1)) % modulus;
  }
  return m;
}

UPoly interpolate(std::span<const Rational> nodes, std::span<const Rational> values) {
  if (nodes.size() != values.size()) throw InvalidInput("interpolation size mismatch");
  // Newton divided differences.
  const std::size_t n = nodes.size();
  std::vector<Rational> dd(values.begin(), values.end());
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) {
      const Rational den = nodes[i] - nodes[i - j];
      if (den == 0) throw InvalidInput("interpolation nodes are not distinct");
      dd[i] = (dd[i] - dd[i - 1]) / den;
    }
  }
  UPoly p;
  for (std::size_t k = n; k-- > 0;) {
    p = p * UPoly({-nodes[k], Rational(1)}) + UPoly::constant(dd[k]);
  }
  return p;
}

Rational RootInterval::mid() const {
  Rational m = (lo + hi) / 2;
  m.canonicalize();
  return m;
}

Rational simplest_between(Rational lo, Rational hi) {
  if (hi < lo) std::swap(lo, hi);
  if (lo <= 0 && hi >= 0) return 0;
  if (hi < 0) return -simplest_between(-hi, -lo);
  // Continued fraction descent for 0 < lo <= hi.
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  if (Rational(fl) == lo) return lo;
  if (Rational(fl + 1) <= hi) return Rational(fl + 1);
  const Rational a = lo - fl;
  const Rational b = hi - fl;
  Rational r = fl + 1 / simplest_between(1 / b, 1 / a);
  r.canonicalize();
  return r;
}

namespace {

std::vector<UPoly> sturm_chain(const UPoly& p) {
  std::vector<UPoly> chain = {p, p.derivative()};
  while (!chain.back().is_zero()) {
    UPoly r = -(chain[chain.size() - 2] % chain.back());
    if (r.is_zero()) break;
    chain.push_back(std::move(r));
  }
  return chain;
}

int sign_changes(const std::vector<UPoly>& chain, const Rational& x) {
  int changes = 0;
  int last = 0;
  for (const auto& q : chain) {
    const int s = sgn(q(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

std::vector<RootInterval> real_roots(const UPoly& p, const Rational& width) {
  if (p.is_zero()) throw InvalidInput("real roots of the zero polynomial");
  std::vector<RootInterval> out;
  if (p.degree() < 1) return out;
  const UPoly q = squarefree_part(p);
  const auto chain = sturm_chain(q);
  Rational bound = 0;
  for (const auto& c : q.coeffs()) bound = std::max(bound, Rational(abs(c / q.lead())));
  bound += 1;

  // Roots in the half-open interval (lo, hi], neither endpoint a root.
  struct Job {
    Rational lo, hi;
    int count;
  };
  std::vector<Job> jobs = {{-bound, bound, sign_changes(chain, -bound) - sign_changes(chain, bound)}};
  while (!jobs.empty()) {
    Job j = jobs.back();
    jobs.pop_back();
    if (j.count == 0) continue;
    const Rational s = simplest_between(j.lo, j.hi);
    if (j.count == 1) {
      if (s != j.lo && q(s) == 0) {
        out.push_back({s, s});
        continue;
      }
      if (j.hi - j.lo < width) {
        out.push_back({j.lo, j.hi});
        continue;
      }
    }
    Rational m = (j.lo + j.hi) / 2;
    m.canonicalize();
    if (q(m) == 0) {
      out.push_back({m, m});
      // Pull the left end away from m until it no longer touches a root.
      const int left = sign_changes(chain, j.lo) - sign_changes(chain, m) - 1;
      Rational e = (m - j.lo) / 2;
      while (q(m - e) == 0 || sign_changes(chain, j.lo) - sign_changes(chain, m - e) != left) e /= 2;
      jobs.push_back({j.lo, m - e, left});
      jobs.push_back({m, j.hi, sign_changes(chain, m) - sign_changes(chain, j.hi)});
      continue;
    }
    jobs.push_back({j.lo, m, sign_changes(chain, j.lo) - sign_changes(chain, m)});
    jobs.push_back({m, j.hi, sign_changes(chain, m) - sign_changes(chain, j.hi)});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
  return out;
}

}  // namespace fsc
