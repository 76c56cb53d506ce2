#include "fsc/linalg.hpp"

#include <algorithm>

#include "fsc/upoly.hpp"

namespace fsc {

Rational pow_rational(const Rational& base, unsigned e) {
  Rational r = 1;
  Rational b = base;
  while (e > 0) {
    if (e & 1U) r *= b;
    e >>= 1U;
    if (e > 0) b *= b;
  }
  return r;
}

Rational determinant(QMatrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    const Rational inv = 1 / m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      const Rational f = m[r][c] * inv;
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

std::size_t rank(QMatrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t rk = 0;
  for (std::size_t c = 0; c < cols && rk < rows; ++c) {
    std::size_t p = rk;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rk]);
    const Rational inv = 1 / m[rk][c];
    for (std::size_t r = rk + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      const Rational f = m[r][c] * inv;
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rk][k];
    }
    ++rk;
  }
  return rk;
}

UPoly charpoly(const QMatrix& input) {
  // Reduction to upper Hessenberg form, then the standard recurrence.
  QMatrix h = input;
  const std::size_t n = h.size();
  for (std::size_t c = 0; c + 2 <= n; ++c) {
    std::size_t p = c + 1;
    while (p < n && h[p][c] == 0) ++p;
    if (p == n) continue;
    if (p != c + 1) {
      std::swap(h[p], h[c + 1]);
      for (auto& row : h) std::swap(row[p], row[c + 1]);
    }
    const Rational inv = 1 / h[c + 1][c];
    for (std::size_t r = c + 2; r < n; ++r) {
      if (h[r][c] == 0) continue;
      const Rational f = h[r][c] * inv;
      for (std::size_t k = 0; k < n; ++k) h[r][k] -= f * h[c + 1][k];
      for (std::size_t k = 0; k < n; ++k) h[k][c + 1] += f * h[k][r];
    }
  }
  std::vector<UPoly> p(n + 1);
  p[0] = UPoly::constant(1);
  for (std::size_t m = 1; m <= n; ++m) {
    p[m] = UPoly({-h[m - 1][m - 1], Rational(1)}) * p[m - 1];
    Rational prod = 1;
    for (std::size_t i = 1; i < m; ++i) {
      prod *= h[m - i][m - i - 1];
      if (prod == 0) break;
      p[m] -= (prod * h[m - i - 1][m - 1]) * p[m - i - 1];
    }
  }
  return p[n];
}

Polynomial determinant(const PolyMatrix& input) {
  const std::size_t n = input.size();
  if (n == 0) throw InvalidInput("determinant of an empty matrix");
  PolyMatrix m = input;
  const RingPtr ring = m[0][0].ring();
  Polynomial prev = Polynomial::constant(ring, 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return Polynomial(ring);
      std::swap(m[p], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = t.divide_exact(prev);
      }
    }
    prev = m[k][k];
  }
  Polynomial d = m[n - 1][n - 1];
  return negate ? -d : d;
}

namespace {

void subtract_scaled(SparseLinearSystem::Row& row, Rational& rhs,
                     const SparseLinearSystem::Row& pivot, const Rational& prhs,
                     const Rational& f) {
  SparseLinearSystem::Row out;
  out.reserve(row.size() + pivot.size());
  auto a = row.begin();
  auto b = pivot.begin();
  while (a != row.end() || b != pivot.end()) {
    if (b == pivot.end() || (a != row.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == row.end() || b->first < a->first) {
      out.emplace_back(b->first, -f * b->second);
      ++b;
    } else {
      Rational s = a->second - f * b->second;
      if (s != 0) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  row = std::move(out);
  rhs -= f * prhs;
}

}  // namespace

void SparseLinearSystem::add_equation(Row row, Rational rhs) {
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  Row merged;
  for (auto& e : row) {
    if (e.first >= columns_) throw InvalidInput("linear system column out of range");
    if (!merged.empty() && merged.back().first == e.first) {
      merged.back().second += e.second;
    } else {
      merged.push_back(std::move(e));
    }
  }
  std::erase_if(merged, [](const auto& e) { return e.second == 0; });
  row = std::move(merged);

  while (!row.empty()) {
    const std::size_t lead = row.front().first;
    const std::size_t p = pivot_of_[lead];
    if (p == npos) break;
    const Rational f = row.front().second;
    subtract_scaled(row, rhs, pivots_[p].row, pivots_[p].rhs, f);
  }
  if (row.empty()) {
    if (rhs != 0) consistent_ = false;
    return;
  }
  const Rational inv = 1 / row.front().second;
  for (auto& e : row) e.second *= inv;
  rhs *= inv;
  pivot_of_[row.front().first] = pivots_.size();
  pivots_.push_back({std::move(row), std::move(rhs)});
}

std::optional<std::vector<Rational>> SparseLinearSystem::solve() const {
  if (!consistent_) return std::nullopt;
  std::vector<Rational> x(columns_, Rational(0));
  for (std::size_t c = columns_; c-- > 0;) {
    const std::size_t p = pivot_of_[c];
    if (p == npos) continue;
    Rational v = pivots_[p].rhs;
    for (std::size_t k = 1; k < pivots_[p].row.size(); ++k) {
      const auto& [col, a] = pivots_[p].row[k];
      v -= a * x[col];
    }
    x[c] = v;
  }
  return x;
}

}  // namespace fsc
