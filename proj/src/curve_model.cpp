#include "fsc/curve_model.hpp"

#include <algorithm>
#include <sstream>

namespace fsc {

RingPtr space_ring() {
  static const RingPtr ring = make_ring({"x", "y", "z"});
  return ring;
}

MatrixGerm::MatrixGerm(std::size_t rows, std::vector<Polynomial> entries)
    : rows_(rows), entries_(std::move(entries)) {
  if (rows_ == 0 || entries_.size() != rows_ * (rows_ + 1)) {
    throw InvalidInput("matrix germ must be n x (n+1)");
  }
  const RingPtr ring = entries_.front().ring();
  for (auto& e : entries_) {
    if (!e.ring()) e = Polynomial(ring);
    if (!same_ring(e.ring(), ring)) throw InvalidInput("matrix entries over different rings");
  }
  const auto minors = maximal_minors(*this);
  if (std::all_of(minors.begin(), minors.end(), [](const Polynomial& p) { return p.is_zero(); })) {
    throw InvalidInput("matrix germ is rank-deficient everywhere");
  }
}

MatrixGerm MatrixGerm::parse(std::string_view text, const RingPtr& ring) {
  std::vector<std::vector<Polynomial>> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(';', start), text.size());
    const std::string_view row = text.substr(start, end - start);
    std::vector<Polynomial> entries;
    std::size_t s = 0;
    while (s <= row.size()) {
      const std::size_t e = std::min(row.find(',', s), row.size());
      entries.push_back(parse_polynomial(row.substr(s, e - s), ring));
      s = e + 1;
    }
    rows.push_back(std::move(entries));
    start = end + 1;
  }
  const std::size_t n = rows.size();
  std::vector<Polynomial> flat;
  for (auto& r : rows) {
    if (r.size() != n + 1) throw InvalidInput("matrix text must have n rows of n+1 entries");
    for (auto& e : r) flat.push_back(std::move(e));
  }
  return MatrixGerm(n, std::move(flat));
}

PolyMatrix MatrixGerm::as_rows() const {
  PolyMatrix out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    out[i].assign(entries_.begin() + static_cast<long>(i * cols()),
                  entries_.begin() + static_cast<long>((i + 1) * cols()));
  }
  return out;
}

std::string MatrixGerm::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i > 0) out << "; ";
    for (std::size_t j = 0; j < cols(); ++j) {
      if (j > 0) out << ", ";
      out << (*this)(i, j).to_string();
    }
  }
  return out.str();
}

std::vector<Polynomial> maximal_minors(const MatrixGerm& m) {
  const std::size_t n = m.rows();
  std::vector<Polynomial> out;
  out.reserve(n + 1);
  for (std::size_t s = 0; s <= n; ++s) {
    PolyMatrix sub(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j <= n; ++j) {
        if (j != s) sub[i].push_back(m(i, j));
      }
    }
    Polynomial d = determinant(sub);
    out.push_back(s % 2 == 0 ? d : -d);
  }
  return out;
}

std::size_t corank(const MatrixGerm& m) {
  QMatrix at0(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) at0[i][j] = m(i, j).constant_term();
  }
  return m.rows() - rank(at0);
}

CurveFunctionPair embed_plane_curve(const Polynomial& g, const Polynomial& f) {
  const RingPtr ring = space_ring();
  const Polynomial G = g.in_ring(ring);
  const Polynomial F = f.in_ring(ring);
  if (G.involves(2) || F.involves(2)) throw InvalidInput("plane data must not involve z");
  return {MatrixGerm(1, {G, Polynomial::variable(ring, 2)}), F};
}

std::vector<ModuleElement> tangent_space(const CurveFunctionPair& pair) {
  const MatrixGerm& m = pair.matrix;
  const RingPtr& ring = pair.ring();
  const std::size_t n = m.rows();
  const std::size_t rank = pair.module_rank();
  const std::size_t fslot = rank - 1;
  std::vector<ModuleElement> gens;

  auto zero = [&] { return ModuleElement(ring, rank); };
  // E_ij M: row j of M moved to row i.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ModuleElement e = zero();
      for (std::size_t c = 0; c <= n; ++c) e[i * (n + 1) + c] = m(j, c);
      gens.push_back(std::move(e));
    }
  }
  // M E_kl: column k of M moved to column l.
  for (std::size_t k = 0; k <= n; ++k) {
    for (std::size_t l = 0; l <= n; ++l) {
      ModuleElement e = zero();
      for (std::size_t r = 0; r < n; ++r) e[r * (n + 1) + l] = m(r, k);
      gens.push_back(std::move(e));
    }
  }
  for (const auto& minor : maximal_minors(m)) {
    ModuleElement e = zero();
    e[fslot] = minor;
    gens.push_back(std::move(e));
  }
  for (std::size_t v = 0; v < ring->size(); ++v) {
    ModuleElement e = zero();
    for (std::size_t k = 0; k < m.entries().size(); ++k) e[k] = m.entries()[k].derivative(v);
    e[fslot] = pair.function.derivative(v);
    gens.push_back(std::move(e));
  }
  return gens;
}

namespace {

Rational det_at_origin(const PolyMatrix& a) {
  QMatrix q(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (const auto& e : a[i]) q[i].push_back(e.constant_term());
  }
  return determinant(q);
}

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b) {
  const std::size_t inner = b.size();
  PolyMatrix out(a.size(), std::vector<Polynomial>(b.front().size(), Polynomial(b[0][0].ring())));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != inner) throw InvalidInput("matrix shapes do not match");
    for (std::size_t j = 0; j < out[i].size(); ++j) {
      for (std::size_t k = 0; k < inner; ++k) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

}  // namespace

bool in_minor_ideal(const Polynomial& g, const MatrixGerm& m) {
  const RingPtr& ring = m.ring();
  std::vector<ModuleElement> gens;
  for (const auto& minor : maximal_minors(m)) {
    if (!minor.is_zero()) gens.push_back(ModuleElement({minor}));
  }
  const auto sb = standard_basis(gens, ring, 1);
  return normal_form(ModuleElement({g.in_ring(ring)}), sb).is_zero();
}

CurveFunctionPair apply_equivalence(const CurveFunctionPair& pair, const EquivalenceWitness& w) {
  const MatrixGerm& m = pair.matrix;
  const RingPtr& ring = pair.ring();
  const std::size_t n = m.rows();
  if (w.a.size() != n || w.b.size() != n + 1) throw InvalidInput("witness matrices have wrong size");
  if (det_at_origin(w.a) == 0) throw InvalidInput("A is not invertible at the origin");
  if (det_at_origin(w.b) == 0) throw InvalidInput("B is not invertible at the origin");
  if (w.h.size() != ring->size()) throw InvalidInput("coordinate change has wrong arity");
  QMatrix jac(ring->size());
  for (std::size_t i = 0; i < ring->size(); ++i) {
    if (w.h[i].constant_term() != 0) throw InvalidInput("coordinate change must fix the origin");
    for (std::size_t j = 0; j < ring->size(); ++j) {
      jac[i].push_back(w.h[i].coefficient(unit_monomial(j)));
    }
  }
  if (determinant(jac) == 0) throw InvalidInput("coordinate change is not invertible");
  if (!w.g.is_zero() && !in_minor_ideal(w.g, m)) {
    throw InvalidInput("added function is outside the minor ideal");
  }

  const PolyMatrix amb = multiply(multiply(w.a, m.as_rows()), w.b);
  std::vector<Polynomial> flat;
  for (const auto& row : amb) {
    for (const auto& e : row) flat.push_back(e.compose(w.h));
  }
  return {MatrixGerm(n, std::move(flat)), (pair.function + w.g.in_ring(ring)).compose(w.h)};
}

}  // namespace fsc
