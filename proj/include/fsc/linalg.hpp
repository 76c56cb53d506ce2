#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fsc/polynomial.hpp"

namespace fsc {

class UPoly;

using QMatrix = std::vector<std::vector<Rational>>;
using PolyMatrix = std::vector<std::vector<Polynomial>>;

Rational pow_rational(const Rational& base, unsigned e);

Rational determinant(QMatrix m);
std::size_t rank(QMatrix m);

// det(t*I - m).
UPoly charpoly(const QMatrix& m);

// Matrix of multiplication by v on Q[t]/(modulus) in the basis 1, t, t^2, ...
QMatrix multiplication_matrix(const UPoly& v, const UPoly& modulus);

// Bareiss fraction-free determinant; entries share one ring.
Polynomial determinant(const PolyMatrix& m);

/// Sparse linear system over the rationals, eliminated row by row as rows
/// arrive so that only an echelon basis is ever stored.
class SparseLinearSystem {
public:
  using Row = std::vector<std::pair<std::size_t, Rational>>;

  explicit SparseLinearSystem(std::size_t columns) : columns_(columns), pivot_of_(columns, npos) {}

  std::size_t columns() const { return columns_; }
  // Row entries may come in any order; duplicates are summed.
  void add_equation(Row row, Rational rhs);
  bool consistent() const { return consistent_; }
  std::size_t rank() const { return pivots_.size(); }

  // A particular solution with free unknowns set to zero, or nullopt.
  std::optional<std::vector<Rational>> solve() const;

private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  struct Pivot {
    Row row;  // sorted by column, leading entry normalized to 1
    Rational rhs;
  };

  std::size_t columns_;
  std::vector<Pivot> pivots_;
  std::vector<std::size_t> pivot_of_;
  bool consistent_ = true;
};

}  // namespace fsc
