#pragma once

#include <string_view>
#include <vector>

#include "fsc/linalg.hpp"
#include "fsc/local_algebra.hpp"

namespace fsc {

/// The spatial ring (x, y, z) shared by every curve germ.
RingPtr space_ring();

/// n x (n+1) polynomial matrix whose maximal minors cut out a space curve.
class MatrixGerm {
public:
  MatrixGerm() = default;
  MatrixGerm(std::size_t rows, std::vector<Polynomial> entries);

  // "x, y, 0; 0, y, z"
  static MatrixGerm parse(std::string_view text, const RingPtr& ring);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return rows_ + 1; }
  const RingPtr& ring() const { return entries_.front().ring(); }
  const Polynomial& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols() + j]; }
  const std::vector<Polynomial>& entries() const { return entries_; }
  PolyMatrix as_rows() const;

  std::string to_string() const;

  bool operator==(const MatrixGerm& o) const = default;

private:
  std::size_t rows_ = 0;
  std::vector<Polynomial> entries_;
};

struct CurveFunctionPair {
  MatrixGerm matrix;
  Polynomial function;

  const RingPtr& ring() const { return function.ring(); }
  // Rank of the module holding (matrix entries row-major, function).
  std::size_t module_rank() const { return matrix.entries().size() + 1; }
  bool operator==(const CurveFunctionPair& o) const = default;
};

/// Data of an R_c-equivalence: (A M B, f + g) composed with h.
struct EquivalenceWitness {
  PolyMatrix a;
  PolyMatrix b;
  std::vector<Polynomial> h;
  Polynomial g;
};

// One minor per deleted column s, with cofactor sign (-1)^s (0-based).
std::vector<Polynomial> maximal_minors(const MatrixGerm& m);

std::size_t corank(const MatrixGerm& m);

// ([g, z], f) over the spatial ring.
CurveFunctionPair embed_plane_curve(const Polynomial& g, const Polynomial& f);

// Generators of the extended tangent space, in the order
// (E_ij M, 0), (M E_kl, 0), (0, minor_s), (dM/dx_r, df/dx_r).
std::vector<ModuleElement> tangent_space(const CurveFunctionPair& pair);

CurveFunctionPair apply_equivalence(const CurveFunctionPair& pair, const EquivalenceWitness& w);

// Whether g lies in the ideal of maximal minors of m (in the local ring).
bool in_minor_ideal(const Polynomial& g, const MatrixGerm& m);

}  // namespace fsc
