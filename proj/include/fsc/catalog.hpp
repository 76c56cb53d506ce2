#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fsc/curve_model.hpp"

namespace fsc {

enum class Family { A, B, CPlane, F, CSpace, FDot, ECheck, X9Star, J10Star };

std::string family_name(Family f);

/// Identifies a catalog entry: family, table indices, and the modulus of the
/// two bounding germs. Indices of F, Fdot and E hold the subscript itself.
struct EntryId {
  Family family = Family::A;
  std::vector<int> indices;
  std::optional<Rational> modulus;

  // Short text form: A3, B4, C:3,2, C:1,1,1, F6, Fdot:5, E6, X9:2, J10:5/2.
  std::string to_string() const;
  // Typeset-ish label: A_3, C_{3,2}, Fdot_5, X9*(alpha=2).
  std::string label() const;
  static EntryId parse(std::string_view text);

  auto operator<=>(const EntryId& o) const {
    if (auto c = family <=> o.family; c != 0) return c;
    if (auto c = indices <=> o.indices; c != 0) return c;
    const Rational ma = modulus.value_or(Rational(0));
    const Rational mb = o.modulus.value_or(Rational(0));
    if (ma < mb) return std::strong_ordering::less;
    if (mb < ma) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  bool operator==(const EntryId& o) const { return (*this <=> o) == 0; }
};

/// Integer weights making the normal form quasi-homogeneous: matrix entry
/// (a, b) has weight row[a] + col[b] and the function has weight d.
struct QuasiHomogeneity {
  std::vector<long> var;  // x, y, z
  std::vector<long> row;
  std::vector<long> col;
  long d = 1;

  long entry_weight(std::size_t a, std::size_t b) const { return row[a] + col[b]; }
  // Weight shift of module component k (matrix entries row-major, function last).
  long component_weight(std::size_t k) const;
};

struct CatalogEntry {
  EntryId id;
  CurveFunctionPair pair;
  int expected_tau = 0;
  QuasiHomogeneity weights;
  // Plane entries keep the curve and function over (x, y).
  std::optional<Polynomial> plane_curve;
  std::optional<Polynomial> plane_function;

  bool is_plane() const { return plane_curve.has_value(); }
  bool is_bounding() const {
    return id.family == Family::X9Star || id.family == Family::J10Star;
  }
};

/// Index bounds of the default range.
struct RangeConfig {
  int a_max = 10;
  int b_max = 8;
  int c_plane_sum_max = 12;
  int f_max = 12;
  int c_space_max = 4;
  int fdot_max = 11;
  std::vector<Rational> moduli = {Rational(2), Rational(3), Rational(5, 2)};
  // Entries with larger expected tau are dropped; 0 disables the cut.
  int max_tau = 0;
};

RingPtr plane_ring();

CatalogEntry instantiate(const EntryId& id);
std::vector<EntryId> catalog_range(const RangeConfig& cfg);
std::vector<EntryId> adjacencies(const EntryId& id);

/// A deformation written out with its parameters as extra ring variables.
/// Ring order: x, y, z, then params in order.
struct ParametricPair {
  RingPtr ring;
  MatrixGerm matrix;
  Polynomial function;
  std::vector<std::string> params;
  std::vector<long> param_weights;
  // Index in params of the free term of the function; absent when truncated.
  std::optional<std::size_t> constant_param;

  std::size_t param_var(std::size_t i) const { return 3 + i; }
  // The deformation at a parameter point, over the spatial ring.
  CurveFunctionPair at(std::span<const Rational> values) const;
};

// Printed deformations: C_{p,q,r} (the full matrix [[x, y, alpha], [beta, y + gamma, z]]
// with the blocks of lambda's) and the A_k unfolding on [y, z].
ParametricPair printed_miniversal(const EntryId& id, bool truncated);

}  // namespace fsc
