#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fsc/catalog.hpp"

namespace fsc {

/// Delta: F times d/dlambda_i of the full deformation, rows of the
/// discriminant matrix. Sigma: F^i times the free-term direction of the
/// truncated deformation, rows of the bifurcation matrix.
enum class DecompositionMode { Delta, Sigma };

/// The linear system for one row has no solution at its quasi-degree.
class DecompositionFailure : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Witnesses of one decomposition, all over the ring of the deformation:
/// lhs = (A M + M B, G) + sum_r h_r d/dx_r (M, F) + absorber (0, 1)
///       + sum_j row_j d/dlambda_j (M, F).
struct GradedDecomposition {
  std::size_t index = 0;
  DecompositionMode mode = DecompositionMode::Delta;
  long shift = 0;  // quasi-degree of lhs relative to the component weights
  PolyMatrix a;
  PolyMatrix b;
  std::vector<Polynomial> h;
  std::vector<Polynomial> minor_coeffs;
  Polynomial g;
  std::vector<Polynomial> row;
  std::optional<Polynomial> absorber;
  std::size_t unknowns = 0;
};

// Weights of a printed deformation: the catalog weights of its normal form.
QuasiHomogeneity deformation_weights(const EntryId& id);

GradedDecomposition solve_decomposition(const ParametricPair& def, const QuasiHomogeneity& w,
                                        std::size_t index, DecompositionMode mode);

// Re-expands both sides of the identity; true when they agree exactly.
bool verify_decomposition(const ParametricPair& def, const GradedDecomposition& dec);

/// Matrix of vector fields on the base; row i is sum_j entries[i][j] d/dlambda_j.
struct VectorFieldMatrix {
  EntryId id;
  DecompositionMode mode = DecompositionMode::Delta;
  RingPtr ring;  // the parameters only
  std::vector<long> param_weights;
  std::vector<std::vector<Polynomial>> entries;
  std::vector<long> row_degrees;
  Polynomial det;  // normalized
  Rational scale;  // determinant of entries = scale * det
  std::vector<GradedDecomposition> decompositions;

  std::size_t size() const { return entries.size(); }
};

// Rows from F d/dlambda_i, i = 0..tau-1; det normalized to lambda_0^tau on the axis.
VectorFieldMatrix discriminant_matrix(const EntryId& id);
// Rows from F^i, i = 1..tau-1; det normalized to leading coefficient 1.
VectorFieldMatrix bifurcation_matrix(const EntryId& id);

// Restriction of det to the lambda_0 axis.
Polynomial axis_restriction(const VectorFieldMatrix& v);

// sum_j row[j] dp/dlambda_j.
Polynomial apply_field(std::span<const Polynomial> row, const Polynomial& p);

// Every row maps det into the ideal (det).
bool rows_tangent(const VectorFieldMatrix& v);

// The Euler field sum_j wt_j lambda_j d/dlambda_j is a constant combination of rows.
bool euler_in_span(const VectorFieldMatrix& v);

// Squarefree restriction to `lines` random lines through random points.
bool is_reduced(const Polynomial& p, std::uint64_t seed, int lines = 3);

enum class SigmaComponent { Nonsmooth, Degenerate, Level };
std::string component_name(SigmaComponent c);

struct ParameterPoint {
  std::vector<Rational> values;
  // False for certified-numeric points: rational approximations of real
  // algebraic points.
  bool exact = true;
  std::string stratum;
};

struct SampleResult {
  std::vector<ParameterPoint> points;
  bool empty = false;  // the component has no point at any draw
  std::string note;
};

// Points of Delta in the full base: a critical point on the zero level of a
// smooth curve, or (nonsmooth) a singular curve whose node lies on the zero level.
SampleResult sample_discriminant(const EntryId& id, std::size_t n, std::uint64_t seed,
                                 bool nonsmooth = false);

// Points of one component of Sigma in the truncated base.
SampleResult sample_sigma(const EntryId& id, std::size_t n, std::uint64_t seed,
                          SigmaComponent component);

struct VanishingCheck {
  bool exact_zero = false;
  double relative = 0;  // |p(v)| / sum |terms of p at v|
  bool ok() const { return exact_zero || relative <= 1e-8; }
};

VanishingCheck vanishes_at(const Polynomial& p, const ParameterPoint& point);

}  // namespace fsc
