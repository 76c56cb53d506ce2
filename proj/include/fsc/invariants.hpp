#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fsc/catalog.hpp"

namespace fsc {

/// The pair is not finitely determined: its tangent space has infinite
/// codimension.
class NotFinitelyDetermined : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Random draws kept failing the genericity checks.
class PersistentDegeneracy : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct GenericityConfig {
  std::uint64_t seed = 0;
  long coefficient_range = 30;
  int retries = 8;
  // Number of independent successful draws that must agree.
  int agreeing_draws = 2;
};

struct Deformation {
  std::size_t base_dimension = 0;
  std::vector<ModuleElement> directions;
  // (component, monomial) of each direction.
  std::vector<std::pair<std::size_t, Monomial>> monomials;
  bool truncated = false;
};

StandardBasis tangent_basis(const CurveFunctionPair& pair, const ModuleOrder& order = {});

int tjurina(const CurveFunctionPair& pair);

Deformation miniversal_basis(const CurveFunctionPair& pair, bool truncated);

// Morse critical points of a generic perturbation of f on a generic smoothing
// g = eps of a quasi-homogeneous plane pair over (x, y).
int milnor_plane(const Polynomial& g, const Polynomial& f, const GenericityConfig& cfg);

int milnor_C_space(int p, int q, int r, const GenericityConfig& cfg);

struct ConjectureReport {
  EntryId id;
  int tau = 0;
  std::optional<int> mu;
  // "equal", "mismatch", "skipped" (no route), or "error: ..." on degeneracy.
  std::string status;
  bool equal() const { return mu && *mu == tau; }
};

ConjectureReport conjecture_check(const CatalogEntry& entry, const GenericityConfig& cfg);

}  // namespace fsc
