#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "fsc/catalog.hpp"
#include "fsc/invariants.hpp"

namespace fsc::cli {

using Json = nlohmann::ordered_json;

/// Outcome of one verification; details carry the offending values on failure.
struct Check {
  std::string name;
  bool pass = false;
  std::string summary;
  Json details = Json::object();
};

Json to_json(const Check& c);

std::string rational_text(const Rational& q);
Json entry_json(const EntryId& id);
// {family, indices, tau, matrix, function}
Json catalog_record(const CatalogEntry& e);
// {family, indices, tau, mu, status}
Json conjecture_json(const ConjectureReport& r);

Check check_tau_calibration(const RangeConfig& range);
Check check_conjecture(const RangeConfig& range, std::span<const std::uint64_t> seeds);
Check check_ll_table(const RangeConfig& range);
Check check_discriminant(std::uint64_t seed, std::size_t points = 100);
Check check_bifurcation(std::uint64_t seed, std::size_t points = 100);

struct CoveringConfig {
  int off_sigma = 100;
  int on_sigma = 20;
  int extended_draws = 6;
  int fiber_draws = 10000;
};
// Entries C_{p,q,r} given as (p, q, r); empty means every p, q, r <= 2.
Check check_covering(std::uint64_t seed, const CoveringConfig& cfg = {},
                     std::vector<std::array<int, 3>> entries = {});

// Random R_c-equivalence witness for a pair; units at the origin, invertible
// linear part, added function inside the minor ideal.
EquivalenceWitness random_witness(const CurveFunctionPair& pair, std::uint64_t seed);
Check check_equivalence_invariance(const RangeConfig& range, std::uint64_t seed, int witnesses = 20);
Check check_standard_basis_properties(std::uint64_t seed);

}  // namespace fsc::cli
