#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "vtorus/extremal.hpp"

namespace vtorus {

/// Deterministic uniform generator (the standard distributions are
/// implementation-defined; this one is pinned to the raw mt19937_64 stream).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform(double lo, double hi) {
    const double u = static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

  Complex uniform_complex(double lo, double hi) { return {uniform(lo, hi), uniform(lo, hi)}; }

 private:
  std::mt19937_64 eng_;
};

struct CheckReport {
  std::string name;
  bool pass = false;
  double worst = 0;       // worst observed defect, check-specific meaning
  double budget = 0;      // tolerance it was held against
  std::string detail;
};

// Randomized invariant checks, one per suite entry.  All deterministic
// given the seed.
CheckReport check_zero_on_torus(std::uint64_t seed);
CheckReport check_cross_formula_k2(std::uint64_t seed);
CheckReport check_trapezoid_reflection(std::uint64_t seed);
CheckReport check_cylinder_branch_swap(std::uint64_t seed);
CheckReport check_fiber_constancy(std::uint64_t seed);
CheckReport check_rotation_invariance(std::uint64_t seed);
CheckReport check_growth(std::uint64_t seed);
CheckReport check_leaf_vieta(std::uint64_t seed);
CheckReport check_oracle_sandwich_fast(std::uint64_t seed);

/// Suite registry: "all" or one of {zeroset, crossformula, symmetry, fiber,
/// rotation, growth, vieta, oracle}.  Throws std::invalid_argument for an
/// unknown suite name.
std::vector<CheckReport> run_verification_suite(const std::string& suite, std::uint64_t seed);
std::vector<std::string> verification_suite_names();

}  // namespace vtorus
