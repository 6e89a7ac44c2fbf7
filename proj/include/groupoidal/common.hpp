#ifndef GROUPOIDAL_COMMON_HPP
#define GROUPOIDAL_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace groupoidal {

// Default numerical budgets. Construction-time identities are expected to
// hold at close to machine precision; derived checks get a looser bound so
// accumulated round-off in long products never trips them. The rank cutoff
// is the singular-value threshold separating numerical null space from range.
inline constexpr double kConstructTol = 1e-9;
inline constexpr double kVerifyTol = 1e-8;
inline constexpr double kRankCutoff = 1e-9;

// Closure cap for generated groups; keeps exhaustive loops interactive.
inline constexpr int kDefaultGroupCap = 10080;
// Refuse to tabulate groupoids beyond this many elements (dense m x m table).
inline constexpr int kGroupoidElementCap = 3000;

struct size_limit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct not_a_subgroup_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct not_transitive_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct structure_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct decomposability_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct constancy_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// FNV-1a, used for deterministic fingerprints of canonical orderings.
inline std::uint64_t fnv1a(const std::string& s, std::uint64_t h = 1469598103934665603ull) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t v);

}  // namespace groupoidal

#endif
