#pragma once

// Verification campaigns over the Kronecker module categories and the cluster
// model. Failures are reported in the returned Report, never thrown.

#include <cstdint>
#include <string>
#include <vector>

#include "kronlab/clustercat.hpp"
#include "kronlab/report.hpp"

namespace kronlab {

/// m = 3: Hom constants of the tilting pair, the rigid classification up to
/// `bound`, the rigid objects of the window of radius `window`, the mutation
/// chain and the two complements, and the equivalence with mod K_3.
Report verify_theorem_1_2(std::int64_t bound, std::int64_t window, std::uint64_t seed);
/// Same campaign on a caller-supplied model (must have m = 3).
Report verify_theorem_1_2(const ClusterModel& model, std::int64_t bound, std::int64_t window);

/// m = 6: the degree constant, the rigid classification, consistency of the
/// orbit assignment with tau, and rigidity of single orbits only.
Report verify_theorem_1_3(std::int64_t bound, std::uint64_t seed);

/// Every d with entries <= bound: no rigid sample when q(d) <= 0, a unique
/// rigid indecomposable at each real root, and nothing else with End = k.
Report kac_rigid_check(const Quiver& q, const std::string& name, std::int64_t bound, std::size_t trials,
                       std::uint64_t seed);

/// "K3", "A2", "A3", "1" (single vertex), ...
Quiver named_quiver(const std::string& name);

struct Campaign {
  enum class Kind { theorem_1_2, theorem_1_3, kac };
  Kind kind = Kind::theorem_1_2;
  std::int64_t bound = 40;
  std::int64_t window = 6;
  std::size_t trials = kDefaultTrials;
  std::string quiver;  // kac only
};

struct RunConfig {
  std::uint64_t seed = 0;
  std::vector<Campaign> campaigns;
};

/// Both theorem campaigns at bound 40, window 6, and the Kac check on
/// K2, K3, K6 (bound 8) and A2, A3 (bound 3).
RunConfig default_config(std::uint64_t seed);

/// One report per campaign, ordered by claim id.
std::vector<Report> run_all(const RunConfig& config);

}  // namespace kronlab
