#pragma once

#include <cstdint>
#include <vector>

#include "firelink/fire_model.hpp"

namespace firelink::placement {

struct Placement {
  std::vector<std::int64_t> counts;  // sensors per region
  std::int64_t budget = 0;

  std::int64_t total() const;
  /// Non-negative counts, sum within budget, and `expected_regions` entries.
  void validate(std::size_t expected_regions) const;
};

/// Exact maximiser of the system utility under a total sensor budget.
///
/// Each region's utility term p_I * (1 - q^n) is concave and non-decreasing in
/// n, so handing out sensors one at a time to the largest marginal gain
/// p_I * q^n * (1 - q) is optimal. Ties go to the lowest region index. A region
/// whose marginal gain reaches zero stops receiving sensors, so fewer than
/// `budget` sensors may be placed. Runs in O(N + K log N).
Placement optimize_greedy(const fire::DetectionProblem& problem, std::int64_t budget);
Placement optimize_greedy(const fire::RegionGrid& grid, std::int64_t budget, double hours,
                          const fire::FireModelParams& params);

struct BruteForceOptions {
  std::uint64_t max_allocations = 1'000'000;
};

/// Number of integer allocations with sum <= budget over `regions` regions,
/// i.e. C(regions + budget, regions). Saturates at UINT64_MAX.
std::uint64_t count_allocations(std::size_t regions, std::int64_t budget);

/// Exhaustive search over every feasible allocation. Among equal utilities the
/// lexicographically greatest allocation wins. Throws ValidationError when the
/// allocation count exceeds `options.max_allocations`; this is an oracle for
/// small instances only.
Placement optimize_bruteforce(const fire::DetectionProblem& problem, std::int64_t budget,
                              BruteForceOptions options = {});
Placement optimize_bruteforce(const fire::RegionGrid& grid, std::int64_t budget, double hours,
                              const fire::FireModelParams& params, BruteForceOptions options = {});

struct UniformPlacement {
  Placement placement;
  std::size_t eligible_regions = 0;
  bool no_eligible_regions = false;  // warning: nothing had biomass > 0
};

/// Splits the budget evenly over regions with biomass > 0; the K mod M extra
/// sensors go to the lowest-index eligible regions.
UniformPlacement biomass_uniform(const fire::RegionGrid& grid, std::int64_t budget);

}  // namespace firelink::placement
