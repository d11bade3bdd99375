#include "firelink/placement.hpp"

#include <limits>
#include <numeric>
#include <queue>
#include <string>

#include "firelink/errors.hpp"
#include "firelink/kernels.hpp"

namespace firelink::placement {

std::int64_t Placement::total() const { return std::accumulate(counts.begin(), counts.end(), std::int64_t{0}); }

void Placement::validate(std::size_t expected_regions) const {
  if (counts.size() != expected_regions) {
    throw ValidationError("placement has " + std::to_string(counts.size()) + " regions, expected " +
                          std::to_string(expected_regions));
  }
  if (budget < 0) throw ValidationError("placement budget must be >= 0");
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] < 0) throw ValidationError("placement: negative count in region " + std::to_string(i));
  }
  if (total() > budget) {
    throw ValidationError("placement uses " + std::to_string(total()) + " sensors, budget is " +
                          std::to_string(budget));
  }
}

namespace {

void check_budget(std::int64_t budget) {
  if (budget < 0) throw ValidationError("sensor budget must be >= 0");
}

struct Candidate {
  double gain;
  std::size_t region;
};

// Max-heap on gain; on equal gain the lower region index comes first.
struct CandidateLess {
  bool operator()(const Candidate& a, const Candidate& b) const {
    if (a.gain != b.gain) return a.gain < b.gain;
    return a.region > b.region;
  }
};

}  // namespace

Placement optimize_greedy(const fire::DetectionProblem& problem, std::int64_t budget) {
  problem.validate();
  check_budget(budget);
  const std::size_t n = problem.size();
  Placement result{std::vector<std::int64_t>(n, 0), budget};

  std::vector<double> miss_power(n, 1.0);  // q^{n_i}
  std::vector<Candidate> seed;
  seed.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double gain = problem.ignition[i] * (1.0 - problem.miss[i]);
    if (gain > 0.0) seed.push_back({gain, i});
  }
  std::priority_queue<Candidate, std::vector<Candidate>, CandidateLess> heap(CandidateLess{}, std::move(seed));

  for (std::int64_t placed = 0; placed < budget && !heap.empty(); ++placed) {
    const Candidate top = heap.top();
    heap.pop();
    const std::size_t i = top.region;
    ++result.counts[i];
    miss_power[i] *= problem.miss[i];
    const double next = problem.ignition[i] * miss_power[i] * (1.0 - problem.miss[i]);
    if (next > 0.0) heap.push({next, i});
  }
  return result;
}

Placement optimize_greedy(const fire::RegionGrid& grid, std::int64_t budget, double hours,
                          const fire::FireModelParams& params) {
  return optimize_greedy(fire::detection_problem(grid, hours, params), budget);
}

std::uint64_t count_allocations(std::size_t regions, std::int64_t budget) {
  if (budget < 0) return 0;
  // C(regions + budget, regions) built incrementally; every partial product is
  // itself a binomial coefficient, so the division is exact.
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t value = 1;
  const auto k = static_cast<std::uint64_t>(budget);
  for (std::uint64_t j = 1; j <= regions; ++j) {
    const std::uint64_t factor = k + j;
    const auto g = std::gcd(value, j);
    const std::uint64_t reduced = value / g;
    const std::uint64_t factor_reduced = factor / (j / g);
    if (reduced != 0 && factor_reduced > kMax / reduced) return kMax;
    value = reduced * factor_reduced;
  }
  return value;
}

namespace {

struct Search {
  const std::vector<std::vector<double>>& terms;
  std::vector<std::int64_t> current;
  std::vector<std::int64_t> best;
  double best_value = -1.0;

  void run(std::size_t region, std::int64_t remaining, double partial) {
    if (region == current.size()) {
      // Enumeration runs from large to small counts, so the first allocation
      // reaching a utility value is the lexicographically greatest.
      if (partial > best_value) {
        best_value = partial;
        best = current;
      }
      return;
    }
    for (std::int64_t c = remaining; c >= 0; --c) {
      current[region] = c;
      run(region + 1, remaining - c, partial + terms[region][static_cast<std::size_t>(c)]);
    }
    current[region] = 0;
  }
};

}  // namespace

Placement optimize_bruteforce(const fire::DetectionProblem& problem, std::int64_t budget, BruteForceOptions options) {
  problem.validate();
  check_budget(budget);
  const std::size_t n = problem.size();
  const std::uint64_t allocations = count_allocations(n, budget);
  if (allocations > options.max_allocations) {
    throw ValidationError("brute force refused: " + std::to_string(allocations) + " allocations exceed cap " +
                          std::to_string(options.max_allocations));
  }
  if (n == 0) return Placement{{}, budget};

  std::vector<std::vector<double>> terms(n);
  for (std::size_t i = 0; i < n; ++i) {
    terms[i].resize(static_cast<std::size_t>(budget) + 1);
    for (std::int64_t c = 0; c <= budget; ++c) {
      terms[i][static_cast<std::size_t>(c)] = problem.ignition[i] * (1.0 - kernels::ipow(problem.miss[i], c));
    }
  }
  Search search{terms, std::vector<std::int64_t>(n, 0), {}, -1.0};
  search.run(0, budget, 0.0);
  return Placement{std::move(search.best), budget};
}

Placement optimize_bruteforce(const fire::RegionGrid& grid, std::int64_t budget, double hours,
                              const fire::FireModelParams& params, BruteForceOptions options) {
  return optimize_bruteforce(fire::detection_problem(grid, hours, params), budget, options);
}

UniformPlacement biomass_uniform(const fire::RegionGrid& grid, std::int64_t budget) {
  check_budget(budget);
  UniformPlacement out;
  out.placement = Placement{std::vector<std::int64_t>(grid.size(), 0), budget};
  std::vector<std::size_t> eligible;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid.regions[i].biomass > 0.0) eligible.push_back(i);
  }
  out.eligible_regions = eligible.size();
  if (eligible.empty()) {
    out.no_eligible_regions = true;
    return out;
  }
  const auto m = static_cast<std::int64_t>(eligible.size());
  const std::int64_t share = budget / m;
  const std::int64_t extra = budget % m;
  for (std::int64_t j = 0; j < m; ++j) {
    out.placement.counts[eligible[static_cast<std::size_t>(j)]] = share + (j < extra ? 1 : 0);
  }
  return out;
}

}  // namespace firelink::placement
