#include <algorithm>
#include <chrono>
#include <cstdint>
#include <random>
#include <vector>

#include "doctest.h"
#include "firelink/errors.hpp"
#include "firelink/placement.hpp"
#include "support.hpp"

using namespace firelink;

namespace {

fire::DetectionProblem random_problem(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  fire::DetectionProblem p;
  for (std::size_t i = 0; i < n; ++i) {
    // Some exact zeros and ones exercise the degenerate branches.
    const double roll = u(rng);
    p.ignition.push_back(roll < 0.1 ? 0.0 : u(rng));
    p.miss.push_back(roll > 0.9 ? 1.0 : (roll > 0.85 ? 0.0 : u(rng)));
  }
  return p;
}

// Independent oracle: dynamic programming over regions and budget.
double dp_best(const fire::DetectionProblem& p, std::int64_t budget) {
  std::vector<double> best(static_cast<std::size_t>(budget) + 1, 0.0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::vector<double> next(best.size(), 0.0);
    for (std::int64_t k = 0; k <= budget; ++k) {
      double top = 0.0;
      double miss_pow = 1.0;
      for (std::int64_t n = 0; n <= k; ++n) {
        top = std::max(top, best[static_cast<std::size_t>(k - n)] + p.ignition[i] * (1.0 - miss_pow));
        miss_pow *= p.miss[i];
      }
      next[static_cast<std::size_t>(k)] = top;
    }
    best = std::move(next);
  }
  return best.back();
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  std::vector<std::uint64_t> row(k + 1, 0);
  row[0] = 1;
  for (std::uint64_t i = 1; i <= n; ++i) {
    for (std::uint64_t j = std::min(i, k); j > 0; --j) row[j] += row[j - 1];
  }
  return row[k];
}

}  // namespace

TEST_CASE("greedy matches brute force and dynamic programming on small instances") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<std::size_t> n_dist(1, 6);
  std::uniform_int_distribution<std::int64_t> k_dist(0, 12);
  for (int trial = 0; trial < 300; ++trial) {
    const auto problem = random_problem(rng, n_dist(rng));
    const auto k = k_dist(rng);
    const auto greedy = placement::optimize_greedy(problem, k);
    const auto brute = placement::optimize_bruteforce(problem, k);
    const double ug = fire::utility(problem, greedy.counts);
    CHECK(ug == doctest::Approx(fire::utility(problem, brute.counts)).epsilon(1e-12));
    CHECK(ug == doctest::Approx(dp_best(problem, k)).epsilon(1e-12));
    CHECK(greedy.total() <= k);
    CHECK_NOTHROW(greedy.validate(problem.size()));
  }
}

TEST_CASE("greedy breaks ties toward the lowest index") {
  fire::DetectionProblem problem{{0.5, 0.5, 0.5}, {0.5, 0.5, 0.5}};
  CHECK(placement::optimize_greedy(problem, 1).counts == std::vector<std::int64_t>{1, 0, 0});
  CHECK(placement::optimize_greedy(problem, 2).counts == std::vector<std::int64_t>{1, 1, 0});
  CHECK(placement::optimize_greedy(problem, 4).counts == std::vector<std::int64_t>{2, 1, 1});
}

TEST_CASE("greedy skips regions with no marginal gain") {
  // p = 0, q = 1 and (after one sensor) q = 0 all stop contributing.
  fire::DetectionProblem problem{{0.0, 0.7, 0.4}, {0.5, 1.0, 0.0}};
  const auto result = placement::optimize_greedy(problem, 10);
  CHECK(result.counts == std::vector<std::int64_t>{0, 0, 1});
  CHECK(result.total() == 1);
  CHECK(result.budget == 10);
}

TEST_CASE("greedy allocations are nested in the budget") {
  std::mt19937_64 rng(29);
  const auto problem = random_problem(rng, 40);
  auto previous = placement::optimize_greedy(problem, 0);
  CHECK(previous.total() == 0);
  for (std::int64_t k = 1; k <= 200; k += 7) {
    const auto next = placement::optimize_greedy(problem, k);
    for (std::size_t i = 0; i < problem.size(); ++i) CHECK(next.counts[i] >= previous.counts[i]);
    CHECK(fire::utility(problem, next.counts) >= fire::utility(problem, previous.counts));
    previous = next;
  }
}

TEST_CASE("budget validation") {
  fire::DetectionProblem problem{{0.5}, {0.5}};
  CHECK_THROWS_AS(placement::optimize_greedy(problem, -1), ValidationError);
  CHECK_THROWS_AS(placement::optimize_bruteforce(problem, -1), ValidationError);
  fire::DetectionProblem bad{{0.5, 0.1}, {0.5}};
  CHECK_THROWS_AS(placement::optimize_greedy(bad, 1), ValidationError);
}

TEST_CASE("allocation counting") {
  CHECK(placement::count_allocations(1, 0) == 1);
  CHECK(placement::count_allocations(3, 2) == 10);
  for (std::size_t n = 1; n <= 8; ++n) {
    for (std::int64_t k = 0; k <= 15; ++k) {
      CHECK(placement::count_allocations(n, k) == binomial(n + static_cast<std::uint64_t>(k), n));
    }
  }
  CHECK(placement::count_allocations(11000, 1'000'000) == UINT64_MAX);
}

TEST_CASE("brute force refuses oversized instances") {
  fire::DetectionProblem problem;
  problem.ignition.assign(30, 0.5);
  problem.miss.assign(30, 0.5);
  CHECK_THROWS_AS(placement::optimize_bruteforce(problem, 30), ValidationError);
  // Allocations with total <= K over N = 2 regions: (K + 1)(K + 2) / 2.
  placement::BruteForceOptions small{6};
  fire::DetectionProblem tiny{{0.5, 0.5}, {0.5, 0.5}};
  CHECK_THROWS_AS(placement::optimize_bruteforce(tiny, 3, small), ValidationError);
  CHECK_NOTHROW(placement::optimize_bruteforce(tiny, 2, small));
}

TEST_CASE("placement validation") {
  placement::Placement p{{1, 2, 3}, 6};
  CHECK(p.total() == 6);
  CHECK_NOTHROW(p.validate(3));
  CHECK_THROWS_AS(p.validate(4), ValidationError);
  p.budget = 5;
  CHECK_THROWS_AS(p.validate(3), ValidationError);
  p = {{1, -1, 0}, 5};
  CHECK_THROWS_AS(p.validate(3), ValidationError);
}

TEST_CASE("biomass-uniform placement") {
  auto grid = testing::lattice(2, 3, 10.0, 37.0, -120.0,
                               [](fire::RegionEnv& r, int row, int col) { r.biomass = (row + col) % 2 == 0 ? 1.0 : 0.0; });
  const auto result = placement::biomass_uniform(grid, 7);
  CHECK(result.eligible_regions == 3);
  CHECK_FALSE(result.no_eligible_regions);
  CHECK(result.placement.counts == std::vector<std::int64_t>{3, 0, 2, 0, 2, 0});
  CHECK(result.placement.total() == 7);

  const auto none = placement::biomass_uniform(
      testing::lattice(1, 2, 10.0, 37.0, -120.0, [](fire::RegionEnv& r, int, int) { r.biomass = 0.0; }), 5);
  CHECK(none.no_eligible_regions);
  CHECK(none.placement.total() == 0);
}

TEST_CASE("biomass-uniform spreads 1e5 sensors over 3500 qualifying regions as 28 or 29") {
  auto grid = testing::lattice(50, 100, 10.0, 37.0, -120.0,
                               [](fire::RegionEnv& r, int row, int) { r.biomass = row < 35 ? 1.0 : 0.0; });
  const auto result = placement::biomass_uniform(grid, 100'000);
  REQUIRE(result.eligible_regions == 3500);
  std::int64_t lo = INT64_MAX, hi = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid.regions[i].biomass > 0.0) {
      lo = std::min(lo, result.placement.counts[i]);
      hi = std::max(hi, result.placement.counts[i]);
    } else {
      CHECK(result.placement.counts[i] == 0);
    }
  }
  CHECK(lo == 28);
  CHECK(hi == 29);
  CHECK(result.placement.total() == 100'000);
}

TEST_CASE("grid overloads agree with the problem overloads") {
  auto grid = testing::lattice(2, 2, 10.0, 37.0, -120.0, [](fire::RegionEnv& r, int row, int col) {
    r.biomass = 0.3 + 0.2 * row + 0.1 * col;
    r.spread_rate = 0.2 + 0.3 * col;
  });
  const auto params = fire::FireModelParams::with_soil(0.1, 0.35);
  const auto problem = fire::detection_problem(grid, 4.0, params);
  CHECK(placement::optimize_greedy(grid, 9, 4.0, params).counts == placement::optimize_greedy(problem, 9).counts);
  CHECK(fire::utility(problem, placement::optimize_bruteforce(grid, 5, 4.0, params).counts) ==
        doctest::Approx(fire::utility(problem, placement::optimize_greedy(problem, 5).counts)).epsilon(1e-12));
}
