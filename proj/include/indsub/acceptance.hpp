#pragma once

#include <functional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "indsub/graph.hpp"
#include "indsub/reductions.hpp"

namespace indsub {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

// Pinned limits.
inline constexpr double kEngineTimeLimit = 600.0;
inline constexpr double kUnimodularTimeLimit = 1.0;
inline constexpr double kWinWinTimeLimit = 300.0;
inline constexpr int kRandomSeeds = 20;

inline constexpr int kNumCriteria = 13;

// Runs the selected criteria (all when empty). `progress` receives each
// result as soon as it is known.
std::vector<CriterionResult> run_acceptance(
    const std::set<int>& only = {},
    const std::function<void(const CriterionResult&)>& progress = {});

std::string format_result(const CriterionResult& r);

// G(n, 1/2) from raw generator bits.
Graph random_graph(int n, std::uint64_t seed);
// Random colored graph: class sizes in [1, max_class], edges only between
// adjacent colors, each kept with probability 1/2.
ColoredGraph random_colored_graph(const Graph& pattern, int max_class, std::uint64_t seed);

}  // namespace indsub
