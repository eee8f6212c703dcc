#pragma once

#include <cstdint>
#include <vector>

#include "fidgibbs/factor_graph.hpp"

namespace fidgibbs::engine {

struct EngineOptions {
  int threads = 1;               // parallelism across the 2^N per-outcome runs
  double brute_force_cap = 1e8;  // max configurations brute force will visit
};

// Exact sum of weight products over every configuration, by direct
// enumeration with early pruning.  The independent oracle for eliminate.
double brute_force_enumerate(const FactorGraph& graph, double cap = 1e8);

// The same unnormalized weight by variable elimination along the tree.
// Throws UnsupportedTopologyError on cyclic graphs.
double eliminate(const FactorGraph& graph);

// Exact normalized marginal of one variable, grades pooled.
std::vector<double> variable_marginal(const FactorGraph& graph, int var);

// Weight of one full configuration restricted to a single factor; the model
// definition shared by the enumerator and the trajectory checks.
double factor_weight(const FactorGraph& graph, const Factor& factor,
                     const std::vector<int>& values);

// Runs eliminate once per outcome vector and normalizes.  Throws
// InfeasibleModelError when every outcome has zero weight.
ProbabilityTable outcome_distribution(const ExperimentSpec& spec, const fid::WeightParams& params,
                                      const EngineOptions& options = {});
ProbabilityTable outcome_distribution(const dsl::CircuitSpec& circuit,
                                      const fid::WeightParams& params,
                                      const EngineOptions& options = {});

struct CensusRow {
  double count = 0.0;  // configurations with exactly k kinks (zero-weight ones included)
  double total_weight = 0.0;
};

// Configurations grouped by number of nonzero-angle steps.  Rows
// 0..max_kinks are exact; overflow pools everything beyond.
struct Census {
  int max_kinks = 0;
  std::vector<CensusRow> by_kink_count;
  CensusRow overflow;
};

Census census(const FactorGraph& graph, int max_kinks);

// One exact conditional draw of all worldline angles given its outcome.
// `values` is aligned with the variables of
// build_factor_graph(spec, params, outcome).
struct Trajectory {
  OutcomeVector outcome;
  std::vector<int> values;
};

struct SampleBatch {
  std::uint64_t seed = 0;
  long long n_samples = 0;
  int outcome_bits = 0;
  std::vector<long long> outcome_counts;  // by outcome index, sums to n_samples
  std::vector<Trajectory> trajectories;   // the first `retain` samples
};

// Draws outcome vectors from the exact engine distribution; identical seed
// and spec reproduce identical batches.  Trajectories are ancestral samples
// from the elimination messages (no burn-in).
SampleBatch exact_sample(const ExperimentSpec& spec, const fid::WeightParams& params,
                         std::uint64_t seed, long long n, int retain = 0,
                         const EngineOptions& options = {});
SampleBatch exact_sample(const dsl::CircuitSpec& circuit, const fid::WeightParams& params,
                         std::uint64_t seed, long long n, int retain = 0,
                         const EngineOptions& options = {});

// The steps of a sampled configuration at which the angle changes.
std::vector<fid::KinkRecord> extract_kinks(const FactorGraph& graph,
                                           const std::vector<int>& values);

}  // namespace fidgibbs::engine
