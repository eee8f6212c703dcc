#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fidgibbs/circuit.hpp"
#include "fidgibbs/experiment.hpp"
#include "fidgibbs/fid_core.hpp"

namespace fidgibbs::engine {

// One grid-angle variable phi on a worldline.  Gates occupy a single time
// instant, so the variables just before and just after a gate share a time
// label and local factors never span more than one step.
struct VariableInfo {
  int spin = 0;             // 1-based worldline index
  int time = 0;             // global timestep label
  std::string segment;      // "q1s2", "src", ...
  int step_in_segment = 0;  // 0..L within the segment
  bool auxiliary = false;   // running-sum variable of the ghz source
};

enum class FactorKind {
  SourcePin,      // unary, one allowed grid index
  Measurement,    // unary, one allowed index per outcome sign (two when pooled)
  Step,           // binary w_D + w_C weight on (earlier, later); counts kinks
  DiffIndicator,  // binary, later - earlier == shift (mod M)
  SumIndicator,   // ternary, a + b - c == shift (mod M)
};

struct Factor {
  FactorKind kind;
  std::vector<int> vars;    // Step/Diff: {earlier, later}; Sum: {a, b, c}
  std::vector<int> allowed; // unary kinds: allowed grid indices
  int shift = 0;            // Diff / Sum constant
};

// The discretized model of one experiment and (optionally) one pinned
// outcome: a normalized product of the local factors above.  With no outcome
// the measurement factors admit both boundary angles of each spin.
struct FactorGraph {
  SourceKind kind = SourceKind::SingleSpin;
  int grid_size = 0;
  double epsilon = 0.0;
  int outcome_bits = 0;
  std::optional<OutcomeVector> outcome;

  std::vector<VariableInfo> variables;
  std::vector<Factor> factors;
  std::shared_ptr<const std::vector<double>> step_kernel;  // w[d], d = grid steps mod M

  int segment_count = 0;
  int total_steps = 0;  // number of Step factors

  int n_variables() const { return static_cast<int>(variables.size()); }
  double state_space() const;  // M^#variables, +inf on overflow
  bool is_tree() const;
  // Every factor touches at most two worldlines and a time span of at most
  // one step.
  bool locality_ok() const;
};

// The M x M transfer matrix generator, built once per parameter set and
// shared by every outcome's graph.
std::shared_ptr<const std::vector<double>> make_step_kernel(const fid::WeightParams& params);

// A null kernel means "build one"; outcome_distribution passes a shared one
// so the 2^N per-outcome graphs differ only in their measurement pins.
FactorGraph build_factor_graph(const ExperimentSpec& spec, const fid::WeightParams& params,
                               const std::optional<OutcomeVector>& outcome = std::nullopt,
                               std::shared_ptr<const std::vector<double>> kernel = nullptr);
FactorGraph build_factor_graph(const dsl::CircuitSpec& circuit, const fid::WeightParams& params,
                               const std::optional<OutcomeVector>& outcome = std::nullopt,
                               std::shared_ptr<const std::vector<double>> kernel = nullptr);

}  // namespace fidgibbs::engine
