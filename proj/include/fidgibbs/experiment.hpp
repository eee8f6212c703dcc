#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fidgibbs {

enum class SourceKind { GhzCircuit, GhzSumZero, SingletPair, SingleSpin, Sequential };

std::string_view to_string(SourceKind kind);
std::optional<SourceKind> source_kind_from_string(std::string_view name);

// Measurement results, one entry per spin (or per sequential measurement),
// each exactly +1 or -1.
using OutcomeVector = std::vector<int>;

// Table index of an outcome vector: spin 1 is the most significant bit and
// bit value 1 encodes A = -1, so outcome_index({+1,+1,+1}) == 0.
std::size_t outcome_index(const OutcomeVector& outcome);
OutcomeVector outcome_from_index(std::size_t index, int n);
int outcome_product(const OutcomeVector& outcome);

// "+--" style sign string, spin 1 first.
std::string outcome_signs(const OutcomeVector& outcome);
std::optional<OutcomeVector> outcome_from_signs(std::string_view signs);

// Throws SpecificationError on wrong length or entries outside {+1,-1}.
void validate_outcome(const OutcomeVector& outcome, int expected_len);

// One prepared-and-measured experiment: the common currency between the
// quantum-mechanical reference, the kink-limit closed forms and the
// discretized engine.  All angles are radians reduced into [0, 2*pi).
struct ExperimentSpec {
  SourceKind source_kind = SourceKind::GhzCircuit;
  int n_spins = 0;
  std::vector<double> settings;                       // theta_j per spin
  std::optional<double> initial_angle;                // phi_0 (single-spin / sequential)
  std::optional<std::vector<double>> sequential_settings;  // theta_k per repeated measurement

  static ExperimentSpec ghz_circuit(int n, std::vector<double> settings);
  static ExperimentSpec ghz_sum_zero(int n, std::vector<double> settings);
  static ExperimentSpec singlet_pair(double theta1, double theta2);
  static ExperimentSpec single_spin(double phi0, double theta);
  static ExperimentSpec sequential(double phi0, std::vector<double> thetas);

  bool is_ghz() const {
    return source_kind == SourceKind::GhzCircuit || source_kind == SourceKind::GhzSumZero;
  }
  // Number of +-1 slots in an outcome vector: N, or K for sequential runs.
  int outcome_bits() const;

  void validate() const;  // throws SpecificationError
};

// Dense outcome -> probability table over all 2^bits outcome vectors.
struct ProbabilityTable {
  int bits = 0;
  std::vector<double> probs;       // indexed by outcome_index
  double normalization_sum = 0.0;  // pre-normalization total weight

  std::size_t size() const { return probs.size(); }
  double at(const OutcomeVector& outcome) const;
  double sum() const;
  double sup_distance(const ProbabilityTable& other) const;
  void validate(double tol = 1e-12) const;  // entries in [0,1], total 1
};

}  // namespace fidgibbs
