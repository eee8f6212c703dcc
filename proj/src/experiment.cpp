#include "fidgibbs/experiment.hpp"

#include <algorithm>
#include <cmath>

#include "fidgibbs/angles.hpp"
#include "fidgibbs/errors.hpp"

namespace fidgibbs {

std::string_view to_string(SourceKind kind) {
  switch (kind) {
    case SourceKind::GhzCircuit: return "ghz-circuit";
    case SourceKind::GhzSumZero: return "ghz-sum-zero";
    case SourceKind::SingletPair: return "singlet-pair";
    case SourceKind::SingleSpin: return "single-spin";
    case SourceKind::Sequential: return "sequential";
  }
  return "?";
}

std::optional<SourceKind> source_kind_from_string(std::string_view name) {
  if (name == "ghz-circuit") return SourceKind::GhzCircuit;
  if (name == "ghz-sum-zero") return SourceKind::GhzSumZero;
  if (name == "singlet-pair") return SourceKind::SingletPair;
  if (name == "single-spin") return SourceKind::SingleSpin;
  if (name == "sequential") return SourceKind::Sequential;
  return std::nullopt;
}

std::size_t outcome_index(const OutcomeVector& outcome) {
  std::size_t idx = 0;
  for (int a : outcome) idx = (idx << 1) | (a == -1 ? 1u : 0u);
  return idx;
}

OutcomeVector outcome_from_index(std::size_t index, int n) {
  OutcomeVector out(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    out[static_cast<std::size_t>(j)] = (index >> (n - 1 - j)) & 1u ? -1 : +1;
  }
  return out;
}

int outcome_product(const OutcomeVector& outcome) {
  int p = 1;
  for (int a : outcome) p *= a;
  return p;
}

std::string outcome_signs(const OutcomeVector& outcome) {
  std::string s;
  s.reserve(outcome.size());
  for (int a : outcome) s.push_back(a == -1 ? '-' : '+');
  return s;
}

std::optional<OutcomeVector> outcome_from_signs(std::string_view signs) {
  OutcomeVector out;
  out.reserve(signs.size());
  for (char c : signs) {
    if (c == '+') out.push_back(+1);
    else if (c == '-') out.push_back(-1);
    else return std::nullopt;
  }
  if (out.empty()) return std::nullopt;
  return out;
}

void validate_outcome(const OutcomeVector& outcome, int expected_len) {
  if (static_cast<int>(outcome.size()) != expected_len) {
    throw SpecificationError("outcome vector has length " + std::to_string(outcome.size()) +
                             ", expected " + std::to_string(expected_len));
  }
  for (int a : outcome) {
    if (a != 1 && a != -1) {
      throw SpecificationError("outcome entries must be +1 or -1, got " + std::to_string(a));
    }
  }
}

namespace {
std::vector<double> reduced(std::vector<double> v) {
  for (double& x : v) x = reduce_angle(x);
  return v;
}
}  // namespace

ExperimentSpec ExperimentSpec::ghz_circuit(int n, std::vector<double> settings) {
  ExperimentSpec s;
  s.source_kind = SourceKind::GhzCircuit;
  s.n_spins = n;
  s.settings = reduced(std::move(settings));
  s.validate();
  return s;
}

ExperimentSpec ExperimentSpec::ghz_sum_zero(int n, std::vector<double> settings) {
  ExperimentSpec s;
  s.source_kind = SourceKind::GhzSumZero;
  s.n_spins = n;
  s.settings = reduced(std::move(settings));
  s.validate();
  return s;
}

ExperimentSpec ExperimentSpec::singlet_pair(double theta1, double theta2) {
  ExperimentSpec s;
  s.source_kind = SourceKind::SingletPair;
  s.n_spins = 2;
  s.settings = {reduce_angle(theta1), reduce_angle(theta2)};
  s.validate();
  return s;
}

ExperimentSpec ExperimentSpec::single_spin(double phi0, double theta) {
  ExperimentSpec s;
  s.source_kind = SourceKind::SingleSpin;
  s.n_spins = 1;
  s.settings = {reduce_angle(theta)};
  s.initial_angle = reduce_angle(phi0);
  s.validate();
  return s;
}

ExperimentSpec ExperimentSpec::sequential(double phi0, std::vector<double> thetas) {
  ExperimentSpec s;
  s.source_kind = SourceKind::Sequential;
  s.n_spins = 1;
  s.initial_angle = reduce_angle(phi0);
  s.sequential_settings = reduced(std::move(thetas));
  s.validate();
  return s;
}

int ExperimentSpec::outcome_bits() const {
  if (source_kind == SourceKind::Sequential) {
    return sequential_settings ? static_cast<int>(sequential_settings->size()) : 0;
  }
  return n_spins;
}

void ExperimentSpec::validate() const {
  switch (source_kind) {
    case SourceKind::GhzCircuit:
    case SourceKind::GhzSumZero:
      if (n_spins < 1) throw SpecificationError("ghz source needs n_spins >= 1");
      if (static_cast<int>(settings.size()) != n_spins) {
        throw SpecificationError("ghz source needs one setting per spin: got " +
                                 std::to_string(settings.size()) + " for N = " +
                                 std::to_string(n_spins));
      }
      break;
    case SourceKind::SingletPair:
      if (n_spins != 2) throw SpecificationError("singlet-pair source has N = 2");
      if (settings.size() != 2) throw SpecificationError("singlet-pair needs two settings");
      break;
    case SourceKind::SingleSpin:
      if (n_spins != 1) throw SpecificationError("single-spin source has N = 1");
      if (settings.size() != 1) throw SpecificationError("single-spin needs one setting");
      if (!initial_angle) throw SpecificationError("single-spin needs an initial angle");
      break;
    case SourceKind::Sequential:
      if (n_spins != 1) throw SpecificationError("sequential source has N = 1");
      if (!initial_angle) throw SpecificationError("sequential needs an initial angle");
      if (!sequential_settings || sequential_settings->empty()) {
        throw SpecificationError("sequential needs a non-empty setting sequence");
      }
      break;
  }
  for (double t : settings) {
    if (!(t >= 0.0 && t < kTwoPi)) {
      throw SpecificationError("settings must be reduced into [0, 2pi)");
    }
  }
}

double ProbabilityTable::at(const OutcomeVector& outcome) const {
  validate_outcome(outcome, bits);
  return probs[outcome_index(outcome)];
}

double ProbabilityTable::sum() const {
  double s = 0.0;
  for (double p : probs) s += p;
  return s;
}

double ProbabilityTable::sup_distance(const ProbabilityTable& other) const {
  if (other.probs.size() != probs.size()) {
    throw SpecificationError("sup_distance: table sizes differ");
  }
  double d = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    d = std::max(d, std::abs(probs[i] - other.probs[i]));
  }
  return d;
}

void ProbabilityTable::validate(double tol) const {
  if (probs.size() != (static_cast<std::size_t>(1) << bits)) {
    throw SpecificationError("probability table has wrong size");
  }
  for (double p : probs) {
    if (!(p >= -tol && p <= 1.0 + tol)) {
      throw SpecificationError("probability outside [0, 1]: " + std::to_string(p));
    }
  }
  if (std::abs(sum() - 1.0) > tol) {
    throw SpecificationError("probability table does not sum to 1");
  }
}

}  // namespace fidgibbs
