#include "fidgibbs/fid_core.hpp"

#include <cmath>
#include <numbers>

#include "fidgibbs/angles.hpp"
#include "fidgibbs/errors.hpp"

namespace fidgibbs::fid {

namespace {

double boundary_shift(int a) {
  if (a != 1 && a != -1) {
    throw SpecificationError("outcome must be +1 or -1, got " + std::to_string(a));
  }
  return std::numbers::pi * (1 - a) / 2.0;
}

double cos2_half(double x) {
  double c = std::cos(0.5 * x);
  return c * c;
}

}  // namespace

void WeightParams::validate() const {
  if (!(epsilon >= 0.0)) throw SpecificationError("epsilon must be >= 0");
  if (steps_per_segment < 1) throw SpecificationError("steps per segment must be >= 1");
  if (grid_size < 2) throw SpecificationError("grid size must be >= 2");
  if (grid_size % 2 != 0) {
    throw SpecificationError("grid size must be even so theta + pi stays on the grid");
  }
}

double GridAngle::angle(int grid_size) const { return grid_to_angle(index, grid_size); }

double local_weight(double dphi, const WeightParams& params) {
  params.validate();
  return local_weight_grid(angle_to_grid(dphi, params.grid_size), params);
}

double local_weight_grid(int d, const WeightParams& params) {
  const int m = params.grid_size;
  d %= m;
  if (d < 0) d += m;
  double c = std::cos(std::numbers::pi * d / m);  // cos(dphi/2) on the grid
  return (d == 0 ? 1.0 : 0.0) + params.epsilon * c * c;
}

double measurement_boundary_angle(double theta, int a) {
  return reduce_angle(theta + boundary_shift(a));
}

double kink_phase(const ExperimentSpec& spec, const OutcomeVector& outcome) {
  if (!spec.is_ghz()) {
    throw SpecificationError("kink_phase needs a ghz-circuit or ghz-sum-zero spec");
  }
  spec.validate();
  validate_outcome(outcome, spec.n_spins);
  double sum = 0.0;
  for (int j = 0; j < spec.n_spins; ++j) {
    sum += spec.settings[static_cast<std::size_t>(j)] +
           boundary_shift(outcome[static_cast<std::size_t>(j)]);
  }
  return reduce_angle(sum);
}

ProbabilityTable closed_form_distribution(const ExperimentSpec& spec) {
  spec.validate();
  const int bits = spec.outcome_bits();
  ProbabilityTable table;
  table.bits = bits;
  table.probs.resize(static_cast<std::size_t>(1) << bits);

  for (std::size_t idx = 0; idx < table.probs.size(); ++idx) {
    OutcomeVector a = outcome_from_index(idx, bits);
    double w = 0.0;
    switch (spec.source_kind) {
      case SourceKind::GhzCircuit:
      case SourceKind::GhzSumZero:
        // Single kink absorbing the total boundary mismatch.
        w = cos2_half(kink_phase(spec, a));
        break;
      case SourceKind::SingletPair: {
        // Opposite source directions: the kink carries b1 - b2 + pi.
        double b1 = measurement_boundary_angle(spec.settings[0], a[0]);
        double b2 = measurement_boundary_angle(spec.settings[1], a[1]);
        w = cos2_half(b1 - b2 + std::numbers::pi);
        break;
      }
      case SourceKind::SingleSpin:
        w = cos2_half(measurement_boundary_angle(spec.settings[0], a[0]) - *spec.initial_angle);
        break;
      case SourceKind::Sequential: {
        const auto& thetas = *spec.sequential_settings;
        double prev = *spec.initial_angle;
        w = 1.0;
        for (std::size_t k = 0; k < thetas.size(); ++k) {
          double bk = measurement_boundary_angle(thetas[k], a[k]);
          w *= cos2_half(bk - prev);
          prev = bk;
        }
        break;
      }
    }
    table.probs[idx] = w;
  }

  double total = table.sum();
  table.normalization_sum = total;
  for (double& p : table.probs) p /= total;
  return table;
}

bool cnot_constraint_satisfied(double alpha_in, double beta_out, double alpha_next) {
  return angles_equal(alpha_next + beta_out, alpha_in);
}

std::optional<GateBoundaryAngles> boundary_consistency(const ExperimentSpec& spec,
                                                       const OutcomeVector& outcome) {
  if (spec.source_kind != SourceKind::GhzCircuit) {
    throw SpecificationError("boundary_consistency needs a ghz-circuit spec");
  }
  spec.validate();
  validate_outcome(outcome, spec.n_spins);
  const int n = spec.n_spins;

  GateBoundaryAngles angles;
  angles.alpha.resize(static_cast<std::size_t>(n));
  angles.beta.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    angles.beta[static_cast<std::size_t>(j)] = measurement_boundary_angle(
        spec.settings[static_cast<std::size_t>(j)], outcome[static_cast<std::size_t>(j)]);
  }
  angles.alpha[0] = 0.0;  // Hadamard pins the first worldline to the x axis
  for (int j = 1; j < n; ++j) {
    angles.alpha[static_cast<std::size_t>(j)] = reduce_angle(
        angles.alpha[static_cast<std::size_t>(j - 1)] - angles.beta[static_cast<std::size_t>(j - 1)]);
  }
  // With no kink the last worldline keeps alpha_N to its measurement.
  if (!angles_equal(angles.alpha[static_cast<std::size_t>(n - 1)],
                    angles.beta[static_cast<std::size_t>(n - 1)])) {
    return std::nullopt;
  }
  return angles;
}

}  // namespace fidgibbs::fid
