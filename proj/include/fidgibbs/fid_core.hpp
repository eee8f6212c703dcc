#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fidgibbs/experiment.hpp"

namespace fidgibbs::fid {

// Discretization parameters of the finite-(epsilon, L, M) engine.
struct WeightParams {
  double epsilon = 0.0;      // kink weight scale; 0 only where a no-kink solution exists
  int steps_per_segment = 1; // L, free-propagation steps per worldline segment
  int grid_size = 2;         // M, even so that theta + pi stays on the grid

  void validate() const;  // throws SpecificationError
};

// One point of the M-grid, phi_m = 2*pi*m/M.
struct GridAngle {
  int index = 0;
  double angle(int grid_size) const;
};

// A single step at which a worldline angle changes.
struct KinkRecord {
  double delta_phi = 0.0;  // reduced into [0, 2*pi)
  int spin_index = 0;
  std::string segment_label;
};

// Per-worldline angles after the first gate (alpha) and after the last gate
// up to the measurement (beta).
struct GateBoundaryAngles {
  std::vector<double> alpha;
  std::vector<double> beta;
};

// Segregated step weight: w_D(dphi) + w_C(dphi) with a unit discrete
// component at dphi = 0 and a continuous component eps*cos^2(dphi/2).
// dphi must lie on the M-grid.
double local_weight(double dphi, const WeightParams& params);

// Grid-index form used by the engine: d = grid steps between successive
// angles, taken modulo M.
double local_weight_grid(int d, const WeightParams& params);

// Angle pinned at a measurement: theta + pi*(1 - A)/2, reduced mod 2pi.
double measurement_boundary_angle(double theta, int a);

// Total angle change a single kink must absorb for a ghz outcome:
//   dphi = sum_j [theta_j + (pi/2)(1 - A_j)]  (mod 2pi)
double kink_phase(const ExperimentSpec& spec, const OutcomeVector& outcome);

// Exact kink-limit outcome distribution for any source kind.  For ghz kinds
// this normalizes cos^2(kink_phase/2) over all 2^N outcomes.
ProbabilityTable closed_form_distribution(const ExperimentSpec& spec);

// CNOT rule: alpha_next + beta_out == alpha_in (mod 2pi) within tolerance.
bool cnot_constraint_satisfied(double alpha_in, double beta_out, double alpha_next);

// Zero-kink solvability of a chain circuit for one outcome: propagates
// alpha_1 = 0 through the CNOT rule and checks sum_j beta_j == 0 (mod 2pi).
// nullopt means at least one kink is required.
std::optional<GateBoundaryAngles> boundary_consistency(const ExperimentSpec& spec,
                                                       const OutcomeVector& outcome);

}  // namespace fidgibbs::fid
