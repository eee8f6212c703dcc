#pragma once

#include <array>
#include <vector>

#include "fidgibbs/experiment.hpp"

namespace fidgibbs::qm {

// Exact quantum probability of one GHZ_N outcome for planar measurements:
//   2^-N * [1 + (prod_j A_j) * cos(sum_j theta_j)]
double ghz_probability(const ExperimentSpec& spec, const OutcomeVector& outcome);

// Bell singlet pair:  1/4 * [1 - A1*A2*cos(theta1 - theta2)]
double singlet_probability(double theta1, double theta2, const OutcomeVector& outcome);

// Malus rule for one spin prepared at phi0 and measured along theta:
//   cos^2(dphi/2),  dphi = theta - phi0 + pi*(1 - A)/2
double malus_probability(double phi0, double theta, int a);

// Repeated planar measurements of one spin: the product of Malus factors
// between successive measurement boundary angles (the first referenced to
// phi0).
double sequential_probability(double phi0, const std::vector<double>& thetas,
                              const OutcomeVector& outcomes);

// Exact reference table for any experiment kind via the closed formulas.
ProbabilityTable probability_table(const ExperimentSpec& spec);

// Hypothetical locally-predetermined results s_{j,x}, s_{j,y} for the three
// spins of the GHZ_3 contradiction argument.
struct PreassignedValueTable {
  // index = 2*(j-1) + axis, axis 0 = x, axis 1 = y
  std::array<int, 6> values{};

  int at(int spin, int axis) const { return values[static_cast<std::size_t>(2 * (spin - 1) + axis)]; }
};

struct ContradictionReport {
  // Setting families xxx, xyy, yxy, yyx in that order.
  std::array<std::string, 4> family_labels{};
  std::array<int, 4> required_products{};  // the deterministic product per family
  bool products_deterministic = false;     // each family's table is certain
  int satisfying_assignments = 0;          // out of the 64 preassignment tables
  int satisfying_when_yyx_dropped = 0;     // same search with only 3 constraints
  int product_of_required_products = 0;    // -1, yet a product of squares is +1

  bool contradiction_established() const {
    return products_deterministic && satisfying_assignments == 0;
  }
};

// The inequality-free GHZ_3 argument: the four x/y setting families force
// deterministic products that no preassigned +-1 table can satisfy.
ContradictionReport contradiction_check();

}  // namespace fidgibbs::qm
