#include "fidgibbs/qm_oracle.hpp"

#include <cmath>
#include <numbers>

#include "fidgibbs/angles.hpp"
#include "fidgibbs/errors.hpp"

namespace fidgibbs::qm {

namespace {

void require_sign(int a) {
  if (a != 1 && a != -1) {
    throw SpecificationError("outcome must be +1 or -1, got " + std::to_string(a));
  }
}

double boundary_shift(int a) { return std::numbers::pi * (1 - a) / 2.0; }

}  // namespace

double ghz_probability(const ExperimentSpec& spec, const OutcomeVector& outcome) {
  if (!spec.is_ghz()) {
    throw SpecificationError("ghz_probability needs a ghz-circuit or ghz-sum-zero spec");
  }
  spec.validate();
  validate_outcome(outcome, spec.n_spins);
  double theta_sum = 0.0;
  for (double t : spec.settings) theta_sum += t;
  const int n = spec.n_spins;
  return (1.0 + outcome_product(outcome) * std::cos(theta_sum)) / std::ldexp(1.0, n);
}

double singlet_probability(double theta1, double theta2, const OutcomeVector& outcome) {
  validate_outcome(outcome, 2);
  return 0.25 * (1.0 - outcome[0] * outcome[1] * std::cos(theta1 - theta2));
}

double malus_probability(double phi0, double theta, int a) {
  require_sign(a);
  double dphi = theta - phi0 + boundary_shift(a);
  double c = std::cos(0.5 * dphi);
  return c * c;
}

double sequential_probability(double phi0, const std::vector<double>& thetas,
                              const OutcomeVector& outcomes) {
  if (thetas.empty()) throw SpecificationError("sequential_probability: empty setting sequence");
  validate_outcome(outcomes, static_cast<int>(thetas.size()));
  double prev = phi0;
  double p = 1.0;
  for (std::size_t k = 0; k < thetas.size(); ++k) {
    double bk = thetas[k] + boundary_shift(outcomes[k]);
    double c = std::cos(0.5 * (bk - prev));
    p *= c * c;
    prev = bk;
  }
  return p;
}

ProbabilityTable probability_table(const ExperimentSpec& spec) {
  spec.validate();
  const int bits = spec.outcome_bits();
  ProbabilityTable table;
  table.bits = bits;
  table.probs.resize(static_cast<std::size_t>(1) << bits);
  for (std::size_t idx = 0; idx < table.probs.size(); ++idx) {
    OutcomeVector a = outcome_from_index(idx, bits);
    double p = 0.0;
    switch (spec.source_kind) {
      case SourceKind::GhzCircuit:
      case SourceKind::GhzSumZero:
        p = ghz_probability(spec, a);
        break;
      case SourceKind::SingletPair:
        p = singlet_probability(spec.settings[0], spec.settings[1], a);
        break;
      case SourceKind::SingleSpin:
        p = malus_probability(*spec.initial_angle, spec.settings[0], a[0]);
        break;
      case SourceKind::Sequential:
        p = sequential_probability(*spec.initial_angle, *spec.sequential_settings, a);
        break;
    }
    // Formula dust below the comparison tolerance is clamped into range.
    if (p < 0.0 && p > -kAngleTol) p = 0.0;
    table.probs[idx] = p;
  }
  table.normalization_sum = table.sum();
  return table;
}

ContradictionReport contradiction_check() {
  constexpr double h = std::numbers::pi / 2.0;
  const std::array<std::array<double, 3>, 4> families = {{{0, 0, 0}, {0, h, h}, {h, 0, h}, {h, h, 0}}};

  ContradictionReport report;
  report.family_labels = {"xxx", "xyy", "yxy", "yyx"};
  report.products_deterministic = true;
  for (std::size_t f = 0; f < families.size(); ++f) {
    auto spec = ExperimentSpec::ghz_sum_zero(3, {families[f][0], families[f][1], families[f][2]});
    // The family is deterministic when every outcome of one product parity
    // has probability 1/4 and the opposite parity has probability 0.
    int required = 0;
    for (std::size_t idx = 0; idx < 8; ++idx) {
      OutcomeVector a = outcome_from_index(idx, 3);
      double p = ghz_probability(spec, a);
      if (p > 0.5 / 4.0) {
        if (required == 0) required = outcome_product(a);
        report.products_deterministic = report.products_deterministic &&
                                        required == outcome_product(a) &&
                                        std::abs(p - 0.25) <= kAngleTol;
      } else {
        report.products_deterministic = report.products_deterministic && p <= kAngleTol;
      }
    }
    report.required_products[f] = required;
  }

  // Exhaustive search over all 2^6 preassignment tables.
  auto count_satisfying = [&](bool include_yyx) {
    int count = 0;
    for (int mask = 0; mask < 64; ++mask) {
      PreassignedValueTable t;
      for (int b = 0; b < 6; ++b) t.values[static_cast<std::size_t>(b)] = (mask >> b) & 1 ? -1 : 1;
      auto s = [&](int spin, int axis) { return t.at(spin, axis); };
      bool ok = s(1, 0) * s(2, 0) * s(3, 0) == report.required_products[0] &&
                s(1, 0) * s(2, 1) * s(3, 1) == report.required_products[1] &&
                s(1, 1) * s(2, 0) * s(3, 1) == report.required_products[2];
      if (include_yyx) ok = ok && s(1, 1) * s(2, 1) * s(3, 0) == report.required_products[3];
      if (ok) ++count;
    }
    return count;
  };
  report.satisfying_assignments = count_satisfying(true);
  report.satisfying_when_yyx_dropped = count_satisfying(false);

  report.product_of_required_products = report.required_products[0] * report.required_products[1] *
                                        report.required_products[2] * report.required_products[3];
  return report;
}

}  // namespace fidgibbs::qm
