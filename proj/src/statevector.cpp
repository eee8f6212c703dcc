#include "fidgibbs/statevector.hpp"

#include <cmath>
#include <numbers>

#include "fidgibbs/angles.hpp"
#include "fidgibbs/errors.hpp"
#include "fidgibbs/qm_oracle.hpp"

namespace fidgibbs::qm {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

// Spin 1 is the most significant bit.
std::size_t bit_mask(int n_qubits, int qubit) {
  return static_cast<std::size_t>(1) << (n_qubits - qubit);
}

void require_qubit(const StateVector& state, int qubit) {
  if (qubit < 1 || qubit > state.n_qubits) {
    throw SpecificationError("qubit index out of range: " + std::to_string(qubit));
  }
}

}  // namespace

double StateVector::norm_squared() const {
  double s = 0.0;
  for (const auto& a : amps) s += std::norm(a);
  return s;
}

void StateVector::validate(double tol) const {
  if (amps.size() != (static_cast<std::size_t>(1) << n_qubits)) {
    throw SpecificationError("state vector has wrong size");
  }
  if (std::abs(norm_squared() - 1.0) > tol) {
    throw SpecificationError("state vector is not normalized");
  }
}

StateVector zero_state(int n) {
  if (n < 1) throw SpecificationError("state needs at least one qubit");
  StateVector s;
  s.n_qubits = n;
  s.amps.assign(static_cast<std::size_t>(1) << n, {0.0, 0.0});
  s.amps[0] = 1.0;
  return s;
}

StateVector singlet_state() {
  StateVector s;
  s.n_qubits = 2;
  s.amps.assign(4, {0.0, 0.0});
  s.amps[1] = kInvSqrt2;   // |up down>
  s.amps[2] = -kInvSqrt2;  // |down up>
  return s;
}

void apply_hadamard(StateVector& state, int qubit) {
  require_qubit(state, qubit);
  const std::size_t mask = bit_mask(state.n_qubits, qubit);
  for (std::size_t idx = 0; idx < state.amps.size(); ++idx) {
    if (idx & mask) continue;
    auto a0 = state.amps[idx];
    auto a1 = state.amps[idx | mask];
    state.amps[idx] = (a0 + a1) * kInvSqrt2;
    state.amps[idx | mask] = (a0 - a1) * kInvSqrt2;
  }
}

void apply_cnot(StateVector& state, int control, int target) {
  require_qubit(state, control);
  require_qubit(state, target);
  if (control == target) throw SpecificationError("cnot control equals target");
  const std::size_t cmask = bit_mask(state.n_qubits, control);
  const std::size_t tmask = bit_mask(state.n_qubits, target);
  for (std::size_t idx = 0; idx < state.amps.size(); ++idx) {
    if ((idx & cmask) && !(idx & tmask)) {
      std::swap(state.amps[idx], state.amps[idx | tmask]);
    }
  }
}

StateVector circuit_state(const dsl::CircuitSpec& circuit) {
  if (auto e = dsl::validate_circuit(circuit)) {
    throw SpecificationError("invalid circuit: " + e->message);
  }
  StateVector state = zero_state(circuit.n_qubits);
  for (const dsl::Gate& g : circuit.gates) {
    if (const auto* h = std::get_if<dsl::HadamardGate>(&g)) {
      apply_hadamard(state, h->qubit);
    } else if (const auto* c = std::get_if<dsl::CnotGate>(&g)) {
      apply_cnot(state, c->control, c->target);
    }
  }
  return state;
}

ProbabilityTable measure_all_planar(const StateVector& state, const std::vector<double>& thetas) {
  if (static_cast<int>(thetas.size()) != state.n_qubits) {
    throw SpecificationError("need one measurement angle per qubit");
  }
  std::vector<std::complex<double>> amps = state.amps;
  // Rotate each qubit so the computational basis becomes the measurement
  // basis; bit value 1 then encodes A = -1.
  for (int q = 1; q <= state.n_qubits; ++q) {
    const std::size_t mask = bit_mask(state.n_qubits, q);
    const std::complex<double> phase = std::polar(1.0, -thetas[static_cast<std::size_t>(q - 1)]);
    for (std::size_t idx = 0; idx < amps.size(); ++idx) {
      if (idx & mask) continue;
      auto a0 = amps[idx];
      auto a1 = amps[idx | mask] * phase;
      amps[idx] = (a0 + a1) * kInvSqrt2;
      amps[idx | mask] = (a0 - a1) * kInvSqrt2;
    }
  }
  ProbabilityTable table;
  table.bits = state.n_qubits;
  table.probs.resize(amps.size());
  for (std::size_t idx = 0; idx < amps.size(); ++idx) table.probs[idx] = std::norm(amps[idx]);
  table.normalization_sum = table.sum();
  return table;
}

ProbabilityTable statevector_simulate(const dsl::CircuitSpec& circuit, int n_cap) {
  if (circuit.n_qubits > n_cap) {
    throw ResourceError("statevector of " + std::to_string(circuit.n_qubits) +
                        " qubits exceeds the cap of " + std::to_string(n_cap));
  }
  return measure_all_planar(circuit_state(circuit), circuit.measurement_settings());
}

ProbabilityTable statevector_table(const ExperimentSpec& spec, int n_cap) {
  spec.validate();
  switch (spec.source_kind) {
    case SourceKind::GhzCircuit:
    case SourceKind::GhzSumZero:
      return statevector_simulate(dsl::ghz_preset(spec.n_spins, spec.settings), n_cap);
    case SourceKind::SingletPair:
      return measure_all_planar(singlet_state(), spec.settings);
    case SourceKind::SingleSpin: {
      StateVector s;
      s.n_qubits = 1;
      s.amps = {kInvSqrt2, kInvSqrt2 * std::polar(1.0, *spec.initial_angle)};
      return measure_all_planar(s, spec.settings);
    }
    case SourceKind::Sequential: {
      ProbabilityTable table;
      table.bits = spec.outcome_bits();
      table.probs.resize(static_cast<std::size_t>(1) << table.bits);
      for (std::size_t idx = 0; idx < table.probs.size(); ++idx) {
        table.probs[idx] = collapse_sequential_probability(
            *spec.initial_angle, *spec.sequential_settings,
            outcome_from_index(idx, table.bits));
      }
      table.normalization_sum = table.sum();
      return table;
    }
  }
  throw SpecificationError("unknown source kind");
}

double collapse_sequential_probability(double phi0, const std::vector<double>& thetas,
                                       const OutcomeVector& outcomes) {
  if (thetas.empty()) throw SpecificationError("empty setting sequence");
  validate_outcome(outcomes, static_cast<int>(thetas.size()));
  std::complex<double> up = kInvSqrt2;
  std::complex<double> down = kInvSqrt2 * std::polar(1.0, phi0);
  double p = 1.0;
  for (std::size_t k = 0; k < thetas.size(); ++k) {
    // Eigenvector (|up> + A e^{i theta} |down>)/sqrt(2) for outcome A.
    const std::complex<double> vu = kInvSqrt2;
    const std::complex<double> vd =
        kInvSqrt2 * static_cast<double>(outcomes[k]) * std::polar(1.0, thetas[k]);
    std::complex<double> overlap = std::conj(vu) * up + std::conj(vd) * down;
    p *= std::norm(overlap);
    up = vu;  // projective collapse onto the measured eigenvector
    down = vd;
  }
  return p;
}

}  // namespace fidgibbs::qm
