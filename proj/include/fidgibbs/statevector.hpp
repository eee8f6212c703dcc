#pragma once

#include <complex>
#include <vector>

#include "fidgibbs/circuit.hpp"
#include "fidgibbs/experiment.hpp"

namespace fidgibbs::qm {

// Dense 2^N state.  Basis order is lexicographic in z labels with spin 1
// most significant; bit value 1 is spin-down.
struct StateVector {
  int n_qubits = 0;
  std::vector<std::complex<double>> amps;

  double norm_squared() const;
  void validate(double tol = 1e-12) const;  // throws SpecificationError
};

StateVector zero_state(int n);
StateVector singlet_state();  // (|ud> - |du>)/sqrt(2)

void apply_hadamard(StateVector& state, int qubit);       // qubit is 1-based
void apply_cnot(StateVector& state, int control, int target);

// Runs the gate part of a chain circuit (measurements ignored).
StateVector circuit_state(const dsl::CircuitSpec& circuit);

// Born probabilities of all 2^N planar-measurement outcomes; the eigenvector
// for outcome A along theta is (|up> + A e^{i theta} |down>)/sqrt(2).
ProbabilityTable measure_all_planar(const StateVector& state, const std::vector<double>& thetas);

// Brute-force reference: build the circuit state, then project every spin.
// Circuits wider than n_cap qubits raise ResourceError.
ProbabilityTable statevector_simulate(const dsl::CircuitSpec& circuit, int n_cap = 16);

// Same oracle for any experiment kind (sequential runs use projective
// collapse between measurements).
ProbabilityTable statevector_table(const ExperimentSpec& spec, int n_cap = 16);

// Probability of one sequence of outcomes for repeated single-spin
// measurements, computed by collapse after each step.  Independent check of
// sequential_probability.
double collapse_sequential_probability(double phi0, const std::vector<double>& thetas,
                                       const OutcomeVector& outcomes);

}  // namespace fidgibbs::qm
