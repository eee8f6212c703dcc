#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace fidgibbs::dsl {

// Gate records for the supported circuit family: one Hadamard opening the
// first worldline, chain CNOTs, and one planar measurement per qubit.
struct HadamardGate {
  int qubit = 0;
  bool operator==(const HadamardGate&) const = default;
};
struct CnotGate {
  int control = 0;
  int target = 0;
  bool operator==(const CnotGate&) const = default;
};
struct MeasureGate {
  int qubit = 0;
  double theta = 0.0;  // reduced into [0, 2*pi)
  bool operator==(const MeasureGate&) const = default;
};
using Gate = std::variant<HadamardGate, CnotGate, MeasureGate>;

struct CircuitSpec {
  int n_qubits = 0;
  std::vector<Gate> gates;                     // time order, measurements included
  std::map<std::string, int> segment_lengths;  // per-segment overrides of the default L

  // theta_j indexed by qubit - 1.
  std::vector<double> measurement_settings() const;

  bool operator==(const CircuitSpec& other) const;
};

// A free-propagation interval between two consecutive events on one worldline.
struct SegmentRef {
  std::string id;  // "q<qubit>s<k>", k starting at 1
  int qubit = 0;
  std::size_t from_event = 0;  // indices into CircuitSpec::gates
  std::size_t to_event = 0;
};

// Worldline segments in qubit-major order.  For the chain family that is
// 2N-1 segments (qubit N has a single one).
std::vector<SegmentRef> enumerate_segments(const CircuitSpec& spec);

// The standard chain circuit: H on qubit 1, CNOT(j, j+1) for j = 1..N-1,
// then one measurement per qubit.  Empty thetas means all-zero settings.
CircuitSpec ghz_preset(int n, const std::vector<double>& thetas = {});

enum class ParseErrorKind { Lexical, Syntactic, Validation };

struct ParseError {
  int line = 0;    // 1-based
  int column = 0;  // 1-based
  std::string message;
  ParseErrorKind kind = ParseErrorKind::Syntactic;

  std::string str() const;  // "line:column: message"
};

using ParseResult = std::variant<CircuitSpec, ParseError>;

// Line-oriented grammar, '#' starts a comment:
//   qubits INT | ghz INT | h INT | cnot INT INT | measure INT ANGLE
//   | steps IDENT INT
// ANGLE is a pi-rational or decimal literal (see parse_angle_literal).
ParseResult parse_circuit(std::string_view source);

// Convenience wrapper mapping ParseError to SpecificationError.
CircuitSpec parse_circuit_or_throw(std::string_view source);

// Canonical text form; parse_circuit(serialize_circuit(s)) == s.
std::string serialize_circuit(const CircuitSpec& spec);

// Structural validation of the chain-circuit invariants; nullopt when valid.
std::optional<ParseError> validate_circuit(const CircuitSpec& spec);

}  // namespace fidgibbs::dsl
