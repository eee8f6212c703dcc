#include "fidgibbs/circuit.hpp"

#include <charconv>
#include <sstream>

#include "fidgibbs/angles.hpp"
#include "fidgibbs/errors.hpp"

namespace fidgibbs::dsl {

namespace {

struct Token {
  std::string text;
  int column = 0;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' &&
           line[i] != '#') {
      ++i;
    }
    out.push_back({std::string(line.substr(start, i - start)), static_cast<int>(start) + 1});
  }
  return out;
}

bool parse_int(const std::string& s, int& out) {
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

struct Pos {
  int line = 1;
  int column = 1;
};

ParseError err(ParseErrorKind kind, Pos pos, std::string message) {
  return ParseError{pos.line, pos.column, std::move(message), kind};
}

bool touches(const Gate& g, int qubit) {
  if (const auto* h = std::get_if<HadamardGate>(&g)) return h->qubit == qubit;
  if (const auto* c = std::get_if<CnotGate>(&g)) return c->control == qubit || c->target == qubit;
  return std::get<MeasureGate>(g).qubit == qubit;
}

// Chain-family invariants; gate_pos/steps_pos let parse errors point into the
// source text, programmatic callers get line 1 column 1.
std::optional<ParseError> validate_impl(const CircuitSpec& spec,
                                        const std::vector<Pos>& gate_pos, Pos decl_pos,
                                        const std::map<std::string, Pos>& steps_pos) {
  auto pos_of = [&](std::size_t gate_idx) {
    return gate_idx < gate_pos.size() ? gate_pos[gate_idx] : decl_pos;
  };
  const int n = spec.n_qubits;
  if (n < 1) return err(ParseErrorKind::Validation, decl_pos, "qubit count must be >= 1");

  for (std::size_t i = 0; i < spec.gates.size(); ++i) {
    const Gate& g = spec.gates[i];
    int lo = 0, hi = 0;
    if (const auto* h = std::get_if<HadamardGate>(&g)) lo = hi = h->qubit;
    else if (const auto* c = std::get_if<CnotGate>(&g)) lo = c->control, hi = c->target;
    else lo = hi = std::get<MeasureGate>(g).qubit;
    if (lo < 1 || hi < 1 || lo > n || hi > n) {
      return err(ParseErrorKind::Validation, pos_of(i),
                 "qubit index out of range 1.." + std::to_string(n));
    }
  }

  // Exactly one Hadamard, on qubit 1, first gate overall.
  std::size_t h_count = 0;
  for (std::size_t i = 0; i < spec.gates.size(); ++i) {
    if (const auto* h = std::get_if<HadamardGate>(&spec.gates[i])) {
      ++h_count;
      if (h_count > 1) {
        return err(ParseErrorKind::Validation, pos_of(i), "more than one hadamard");
      }
      if (i != 0) {
        return err(ParseErrorKind::Validation, pos_of(i),
                   "the hadamard must be the first gate");
      }
      if (h->qubit != 1) {
        return err(ParseErrorKind::Validation, pos_of(i), "the hadamard must act on qubit 1");
      }
    }
  }
  if (h_count == 0) return err(ParseErrorKind::Validation, decl_pos, "missing hadamard on qubit 1");

  // CNOTs must be exactly the chain 1-2, 2-3, ..., (N-1)-N in order.
  int expect = 1;
  for (std::size_t i = 0; i < spec.gates.size(); ++i) {
    if (const auto* c = std::get_if<CnotGate>(&spec.gates[i])) {
      if (expect > n - 1 || c->control != expect || c->target != expect + 1) {
        return err(ParseErrorKind::Validation, pos_of(i),
                   "CNOTs must form the chain: expected cnot " + std::to_string(expect) + " " +
                       std::to_string(expect + 1));
      }
      ++expect;
    }
  }
  if (expect != n) {
    return err(ParseErrorKind::Validation, decl_pos,
               "expected " + std::to_string(n - 1) + " chain CNOTs, got " +
                   std::to_string(expect - 1));
  }

  // Exactly one measurement per qubit, after every gate touching that qubit.
  std::vector<std::ptrdiff_t> measure_at(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < spec.gates.size(); ++i) {
    if (const auto* m = std::get_if<MeasureGate>(&spec.gates[i])) {
      auto& slot = measure_at[static_cast<std::size_t>(m->qubit - 1)];
      if (slot >= 0) {
        return err(ParseErrorKind::Validation, pos_of(i),
                   "duplicate measurement on qubit " + std::to_string(m->qubit));
      }
      slot = static_cast<std::ptrdiff_t>(i);
    }
  }
  for (int q = 1; q <= n; ++q) {
    if (measure_at[static_cast<std::size_t>(q - 1)] < 0) {
      return err(ParseErrorKind::Validation, decl_pos,
                 "missing measurement on qubit " + std::to_string(q));
    }
  }
  for (std::size_t i = 0; i < spec.gates.size(); ++i) {
    if (std::holds_alternative<MeasureGate>(spec.gates[i])) continue;
    for (int q = 1; q <= n; ++q) {
      if (touches(spec.gates[i], q) &&
          static_cast<std::ptrdiff_t>(i) > measure_at[static_cast<std::size_t>(q - 1)]) {
        return err(ParseErrorKind::Validation, pos_of(i),
                   "gate after measurement on qubit " + std::to_string(q));
      }
    }
  }

  // Step overrides must name real segments.
  auto segments = enumerate_segments(spec);
  for (const auto& [id, len] : spec.segment_lengths) {
    Pos p = decl_pos;
    if (auto it = steps_pos.find(id); it != steps_pos.end()) p = it->second;
    if (len < 1) return err(ParseErrorKind::Validation, p, "steps must be >= 1");
    bool known = false;
    for (const auto& s : segments) known = known || s.id == id;
    if (!known) return err(ParseErrorKind::Validation, p, "unknown segment '" + id + "'");
  }
  return std::nullopt;
}

}  // namespace

std::vector<double> CircuitSpec::measurement_settings() const {
  std::vector<double> thetas(static_cast<std::size_t>(n_qubits), 0.0);
  for (const Gate& g : gates) {
    if (const auto* m = std::get_if<MeasureGate>(&g)) {
      thetas[static_cast<std::size_t>(m->qubit - 1)] = m->theta;
    }
  }
  return thetas;
}

bool CircuitSpec::operator==(const CircuitSpec& other) const {
  return n_qubits == other.n_qubits && gates == other.gates &&
         segment_lengths == other.segment_lengths;
}

std::vector<SegmentRef> enumerate_segments(const CircuitSpec& spec) {
  std::vector<SegmentRef> out;
  for (int q = 1; q <= spec.n_qubits; ++q) {
    std::vector<std::size_t> events;
    for (std::size_t i = 0; i < spec.gates.size(); ++i) {
      if (touches(spec.gates[i], q)) events.push_back(i);
    }
    for (std::size_t k = 1; k < events.size(); ++k) {
      out.push_back({"q" + std::to_string(q) + "s" + std::to_string(k), q, events[k - 1],
                     events[k]});
    }
  }
  return out;
}

CircuitSpec ghz_preset(int n, const std::vector<double>& thetas) {
  if (n < 1) throw SpecificationError("ghz preset needs n >= 1");
  if (!thetas.empty() && static_cast<int>(thetas.size()) != n) {
    throw SpecificationError("ghz preset: expected " + std::to_string(n) + " settings, got " +
                             std::to_string(thetas.size()));
  }
  CircuitSpec spec;
  spec.n_qubits = n;
  spec.gates.push_back(HadamardGate{1});
  for (int j = 1; j < n; ++j) spec.gates.push_back(CnotGate{j, j + 1});
  for (int q = 1; q <= n; ++q) {
    double t = thetas.empty() ? 0.0 : reduce_angle(thetas[static_cast<std::size_t>(q - 1)]);
    spec.gates.push_back(MeasureGate{q, t});
  }
  return spec;
}

std::string ParseError::str() const {
  return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
}

ParseResult parse_circuit(std::string_view source) {
  CircuitSpec spec;
  std::vector<Pos> gate_pos;
  std::map<std::string, Pos> steps_pos;
  Pos decl_pos{1, 1};
  bool declared = false;
  bool ghz_used = false;
  int line_no = 0;

  std::size_t start = 0;
  while (start <= source.size()) {
    std::size_t nl = source.find('\n', start);
    std::string_view line = source.substr(
        start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    ++line_no;

    auto toks = tokenize(line);
    if (!toks.empty()) {
      const std::string& kw = toks[0].text;
      Pos at{line_no, toks[0].column};
      auto arg_pos = [&](std::size_t i) {
        return Pos{line_no, i < toks.size() ? toks[i].column
                                            : static_cast<int>(line.size()) + 1};
      };
      auto need_args = [&](std::size_t n_args) -> std::optional<ParseError> {
        if (toks.size() < n_args + 1) {
          return err(ParseErrorKind::Syntactic, arg_pos(toks.size()),
                     "'" + kw + "' expects " + std::to_string(n_args) + " argument(s)");
        }
        if (toks.size() > n_args + 1) {
          return err(ParseErrorKind::Syntactic, arg_pos(n_args + 1),
                     "unexpected token '" + toks[n_args + 1].text + "'");
        }
        return std::nullopt;
      };
      auto get_int = [&](std::size_t i, int& out) -> std::optional<ParseError> {
        if (!parse_int(toks[i].text, out)) {
          return err(ParseErrorKind::Lexical, arg_pos(i),
                     "expected an integer, got '" + toks[i].text + "'");
        }
        return std::nullopt;
      };

      std::optional<ParseError> e;
      if (kw == "qubits" || kw == "ghz") {
        int n = 0;
        if ((e = need_args(1)) || (e = get_int(1, n))) return *e;
        if (declared) {
          return err(ParseErrorKind::Validation, at, "duplicate size declaration");
        }
        if (!spec.gates.empty()) {
          return err(ParseErrorKind::Validation, at, "size declaration must precede gates");
        }
        if (n < 1) return err(ParseErrorKind::Validation, arg_pos(1), "qubit count must be >= 1");
        declared = true;
        decl_pos = at;
        spec.n_qubits = n;
        if (kw == "ghz") {
          ghz_used = true;
          spec.gates = ghz_preset(n).gates;
        }
      } else if (kw == "h" || kw == "cnot" || kw == "measure") {
        if (!declared) {
          return err(ParseErrorKind::Validation, at, "qubit count not declared yet");
        }
        if (ghz_used) {
          return err(ParseErrorKind::Validation, at,
                     "the ghz preset cannot be combined with explicit gates");
        }
        if (kw == "h") {
          int q = 0;
          if ((e = need_args(1)) || (e = get_int(1, q))) return *e;
          spec.gates.push_back(HadamardGate{q});
        } else if (kw == "cnot") {
          int c = 0, t = 0;
          if ((e = need_args(2)) || (e = get_int(1, c)) || (e = get_int(2, t))) return *e;
          spec.gates.push_back(CnotGate{c, t});
        } else {
          int q = 0;
          if ((e = need_args(2)) || (e = get_int(1, q))) return *e;
          auto angle = parse_angle_literal(toks[2].text);
          if (!angle) {
            return err(ParseErrorKind::Lexical, arg_pos(2),
                       "bad angle literal '" + toks[2].text + "'");
          }
          spec.gates.push_back(MeasureGate{q, *angle});
        }
        gate_pos.push_back(at);
      } else if (kw == "steps") {
        int l = 0;
        if ((e = need_args(2)) || (e = get_int(2, l))) return *e;
        const std::string& id = toks[1].text;
        if (spec.segment_lengths.count(id)) {
          return err(ParseErrorKind::Validation, arg_pos(1),
                     "duplicate steps override for '" + id + "'");
        }
        spec.segment_lengths[id] = l;
        steps_pos[id] = arg_pos(1);
      } else {
        return err(ParseErrorKind::Syntactic, at, "unknown statement '" + kw + "'");
      }
    }

    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }

  if (!declared) {
    return err(ParseErrorKind::Validation, {line_no, 1}, "missing qubits declaration");
  }
  if (auto e = validate_impl(spec, gate_pos, decl_pos, steps_pos)) return *e;
  return spec;
}

CircuitSpec parse_circuit_or_throw(std::string_view source) {
  auto result = parse_circuit(source);
  if (const auto* e = std::get_if<ParseError>(&result)) {
    throw SpecificationError("circuit parse error at " + e->str());
  }
  return std::get<CircuitSpec>(std::move(result));
}

std::string serialize_circuit(const CircuitSpec& spec) {
  std::ostringstream out;
  out << "qubits " << spec.n_qubits << "\n";
  for (const Gate& g : spec.gates) {
    if (const auto* h = std::get_if<HadamardGate>(&g)) {
      out << "h " << h->qubit << "\n";
    } else if (const auto* c = std::get_if<CnotGate>(&g)) {
      out << "cnot " << c->control << " " << c->target << "\n";
    } else {
      const auto& m = std::get<MeasureGate>(g);
      out << "measure " << m.qubit << " " << format_angle_literal(m.theta) << "\n";
    }
  }
  for (const auto& [id, len] : spec.segment_lengths) {
    out << "steps " << id << " " << len << "\n";
  }
  return out.str();
}

std::optional<ParseError> validate_circuit(const CircuitSpec& spec) {
  return validate_impl(spec, {}, Pos{1, 1}, {});
}

}  // namespace fidgibbs::dsl
