#include "fidgibbs/factor_graph.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "fidgibbs/angles.hpp"
#include "fidgibbs/errors.hpp"

namespace fidgibbs::engine {

double FactorGraph::state_space() const {
  return std::pow(static_cast<double>(grid_size), static_cast<double>(variables.size()));
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      x = parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

bool FactorGraph::is_tree() const {
  // Bipartite variable/factor graph: acyclic iff edges == nodes - components.
  const int nv = n_variables();
  const int nf = static_cast<int>(factors.size());
  UnionFind uf(static_cast<std::size_t>(nv + nf));
  int edges = 0;
  for (int f = 0; f < nf; ++f) {
    for (int v : factors[static_cast<std::size_t>(f)].vars) {
      uf.unite(nv + f, v);
      ++edges;
    }
  }
  int components = 0;
  for (int i = 0; i < nv + nf; ++i) components += uf.find(i) == i ? 1 : 0;
  return edges == nv + nf - components;
}

bool FactorGraph::locality_ok() const {
  for (const Factor& f : factors) {
    int tmin = 0, tmax = 0;
    std::vector<int> spins;
    for (std::size_t i = 0; i < f.vars.size(); ++i) {
      const auto& info = variables[static_cast<std::size_t>(f.vars[i])];
      if (i == 0) {
        tmin = tmax = info.time;
      } else {
        tmin = std::min(tmin, info.time);
        tmax = std::max(tmax, info.time);
      }
      bool seen = false;
      for (int s : spins) seen = seen || s == info.spin;
      if (!seen) spins.push_back(info.spin);
    }
    if (tmax - tmin > 1 || spins.size() > 2) return false;
  }
  return true;
}

std::shared_ptr<const std::vector<double>> make_step_kernel(const fid::WeightParams& params) {
  params.validate();
  auto kernel = std::make_shared<std::vector<double>>(static_cast<std::size_t>(params.grid_size));
  for (int d = 0; d < params.grid_size; ++d) {
    (*kernel)[static_cast<std::size_t>(d)] = fid::local_weight_grid(d, params);
  }
  return kernel;
}

namespace {

struct GraphBuilder {
  FactorGraph g;

  int add_var(int spin, int time, std::string segment, int step, bool aux = false) {
    g.variables.push_back({spin, time, std::move(segment), step, aux});
    return static_cast<int>(g.variables.size()) - 1;
  }

  int extend_chain(int from, int len, int spin, const std::string& segment, int start_time) {
    int prev = from;
    for (int s = 1; s <= len; ++s) {
      int v = add_var(spin, start_time + s, segment, s);
      g.factors.push_back({FactorKind::Step, {prev, v}, {}, 0});
      ++g.total_steps;
      prev = v;
    }
    return prev;
  }

  void pin(int var, int m) { g.factors.push_back({FactorKind::SourcePin, {var}, {m}, 0}); }

  void measure(int var, double theta, std::optional<int> a) {
    int base = angle_to_grid(theta, g.grid_size);
    int flipped = (base + g.grid_size / 2) % g.grid_size;
    std::vector<int> allowed;
    if (!a) allowed = {base, flipped};            // pooled over both signs
    else if (*a == 1) allowed = {base};
    else allowed = {flipped};
    g.factors.push_back({FactorKind::Measurement, {var}, std::move(allowed), 0});
  }

  void diff(int earlier, int later, int shift) {
    g.factors.push_back({FactorKind::DiffIndicator, {earlier, later}, {}, shift});
  }

  // m_a + m_b - m_c == shift (mod M)
  void sum_ind(int a, int b, int c, int shift) {
    g.factors.push_back({FactorKind::SumIndicator, {a, b, c}, {}, shift});
  }
};

int outcome_sign(const std::optional<OutcomeVector>& outcome, int slot) {
  return (*outcome)[static_cast<std::size_t>(slot)];
}

FactorGraph build_circuit_graph(const dsl::CircuitSpec& circuit, const fid::WeightParams& params,
                                const std::optional<OutcomeVector>& outcome,
                                std::shared_ptr<const std::vector<double>> kernel) {
  if (auto e = dsl::validate_circuit(circuit)) {
    throw SpecificationError("invalid circuit: " + e->message);
  }
  params.validate();
  if (outcome) validate_outcome(*outcome, circuit.n_qubits);

  GraphBuilder b;
  b.g.kind = SourceKind::GhzCircuit;
  b.g.grid_size = params.grid_size;
  b.g.epsilon = params.epsilon;
  b.g.outcome_bits = circuit.n_qubits;
  b.g.outcome = outcome;
  b.g.step_kernel = kernel ? std::move(kernel) : make_step_kernel(params);

  auto segment_len = [&](const std::string& id) {
    auto it = circuit.segment_lengths.find(id);
    return it != circuit.segment_lengths.end() ? it->second : params.steps_per_segment;
  };

  struct WorldlineState {
    int last_var = -1;
    int last_time = 0;
    int segments_done = 0;
  };
  std::vector<WorldlineState> wl(static_cast<std::size_t>(circuit.n_qubits) + 1);
  auto next_segment_id = [&](int q) {
    return "q" + std::to_string(q) + "s" + std::to_string(wl[static_cast<std::size_t>(q)].segments_done + 1);
  };

  for (const dsl::Gate& gate : circuit.gates) {
    if (const auto* h = std::get_if<dsl::HadamardGate>(&gate)) {
      auto& s = wl[static_cast<std::size_t>(h->qubit)];
      s.last_var = b.add_var(h->qubit, 0, next_segment_id(h->qubit), 0);
      s.last_time = 0;
      b.pin(s.last_var, 0);  // alpha_1 = 0: the x direction
    } else if (const auto* c = std::get_if<dsl::CnotGate>(&gate)) {
      auto& sj = wl[static_cast<std::size_t>(c->control)];
      const std::string seg = next_segment_id(c->control);
      int len = segment_len(seg);
      int before = b.extend_chain(sj.last_var, len, c->control, seg, sj.last_time);
      int gate_time = sj.last_time + len;
      ++sj.segments_done;
      int after = b.add_var(c->control, gate_time, next_segment_id(c->control), 0);
      auto& st = wl[static_cast<std::size_t>(c->target)];
      st.last_var = b.add_var(c->target, gate_time, next_segment_id(c->target), 0);
      st.last_time = gate_time;
      // alpha_{j+1} + beta_j == alpha_j at the gate instant
      b.sum_ind(st.last_var, after, before, 0);
      sj.last_var = after;
      sj.last_time = gate_time;
    } else {
      const auto& m = std::get<dsl::MeasureGate>(gate);
      auto& s = wl[static_cast<std::size_t>(m.qubit)];
      const std::string seg = next_segment_id(m.qubit);
      int len = segment_len(seg);
      int last = b.extend_chain(s.last_var, len, m.qubit, seg, s.last_time);
      ++s.segments_done;
      s.last_var = last;
      s.last_time += len;
      b.measure(last, m.theta,
                outcome ? std::optional<int>(outcome_sign(outcome, m.qubit - 1)) : std::nullopt);
    }
  }
  for (int q = 1; q <= circuit.n_qubits; ++q) {
    b.g.segment_count += wl[static_cast<std::size_t>(q)].segments_done;
  }
  return std::move(b.g);
}

}  // namespace

FactorGraph build_factor_graph(const dsl::CircuitSpec& circuit, const fid::WeightParams& params,
                               const std::optional<OutcomeVector>& outcome,
                               std::shared_ptr<const std::vector<double>> kernel) {
  return build_circuit_graph(circuit, params, outcome, std::move(kernel));
}

FactorGraph build_factor_graph(const ExperimentSpec& spec, const fid::WeightParams& params,
                               const std::optional<OutcomeVector>& outcome,
                               std::shared_ptr<const std::vector<double>> kernel) {
  spec.validate();
  params.validate();
  if (outcome) validate_outcome(*outcome, spec.outcome_bits());

  if (spec.source_kind == SourceKind::GhzCircuit) {
    auto g = build_circuit_graph(dsl::ghz_preset(spec.n_spins, spec.settings), params, outcome,
                                 std::move(kernel));
    g.kind = SourceKind::GhzCircuit;
    return g;
  }

  GraphBuilder b;
  b.g.kind = spec.source_kind;
  b.g.grid_size = params.grid_size;
  b.g.epsilon = params.epsilon;
  b.g.outcome_bits = spec.outcome_bits();
  b.g.outcome = outcome;
  b.g.step_kernel = kernel ? std::move(kernel) : make_step_kernel(params);
  const int len = params.steps_per_segment;

  auto sign_for = [&](int slot) {
    return outcome ? std::optional<int>(outcome_sign(outcome, slot)) : std::nullopt;
  };

  switch (spec.source_kind) {
    case SourceKind::SingleSpin: {
      int v0 = b.add_var(1, 0, "q1s1", 0);
      b.pin(v0, angle_to_grid(*spec.initial_angle, params.grid_size));
      int last = b.extend_chain(v0, len, 1, "q1s1", 0);
      b.measure(last, spec.settings[0], sign_for(0));
      b.g.segment_count = 1;
      break;
    }
    case SourceKind::Sequential: {
      const auto& thetas = *spec.sequential_settings;
      int v0 = b.add_var(1, 0, "q1s1", 0);
      b.pin(v0, angle_to_grid(*spec.initial_angle, params.grid_size));
      int cur = v0;
      for (std::size_t k = 0; k < thetas.size(); ++k) {
        const std::string seg = "q1s" + std::to_string(k + 1);
        cur = b.extend_chain(cur, len, 1, seg, static_cast<int>(k) * len);
        b.measure(cur, thetas[k], sign_for(static_cast<int>(k)));
      }
      b.g.segment_count = static_cast<int>(thetas.size());
      break;
    }
    case SourceKind::SingletPair: {
      int v1 = b.add_var(1, 0, "q1s1", 0);
      int last1 = b.extend_chain(v1, len, 1, "q1s1", 0);
      int v2 = b.add_var(2, 0, "q2s1", 0);
      int last2 = b.extend_chain(v2, len, 2, "q2s1", 0);
      b.diff(v1, v2, params.grid_size / 2);  // opposite source directions
      b.measure(last1, spec.settings[0], sign_for(0));
      b.measure(last2, spec.settings[1], sign_for(1));
      b.g.segment_count = 2;
      break;
    }
    case SourceKind::GhzSumZero: {
      std::vector<int> first(static_cast<std::size_t>(spec.n_spins));
      for (int j = 1; j <= spec.n_spins; ++j) {
        const std::string seg = "q" + std::to_string(j) + "s1";
        int v0 = b.add_var(j, 0, seg, 0);
        first[static_cast<std::size_t>(j - 1)] = v0;
        int last = b.extend_chain(v0, len, j, seg, 0);
        b.measure(last, spec.settings[static_cast<std::size_t>(j - 1)], sign_for(j - 1));
      }
      // sum_j phi_{j,0} == 0, decomposed into a running-sum chain so the
      // graph stays a tree with ternary local factors.
      int prev = first[0];
      for (int j = 2; j <= spec.n_spins; ++j) {
        int aux = b.add_var(j, 0, "src", 0, true);
        b.sum_ind(prev, first[static_cast<std::size_t>(j - 1)], aux, 0);
        prev = aux;
      }
      b.pin(prev, 0);
      b.g.segment_count = spec.n_spins;
      break;
    }
    case SourceKind::GhzCircuit:
      break;  // handled above
  }
  return std::move(b.g);
}

}  // namespace fidgibbs::engine
