#pragma once

#include <string>
#include <vector>

#include "thrc/circuit.hpp"
#include "thrc/pass_report.hpp"

namespace thrc {

// ---- projections (the closure operations the lower-bound framework
// requires: output negation, restriction, and xor-shifted substitution) ----

inline Circuit project_negate(const Circuit& c) {
  Circuit out = c;
  out.output.neg = !out.output.neg;
  return out;
}

// Replaces input i (0-based) by the constant b. Arity stays n; input i
// simply becomes irrelevant. Adds at most one constant gate.
inline Circuit project_fix(const Circuit& c, int i, bool b) {
  if (i < 0 || i >= c.n) throw CircuitError("fix: input index out of range");
  Circuit res;
  res.n = c.n;
  const int const_id = res.add(make_const(b));
  std::vector<int> map_id(c.gates.size(), -1);
  for (size_t gi = 0; gi < c.gates.size(); ++gi) {
    const Gate& g = c.gates[gi];
    if (g.kind == GateKind::Input && g.input_index == i) {
      map_id[gi] = const_id;
      continue;
    }
    Gate copy = g;
    for (Literal& l : copy.inputs) l.gate = map_id[l.gate];
    map_id[gi] = res.add(std::move(copy));
  }
  res.output = Literal{map_id[c.output.gate], c.output.neg};
  return res;
}

// Replaces input i by x_j xor b: wires into input i become (possibly
// negation-flipped) wires into input j. No size change beyond one gate
// when input j was not present yet.
inline Circuit project_xor_shift(const Circuit& c, int i, int j, bool b) {
  if (i < 0 || i >= c.n || j < 0 || j >= c.n)
    throw CircuitError("xor-shift: input index out of range");
  Circuit res;
  res.n = c.n;
  const int target = res.add(make_input(j));
  std::vector<int> map_id(c.gates.size(), -1);
  std::vector<char> redirect(c.gates.size(), 0);
  for (size_t gi = 0; gi < c.gates.size(); ++gi) {
    const Gate& g = c.gates[gi];
    if (g.kind == GateKind::Input && g.input_index == i) {
      redirect[gi] = 1;
      map_id[gi] = target;
      continue;
    }
    Gate copy = g;
    for (Literal& l : copy.inputs) {
      const bool r = redirect[l.gate];
      l.gate = map_id[l.gate];
      if (r) l.neg = l.neg ^ b;
    }
    map_id[gi] = res.add(std::move(copy));
  }
  res.output = Literal{map_id[c.output.gate],
                       static_cast<bool>(c.output.neg ^ (redirect[c.output.gate] ? b : false))};
  return res;
}

// ---- conjunction (closure under small intersections) ----

inline Circuit conjoin(const std::vector<Circuit>& cs) {
  if (cs.empty()) throw CircuitError("conjoin: need at least one circuit");
  const int n = cs[0].n;
  for (const Circuit& c : cs)
    if (c.n != n) throw CircuitError("conjoin: arity mismatch");
  Circuit out;
  out.n = n;
  std::vector<Literal> outs;
  for (const Circuit& c : cs) {
    std::vector<int> map_id(c.gates.size(), -1);
    for (size_t gi = 0; gi < c.gates.size(); ++gi) {
      Gate copy = c.gates[gi];
      for (Literal& l : copy.inputs) l.gate = map_id[l.gate];
      map_id[gi] = out.add(std::move(copy));
    }
    outs.push_back(Literal{map_id[c.output.gate], c.output.neg});
  }
  int top = out.add(make_nary(GateKind::And, outs));
  out.output = lit(top);
  return out;
}

// ---- statistics ----

inline PassReport stats(const Circuit& c) {
  PassReport r;
  r.lemma_name = "stats";
  Int wires = c.wire_count();
  r.input_size = wires;
  r.output_size = wires;
  Int max_w = 0, max_t = 0;
  std::map<std::string, long long> kind_counts;
  for (const Gate& g : c.gates) {
    kind_counts[kind_name(g.kind)]++;
    for (const Int& w : g.weights) max_w = std::max(max_w, abs_int(w));
    for (const Int& m : g.mults) max_w = std::max(max_w, abs_int(m));
    switch (g.kind) {
      case GateKind::Thr:
      case GateKind::Ethr:
      case GateKind::Maj:
      case GateKind::Emaj:
        max_t = std::max(max_t, abs_int(g.threshold));
        break;
      default:
        break;
    }
  }
  r.max_abs_weight = max_w;
  r.top_fanin = c.out_gate().wire_count();
  r.extras["max_abs_threshold"] = max_t.str();
  r.extras["gate_count"] = std::to_string(c.gates.size());
  for (const auto& [k, v] : kind_counts) r.extras["count_" + k] = std::to_string(v);
  return r;
}

}  // namespace thrc
