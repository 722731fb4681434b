#pragma once

#include <string>
#include <vector>

#include "thrc/circuit.hpp"
#include "thrc/rng.hpp"

namespace thrc {

enum class Family { ThrThr, ThrMaj, EthrMaj, SymSym, SymAnd, ThrAnd, DepthD };

inline const char* family_name(Family f) {
  switch (f) {
    case Family::ThrThr: return "thrthr";
    case Family::ThrMaj: return "thrmaj";
    case Family::EthrMaj: return "ethrmaj";
    case Family::SymSym: return "symsym";
    case Family::SymAnd: return "symand";
    case Family::ThrAnd: return "thrand";
    case Family::DepthD: return "depth-d";
  }
  return "?";
}

inline Family family_from_name(const std::string& s) {
  if (s == "thrthr") return Family::ThrThr;
  if (s == "thrmaj") return Family::ThrMaj;
  if (s == "ethrmaj") return Family::EthrMaj;
  if (s == "symsym") return Family::SymSym;
  if (s == "symand") return Family::SymAnd;
  if (s == "thrand") return Family::ThrAnd;
  if (s == "depth-d" || s == "depthd") return Family::DepthD;
  throw CircuitError("unknown circuit family " + s);
}

// Seeded instance generator. Deterministic per (spec, seed): weights are
// uniform nonzero in [-bound, bound], thresholds uniform in the achievable
// range of the gate's linear form, SYM tables uniform bits.
struct GenSpec {
  Family family = Family::ThrThr;
  int n = 8;
  int gates = 4;          // bottom-layer gate count
  long long weight_bound = 16;
  int arity = 0;          // bottom fan-in bound; 0 means n
  int mult_bound = 1;     // multiplicity bound for MAJ/EMAJ/SYM wires
  int depth = 3;          // DepthD only
  bool negated_wires = true;
  uint64_t seed = 0;
};

namespace detail {

inline long long nonzero_weight(Xoshiro256& rng, long long bound) {
  long long w = rng.range_signed(-bound, bound - 1);
  return w >= 0 ? w + 1 : w;  // skip zero, keep both signs uniform
}

inline std::vector<int> pick_distinct(Xoshiro256& rng, int count, int limit) {
  std::vector<int> pool(limit);
  for (int i = 0; i < limit; ++i) pool[i] = i;
  // Fisher-Yates prefix
  for (int i = 0; i < count; ++i) {
    int j = i + static_cast<int>(rng.below(static_cast<uint64_t>(limit - i)));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(count);
  return pool;
}

// Threshold/target uniform over the closed achievable interval of the form.
inline Int uniform_in_interval(Xoshiro256& rng, const Int& lo, const Int& hi) {
  Int span = hi - lo + 1;
  if (span <= 1) return lo;
  uint64_t s = static_cast<uint64_t>(to_int64(span));
  return lo + Int(rng.below(s));
}

// One weighted bottom gate over the inputs.
inline int gen_thr_gate(Circuit& c, Xoshiro256& rng, const GenSpec& spec,
                        const std::vector<int>& candidates, bool exact) {
  int arity = spec.arity > 0 ? spec.arity : spec.n;
  arity = std::min<int>(arity, static_cast<int>(candidates.size()));
  int fanin = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(arity)));
  auto idx = pick_distinct(rng, fanin, static_cast<int>(candidates.size()));
  std::vector<Literal> ins;
  std::vector<Int> ws;
  for (int k : idx) {
    bool neg = spec.negated_wires && rng.below(4) == 0;
    ins.push_back(lit(candidates[k], neg));
    ws.push_back(nonzero_weight(rng, spec.weight_bound));
  }
  Gate g = exact ? make_ethr(ins, ws, 0) : make_thr(ins, ws, 0);
  auto [lo, hi] = gate_lin_form(g).value_interval();
  g.threshold = uniform_in_interval(rng, lo, hi);
  return c.add(std::move(g));
}

inline int gen_maj_gate(Circuit& c, Xoshiro256& rng, const GenSpec& spec,
                        const std::vector<int>& candidates, bool exact) {
  int arity = spec.arity > 0 ? spec.arity : spec.n;
  arity = std::min<int>(arity, static_cast<int>(candidates.size()));
  int fanin = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(arity)));
  auto idx = pick_distinct(rng, fanin, static_cast<int>(candidates.size()));
  std::vector<Literal> ins;
  std::vector<Int> ms;
  Int total = 0;
  for (int k : idx) {
    bool neg = spec.negated_wires && rng.below(4) == 0;
    long long m = 1 + static_cast<long long>(rng.below(static_cast<uint64_t>(spec.mult_bound)));
    ins.push_back(lit(candidates[k], neg));
    ms.push_back(m);
    total += m;
  }
  Gate g = exact ? make_emaj(ins, ms, 0) : make_maj(ins, ms, 0);
  g.threshold = uniform_in_interval(rng, 0, total);
  return c.add(std::move(g));
}

inline int gen_sym_gate(Circuit& c, Xoshiro256& rng, const GenSpec& spec,
                        const std::vector<int>& candidates) {
  int arity = spec.arity > 0 ? spec.arity : spec.n;
  arity = std::min<int>(arity, static_cast<int>(candidates.size()));
  int fanin = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(arity)));
  auto idx = pick_distinct(rng, fanin, static_cast<int>(candidates.size()));
  std::vector<Literal> ins;
  std::vector<Int> ms;
  Int total = 0;
  for (int k : idx) {
    long long m = 1 + static_cast<long long>(rng.below(static_cast<uint64_t>(spec.mult_bound)));
    ins.push_back(lit(candidates[k]));
    ms.push_back(m);
    total += m;
  }
  std::vector<uint8_t> table;
  for (Int v = 0; v <= total; ++v) table.push_back(static_cast<uint8_t>(rng.below(2)));
  return c.add(make_sym(ins, ms, table));
}

inline int gen_and_gate(Circuit& c, Xoshiro256& rng, const GenSpec& spec,
                        const std::vector<int>& candidates) {
  int arity = spec.arity > 0 ? spec.arity : spec.n;
  arity = std::min<int>(arity, static_cast<int>(candidates.size()));
  int fanin = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(arity)));
  auto idx = pick_distinct(rng, fanin, static_cast<int>(candidates.size()));
  std::vector<Literal> ins;
  for (int k : idx)
    ins.push_back(lit(candidates[k], spec.negated_wires && rng.below(2) == 0));
  return c.add(make_nary(GateKind::And, ins));
}

}  // namespace detail

inline Circuit gen(const GenSpec& spec) {
  if (spec.n < 1 || spec.gates < 1) throw CircuitError("gen: impossible spec");
  Xoshiro256 rng(spec.seed);
  Circuit c = circuit_with_inputs(spec.n);
  std::vector<int> inputs;
  for (int i = 0; i < spec.n; ++i) inputs.push_back(i);

  auto finish_weighted_top = [&](const std::vector<int>& bottom, bool exact_top) {
    std::vector<Literal> ins;
    std::vector<Int> ws;
    for (int gid : bottom) {
      ins.push_back(lit(gid));
      ws.push_back(detail::nonzero_weight(rng, spec.weight_bound));
    }
    Gate g = exact_top ? make_ethr(ins, ws, 0) : make_thr(ins, ws, 0);
    auto [lo, hi] = gate_lin_form(g).value_interval();
    g.threshold = detail::uniform_in_interval(rng, lo, hi);
    c.output = lit(c.add(std::move(g)));
  };

  std::vector<int> bottom;
  switch (spec.family) {
    case Family::ThrThr:
      for (int i = 0; i < spec.gates; ++i)
        bottom.push_back(detail::gen_thr_gate(c, rng, spec, inputs, false));
      finish_weighted_top(bottom, false);
      break;
    case Family::ThrMaj:
    case Family::EthrMaj:
      for (int i = 0; i < spec.gates; ++i)
        bottom.push_back(detail::gen_maj_gate(c, rng, spec, inputs, false));
      finish_weighted_top(bottom, spec.family == Family::EthrMaj);
      break;
    case Family::SymSym: {
      std::vector<Literal> ins;
      std::vector<Int> ms;
      for (int i = 0; i < spec.gates; ++i) {
        bottom.push_back(detail::gen_sym_gate(c, rng, spec, inputs));
        ins.push_back(lit(bottom.back()));
        ms.push_back(1);
      }
      std::vector<uint8_t> table;
      for (int v = 0; v <= spec.gates; ++v) table.push_back(static_cast<uint8_t>(rng.below(2)));
      c.output = lit(c.add(make_sym(ins, ms, table)));
      break;
    }
    case Family::SymAnd: {
      std::vector<Literal> ins;
      std::vector<Int> ms;
      for (int i = 0; i < spec.gates; ++i) {
        bottom.push_back(detail::gen_and_gate(c, rng, spec, inputs));
        ins.push_back(lit(bottom.back()));
        long long m = 1 + static_cast<long long>(rng.below(static_cast<uint64_t>(spec.mult_bound)));
        ms.push_back(m);
      }
      Int total = 0;
      for (const Int& m : ms) total += m;
      std::vector<uint8_t> table;
      for (Int v = 0; v <= total; ++v) table.push_back(static_cast<uint8_t>(rng.below(2)));
      c.output = lit(c.add(make_sym(ins, ms, table)));
      break;
    }
    case Family::ThrAnd:
      for (int i = 0; i < spec.gates; ++i)
        bottom.push_back(detail::gen_and_gate(c, rng, spec, inputs));
      finish_weighted_top(bottom, false);
      break;
    case Family::DepthD: {
      // layered THR circuit: `gates` gates per layer below the output
      std::vector<int> layer = inputs;
      c.layer_tags.assign(c.gates.size(), 0);
      for (int d = 1; d < spec.depth; ++d) {
        std::vector<int> next;
        for (int i = 0; i < spec.gates; ++i) {
          next.push_back(detail::gen_thr_gate(c, rng, spec, layer, false));
          c.layer_tags.push_back(d);
        }
        layer = next;
      }
      // output layer: one THR over the last layer
      std::vector<Literal> ins;
      std::vector<Int> ws;
      for (int gid : layer) {
        ins.push_back(lit(gid));
        ws.push_back(detail::nonzero_weight(rng, spec.weight_bound));
      }
      Gate g = make_thr(ins, ws, 0);
      auto [lo, hi] = gate_lin_form(g).value_interval();
      g.threshold = detail::uniform_in_interval(rng, lo, hi);
      c.output = lit(c.add(std::move(g)));
      c.layer_tags.push_back(spec.depth);
      break;
    }
  }
  validate(c);
  return c;
}

}  // namespace thrc
