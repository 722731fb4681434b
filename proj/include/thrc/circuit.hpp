#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "thrc/int_types.hpp"

namespace thrc {

// Structural problem in a circuit (dangling reference, bad table length,
// shape mismatch for a pass). Always names the offending gate when there
// is one.
struct CircuitError : std::runtime_error {
  explicit CircuitError(const std::string& what) : std::runtime_error(what) {}
};

enum class GateKind {
  Input,
  Const,
  Thr,     // [w . x >= t]
  Ethr,    // [w . x == t]
  Maj,     // Thr with unit weights given as multiplicities
  Emaj,    // Ethr with unit weights given as multiplicities
  Sym,     // table lookup on the multiplicity-weighted input count
  And,
  Or,
  DisjOr,  // promise: at most one input true; evaluates as Or
  GapOr,   // promise: no input true or at least half true; evaluates as Or
};

inline const char* kind_name(GateKind k) {
  switch (k) {
    case GateKind::Input: return "INPUT";
    case GateKind::Const: return "CONST";
    case GateKind::Thr: return "THR";
    case GateKind::Ethr: return "ETHR";
    case GateKind::Maj: return "MAJ";
    case GateKind::Emaj: return "EMAJ";
    case GateKind::Sym: return "SYM";
    case GateKind::And: return "AND";
    case GateKind::Or: return "OR";
    case GateKind::DisjOr: return "DISJOR";
    case GateKind::GapOr: return "GAPOR";
  }
  return "?";
}

inline std::optional<GateKind> kind_from_name(const std::string& s) {
  static const std::map<std::string, GateKind> table = {
      {"INPUT", GateKind::Input}, {"CONST", GateKind::Const}, {"THR", GateKind::Thr},
      {"ETHR", GateKind::Ethr},   {"MAJ", GateKind::Maj},     {"EMAJ", GateKind::Emaj},
      {"SYM", GateKind::Sym},     {"AND", GateKind::And},     {"OR", GateKind::Or},
      {"DISJOR", GateKind::DisjOr}, {"GAPOR", GateKind::GapOr}};
  auto it = table.find(s);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

// A wire into a gate. Negated wires are first-class: a gate never needs a
// separate NOT node, and the [=] = [>=] + [<=] - 1 expansions rely on them.
struct Literal {
  int gate = -1;
  bool neg = false;

  friend bool operator==(const Literal& a, const Literal& b) {
    return a.gate == b.gate && a.neg == b.neg;
  }
};

inline Literal lit(int gate, bool neg = false) { return Literal{gate, neg}; }

struct Gate {
  GateKind kind = GateKind::Const;
  std::vector<Literal> inputs;

  std::vector<Int> weights;  // Thr/Ethr, parallel to inputs
  std::vector<Int> mults;    // Maj/Emaj/Sym, parallel to inputs, each >= 1
  Int threshold = 0;         // Thr/Maj threshold, Ethr/Emaj target
  std::vector<uint8_t> table;  // Sym, length 1 + sum(mults)

  int input_index = -1;      // Input
  bool const_bit = false;    // Const

  // Fan-in counted with multiplicity; this is the size statistic used
  // everywhere.
  Int wire_count() const {
    switch (kind) {
      case GateKind::Input:
      case GateKind::Const:
        return 0;
      case GateKind::Maj:
      case GateKind::Emaj:
      case GateKind::Sym: {
        Int s = 0;
        for (const auto& m : mults) s += m;
        return s;
      }
      default:
        return Int(inputs.size());
    }
  }
};

// A layered DAG of gates over n Boolean inputs. Gates are stored in
// topological order: every wire refers to a strictly earlier gate. The
// output is a literal so the circuit class is closed under negation
// without adding gates.
struct Circuit {
  int n = 0;
  std::vector<Gate> gates;
  Literal output;
  std::vector<int> layer_tags;  // optional, parallel to gates when nonempty

  int add(Gate g) {
    gates.push_back(std::move(g));
    return static_cast<int>(gates.size()) - 1;
  }

  Int wire_count() const {
    Int s = 0;
    for (const auto& g : gates) s += g.wire_count();
    return s;
  }

  const Gate& out_gate() const { return gates.at(output.gate); }
};

// ---- gate construction helpers ----

inline Gate make_input(int index) {
  Gate g;
  g.kind = GateKind::Input;
  g.input_index = index;
  return g;
}

inline Gate make_const(bool bit) {
  Gate g;
  g.kind = GateKind::Const;
  g.const_bit = bit;
  return g;
}

inline Gate make_thr(std::vector<Literal> ins, std::vector<Int> ws, Int t) {
  Gate g;
  g.kind = GateKind::Thr;
  g.inputs = std::move(ins);
  g.weights = std::move(ws);
  g.threshold = std::move(t);
  return g;
}

inline Gate make_ethr(std::vector<Literal> ins, std::vector<Int> ws, Int t) {
  Gate g = make_thr(std::move(ins), std::move(ws), std::move(t));
  g.kind = GateKind::Ethr;
  return g;
}

inline Gate make_maj(std::vector<Literal> ins, std::vector<Int> ms, Int t) {
  Gate g;
  g.kind = GateKind::Maj;
  g.inputs = std::move(ins);
  g.mults = std::move(ms);
  g.threshold = std::move(t);
  return g;
}

inline Gate make_emaj(std::vector<Literal> ins, std::vector<Int> ms, Int t) {
  Gate g = make_maj(std::move(ins), std::move(ms), std::move(t));
  g.kind = GateKind::Emaj;
  return g;
}

inline Gate make_sym(std::vector<Literal> ins, std::vector<Int> ms, std::vector<uint8_t> table) {
  Gate g;
  g.kind = GateKind::Sym;
  g.inputs = std::move(ins);
  g.mults = std::move(ms);
  g.table = std::move(table);
  return g;
}

inline Gate make_nary(GateKind k, std::vector<Literal> ins) {
  Gate g;
  g.kind = k;
  g.inputs = std::move(ins);
  return g;
}

// Fresh circuit with the n input gates at ids 0..n-1.
inline Circuit circuit_with_inputs(int n) {
  Circuit c;
  c.n = n;
  for (int i = 0; i < n; ++i) c.add(make_input(i));
  return c;
}

// ---- validation ----

inline void validate(const Circuit& c) {
  if (c.n < 0) throw CircuitError("negative input arity");
  for (size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    const std::string where = "gate " + std::to_string(i) + " (" + kind_name(g.kind) + ")";
    for (const Literal& l : g.inputs) {
      if (l.gate < 0 || l.gate >= static_cast<int>(i))
        throw CircuitError(where + ": wire to undefined or later gate " + std::to_string(l.gate));
    }
    switch (g.kind) {
      case GateKind::Input:
        if (g.input_index < 0 || g.input_index >= c.n)
          throw CircuitError(where + ": input index out of range");
        if (!g.inputs.empty()) throw CircuitError(where + ": input gate with wires");
        break;
      case GateKind::Const:
        if (!g.inputs.empty()) throw CircuitError(where + ": const gate with wires");
        break;
      case GateKind::Thr:
      case GateKind::Ethr:
        if (g.weights.size() != g.inputs.size())
          throw CircuitError(where + ": weight list length != input list length");
        break;
      case GateKind::Maj:
      case GateKind::Emaj:
      case GateKind::Sym: {
        if (g.mults.size() != g.inputs.size())
          throw CircuitError(where + ": multiplicity list length != input list length");
        Int total = 0;
        for (const auto& m : g.mults) {
          if (m < 1) throw CircuitError(where + ": multiplicity < 1");
          total += m;
        }
        if (g.kind == GateKind::Sym) {
          if (total > 1 << 22) throw CircuitError(where + ": SYM table would be enormous");
          if (Int(g.table.size()) != total + 1)
            throw CircuitError(where + ": SYM table length != 1 + total multiplicity");
        }
        break;
      }
      default:
        break;
    }
  }
  if (c.output.gate < 0 || c.output.gate >= static_cast<int>(c.gates.size()))
    throw CircuitError("output refers to undefined gate " + std::to_string(c.output.gate));
  if (!c.layer_tags.empty() && c.layer_tags.size() != c.gates.size())
    throw CircuitError("layer tag list length != gate count");
}

// ---- linear forms with canonical sign handling ----
//
// Accumulates coefficients over positive literals plus a constant, so that
// negated wires and repeated wires fold exactly: w * (1 - g) becomes
// constant w plus coefficient -w on g.
struct LinForm {
  std::map<int, Int> coef;  // gate id -> coefficient
  Int constant = 0;

  void add(const Literal& l, const Int& w) {
    if (w == 0) return;
    if (l.neg) {
      constant += w;
      coef[l.gate] -= w;
    } else {
      coef[l.gate] += w;
    }
    if (coef.count(l.gate) && coef[l.gate] == 0) coef.erase(l.gate);
  }

  // Interval of values reachable when every referenced gate ranges over
  // {0,1} independently.
  std::pair<Int, Int> value_interval() const {
    Int lo = constant, hi = constant;
    for (const auto& [g, w] : coef) {
      if (w > 0)
        hi += w;
      else
        lo += w;
    }
    return {lo, hi};
  }

  // Emits [sum >= t] as mult-form MAJ: negative coefficients move to
  // negated literals so all multiplicities are positive.
  Gate to_maj_ge(const Int& t) const {
    Gate g;
    g.kind = GateKind::Maj;
    Int thr = t - constant;
    for (const auto& [id, w] : coef) {
      if (w > 0) {
        g.inputs.push_back(lit(id));
        g.mults.push_back(w);
      } else {
        g.inputs.push_back(lit(id, true));
        g.mults.push_back(-w);
        thr += -w;
      }
    }
    g.threshold = thr;
    if (g.inputs.empty()) {
      // degenerate: constant comparison
      Gate cg = make_const(0 >= thr);
      return cg;
    }
    return g;
  }

  Gate to_emaj_eq(const Int& t) const {
    Gate g = to_maj_ge(t);
    if (g.kind == GateKind::Const) {
      g.const_bit = (constant == t);
      return g;
    }
    g.kind = GateKind::Emaj;
    return g;
  }

  // Emits [sum >= t] / [sum == t] as a weighted THR/ETHR gate over
  // positive literals.
  Gate to_thr_ge(const Int& t) const {
    Gate g;
    g.kind = GateKind::Thr;
    for (const auto& [id, w] : coef) {
      g.inputs.push_back(lit(id));
      g.weights.push_back(w);
    }
    g.threshold = t - constant;
    return g;
  }

  Gate to_ethr_eq(const Int& t) const {
    Gate g = to_thr_ge(t);
    g.kind = GateKind::Ethr;
    return g;
  }
};

// Linear form of a weighted gate (Thr/Ethr) or mult gate (Maj/Emaj/Sym).
inline LinForm gate_lin_form(const Gate& g) {
  LinForm f;
  const bool weighted = (g.kind == GateKind::Thr || g.kind == GateKind::Ethr);
  for (size_t i = 0; i < g.inputs.size(); ++i) {
    f.add(g.inputs[i], weighted ? g.weights[i] : g.mults[i]);
  }
  return f;
}

}  // namespace thrc
