#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "thrc/circuit.hpp"

namespace thrc {

// Evaluation is deterministic and total on well-formed circuits. Promise
// gates (DISJOR/GAPOR) evaluate as plain OR; the promise is checked by the
// verify layer, never assumed here.

constexpr int kDefaultExhaustiveLimit = 24;

// Assignment order convention: assignment index a encodes (x_1,...,x_n) in
// lexicographic order with x_1 as the most significant bit, so index 0 is
// all-zeros and index 2^n - 1 is all-ones.
inline int assignment_bit(uint64_t a, int n, int j) {
  return static_cast<int>((a >> (n - 1 - j)) & 1);
}

inline std::vector<uint8_t> assignment_bits(uint64_t a, int n) {
  std::vector<uint8_t> x(n);
  for (int j = 0; j < n; ++j) x[j] = static_cast<uint8_t>(assignment_bit(a, n, j));
  return x;
}

inline uint64_t assignment_index(const std::vector<uint8_t>& x) {
  uint64_t a = 0;
  for (uint8_t b : x) a = (a << 1) | (b & 1);
  return a;
}

inline int eval_gate(const Gate& g, const std::vector<uint8_t>& vals,
                     const std::vector<uint8_t>& x) {
  auto litval = [&](const Literal& l) -> int { return vals[l.gate] ^ (l.neg ? 1 : 0); };
  switch (g.kind) {
    case GateKind::Input:
      return x[g.input_index];
    case GateKind::Const:
      return g.const_bit ? 1 : 0;
    case GateKind::Thr:
    case GateKind::Ethr: {
      Int sum = 0;
      for (size_t i = 0; i < g.inputs.size(); ++i)
        if (litval(g.inputs[i])) sum += g.weights[i];
      return g.kind == GateKind::Thr ? (sum >= g.threshold) : (sum == g.threshold);
    }
    case GateKind::Maj:
    case GateKind::Emaj:
    case GateKind::Sym: {
      Int sum = 0;
      for (size_t i = 0; i < g.inputs.size(); ++i)
        if (litval(g.inputs[i])) sum += g.mults[i];
      if (g.kind == GateKind::Maj) return sum >= g.threshold;
      if (g.kind == GateKind::Emaj) return sum == g.threshold;
      return g.table[static_cast<size_t>(sum)];
    }
    case GateKind::And: {
      for (const Literal& l : g.inputs)
        if (!litval(l)) return 0;
      return 1;
    }
    case GateKind::Or:
    case GateKind::DisjOr:
    case GateKind::GapOr: {
      for (const Literal& l : g.inputs)
        if (litval(l)) return 1;
      return 0;
    }
  }
  return 0;
}

inline int eval(const Circuit& c, const std::vector<uint8_t>& x) {
  if (static_cast<int>(x.size()) != c.n)
    throw CircuitError("assignment length " + std::to_string(x.size()) +
                       " != circuit arity " + std::to_string(c.n));
  validate(c);
  std::vector<uint8_t> vals(c.gates.size());
  for (size_t i = 0; i < c.gates.size(); ++i)
    vals[i] = static_cast<uint8_t>(eval_gate(c.gates[i], vals, x));
  return vals[c.output.gate] ^ (c.output.neg ? 1 : 0);
}

// Packed 2^n-bit truth table; bit a = value on assignment index a. Bits
// past 2^n are kept zero so word-level scans never see garbage.
struct TruthTable {
  int n = 0;
  std::vector<uint64_t> words;

  explicit TruthTable(int n_ = 0) : n(n_), words(((size_t(1) << n_) + 63) / 64, 0) {}
  int get(uint64_t a) const { return static_cast<int>((words[a >> 6] >> (a & 63)) & 1); }
  void set(uint64_t a, int v) {
    if (v)
      words[a >> 6] |= uint64_t(1) << (a & 63);
    else
      words[a >> 6] &= ~(uint64_t(1) << (a & 63));
  }
  uint64_t size() const { return uint64_t(1) << n; }

  void mask_tail() {
    const uint64_t cnt = size();
    if (cnt % 64 != 0) words.back() &= (uint64_t(1) << (cnt % 64)) - 1;
  }

  void fill_ones() {
    for (auto& w : words) w = ~uint64_t(0);
    mask_tail();
  }

  uint64_t popcount() const {
    uint64_t c = 0;
    for (uint64_t w : words) c += std::popcount(w);
    return c;
  }

  friend bool operator==(const TruthTable& a, const TruthTable& b) {
    return a.n == b.n && a.words == b.words;
  }
};

namespace detail {

// Per-gate truth tables over the full assignment space. Linear-form gates
// run on an int64 scratch when a precomputed magnitude bound allows it,
// falling back to exact big integers otherwise; results are identical.
inline std::vector<TruthTable> eval_all_gates_impl(const Circuit& c) {
  const int n = c.n;
  const uint64_t count = uint64_t(1) << n;
  std::vector<TruthTable> tabs;
  tabs.reserve(c.gates.size());

  std::vector<long long> scratch64;
  std::vector<Int> scratch_big;

  for (size_t gi = 0; gi < c.gates.size(); ++gi) {
    const Gate& g = c.gates[gi];
    TruthTable t(n);
    switch (g.kind) {
      case GateKind::Input: {
        const int j = g.input_index;
        const int shift = n - 1 - j;
        for (uint64_t a = 0; a < count; ++a)
          if ((a >> shift) & 1) t.words[a >> 6] |= uint64_t(1) << (a & 63);
        break;
      }
      case GateKind::Const: {
        if (g.const_bit) t.fill_ones();
        break;
      }
      case GateKind::And: {
        t.fill_ones();
        for (const Literal& l : g.inputs) {
          const TruthTable& ct = tabs[l.gate];
          for (size_t wi = 0; wi < t.words.size(); ++wi)
            t.words[wi] &= l.neg ? ~ct.words[wi] : ct.words[wi];
        }
        t.mask_tail();
        break;
      }
      case GateKind::Or:
      case GateKind::DisjOr:
      case GateKind::GapOr: {
        for (const Literal& l : g.inputs) {
          const TruthTable& ct = tabs[l.gate];
          for (size_t wi = 0; wi < t.words.size(); ++wi)
            t.words[wi] |= l.neg ? ~ct.words[wi] : ct.words[wi];
        }
        t.mask_tail();
        break;
      }
      default: {
        // linear-form gates
        const bool weighted = (g.kind == GateKind::Thr || g.kind == GateKind::Ethr);
        const auto& coefs = weighted ? g.weights : g.mults;
        Int bound = abs_int(g.threshold);
        for (const auto& w : coefs) bound += abs_int(w);
        const bool small = bound < (Int(1) << 62);
        if (small) {
          // Negated wires contribute w*(1-b): fold w into the base and add
          // -w on set bits, so the scan only touches set bits.
          long long base = 0;
          for (size_t i = 0; i < g.inputs.size(); ++i)
            if (g.inputs[i].neg) base += to_int64(coefs[i]);
          scratch64.assign(count, base);
          for (size_t i = 0; i < g.inputs.size(); ++i) {
            const long long w = g.inputs[i].neg ? -to_int64(coefs[i]) : to_int64(coefs[i]);
            const TruthTable& ct = tabs[g.inputs[i].gate];
            for (size_t wi = 0; wi < ct.words.size(); ++wi) {
              uint64_t word = ct.words[wi];
              const uint64_t off = uint64_t(wi) << 6;
              while (word) {
                scratch64[off + std::countr_zero(word)] += w;
                word &= word - 1;
              }
            }
          }
          const long long thr = to_int64(g.threshold);
          if (g.kind == GateKind::Thr || g.kind == GateKind::Maj) {
            for (uint64_t a = 0; a < count; ++a)
              if (scratch64[a] >= thr) t.words[a >> 6] |= uint64_t(1) << (a & 63);
          } else if (g.kind == GateKind::Ethr || g.kind == GateKind::Emaj) {
            for (uint64_t a = 0; a < count; ++a)
              if (scratch64[a] == thr) t.words[a >> 6] |= uint64_t(1) << (a & 63);
          } else {  // Sym
            for (uint64_t a = 0; a < count; ++a)
              if (g.table[static_cast<size_t>(scratch64[a])]) t.words[a >> 6] |= uint64_t(1) << (a & 63);
          }
        } else {
          scratch_big.assign(count, Int(0));
          for (size_t i = 0; i < g.inputs.size(); ++i) {
            const Int& w = coefs[i];
            const Literal& l = g.inputs[i];
            const TruthTable& ct = tabs[l.gate];
            for (uint64_t a = 0; a < count; ++a)
              if (ct.get(a) ^ (l.neg ? 1 : 0)) scratch_big[a] += w;
          }
          if (g.kind == GateKind::Thr || g.kind == GateKind::Maj) {
            for (uint64_t a = 0; a < count; ++a)
              if (scratch_big[a] >= g.threshold) t.set(a, 1);
          } else if (g.kind == GateKind::Ethr || g.kind == GateKind::Emaj) {
            for (uint64_t a = 0; a < count; ++a)
              if (scratch_big[a] == g.threshold) t.set(a, 1);
          } else {
            for (uint64_t a = 0; a < count; ++a)
              if (g.table[static_cast<size_t>(scratch_big[a])]) t.set(a, 1);
          }
        }
        break;
      }
    }
    tabs.push_back(std::move(t));
  }
  return tabs;
}

}  // namespace detail

struct EvalAllResult {
  std::vector<TruthTable> gate_tables;
  TruthTable output;
};

inline EvalAllResult eval_all_gates(const Circuit& c, int limit = kDefaultExhaustiveLimit) {
  if (c.n > limit)
    throw CircuitError("exhaustive evaluation refused: n = " + std::to_string(c.n) +
                       " exceeds limit " + std::to_string(limit));
  validate(c);
  EvalAllResult r;
  r.gate_tables = detail::eval_all_gates_impl(c);
  r.output = r.gate_tables[c.output.gate];
  if (c.output.neg) {
    for (auto& w : r.output.words) w = ~w;
    r.output.mask_tail();
  }
  return r;
}

inline TruthTable eval_all(const Circuit& c, int limit = kDefaultExhaustiveLimit) {
  return eval_all_gates(c, limit).output;
}

}  // namespace thrc
