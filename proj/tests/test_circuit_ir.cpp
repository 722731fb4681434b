#include <catch2/catch_amalgamated.hpp>

#include "thrc/circuit.hpp"
#include "thrc/circuit_ops.hpp"
#include "thrc/eval.hpp"
#include "thrc/gen.hpp"
#include "thrc/json_io.hpp"

using namespace thrc;

namespace {

Circuit single_thr(int n, std::vector<Int> ws, Int t) {
  Circuit c = circuit_with_inputs(n);
  std::vector<Literal> ins;
  for (int i = 0; i < n; ++i) ins.push_back(lit(i));
  c.output = lit(c.add(make_thr(ins, std::move(ws), std::move(t))));
  return c;
}

}  // namespace

TEST_CASE("THR gate: majority of two") {
  Circuit c = single_thr(2, {1, 1}, 2);
  CHECK(eval(c, {1, 1}) == 1);
  CHECK(eval(c, {1, 0}) == 0);
  CHECK(eval(c, {0, 0}) == 0);
}

TEST_CASE("ETHR gate: 3x1 - 2x2 = 1") {
  Circuit c = circuit_with_inputs(2);
  c.output = lit(c.add(make_ethr({lit(0), lit(1)}, {3, -2}, 1)));
  CHECK(eval(c, {1, 1}) == 1);
  CHECK(eval(c, {1, 0}) == 0);
  CHECK(eval(c, {0, 1}) == 0);
  CHECK(eval(c, {0, 0}) == 0);
}

TEST_CASE("SYM gate: table lookup on input count") {
  Circuit c = circuit_with_inputs(2);
  c.output = lit(c.add(make_sym({lit(0), lit(1)}, {1, 1}, {1, 0, 0})));
  CHECK(eval(c, {0, 0}) == 1);
  CHECK(eval(c, {1, 0}) == 0);
  CHECK(eval(c, {0, 1}) == 0);
  CHECK(eval(c, {1, 1}) == 0);
}

TEST_CASE("eval_all of constant-0 circuit") {
  Circuit c = circuit_with_inputs(2);
  c.output = lit(c.add(make_const(false)));
  TruthTable t = eval_all(c);
  for (uint64_t a = 0; a < 4; ++a) CHECK(t.get(a) == 0);
}

TEST_CASE("eval_all of [x1 >= 1] with n=1 is (0,1)") {
  Circuit c = single_thr(1, {1}, 1);
  TruthTable t = eval_all(c);
  CHECK(t.get(0) == 0);
  CHECK(t.get(1) == 1);
}

TEST_CASE("eval_all refuses above the exhaustive limit") {
  Circuit c = single_thr(8, {1, 1, 1, 1, 1, 1, 1, 1}, 4);
  CHECK_THROWS_AS(eval_all(c, 6), CircuitError);
}

TEST_CASE("eval_all agrees with assignment-by-assignment eval") {
  Xoshiro256 rng(11);
  for (int rep = 0; rep < 20; ++rep) {
    GenSpec spec;
    spec.family = Family::ThrThr;
    spec.n = 6;
    spec.gates = 3;
    spec.weight_bound = 9;
    spec.arity = 4;
    spec.seed = rng.next();
    Circuit c = gen(spec);
    TruthTable t = eval_all(c);
    for (uint64_t a = 0; a < t.size(); ++a)
      REQUIRE(t.get(a) == eval(c, assignment_bits(a, c.n)));
  }
}

TEST_CASE("malformed circuits are rejected naming the gate") {
  Circuit c = circuit_with_inputs(2);
  Gate bad = make_sym({lit(0), lit(1)}, {1, 1}, {1, 0});  // table too short
  c.output = lit(c.add(bad));
  try {
    eval(c, {0, 0});
    FAIL("expected CircuitError");
  } catch (const CircuitError& e) {
    CHECK(std::string(e.what()).find("gate 2") != std::string::npos);
  }

  Circuit d = circuit_with_inputs(1);
  Gate dangling = make_nary(GateKind::Or, {lit(5)});
  d.output = lit(d.add(dangling));
  CHECK_THROWS_AS(eval(d, {0}), CircuitError);
}

TEST_CASE("project negate is an involution, and negate then eval flips") {
  Xoshiro256 rng(21);
  for (int rep = 0; rep < 10; ++rep) {
    GenSpec spec;
    spec.family = Family::ThrThr;
    spec.n = 5;
    spec.gates = 3;
    spec.weight_bound = 7;
    spec.arity = 5;
    spec.seed = rng.next();
    Circuit c = gen(spec);
    Circuit neg = project_negate(c);
    Circuit back = project_negate(neg);
    TruthTable tc = eval_all(c), tn = eval_all(neg), tb = eval_all(back);
    for (uint64_t a = 0; a < tc.size(); ++a) {
      CHECK(tn.get(a) == 1 - tc.get(a));
      CHECK(tb.get(a) == tc.get(a));
    }
  }
}

TEST_CASE("fix(0,1) on [x1+x2 >= 2] behaves as [x2 >= 1]") {
  Circuit c = single_thr(2, {1, 1}, 2);
  Circuit f = project_fix(c, 0, true);
  TruthTable t = eval_all(f);
  for (uint64_t a = 0; a < 4; ++a) {
    int x2 = assignment_bit(a, 2, 1);
    CHECK(t.get(a) == x2);
  }
}

TEST_CASE("xor-shift(0,1,0) on [x1 >= 1] computes x2") {
  Circuit c = single_thr(2, {1, 0}, 1);
  // rebuild as THR over x1 only
  Circuit c1 = circuit_with_inputs(2);
  c1.output = lit(c1.add(make_thr({lit(0)}, {1}, 1)));
  Circuit s = project_xor_shift(c1, 0, 1, false);
  TruthTable t = eval_all(s);
  for (uint64_t a = 0; a < 4; ++a) CHECK(t.get(a) == assignment_bit(a, 2, 1));

  Circuit sb = project_xor_shift(c1, 0, 1, true);
  TruthTable tb = eval_all(sb);
  for (uint64_t a = 0; a < 4; ++a) CHECK(tb.get(a) == 1 - assignment_bit(a, 2, 1));
}

TEST_CASE("projections on random circuits match semantic substitution") {
  Xoshiro256 rng(31);
  for (int rep = 0; rep < 10; ++rep) {
    GenSpec spec;
    spec.family = Family::ThrThr;
    spec.n = 5;
    spec.gates = 2;
    spec.weight_bound = 6;
    spec.arity = 5;
    spec.seed = rng.next();
    Circuit c = gen(spec);
    int i = static_cast<int>(rng.below(5)), j = static_cast<int>(rng.below(5));
    bool b = rng.below(2) == 1;

    Circuit cf = project_fix(c, i, b);
    Circuit cs = project_xor_shift(c, i, j, b);
    TruthTable tf = eval_all(cf), ts = eval_all(cs), tc = eval_all(c);
    for (uint64_t a = 0; a < tc.size(); ++a) {
      auto x = assignment_bits(a, c.n);
      auto xf = x;
      xf[i] = b ? 1 : 0;
      CHECK(tf.get(a) == tc.get(assignment_index(xf)));
      auto xs = x;
      xs[i] = x[j] ^ (b ? 1 : 0);
      CHECK(ts.get(a) == tc.get(assignment_index(xs)));
    }
  }
}

TEST_CASE("conjoin of one circuit is equivalent to it") {
  Circuit c = single_thr(2, {1, 1}, 1);
  Circuit j = conjoin({c});
  CHECK(eval_all(j) == eval_all(c));
}

TEST_CASE("conjoin of C and not-C is constant 0") {
  Circuit c = single_thr(3, {1, 1, -2}, 1);
  Circuit j = conjoin({c, project_negate(c)});
  TruthTable t = eval_all(j);
  CHECK(t.popcount() == 0);
}

TEST_CASE("conjoin of three random circuits is the AND of their tables") {
  Xoshiro256 rng(41);
  for (int rep = 0; rep < 8; ++rep) {
    std::vector<Circuit> cs;
    std::vector<TruthTable> ts;
    for (int k = 0; k < 3; ++k) {
      GenSpec spec;
      spec.family = Family::ThrThr;
      spec.n = 6;
      spec.gates = 2;
      spec.weight_bound = 8;
      spec.arity = 4;
      spec.seed = rng.next();
      cs.push_back(gen(spec));
      ts.push_back(eval_all(cs.back()));
    }
    TruthTable tj = eval_all(conjoin(cs));
    for (uint64_t a = 0; a < tj.size(); ++a)
      CHECK(tj.get(a) == (ts[0].get(a) & ts[1].get(a) & ts[2].get(a)));
  }
}

TEST_CASE("conjoin rejects arity mismatch") {
  Circuit a = single_thr(2, {1, 1}, 1);
  Circuit b = single_thr(3, {1, 1, 1}, 1);
  CHECK_THROWS_AS(conjoin({a, b}), CircuitError);
}

TEST_CASE("stats: wires, weights, multiplicities") {
  Circuit c = circuit_with_inputs(3);
  c.output = lit(c.add(make_thr({lit(0), lit(1), lit(2)}, {1, 2, 3}, 2)));
  PassReport r = stats(c);
  CHECK(r.output_size == 3);
  CHECK(r.max_abs_weight == 3);
  CHECK(r.top_fanin == 3);

  Circuit m = circuit_with_inputs(2);
  m.output = lit(m.add(make_maj({lit(0), lit(1)}, {2, 5}, 4)));
  PassReport rm = stats(m);
  CHECK(rm.output_size == 7);
  CHECK(rm.top_fanin == 7);
}

TEST_CASE("MAJ with multiplicities equals MAJ over duplicated unit wires") {
  Xoshiro256 rng(51);
  for (int rep = 0; rep < 40; ++rep) {
    int fanin = 1 + static_cast<int>(rng.below(6));
    int n = fanin;
    Circuit a = circuit_with_inputs(n);
    Circuit b = circuit_with_inputs(n);
    std::vector<Literal> la, lb;
    std::vector<Int> ma, mb;
    Int total = 0;
    for (int i = 0; i < fanin; ++i) {
      bool neg = rng.below(2) == 1;
      long long mult = 1 + static_cast<long long>(rng.below(4));
      la.push_back(lit(i, neg));
      ma.push_back(mult);
      for (long long k = 0; k < mult; ++k) {
        lb.push_back(lit(i, neg));
        mb.push_back(1);
      }
      total += mult;
    }
    Int thr = Int(rng.below(static_cast<uint64_t>(to_int64(total)) + 2));
    a.output = lit(a.add(make_maj(la, ma, thr)));
    b.output = lit(b.add(make_maj(lb, mb, thr)));
    CHECK(eval_all(a) == eval_all(b));
  }
}

TEST_CASE("serialization round-trip preserves eval_all exactly") {
  Xoshiro256 rng(61);
  for (int rep = 0; rep < 12; ++rep) {
    GenSpec spec;
    spec.family = rep % 2 == 0 ? Family::ThrThr : Family::SymAnd;
    spec.n = 6;
    spec.gates = 3;
    spec.weight_bound = 1000000000000LL;  // exercise multi-limb weights
    if (spec.family == Family::SymAnd) spec.weight_bound = 4;
    spec.arity = 4;
    spec.seed = rng.next();
    Circuit c = gen(spec);
    Json j = circuit_to_json(c);
    Circuit back = circuit_from_json(Json::parse(j.dump()));
    CHECK(eval_all(back) == eval_all(c));
    // and the re-serialization is byte-identical
    CHECK(circuit_to_json(back).dump() == j.dump());
  }
}

TEST_CASE("promise gates evaluate as plain OR") {
  Circuit c = circuit_with_inputs(2);
  int d = c.add(make_nary(GateKind::DisjOr, {lit(0), lit(1)}));
  c.output = lit(d);
  CHECK(eval(c, {1, 1}) == 1);  // promise violated, evaluation does not care
  Circuit g = circuit_with_inputs(2);
  g.output = lit(g.add(make_nary(GateKind::GapOr, {lit(0), lit(1)})));
  CHECK(eval(g, {1, 0}) == 1);
}
