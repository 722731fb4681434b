#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "thrc/circuit.hpp"
#include "thrc/pass_report.hpp"

namespace thrc {

using Json = nlohmann::ordered_json;

// Circuit file format. Weights and thresholds are decimal strings so
// arbitrary precision survives the round trip; gate ids are the list
// positions and must be strictly increasing.
inline Json circuit_to_json(const Circuit& c) {
  Json j;
  j["n"] = c.n;
  Json gates = Json::array();
  for (size_t gi = 0; gi < c.gates.size(); ++gi) {
    const Gate& g = c.gates[gi];
    Json jg;
    jg["id"] = gi;
    jg["kind"] = kind_name(g.kind);
    if (g.kind == GateKind::Input) jg["index"] = g.input_index;
    if (g.kind == GateKind::Const) jg["bit"] = g.const_bit ? 1 : 0;
    if (!g.inputs.empty() || (g.kind != GateKind::Input && g.kind != GateKind::Const)) {
      Json ins = Json::array();
      for (const Literal& l : g.inputs) ins.push_back({{"gate", l.gate}, {"neg", l.neg}});
      jg["inputs"] = ins;
    }
    if (g.kind == GateKind::Thr || g.kind == GateKind::Ethr) {
      Json ws = Json::array();
      for (const Int& w : g.weights) ws.push_back(w.str());
      jg["weights"] = ws;
      jg[g.kind == GateKind::Thr ? "threshold" : "target"] = g.threshold.str();
    }
    if (g.kind == GateKind::Maj || g.kind == GateKind::Emaj || g.kind == GateKind::Sym) {
      Json ms = Json::array();
      for (const Int& m : g.mults) {
        if (!fits_int64(m)) throw CircuitError("multiplicity too large for the file format");
        ms.push_back(to_int64(m));
      }
      jg["multiplicities"] = ms;
      if (g.kind == GateKind::Maj) jg["threshold"] = g.threshold.str();
      if (g.kind == GateKind::Emaj) jg["target"] = g.threshold.str();
      if (g.kind == GateKind::Sym) {
        Json tb = Json::array();
        for (uint8_t b : g.table) tb.push_back(static_cast<int>(b));
        jg["table"] = tb;
      }
    }
    gates.push_back(jg);
  }
  j["gates"] = gates;
  j["output"] = c.output.gate;
  if (c.output.neg) j["output_neg"] = true;
  return j;
}

inline Int int_from_json(const Json& v) {
  if (v.is_string()) return Int(v.get<std::string>());
  if (v.is_number_integer()) return Int(v.get<long long>());
  throw CircuitError("expected integer or decimal string in circuit file");
}

inline Circuit circuit_from_json(const Json& j) {
  Circuit c;
  c.n = j.at("n").get<int>();
  long long prev_id = -1;
  std::map<long long, int> id_map;
  for (const Json& jg : j.at("gates")) {
    long long id = jg.at("id").get<long long>();
    if (id <= prev_id) throw CircuitError("gate ids must be strictly increasing in list order");
    prev_id = id;
    Gate g;
    auto kind = kind_from_name(jg.at("kind").get<std::string>());
    if (!kind) throw CircuitError("unknown gate kind " + jg.at("kind").get<std::string>());
    g.kind = *kind;
    if (jg.contains("inputs")) {
      for (const Json& jl : jg.at("inputs")) {
        long long ref = jl.at("gate").get<long long>();
        auto it = id_map.find(ref);
        if (it == id_map.end())
          throw CircuitError("gate " + std::to_string(id) + ": wire to undefined gate " +
                             std::to_string(ref));
        g.inputs.push_back(Literal{it->second, jl.value("neg", false)});
      }
    }
    switch (g.kind) {
      case GateKind::Input:
        g.input_index = jg.at("index").get<int>();
        break;
      case GateKind::Const:
        g.const_bit = jg.at("bit").get<int>() != 0;
        break;
      case GateKind::Thr:
      case GateKind::Ethr:
        for (const Json& w : jg.at("weights")) g.weights.push_back(int_from_json(w));
        g.threshold = int_from_json(jg.at(g.kind == GateKind::Thr ? "threshold" : "target"));
        break;
      case GateKind::Maj:
      case GateKind::Emaj:
        for (const Json& m : jg.at("multiplicities")) g.mults.push_back(int_from_json(m));
        g.threshold = int_from_json(jg.at(g.kind == GateKind::Maj ? "threshold" : "target"));
        break;
      case GateKind::Sym:
        for (const Json& m : jg.at("multiplicities")) g.mults.push_back(int_from_json(m));
        for (const Json& b : jg.at("table")) g.table.push_back(static_cast<uint8_t>(b.get<int>()));
        break;
      default:
        break;
    }
    id_map[id] = c.add(std::move(g));
  }
  long long out = j.at("output").get<long long>();
  auto it = id_map.find(out);
  if (it == id_map.end()) throw CircuitError("output refers to undefined gate " + std::to_string(out));
  c.output = Literal{it->second, j.value("output_neg", false)};
  validate(c);
  return c;
}

inline Json report_to_json(const PassReport& r) {
  Json j;
  j["lemma_name"] = r.lemma_name;
  j["input_size"] = r.input_size.str();
  j["output_size"] = r.output_size.str();
  j["top_fanin"] = r.top_fanin.str();
  j["max_abs_weight"] = r.max_abs_weight.str();
  if (r.epsilon) j["epsilon"] = to_string(*r.epsilon);
  if (r.seed) j["seed"] = *r.seed;
  if (!r.prime_list.empty()) j["prime_list"] = r.prime_list;
  if (!r.extras.empty()) j["extras"] = r.extras;
  return j;
}

inline PassReport report_from_json(const Json& j) {
  PassReport r;
  r.lemma_name = j.at("lemma_name").get<std::string>();
  r.input_size = Int(j.at("input_size").get<std::string>());
  r.output_size = Int(j.at("output_size").get<std::string>());
  r.top_fanin = Int(j.at("top_fanin").get<std::string>());
  r.max_abs_weight = Int(j.at("max_abs_weight").get<std::string>());
  if (j.contains("epsilon")) r.epsilon = parse_rational(j.at("epsilon").get<std::string>());
  if (j.contains("seed")) r.seed = j.at("seed").get<uint64_t>();
  if (j.contains("prime_list")) r.prime_list = j.at("prime_list").get<std::vector<uint64_t>>();
  if (j.contains("extras"))
    r.extras = j.at("extras").get<std::map<std::string, std::string>>();
  return r;
}

inline void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(1) << "\n";
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  Json j;
  in >> j;
  return j;
}

inline void write_circuit_file(const std::string& path, const Circuit& c) {
  write_json_file(path, circuit_to_json(c));
}

inline Circuit read_circuit_file(const std::string& path) {
  return circuit_from_json(read_json_file(path));
}

}  // namespace thrc
