#include "gt/json_io.hpp"

#include <json.hpp>

namespace gt {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw DocumentError("malformed JSON document");
  return j;
}

}  // namespace

KripkeModel model_from_json(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object() || !j.contains("worlds") || !j.contains("actual"))
    throw DocumentError("model document needs worlds and actual");
  std::vector<std::string> worlds = j.at("worlds").get<std::vector<std::string>>();
  std::string actual = j.at("actual").get<std::string>();
  std::vector<std::pair<std::string, std::string>> rel;
  if (j.contains("rel"))
    for (const json& pair : j.at("rel")) {
      if (!pair.is_array() || pair.size() != 2)
        throw DocumentError("rel entries must be [from, to] pairs");
      rel.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
    }
  std::map<std::string, std::map<std::string, bool>> valuation;
  if (j.contains("valuation"))
    for (const auto& [world, atoms] : j.at("valuation").items())
      for (const auto& [atom, value] : atoms.items())
        valuation[world][atom] = value.get<bool>();
  return make_model(std::move(worlds), actual, rel, valuation);
}

std::string model_to_json(const KripkeModel& m) {
  json j;
  j["worlds"] = m.worlds;
  j["actual"] = m.worlds[m.actual];
  json rel = json::array();
  for (const auto& [a, b] : m.rel) rel.push_back({m.worlds[a], m.worlds[b]});
  j["rel"] = rel;
  json val = json::object();
  for (const auto& [atom, bits] : m.valuation)
    for (std::size_t w = 0; w < bits.size(); ++w)
      if (bits[w]) val[m.worlds[w]][atom] = true;
  j["valuation"] = val;
  return j.dump();
}

ProofDocument proof_from_json(const std::string& text) {
  json j = parse_json(text);
  ProofDocument doc;
  std::string system = j.value("system", "gt");
  if (system == "gt") doc.system = System::GT;
  else if (system == "gt4") doc.system = System::GT4;
  else throw DocumentError("unknown proof system: " + system);
  if (j.contains("hypotheses"))
    for (const json& h : j.at("hypotheses"))
      doc.hypotheses.push_back(parse_formula(h.get<std::string>()));
  if (!j.contains("lines")) throw DocumentError("proof document needs lines");
  for (const json& ln : j.at("lines")) {
    ProofLine line;
    line.formula = parse_formula(ln.at("formula").get<std::string>());
    const json& by = ln.at("by");
    if (by.is_string() && by == "ax") {
      line.by = {Justification::Kind::Axiom, 0, 0};
    } else if (by.is_string() && by == "hyp") {
      line.by = {Justification::Kind::Hypothesis, 0, 0};
    } else if (by.is_object() && by.contains("mp")) {
      const json& mp = by.at("mp");
      if (!mp.is_array() || mp.size() != 2)
        throw DocumentError("mp justification must be [major, minor]");
      line.by = {Justification::Kind::ModusPonens, mp[0].get<int>(), mp[1].get<int>()};
    } else {
      throw DocumentError("unknown justification");
    }
    doc.lines.push_back(std::move(line));
  }
  return doc;
}

std::string proof_to_json(const ProofDocument& doc) {
  json j;
  j["system"] = doc.system == System::GT ? "gt" : "gt4";
  json hyps = json::array();
  for (const Formula& h : doc.hypotheses) hyps.push_back(print_formula(h));
  j["hypotheses"] = hyps;
  json lines = json::array();
  for (const ProofLine& ln : doc.lines) {
    json l;
    l["formula"] = print_formula(ln.formula);
    switch (ln.by.kind) {
      case Justification::Kind::Axiom: l["by"] = "ax"; break;
      case Justification::Kind::Hypothesis: l["by"] = "hyp"; break;
      case Justification::Kind::ModusPonens:
        l["by"] = json{{"mp", {ln.by.major, ln.by.minor}}};
        break;
    }
    lines.push_back(std::move(l));
  }
  j["lines"] = lines;
  return j.dump();
}

DerivationDocument derivation_from_json(const std::string& text) {
  json j = parse_json(text);
  DerivationDocument doc;
  std::string system = j.value("system", "get");
  if (system == "get") doc.system = GraphSystem::GET;
  else if (system == "get4") doc.system = GraphSystem::GET4;
  else throw DocumentError("unknown graph system: " + system);
  doc.start = parse_graph(j.value("start", ""));
  if (j.contains("steps"))
    for (const json& st : j.at("steps")) {
      DerivationStep step;
      auto rule = rule_from_name(st.at("rule").get<std::string>());
      if (!rule) throw DocumentError("unknown rule: " + st.at("rule").get<std::string>());
      step.rule = *rule;
      step.result = parse_graph(st.at("result").get<std::string>());
      if (st.contains("hint")) {
        Position pos;
        for (const json& idx : st.at("hint")) pos.path.push_back(idx.get<int>());
        step.hint = std::move(pos);
      }
      doc.steps.push_back(std::move(step));
    }
  return doc;
}

std::string derivation_to_json(const DerivationDocument& doc) {
  json j;
  j["system"] = doc.system == GraphSystem::GET ? "get" : "get4";
  j["start"] = print_graph(doc.start);
  json steps = json::array();
  for (const DerivationStep& st : doc.steps) {
    json s;
    s["rule"] = rule_name(st.rule);
    s["result"] = print_graph(st.result);
    if (st.hint) s["hint"] = st.hint->path;
    steps.push_back(std::move(s));
  }
  j["steps"] = steps;
  return j.dump();
}

}  // namespace gt
