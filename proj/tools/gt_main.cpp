// Command-line front end.  Every subcommand prints a one-line JSON verdict on
// stdout.  Exit status: 0 success/valid/accepted, 1 countermodel found or
// check rejected, 2 usage or input error.

#include "gt/json_io.hpp"
#include "gt/translate.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using nlohmann::json;

// Inline expression, or @file indirection.
std::string expr_arg(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw std::runtime_error("cannot read file: " + arg.substr(1));
  std::ostringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
  return text;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

gt::FrameClass frame_from_name(const std::string& name) {
  if (name == "t") return gt::FrameClass::t();
  if (name == "s4") return gt::FrameClass::s4();
  if (name == "s42") return gt::FrameClass::s42();
  if (name == "s5") return gt::FrameClass::s5();
  throw std::runtime_error("unknown frame class: " + name);
}

int emit(const json& j, int status) {
  std::cout << j.dump() << "\n";
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GT / GET toolkit: parsing, Kripke evaluation, bounded validity, "
               "proof checking, graph derivations and translations"};
  app.require_subcommand(1);

  std::string expr, to, model_path, formula_text, world, file, frame_name = "t",
              system_name = "get", rule_name_arg;
  int max_worlds = 3, max_size = 3, jobs = 1;
  std::uint64_t budget = 200'000'000;

  auto* cmd_pf = app.add_subcommand("parse-formula", "parse a formula and print its canonical form");
  cmd_pf->add_option("expr", expr, "formula text or @file")->required();

  auto* cmd_pg = app.add_subcommand("parse-graph", "parse a graph and print it back");
  cmd_pg->add_option("expr", expr, "graph text or @file")->required();

  auto* cmd_tr = app.add_subcommand("translate", "translate between formulas and graphs");
  cmd_tr->add_option("--to", to, "target: graph or formula")->required();
  cmd_tr->add_option("expr", expr, "source text or @file")->required();

  auto* cmd_ev = app.add_subcommand("eval", "evaluate a formula in a model");
  cmd_ev->add_option("--model", model_path, "model document (JSON)")->required();
  cmd_ev->add_option("--formula", formula_text, "formula text or @file")->required();
  cmd_ev->add_option("--world", world, "world id (default: the actual world)");

  auto* cmd_va = app.add_subcommand("valid", "bounded validity / countermodel search");
  cmd_va->add_option("--formula", formula_text, "formula text or @file")->required();
  cmd_va->add_option("--max-worlds", max_worlds, "world bound")->required();
  cmd_va->add_option("--frame", frame_name, "frame class: t, s4, s42 or s5");
  cmd_va->add_option("--jobs", jobs, "parallel workers");
  cmd_va->add_option("--budget", budget, "model budget");

  auto* cmd_cp = app.add_subcommand("check-proof", "check a Hilbert proof document");
  cmd_cp->add_option("file", file, "proof document (JSON)")->required();

  auto* cmd_cd = app.add_subcommand("check-derivation", "check a graph derivation document");
  cmd_cd->add_option("file", file, "derivation document (JSON)")->required();

  auto* cmd_ss = app.add_subcommand("soundness-suite", "semantic soundness sweep of the rules");
  cmd_ss->add_option("--max-size", max_size, "node-count bound on source graphs");
  cmd_ss->add_option("--max-worlds", max_worlds, "world bound");
  cmd_ss->add_option("--system", system_name, "ruleset: get or get4");
  cmd_ss->add_option("--frame", frame_name, "frame override (default from system)")->default_str("");
  cmd_ss->add_option("--rule", rule_name_arg, "restrict to one rule");
  cmd_ss->add_option("--jobs", jobs, "parallel workers");

  auto* cmd_co = app.add_subcommand("corpus", "validate the theorem corpus");
  cmd_co->add_option("--max-worlds", max_worlds, "world bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_pf->parsed()) {
      gt::Formula f = gt::parse_formula(expr_arg(expr));
      return emit({{"ok", true}, {"formula", gt::print_formula(f)}}, 0);
    }
    if (cmd_pg->parsed()) {
      gt::Graph g = gt::parse_graph(expr_arg(expr));
      return emit({{"ok", true}, {"graph", gt::print_graph(g)}}, 0);
    }
    if (cmd_tr->parsed()) {
      if (to == "graph") {
        gt::Formula f = gt::parse_formula(expr_arg(expr));
        return emit({{"ok", true}, {"graph", gt::print_graph(gt::to_graph(f))}}, 0);
      }
      if (to == "formula") {
        gt::Graph g = gt::parse_graph(expr_arg(expr));
        return emit({{"ok", true}, {"formula", gt::print_formula(gt::to_formula(g))}}, 0);
      }
      throw std::runtime_error("--to must be graph or formula");
    }
    if (cmd_ev->parsed()) {
      gt::KripkeModel m = gt::model_from_json(slurp(model_path));
      gt::Formula f = gt::parse_formula(expr_arg(formula_text));
      std::string at = world.empty() ? m.worlds[m.actual] : world;
      bool value = gt::eval(m, at, f);
      return emit({{"ok", true}, {"world", at}, {"value", value}}, value ? 0 : 1);
    }
    if (cmd_va->parsed()) {
      gt::Formula f = gt::parse_formula(expr_arg(formula_text));
      gt::SearchBudget sb{budget};
      gt::Verdict v = gt::bounded_valid(f, max_worlds, frame_from_name(frame_name), sb, jobs);
      if (v.valid)
        return emit({{"verdict", "valid"}, {"bound", v.bound}}, 0);
      return emit({{"verdict", "countermodel"},
                   {"model", json::parse(gt::model_to_json(*v.countermodel))}},
                  1);
    }
    if (cmd_cp->parsed()) {
      gt::ProofDocument doc = gt::proof_from_json(slurp(file));
      gt::ProofReport rep = gt::check_proof(doc);
      if (rep.accepted)
        return emit({{"accepted", true},
                     {"conclusion", gt::print_formula(doc.lines.back().formula)},
                     {"theorem", doc.hypotheses.empty()}},
                    0);
      return emit({{"accepted", false}, {"line", rep.failed_line}, {"reason", rep.reason}}, 1);
    }
    if (cmd_cd->parsed()) {
      gt::DerivationDocument doc = gt::derivation_from_json(slurp(file));
      gt::DerivationReport rep = gt::check_derivation(doc);
      if (rep.accepted)
        return emit({{"accepted", true},
                     {"final", gt::print_graph(rep.final_graph)},
                     {"graphical_theorem", rep.graphical_theorem}},
                    0);
      return emit({{"accepted", false}, {"step", rep.failed_step}, {"reason", rep.reason}}, 1);
    }
    if (cmd_ss->parsed()) {
      gt::SoundnessOptions opts;
      opts.max_graph_size = max_size;
      opts.max_worlds = max_worlds;
      opts.jobs = jobs;
      if (system_name == "get") opts.system = gt::GraphSystem::GET;
      else if (system_name == "get4") opts.system = gt::GraphSystem::GET4;
      else throw std::runtime_error("--system must be get or get4");
      if (cmd_ss->count("--frame")) opts.frame = frame_from_name(frame_name);
      if (!rule_name_arg.empty()) {
        auto r = gt::rule_from_name(rule_name_arg);
        if (!r) throw std::runtime_error("unknown rule: " + rule_name_arg);
        opts.only_rule = r;
      }
      gt::SoundnessReport rep = gt::rule_soundness_suite(opts);
      json witnesses = json::array();
      for (const gt::SoundnessViolation& v : rep.witnesses)
        witnesses.push_back({{"rule", gt::rule_name(v.rule)},
                             {"before", gt::print_graph(v.before)},
                             {"after", gt::print_graph(v.after)},
                             {"model", json::parse(gt::model_to_json(v.model))}});
      return emit({{"graphs", rep.graphs},
                   {"pairs", rep.pairs},
                   {"violations", rep.violating_pairs},
                   {"witnesses", witnesses}},
                  rep.violating_pairs == 0 ? 0 : 1);
    }
    if (cmd_co->parsed()) {
      json failures = json::array();
      int total = 0;
      for (const auto& [name, f] : gt::theorem_corpus()) {
        ++total;
        gt::Verdict v = gt::bounded_valid(f, max_worlds, gt::FrameClass::t());
        if (!v.valid) failures.push_back(name);
      }
      return emit({{"total", total},
                   {"valid", total - static_cast<int>(failures.size())},
                   {"failures", failures}},
                  failures.empty() ? 0 : 1);
    }
  } catch (const gt::ParseError& e) {
    return emit({{"ok", false}, {"error", e.what()}, {"offset", e.offset}}, 2);
  } catch (const std::exception& e) {
    return emit({{"ok", false}, {"error", e.what()}}, 2);
  }
  return 2;
}
