#include "fixtures.hpp"

#include "gt/translate.hpp"

#include <stdexcept>

namespace fixtures {

using namespace gt;

namespace {

// Step-by-step derivation builder over graph literals.
struct Deriv {
  DerivationDocument doc;

  Deriv(GraphSystem sys, const std::string& start) {
    doc.system = sys;
    doc.start = parse_graph(start);
  }

  Deriv& step(RuleId rule, const std::string& result) {
    doc.steps.push_back({rule, parse_graph(result), std::nullopt});
    return *this;
  }
};

// Replays a finished derivation's steps with `prefix` sitting untouched at
// the sheet.  The host derivation must currently stand at prefix ++ start.
void replay_beside(DerivationDocument& host, const std::string& prefix,
                   const DerivationDocument& inner) {
  Graph pre = parse_graph(prefix);
  for (const DerivationStep& s : inner.steps) {
    Graph g = pre;
    g.insert(g.end(), s.result.begin(), s.result.end());
    host.steps.push_back({s.rule, std::move(g), std::nullopt});
  }
}

Justification ax() { return {Justification::Kind::Axiom, 0, 0}; }
Justification hyp() { return {Justification::Kind::Hypothesis, 0, 0}; }
Justification mp(int major, int minor) {
  return {Justification::Kind::ModusPonens, major, minor};
}

}  // namespace

DerivationDocument strong_lambda() {
  return Deriv(GraphSystem::GET, "").step(RuleId::R1, "({})").doc;
}

DerivationDocument scroll_identity_p() {
  return Deriv(GraphSystem::GET, "")
      .step(RuleId::R1, "({})")
      .step(RuleId::R4CompleteOdd, "(())")
      .step(RuleId::R2WriteOdd, "(p ())")
      .step(RuleId::R3Iterate, "(p (p))")
      .doc;
}

DerivationDocument broken_cut_to(const std::string& a) {
  // {}  ==>  {} ({})  ==>  {} ()  ==>  {} ((a))  ==>  {} a  ==>  a
  return Deriv(GraphSystem::GET, "{}")
      .step(RuleId::R1, "{} ({})")
      .step(RuleId::R3Deiterate, "{} ()")
      .step(RuleId::R2WriteOdd, "{} ((" + a + "))")
      .step(RuleId::R6RemoveDoubleEven, "{} " + a)
      .step(RuleId::R2EraseEven, a)
      .doc;
}

std::vector<AxiomGraphFixture> axiom_graph_derivations() {
  std::vector<AxiomGraphFixture> out;

  // Ax1: the empty sheet is already the translation of T.
  {
    DerivationDocument doc;
    doc.system = GraphSystem::GET;
    out.push_back({"Ax1", parse_formula("T"), std::move(doc)});
  }

  // Ax2 with X=p, Y=q: scroll over  p >> (q (p)).
  {
    DerivationDocument inner = Deriv(GraphSystem::GET, "p")
                                   .step(RuleId::R1, "p ({})")
                                   .step(RuleId::R4CompleteOdd, "p (())")
                                   .step(RuleId::R2WriteOdd, "p (q ())")
                                   .step(RuleId::R3Iterate, "p (p q ())")
                                   .step(RuleId::R3Iterate, "p (p q (p))")
                                   .step(RuleId::R3Deiterate, "p (q (p))")
                                   .step(RuleId::R2EraseEven, "(q (p))")
                                   .doc;
    out.push_back({"Ax2", parse_formula("p -> q -> p"), scroll_theorem(inner)});
  }

  // Ax3 with X=p, Y=q, Z=r.  A = (p ((q (r)))), C = (p (q)).
  {
    const std::string A = "(p ((q (r))))";
    const std::string C = "(p (q))";
    const std::string AC = A + " " + C;
    // Inner-most derivation: from A C, ferry the hypotheses into the scroll
    // under construction and cut them loose again, ending at (p (r)).
    DerivationDocument inner2 =
        Deriv(GraphSystem::GET, AC)
            .step(RuleId::R1, AC + " ({})")
            .step(RuleId::R4CompleteOdd, AC + " (())")
            .step(RuleId::R2WriteOdd, AC + " (p ())")
            .step(RuleId::R3Iterate, AC + " (p (p))")
            .step(RuleId::R3Iterate, AC + " (" + C + " p (p))")
            .step(RuleId::R3Iterate, AC + " (" + C + " p (" + C + " p))")
            .step(RuleId::R3Deiterate, AC + " (p (" + C + " p))")
            .step(RuleId::R3Deiterate, AC + " (p (((q)) p))")
            .step(RuleId::R6RemoveDoubleEven, AC + " (p (q p))")
            .step(RuleId::R3Iterate, AC + " (" + A + " p (q p))")
            .step(RuleId::R3Iterate, AC + " (" + A + " p (" + A + " q p))")
            .step(RuleId::R3Deiterate, AC + " (p (" + A + " q p))")
            .step(RuleId::R3Deiterate, AC + " (p ((((q (r)))) q p))")
            .step(RuleId::R6RemoveDoubleEven, AC + " (p ((q (r)) q p))")
            .step(RuleId::R3Deiterate, AC + " (p (((r)) q p))")
            .step(RuleId::R6RemoveDoubleEven, AC + " (p (r q p))")
            .step(RuleId::R2EraseEven, AC + " (p (r))")
            .step(RuleId::R2EraseEven, "(p (r))")
            .doc;
    // H: the theorem (A C ((p (r)))).
    DerivationDocument H = scroll_theorem(inner2);
    // Inner derivation: A >> ((p (q)) ((p (r)))).
    DerivationDocument inner;
    inner.system = GraphSystem::GET;
    inner.start = parse_graph(A);
    replay_beside(inner, A, H);
    inner.steps.push_back(
        {RuleId::R3Deiterate, parse_graph(A + " (" + C + " ((p (r))))"), std::nullopt});
    inner.steps.push_back(
        {RuleId::R2EraseEven, parse_graph("(" + C + " ((p (r))))"), std::nullopt});
    out.push_back({"Ax3",
                   parse_formula("(p -> q -> r) -> (p -> q) -> p -> r"),
                   scroll_theorem(inner)});
  }

  // Ax4 with X=p, Y=q: scroll over  ((p (q)) (p)) >> p.
  {
    DerivationDocument inner = Deriv(GraphSystem::GET, "((p (q)) (p))")
                                   .step(RuleId::R2EraseEven, "((p) (p))")
                                   .step(RuleId::R3Deiterate, "((p))")
                                   .step(RuleId::R6RemoveDoubleEven, "p")
                                   .doc;
    out.push_back({"Ax4", parse_formula("((p -> q) -> p) -> p"), scroll_theorem(inner)});
  }

  // Ax5 with Z=r: scroll over  {} >> r.
  out.push_back({"Ax5", parse_formula("-T -> r"), scroll_theorem(broken_cut_to("r"))});

  // Ax6 with X=p: scroll over  (p ({})) >> (p), then break the inner cut.
  {
    DerivationDocument inner = Deriv(GraphSystem::GET, "(p ({}))")
                                   .step(RuleId::R1, "(p ({})) ({})")
                                   .step(RuleId::R3Deiterate, "(p) ({})")
                                   .step(RuleId::R2EraseEven, "(p)")
                                   .doc;
    DerivationDocument doc = scroll_theorem(inner);
    doc.steps.push_back(
        {RuleId::R4BreakEven, parse_graph("((p ({})) ({p}))"), std::nullopt});
    out.push_back({"Ax6", parse_formula("(p -> -T) -> -p"), std::move(doc)});
  }

  // Ax7, diagonal instance X=Y=p.  The consequent is an identity scroll over
  // G2 = ({p} ({})), so no broken cut ever needs to be crossed.
  {
    const std::string G1 = "({(p (p))} ({}))";
    const std::string G2 = "({p} ({}))";
    DerivationDocument inner;
    inner.system = GraphSystem::GET;
    inner.start = parse_graph(G1);
    DerivationDocument identity_scroll;  // the theorem (G2 (G2))
    {
      DerivationDocument empty_inner;
      empty_inner.system = GraphSystem::GET;
      empty_inner.start = parse_graph(G2);
      identity_scroll = scroll_theorem(empty_inner);
    }
    replay_beside(inner, G1, identity_scroll);
    inner.steps.push_back(
        {RuleId::R2EraseEven, parse_graph("(" + G2 + " (" + G2 + "))"), std::nullopt});
    out.push_back({"Ax7",
                   parse_formula("(-(p -> p) -> -T) -> (-p -> -T) -> -p -> -T"),
                   scroll_theorem(inner)});
  }

  return out;
}

std::vector<std::pair<std::string, ProofDocument>> proof_fixtures() {
  std::vector<std::pair<std::string, ProofDocument>> out;
  {
    // Five-line identity derivation of p -> p.
    Formula p = parse_formula("p");
    Formula pp = make_impl(p, p);
    Formula p_pp = make_impl(p, pp);
    Formula l1 = make_impl(p, make_impl(pp, p));
    ProofDocument doc;
    doc.lines.push_back({l1, ax()});
    doc.lines.push_back({make_impl(l1, make_impl(p_pp, pp)), ax()});
    doc.lines.push_back({make_impl(p_pp, pp), mp(2, 1)});
    doc.lines.push_back({p_pp, ax()});
    doc.lines.push_back({pp, mp(3, 4)});
    out.emplace_back("identity", std::move(doc));
  }
  {
    ProofDocument doc;
    doc.lines.push_back({parse_formula("-T -> -T"), ax()});
    out.emplace_back("closure_of_verum", std::move(doc));
  }
  {
    // Mp against an Ax5 instance: -T -> (q -> -T), then Ax2 chains.
    ProofDocument doc;
    doc.lines.push_back({parse_formula("-T -> q"), ax()});
    doc.lines.push_back({parse_formula("(-T -> q) -> (p -> -T -> q)"), ax()});
    doc.lines.push_back({parse_formula("p -> -T -> q"), mp(2, 1)});
    out.emplace_back("weakened_ax5", std::move(doc));
  }
  {
    // GT4: weaken the transitivity axiom by Ax2 and modus ponens.
    ProofDocument doc;
    doc.system = System::GT4;
    Formula t4 = parse_formula("+p -> (-(+p & q) -> -q)");
    doc.lines.push_back({t4, ax()});
    doc.lines.push_back({make_impl(t4, make_impl(parse_formula("r"), t4)), ax()});
    doc.lines.push_back({make_impl(parse_formula("r"), t4), mp(2, 1)});
    out.emplace_back("gt4_weakened_axiom", std::move(doc));
  }
  return out;
}

std::vector<DeductionFixture> deduction_fixtures() {
  std::vector<DeductionFixture> out;
  {
    ProofDocument doc;
    doc.hypotheses.push_back(parse_formula("p"));
    doc.lines.push_back({parse_formula("p"), hyp()});
    out.push_back({"identity_discharge", std::move(doc),
                   {parse_formula("p")}, parse_formula("p -> p")});
  }
  {
    // p, p -> -T |- -T; both discharges give p -> (p -> -T) -> -T, the
    // implicational form of double negation introduction.
    ProofDocument doc;
    doc.hypotheses.push_back(parse_formula("p"));
    doc.hypotheses.push_back(parse_formula("p -> -T"));
    doc.lines.push_back({parse_formula("p"), hyp()});
    doc.lines.push_back({parse_formula("p -> -T"), hyp()});
    doc.lines.push_back({parse_formula("-T"), mp(2, 1)});
    out.push_back({"double_negation_intro", std::move(doc),
                   {parse_formula("p -> -T"), parse_formula("p")},
                   parse_formula("p -> (p -> -T) -> -T")});
  }
  {
    ProofDocument doc;
    doc.hypotheses.push_back(parse_formula("p -> q"));
    doc.hypotheses.push_back(parse_formula("q -> r"));
    doc.hypotheses.push_back(parse_formula("p"));
    doc.lines.push_back({parse_formula("p -> q"), hyp()});
    doc.lines.push_back({parse_formula("q -> r"), hyp()});
    doc.lines.push_back({parse_formula("p"), hyp()});
    doc.lines.push_back({parse_formula("q"), mp(1, 3)});
    doc.lines.push_back({parse_formula("r"), mp(2, 4)});
    out.push_back({"hypothetical_syllogism", std::move(doc),
                   {parse_formula("p")}, parse_formula("p -> r")});
  }
  return out;
}

}  // namespace fixtures
