#pragma once
// Translations between formulas and existential graphs.
//
// to_graph (formula -> graph):
//   atom     -> atom                 T        -> empty graph
//   X -> Y   -> (X' ... (Y'))        X & Y    -> X' Y'   (flattened)
//   -X       -> {X'}                 ~X       -> (X')
//
// to_formula (graph -> formula): a region folds left with & (empty region is
// T, single element translates directly); {G} -> -G''; (contents) by
// precedence:
//   (i)   empty contents            -> ~T
//   (ii)  exactly one element       -> ~ of that element's translation
//   (iii) last element a continuous cut and two or more elements
//                                   -> fold of the preceding -> inner''
//   (iv)  otherwise                 -> ~ of the contents' fold
//
// Rule (iii) subsumes the disjunctive shape ((X)(Y)), which reads as its
// definitional expansion ~X -> Y.

#include "gt/formula.hpp"
#include "gt/graph.hpp"

namespace gt {

Graph to_graph(const Formula& f);
Formula to_formula(const Graph& g);
Formula element_formula(const Element& e);

struct RoundTripReport {
  bool syntactic_identity = false;
  bool ac_identity = false;       // graphs only; mirrors syntactic for formulas
  bool semantic_equiv = false;    // over all reflexive models within the bound
};

RoundTripReport roundtrip_formula(const Formula& f, int max_worlds = 3);
RoundTripReport roundtrip_graph(const Graph& g, int max_worlds = 3);

// The class of formulas on which to_formula(to_graph(f)) == f exactly:
//   - no operand of -> or & is T,
//   - & always associates to the left,
//   - no ~ is applied to a conjunction whose rightmost conjunct maps to a
//     continuous cut (an implication or a ~), since such contents re-read as
//     a conditional under rule (iii).
bool t1_canonical(const Formula& f);

// Bounded semantic equivalence over every reflexive model with at most
// max_worlds worlds on the union of both formulas' atoms.
bool semantically_equivalent(const Formula& a, const Formula& b, int max_worlds = 3);

}  // namespace gt
