#pragma once
// Hand-authored derivation and proof fixtures shared by the unit tests and
// the acceptance suite.

#include "gt/hilbert.hpp"
#include "gt/rewrite.hpp"

#include <string>
#include <vector>

namespace fixtures {

// ── Graph derivations ──────────────────────────────────────────────────────

// From the empty sheet to ({}).
gt::DerivationDocument strong_lambda();

// From the empty sheet to (p (p)) by the scroll construction.
gt::DerivationDocument scroll_identity_p();

// From {} to an arbitrary atom: the broken empty cut yields everything.
gt::DerivationDocument broken_cut_to(const std::string& atom);

// Derivations of the graph translations of axiom instances.  The Ax7
// fixture uses the diagonal instance (both metavariables p): the staircase
// for distinct variables would need material moved across a broken cut,
// which no GET rule licenses.
struct AxiomGraphFixture {
  std::string name;
  gt::Formula instance;            // the axiom instance the final graph translates
  gt::DerivationDocument derivation;
};
std::vector<AxiomGraphFixture> axiom_graph_derivations();

// ── Hilbert proofs ─────────────────────────────────────────────────────────

// Accepted hypothesis-free proofs.
std::vector<std::pair<std::string, gt::ProofDocument>> proof_fixtures();

// Proofs under hypotheses together with the discharge order and expected
// final conclusion.
struct DeductionFixture {
  std::string name;
  gt::ProofDocument doc;
  std::vector<gt::Formula> discharges;  // applied in order
  gt::Formula expected_conclusion;
};
std::vector<DeductionFixture> deduction_fixtures();

}  // namespace fixtures
