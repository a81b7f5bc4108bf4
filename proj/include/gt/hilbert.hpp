#pragma once
// Hilbert-style proof machinery for GT and GT4.
//
// Axiom schemas (X, Y, Z range over formulas):
//   Ax1  T
//   Ax2  X -> (Y -> X)
//   Ax3  (X -> (Y -> Z)) -> ((X -> Y) -> (X -> Z))
//   Ax4  ((X -> Y) -> X) -> X
//   Ax5  -T -> Z
//   Ax6  (X -> -T) -> -X
//   Ax7  (-(X -> Y) -> -T) -> ((-X -> -T) -> (-Y -> -T))
//   GT4  +X -> (-(+X & Y) -> -Y)        (system GT4 only, stored with the
//                                        + expanded to ~-)
// plus the closure rule: whenever A is an axiom, -A -> -T is an axiom.  The
// closure is recursive, so any number of peels of the -_ -> -T shell may be
// stripped before the base schemas are tried.

#include "gt/formula.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gt {

enum class System : std::uint8_t { GT, GT4 };

enum class Schema : std::uint8_t { Ax1, Ax2, Ax3, Ax4, Ax5, Ax6, Ax7, Gt4 };

const char* schema_name(Schema s);
int schema_arity(Schema s);

// The schema with metavariables taken from vars (X=vars[0], Y=vars[1],
// Z=vars[2]); vars beyond the schema's arity are ignored.
Formula schema_instance(Schema s, const std::vector<Formula>& vars);

struct AxiomMatch {
  Schema schema;
  int peels = 0;  // closure shells stripped before the base schema matched
};

std::optional<AxiomMatch> match_axiom(const Formula& f, System system);

struct Justification {
  enum class Kind : std::uint8_t { Axiom, Hypothesis, ModusPonens } kind = Kind::Axiom;
  int major = 0;  // 1-indexed line holding minor -> this
  int minor = 0;
};

struct ProofLine {
  Formula formula;
  Justification by;
};

struct ProofDocument {
  System system = System::GT;
  std::vector<Formula> hypotheses;
  std::vector<ProofLine> lines;
};

struct ProofReport {
  bool accepted = false;
  int failed_line = 0;  // 1-indexed; 0 when accepted
  std::string reason;
};

ProofReport check_proof(const ProofDocument& doc);

// Standard implicational-calculus hypothesis discharge: rebuilds the proof
// so that the conclusion becomes discharge -> conclusion and discharge is no
// longer a hypothesis.  Throws std::invalid_argument when discharge is not a
// hypothesis or the input proof does not check.
ProofDocument deduction_transform(const ProofDocument& doc, const Formula& discharge);

// Named theorem fixtures instantiated with atoms p, q, r; each is valid on
// every reflexive model.
std::vector<std::pair<std::string, Formula>> theorem_corpus();

}  // namespace gt
