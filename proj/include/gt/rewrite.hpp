#pragma once
// Transformation rules for existential graphs and derivation checking.
//
// Side conditions are evaluated against the full context from the sheet;
// parity counts both cut kinds.  Rules:
//
//   R1                    insert the strong double cut ({}) into any region
//   R2_erase_even         delete elements from an even region
//   R2_write_odd          insert arbitrary elements into an odd region
//   R3_iterate            copy an element within its region, or across
//                         exactly one continuous cut into a sibling cut;
//                         allowed when the region's context is all
//                         continuous, or the element is strong
//   R3_deiterate          exact inverse of R3_iterate
//   R4_break_even         continuous cut in an even region becomes broken
//   R4_complete_odd       broken cut in an odd region becomes continuous
//   R6_remove_double_even continuous double cut in an even region unwraps
//   R6_add_double_odd     elements of an odd region get a continuous double
//                         cut written around them
//   SID_iterate           copy a strong element across exactly one broken
//                         cut (GET4 only); SID_deiterate is its inverse
//
// Concatenation, commutativity and associativity are implicit: candidate
// results are compared with ac_equal.
//
// When a step carries a hint, the application's action region must match it:
// the receiving or erased-from region for R1/R2, the landing region for
// R3/SID (the target cut's interior for across-cut moves), the transformed
// cut's interior for R4 and R6_remove, and the new double cut's interior for
// R6_add.

#include "gt/graph.hpp"
#include "gt/kripke.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gt {

enum class RuleId : std::uint8_t {
  R1,
  R2EraseEven,
  R2WriteOdd,
  R3Iterate,
  R3Deiterate,
  R4BreakEven,
  R4CompleteOdd,
  R6RemoveDoubleEven,
  R6AddDoubleOdd,
  SidIterate,
  SidDeiterate,
};

enum class GraphSystem : std::uint8_t { GET, GET4 };

const char* rule_name(RuleId r);
std::optional<RuleId> rule_from_name(std::string_view name);
bool rule_in_system(RuleId r, GraphSystem s);
const std::vector<RuleId>& system_rules(GraphSystem s);

struct StepVerdict {
  bool ok = false;
  std::string reason;
};

StepVerdict verify_step(const Graph& before, const Graph& after, RuleId rule,
                        const std::optional<Position>& hint, GraphSystem system);

struct DerivationStep {
  RuleId rule = RuleId::R1;
  Graph result;
  std::optional<Position> hint;
};

struct DerivationDocument {
  GraphSystem system = GraphSystem::GET;
  Graph start;  // empty graph for theoremhood
  std::vector<DerivationStep> steps;
};

struct DerivationReport {
  bool accepted = false;
  int failed_step = 0;  // 1-indexed; 0 when accepted
  std::string reason;
  Graph final_graph;
  bool graphical_theorem = false;  // accepted and start was the empty graph
};

DerivationReport check_derivation(const DerivationDocument& doc);

// Builds the scroll theorem for an inner derivation X >> Y: an accepted
// derivation of (X (Y)) from the empty graph (R1; R4_complete_odd; one
// R2_write_odd inserting X; one R3_iterate per element of X; then the inner
// steps replayed inside the inner cut).  Throws std::invalid_argument when
// the inner derivation is rejected.
DerivationDocument scroll_theorem(const DerivationDocument& inner);

// ── Semantic soundness sweep ───────────────────────────────────────────────

struct SoundnessOptions {
  int max_graph_size = 3;  // node-count bound on enumerated source graphs
  std::vector<std::string> atoms = {"p", "q"};
  int max_worlds = 3;
  GraphSystem system = GraphSystem::GET;
  std::optional<FrameClass> frame;   // defaults to t for GET, s4 for GET4
  std::optional<RuleId> only_rule;   // restrict the successor rules
  int jobs = 1;
  std::size_t max_witnesses = 8;     // violations materialized in the report
};

struct SoundnessViolation {
  Graph before;
  Graph after;
  RuleId rule = RuleId::R1;
  KripkeModel model;  // translation of before true, of after false, at actual
};

struct SoundnessReport {
  long long graphs = 0;
  long long pairs = 0;
  long long violating_pairs = 0;
  std::vector<SoundnessViolation> witnesses;
};

// Enumerates canonical graphs up to the node-count bound, all single-step
// successors under the ruleset (write steps insert single elements of at
// most two nodes; erase and wrap steps act on single elements), and checks
// truth preservation of the graph translations on every model within the
// bound.
SoundnessReport rule_soundness_suite(const SoundnessOptions& opts);

// Enumeration helpers, also used by the tests.
std::vector<Graph> enumerate_graphs(int max_nodes, const std::vector<std::string>& atoms);
std::vector<Element> small_element_pool(int max_nodes, const std::vector<std::string>& atoms);
std::vector<Graph> rule_successors(const Graph& g, RuleId rule,
                                   const std::vector<Element>& insert_pool);

}  // namespace gt
