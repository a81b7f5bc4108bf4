#pragma once
// Existential graphs.
//
// A graph is an ordered juxtaposition sequence of elements; the empty
// sequence is the assertion sheet (verum).  Elements are atoms, continuous
// cuts ( ) and broken cuts { }.  Stored order is preserved, but graph
// equality is associative-commutative: ac_equal compares canonical forms in
// which every region is sorted by a total structural order.

#include "gt/formula.hpp"  // ParseError

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gt {

enum class CutKind : std::uint8_t { Continuous, Broken };

struct Element;
using Graph = std::vector<Element>;

struct Element {
  enum class Kind : std::uint8_t { Atom, Ccut, Bcut } kind = Kind::Atom;
  std::string name;  // Atom only
  Graph contents;    // cuts only

  bool operator==(const Element&) const = default;
  bool is_cut() const { return kind != Kind::Atom; }
};

Element make_gatom(std::string name);
Element make_ccut(Graph contents);
Element make_bcut(Graph contents);

// Grammar: atoms as in the formula language, ( ) continuous, { } broken,
// whitespace juxtaposition; empty text is the sheet.
Graph parse_graph(std::string_view text);
std::string print_graph(const Graph& g);

// Total structural order: atoms < continuous cuts < broken cuts, then by
// name / recursively by contents.  Returns <0, 0 or >0.
int compare_elements(const Element& a, const Element& b);

// Every region sorted by compare_elements, recursively.  Idempotent.
Graph canonical_form(const Graph& g);
bool ac_equal(const Graph& a, const Graph& b);
bool ac_equal(const Element& a, const Element& b);

// Depth measure C: atoms and the empty graph are 0, cuts add 1 over their
// contents, a juxtaposition of two or more elements adds 1 over the max.
int complexity_c(const Graph& g);
int complexity_c(const Element& e);

// Total number of element nodes in the tree.
int node_count(const Graph& g);
int node_count(const Element& e);

// A strong element is exactly ({G}): a continuous cut holding one broken cut.
bool is_strong(const Element& e);

// ── Regions ────────────────────────────────────────────────────────────────
// A Position addresses a region: each path entry selects an element of the
// current region, which must be a cut; its contents are the next region.
// The empty path is the sheet.

struct Position {
  std::vector<int> path;
  bool operator==(const Position&) const = default;
};

struct PositionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ContextReport {
  std::vector<CutKind> kinds;  // outermost to innermost
  bool odd_parity = false;     // kinds.size() mod 2
  bool ncc = true;             // continuous cuts only
  bool one_cq = false;         // at least one broken cut
};

ContextReport region_context(const Graph& g, const Position& pos);
const Graph& region_at(const Graph& g, const Position& pos);
Graph with_region(const Graph& g, const Position& pos, Graph contents);

// All region addresses of g in preorder (sheet first, indices ascending).
std::vector<Position> all_regions(const Graph& g);

}  // namespace gt
