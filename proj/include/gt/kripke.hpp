#pragma once
// Finite possible-worlds models and bounded validity search.
//
// Models are reflexive by construction.  Valuation rules: T is true
// everywhere, -> is material per world, -X is true at w when some successor
// of w falsifies X, ~X is true when X is false at the same world, & is
// per-world conjunction.
//
// Enumeration order (shared by bounded_valid, correspondence_check and the
// rewrite soundness suite, and the contract for "first countermodel"):
// world counts ascending; relations as n*n-bit masks (bit i*n+j, diagonal
// forced on) ascending; valuations as atom-by-world bit masks (bit
// atom_index*n + world, atoms sorted by name) ascending; worlds ascending.
// Partitioned parallel runs must report the verdict of the least index.

#include "gt/formula.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gt {

struct ModelError : std::runtime_error {
  enum class Kind { MissingReflexivity, UnknownWorld, DuplicateWorld, Malformed };
  Kind kind;
  std::string detail;
  ModelError(Kind k, const std::string& what, std::string d)
      : std::runtime_error(what), kind(k), detail(std::move(d)) {}
};

struct KripkeModel {
  std::vector<std::string> worlds;
  int actual = 0;                                   // index into worlds
  std::vector<std::pair<int, int>> rel;             // sorted (from, to) index pairs
  std::map<std::string, std::vector<bool>> valuation;  // atom -> truth per world

  int world_index(std::string_view name) const;     // -1 when unknown
  bool related(int a, int b) const;
  bool atom_true(const std::string& atom, int w) const;  // absent atoms are false
};

// Validates and assembles a model: worlds unique, references known, every
// reflexive pair listed explicitly.
KripkeModel make_model(std::vector<std::string> worlds, const std::string& actual,
                       const std::vector<std::pair<std::string, std::string>>& rel,
                       const std::map<std::string, std::map<std::string, bool>>& valuation);

bool eval(const KripkeModel& m, int world, const Formula& f);
bool eval(const KripkeModel& m, const std::string& world, const Formula& f);

// Reflexivity is always on; the flags add further frame constraints.
struct FrameClass {
  bool transitive = false;
  bool symmetric = false;
  bool convergent = false;

  static FrameClass t() { return {}; }
  static FrameClass s4() { return {true, false, false}; }
  static FrameClass s42() { return {true, false, true}; }
  static FrameClass s5() { return {true, true, false}; }
};

bool satisfies_frame(const KripkeModel& m, const FrameClass& fc);

struct SearchBudget {
  std::uint64_t max_models = 200'000'000;  // (relation, valuation) pairs
};

struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Verdict {
  bool valid = false;
  int bound = 0;                            // max worlds searched (Valid only)
  std::optional<KripkeModel> countermodel;  // falsifies the query at its actual world
};

// Enumerates every model over exactly the atoms of f with at most max_worlds
// worlds satisfying the frame flags.  A countermodel is conclusive; Valid is
// relative to the bound.
Verdict bounded_valid(const Formula& f, int max_worlds, const FrameClass& frame,
                      const SearchBudget& budget = {}, int jobs = 1);

// ── Frame-level machinery ──────────────────────────────────────────────────
// A skeleton is a (world count, relation) pair; valuations over it are bit
// indexed: atom a is true at world w under valuation v iff bit a*n+w of v
// is set.

struct FrameSkeleton {
  int n = 1;
  std::uint32_t rel_mask = 1;              // bit i*n + j
  std::array<std::uint32_t, 8> succ{};     // successor mask per world

  bool related(int i, int j) const { return (rel_mask >> (i * n + j)) & 1u; }
  bool transitive() const;
  std::vector<std::pair<int, int>> rel_pairs() const;
};

// All reflexive skeletons with at most max_worlds worlds satisfying the
// frame flags, in enumeration order.
std::vector<FrameSkeleton> enumerate_frames(int max_worlds, const FrameClass& frame);

// Truth of f at every world under every valuation of `atoms` over the
// skeleton.  Result: per world w, words [w*words_per_world, ...): bit v of
// the block is f's value at w under valuation v.
struct BulkTruth {
  int n = 0;
  int num_vals = 0;
  int words_per_world = 0;
  std::vector<std::uint64_t> bits;

  bool at(int world, int val) const {
    return (bits[world * words_per_world + (val >> 6)] >> (val & 63)) & 1u;
  }
};

BulkTruth eval_all_valuations(const FrameSkeleton& sk,
                              const std::vector<std::string>& atoms, const Formula& f);

// Materializes the model for (skeleton, valuation index, actual world);
// worlds are named w0..w{n-1}.
KripkeModel skeleton_model(const FrameSkeleton& sk, const std::vector<std::string>& atoms,
                           int val, int actual);

// ── Frame correspondence ───────────────────────────────────────────────────

struct FrameWitness {
  int n = 0;
  std::vector<std::pair<int, int>> rel;
  bool schema_valid = false;
  bool has_property = false;
  std::optional<KripkeModel> falsifier;  // present when the schema fails
};

struct CorrespondenceReport {
  bool equivalence_holds = true;
  long frames_checked = 0;
  std::vector<FrameWitness> failures;  // frames where validity and property disagree
};

// Checks, over all reflexive frames with at most max_worlds worlds, that the
// schema holds at every world under every valuation of its atoms exactly on
// the transitive frames.
CorrespondenceReport correspondence_check(const Formula& schema, int max_worlds);

}  // namespace gt
