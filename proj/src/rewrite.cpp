#include "gt/rewrite.hpp"

#include "gt/translate.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

namespace gt {

const char* rule_name(RuleId r) {
  switch (r) {
    case RuleId::R1: return "R1";
    case RuleId::R2EraseEven: return "R2_erase_even";
    case RuleId::R2WriteOdd: return "R2_write_odd";
    case RuleId::R3Iterate: return "R3_iterate";
    case RuleId::R3Deiterate: return "R3_deiterate";
    case RuleId::R4BreakEven: return "R4_break_even";
    case RuleId::R4CompleteOdd: return "R4_complete_odd";
    case RuleId::R6RemoveDoubleEven: return "R6_remove_double_even";
    case RuleId::R6AddDoubleOdd: return "R6_add_double_odd";
    case RuleId::SidIterate: return "SID_iterate";
    case RuleId::SidDeiterate: return "SID_deiterate";
  }
  return "?";
}

std::optional<RuleId> rule_from_name(std::string_view name) {
  static const RuleId all[] = {
      RuleId::R1, RuleId::R2EraseEven, RuleId::R2WriteOdd, RuleId::R3Iterate,
      RuleId::R3Deiterate, RuleId::R4BreakEven, RuleId::R4CompleteOdd,
      RuleId::R6RemoveDoubleEven, RuleId::R6AddDoubleOdd, RuleId::SidIterate,
      RuleId::SidDeiterate};
  for (RuleId r : all)
    if (name == rule_name(r)) return r;
  return std::nullopt;
}

bool rule_in_system(RuleId r, GraphSystem s) {
  if (r == RuleId::SidIterate || r == RuleId::SidDeiterate) return s == GraphSystem::GET4;
  return true;
}

const std::vector<RuleId>& system_rules(GraphSystem s) {
  static const std::vector<RuleId> get = {
      RuleId::R1, RuleId::R2EraseEven, RuleId::R2WriteOdd, RuleId::R3Iterate,
      RuleId::R3Deiterate, RuleId::R4BreakEven, RuleId::R4CompleteOdd,
      RuleId::R6RemoveDoubleEven, RuleId::R6AddDoubleOdd};
  static const std::vector<RuleId> get4 = [] {
    std::vector<RuleId> v = get;
    v.push_back(RuleId::SidIterate);
    v.push_back(RuleId::SidDeiterate);
    return v;
  }();
  return s == GraphSystem::GET ? get : get4;
}

namespace {

constexpr std::size_t kMaxSubsetRegion = 16;

Element strong_double_cut() { return make_ccut({make_bcut({})}); }

struct RegionInfo {
  Position pos;
  ContextReport ctx;
};

void regions_rec(const Graph& g, Position& cur, std::vector<CutKind>& kinds,
                 std::vector<RegionInfo>& out) {
  RegionInfo info;
  info.pos = cur;
  info.ctx.kinds = kinds;
  info.ctx.odd_parity = (kinds.size() % 2) == 1;
  info.ctx.one_cq = std::any_of(kinds.begin(), kinds.end(),
                                [](CutKind k) { return k == CutKind::Broken; });
  info.ctx.ncc = !info.ctx.one_cq;
  out.push_back(std::move(info));
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!g[i].is_cut()) continue;
    cur.path.push_back(static_cast<int>(i));
    kinds.push_back(g[i].kind == Element::Kind::Ccut ? CutKind::Continuous : CutKind::Broken);
    regions_rec(g[i].contents, cur, kinds, out);
    kinds.pop_back();
    cur.path.pop_back();
  }
}

std::vector<RegionInfo> regions_with_context(const Graph& g) {
  std::vector<RegionInfo> out;
  Position cur;
  std::vector<CutKind> kinds;
  regions_rec(g, cur, kinds, out);
  return out;
}

Graph remove_indices(const Graph& region, std::uint32_t index_mask) {
  Graph out;
  for (std::size_t i = 0; i < region.size(); ++i)
    if (!((index_mask >> i) & 1u)) out.push_back(region[i]);
  return out;
}

// One candidate application: the produced graph plus the action region used
// for hint matching.
struct Candidate {
  Graph result;
  std::vector<int> action;
};

using Sink = const std::function<bool(Candidate&&)>&;  // returns true to stop

// R1: append ({}) to any region.
bool gen_r1(const Graph& g, Sink sink) {
  for (const RegionInfo& ri : regions_with_context(g)) {
    Graph region = region_at(g, ri.pos);
    region.push_back(strong_double_cut());
    if (sink({with_region(g, ri.pos, std::move(region)), ri.pos.path})) return true;
  }
  return false;
}

// Erase any nonempty subset of an even region of `g`; `require_odd` flips the
// parity test (used for the insertion rules checked on the result graph).
bool gen_erase(const Graph& g, bool erase_even, Sink sink) {
  for (const RegionInfo& ri : regions_with_context(g)) {
    if (ri.ctx.odd_parity == erase_even) continue;
    const Graph& region = region_at(g, ri.pos);
    if (region.empty()) continue;
    if (region.size() > kMaxSubsetRegion)
      throw std::runtime_error("region too large for erase/insert search");
    std::uint32_t limit = 1u << region.size();
    for (std::uint32_t mask = 1; mask < limit; ++mask) {
      if (sink({with_region(g, ri.pos, remove_indices(region, mask)), ri.pos.path}))
        return true;
    }
  }
  return false;
}

bool iteration_allowed(const ContextReport& ctx, const Element& e) {
  return ctx.ncc || is_strong(e);
}

bool gen_iterate(const Graph& g, Sink sink) {
  for (const RegionInfo& ri : regions_with_context(g)) {
    const Graph& region = region_at(g, ri.pos);
    for (std::size_t i = 0; i < region.size(); ++i) {
      if (!iteration_allowed(ri.ctx, region[i])) continue;
      // In-region copy.
      {
        Graph r2 = region;
        r2.push_back(region[i]);
        if (sink({with_region(g, ri.pos, std::move(r2)), ri.pos.path})) return true;
      }
      // Across exactly one continuous cut into a sibling cut.
      for (std::size_t j = 0; j < region.size(); ++j) {
        if (j == i || region[j].kind != Element::Kind::Ccut) continue;
        Graph r2 = region;
        r2[j].contents.push_back(region[i]);
        std::vector<int> action = ri.pos.path;
        action.push_back(static_cast<int>(j));
        if (sink({with_region(g, ri.pos, std::move(r2)), std::move(action)})) return true;
      }
    }
  }
  return false;
}

bool gen_deiterate(const Graph& g, Sink sink) {
  for (const RegionInfo& ri : regions_with_context(g)) {
    const Graph& region = region_at(g, ri.pos);
    for (std::size_t i = 0; i < region.size(); ++i) {
      if (!iteration_allowed(ri.ctx, region[i])) continue;
      // Remove an in-region duplicate of element i.
      for (std::size_t j = 0; j < region.size(); ++j) {
        if (j == i || !ac_equal(region[i], region[j])) continue;
        if (sink({with_region(g, ri.pos, remove_indices(region, 1u << j)), ri.pos.path}))
          return true;
      }
      // Remove a copy one continuous cut deeper.
      for (std::size_t j = 0; j < region.size(); ++j) {
        if (j == i || region[j].kind != Element::Kind::Ccut) continue;
        const Graph& inner = region[j].contents;
        for (std::size_t k = 0; k < inner.size(); ++k) {
          if (!ac_equal(inner[k], region[i])) continue;
          Graph r2 = region;
          r2[j].contents.erase(r2[j].contents.begin() + k);
          std::vector<int> action = ri.pos.path;
          action.push_back(static_cast<int>(j));
          if (sink({with_region(g, ri.pos, std::move(r2)), std::move(action)})) return true;
        }
      }
    }
  }
  return false;
}

bool gen_sid(const Graph& g, bool iterate, Sink sink) {
  for (const RegionInfo& ri : regions_with_context(g)) {
    const Graph& region = region_at(g, ri.pos);
    for (std::size_t i = 0; i < region.size(); ++i) {
      if (!is_strong(region[i])) continue;
      for (std::size_t j = 0; j < region.size(); ++j) {
        if (j == i || region[j].kind != Element::Kind::Bcut) continue;
        std::vector<int> action = ri.pos.path;
        action.push_back(static_cast<int>(j));
        if (iterate) {
          Graph r2 = region;
          r2[j].contents.push_back(region[i]);
          if (sink({with_region(g, ri.pos, std::move(r2)), std::move(action)})) return true;
        } else {
          const Graph& inner = region[j].contents;
          for (std::size_t k = 0; k < inner.size(); ++k) {
            if (!ac_equal(inner[k], region[i])) continue;
            Graph r2 = region;
            r2[j].contents.erase(r2[j].contents.begin() + k);
            if (sink({with_region(g, ri.pos, std::move(r2)), action})) return true;
          }
        }
      }
    }
  }
  return false;
}

bool gen_r4(const Graph& g, bool break_even, Sink sink) {
  for (const RegionInfo& ri : regions_with_context(g)) {
    if (ri.ctx.odd_parity == break_even) continue;
    const Graph& region = region_at(g, ri.pos);
    Element::Kind from = break_even ? Element::Kind::Ccut : Element::Kind::Bcut;
    for (std::size_t i = 0; i < region.size(); ++i) {
      if (region[i].kind != from) continue;
      Graph r2 = region;
      r2[i].kind = break_even ? Element::Kind::Bcut : Element::Kind::Ccut;
      std::vector<int> action = ri.pos.path;
      action.push_back(static_cast<int>(i));
      if (sink({with_region(g, ri.pos, std::move(r2)), std::move(action)})) return true;
    }
  }
  return false;
}

bool is_double_cut(const Element& e) {
  return e.kind == Element::Kind::Ccut && e.contents.size() == 1 &&
         e.contents[0].kind == Element::Kind::Ccut;
}

// Unwrap a continuous double cut sitting in a region of the requested
// parity, splicing the inner contents in place.
bool gen_unwrap(const Graph& g, bool in_even, Sink sink) {
  for (const RegionInfo& ri : regions_with_context(g)) {
    if (ri.ctx.odd_parity == in_even) continue;
    const Graph& region = region_at(g, ri.pos);
    for (std::size_t i = 0; i < region.size(); ++i) {
      if (!is_double_cut(region[i])) continue;
      Graph r2;
      r2.reserve(region.size() - 1 + region[i].contents[0].contents.size());
      for (std::size_t j = 0; j < region.size(); ++j) {
        if (j == i) {
          const Graph& inner = region[j].contents[0].contents;
          r2.insert(r2.end(), inner.begin(), inner.end());
        } else {
          r2.push_back(region[j]);
        }
      }
      std::vector<int> action = ri.pos.path;
      action.push_back(static_cast<int>(i));
      if (sink({with_region(g, ri.pos, std::move(r2)), std::move(action)})) return true;
    }
  }
  return false;
}

// Wrap a subset of an odd region in a continuous double cut (forward form of
// R6_add_double_odd; the verifier uses gen_unwrap on the result instead).
bool gen_wrap_odd(const Graph& g, Sink sink) {
  for (const RegionInfo& ri : regions_with_context(g)) {
    if (!ri.ctx.odd_parity) continue;
    const Graph& region = region_at(g, ri.pos);
    // Empty wrap: write (()) into the region.
    {
      Graph r2 = region;
      r2.push_back(make_ccut({make_ccut({})}));
      std::vector<int> action = ri.pos.path;
      action.push_back(static_cast<int>(region.size()));
      if (sink({with_region(g, ri.pos, std::move(r2)), std::move(action)})) return true;
    }
    for (std::size_t i = 0; i < region.size(); ++i) {
      Graph r2;
      for (std::size_t j = 0; j < region.size(); ++j)
        if (j != i) r2.push_back(region[j]);
      r2.push_back(make_ccut({make_ccut({region[i]})}));
      std::vector<int> action = ri.pos.path;
      action.push_back(static_cast<int>(r2.size()) - 1);
      if (sink({with_region(g, ri.pos, std::move(r2)), std::move(action)})) return true;
    }
  }
  return false;
}

// Runs the candidate generator for `rule`.  For the pure insertion rules the
// candidates are generated from `after` by the inverse deletion and compared
// against `before`; everything else generates forward from `before`.
bool generate(const Graph& before, const Graph& after, RuleId rule, Sink sink) {
  switch (rule) {
    case RuleId::R1: return gen_r1(before, sink);
    case RuleId::R2EraseEven: return gen_erase(before, true, sink);
    case RuleId::R2WriteOdd: return gen_erase(after, false, sink);
    case RuleId::R3Iterate: return gen_iterate(before, sink);
    case RuleId::R3Deiterate: return gen_deiterate(before, sink);
    case RuleId::R4BreakEven: return gen_r4(before, true, sink);
    case RuleId::R4CompleteOdd: return gen_r4(before, false, sink);
    case RuleId::R6RemoveDoubleEven: return gen_unwrap(before, true, sink);
    case RuleId::R6AddDoubleOdd: return gen_unwrap(after, false, sink);
    case RuleId::SidIterate: return gen_sid(before, true, sink);
    case RuleId::SidDeiterate: return gen_sid(before, false, sink);
  }
  return false;
}

bool inverse_checked(RuleId rule) {
  return rule == RuleId::R2WriteOdd || rule == RuleId::R6AddDoubleOdd;
}

}  // namespace

StepVerdict verify_step(const Graph& before, const Graph& after, RuleId rule,
                        const std::optional<Position>& hint, GraphSystem system) {
  if (!rule_in_system(rule, system))
    return {false, std::string(rule_name(rule)) + " is not available in this system"};
  if (hint) {
    // The hint must address a region of the graph the candidates are
    // generated from.
    const Graph& host = inverse_checked(rule) ? after : before;
    try {
      region_at(host, *hint);
    } catch (const PositionError&) {
      return {false, "hint out of range"};
    }
  }
  Graph target = canonical_form(inverse_checked(rule) ? before : after);
  bool found = false;
  auto sink = [&](Candidate&& c) {
    if (hint && c.action != hint->path) return false;
    if (canonical_form(c.result) == target) {
      found = true;
      return true;
    }
    return false;
  };
  try {
    generate(before, after, rule, sink);
  } catch (const std::runtime_error& e) {
    return {false, e.what()};
  }
  if (found) return {true, ""};
  return {false, std::string("no matching application of ") + rule_name(rule)};
}

DerivationReport check_derivation(const DerivationDocument& doc) {
  DerivationReport rep;
  const Graph* cur = &doc.start;
  for (std::size_t i = 0; i < doc.steps.size(); ++i) {
    const DerivationStep& s = doc.steps[i];
    StepVerdict v = verify_step(*cur, s.result, s.rule, s.hint, doc.system);
    if (!v.ok) {
      rep.accepted = false;
      rep.failed_step = static_cast<int>(i) + 1;
      rep.reason = v.reason;
      rep.final_graph = *cur;
      return rep;
    }
    cur = &s.result;
  }
  rep.accepted = true;
  rep.final_graph = *cur;
  rep.graphical_theorem = doc.start.empty();
  return rep;
}

DerivationDocument scroll_theorem(const DerivationDocument& inner) {
  DerivationReport rep = check_derivation(inner);
  if (!rep.accepted)
    throw std::invalid_argument("scroll_theorem: inner derivation rejected at step " +
                                std::to_string(rep.failed_step) + ": " + rep.reason);
  const Graph& antecedent = inner.start;
  DerivationDocument out;
  out.system = inner.system;
  auto push = [&out](RuleId r, Graph g) {
    out.steps.push_back({r, std::move(g), std::nullopt});
  };
  push(RuleId::R1, {strong_double_cut()});
  push(RuleId::R4CompleteOdd, {make_ccut({make_ccut({})})});
  if (!antecedent.empty()) {
    Graph shell = antecedent;
    shell.push_back(make_ccut({}));
    push(RuleId::R2WriteOdd, {make_ccut(shell)});
    Graph seeded;
    for (const Element& e : antecedent) {
      seeded.push_back(e);
      Graph s2 = antecedent;
      s2.push_back(make_ccut(seeded));
      push(RuleId::R3Iterate, {make_ccut(std::move(s2))});
    }
  }
  for (const DerivationStep& s : inner.steps) {
    Graph shell = antecedent;
    shell.push_back(make_ccut(s.result));
    push(s.rule, {make_ccut(std::move(shell))});
  }
  return out;
}

// ── Enumeration ────────────────────────────────────────────────────────────

std::vector<Graph> enumerate_graphs(int max_nodes, const std::vector<std::string>& atoms) {
  std::vector<std::vector<Graph>> graphs(max_nodes + 1);   // by exact node count
  std::vector<Element> pool;                               // sorted, sizes ascending later
  graphs[0] = {Graph{}};
  std::vector<std::vector<Element>> elems(max_nodes + 1);
  for (int s = 1; s <= max_nodes; ++s) {
    if (s == 1)
      for (const std::string& a : atoms) elems[1].push_back(make_gatom(a));
    for (const Graph& g : graphs[s - 1]) {
      elems[s].push_back(make_ccut(g));
      elems[s].push_back(make_bcut(g));
    }
    // Multisets of pool elements totalling exactly s, nondecreasing in the
    // structural order, hence already canonical.
    std::vector<const Element*> flat;
    std::vector<int> sizes;
    for (int k = 1; k <= s; ++k)
      for (const Element& e : elems[k]) {
        flat.push_back(&e);
        sizes.push_back(k);
      }
    std::vector<std::size_t> order(flat.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return compare_elements(*flat[a], *flat[b]) < 0;
    });

    Graph cur;
    auto rec = [&](auto&& self, std::size_t start, int remaining) -> void {
      if (remaining == 0) {
        graphs[s].push_back(cur);
        return;
      }
      for (std::size_t t = start; t < order.size(); ++t) {
        int sz = sizes[order[t]];
        if (sz > remaining) continue;
        cur.push_back(*flat[order[t]]);
        self(self, t, remaining - sz);
        cur.pop_back();
      }
    };
    rec(rec, 0, s);
  }
  std::vector<Graph> out;
  for (int s = 0; s <= max_nodes; ++s)
    out.insert(out.end(), graphs[s].begin(), graphs[s].end());
  return out;
}

std::vector<Element> small_element_pool(int max_nodes, const std::vector<std::string>& atoms) {
  std::vector<Element> out;
  for (const Graph& g : enumerate_graphs(max_nodes, atoms)) {
    if (g.size() == 1 && node_count(g) <= max_nodes) out.push_back(g[0]);
  }
  return out;
}

std::vector<Graph> rule_successors(const Graph& g, RuleId rule,
                                   const std::vector<Element>& insert_pool) {
  std::vector<Graph> out;
  auto collect = [&out](Candidate&& c) {
    out.push_back(std::move(c.result));
    return false;
  };
  switch (rule) {
    case RuleId::R2EraseEven: {
      // Single-element erasures; larger erasures are compositions.
      for (const RegionInfo& ri : regions_with_context(g)) {
        if (ri.ctx.odd_parity) continue;
        const Graph& region = region_at(g, ri.pos);
        for (std::size_t i = 0; i < region.size(); ++i)
          out.push_back(with_region(g, ri.pos, remove_indices(region, 1u << i)));
      }
      break;
    }
    case RuleId::R2WriteOdd: {
      for (const RegionInfo& ri : regions_with_context(g)) {
        if (!ri.ctx.odd_parity) continue;
        const Graph& region = region_at(g, ri.pos);
        for (const Element& e : insert_pool) {
          Graph r2 = region;
          r2.push_back(e);
          out.push_back(with_region(g, ri.pos, std::move(r2)));
        }
      }
      break;
    }
    case RuleId::R1: gen_r1(g, collect); break;
    case RuleId::R3Iterate: gen_iterate(g, collect); break;
    case RuleId::R3Deiterate: gen_deiterate(g, collect); break;
    case RuleId::R4BreakEven: gen_r4(g, true, collect); break;
    case RuleId::R4CompleteOdd: gen_r4(g, false, collect); break;
    case RuleId::R6RemoveDoubleEven: gen_unwrap(g, true, collect); break;
    case RuleId::R6AddDoubleOdd: gen_wrap_odd(g, collect); break;
    case RuleId::SidIterate: gen_sid(g, true, collect); break;
    case RuleId::SidDeiterate: gen_sid(g, false, collect); break;
  }
  return out;
}

// ── Soundness sweep ────────────────────────────────────────────────────────

namespace {

struct TruthEnv {
  std::vector<FrameSkeleton> skeletons;
  std::vector<std::string> atoms;
  std::vector<std::size_t> offsets;  // word offset per skeleton
  std::size_t total_words = 0;
};

std::vector<std::uint64_t> truth_vector(const TruthEnv& env, const Formula& f) {
  std::vector<std::uint64_t> out;
  out.reserve(env.total_words);
  for (const FrameSkeleton& sk : env.skeletons) {
    BulkTruth bt = eval_all_valuations(sk, env.atoms, f);
    out.insert(out.end(), bt.bits.begin(), bt.bits.end());
  }
  return out;
}

// Locates the first (skeleton, valuation, world) where before holds and
// after fails, in enumeration order.
std::optional<KripkeModel> first_violation_model(const TruthEnv& env,
                                                 const std::vector<std::uint64_t>& tb,
                                                 const std::vector<std::uint64_t>& ta) {
  for (std::size_t s = 0; s < env.skeletons.size(); ++s) {
    const FrameSkeleton& sk = env.skeletons[s];
    int bits = static_cast<int>(env.atoms.size()) * sk.n;
    int num_vals = 1 << bits;
    int words = (num_vals + 63) / 64;
    std::size_t base = env.offsets[s];
    bool any = false;
    for (int w = 0; w < sk.n && !any; ++w)
      for (int k = 0; k < words && !any; ++k)
        any = (tb[base + static_cast<std::size_t>(w) * words + k] &
               ~ta[base + static_cast<std::size_t>(w) * words + k]) != 0;
    if (!any) continue;
    for (int v = 0; v < num_vals; ++v)
      for (int w = 0; w < sk.n; ++w) {
        std::size_t idx = base + static_cast<std::size_t>(w) * words + (v >> 6);
        bool b = (tb[idx] >> (v & 63)) & 1u;
        bool a = (ta[idx] >> (v & 63)) & 1u;
        if (b && !a) return skeleton_model(sk, env.atoms, v, w);
      }
  }
  return std::nullopt;
}

}  // namespace

SoundnessReport rule_soundness_suite(const SoundnessOptions& opts) {
  // Exhaustive enumeration budget: graph size up to 8 nodes over at most
  // three atoms, models over at most four worlds.
  if (opts.max_graph_size > 8 || opts.atoms.size() > 3 || opts.max_worlds > 4)
    throw BudgetError("soundness suite budget exceeded (size <= 8, atoms <= 3, worlds <= 4)");
  FrameClass frame = opts.frame.value_or(
      opts.system == GraphSystem::GET ? FrameClass::t() : FrameClass::s4());
  TruthEnv env;
  env.skeletons = enumerate_frames(opts.max_worlds, frame);
  env.atoms = opts.atoms;
  std::sort(env.atoms.begin(), env.atoms.end());
  for (const FrameSkeleton& sk : env.skeletons) {
    env.offsets.push_back(env.total_words);
    int bits = static_cast<int>(env.atoms.size()) * sk.n;
    env.total_words += static_cast<std::size_t>(sk.n) * (((1 << bits) + 63) / 64);
  }

  std::vector<Graph> graphs = enumerate_graphs(opts.max_graph_size, env.atoms);
  std::vector<Element> pool = small_element_pool(2, env.atoms);

  std::vector<RuleId> rules;
  for (RuleId r : system_rules(opts.system))
    if (!opts.only_rule || *opts.only_rule == r) rules.push_back(r);

  struct Hit {
    std::size_t graph_idx;
    std::size_t rule_idx;
    std::size_t succ_idx;
    Graph before, after;
    RuleId rule;
    KripkeModel model;
  };

  auto scan = [&](std::size_t lo, std::size_t hi) {
    std::pair<std::vector<Hit>, std::pair<long long, long long>> res;
    auto& [hits, counters] = res;
    auto& [pairs, violating] = counters;
    pairs = violating = 0;
    std::unordered_map<std::string, std::vector<std::uint64_t>> cache;
    auto truth_of = [&](const Graph& g) -> const std::vector<std::uint64_t>& {
      std::string key = print_graph(canonical_form(g));
      auto it = cache.find(key);
      if (it == cache.end())
        it = cache.emplace(std::move(key), truth_vector(env, to_formula(g))).first;
      return it->second;
    };
    for (std::size_t gi = lo; gi < hi; ++gi) {
      const Graph& g = graphs[gi];
      const auto& tb = truth_of(g);
      for (std::size_t ri = 0; ri < rules.size(); ++ri) {
        std::vector<Graph> succs = rule_successors(g, rules[ri], pool);
        // Dedup successors per rule application set.
        std::vector<std::string> seen;
        std::size_t si = 0;
        for (Graph& h : succs) {
          std::string key = print_graph(canonical_form(h));
          if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
          seen.push_back(key);
          ++pairs;
          const auto& ta = truth_of(h);
          bool bad = false;
          for (std::size_t k = 0; k < env.total_words && !bad; ++k)
            bad = (tb[k] & ~ta[k]) != 0;
          if (bad) {
            ++violating;
            auto model = first_violation_model(env, tb, ta);
            hits.push_back({gi, ri, si, g, std::move(h), rules[ri], std::move(*model)});
          }
          ++si;
        }
      }
    }
    return res;
  };

  SoundnessReport rep;
  rep.graphs = static_cast<long long>(graphs.size());
  std::vector<Hit> all_hits;
  if (opts.jobs <= 1 || graphs.size() < 64) {
    auto [hits, counters] = scan(0, graphs.size());
    all_hits = std::move(hits);
    rep.pairs = counters.first;
    rep.violating_pairs = counters.second;
  } else {
    std::size_t chunks = std::min<std::size_t>(opts.jobs, graphs.size());
    std::size_t per = (graphs.size() + chunks - 1) / chunks;
    std::vector<std::future<decltype(scan(0, 0))>> futs;
    for (std::size_t c = 0; c < chunks; ++c) {
      std::size_t lo = c * per, hi = std::min(graphs.size(), lo + per);
      futs.push_back(std::async(std::launch::async, scan, lo, hi));
    }
    for (auto& fu : futs) {
      auto [hits, counters] = fu.get();
      all_hits.insert(all_hits.end(), std::make_move_iterator(hits.begin()),
                      std::make_move_iterator(hits.end()));
      rep.pairs += counters.first;
      rep.violating_pairs += counters.second;
    }
    std::sort(all_hits.begin(), all_hits.end(), [](const Hit& a, const Hit& b) {
      return std::tie(a.graph_idx, a.rule_idx, a.succ_idx) <
             std::tie(b.graph_idx, b.rule_idx, b.succ_idx);
    });
  }
  for (Hit& h : all_hits) {
    if (rep.witnesses.size() >= opts.max_witnesses) break;
    rep.witnesses.push_back({std::move(h.before), std::move(h.after), h.rule, std::move(h.model)});
  }
  return rep;
}

}  // namespace gt
