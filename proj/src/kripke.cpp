#include "gt/kripke.hpp"

#include <algorithm>
#include <cctype>
#include <future>

namespace gt {

int KripkeModel::world_index(std::string_view name) const {
  for (std::size_t i = 0; i < worlds.size(); ++i)
    if (worlds[i] == name) return static_cast<int>(i);
  return -1;
}

bool KripkeModel::related(int a, int b) const {
  return std::binary_search(rel.begin(), rel.end(), std::make_pair(a, b));
}

bool KripkeModel::atom_true(const std::string& atom, int w) const {
  auto it = valuation.find(atom);
  if (it == valuation.end()) return false;
  return it->second[w];
}

namespace {

bool valid_atom_name(const std::string& s) {
  if (s.empty() || s[0] < 'a' || s[0] > 'z') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace

KripkeModel make_model(std::vector<std::string> worlds, const std::string& actual,
                       const std::vector<std::pair<std::string, std::string>>& rel,
                       const std::map<std::string, std::map<std::string, bool>>& valuation) {
  using Kind = ModelError::Kind;
  if (worlds.empty())
    throw ModelError(Kind::Malformed, "model has no worlds", "");
  KripkeModel m;
  m.worlds = std::move(worlds);
  for (std::size_t i = 0; i < m.worlds.size(); ++i)
    for (std::size_t j = i + 1; j < m.worlds.size(); ++j)
      if (m.worlds[i] == m.worlds[j])
        throw ModelError(Kind::DuplicateWorld, "duplicate world: " + m.worlds[i], m.worlds[i]);
  m.actual = m.world_index(actual);
  if (m.actual < 0)
    throw ModelError(Kind::UnknownWorld, "unknown actual world: " + actual, actual);
  for (const auto& [a, b] : rel) {
    int ia = m.world_index(a);
    int ib = m.world_index(b);
    if (ia < 0) throw ModelError(Kind::UnknownWorld, "unknown world in relation: " + a, a);
    if (ib < 0) throw ModelError(Kind::UnknownWorld, "unknown world in relation: " + b, b);
    m.rel.emplace_back(ia, ib);
  }
  std::sort(m.rel.begin(), m.rel.end());
  m.rel.erase(std::unique(m.rel.begin(), m.rel.end()), m.rel.end());
  for (std::size_t w = 0; w < m.worlds.size(); ++w)
    if (!m.related(static_cast<int>(w), static_cast<int>(w)))
      throw ModelError(Kind::MissingReflexivity, "missing reflexive pair for world: " + m.worlds[w],
                       m.worlds[w]);
  for (const auto& [world, atoms] : valuation) {
    int iw = m.world_index(world);
    if (iw < 0) throw ModelError(Kind::UnknownWorld, "unknown world in valuation: " + world, world);
    for (const auto& [atom, value] : atoms) {
      if (!valid_atom_name(atom))
        throw ModelError(Kind::Malformed, "bad atom name: " + atom, atom);
      auto& bits = m.valuation[atom];
      if (bits.empty()) bits.assign(m.worlds.size(), false);
      bits[iw] = value;
    }
  }
  return m;
}

bool eval(const KripkeModel& m, int world, const Formula& f) {
  if (world < 0 || static_cast<std::size_t>(world) >= m.worlds.size())
    throw ModelError(ModelError::Kind::UnknownWorld, "unknown world index", "");
  switch (f.kind) {
    case FKind::Atom:
      return m.atom_true(f.name, world);
    case FKind::Top:
      return true;
    case FKind::WeakNeg:
      for (std::size_t v = 0; v < m.worlds.size(); ++v)
        if (m.related(world, static_cast<int>(v)) && !eval(m, static_cast<int>(v), f.operand()))
          return true;
      return false;
    case FKind::ClassNeg:
      return !eval(m, world, f.operand());
    case FKind::Impl:
      return !eval(m, world, f.lhs()) || eval(m, world, f.rhs());
    case FKind::Conj:
      return eval(m, world, f.lhs()) && eval(m, world, f.rhs());
  }
  return false;
}

bool eval(const KripkeModel& m, const std::string& world, const Formula& f) {
  int w = m.world_index(world);
  if (w < 0)
    throw ModelError(ModelError::Kind::UnknownWorld, "unknown world: " + world, world);
  return eval(m, w, f);
}

bool satisfies_frame(const KripkeModel& m, const FrameClass& fc) {
  int n = static_cast<int>(m.worlds.size());
  if (fc.transitive) {
    for (const auto& [a, b] : m.rel)
      for (int c = 0; c < n; ++c)
        if (m.related(b, c) && !m.related(a, c)) return false;
  }
  if (fc.symmetric) {
    for (const auto& [a, b] : m.rel)
      if (!m.related(b, a)) return false;
  }
  if (fc.convergent) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          if (!m.related(a, b) || !m.related(a, c)) continue;
          bool meet = false;
          for (int d = 0; d < n && !meet; ++d) meet = m.related(b, d) && m.related(c, d);
          if (!meet) return false;
        }
  }
  return true;
}

// ── Skeletons ──────────────────────────────────────────────────────────────

bool FrameSkeleton::transitive() const {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (related(i, j) && (succ[j] & ~succ[i]) != 0) return false;
  return true;
}

std::vector<std::pair<int, int>> FrameSkeleton::rel_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (related(i, j)) out.emplace_back(i, j);
  return out;
}

namespace {

FrameSkeleton make_skeleton(int n, std::uint32_t rel_mask) {
  FrameSkeleton sk;
  sk.n = n;
  sk.rel_mask = rel_mask;
  for (int w = 0; w < n; ++w) {
    std::uint32_t s = 0;
    for (int v = 0; v < n; ++v)
      if ((rel_mask >> (w * n + v)) & 1u) s |= (1u << v);
    sk.succ[w] = s;
  }
  return sk;
}

bool skeleton_symmetric(const FrameSkeleton& sk) {
  for (int i = 0; i < sk.n; ++i)
    for (int j = 0; j < sk.n; ++j)
      if (sk.related(i, j) != sk.related(j, i)) return false;
  return true;
}

bool skeleton_convergent(const FrameSkeleton& sk) {
  for (int a = 0; a < sk.n; ++a)
    for (int b = 0; b < sk.n; ++b)
      for (int c = 0; c < sk.n; ++c) {
        if (!sk.related(a, b) || !sk.related(a, c)) continue;
        if ((sk.succ[b] & sk.succ[c]) == 0) return false;
      }
  return true;
}

bool skeleton_fits(const FrameSkeleton& sk, const FrameClass& fc) {
  if (fc.transitive && !sk.transitive()) return false;
  if (fc.symmetric && !skeleton_symmetric(sk)) return false;
  if (fc.convergent && !skeleton_convergent(sk)) return false;
  return true;
}

}  // namespace

std::vector<FrameSkeleton> enumerate_frames(int max_worlds, const FrameClass& frame) {
  if (max_worlds > 5)
    throw BudgetError("frame enumeration supports at most five worlds");
  std::vector<FrameSkeleton> out;
  for (int n = 1; n <= max_worlds; ++n) {
    std::uint32_t diag = 0;
    for (int w = 0; w < n; ++w) diag |= (1u << (w * n + w));
    std::vector<int> free_bits;  // off-diagonal positions, ascending
    for (int p = 0; p < n * n; ++p)
      if (!((diag >> p) & 1u)) free_bits.push_back(p);
    std::uint64_t count = 1ull << free_bits.size();
    for (std::uint64_t k = 0; k < count; ++k) {
      std::uint32_t rel = diag;
      for (std::size_t t = 0; t < free_bits.size(); ++t)
        if ((k >> t) & 1ull) rel |= (1u << free_bits[t]);
      FrameSkeleton sk = make_skeleton(n, rel);
      if (skeleton_fits(sk, frame)) out.push_back(sk);
    }
  }
  return out;
}

namespace {

struct BulkEnv {
  const FrameSkeleton* sk;
  const std::vector<std::string>* atoms;
  int num_vals;
  int words;
  std::vector<std::uint64_t> full;  // valid-bit mask per word
};

using Block = std::vector<std::uint64_t>;  // n * words

void eval_block(const BulkEnv& env, const Formula& f, Block& out);

void atom_block(const BulkEnv& env, int atom_idx, Block& out) {
  int n = env.sk->n;
  for (int w = 0; w < n; ++w) {
    int p = atom_idx * n + w;
    for (int k = 0; k < env.words; ++k) {
      std::uint64_t word = 0;
      for (int j = 0; j < 64; ++j) {
        int v = k * 64 + j;
        if (v >= env.num_vals) break;
        if ((v >> p) & 1) word |= (1ull << j);
      }
      out[w * env.words + k] = word;
    }
  }
}

void eval_block(const BulkEnv& env, const Formula& f, Block& out) {
  int n = env.sk->n;
  int words = env.words;
  switch (f.kind) {
    case FKind::Atom: {
      auto it = std::find(env.atoms->begin(), env.atoms->end(), f.name);
      if (it == env.atoms->end()) {
        std::fill(out.begin(), out.end(), 0);
      } else {
        atom_block(env, static_cast<int>(it - env.atoms->begin()), out);
      }
      return;
    }
    case FKind::Top:
      for (int w = 0; w < n; ++w)
        for (int k = 0; k < words; ++k) out[w * words + k] = env.full[k];
      return;
    case FKind::ClassNeg: {
      Block a(out.size());
      eval_block(env, f.operand(), a);
      for (int w = 0; w < n; ++w)
        for (int k = 0; k < words; ++k) out[w * words + k] = ~a[w * words + k] & env.full[k];
      return;
    }
    case FKind::Impl: {
      Block a(out.size()), b(out.size());
      eval_block(env, f.lhs(), a);
      eval_block(env, f.rhs(), b);
      for (int w = 0; w < n; ++w)
        for (int k = 0; k < words; ++k)
          out[w * words + k] = (~a[w * words + k] | b[w * words + k]) & env.full[k];
      return;
    }
    case FKind::Conj: {
      Block a(out.size()), b(out.size());
      eval_block(env, f.lhs(), a);
      eval_block(env, f.rhs(), b);
      for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] & b[i];
      return;
    }
    case FKind::WeakNeg: {
      Block a(out.size());
      eval_block(env, f.operand(), a);
      for (int w = 0; w < n; ++w) {
        std::uint32_t s = env.sk->succ[w];
        for (int k = 0; k < words; ++k) {
          std::uint64_t acc = 0;
          for (int v = 0; v < n; ++v)
            if ((s >> v) & 1u) acc |= ~a[v * words + k];
          out[w * words + k] = acc & env.full[k];
        }
      }
      return;
    }
  }
}

}  // namespace

BulkTruth eval_all_valuations(const FrameSkeleton& sk, const std::vector<std::string>& atoms,
                              const Formula& f) {
  int bitcount = static_cast<int>(atoms.size()) * sk.n;
  if (bitcount > 24)
    throw BudgetError("valuation space too large for bulk evaluation");
  BulkTruth bt;
  bt.n = sk.n;
  bt.num_vals = 1 << bitcount;
  bt.words_per_world = (bt.num_vals + 63) / 64;
  bt.bits.assign(static_cast<std::size_t>(sk.n) * bt.words_per_world, 0);

  BulkEnv env;
  env.sk = &sk;
  env.atoms = &atoms;
  env.num_vals = bt.num_vals;
  env.words = bt.words_per_world;
  env.full.assign(bt.words_per_world, ~0ull);
  int rem = bt.num_vals % 64;
  if (rem != 0) env.full.back() = (1ull << rem) - 1;

  eval_block(env, f, bt.bits);
  return bt;
}

KripkeModel skeleton_model(const FrameSkeleton& sk, const std::vector<std::string>& atoms,
                           int val, int actual) {
  KripkeModel m;
  for (int w = 0; w < sk.n; ++w) m.worlds.push_back("w" + std::to_string(w));
  m.actual = actual;
  m.rel = sk.rel_pairs();
  for (std::size_t a = 0; a < atoms.size(); ++a) {
    std::vector<bool> bits(sk.n, false);
    for (int w = 0; w < sk.n; ++w)
      bits[w] = (val >> (static_cast<int>(a) * sk.n + w)) & 1;
    m.valuation[atoms[a]] = std::move(bits);
  }
  return m;
}

namespace {

// First (valuation, world) falsifying f on sk, in valuation-major order.
std::optional<std::pair<int, int>> first_falsifier(const FrameSkeleton& sk,
                                                   const std::vector<std::string>& atoms,
                                                   const Formula& f) {
  BulkTruth bt = eval_all_valuations(sk, atoms, f);
  for (int v = 0; v < bt.num_vals; ++v)
    for (int w = 0; w < bt.n; ++w)
      if (!bt.at(w, v)) return std::make_pair(v, w);
  return std::nullopt;
}

}  // namespace

Verdict bounded_valid(const Formula& f, int max_worlds, const FrameClass& frame,
                      const SearchBudget& budget, int jobs) {
  if (max_worlds < 1) throw std::invalid_argument("max_worlds must be positive");
  std::vector<std::string> atoms = atoms_of(f);
  std::vector<FrameSkeleton> frames = enumerate_frames(max_worlds, frame);

  std::uint64_t models = 0;
  for (const FrameSkeleton& sk : frames) {
    int bits = static_cast<int>(atoms.size()) * sk.n;
    models += (bits > 63) ? budget.max_models + 1 : (1ull << bits);
    if (models > budget.max_models)
      throw BudgetError("bounded_valid budget exceeded");
  }

  auto scan_range = [&](std::size_t lo, std::size_t hi)
      -> std::optional<std::pair<std::size_t, std::pair<int, int>>> {
    for (std::size_t i = lo; i < hi; ++i) {
      if (auto hit = first_falsifier(frames[i], atoms, f)) return std::make_pair(i, *hit);
    }
    return std::nullopt;
  };

  std::optional<std::pair<std::size_t, std::pair<int, int>>> found;
  if (jobs <= 1 || frames.size() < 2) {
    found = scan_range(0, frames.size());
  } else {
    std::size_t chunks = std::min<std::size_t>(jobs, frames.size());
    std::size_t per = (frames.size() + chunks - 1) / chunks;
    std::vector<std::future<std::optional<std::pair<std::size_t, std::pair<int, int>>>>> futs;
    for (std::size_t c = 0; c < chunks; ++c) {
      std::size_t lo = c * per;
      std::size_t hi = std::min(frames.size(), lo + per);
      futs.push_back(std::async(std::launch::async, scan_range, lo, hi));
    }
    for (auto& fu : futs) {
      auto r = fu.get();
      if (r && (!found || r->first < found->first)) found = r;
    }
  }

  Verdict v;
  if (!found) {
    v.valid = true;
    v.bound = max_worlds;
    return v;
  }
  const FrameSkeleton& sk = frames[found->first];
  auto [val, world] = found->second;
  KripkeModel m = skeleton_model(sk, atoms, val, world);
  if (eval(m, m.actual, f))
    throw std::logic_error("countermodel self-check failed");
  v.valid = false;
  v.countermodel = std::move(m);
  return v;
}

CorrespondenceReport correspondence_check(const Formula& schema, int max_worlds) {
  std::vector<std::string> atoms = atoms_of(schema);
  CorrespondenceReport rep;
  for (const FrameSkeleton& sk : enumerate_frames(max_worlds, FrameClass::t())) {
    ++rep.frames_checked;
    auto falsifier = first_falsifier(sk, atoms, schema);
    bool schema_valid = !falsifier.has_value();
    bool has_property = sk.transitive();
    if (schema_valid != has_property) {
      FrameWitness w;
      w.n = sk.n;
      w.rel = sk.rel_pairs();
      w.schema_valid = schema_valid;
      w.has_property = has_property;
      if (falsifier)
        w.falsifier = skeleton_model(sk, atoms, falsifier->first, falsifier->second);
      rep.failures.push_back(std::move(w));
      rep.equivalence_holds = false;
    }
  }
  return rep;
}

}  // namespace gt
