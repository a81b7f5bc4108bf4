#include "gt/hilbert.hpp"

#include <array>
#include <stdexcept>

namespace gt {

namespace {

// Schema patterns are formulas over placeholder atoms "\x01X" etc. that unify
// against candidate formulas.
const std::string kVarNames[3] = {"#x", "#y", "#z"};

Formula var(int i) { return make_atom(kVarNames[i]); }

int var_index(const Formula& f) {
  if (f.kind != FKind::Atom) return -1;
  for (int i = 0; i < 3; ++i)
    if (f.name == kVarNames[i]) return i;
  return -1;
}

Formula schema_pattern(Schema s) {
  Formula X = var(0), Y = var(1), Z = var(2);
  Formula falsum = make_weak_neg(make_top());
  switch (s) {
    case Schema::Ax1:
      return make_top();
    case Schema::Ax2:
      return make_impl(X, make_impl(Y, X));
    case Schema::Ax3:
      return make_impl(make_impl(X, make_impl(Y, Z)),
                       make_impl(make_impl(X, Y), make_impl(X, Z)));
    case Schema::Ax4:
      return make_impl(make_impl(make_impl(X, Y), X), X);
    case Schema::Ax5:
      return make_impl(falsum, Z);
    case Schema::Ax6:
      return make_impl(make_impl(X, falsum), make_weak_neg(X));
    case Schema::Ax7:
      return make_impl(
          make_impl(make_weak_neg(make_impl(X, Y)), falsum),
          make_impl(make_impl(make_weak_neg(X), falsum),
                    make_impl(make_weak_neg(Y), falsum)));
    case Schema::Gt4: {
      auto strong = [](Formula f) { return make_class_neg(make_weak_neg(std::move(f))); };
      return make_impl(strong(X),
                       make_impl(make_weak_neg(make_conj(strong(X), Y)), make_weak_neg(Y)));
    }
  }
  return make_top();
}

bool unify(const Formula& pattern, const Formula& f,
           std::array<std::optional<Formula>, 3>& bind) {
  int vi = var_index(pattern);
  if (vi >= 0) {
    if (bind[vi]) return *bind[vi] == f;
    bind[vi] = f;
    return true;
  }
  if (pattern.kind != f.kind) return false;
  if (pattern.kind == FKind::Atom) return pattern.name == f.name;
  if (pattern.kids.size() != f.kids.size()) return false;
  for (std::size_t i = 0; i < pattern.kids.size(); ++i)
    if (!unify(pattern.kids[i], f.kids[i], bind)) return false;
  return true;
}

bool matches_schema(Schema s, const Formula& f) {
  std::array<std::optional<Formula>, 3> bind;
  return unify(schema_pattern(s), f, bind);
}

// The closure shell: -A -> -T.
const Formula* peel_closure(const Formula& f) {
  if (f.kind != FKind::Impl) return nullptr;
  if (f.lhs().kind != FKind::WeakNeg) return nullptr;
  if (f.rhs().kind != FKind::WeakNeg || f.rhs().operand().kind != FKind::Top) return nullptr;
  return &f.lhs().operand();
}

}  // namespace

const char* schema_name(Schema s) {
  switch (s) {
    case Schema::Ax1: return "Ax1";
    case Schema::Ax2: return "Ax2";
    case Schema::Ax3: return "Ax3";
    case Schema::Ax4: return "Ax4";
    case Schema::Ax5: return "Ax5";
    case Schema::Ax6: return "Ax6";
    case Schema::Ax7: return "Ax7";
    case Schema::Gt4: return "GT4";
  }
  return "?";
}

int schema_arity(Schema s) {
  switch (s) {
    case Schema::Ax1: return 0;
    case Schema::Ax2: return 2;
    case Schema::Ax3: return 3;
    case Schema::Ax4: return 2;
    case Schema::Ax5: return 1;
    case Schema::Ax6: return 1;
    case Schema::Ax7: return 2;
    case Schema::Gt4: return 2;
  }
  return 0;
}

Formula schema_instance(Schema s, const std::vector<Formula>& vars) {
  struct Subst {
    const std::vector<Formula>* vars;
    Formula apply(const Formula& f) const {
      int vi = var_index(f);
      if (vi >= 0) {
        if (static_cast<std::size_t>(vi) >= vars->size())
          throw std::invalid_argument("schema_instance: not enough variables");
        return (*vars)[vi];
      }
      Formula out = f;
      for (std::size_t i = 0; i < out.kids.size(); ++i) out.kids[i] = apply(f.kids[i]);
      return out;
    }
  };
  // Ax5 uses Z as its only metavariable; map vars[0] onto it.
  if (s == Schema::Ax5) {
    std::vector<Formula> padded = {make_top(), make_top()};
    padded.push_back(vars.at(0));
    return Subst{&padded}.apply(schema_pattern(s));
  }
  return Subst{&vars}.apply(schema_pattern(s));
}

std::optional<AxiomMatch> match_axiom(const Formula& f, System system) {
  static const Schema kBase[] = {Schema::Ax1, Schema::Ax2, Schema::Ax3, Schema::Ax4,
                                 Schema::Ax5, Schema::Ax6, Schema::Ax7};
  const Formula* cur = &f;
  for (int peels = 0;; ++peels) {
    for (Schema s : kBase)
      if (matches_schema(s, *cur)) return AxiomMatch{s, peels};
    if (system == System::GT4 && matches_schema(Schema::Gt4, *cur))
      return AxiomMatch{Schema::Gt4, peels};
    const Formula* inner = peel_closure(*cur);
    if (!inner) return std::nullopt;
    cur = inner;
  }
}

ProofReport check_proof(const ProofDocument& doc) {
  auto fail = [](int line, std::string reason) {
    return ProofReport{false, line, std::move(reason)};
  };
  for (std::size_t i = 0; i < doc.lines.size(); ++i) {
    const ProofLine& ln = doc.lines[i];
    int no = static_cast<int>(i) + 1;
    switch (ln.by.kind) {
      case Justification::Kind::Axiom: {
        if (!match_axiom(ln.formula, doc.system))
          return fail(no, "line matches no axiom schema");
        break;
      }
      case Justification::Kind::Hypothesis: {
        bool found = false;
        for (const Formula& h : doc.hypotheses)
          if (h == ln.formula) { found = true; break; }
        if (!found) return fail(no, "hypothesis line not declared");
        break;
      }
      case Justification::Kind::ModusPonens: {
        int maj = ln.by.major, min = ln.by.minor;
        if (maj < 1 || maj >= no || min < 1 || min >= no)
          return fail(no, "modus ponens indices must reference earlier lines");
        const Formula& major = doc.lines[maj - 1].formula;
        const Formula& minor = doc.lines[min - 1].formula;
        if (major.kind != FKind::Impl || major.lhs() != minor || major.rhs() != ln.formula)
          return fail(no, "modus ponens shape mismatch");
        break;
      }
    }
  }
  if (doc.lines.empty()) return {false, 0, "proof has no lines"};
  return {true, 0, ""};
}

namespace {

Justification ax() { return {Justification::Kind::Axiom, 0, 0}; }
Justification mp(int major, int minor) { return {Justification::Kind::ModusPonens, major, minor}; }

}  // namespace

ProofDocument deduction_transform(const ProofDocument& doc, const Formula& discharge) {
  bool is_hyp = false;
  for (const Formula& h : doc.hypotheses)
    if (h == discharge) { is_hyp = true; break; }
  if (!is_hyp) throw std::invalid_argument("deduction_transform: discharge is not a hypothesis");
  ProofReport rep = check_proof(doc);
  if (!rep.accepted)
    throw std::invalid_argument("deduction_transform: input proof rejected at line " +
                                std::to_string(rep.failed_line) + ": " + rep.reason);

  ProofDocument out;
  out.system = doc.system;
  for (const Formula& h : doc.hypotheses)
    if (!(h == discharge)) out.hypotheses.push_back(h);

  const Formula& H = discharge;
  // new_of[i] = 1-indexed line of H -> doc.lines[i].formula in the output.
  std::vector<int> new_of(doc.lines.size(), 0);

  auto push = [&out](Formula f, Justification j) {
    out.lines.push_back({std::move(f), j});
    return static_cast<int>(out.lines.size());
  };

  for (std::size_t i = 0; i < doc.lines.size(); ++i) {
    const ProofLine& ln = doc.lines[i];
    const Formula& X = ln.formula;
    if (ln.by.kind == Justification::Kind::ModusPonens) {
      // From H -> (Z -> X) and H -> Z, derive H -> X by Ax3 and two steps.
      const Formula& Z = doc.lines[ln.by.minor - 1].formula;
      int maj = new_of[ln.by.major - 1];
      int min = new_of[ln.by.minor - 1];
      Formula hz = make_impl(H, Z);
      Formula hx = make_impl(H, X);
      Formula hzx = make_impl(H, make_impl(Z, X));
      int a3 = push(make_impl(hzx, make_impl(hz, hx)), ax());
      int step = push(make_impl(hz, hx), mp(a3, maj));
      new_of[i] = push(hx, mp(step, min));
    } else if (ln.by.kind == Justification::Kind::Hypothesis && X == H) {
      // Identity proof of H -> H.
      Formula hh = make_impl(H, H);
      Formula h_hh = make_impl(H, hh);
      Formula h_hh_h = make_impl(H, make_impl(hh, H));
      int l1 = push(h_hh_h, ax());                                   // Ax2
      int l2 = push(make_impl(h_hh_h, make_impl(h_hh, hh)), ax());   // Ax3
      int l3 = push(make_impl(h_hh, hh), mp(l2, l1));
      int l4 = push(h_hh, ax());                                     // Ax2
      new_of[i] = push(hh, mp(l3, l4));
    } else {
      // Axiom or a surviving hypothesis: X, then Ax2, then H -> X.
      int lx = push(X, ln.by);
      int a2 = push(make_impl(X, make_impl(H, X)), ax());
      new_of[i] = push(make_impl(H, X), mp(a2, lx));
    }
  }
  return out;
}

std::vector<std::pair<std::string, Formula>> theorem_corpus() {
  static const std::pair<const char*, const char*> kCorpus[] = {
      {"prop2_k_distribution", "+(p -> q) -> +p -> +q"},
      {"prop4a_contraposition_in", "(p -> ~q) -> q -> ~p"},
      {"prop4b_absurd_identity", "~(p -> p) -> q"},
      {"prop4c_excluded_middle", "p | ~p"},
      {"prop4d_double_neg_intro", "p -> ~~p"},
      {"prop4e_double_neg_elim", "~~p -> p"},
      {"prop4f_contraposition", "(p -> q) -> ~q -> ~p"},
      {"prop4f_contraposition_conv", "(~q -> ~p) -> p -> q"},
      {"prop5a_disj_intro_left", "p -> p | q"},
      {"prop5b_disj_intro_right", "p -> q | p"},
      {"prop5c_disj_elim", "(p -> q) -> (r -> q) -> (p | r) -> q"},
      {"prop6a_conj_elim_left", "p & q -> p"},
      {"prop6b_conj_elim_right", "p & q -> q"},
      {"prop6c_conj_compose", "(p -> q) -> (p -> r) -> p -> q & r"},
      {"prop6d_conj_intro", "p -> q -> p & q"},
      {"prop6e_box_conj", "+(p & q) <-> +p & +q"},
      {"prop8b_weak_excluded_middle", "p | -p"},
      {"prop8c_classneg_implies_weakneg", "~p -> -p"},
      {"prop8d_weakneg_as_not_box", "-p <-> ~+p"},
      {"prop8e_box_elim", "+p -> p"},
      {"prop9a_diamond_as_not_box_not", "~+~p <-> <>p"},
      {"prop9a_box_not_as_not_diamond", "+~p <-> ~<>p"},
      {"prop9a_not_box_as_weakneg", "~+p <-> -p"},
      {"prop9b_diamond_intro", "p -> <>p"},
      {"prop9d_box_diamond_clash", "~(+p & <>~p)"},
  };
  std::vector<std::pair<std::string, Formula>> out;
  for (const auto& [name, text] : kCorpus)
    out.emplace_back(name, parse_formula(text));
  return out;
}

}  // namespace gt
