#include "gt/translate.hpp"

#include "gt/kripke.hpp"

#include <algorithm>

namespace gt {

Graph to_graph(const Formula& f) {
  switch (f.kind) {
    case FKind::Atom:
      return {make_gatom(f.name)};
    case FKind::Top:
      return {};
    case FKind::WeakNeg:
      return {make_bcut(to_graph(f.operand()))};
    case FKind::ClassNeg:
      return {make_ccut(to_graph(f.operand()))};
    case FKind::Impl: {
      Graph scroll = to_graph(f.lhs());
      scroll.push_back(make_ccut(to_graph(f.rhs())));
      return {make_ccut(std::move(scroll))};
    }
    case FKind::Conj: {
      Graph g = to_graph(f.lhs());
      Graph r = to_graph(f.rhs());
      g.insert(g.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
      return g;
    }
  }
  return {};
}

Formula to_formula(const Graph& g) {
  if (g.empty()) return make_top();
  Formula acc = element_formula(g[0]);
  for (std::size_t i = 1; i < g.size(); ++i)
    acc = make_conj(std::move(acc), element_formula(g[i]));
  return acc;
}

Formula element_formula(const Element& e) {
  switch (e.kind) {
    case Element::Kind::Atom:
      return make_atom(e.name);
    case Element::Kind::Bcut:
      return make_weak_neg(to_formula(e.contents));
    case Element::Kind::Ccut: {
      const Graph& c = e.contents;
      if (c.empty()) return make_class_neg(make_top());
      if (c.size() == 1) return make_class_neg(element_formula(c[0]));
      if (c.back().kind == Element::Kind::Ccut) {
        Graph antecedent(c.begin(), c.end() - 1);
        return make_impl(to_formula(antecedent), to_formula(c.back().contents));
      }
      return make_class_neg(to_formula(c));
    }
  }
  return make_top();
}

bool semantically_equivalent(const Formula& a, const Formula& b, int max_worlds) {
  std::vector<std::string> atoms = atoms_of(a);
  for (const std::string& s : atoms_of(b))
    if (!std::binary_search(atoms.begin(), atoms.end(), s)) atoms.push_back(s);
  std::sort(atoms.begin(), atoms.end());
  for (const FrameSkeleton& sk : enumerate_frames(max_worlds, FrameClass::t())) {
    BulkTruth ta = eval_all_valuations(sk, atoms, a);
    BulkTruth tb = eval_all_valuations(sk, atoms, b);
    if (ta.bits != tb.bits) return false;
  }
  return true;
}

RoundTripReport roundtrip_formula(const Formula& f, int max_worlds) {
  Formula back = to_formula(to_graph(f));
  RoundTripReport r;
  r.syntactic_identity = (back == f);
  r.ac_identity = r.syntactic_identity;
  r.semantic_equiv = semantically_equivalent(f, back, max_worlds);
  return r;
}

RoundTripReport roundtrip_graph(const Graph& g, int max_worlds) {
  Graph back = to_graph(to_formula(g));
  RoundTripReport r;
  r.syntactic_identity = (back == g);
  r.ac_identity = ac_equal(back, g);
  r.semantic_equiv = semantically_equivalent(to_formula(g), to_formula(back), max_worlds);
  return r;
}

namespace {

// True when to_graph(f) is a single continuous-cut element.
bool maps_to_ccut(const Formula& f) {
  return f.kind == FKind::ClassNeg || f.kind == FKind::Impl;
}

}  // namespace

bool t1_canonical(const Formula& f) {
  switch (f.kind) {
    case FKind::Atom:
    case FKind::Top:
      return true;
    case FKind::WeakNeg:
      return t1_canonical(f.operand());
    case FKind::ClassNeg: {
      const Formula& x = f.operand();
      // Reject ~(... & C) where C maps to a continuous cut: the translated
      // contents end in a cut and rule (iii) re-reads them as a conditional.
      if (x.kind == FKind::Conj && maps_to_ccut(x.rhs())) return false;
      return t1_canonical(x);
    }
    case FKind::Impl:
      if (f.lhs().kind == FKind::Top || f.rhs().kind == FKind::Top) return false;
      return t1_canonical(f.lhs()) && t1_canonical(f.rhs());
    case FKind::Conj:
      if (f.lhs().kind == FKind::Top || f.rhs().kind == FKind::Top) return false;
      if (f.rhs().kind == FKind::Conj) return false;  // left association only
      return t1_canonical(f.lhs()) && t1_canonical(f.rhs());
  }
  return true;
}

}  // namespace gt
