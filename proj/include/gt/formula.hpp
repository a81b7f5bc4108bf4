#pragma once
// The GT formula language.
//
// Stored connectives: atoms, the verum constant T, weak negation -,
// classical negation ~, the conditional -> and conjunction &.  The other
// connectives of the concrete grammar are parse-time sugar:
//
//   +X      ~-X
//   <>X     -~X
//   X | Y   ~X -> Y
//   X <-> Y (X -> Y) & (Y -> X)
//
// Classical negation and conjunction stay first-class nodes (the graph
// translation maps them to distinct shapes); expand_defined() rewrites them
// away when the fully primitive form is wanted.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gt {

enum class FKind : std::uint8_t { Atom, Top, WeakNeg, ClassNeg, Impl, Conj };

struct Formula {
  FKind kind = FKind::Top;
  std::string name;            // Atom only
  std::vector<Formula> kids;   // 1 for negations, 2 for Impl/Conj

  bool operator==(const Formula&) const = default;

  const Formula& operand() const { return kids[0]; }
  const Formula& lhs() const { return kids[0]; }
  const Formula& rhs() const { return kids[1]; }
};

Formula make_atom(std::string name);
Formula make_top();
Formula make_weak_neg(Formula x);
Formula make_class_neg(Formula x);
Formula make_impl(Formula antecedent, Formula consequent);
Formula make_conj(Formula left, Formula right);

// Thrown by the text parsers; offset is a byte offset into the source.
struct ParseError : std::runtime_error {
  std::size_t offset;
  ParseError(const std::string& what, std::size_t off)
      : std::runtime_error(what), offset(off) {}
};

// Precedence, tightest first: unary prefixes, &, |, -> (right-associative),
// <->.  & and | associate to the left.  T is the verum constant; atom names
// match [a-z][a-zA-Z0-9_]*.
Formula parse_formula(std::string_view text);

// Canonical text with minimal parentheses; parse_formula(print_formula(f))
// reproduces f.  Sugar is never printed (it is not stored).
std::string print_formula(const Formula& f);

// Fully primitive form over {Atom, T, -, ->}:
//   ~X     becomes  X -> -T
//   X & Y  becomes  ~(X -> ~Y), then the outer steps again
Formula expand_defined(const Formula& f);

// Nesting depth measure K: atoms and T are 0, negations add 1, binary
// connectives add 1 over the max of their operands.
int complexity_k(const Formula& f);

// Sorted, de-duplicated atom names occurring in f.
std::vector<std::string> atoms_of(const Formula& f);

}  // namespace gt
