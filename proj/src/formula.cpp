#include "gt/formula.hpp"

#include <algorithm>
#include <cctype>

namespace gt {

Formula make_atom(std::string name) {
  Formula f;
  f.kind = FKind::Atom;
  f.name = std::move(name);
  return f;
}

Formula make_top() { return Formula{}; }

Formula make_weak_neg(Formula x) {
  Formula f;
  f.kind = FKind::WeakNeg;
  f.kids.push_back(std::move(x));
  return f;
}

Formula make_class_neg(Formula x) {
  Formula f;
  f.kind = FKind::ClassNeg;
  f.kids.push_back(std::move(x));
  return f;
}

Formula make_impl(Formula a, Formula c) {
  Formula f;
  f.kind = FKind::Impl;
  f.kids.push_back(std::move(a));
  f.kids.push_back(std::move(c));
  return f;
}

Formula make_conj(Formula l, Formula r) {
  Formula f;
  f.kind = FKind::Conj;
  f.kids.push_back(std::move(l));
  f.kids.push_back(std::move(r));
  return f;
}

namespace {

// ── Tokenizer ──────────────────────────────────────────────────────────────

enum class Tok {
  End, Atom, Top, Dash, Tilde, Plus, Diamond, Arrow, Amp, Bar, Iff, LParen, RParen
};

struct Token {
  Tok kind;
  std::string text;   // Atom only
  std::size_t offset;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    std::size_t at = pos_;
    if (pos_ >= src_.size()) return {Tok::End, "", at};
    char c = src_[pos_];
    switch (c) {
      case '(': ++pos_; return {Tok::LParen, "", at};
      case ')': ++pos_; return {Tok::RParen, "", at};
      case '-': {
        if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
          pos_ += 2;
          return {Tok::Arrow, "", at};
        }
        ++pos_;
        return {Tok::Dash, "", at};
      }
      case '~': ++pos_; return {Tok::Tilde, "", at};
      case '+': ++pos_; return {Tok::Plus, "", at};
      case '&': ++pos_; return {Tok::Amp, "", at};
      case '|': ++pos_; return {Tok::Bar, "", at};
      case '<': {
        if (src_.compare(pos_, 3, "<->") == 0) {
          pos_ += 3;
          return {Tok::Iff, "", at};
        }
        if (src_.compare(pos_, 2, "<>") == 0) {
          pos_ += 2;
          return {Tok::Diamond, "", at};
        }
        throw ParseError("unknown token '<'", at);
      }
      default: break;
    }
    if (c == 'T' && !is_ident_tail(pos_ + 1)) {
      ++pos_;
      return {Tok::Top, "", at};
    }
    if (c >= 'a' && c <= 'z') {
      std::size_t end = pos_ + 1;
      while (end < src_.size() && is_ident_char(src_[end])) ++end;
      Token t{Tok::Atom, std::string(src_.substr(pos_, end - pos_)), at};
      pos_ = end;
      return t;
    }
    throw ParseError(std::string("unknown token '") + c + "'", at);
  }

 private:
  static bool is_ident_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  }
  bool is_ident_tail(std::size_t i) const {
    return i < src_.size() && is_ident_char(src_[i]);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

// ── Parser ─────────────────────────────────────────────────────────────────
// iff   := impl ( "<->" impl )*          left, sugar
// impl  := or ( "->" impl )?             right
// or    := and ( "|" and )*              left, sugar
// and   := unary ( "&" unary )*          left
// unary := ("-" | "~" | "+" | "<>") unary | primary
// prim  := "T" | atom | "(" iff ")"

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) { advance(); }

  Formula parse() {
    Formula f = iff();
    expect(Tok::End, "trailing input");
    return f;
  }

 private:
  void advance() { cur_ = lex_.next(); }

  void expect(Tok k, const char* what) {
    if (cur_.kind != k) throw ParseError(std::string("expected ") + what, cur_.offset);
    if (k != Tok::End) advance();
  }

  Formula iff() {
    Formula f = impl();
    while (cur_.kind == Tok::Iff) {
      advance();
      Formula g = impl();
      Formula fwd = make_impl(f, g);
      Formula bwd = make_impl(std::move(g), std::move(f));
      f = make_conj(std::move(fwd), std::move(bwd));
    }
    return f;
  }

  Formula impl() {
    Formula f = disj();
    if (cur_.kind == Tok::Arrow) {
      advance();
      return make_impl(std::move(f), impl());
    }
    return f;
  }

  Formula disj() {
    Formula f = conj();
    while (cur_.kind == Tok::Bar) {
      advance();
      f = make_impl(make_class_neg(std::move(f)), conj());
    }
    return f;
  }

  Formula conj() {
    Formula f = unary();
    while (cur_.kind == Tok::Amp) {
      advance();
      f = make_conj(std::move(f), unary());
    }
    return f;
  }

  Formula unary() {
    switch (cur_.kind) {
      case Tok::Dash: advance(); return make_weak_neg(unary());
      case Tok::Tilde: advance(); return make_class_neg(unary());
      case Tok::Plus: advance(); return make_class_neg(make_weak_neg(unary()));
      case Tok::Diamond: advance(); return make_weak_neg(make_class_neg(unary()));
      default: return primary();
    }
  }

  Formula primary() {
    switch (cur_.kind) {
      case Tok::Top: advance(); return make_top();
      case Tok::Atom: {
        Formula f = make_atom(cur_.text);
        advance();
        return f;
      }
      case Tok::LParen: {
        advance();
        Formula f = iff();
        expect(Tok::RParen, "')'");
        return f;
      }
      default:
        throw ParseError("expected formula", cur_.offset);
    }
  }

  Lexer lex_;
  Token cur_{Tok::End, "", 0};
};

// Printing precedence: Impl 1, Conj 2, unary 3, Atom/Top 4.
int level(const Formula& f) {
  switch (f.kind) {
    case FKind::Impl: return 1;
    case FKind::Conj: return 2;
    case FKind::WeakNeg:
    case FKind::ClassNeg: return 3;
    default: return 4;
  }
}

void print_into(const Formula& f, int min_level, std::string& out) {
  bool paren = level(f) < min_level;
  if (paren) out += '(';
  switch (f.kind) {
    case FKind::Atom: out += f.name; break;
    case FKind::Top: out += 'T'; break;
    case FKind::WeakNeg:
      out += '-';
      print_into(f.operand(), 3, out);
      break;
    case FKind::ClassNeg:
      out += '~';
      print_into(f.operand(), 3, out);
      break;
    case FKind::Impl:
      print_into(f.lhs(), 2, out);
      out += " -> ";
      print_into(f.rhs(), 1, out);
      break;
    case FKind::Conj:
      print_into(f.lhs(), 2, out);
      out += " & ";
      print_into(f.rhs(), 3, out);
      break;
  }
  if (paren) out += ')';
}

void collect_atoms(const Formula& f, std::vector<std::string>& out) {
  if (f.kind == FKind::Atom) out.push_back(f.name);
  for (const Formula& k : f.kids) collect_atoms(k, out);
}

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).parse(); }

std::string print_formula(const Formula& f) {
  std::string out;
  print_into(f, 0, out);
  return out;
}

Formula expand_defined(const Formula& f) {
  switch (f.kind) {
    case FKind::Atom:
    case FKind::Top:
      return f;
    case FKind::WeakNeg:
      return make_weak_neg(expand_defined(f.operand()));
    case FKind::ClassNeg:
      return make_impl(expand_defined(f.operand()), make_weak_neg(make_top()));
    case FKind::Impl:
      return make_impl(expand_defined(f.lhs()), expand_defined(f.rhs()));
    case FKind::Conj:
      // X & Y  =  ~(X -> ~Y), with the introduced ~ expanded as well.
      return expand_defined(
          make_class_neg(make_impl(f.lhs(), make_class_neg(f.rhs()))));
  }
  return f;
}

int complexity_k(const Formula& f) {
  switch (f.kind) {
    case FKind::Atom:
    case FKind::Top:
      return 0;
    case FKind::WeakNeg:
    case FKind::ClassNeg:
      return 1 + complexity_k(f.operand());
    case FKind::Impl:
    case FKind::Conj:
      return 1 + std::max(complexity_k(f.lhs()), complexity_k(f.rhs()));
  }
  return 0;
}

std::vector<std::string> atoms_of(const Formula& f) {
  std::vector<std::string> out;
  collect_atoms(f, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace gt
