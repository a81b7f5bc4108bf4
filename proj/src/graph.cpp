#include "gt/graph.hpp"

#include <algorithm>
#include <cctype>

namespace gt {

Element make_gatom(std::string name) {
  Element e;
  e.kind = Element::Kind::Atom;
  e.name = std::move(name);
  return e;
}

Element make_ccut(Graph contents) {
  Element e;
  e.kind = Element::Kind::Ccut;
  e.contents = std::move(contents);
  return e;
}

Element make_bcut(Graph contents) {
  Element e;
  e.kind = Element::Kind::Bcut;
  e.contents = std::move(contents);
  return e;
}

namespace {

bool is_ident_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

class GraphParser {
 public:
  explicit GraphParser(std::string_view src) : src_(src) {}

  Graph parse() {
    Graph g = sequence();
    skip_ws();
    if (pos_ < src_.size())
      throw ParseError(std::string("unexpected '") + src_[pos_] + "'", pos_);
    return g;
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  Graph sequence() {
    Graph g;
    for (;;) {
      skip_ws();
      if (pos_ >= src_.size()) return g;
      char c = src_[pos_];
      if (c == ')' || c == '}') return g;
      if (c == '(') {
        std::size_t at = pos_++;
        Graph inner = sequence();
        skip_ws();
        if (pos_ >= src_.size() || src_[pos_] != ')')
          throw ParseError("unbalanced '('", at);
        ++pos_;
        g.push_back(make_ccut(std::move(inner)));
        continue;
      }
      if (c == '{') {
        std::size_t at = pos_++;
        Graph inner = sequence();
        skip_ws();
        if (pos_ >= src_.size() || src_[pos_] != '}')
          throw ParseError("unbalanced '{'", at);
        ++pos_;
        g.push_back(make_bcut(std::move(inner)));
        continue;
      }
      if (c >= 'a' && c <= 'z') {
        std::size_t end = pos_ + 1;
        while (end < src_.size() && is_ident_char(src_[end])) ++end;
        g.push_back(make_gatom(std::string(src_.substr(pos_, end - pos_))));
        pos_ = end;
        continue;
      }
      throw ParseError(std::string("bad atom or delimiter '") + c + "'", pos_);
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

void print_element(const Element& e, std::string& out);

void print_seq(const Graph& g, std::string& out) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) out += ' ';
    print_element(g[i], out);
  }
}

void print_element(const Element& e, std::string& out) {
  switch (e.kind) {
    case Element::Kind::Atom:
      out += e.name;
      break;
    case Element::Kind::Ccut:
      out += '(';
      print_seq(e.contents, out);
      out += ')';
      break;
    case Element::Kind::Bcut:
      out += '{';
      print_seq(e.contents, out);
      out += '}';
      break;
  }
}

int compare_graphs(const Graph& a, const Graph& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = compare_elements(a[i], b[i]);
    if (c != 0) return c;
  }
  if (a.size() < b.size()) return -1;
  if (a.size() > b.size()) return 1;
  return 0;
}

}  // namespace

Graph parse_graph(std::string_view text) { return GraphParser(text).parse(); }

std::string print_graph(const Graph& g) {
  std::string out;
  print_seq(g, out);
  return out;
}

int compare_elements(const Element& a, const Element& b) {
  auto rank = [](const Element& e) {
    switch (e.kind) {
      case Element::Kind::Atom: return 0;
      case Element::Kind::Ccut: return 1;
      case Element::Kind::Bcut: return 2;
    }
    return 0;
  };
  if (rank(a) != rank(b)) return rank(a) < rank(b) ? -1 : 1;
  if (a.kind == Element::Kind::Atom) return a.name.compare(b.name);
  return compare_graphs(a.contents, b.contents);
}

Graph canonical_form(const Graph& g) {
  Graph out;
  out.reserve(g.size());
  for (const Element& e : g) {
    if (e.is_cut()) {
      Element c = e;
      c.contents = canonical_form(e.contents);
      out.push_back(std::move(c));
    } else {
      out.push_back(e);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Element& a, const Element& b) { return compare_elements(a, b) < 0; });
  return out;
}

bool ac_equal(const Graph& a, const Graph& b) {
  return canonical_form(a) == canonical_form(b);
}

bool ac_equal(const Element& a, const Element& b) {
  return ac_equal(Graph{a}, Graph{b});
}

int complexity_c(const Element& e) {
  if (!e.is_cut()) return 0;
  return 1 + complexity_c(e.contents);
}

int complexity_c(const Graph& g) {
  if (g.empty()) return 0;
  int m = 0;
  for (const Element& e : g) m = std::max(m, complexity_c(e));
  return g.size() >= 2 ? 1 + m : m;
}

int node_count(const Element& e) {
  return 1 + (e.is_cut() ? node_count(e.contents) : 0);
}

int node_count(const Graph& g) {
  int n = 0;
  for (const Element& e : g) n += node_count(e);
  return n;
}

bool is_strong(const Element& e) {
  return e.kind == Element::Kind::Ccut && e.contents.size() == 1 &&
         e.contents[0].kind == Element::Kind::Bcut;
}

ContextReport region_context(const Graph& g, const Position& pos) {
  ContextReport r;
  const Graph* cur = &g;
  for (int idx : pos.path) {
    if (idx < 0 || static_cast<std::size_t>(idx) >= cur->size())
      throw PositionError("dangling path: element index out of range");
    const Element& e = (*cur)[idx];
    if (!e.is_cut()) throw PositionError("dangling path: path steps into an atom");
    r.kinds.push_back(e.kind == Element::Kind::Ccut ? CutKind::Continuous : CutKind::Broken);
    cur = &e.contents;
  }
  r.odd_parity = (r.kinds.size() % 2) == 1;
  r.one_cq = std::any_of(r.kinds.begin(), r.kinds.end(),
                         [](CutKind k) { return k == CutKind::Broken; });
  r.ncc = !r.one_cq;
  return r;
}

const Graph& region_at(const Graph& g, const Position& pos) {
  const Graph* cur = &g;
  for (int idx : pos.path) {
    if (idx < 0 || static_cast<std::size_t>(idx) >= cur->size())
      throw PositionError("dangling path: element index out of range");
    const Element& e = (*cur)[idx];
    if (!e.is_cut()) throw PositionError("dangling path: path steps into an atom");
    cur = &e.contents;
  }
  return *cur;
}

Graph with_region(const Graph& g, const Position& pos, Graph contents) {
  if (pos.path.empty()) return contents;
  Graph out = g;
  Graph* cur = &out;
  for (std::size_t i = 0; i + 1 < pos.path.size(); ++i) {
    int idx = pos.path[i];
    if (idx < 0 || static_cast<std::size_t>(idx) >= cur->size())
      throw PositionError("dangling path: element index out of range");
    Element& e = (*cur)[idx];
    if (!e.is_cut()) throw PositionError("dangling path: path steps into an atom");
    cur = &e.contents;
  }
  int last = pos.path.back();
  if (last < 0 || static_cast<std::size_t>(last) >= cur->size())
    throw PositionError("dangling path: element index out of range");
  Element& e = (*cur)[last];
  if (!e.is_cut()) throw PositionError("dangling path: path steps into an atom");
  e.contents = std::move(contents);
  return out;
}

namespace {

void regions_into(const Graph& g, Position& cur, std::vector<Position>& out) {
  out.push_back(cur);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i].is_cut()) {
      cur.path.push_back(static_cast<int>(i));
      regions_into(g[i].contents, cur, out);
      cur.path.pop_back();
    }
  }
}

}  // namespace

std::vector<Position> all_regions(const Graph& g) {
  std::vector<Position> out;
  Position cur;
  regions_into(g, cur, out);
  return out;
}

}  // namespace gt
