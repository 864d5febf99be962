#include "indsub/property.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <cstring>
#include <fstream>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

namespace indsub {

ParseError::ParseError(int line, int column, const std::string& msg)
    : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                 msg),
      line_(line),
      column_(column) {}

// ------------------------------------------------------------------ lexer

namespace {

enum class Tok { Ident, Int, Slash, LParen, RParen, Comma, Le, Ge, EqEq, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  SourcePos pos;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  // tolerate a UTF-8 byte-order mark
  if (s.substr(0, 3) == "\xEF\xBB\xBF") i = 3;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token t;
    t.pos = {line, col};
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      t.kind = Tok::Ident;
      t.text = std::string(s.substr(i, j - i));
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      t.kind = Tok::Int;
      t.text = std::string(s.substr(i, j - i));
      advance(j - i);
    } else if (s.substr(i, 2) == "<=") {
      t.kind = Tok::Le;
      t.text = "<=";
      advance(2);
    } else if (s.substr(i, 2) == ">=") {
      t.kind = Tok::Ge;
      t.text = ">=";
      advance(2);
    } else if (s.substr(i, 2) == "==") {
      t.kind = Tok::EqEq;
      t.text = "==";
      advance(2);
    } else if (c == '/' || c == '(' || c == ')' || c == ',') {
      t.kind = c == '/' ? Tok::Slash : c == '(' ? Tok::LParen : c == ')' ? Tok::RParen : Tok::Comma;
      t.text = std::string(1, c);
      advance(1);
    } else {
      throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.kind = Tok::End;
  end.pos = {line, col};
  out.push_back(end);
  return out;
}

using NodePtr = std::shared_ptr<const PropertyNode>;

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  NodePtr parse() {
    NodePtr e = parse_or();
    if (peek().kind != Tok::End) fail(peek(), "unexpected '" + peek().text + "' after expression");
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw ParseError(t.pos.line, t.pos.column, msg);
  }
  bool is_keyword(const char* kw) const {
    return peek().kind == Tok::Ident && peek().text == kw;
  }
  const Token& expect(Tok kind, const char* what) {
    if (peek().kind != kind) {
      fail(peek(), std::string("expected ") + what +
                       (peek().kind == Tok::End ? " but reached end of input"
                                                : ", found '" + peek().text + "'"));
    }
    return next();
  }
  void expect_ident(const char* word) {
    if (!is_keyword(word)) {
      fail(peek(), std::string("expected '") + word + "'" +
                       (peek().kind == Tok::End ? " but reached end of input"
                                                : ", found '" + peek().text + "'"));
    }
    next();
  }
  std::int64_t parse_int(const Token& t) {
    if (t.text.size() > 15) fail(t, "integer literal too large");
    return std::stoll(t.text);
  }

  NodePtr binary(NodeKind kind, NodePtr l, NodePtr r, SourcePos pos) {
    auto n = std::make_shared<PropertyNode>();
    n->kind = kind;
    n->lhs = std::move(l);
    n->rhs = std::move(r);
    n->pos = pos;
    return n;
  }

  NodePtr parse_or() {
    NodePtr left = parse_and();
    while (is_keyword("or")) {
      SourcePos pos = next().pos;
      left = binary(NodeKind::Or, left, parse_and(), pos);
    }
    return left;
  }

  NodePtr parse_and() {
    NodePtr left = parse_term();
    while (is_keyword("and")) {
      SourcePos pos = next().pos;
      left = binary(NodeKind::And, left, parse_term(), pos);
    }
    return left;
  }

  NodePtr parse_term() {
    if (is_keyword("not")) {
      SourcePos pos = next().pos;
      auto n = std::make_shared<PropertyNode>();
      n->kind = NodeKind::Not;
      n->lhs = parse_term();
      n->pos = pos;
      return n;
    }
    if (peek().kind == Tok::LParen) {
      next();
      NodePtr e = parse_or();
      expect(Tok::RParen, "')'");
      return e;
    }
    return parse_atom();
  }

  void parse_rational(PropertyNode& n) {
    const Token& a = expect(Tok::Int, "a rational constant");
    n.num = parse_int(a);
    n.den = 1;
    if (peek().kind == Tok::Slash) {
      next();
      const Token& b = expect(Tok::Int, "a denominator");
      n.den = parse_int(b);
      if (n.den == 0) fail(b, "malformed rational: zero denominator");
    }
    expect_ident("n");
  }

  NodePtr parse_atom() {
    const Token& t = peek();
    if (t.kind != Tok::Ident) {
      fail(t, t.kind == Tok::End ? "expected a property atom but reached end of input"
                                 : "expected a property atom, found '" + t.text + "'");
    }
    next();
    auto n = std::make_shared<PropertyNode>();
    n->kind = NodeKind::Atom;
    n->pos = t.pos;
    const std::string& w = t.text;
    if (w == "connected") {
      n->atom = AtomKind::Connected;
    } else if (w == "disconnected") {
      n->atom = AtomKind::Disconnected;
    } else if (w == "bipartite") {
      n->atom = AtomKind::Bipartite;
    } else if (w == "clique") {
      n->atom = AtomKind::Clique;
    } else if (w == "independent") {
      n->atom = AtomKind::Independent;
    } else if (w == "edge_parity") {
      n->atom = AtomKind::EdgeParity;
      expect(Tok::LParen, "'('");
      if (is_keyword("even")) {
        n->even = true;
      } else if (is_keyword("odd")) {
        n->even = false;
      } else {
        fail(peek(), "expected 'even' or 'odd'");
      }
      next();
      expect(Tok::RParen, "')'");
    } else if (w == "max_degree") {
      n->atom = AtomKind::MaxDegree;
      expect(Tok::Le, "'<='");
      parse_rational(*n);
    } else if (w == "diam") {
      n->atom = AtomKind::Diam;
      expect(Tok::Ge, "'>='");
      parse_rational(*n);
    } else if (w == "has_independent_set") {
      n->atom = AtomKind::HasIndependentSet;
      expect(Tok::LParen, "'('");
      n->value = parse_int(expect(Tok::Int, "an integer"));
      expect(Tok::RParen, "')'");
    } else if (w == "num_edges") {
      n->atom = AtomKind::NumEdges;
      const Token& op = next();
      if (op.kind == Tok::Le) {
        n->cmp = Cmp::Le;
      } else if (op.kind == Tok::Ge) {
        n->cmp = Cmp::Ge;
      } else if (op.kind == Tok::EqEq) {
        n->cmp = Cmp::Eq;
      } else {
        fail(op, "expected '<=', '>=' or '=='");
      }
      n->value = parse_int(expect(Tok::Int, "an integer"));
    } else if (w == "vertex_count_in") {
      n->atom = AtomKind::VertexCountIn;
      expect(Tok::LParen, "'('");
      n->vertex_counts.push_back(static_cast<int>(parse_int(expect(Tok::Int, "an integer"))));
      while (peek().kind == Tok::Comma) {
        next();
        n->vertex_counts.push_back(static_cast<int>(parse_int(expect(Tok::Int, "an integer"))));
      }
      expect(Tok::RParen, "')'");
      std::sort(n->vertex_counts.begin(), n->vertex_counts.end());
    } else {
      fail(t, "unknown atom '" + w + "'");
    }
    return n;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// ------------------------------------------------------------- evaluation

using AdjBuf = std::array<VertexMask, kMaxVertices>;

int edge_count(std::span<const VertexMask> adj) {
  int twice = 0;
  for (auto a : adj) twice += std::popcount(a);
  return twice / 2;
}

// BFS from s; returns reached set.
VertexMask component(std::span<const VertexMask> adj, int s) {
  VertexMask seen = vertex_bit(s), frontier = seen;
  while (frontier) {
    VertexMask next = 0;
    for (VertexMask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen;
}

bool connected(std::span<const VertexMask> adj) {
  const int n = static_cast<int>(adj.size());
  if (n <= 1) return true;
  return component(adj, 0) == all_vertices(n);
}

bool bipartite(std::span<const VertexMask> adj) {
  const int n = static_cast<int>(adj.size());
  VertexMask remaining = all_vertices(n);
  while (remaining) {
    const int s = std::countr_zero(remaining);
    VertexMask side[2] = {vertex_bit(s), 0};
    VertexMask seen = side[0], frontier = side[0];
    int parity = 0;
    while (frontier) {
      VertexMask next = 0;
      for (VertexMask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
      if (next & side[parity]) return false;
      next &= ~seen;
      parity ^= 1;
      side[parity] |= next;
      seen |= next;
      frontier = next;
    }
    remaining &= ~seen;
  }
  return true;
}

// Some eccentricity e with e*den >= num*n; disconnected counts as infinite.
bool diam_at_least(std::span<const VertexMask> adj, std::int64_t num, std::int64_t den) {
  const int n = static_cast<int>(adj.size());
  if (!connected(adj)) return true;
  const std::int64_t need = num * n;
  if (need <= 0) return true;
  for (int s = 0; s < n; ++s) {
    VertexMask seen = vertex_bit(s), frontier = seen;
    std::int64_t ecc = 0;
    while (true) {
      VertexMask next = 0;
      for (VertexMask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
      next &= ~seen;
      if (!next) break;
      ++ecc;
      seen |= next;
      frontier = next;
    }
    if (ecc * den >= need) return true;
  }
  return false;
}

bool independent_set_search(std::span<const VertexMask> adj, VertexMask cands, std::int64_t need) {
  if (need <= 0) return true;
  if (std::popcount(cands) < need) return false;
  const int v = std::countr_zero(cands);
  const VertexMask rest = cands & ~vertex_bit(v);
  if (independent_set_search(adj, rest & ~adj[v], need - 1)) return true;
  return independent_set_search(adj, rest, need);
}

bool eval_atom(const PropertyNode& a, std::span<const VertexMask> adj) {
  const int n = static_cast<int>(adj.size());
  switch (a.atom) {
    case AtomKind::Connected:
      return connected(adj);
    case AtomKind::Disconnected:
      return !connected(adj);
    case AtomKind::Bipartite:
      return bipartite(adj);
    case AtomKind::Clique:
      for (int v = 0; v < n; ++v)
        if (adj[v] != (all_vertices(n) & ~vertex_bit(v))) return false;
      return true;
    case AtomKind::Independent:
      return std::all_of(adj.begin(), adj.end(), [](VertexMask m) { return m == 0; });
    case AtomKind::EdgeParity:
      return (edge_count(adj) % 2 == 0) == a.even;
    case AtomKind::MaxDegree: {
      int maxd = 0;
      for (auto m : adj) maxd = std::max(maxd, std::popcount(m));
      return static_cast<std::int64_t>(maxd) * a.den <= a.num * n;
    }
    case AtomKind::Diam:
      return diam_at_least(adj, a.num, a.den);
    case AtomKind::HasIndependentSet:
      return independent_set_search(adj, all_vertices(n), a.value);
    case AtomKind::NumEdges: {
      const std::int64_t e = edge_count(adj);
      return a.cmp == Cmp::Le ? e <= a.value : a.cmp == Cmp::Ge ? e >= a.value : e == a.value;
    }
    case AtomKind::VertexCountIn:
      return std::binary_search(a.vertex_counts.begin(), a.vertex_counts.end(), n);
  }
  return false;
}

bool eval_node(const PropertyNode& node, std::span<const VertexMask> adj) {
  switch (node.kind) {
    case NodeKind::Atom:
      return eval_atom(node, adj);
    case NodeKind::Not:
      return !eval_node(*node.lhs, adj);
    case NodeKind::And:
      return eval_node(*node.lhs, adj) && eval_node(*node.rhs, adj);
    case NodeKind::Or:
      return eval_node(*node.lhs, adj) || eval_node(*node.rhs, adj);
    case NodeKind::Complement: {
      const int n = static_cast<int>(adj.size());
      AdjBuf buf;
      for (int v = 0; v < n; ++v) buf[v] = ~adj[v] & all_vertices(n) & ~vertex_bit(v);
      return eval_node(*node.lhs, std::span<const VertexMask>(buf.data(), n));
    }
    case NodeKind::Shift: {
      const int n = static_cast<int>(adj.size());
      const int h = node.shift.num_vertices();
      if (n + h > kMaxVertices) throw CapacityError("shifted graph exceeds 64 vertices");
      AdjBuf buf;
      std::copy(adj.begin(), adj.end(), buf.begin());
      for (int v = 0; v < h; ++v) buf[n + v] = node.shift.neighbors(v) << n;
      return eval_node(*node.lhs, std::span<const VertexMask>(buf.data(), n + h));
    }
  }
  return false;
}

// bit 0: closed under edge deletion, bit 1: closed under edge addition
int polarity(const PropertyNode& node) {
  constexpr int M = 1, A = 2;
  auto flip = [](int p) { return ((p & 1) << 1) | ((p >> 1) & 1); };
  switch (node.kind) {
    case NodeKind::Atom:
      switch (node.atom) {
        case AtomKind::Connected:
        case AtomKind::Clique:
          return A;
        case AtomKind::Disconnected:
        case AtomKind::Bipartite:
        case AtomKind::Independent:
        case AtomKind::MaxDegree:
        case AtomKind::Diam:
        case AtomKind::HasIndependentSet:
          return M;
        case AtomKind::EdgeParity:
          return 0;
        case AtomKind::NumEdges:
          return node.cmp == Cmp::Le ? M : node.cmp == Cmp::Ge ? A : 0;
        case AtomKind::VertexCountIn:
          return M | A;
      }
      return 0;
    case NodeKind::Not:
    case NodeKind::Complement:
      return flip(polarity(*node.lhs));
    case NodeKind::And:
    case NodeKind::Or:
      return polarity(*node.lhs) & polarity(*node.rhs);
    case NodeKind::Shift:
      return polarity(*node.lhs);
  }
  return 0;
}

std::string rational_text(const PropertyNode& n) {
  return n.den == 1 ? std::to_string(n.num) : std::to_string(n.num) + "/" + std::to_string(n.den);
}

std::string node_text(const PropertyNode& node) {
  switch (node.kind) {
    case NodeKind::Atom:
      switch (node.atom) {
        case AtomKind::Connected:
          return "connected";
        case AtomKind::Disconnected:
          return "disconnected";
        case AtomKind::Bipartite:
          return "bipartite";
        case AtomKind::Clique:
          return "clique";
        case AtomKind::Independent:
          return "independent";
        case AtomKind::EdgeParity:
          return node.even ? "edge_parity(even)" : "edge_parity(odd)";
        case AtomKind::MaxDegree:
          return "max_degree <= " + rational_text(node) + " n";
        case AtomKind::Diam:
          return "diam >= " + rational_text(node) + " n";
        case AtomKind::HasIndependentSet:
          return "has_independent_set(" + std::to_string(node.value) + ")";
        case AtomKind::NumEdges:
          return std::string("num_edges ") +
                 (node.cmp == Cmp::Le ? "<=" : node.cmp == Cmp::Ge ? ">=" : "==") + " " +
                 std::to_string(node.value);
        case AtomKind::VertexCountIn: {
          std::string s = "vertex_count_in(";
          for (std::size_t i = 0; i < node.vertex_counts.size(); ++i)
            s += (i ? "," : "") + std::to_string(node.vertex_counts[i]);
          return s + ")";
        }
      }
      return "?";
    case NodeKind::Not:
      return "not " + node_text(*node.lhs);
    case NodeKind::And:
      return "(" + node_text(*node.lhs) + " and " + node_text(*node.rhs) + ")";
    case NodeKind::Or:
      return "(" + node_text(*node.lhs) + " or " + node_text(*node.rhs) + ")";
    case NodeKind::Complement:
      return "complement[" + node_text(*node.lhs) + "]";
    case NodeKind::Shift: {
      std::string s = "shift[" + node_text(*node.lhs) + "; " +
                      std::to_string(node.shift.num_vertices()) + ":";
      for (const auto& e : node.shift.edges())
        s += " " + std::to_string(e.u) + "-" + std::to_string(e.v);
      return s + "]";
    }
  }
  return "?";
}

NodePtr unary(NodeKind kind, NodePtr child) {
  auto n = std::make_shared<PropertyNode>();
  n->kind = kind;
  n->lhs = std::move(child);
  return n;
}

}  // namespace

// ----------------------------------------------------------- PropertySpec

PropertySpec::PropertySpec(std::shared_ptr<const PropertyNode> root) : root_(std::move(root)) {
  if (!root_) throw InputError("empty property");
  const int pol = polarity(*root_);
  monotone_ = pol & 1;
  antitone_ = pol & 2;
}

bool PropertySpec::evaluate(std::span<const VertexMask> adj) const {
  if (adj.size() > static_cast<std::size_t>(kMaxVertices))
    throw CapacityError("graph exceeds 64 vertices");
  return eval_node(*root_, adj);
}

std::string PropertySpec::to_string() const { return node_text(*root_); }

PropertySpec parse_property(std::string_view text) {
  return PropertySpec(Parser(lex(text)).parse());
}

PropertySpec read_property_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open property file: " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_property(ss.str());
}

PropertySpec negate(const PropertySpec& s) {
  return PropertySpec(unary(NodeKind::Not, s.root_ptr()));
}

PropertySpec complement(const PropertySpec& s) {
  return PropertySpec(unary(NodeKind::Complement, s.root_ptr()));
}

PropertySpec shift_property(const PropertySpec& s, const Graph& h) {
  auto n = std::make_shared<PropertyNode>();
  n->kind = NodeKind::Shift;
  n->lhs = s.root_ptr();
  n->shift = h;
  return PropertySpec(std::move(n));
}

const std::vector<BuiltinProperty>& builtin_properties() {
  static const std::vector<BuiltinProperty> all = {
      {"bipartite", "bipartite"},
      {"independent", "independent"},
      {"phi1", "disconnected or diam >= 1/2 n"},
      {"phi2", "bipartite or has_independent_set(3)"},
      {"phi3", "max_degree <= 3/4 n"},
      {"indset3", "has_independent_set(3)"},
  };
  return all;
}

std::optional<PropertySpec> builtin_property(std::string_view name) {
  for (const auto& b : builtin_properties())
    if (b.name == name) return parse_property(b.text);
  return std::nullopt;
}

// --------------------------------------------------------- PropertyHandle

struct PropertyHandle::State {
  explicit State(PropertySpec s) : spec(std::move(s)) {}
  PropertySpec spec;
  mutable std::shared_mutex mu;
  std::unordered_map<std::string, bool> memo;
  std::once_flag verify_once;
  bool verified = false;
};

PropertyHandle::PropertyHandle(PropertySpec spec)
    : state_(std::make_shared<State>(std::move(spec))) {}

const PropertySpec& PropertyHandle::spec() const noexcept { return state_->spec; }

bool PropertyHandle::evaluate(std::span<const VertexMask> adj) const {
  std::string key(adj.size() * sizeof(VertexMask) + 1, '\0');
  key[0] = static_cast<char>(adj.size());
  std::memcpy(key.data() + 1, adj.data(), adj.size() * sizeof(VertexMask));
  {
    std::shared_lock lock(state_->mu);
    if (auto it = state_->memo.find(key); it != state_->memo.end()) return it->second;
  }
  const bool v = state_->spec.evaluate(adj);
  std::unique_lock lock(state_->mu);
  state_->memo.emplace(std::move(key), v);
  return v;
}

std::size_t PropertyHandle::memo_size() const {
  std::shared_lock lock(state_->mu);
  return state_->memo.size();
}

bool PropertyHandle::verified_edge_monotone() const {
  std::call_once(state_->verify_once, [&] {
    state_->verified = state_->spec.declared_edge_monotone() &&
                       is_edge_monotone_upto(state_->spec, kMonotoneCheckSize).pass;
  });
  return state_->verified;
}

// ------------------------------------------------------------- meta-checks

std::vector<Edge> complete_edges(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.push_back({u, v});
  return e;
}

MonotonicityCheck is_edge_monotone_upto(const PropertySpec& s, int nmax) {
  if (nmax > 7) throw CapacityError("edge-monotonicity check is limited to 7 vertices");
  MonotonicityCheck result;
  for (int n = 1; n <= nmax && result.pass; ++n) {
    const auto edges = complete_edges(n);
    for_each_labeled_graph(n, [&](std::span<const VertexMask> adj, std::uint64_t mask) {
      if (!result.pass || !s.evaluate(adj)) return;
      AdjBuf buf;
      std::copy(adj.begin(), adj.end(), buf.begin());
      for (std::size_t i = 0; i < edges.size(); ++i) {
        if (!((mask >> i) & 1U)) continue;
        const Edge e = edges[i];
        buf[e.u] &= ~vertex_bit(e.v);
        buf[e.v] &= ~vertex_bit(e.u);
        const bool ok = s.evaluate(std::span<const VertexMask>(buf.data(), n));
        buf[e.u] |= vertex_bit(e.v);
        buf[e.v] |= vertex_bit(e.u);
        if (!ok) {
          result.pass = false;
          result.graph = Graph::from_adjacency(adj);
          result.edge = e;
          return;
        }
      }
    });
  }
  return result;
}

bool is_trivial_on(const PropertyHandle& h, int k, TrivialityPath path) {
  if (k < 0 || k > kMaxVertices) throw CapacityError("k out of range");
  bool fast = false;
  if (path == TrivialityPath::Fast) {
    if (!h.verified_edge_monotone())
      throw HypothesisError("fast triviality path needs a verified edge-monotone property");
    fast = true;
  } else if (path == TrivialityPath::Auto) {
    fast = h.verified_edge_monotone() || k > kMaxGeneralTrivialityK;
    if (fast && !h.verified_edge_monotone())
      throw CapacityError("general triviality check is limited to k <= 7");
  }
  if (fast) {
    const bool nontrivial = h.evaluate(independent_set(k)) && !h.evaluate(complete_graph(k));
    return !nontrivial;
  }
  if (k > kMaxGeneralTrivialityK) throw CapacityError("general triviality check is limited to k <= 7");
  bool seen_true = false, seen_false = false;
  for_each_labeled_graph(k, [&](std::span<const VertexMask> adj, std::uint64_t) {
    if (seen_true && seen_false) return;
    (h.evaluate_uncached(adj) ? seen_true : seen_false) = true;
  });
  return !(seen_true && seen_false);
}

}  // namespace indsub
