#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "indsub/errors.hpp"
#include "indsub/graph.hpp"

namespace indsub {

class ParseError : public InputError {
 public:
  ParseError(int line, int column, const std::string& msg);
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

enum class NodeKind { Atom, Not, And, Or, Complement, Shift };

enum class AtomKind {
  Connected,
  Disconnected,
  Bipartite,
  Clique,
  Independent,
  EdgeParity,
  MaxDegree,
  Diam,
  HasIndependentSet,
  NumEdges,
  VertexCountIn,
};

enum class Cmp { Le, Ge, Eq };

struct SourcePos {
  int line = 0;
  int column = 0;
};

struct PropertyNode {
  NodeKind kind = NodeKind::Atom;
  AtomKind atom = AtomKind::Connected;
  // rational threshold num/den for MaxDegree and Diam
  std::int64_t num = 0;
  std::int64_t den = 1;
  // integer parameter for HasIndependentSet and NumEdges
  std::int64_t value = 0;
  Cmp cmp = Cmp::Le;
  bool even = true;
  std::vector<int> vertex_counts;
  std::shared_ptr<const PropertyNode> lhs;
  std::shared_ptr<const PropertyNode> rhs;
  Graph shift;
  SourcePos pos;
};

class PropertySpec {
 public:
  explicit PropertySpec(std::shared_ptr<const PropertyNode> root);

  bool evaluate(std::span<const VertexMask> adj) const;
  bool evaluate(const Graph& g) const { return evaluate(g.adjacency()); }

  // Syntactic polarity: closed under edge deletion.
  bool declared_edge_monotone() const noexcept { return monotone_; }
  // Syntactic polarity: closed under edge addition.
  bool declared_edge_antitone() const noexcept { return antitone_; }

  const PropertyNode& root() const noexcept { return *root_; }
  std::shared_ptr<const PropertyNode> root_ptr() const noexcept { return root_; }
  std::string to_string() const;

 private:
  std::shared_ptr<const PropertyNode> root_;
  bool monotone_ = false;
  bool antitone_ = false;
};

PropertySpec parse_property(std::string_view text);
PropertySpec read_property_file(const std::string& path);
PropertySpec negate(const PropertySpec& s);
PropertySpec complement(const PropertySpec& s);
PropertySpec shift_property(const PropertySpec& s, const Graph& h);

// Named built-ins: "bipartite", "independent", "phi1" (disconnected or
// diam >= 1/2 n), "phi2" (bipartite or has_independent_set(3)), "phi3"
// (max_degree <= 3/4 n), "indset3" (has_independent_set(3)).
struct BuiltinProperty {
  std::string name;
  std::string text;
};
const std::vector<BuiltinProperty>& builtin_properties();
std::optional<PropertySpec> builtin_property(std::string_view name);

// Shared, memoized evaluation. Copies share the memo.
class PropertyHandle {
 public:
  explicit PropertyHandle(PropertySpec spec);

  const PropertySpec& spec() const noexcept;
  bool evaluate(const Graph& g) const { return evaluate(g.adjacency()); }
  bool evaluate(std::span<const VertexMask> adj) const;
  bool evaluate_uncached(std::span<const VertexMask> adj) const {
    return spec().evaluate(adj);
  }
  std::size_t memo_size() const;

  // Declared flag confirmed by exhaustive check at n <= 6; computed once.
  bool verified_edge_monotone() const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

struct MonotonicityCheck {
  bool pass = true;
  std::optional<Graph> graph;  // first violating graph
  std::optional<Edge> edge;    // deleting it makes the property fail
};

// Graphs are enumerated by vertex count 1..nmax, then by edge mask over the
// edges of K_n in index order; edges of a graph in index order.
MonotonicityCheck is_edge_monotone_upto(const PropertySpec& s, int nmax);

inline constexpr int kMonotoneCheckSize = 6;
inline constexpr int kMaxGeneralTrivialityK = 7;

enum class TrivialityPath { Auto, Fast, General };

bool is_trivial_on(const PropertyHandle& h, int k, TrivialityPath path = TrivialityPath::Auto);

// Calls f(adjacency) for all labeled graphs on n vertices (n <= 8), by edge
// mask over K_n's edges in index order.
template <class F>
void for_each_labeled_graph(int n, F&& f);

std::vector<Edge> complete_edges(int n);

template <class F>
void for_each_labeled_graph(int n, F&& f) {
  if (n > 8) throw CapacityError("labeled graph enumeration is limited to 8 vertices");
  const auto edges = complete_edges(n);
  const std::uint64_t total = std::uint64_t{1} << edges.size();
  std::vector<VertexMask> adj(static_cast<std::size_t>(n));
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::fill(adj.begin(), adj.end(), 0);
    for (std::size_t i = 0; i < edges.size(); ++i)
      if ((mask >> i) & 1U) {
        adj[edges[i].u] |= vertex_bit(edges[i].v);
        adj[edges[i].v] |= vertex_bit(edges[i].u);
      }
    f(std::span<const VertexMask>(adj), mask);
  }
}

}  // namespace indsub
