#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace indsub {

inline constexpr int kMaxVertices = 64;
inline constexpr int kMaxIsoVertices = 10;
inline constexpr int kMaxBruteBicliqueVertices = 16;
inline constexpr int kMaxTreewidthVertices = 11;

using VertexMask = std::uint64_t;

inline VertexMask vertex_bit(int v) { return VertexMask{1} << v; }
inline VertexMask all_vertices(int n) {
  return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

struct Edge {
  int u = 0;
  int v = 0;
  auto operator<=>(const Edge&) const = default;
};

// Dynamic bitset over edge (or orbit) indices.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }
  void set(std::size_t i);
  void reset(std::size_t i);
  bool test(std::size_t i) const;
  std::size_t count() const noexcept;
  bool none() const noexcept;
  bool is_subset_of(const EdgeSet& other) const;
  bool intersects(const EdgeSet& other) const;
  std::vector<int> indices() const;

  EdgeSet& operator|=(const EdgeSet& other);
  EdgeSet& operator&=(const EdgeSet& other);
  EdgeSet& operator-=(const EdgeSet& other);
  friend EdgeSet operator|(EdgeSet a, const EdgeSet& b) { return a |= b; }
  friend EdgeSet operator&(EdgeSet a, const EdgeSet& b) { return a &= b; }
  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;
  friend auto operator<=>(const EdgeSet&, const EdgeSet&) = default;

  std::size_t hash() const noexcept;

 private:
  void check_same_universe(const EdgeSet& other) const;

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::vector<Edge> edges);
  static Graph from_adjacency(std::span<const VertexMask> adj);

  int num_vertices() const noexcept { return n_; }
  int num_edges() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const VertexMask> adjacency() const noexcept { return adj_; }
  VertexMask neighbors(int v) const { return adj_.at(v); }
  bool adjacent(int u, int v) const;
  int degree(int v) const;
  std::optional<int> edge_index(int u, int v) const;
  EdgeSet full_edge_set() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexMask> adj_;
};

Graph independent_set(int n);
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_bipartite(int a, int b);

Graph edge_subgraph(const Graph& g, const EdgeSet& mask);
Graph edge_subgraph(const Graph& g, std::uint64_t mask);
bool is_edge_subgraph_of(const Graph& sub, const Graph& g);
// Edge set of `sub` as indices into host's edge list; input error if `sub` is
// not an edge-subgraph of host.
EdgeSet host_edge_set(const Graph& host, const Graph& sub);
Graph induced_subgraph(const Graph& g, VertexMask vertices);
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);
Graph complement(const Graph& g);
// Vertex v of g becomes perm[v].
Graph relabel(const Graph& g, std::span<const int> perm);
Graph edge_union(const Graph& a, const Graph& b);

Graph inhabited_graph(const Graph& c, std::span<const Graph> parts);
Graph disjoint_union(std::span<const Graph> parts);
Graph disjoint_union(const Graph& a, const Graph& b);
Graph join(std::span<const Graph> parts);
Graph lexicographic_product(std::span<const Graph> parts);

bool are_isomorphic(const Graph& g1, const Graph& g2);

struct BicliqueCertificate {
  VertexMask left = 0;
  VertexMask right = 0;
};
// Checks that left and right are disjoint, each has at least a vertices,
// and every left-right pair is an edge. Works at any size.
bool verify_biclique(const Graph& g, const BicliqueCertificate& cert, int a);
// Brute force; n <= 16.
bool contains_biclique(const Graph& g, int a);
// Structural path: accepted when the certificate checks out, otherwise falls
// back to brute force (capacity error beyond 16 vertices).
bool contains_biclique(const Graph& g, int a, const BicliqueCertificate& cert);
// Lexicographically first (A,B) split with |A|=|B|=a, A and B sorted.
std::optional<std::pair<std::vector<int>, std::vector<int>>> find_biclique_split(
    const Graph& g, int a);

// g colored by pattern: coloring[v] is a pattern vertex, and every edge of
// g maps to an edge of pattern.
struct ColoredGraph {
  Graph g;
  Graph pattern;
  std::vector<int> coloring;
};
// Input error unless the coloring is a homomorphism g -> pattern.
ColoredGraph make_colored_graph(Graph g, Graph pattern, std::vector<int> coloring);

int treewidth_exact(const Graph& g);
std::optional<int> regular_degree(const Graph& g);
bool is_connected(const Graph& g);

// Tuple index: a_1 is the most significant base-p digit.
std::vector<int> forward_revolution(int p, int m);

Graph parse_graph(std::string_view text);
std::string format_graph(const Graph& g);
Graph read_graph_file(const std::string& path);

// Calls f(std::span<const int>) for every size-k subset of [0,n) in
// lexicographic order of sorted index lists.
template <class F>
void for_each_combination(int n, int k, F&& f) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(std::span<const int>(idx));
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace indsub
