#include "indsub/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

#include "indsub/bigint.hpp"
#include "indsub/errors.hpp"

namespace indsub {

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

// ---------------------------------------------------------------- EdgeSet

EdgeSet::EdgeSet(std::size_t universe)
    : universe_(universe), words_((universe + 63) / 64, 0) {}

void EdgeSet::set(std::size_t i) {
  if (i >= universe_) throw InputError("edge index out of range");
  words_[i / 64] |= std::uint64_t{1} << (i % 64);
}

void EdgeSet::reset(std::size_t i) {
  if (i >= universe_) throw InputError("edge index out of range");
  words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
}

bool EdgeSet::test(std::size_t i) const {
  if (i >= universe_) return false;
  return (words_[i / 64] >> (i % 64)) & 1U;
}

std::size_t EdgeSet::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool EdgeSet::none() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

void EdgeSet::check_same_universe(const EdgeSet& other) const {
  if (universe_ != other.universe_) throw InputError("edge sets over different universes");
}

bool EdgeSet::is_subset_of(const EdgeSet& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

bool EdgeSet::intersects(const EdgeSet& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & other.words_[i]) return true;
  return false;
}

std::vector<int> EdgeSet::indices() const {
  std::vector<int> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits) {
      out.push_back(static_cast<int>(w * 64 + std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

EdgeSet& EdgeSet::operator|=(const EdgeSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

EdgeSet& EdgeSet::operator&=(const EdgeSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

EdgeSet& EdgeSet::operator-=(const EdgeSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::size_t EdgeSet::hash() const noexcept {
  std::size_t h = universe_;
  for (auto w : words_) h = h * 0x9E3779B97F4A7C15ULL ^ std::hash<std::uint64_t>{}(w);
  return h;
}

// ------------------------------------------------------------------ Graph

namespace {

void check_vertex_count(int n) {
  if (n < 0) throw InputError("negative vertex count");
  if (n > kMaxVertices) throw CapacityError("graph exceeds 64 vertices");
}

}  // namespace

Graph::Graph(int n) : n_(n) {
  check_vertex_count(n);
  adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, std::vector<Edge> edges) : Graph(n) {
  for (auto& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      throw InputError("edge endpoint out of range");
    if (e.u == e.v) throw InputError("loops are not allowed");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw InputError("parallel edges are not allowed");
  for (const auto& e : edges) {
    adj_[e.u] |= vertex_bit(e.v);
    adj_[e.v] |= vertex_bit(e.u);
  }
  edges_ = std::move(edges);
}

Graph Graph::from_adjacency(std::span<const VertexMask> adj) {
  const int n = static_cast<int>(adj.size());
  check_vertex_count(n);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    if (adj[u] & vertex_bit(u)) throw InputError("loops are not allowed");
    if (adj[u] & ~all_vertices(n)) throw InputError("neighbor out of range");
    VertexMask higher = adj[u] & ~all_vertices(u + 1);
    while (higher) {
      int v = std::countr_zero(higher);
      higher &= higher - 1;
      if (!(adj[v] & vertex_bit(u))) throw InputError("adjacency is not symmetric");
      edges.push_back({u, v});
    }
  }
  return Graph(n, std::move(edges));
}

bool Graph::adjacent(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  return (adj_[u] >> v) & 1U;
}

int Graph::degree(int v) const { return std::popcount(adj_.at(v)); }

std::optional<int> Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
  if (it == edges_.end() || *it != Edge{u, v}) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

EdgeSet Graph::full_edge_set() const {
  EdgeSet s(edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) s.set(i);
  return s;
}

Graph independent_set(int n) { return Graph(n); }

Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.push_back({u, v});
  return Graph(n, std::move(e));
}

Graph cycle_graph(int n) {
  if (n < 3) throw InputError("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return Graph(n, std::move(e));
}

Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph(n, std::move(e));
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> e;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) e.push_back({u, a + v});
  return Graph(a + b, std::move(e));
}

Graph edge_subgraph(const Graph& g, const EdgeSet& mask) {
  if (mask.universe() != static_cast<std::size_t>(g.num_edges()))
    throw InputError("edge mask does not match the parent's edge count");
  std::vector<Edge> e;
  for (int i : mask.indices()) e.push_back(g.edges()[i]);
  return Graph(g.num_vertices(), std::move(e));
}

Graph edge_subgraph(const Graph& g, std::uint64_t mask) {
  if (g.num_edges() < 64 && (mask >> g.num_edges()) != 0)
    throw InputError("edge mask out of range");
  std::vector<Edge> e;
  for (int i = 0; i < g.num_edges() && i < 64; ++i)
    if ((mask >> i) & 1U) e.push_back(g.edges()[i]);
  return Graph(g.num_vertices(), std::move(e));
}

bool is_edge_subgraph_of(const Graph& sub, const Graph& g) {
  if (sub.num_vertices() != g.num_vertices()) return false;
  for (int v = 0; v < sub.num_vertices(); ++v)
    if (sub.neighbors(v) & ~g.neighbors(v)) return false;
  return true;
}

EdgeSet host_edge_set(const Graph& host, const Graph& sub) {
  if (sub.num_vertices() != host.num_vertices()) throw InputError("vertex count mismatch");
  EdgeSet s(host.num_edges());
  for (const auto& e : sub.edges()) {
    auto idx = host.edge_index(e.u, e.v);
    if (!idx) throw InputError("graph is not an edge-subgraph of the host");
    s.set(*idx);
  }
  return s;
}

Graph induced_subgraph(const Graph& g, VertexMask vertices) {
  if (vertices & ~all_vertices(g.num_vertices())) throw InputError("vertex out of range");
  std::vector<int> vs;
  for (VertexMask m = vertices; m; m &= m - 1) vs.push_back(std::countr_zero(m));
  return induced_subgraph(g, vs);
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  std::vector<int> vs(vertices.begin(), vertices.end());
  std::sort(vs.begin(), vs.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
    throw InputError("duplicate vertex in induced subgraph");
  for (int v : vs)
    if (v < 0 || v >= g.num_vertices()) throw InputError("vertex out of range");
  std::vector<Edge> e;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (g.adjacent(vs[i], vs[j])) e.push_back({static_cast<int>(i), static_cast<int>(j)});
  return Graph(static_cast<int>(vs.size()), std::move(e));
}

Graph complement(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<VertexMask> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = ~g.neighbors(v) & all_vertices(n) & ~vertex_bit(v);
  return Graph::from_adjacency(adj);
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  const int n = g.num_vertices();
  if (static_cast<int>(perm.size()) != n) throw InputError("permutation size mismatch");
  std::vector<bool> seen(n, false);
  for (int x : perm) {
    if (x < 0 || x >= n || seen[x]) throw InputError("not a permutation");
    seen[x] = true;
  }
  std::vector<Edge> e;
  for (const auto& ed : g.edges()) e.push_back({perm[ed.u], perm[ed.v]});
  return Graph(n, std::move(e));
}

Graph edge_union(const Graph& a, const Graph& b) {
  if (a.num_vertices() != b.num_vertices()) throw InputError("vertex count mismatch");
  std::vector<VertexMask> adj(a.num_vertices());
  for (int v = 0; v < a.num_vertices(); ++v) adj[v] = a.neighbors(v) | b.neighbors(v);
  return Graph::from_adjacency(adj);
}

Graph inhabited_graph(const Graph& c, std::span<const Graph> parts) {
  if (static_cast<int>(parts.size()) != c.num_vertices())
    throw InputError("inhabited graph needs one part per pattern vertex");
  std::vector<int> offset(parts.size() + 1, 0);
  for (std::size_t i = 0; i < parts.size(); ++i)
    offset[i + 1] = offset[i] + parts[i].num_vertices();
  if (offset.back() > kMaxVertices) throw CapacityError("inhabited graph exceeds 64 vertices");
  std::vector<Edge> e;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (const auto& ed : parts[i].edges()) e.push_back({offset[i] + ed.u, offset[i] + ed.v});
  for (const auto& ce : c.edges())
    for (int u = 0; u < parts[ce.u].num_vertices(); ++u)
      for (int v = 0; v < parts[ce.v].num_vertices(); ++v)
        e.push_back({offset[ce.u] + u, offset[ce.v] + v});
  return Graph(offset.back(), std::move(e));
}

Graph disjoint_union(std::span<const Graph> parts) {
  return inhabited_graph(independent_set(static_cast<int>(parts.size())), parts);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const Graph parts[] = {a, b};
  return disjoint_union(parts);
}

Graph join(std::span<const Graph> parts) {
  return inhabited_graph(complete_graph(static_cast<int>(parts.size())), parts);
}

Graph lexicographic_product(std::span<const Graph> parts) {
  if (parts.empty()) throw InputError("lexicographic product needs at least one factor");
  long long total = 1;
  for (const auto& p : parts) {
    total *= p.num_vertices();
    if (total > kMaxVertices) throw CapacityError("lexicographic product exceeds 64 vertices");
  }
  const int n = static_cast<int>(total);
  const int m = static_cast<int>(parts.size());
  // place value of coordinate i
  std::vector<int> weight(m, 1);
  for (int i = m - 2; i >= 0; --i) weight[i] = weight[i + 1] * parts[i + 1].num_vertices();
  std::vector<Edge> e;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      for (int i = 0; i < m; ++i) {
        int xi = (x / weight[i]) % parts[i].num_vertices();
        int yi = (y / weight[i]) % parts[i].num_vertices();
        if (xi != yi) {
          if (parts[i].adjacent(xi, yi)) e.push_back({x, y});
          break;
        }
      }
  return Graph(n, std::move(e));
}

// ------------------------------------------------------------ isomorphism

namespace {

struct IsoSearch {
  const Graph& a;
  const Graph& b;
  std::vector<int> order;  // vertices of a in search order
  std::vector<int> map;    // a-vertex -> b-vertex
  VertexMask used = 0;

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    const int v = order[depth];
    for (int w = 0; w < b.num_vertices(); ++w) {
      if (used & vertex_bit(w)) continue;
      if (a.degree(v) != b.degree(w)) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const int x = order[d];
        ok = a.adjacent(v, x) == b.adjacent(w, map[x]);
      }
      if (!ok) continue;
      map[v] = w;
      used |= vertex_bit(w);
      if (extend(depth + 1)) return true;
      used &= ~vertex_bit(w);
    }
    return false;
  }
};

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) d[v] = g.degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

bool are_isomorphic(const Graph& g1, const Graph& g2) {
  if (g1.num_vertices() > kMaxIsoVertices || g2.num_vertices() > kMaxIsoVertices)
    throw CapacityError("isomorphism check is limited to 10 vertices");
  if (g1.num_vertices() != g2.num_vertices() || g1.num_edges() != g2.num_edges()) return false;
  if (degree_sequence(g1) != degree_sequence(g2)) return false;
  IsoSearch s{g1, g2, {}, std::vector<int>(g1.num_vertices(), -1)};
  s.order.resize(g1.num_vertices());
  std::iota(s.order.begin(), s.order.end(), 0);
  std::stable_sort(s.order.begin(), s.order.end(),
                   [&](int x, int y) { return g1.degree(x) > g1.degree(y); });
  return s.extend(0);
}

// ---------------------------------------------------------------- biclique

bool verify_biclique(const Graph& g, const BicliqueCertificate& cert, int a) {
  const VertexMask all = all_vertices(g.num_vertices());
  if ((cert.left | cert.right) & ~all) return false;
  if (cert.left & cert.right) return false;
  if (std::popcount(cert.left) < a || std::popcount(cert.right) < a) return false;
  for (VertexMask m = cert.left; m; m &= m - 1) {
    int v = std::countr_zero(m);
    if ((g.neighbors(v) & cert.right) != cert.right) return false;
  }
  return true;
}

bool contains_biclique(const Graph& g, int a) {
  if (a <= 0) return true;
  if (g.num_vertices() > kMaxBruteBicliqueVertices)
    throw CapacityError("brute-force biclique search is limited to 16 vertices");
  if (2 * a > g.num_vertices()) return false;
  bool found = false;
  for_each_combination(g.num_vertices(), a, [&](std::span<const int> left) {
    if (found) return;
    VertexMask common = all_vertices(g.num_vertices());
    for (int v : left) common &= g.neighbors(v);
    if (std::popcount(common) >= a) found = true;
  });
  return found;
}

bool contains_biclique(const Graph& g, int a, const BicliqueCertificate& cert) {
  if (verify_biclique(g, cert, a)) return true;
  return contains_biclique(g, a);
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> find_biclique_split(
    const Graph& g, int a) {
  const int n = g.num_vertices();
  std::optional<std::pair<std::vector<int>, std::vector<int>>> result;
  if (a <= 0 || 2 * a > n) return result;
  for_each_combination(n, a, [&](std::span<const int> left) {
    if (result) return;
    VertexMask common = all_vertices(n);
    for (int v : left) common &= g.neighbors(v);
    if (std::popcount(common) < a) return;
    std::vector<int> right;
    for (VertexMask m = common; m && static_cast<int>(right.size()) < a; m &= m - 1)
      right.push_back(std::countr_zero(m));
    result.emplace(std::vector<int>(left.begin(), left.end()), std::move(right));
  });
  return result;
}

// ---------------------------------------------------------------- treewidth

int treewidth_exact(const Graph& g) {
  const int n = g.num_vertices();
  if (n > kMaxTreewidthVertices) throw CapacityError("exact treewidth is limited to 11 vertices");
  if (n == 0) return 0;
  const std::uint32_t full = (1U << n) - 1;
  // q_size(S, v): vertices outside S+v reachable from v through S.
  auto q_size = [&](std::uint32_t s, int v) {
    VertexMask reach = vertex_bit(v);
    VertexMask frontier = reach;
    while (frontier) {
      VertexMask next = 0;
      for (VertexMask f = frontier; f; f &= f - 1) next |= g.neighbors(std::countr_zero(f));
      next &= s & ~reach;
      reach |= next;
      frontier = next;
    }
    VertexMask boundary = 0;
    for (VertexMask r = reach; r; r &= r - 1) boundary |= g.neighbors(std::countr_zero(r));
    boundary &= ~(static_cast<VertexMask>(s) | vertex_bit(v));
    return std::popcount(boundary);
  };
  std::vector<int> tw(std::size_t{1} << n, n);
  tw[0] = -1;
  for (std::uint32_t s = 1; s <= full; ++s) {
    int best = n;
    for (std::uint32_t rest = s; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      std::uint32_t prev = s & ~(1U << v);
      best = std::min(best, std::max(tw[prev], q_size(prev, v)));
    }
    tw[s] = best;
  }
  return std::max(tw[full], 0);
}

std::optional<int> regular_degree(const Graph& g) {
  if (g.num_vertices() == 0) return 0;
  const int d = g.degree(0);
  for (int v = 1; v < g.num_vertices(); ++v)
    if (g.degree(v) != d) return std::nullopt;
  return d;
}

bool is_connected(const Graph& g) {
  const int n = g.num_vertices();
  if (n <= 1) return true;
  VertexMask seen = 1, frontier = 1;
  while (frontier) {
    VertexMask next = 0;
    for (VertexMask f = frontier; f; f &= f - 1) next |= g.neighbors(std::countr_zero(f));
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == all_vertices(n);
}

std::vector<int> forward_revolution(int p, int m) {
  if (p < 2 || m < 1) throw InputError("forward revolution needs p >= 2 and m >= 1");
  long long total = 1;
  for (int i = 0; i < m; ++i) {
    total *= p;
    if (total > kMaxVertices) throw CapacityError("p^m exceeds 64");
  }
  const int n = static_cast<int>(total);
  std::vector<int> perm(n);
  for (int x = 0; x < n; ++x) {
    // x = (a_1..a_m) with a_m the least significant digit
    int last = x % p;
    perm[x] = last * (n / p) + x / p;
  }
  return perm;
}

// -------------------------------------------------------------- text format

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::vector<long long>> rows;
  int line_no = 0;
  std::vector<int> row_line;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<long long> nums;
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        nums.push_back(v);
      } catch (const std::exception&) {
        throw InputError("graph line " + std::to_string(line_no) + ": bad integer '" + tok + "'");
      }
    }
    if (nums.empty()) continue;
    if (nums.size() != 2)
      throw InputError("graph line " + std::to_string(line_no) + ": expected two integers");
    rows.push_back(nums);
    row_line.push_back(line_no);
  }
  if (rows.empty()) throw InputError("graph text is empty");
  const long long n = rows[0][0], m = rows[0][1];
  if (n < 0 || m < 0) throw InputError("graph header must be nonnegative");
  if (n > kMaxVertices) throw CapacityError("graph exceeds 64 vertices");
  if (static_cast<long long>(rows.size()) - 1 != m)
    throw InputError("graph header announces " + std::to_string(m) + " edges, found " +
                     std::to_string(rows.size() - 1));
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    long long u = rows[i][0], v = rows[i][1];
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InputError("graph line " + std::to_string(row_line[i]) + ": vertex out of range");
    if (u >= v) throw InputError("graph line " + std::to_string(row_line[i]) + ": edges need u < v");
    edges.push_back({static_cast<int>(u), static_cast<int>(v)});
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string format_graph(const Graph& g) {
  std::string out = std::to_string(g.num_vertices()) + " " + std::to_string(g.num_edges()) + "\n";
  for (const auto& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

Graph read_graph_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open graph file: " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_graph(ss.str());
}

ColoredGraph make_colored_graph(Graph g, Graph pattern, std::vector<int> coloring) {
  if (static_cast<int>(coloring.size()) != g.num_vertices())
    throw InputError("coloring must assign a color to every vertex");
  for (int c : coloring)
    if (c < 0 || c >= pattern.num_vertices()) throw InputError("color outside the pattern");
  for (const Edge& e : g.edges())
    if (!pattern.adjacent(coloring[e.u], coloring[e.v]))
      throw InputError("coloring is not a homomorphism: edge " + std::to_string(e.u) + "-" +
                       std::to_string(e.v) + " maps to a non-edge");
  return {std::move(g), std::move(pattern), std::move(coloring)};
}

}  // namespace indsub
