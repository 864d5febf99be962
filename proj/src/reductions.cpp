#include "indsub/reductions.hpp"

#include <array>
#include <bit>

#include "indsub/alt_enum.hpp"
#include "indsub/errors.hpp"

namespace indsub {

std::string to_string(CountMethod m) {
  return m == CountMethod::Direct ? "direct" : "reduction";
}

namespace {

void require_binomial(int n, int k, const char* what) {
  if (k < 0) throw InputError(std::string(what) + ": size must be nonnegative");
  if (binomial(n, k) > kMaxEnumeration)
    throw CapacityError(std::string(what) + ": more than 10^8 subsets");
}

std::vector<VertexMask> adjacency_of(const Graph& g) {
  return {g.adjacency().begin(), g.adjacency().end()};
}

// Product of class sizes, capped.
void require_product(std::span<const VertexMask> classes, const char* what) {
  long long prod = 1;
  for (VertexMask c : classes) {
    prod *= std::popcount(c);
    if (prod > kMaxEnumeration) throw CapacityError(std::string(what) + ": more than 10^8 maps");
  }
}

std::vector<VertexMask> color_classes(int colors, const Graph& g, std::span<const int> coloring) {
  if (static_cast<int>(coloring.size()) != g.num_vertices())
    throw InputError("coloring size does not match the graph");
  std::vector<VertexMask> classes(colors, 0);
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (coloring[v] < 0 || coloring[v] >= colors) throw InputError("color outside the pattern");
    classes[coloring[v]] |= vertex_bit(v);
  }
  return classes;
}

// Maps pattern vertices 0..n-1 into `allowed[v]` preserving pattern edges.
std::uint64_t count_maps(const Graph& pattern, std::span<const VertexMask> gadj,
                         std::span<const VertexMask> allowed) {
  const int n = pattern.num_vertices();
  std::vector<int> image(n, -1);
  std::uint64_t total = 0;
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      ++total;
      return;
    }
    VertexMask cand = allowed[v];
    for (VertexMask back = pattern.neighbors(v) & (vertex_bit(v) - 1); back; back &= back - 1)
      cand &= gadj[image[std::countr_zero(back)]];
    for (; cand; cand &= cand - 1) {
      image[v] = std::countr_zero(cand);
      self(self, v + 1);
    }
  };
  rec(rec, 0);
  return total;
}

}  // namespace

CountResult count_indsub(const PropertyHandle& h, int k, const Graph& g) {
  require_binomial(g.num_vertices(), k, "count_indsub");
  const auto gadj = adjacency_of(g);
  std::array<VertexMask, kMaxVertices> adj{};
  std::uint64_t total = 0;
  for_each_combination(g.num_vertices(), k, [&](std::span<const int> xs) {
    for (int i = 0; i < k; ++i) {
      adj[i] = 0;
      for (int j = 0; j < k; ++j)
        if ((gadj[xs[i]] >> xs[j]) & 1U) adj[i] |= vertex_bit(j);
    }
    if (h.evaluate(std::span<const VertexMask>(adj.data(), k))) ++total;
  });
  return {BigInt(total), CountMethod::Direct};
}

CountResult count_indsub_shifted(const PropertyHandle& h, const Graph& hgraph, int k,
                                 const Graph& g, const IndSubOracle& oracle) {
  const int nh = hgraph.num_vertices();
  if (nh > kMaxShiftVertices) throw CapacityError("shift graph limited to 4 vertices");
  if (k < 0) throw InputError("k must be nonnegative");
  BigInt total = 0;
  for (VertexMask x = 0; x < (VertexMask{1} << nh); ++x) {
    const Graph rest = induced_subgraph(hgraph, ~x & ((VertexMask{1} << nh) - 1));
    const BigInt term = oracle(h, k + nh, disjoint_union(g, rest));
    if (std::popcount(x) % 2) total -= term;
    else total += term;
  }
  if (total < 0) throw LemmaViolation("inclusion-exclusion produced a negative count");
  return {total, CountMethod::Reduction};
}

CountResult count_hom(const Graph& hpat, const Graph& g) {
  if (hpat.num_vertices() > kMaxHomPatternVertices || g.num_vertices() > kMaxHomTargetVertices)
    throw CapacityError("count_hom limited to 5 pattern and 12 target vertices");
  const auto gadj = adjacency_of(g);
  const std::vector<VertexMask> allowed(hpat.num_vertices(), all_vertices(g.num_vertices()));
  return {BigInt(count_maps(hpat, gadj, allowed)), CountMethod::Direct};
}

CountResult count_cp_hom(const Graph& pattern, const Graph& g, std::span<const int> coloring) {
  const auto classes = color_classes(pattern.num_vertices(), g, coloring);
  require_product(classes, "count_cp_hom");
  return {BigInt(count_maps(pattern, adjacency_of(g), classes)), CountMethod::Direct};
}

CountResult count_cp_hom(const ColoredGraph& cg) {
  return count_cp_hom(cg.pattern, cg.g, cg.coloring);
}

CountResult count_cp_indsub(const PropertyHandle& h, const ColoredGraph& cg) {
  const int n = cg.pattern.num_vertices();
  const auto classes = color_classes(n, cg.g, cg.coloring);
  require_product(classes, "count_cp_indsub");
  const auto gadj = adjacency_of(cg.g);
  std::vector<int> pick(n);
  std::array<VertexMask, kMaxVertices> adj{};
  std::uint64_t total = 0;
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      for (int i = 0; i < n; ++i) {
        adj[i] = 0;
        for (int j = 0; j < n; ++j)
          if ((gadj[pick[i]] >> pick[j]) & 1U) adj[i] |= vertex_bit(j);
      }
      if (h.evaluate(std::span<const VertexMask>(adj.data(), n))) ++total;
      return;
    }
    for (VertexMask c = classes[v]; c; c &= c - 1) {
      pick[v] = std::countr_zero(c);
      self(self, v + 1);
    }
  };
  rec(rec, 0);
  return {BigInt(total), CountMethod::Direct};
}

std::vector<BigInt> cpindsub_coefficients(const PropertyHandle& h, const Graph& pattern) {
  const int e = pattern.num_edges();
  if (e > kMaxIdentityEdges) throw CapacityError("pattern limited to 10 edges");
  const std::uint64_t full = (std::uint64_t{1} << e) - 1;
  std::vector<bool> phi(full + 1);
  for (std::uint64_t s = 0; s <= full; ++s) phi[s] = h.evaluate(edge_subgraph(pattern, s));
  std::vector<BigInt> coef(full + 1, 0);
  for (std::uint64_t t = 0; t <= full; ++t)
    for (std::uint64_t s = t;; s = (s - 1) & t) {
      if (phi[s]) coef[t] += std::popcount(t & ~s) % 2 ? -1 : 1;
      if (s == 0) break;
    }
  return coef;
}

IdentityCheck check_cpindsub_identity(const PropertyHandle& h, const Graph& pattern,
                                      const ColoredGraph& cg) {
  if (!(cg.pattern == pattern)) throw InputError("colored graph is not colored by this pattern");
  const int e = pattern.num_edges();
  if (e > kMaxIdentityEdges) throw CapacityError("pattern limited to 10 edges");
  const std::uint64_t full = (std::uint64_t{1} << e) - 1;
  std::vector<BigInt> hom(full + 1);
  for (std::uint64_t t = 0; t <= full; ++t)
    hom[t] = count_cp_hom(edge_subgraph(pattern, t), cg.g, cg.coloring).value;

  IdentityCheck out;
  out.lhs = count_cp_indsub(h, cg).value;
  // Σ_S Φ(H[S]) Σ_{J ⊆ E∖S} (−1)^{|J|} #cpHom(H[S∪J] → G)
  out.rhs = 0;
  for (std::uint64_t s = 0; s <= full; ++s) {
    if (!h.evaluate(edge_subgraph(pattern, s))) continue;
    const std::uint64_t rest = full & ~s;
    for (std::uint64_t j = rest;; j = (j - 1) & rest) {
      if (std::popcount(j) % 2) out.rhs -= hom[s | j];
      else out.rhs += hom[s | j];
      if (j == 0) break;
    }
  }
  out.holds = out.lhs == out.rhs;
  if (e <= kMaxCoefficientEdges) {
    out.top_coefficient = cpindsub_coefficients(h, pattern)[full];
    out.chi_hat = alt_enum_naive(h, pattern);
    out.holds = out.holds && abs(*out.top_coefficient) == abs(*out.chi_hat);
  }
  return out;
}

bool verify_cpindsub_identity(const PropertyHandle& h, const Graph& pattern,
                              const ColoredGraph& cg) {
  return check_cpindsub_identity(h, pattern, cg).holds;
}

Gadget clique_gadget_full(const Graph& f, int ell, const Graph& g) {
  if (ell < 2) throw InputError("clique gadget needs ell >= 2");
  if (f.num_vertices() > 6 || g.num_vertices() > 8)
    throw CapacityError("clique gadget limited to |V(f)| <= 6 and |V(g)| <= 8");
  const auto split = find_biclique_split(f, ell);
  if (!split) throw InputError("f does not contain K_{ell,ell}");
  const auto& [a, b] = *split;
  const int n = g.num_vertices();
  std::vector<int> rest;
  {
    VertexMask used = 0;
    for (int v : a) used |= vertex_bit(v);
    for (int v : b) used |= vertex_bit(v);
    for (int v = 0; v < f.num_vertices(); ++v)
      if (!((used >> v) & 1U)) rest.push_back(v);
  }
  // u_{i,j} = i*n + j, w_{i,j} = ell*n + i*n + j, y_k = 2*ell*n + k
  const int total = 2 * ell * n + static_cast<int>(rest.size());
  auto u = [&](int i, int j) { return i * n + j; };
  auto w = [&](int i, int j) { return ell * n + i * n + j; };
  std::vector<int> coloring(total);
  for (int i = 0; i < ell; ++i)
    for (int j = 0; j < n; ++j) {
      coloring[u(i, j)] = a[i];
      coloring[w(i, j)] = b[i];
    }
  for (std::size_t k = 0; k < rest.size(); ++k) coloring[2 * ell * n + k] = rest[k];

  auto wanted = [&](int x, int y) {
    const int yb = 2 * ell * n;
    if (x >= yb || y >= yb) return true;
    const bool xu = x < ell * n, yu = y < ell * n;
    if (xu == yu) return true;
    if (!xu) std::swap(x, y);  // x = u_{i,j}, y = w_{i',j'}
    const int i = x / n, j = x % n;
    const int i2 = (y - ell * n) / n, j2 = (y - ell * n) % n;
    if (i == i2 && j == j2) return true;
    if (i < i2 && j < j2) return g.adjacent(j, j2);
    if (i > i2 && j > j2) return g.adjacent(j, j2);
    return false;
  };
  std::vector<Edge> edges;
  for (int x = 0; x < total; ++x)
    for (int y = x + 1; y < total; ++y)
      // edges between non-adjacent colors never carry a pattern edge
      if (wanted(x, y) && f.adjacent(coloring[x], coloring[y])) edges.push_back({x, y});
  Gadget out{make_colored_graph(Graph(total, std::move(edges)), f, std::move(coloring)), a, b};
  return out;
}

ColoredGraph clique_gadget(const Graph& f, int ell, const Graph& g) {
  return clique_gadget_full(f, ell, g).graph;
}

CountResult count_cliques(const Graph& g, int ell) {
  require_binomial(g.num_vertices(), ell, "count_cliques");
  const auto gadj = adjacency_of(g);
  std::uint64_t total = 0;
  for_each_combination(g.num_vertices(), ell, [&](std::span<const int> xs) {
    VertexMask set = 0;
    for (int v : xs) set |= vertex_bit(v);
    for (int v : xs)
      if (set & ~(gadj[v] | vertex_bit(v))) return;
    ++total;
  });
  return {BigInt(total), CountMethod::Direct};
}

}  // namespace indsub
