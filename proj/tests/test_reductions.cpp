#include <gtest/gtest.h>

#include <random>

#include "indsub/alt_enum.hpp"
#include "indsub/errors.hpp"
#include "indsub/reductions.hpp"
#include "oracles.hpp"

using namespace indsub;

namespace {

PropertyHandle H(const char* text) { return PropertyHandle(parse_property(text)); }

Graph random_graph(int n, std::mt19937& rng, int keep = 2) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (static_cast<int>(rng() % 3) < keep) e.push_back({u, v});
  return Graph(n, e);
}

// all maps V(pat) -> V(g), checked edge by edge
long long hom_oracle(const Graph& pat, const Graph& g) {
  const int k = pat.num_vertices(), n = g.num_vertices();
  std::vector<int> img(k, 0);
  long long count = 0;
  while (true) {
    bool ok = true;
    for (const auto& e : pat.edges()) ok = ok && g.adjacent(img[e.u], img[e.v]);
    count += ok;
    int i = 0;
    while (i < k && ++img[i] == n) img[i++] = 0;
    if (i == k) break;
  }
  return count;
}

long long indsub_oracle(const PropertyHandle& h, int k, const Graph& g) {
  long long c = 0;
  const int n = g.num_vertices();
  for (std::uint32_t s = 0; s < (1U << n); ++s)
    if (std::popcount(s) == k && h.spec().evaluate(induced_subgraph(g, s))) ++c;
  return c;
}

}  // namespace

TEST(Reductions, IndSubExamples) {
  EXPECT_EQ(count_indsub(H("clique"), 3, complete_graph(4)).value, 4);
  EXPECT_EQ(count_indsub(H("independent"), 2, complete_graph(4)).value, 0);
  EXPECT_EQ(count_indsub(H("bipartite"), 3, cycle_graph(5)).value, 10);
  EXPECT_EQ(count_indsub(H("bipartite"), 6, cycle_graph(5)).value, 0);
  EXPECT_EQ(count_indsub(H("clique"), 3, complete_graph(4)).method, CountMethod::Direct);
}

TEST(Reductions, IndSubMatchesOracle) {
  std::mt19937 rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = random_graph(3 + trial % 6, rng);
    for (const char* t : {"bipartite", "connected", "max_degree <= 1/2 n"})
      for (int k = 0; k <= g.num_vertices(); ++k)
        EXPECT_EQ(count_indsub(H(t), k, g).value, indsub_oracle(H(t), k, g));
  }
}

TEST(Reductions, ShiftedExamples) {
  const IndSubOracle direct = [](const PropertyHandle& h, int k, const Graph& g) {
    return count_indsub(h, k, g).value;
  };
  const auto bip = H("bipartite");
  const auto s0 = count_indsub_shifted(bip, independent_set(0), 2, cycle_graph(5), direct);
  EXPECT_EQ(s0.value, count_indsub(bip, 2, cycle_graph(5)).value);
  EXPECT_EQ(s0.method, CountMethod::Reduction);

  const auto s = count_indsub_shifted(bip, complete_graph(2), 2, cycle_graph(4), direct);
  const auto shifted = PropertyHandle(shift_property(bip.spec(), complete_graph(2)));
  EXPECT_EQ(s.value, count_indsub(shifted, 2, cycle_graph(4)).value);

  EXPECT_EQ(count_indsub_shifted(H("independent"), independent_set(1), 1, complete_graph(3), direct).value, 3);
  EXPECT_THROW(count_indsub_shifted(bip, independent_set(5), 1, complete_graph(3), direct), CapacityError);
}

TEST(Reductions, ShiftedIdentityOnRandomInstances) {
  std::mt19937 rng(12);
  const IndSubOracle direct = [](const PropertyHandle& h, int k, const Graph& g) {
    return count_indsub(h, k, g).value;
  };
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_graph(2 + trial % 5, rng);
    const Graph hg = random_graph(1 + trial % 3, rng);
    for (const char* t : {"bipartite", "has_independent_set(3) or connected"}) {
      const auto h = H(t);
      const PropertyHandle shifted(shift_property(h.spec(), hg));
      for (int k = 0; k <= g.num_vertices(); ++k)
        EXPECT_EQ(count_indsub_shifted(h, hg, k, g, direct).value, indsub_oracle(shifted, k, g));
    }
  }
}

TEST(Reductions, HomExamples) {
  const Graph c5 = cycle_graph(5);
  EXPECT_EQ(count_hom(complete_graph(2), c5).value, 10);
  EXPECT_EQ(count_hom(independent_set(1), c5).value, 5);
  EXPECT_EQ(count_hom(complete_graph(3), complete_graph(4)).value, 24);
  EXPECT_EQ(count_hom(independent_set(0), c5).value, 1);
  EXPECT_THROW(count_hom(complete_graph(6), c5), CapacityError);
}

TEST(Reductions, HomMatchesOracle) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph pat = random_graph(1 + trial % 4, rng);
    const Graph g = random_graph(2 + trial % 5, rng);
    EXPECT_EQ(count_hom(pat, g).value, hom_oracle(pat, g));
  }
}

TEST(Reductions, ColourPrescribedHom) {
  const Graph k2 = complete_graph(2);
  EXPECT_EQ(count_cp_hom(make_colored_graph(complete_graph(2), k2, {0, 1})).value, 1);
  EXPECT_EQ(count_cp_hom(make_colored_graph(complete_bipartite(3, 4), k2, {0, 0, 0, 1, 1, 1, 1})).value, 12);
  // coloring that is not a homomorphism into the pattern
  EXPECT_EQ(count_cp_hom(k2, complete_graph(3), std::vector<int>{0, 1, 1}).value, 2);
}

TEST(Reductions, ColourPrescribedIndSub) {
  std::mt19937 rng(14);
  const Graph k3 = complete_graph(3);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<int> col;
    std::vector<int> sizes(3, 0);
    for (int v = 0; v < 7; ++v) {
      col.push_back(v < 3 ? v : static_cast<int>(rng() % 3));
      ++sizes[col.back()];
    }
    const Graph raw = random_graph(7, rng);
    std::vector<Edge> e;
    for (const auto& x : raw.edges())
      if (col[x.u] != col[x.v]) e.push_back(x);
    const auto cg = make_colored_graph(Graph(7, e), k3, col);
    EXPECT_EQ(count_cp_indsub(H("max_degree <= 1 n"), cg).value, sizes[0] * sizes[1] * sizes[2]);
  }
  const auto one = make_colored_graph(complete_graph(2), complete_graph(2), {0, 1});
  EXPECT_EQ(count_cp_indsub(H("clique"), one).value, 1);
}

TEST(Reductions, CpIndSubIdentity) {
  std::mt19937 rng(15);
  const Graph k2 = complete_graph(2), k3 = complete_graph(3);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 3 + trial % 7;
    std::vector<int> col;
    for (int v = 0; v < n; ++v) col.push_back(v < 3 ? v : static_cast<int>(rng() % 3));
    // keep only edges the coloring maps onto pattern edges
    const Graph raw = random_graph(n, rng);
    std::vector<Edge> e;
    for (const auto& x : raw.edges())
      if (col[x.u] != col[x.v]) e.push_back(x);
    const auto cg = make_colored_graph(Graph(n, e), k3, col);
    EXPECT_TRUE(verify_cpindsub_identity(H("bipartite"), k3, cg));
    EXPECT_TRUE(verify_cpindsub_identity(H("max_degree <= 1 n"), k3, cg));

    std::vector<int> col2;
    for (int v = 0; v < n; ++v) col2.push_back(v < 2 ? v : static_cast<int>(rng() % 2));
    std::vector<Edge> e2;
    for (const auto& x : raw.edges())
      if (col2[x.u] != col2[x.v]) e2.push_back(x);
    EXPECT_TRUE(verify_cpindsub_identity(H("independent"), k2, make_colored_graph(Graph(n, e2), k2, col2)));
  }
}

TEST(Reductions, TopCoefficientMatchesAltEnum) {
  for (const char* t : {"bipartite", "connected", "max_degree <= 1/2 n", "independent"})
    for (const Graph& pat : {complete_graph(3), cycle_graph(4), path_graph(4), complete_bipartite(2, 2)}) {
      const auto h = H(t);
      const auto coef = cpindsub_coefficients(h, pat);
      const std::size_t full = (std::size_t{1} << pat.num_edges()) - 1;
      EXPECT_EQ(coef[full] < 0 ? -coef[full] : coef[full],
                abs(alt_enum_naive(h, pat)));
    }
}

TEST(Reductions, CliqueGadgetExamples) {
  const Graph k22 = complete_bipartite(2, 2);
  EXPECT_EQ(count_cp_hom(clique_gadget(k22, 2, complete_graph(3))).value, 3);
  EXPECT_EQ(count_cp_hom(clique_gadget(k22, 2, independent_set(3))).value, 0);
  EXPECT_EQ(count_cp_hom(clique_gadget(complete_graph(4), 2, cycle_graph(5))).value, 5);
  EXPECT_THROW(clique_gadget(cycle_graph(5), 2, complete_graph(3)), InputError);
  EXPECT_THROW(clique_gadget(k22, 1, complete_graph(3)), InputError);
}

TEST(Reductions, CliqueGadgetMatchesCliqueCount) {
  std::mt19937 rng(16);
  const Graph k33 = complete_bipartite(3, 3);
  for (int trial = 0; trial < 8; ++trial) {
    const Graph g = random_graph(4 + trial % 3, rng);
    EXPECT_EQ(count_cp_hom(clique_gadget(complete_bipartite(2, 2), 2, g)).value, count_cliques(g, 2).value);
    EXPECT_EQ(count_cp_hom(clique_gadget(k33, 3, g)).value, count_cliques(g, 3).value);
  }
}

TEST(Reductions, CountCliques) {
  EXPECT_EQ(count_cliques(complete_graph(5), 3).value, 10);
  EXPECT_EQ(count_cliques(cycle_graph(5), 2).value, 5);
  // Petersen graph: triangle-free
  std::vector<Edge> pet;
  for (int i = 0; i < 5; ++i) {
    pet.push_back({i, (i + 1) % 5});
    pet.push_back({i, i + 5});
    pet.push_back({5 + i, 5 + (i + 2) % 5});
  }
  for (auto& e : pet)
    if (e.u > e.v) std::swap(e.u, e.v);
  const Graph petersen(10, pet);
  EXPECT_EQ(count_cliques(petersen, 2).value, 15);
  EXPECT_EQ(count_cliques(petersen, 3).value, 0);
  EXPECT_EQ(count_cliques(petersen, 1).value, 10);
  std::mt19937 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = random_graph(7, rng);
    for (int l = 1; l <= 4; ++l) EXPECT_EQ(count_cliques(g, l).value, count_indsub(H("clique"), l, g).value);
  }
}
