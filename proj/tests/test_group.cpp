#include <gtest/gtest.h>

#include <map>
#include <random>

#include "indsub/errors.hpp"
#include "indsub/group.hpp"
#include "oracles.hpp"

using namespace indsub;

namespace {

// Orbits of the edge action by closure under the generators, no shortcuts.
std::vector<std::set<std::pair<int, int>>> orbit_oracle(const GeneratedGroup& grp, const Graph& g) {
  std::vector<std::set<std::pair<int, int>>> out;
  std::set<std::pair<int, int>> seen;
  for (const auto& e : g.edges()) {
    if (seen.count({e.u, e.v})) continue;
    std::set<std::pair<int, int>> orbit{{e.u, e.v}};
    std::vector<std::pair<int, int>> stack{{e.u, e.v}};
    while (!stack.empty()) {
      auto [u, v] = stack.back();
      stack.pop_back();
      for (const auto& gen : grp.generators()) {
        auto a = gen[u], b = gen[v];
        if (a > b) std::swap(a, b);
        if (orbit.insert({a, b}).second) stack.push_back({a, b});
      }
    }
    seen.insert(orbit.begin(), orbit.end());
    out.push_back(orbit);
  }
  return out;
}

// Sylow fixed point straight from the edge rule: tuples adjacent iff at the
// first differing coordinate i, a_i - b_i lies in A_i ∪ -A_i.
Graph sylow_oracle(int p, int m, const std::vector<DifferenceSet>& a) {
  int n = 1;
  for (int i = 0; i < m; ++i) n *= p;
  std::vector<Edge> e;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      int px = n, dx = x, dy = y;
      for (int i = 0; i < m; ++i) {
        px /= p;
        const int ax = dx / px, ay = dy / px;
        dx %= px;
        dy %= px;
        if (ax == ay) continue;
        const auto cl = a[i].symmetric_closure();
        const int diff = ((ax - ay) % p + p) % p;
        if (std::find(cl.begin(), cl.end(), diff) != cl.end()) e.push_back({x, y});
        break;
      }
    }
  return Graph(n, e);
}

}  // namespace

TEST(Group, RotationGroup) {
  const auto r5 = rotation_group(field_make(5, 1));
  ASSERT_EQ(r5.generators().size(), 1u);
  EXPECT_EQ(r5.generators()[0], (Permutation{1, 2, 3, 4, 0}));
  EXPECT_EQ(enumerate_group_order(r5, 100), 5u);
  const auto r4 = rotation_group(field_make(2, 2));
  EXPECT_EQ(r4.generators().size(), 2u);
  EXPECT_EQ(enumerate_group_order(r4, 100), 4u);
  EXPECT_EQ(r4.prime(), 2);
  EXPECT_EQ(edge_orbits(rotation_group(field_make(11, 1)), complete_graph(11)).size(), 5u);
}

TEST(Group, SylowGroup) {
  const auto s21 = sylow_group(2, 1);
  ASSERT_EQ(s21.generators().size(), 1u);
  EXPECT_EQ(s21.generators()[0], (Permutation{1, 0}));
  EXPECT_EQ(sylow_group(2, 2).generators().size(), 3u);
  EXPECT_EQ(enumerate_group_order(sylow_group(2, 2), 100), 8u);
  EXPECT_EQ(enumerate_group_order(sylow_group(3, 2), 1000), 81u);
  EXPECT_EQ(edge_orbits(sylow_group(3, 2), complete_graph(9)).size(), 2u);
  EXPECT_EQ(edge_orbits(sylow_group(5, 2), complete_graph(25)).size(), 4u);
}

TEST(Group, ProductGroup) {
  const auto r3 = rotation_group(field_make(3, 1));
  const std::vector<GeneratedGroup> parts{r3, r3};
  const auto g = product_group(parts);
  EXPECT_EQ(g.degree(), 6);
  EXPECT_EQ(enumerate_group_order(g, 100), 9u);
  const std::vector<Graph> blocks{complete_graph(3), complete_graph(3)};
  EXPECT_EQ(edge_orbits(g, inhabited_graph(complete_graph(2), blocks)).size(), 3u);
}

TEST(Group, GroupValidation) {
  EXPECT_THROW(GeneratedGroup(3, {{0, 0, 1}}), InputError);
  EXPECT_THROW(GeneratedGroup(3, {{0, 1}}), InputError);
  EXPECT_EQ(enumerate_group_order(sylow_group(3, 2), 10), std::nullopt);
}

TEST(Group, EdgeOrbitExamples) {
  const auto o5 = edge_orbits(rotation_group(field_make(5, 1)), complete_graph(5));
  ASSERT_EQ(o5.size(), 2u);
  for (const auto& o : o5) {
    EXPECT_EQ(o.size(), 5);
    EXPECT_TRUE(oracle::isomorphic(edge_subgraph(complete_graph(5), o.edges), cycle_graph(5)));
  }
  EXPECT_EQ(edge_orbits(trivial_group(3), complete_graph(3)).size(), 3u);
  for (const auto& o : edge_orbits(rotation_group(field_make(11, 1)), complete_graph(11)))
    EXPECT_EQ(o.size(), 11);
}

TEST(Group, EdgeOrbitsMatchClosureOracle) {
  std::vector<std::pair<GeneratedGroup, Graph>> cases;
  for (auto [p, m] : std::vector<std::pair<int, int>>{{3, 1}, {5, 1}, {7, 1}, {2, 2}, {2, 3}, {3, 2}})
    cases.emplace_back(rotation_group(field_make(p, m)), complete_graph(p == 2 ? 1 << m : m == 2 ? 9 : p));
  for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}})
    cases.emplace_back(sylow_group(p, m), complete_graph(m == 3 ? 8 : p * p));
  for (const auto& [grp, host] : cases) {
    const auto mine = edge_orbits(grp, host);
    const auto ref = orbit_oracle(grp, host);
    ASSERT_EQ(mine.size(), ref.size());
    for (std::size_t i = 0; i < mine.size(); ++i) {
      std::set<std::pair<int, int>> got;
      for (int e = 0; e < host.num_edges(); ++e)
        if (mine[i].edges.test(e)) got.insert({host.edges()[e].u, host.edges()[e].v});
      EXPECT_EQ(got, ref[i]);
      // orbit sizes of a p-group are powers of p
      int s = mine[i].size();
      const int p = *grp.prime();
      while (s % p == 0) s /= p;
      EXPECT_EQ(s, 1);
    }
  }
}

TEST(Group, FixedPointLattice) {
  const FixedPointLattice lat(complete_graph(11), rotation_group(field_make(11, 1)));
  EXPECT_EQ(lat.size(), 32u);
  std::map<int, int> levels;
  for (const auto& fp : lat.points()) ++levels[fp.level];
  EXPECT_EQ(levels, (std::map<int, int>{{0, 1}, {1, 5}, {2, 10}, {3, 10}, {4, 5}, {5, 1}}));
  EXPECT_EQ(lat.graph_of(0), independent_set(11));
  EXPECT_EQ(lat.graph_of(lat.full()), complete_graph(11));
  EXPECT_EQ(lat.edge_count(0b101), 22);
  EXPECT_EQ(lat.decompose(lat.edges_of(0b10110)), 0b10110u);
  EdgeSet single(complete_graph(11).num_edges());
  single.set(0);
  EXPECT_FALSE(lat.decompose(single));
  EXPECT_EQ(lat.orbit_sets_at_level(2).size(), 10u);
}

TEST(Group, FixedPointsAreInvariant) {
  const auto grp = sylow_group(2, 3);
  const FixedPointLattice lat(complete_graph(8), grp);
  for (const auto& fp : lat.points()) {
    const Graph g = lat.graph_of(fp.orbit_set);
    for (const auto& gen : grp.generators()) EXPECT_EQ(relabel(g, gen), g);
  }
  EXPECT_THROW(FixedPointLattice(complete_graph(8), trivial_group(8)), CapacityError);
}

TEST(Group, DifferenceGraphExamples) {
  const auto f5 = field_make(5, 1);
  EXPECT_TRUE(oracle::isomorphic(difference_graph(DifferenceSet::from_indices(f5, {1})), cycle_graph(5)));
  EXPECT_EQ(difference_graph(DifferenceSet::from_indices(f5, {1, 2})), complete_graph(5));
  const auto m = difference_graph(DifferenceSet::from_indices(field_make(2, 2), {1}));
  EXPECT_EQ(m.num_edges(), 2);
  for (int v = 0; v < 4; ++v) EXPECT_EQ(m.degree(v), 1);
  EXPECT_THROW(DifferenceSet::from_indices(f5, {0}), InputError);
  EXPECT_THROW(DifferenceSet::from_indices(f5, {1, 4}), InputError);
}

TEST(Group, RotationFamilyLabels) {
  for (int p : {5, 7, 11}) {
    const RotationFamily fam(field_make(p, 1));
    for (const auto& fp : fam.lattice().points()) {
      const auto a = fam.set_of(fp.orbit_set);
      EXPECT_EQ(a.size(), fp.level);
      EXPECT_EQ(difference_graph(a), fam.lattice().graph_of(fp.orbit_set));
      EXPECT_EQ(fam.orbit_set_of(a), fp.orbit_set);
    }
  }
}

TEST(Group, DifferenceIso) {
  const auto f5 = field_make(5, 1);
  const auto l = difference_iso(DifferenceSet::from_indices(f5, {1}), DifferenceSet::from_indices(f5, {2}));
  ASSERT_TRUE(l);
  EXPECT_EQ(l->index(), 2);
  const auto f7 = field_make(7, 1);
  const auto a = DifferenceSet::from_indices(f7, {1, 3});
  EXPECT_EQ(difference_iso(a, a)->index(), 1);
  EXPECT_FALSE(difference_iso(DifferenceSet::from_indices(f7, {1}), DifferenceSet::from_indices(f7, {1, 2})));
}

TEST(Group, DifferenceIsoImpliesGraphIso) {
  const auto f = field_make(7, 1);
  for (std::uint64_t x = 0; x < 8; ++x)
    for (std::uint64_t y = 0; y < 8; ++y) {
      const DifferenceSet a(f, x), b(f, y);
      if (auto l = difference_iso(a, b)) {
        std::vector<int> perm(7);
        for (int v = 0; v < 7; ++v) perm[v] = f.mul(l->index(), v);
        EXPECT_EQ(relabel(difference_graph(a), perm), difference_graph(b));
      }
    }
}

TEST(Group, EmbedSmallSet) {
  const auto f11 = field_make(11, 1);
  const auto r = embed_small_set(DifferenceSet::from_indices(f11, {1, 2, 3, 4}), DifferenceSet::from_indices(f11, {5}));
  EXPECT_TRUE(r.hypothesis_met);
  ASSERT_TRUE(r.image && r.lambda);
  EXPECT_EQ(r.image->size(), 1);
  EXPECT_EQ(r.image->mask() & ~DifferenceSet::from_indices(f11, {1, 2, 3, 4}).mask(), 0u);
  EXPECT_TRUE(difference_iso(DifferenceSet::from_indices(f11, {5}), *r.image));

  const auto e = embed_small_set(DifferenceSet::from_indices(f11, {1, 2}), DifferenceSet(f11, 0));
  ASSERT_TRUE(e.image);
  EXPECT_TRUE(e.image->empty());

  const auto f7 = field_make(7, 1);
  EXPECT_FALSE(embed_small_set(DifferenceSet::from_indices(f7, {1, 2}), DifferenceSet::from_indices(f7, {1, 2, 3}))
                   .hypothesis_met);
}

TEST(Group, SylowFixedPointExamples) {
  const auto f2 = field_make(2, 1), f3 = field_make(3, 1);
  const std::vector<DifferenceSet> a{DifferenceSet::from_indices(f2, {1}), DifferenceSet(f2, 0)};
  EXPECT_EQ(sylow_fixed_point(2, 2, a), complete_bipartite(2, 2));
  const std::vector<DifferenceSet> none{DifferenceSet(f2, 0), DifferenceSet(f2, 0)};
  EXPECT_EQ(sylow_fixed_point(2, 2, none), independent_set(4));
  const std::vector<DifferenceSet> one{DifferenceSet::from_indices(f3, {1})};
  EXPECT_EQ(sylow_fixed_point(3, 1, one), complete_graph(3));
}

TEST(Group, SylowFamilyMatchesEdgeRule) {
  for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {5, 2}, {2, 4}}) {
    const SylowFamily fam(p, m);
    for (const auto& fp : fam.lattice().points()) {
      const auto a = fam.sets_of(fp.orbit_set);
      ASSERT_EQ(static_cast<int>(a.size()), m);
      const Graph g = fam.lattice().graph_of(fp.orbit_set);
      EXPECT_EQ(g, sylow_oracle(p, m, a));
      EXPECT_EQ(g, sylow_fixed_point(p, m, a));
      int level = 0;
      for (const auto& x : a) level += x.size();
      EXPECT_EQ(level, fp.level);
      EXPECT_EQ(fam.orbit_set_of(a), fp.orbit_set);
    }
  }
}

TEST(Group, EmptyPrefix) {
  const auto f2 = field_make(2, 1);
  const DifferenceSet e(f2, 0), x = DifferenceSet::from_indices(f2, {1});
  EXPECT_EQ(empty_prefix(std::vector<DifferenceSet>{x, e}), 0);
  EXPECT_EQ(empty_prefix(std::vector<DifferenceSet>{e, x}), 1);
  EXPECT_EQ(empty_prefix(std::vector<DifferenceSet>{e, e, x, x}), 2);
}

TEST(Group, ProductFixedPoint) {
  const auto f3 = field_make(3, 1);
  const DifferenceSet one = DifferenceSet::from_indices(f3, {1}), none(f3, 0);
  EXPECT_EQ(product_fixed_point(independent_set(2), std::vector<DifferenceSet>{one, none}),
            disjoint_union(complete_graph(3), independent_set(3)));
  EXPECT_EQ(product_fixed_point(complete_graph(2), std::vector<DifferenceSet>{none, none}),
            complete_bipartite(3, 3));
}

TEST(Group, ProductFamilyDecomposition) {
  const ProductFamily fam(field_make(3, 1), 2);
  EXPECT_EQ(fam.lattice().size(), 8u);
  for (const auto& fp : fam.lattice().points()) {
    const auto d = fam.decompose(fp.orbit_set);
    EXPECT_EQ(product_fixed_point(d.connection, d.sets), fam.lattice().graph_of(fp.orbit_set));
  }
  const ProductFamily f5(field_make(5, 1), 3);
  EXPECT_EQ(f5.lattice().num_orbits(), 3 + 3 * 2);
  std::mt19937 rng(1);
  for (int t = 0; t < 40; ++t) {
    const OrbitSet s = rng() % f5.lattice().size();
    const auto d = f5.decompose(s);
    EXPECT_EQ(product_fixed_point(d.connection, d.sets), f5.lattice().graph_of(s));
  }
}
