#include <gtest/gtest.h>

#include "indsub/alt_enum.hpp"
#include "indsub/errors.hpp"
#include "indsub/witness.hpp"
#include "oracles.hpp"

using namespace indsub;

namespace {

PropertyHandle B(const char* name) { return PropertyHandle(*builtin_property(name)); }
PropertyHandle H(const char* text) { return PropertyHandle(parse_property(text)); }

// largest prime power dividing n, by trial over all divisors
int q_oracle(long long n) {
  int best = 1;
  for (long long d = 2; d <= n; ++d) {
    if (n % d) continue;
    long long x = d;
    long long p = 2;
    while (x % p) ++p;
    while (x % p == 0) x /= p;
    if (x == 1) best = static_cast<int>(std::max<long long>(best, d));
  }
  return best;
}

void expect_sound(const WitnessReport& r, const PropertyHandle& h) {
  EXPECT_NE(r.residue, 0);
  EXPECT_EQ(r.graph.num_vertices() % r.p, 0);
  if (r.graph.num_edges() <= 20)
    EXPECT_EQ(r.residue, ((static_cast<long long>(alt_enum_naive(h, r.graph)) % r.p) + r.p) % r.p);
  if (r.graph.num_vertices() <= 11)
    EXPECT_GE(treewidth_exact(r.graph), r.claimed_treewidth_lower_bound);
}

}  // namespace

TEST(Witness, LargestPrimePower) {
  EXPECT_EQ(q_largest_prime_power(1), 1);
  EXPECT_EQ(q_largest_prime_power(12), 4);
  EXPECT_EQ(q_largest_prime_power(360), 9);
  for (int n = 1; n <= 400; ++n) EXPECT_EQ(q_largest_prime_power(n), q_oracle(n)) << n;
  EXPECT_THROW(q_largest_prime_power(0), InputError);
}

TEST(Witness, PrimePowerPhi2OnF11) {
  const auto h = B("phi2");
  const auto r = prime_power_witness(h, 11, 1);
  EXPECT_GE(r.level, 2);
  EXPECT_EQ(r.group, "rot");
  EXPECT_EQ(r.certificate.type, CertificateType::RegularDegree);
  EXPECT_EQ(r.certificate.value, 2 * r.level);
  EXPECT_EQ(regular_degree(r.graph), 2 * r.level);
  EXPECT_FALSE(h.evaluate(r.graph));
  expect_sound(r, h);
}

TEST(Witness, PrimePowerIndependentTakesDualityBranch) {
  const auto h = B("independent");
  const auto r = prime_power_witness(h, 5, 1);
  EXPECT_EQ(r.kind, WitnessKind::Duality);
  EXPECT_GE(r.level, 1);
  expect_sound(r, h);
}

TEST(Witness, PrimePowerAcrossFields) {
  for (const char* name : {"bipartite", "phi1", "phi2", "phi3", "indset3"})
    for (auto [p, m] : std::vector<std::pair<int, int>>{{5, 1}, {7, 1}, {2, 2}, {2, 3}, {3, 2}}) {
      const auto h = B(name);
      if (is_trivial_on(h, p == 2 ? 1 << m : m == 2 ? 9 : p)) {
        EXPECT_THROW(prime_power_witness(h, p, m), HypothesisError) << name << " " << p << "^" << m;
        continue;
      }
      const auto r = prime_power_witness(h, p, m);
      expect_sound(r, h);
    }
}

TEST(Witness, RejectsNonMonotoneProperty) {
  EXPECT_THROW(prime_power_witness(H("connected"), 5, 1), HypothesisError);
  EXPECT_THROW(prime_power_witness(B("bipartite"), 6, 1), InputError);
}

TEST(Witness, SylowBipartite) {
  const auto h = B("bipartite");
  const auto r = sylow_biclique_witness(h, 2, 2);
  EXPECT_EQ(r.group, "syl");
  EXPECT_EQ(r.certificate.type, CertificateType::Biclique);
  EXPECT_EQ(r.certificate.value, 2);
  EXPECT_TRUE(contains_biclique(r.graph, 2));
  EXPECT_EQ(r.graph.num_vertices(), 4);
  expect_sound(r, h);
}

TEST(Witness, SylowPhi3OnNine) {
  const auto h = B("phi3");
  const auto r = sylow_biclique_witness(h, 3, 2);
  ASSERT_EQ(r.difference_sets.size(), 2u);
  // empty prefix zero: first coordinate set nonempty
  EXPECT_FALSE(r.difference_sets[0].empty());
  EXPECT_EQ(r.certificate.value, 3);
  EXPECT_TRUE(contains_biclique(r.graph, 3));
  EXPECT_FALSE(h.evaluate(r.graph));
  expect_sound(r, h);
}

TEST(Witness, SylowPushdownAndRevolution) {
  for (const char* name : {"bipartite", "phi1", "phi2", "phi3"})
    for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}})
      EXPECT_TRUE(verify_sylow_pushdown(B(name), p, m)) << name;
  for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {2, 4}}) {
    const auto rc = verify_forward_revolution(p, m);
    EXPECT_TRUE(rc.pass);
    EXPECT_GT(rc.checked, 0);
  }
}

TEST(Witness, CheckReportCatchesTampering) {
  const auto h = B("bipartite");
  auto r = prime_power_witness(h, 5, 1);
  EXPECT_NO_THROW(check_report(r, h, {}));
  auto bad = r;
  bad.residue = (bad.residue + 1) % 5;
  if (bad.residue == 0) bad.residue = 1 + (r.residue % 4 == 0);
  EXPECT_THROW(check_report(bad, h, {}), LemmaViolation);
  auto inflated = r;
  inflated.certificate.value += 1;
  EXPECT_THROW(check_report(inflated, h, {}), LemmaViolation);
}

TEST(Witness, AvalancheClosure) {
  const auto f5 = field_make(5, 1);
  const auto v = avalanche_closure(B("bipartite"), DifferenceSet(f5, 0));
  // t = 1: only b = ∅ qualifies
  ASSERT_EQ(v.entries.size(), 1u);
  EXPECT_TRUE(v.entries[0].b.empty());

  const auto f7 = field_make(7, 1);
  const auto a = DifferenceSet::from_indices(f7, {1, 2});
  const auto r = avalanche_closure(H("max_degree <= 1 n"), a);
  EXPECT_EQ(r.t_num, 3);
  EXPECT_EQ(r.t_den, 1);
  EXPECT_EQ(r.entries.size(), 7u);
  for (const auto& e : r.entries) {
    EXPECT_LT(e.b.size() * r.t_den, r.t_num);
    EXPECT_EQ(e.image.mask() & ~a.mask(), 0u);
    EXPECT_TRUE(difference_iso(e.b, e.image));
  }

  // Φ(C^A) = 0 for phi2 on F_11 with |A| = 4
  const auto f11 = field_make(11, 1);
  EXPECT_THROW(avalanche_closure(B("phi2"), DifferenceSet::from_indices(f11, {1, 2, 3, 4})),
               HypothesisError);
}

TEST(Witness, ClassifyBipartiteAtSix) {
  const auto h = B("bipartite");
  const auto c = classify_k(h, 6);
  EXPECT_EQ(c.q, 3);
  EXPECT_EQ(c.d, 2);
  if (c.verdict == Verdict::Scattered) {
    ASSERT_TRUE(c.h && c.shifted);
    EXPECT_EQ(c.h->num_vertices(), 3);
    EXPECT_FALSE(is_trivial_on(PropertyHandle(*c.shifted), 3, TrivialityPath::General));
  } else {
    ASSERT_EQ(c.verdict, Verdict::Concentrated);
    ASSERT_TRUE(c.report);
    EXPECT_EQ(c.report->certificate.type, CertificateType::Biclique);
    expect_sound(*c.report, h);
  }
}

TEST(Witness, ClassifyInvariants) {
  for (const char* name : {"bipartite", "phi1", "phi2", "phi3", "indset3"})
    for (int k : {2, 3, 4, 5, 6, 10, 12}) {
      const auto h = B(name);
      const auto c = classify_k(h, k);
      EXPECT_EQ(c.q, q_largest_prime_power(k));
      EXPECT_EQ(c.d, k / c.q);
      switch (c.verdict) {
        case Verdict::Trivial:
          EXPECT_TRUE(is_trivial_on(h, c.q, TrivialityPath::General));
          break;
        case Verdict::Concentrated:
          ASSERT_TRUE(c.report);
          EXPECT_GE(c.d, 2);
          EXPECT_TRUE(contains_biclique(c.report->graph, c.q));
          EXPECT_NE(c.report->residue, 0);
          break;
        case Verdict::Scattered:
          ASSERT_TRUE(c.h && c.shifted);
          EXPECT_EQ(c.h->num_vertices(), k - c.q);
          break;
      }
      // with d = 1 there are no connection edges
      if (c.d == 1) EXPECT_NE(c.verdict, Verdict::Concentrated) << name << " k=" << k;
    }
  EXPECT_THROW(classify_k(B("bipartite"), 13), CapacityError);
  EXPECT_THROW(classify_k(B("bipartite"), 7), CapacityError);
}

TEST(Witness, ScatteredProbe) {
  const auto h = B("bipartite");
  for (int k : {2, 3, 4, 5, 6}) {
    const auto c = classify_k(h, k);
    const auto probe = scattered_property_probe(h, k);
    if (c.verdict != Verdict::Scattered) {
      EXPECT_FALSE(probe) << k;
      continue;
    }
    ASSERT_TRUE(probe);
    EXPECT_EQ(probe->h.num_vertices(), k - c.q);
    const PropertyHandle shifted(probe->shifted);
    EXPECT_FALSE(is_trivial_on(shifted, c.q, TrivialityPath::General));
    for_each_labeled_graph(c.q, [&](std::span<const VertexMask> adj, std::uint64_t) {
      const Graph g = Graph::from_adjacency(adj);
      EXPECT_EQ(probe->shifted.evaluate(g), h.evaluate(disjoint_union(g, probe->h)));
    });
  }
  EXPECT_THROW(scattered_property_probe(h, 10), CapacityError);
}
