#include "indsub/witness.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "indsub/errors.hpp"

namespace indsub {

int q_largest_prime_power(long long n) {
  if (n < 1) throw InputError("q(n) needs n >= 1");
  long long best = 1;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    long long pw = 1;
    while (n % d == 0) {
      n /= d;
      pw *= d;
    }
    best = std::max(best, pw);
  }
  if (n > 1) best = std::max(best, n);
  return static_cast<int>(best);
}

std::string to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::Duality:
      return "duality";
    case WitnessKind::AvalancheMinimal:
      return "avalanche-minimal";
    case WitnessKind::SylowBiclique:
      return "sylow-biclique";
    case WitnessKind::Concentrated:
      return "concentrated";
  }
  return "?";
}

std::string to_string(CertificateType t) {
  switch (t) {
    case CertificateType::RegularDegree:
      return "regular-degree";
    case CertificateType::Biclique:
      return "biclique";
    case CertificateType::ExactTreewidth:
      return "exact-treewidth";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Trivial:
      return "trivial";
    case Verdict::Concentrated:
      return "concentrated";
    case Verdict::Scattered:
      return "scattered";
  }
  return "?";
}

namespace {

void require_monotone_nontrivial(const PropertyHandle& h, int n) {
  if (!h.verified_edge_monotone())
    throw HypothesisError("property is not a verified edge-monotone property");
  if (is_trivial_on(h, n, TrivialityPath::Fast))
    throw HypothesisError("property is trivial on " + std::to_string(n) + " vertices");
}

int isqrt(int x) {
  int r = static_cast<int>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

// Smallest level with a failing point; nullopt if Φ holds everywhere.
std::optional<int> minimal_failing_level(const LatticeEvaluator& ev) {
  std::optional<int> best;
  for (std::uint64_t s = 0; s < ev.lattice().size(); ++s)
    if (!ev.phi(static_cast<OrbitSet>(s))) {
      const int l = std::popcount(s);
      if (!best || l < *best) best = l;
    }
  return best;
}

std::vector<std::vector<std::string>> labels(std::span<const DifferenceSet> sets) {
  std::vector<std::vector<std::string>> out;
  for (const auto& s : sets) out.push_back(s.to_strings());
  return out;
}

}  // namespace

void check_report(WitnessReport& r, const PropertyHandle& h, const WitnessOptions& opt) {
  if (r.residue == 0) throw LemmaViolation("witness residue vanishes");
  if (r.level != r.fixed_point.level) throw LemmaViolation("witness level mismatch");
  const Graph& g = r.graph;
  switch (r.certificate.type) {
    case CertificateType::RegularDegree: {
      const auto d = regular_degree(g);
      if (!d || *d != r.certificate.value)
        throw LemmaViolation("regular-degree certificate fails");
      break;
    }
    case CertificateType::Biclique: {
      const int a = r.certificate.value;
      if (r.certificate.biclique) {
        if (!verify_biclique(g, *r.certificate.biclique, a))
          throw LemmaViolation("structural biclique certificate fails");
      }
      if (g.num_vertices() <= kMaxBruteBicliqueVertices && !contains_biclique(g, a))
        throw LemmaViolation("brute-force biclique check fails");
      if (!r.certificate.biclique && g.num_vertices() > kMaxBruteBicliqueVertices)
        throw CapacityError("biclique certificate without structure on a large graph");
      break;
    }
    case CertificateType::ExactTreewidth:
      if (treewidth_exact(g) != r.certificate.value)
        throw LemmaViolation("exact-treewidth certificate fails");
      break;
  }
  if (!opt.verify) return;
  if (g.num_edges() <= kNaiveEdgeCap) {
    r.naive = alt_enum_naive(h, g);
    if (mod_p(*r.naive, r.p) != r.residue)
      throw LemmaViolation("naive engine disagrees with the witness residue");
  }
  if (g.num_vertices() <= kMaxTreewidthVertices) {
    r.treewidth = treewidth_exact(g);
    if (*r.treewidth < r.claimed_treewidth_lower_bound)
      throw LemmaViolation("exact treewidth is below the claimed lower bound");
  }
}

AvalancheReport avalanche_closure(const PropertyHandle& h, const DifferenceSet& a) {
  if (!h.verified_edge_monotone())
    throw HypothesisError("avalanche needs a verified edge-monotone property");
  const FieldSpec& f = a.field();
  const long long plus = static_cast<long long>(plus_set(f).size());
  if (a.size() >= plus) throw HypothesisError("avalanche needs a proper subset of the plus set");
  if (!h.evaluate(difference_graph(a)))
    throw HypothesisError("property fails on the difference graph of a");
  AvalancheReport rep;
  rep.t_num = plus;
  rep.t_den = plus - a.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << plus); ++mask) {
    const DifferenceSet b(f, mask);
    if (static_cast<long long>(b.size()) * rep.t_den >= rep.t_num) continue;
    const auto emb = embed_small_set(a, b);
    if (!emb.hypothesis_met || !emb.lambda)
      throw LemmaViolation("small-set embedding missing for b = " + std::to_string(mask));
    if (!h.evaluate(difference_graph(b)))
      throw LemmaViolation("avalanche: property fails on a small difference graph");
    rep.entries.push_back({b, *emb.lambda, *emb.image});
  }
  return rep;
}

WitnessReport prime_power_witness(const PropertyHandle& h, int p, int m, const WitnessOptions& opt) {
  const FieldSpec f = field_make(p, m);
  require_monotone_nontrivial(h, f.order());
  const RotationFamily fam(f);
  const auto& lat = fam.lattice();
  LatticeEvaluator ev(lat, h);
  const int plus = lat.num_orbits();
  const int d = isqrt(plus);

  bool high = false;
  for (std::uint64_t s = 0; s < lat.size() && !high; ++s)
    high = std::popcount(s) >= plus - d && ev.phi(static_cast<OrbitSet>(s));

  WitnessReport r;
  r.group = "rot";
  r.p = p;
  r.m = m;
  r.property = h.spec().to_string();
  OrbitSet chosen = 0;
  if (high) {
    const auto level = minimal_failing_level(ev);
    if (!level) throw LemmaViolation("nontrivial property holds on every fixed point");
    if (*level < d) throw LemmaViolation("avalanche bound violated: minimal failing level below d");
    for (std::uint64_t s = 0; s < lat.size(); ++s)
      if (std::popcount(s) == *level && !ev.phi(static_cast<OrbitSet>(s))) {
        chosen = static_cast<OrbitSet>(s);
        break;
      }
    r.kind = WitnessKind::AvalancheMinimal;
    r.residue = ev.residue(chosen);
  } else {
    const auto dual = duality_witness(h, lat, d);
    if (!dual.hypothesis_met)
      throw LemmaViolation("duality hypothesis unexpectedly fails: " + dual.violation);
    chosen = dual.witness->point.orbit_set;
    r.kind = WitnessKind::Duality;
    r.residue = dual.witness->residue;
  }
  r.fixed_point = lat.point(chosen);
  r.level = r.fixed_point.level;
  r.graph = lat.graph_of(chosen);
  const DifferenceSet a = fam.set_of(chosen);
  r.difference_sets = {a.to_strings()};
  if (r.level < d) throw LemmaViolation("win-win witness level below floor(sqrt(|F+|))");
  const int deg = p == 2 ? a.size() : 2 * a.size();
  r.certificate = {CertificateType::RegularDegree, deg, std::nullopt};
  r.claimed_treewidth_lower_bound = deg;
  check_report(r, h, opt);
  return r;
}

namespace {

// Biclique between tuples starting with x and tuples starting with 0.
BicliqueCertificate sylow_biclique(int p, int m, int x) {
  const int n = static_cast<int>(std::pow(p, m) + 0.5);
  const int block = n / p;
  BicliqueCertificate c;
  for (int v = 0; v < block; ++v) {
    c.left |= vertex_bit(x * block + v);
    c.right |= vertex_bit(v);
  }
  return c;
}

}  // namespace

WitnessReport sylow_biclique_witness(const PropertyHandle& h, int p, int m,
                                     const WitnessOptions& opt) {
  if (m < 2) throw InputError("sylow biclique witness needs m >= 2");
  const SylowFamily fam(p, m);
  const auto& lat = fam.lattice();
  require_monotone_nontrivial(h, lat.host().num_vertices());
  LatticeEvaluator ev(lat, h);
  const auto level = minimal_failing_level(ev);
  if (!level) throw LemmaViolation("nontrivial property holds on every fixed point");
  std::optional<OrbitSet> chosen;
  for (std::uint64_t s = 0; s < lat.size() && !chosen; ++s) {
    const auto os = static_cast<OrbitSet>(s);
    if (std::popcount(s) != *level || ev.phi(os)) continue;
    if (empty_prefix(fam.sets_of(os)) == 0) chosen = os;
  }
  if (!chosen) throw LemmaViolation("no minimal-level failing Sylow point has empty prefix 0");
  WitnessReport r;
  r.kind = WitnessKind::SylowBiclique;
  r.group = "syl";
  r.p = p;
  r.m = m;
  r.property = h.spec().to_string();
  r.fixed_point = lat.point(*chosen);
  r.level = r.fixed_point.level;
  r.graph = lat.graph_of(*chosen);
  const auto sets = fam.sets_of(*chosen);
  r.difference_sets = labels(sets);
  r.residue = ev.residue(*chosen);
  const int a = lat.host().num_vertices() / p;
  const int x = sets[0].elements().front().index();
  r.certificate = {CertificateType::Biclique, a, sylow_biclique(p, m, x)};
  r.claimed_treewidth_lower_bound = a;
  check_report(r, h, opt);
  return r;
}

bool verify_sylow_pushdown(const PropertyHandle& h, int p, int m) {
  const SylowFamily fam(p, m);
  const auto& lat = fam.lattice();
  LatticeEvaluator ev(lat, h);
  const int levels = lat.num_orbits();
  for (int i = 0; i <= levels; ++i) {
    bool prefix0_all_true = true, all_true = true;
    for (OrbitSet s : lat.orbit_sets_at_level(i)) {
      const bool ok = ev.phi(s);
      all_true = all_true && ok;
      if (s != 0 && empty_prefix(fam.sets_of(s)) == 0) prefix0_all_true = prefix0_all_true && ok;
    }
    if (prefix0_all_true && !all_true) return false;
  }
  return true;
}

RevolutionCheck verify_forward_revolution(int p, int m) {
  if (m < 2) throw InputError("forward revolution needs m >= 2");
  const FieldSpec f = field_make(p, 1);
  const int plus = static_cast<int>(plus_set(f).size());
  const std::vector<int> phi = forward_revolution(p, m);
  const int n = static_cast<int>(phi.size());
  std::vector<int> power(n);
  RevolutionCheck out;
  std::vector<int> masks(m, 0);
  const std::uint64_t combos = std::uint64_t{1} << (plus * m);
  for (std::uint64_t code = 0; code < combos; ++code) {
    std::vector<DifferenceSet> a;
    for (int j = 0; j < m; ++j) {
      masks[j] = static_cast<int>((code >> (plus * j)) & ((1U << plus) - 1));
      a.emplace_back(f, masks[j]);
    }
    const Graph x = sylow_fixed_point(p, m, a);
    for (int v = 0; v < n; ++v) power[v] = v;
    for (int i = 1; i < m; ++i) {
      for (int v = 0; v < n; ++v) power[v] = phi[power[v]];
      std::vector<DifferenceSet> left(i, DifferenceSet(f, 0));
      left.insert(left.end(), a.begin(), a.end() - i);
      ++out.checked;
      if (!is_edge_subgraph_of(sylow_fixed_point(p, m, left), relabel(x, power))) {
        out.pass = false;
        out.failing_masks = masks;
        out.failing_power = i;
        return out;
      }
    }
  }
  return out;
}

KClassification classify_k(const PropertyHandle& h, int k, const WitnessOptions& opt) {
  if (k < 1) throw InputError("k must be positive");
  if (!h.verified_edge_monotone())
    throw HypothesisError("property is not a verified edge-monotone property");
  KClassification out;
  out.k = k;
  out.q = q_largest_prime_power(k);
  out.d = k / out.q;
  if (k > kMaxClassifyK || out.q > 5 || out.d > 3)
    throw CapacityError("classify_k needs k <= 12, q(k) <= 5 and k/q(k) <= 3");
  if (is_trivial_on(h, k, TrivialityPath::Fast)) return out;

  int p = 2;
  while (out.q % p) ++p;
  int m = 0;
  for (int t = out.q; t > 1; t /= p) ++m;
  const FieldSpec f = field_make(p, m);
  const ProductFamily fam(f, out.d);
  const auto& lat = fam.lattice();
  LatticeEvaluator ev(lat, h);
  const auto level = minimal_failing_level(ev);
  if (!level) throw LemmaViolation("nontrivial property holds on every product fixed point");

  std::optional<OrbitSet> first, first_cross;
  for (std::uint64_t s = 0; s < lat.size(); ++s) {
    const auto os = static_cast<OrbitSet>(s);
    if (std::popcount(s) != *level || ev.phi(os)) continue;
    if (!first) first = os;
    if (!first_cross && fam.decompose(os).connection.num_edges() > 0) first_cross = os;
  }
  const OrbitSet chosen = first_cross ? *first_cross : *first;
  out.failing_point = chosen;
  const auto dec = fam.decompose(chosen);
  const int residue = ev.residue(chosen);
  if (residue == 0) throw LemmaViolation("minimal failing product point vanishes");

  if (first_cross) {
    out.verdict = Verdict::Concentrated;
    WitnessReport r;
    r.kind = WitnessKind::Concentrated;
    r.group = "rot^d";
    r.p = p;
    r.m = m;
    r.k = k;
    r.property = h.spec().to_string();
    r.fixed_point = lat.point(chosen);
    r.level = r.fixed_point.level;
    r.graph = lat.graph_of(chosen);
    r.difference_sets = labels(dec.sets);
    r.residue = residue;
    const Edge ce = dec.connection.edges().front();
    BicliqueCertificate cert;
    for (int v = 0; v < out.q; ++v) {
      cert.left |= vertex_bit(ce.u * out.q + v);
      cert.right |= vertex_bit(ce.v * out.q + v);
    }
    r.certificate = {CertificateType::Biclique, out.q, cert};
    r.claimed_treewidth_lower_bound = out.q;
    check_report(r, h, opt);
    out.report = std::move(r);
    return out;
  }

  out.verdict = Verdict::Scattered;
  int x = 0;
  while (x < out.d && dec.sets[x].empty()) ++x;
  if (x == out.d) throw LemmaViolation("scattered point has no nonempty block");
  std::vector<Graph> others;
  for (int i = 0; i < out.d; ++i)
    if (i != x) others.push_back(difference_graph(dec.sets[i]));
  Graph hgraph = others.empty() ? Graph(0) : disjoint_union(others);
  PropertySpec shifted = shift_property(h.spec(), hgraph);
  if (!shifted.evaluate(independent_set(out.q)))
    throw LemmaViolation("shifted property fails on the independent set");
  if (shifted.evaluate(difference_graph(dec.sets[x])))
    throw LemmaViolation("shifted property holds on the failing block");
  PropertyHandle sh(shifted);
  if (is_trivial_on(sh, out.q, TrivialityPath::Fast))
    throw LemmaViolation("shifted property is trivial on q(k)");
  out.h = std::move(hgraph);
  out.shifted = std::move(shifted);
  return out;
}

std::optional<ProbeResult> scattered_property_probe(const PropertyHandle& h, int k) {
  const auto cls = classify_k(h, k, WitnessOptions{false});
  if (cls.verdict != Verdict::Scattered) return std::nullopt;
  const int r = k - cls.q;
  if (r > 4) throw CapacityError("probe graphs are limited to 4 vertices");
  std::vector<Graph> graphs;
  for_each_labeled_graph(r, [&](std::span<const VertexMask> adj, std::uint64_t) {
    graphs.push_back(Graph::from_adjacency(adj));
  });
  std::sort(graphs.begin(), graphs.end(),
            [](const Graph& a, const Graph& b) { return a.edges() < b.edges(); });
  for (const auto& g : graphs) {
    PropertySpec shifted = shift_property(h.spec(), g);
    PropertyHandle sh(shifted);
    if (!sh.verified_edge_monotone()) throw LemmaViolation("shift broke edge-monotonicity");
    if (!is_trivial_on(sh, cls.q, TrivialityPath::Fast)) return ProbeResult{g, shifted};
  }
  throw LemmaViolation("no probe graph yields a nontrivial shift");
}

}  // namespace indsub
