#include "indsub/group.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <set>
#include <unordered_set>

#include "indsub/errors.hpp"

namespace indsub {

GeneratedGroup::GeneratedGroup(int degree, std::vector<Permutation> generators,
                               std::optional<int> prime, std::optional<BigInt> asserted_order)
    : degree_(degree),
      generators_(std::move(generators)),
      prime_(prime),
      order_(std::move(asserted_order)) {
  if (degree < 0 || degree > kMaxVertices) throw CapacityError("group degree out of range");
  for (const auto& g : generators_) {
    if (static_cast<int>(g.size()) != degree) throw InputError("generator has wrong degree");
    std::vector<bool> seen(degree, false);
    for (int x : g) {
      if (x < 0 || x >= degree || seen[x]) throw InputError("generator is not a bijection");
      seen[x] = true;
    }
  }
  if (prime_ && !is_prime(*prime_)) throw InputError("asserted group prime is not prime");
}

GeneratedGroup trivial_group(int degree, std::optional<int> prime) {
  return GeneratedGroup(degree, {}, prime, BigInt(1));
}

GeneratedGroup rotation_group(const FieldSpec& f) {
  const int q = f.order();
  std::vector<Permutation> gens;
  for (int i = 0; i < f.m(); ++i) {
    std::vector<int> basis(f.m(), 0);
    basis[i] = 1;
    const int e = f.from_coeffs(basis).index();
    Permutation g(q);
    for (int x = 0; x < q; ++x) g[x] = f.add(x, e);
    gens.push_back(std::move(g));
  }
  return GeneratedGroup(q, std::move(gens), f.p(), BigInt(q));
}

GeneratedGroup sylow_group(int p, int m) {
  if (!is_prime(p)) throw InputError("sylow group needs a prime");
  if (m < 1) throw InputError("sylow group needs m >= 1");
  long long n = 1;
  for (int i = 0; i < m; ++i) {
    n *= p;
    if (n > kMaxVertices) throw CapacityError("p^m exceeds 64");
  }
  std::vector<Permutation> gens;
  BigInt order = 1;
  long long prefixes = 1;  // p^j
  for (int j = 0; j < m; ++j) {
    // weight of coordinate j (0-based) in the tuple index
    long long weight = n / (prefixes * p);
    for (long long w = 0; w < prefixes; ++w) {
      Permutation g(n);
      for (long long x = 0; x < n; ++x) {
        const long long prefix = x / (weight * p);
        if (prefix != w) {
          g[x] = static_cast<int>(x);
          continue;
        }
        const long long digit = (x / weight) % p;
        g[x] = static_cast<int>(x + (((digit + 1) % p) - digit) * weight);
      }
      gens.push_back(std::move(g));
    }
    BigInt factor = 1;
    for (long long t = 0; t < prefixes; ++t) factor *= p;
    order *= factor;
    prefixes *= p;
  }
  return GeneratedGroup(static_cast<int>(n), std::move(gens), p, order);
}

GeneratedGroup product_group(std::span<const GeneratedGroup> groups) {
  int degree = 0;
  for (const auto& g : groups) degree += g.degree();
  if (degree > kMaxVertices) throw CapacityError("product group acts on more than 64 points");
  std::vector<Permutation> gens;
  std::optional<int> prime;
  bool same_prime = true;
  std::optional<BigInt> order = BigInt(1);
  int offset = 0;
  for (const auto& g : groups) {
    for (const auto& gen : g.generators()) {
      Permutation ext(degree);
      for (int x = 0; x < degree; ++x) ext[x] = x;
      for (int x = 0; x < g.degree(); ++x) ext[offset + x] = offset + gen[x];
      gens.push_back(std::move(ext));
    }
    if (!g.prime()) {
      same_prime = false;
    } else if (prime && *prime != *g.prime()) {
      same_prime = false;
    } else {
      prime = g.prime();
    }
    if (order && g.asserted_order()) {
      *order *= *g.asserted_order();
    } else {
      order.reset();
    }
    offset += g.degree();
  }
  return GeneratedGroup(degree, std::move(gens), same_prime ? prime : std::nullopt, order);
}

std::optional<std::uint64_t> enumerate_group_order(const GeneratedGroup& g, std::size_t limit) {
  Permutation id(g.degree());
  for (int i = 0; i < g.degree(); ++i) id[i] = i;
  std::set<Permutation> seen{id};
  std::deque<Permutation> queue{id};
  while (!queue.empty()) {
    Permutation cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& gen : g.generators()) {
      Permutation next(g.degree());
      for (int i = 0; i < g.degree(); ++i) next[i] = gen[cur[i]];
      if (seen.insert(next).second) {
        if (seen.size() > limit) return std::nullopt;
        queue.push_back(std::move(next));
      }
    }
  }
  return seen.size();
}

std::vector<EdgeOrbit> edge_orbits(const GeneratedGroup& group, const Graph& host) {
  const int n = host.num_vertices();
  if (group.degree() != n) throw InputError("group degree does not match the host");
  const int e = host.num_edges();
  std::vector<int> index(static_cast<std::size_t>(n) * n, -1);
  for (int i = 0; i < e; ++i) {
    const Edge& ed = host.edges()[i];
    index[ed.u * n + ed.v] = index[ed.v * n + ed.u] = i;
  }
  // image of each edge under each generator
  std::vector<std::vector<int>> image(group.generators().size(), std::vector<int>(e));
  for (std::size_t g = 0; g < group.generators().size(); ++g) {
    const auto& perm = group.generators()[g];
    for (int i = 0; i < e; ++i) {
      const Edge& ed = host.edges()[i];
      const int j = index[perm[ed.u] * n + perm[ed.v]];
      if (j < 0) throw InputError("group generator is not an automorphism of the host");
      image[g][i] = j;
    }
  }
  std::vector<int> orbit_of(e, -1);
  std::vector<EdgeOrbit> orbits;
  for (int start = 0; start < e; ++start) {
    if (orbit_of[start] >= 0) continue;
    EdgeOrbit o{EdgeSet(e), start};
    std::vector<int> stack{start};
    orbit_of[start] = static_cast<int>(orbits.size());
    while (!stack.empty()) {
      const int cur = stack.back();
      stack.pop_back();
      o.edges.set(cur);
      for (const auto& img : image) {
        const int nxt = img[cur];
        if (orbit_of[nxt] < 0) {
          orbit_of[nxt] = static_cast<int>(orbits.size());
          stack.push_back(nxt);
        }
      }
    }
    orbits.push_back(std::move(o));
  }
  return orbits;  // starts ascend, so already sorted by representative
}

// ------------------------------------------------------------ the lattice

FixedPointLattice::FixedPointLattice(Graph host, const GeneratedGroup& group)
    : host_(std::move(host)), orbits_(edge_orbits(group, host_)), prime_(group.prime()) {
  if (num_orbits() > kMaxOrbits)
    throw CapacityError("fixed-point enumeration is limited to 20 orbits (found " +
                        std::to_string(num_orbits()) + ")");
  const int n = host_.num_vertices();
  edge_orbit_.assign(host_.num_edges(), -1);
  for (std::size_t o = 0; o < orbits_.size(); ++o) {
    std::vector<VertexMask> adj(n, 0);
    for (int i : orbits_[o].edges.indices()) {
      const Edge& e = host_.edges()[i];
      adj[e.u] |= vertex_bit(e.v);
      adj[e.v] |= vertex_bit(e.u);
      edge_orbit_[i] = static_cast<int>(o);
    }
    orbit_adj_.push_back(std::move(adj));
    orbit_size_.push_back(orbits_[o].size());
  }
}

EdgeSet FixedPointLattice::edges_of(OrbitSet s) const {
  EdgeSet out(host_.num_edges());
  for (OrbitSet r = s; r; r &= r - 1) out |= orbits_.at(std::countr_zero(r)).edges;
  return out;
}

FixedPoint FixedPointLattice::point(OrbitSet s) const {
  if (s > full()) throw InputError("orbit set out of range");
  return FixedPoint{s, edges_of(s), std::popcount(s)};
}

Graph FixedPointLattice::graph_of(OrbitSet s) const { return edge_subgraph(host_, edges_of(s)); }

int FixedPointLattice::edge_count(OrbitSet s) const {
  int c = 0;
  for (OrbitSet r = s; r; r &= r - 1) c += orbit_size_[std::countr_zero(r)];
  return c;
}

void FixedPointLattice::fill_adjacency(OrbitSet s, std::span<VertexMask> out) const {
  const int n = host_.num_vertices();
  std::fill(out.begin(), out.begin() + n, 0);
  for (OrbitSet r = s; r; r &= r - 1) {
    const auto& a = orbit_adj_[std::countr_zero(r)];
    for (int v = 0; v < n; ++v) out[v] |= a[v];
  }
}

std::optional<OrbitSet> FixedPointLattice::decompose(const EdgeSet& edges) const {
  if (edges.universe() != static_cast<std::size_t>(host_.num_edges()))
    throw InputError("edge set does not belong to this host");
  OrbitSet s = 0;
  for (std::size_t o = 0; o < orbits_.size(); ++o) {
    if (!orbits_[o].edges.intersects(edges)) continue;
    if (!orbits_[o].edges.is_subset_of(edges)) return std::nullopt;
    s |= OrbitSet{1} << o;
  }
  return s;
}

std::vector<OrbitSet> FixedPointLattice::orbit_sets_at_level(int level) const {
  std::vector<OrbitSet> out;
  for (std::uint64_t s = 0; s < size(); ++s)
    if (std::popcount(s) == level) out.push_back(static_cast<OrbitSet>(s));
  return out;
}

// -------------------------------------------------------- difference sets

int plus_position(const FieldSpec& f, int index) {
  if (index <= 0 || index >= f.order()) throw InputError("zero has no plus-set position");
  const int rep = std::min(index, f.neg(index));
  const auto plus = plus_set(f);
  for (std::size_t i = 0; i < plus.size(); ++i)
    if (plus[i].index() == rep) return static_cast<int>(i);
  throw LemmaViolation("plus set misses a representative");
}

DifferenceSet::DifferenceSet(FieldSpec f, std::uint64_t plus_mask)
    : f_(std::move(f)), mask_(plus_mask) {
  const std::size_t k = plus_set(f_).size();
  if (k < 64 && (plus_mask >> k) != 0) throw InputError("difference set outside the plus set");
}

DifferenceSet DifferenceSet::from_elements(const FieldSpec& f, std::span<const FieldElem> elems) {
  const auto plus = plus_set(f);
  std::uint64_t mask = 0;
  for (const auto& x : elems) {
    auto it = std::find(plus.begin(), plus.end(), x);
    if (it == plus.end())
      throw InputError("element " + x.to_string() + " is not in the plus set");
    mask |= std::uint64_t{1} << (it - plus.begin());
  }
  return DifferenceSet(f, mask);
}

DifferenceSet DifferenceSet::from_indices(const FieldSpec& f, std::initializer_list<int> indices) {
  return from_indices(f, std::span<const int>(indices.begin(), indices.size()));
}

DifferenceSet DifferenceSet::from_indices(const FieldSpec& f, std::span<const int> indices) {
  std::vector<FieldElem> elems;
  for (int i : indices) elems.push_back(f.element(i));
  return from_elements(f, elems);
}

int DifferenceSet::size() const noexcept { return std::popcount(mask_); }

std::vector<FieldElem> DifferenceSet::elements() const {
  const auto plus = plus_set(f_);
  std::vector<FieldElem> out;
  for (std::size_t i = 0; i < plus.size(); ++i)
    if ((mask_ >> i) & 1U) out.push_back(plus[i]);
  return out;
}

std::vector<int> DifferenceSet::symmetric_closure() const {
  std::vector<int> out;
  for (const auto& x : elements()) {
    out.push_back(x.index());
    out.push_back(f_.neg(x.index()));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::string> DifferenceSet::to_strings() const {
  std::vector<std::string> out;
  for (const auto& x : elements()) out.push_back(x.to_string());
  return out;
}

Graph difference_graph(const DifferenceSet& a) {
  const FieldSpec& f = a.field();
  const int q = f.order();
  std::vector<bool> in(q, false);
  for (int x : a.symmetric_closure()) in[x] = true;
  std::vector<Edge> edges;
  for (int u = 0; u < q; ++u)
    for (int v = u + 1; v < q; ++v)
      if (in[f.sub(u, v)]) edges.push_back({u, v});
  return Graph(q, std::move(edges));
}

std::optional<FieldElem> difference_iso(const DifferenceSet& a, const DifferenceSet& b) {
  if (!(a.field() == b.field())) throw InputError("difference sets over different fields");
  const FieldSpec& f = a.field();
  const auto ca = a.symmetric_closure();
  const auto cb = b.symmetric_closure();
  if (ca.size() != cb.size()) return std::nullopt;
  std::vector<int> order;
  for (const auto& x : plus_set(f)) order.push_back(x.index());
  for (const auto& x : plus_set(f))
    if (f.neg(x.index()) != x.index()) order.push_back(f.neg(x.index()));
  for (int lambda : order) {
    std::vector<int> img;
    for (int x : ca) img.push_back(f.mul(lambda, x));
    std::sort(img.begin(), img.end());
    if (img == cb) return f.element(lambda);
  }
  return std::nullopt;
}

EmbeddingResult embed_small_set(const DifferenceSet& a, const DifferenceSet& b) {
  if (!(a.field() == b.field())) throw InputError("difference sets over different fields");
  const FieldSpec& f = a.field();
  const int plus = static_cast<int>(plus_set(f).size());
  EmbeddingResult r;
  r.hypothesis_met = a.size() < plus && b.size() * (plus - a.size()) < plus;
  for (int lambda = 1; lambda < f.order(); ++lambda) {
    std::uint64_t img = 0;
    for (const auto& x : b.elements()) img |= std::uint64_t{1} << plus_position(f, f.mul(lambda, x.index()));
    if ((img & ~a.mask()) == 0) {
      r.lambda = f.element(lambda);
      r.image = DifferenceSet(f, img);
      return r;
    }
  }
  return r;
}

Graph sylow_fixed_point(int p, int m, std::span<const DifferenceSet> a_list) {
  if (static_cast<int>(a_list.size()) != m) throw InputError("sylow fixed point needs m sets");
  std::vector<Graph> parts;
  for (const auto& a : a_list) {
    if (a.field().p() != p || a.field().m() != 1)
      throw InputError("sylow fixed point sets must live in F_p");
    parts.push_back(difference_graph(a));
  }
  return lexicographic_product(parts);
}

int empty_prefix(std::span<const DifferenceSet> a_list) {
  for (std::size_t i = 0; i < a_list.size(); ++i)
    if (!a_list[i].empty()) return static_cast<int>(i);
  throw DomainError("empty prefix is undefined when every set is empty");
}

Graph product_fixed_point(const Graph& c, std::span<const DifferenceSet> a_list) {
  if (static_cast<int>(a_list.size()) != c.num_vertices())
    throw InputError("product fixed point needs one set per block");
  std::vector<Graph> parts;
  for (const auto& a : a_list) {
    if (!(a.field() == a_list[0].field())) throw InputError("blocks over different fields");
    parts.push_back(difference_graph(a));
  }
  return inhabited_graph(c, parts);
}

// ------------------------------------------------------------- families

RotationFamily::RotationFamily(const FieldSpec& f)
    : f_(f), lattice_(complete_graph(f.order()), rotation_group(f)) {
  for (const auto& o : lattice_.orbits()) {
    const Edge& rep = lattice_.host().edges()[o.representative];
    const int pos = plus_position(f_, f_.sub(rep.v, rep.u));
    const auto expected =
        host_edge_set(lattice_.host(), difference_graph(DifferenceSet(f_, std::uint64_t{1} << pos)));
    if (!(expected == o.edges)) throw LemmaViolation("rotation orbit is not a difference graph");
    orbit_to_plus_.push_back(pos);
  }
}

DifferenceSet RotationFamily::set_of(OrbitSet s) const {
  std::uint64_t mask = 0;
  for (OrbitSet r = s; r; r &= r - 1) mask |= std::uint64_t{1} << orbit_to_plus_[std::countr_zero(r)];
  return DifferenceSet(f_, mask);
}

OrbitSet RotationFamily::orbit_set_of(const DifferenceSet& a) const {
  OrbitSet s = 0;
  for (std::size_t o = 0; o < orbit_to_plus_.size(); ++o)
    if ((a.mask() >> orbit_to_plus_[o]) & 1U) s |= OrbitSet{1} << o;
  return s;
}

SylowFamily::SylowFamily(int p, int m)
    : p_(p),
      m_(m),
      fp_(field_make(p, 1)),
      lattice_(complete_graph(sylow_group(p, m).degree()), sylow_group(p, m)) {
  const int plus = static_cast<int>(plus_set(fp_).size());
  std::map<EdgeSet, std::pair<int, int>> single;
  for (int j = 0; j < m; ++j)
    for (int x = 0; x < plus; ++x) {
      std::vector<DifferenceSet> list(m, DifferenceSet(fp_, 0));
      list[j] = DifferenceSet(fp_, std::uint64_t{1} << x);
      single[host_edge_set(lattice_.host(), sylow_fixed_point(p, m, list))] = {j, x};
    }
  if (static_cast<int>(single.size()) != lattice_.num_orbits())
    throw LemmaViolation("sylow orbit count differs from m * |F_p^+|");
  for (const auto& o : lattice_.orbits()) {
    auto it = single.find(o.edges);
    if (it == single.end()) throw LemmaViolation("sylow orbit is not a single-set product");
    orbit_label_.push_back(it->second);
  }
}

std::vector<DifferenceSet> SylowFamily::sets_of(OrbitSet s) const {
  std::vector<std::uint64_t> masks(m_, 0);
  for (OrbitSet r = s; r; r &= r - 1) {
    const auto [j, x] = orbit_label_[std::countr_zero(r)];
    masks[j] |= std::uint64_t{1} << x;
  }
  std::vector<DifferenceSet> out;
  for (auto mk : masks) out.emplace_back(fp_, mk);
  return out;
}

OrbitSet SylowFamily::orbit_set_of(std::span<const DifferenceSet> a_list) const {
  if (static_cast<int>(a_list.size()) != m_) throw InputError("a_list needs m sets");
  OrbitSet s = 0;
  for (std::size_t o = 0; o < orbit_label_.size(); ++o) {
    const auto [j, x] = orbit_label_[o];
    if ((a_list[j].mask() >> x) & 1U) s |= OrbitSet{1} << o;
  }
  return s;
}

namespace {

Graph join_of_complete(int q, int d) {
  std::vector<Graph> parts(d, complete_graph(q));
  return join(parts);
}

GeneratedGroup power_of_rotation(const FieldSpec& f, int d) {
  std::vector<GeneratedGroup> gs(d, rotation_group(f));
  return product_group(gs);
}

}  // namespace

ProductFamily::ProductFamily(const FieldSpec& f, int d)
    : f_(f), d_(d), lattice_(join_of_complete(f.order(), d), power_of_rotation(f, d)) {
  const int q = f.order();
  for (const auto& o : lattice_.orbits()) {
    const Edge& rep = lattice_.host().edges()[o.representative];
    const int bu = rep.u / q, bv = rep.v / q;
    Graph c(d);
    std::vector<DifferenceSet> sets(d, DifferenceSet(f_, 0));
    Label label{};
    if (bu != bv) {
      c = Graph(d, {{bu, bv}});
      label = {bu, bv, -1};
    } else {
      const int pos = plus_position(f_, f_.sub(rep.v % q, rep.u % q));
      sets[bu] = DifferenceSet(f_, std::uint64_t{1} << pos);
      label = {bu, -1, pos};
    }
    const auto expected = host_edge_set(lattice_.host(), product_fixed_point(c, sets));
    if (!(expected == o.edges)) throw LemmaViolation("product orbit has an unexpected shape");
    labels_.push_back(label);
  }
}

ProductFamily::Decomposition ProductFamily::decompose(OrbitSet s) const {
  std::vector<Edge> cedges;
  std::vector<std::uint64_t> masks(d_, 0);
  for (OrbitSet r = s; r; r &= r - 1) {
    const Label& l = labels_[std::countr_zero(r)];
    if (l.b >= 0) {
      cedges.push_back({l.a, l.b});
    } else {
      masks[l.a] |= std::uint64_t{1} << l.plus;
    }
  }
  Decomposition out{Graph(d_, std::move(cedges)), {}};
  for (auto mk : masks) out.sets.emplace_back(f_, mk);
  return out;
}

}  // namespace indsub
