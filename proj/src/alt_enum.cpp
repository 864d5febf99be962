#include "indsub/alt_enum.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <thread>

#include "indsub/errors.hpp"

namespace indsub {

int max_threads() {
  if (const char* env = std::getenv("INDSUB_MAX_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<int>(std::min<long>(v, 256));
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

namespace {

// Gray-code sweep over the low `free_bits` edges with the high edges fixed
// by `chunk`; returns the signed sum.
std::int64_t naive_chunk(const PropertySpec& spec, const Graph& g, int free_bits,
                         std::uint64_t chunk) {
  const int n = g.num_vertices();
  const int e = g.num_edges();
  std::array<VertexMask, kMaxVertices> adj{};
  int size = 0;
  for (int i = free_bits; i < e; ++i)
    if ((chunk >> (i - free_bits)) & 1U) {
      const Edge& ed = g.edges()[i];
      adj[ed.u] |= vertex_bit(ed.v);
      adj[ed.v] |= vertex_bit(ed.u);
      ++size;
    }
  const std::span<const VertexMask> view(adj.data(), n);
  std::int64_t sum = spec.evaluate(view) ? (size % 2 ? -1 : 1) : 0;
  const std::uint64_t total = std::uint64_t{1} << free_bits;
  for (std::uint64_t i = 1; i < total; ++i) {
    const int bit = std::countr_zero(i);
    const Edge& ed = g.edges()[bit];
    adj[ed.u] ^= vertex_bit(ed.v);
    adj[ed.v] ^= vertex_bit(ed.u);
    size += (adj[ed.u] >> ed.v) & 1U ? 1 : -1;
    if (spec.evaluate(view)) sum += size % 2 ? -1 : 1;
  }
  return sum;
}

}  // namespace

BigInt alt_enum_naive(const PropertyHandle& h, const Graph& g, int max_edges) {
  if (max_edges > 62) throw CapacityError("naive engine cap cannot exceed 62 edges");
  if (g.num_edges() > max_edges)
    throw CapacityError("naive alternating enumerator is capped at " + std::to_string(max_edges) +
                        " edges (graph has " + std::to_string(g.num_edges()) + ")");
  const int e = g.num_edges();
  const int threads = max_threads();
  const int fixed_bits = threads > 1 ? std::min(e, 6) : 0;
  const int free_bits = e - fixed_bits;
  const std::uint64_t chunks = std::uint64_t{1} << fixed_bits;
  std::vector<std::int64_t> partial(chunks, 0);
  const PropertySpec& spec = h.spec();
  if (threads <= 1 || chunks == 1) {
    for (std::uint64_t c = 0; c < chunks; ++c) partial[c] = naive_chunk(spec, g, free_bits, c);
  } else {
    std::vector<std::thread> pool;
    const int workers = static_cast<int>(std::min<std::uint64_t>(threads, chunks));
    for (int t = 0; t < workers; ++t)
      pool.emplace_back([&, t] {
        for (std::uint64_t c = t; c < chunks; c += workers)
          partial[c] = naive_chunk(spec, g, free_bits, c);
      });
    for (auto& th : pool) th.join();
  }
  BigInt total = 0;
  for (auto v : partial) total += v;
  return total;
}

// ------------------------------------------------------- lattice engine

LatticeEvaluator::LatticeEvaluator(const FixedPointLattice& lattice, const PropertyHandle& h)
    : lattice_(lattice), h_(h) {
  if (!lattice.prime()) throw InputError("mod-p engine needs a group asserted to be a p-group");
  p_ = *lattice.prime();
  for (const auto& o : lattice.orbits()) {
    int s = o.size();
    while (s % p_ == 0) s /= p_;
    if (s != 1) throw InputError("orbit size is not a power of the asserted prime");
  }
  memo_.assign(lattice.size(), -1);
}

bool LatticeEvaluator::phi(OrbitSet s) const {
  auto& slot = memo_.at(s);
  if (slot < 0) {
    std::array<VertexMask, kMaxVertices> adj{};
    const int n = lattice_.host().num_vertices();
    lattice_.fill_adjacency(s, std::span<VertexMask>(adj.data(), n));
    slot = h_.evaluate_uncached(std::span<const VertexMask>(adj.data(), n)) ? 1 : 0;
  }
  return slot == 1;
}

int LatticeEvaluator::residue(OrbitSet s) const {
  int r = 0;
  // all submasks of s, including s and 0
  for (OrbitSet b = s;; b = (b - 1) & s) {
    if (phi(b)) r += std::popcount(b) % 2 ? p_ - 1 : 1;
    if (b == 0) break;
  }
  return r % p_;
}

const std::vector<int>& LatticeEvaluator::all_residues() const {
  if (!residues_.empty()) return residues_;
  const std::uint64_t size = lattice_.size();
  residues_.assign(size, 0);
  for (std::uint64_t s = 0; s < size; ++s)
    if (phi(static_cast<OrbitSet>(s))) residues_[s] = std::popcount(s) % 2 ? p_ - 1 : 1;
  for (int bit = 0; bit < lattice_.num_orbits(); ++bit)
    for (std::uint64_t s = 0; s < size; ++s)
      if ((s >> bit) & 1U) residues_[s] = (residues_[s] + residues_[s ^ (std::uint64_t{1} << bit)]) % p_;
  return residues_;
}

int alt_enum_modp(const PropertyHandle& h, const FixedPointLattice& lattice, OrbitSet target) {
  if (target > lattice.full()) throw InputError("orbit set out of range");
  return LatticeEvaluator(lattice, h).residue(target);
}

int alt_enum_modp(const PropertyHandle& h, const FixedPointLattice& lattice, const EdgeSet& target) {
  auto s = lattice.decompose(target);
  if (!s) throw InputError("target is not a fixed point of the group");
  return alt_enum_modp(h, lattice, *s);
}

LevelVectors level_vectors(const PropertyHandle& h, const FixedPointLattice& lattice) {
  LatticeEvaluator ev(lattice, h);
  const int n = lattice.num_orbits();
  const int p = ev.p();
  LevelVectors out{{p, std::vector<int>(n + 1, 0)}, {p, std::vector<int>(n + 1, 0)}};
  const auto& res = ev.all_residues();
  for (std::uint64_t s = 0; s < lattice.size(); ++s) {
    const int l = std::popcount(s);
    if (ev.phi(static_cast<OrbitSet>(s))) out.w.entries[l] = (out.w.entries[l] + 1) % p;
    out.w_hat.entries[l] = (out.w_hat.entries[l] + res[s]) % p;
  }
  return out;
}

// -------------------------------------------------------------- matrices

TransformMatrix transform_matrix(int n) {
  if (n < 0 || n > 64) throw InputError("transform matrix size out of range");
  TransformMatrix m{n, std::nullopt, n + 1, n + 1, {}};
  m.entries.assign(static_cast<std::size_t>(n + 1) * (n + 1), 0);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= i; ++j) {
      BigInt b = binomial(n - j, i - j);
      m.entries[static_cast<std::size_t>(i) * (n + 1) + j] = j % 2 ? BigInt(-b) : b;
    }
  return m;
}

TransformMatrix restricted_transform_matrix(int n, int c) {
  if (c < 0 || c > n) throw InputError("restriction needs 0 <= c <= n");
  const TransformMatrix full = transform_matrix(n);
  const int k = n - c + 1;
  TransformMatrix m{n, c, k, k, {}};
  m.entries.reserve(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) m.entries.push_back(full.at(i + c, j));
  return m;
}

BigInt determinant(const TransformMatrix& m) {
  if (m.rows != m.cols) throw InputError("determinant of a non-square matrix");
  const int k = m.rows;
  if (k == 0) return 1;
  std::vector<BigInt> a = m.entries;
  auto at = [&](int i, int j) -> BigInt& { return a[static_cast<std::size_t>(i) * k + j]; };
  BigInt prev = 1;
  int sign = 1;
  for (int col = 0; col < k - 1; ++col) {
    if (at(col, col) == 0) {
      int swap_row = -1;
      for (int r = col + 1; r < k; ++r)
        if (at(r, col) != 0) {
          swap_row = r;
          break;
        }
      if (swap_row < 0) return 0;
      for (int j = 0; j < k; ++j) std::swap(at(col, j), at(swap_row, j));
      sign = -sign;
    }
    for (int i = col + 1; i < k; ++i)
      for (int j = col + 1; j < k; ++j)
        at(i, j) = (at(i, j) * at(col, col) - at(i, col) * at(col, j)) / prev;
    prev = at(col, col);
  }
  return sign * at(k - 1, k - 1);
}

bool verify_duality(const LevelVector& w, const LevelVector& w_hat, int n, int p) {
  if (static_cast<int>(w.entries.size()) != n + 1 || static_cast<int>(w_hat.entries.size()) != n + 1)
    throw InputError("level vectors must have length n+1");
  const TransformMatrix c = transform_matrix(n);
  for (int i = 0; i <= n; ++i) {
    BigInt acc = 0;
    for (int j = 0; j <= n; ++j) acc += c.at(i, j) * w.entries[j];
    if (mod_p(acc, p) != mod_p(static_cast<std::int64_t>(w_hat.entries[i]), p)) return false;
  }
  return true;
}

// ------------------------------------------------------------- searches

std::vector<ResiduePoint> minimal_failing_fixed_points(const PropertyHandle& h,
                                                       const FixedPointLattice& lattice) {
  LatticeEvaluator ev(lattice, h);
  std::vector<ResiduePoint> out;
  if (!ev.phi(0)) return out;
  const std::uint64_t size = lattice.size();
  // down_ok[s]: Φ holds on s and on every sub-point of s
  std::vector<bool> down_ok(size, false);
  for (std::uint64_t s = 0; s < size; ++s) {
    bool children_ok = true;
    for (std::uint64_t r = s; r && children_ok; r &= r - 1)
      children_ok = down_ok[s & ~(r & -r)];
    const auto os = static_cast<OrbitSet>(s);
    if (ev.phi(os)) {
      down_ok[s] = children_ok;
    } else if (children_ok) {
      const int res = ev.residue(os);
      const int level = std::popcount(s);
      const int expected = level % 2 ? 1 : ev.p() - 1;  // −(−1)^level
      if (res == 0 || res != expected % ev.p())
        throw LemmaViolation("minimal failing fixed point with orbit set " + std::to_string(s) +
                             " has residue " + std::to_string(res));
      out.push_back({lattice.point(os), res});
    }
  }
  return out;
}

DualityResult duality_witness(const PropertyHandle& h, const FixedPointLattice& lattice, int c) {
  LatticeEvaluator ev(lattice, h);
  const int n = lattice.num_orbits();
  DualityResult r;
  if (c < 0 || c > n) {
    r.violation = "c must lie in [0, level of the host]";
    return r;
  }
  if (!ev.phi(0)) {
    r.violation = "property fails on the level-0 fixed point";
    return r;
  }
  for (std::uint64_t s = 0; s < lattice.size(); ++s)
    if (std::popcount(s) > n - c && ev.phi(static_cast<OrbitSet>(s))) {
      r.violation = "property holds on orbit set " + std::to_string(s) + " of level " +
                    std::to_string(std::popcount(s)) + " > " + std::to_string(n - c);
      return r;
    }
  r.hypothesis_met = true;
  const auto& res = ev.all_residues();
  for (std::uint64_t s = 0; s < lattice.size(); ++s)
    if (std::popcount(s) >= c && res[s] != 0) {
      r.witness = ResiduePoint{lattice.point(static_cast<OrbitSet>(s)), res[s]};
      return r;
    }
  throw LemmaViolation("duality hypothesis holds but no fixed point of level >= " +
                       std::to_string(c) + " is nonvanishing");
}

}  // namespace indsub
