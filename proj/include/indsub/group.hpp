#pragma once

#include <cstdint>
#include <optional>
#include <ranges>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "indsub/bigint.hpp"
#include "indsub/field.hpp"
#include "indsub/graph.hpp"

namespace indsub {

using Permutation = std::vector<int>;

class GeneratedGroup {
 public:
  GeneratedGroup(int degree, std::vector<Permutation> generators,
                 std::optional<int> prime = std::nullopt,
                 std::optional<BigInt> asserted_order = std::nullopt);

  int degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  // Prime p for which the group is asserted to be a p-group.
  std::optional<int> prime() const noexcept { return prime_; }
  const std::optional<BigInt>& asserted_order() const noexcept { return order_; }

 private:
  int degree_;
  std::vector<Permutation> generators_;
  std::optional<int> prime_;
  std::optional<BigInt> order_;
};

GeneratedGroup trivial_group(int degree, std::optional<int> prime = std::nullopt);
// Translations x -> x + e_i for the m basis vectors; vertex = element index.
GeneratedGroup rotation_group(const FieldSpec& f);
// Prefix-conditioned unit increments on [0,p)^m; tuple index with the first
// coordinate most significant.
GeneratedGroup sylow_group(int p, int m);
GeneratedGroup product_group(std::span<const GeneratedGroup> groups);
// Closure by breadth-first multiplication; nullopt once more than `limit`
// elements have been found.
std::optional<std::uint64_t> enumerate_group_order(const GeneratedGroup& g, std::size_t limit);

struct EdgeOrbit {
  EdgeSet edges;
  int representative = 0;  // lowest edge index
  int size() const { return static_cast<int>(edges.count()); }
};

// Orbits of the induced action on host edges, sorted by representative.
std::vector<EdgeOrbit> edge_orbits(const GeneratedGroup& group, const Graph& host);

inline constexpr int kMaxOrbits = 20;

using OrbitSet = std::uint32_t;

struct FixedPoint {
  OrbitSet orbit_set = 0;
  EdgeSet edges;
  int level = 0;
  bool is_subpoint_of(const FixedPoint& other) const {
    return (orbit_set & ~other.orbit_set) == 0;
  }
};

// All orbit unions of a p-group action on a host graph.
class FixedPointLattice {
 public:
  FixedPointLattice(Graph host, const GeneratedGroup& group);

  const Graph& host() const noexcept { return host_; }
  const std::vector<EdgeOrbit>& orbits() const noexcept { return orbits_; }
  int num_orbits() const noexcept { return static_cast<int>(orbits_.size()); }
  std::optional<int> prime() const noexcept { return prime_; }
  std::uint64_t size() const noexcept { return std::uint64_t{1} << orbits_.size(); }
  OrbitSet full() const noexcept { return static_cast<OrbitSet>(size() - 1); }

  FixedPoint point(OrbitSet s) const;
  EdgeSet edges_of(OrbitSet s) const;
  Graph graph_of(OrbitSet s) const;
  int edge_count(OrbitSet s) const;
  // Writes the adjacency of the fixed point into out[0..n).
  void fill_adjacency(OrbitSet s, std::span<VertexMask> out) const;
  // Orbit factorization of an edge set; nullopt if it is not a fixed point.
  std::optional<OrbitSet> decompose(const EdgeSet& edges) const;

  auto points() const {
    return std::views::iota(std::uint64_t{0}, size()) |
           std::views::transform([this](std::uint64_t s) { return point(static_cast<OrbitSet>(s)); });
  }
  std::vector<OrbitSet> orbit_sets_at_level(int level) const;

 private:
  Graph host_;
  std::vector<EdgeOrbit> orbits_;
  std::vector<std::vector<VertexMask>> orbit_adj_;
  std::vector<int> orbit_size_;
  std::vector<int> edge_orbit_;  // edge index -> orbit index
  std::optional<int> prime_;
};

// A subset of plus_set(F) as a bitmask over plus_set positions.
class DifferenceSet {
 public:
  DifferenceSet(FieldSpec f, std::uint64_t plus_mask);
  static DifferenceSet from_elements(const FieldSpec& f, std::span<const FieldElem> elems);
  // Elements given by field index (the integer value in prime fields).
  static DifferenceSet from_indices(const FieldSpec& f, std::initializer_list<int> indices);
  static DifferenceSet from_indices(const FieldSpec& f, std::span<const int> indices);

  const FieldSpec& field() const noexcept { return f_; }
  std::uint64_t mask() const noexcept { return mask_; }
  int size() const noexcept;
  bool empty() const noexcept { return mask_ == 0; }
  std::vector<FieldElem> elements() const;
  // Indices of A ∪ −A.
  std::vector<int> symmetric_closure() const;
  std::vector<std::string> to_strings() const;

  friend bool operator==(const DifferenceSet& a, const DifferenceSet& b) {
    return a.f_ == b.f_ && a.mask_ == b.mask_;
  }

 private:
  FieldSpec f_;
  std::uint64_t mask_;
};

// Position of x or -x in plus_set(f).
int plus_position(const FieldSpec& f, int index);

Graph difference_graph(const DifferenceSet& a);
// λ with λ(A ∪ −A) = B ∪ −B; searched over plus_set order, then negatives.
std::optional<FieldElem> difference_iso(const DifferenceSet& a, const DifferenceSet& b);

struct EmbeddingResult {
  bool hypothesis_met = false;
  std::optional<FieldElem> lambda;
  std::optional<DifferenceSet> image;  // subset of a, isomorphic to b
};
EmbeddingResult embed_small_set(const DifferenceSet& a, const DifferenceSet& b);

Graph sylow_fixed_point(int p, int m, std::span<const DifferenceSet> a_list);
int empty_prefix(std::span<const DifferenceSet> a_list);
Graph product_fixed_point(const Graph& c, std::span<const DifferenceSet> a_list);

// Fixed points of Rot_{p^m} on K_{p^m}, labelled as difference sets.
class RotationFamily {
 public:
  explicit RotationFamily(const FieldSpec& f);
  const FieldSpec& field() const noexcept { return f_; }
  const FixedPointLattice& lattice() const noexcept { return lattice_; }
  DifferenceSet set_of(OrbitSet s) const;
  OrbitSet orbit_set_of(const DifferenceSet& a) const;

 private:
  FieldSpec f_;
  FixedPointLattice lattice_;
  std::vector<int> orbit_to_plus_;
};

// Fixed points of Syl_{p^m} on K_{p^m}, labelled as lists of m difference
// sets over F_p.
class SylowFamily {
 public:
  SylowFamily(int p, int m);
  int p() const noexcept { return p_; }
  int m() const noexcept { return m_; }
  const FieldSpec& base_field() const noexcept { return fp_; }
  const FixedPointLattice& lattice() const noexcept { return lattice_; }
  std::vector<DifferenceSet> sets_of(OrbitSet s) const;
  OrbitSet orbit_set_of(std::span<const DifferenceSet> a_list) const;

 private:
  int p_, m_;
  FieldSpec fp_;
  FixedPointLattice lattice_;
  std::vector<std::pair<int, int>> orbit_label_;  // (coordinate, plus position)
};

// Fixed points of Rot^d on the join of d copies of K_{p^m}.
class ProductFamily {
 public:
  ProductFamily(const FieldSpec& f, int d);
  const FieldSpec& field() const noexcept { return f_; }
  int blocks() const noexcept { return d_; }
  const FixedPointLattice& lattice() const noexcept { return lattice_; }
  struct Decomposition {
    Graph connection;                 // C on d vertices
    std::vector<DifferenceSet> sets;  // A^1..A^d
  };
  Decomposition decompose(OrbitSet s) const;

 private:
  FieldSpec f_;
  int d_;
  FixedPointLattice lattice_;
  // cross orbit: (i, j) with i < j and plus = -1; inner orbit: (block, -1, plus)
  struct Label {
    int a, b, plus;
  };
  std::vector<Label> labels_;
};

}  // namespace indsub
