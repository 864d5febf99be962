#pragma once

#include <optional>
#include <string>
#include <vector>

#include "indsub/bigint.hpp"
#include "indsub/graph.hpp"
#include "indsub/group.hpp"
#include "indsub/property.hpp"

namespace indsub {

inline constexpr int kNaiveEdgeCap = 25;

// Worker-thread budget: INDSUB_MAX_THREADS if set (>= 1), else hardware
// concurrency.
int max_threads();

// Σ_{S ⊆ E(g)} Φ(g[S]) (−1)^{|S|}, exact.
BigInt alt_enum_naive(const PropertyHandle& h, const Graph& g, int max_edges = kNaiveEdgeCap);

// Φ on the fixed points of one lattice, memoized by orbit set.
class LatticeEvaluator {
 public:
  LatticeEvaluator(const FixedPointLattice& lattice, const PropertyHandle& h);

  const FixedPointLattice& lattice() const noexcept { return lattice_; }
  int p() const noexcept { return p_; }
  bool phi(OrbitSet s) const;
  // Σ_{B ⊆ s} Φ(B)(−1)^{level(B)} mod p, by direct sub-point enumeration.
  int residue(OrbitSet s) const;
  // The same for every orbit set at once (subset-sum transform).
  const std::vector<int>& all_residues() const;

 private:
  const FixedPointLattice& lattice_;
  PropertyHandle h_;
  int p_;
  mutable std::vector<std::int8_t> memo_;
  mutable std::vector<int> residues_;
};

int alt_enum_modp(const PropertyHandle& h, const FixedPointLattice& lattice, OrbitSet target);
// Input error when target is not a union of orbits.
int alt_enum_modp(const PropertyHandle& h, const FixedPointLattice& lattice, const EdgeSet& target);

struct LevelVector {
  int p = 2;
  std::vector<int> entries;
};

struct LevelVectors {
  LevelVector w;
  LevelVector w_hat;
};

LevelVectors level_vectors(const PropertyHandle& h, const FixedPointLattice& lattice);

struct TransformMatrix {
  int n = 0;
  std::optional<int> c;
  int rows = 0;
  int cols = 0;
  std::vector<BigInt> entries;  // row-major
  const BigInt& at(int i, int j) const { return entries[static_cast<std::size_t>(i) * cols + j]; }
};

// (C_n)_{i,j} = (−1)^j binom(n−j, i−j), size (n+1)×(n+1).
TransformMatrix transform_matrix(int n);
// Rows c..n, columns 0..n−c of C_n.
TransformMatrix restricted_transform_matrix(int n, int c);
BigInt determinant(const TransformMatrix& m);

bool verify_duality(const LevelVector& w, const LevelVector& w_hat, int n, int p);

struct ResiduePoint {
  FixedPoint point;
  int residue = 0;
};

std::vector<ResiduePoint> minimal_failing_fixed_points(const PropertyHandle& h,
                                                       const FixedPointLattice& lattice);

struct DualityResult {
  bool hypothesis_met = false;
  std::string violation;  // why the hypothesis fails
  std::optional<ResiduePoint> witness;
};

DualityResult duality_witness(const PropertyHandle& h, const FixedPointLattice& lattice, int c);

}  // namespace indsub
