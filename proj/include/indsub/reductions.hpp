#pragma once

#include <functional>
#include <string>
#include <vector>

#include "indsub/bigint.hpp"
#include "indsub/graph.hpp"
#include "indsub/property.hpp"

namespace indsub {

enum class CountMethod { Direct, Reduction };
std::string to_string(CountMethod m);

struct CountResult {
  BigInt value;
  CountMethod method = CountMethod::Direct;
};

inline constexpr long long kMaxEnumeration = 100'000'000;
inline constexpr int kMaxHomPatternVertices = 5;
inline constexpr int kMaxHomTargetVertices = 12;
inline constexpr int kMaxShiftVertices = 4;
inline constexpr int kMaxIdentityEdges = 10;
inline constexpr int kMaxCoefficientEdges = 6;

// Σ over k-subsets X of Φ(G[X]).
CountResult count_indsub(const PropertyHandle& h, int k, const Graph& g);

// Oracle for #IndSub(Φ, k')(G'); receives the original property.
using IndSubOracle = std::function<BigInt(const PropertyHandle&, int, const Graph&)>;

// #IndSub((Φ − H), k)(G) = Σ_{X ⊆ V(H)} (−1)^{|X|} #IndSub(Φ, k+|V(H)|)(G ⊎ (H∖X)).
CountResult count_indsub_shifted(const PropertyHandle& h, const Graph& hgraph, int k,
                                 const Graph& g, const IndSubOracle& oracle);

CountResult count_hom(const Graph& hpat, const Graph& g);

// Homomorphisms pattern -> g with coloring[image(v)] = v. The coloring need
// not be a homomorphism into this particular pattern.
CountResult count_cp_hom(const Graph& pattern, const Graph& g, std::span<const int> coloring);
CountResult count_cp_hom(const ColoredGraph& cg);

// Σ over transversals (one vertex per color) of Φ on the induced subgraph,
// vertices ordered by color.
CountResult count_cp_indsub(const PropertyHandle& h, const ColoredGraph& cg);

// coef[T] = Σ_{S ⊆ T} Φ(H[S]) (−1)^{|T∖S|}, indexed by edge bitmask of pattern.
std::vector<BigInt> cpindsub_coefficients(const PropertyHandle& h, const Graph& pattern);

struct IdentityCheck {
  bool holds = false;
  BigInt lhs;
  BigInt rhs;
  std::optional<BigInt> top_coefficient;  // |E(pattern)| <= 6
  std::optional<BigInt> chi_hat;          // alternating enumerator of pattern
};

IdentityCheck check_cpindsub_identity(const PropertyHandle& h, const Graph& pattern,
                                      const ColoredGraph& cg);
bool verify_cpindsub_identity(const PropertyHandle& h, const Graph& pattern,
                              const ColoredGraph& cg);

struct Gadget {
  ColoredGraph graph;
  std::vector<int> a_side;
  std::vector<int> b_side;
};

// Colored graph whose cp-hom count from f equals the ell-clique count of g.
Gadget clique_gadget_full(const Graph& f, int ell, const Graph& g);
ColoredGraph clique_gadget(const Graph& f, int ell, const Graph& g);

CountResult count_cliques(const Graph& g, int ell);

}  // namespace indsub
