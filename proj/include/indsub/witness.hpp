#pragma once

#include <optional>
#include <string>
#include <vector>

#include "indsub/alt_enum.hpp"
#include "indsub/field.hpp"
#include "indsub/graph.hpp"
#include "indsub/group.hpp"
#include "indsub/property.hpp"

namespace indsub {

int q_largest_prime_power(long long n);

enum class WitnessKind { Duality, AvalancheMinimal, SylowBiclique, Concentrated };
std::string to_string(WitnessKind k);

enum class CertificateType { RegularDegree, Biclique, ExactTreewidth };
std::string to_string(CertificateType t);

struct Certificate {
  CertificateType type = CertificateType::RegularDegree;
  int value = 0;
  std::optional<BicliqueCertificate> biclique;
};

struct WitnessReport {
  WitnessKind kind = WitnessKind::Duality;
  std::string group;  // "rot", "syl" or "rot^d"
  int p = 2;
  int m = 1;
  std::optional<int> k;
  std::string property;
  FixedPoint fixed_point;
  Graph graph;
  std::vector<std::vector<std::string>> difference_sets;  // per block/coordinate
  int residue = 0;
  int level = 0;
  Certificate certificate;
  int claimed_treewidth_lower_bound = 0;
  std::optional<BigInt> naive;     // alt_enum_naive, when |E| <= 25
  std::optional<int> treewidth;    // treewidth_exact, when |V| <= 11
};

struct WitnessOptions {
  bool verify = true;  // naive residue and exact-treewidth confirmation
};

// Machine-checks the certificate, the residue and (when feasible and
// requested) the naive engine and exact treewidth; throws LemmaViolation.
void check_report(WitnessReport& r, const PropertyHandle& h, const WitnessOptions& opt);

struct AvalancheEntry {
  DifferenceSet b;
  FieldElem lambda;
  DifferenceSet image;
};

struct AvalancheReport {
  long long t_num = 0;  // t = t_num / t_den
  long long t_den = 1;
  std::vector<AvalancheEntry> entries;
};

AvalancheReport avalanche_closure(const PropertyHandle& h, const DifferenceSet& a);

WitnessReport prime_power_witness(const PropertyHandle& h, int p, int m,
                                  const WitnessOptions& opt = {});
WitnessReport sylow_biclique_witness(const PropertyHandle& h, int p, int m,
                                     const WitnessOptions& opt = {});

// For each level i: if every level-i Sylow point with empty prefix 0
// satisfies Φ, then every level-i point does.
bool verify_sylow_pushdown(const PropertyHandle& h, int p, int m);

struct RevolutionCheck {
  bool pass = true;
  long long checked = 0;
  std::vector<int> failing_masks;  // per-coordinate plus masks of the first failure
  int failing_power = 0;
};

// C^∅∘C^{A_1}∘…∘C^{A_{m−i}} (i leading empties) ⊆ φ^i(C^{A_1}∘…∘C^{A_m}) for
// every a_list over F_p and every 1 <= i < m.
RevolutionCheck verify_forward_revolution(int p, int m);

enum class Verdict { Trivial, Concentrated, Scattered };
std::string to_string(Verdict v);

struct KClassification {
  int k = 0;
  int q = 1;
  int d = 1;
  Verdict verdict = Verdict::Trivial;
  std::optional<WitnessReport> report;  // concentrated
  std::optional<Graph> h;               // scattered: H on k - q vertices
  std::optional<PropertySpec> shifted;  // scattered: (Φ − H)
  std::optional<OrbitSet> failing_point;
};

inline constexpr int kMaxClassifyK = 12;

KClassification classify_k(const PropertyHandle& h, int k, const WitnessOptions& opt = {});

struct ProbeResult {
  Graph h;
  PropertySpec shifted;
};

std::optional<ProbeResult> scattered_property_probe(const PropertyHandle& h, int k);

}  // namespace indsub
