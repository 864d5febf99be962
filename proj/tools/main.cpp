// indsub: command-line front end.
//
// Exit codes: 0 ok, 1 input error, 2 capacity error, 3 falsified lemma.

#include <CLI11.hpp>

#include <bit>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <set>
#include <sstream>

#include "indsub/acceptance.hpp"
#include "indsub/alt_enum.hpp"
#include "indsub/errors.hpp"
#include "indsub/json_io.hpp"
#include "indsub/reductions.hpp"
#include "indsub/witness.hpp"

using namespace indsub;

namespace {

struct PropertyArgs {
  std::string file;
  std::string builtin;
};

void add_property_options(CLI::App* cmd, PropertyArgs& a, bool required) {
  auto* f = cmd->add_option("--property", a.file, "property DSL file");
  auto* b = cmd->add_option("--builtin", a.builtin,
                            "built-in property: bipartite, independent, phi1, phi2, phi3, indset3");
  f->excludes(b);
  b->excludes(f);
  if (required) {
    auto* group = cmd->add_option_group("property");
    group->add_option(f);
    group->add_option(b);
    group->require_option(1);
  }
}

std::optional<PropertyHandle> load_property(const PropertyArgs& a) {
  if (!a.file.empty()) return PropertyHandle(read_property_file(a.file));
  if (!a.builtin.empty()) {
    auto spec = builtin_property(a.builtin);
    if (!spec) throw InputError("unknown built-in property '" + a.builtin + "'");
    return PropertyHandle(*spec);
  }
  return std::nullopt;
}

int prime_of(int order) {
  for (int p = 2; p <= order; ++p)
    if (order % p == 0) return p;
  return order;
}

// Fixed-point family chosen on the command line.
struct Family {
  std::unique_ptr<RotationFamily> rot;
  std::unique_ptr<SylowFamily> syl;
  std::unique_ptr<ProductFamily> prod;

  const FixedPointLattice& lattice() const {
    if (rot) return rot->lattice();
    if (syl) return syl->lattice();
    return prod->lattice();
  }

  Json label(OrbitSet s) const {
    if (rot) return rot->set_of(s).to_strings();
    if (syl) {
      Json out = Json::array();
      for (const auto& a : syl->sets_of(s)) out.push_back(a.to_strings());
      return out;
    }
    const auto dec = prod->decompose(s);
    Json sets = Json::array();
    for (const auto& a : dec.sets) sets.push_back(a.to_strings());
    Json conn = Json::array();
    for (const Edge& e : dec.connection.edges()) conn.push_back({e.u, e.v});
    return {{"connection", conn}, {"sets", sets}};
  }
};

Family make_family(const std::string& group, int p, int m, int d) {
  Family f;
  if (group == "rot") {
    f.rot = std::make_unique<RotationFamily>(field_make(p, m));
  } else if (group == "syl") {
    if (!is_prime(p)) throw InputError("p must be prime");
    f.syl = std::make_unique<SylowFamily>(p, m);
  } else if (group == "prod") {
    if (d < 1) throw InputError("--d must be positive");
    f.prod = std::make_unique<ProductFamily>(field_make(p, m), d);
  } else {
    throw InputError("unknown group '" + group + "' (rot, syl, prod)");
  }
  return f;
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

// ------------------------------------------------------------------ ae
struct AeArgs {
  PropertyArgs prop;
  std::string graph;
  std::string group = "rot";
  int p = 0, m = 1, d = 1;
  std::optional<std::uint32_t> orbit_set;
  int max_edges = kNaiveEdgeCap;
  std::string format = "json";
};

int run_ae(const AeArgs& a) {
  const PropertyHandle h = *load_property(a.prop);
  if (a.max_edges < 0 || a.max_edges > kNaiveEdgeCap)
    throw InputError("--max-edges-naive must lie in [0, 25]");
  std::optional<Graph> g;
  if (!a.graph.empty()) g = read_graph_file(a.graph);

  // Lattice: explicit --p, or K_{p^m} inferred from a complete-graph host size.
  std::optional<Family> fam;
  if (a.p > 0) {
    fam = make_family(a.group, a.p, a.m, a.d);
  } else if (g && g->num_vertices() >= 2 && a.group == "rot") {
    const int n = g->num_vertices();
    const int p = prime_of(n);
    int m = 0, t = n;
    while (t % p == 0) t /= p, ++m;
    if (t == 1 && n <= 64) fam = make_family("rot", p, m, 1);
  }
  if (!g && !(fam && a.orbit_set)) throw InputError("ae needs --graph or --p with --orbit-set");

  std::optional<OrbitSet> target;
  if (fam) {
    const auto& lat = fam->lattice();
    if (a.orbit_set) {
      if (*a.orbit_set > lat.full()) throw InputError("orbit set out of range");
      target = *a.orbit_set;
    } else if (g->num_vertices() == lat.host().num_vertices()) {
      target = lat.decompose(host_edge_set(lat.host(), *g));
    }
    if (target && !g) g = lat.graph_of(*target);
  }

  Json out = {{"property", h.spec().to_string()}, {"graph", to_json(*g)}};
  std::optional<BigInt> naive;
  if (g->num_edges() <= a.max_edges) {
    naive = alt_enum_naive(h, *g, a.max_edges);
    out["naive"] = to_json(*naive);
  } else {
    out["naive"] = nullptr;
    out["naive_skipped"] = "more than " + std::to_string(a.max_edges) + " edges";
  }
  if (fam && target) {
    const auto& lat = fam->lattice();
    const int p = *lat.prime();
    const int res = alt_enum_modp(h, lat, *target);
    out["group"] = a.group;
    out["p"] = p;
    out["orbit_set"] = *target;
    out["level"] = std::popcount(*target);
    out["label"] = fam->label(*target);
    out["residue"] = res;
    if (naive) {
      const bool ok = mod_p(*naive, p) == res;
      out["consistent"] = ok;
      if (!ok) {
        print_json(out);
        throw LemmaViolation("naive and mod-p engines disagree");
      }
    }
  } else if (fam) {
    out["fixed_point"] = false;
  }
  if (a.format == "pretty") {
    std::cout << "naive   " << (naive ? to_string(*naive) : "skipped") << "\n";
    if (out.contains("residue"))
      std::cout << "residue " << out["residue"].get<int>() << " (mod " << out["p"].get<int>() << ")\n";
  } else {
    print_json(out);
  }
  return 0;
}

// ------------------------------------------------------------- lattice
struct LatticeArgs {
  PropertyArgs prop;
  std::string group = "rot";
  int p = 0, m = 1, d = 1;
  std::string format = "pretty";
};

int run_lattice(const LatticeArgs& a) {
  const auto h = load_property(a.prop);
  const Family fam = make_family(a.group, a.p, a.m, a.d);
  const auto& lat = fam.lattice();
  std::optional<LatticeEvaluator> ev;
  if (h) ev.emplace(lat, *h);

  std::vector<OrbitSet> order;
  for (int l = 0; l <= lat.num_orbits(); ++l)
    for (OrbitSet s : lat.orbit_sets_at_level(l)) order.push_back(s);

  if (a.format == "csv") {
    std::cout << "level,orbit_set,edge_count,phi,residue\n";
    for (OrbitSet s : order) {
      std::cout << std::popcount(s) << "," << s << "," << lat.edge_count(s) << ",";
      if (ev) std::cout << (ev->phi(s) ? 1 : 0) << "," << ev->all_residues()[s];
      else std::cout << ",";
      std::cout << "\n";
    }
    return 0;
  }
  if (a.format == "json") {
    Json rows = Json::array();
    for (OrbitSet s : order) {
      Json row = {{"level", std::popcount(s)}, {"orbit_set", s}, {"edge_count", lat.edge_count(s)},
                  {"label", fam.label(s)}};
      row["phi"] = ev ? Json(ev->phi(s)) : Json(nullptr);
      row["residue"] = ev ? Json(ev->all_residues()[s]) : Json(nullptr);
      rows.push_back(std::move(row));
    }
    Json out = {{"group", a.group}, {"p", *lat.prime()}, {"m", a.m},
                {"host_vertices", lat.host().num_vertices()}, {"orbits", lat.num_orbits()},
                {"points", lat.size()}, {"rows", std::move(rows)}};
    if (a.group == "prod") out["d"] = a.d;
    if (h) out["level_vectors"] = to_json(level_vectors(*h, lat));
    print_json(out);
    return 0;
  }
  std::cout << "host K_" << lat.host().num_vertices() << ", " << lat.num_orbits() << " orbits, "
            << lat.size() << " fixed points\n";
  std::cout << std::setw(6) << "level" << std::setw(11) << "orbit_set" << std::setw(7) << "edges";
  if (ev) std::cout << std::setw(5) << "phi" << std::setw(9) << "residue";
  std::cout << "  label\n";
  for (OrbitSet s : order) {
    std::cout << std::setw(6) << std::popcount(s) << std::setw(11) << s << std::setw(7)
              << lat.edge_count(s);
    if (ev) std::cout << std::setw(5) << ev->phi(s) << std::setw(9) << ev->all_residues()[s];
    std::cout << "  " << fam.label(s).dump() << "\n";
  }
  return 0;
}

// ------------------------------------------------------------- witness
struct WitnessArgs {
  PropertyArgs prop;
  std::string mode = "prime-power";
  int p = 0, m = 1, k = 0;
  bool verify = false;
};

int run_witness(const WitnessArgs& a) {
  const PropertyHandle h = *load_property(a.prop);
  const WitnessOptions opt{a.verify};
  Json out;
  if (a.mode == "prime-power") {
    if (a.p < 2) throw InputError("--p is required");
    out = to_json(prime_power_witness(h, a.p, a.m, opt));
  } else if (a.mode == "sylow") {
    if (a.p < 2) throw InputError("--p is required");
    out = to_json(sylow_biclique_witness(h, a.p, a.m, opt));
  } else if (a.mode == "classify") {
    if (a.k < 1) throw InputError("--k is required");
    out = to_json(classify_k(h, a.k, opt));
  } else if (a.mode == "probe") {
    if (a.k < 1) throw InputError("--k is required");
    const auto pr = scattered_property_probe(h, a.k);
    out = {{"k", a.k}, {"scattered", pr.has_value()}};
    if (pr) {
      out["h"] = to_json(pr->h);
      out["shifted"] = pr->shifted.to_string();
    }
  } else {
    throw InputError("unknown mode '" + a.mode + "' (prime-power, sylow, classify, probe)");
  }
  out["verified"] = a.verify;
  print_json(out);
  return 0;
}

// -------------------------------------------------------------- reduce
struct ReduceArgs {
  PropertyArgs prop;
  std::string shift, graph;
  int k = 0;
  bool direct = false;
  bool verify = false;
};

int run_reduce(const ReduceArgs& a) {
  const PropertyHandle h = *load_property(a.prop);
  const Graph g = read_graph_file(a.graph);
  if (a.direct) {
    print_json(to_json(count_indsub(h, a.k, g)));
    return 0;
  }
  const Graph hg = a.shift.empty() ? Graph(0) : read_graph_file(a.shift);
  long long calls = 0;
  const IndSubOracle oracle = [&](const PropertyHandle& ph, int kk, const Graph& gg) {
    ++calls;
    if (kk != a.k + hg.num_vertices()) throw LemmaViolation("oracle queried with the wrong parameter");
    return count_indsub(ph, kk, gg).value;
  };
  const CountResult res = count_indsub_shifted(h, hg, a.k, g, oracle);
  Json out = to_json(res);
  out["oracle_calls"] = calls;
  if (a.verify) {
    const CountResult direct = count_indsub(PropertyHandle(shift_property(h.spec(), hg)), a.k, g);
    out["direct"] = to_string(direct.value);
    if (direct.value != res.value) {
      print_json(out);
      throw LemmaViolation("inclusion-exclusion disagrees with the direct count");
    }
  }
  print_json(out);
  return 0;
}

// -------------------------------------------------------------- gadget
struct GadgetArgs {
  std::string f, g;
  int ell = 2;
  bool emit = false;
};

int run_gadget(const GadgetArgs& a) {
  const Graph f = read_graph_file(a.f);
  const Graph g = read_graph_file(a.g);
  const Gadget gad = clique_gadget_full(f, a.ell, g);
  const CountResult hom = count_cp_hom(gad.graph);
  const CountResult cliques = count_cliques(g, a.ell);
  const int expected_n = 2 * a.ell * g.num_vertices() + f.num_vertices() - 2 * a.ell;
  Json out = to_json(hom);
  out["cliques"] = to_string(cliques.value);
  out["vertices"] = gad.graph.g.num_vertices();
  out["vertex_law"] = gad.graph.g.num_vertices() == expected_n;
  out["a_side"] = gad.a_side;
  out["b_side"] = gad.b_side;
  if (a.emit) out["gadget"] = to_json(gad.graph);
  print_json(out);
  if (hom.value != cliques.value || gad.graph.g.num_vertices() != expected_n)
    throw LemmaViolation("gadget count differs from the clique count");
  return 0;
}

// -------------------------------------------------------------- verify
int run_verify(const std::vector<int>& criteria) {
  for (int c : criteria)
    if (c < 1 || c > kNumCriteria) throw InputError("criterion ids are 1.." + std::to_string(kNumCriteria));
  bool all = true;
  run_acceptance(std::set<int>(criteria.begin(), criteria.end()), [&](const CriterionResult& r) {
    std::cout << format_result(r) << std::endl;
    all = all && r.pass;
  });
  return all ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Alternating enumerators, fixed-point lattices and witness search for induced-subgraph counting"};
  app.require_subcommand(1);

  AeArgs ae;
  auto* ae_cmd = app.add_subcommand("ae", "naive and mod-p alternating enumerator on a graph or fixed point");
  add_property_options(ae_cmd, ae.prop, true);
  ae_cmd->add_option("--graph", ae.graph, "graph file")->check(CLI::ExistingFile);
  ae_cmd->add_option("--group", ae.group, "rot | syl | prod");
  ae_cmd->add_option("--p", ae.p, "prime");
  ae_cmd->add_option("--m", ae.m, "exponent");
  ae_cmd->add_option("--d", ae.d, "blocks (prod)");
  ae_cmd->add_option("--orbit-set", ae.orbit_set, "fixed point by orbit bitmask");
  ae_cmd->add_option("--max-edges-naive", ae.max_edges, "naive engine cap (<= 25)");
  ae_cmd->add_option("--format", ae.format, "json | pretty")->check(CLI::IsMember({"json", "pretty"}));

  LatticeArgs lat;
  auto* lat_cmd = app.add_subcommand("lattice", "enumerate fixed points with levels");
  add_property_options(lat_cmd, lat.prop, false);
  lat_cmd->add_option("--group", lat.group, "rot | syl | prod");
  lat_cmd->add_option("--p", lat.p, "prime")->required();
  lat_cmd->add_option("--m", lat.m, "exponent");
  lat_cmd->add_option("--d", lat.d, "blocks (prod)");
  lat_cmd->add_option("--format", lat.format, "csv | json | pretty")
      ->check(CLI::IsMember({"csv", "json", "pretty"}));

  WitnessArgs wit;
  auto* wit_cmd = app.add_subcommand("witness", "prime-power, sylow, classify or probe");
  add_property_options(wit_cmd, wit.prop, true);
  wit_cmd->add_option("--mode", wit.mode, "prime-power | sylow | classify | probe");
  wit_cmd->add_option("--p", wit.p, "prime");
  wit_cmd->add_option("--m", wit.m, "exponent");
  wit_cmd->add_option("--k", wit.k, "k for classify/probe");
  wit_cmd->add_flag("--verify", wit.verify, "naive residue and exact treewidth cross-checks");

  ReduceArgs red;
  auto* red_cmd = app.add_subcommand("reduce", "shifted counting via inclusion-exclusion");
  add_property_options(red_cmd, red.prop, true);
  red_cmd->add_option("--shift", red.shift, "graph H (default: empty)")->check(CLI::ExistingFile);
  red_cmd->add_option("--graph", red.graph, "host graph G")->required()->check(CLI::ExistingFile);
  red_cmd->add_option("--k", red.k, "subset size")->required();
  red_cmd->add_flag("--direct", red.direct, "plain #IndSub count, no shift");
  red_cmd->add_flag("--verify", red.verify, "compare with the direct shifted count");

  GadgetArgs gad;
  auto* gad_cmd = app.add_subcommand("gadget", "clique gadget and cp-hom check");
  gad_cmd->add_option("--f", gad.f, "pattern containing K_{ell,ell}")->required()->check(CLI::ExistingFile);
  gad_cmd->add_option("--g", gad.g, "graph whose cliques are counted")->required()->check(CLI::ExistingFile);
  gad_cmd->add_option("--ell", gad.ell, "clique size");
  gad_cmd->add_flag("--emit", gad.emit, "include the gadget graph");

  std::vector<int> criteria;
  auto* ver_cmd = app.add_subcommand("verify", "run the acceptance suite");
  ver_cmd->add_option("--criteria", criteria, "subset of criterion ids")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*ae_cmd) return run_ae(ae);
    if (*lat_cmd) return run_lattice(lat);
    if (*wit_cmd) return run_witness(wit);
    if (*red_cmd) return run_reduce(red);
    if (*gad_cmd) return run_gadget(gad);
    if (*ver_cmd) return run_verify(criteria);
  } catch (const LemmaViolation& e) {
    std::cerr << "lemma violation: " << e.what() << "\n";
    return 3;
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
