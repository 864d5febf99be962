#include "indsub/json_io.hpp"

namespace indsub {

Json to_json(const BigInt& v) { return to_string(v); }

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.num_vertices()}, {"edges", std::move(edges)}};
}

Json to_json(const FixedPoint& fp) {
  return {{"orbit_set", fp.orbit_set}, {"level", fp.level}, {"edge_count", fp.edges.count()}};
}

Json to_json(const LevelVectors& lv) {
  return {{"p", lv.w.p}, {"w", lv.w.entries}, {"w_hat", lv.w_hat.entries}};
}

Json to_json(const TransformMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows; ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  Json out = {{"n", m.n}, {"rows", std::move(rows)}};
  if (m.c) out["c"] = *m.c;
  return out;
}

Json to_json(const WitnessReport& r) {
  Json cert = {{"type", to_string(r.certificate.type)}, {"value", r.certificate.value}};
  if (r.certificate.biclique)
    cert["biclique"] = {{"left", r.certificate.biclique->left},
                        {"right", r.certificate.biclique->right}};
  Json out = {{"kind", to_string(r.kind)},
              {"group", r.group},
              {"p", r.p},
              {"m", r.m}};
  if (r.k) out["k"] = *r.k;
  out["property"] = r.property;
  out["fixed_point"] = to_json(r.fixed_point);
  out["difference_sets"] = r.difference_sets;
  out["graph"] = to_json(r.graph);
  out["residue"] = r.residue;
  out["level"] = r.level;
  out["certificate"] = std::move(cert);
  out["claimed_treewidth_lower_bound"] = r.claimed_treewidth_lower_bound;
  out["naive"] = r.naive ? to_json(*r.naive) : Json(nullptr);
  out["treewidth"] = r.treewidth ? Json(*r.treewidth) : Json(nullptr);
  return out;
}

Json to_json(const AvalancheReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries)
    entries.push_back(
        {{"b", e.b.to_strings()}, {"lambda", e.lambda.to_string()}, {"image", e.image.to_strings()}});
  return {{"t", {{"num", r.t_num}, {"den", r.t_den}}}, {"entries", std::move(entries)}};
}

Json to_json(const KClassification& c) {
  Json out = {{"k", c.k}, {"q", c.q}, {"d", c.d}, {"verdict", to_string(c.verdict)}};
  if (c.failing_point) out["failing_orbit_set"] = *c.failing_point;
  if (c.report) out["report"] = to_json(*c.report);
  if (c.h) out["h"] = to_json(*c.h);
  if (c.shifted) out["shifted"] = c.shifted->to_string();
  return out;
}

Json to_json(const CountResult& c) {
  return {{"count", to_string(c.value)}, {"method", to_string(c.method)}};
}

Json to_json(const ColoredGraph& cg) {
  return {{"g", to_json(cg.g)}, {"pattern", to_json(cg.pattern)}, {"coloring", cg.coloring}};
}

}  // namespace indsub
