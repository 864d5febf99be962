#pragma once

#include <json.hpp>

#include "indsub/alt_enum.hpp"
#include "indsub/graph.hpp"
#include "indsub/reductions.hpp"
#include "indsub/witness.hpp"

namespace indsub {

using Json = nlohmann::ordered_json;

// Big integers travel as decimal strings.
Json to_json(const BigInt& v);
Json to_json(const Graph& g);
Json to_json(const FixedPoint& fp);
Json to_json(const LevelVectors& lv);
Json to_json(const TransformMatrix& m);
Json to_json(const WitnessReport& r);
Json to_json(const AvalancheReport& r);
Json to_json(const KClassification& c);
Json to_json(const CountResult& c);
Json to_json(const ColoredGraph& cg);

}  // namespace indsub
