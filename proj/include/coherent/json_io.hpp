#pragma once

// JSON wire formats.  Rationals travel as "p/q" strings (integers as "p").
//
//   Partition:  {"n": 5, "parts": [5,4,3,3,2]}
//   StepFn:     {"pieces": [{"width": "1/2", "height": "1"}, ...]}
//   Matrices:   {"n": 2, "A": [["1/4","1/4"],["0","0"]], "B": [...]}
//   Weights:    {"R": ["1/2","1/2"], "C": ["1/2","1/2"]}
//   Graph:      {"n": 2, "adj": [[1,1],[0,0]]}
//
// Readers throw ValidationError on malformed or invariant-violating input.

#include <json.hpp>

#include "coherent/diagrams.hpp"
#include "coherent/graphs.hpp"
#include "coherent/matrices.hpp"
#include "coherent/partitions.hpp"
#include "coherent/search.hpp"

namespace coherent::io {

using nlohmann::json;

json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

json to_json(const Partition& p);
Partition partition_from_json(const json& j);

json to_json(const StepFn& f);
StepFn stepfn_from_json(const json& j);

json to_json(const DiscreteLaw& law);

json to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const json& j);

json to_json(const CoherentMatrixPair& pair);
CoherentMatrixPair matrix_pair_from_json(const json& j);

json to_json(const ProductWeights& w);
ProductWeights weights_from_json(const json& j);

json to_json(const BipartiteGraph& g);
BipartiteGraph graph_from_json(const json& j);

json to_json(const SearchReport& r);
SearchReport search_report_from_json(const json& j);

/// Parses text, wrapping parser failures in ValidationError.
json parse(std::string_view text);

}  // namespace coherent::io
