#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "parq/deformation.hpp"
#include "parq/family.hpp"
#include "parq/graph.hpp"
#include "parq/matrix.hpp"
#include "parq/resolution.hpp"

namespace parq {

using Json = nlohmann::ordered_json;

// Integers that fit 64 bits are emitted as JSON numbers, larger ones as
// decimal strings.
Json json_int(const Int& v);
Json json_int_vector(const std::vector<Int>& v);

// {"n": int, "adjacency": [[int]]} (directed multigraph, row i = edges out
// of vertex i) or {"n": int, "edges": [[i,j], ...]} (undirected).
Digraph graph_from_json(const Json& j);
// Undirected form of the same schemas; adjacency input must be symmetric.
EdgeList edge_list_from_json(const Json& j);

// {"n": int, "generators": [{"label": [ints], "exponents": [ints]}]}.
MonomialFamily family_from_json(const Json& j);

// [[int]] or {"matrix": [[int]]}.
BigIntMatrix matrix_from_json(const Json& j);

Json resolution_to_json(const GradedResolution& r);
Json span_report_to_json(const SpanReport& r);

Json load_json_file(const std::string& path);

} // namespace parq
