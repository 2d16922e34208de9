#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "deltakit/dmatroid.hpp"
#include "deltakit/fmatrix.hpp"
#include "deltakit/flips.hpp"
#include "deltakit/graph.hpp"

namespace dmk {

// JSON schemas:
//   set system  {"ground": ["a","b"], "sets": [["a"],["a","b"]]}
//   matrix      {"field": 2, "labels": ["a","b"], "entries": [[0,1],[1,0]]}
//   graph       {"vertices": ["a","b"], "edges": [["a","b"]], "loops": ["a"]}
//   std. rep.   {"field": 2, "rows": ["r"], "cols": ["c"], "entries": [[1]]}
// Families, edges and loops serialize canonically so equal values print
// byte-identically.

nlohmann::json to_json(const SetSystem& m);
nlohmann::json to_json(const FMatrix& a);
nlohmann::json to_json(const Graph& g);
nlohmann::json to_json(const CheckVerdict& v);
nlohmann::json to_json(const TripleReport& r);
nlohmann::json to_json(const RankProfile& rp);
nlohmann::json to_json(const KernelSet& k);

SetSystem set_system_from_json(const nlohmann::json& j);
FMatrix matrix_from_json(const nlohmann::json& j);
Graph graph_from_json(const nlohmann::json& j);
BinaryStdRep std_rep_from_json(const nlohmann::json& j);

// Text is a file path when such a file exists, otherwise inline JSON.
nlohmann::json load_json_arg(const std::string& path_or_inline);
nlohmann::json parse_json_text(std::string_view text);  // ParseError with context

}  // namespace dmk
