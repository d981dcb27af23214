#pragma once

#include <json.hpp>

#include "tcl/cycle.hpp"
#include "tcl/fractional.hpp"
#include "tcl/hypergraph.hpp"
#include "tcl/matching.hpp"
#include "tcl/slice.hpp"
#include "tcl/tight.hpp"

// JSON views of the library types. nlohmann::json keeps object keys sorted, so
// dump() output is canonical.
namespace tcl {

using Json = nlohmann::json;

Json to_json(const FractionalMatching& m);
Json to_json(const FarkasCertificate& c);
FractionalMatching fractional_matching_from_json(const Json& j, int n);
FarkasCertificate certificate_from_json(const Json& j);

Json to_json(const TightComponentLabeling& labels, const Hypergraph3& h);
Json to_json(const GraphMatching& m);
Json to_json(const GraphComponent& c);
Json to_json(const GraphMeetReport& r);

Json to_json(const WeakSlice& s);
Json to_json(const ReducedGraph& r);
ReducedGraph reduced_graph_from_json(const Json& j);

// {"length", "order", "valid", "coverage"}; coverage maps cluster id -> count.
Json to_json(const TightCycle& c, bool valid, const std::vector<int>& coverage = {});
Json to_json(const CycleCheck& check);

}  // namespace tcl
