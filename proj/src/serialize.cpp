#include "tcl/serialize.hpp"

#include "tcl/errors.hpp"

namespace tcl {

Json to_json(const FractionalMatching& m) {
    Json edges = Json::array();
    for (std::size_t i = 0; i < m.edges.size(); ++i) {
        edges.push_back({{"e", m.edges[i]}, {"w", to_string(m.weights[i])}});
    }
    Json j = {{"total_weight", to_string(m.total_weight)}, {"edges", edges}, {"perfect", m.perfect()}};
    j["component"] = m.support_component ? Json(*m.support_component) : Json(nullptr);
    if (m.approximate) j["approximate"] = true;
    return j;
}

Json to_json(const FarkasCertificate& c) {
    Json a = Json::array();
    for (const auto& x : c.a) a.push_back(to_string(x));
    return {{"a", a}};
}

FractionalMatching fractional_matching_from_json(const Json& j, int n) {
    FractionalMatching m;
    m.n = n;
    for (const auto& e : j.at("edges")) {
        auto v = e.at("e").get<std::vector<int>>();
        if (v.size() != 3) throw InvalidArgument("matching edge must have three vertices");
        m.edges.push_back(make_triple(v[0], v[1], v[2]));
        m.weights.push_back(parse_rational(e.at("w").get<std::string>()));
        m.total_weight += m.weights.back();
    }
    if (j.contains("component") && !j["component"].is_null()) m.support_component = j["component"].get<int>();
    if (parse_rational(j.at("total_weight").get<std::string>()) != m.total_weight) {
        throw InvalidArgument("total_weight does not match the edge weights");
    }
    return m;
}

FarkasCertificate certificate_from_json(const Json& j) {
    FarkasCertificate c;
    for (const auto& x : j.at("a")) c.a.push_back(parse_rational(x.get<std::string>()));
    return c;
}

Json to_json(const TightComponentLabeling& labels, const Hypergraph3& h) {
    Json edges = Json::array();
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        edges.push_back({{"e", h.edge(i)}, {"component", labels.labels[i]}});
    }
    return {{"component_count", labels.component_count}, {"component_sizes", labels.component_sizes}, {"edges", edges}};
}

Json to_json(const GraphMatching& m) { return {{"size", m.size()}, {"pairs", m.pairs}}; }

Json to_json(const GraphComponent& c) {
    return {{"vertices", c.vertices}, {"edge_count", c.edges.size()}, {"edges", c.edges}};
}

Json to_json(const GraphMeetReport& r) {
    Json j = {{"n", r.n},
              {"precondition_met", r.precondition_met},
              {"matching_target", r.matching_target},
              {"alpha", r.alpha()},
              {"beta", r.beta()},
              {"components", {to_json(r.components[0]), to_json(r.components[1])}},
              {"matchings", {to_json(r.matchings[0]), to_json(r.matchings[1])}},
              {"verdicts",
               {{"i_covers_two_thirds", r.covers_two_thirds},
                {"ii_dense_component", r.dense_component},
                {"iii_matching", r.has_matching},
                {"iv_shared_edge", r.components_meet}}}};
    j["shared_edge"] = r.shared_edge ? Json(*r.shared_edge) : Json(nullptr);
    return j;
}

Json to_json(const WeakSlice& s) {
    Json complete = true;
    for (const auto& g : s.pair_graphs) {
        for (auto bit : g) {
            if (!bit) complete = false;
        }
    }
    return {{"n", s.n}, {"t", s.t}, {"m", s.m}, {"clusters", s.clusters}, {"deleted", s.deleted},
            {"complete_pair_graphs", complete}};
}

Json to_json(const ReducedGraph& r) {
    Json triples = Json::array();
    for (const auto& x : colex_triples(r.t)) {
        triples.push_back({{"X", x}, {"d", to_string(r.d(x))}, {"regular", r.is_regular(x)}});
    }
    return {{"t", r.t}, {"m", r.m}, {"triples", triples}, {"d_threshold", to_string(r.d_threshold)}};
}

ReducedGraph reduced_graph_from_json(const Json& j) {
    ReducedGraph r = make_reduced_graph(j.at("t").get<int>(), j.at("m").get<int>(),
                                        parse_rational(j.at("d_threshold").get<std::string>()));
    for (const auto& entry : j.at("triples")) {
        auto x = entry.at("X").get<std::vector<int>>();
        if (x.size() != 3 || !(0 <= x[0] && x[0] < x[1] && x[1] < x[2] && x[2] < r.t)) {
            throw InvalidArgument("reduced graph triple must be three ascending cluster ids below t");
        }
        const auto rank = colex_rank({x[0], x[1], x[2]});
        r.density[rank] = parse_rational(entry.at("d").get<std::string>());
        r.regular[rank] = entry.at("regular").get<bool>() ? 1 : 0;
    }
    return r;
}

Json to_json(const TightCycle& c, bool valid, const std::vector<int>& coverage) {
    Json cov = Json::object();
    for (std::size_t i = 0; i < coverage.size(); ++i) cov[std::to_string(i)] = coverage[i];
    Json j = {{"length", c.length()}, {"order", c.order}, {"valid", valid}};
    if (!coverage.empty()) j["coverage"] = cov;
    return j;
}

Json to_json(const CycleCheck& check) {
    static constexpr const char* names[] = {"none", "vertex-out-of-range", "duplicate-vertex", "degenerate",
                                            "too-short", "missing-window"};
    Json j = {{"valid", check.valid()}, {"defect", names[static_cast<int>(check.defect)]}};
    if (!check.valid()) {
        j["position"] = check.position;
        j["message"] = check.message;
    }
    if (check.window) j["window"] = *check.window;
    return j;
}

}  // namespace tcl
