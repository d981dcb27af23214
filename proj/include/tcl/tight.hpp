#pragma once

#include <optional>
#include <vector>

#include "tcl/hypergraph.hpp"
#include "tcl/matching.hpp"

namespace tcl {

// Edge labels of the tight components: two edges share a label iff a tight
// walk joins them. Ids are contiguous and assigned in canonical edge order.
struct TightComponentLabeling {
    std::vector<int> labels;               // indexed like Hypergraph3::edges()
    int component_count = 0;
    std::vector<std::size_t> component_sizes;

    std::vector<std::size_t> edges_with_label(int id) const;
};

TightComponentLabeling tight_components(const Hypergraph3& h);

enum class Connectivity { Connected, Disconnected, Empty };

Connectivity tight_connectivity(const Hypergraph3& h);

// False for the empty edge set; use tight_connectivity to tell that case apart.
bool is_tightly_connected(const Hypergraph3& h);

// Edge indices of a shortest tight walk from edge `from` to edge `to`, both
// endpoints included; nullopt when they lie in different tight components.
std::optional<std::vector<std::size_t>> tight_walk(const Hypergraph3& h, std::size_t from, std::size_t to);

// C_u^*: the edges {u} ∪ p for p an edge of C, where C must be a connected
// component of link_graph(h, u) (else InvalidArgument). Returns edge indices.
std::vector<std::size_t> component_star(const Hypergraph3& h, Vertex u, const GraphComponent& c);

}  // namespace tcl
