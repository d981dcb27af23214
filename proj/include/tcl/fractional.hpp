#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "tcl/hypergraph.hpp"
#include "tcl/rational.hpp"
#include "tcl/tight.hpp"

namespace tcl {

// Edge weights in [0, 1] with every vertex load at most 1. Only edges of
// positive weight are stored, in canonical edge order.
struct FractionalMatching {
    int n = 0;
    std::vector<Triple> edges;
    std::vector<Rational> weights;
    Rational total_weight = 0;
    std::optional<int> support_component;
    // Set only when a floating-point solve could not be certified exactly.
    bool approximate = false;

    bool perfect() const { return total_weight * 3 == n; }
    Rational load(Vertex v) const;
};

// a ∈ Q^n (a[0] belongs to vertex 1) with a·1 > 0 and a·χ(e) <= 0 on every edge
// of the restricted edge set, so no perfect fractional matching exists there.
struct FarkasCertificate {
    std::vector<Rational> a;
};

// Exact-LP vertex cap; larger instances use a floating solve whose final
// basis is then certified rationally.
inline constexpr int kExactLpMaxVertices = 30;

// Maximum total weight over the edges carrying label `restrict_to` (all edges
// when absent). An empty edge set gives the zero matching.
FractionalMatching max_fractional_matching(const Hypergraph3& h, std::optional<int> restrict_to = std::nullopt);
FractionalMatching max_fractional_matching(const Hypergraph3& h, const TightComponentLabeling& labels,
                                           std::optional<int> restrict_to);

using PerfectOrCertificate = std::variant<FractionalMatching, FarkasCertificate>;

// Exactly one of a perfect fractional matching supported in the component or a
// verified Farkas certificate for it.
PerfectOrCertificate perfect_or_certificate(const Hypergraph3& h, int restrict_to);
PerfectOrCertificate perfect_or_certificate(const Hypergraph3& h, const TightComponentLabeling& labels,
                                            int restrict_to);

// Exact feasibility: every vertex load <= 1, weights in (0, 1], edges in h,
// total consistent, and the support carries the recorded label (if any).
bool is_valid_fractional_matching(const Hypergraph3& h, const FractionalMatching& m,
                                  const TightComponentLabeling* labels = nullptr);

// a·1 > 0 and a·χ(e) <= 0 for every listed edge.
bool is_valid_certificate(const FarkasCertificate& cert, std::span<const Triple> edges);

// Rescales to the primitive integer vector on the same ray.
FarkasCertificate normalize(FarkasCertificate cert);

struct FracmatchOutcome {
    int component = -1;                     // tight component holding every star C_u^*
    std::vector<std::size_t> subgraph;      // edge indices of H' (that component)
    int subgraph_min_degree = 0;            // δ(H')
    FractionalMatching matching;            // perfect, supported in H'
};

// Needs 3 | n and δ(H) > (5/9) C(n,2) (PreconditionError otherwise). Builds
// H' from the stars of the largest link components, checks δ(H') >= (4/9) C(n,2)
// and returns a perfect fractional matching inside H'. Any failed step throws
// InvariantViolation with a witness.
FracmatchOutcome lemma_fracmatch(const Hypergraph3& h);

// δ(H) > (5/9) C(n,2), exact.
bool above_five_ninths(const Hypergraph3& h);

}  // namespace tcl
