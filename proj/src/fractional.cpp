#include "tcl/fractional.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tcl/errors.hpp"
#include "tcl/simplex.hpp"

namespace tcl {

Rational FractionalMatching::load(Vertex v) const {
    Rational sum = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (std::find(edges[i].begin(), edges[i].end(), v) != edges[i].end()) sum += weights[i];
    }
    return sum;
}

namespace {

std::vector<std::size_t> selected_edges(const Hypergraph3& h, const TightComponentLabeling& labels,
                                        std::optional<int> restrict_to) {
    std::vector<std::size_t> cols;
    if (restrict_to && (*restrict_to < 0 || *restrict_to >= labels.component_count)) {
        throw InvalidArgument("no tight component with id " + std::to_string(*restrict_to));
    }
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        if (!restrict_to || labels.labels[i] == *restrict_to) cols.push_back(i);
    }
    return cols;
}

template <typename Scalar>
LinearProgram<Scalar> matching_lp(const Hypergraph3& h, const std::vector<std::size_t>& cols) {
    LinearProgram<Scalar> lp;
    lp.rows = static_cast<std::size_t>(h.n());
    lp.cols = cols.size();
    lp.a.assign(lp.rows * lp.cols, Scalar(0));
    lp.b.assign(lp.rows, Scalar(1));
    lp.objective.assign(lp.cols, Scalar(1));
    for (std::size_t j = 0; j < cols.size(); ++j) {
        for (Vertex v : h.edge(cols[j])) lp.at(static_cast<std::size_t>(v - 1), j) = Scalar(1);
    }
    return lp;
}

struct ExactSolve {
    LpSolution<Rational> solution;
    bool approximate = false;
};

// With require_exact an uncertified floating solve is redone in exact arithmetic.
ExactSolve solve_matching_lp(const Hypergraph3& h, const std::vector<std::size_t>& cols, bool require_exact = false) {
    auto exact_lp = matching_lp<Rational>(h, cols);
    if (h.n() <= kExactLpMaxVertices) return {solve_lp(exact_lp), false};
    auto approx = solve_lp(matching_lp<double>(h, cols));
    if (auto certified = certify_basis(exact_lp, approx.basis)) return {std::move(*certified), false};
    if (require_exact) return {solve_lp(exact_lp), false};
    ExactSolve out;
    out.approximate = true;
    out.solution.value = approx.value;
    for (double x : approx.primal) out.solution.primal.emplace_back(x);
    for (double y : approx.dual) out.solution.dual.emplace_back(y);
    out.solution.basis = approx.basis;
    return out;
}

FractionalMatching to_matching(const Hypergraph3& h, const std::vector<std::size_t>& cols, const ExactSolve& s,
                               std::optional<int> component) {
    FractionalMatching m;
    m.n = h.n();
    m.support_component = component;
    m.approximate = s.approximate;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (sgn(s.solution.primal[j]) > 0) {
            m.edges.push_back(h.edge(cols[j]));
            m.weights.push_back(s.solution.primal[j]);
            m.total_weight += s.solution.primal[j];
        }
    }
    return m;
}

std::string describe(const FarkasCertificate& c) {
    std::ostringstream out;
    out << "a = (";
    for (std::size_t i = 0; i < c.a.size(); ++i) out << (i ? ", " : "") << to_string(c.a[i]);
    out << ")";
    return out.str();
}

}  // namespace

FractionalMatching max_fractional_matching(const Hypergraph3& h, std::optional<int> restrict_to) {
    return max_fractional_matching(h, tight_components(h), restrict_to);
}

FractionalMatching max_fractional_matching(const Hypergraph3& h, const TightComponentLabeling& labels,
                                           std::optional<int> restrict_to) {
    const auto cols = selected_edges(h, labels, restrict_to);
    if (cols.empty()) {
        FractionalMatching m;
        m.n = h.n();
        m.support_component = restrict_to;
        return m;
    }
    return to_matching(h, cols, solve_matching_lp(h, cols), restrict_to);
}

PerfectOrCertificate perfect_or_certificate(const Hypergraph3& h, int restrict_to) {
    return perfect_or_certificate(h, tight_components(h), restrict_to);
}

PerfectOrCertificate perfect_or_certificate(const Hypergraph3& h, const TightComponentLabeling& labels,
                                            int restrict_to) {
    const auto cols = selected_edges(h, labels, restrict_to);
    const auto solve = solve_matching_lp(h, cols, true);
    auto matching = to_matching(h, cols, solve, restrict_to);
    if (matching.perfect()) return matching;

    // Dual optimum y: y >= 0, y·χ(e) >= 1 on every edge, y·1 = value < n/3.
    // Then a = 1 - 3y satisfies a·χ(e) <= 0 and a·1 = n - 3·value > 0.
    FarkasCertificate cert;
    cert.a.resize(static_cast<std::size_t>(h.n()));
    for (std::size_t v = 0; v < cert.a.size(); ++v) {
        cert.a[v] = solve.solution.dual.empty() ? Rational(1) : Rational(1 - 3 * solve.solution.dual[v]);
    }
    cert = normalize(std::move(cert));
    std::vector<Triple> edges;
    for (auto j : cols) edges.push_back(h.edge(j));
    if (!is_valid_certificate(cert, edges)) {
        throw InvariantViolation("LP dual did not yield a valid Farkas certificate", describe(cert));
    }
    return cert;
}

bool is_valid_fractional_matching(const Hypergraph3& h, const FractionalMatching& m,
                                  const TightComponentLabeling* labels) {
    if (m.n != h.n() || m.edges.size() != m.weights.size()) return false;
    std::vector<Rational> load(static_cast<std::size_t>(h.n()) + 1, Rational(0));
    Rational total = 0;
    for (std::size_t i = 0; i < m.edges.size(); ++i) {
        const auto& w = m.weights[i];
        if (sgn(w) <= 0 || w > 1) return false;
        auto idx = h.index_of(m.edges[i]);
        if (!idx) return false;
        if (labels && m.support_component && labels->labels[*idx] != *m.support_component) return false;
        for (Vertex v : m.edges[i]) load[static_cast<std::size_t>(v)] += w;
        total += w;
    }
    for (const auto& l : load) {
        if (l > 1) return false;
    }
    return total == m.total_weight;
}

bool is_valid_certificate(const FarkasCertificate& cert, std::span<const Triple> edges) {
    Rational sum = 0;
    for (const auto& x : cert.a) sum += x;
    if (sgn(sum) <= 0) return false;
    for (const auto& e : edges) {
        for (Vertex v : e) {
            if (v < 1 || static_cast<std::size_t>(v) > cert.a.size()) return false;
        }
        if (sgn(cert.a[static_cast<std::size_t>(e[0] - 1)] + cert.a[static_cast<std::size_t>(e[1] - 1)] +
                cert.a[static_cast<std::size_t>(e[2] - 1)]) > 0) {
            return false;
        }
    }
    return true;
}

FarkasCertificate normalize(FarkasCertificate cert) {
    mpz_class den_lcm = 1;
    for (const auto& x : cert.a) den_lcm = lcm(den_lcm, x.get_den());
    mpz_class num_gcd = 0;
    for (const auto& x : cert.a) num_gcd = gcd(num_gcd, mpz_class(x.get_num() * (den_lcm / x.get_den())));
    if (num_gcd == 0) return cert;
    for (auto& x : cert.a) {
        x = Rational(mpz_class(x.get_num() * (den_lcm / x.get_den()) / num_gcd));
    }
    return cert;
}

bool above_five_ninths(const Hypergraph3& h) {
    return h.n() >= 3 && 9 * static_cast<std::int64_t>(min_degree(h, 1)) > 5 * binom(h.n(), 2);
}

FracmatchOutcome lemma_fracmatch(const Hypergraph3& h) {
    const int n = h.n();
    if (n % 3 != 0) throw PreconditionError("lemma_fracmatch needs 3 | n, got n = " + std::to_string(n));
    if (!above_five_ninths(h)) {
        throw PreconditionError("lemma_fracmatch needs δ(H) > (5/9) C(n,2)");
    }
    const auto labels = tight_components(h);

    FracmatchOutcome out;
    for (Vertex u = 1; u <= n; ++u) {
        const auto largest = largest_component(link_graph(h, u));
        const auto star = component_star(h, u, largest);
        const int label = labels.labels[star.front()];
        for (auto idx : star) {
            if (labels.labels[idx] != label) {
                const auto& e = h.edge(idx);
                throw InvariantViolation("star of vertex " + std::to_string(u) + " spans two tight components",
                                         std::to_string(e[0]) + " " + std::to_string(e[1]) + " " + std::to_string(e[2]));
            }
        }
        if (out.component < 0) {
            out.component = label;
        } else if (out.component != label) {
            throw InvariantViolation("stars of vertices 1 and " + std::to_string(u) + " lie in different tight components",
                                     std::to_string(out.component) + " vs " + std::to_string(label));
        }
    }

    out.subgraph = labels.edges_with_label(out.component);
    std::vector<int> deg(static_cast<std::size_t>(n) + 1, 0);
    for (auto idx : out.subgraph) {
        for (Vertex v : h.edge(idx)) ++deg[static_cast<std::size_t>(v)];
    }
    out.subgraph_min_degree = *std::min_element(deg.begin() + 1, deg.end());
    if (9 * static_cast<std::int64_t>(out.subgraph_min_degree) < 4 * binom(n, 2)) {
        throw InvariantViolation("δ(H') below (4/9) C(n,2)", std::to_string(out.subgraph_min_degree));
    }

    auto result = perfect_or_certificate(h, labels, out.component);
    if (auto* cert = std::get_if<FarkasCertificate>(&result)) {
        throw InvariantViolation("no perfect fractional matching in H'", describe(*cert));
    }
    out.matching = std::move(std::get<FractionalMatching>(result));
    return out;
}

}  // namespace tcl
