#include "tcl/matching.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "tcl/errors.hpp"
#include "tcl/rational.hpp"

namespace tcl {

namespace {

// Edmonds' blossom algorithm, O(V^3). Vertices are 0-based internally.
class Blossom {
public:
    explicit Blossom(const Graph& g)
        : n_(static_cast<std::size_t>(g.n())), adj_(n_), match_(n_, kNone), parent_(n_),
          base_(n_), used_(n_), in_blossom_(n_) {
        for (const auto& [u, v] : g.edges()) {
            adj_[static_cast<std::size_t>(u - 1)].push_back(v - 1);
            adj_[static_cast<std::size_t>(v - 1)].push_back(u - 1);
        }
    }

    GraphMatching solve() {
        greedy_start();
        for (int root = 0; root < static_cast<int>(n_); ++root) {
            if (match_[root] != kNone) continue;
            int v = find_path(root);
            while (v != kNone) {
                int pv = parent_[v];
                int ppv = match_[pv];
                match_[v] = pv;
                match_[pv] = v;
                v = ppv;
            }
        }
        GraphMatching m;
        for (int v = 0; v < static_cast<int>(n_); ++v) {
            if (match_[v] > v) m.pairs.push_back({v + 1, match_[v] + 1});
        }
        return m;
    }

private:
    static constexpr int kNone = -1;

    void greedy_start() {
        for (int v = 0; v < static_cast<int>(n_); ++v) {
            if (match_[v] != kNone) continue;
            for (int w : adj_[v]) {
                if (match_[w] == kNone) {
                    match_[v] = w;
                    match_[w] = v;
                    break;
                }
            }
        }
    }

    int lca(int a, int b) {
        std::vector<char> seen(n_, 0);
        while (true) {
            a = base_[a];
            seen[a] = 1;
            if (match_[a] == kNone) break;
            a = parent_[match_[a]];
        }
        while (true) {
            b = base_[b];
            if (seen[b]) return b;
            b = parent_[match_[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            in_blossom_[base_[v]] = 1;
            in_blossom_[base_[match_[v]]] = 1;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    // Returns the free vertex ending an augmenting path from root, or kNone.
    int find_path(int root) {
        std::fill(used_.begin(), used_.end(), 0);
        std::fill(parent_.begin(), parent_.end(), kNone);
        std::iota(base_.begin(), base_.end(), 0);
        used_[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : adj_[v]) {
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] != kNone && parent_[match_[to]] != kNone)) {
                    int cur = lca(v, to);
                    std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < static_cast<int>(n_); ++i) {
                        if (in_blossom_[base_[i]]) {
                            base_[i] = cur;
                            if (!used_[i]) {
                                used_[i] = 1;
                                q.push(i);
                            }
                        }
                    }
                } else if (parent_[to] == kNone) {
                    parent_[to] = v;
                    if (match_[to] == kNone) return to;
                    used_[match_[to]] = 1;
                    q.push(match_[to]);
                }
            }
        }
        return kNone;
    }

    std::size_t n_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> match_, parent_, base_;
    std::vector<char> used_, in_blossom_;
};

}  // namespace

GraphMatching max_matching(const Graph& g) { return Blossom(g).solve(); }

std::vector<GraphComponent> connected_components(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.n());
    std::vector<int> comp(n + 1, -1);
    std::vector<GraphComponent> out;
    for (Vertex s = 1; s <= g.n(); ++s) {
        if (comp[s] >= 0) continue;
        const int id = static_cast<int>(out.size());
        GraphComponent c;
        std::vector<Vertex> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            c.vertices.push_back(v);
            for (Vertex w : g.neighbors(v)) {
                if (comp[w] < 0) {
                    comp[w] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(c.vertices.begin(), c.vertices.end());
        out.push_back(std::move(c));
    }
    for (const auto& e : g.edges()) out[static_cast<std::size_t>(comp[e[0]])].edges.push_back(e);
    return out;
}

GraphComponent largest_component(const Graph& g) {
    if (g.edge_count() == 0) throw InvalidArgument("no component: graph has no edges");
    auto comps = connected_components(g);
    // Components are ordered by smallest vertex and disjoint, so the first of
    // maximum size has the lexicographically smallest vertex list.
    auto best = std::max_element(comps.begin(), comps.end(), [](const auto& a, const auto& b) {
        return a.vertices.size() < b.vertices.size();
    });
    return std::move(*best);
}

std::int64_t erdos_gallai_threshold(std::int64_t vertex_count, std::int64_t k) {
    if (k < 1 || vertex_count < 1) throw InvalidArgument("Erdős–Gallai threshold needs N >= 1 and k >= 1");
    if (vertex_count < 2 * k - 1) throw InvalidArgument("Erdős–Gallai threshold needs N >= 2k - 1");
    return std::max(binom(2 * k - 1, 2), binom(k - 1, 2) + (k - 1) * (vertex_count - k + 1));
}

bool above_five_ninths(const Graph& g) {
    return 9 * static_cast<std::int64_t>(g.edge_count()) > 5 * binom(g.n(), 2);
}

double GraphMeetReport::alpha() const {
    return n ? 1.0 - static_cast<double>(components[0].vertices.size()) / n : 0.0;
}

double GraphMeetReport::beta() const {
    return n ? 1.0 - static_cast<double>(components[1].vertices.size()) / n : 0.0;
}

namespace {

Graph component_graph(int n, const GraphComponent& c) { return Graph(n, c.edges); }

void fill_verdicts(GraphMeetReport& r) {
    const std::int64_t n = r.n;
    const std::int64_t pairs = binom(n, 2);
    r.covers_two_thirds = true;
    r.dense_component = true;
    r.has_matching = true;
    for (std::size_t i = 0; i < 2; ++i) {
        r.covers_two_thirds &= 3 * static_cast<std::int64_t>(r.components[i].vertices.size()) > 2 * n;
        r.dense_component &= 9 * static_cast<std::int64_t>(r.components[i].edges.size()) > 4 * pairs;
        r.has_matching &= r.matchings[i].size() >= r.matching_target;
    }
    r.components_meet = r.shared_edge.has_value();
}

}  // namespace

GraphMeetReport graphmeet_verify(const Graph& g1, const Graph& g2, bool observe) {
    if (g1.n() != g2.n()) throw InvalidArgument("graphmeet needs graphs on a common vertex set");
    const bool ok = g1.n() % 3 == 0 && above_five_ninths(g1) && above_five_ninths(g2);
    if (!ok && !observe) {
        throw PreconditionError("graphmeet needs 3 | n and e(G_i) > (5/9) C(n,2) for both graphs");
    }
    GraphMeetReport r;
    r.n = g1.n();
    r.precondition_met = ok;
    r.matching_target = static_cast<std::size_t>((g1.n() + 2) / 3);
    const Graph* gs[2] = {&g1, &g2};
    for (std::size_t i = 0; i < 2; ++i) {
        if (gs[i]->edge_count() == 0) continue;  // observe mode only
        r.components[i] = largest_component(*gs[i]);
        auto m = max_matching(component_graph(r.n, r.components[i]));
        if (m.size() > r.matching_target) m.pairs.resize(r.matching_target);
        r.matchings[i] = std::move(m);
    }
    const auto& e1 = r.components[0].edges;
    const auto& e2 = r.components[1].edges;
    std::vector<Pair> common;
    std::set_intersection(e1.begin(), e1.end(), e2.begin(), e2.end(), std::back_inserter(common));
    if (!common.empty()) r.shared_edge = common.front();
    fill_verdicts(r);
    return r;
}

bool graphmeet_consistent(const GraphMeetReport& report, const Graph& g1, const Graph& g2) {
    const Graph* gs[2] = {&g1, &g2};
    for (std::size_t i = 0; i < 2; ++i) {
        const auto& c = report.components[i];
        for (const auto& e : c.edges) {
            if (!gs[i]->contains(e[0], e[1])) return false;
        }
        std::vector<char> used(static_cast<std::size_t>(report.n) + 1, 0);
        for (const auto& p : report.matchings[i].pairs) {
            if (!std::binary_search(c.edges.begin(), c.edges.end(), p)) return false;
            if (used[p[0]] || used[p[1]]) return false;
            used[p[0]] = used[p[1]] = 1;
        }
    }
    if (report.shared_edge) {
        for (const auto& c : report.components) {
            if (!std::binary_search(c.edges.begin(), c.edges.end(), *report.shared_edge)) return false;
        }
    }
    GraphMeetReport copy = report;
    fill_verdicts(copy);
    return copy.covers_two_thirds == report.covers_two_thirds &&
           copy.dense_component == report.dense_component && copy.has_matching == report.has_matching &&
           copy.components_meet == report.components_meet;
}

}  // namespace tcl
