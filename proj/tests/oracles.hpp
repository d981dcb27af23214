#pragma once

// Brute-force reference implementations. They share no code with the library
// beyond the container types, and favour obviousness over speed.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "tcl/hypergraph.hpp"
#include "tcl/rational.hpp"

namespace oracle {

using tcl::Graph;
using tcl::Hypergraph3;
using tcl::Pair;
using tcl::Rational;
using tcl::Triple;
using tcl::Vertex;

inline std::int64_t choose(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Dense membership table for a 3-graph, indexed by all orderings.
class EdgeTable {
public:
    explicit EdgeTable(const Hypergraph3& h) : n_(h.n()), cells_(static_cast<std::size_t>((n_ + 1) * (n_ + 1) * (n_ + 1)), 0) {
        for (const auto& e : h.edges()) {
            std::array<int, 3> p = {e[0], e[1], e[2]};
            do {
                cells_[index(p[0], p[1], p[2])] = 1;
            } while (std::next_permutation(p.begin(), p.end()));
        }
    }
    bool operator()(int a, int b, int c) const { return cells_[index(a, b, c)] != 0; }

private:
    std::size_t index(int a, int b, int c) const {
        return static_cast<std::size_t>((a * (n_ + 1) + b) * (n_ + 1) + c);
    }
    int n_;
    std::vector<char> cells_;
};

// Maximum matching by exhaustive search over vertex subsets (n <= 20).
inline std::vector<Pair> brute_max_matching(const Graph& g) {
    const int n = g.n();
    std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    for (const auto& e : g.edges()) adj[e[0] - 1][e[1] - 1] = adj[e[1] - 1][e[0] - 1] = 1;
    std::vector<int> memo(std::size_t{1} << n, -1);
    std::function<int(std::uint32_t)> best = [&](std::uint32_t mask) -> int {
        if (mask == 0) return 0;
        int& slot = memo[mask];
        if (slot >= 0) return slot;
        const int v = __builtin_ctz(mask);
        const std::uint32_t rest = mask & ~(1u << v);
        int value = best(rest);
        for (int u = 0; u < n; ++u) {
            if ((rest >> u & 1u) && adj[v][u]) value = std::max(value, 1 + best(rest & ~(1u << u)));
        }
        return slot = value;
    };
    std::vector<Pair> pairs;
    std::uint32_t mask = n == 32 ? ~0u : (1u << n) - 1;
    while (mask) {
        const int v = __builtin_ctz(mask);
        const std::uint32_t rest = mask & ~(1u << v);
        const int target = best(mask);
        if (best(rest) == target) {
            mask = rest;
            continue;
        }
        for (int u = 0; u < n; ++u) {
            if ((rest >> u & 1u) && adj[v][u] && 1 + best(rest & ~(1u << u)) == target) {
                pairs.push_back({v + 1, u + 1});
                mask = rest & ~(1u << u);
                break;
            }
        }
    }
    return pairs;
}

inline bool is_matching_in(const Graph& g, const std::vector<Pair>& pairs) {
    std::set<Vertex> used;
    for (const auto& p : pairs) {
        if (!g.contains(p[0], p[1])) return false;
        if (!used.insert(p[0]).second || !used.insert(p[1]).second) return false;
    }
    return true;
}

// Connected components by depth-first search, as sorted vertex lists.
inline std::vector<std::vector<Vertex>> graph_components(const Graph& g) {
    std::vector<int> seen(static_cast<std::size_t>(g.n()) + 1, 0);
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 1; s <= g.n(); ++s) {
        if (seen[s]) continue;
        std::vector<Vertex> stack = {s}, comp;
        seen[s] = 1;
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (Vertex u = 1; u <= g.n(); ++u) {
                if (!seen[u] && u != v && g.contains(std::min(u, v), std::max(u, v))) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(comp);
    }
    return out;
}

inline int shared_count(const Triple& e, const Triple& f) {
    int c = 0;
    for (auto x : e) c += (x == f[0] || x == f[1] || x == f[2]) ? 1 : 0;
    return c;
}

// For every edge, the smallest edge index in its tight class (pairwise BFS).
inline std::vector<std::size_t> naive_tight_classes(const Hypergraph3& h) {
    const auto m = h.edge_count();
    std::vector<std::size_t> rep(m, m);
    for (std::size_t s = 0; s < m; ++s) {
        if (rep[s] != m) continue;
        std::vector<std::size_t> queue = {s};
        rep[s] = s;
        for (std::size_t q = 0; q < queue.size(); ++q) {
            for (std::size_t j = 0; j < m; ++j) {
                if (rep[j] == m && shared_count(h.edge(queue[q]), h.edge(j)) == 2) {
                    rep[j] = s;
                    queue.push_back(j);
                }
            }
        }
    }
    return rep;
}

// Longest tight cycle by enumerating vertex sequences from each possible
// smallest vertex (n <= 9 or so). Returns 0 when no cycle of length >= 4.
inline int brute_longest_cycle(const Hypergraph3& h) {
    const int n = h.n();
    const EdgeTable has(h);
    int best = 0;
    std::vector<int> path;
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    std::function<void(int)> extend = [&](int s) {
        const auto len = static_cast<int>(path.size());
        if (len >= 4 && has(path[len - 2], path[len - 1], path[0]) && has(path[len - 1], path[0], path[1])) {
            best = std::max(best, len);
        }
        for (int w = s + 1; w <= n; ++w) {
            if (used[w]) continue;
            if (len >= 2 && !has(path[len - 2], path[len - 1], w)) continue;
            used[w] = 1;
            path.push_back(w);
            extend(s);
            path.pop_back();
            used[w] = 0;
        }
    };
    for (int s = 1; s <= n && n - s + 1 > best; ++s) {
        path = {s};
        used[s] = 1;
        extend(s);
        used[s] = 0;
    }
    return best;
}

// Solves the square system rows * y = rhs exactly; nullopt when singular.
inline std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs) {
    const std::size_t n = rows.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && rows[pivot][c] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(rows[pivot], rows[c]);
        std::swap(rhs[pivot], rhs[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || rows[r][c] == 0) continue;
            const Rational f = rows[r][c] / rows[c][c];
            for (std::size_t k = c; k < n; ++k) rows[r][k] -= f * rows[c][k];
            rhs[r] -= f * rhs[c];
        }
    }
    for (std::size_t r = 0; r < n; ++r) rhs[r] /= rows[r][r];
    return rhs;
}

// Minimum fractional vertex cover, min sum y subject to y(e) >= 1 and y >= 0,
// by enumerating every basic solution. By LP duality this equals the maximum
// fractional matching weight. Practical for n <= 6.
inline Rational min_fractional_cover(int n, const std::vector<Triple>& edges) {
    if (edges.empty()) return 0;
    // Constraint j < edges.size() is y(e_j) = 1, otherwise y_{j - |E|} = 0.
    const std::size_t total = edges.size() + static_cast<std::size_t>(n);
    std::optional<Rational> best;
    std::vector<std::size_t> pick(static_cast<std::size_t>(n));
    std::function<void(std::size_t, std::size_t)> choose_rows = [&](std::size_t depth, std::size_t from) {
        if (depth == pick.size()) {
            std::vector<std::vector<Rational>> rows;
            std::vector<Rational> rhs;
            for (auto j : pick) {
                std::vector<Rational> row(static_cast<std::size_t>(n), Rational(0));
                if (j < edges.size()) {
                    for (auto v : edges[j]) row[static_cast<std::size_t>(v - 1)] = 1;
                    rhs.emplace_back(1);
                } else {
                    row[j - edges.size()] = 1;
                    rhs.emplace_back(0);
                }
                rows.push_back(row);
            }
            const auto y = solve_square(rows, rhs);
            if (!y) return;
            for (const auto& value : *y) {
                if (value < 0) return;
            }
            for (const auto& e : edges) {
                if ((*y)[e[0] - 1] + (*y)[e[1] - 1] + (*y)[e[2] - 1] < 1) return;
            }
            const Rational sum = std::accumulate(y->begin(), y->end(), Rational(0));
            if (!best || sum < *best) best = sum;
            return;
        }
        for (std::size_t j = from; j + (pick.size() - depth) <= total; ++j) {
            pick[depth] = j;
            choose_rows(depth + 1, j + 1);
        }
    };
    choose_rows(0, 0);
    return *best;
}

// The contradiction device from the fractional matching argument, run on a
// candidate certificate a for a 3-graph with δ(H) > (5/9) C(n,2) and 3 | n:
// with u maximising a_u, a matching x_i y_i of size n/3 in the largest
// component of L(u) and the uncovered vertices z_i, the sets
// S_i = {x_i, y_i, z_i} partition V and each e_i = {u, x_i, y_i} satisfies
// a(e_i) >= a(S_i). So a(1) > 0 forces some a(e_i) > 0.
struct Refutation {
    Vertex u = 0;
    std::vector<Triple> e;          // e_i
    std::vector<Triple> s;          // S_i
    bool partition_ok = false;      // the S_i partition V
    bool dominance_ok = false;      // a(e_i) >= a(S_i) for all i
    Rational a_total = 0;           // a(1) = sum_i a(S_i)
    Rational e_total = 0;           // sum_i a(e_i)
    std::optional<Triple> violated;  // some e_i with a(e_i) > 0
};

inline Refutation refute_certificate(const Hypergraph3& h, const std::vector<Rational>& a) {
    const int n = h.n();
    Refutation r;
    r.u = 1;
    for (Vertex v = 2; v <= n; ++v) {
        if (a[v - 1] > a[r.u - 1]) r.u = v;
    }
    std::vector<Pair> link_edges;
    for (Vertex x = 1; x <= n; ++x) {
        for (Vertex y = x + 1; y <= n; ++y) {
            if (x != r.u && y != r.u && h.contains(tcl::make_triple(r.u, x, y))) link_edges.push_back({x, y});
        }
    }
    const Graph link(n, link_edges);
    auto comps = graph_components(link);
    const auto largest = *std::max_element(comps.begin(), comps.end(), [](const auto& p, const auto& q) {
        return p.size() < q.size();
    });
    std::vector<Pair> inside;
    for (const auto& p : link_edges) {
        if (std::binary_search(largest.begin(), largest.end(), p[0])) inside.push_back(p);
    }
    auto matching = brute_max_matching(Graph(n, inside));
    matching.resize(std::min(matching.size(), static_cast<std::size_t>(n / 3)));
    std::vector<char> covered(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& p : matching) covered[p[0]] = covered[p[1]] = 1;
    std::vector<Vertex> z;
    for (Vertex v = 1; v <= n; ++v) {
        if (!covered[v]) z.push_back(v);
    }
    auto weight = [&](const Triple& t) -> Rational { return a[t[0] - 1] + a[t[1] - 1] + a[t[2] - 1]; };
    std::vector<int> hits(static_cast<std::size_t>(n) + 1, 0);
    r.dominance_ok = matching.size() == static_cast<std::size_t>(n / 3) && z.size() == matching.size();
    for (std::size_t i = 0; i < matching.size() && i < z.size(); ++i) {
        const Triple ei = tcl::make_triple(r.u, matching[i][0], matching[i][1]);
        const Triple si = tcl::make_triple(matching[i][0], matching[i][1], z[i]);
        r.e.push_back(ei);
        r.s.push_back(si);
        for (auto v : si) ++hits[v];
        const Rational we = weight(ei);
        r.e_total += we;
        r.a_total += weight(si);
        if (we < weight(si)) r.dominance_ok = false;
        if (!r.violated && sgn(we) > 0) r.violated = ei;
    }
    r.partition_ok = std::all_of(hits.begin() + 1, hits.end(), [](int c) { return c == 1; });
    return r;
}

// The inequality behind the size-n/3 matching claim, evaluated exactly at
// x = j/n: (5/9 - x^2) C(n,2) minus the Erdős–Gallai threshold for N = n - j,
// k = n/3. Positive margin means the inequality holds.
inline Rational matching_sweep_margin(std::int64_t n, std::int64_t j) {
    const std::int64_t k = n / 3;
    const std::int64_t big_n = n - j;
    const Rational lhs = (tcl::make_rational(5, 9) - tcl::make_rational(j * j, n * n)) * Rational(choose(n, 2));
    const std::int64_t rhs = std::max(choose(2 * k - 1, 2), choose(k - 1, 2) + (k - 1) * (big_n - k + 1));
    return lhs - rhs;
}

}  // namespace oracle
