#include "tcl/cycle.hpp"

#include <algorithm>
#include <bit>

#include "tcl/errors.hpp"
#include "tcl/random.hpp"
#include "tcl/tight.hpp"

namespace tcl {

CycleCheck validate_cycle(const Hypergraph3& h, std::span<const Vertex> seq) {
    CycleCheck check;
    std::vector<char> seen(static_cast<std::size_t>(h.n()) + 1, 0);
    for (std::size_t i = 0; i < seq.size(); ++i) {
        const Vertex v = seq[i];
        if (v < 1 || v > h.n()) {
            check.defect = CycleDefect::VertexOutOfRange;
            check.position = i;
            check.message = "vertex " + std::to_string(v) + " outside [1, n]";
            return check;
        }
        if (seen[static_cast<std::size_t>(v)]) {
            check.defect = CycleDefect::DuplicateVertex;
            check.position = i;
            check.message = "vertex " + std::to_string(v) + " repeated";
            return check;
        }
        seen[static_cast<std::size_t>(v)] = 1;
    }
    if (seq.size() < kMinCycleLength) {
        check.defect = seq.size() == 3 ? CycleDefect::Degenerate : CycleDefect::TooShort;
        check.message = seq.size() == 3 ? "a single edge is a degenerate cycle" : "fewer than 4 vertices";
        return check;
    }
    const std::size_t len = seq.size();
    for (std::size_t i = 0; i < len; ++i) {
        const Triple w{seq[i], seq[(i + 1) % len], seq[(i + 2) % len]};
        if (!h.contains(w)) {
            check.defect = CycleDefect::MissingWindow;
            check.position = i;
            check.window = w;
            check.message = "window (" + std::to_string(w[0]) + "," + std::to_string(w[1]) + "," +
                            std::to_string(w[2]) + ") is not an edge";
            return check;
        }
    }
    return check;
}

namespace {

// Reachability table for cycles starting s, s2, ... whose other vertices come
// from `rest` (all larger than s). State bit (a, b) of a mask means some tight
// path s, s2, ..., a, b visits exactly the rest-vertices in the mask; a == k
// stands for s2.
class CycleDp {
public:
    CycleDp(const Hypergraph3& h, Vertex s, Vertex s2, std::vector<Vertex> rest)
        : h_(h), s_(s), s2_(s2), rest_(std::move(rest)), k_(static_cast<int>(rest_.size())),
          words_((static_cast<std::size_t>(k_ + 1) * static_cast<std::size_t>(k_) + 63) / 64),
          ext_(static_cast<std::size_t>(k_ + 1) * static_cast<std::size_t>(k_), 0),
          closable_(ext_.size(), 0) {
        for (int a = 0; a <= k_; ++a) {
            for (int b = 0; b < k_; ++b) {
                if (a == b) continue;
                const Vertex va = vertex(a), vb = vertex(b);
                std::uint32_t mask = 0;
                for (int c = 0; c < k_; ++c) {
                    if (c != a && c != b && h.contains(va, vb, vertex(c))) mask |= 1u << c;
                }
                ext_[slot(a, b)] = mask;
                closable_[slot(a, b)] = h.contains(va, vb, s) && h.contains(vb, s, s2) ? 1 : 0;
            }
        }
    }

    struct Best {
        int length = 0;
        std::uint32_t mask = 0;
        int a = 0, b = 0;
    };

    // Fills the table and returns the longest closable state beating `floor`.
    Best run(int floor) {
        table_.assign((std::size_t{1} << k_) * words_, 0);
        Best best;
        best.length = floor;
        for (int c = 0; c < k_; ++c) {
            if (h_.contains(s_, s2_, vertex(c))) set(1u << c, k_, c);
        }
        const std::uint32_t full = k_ == 32 ? ~0u : (1u << k_) - 1;
        for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
            const int len = std::popcount(mask) + 2;
            const std::uint64_t* row = &table_[mask * words_];
            for (std::size_t w = 0; w < words_; ++w) {
                std::uint64_t bits = row[w];
                while (bits) {
                    const auto bit = static_cast<std::size_t>(std::countr_zero(bits));
                    bits &= bits - 1;
                    const auto idx = w * 64 + bit;
                    const int a = static_cast<int>(idx) / k_;
                    const int b = static_cast<int>(idx) % k_;
                    if (len >= static_cast<int>(kMinCycleLength) && len > best.length && closable_[idx]) {
                        best = {len, mask, a, b};
                    }
                    std::uint32_t next = ext_[idx] & ~mask;
                    while (next) {
                        const int c = std::countr_zero(next);
                        next &= next - 1;
                        set(mask | (1u << c), b, c);
                    }
                }
            }
        }
        return best;
    }

    // Rebuilds the vertex order of a state reported by run().
    TightCycle reconstruct(const Best& best) const {
        std::vector<Vertex> tail;
        std::uint32_t mask = best.mask;
        int a = best.a, b = best.b;
        while (true) {
            tail.push_back(vertex(b));
            if (std::popcount(mask) == 1) break;
            const std::uint32_t prev = mask & ~(1u << b);
            int found = -1;
            for (int x = 0; x <= k_ && found < 0; ++x) {
                if (x == a || x == b) continue;
                if (x < k_ && !(prev & (1u << x))) continue;
                if (get(prev, x, a) && (ext_[slot(x, a)] & (1u << b))) found = x;
            }
            if (found < 0) throw InvariantViolation("cycle reconstruction lost its predecessor", "");
            mask = prev;
            b = a;
            a = found;
        }
        TightCycle cycle;
        cycle.order = {s_, s2_};
        cycle.order.insert(cycle.order.end(), tail.rbegin(), tail.rend());
        return cycle;
    }

private:
    Vertex vertex(int i) const { return i == k_ ? s2_ : rest_[static_cast<std::size_t>(i)]; }
    std::size_t slot(int a, int b) const { return static_cast<std::size_t>(a) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(b); }
    void set(std::uint32_t mask, int a, int b) {
        const auto idx = slot(a, b);
        table_[mask * words_ + idx / 64] |= std::uint64_t{1} << (idx % 64);
    }
    bool get(std::uint32_t mask, int a, int b) const {
        const auto idx = slot(a, b);
        return (table_[mask * words_ + idx / 64] >> (idx % 64)) & 1;
    }

    const Hypergraph3& h_;
    Vertex s_, s2_;
    std::vector<Vertex> rest_;
    int k_;
    std::size_t words_;
    std::vector<std::uint32_t> ext_;
    std::vector<std::uint8_t> closable_;
    std::vector<std::uint64_t> table_;
};

}  // namespace

std::optional<TightCycle> longest_tight_cycle(const Hypergraph3& h) {
    const int n = h.n();
    if (n > kExactCycleMaxVertices) {
        throw SizeLimitError("exact longest tight cycle is limited to n <= " + std::to_string(kExactCycleMaxVertices) +
                             "; use the matching-guided heuristic for larger instances");
    }
    std::optional<TightCycle> best;
    int best_len = 0;
    for (Vertex s = 1; s <= n; ++s) {
        if (n - s + 1 <= best_len) break;
        for (Vertex s2 = s + 1; s2 <= n; ++s2) {
            if (h.edges_containing(s, s2).empty()) continue;
            std::vector<Vertex> rest;
            for (Vertex v = s + 1; v <= n; ++v) {
                if (v != s2) rest.push_back(v);
            }
            CycleDp dp(h, s, s2, std::move(rest));
            auto found = dp.run(best_len);
            if (found.length > best_len) {
                best_len = found.length;
                best = dp.reconstruct(found);
            }
            if (best_len == n - s + 1) break;
        }
    }
    if (best && !validate_cycle(h, best->order).valid()) {
        throw InvariantViolation("exact solver produced an invalid cycle", "");
    }
    return best;
}

namespace {

int third_cluster(const Triple& e, int c1, int c2) {
    for (Vertex x : e) {
        if (x - 1 != c1 && x - 1 != c2) return x - 1;
    }
    return -1;
}

bool holds_pair(const Triple& e, int c1, int c2) {
    auto has = [&](int c) { return std::find(e.begin(), e.end(), c + 1) != e.end(); };
    return has(c1) && has(c2) && c1 != c2;
}

struct Schedule {
    std::vector<Triple> walk;     // cluster triples as vertices c + 1
    std::vector<int> budget;      // vertices to spend at each walk position
};

struct Step {
    bool done = false;
    int cluster = -1;
    int pos = 0;
    int spent = 0;
};

// Where the next path vertex goes, given the walk state after the last vertex
// and the clusters (c1, c2) of the last two path vertices.
Step next_step(const Schedule& sched, int pos, int spent, int c1, int c2) {
    const auto& e = sched.walk[static_cast<std::size_t>(pos)];
    if (spent < sched.budget[static_cast<std::size_t>(pos)]) return {false, third_cluster(e, c1, c2), pos, spent + 1};
    if (pos + 1 == static_cast<int>(sched.walk.size())) return {true};
    const auto& next = sched.walk[static_cast<std::size_t>(pos) + 1];
    if (holds_pair(next, c1, c2)) return {false, third_cluster(next, c1, c2), pos + 1, 1};
    return {false, third_cluster(e, c1, c2), pos, spent + 1};
}

struct Frame {
    Vertex v = 0;
    int pos = 0;
    int spent = 0;
    bool expanded = false;
    bool skipped = false;
    Step step;
    std::vector<Vertex> candidates;
    std::size_t next = 0;
};

// Longest contiguous stretch of the path that closes into a tight cycle.
std::optional<TightCycle> best_closure(const Hypergraph3& h, const std::vector<Vertex>& path) {
    const std::size_t len = path.size();
    for (std::size_t width = len; width >= kMinCycleLength; --width) {
        for (std::size_t i = 0; i + width <= len; ++i) {
            const std::size_t j = i + width - 1;
            if (h.contains(path[j - 1], path[j], path[i]) && h.contains(path[j], path[i], path[i + 1])) {
                return TightCycle{std::vector<Vertex>(path.begin() + static_cast<std::ptrdiff_t>(i),
                                                      path.begin() + static_cast<std::ptrdiff_t>(j) + 1)};
            }
        }
    }
    return std::nullopt;
}

class PathBuilder {
public:
    PathBuilder(const Hypergraph3& h, const WeakSlice& s, const Schedule& sched, int backtrack_budget, std::uint64_t seed)
        : h_(h), s_(s), sched_(sched), budget_(backtrack_budget), rng_(seed),
          used_(static_cast<std::size_t>(h.n()) + 1, 0) {}

    // Runs one depth-first growth; returns the longest path seen and, when the
    // schedule completed, the final path.
    std::vector<Vertex> run(std::vector<Vertex>& final_path) {
        const auto& first = sched_.walk.front();
        std::vector<Frame> stack;
        Frame root;
        root.expanded = true;
        root.step = {false, first[0] - 1, 0, 1};
        root.candidates = cluster_candidates(root.step.cluster, stack);
        stack.push_back(std::move(root));
        std::vector<Vertex> best;
        int backtracks = 0;

        while (!stack.empty()) {
            Frame& top = stack.back();
            if (!top.expanded) {
                top.expanded = true;
                top.step = plan(stack);
                if (top.step.done) {
                    final_path = path(stack);
                    return longer(best, final_path);
                }
                top.candidates = cluster_candidates(top.step.cluster, stack);
            }
            if (top.next < top.candidates.size()) {
                const Vertex v = top.candidates[top.next++];
                if (used_[static_cast<std::size_t>(v)]) continue;
                Frame f;
                f.v = v;
                f.pos = top.step.pos;
                f.spent = top.step.spent;
                used_[static_cast<std::size_t>(v)] = 1;
                stack.push_back(std::move(f));
                if (stack.size() - 1 > best.size()) best = path(stack);
                continue;
            }
            // Out of candidates: first give up the rest of a winding budget,
            // then backtrack.
            if (stack.size() > 1 && !top.skipped && top.spent < sched_.budget[static_cast<std::size_t>(top.pos)]) {
                top.skipped = true;
                top.spent = sched_.budget[static_cast<std::size_t>(top.pos)];
                top.expanded = false;
                top.next = 0;
                continue;
            }
            if (++backtracks > budget_) break;
            if (stack.size() > 1) used_[static_cast<std::size_t>(top.v)] = 0;
            stack.pop_back();
        }
        final_path.clear();
        return best;
    }

private:
    static std::vector<Vertex> longer(std::vector<Vertex> a, const std::vector<Vertex>& b) {
        return b.size() > a.size() ? b : a;
    }

    static std::vector<Vertex> path(const std::vector<Frame>& stack) {
        std::vector<Vertex> p;
        for (std::size_t i = 1; i < stack.size(); ++i) p.push_back(stack[i].v);
        return p;
    }

    Step plan(const std::vector<Frame>& stack) const {
        const std::size_t len = stack.size() - 1;
        const Frame& top = stack.back();
        if (len == 1) return {false, sched_.walk.front()[1] - 1, 0, 2};
        const int c1 = s_.cluster_of(stack[len - 1].v);
        const int c2 = s_.cluster_of(top.v);
        return next_step(sched_, top.pos, top.spent, c1, c2);
    }

    std::vector<Vertex> cluster_candidates(int cluster, const std::vector<Frame>& stack) {
        std::vector<Vertex> out;
        const std::size_t len = stack.empty() ? 0 : stack.size() - 1;
        for (Vertex v : s_.clusters[static_cast<std::size_t>(cluster)]) {
            if (used_[static_cast<std::size_t>(v)]) continue;
            if (len >= 2 && !h_.contains(stack[len - 1].v, stack[len].v, v)) continue;
            if (len == 1 && h_.edges_containing(stack[1].v, v).empty()) continue;
            out.push_back(v);
        }
        rng_.shuffle(out);
        return out;
    }

    const Hypergraph3& h_;
    const WeakSlice& s_;
    const Schedule& sched_;
    int budget_;
    Rng rng_;
    std::vector<char> used_;
};

std::int64_t floor_to_int(const Rational& q) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return f.get_si();
}

}  // namespace

CycleSearchResult matching_guided_cycle(const Hypergraph3& h, const WeakSlice& s, const ReducedGraph& r,
                                        const FractionalMatching& m, const CycleSearchParams& params) {
    if (m.n != r.t || s.t != r.t) throw InvalidArgument("matching, slice and reduced graph disagree on t");
    std::vector<int> all(static_cast<std::size_t>(r.t));
    for (int c = 0; c < r.t; ++c) all[static_cast<std::size_t>(c)] = c;
    const Hypergraph3 rd = reduced_hypergraph(r, all);
    const auto labels = tight_components(rd);

    std::vector<std::size_t> support;
    for (const auto& e : m.edges) {
        auto idx = rd.index_of(e);
        if (!idx) throw InvalidArgument("matching support uses a triple outside R_d");
        if (!support.empty() && labels.labels[*idx] != labels.labels[support.front()]) {
            throw InvalidArgument("matching support is not tightly connected in R_d");
        }
        support.push_back(*idx);
    }

    CycleSearchResult result;
    result.target.assign(static_cast<std::size_t>(r.t), Rational(0));
    for (int c = 0; c < r.t; ++c) result.target[static_cast<std::size_t>(c)] = m.load(c + 1) * s.m;
    result.target_length = m.total_weight * 3 * s.m;
    result.coverage.assign(static_cast<std::size_t>(r.t), 0);
    if (support.empty()) {
        result.failure = "empty matching";
        return result;
    }

    // Each support edge gets 3 · w · m winding steps at its first visit; the
    // transitional edges of the connecting tight walks only take the vertex
    // that enters them.
    Schedule sched;
    std::vector<char> budgeted(rd.edge_count(), 0);
    auto push = [&](std::size_t idx) {
        sched.walk.push_back(rd.edge(idx));
        int budget = 0;
        const auto pos = std::find(support.begin(), support.end(), idx) - support.begin();
        if (pos < static_cast<std::ptrdiff_t>(support.size()) && !budgeted[idx]) {
            budget = static_cast<int>(floor_to_int(m.weights[static_cast<std::size_t>(pos)] * 3 * s.m));
            budgeted[idx] = 1;
        }
        sched.budget.push_back(budget);
    };
    push(support.front());
    for (std::size_t i = 1; i < support.size(); ++i) {
        const auto walk = tight_walk(rd, support[i - 1], support[i]);
        for (std::size_t j = 1; j < walk->size(); ++j) push((*walk)[j]);
    }

    for (int restart = 0; restart < std::max(1, params.restarts); ++restart) {
        ++result.restarts_used;
        PathBuilder builder(h, s, sched, params.backtrack_budget, derive_seed(params.seed, static_cast<std::uint64_t>(restart)));
        std::vector<Vertex> final_path;
        auto longest = builder.run(final_path);
        if (longest.size() > result.longest_path.size()) result.longest_path = longest;
        for (const auto* p : {&final_path, &longest}) {
            auto closed = best_closure(h, *p);
            if (closed && (!result.cycle || closed->length() > result.cycle->length())) result.cycle = std::move(closed);
        }
        if (result.cycle && Rational(static_cast<long>(result.cycle->length())) >= result.target_length) break;
    }

    if (!result.cycle) {
        result.failure = "no closable tight path of length >= 4";
        return result;
    }
    const auto check = validate_cycle(h, result.cycle->order);
    if (!check.valid()) throw InvariantViolation("heuristic emitted an invalid cycle", check.message);
    for (Vertex v : result.cycle->order) {
        const int c = s.cluster_of(v);
        if (c >= 0) ++result.coverage[static_cast<std::size_t>(c)];
    }
    return result;
}

}  // namespace tcl
