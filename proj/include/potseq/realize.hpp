#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "potseq/canonical.hpp"
#include "potseq/degree_sequence.hpp"
#include "potseq/graph.hpp"
#include "potseq/target_spec.hpp"

namespace potseq {

class NotGraphicError : public std::runtime_error {
public:
    explicit NotGraphicError(const std::string& what) : std::runtime_error(what) {}
};

/// Node/time cap for the exact searches. Exhaustion is reported as a
/// distinct outcome, never as a silent "no".
struct SearchBudget {
    uint64_t node_cap = UINT64_MAX;
    std::optional<std::chrono::steady_clock::time_point> deadline;
    uint64_t nodes = 0;
    bool dead = false;

    bool tick() {
        if (dead) return false;
        if (++nodes > node_cap) {
            dead = true;
            return false;
        }
        if (deadline && (nodes & 0x3ffu) == 0 &&
            std::chrono::steady_clock::now() > *deadline) {
            dead = true;
            return false;
        }
        return true;
    }

    static SearchBudget with_nodes(uint64_t cap) {
        SearchBudget b;
        b.node_cap = cap;
        return b;
    }
};

enum class Outcome { yes, no, out_of_budget };

struct RealizationWitness {
    SimpleGraph graph;
    std::optional<std::vector<int>> embedding;  // pattern vertex -> graph vertex
};

struct PotentialResult {
    Outcome outcome = Outcome::no;
    std::optional<RealizationWitness> witness;
    uint64_t nodes = 0;
};

namespace detail {

constexpr int kMaxSearchOrder = 32;

// Exact completion search: find a simple graph on n labeled vertices with
// prescribed per-vertex degrees, avoiding a set of banned edges. Saturates
// the max-demand vertex at each level (Havel-Hakimi order, so the first
// branch is the greedy realization) and enumerates partner subsets with an
// Erdos-Gallai feasibility bound on the residual demands.
struct CompletionSearch {
    int n = 0;
    std::vector<int> demand;
    std::vector<uint32_t> banned;  // banned[v] bit w set: edge vw unavailable
    SearchBudget* budget = nullptr;
    std::function<bool(const std::vector<std::pair<int, int>>&)> on_complete;

    std::vector<std::pair<int, int>> edges;
    bool stopped = false;      // on_complete asked to stop
    bool budget_dead = false;

    bool tick() {
        if (!budget) return true;
        if (budget->tick()) return true;
        budget_dead = true;
        return false;
    }

    bool feasible() const {
        // every positive demand needs enough live partners
        for (int v = 0; v < n; ++v) {
            if (demand[static_cast<size_t>(v)] == 0) continue;
            int cap = 0;
            for (int w = 0; w < n; ++w) {
                if (w == v || demand[static_cast<size_t>(w)] == 0) continue;
                if (banned[static_cast<size_t>(v)] >> w & 1u) continue;
                ++cap;
            }
            if (cap < demand[static_cast<size_t>(v)]) return false;
        }
        // Erdos-Gallai on the residual demands; banned edges only remove
        // options, so failure here is conclusive
        std::vector<int> s = demand;
        std::sort(s.begin(), s.end(), std::greater<int>());
        long long head = 0;
        for (int t = 1; t <= n - 1; ++t) {
            head += s[static_cast<size_t>(t - 1)];
            long long tail = 0;
            for (int j = t + 1; j <= n; ++j) tail += std::min(t, s[static_cast<size_t>(j - 1)]);
            if (head > static_cast<long long>(t) * (t - 1) + tail) return false;
        }
        return true;
    }

    void run() {
        if (!feasible()) return;
        recurse();
    }

    void recurse() {
        if (stopped || budget_dead) return;
        if (!tick()) return;
        int v = -1;
        for (int i = 0; i < n; ++i)
            if (demand[static_cast<size_t>(i)] > 0 &&
                (v < 0 || demand[static_cast<size_t>(i)] > demand[static_cast<size_t>(v)]))
                v = i;
        if (v < 0) {
            if (!on_complete(edges)) stopped = true;
            return;
        }
        std::vector<int> cand;
        for (int w = 0; w < n; ++w) {
            if (w == v || demand[static_cast<size_t>(w)] == 0) continue;
            if (banned[static_cast<size_t>(v)] >> w & 1u) continue;
            cand.push_back(w);
        }
        std::stable_sort(cand.begin(), cand.end(), [&](int a, int b) {
            return demand[static_cast<size_t>(a)] > demand[static_cast<size_t>(b)];
        });
        if (static_cast<int>(cand.size()) < demand[static_cast<size_t>(v)]) return;
        std::vector<int> chosen;
        chosen.reserve(static_cast<size_t>(demand[static_cast<size_t>(v)]));
        choose(v, cand, 0, demand[static_cast<size_t>(v)], chosen);
    }

    void choose(int v, const std::vector<int>& cand, size_t from, int need,
                std::vector<int>& chosen) {
        if (stopped || budget_dead) return;
        if (need == 0) {
            const int dv = demand[static_cast<size_t>(v)];
            demand[static_cast<size_t>(v)] = 0;
            for (int w : chosen) {
                demand[static_cast<size_t>(w)]--;
                edges.emplace_back(std::min(v, w), std::max(v, w));
            }
            if (feasible()) recurse();
            for (size_t i = 0; i < chosen.size(); ++i) edges.pop_back();
            for (int w : chosen) demand[static_cast<size_t>(w)]++;
            demand[static_cast<size_t>(v)] = dv;
            return;
        }
        if (cand.size() - from < static_cast<size_t>(need)) return;
        if (!tick()) return;
        chosen.push_back(cand[from]);
        choose(v, cand, from + 1, need - 1, chosen);
        chosen.pop_back();
        choose(v, cand, from + 1, need, chosen);
    }
};

inline void check_search_order(int n) {
    if (n > kMaxSearchOrder)
        throw std::invalid_argument("realization search supports n <= 32");
}

}  // namespace detail

/// One realization of a graphic sequence (Havel-Hakimi greedy: the first
/// branch of the completion search). Vertex i ends with degree terms[i].
inline SimpleGraph realize(const DegreeSequence& pi) {
    if (!is_graphic_eg(pi)) throw NotGraphicError("not graphic: " + pi.str());
    detail::check_search_order(pi.size());
    const int n = pi.size();
    SimpleGraph g(n);
    detail::CompletionSearch search;
    search.n = n;
    search.demand = pi.terms();
    search.banned.assign(static_cast<size_t>(n), 0);
    search.on_complete = [&](const std::vector<std::pair<int, int>>& es) {
        for (auto [u, v] : es) g.add_edge(u, v);
        return false;
    };
    search.run();
    return g;
}

/// Exact "potentially H-graphic" decision. The pattern is anchored on the
/// first |V(H)| positions of the sorted sequence (realization rearrangement
/// makes this lossless); assignments of pattern vertices to those positions
/// are enumerated up to equal-degree position symmetry, then the residual
/// degree demands are completed avoiding the pattern's edges.
inline PotentialResult potentially(const DegreeSequence& pi, const SimpleGraph& pattern,
                                   SearchBudget* budget = nullptr) {
    if (!is_graphic_eg(pi)) throw NotGraphicError("not graphic: " + pi.str());
    if (pattern.order() == 0) throw std::invalid_argument("empty pattern");
    const int n = pi.size();
    const int m = pattern.order();
    PotentialResult res;
    if (m > n) return res;
    detail::check_search_order(n);

    SearchBudget local;
    if (!budget) budget = &local;
    const uint64_t nodes_before = budget->nodes;

    const std::vector<int> pat_deg = pattern.degrees();
    std::vector<int> assigned(static_cast<size_t>(m), -1);  // position -> pattern vertex
    std::vector<char> used(static_cast<size_t>(m), 0);
    Outcome outcome = Outcome::no;

    // returns true to unwind (found or budget gone)
    std::function<bool(int)> assign = [&](int pos) -> bool {
        if (!budget->tick()) {
            outcome = Outcome::out_of_budget;
            return true;
        }
        if (pos == m) {
            std::vector<int> pos_of(static_cast<size_t>(m));
            for (int p = 0; p < m; ++p) pos_of[static_cast<size_t>(assigned[static_cast<size_t>(p)])] = p;
            detail::CompletionSearch search;
            search.n = n;
            search.budget = budget;
            search.demand.resize(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i)
                search.demand[static_cast<size_t>(i)] =
                    i < m ? pi[i] - pat_deg[static_cast<size_t>(assigned[static_cast<size_t>(i)])] : pi[i];
            search.banned.assign(static_cast<size_t>(n), 0);
            for (auto [a, b] : pattern.edges()) {
                const int pa = pos_of[static_cast<size_t>(a)];
                const int pb = pos_of[static_cast<size_t>(b)];
                search.banned[static_cast<size_t>(pa)] |= 1u << pb;
                search.banned[static_cast<size_t>(pb)] |= 1u << pa;
            }
            std::vector<std::pair<int, int>> found;
            search.on_complete = [&](const std::vector<std::pair<int, int>>& es) {
                found = es;
                return false;
            };
            search.run();
            if (search.budget_dead) {
                outcome = Outcome::out_of_budget;
                return true;
            }
            if (!search.stopped) return false;
            SimpleGraph g(n);
            for (auto [u, v] : found) g.add_edge(u, v);
            for (auto [a, b] : pattern.edges())
                g.add_edge(pos_of[static_cast<size_t>(a)], pos_of[static_cast<size_t>(b)]);
            std::vector<int> embedding(static_cast<size_t>(m));
            for (int h = 0; h < m; ++h) embedding[static_cast<size_t>(h)] = pos_of[static_cast<size_t>(h)];
            res.witness = RealizationWitness{std::move(g), std::move(embedding)};
            outcome = Outcome::yes;
            return true;
        }
        for (int h = 0; h < m; ++h) {
            if (used[static_cast<size_t>(h)]) continue;
            // positions of equal degree are interchangeable: force ascending
            // pattern-vertex ids inside each equal-degree block
            if (pos > 0 && pi[pos] == pi[pos - 1] && h < assigned[static_cast<size_t>(pos - 1)]) continue;
            if (pi[pos] < pat_deg[static_cast<size_t>(h)]) continue;
            assigned[static_cast<size_t>(pos)] = h;
            used[static_cast<size_t>(h)] = 1;
            if (assign(pos + 1)) return true;
            used[static_cast<size_t>(h)] = 0;
            assigned[static_cast<size_t>(pos)] = -1;
        }
        return false;
    };
    assign(0);
    res.outcome = outcome;
    res.nodes = budget->nodes - nodes_before;
    return res;
}

inline PotentialResult potentially(const DegreeSequence& pi, const TargetSpec& target,
                                   SearchBudget* budget = nullptr) {
    return potentially(pi, target.pattern(), budget);
}

/// Potentially A_{r+1}: some realization whose r+1 highest-degree positions
/// induce a clique. potentially() already anchors K_{r+1} on positions
/// 1..r+1 exactly, which is the definition.
inline PotentialResult is_potentially_A(const DegreeSequence& pi, int r,
                                        SearchBudget* budget = nullptr) {
    if (r < 1) throw std::invalid_argument("is_potentially_A requires r >= 1");
    if (pi.size() < r + 1)
        throw std::invalid_argument("is_potentially_A: r+1 exceeds sequence length");
    return potentially(pi, complete(r + 1), budget);
}

struct RealizationEnumeration {
    std::vector<SimpleGraph> graphs;  // pairwise non-isomorphic
    bool exhaustive = false;          // search completed under the cap
    uint64_t nodes = 0;
};

/// Enumerates pairwise non-isomorphic realizations, up to `cap` of them.
/// Labeled realizations are generated by the completion search and
/// deduplicated through canonical keys.
inline RealizationEnumeration enumerate_realizations(const DegreeSequence& pi, size_t cap,
                                                     SearchBudget* budget = nullptr) {
    if (!is_graphic_eg(pi)) throw NotGraphicError("not graphic: " + pi.str());
    detail::check_search_order(pi.size());
    if (cap == 0) throw std::invalid_argument("cap must be positive");
    SearchBudget local;
    if (!budget) budget = &local;
    const uint64_t nodes_before = budget->nodes;

    RealizationEnumeration out;
    std::set<std::vector<uint64_t>> seen;
    const int n = pi.size();
    detail::CompletionSearch search;
    search.n = n;
    search.demand = pi.terms();
    search.banned.assign(static_cast<size_t>(n), 0);
    search.budget = budget;
    search.on_complete = [&](const std::vector<std::pair<int, int>>& es) {
        SimpleGraph g(n);
        for (auto [u, v] : es) g.add_edge(u, v);
        if (seen.insert(canonical_key(g)).second) out.graphs.push_back(std::move(g));
        return out.graphs.size() < cap;
    };
    search.run();
    out.exhaustive = !search.budget_dead && !search.stopped;
    out.nodes = budget->nodes - nodes_before;
    return out;
}

}  // namespace potseq
