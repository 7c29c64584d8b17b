#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "potseq/degree_sequence.hpp"

namespace potseq {

/// Finite undirected simple graph on dense vertex labels 0..n-1.
/// Edge storage is a symmetric adjacency matrix; set semantics, no loops.
class SimpleGraph {
public:
    SimpleGraph() = default;

    explicit SimpleGraph(int order) : n_(order) {
        if (order < 0) throw std::invalid_argument("negative graph order");
        adj_.assign(static_cast<size_t>(n_) * static_cast<size_t>(n_), 0);
    }

    int order() const { return n_; }
    int edge_count() const { return edges_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) return false;
        return adj_[idx(u, v)] != 0;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("loop edge rejected");
        if (adj_[idx(u, v)]) return;
        adj_[idx(u, v)] = adj_[idx(v, u)] = 1;
        ++edges_;
    }

    void remove_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v || !adj_[idx(u, v)]) return;
        adj_[idx(u, v)] = adj_[idx(v, u)] = 0;
        --edges_;
    }

    int degree(int v) const {
        check_vertex(v);
        int deg = 0;
        for (int u = 0; u < n_; ++u) deg += adj_[idx(v, u)];
        return deg;
    }

    std::vector<int> neighbors(int v) const {
        check_vertex(v);
        std::vector<int> out;
        for (int u = 0; u < n_; ++u)
            if (adj_[idx(v, u)]) out.push_back(u);
        return out;
    }

    std::vector<int> degrees() const {
        std::vector<int> out(static_cast<size_t>(n_), 0);
        for (int v = 0; v < n_; ++v) out[static_cast<size_t>(v)] = degree(v);
        return out;
    }

    DegreeSequence degree_sequence() const { return DegreeSequence(degrees()); }

    /// Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<size_t>(edges_));
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (adj_[idx(u, v)]) out.emplace_back(u, v);
        return out;
    }

    bool operator==(const SimpleGraph& other) const {
        return n_ == other.n_ && adj_ == other.adj_;
    }
    bool operator!=(const SimpleGraph& other) const { return !(*this == other); }

private:
    size_t idx(int u, int v) const {
        return static_cast<size_t>(u) * static_cast<size_t>(n_) + static_cast<size_t>(v);
    }
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
    }

    int n_ = 0;
    int edges_ = 0;
    std::vector<char> adj_;
};

inline int edge_count(const SimpleGraph& g) { return g.edge_count(); }

inline SimpleGraph complete(int k) {
    if (k < 1) throw std::invalid_argument("complete(k) requires k >= 1");
    SimpleGraph g(k);
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
    return g;
}

inline SimpleGraph cycle(int k) {
    if (k < 3) throw std::invalid_argument("cycle(k) requires k >= 3");
    SimpleGraph g(k);
    for (int v = 0; v < k; ++v) g.add_edge(v, (v + 1) % k);
    return g;
}

/// The paper's P_k: a path on k+1 vertices with k edges.
inline SimpleGraph path_paper(int k) {
    if (k < 1) throw std::invalid_argument("path_paper(k) requires k >= 1");
    SimpleGraph g(k + 1);
    for (int v = 0; v < k; ++v) g.add_edge(v, v + 1);
    return g;
}

/// K_{1,t}: the center is vertex 0.
inline SimpleGraph star(int t) {
    if (t < 1) throw std::invalid_argument("star(t) requires t >= 1");
    SimpleGraph g(t + 1);
    for (int v = 1; v <= t; ++v) g.add_edge(0, v);
    return g;
}

/// Disjoint union; b's vertices are relabeled after a's.
inline SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b) {
    SimpleGraph g(a.order() + b.order());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    const int off = a.order();
    for (auto [u, v] : b.edges()) g.add_edge(u + off, v + off);
    return g;
}

inline SimpleGraph disjoint_copies(const SimpleGraph& g, int count) {
    if (count < 1) throw std::invalid_argument("disjoint_copies requires count >= 1");
    SimpleGraph out = g;
    for (int i = 1; i < count; ++i) out = disjoint_union(out, g);
    return out;
}

/// Join G+H: disjoint union plus all cross edges.
inline SimpleGraph join(const SimpleGraph& a, const SimpleGraph& b) {
    SimpleGraph g = disjoint_union(a, b);
    for (int u = 0; u < a.order(); ++u)
        for (int v = 0; v < b.order(); ++v) g.add_edge(u, a.order() + v);
    return g;
}

/// K_m with the edges of h removed; h's vertex labels must lie in 0..m-1.
inline SimpleGraph complete_minus(int m, const SimpleGraph& h) {
    if (h.order() > m)
        throw std::invalid_argument("complete_minus: subtrahend does not fit in K_m");
    SimpleGraph g = complete(m);
    for (auto [u, v] : h.edges()) g.remove_edge(u, v);
    return g;
}

inline SimpleGraph induced(const SimpleGraph& g, const std::vector<int>& vs) {
    std::vector<char> seen(static_cast<size_t>(g.order()), 0);
    for (int v : vs) {
        if (v < 0 || v >= g.order()) throw std::out_of_range("induced: vertex out of range");
        if (seen[static_cast<size_t>(v)]) throw std::invalid_argument("induced: duplicate vertex");
        seen[static_cast<size_t>(v)] = 1;
    }
    SimpleGraph out(static_cast<int>(vs.size()));
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (g.has_edge(vs[i], vs[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

namespace detail {

inline bool embed_rec(const SimpleGraph& g, const SimpleGraph& h,
                      const std::vector<int>& h_order, const std::vector<int>& g_degrees,
                      std::vector<int>& map, std::vector<char>& used, size_t depth) {
    if (depth == h_order.size()) return true;
    const int hv = h_order[depth];
    const int need = h.degree(hv);
    for (int gv = 0; gv < g.order(); ++gv) {
        if (used[static_cast<size_t>(gv)]) continue;
        if (g_degrees[static_cast<size_t>(gv)] < need) continue;
        bool ok = true;
        for (size_t e = 0; e < depth && ok; ++e) {
            const int hu = h_order[e];
            if (h.has_edge(hv, hu) && !g.has_edge(gv, map[static_cast<size_t>(hu)])) ok = false;
        }
        if (!ok) continue;
        map[static_cast<size_t>(hv)] = gv;
        used[static_cast<size_t>(gv)] = 1;
        if (embed_rec(g, h, h_order, g_degrees, map, used, depth + 1)) return true;
        used[static_cast<size_t>(gv)] = 0;
        map[static_cast<size_t>(hv)] = -1;
    }
    return false;
}

}  // namespace detail

/// Non-induced subgraph containment: true iff an injective vertex map carries
/// every edge of h to an edge of g. On success *witness (if given) holds the
/// map h-vertex -> g-vertex. Backtracking over h's vertices in descending
/// degree order with degree-feasibility pruning.
inline bool contains_subgraph(const SimpleGraph& g, const SimpleGraph& h,
                              std::vector<int>* witness = nullptr) {
    if (h.order() > g.order()) return false;
    if (h.order() == 0) {
        if (witness) witness->clear();
        return true;
    }
    std::vector<int> h_order(static_cast<size_t>(h.order()));
    for (size_t i = 0; i < h_order.size(); ++i) h_order[i] = static_cast<int>(i);
    std::stable_sort(h_order.begin(), h_order.end(),
                     [&](int a, int b) { return h.degree(a) > h.degree(b); });
    std::vector<int> map(static_cast<size_t>(h.order()), -1);
    std::vector<char> used(static_cast<size_t>(g.order()), 0);
    const std::vector<int> g_degrees = g.degrees();
    if (!detail::embed_rec(g, h, h_order, g_degrees, map, used, 0)) return false;
    if (witness) *witness = map;
    return true;
}

/// Z family membership: exactly k >= 5 vertices and j >= 5 edges, contains
/// Z_4 (the paw) as a subgraph, and contains no 4-cycle.
inline bool is_valid_Z(const SimpleGraph& h, int k, int j) {
    if (h.order() != k || h.edge_count() != j) return false;
    if (k < 5 || j < 5) return false;
    const SimpleGraph z4 = complete_minus(4, path_paper(2));
    if (!contains_subgraph(h, z4)) return false;
    return !contains_subgraph(h, cycle(4));
}

/// Graph file format: first line "n m", then m lines "u v" (0-based).
/// Lines starting with '#' are comments.
inline SimpleGraph parse_graph(std::istream& in) {
    std::string line;
    auto next_payload = [&](std::string& out) -> bool {
        while (std::getline(in, line)) {
            size_t p = line.find_first_not_of(" \t\r");
            if (p == std::string::npos || line[p] == '#') continue;
            out = line;
            return true;
        }
        return false;
    };
    std::string head;
    if (!next_payload(head)) throw std::invalid_argument("graph file: missing header");
    std::istringstream hs(head);
    int n = 0, m = 0;
    if (!(hs >> n >> m) || n < 0 || m < 0)
        throw std::invalid_argument("graph file: bad header '" + head + "'");
    SimpleGraph g(n);
    for (int i = 0; i < m; ++i) {
        std::string body;
        if (!next_payload(body)) throw std::invalid_argument("graph file: missing edge line");
        std::istringstream es(body);
        int u = 0, v = 0;
        if (!(es >> u >> v)) throw std::invalid_argument("graph file: bad edge '" + body + "'");
        if (u < 0 || u >= n || v < 0 || v >= n || u == v)
            throw std::invalid_argument("graph file: edge out of range '" + body + "'");
        g.add_edge(u, v);
    }
    if (g.edge_count() != m)
        throw std::invalid_argument("graph file: duplicate edge listed");
    return g;
}

inline SimpleGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

inline std::string format_graph(const SimpleGraph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace potseq
