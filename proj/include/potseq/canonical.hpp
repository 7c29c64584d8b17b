#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "potseq/graph.hpp"

namespace potseq {

namespace detail {

// Ordered partition of vertices into color cells. Refinement splits cells by
// the multiset of neighbor colors until stable; cell order stays
// deterministic (split groups sorted by signature).
class ColorPartition {
public:
    explicit ColorPartition(int n) : color_(static_cast<size_t>(n), 0), cell_count_(1) {}

    int color(int v) const { return color_[static_cast<size_t>(v)]; }
    int cells() const { return cell_count_; }
    int size() const { return static_cast<int>(color_.size()); }

    bool discrete() const { return cell_count_ == size(); }

    std::vector<std::vector<int>> cell_members() const {
        std::vector<std::vector<int>> out(static_cast<size_t>(cell_count_));
        for (int v = 0; v < size(); ++v) out[static_cast<size_t>(color_[static_cast<size_t>(v)])].push_back(v);
        return out;
    }

    void refine(const SimpleGraph& g) {
        for (;;) {
            // signature of v: (current color, count of neighbors per color)
            std::vector<std::vector<int>> sig(static_cast<size_t>(size()));
            for (int v = 0; v < size(); ++v) {
                std::vector<int> s(static_cast<size_t>(cell_count_) + 1, 0);
                s[0] = color(v);
                for (int u : g.neighbors(v)) s[static_cast<size_t>(color(u)) + 1]++;
                sig[static_cast<size_t>(v)] = std::move(s);
            }
            std::map<std::vector<int>, int> order;
            for (int v = 0; v < size(); ++v) order.emplace(sig[static_cast<size_t>(v)], 0);
            int next = 0;
            for (auto& [key, id] : order) id = next++;
            bool changed = false;
            for (int v = 0; v < size(); ++v) {
                const int c = order[sig[static_cast<size_t>(v)]];
                if (c != color_[static_cast<size_t>(v)]) changed = true;
                color_[static_cast<size_t>(v)] = c;
            }
            cell_count_ = next;
            if (!changed) return;
        }
    }

    void individualize(int v) {
        // v gets a fresh color preceding its old cell's remainder
        const int c = color(v);
        for (size_t i = 0; i < color_.size(); ++i)
            if (color_[i] >= c) color_[i]++;
        color_[static_cast<size_t>(v)] = c;
        ++cell_count_;
    }

private:
    std::vector<int> color_;
    int cell_count_;
};

inline std::vector<uint64_t> adjacency_key(const SimpleGraph& g, const std::vector<int>& perm) {
    // perm[i] = original vertex placed at canonical position i
    const int n = g.order();
    std::vector<uint64_t> key;
    key.push_back(static_cast<uint64_t>(n));
    uint64_t word = 0;
    int bits = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            word = (word << 1) | (g.has_edge(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]) ? 1u : 0u);
            if (++bits == 64) {
                key.push_back(word);
                word = 0;
                bits = 0;
            }
        }
    if (bits) key.push_back(word << (64 - bits));
    return key;
}

inline void canon_search(const SimpleGraph& g, ColorPartition part, std::vector<uint64_t>& best,
                         bool& have_best) {
    part.refine(g);
    if (part.discrete()) {
        std::vector<int> perm(static_cast<size_t>(g.order()));
        for (int v = 0; v < g.order(); ++v) perm[static_cast<size_t>(part.color(v))] = v;
        auto key = adjacency_key(g, perm);
        if (!have_best || key < best) {
            best = std::move(key);
            have_best = true;
        }
        return;
    }
    const auto cells = part.cell_members();
    for (const auto& cell : cells) {
        if (cell.size() < 2) continue;
        for (int v : cell) {
            ColorPartition child = part;
            child.individualize(v);
            canon_search(g, std::move(child), best, have_best);
        }
        break;  // branch on the first non-singleton cell only
    }
}

}  // namespace detail

/// Canonical key: the lexicographically smallest upper-triangle adjacency
/// bitstring over the labelings explored by refinement + individualization.
/// Equal keys iff isomorphic.
inline std::vector<uint64_t> canonical_key(const SimpleGraph& g) {
    detail::ColorPartition part(g.order());
    std::vector<uint64_t> best;
    bool have_best = false;
    if (g.order() == 0) return {0};
    detail::canon_search(g, std::move(part), best, have_best);
    return best;
}

}  // namespace potseq
