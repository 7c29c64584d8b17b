#pragma once

#include <optional>
#include <string>

#include "potseq/degree_sequence.hpp"
#include "potseq/graph.hpp"

namespace potseq {

enum class Rule { T2_1, T2_2, T2_3, T2_4, L2_2, L3_1, L3_2, L3_3, L3_4, L3_5 };

inline std::string rule_name(Rule r) {
    switch (r) {
        case Rule::T2_1: return "T2.1";
        case Rule::T2_2: return "T2.2";
        case Rule::T2_3: return "T2.3";
        case Rule::T2_4: return "T2.4";
        case Rule::L2_2: return "L2.2";
        case Rule::L3_1: return "L3.1";
        case Rule::L3_2: return "L3.2";
        case Rule::L3_3: return "L3.3";
        case Rule::L3_4: return "L3.4";
        case Rule::L3_5: return "L3.5";
    }
    return "?";
}

/// Which rule fired (if any) and what containment it guarantees. For the
/// clique-on-top guarantee (A_{r+1}) the pattern is K_{r+1} and
/// `clique_on_top` is set; confirmation goes through is_potentially_A.
struct SufficiencyVerdict {
    bool applicable = false;
    std::optional<Rule> rule;
    std::string target_token;
    SimpleGraph pattern;
    bool clique_on_top = false;

    std::string line() const {
        if (applicable) return rule_name(*rule) + " applicable → " + target_token;
        return target_token + " inapplicable";
    }
};

namespace detail {

// d_i >= bound with the paper's 1-based indexing; an out-of-range index means
// the hypothesis fails, not an error
inline bool dmin(const DegreeSequence& pi, int i, int bound) {
    return i >= 1 && i <= pi.size() && pi[i - 1] >= bound;
}

// d_i >= 2r-i for i = 1..upto (vacuous when upto < 1)
inline bool degree_floors(const DegreeSequence& pi, int r, int upto) {
    for (int i = 1; i <= upto; ++i)
        if (!dmin(pi, i, 2 * r - i)) return false;
    return true;
}

// The sigma bound shared by Lemma 3.3 and Lemma 3.5, recomputed here on
// purpose so this module double-enters the formula independently of
// thresholds.
inline long long lemma_sigma_bound(int r, int n) {
    const long long base = static_cast<long long>(r - 1) * (2LL * n - r) - 3LL * (n - r);
    return base - (((n - r) % 2 != 0) ? 1 : 2);
}

inline SimpleGraph guaranteed_pattern(int r, const SimpleGraph& removed) {
    if (removed.order() > r + 1) return SimpleGraph();  // cannot fit; verdict stays inapplicable
    return complete_minus(r + 1, removed);
}

}  // namespace detail

/// Potentially A_{r+1}: Theorem 2.1, Theorem 2.2, Lemma 3.2 (first match).
inline SufficiencyVerdict sufficient_A(const DegreeSequence& pi, int r) {
    SufficiencyVerdict v;
    v.target_token = "A" + std::to_string(r + 1);
    v.clique_on_top = true;
    if (r >= 1) v.pattern = complete(r + 1);
    if (r < 1 || !is_graphic_eg(pi)) return v;
    const int n = pi.size();
    if (n >= r + 1 && detail::dmin(pi, r + 1, r) && detail::degree_floors(pi, r, r - 1)) {
        v.applicable = true;
        v.rule = Rule::T2_1;
        return v;
    }
    if (n >= 2 * r + 2 && detail::dmin(pi, r + 1, r) && detail::dmin(pi, 2 * r + 2, r - 1)) {
        v.applicable = true;
        v.rule = Rule::T2_2;
        return v;
    }
    // Lemma 3.2: the nested index d_{d_{r+1}+2} is out of range -> inapplicable
    if (n >= 2 * r && detail::dmin(pi, r - 2, r + 1) && detail::dmin(pi, r + 1, r) &&
        detail::degree_floors(pi, r, r - 3)) {
        const int nested = pi[r] + 2;  // d_{r+1} + 2, 1-based
        if (nested <= n && pi[r - 1] - 1 >= pi[nested - 1]) {
            v.applicable = true;
            v.rule = Rule::L3_2;
        }
    }
    return v;
}

/// Potentially K_{r+1}-e: Theorem 2.3, Theorem 2.4, Lemma 3.1 (first match).
inline SufficiencyVerdict sufficient_Kr1_minus_e(const DegreeSequence& pi, int r) {
    SufficiencyVerdict v;
    v.target_token = "K" + std::to_string(r + 1) + "-e";
    if (r >= 1) v.pattern = detail::guaranteed_pattern(r, complete(2));
    if (r < 1 || !is_graphic_eg(pi)) return v;
    const int n = pi.size();
    if (n >= r + 1 && detail::dmin(pi, r + 1, r - 1) && detail::degree_floors(pi, r, r - 1)) {
        v.applicable = true;
        v.rule = Rule::T2_3;
        return v;
    }
    if (n >= 2 * r + 2 && detail::dmin(pi, r - 1, r) && detail::dmin(pi, 2 * r + 2, r - 1)) {
        v.applicable = true;
        v.rule = Rule::T2_4;
        return v;
    }
    if (n >= 2 * r && detail::dmin(pi, r - 1, r) && detail::dmin(pi, r + 1, r - 1) &&
        detail::degree_floors(pi, r, r - 2)) {
        v.applicable = true;
        v.rule = Rule::L3_1;
    }
    return v;
}

/// Potentially K_{r+1}-P_2 (P_2 = two-edge path): Lemma 2.2.
inline SufficiencyVerdict sufficient_Kr1_minus_P2(const DegreeSequence& pi, int r) {
    SufficiencyVerdict v;
    v.target_token = "K" + std::to_string(r + 1) + "-P2";
    if (r >= 2) v.pattern = detail::guaranteed_pattern(r, path_paper(2));
    if (r < 2 || !is_graphic_eg(pi)) return v;
    const int n = pi.size();
    if (n >= 2 * r + 2 && detail::dmin(pi, r - 2, r) && detail::dmin(pi, 2 * r + 2, r - 1)) {
        v.applicable = true;
        v.rule = Rule::L2_2;
    }
    return v;
}

/// Potentially K_{r+1}-Z_4: Lemma 3.3 (r >= 4, includes the parity-split
/// sigma bound).
inline SufficiencyVerdict sufficient_Kr1_minus_Z4(const DegreeSequence& pi, int r) {
    SufficiencyVerdict v;
    v.target_token = "K" + std::to_string(r + 1) + "-Z4";
    if (r >= 3) v.pattern = detail::guaranteed_pattern(r, complete_minus(4, path_paper(2)));
    if (r < 4 || !is_graphic_eg(pi)) return v;
    const int n = pi.size();
    if (n >= 2 * r + 2 && detail::dmin(pi, r - 2, r - 1) && detail::dmin(pi, r + 1, r - 2) &&
        pi.sum() >= detail::lemma_sigma_bound(r, n) && detail::degree_floors(pi, r, r - 3)) {
        v.applicable = true;
        v.rule = Rule::L3_3;
    }
    return v;
}

/// Potentially K_{r+1}-K_{1,t}: Lemma 3.4. Requires 1 <= t <= r-1.
inline SufficiencyVerdict sufficient_Kr1_minus_K1t(const DegreeSequence& pi, int r, int t) {
    if (t < 1 || t > r - 1)
        throw std::invalid_argument("sufficient_Kr1_minus_K1t requires 1 <= t <= r-1");
    SufficiencyVerdict v;
    v.target_token = "K" + std::to_string(r + 1) + "-K1_" + std::to_string(t);
    v.pattern = detail::guaranteed_pattern(r, star(t));
    if (!is_graphic_eg(pi)) return v;
    const int n = pi.size();
    if (n >= 2 * r + 2 && detail::dmin(pi, r - t, r) && detail::dmin(pi, 2 * r + 2, r - 1)) {
        v.applicable = true;
        v.rule = Rule::L3_4;
    }
    return v;
}

/// Potentially K_{r+1}-(P_2 u K_2): Lemma 3.5 (index r-4 forces r >= 5).
inline SufficiencyVerdict sufficient_Kr1_minus_P2uK2(const DegreeSequence& pi, int r) {
    SufficiencyVerdict v;
    v.target_token = "K" + std::to_string(r + 1) + "-(P2uK2)";
    if (r >= 4)
        v.pattern = detail::guaranteed_pattern(r, disjoint_union(path_paper(2), complete(2)));
    if (r < 5 || !is_graphic_eg(pi)) return v;
    const int n = pi.size();
    if (n >= 2 * r + 2 && detail::dmin(pi, r - 4, r) &&
        pi.sum() >= detail::lemma_sigma_bound(r, n) && detail::dmin(pi, 2 * r + 2, r - 1)) {
        v.applicable = true;
        v.rule = Rule::L3_5;
    }
    return v;
}

}  // namespace potseq
