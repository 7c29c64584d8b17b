#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "potseq/degree_sequence.hpp"
#include "potseq/graph.hpp"

namespace potseq {

enum class ParityBranch { odd_nr, even_nr };
enum class SigmaSource { T1_1, T1_2, T2_8, L3_6, L3_7, known_pK2, known_C4, known_Kk };

inline std::string parity_name(ParityBranch p) {
    return p == ParityBranch::odd_nr ? "odd-branch" : "even-branch";
}

inline std::string source_name(SigmaSource s) {
    switch (s) {
        case SigmaSource::T1_1: return "T1.1";
        case SigmaSource::T1_2: return "T1.2";
        case SigmaSource::T2_8: return "T2.8";
        case SigmaSource::L3_6: return "L3.6";
        case SigmaSource::L3_7: return "L3.7";
        case SigmaSource::known_pK2: return "known-pK2";
        case SigmaSource::known_C4: return "known-C4";
        case SigmaSource::known_Kk: return "known-Kk";
    }
    return "?";
}

/// A closed-form sigma value. All arithmetic is exact integers. The formulas
/// evaluate anywhere in their preconditions; `in_proven_range` records
/// whether the cited result actually covers the call (theorem n-ranges, and
/// for K_k the conjectural status outside the proven k=3 range).
struct SigmaValue {
    long long value = 0;
    ParityBranch parity = ParityBranch::even_nr;
    SigmaSource source = SigmaSource::T1_1;
    bool in_proven_range = true;

    std::string line() const {
        return std::to_string(value) + " " + parity_name(parity) + " " + source_name(source) +
               " " + (in_proven_range ? "in-range" : "out-of-range");
    }
};

namespace detail {
inline ParityBranch parity_of(long long diff) {
    return (diff % 2 != 0) ? ParityBranch::odd_nr : ParityBranch::even_nr;
}
inline long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}
}  // namespace detail

enum class MainTheorem { T1_1, T1_2 };

/// Theorem 1.1 / 1.2 right-hand sides:
///   (r-1)(2n-r) - 3(n-r) + 1 or + 2   (T1.1, odd/even n-r)
///   (r-1)(2n-r) - 3(n-r) - 1 or - 2   (T1.2, odd/even n-r)
/// The theorem ranges (n >= 5r+16 / 5r+19) are metadata, not preconditions.
inline SigmaValue theorem_rhs(MainTheorem which, int r, int n) {
    if (r < 4) throw std::invalid_argument("theorem_rhs requires r >= 4");
    if (n <= r) throw std::invalid_argument("theorem_rhs requires n >= r+1");
    const bool odd = (n - r) % 2 != 0;
    const long long base = static_cast<long long>(r - 1) * (2LL * n - r) - 3LL * (n - r);
    SigmaValue out;
    out.parity = detail::parity_of(n - r);
    if (which == MainTheorem::T1_1) {
        out.value = base + (odd ? 1 : 2);
        out.source = SigmaSource::T1_1;
        out.in_proven_range = n >= 5 * r + 16;
    } else {
        out.value = base - (odd ? 1 : 2);
        out.source = SigmaSource::T1_2;
        out.in_proven_range = n >= 5 * r + 19;
    }
    return out;
}

/// Theorem 2.8 lower bound for sigma(K_{p+t}-K_p, n):
/// 2 * floor(((p+2t-3)n + p+2t+1 - pt - t^2) / 2).
inline SigmaValue sigma_lower_bound_kpt(int p, int t, int n) {
    if (p < 1 || t < 1) throw std::invalid_argument("sigma_lower_bound_kpt requires p,t >= 1");
    if (n < p + t) throw std::invalid_argument("sigma_lower_bound_kpt requires n >= p+t");
    const long long num = static_cast<long long>(p + 2 * t - 3) * n + p + 2 * t + 1 -
                          static_cast<long long>(p) * t - static_cast<long long>(t) * t;
    SigmaValue out;
    out.value = 2 * detail::floor_div(num, 2);
    out.parity = detail::parity_of(n - (p + t - 1));  // K_{p+t} = K_{r+1} with r = p+t-1
    out.source = SigmaSource::T2_8;
    return out;
}

/// sigma(pK_2, n) = (p-1)(2n-2) + 2, proven for p >= 2.
inline SigmaValue known_sigma_pK2(int p, int n) {
    if (p < 1) throw std::invalid_argument("known_sigma_pK2 requires p >= 1");
    if (n < 2 * p) throw std::invalid_argument("known_sigma_pK2 requires n >= 2p");
    SigmaValue out;
    out.value = static_cast<long long>(p - 1) * (2LL * n - 2) + 2;
    out.parity = detail::parity_of(n - 2 * p);
    out.source = SigmaSource::known_pK2;
    out.in_proven_range = p >= 2;
    return out;
}

/// sigma(C_4, n) = 2 * floor((3n-1)/2), proven for n >= 4.
inline SigmaValue known_sigma_C4(int n) {
    if (n < 4) throw std::invalid_argument("known_sigma_C4 requires n >= 4");
    SigmaValue out;
    out.value = 2 * ((3LL * n - 1) / 2);
    out.parity = detail::parity_of(n - 4);
    out.source = SigmaSource::known_C4;
    return out;
}

/// sigma(K_k, n) >= (k-2)(2n-k+1) + 2 with conjectured equality; the cited
/// proven range here is k = 3, n >= 6, without zero terms.
inline SigmaValue known_sigma_Kk(int k, int n) {
    if (k < 2) throw std::invalid_argument("known_sigma_Kk requires k >= 2");
    if (n < k) throw std::invalid_argument("known_sigma_Kk requires n >= k");
    SigmaValue out;
    out.value = static_cast<long long>(k - 2) * (2LL * n - k + 1) + 2;
    out.parity = detail::parity_of(n - k);
    out.source = SigmaSource::known_Kk;
    out.in_proven_range = (k == 3 && n >= 6);
    return out;
}

/// The extremal graph of Lemma 3.7:
///   K_{r-3} + ((n-r+1)/2 + 1) K_2                 when n-r is odd
///   K_{r-3} + ((n-r+2)/2 K_2 u K_1)               when n-r is even
inline SimpleGraph extremal_construction(int r, int n) {
    if (r < 4) throw std::invalid_argument("extremal_construction requires r >= 4");
    if (n <= r) throw std::invalid_argument("extremal_construction requires n >= r+1");
    const SimpleGraph clique = complete(r - 3);
    if ((n - r) % 2 != 0) {
        const int copies = (n - r + 1) / 2 + 1;
        return join(clique, disjoint_copies(complete(2), copies));
    }
    const int copies = (n - r + 2) / 2;
    return join(clique, disjoint_union(disjoint_copies(complete(2), copies), complete(1)));
}

/// Degree sequence displayed in Lemma 3.7 for the construction above:
/// ((n-1)^(r-3), (r-2)^(n-r+3)) odd case, ((n-1)^(r-3), (r-2)^(n-r+2), (r-3)^1) even case.
inline DegreeSequence construction_sequence(int r, int n) {
    if (r < 4) throw std::invalid_argument("construction_sequence requires r >= 4");
    if (n <= r) throw std::invalid_argument("construction_sequence requires n >= r+1");
    std::vector<int> terms;
    terms.reserve(static_cast<size_t>(n));
    for (int i = 0; i < r - 3; ++i) terms.push_back(n - 1);
    if ((n - r) % 2 != 0) {
        for (int i = 0; i < n - r + 3; ++i) terms.push_back(r - 2);
    } else {
        for (int i = 0; i < n - r + 2; ++i) terms.push_back(r - 2);
        terms.push_back(r - 3);
    }
    return DegreeSequence(std::move(terms));
}

/// Lemma 3.6 lower bound for sigma(K_{r+1}-K_4, n): numerically the Theorem
/// 1.1 right-hand side, derived from Theorem 2.8 with p = 4, t = r-3; valid
/// for all n >= r+1.
inline SigmaValue lemma36_lower(int r, int n) {
    SigmaValue out = theorem_rhs(MainTheorem::T1_1, r, n);
    out.source = SigmaSource::L3_6;
    out.in_proven_range = true;
    return out;
}

/// Lemma 3.7 lower bound for sigma(K_{r+1}-H, n), H on >= 4 vertices with no
/// 4-cycle: the Theorem 1.2 right-hand side, valid for all n >= r+1.
inline SigmaValue lemma37_lower(int r, int n) {
    SigmaValue out = theorem_rhs(MainTheorem::T1_2, r, n);
    out.source = SigmaSource::L3_7;
    out.in_proven_range = true;
    return out;
}

}  // namespace potseq
