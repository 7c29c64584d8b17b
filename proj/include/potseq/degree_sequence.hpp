#pragma once

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace potseq {

/// A degree sequence: integer terms kept sorted non-increasing, with a cached
/// sum. Raw input in any order is accepted and normalized at construction.
/// Terms may become negative through repeated laying off; the graphicality
/// tests simply report such sequences as non-graphic.
class DegreeSequence {
public:
    DegreeSequence() = default;

    explicit DegreeSequence(std::vector<int> terms) : terms_(std::move(terms)) {
        std::stable_sort(terms_.begin(), terms_.end(), std::greater<int>());
        sum_ = std::accumulate(terms_.begin(), terms_.end(), 0LL);
    }

    /// Parses whitespace- or comma-separated decimal integers, in any order.
    static DegreeSequence parse(const std::string& text) {
        std::vector<int> terms;
        std::string token;
        auto flush = [&] {
            if (token.empty()) return;
            size_t pos = 0;
            int value = 0;
            try {
                value = std::stoi(token, &pos);
            } catch (const std::exception&) {
                pos = 0;
            }
            if (pos != token.size())
                throw std::invalid_argument("bad sequence token '" + token + "'");
            terms.push_back(value);
            token.clear();
        };
        for (char c : text) {
            if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
                flush();
            } else {
                token.push_back(c);
            }
        }
        flush();
        if (terms.empty()) throw std::invalid_argument("empty sequence");
        return DegreeSequence(std::move(terms));
    }

    int size() const { return static_cast<int>(terms_.size()); }
    bool empty() const { return terms_.empty(); }
    const std::vector<int>& terms() const { return terms_; }
    long long sum() const { return sum_; }

    /// 0-based term access.
    int operator[](int i) const { return terms_[static_cast<size_t>(i)]; }

    /// 1-based access matching d_i notation; out-of-range throws.
    int d(int i) const {
        if (i < 1 || i > size()) throw std::out_of_range("d_i index out of range");
        return terms_[static_cast<size_t>(i - 1)];
    }

    std::string str() const {
        std::ostringstream out;
        for (size_t i = 0; i < terms_.size(); ++i) {
            if (i) out << ' ';
            out << terms_[i];
        }
        return out.str();
    }

    bool operator==(const DegreeSequence& other) const { return terms_ == other.terms_; }
    bool operator!=(const DegreeSequence& other) const { return !(*this == other); }
    /// Lexicographic on terms (both sides are sorted non-increasing).
    bool operator<(const DegreeSequence& other) const { return terms_ < other.terms_; }

private:
    std::vector<int> terms_;
    long long sum_ = 0;
};

inline long long sigma(const DegreeSequence& pi) { return pi.sum(); }

/// Erdos-Gallai test: even sum and, for every t in 1..n-1,
/// sum_{i<=t} d_i <= t(t-1) + sum_{j>t} min(t, d_j).
/// Sequences with a negative term or a term exceeding n-1 are not graphic.
inline bool is_graphic_eg(const DegreeSequence& pi) {
    const auto& d = pi.terms();
    const int n = pi.size();
    if (n == 0) return false;
    if (d.back() < 0 || d.front() > n - 1) return false;
    if (pi.sum() % 2 != 0) return false;
    long long head = 0;
    for (int t = 1; t <= n - 1; ++t) {
        head += d[static_cast<size_t>(t - 1)];
        long long tail = 0;
        for (int j = t + 1; j <= n; ++j)
            tail += std::min(t, d[static_cast<size_t>(j - 1)]);
        if (head > static_cast<long long>(t) * (t - 1) + tail) return false;
    }
    return true;
}

/// Residual sequence obtained by laying off d_k (k is 1-based).
/// When d_k >= k the first d_k+1 positions except k are decremented; when
/// d_k < k the first d_k positions are decremented. Position k is removed and
/// the result re-sorted non-increasing. Always |pi'| = n-1 and
/// sigma(pi') = sigma(pi) - 2 d_k.
inline DegreeSequence lay_off(const DegreeSequence& pi, int k) {
    const int n = pi.size();
    if (n < 2) throw std::invalid_argument("lay_off requires n >= 2");
    if (k < 1 || k > n) throw std::out_of_range("lay_off pivot out of range");
    const int dk = pi[k - 1];
    std::vector<int> out;
    out.reserve(static_cast<size_t>(n - 1));
    const int cutoff = dk >= k ? dk + 1 : dk;
    for (int i = 1; i <= n; ++i) {
        if (i == k) continue;
        out.push_back(pi[i - 1] - (i <= cutoff ? 1 : 0));
    }
    return DegreeSequence(std::move(out));
}

enum class PivotRule { first, last, fixed };

/// Graphicality via repeated laying off. The pivot choice does not affect
/// the answer; `fixed_k` (1-based, clamped to the current length) is only
/// consulted under PivotRule::fixed.
inline bool is_graphic_recursive(const DegreeSequence& pi, PivotRule rule = PivotRule::first,
                                 int fixed_k = 1) {
    DegreeSequence cur = pi;
    for (;;) {
        const int n = cur.size();
        if (n == 0) return false;
        if (cur[n - 1] < 0 || cur[0] > n - 1) return false;
        if (cur.sum() % 2 != 0) return false;
        if (cur[0] == 0) return true;
        int k = 1;
        switch (rule) {
            case PivotRule::first: k = 1; break;
            case PivotRule::last: k = n; break;
            case PivotRule::fixed: k = std::clamp(fixed_k, 1, n); break;
        }
        cur = lay_off(cur, k);
    }
}

}  // namespace potseq
