#pragma once

#include <chrono>
#include <functional>
#include <future>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "potseq/degree_sequence.hpp"
#include "potseq/graph.hpp"
#include "potseq/realize.hpp"
#include "potseq/sufficiency.hpp"
#include "potseq/thresholds.hpp"

namespace potseq {

/// Exhaustive enumeration of graphic sequences of length n, descending
/// lexicographic order. `prefix` fixes leading terms for work partitioning.
struct EnumerationConfig {
    int n = 1;
    bool allow_zero = true;
    std::optional<int> max_degree;  // defaults to n-1
    std::vector<int> prefix;
};

inline void enumerate_graphic_sequences(const EnumerationConfig& cfg,
                                        const std::function<void(const DegreeSequence&)>& emit) {
    if (cfg.n < 1) throw std::invalid_argument("enumeration requires n >= 1");
    const int maxdeg = cfg.max_degree.value_or(cfg.n - 1);
    const int lo = cfg.allow_zero ? 0 : 1;
    if (static_cast<int>(cfg.prefix.size()) > cfg.n)
        throw std::invalid_argument("prefix longer than n");
    std::vector<int> cur = cfg.prefix;
    for (size_t i = 0; i < cur.size(); ++i) {
        const int hi = i == 0 ? maxdeg : cur[i - 1];
        if (cur[i] < lo || cur[i] > hi)
            throw std::invalid_argument("prefix is not a valid non-increasing stem");
    }
    std::function<void(int)> rec = [&](int pos) {
        if (pos == cfg.n) {
            DegreeSequence ds(cur);
            if (is_graphic_eg(ds)) emit(ds);
            return;
        }
        const int hi = pos == 0 ? maxdeg : cur[static_cast<size_t>(pos - 1)];
        for (int v = hi; v >= lo; --v) {
            cur.push_back(v);
            rec(pos + 1);
            cur.pop_back();
        }
    };
    rec(static_cast<int>(cur.size()));
}

inline std::vector<DegreeSequence> collect_graphic_sequences(const EnumerationConfig& cfg) {
    std::vector<DegreeSequence> out;
    enumerate_graphic_sequences(cfg, [&](const DegreeSequence& s) { out.push_back(s); });
    return out;
}

/// Brute-force sigma(H, n): (max sigma over graphic sequences that are NOT
/// potentially H-graphic) + 2. All graphic sigmas are even, so this is
/// exactly the minimum even l in the definition. Among maximal failing
/// sequences the lexicographically largest is the witness.
struct SigmaBruteResult {
    long long value = 0;
    std::optional<DegreeSequence> witness;
    bool vacuous = false;    // no graphic sequence fails
    bool timed_out = false;  // budget exhausted before the value was certain
    uint64_t nodes = 0;
};

inline SigmaBruteResult sigma_bruteforce(const SimpleGraph& pattern, int n,
                                         bool allow_zero = true,
                                         SearchBudget* budget = nullptr) {
    if (pattern.order() == 0) throw std::invalid_argument("empty pattern");
    if (n < pattern.order())
        throw std::invalid_argument("sigma_bruteforce requires n >= |V(H)|");
    SearchBudget local;
    if (!budget) budget = &local;
    const uint64_t nodes_before = budget->nodes;

    EnumerationConfig cfg;
    cfg.n = n;
    cfg.allow_zero = allow_zero;
    std::vector<DegreeSequence> seqs = collect_graphic_sequences(cfg);
    // stable: keeps descending lexicographic order inside each sigma level,
    // so the first failure found is the lexicographically largest one
    std::stable_sort(seqs.begin(), seqs.end(),
                     [](const DegreeSequence& a, const DegreeSequence& b) {
                         return a.sum() > b.sum();
                     });
    SigmaBruteResult res;
    for (const DegreeSequence& s : seqs) {
        PotentialResult pr = potentially(s, pattern, budget);
        if (pr.outcome == Outcome::out_of_budget) {
            res.timed_out = true;
            res.nodes = budget->nodes - nodes_before;
            return res;
        }
        if (pr.outcome == Outcome::no) {
            res.value = s.sum() + 2;
            res.witness = s;
            res.nodes = budget->nodes - nodes_before;
            return res;
        }
    }
    res.vacuous = true;
    res.nodes = budget->nodes - nodes_before;
    return res;
}

// ---------------------------------------------------------------------------
// Verification harness
// ---------------------------------------------------------------------------

struct VerifyCell {
    std::string id;
    std::string family;
    int r = 0;  // 0 when not applicable
    int n = 0;
    std::optional<long long> formula;
    std::optional<long long> bound;
    std::optional<long long> oracle;
    std::optional<DegreeSequence> witness;
    std::vector<std::string> violations;
    bool timed_out = false;
    long long elapsed_ms = 0;
};

struct VerificationReport {
    std::string suite;
    std::vector<VerifyCell> cells;
    long long elapsed_ms = 0;

    size_t violation_count() const {
        size_t k = 0;
        for (const auto& c : cells) k += c.violations.size();
        return k;
    }
    bool any_timeout() const {
        for (const auto& c : cells)
            if (c.timed_out) return true;
        return false;
    }

    std::string text() const {
        std::ostringstream out;
        out << "suite: " << suite << '\n'
            << "cells: " << cells.size() << '\n'
            << "violations: " << violation_count() << '\n';
        for (const auto& c : cells) {
            out << "---\n";
            out << "cell: " << c.id << '\n';
            out << "family: " << c.family << '\n';
            if (c.r > 0) out << "r: " << c.r << '\n';
            out << "n: " << c.n << '\n';
            if (c.formula) out << "formula: " << *c.formula << '\n';
            if (c.bound) out << "bound: " << *c.bound << '\n';
            if (c.oracle) out << "oracle: " << *c.oracle << '\n';
            if (c.witness) out << "witness: " << c.witness->str() << '\n';
            if (c.timed_out) out << "timeout: yes\n";
            if (c.violations.empty()) {
                out << "violations: none\n";
            } else {
                for (const auto& v : c.violations) out << "violation: " << v << '\n';
            }
            out << "elapsed_ms: " << c.elapsed_ms << '\n';
        }
        return out.str();
    }

    nlohmann::json to_json() const {
        nlohmann::json cells_json = nlohmann::json::array();
        for (const auto& c : cells) {
            nlohmann::json j;
            j["id"] = c.id;
            j["family"] = c.family;
            j["r"] = c.r;
            j["n"] = c.n;
            j["formula"] = c.formula ? nlohmann::json(*c.formula) : nlohmann::json(nullptr);
            j["bound"] = c.bound ? nlohmann::json(*c.bound) : nlohmann::json(nullptr);
            j["oracle"] = c.oracle ? nlohmann::json(*c.oracle) : nlohmann::json(nullptr);
            j["witness"] =
                c.witness ? nlohmann::json(c.witness->terms()) : nlohmann::json(nullptr);
            j["violations"] = c.violations;
            j["timeout"] = c.timed_out;
            j["elapsed_ms"] = c.elapsed_ms;
            cells_json.push_back(std::move(j));
        }
        return nlohmann::json{{"schema_version", 1},
                              {"suite", suite},
                              {"cells", cells_json},
                              {"violations_total", violation_count()},
                              {"elapsed_ms", elapsed_ms}};
    }
};

struct VerifyOptions {
    uint64_t node_cap_per_cell = 2'000'000'000ULL;
    std::optional<long long> time_cap_ms;  // per cell
    bool parallel = true;
};

enum class Suite {
    c4,
    two_k2,
    k3_nozero,
    construction,
    lower_bound,
    sufficiency,
    fixtures,
    identities,
    all
};

inline Suite parse_suite(const std::string& name) {
    if (name == "c4") return Suite::c4;
    if (name == "2k2") return Suite::two_k2;
    if (name == "k3-nozero") return Suite::k3_nozero;
    if (name == "construction") return Suite::construction;
    if (name == "lower-bound") return Suite::lower_bound;
    if (name == "sufficiency") return Suite::sufficiency;
    if (name == "fixtures") return Suite::fixtures;
    if (name == "identities") return Suite::identities;
    if (name == "all") return Suite::all;
    throw std::invalid_argument("unknown suite '" + name + "'");
}

inline std::string suite_name(Suite s) {
    switch (s) {
        case Suite::c4: return "c4";
        case Suite::two_k2: return "2k2";
        case Suite::k3_nozero: return "k3-nozero";
        case Suite::construction: return "construction";
        case Suite::lower_bound: return "lower-bound";
        case Suite::sufficiency: return "sufficiency";
        case Suite::fixtures: return "fixtures";
        case Suite::identities: return "identities";
        case Suite::all: return "all";
    }
    return "?";
}

/// Boundary sequences sitting exactly on the L3.3 / L3.5 sigma bounds; each
/// must be graphic and realize its rule's target.
struct ProofFixture {
    std::string name;
    int r = 0;
    int n = 0;
    DegreeSequence seq;
    SimpleGraph target;
    std::string target_token;
};

namespace detail {

inline DegreeSequence blocks(std::initializer_list<std::pair<int, int>> parts) {
    std::vector<int> terms;
    for (auto [value, count] : parts)
        for (int i = 0; i < count; ++i) terms.push_back(value);
    return DegreeSequence(std::move(terms));
}

inline SimpleGraph target_z4(int r) { return complete_minus(r + 1, complete_minus(4, path_paper(2))); }
inline SimpleGraph target_p2uk2(int r) {
    return complete_minus(r + 1, disjoint_union(path_paper(2), complete(2)));
}

}  // namespace detail

inline std::vector<ProofFixture> proof_fixtures() {
    std::vector<ProofFixture> out;
    auto add_z4 = [&](int r, int n, std::initializer_list<std::pair<int, int>> parts) {
        out.push_back({"L3.3-boundary", r, n, detail::blocks(parts), detail::target_z4(r),
                       "K" + std::to_string(r + 1) + "-Z4"});
    };
    auto add_p2uk2 = [&](const std::string& tag, int r, int n,
                         std::initializer_list<std::pair<int, int>> parts) {
        out.push_back({"L3.5-" + tag, r, n, detail::blocks(parts), detail::target_p2uk2(r),
                       "K" + std::to_string(r + 1) + "-(P2uK2)"});
    };

    // L3.3 boundary: ((n-1)^(r-3), (r-1)^1, (r-2)^(n-r+2)), n-r even
    add_z4(4, 10, {{9, 1}, {3, 1}, {2, 8}});
    add_z4(5, 13, {{12, 2}, {4, 1}, {3, 10}});

    // L3.5 boundary families; each instance respects its parity branch and
    // n >= 2r+2, and every exponent is nonnegative at the chosen (r, n).
    // odd n-r:
    //   A: ((n-1)^(r-5), (n-2)^1, (r-1)^(n-r+4))
    //   B: ((n-1)^(r-4), (r-1)^(n-r+3), (r-2)^1)
    add_p2uk2("A", 5, 12, {{10, 1}, {4, 11}});
    add_p2uk2("B", 5, 12, {{11, 1}, {4, 10}, {3, 1}});
    add_p2uk2("B", 4, 11, {{3, 10}, {2, 1}});
    // even n-r:
    //   C: ((n-1)^(r-4), (r-1)^(n-r+4))
    //   D: ((n-1)^(r-6), (n-2)^2, (r-1)^(n-r+4))
    //   E: ((n-1)^(r-5), (n-3)^1, (r-1)^(n-r+4))
    //   F: ((n-1)^(r-5), (n-2)^1, (r-1)^(n-r+3), (r-2)^1)
    //   G: ((n-1)^(r-4), (r-1)^(n-r+3), (r-3)^1)
    //   H: ((n-1)^(r-4), (r-1)^(n-r+2), (r-2)^2)
    add_p2uk2("C", 4, 10, {{3, 10}});
    add_p2uk2("C", 5, 13, {{12, 1}, {4, 12}});
    add_p2uk2("D", 6, 14, {{12, 2}, {5, 12}});
    add_p2uk2("E", 5, 13, {{10, 1}, {4, 12}});
    add_p2uk2("F", 5, 13, {{11, 1}, {4, 11}, {3, 1}});
    add_p2uk2("G", 4, 10, {{3, 9}, {1, 1}});
    add_p2uk2("G", 5, 13, {{12, 1}, {4, 11}, {2, 1}});
    add_p2uk2("H", 4, 10, {{3, 8}, {2, 2}});
    add_p2uk2("H", 5, 13, {{12, 1}, {4, 10}, {3, 2}});
    return out;
}

namespace detail {

using VerifyTask = std::function<std::vector<VerifyCell>()>;

struct CellTimer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

inline SearchBudget cell_budget(const VerifyOptions& opt) {
    SearchBudget b;
    b.node_cap = opt.node_cap_per_cell;
    if (opt.time_cap_ms)
        b.deadline = std::chrono::steady_clock::now() +
                     std::chrono::milliseconds(*opt.time_cap_ms);
    return b;
}

inline VerifyTask formula_task(std::string family, SimpleGraph pattern, int n, bool allow_zero,
                               long long formula, const VerifyOptions& opt) {
    return [=]() {
        CellTimer timer;
        VerifyCell cell;
        cell.id = family + "/n=" + std::to_string(n);
        cell.family = family;
        cell.n = n;
        cell.formula = formula;
        SearchBudget budget = cell_budget(opt);
        SigmaBruteResult res = sigma_bruteforce(pattern, n, allow_zero, &budget);
        if (res.timed_out) {
            cell.timed_out = true;
            cell.violations.push_back("budget exhausted");
        } else {
            cell.oracle = res.value;
            cell.witness = res.witness;
            if (res.value != formula)
                cell.violations.push_back("formula " + std::to_string(formula) +
                                          " != oracle " + std::to_string(res.value));
        }
        cell.elapsed_ms = timer.ms();
        return std::vector<VerifyCell>{cell};
    };
}

inline VerifyTask construction_task(int r, int n, const VerifyOptions& opt) {
    return [=]() {
        CellTimer timer;
        VerifyCell cell;
        cell.id = "construction/r=" + std::to_string(r) + "/n=" + std::to_string(n);
        cell.family = "construction";
        cell.r = r;
        cell.n = n;
        const SimpleGraph g = extremal_construction(r, n);
        const DegreeSequence expected = construction_sequence(r, n);
        if (g.degree_sequence() != expected)
            cell.violations.push_back("construction degree sequence mismatch: got " +
                                      g.degree_sequence().str() + " want " + expected.str());
        const long long rhs = theorem_rhs(MainTheorem::T1_2, r, n).value;
        cell.bound = rhs;
        cell.witness = expected;
        if (expected.sum() + 2 != rhs)
            cell.violations.push_back("sigma+2 = " + std::to_string(expected.sum() + 2) +
                                      " != T1.2 rhs " + std::to_string(rhs));
        const std::vector<std::pair<std::string, SimpleGraph>> removed = {
            {"Z4", complete_minus(4, path_paper(2))},
            {"K4-e", complete_minus(4, complete(2))},
            {"K4", complete(4)},
        };
        for (const auto& [tok, sub] : removed) {
            const SimpleGraph pattern = complete_minus(r + 1, sub);
            if (contains_subgraph(g, pattern))
                cell.violations.push_back("construction contains K" + std::to_string(r + 1) +
                                          "-" + tok);
        }
        if (r == 4 && n <= 9) {
            SearchBudget budget = cell_budget(opt);
            RealizationEnumeration en = enumerate_realizations(expected, 2, &budget);
            if (!en.exhaustive) {
                cell.timed_out = true;
                cell.violations.push_back("uniqueness enumeration did not finish");
            } else {
                cell.oracle = static_cast<long long>(en.graphs.size());
                if (en.graphs.size() != 1)
                    cell.violations.push_back("expected a unique realization, found " +
                                              std::to_string(en.graphs.size()));
            }
        }
        cell.elapsed_ms = timer.ms();
        return std::vector<VerifyCell>{cell};
    };
}

inline VerifyTask lower_bound_task(int r, int n, const VerifyOptions& opt) {
    return [=]() {
        std::vector<VerifyCell> cells;
        const std::string kr1 = "K" + std::to_string(r + 1);
        SearchBudget budget = cell_budget(opt);

        CellTimer timer_k4;
        VerifyCell base;
        base.id = kr1 + "-K4/n=" + std::to_string(n);
        base.family = kr1 + "-K4";
        base.r = r;
        base.n = n;
        base.bound = lemma36_lower(r, n).value;
        const SimpleGraph pat_k4 = complete_minus(r + 1, complete(4));
        SigmaBruteResult res_k4 = sigma_bruteforce(pat_k4, n, true, &budget);
        if (res_k4.timed_out) {
            base.timed_out = true;
            base.violations.push_back("budget exhausted");
        } else {
            base.oracle = res_k4.value;
            base.witness = res_k4.witness;
            if (res_k4.value < *base.bound)
                base.violations.push_back("oracle " + std::to_string(res_k4.value) +
                                          " below bound " + std::to_string(*base.bound));
        }
        base.elapsed_ms = timer_k4.ms();
        cells.push_back(base);

        CellTimer timer_z4;
        VerifyCell ordered;
        ordered.id = kr1 + "-Z4/n=" + std::to_string(n);
        ordered.family = kr1 + "-Z4";
        ordered.r = r;
        ordered.n = n;
        const SimpleGraph pat_z4 = complete_minus(r + 1, complete_minus(4, path_paper(2)));
        SigmaBruteResult res_z4 = sigma_bruteforce(pat_z4, n, true, &budget);
        if (res_z4.timed_out || res_k4.timed_out) {
            ordered.timed_out = true;
            ordered.violations.push_back("budget exhausted");
        } else {
            ordered.oracle = res_z4.value;
            ordered.witness = res_z4.witness;
            ordered.bound = res_k4.value;  // the L3.6 ordering
            if (res_z4.value < res_k4.value)
                ordered.violations.push_back(
                    "sigma(" + kr1 + "-Z4) = " + std::to_string(res_z4.value) + " below sigma(" +
                    kr1 + "-K4) = " + std::to_string(res_k4.value));
        }
        ordered.elapsed_ms = timer_z4.ms();
        cells.push_back(ordered);
        return cells;
    };
}

inline VerifyTask sufficiency_task(int r, int n, const VerifyOptions& opt) {
    return [=]() {
        CellTimer timer;
        VerifyCell cell;
        cell.id = "sufficiency/r=" + std::to_string(r) + "/n=" + std::to_string(n);
        cell.family = "sufficiency";
        cell.r = r;
        cell.n = n;
        SearchBudget budget = cell_budget(opt);
        EnumerationConfig cfg;
        cfg.n = n;
        long long checked = 0;
        bool budget_gone = false;
        enumerate_graphic_sequences(cfg, [&](const DegreeSequence& seq) {
            if (budget_gone) return;
            std::vector<SufficiencyVerdict> verdicts;
            verdicts.push_back(sufficient_A(seq, r));
            verdicts.push_back(sufficient_Kr1_minus_e(seq, r));
            verdicts.push_back(sufficient_Kr1_minus_P2(seq, r));
            verdicts.push_back(sufficient_Kr1_minus_Z4(seq, r));
            for (int t = 1; t <= r - 1; ++t)
                verdicts.push_back(sufficient_Kr1_minus_K1t(seq, r, t));
            if (r >= 5) verdicts.push_back(sufficient_Kr1_minus_P2uK2(seq, r));
            for (const SufficiencyVerdict& v : verdicts) {
                if (!v.applicable) continue;
                ++checked;
                const PotentialResult pr = v.clique_on_top
                                               ? is_potentially_A(seq, r, &budget)
                                               : potentially(seq, v.pattern, &budget);
                if (pr.outcome == Outcome::out_of_budget) {
                    budget_gone = true;
                    return;
                }
                if (pr.outcome == Outcome::no)
                    cell.violations.push_back(rule_name(*v.rule) + " unsound for (" + seq.str() +
                                              ")");
            }
        });
        if (budget_gone) {
            cell.timed_out = true;
            cell.violations.push_back("budget exhausted");
        }
        cell.oracle = checked;
        cell.elapsed_ms = timer.ms();
        return std::vector<VerifyCell>{cell};
    };
}

inline VerifyTask fixture_task(const ProofFixture& fx, const VerifyOptions& opt) {
    return [=]() {
        CellTimer timer;
        VerifyCell cell;
        cell.id = fx.name + "/r=" + std::to_string(fx.r) + "/n=" + std::to_string(fx.n);
        cell.family = fx.name;
        cell.r = fx.r;
        cell.n = fx.n;
        cell.witness = fx.seq;
        if (!is_graphic_eg(fx.seq)) {
            cell.violations.push_back("fixture sequence is not graphic: " + fx.seq.str());
        } else {
            SearchBudget budget = cell_budget(opt);
            const PotentialResult pr = potentially(fx.seq, fx.target, &budget);
            if (pr.outcome == Outcome::out_of_budget) {
                cell.timed_out = true;
                cell.violations.push_back("budget exhausted");
            } else {
                cell.oracle = pr.outcome == Outcome::yes ? 1 : 0;
                if (pr.outcome != Outcome::yes)
                    cell.violations.push_back("(" + fx.seq.str() + ") is not potentially " +
                                              fx.target_token + "-graphic");
            }
        }
        cell.elapsed_ms = timer.ms();
        return std::vector<VerifyCell>{cell};
    };
}

inline VerifyTask identities_task(int r) {
    return [=]() {
        CellTimer timer;
        VerifyCell cell;
        cell.id = "identities/r=" + std::to_string(r);
        cell.family = "identities";
        cell.r = r;
        cell.n = r + 60;
        for (int n = r + 1; n <= r + 60; ++n) {
            const SigmaValue t11 = theorem_rhs(MainTheorem::T1_1, r, n);
            const SigmaValue t12 = theorem_rhs(MainTheorem::T1_2, r, n);
            const SigmaValue l36 = lemma36_lower(r, n);
            const SigmaValue kpt = sigma_lower_bound_kpt(4, r - 3, n);
            const std::string at = " at r=" + std::to_string(r) + ",n=" + std::to_string(n);
            for (const SigmaValue* sv : {&t11, &t12, &l36, &kpt})
                if (sv->value % 2 != 0)
                    cell.violations.push_back("odd sigma value " + std::to_string(sv->value) + at);
            if (l36.value != kpt.value)
                cell.violations.push_back("L3.6 != T2.8(p=4,t=r-3)" + at);
            const long long gap = ((n - r) % 2 != 0) ? 2 : 4;
            if (t11.value - t12.value != gap)
                cell.violations.push_back("T1.1 - T1.2 gap mismatch" + at);
            const DegreeSequence want = construction_sequence(r, n);
            if (extremal_construction(r, n).degree_sequence() != want)
                cell.violations.push_back("construction sequence mismatch" + at);
            if (want.sum() + 2 != t12.value)
                cell.violations.push_back("construction sigma+2 != T1.2" + at);
        }
        cell.elapsed_ms = timer.ms();
        return std::vector<VerifyCell>{cell};
    };
}

inline void append_suite_tasks(Suite suite, const VerifyOptions& opt,
                               std::vector<VerifyTask>& tasks) {
    switch (suite) {
        case Suite::c4:
            for (int n = 4; n <= 7; ++n)
                tasks.push_back(formula_task("C4", cycle(4), n, true, known_sigma_C4(n).value, opt));
            break;
        case Suite::two_k2:
            for (int n = 4; n <= 7; ++n)
                tasks.push_back(formula_task("2K2", disjoint_copies(complete(2), 2), n, true,
                                             known_sigma_pK2(2, n).value, opt));
            break;
        case Suite::k3_nozero:
            for (int n = 6; n <= 8; ++n)
                tasks.push_back(formula_task("K3", complete(3), n, false,
                                             known_sigma_Kk(3, n).value, opt));
            break;
        case Suite::construction:
            for (int r : {4, 5})
                for (int n = r + 1; n <= r + 6; ++n) tasks.push_back(construction_task(r, n, opt));
            break;
        case Suite::lower_bound:
            for (int n = 7; n <= 10; ++n) tasks.push_back(lower_bound_task(4, n, opt));
            break;
        case Suite::sufficiency:
            for (int n : {9, 10}) tasks.push_back(sufficiency_task(4, n, opt));
            break;
        case Suite::fixtures:
            for (const ProofFixture& fx : proof_fixtures()) tasks.push_back(fixture_task(fx, opt));
            break;
        case Suite::identities:
            for (int r = 4; r <= 12; ++r) tasks.push_back(identities_task(r));
            break;
        case Suite::all:
            for (Suite s : {Suite::c4, Suite::two_k2, Suite::k3_nozero, Suite::construction,
                            Suite::lower_bound, Suite::sufficiency, Suite::fixtures,
                            Suite::identities})
                append_suite_tasks(s, opt, tasks);
            break;
    }
}

}  // namespace detail

/// Runs a verification suite. Cells are independent; with `parallel` they run
/// concurrently and are aggregated in task order, so the report is identical
/// either way.
inline VerificationReport run_suite(Suite suite, const VerifyOptions& opt = {}) {
    std::vector<detail::VerifyTask> tasks;
    detail::append_suite_tasks(suite, opt, tasks);
    VerificationReport report;
    report.suite = suite_name(suite);
    detail::CellTimer timer;
    if (opt.parallel && tasks.size() > 1) {
        std::vector<std::future<std::vector<VerifyCell>>> futures;
        futures.reserve(tasks.size());
        for (auto& task : tasks) futures.push_back(std::async(std::launch::async, task));
        for (auto& fut : futures)
            for (VerifyCell& cell : fut.get()) report.cells.push_back(std::move(cell));
    } else {
        for (auto& task : tasks)
            for (VerifyCell& cell : task()) report.cells.push_back(std::move(cell));
    }
    report.elapsed_ms = timer.ms();
    return report;
}

}  // namespace potseq
