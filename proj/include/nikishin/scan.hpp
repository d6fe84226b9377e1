#ifndef NIKISHIN_SCAN_HPP
#define NIKISHIN_SCAN_HPP

#include <atomic>
#include <chrono>
#include <thread>
#include <vector>

#include "nikishin/rootloc.hpp"
#include "nikishin/solver.hpp"

namespace nikishin {

/// Everything certified about one combined index.
template <typename S>
struct IndexRecord {
    CombinedIndex index;
    MixedSolution<S> solution;
    NormalityReport normality;
    bool residual_exact_zero = false;
    BigFloat residual_max_rel = BigFloat(0L);
    // Exact backend only: zero location per Theorem 2's statement.
    bool zero_data = false;
    ZeroReport zeros;
    bool zeros_ok = false;
};

template <typename S>
struct ScanReport {
    int budget = 0;
    std::vector<IndexRecord<S>> records;
    // Consecutive balanced-diagonal pairs and their interlacing verdicts.
    std::vector<std::pair<CombinedIndex, InterlacingResult>> interlacing;
    bool all_normal = true;
    bool all_residuals_ok = true;
    bool all_zeros_ok = true;       // exact backend only
    bool all_interlacing_ok = true; // exact backend only
    BigFloat residual_tolerance = BigFloat(0L);
    double elapsed_seconds = 0.0;
};

struct ScanOptions {
    int budget = 1;
    unsigned threads = 0; // 0 = hardware concurrency
    bool zeros = true;    // ignored on the big-float backend
};

inline MultiIndex balanced_composition(size_t parts, int total) {
    std::vector<int> c(parts, total / static_cast<int>(parts));
    int rem = total % static_cast<int>(parts);
    for (int i = 0; i < rem; ++i) c[static_cast<size_t>(i)] += 1;
    return MultiIndex(std::move(c));
}

/// The decreasing-component diagonal of combined indices with norms 1..budget.
inline std::vector<CombinedIndex> diagonal_sequence(size_t m1, size_t m2, int budget) {
    std::vector<CombinedIndex> out;
    for (int t = 1; t <= budget; ++t)
        out.emplace_back(balanced_composition(m1 + 1, t), balanced_composition(m2 + 1, t - 1));
    return out;
}

/// Runs every combined index with |n1| <= budget through the mixed solver and
/// certifies normality, orthogonality residuals and (exact backend) the zero
/// location and diagonal interlacing. Indices are processed in graded
/// lexicographic order; solves parallelize, the report order is fixed.
template <typename S>
ScanReport<S> perfectness_scan(CompatiblePair<S>& pair, const ScanOptions& options) {
    auto t0 = std::chrono::steady_clock::now();
    if (options.budget < 1) throw error("budget must be at least 1");
    if (static_cast<size_t>(options.budget) > pair.index_budget())
        throw error("budget exceeds the atom limit");

    ScanReport<S> report;
    report.budget = options.budget;
    if constexpr (!is_exact_v<S>)
        report.residual_tolerance = BigFloat::pow2(16 - static_cast<long>(S::default_precision()));

    pair.ensure_moments(static_cast<unsigned>(2 * options.budget));
    auto indices = enumerate_combined(pair.m1(), pair.m2(), options.budget);
    auto tail1 = tail_of(pair.system1());

    report.records.reserve(indices.size());
    for (const auto& idx : indices)
        report.records.push_back(IndexRecord<S>{
            idx, MixedSolution<S>{idx, {}, 0}, NormalityReport{}, false, BigFloat(0L)});

    const bool want_zeros = options.zeros && is_exact_v<S>;
    auto work = [&](size_t i) {
        IndexRecord<S>& rec = report.records[i];
        rec.solution = solve_mixed(pair, rec.index);
        rec.normality = normality_check(rec.solution);
        auto res = orthogonality_residuals(pair, rec.solution);
        rec.residual_exact_zero = res.exact_zero;
        rec.residual_max_rel = res.max_relative;
        if constexpr (is_exact_v<S>) {
            if (want_zeros) {
                LinearForm<S> form{tail1, rec.solution.a};
                auto hull = pair.root().hull();
                rec.zeros = zeros_in_hull(form, *hull.lo, *hull.hi);
                rec.zero_data = true;
                int expect = rec.index.n2.norm();
                rec.zeros_ok = rec.zeros.count_in_hull == expect && rec.zeros.all_simple &&
                               !rec.zeros.endpoint_zero &&
                               rec.zeros.count_outside_delta1 == expect;
            }
        }
    };

    unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
    if (threads <= 1 || indices.size() < 2) {
        for (size_t i = 0; i < indices.size(); ++i) work(i);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < indices.size(); i = next.fetch_add(1))
                    work(i);
            });
        for (auto& th : pool) th.join();
    }

    for (const auto& rec : report.records) {
        if (!rec.normality.normal) report.all_normal = false;
        if constexpr (is_exact_v<S>) {
            if (!rec.residual_exact_zero) report.all_residuals_ok = false;
        } else {
            if (!(rec.residual_max_rel < report.residual_tolerance))
                report.all_residuals_ok = false;
        }
        if (want_zeros && !rec.zeros_ok) report.all_zeros_ok = false;
    }

    if constexpr (is_exact_v<S>) {
        if (want_zeros) {
            auto diag = diagonal_sequence(pair.m1(), pair.m2(), options.budget);
            auto hull = pair.root().hull();
            for (size_t t = 0; t + 1 < diag.size(); ++t) {
                auto sol_a = solve_mixed(pair, diag[t]);
                auto sol_b = solve_mixed(pair, diag[t + 1]);
                LinearForm<S> fa{tail1, sol_a.a};
                LinearForm<S> fb{tail1, sol_b.a};
                auto verdict = interlacing_check(fa, fb, *hull.lo, *hull.hi);
                report.interlacing.emplace_back(diag[t + 1], verdict);
                if (!verdict.ok) report.all_interlacing_ok = false;
            }
        }
    }

    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

} // namespace nikishin

#endif
