#ifndef NIKISHIN_ROOTLOC_HPP
#define NIKISHIN_ROOTLOC_HPP

#include <algorithm>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "nikishin/measure.hpp"
#include "nikishin/solver.hpp"
#include "nikishin/sturm.hpp"

namespace nikishin {

/// Linear form p_0 + sum_{k>=1} p_k s_hat_{1,k} against the tail chain
/// (sigma_1, ..., sigma_m); `tail` holds that chain with generator 0 playing
/// sigma_1. A null tail (or a single polynomial) is the pure-polynomial case.
template <typename S>
struct LinearForm {
    std::shared_ptr<const NikishinSystem<S>> tail;
    std::vector<Polynomial<S>> p;

    bool is_identically_zero() const {
        for (const auto& q : p)
            if (!q.is_zero()) return false;
        return true;
    }

    /// Exact rational form over the common denominator prod(x - atoms of
    /// sigma_1).
    RationalFunction<S> as_rational() const {
        if (!tail || p.size() == 1) return RationalFunction<S>(p.empty() ? Polynomial<S>{} : p[0]);
        Polynomial<S> den = tail->generator(0).node_polynomial();
        Polynomial<S> num = p[0] * den;
        for (size_t k = 1; k < p.size(); ++k) {
            if (p[k].is_zero()) continue;
            auto t = tail->transform_rational(0, k - 1);
            num = num + p[k] * t.num(); // t.den() == den: coprime and monic
        }
        return RationalFunction<S>(std::move(num), std::move(den));
    }

    template <typename V>
    V eval(const V& x) const {
        V acc = p.empty() ? V{} : p[0].template eval<V>(x);
        for (size_t k = 1; k < p.size(); ++k) {
            if (p[k].is_zero()) continue;
            acc = acc + p[k].template eval<V>(x) * tail->template transform<V>(0, k - 1, x);
        }
        return acc;
    }
};

/// Builds the scalar form of a mixed solution against system 1's tail.
template <typename S>
LinearForm<S> solution_form(const CompatiblePair<S>& pair, const MixedSolution<S>& sol,
                            std::shared_ptr<const NikishinSystem<S>> tail1) {
    return LinearForm<S>{std::move(tail1), sol.a};
}

template <typename S>
std::shared_ptr<const NikishinSystem<S>> tail_of(const NikishinSystem<S>& sys) {
    if (sys.size() < 2) return nullptr;
    return std::make_shared<const NikishinSystem<S>>(sys.sub_chain(1));
}

struct ZeroReport {
    int count_in_hull = 0;
    std::vector<std::pair<Rational, Rational>> isolating_intervals;
    bool all_simple = true;
    bool endpoint_zero = false;
    int count_outside_delta1 = 0;
};

/// Finite complex zeros (with multiplicity) of the form away from the closed
/// hull of sigma_1: the reduced numerator degree minus its root count inside
/// that hull.
inline int count_zeros_off_delta1(const LinearForm<Rational>& form) {
    if (form.is_identically_zero()) throw error("form is identically zero");
    auto rf = form.as_rational();
    const Polynomial<Rational>& num = rf.num();
    if (!form.tail || form.p.size() == 1) return num.degree();
    auto hull = form.tail->generator(0).hull();
    int inside = root_count_with_multiplicity(num, Bound(*hull.lo), Bound(*hull.hi), false, false);
    return num.degree() - inside;
}

/// Exact zero count and isolation for a linear form inside the open interval,
/// with simplicity decided through gcd(num, num'). Zeros at the interval
/// endpoints are flagged, not counted.
inline ZeroReport zeros_in_hull(const LinearForm<Rational>& form, const Rational& lo,
                                const Rational& hi) {
    if (form.is_identically_zero()) throw error("form is identically zero");
    auto rf = form.as_rational();
    const Polynomial<Rational>& num = rf.num();
    ZeroReport rep;
    SturmChain chain(num);
    rep.count_in_hull = chain.count(Bound(lo), Bound(hi), true, true);
    rep.isolating_intervals = chain.isolate(lo, hi);
    rep.endpoint_zero = chain.is_root(lo) || chain.is_root(hi);
    auto multiple = gcd(num, num.derivative());
    if (multiple.degree() > 0)
        rep.all_simple = SturmChain(multiple).count(Bound(lo), Bound(hi), true, true) == 0;
    rep.count_outside_delta1 = count_zeros_off_delta1(form);
    return rep;
}

/// Distinct-root count of the form in an arbitrary interval (used for the
/// AT-system interval checks); multiplicity included.
inline int count_zeros_in_interval(const LinearForm<Rational>& form, const Bound& lo,
                                   const Bound& hi, bool lo_open, bool hi_open) {
    if (form.is_identically_zero()) throw error("form is identically zero");
    auto rf = form.as_rational();
    return root_count_with_multiplicity(rf.num(), lo, hi, lo_open, hi_open);
}

struct InterlacingResult {
    bool ok = false;
    std::string finding; // set when not ok
};

/// Strict interlacing on the open interval (lo, hi): formB must have exactly
/// one more zero there than formA, and between consecutive zeros of formB
/// lies exactly one zero of formA. Decided on isolating intervals refined
/// until pairwise disjoint; a common zero is reported as a finding.
inline InterlacingResult interlacing_check(const LinearForm<Rational>& form_a,
                                           const LinearForm<Rational>& form_b, const Rational& lo,
                                           const Rational& hi) {
    auto ra = form_a.as_rational();
    auto rb = form_b.as_rational();
    if (ra.is_zero() || rb.is_zero()) throw error("form is identically zero");
    auto common = gcd(ra.num(), rb.num());
    if (common.degree() > 0 && SturmChain(common).count(Bound(lo), Bound(hi)) > 0)
        return {false, "common zero"};

    SturmChain ca(ra.num()), cb(rb.num());
    auto ia = ca.isolate(lo, hi);
    auto ib = cb.isolate(lo, hi);
    if (ib.size() != ia.size() + 1)
        return {false, "zero count mismatch"};

    struct Tagged {
        std::pair<Rational, Rational> iv;
        bool from_b;
    };
    std::vector<Tagged> merged;
    for (auto& iv : ia) merged.push_back({iv, false});
    for (auto& iv : ib) merged.push_back({iv, true});

    // Refine until the intervals are pairwise disjoint. Distinct roots
    // separate after finitely many bisections.
    bool again = true;
    while (again) {
        again = false;
        std::sort(merged.begin(), merged.end(),
                  [](const Tagged& x, const Tagged& y) { return x.iv.first < y.iv.first; });
        for (size_t i = 0; i + 1 < merged.size(); ++i) {
            if (merged[i].iv.second > merged[i + 1].iv.first) {
                const SturmChain& ci = merged[i].from_b ? cb : ca;
                const SturmChain& cj = merged[i + 1].from_b ? cb : ca;
                Rational wi = (merged[i].iv.second - merged[i].iv.first) / 2;
                Rational wj = (merged[i + 1].iv.second - merged[i + 1].iv.first) / 2;
                if (!is_zero(wi)) merged[i].iv = ci.refine(merged[i].iv, wi);
                if (!is_zero(wj)) merged[i + 1].iv = cj.refine(merged[i + 1].iv, wj);
                again = true;
            }
        }
    }

    // Expected pattern: B A B A ... A B.
    for (size_t i = 0; i < merged.size(); ++i) {
        bool expect_b = (i % 2 == 0);
        if (merged[i].from_b != expect_b) return {false, "alternation failure"};
    }
    return {true, ""};
}

struct ATReport {
    int trials = 0;
    int max_count = 0;          // zeros off the closed hull of sigma_1
    int max_interval_count = 0; // zeros inside the restricted interval, if given
    int bound = 0;              // |n| - 1
    bool certified = false;
};

/// Randomized AT-system trials: T random coefficient tuples with rational
/// coefficients in [-10, 10], denominators <= 16, deg p_k <= n_k - 1. For
/// reproducibility the sampler is a fixed mt19937_64 stream mapped by
/// modulus.
inline ATReport at_system_zero_bound(std::shared_ptr<const NikishinSystem<Rational>> tail,
                                     const MultiIndex& n, int trials, uint64_t seed,
                                     const ExtendedInterval<Rational>* restrict_to = nullptr) {
    size_t m = tail ? tail->size() : 0;
    if (n.size() != m + 1) throw error("index length does not match the system");
    if (trials < 1) throw error("need at least one trial");
    if (restrict_to && tail) {
        auto hull = tail->generator(0).hull();
        // The restricted interval must not meet the interior of Delta_1.
        bool left = restrict_to->hi && !(*hull.lo < *restrict_to->hi) ;
        bool right = restrict_to->lo && !(*restrict_to->lo < *hull.hi);
        if (!left && !right) throw error("interval intersects Delta_1");
    }
    std::mt19937_64 rng(seed);
    auto random_rational = [&rng]() {
        long den = 1 + static_cast<long>(rng() % 16);
        long num = static_cast<long>(rng() % static_cast<uint64_t>(20 * den + 1)) - 10 * den;
        Rational q(num, den);
        q.canonicalize();
        return q;
    };
    ATReport rep;
    rep.trials = trials;
    rep.bound = n.norm() - 1;
    for (int t = 0; t < trials; ++t) {
        LinearForm<Rational> form{tail, {}};
        bool all_zero = true;
        do {
            form.p.clear();
            for (size_t k = 0; k <= m; ++k) {
                std::vector<Rational> coeffs;
                for (int r = 0; r < n[k]; ++r) coeffs.push_back(random_rational());
                form.p.emplace_back(std::move(coeffs));
            }
            all_zero = form.is_identically_zero();
        } while (all_zero);
        int off = count_zeros_off_delta1(form);
        rep.max_count = std::max(rep.max_count, off);
        if (restrict_to) {
            Bound lo = restrict_to->lo ? Bound(*restrict_to->lo) : Bound::neg_inf();
            Bound hi = restrict_to->hi ? Bound(*restrict_to->hi) : Bound::pos_inf();
            rep.max_interval_count =
                std::max(rep.max_interval_count, count_zeros_in_interval(form, lo, hi, false, false));
        }
    }
    rep.certified = rep.max_count <= rep.bound &&
                    (!restrict_to || rep.max_interval_count <= rep.bound);
    return rep;
}

} // namespace nikishin

#endif
