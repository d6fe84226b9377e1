#ifndef NIKISHIN_STURM_HPP
#define NIKISHIN_STURM_HPP

#include <utility>
#include <vector>

#include "nikishin/polynomial.hpp"

namespace nikishin {

/// A point of the extended real line with rational finite values.
class Bound {
public:
    Bound(Rational v) : inf_(0), v_(std::move(v)) {}
    static Bound neg_inf() { return Bound(-1); }
    static Bound pos_inf() { return Bound(+1); }

    bool finite() const { return inf_ == 0; }
    int infinity_sign() const { return inf_; }
    const Rational& value() const { return v_; }

    friend bool operator<(const Bound& a, const Bound& b) {
        if (a.inf_ != b.inf_) return a.inf_ < b.inf_;
        return a.inf_ == 0 && a.v_ < b.v_;
    }

private:
    explicit Bound(int inf) : inf_(inf) {}
    int inf_;
    Rational v_;
};

/// Sturm chain of the square-free part of a nonzero rational polynomial.
/// Chain members are kept integer-primitive; remainders are rescaled by
/// positive factors only, which preserves the sign-variation property.
class SturmChain {
public:
    explicit SturmChain(const Polynomial<Rational>& p) {
        if (p.is_zero()) throw error("zero polynomial");
        Polynomial<Rational> p0 = integer_primitive(squarefree_part(p));
        chain_.push_back(p0);
        if (p0.degree() == 0) return;
        chain_.push_back(integer_primitive(p0.derivative()));
        while (chain_.back().degree() > 0) {
            auto r = chain_[chain_.size() - 2].divmod(chain_.back()).second;
            if (r.is_zero()) break; // cannot happen for square-free input
            chain_.push_back(integer_primitive(-r));
        }
    }

    const std::vector<Polynomial<Rational>>& polys() const { return chain_; }
    const Polynomial<Rational>& squarefree() const { return chain_.front(); }

    bool is_root(const Rational& x) const { return is_zero(chain_.front().eval(x)); }

    int variations(const Bound& x) const {
        int count = 0, prev = 0;
        for (const auto& q : chain_) {
            int s = sign_at(q, x);
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++count;
            prev = s;
        }
        return count;
    }

    /// Number of distinct real roots in the interval with the requested
    /// endpoint openness. Openness is irrelevant at infinite ends.
    int count(const Bound& lo, const Bound& hi, bool lo_open = true, bool hi_open = true) const {
        if (!(lo < hi)) throw error("empty interval");
        int n = variations(lo) - variations(hi); // roots in (lo, hi]
        if (lo.finite() && !lo_open && is_root(lo.value())) ++n;
        if (hi.finite() && hi_open && is_root(hi.value())) --n;
        return n;
    }

    int total_real_roots() const { return count(Bound::neg_inf(), Bound::pos_inf()); }

    /// Disjoint rational intervals, one per distinct root in (lo, hi).
    /// A degenerate pair (r, r) marks an exactly-rational root.
    std::vector<std::pair<Rational, Rational>> isolate(const Rational& lo, const Rational& hi) const {
        if (!(lo < hi)) throw error("empty interval");
        std::vector<std::pair<Rational, Rational>> out;
        isolate_rec(lo, hi, count_open(lo, hi), out);
        return out;
    }

    /// Shrink an isolating interval below the given width by bisection.
    std::pair<Rational, Rational> refine(std::pair<Rational, Rational> iv, const Rational& width) const {
        while (!(iv.first == iv.second) && iv.second - iv.first >= width) {
            Rational m = (iv.first + iv.second) / 2;
            if (is_root(m)) return {m, m};
            if (count_open(iv.first, m) == 1)
                iv.second = m;
            else
                iv.first = m;
        }
        return iv;
    }

    int count_open(const Rational& lo, const Rational& hi) const {
        return count(Bound(lo), Bound(hi), true, true);
    }

private:
    std::vector<Polynomial<Rational>> chain_;

    static int sign_at(const Polynomial<Rational>& q, const Bound& x) {
        if (q.is_zero()) return 0;
        if (x.finite()) return sign_of(q.eval(x.value()));
        int lead = sign_of(q.leading());
        if (x.infinity_sign() > 0) return lead;
        return q.degree() % 2 == 0 ? lead : -lead;
    }

    void isolate_rec(const Rational& lo, const Rational& hi, int n,
                     std::vector<std::pair<Rational, Rational>>& out) const {
        if (n <= 0) return;
        if (n == 1) {
            out.emplace_back(lo, hi);
            return;
        }
        Rational m = (lo + hi) / 2;
        bool mid_root = is_root(m);
        if (mid_root) out.emplace_back(m, m);
        int left = count_open(lo, m);
        isolate_rec(lo, m, left, out);
        isolate_rec(m, hi, n - left - (mid_root ? 1 : 0), out);
    }
};

/// Distinct real roots of p in the given interval.
inline int sturm_count(const Polynomial<Rational>& p, const Bound& lo, const Bound& hi,
                       bool lo_open = true, bool hi_open = true) {
    return SturmChain(p).count(lo, hi, lo_open, hi_open);
}

/// Real roots counted with multiplicity, via the square-free decomposition.
inline int root_count_with_multiplicity(const Polynomial<Rational>& p, const Bound& lo,
                                        const Bound& hi, bool lo_open = true, bool hi_open = true) {
    int total = 0;
    auto factors = squarefree_decomposition(p);
    for (size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].degree() <= 0) continue;
        total += static_cast<int>(i + 1) * SturmChain(factors[i]).count(lo, hi, lo_open, hi_open);
    }
    return total;
}

inline std::vector<std::pair<Rational, Rational>> isolate_roots(const Polynomial<Rational>& p,
                                                                const Rational& lo,
                                                                const Rational& hi) {
    return SturmChain(p).isolate(lo, hi);
}

} // namespace nikishin

#endif
