#ifndef NIKISHIN_RATIONAL_FUNCTION_HPP
#define NIKISHIN_RATIONAL_FUNCTION_HPP

#include <utility>
#include <vector>

#include "nikishin/polynomial.hpp"

namespace nikishin {

/// Quotient of polynomials with a monic, nonzero denominator. On the exact
/// backend construction reduces to lowest terms; on the big-float backend the
/// quotient is kept as given (no reliable gcd there).
template <typename S>
class RationalFunction {
public:
    RationalFunction() : num_{}, den_(Polynomial<S>::one()) {}
    explicit RationalFunction(Polynomial<S> num)
        : num_(std::move(num)), den_(Polynomial<S>::one()) {}
    RationalFunction(Polynomial<S> num, Polynomial<S> den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw error("zero denominator");
        if constexpr (is_exact_v<S>) reduce();
        normalize_monic();
    }

    const Polynomial<S>& num() const { return num_; }
    const Polynomial<S>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    template <typename V>
    V eval(const V& x) const {
        V d = den_.template eval<V>(x);
        if (nikishin::is_zero(d)) throw pole_error();
        return num_.template eval<V>(x) / d;
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.num_.is_zero()) throw error("division by zero rational function");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    RationalFunction operator-() const { return RationalFunction(-num_, den_, no_reduce_tag{}); }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        // Cross-multiplied identity; exact on the rational backend.
        return a.num_ * b.den_ == b.num_ * a.den_;
    }

    /// Split into polynomial part and strictly proper remainder.
    std::pair<Polynomial<S>, RationalFunction> split() const {
        auto [q, r] = num_.divmod(den_);
        return {q, RationalFunction(r, den_, no_reduce_tag{})};
    }

    /// Order of vanishing at infinity: smallest t >= 1 such that the
    /// expansion sum c_t / z^t has c_t != 0. Requires a strictly proper
    /// function; returns -1 for the zero function ("vanishes identically").
    int order_at_infinity() const {
        if (num_.is_zero()) return -1;
        return den_.degree() - num_.degree();
    }

    /// lim z->inf z * f(z), for strictly proper f.
    S mass_at_infinity() const {
        if (num_.degree() >= den_.degree()) throw error("not vanishing at infinity");
        if (num_.degree() == den_.degree() - 1) return num_.leading() / den_.leading();
        return S(0);
    }

    /// Coefficients c_1..c_count of the expansion f(z) = sum_t c_t z^-t at
    /// infinity. The polynomial part, if any, is discarded first.
    std::vector<S> expansion_at_infinity(int count) const {
        auto [poly, proper] = split();
        (void)poly;
        const auto& n = proper.num();
        const auto& d = proper.den();
        std::vector<S> c(static_cast<size_t>(count), S(0));
        if (n.is_zero()) return c;
        // Reversed-coefficient power series division: with u = 1/z,
        // f = u^(deg d - deg n) * revn(u)/revd(u), revd(0) = lc(d) != 0.
        int shift = d.degree() - n.degree(); // >= 1
        std::vector<S> series(static_cast<size_t>(count), S(0));
        const S inv_lead = S(1) / d.leading();
        for (int t = 0; t + shift <= count; ++t) {
            S acc = (t <= n.degree()) ? n.coeff(n.degree() - t) : S(0);
            for (int i = 1; i <= t; ++i)
                acc = acc - d.coeff(d.degree() - i) * series[static_cast<size_t>(t - i)];
            series[static_cast<size_t>(t)] = acc * inv_lead;
        }
        for (int t = 0; t + shift <= count; ++t)
            c[static_cast<size_t>(t + shift - 1)] = series[static_cast<size_t>(t)];
        return c;
    }

private:
    struct no_reduce_tag {};
    RationalFunction(Polynomial<S> num, Polynomial<S> den, no_reduce_tag)
        : num_(std::move(num)), den_(std::move(den)) {
        normalize_monic();
    }

    Polynomial<S> num_;
    Polynomial<S> den_;

    void reduce() {
        if (num_.is_zero()) {
            den_ = Polynomial<S>::one();
            return;
        }
        auto g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.divmod(g).first;
            den_ = den_.divmod(g).first;
        }
    }
    void normalize_monic() {
        S lead = den_.leading();
        den_ = den_ / lead;
        num_ = num_ / lead;
    }
};

/// Cauchy transform of the weighted discrete measure f * tau, expressed
/// through rational-function algebra alone. Here tau_hat = P/Q is the
/// transform of a measure tau supported on the (simple) zeros y_i of Q with
/// weights t_i = P(y_i)/Q'(y_i), and f is analytic at every y_i. Then
///   integral f(x) dtau(x) / (z - x) = sum_i t_i f(y_i) / (z - y_i) = B/Q
/// where B is the residue of f*tau_hat on Q's poles: B = num_f * P / den_f
/// reduced modulo Q. Exact backend only.
template <typename S>
RationalFunction<S> transform_of_weighted(const RationalFunction<S>& tau_hat,
                                          const RationalFunction<S>& f) {
    static_assert(is_exact_v<S>);
    const Polynomial<S>& q = tau_hat.den();
    if (q.degree() == 0) return RationalFunction<S>{}; // no poles, zero measure
    auto [g, u, v] = extended_gcd(f.den(), q);
    (void)v;
    if (g.degree() != 0) throw error("weight has a pole on the measure support");
    // u * den_f == 1 (mod q)
    Polynomial<S> b = ((f.num() * tau_hat.num()).divmod(q).second * u).divmod(q).second;
    return RationalFunction<S>(b, q);
}

} // namespace nikishin

#endif
