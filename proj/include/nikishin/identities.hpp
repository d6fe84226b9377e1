#ifndef NIKISHIN_IDENTITIES_HPP
#define NIKISHIN_IDENTITIES_HPP

#include <string>
#include <utility>
#include <vector>

#include "nikishin/inverse.hpp"
#include "nikishin/measure.hpp"

namespace nikishin {

/// Outcome of one measure-algebra identity check.
template <typename S>
struct IdentityResult {
    std::string id;
    bool identity_exact = false; // cross-multiplied rational-function identity (exact backend)
    bool samples_exact_zero = true;
    BigFloat max_abs = BigFloat(0L);
    size_t samples = 0;
    bool mass_relation_ok = true;
};

namespace detail {

template <typename S>
void record_sample(IdentityResult<S>& res, const Complex<S>& residual) {
    ++res.samples;
    if (!is_zero(residual)) res.samples_exact_zero = false;
    BigFloat re = scalar_traits<S>::to_bigfloat(residual.re).abs();
    BigFloat im = scalar_traits<S>::to_bigfloat(residual.im).abs();
    BigFloat mag = re > im ? re : im;
    if (mag > res.max_abs) res.max_abs = mag;
}

template <typename S>
void require_off_hull(const AtomicMeasure<S>& m, const Complex<S>& z) {
    if (!z.is_real()) return;
    auto h = m.hull();
    if (!(z.re < *h.lo) && !(*h.hi < z.re)) throw pole_error("sample point inside support hull");
}

} // namespace detail

/// Default sample points 10, -5, 3/2 + 2i, 1/3 - i, filtered against the
/// given hull-carrying measures.
template <typename S>
std::vector<Complex<S>> default_sample_points(const std::vector<const AtomicMeasure<S>*>& measures) {
    std::vector<Complex<S>> pts = {
        Complex<S>(S(10)), Complex<S>(S(-5)),
        Complex<S>(scalar_traits<S>::from_rational(Rational(3, 2)), S(2)),
        Complex<S>(scalar_traits<S>::from_rational(Rational(1, 3)), S(-1))};
    std::vector<Complex<S>> out;
    for (auto& z : pts) {
        bool ok = true;
        for (auto* m : measures) {
            if (!z.is_real()) continue;
            auto h = m->hull();
            if (!(z.re < *h.lo) && !(*h.hi < z.re)) ok = false;
        }
        if (ok) out.push_back(z);
    }
    return out;
}

/// Product rule for Cauchy transforms of two measures with disjoint or
/// touching hulls:
///   sigma_a^(z) sigma_b^(z) = <a,b>^(z) + <b,a>^(z),
/// plus the total-mass relation |<a,b>| = -|<b,a>|.
template <typename S>
IdentityResult<S> identity_product(const AtomicMeasure<S>& a, const AtomicMeasure<S>& b,
                                   const std::vector<Complex<S>>& zs) {
    detail::check_consecutive(a, b, std::optional<S>{});
    IdentityResult<S> res{"2.1"};
    AtomicMeasure<S> ab = product_of(a, b);
    AtomicMeasure<S> ba = product_of(b, a);
    for (const auto& z : zs) {
        detail::require_off_hull(a, z);
        detail::require_off_hull(b, z);
        Complex<S> lhs = a.cauchy(z) * b.cauchy(z);
        Complex<S> rhs = ab.cauchy(z) + ba.cauchy(z);
        detail::record_sample(res, lhs - rhs);
    }
    S mass_residual = ab.mass() + ba.mass();
    if constexpr (is_exact_v<S>) {
        res.mass_relation_ok = is_zero(mass_residual);
        auto lhs = a.cauchy_rational() * b.cauchy_rational();
        auto rhs = ab.cauchy_rational() + ba.cauchy_rational();
        res.identity_exact = (lhs == rhs);
    } else {
        BigFloat tol = BigFloat::pow2(16 - static_cast<long>(S::default_precision()));
        res.mass_relation_ok = abs_of(mass_residual) < tol * (abs_of(ab.mass()) + S(1));
    }
    return res;
}

/// The two reciprocal identities tying a product measure to the inverse
/// measures tau: with s_ab = <a,b>,
///   (2.2)  a^/s_ab^ = |a|/|s_ab| + < (b,a-transform / b^) tau_ab >^
///   (2.3)  s_ab^/a^ = |s_ab|/|a| - < tau_aa, b, a >^
/// Exact backend only: the tau transforms come from inverse_as_rational and
/// the weighted transforms from partial-fraction algebra.
inline std::pair<IdentityResult<Rational>, IdentityResult<Rational>> identity_ratio(
    const AtomicMeasure<Rational>& a, const AtomicMeasure<Rational>& b,
    const std::vector<Complex<Rational>>& zs) {
    detail::check_consecutive(a, b, std::optional<Rational>{});
    AtomicMeasure<Rational> ab = product_of(a, b);
    AtomicMeasure<Rational> ba = product_of(b, a);
    auto sa = a.cauchy_rational();
    auto sb = b.cauchy_rational();
    auto sab = ab.cauchy_rational();
    auto tba = ba.cauchy_rational();
    auto inv_ab = inverse_as_rational(ab);
    auto inv_aa = inverse_as_rational(a);
    using RF = RationalFunction<Rational>;
    RF const22{Polynomial<Rational>{a.mass() / ab.mass()}};
    RF const23{Polynomial<Rational>{ab.mass() / a.mass()}};

    IdentityResult<Rational> r22{"2.2"};
    {
        RF lhs = sa / sab;
        RF rhs = const22 + transform_of_weighted(inv_ab.tau_hat, tba / sb);
        r22.identity_exact = (lhs == rhs);
        for (const auto& z : zs) {
            detail::require_off_hull(a, z);
            detail::record_sample(r22, lhs.eval(z) - rhs.eval(z));
        }
    }
    IdentityResult<Rational> r23{"2.3"};
    {
        RF lhs = sab / sa;
        RF rhs = const23 - transform_of_weighted(inv_aa.tau_hat, tba);
        r23.identity_exact = (lhs == rhs);
        for (const auto& z : zs) {
            detail::require_off_hull(a, z);
            detail::record_sample(r23, lhs.eval(z) - rhs.eval(z));
        }
    }
    return {r22, r23};
}

/// Ratio formula along a chain (generators g_0..g_{r-1} standing for
/// sigma_1..sigma_m): for 2 <= k <= m,
///   s_{1,k}^/s_{1,1}^ = |s_{1,k}|/|s_{1,1}| - < tau_{1,1}, <s_{2,k}, sigma_1> >^.
inline IdentityResult<Rational> identity_ratio_chain(const NikishinSystem<Rational>& tail, size_t k,
                                                     const std::vector<Complex<Rational>>& zs) {
    if (k < 2 || k > tail.size()) throw error("chain index out of range");
    IdentityResult<Rational> res{"4.4"};
    using RF = RationalFunction<Rational>;
    const auto& s11 = tail.generator(0);
    RF lhs = tail.transform_rational(0, k - 1) / s11.cauchy_rational();
    AtomicMeasure<Rational> inner =
        k == 2 ? product_of(tail.generator(1), s11)
               : product_of(tail.product(1, k - 1), s11); // <s_{2,k}, sigma_1>
    auto inv = inverse_as_rational(s11);
    RF rhs = RF{Polynomial<Rational>{tail.product(0, k - 1).mass() / s11.mass()}} -
             transform_of_weighted(inv.tau_hat, inner.cauchy_rational());
    res.identity_exact = (lhs == rhs);
    for (const auto& z : zs) {
        detail::require_off_hull(s11, z);
        detail::record_sample(res, lhs.eval(z) - rhs.eval(z));
    }
    return res;
}

/// The reversal identity for a chain of r >= 2 generators:
///   <g_{r-1},..,g_0>^ + sum_{k=1}^{r-1} (-1)^k <g_{r-1},..,g_k>^ <g_0,..,g_{k-1}>^
///   + (-1)^r <g_0,..,g_{r-1}>^  == 0,
/// together with the mass relation  |reversed| = (-1)^(r-1) |forward|.
/// For r = 2 this is the product rule again.
template <typename S>
IdentityResult<S> identity_reversal(const NikishinSystem<S>& sys,
                                    const std::vector<Complex<S>>& zs) {
    const size_t r = sys.size();
    if (r < 2) throw error("reversal identity needs at least 2 generators");
    IdentityResult<S> res{"reversal"};

    // Reversed products: rev[i] = <g_{r-1}, ..., g_{r-1-i}>.
    std::vector<AtomicMeasure<S>> rev;
    rev.reserve(r);
    rev.push_back(sys.generator(r - 1));
    for (size_t j = r - 1; j-- > 0;) rev.push_back(product_of(rev.back(), sys.generator(j)));

    for (const auto& z : zs) {
        detail::require_off_hull(sys.generator(0), z);
        detail::require_off_hull(sys.generator(r - 1), z);
        Complex<S> acc = rev[r - 1].cauchy(z);
        for (size_t k = 1; k <= r - 1; ++k) {
            Complex<S> term = rev[r - 1 - k].cauchy(z) * sys.product(0, k - 1).cauchy(z);
            acc = (k % 2 == 0) ? acc + term : acc - term; // +(-1)^k term
        }
        Complex<S> last = sys.product(0, r - 1).cauchy(z);
        acc = (r % 2 == 0) ? acc + last : acc - last; // +(-1)^r term
        detail::record_sample(res, acc);
    }

    S forward_mass = sys.product(0, r - 1).mass();
    S reversed_mass = rev[r - 1].mass();
    S expected = (r % 2 == 0) ? S(-forward_mass) : forward_mass;
    if constexpr (is_exact_v<S>) {
        res.mass_relation_ok = (reversed_mass == expected);
        using RF = RationalFunction<S>;
        RF acc = rev[r - 1].cauchy_rational();
        for (size_t k = 1; k <= r - 1; ++k) {
            RF term = rev[r - 1 - k].cauchy_rational() * sys.product(0, k - 1).cauchy_rational();
            acc = (k % 2 == 0) ? acc + term : acc - term;
        }
        RF last = sys.product(0, r - 1).cauchy_rational();
        acc = (r % 2 == 0) ? acc + last : acc - last;
        res.identity_exact = acc.is_zero();
    } else {
        BigFloat tol = BigFloat::pow2(16 - static_cast<long>(S::default_precision()));
        res.mass_relation_ok =
            abs_of(reversed_mass - expected) < tol * (abs_of(forward_mass) + S(1));
    }
    return res;
}

} // namespace nikishin

#endif
