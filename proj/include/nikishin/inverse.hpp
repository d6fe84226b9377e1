#ifndef NIKISHIN_INVERSE_HPP
#define NIKISHIN_INVERSE_HPP

#include <utility>
#include <vector>

#include "nikishin/measure.hpp"
#include "nikishin/sturm.hpp"

namespace nikishin {

/// Moments c_0, c_1, ... of a measure.
template <typename S>
using MomentSequence = std::vector<S>;

/// Coefficients of 1/s_hat = ell + tau_hat with ell(z) = d_m2*z + d_m1 and
/// tau the inverse measure, of sign opposite to the source. The tau_moments
/// d_0..d_n solve the triangular system 0 = d_m2*c_{k+2} + d_m1*c_{k+1} +
/// d_0*c_k + ... + d_k*c_0.
template <typename S>
struct InverseDecomposition {
    S d_minus2;
    S d_minus1;
    MomentSequence<S> tau_moments;
    int tau_sign;
};

template <typename S>
InverseDecomposition<S> inverse_decomposition(const MomentSequence<S>& c, int n) {
    if (n < 0) throw error("negative order");
    if (c.empty() || is_zero(c[0])) throw error("zero total mass");
    if (static_cast<int>(c.size()) < n + 3) throw error("need n+3 moments");
    InverseDecomposition<S> out;
    out.d_minus2 = S(1) / c[0];
    out.d_minus1 = -(out.d_minus2 * c[1]) / c[0];
    out.tau_sign = -sign_of(c[0]);
    out.tau_moments.resize(static_cast<size_t>(n) + 1, S(0));
    for (int k = 0; k <= n; ++k) {
        // Row k+2: 0 = d_m2*c_{k+2} + d_m1*c_{k+1} + sum_{j<k} d_j*c_{k-j} + d_k*c_0
        S acc = out.d_minus2 * c[static_cast<size_t>(k) + 2] +
                out.d_minus1 * c[static_cast<size_t>(k) + 1];
        for (int j = 0; j < k; ++j)
            acc = acc + out.tau_moments[static_cast<size_t>(j)] * c[static_cast<size_t>(k - j)];
        out.tau_moments[static_cast<size_t>(k)] = -acc / c[0];
    }
    return out;
}

/// Result of splitting 1/s_hat for an atomic measure: the degree-1 part and
/// the exact rational form of tau_hat. For a single atom 1/s_hat is already
/// a polynomial, tau_hat = 0, and `trivial` is set.
template <typename S>
struct InverseRational {
    Polynomial<S> ell;
    RationalFunction<S> tau_hat;
    bool trivial = false;
};

template <typename S>
InverseRational<S> inverse_as_rational(const AtomicMeasure<S>& s) {
    RationalFunction<S> sh = s.cauchy_rational();
    // 1/s_hat = den/num; polynomial part has degree exactly 1.
    auto [ell, tau] = RationalFunction<S>(sh.den(), sh.num()).split();
    InverseRational<S> out{std::move(ell), std::move(tau), s.size() < 2};
    return out;
}

/// Signs of the residues of a strictly proper rational function with
/// square-free denominator, one entry per real pole in ascending order.
/// Decided exactly: each pole is isolated, then the interval is refined until
/// r * den' has no sign change across it.
inline std::vector<int> residue_signs(const RationalFunction<Rational>& f) {
    if (f.is_zero()) return {};
    const Polynomial<Rational>& den = f.den();
    if (gcd(den, den.derivative()).degree() != 0)
        throw error("denominator has multiple roots");
    Polynomial<Rational> h = f.num() * den.derivative();
    SturmChain den_chain(den);
    SturmChain h_chain(h);
    // All real poles lie strictly inside [-M, M] for the root bound M.
    Rational bound(1);
    for (const auto& c : den.coeffs()) {
        Rational m = abs_of(c) / abs_of(den.leading()) + 1;
        if (bound < m) bound = m;
    }
    auto intervals = den_chain.isolate(-bound, bound);
    std::vector<int> signs;
    for (auto iv : intervals) {
        while (true) {
            if (iv.first == iv.second) {
                signs.push_back(sign_of(h.eval(iv.first)));
                break;
            }
            bool lo_zero = is_zero(h.eval(iv.first));
            bool hi_zero = is_zero(h.eval(iv.second));
            if (!lo_zero && !hi_zero && h_chain.count(Bound(iv.first), Bound(iv.second)) == 0) {
                signs.push_back(sign_of(h.eval(iv.first)));
                break;
            }
            iv = den_chain.refine(iv, (iv.second - iv.first) / 2);
        }
    }
    return signs;
}

} // namespace nikishin

#endif
