#ifndef NIKISHIN_QUADRATURE_HPP
#define NIKISHIN_QUADRATURE_HPP

#include <string>
#include <vector>

#include "nikishin/measure.hpp"
#include "nikishin/sturm.hpp"

namespace nikishin {

/// Classical weights available for discretization.
enum class WeightPreset {
    laguerre,     // e^-x on [0, inf), moments n!
    neg_laguerre, // e^x on (-inf, 0], moments (-1)^n n!
    arcsine,      // 1/sqrt(x(1-x)) on [0,1], moments pi * binom(2n,n)/4^n
    lebesgue      // dx on [-1, 0], moments (-1)^n/(n+1)
};

inline WeightPreset parse_preset(const std::string& name) {
    if (name == "laguerre") return WeightPreset::laguerre;
    if (name == "neg-laguerre") return WeightPreset::neg_laguerre;
    if (name == "arcsine") return WeightPreset::arcsine;
    if (name == "lebesgue") return WeightPreset::lebesgue;
    throw config_error("unknown preset: " + name);
}

inline std::string preset_name(WeightPreset p) {
    switch (p) {
        case WeightPreset::laguerre: return "laguerre";
        case WeightPreset::neg_laguerre: return "neg-laguerre";
        case WeightPreset::arcsine: return "arcsine";
        case WeightPreset::lebesgue: return "lebesgue";
    }
    return "?";
}

/// Moment of order n divided by the preset's transcendental scale factor
/// (pi for arcsine, 1 otherwise); an exact rational.
inline Rational preset_normalized_moment(WeightPreset p, unsigned n) {
    switch (p) {
        case WeightPreset::laguerre: {
            mpz_class f;
            mpz_fac_ui(f.get_mpz_t(), n);
            return Rational(f);
        }
        case WeightPreset::neg_laguerre: {
            mpz_class f;
            mpz_fac_ui(f.get_mpz_t(), n);
            return n % 2 == 0 ? Rational(f) : Rational(-f);
        }
        case WeightPreset::arcsine: {
            mpz_class b;
            mpz_bin_uiui(b.get_mpz_t(), 2 * n, n);
            mpz_class pow4 = 1;
            mpz_mul_2exp(pow4.get_mpz_t(), pow4.get_mpz_t(), 2 * n);
            Rational q(b, pow4);
            q.canonicalize();
            return q;
        }
        case WeightPreset::lebesgue: {
            Rational q(n % 2 == 0 ? 1 : -1, n + 1);
            q.canonicalize();
            return q;
        }
    }
    throw config_error("unknown preset");
}

inline bool preset_pi_scaled(WeightPreset p) { return p == WeightPreset::arcsine; }

inline BigFloat preset_moment(WeightPreset p, unsigned n) {
    BigFloat m(preset_normalized_moment(p, n));
    return preset_pi_scaled(p) ? m * BigFloat::pi() : m;
}

/// Monic three-term recurrence pi_{k+1} = (x - a_k) pi_k - b_k pi_{k-1}
/// computed from the first 2N moments by the Chebyshev algorithm, exactly.
struct MonicRecurrence {
    std::vector<Rational> a;
    std::vector<Rational> b; // b[0] = mu_0
};

inline MonicRecurrence chebyshev_recurrence(const std::vector<Rational>& mu, size_t n_terms) {
    if (mu.size() < 2 * n_terms) throw error("need 2N moments");
    if (is_zero(mu[0])) throw error("zero total mass");
    MonicRecurrence rec;
    rec.a.resize(n_terms);
    rec.b.resize(n_terms);
    rec.a[0] = mu[1] / mu[0];
    rec.b[0] = mu[0];
    std::vector<Rational> prev2(mu.size(), Rational(0)); // sigma_{k-2,l}
    std::vector<Rational> prev = mu;                     // sigma_{k-1,l}
    for (size_t k = 1; k < n_terms; ++k) {
        std::vector<Rational> cur(mu.size(), Rational(0));
        for (size_t l = k; l <= 2 * n_terms - k - 1; ++l)
            cur[l] = prev[l + 1] - rec.a[k - 1] * prev[l] - rec.b[k - 1] * prev2[l];
        rec.a[k] = cur[k + 1] / cur[k] - prev[k] / prev[k - 1];
        rec.b[k] = cur[k] / prev[k - 1];
        prev2 = std::move(prev);
        prev = std::move(cur);
    }
    return rec;
}

inline Polynomial<Rational> monic_orthogonal(const MonicRecurrence& rec, size_t degree) {
    Polynomial<Rational> pm1;                         // pi_{-1} = 0
    Polynomial<Rational> p = Polynomial<Rational>::one(); // pi_0
    for (size_t k = 0; k < degree; ++k) {
        Polynomial<Rational> next =
            Polynomial<Rational>{-rec.a[k], Rational(1)} * p - rec.b[k] * pm1;
        pm1 = std::move(p);
        p = std::move(next);
    }
    return p;
}

/// N-point Gauss rule for the (normalized) moment sequence. Nodes are exact
/// rational enclosures of the orthogonal-polynomial roots refined below the
/// given width; weights come from the Christoffel closed form
/// b_0...b_{N-1} / (pi_{N-1}(x) pi_N'(x)) evaluated at the rational nodes.
struct GaussRule {
    std::vector<Rational> nodes;
    std::vector<Rational> weights;
};

inline GaussRule gauss_rule_from_moments(const std::vector<Rational>& mu, size_t n_points,
                                         const Rational& node_width) {
    auto rec = chebyshev_recurrence(mu, n_points);
    Polynomial<Rational> pn = monic_orthogonal(rec, n_points);
    Polynomial<Rational> pn1 = monic_orthogonal(rec, n_points - 1);
    Polynomial<Rational> dpn = pn.derivative();

    Rational bound(1);
    for (const auto& c : pn.coeffs()) {
        Rational m = abs_of(c) + 1; // pn monic
        if (bound < m) bound = m;
    }
    SturmChain chain(pn);
    auto intervals = chain.isolate(-bound, bound);
    if (intervals.size() != n_points) throw error("orthogonal polynomial roots not all real");

    Rational norm(1);
    for (const auto& b : rec.b) norm = norm * b;

    GaussRule rule;
    for (auto& iv : intervals) {
        auto r = chain.refine(iv, node_width);
        Rational node = (r.first + r.second) / 2;
        rule.nodes.push_back(node);
        rule.weights.push_back(norm / (pn1.eval(node) * dpn.eval(node)));
    }
    return rule;
}

/// Discretizes a classical weight into an N-point atomic measure whose first
/// 2N moments reproduce the weight's moments to relative error < 2^(8-p) at
/// the active big-float precision p. Exact-backend callers are rejected: the
/// nodes are irrational.
template <typename S>
AtomicMeasure<S> discretize_weight(WeightPreset preset, size_t n_points) {
    if constexpr (is_exact_v<S>) {
        throw config_error("preset weights require the bigfloat backend");
    } else {
        if (n_points < 2) throw config_error("preset rule needs N >= 2");
        const long p = static_cast<long>(BigFloat::default_precision());
        std::vector<Rational> mu(2 * n_points);
        for (size_t n = 0; n < mu.size(); ++n)
            mu[n] = preset_normalized_moment(preset, static_cast<unsigned>(n));
        mpz_class den = 1;
        mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(p + 64));
        Rational width(mpz_class(1), den);
        auto rule = gauss_rule_from_moments(mu, n_points, width);

        BigFloat scale = preset_pi_scaled(preset) ? BigFloat::pi() : BigFloat(1L);
        std::vector<typename AtomicMeasure<S>::Atom> atoms;
        for (size_t i = 0; i < n_points; ++i)
            atoms.push_back({BigFloat(rule.nodes[i]), BigFloat(rule.weights[i]) * scale});
        return AtomicMeasure<S>::from_atoms(std::move(atoms));
    }
}

} // namespace nikishin

#endif
