#ifndef NIKISHIN_POLYNOMIAL_HPP
#define NIKISHIN_POLYNOMIAL_HPP

#include <algorithm>
#include <initializer_list>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "nikishin/scalar.hpp"

namespace nikishin {

/// Dense univariate polynomial, coefficients lowest degree first, canonical
/// form (no stored trailing zeros). The zero polynomial has degree -1.
template <typename S>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<S> coeffs) : c_(coeffs) { trim(); }
    explicit Polynomial(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }
    explicit Polynomial(S constant) : c_{std::move(constant)} { trim(); }

    static Polynomial zero() { return {}; }
    static Polynomial one() { return Polynomial{S(1)}; }
    /// The monomial x.
    static Polynomial x() { return Polynomial{S(0), S(1)}; }
    /// c * x^k
    static Polynomial monomial(S c, int k) {
        std::vector<S> v(static_cast<size_t>(k) + 1, S(0));
        v[static_cast<size_t>(k)] = std::move(c);
        return Polynomial(std::move(v));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<S>& coeffs() const { return c_; }

    /// Coefficient of x^k; zero outside the stored range.
    S coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return S(0);
        return c_[static_cast<size_t>(k)];
    }
    S leading() const { return is_zero() ? S(0) : c_.back(); }

    template <typename V>
    V eval(const V& x) const {
        V acc{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + V(*it);
        return acc;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<S> d(c_.size() - 1);
        for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * S(static_cast<long>(k));
        return Polynomial(std::move(d));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<S> r(std::max(a.c_.size(), b.c_.size()), S(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<S> r(std::max(a.c_.size(), b.c_.size()), S(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] - b.c_[i];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<S> r(a.c_.size() + b.c_.size() - 1, S(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        return Polynomial(std::move(r));
    }
    Polynomial operator-() const {
        std::vector<S> r(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const S& s, const Polynomial& p) {
        std::vector<S> r(p.c_.size());
        for (size_t i = 0; i < p.c_.size(); ++i) r[i] = s * p.c_[i];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const Polynomial& p, const S& s) { return s * p; }
    friend Polynomial operator/(const Polynomial& p, const S& s) {
        if (nikishin::is_zero(s)) throw error("division by zero scalar");
        std::vector<S> r(p.c_.size());
        for (size_t i = 0; i < p.c_.size(); ++i) r[i] = p.c_[i] / s;
        return Polynomial(std::move(r));
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }

    /// Euclidean division: *this = q*d + r with deg r < deg d.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
        if (d.is_zero()) throw error("polynomial division by zero");
        Polynomial r = *this;
        if (r.degree() < d.degree()) return {Polynomial{}, r};
        std::vector<S> q(static_cast<size_t>(r.degree() - d.degree()) + 1, S(0));
        const S lead = d.leading();
        while (!r.is_zero() && r.degree() >= d.degree()) {
            int shift = r.degree() - d.degree();
            S f = r.leading() / lead;
            q[static_cast<size_t>(shift)] = f;
            // r -= f * x^shift * d
            for (int i = 0; i <= d.degree(); ++i) {
                size_t idx = static_cast<size_t>(i + shift);
                r.c_[idx] = r.c_[idx] - f * d.c_[static_cast<size_t>(i)];
            }
            r.c_.pop_back(); // leading term cancels exactly
            r.trim();
        }
        return {Polynomial(std::move(q)), r};
    }

    Polynomial monic() const {
        if (is_zero()) return {};
        return *this / leading();
    }

    std::string str() const {
        if (is_zero()) return "";
        std::string out;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (i) out += ", ";
            out += to_string(c_[i]);
        }
        return out;
    }

private:
    std::vector<S> c_;

    void trim() {
        while (!c_.empty() && nikishin::is_zero(c_.back())) c_.pop_back();
    }
};

/// Monic gcd by the Euclidean algorithm. Exact backend only.
template <typename S>
Polynomial<S> gcd(Polynomial<S> a, Polynomial<S> b) {
    static_assert(is_exact_v<S>, "polynomial gcd requires the exact backend");
    while (!b.is_zero()) {
        auto [q, r] = a.divmod(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Extended gcd: returns (g, u, v) with u*a + v*b = g, g monic.
template <typename S>
std::tuple<Polynomial<S>, Polynomial<S>, Polynomial<S>> extended_gcd(const Polynomial<S>& a,
                                                                     const Polynomial<S>& b) {
    static_assert(is_exact_v<S>);
    Polynomial<S> r0 = a, r1 = b;
    Polynomial<S> u0 = Polynomial<S>::one(), u1;
    Polynomial<S> v0, v1 = Polynomial<S>::one();
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        Polynomial<S> u2 = u0 - q * u1;
        Polynomial<S> v2 = v0 - q * v1;
        r0 = std::move(r1); r1 = std::move(r);
        u0 = std::move(u1); u1 = std::move(u2);
        v0 = std::move(v1); v1 = std::move(v2);
    }
    if (r0.is_zero()) return {r0, u0, v0};
    S lead = r0.leading();
    return {r0 / lead, u0 / lead, v0 / lead};
}

template <typename S>
Polynomial<S> squarefree_part(const Polynomial<S>& p) {
    static_assert(is_exact_v<S>);
    if (p.degree() <= 0) return p.is_zero() ? p : Polynomial<S>::one();
    auto g = gcd(p, p.derivative());
    if (g.degree() == 0) return p;
    return p.divmod(g).first;
}

/// Yun's square-free decomposition: p = lc * prod f_i^i with the f_i monic,
/// square-free and pairwise coprime. Returns the list (f_1, f_2, ...).
template <typename S>
std::vector<Polynomial<S>> squarefree_decomposition(const Polynomial<S>& p) {
    static_assert(is_exact_v<S>);
    std::vector<Polynomial<S>> out;
    if (p.degree() <= 0) return out;
    Polynomial<S> a = p.monic();
    Polynomial<S> b = a.derivative();
    Polynomial<S> g = gcd(a, b);
    Polynomial<S> c = a.divmod(g).first;
    Polynomial<S> d = b.divmod(g).first - c.derivative();
    while (c.degree() > 0) {
        Polynomial<S> f = gcd(c, d);
        out.push_back(f);
        c = c.divmod(f).first;
        d = d.divmod(f).first - c.derivative();
    }
    return out;
}

/// Clears denominators and content: returns c*p with c > 0 rational chosen so
/// the result has coprime integer coefficients. Sign is preserved.
inline Polynomial<Rational> integer_primitive(const Polynomial<Rational>& p) {
    if (p.is_zero()) return p;
    mpz_class den_lcm = 1, num_gcd = 0;
    for (const auto& c : p.coeffs()) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    std::vector<Rational> scaled(p.coeffs().size());
    for (size_t i = 0; i < scaled.size(); ++i) {
        scaled[i] = p.coeffs()[i] * Rational(den_lcm);
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled[i].get_num().get_mpz_t());
    }
    if (num_gcd == 0) num_gcd = 1;
    for (auto& c : scaled) c /= Rational(num_gcd);
    return Polynomial<Rational>(std::move(scaled));
}

} // namespace nikishin

#endif
