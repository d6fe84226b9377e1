#ifndef NIKISHIN_SCALAR_HPP
#define NIKISHIN_SCALAR_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdint>
#include <string>
#include <utility>

#include "nikishin/error.hpp"

namespace nikishin {

/// Exact rational scalar: arbitrary-precision fraction, always canonical
/// (denominator > 0, lowest terms).
using Rational = mpq_class;

inline Rational rational_from_string(const std::string& s) {
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw config_error("invalid rational literal: " + s);
    if (q.get_den() == 0) throw config_error("zero denominator: " + s);
    q.canonicalize();
    return q;
}

/// Big-float scalar backed by MPFR. Precision is fixed per computation run
/// (set once before constructing any values) and expressed in bits.
class BigFloat {
public:
    static unsigned default_precision() { return default_bits_; }
    static void set_default_precision(unsigned bits) {
        if (bits < 64) throw config_error("big-float precision must be >= 64 bits");
        default_bits_ = bits;
    }

    BigFloat() { mpfr_init2(v_, default_bits_); mpfr_set_zero(v_, 1); }
    BigFloat(long n) : BigFloat() { mpfr_set_si(v_, n, MPFR_RNDN); }
    BigFloat(int n) : BigFloat(static_cast<long>(n)) {}
    BigFloat(double d) : BigFloat() { mpfr_set_d(v_, d, MPFR_RNDN); }
    BigFloat(const Rational& q) : BigFloat() { mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN); }

    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, 64);
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(BigFloat o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat from_string(const std::string& s) {
        // Accepts decimal strings and, for convenience, "p/q" rationals.
        if (s.find('/') != std::string::npos) return BigFloat(rational_from_string(s));
        BigFloat x;
        if (mpfr_set_str(x.v_, s.c_str(), 10, MPFR_RNDN) != 0)
            throw config_error("invalid big-float literal: " + s);
        return x;
    }

    /// 2^e, exact.
    static BigFloat pow2(long e) {
        BigFloat x(1L);
        mpfr_mul_2si(x.v_, x.v_, e, MPFR_RNDN);
        return x;
    }
    static BigFloat pi() {
        BigFloat x;
        mpfr_const_pi(x.v_, MPFR_RNDN);
        return x;
    }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r; mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r; mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r; mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        BigFloat r; mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
    }
    BigFloat operator-() const {
        BigFloat r; mpfr_neg(r.v_, v_, MPFR_RNDN); return r;
    }
    BigFloat& operator+=(const BigFloat& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigFloat& operator-=(const BigFloat& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigFloat& operator*=(const BigFloat& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigFloat& operator/=(const BigFloat& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    BigFloat abs() const { BigFloat r; mpfr_abs(r.v_, v_, MPFR_RNDN); return r; }
    BigFloat log() const { BigFloat r; mpfr_log(r.v_, v_, MPFR_RNDN); return r; }
    BigFloat exp() const { BigFloat r; mpfr_exp(r.v_, v_, MPFR_RNDN); return r; }
    BigFloat sqrt() const { BigFloat r; mpfr_sqrt(r.v_, v_, MPFR_RNDN); return r; }
    BigFloat pow_ui(unsigned long e) const {
        BigFloat r; mpfr_pow_ui(r.v_, v_, e, MPFR_RNDN); return r;
    }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    /// Shortest decimal string that reproduces the value at this precision.
    std::string str() const {
        if (mpfr_nan_p(v_)) return "nan";
        if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
        if (mpfr_zero_p(v_)) return "0";
        mpfr_exp_t exp;
        char* raw = mpfr_get_str(nullptr, &exp, 10, 0, v_, MPFR_RNDN);
        std::string digits(raw);
        mpfr_free_str(raw);
        std::string sign;
        if (digits[0] == '-') { sign = "-"; digits.erase(0, 1); }
        while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
        std::string mant = digits.substr(0, 1);
        if (digits.size() > 1) mant += "." + digits.substr(1);
        return sign + mant + "e" + std::to_string(static_cast<long>(exp) - 1);
    }

    mpfr_srcptr raw() const { return v_; }

private:
    mpfr_t v_;
    inline static unsigned default_bits_ = 256;
};

inline int sign_of(const Rational& q) { return mpq_sgn(q.get_mpq_t()); }
inline int sign_of(const BigFloat& x) { return x.sign(); }

inline Rational abs_of(const Rational& q) { return abs(q); }
inline BigFloat abs_of(const BigFloat& x) { return x.abs(); }

inline bool is_zero(const Rational& q) { return sign_of(q) == 0; }
inline bool is_zero(const BigFloat& x) { return x.is_zero(); }

template <typename S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static constexpr bool exact = true;
    static Rational from_string(const std::string& s) { return rational_from_string(s); }
    static std::string to_string(const Rational& q) { return q.get_str(); }
    static BigFloat to_bigfloat(const Rational& q) { return BigFloat(q); }
    static Rational from_rational(const Rational& q) { return q; }
};

template <>
struct scalar_traits<BigFloat> {
    static constexpr bool exact = false;
    static BigFloat from_string(const std::string& s) { return BigFloat::from_string(s); }
    static std::string to_string(const BigFloat& x) { return x.str(); }
    static BigFloat to_bigfloat(const BigFloat& x) { return x; }
    static BigFloat from_rational(const Rational& q) { return BigFloat(q); }
};

template <typename S>
inline constexpr bool is_exact_v = scalar_traits<S>::exact;

template <typename S>
std::string to_string(const S& x) { return scalar_traits<S>::to_string(x); }

/// Complex value over either scalar backend; only the arithmetic needed for
/// Cauchy-transform evaluation at complex sample points.
template <typename S>
struct Complex {
    S re{};
    S im{};

    Complex() = default;
    Complex(S r) : re(std::move(r)) {}
    Complex(S r, S i) : re(std::move(r)), im(std::move(i)) {}

    bool is_real() const { return nikishin::is_zero(im); }

    friend Complex operator+(const Complex& a, const Complex& b) {
        return {S(a.re + b.re), S(a.im + b.im)};
    }
    friend Complex operator-(const Complex& a, const Complex& b) {
        return {S(a.re - b.re), S(a.im - b.im)};
    }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {S(a.re * b.re - a.im * b.im), S(a.re * b.im + a.im * b.re)};
    }
    friend Complex operator/(const Complex& a, const Complex& b) {
        S n = b.re * b.re + b.im * b.im;
        if (nikishin::is_zero(n)) throw error("complex division by zero");
        return {S((a.re * b.re + a.im * b.im) / n), S((a.im * b.re - a.re * b.im) / n)};
    }
    friend Complex operator-(const Complex& a) { return {S(-a.re), S(-a.im)}; }
    friend bool operator==(const Complex& a, const Complex& b) {
        return a.re == b.re && a.im == b.im;
    }
};

template <typename S>
bool is_zero(const Complex<S>& z) { return is_zero(z.re) && is_zero(z.im); }

} // namespace nikishin

#endif
