#ifndef NIKISHIN_MEASURE_HPP
#define NIKISHIN_MEASURE_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nikishin/rational_function.hpp"

namespace nikishin {

/// Closed interval on the extended real line; either end may be infinite.
template <typename S>
struct ExtendedInterval {
    std::optional<S> lo; // empty = -inf
    std::optional<S> hi; // empty = +inf

    bool contains(const S& x) const {
        if (lo && x < *lo) return false;
        if (hi && *hi < x) return false;
        return true;
    }
    bool bounded() const { return lo && hi; }
};

/// Signed measure supported on finitely many weighted atoms, positions
/// strictly increasing, all weights nonzero with one common sign.
template <typename S>
class AtomicMeasure {
public:
    struct Atom {
        S position;
        S weight;
    };

    AtomicMeasure(std::vector<Atom> atoms, int sign) : atoms_(std::move(atoms)), sign_(sign) {
        if (atoms_.empty()) throw validation_error("measure has no atoms");
        if (sign_ != 1 && sign_ != -1) throw validation_error("sign must be +1 or -1");
        for (size_t i = 0; i < atoms_.size(); ++i) {
            if (i > 0 && !(atoms_[i - 1].position < atoms_[i].position))
                throw validation_error("atom positions must be strictly increasing");
            if (sign_of(atoms_[i].weight) != sign_) throw validation_error("sign violation");
        }
    }

    /// Infers the sign from the first weight.
    static AtomicMeasure from_atoms(std::vector<Atom> atoms) {
        if (atoms.empty()) throw validation_error("measure has no atoms");
        int s = sign_of(atoms.front().weight);
        if (s == 0) throw validation_error("sign violation");
        return AtomicMeasure(std::move(atoms), s);
    }

    const std::vector<Atom>& atoms() const { return atoms_; }
    size_t size() const { return atoms_.size(); }
    int sign() const { return sign_; }

    ExtendedInterval<S> hull() const {
        return {atoms_.front().position, atoms_.back().position};
    }

    bool is_atom(const S& x) const {
        for (const auto& a : atoms_)
            if (a.position == x) return true;
        return false;
    }

    /// Signed total mass.
    S mass() const {
        S m(0);
        for (const auto& a : atoms_) m = m + a.weight;
        return m;
    }

    /// Moment of order nu.
    S moment(unsigned nu) const {
        S m(0);
        for (const auto& a : atoms_) {
            S p(1);
            for (unsigned i = 0; i < nu; ++i) p = p * a.position;
            m = m + a.weight * p;
        }
        return m;
    }

    /// Cauchy transform at z, which must not be an atom position.
    template <typename V>
    V cauchy(const V& z) const {
        V acc{};
        for (const auto& a : atoms_) {
            V d = z - V(a.position);
            if (nikishin::is_zero(d)) throw pole_error();
            acc = acc + V(a.weight) / d;
        }
        return acc;
    }

    /// Exact rational-function form of the Cauchy transform; the denominator
    /// is the monic node polynomial prod (x - position_i).
    RationalFunction<S> cauchy_rational() const {
        Polynomial<S> den = node_polynomial();
        Polynomial<S> num; // sum_i w_i * prod_{j != i} (x - x_j)
        for (size_t i = 0; i < atoms_.size(); ++i) {
            Polynomial<S> term{atoms_[i].weight};
            for (size_t j = 0; j < atoms_.size(); ++j) {
                if (j == i) continue;
                term = term * Polynomial<S>{-atoms_[j].position, S(1)};
            }
            num = num + term;
        }
        return RationalFunction<S>(std::move(num), std::move(den));
    }

    Polynomial<S> node_polynomial() const {
        Polynomial<S> den = Polynomial<S>::one();
        for (const auto& a : atoms_) den = den * Polynomial<S>{-a.position, S(1)};
        return den;
    }

    AtomicMeasure scaled(const S& factor) const {
        int fs = sign_of(factor);
        if (fs == 0) throw validation_error("zero scale factor");
        std::vector<Atom> atoms = atoms_;
        for (auto& a : atoms) a.weight = a.weight * factor;
        return AtomicMeasure(std::move(atoms), fs * sign_);
    }

    friend bool operator==(const AtomicMeasure& a, const AtomicMeasure& b) {
        if (a.sign_ != b.sign_ || a.atoms_.size() != b.atoms_.size()) return false;
        for (size_t i = 0; i < a.atoms_.size(); ++i)
            if (!(a.atoms_[i].position == b.atoms_[i].position &&
                  a.atoms_[i].weight == b.atoms_[i].weight))
                return false;
        return true;
    }

private:
    std::vector<Atom> atoms_;
    int sign_;
};

/// <A, B>: the measure with A's atoms reweighted by the Cauchy transform of
/// B. Well defined when B has no atom at a position of A.
template <typename S>
AtomicMeasure<S> product_of(const AtomicMeasure<S>& a, const AtomicMeasure<S>& b) {
    std::vector<typename AtomicMeasure<S>::Atom> atoms;
    atoms.reserve(a.size());
    for (const auto& atom : a.atoms())
        atoms.push_back({atom.position, atom.weight * b.cauchy(atom.position)});
    return AtomicMeasure<S>::from_atoms(std::move(atoms));
}

/// Iterated product <m_1, m_2, ..., m_r> taken right to left.
template <typename S>
AtomicMeasure<S> chain_product(const std::vector<const AtomicMeasure<S>*>& chain) {
    if (chain.empty()) throw error("empty chain product");
    AtomicMeasure<S> acc = *chain.back();
    for (size_t i = chain.size() - 1; i-- > 0;) acc = product_of(*chain[i], acc);
    return acc;
}

/// Ordered generator measures plus the optional touch point declared between
/// each consecutive pair.
template <typename S>
struct GeneratorChain {
    std::vector<AtomicMeasure<S>> measures;
    std::vector<std::optional<S>> touch_points; // size measures.size()-1 when present

    size_t size() const { return measures.size(); }
};

namespace detail {

template <typename S>
void check_consecutive(const AtomicMeasure<S>& a, const AtomicMeasure<S>& b,
                       const std::optional<S>& touch) {
    auto ha = a.hull(), hb = b.hull();
    // Hull overlap beyond a single point is out, whatever the order.
    const S& a_lo = *ha.lo; const S& a_hi = *ha.hi;
    const S& b_lo = *hb.lo; const S& b_hi = *hb.hi;
    bool a_left = a_hi < b_lo || a_hi == b_lo;
    bool b_left = b_hi < a_lo || b_hi == a_lo;
    if (!a_left && !b_left) throw validation_error("supports overlap");
    if ((a_left && a_hi == b_lo) || (b_left && b_hi == a_lo))
        throw validation_error("mass point at touching point"); // shared hull endpoint is an atom of both
    if (touch) {
        const S& x = *touch;
        if (a.is_atom(x) || b.is_atom(x)) throw validation_error("mass point at touching point");
        bool in_gap = a_left ? (!(x < a_hi) && !(b_lo < x)) : (!(x < b_hi) && !(a_lo < x));
        if (!in_gap) throw validation_error("touch point not between supports");
    }
}

} // namespace detail

/// Record of the hypotheses that are automatic for atomic measures: every
/// iterated product is a finite sum, and all moments exist.
struct ValidationRecord {
    bool products_integrable = true;
    bool moments_finite = true;
};

/// A validated generator chain with its product-measure tables. The cached
/// table pm(j,k) holds <g_j, ..., g_k> as an atomic measure, from which every
/// nested transform and product moment is a single exact sum. Immutable after
/// construction; safe to share across threads.
template <typename S>
class NikishinSystem {
public:
    explicit NikishinSystem(GeneratorChain<S> chain) : chain_(std::move(chain)) {
        const size_t r = chain_.measures.size();
        if (r == 0) throw validation_error("empty generator chain");
        if (!chain_.touch_points.empty() && chain_.touch_points.size() != r - 1)
            throw validation_error("touch point list does not match chain length");
        for (const auto& m : chain_.measures)
            if (m.size() < 2)
                throw validation_error("generator needs at least 2 atoms");
        for (size_t j = 0; j + 1 < r; ++j) {
            std::optional<S> tp;
            if (!chain_.touch_points.empty()) tp = chain_.touch_points[j];
            detail::check_consecutive(chain_.measures[j], chain_.measures[j + 1], tp);
        }
        build_products();
    }

    size_t size() const { return chain_.measures.size(); }
    const AtomicMeasure<S>& generator(size_t j) const { return chain_.measures[j]; }
    const GeneratorChain<S>& chain() const { return chain_; }
    const ValidationRecord& record() const { return record_; }

    /// <g_j, ..., g_k> as a cached atomic measure, 0-based, j <= k.
    const AtomicMeasure<S>& product(size_t j, size_t k) const {
        check_range(j, k);
        return pm_[j][k - j];
    }

    /// Nested transform of <g_j, ..., g_k> at x (off the atoms of g_j).
    template <typename V>
    V transform(size_t j, size_t k, const V& x) const {
        return product(j, k).template cauchy<V>(x);
    }

    /// The transform as an exact rational function; poles are g_j's atoms.
    RationalFunction<S> transform_rational(size_t j, size_t k) const {
        return product(j, k).cauchy_rational();
    }

    /// Moment of order nu of <g_j, ..., g_k>.
    S product_moment(size_t j, size_t k, unsigned nu) const {
        return product(j, k).moment(nu);
    }

    /// Largest index norm the atom counts support (atoms - 1, over all
    /// generators).
    size_t index_budget() const {
        size_t b = chain_.measures.front().size();
        for (const auto& m : chain_.measures) b = std::min(b, m.size());
        return b - 1;
    }

    /// System formed by generators from..end of this chain.
    NikishinSystem sub_chain(size_t from) const {
        check_range(from, size() - 1);
        GeneratorChain<S> c;
        c.measures.assign(chain_.measures.begin() + static_cast<long>(from), chain_.measures.end());
        if (!chain_.touch_points.empty())
            c.touch_points.assign(chain_.touch_points.begin() + static_cast<long>(from),
                                  chain_.touch_points.end());
        return NikishinSystem(std::move(c));
    }

private:
    GeneratorChain<S> chain_;
    std::vector<std::vector<AtomicMeasure<S>>> pm_; // pm_[j][k-j] = <g_j..g_k>
    ValidationRecord record_;

    void check_range(size_t j, size_t k) const {
        if (j > k || k >= size()) throw error("chain index out of range");
    }

    void build_products() {
        const size_t r = size();
        pm_.resize(r);
        for (size_t j = r; j-- > 0;) {
            pm_[j].push_back(chain_.measures[j]);
            for (size_t k = j + 1; k < r; ++k)
                pm_[j].push_back(product_of(chain_.measures[j], pm_[j + 1][k - j - 1]));
        }
    }
};

template <typename S>
NikishinSystem<S> validate_chain(GeneratorChain<S> chain) {
    return NikishinSystem<S>(std::move(chain));
}

} // namespace nikishin

#endif
