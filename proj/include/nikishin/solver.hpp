#ifndef NIKISHIN_SOLVER_HPP
#define NIKISHIN_SOLVER_HPP

#include <optional>
#include <utility>
#include <vector>

#include "nikishin/linalg.hpp"
#include "nikishin/measure.hpp"
#include "nikishin/multiindex.hpp"

namespace nikishin {

/// Two Nikishin systems sharing the same root measure. Holds the tables
/// needed by the mixed-type orthogonality system: the tail transforms of both
/// systems evaluated at the root atoms, and the mixed moments
///   c(j,k,n) = sum_i w_i x_i^n s2_hat_{1,j}(x_i) s1_hat_{1,k}(x_i).
/// Moment tables are filled by ensure_moments() before any parallel phase;
/// afterwards all reads are const.
template <typename S>
class CompatiblePair {
public:
    CompatiblePair(NikishinSystem<S> sys1, NikishinSystem<S> sys2)
        : s1_(std::move(sys1)), s2_(std::move(sys2)) {
        if (!(s1_.generator(0) == s2_.generator(0)))
            throw validation_error("systems do not share the root measure");
        const auto& root = s1_.generator(0);
        const size_t na = root.size();
        v1_.resize(m1() + 1, std::vector<S>(na, S(1)));
        v2_.resize(m2() + 1, std::vector<S>(na, S(1)));
        for (size_t k = 1; k <= m1(); ++k)
            for (size_t i = 0; i < na; ++i)
                v1_[k][i] = s1_.transform(1, k, root.atoms()[i].position);
        for (size_t j = 1; j <= m2(); ++j)
            for (size_t i = 0; i < na; ++i)
                v2_[j][i] = s2_.transform(1, j, root.atoms()[i].position);
        moments_.resize((m1() + 1) * (m2() + 1));
    }

    const NikishinSystem<S>& system1() const { return s1_; }
    const NikishinSystem<S>& system2() const { return s2_; }
    const AtomicMeasure<S>& root() const { return s1_.generator(0); }
    size_t m1() const { return s1_.size() - 1; }
    size_t m2() const { return s2_.size() - 1; }

    /// Tail transform value tables at the root atoms (index 0 is the
    /// constant 1).
    const std::vector<S>& tail1_at_root(size_t k) const { return v1_[k]; }
    const std::vector<S>& tail2_at_root(size_t j) const { return v2_[j]; }

    size_t index_budget() const { return std::min(s1_.index_budget(), s2_.index_budget()); }

    /// Pre-extends every moment table through order max_n (single-threaded).
    void ensure_moments(unsigned max_n) {
        for (size_t j = 0; j <= m2(); ++j)
            for (size_t k = 0; k <= m1(); ++k) {
                auto& table = moments_[j * (m1() + 1) + k];
                while (table.size() <= max_n) {
                    unsigned n = static_cast<unsigned>(table.size());
                    S acc(0);
                    const auto& atoms = root().atoms();
                    for (size_t i = 0; i < atoms.size(); ++i) {
                        S p(1);
                        for (unsigned t = 0; t < n; ++t) p = p * atoms[i].position;
                        acc = acc + atoms[i].weight * p * v2_[j][i] * v1_[k][i];
                    }
                    table.push_back(acc);
                }
            }
    }

    const S& moment(size_t j, size_t k, unsigned n) const {
        const auto& table = moments_[j * (m1() + 1) + k];
        if (n >= table.size()) throw error("moment table not prefilled");
        return table[n];
    }

private:
    NikishinSystem<S> s1_;
    NikishinSystem<S> s2_;
    std::vector<std::vector<S>> v1_, v2_;
    std::vector<std::vector<S>> moments_;
};

/// Mixed-type solution: the vector polynomial plus solve diagnostics.
template <typename S>
struct MixedSolution {
    CombinedIndex index;
    std::vector<Polynomial<S>> a; // size m1+1
    int kernel_dim = 0;

    /// Scalar form value a_0(x) + sum_k a_k(x) * tail1[k](x) at root atom i,
    /// using the pair's cached tables.
    S form_at_root_atom(const CompatiblePair<S>& pair, size_t i) const {
        const S& x = pair.root().atoms()[i].position;
        S acc(0);
        for (size_t k = 0; k < a.size(); ++k) {
            if (a[k].is_zero()) continue;
            acc = acc + a[k].eval(x) * pair.tail1_at_root(k)[i];
        }
        return acc;
    }
};

namespace detail {

template <typename S>
Matrix<S> moment_matrix(const CompatiblePair<S>& pair, const CombinedIndex& n) {
    const auto& n1 = n.n1.components();
    const auto& n2 = n.n2.components();
    size_t rows = static_cast<size_t>(n.n2.norm());
    size_t cols = static_cast<size_t>(n.n1.norm());
    Matrix<S> m(rows, cols);
    size_t row = 0;
    for (size_t j = 0; j < n2.size(); ++j)
        for (int nu = 0; nu < n2[j]; ++nu, ++row) {
            size_t col = 0;
            for (size_t k = 0; k < n1.size(); ++k)
                for (int r = 0; r < n1[k]; ++r, ++col)
                    m.at(row, col) = pair.moment(j, k, static_cast<unsigned>(nu + r));
        }
    return m;
}

template <typename S>
std::vector<Polynomial<S>> unpack_coefficients(const std::vector<S>& v, const MultiIndex& n1) {
    std::vector<Polynomial<S>> a;
    size_t pos = 0;
    for (size_t k = 0; k < n1.size(); ++k) {
        std::vector<S> coeffs;
        for (int r = 0; r < n1[static_cast<size_t>(k)]; ++r) coeffs.push_back(v[pos++]);
        a.emplace_back(std::move(coeffs));
    }
    return a;
}

// Normalization: the highest-index nonzero component is made monic.
template <typename S>
void normalize_solution(std::vector<Polynomial<S>>& a) {
    for (size_t k = a.size(); k-- > 0;) {
        if (a[k].is_zero()) continue;
        S lead = a[k].leading();
        for (auto& p : a) p = p / lead;
        return;
    }
}

} // namespace detail

/// Solves the mixed-type problem at the given combined index: the coefficient
/// vector spans the kernel of the |n2| x |n1| mixed moment matrix. When the
/// kernel is one-dimensional the solution is normalized so the highest-index
/// nonzero component is monic. A kernel dimension above 1 is reported, not
/// thrown. The optional row order permutes the equations (used to confirm
/// solver-order independence).
template <typename S>
MixedSolution<S> solve_mixed(CompatiblePair<S>& pair, const CombinedIndex& n,
                             const std::vector<size_t>* row_order = nullptr) {
    if (n.n1.size() != pair.m1() + 1 || n.n2.size() != pair.m2() + 1)
        throw error("index length does not match the pair");
    pair.ensure_moments(static_cast<unsigned>(2 * n.n1.norm()));
    Matrix<S> m = detail::moment_matrix(pair, n);
    if (row_order) {
        if (row_order->size() != m.rows()) throw error("bad row order");
        Matrix<S> p(m.rows(), m.cols());
        for (size_t r = 0; r < m.rows(); ++r)
            for (size_t c = 0; c < m.cols(); ++c) p.at(r, c) = m.at((*row_order)[r], c);
        m = std::move(p);
    }
    auto basis = nullspace(std::move(m));
    if (basis.empty()) throw error("kernel dimension zero: moment matrix assembly bug");
    MixedSolution<S> sol{n, detail::unpack_coefficients(basis[0], n.n1),
                         static_cast<int>(basis.size())};
    detail::normalize_solution(sol.a);
    return sol;
}

/// Per-equation orthogonality residuals of a solution, recomputed directly
/// from the moment tables. On the exact backend `exact_zero` certifies that
/// every residual is identically 0; on the big-float backend `max_relative`
/// is the largest residual magnitude relative to the largest term in its sum.
template <typename S>
struct ResidualReport {
    bool exact_zero = true;
    BigFloat max_relative = BigFloat(0L);
};

template <typename S>
ResidualReport<S> orthogonality_residuals(const CompatiblePair<S>& pair,
                                          const MixedSolution<S>& sol) {
    ResidualReport<S> rep;
    const auto& n1 = sol.index.n1.components();
    const auto& n2 = sol.index.n2.components();
    for (size_t j = 0; j < n2.size(); ++j)
        for (int nu = 0; nu < n2[j]; ++nu) {
            S acc(0);
            S biggest(0);
            for (size_t k = 0; k < n1.size(); ++k)
                for (int r = 0; r < n1[k]; ++r) {
                    S term = sol.a[k].coeff(r) * pair.moment(j, k, static_cast<unsigned>(nu + r));
                    acc = acc + term;
                    if (abs_of(term) > biggest) biggest = abs_of(term);
                }
            if (!is_zero(acc)) rep.exact_zero = false;
            if constexpr (!is_exact_v<S>) {
                if (!is_zero(biggest)) {
                    BigFloat rel = (abs_of(acc) / biggest);
                    if (rel > rep.max_relative) rep.max_relative = rel;
                }
            }
        }
    return rep;
}

struct NormalityReport {
    bool normal = false;
    int kernel_dim = 0;
    std::vector<int> degrees;
};

namespace detail {

// Full-degree test. Exact backend: the stored degree is the truth. Big-float
// backend: the leading coefficient must clear 2^(-p/2) relative to the
// largest coefficient of its polynomial.
template <typename S>
bool attains_degree(const Polynomial<S>& p, int required) {
    if (required < 0) return p.is_zero();
    if (p.degree() != required) return false;
    if constexpr (!is_exact_v<S>) {
        S biggest(0);
        for (const auto& c : p.coeffs())
            if (abs_of(c) > biggest) biggest = abs_of(c);
        return abs_of(p.leading()) >=
               S::pow2(-static_cast<long>(S::default_precision() / 2)) * biggest;
    }
    return true;
}

} // namespace detail

template <typename S>
NormalityReport normality_check(const MixedSolution<S>& sol) {
    NormalityReport rep;
    rep.kernel_dim = sol.kernel_dim;
    bool full = true;
    for (size_t k = 0; k < sol.a.size(); ++k) {
        rep.degrees.push_back(sol.a[k].degree());
        if (!detail::attains_degree(sol.a[k], sol.index.n1[k] - 1)) full = false;
    }
    rep.normal = (sol.kernel_dim == 1) && full;
    return rep;
}

/// Root-only view of a system: the trivial Nikishin system (root measure
/// alone) used to express type I / type II problems as mixed ones.
template <typename S>
NikishinSystem<S> root_only(const NikishinSystem<S>& sys) {
    GeneratorChain<S> c;
    c.measures = {sys.generator(0)};
    return NikishinSystem<S>(std::move(c));
}

/// Type II solution: common denominator Q, the polynomial parts P_k of
/// Q * s_hat_{0,k}, and the exact vanishing order of each remainder at
/// infinity (empty optional = remainder identically zero). Remainder data is
/// produced on the exact backend only.
template <typename S>
struct TypeIISolution {
    MultiIndex index;
    Polynomial<S> q;
    std::vector<Polynomial<S>> p;
    std::vector<std::optional<int>> remainder_orders;
    int kernel_dim = 0;
};

template <typename S>
TypeIISolution<S> solve_type2(const NikishinSystem<S>& sys, const MultiIndex& n) {
    if (n.size() != sys.size()) throw error("index length does not match the system");
    CompatiblePair<S> pair(root_only(sys), sys);
    CombinedIndex cn(MultiIndex({n.norm() + 1}), n);
    auto sol = solve_mixed(pair, cn);
    TypeIISolution<S> out{n, sol.a[0], {}, {}, sol.kernel_dim};
    if constexpr (is_exact_v<S>) {
        for (size_t k = 0; k < sys.size(); ++k) {
            auto sk = sys.transform_rational(0, k);
            auto [pk, rem] =
                RationalFunction<S>(out.q * sk.num(), sk.den()).split();
            out.p.push_back(std::move(pk));
            out.remainder_orders.push_back(rem.is_zero() ? std::optional<int>{}
                                                         : rem.order_at_infinity());
        }
    }
    return out;
}

/// Type I solution: the vector polynomial a_0..a_m, the subtracted polynomial
/// b, and the exact order at infinity of sum_j a_j s_hat_{0,j} - b.
template <typename S>
struct TypeISolution {
    MultiIndex index;
    std::vector<Polynomial<S>> a;
    Polynomial<S> b;
    std::optional<int> remainder_order; // empty = identically zero remainder
    int kernel_dim = 0;
};

template <typename S>
TypeISolution<S> solve_type1(const NikishinSystem<S>& sys, const MultiIndex& n) {
    if (n.size() != sys.size()) throw error("index length does not match the system");
    if (n.norm() < 1) throw error("type I requires |n| >= 1");
    CompatiblePair<S> pair(sys, root_only(sys));
    CombinedIndex cn(n, MultiIndex({n.norm() - 1}));
    auto sol = solve_mixed(pair, cn);
    TypeISolution<S> out{n, sol.a, {}, {}, sol.kernel_dim};
    if constexpr (is_exact_v<S>) {
        Polynomial<S> num;
        Polynomial<S> den = sys.generator(0).node_polynomial();
        for (size_t j = 0; j < sys.size(); ++j) {
            if (out.a[j].is_zero()) continue;
            num = num + out.a[j] * sys.transform_rational(0, j).num();
        }
        auto [b, rem] = RationalFunction<S>(num, den).split();
        out.b = std::move(b);
        out.remainder_order =
            rem.is_zero() ? std::optional<int>{} : rem.order_at_infinity();
    }
    return out;
}

template <typename S>
NormalityReport normality_check(const TypeIISolution<S>& sol) {
    NormalityReport rep;
    rep.kernel_dim = sol.kernel_dim;
    rep.degrees.push_back(sol.q.degree());
    rep.normal = (sol.kernel_dim == 1) && detail::attains_degree(sol.q, sol.index.norm());
    return rep;
}

template <typename S>
NormalityReport normality_check(const TypeISolution<S>& sol) {
    NormalityReport rep;
    rep.kernel_dim = sol.kernel_dim;
    bool full = true;
    for (size_t j = 0; j < sol.a.size(); ++j) {
        rep.degrees.push_back(sol.a[j].degree());
        if (!detail::attains_degree(sol.a[j], sol.index[j] - 1)) full = false;
    }
    rep.normal = (sol.kernel_dim == 1) && full;
    return rep;
}

/// The Markov-type matrix function evaluated entrywise at real z:
/// entry (j,k) = sum_i w_i tail2[j](x_i) tail1[k](x_i) / (z - x_i).
template <typename S>
Matrix<S> markov_matrix_eval(const CompatiblePair<S>& pair, const S& z) {
    const auto& atoms = pair.root().atoms();
    Matrix<S> out(pair.m2() + 1, pair.m1() + 1);
    for (const auto& a : atoms)
        if (a.position == z) throw pole_error();
    for (size_t j = 0; j <= pair.m2(); ++j)
        for (size_t k = 0; k <= pair.m1(); ++k) {
            S acc(0);
            for (size_t i = 0; i < atoms.size(); ++i)
                acc = acc + atoms[i].weight * pair.tail2_at_root(j)[i] *
                                pair.tail1_at_root(k)[i] / (z - atoms[i].position);
            out.at(j, k) = acc;
        }
    return out;
}

/// Entry (j,k) of the Markov matrix as an exact rational function of z.
template <typename S>
RationalFunction<S> markov_entry_rational(const CompatiblePair<S>& pair, size_t j, size_t k) {
    static_assert(is_exact_v<S>);
    const auto& atoms = pair.root().atoms();
    std::vector<typename AtomicMeasure<S>::Atom> scaled;
    for (size_t i = 0; i < atoms.size(); ++i)
        scaled.push_back(
            {atoms[i].position, atoms[i].weight * pair.tail2_at_root(j)[i] * pair.tail1_at_root(k)[i]});
    return AtomicMeasure<S>::from_atoms(std::move(scaled)).cauchy_rational();
}

/// Independent small-instance route: the same homogeneous system assembled by
/// extracting Laurent coefficients of the Markov entries at infinity, instead
/// of summing moments. Kept as an oracle for the moment-matrix solver.
template <typename S>
Matrix<S> series_matching_matrix(const CompatiblePair<S>& pair, const CombinedIndex& n) {
    static_assert(is_exact_v<S>);
    const auto& n1 = n.n1.components();
    const auto& n2 = n.n2.components();
    size_t rows = static_cast<size_t>(n.n2.norm());
    size_t cols = static_cast<size_t>(n.n1.norm());
    Matrix<S> m(rows, cols);
    size_t row = 0;
    for (size_t j = 0; j < n2.size(); ++j) {
        if (n2[j] == 0) continue;
        std::vector<std::vector<S>> series_by_k;
        for (size_t k = 0; k < n1.size(); ++k) {
            int depth = n2[j] + std::max(0, n1[k] - 1) + 1;
            series_by_k.push_back(
                markov_entry_rational(pair, j, k).expansion_at_infinity(depth));
        }
        for (int nu = 0; nu < n2[j]; ++nu, ++row) {
            size_t col = 0;
            for (size_t k = 0; k < n1.size(); ++k)
                for (int r = 0; r < n1[k]; ++r, ++col)
                    m.at(row, col) = series_by_k[k][static_cast<size_t>(nu + r)];
        }
    }
    return m;
}

} // namespace nikishin

#endif
