#ifndef NIKISHIN_MULTIINDEX_HPP
#define NIKISHIN_MULTIINDEX_HPP

#include <numeric>
#include <string>
#include <vector>

#include "nikishin/error.hpp"

namespace nikishin {

/// Multi-index (n_0, ..., n_m) of non-negative integers.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> comps) : c_(std::move(comps)) {
        for (int v : c_)
            if (v < 0) throw error("multi-index components must be non-negative");
    }

    const std::vector<int>& components() const { return c_; }
    size_t size() const { return c_.size(); }
    int operator[](size_t i) const { return c_[i]; }
    int norm() const { return std::accumulate(c_.begin(), c_.end(), 0); }
    bool is_zero() const { return norm() == 0; }

    /// Componentwise <=.
    bool dominated_by(const MultiIndex& o) const {
        if (c_.size() != o.c_.size()) return false;
        for (size_t i = 0; i < c_.size(); ++i)
            if (c_[i] > o.c_[i]) return false;
        return true;
    }

    MultiIndex bumped(size_t slot) const {
        std::vector<int> c = c_;
        c.at(slot) += 1;
        return MultiIndex(std::move(c));
    }

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.c_ == b.c_; }
    friend bool operator<(const MultiIndex& a, const MultiIndex& b) { return a.c_ < b.c_; }

    std::string str() const {
        std::string out = "(";
        for (size_t i = 0; i < c_.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(c_[i]);
        }
        return out + ")";
    }

private:
    std::vector<int> c_;
};

/// Index pair driving a mixed-type problem; |n1| = |n2| + 1.
struct CombinedIndex {
    MultiIndex n1;
    MultiIndex n2;

    CombinedIndex(MultiIndex a, MultiIndex b) : n1(std::move(a)), n2(std::move(b)) {
        if (n1.norm() != n2.norm() + 1) throw error("combined index requires |n1| = |n2| + 1");
    }

    std::string str() const { return n1.str() + ";" + n2.str(); }
    friend bool operator==(const CombinedIndex& a, const CombinedIndex& b) {
        return a.n1 == b.n1 && a.n2 == b.n2;
    }
};

struct IndexClass {
    bool decreasing;
    bool star;
};

/// Literal evaluation of the two index classes: non-increasing components,
/// and absence of any i < j < k with n_i < n_j <= n_k.
inline IndexClass classify_multiindex(const MultiIndex& n) {
    IndexClass out{true, true};
    const auto& c = n.components();
    for (size_t i = 0; i + 1 < c.size(); ++i)
        if (c[i] < c[i + 1]) out.decreasing = false;
    for (size_t i = 0; i < c.size() && out.star; ++i)
        for (size_t j = i + 1; j < c.size() && out.star; ++j)
            for (size_t k = j + 1; k < c.size(); ++k)
                if (c[i] < c[j] && c[j] <= c[k]) {
                    out.star = false;
                    break;
                }
    return out;
}

/// All (parts)-tuples of non-negative integers summing to total, in
/// lexicographically ascending order.
inline std::vector<MultiIndex> compositions(int total, size_t parts) {
    std::vector<MultiIndex> out;
    std::vector<int> cur(parts, 0);
    auto rec = [&](auto&& self, size_t pos, int rest) -> void {
        if (pos + 1 == parts) {
            cur[pos] = rest;
            out.emplace_back(cur);
            return;
        }
        for (int v = 0; v <= rest; ++v) {
            cur[pos] = v;
            self(self, pos + 1, rest - v);
        }
    };
    if (parts == 0) {
        if (total == 0) out.emplace_back(std::vector<int>{});
        return out;
    }
    rec(rec, 0, total);
    return out;
}

/// Graded lexicographic enumeration of all combined indices with
/// 1 <= |n1| <= budget.
inline std::vector<CombinedIndex> enumerate_combined(size_t m1, size_t m2, int budget) {
    std::vector<CombinedIndex> out;
    for (int t = 1; t <= budget; ++t)
        for (const auto& n1 : compositions(t, m1 + 1))
            for (const auto& n2 : compositions(t - 1, m2 + 1)) out.emplace_back(n1, n2);
    return out;
}

/// Checks Corollary-style completeness: norms 1, 2, ... in order and each
/// index componentwise dominated by the next.
inline bool is_complete_sequence(const std::vector<MultiIndex>& seq) {
    for (size_t t = 0; t < seq.size(); ++t) {
        if (seq[t].norm() != static_cast<int>(t) + 1) return false;
        if (t > 0 && !seq[t - 1].dominated_by(seq[t])) return false;
    }
    return !seq.empty();
}

/// The balanced near-diagonal sequence: components as equal as possible,
/// filled from the left. Norms run 1..max_norm.
inline std::vector<MultiIndex> balanced_diagonal(size_t parts, int max_norm) {
    std::vector<MultiIndex> out;
    for (int t = 1; t <= max_norm; ++t) {
        std::vector<int> c(parts, t / static_cast<int>(parts));
        int rem = t % static_cast<int>(parts);
        for (int i = 0; i < rem; ++i) c[static_cast<size_t>(i)] += 1;
        out.emplace_back(std::move(c));
    }
    return out;
}

inline MultiIndex parse_multiindex(const std::string& s) {
    std::vector<int> c;
    std::string cur;
    for (char ch : s) {
        if (ch == ',' || ch == ' ') {
            if (!cur.empty()) c.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) c.push_back(std::stoi(cur));
    if (c.empty()) throw config_error("empty multi-index: " + s);
    return MultiIndex(std::move(c));
}

} // namespace nikishin

#endif
