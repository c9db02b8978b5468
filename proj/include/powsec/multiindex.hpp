#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace powsec {

/// Exponent vector of a monomial in (#vars) variables. The canonical
/// indexing object for every monomial basis in the library: all matrices
/// index their rows and columns by graded-lex position of a MultiIndex.
class MultiIndex {
public:
    MultiIndex() = default;

    explicit MultiIndex(std::vector<int> exps)
        : exps_(std::move(exps)),
          degree_(std::accumulate(exps_.begin(), exps_.end(), 0)) {
        for (int e : exps_)
            if (e < 0) throw std::invalid_argument("MultiIndex: negative exponent");
    }

    const std::vector<int>& exponents() const { return exps_; }
    int degree() const { return degree_; }
    std::size_t vars() const { return exps_.size(); }
    int operator[](std::size_t i) const { return exps_[i]; }

    bool operator==(const MultiIndex& o) const { return exps_ == o.exps_; }
    bool operator!=(const MultiIndex& o) const { return exps_ != o.exps_; }

    /// Graded-lex total order. Lower degree first; within a degree the
    /// exponent vectors are listed lexicographically decreasing, so that
    /// e.g. for two variables of degree 2: (2,0) < (1,1) < (0,2).
    bool operator<(const MultiIndex& o) const {
        if (degree_ != o.degree_) return degree_ < o.degree_;
        return exps_ > o.exps_;
    }

    /// Componentwise sum (product of the underlying monomials).
    MultiIndex operator+(const MultiIndex& o) const {
        if (vars() != o.vars()) throw std::invalid_argument("MultiIndex: vars mismatch");
        std::vector<int> e(exps_);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += o.exps_[i];
        return MultiIndex(std::move(e));
    }

private:
    std::vector<int> exps_;
    int degree_ = 0;
};

struct MultiIndexHash {
    std::size_t operator()(const MultiIndex& m) const {
        std::size_t h = 1469598103934665603ull;
        for (int e : m.exponents()) {
            h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

/// All multi-indices of the given degree in vars_minus_one+1 variables, in
/// graded-lex order (lexicographically decreasing exponent vectors), no
/// duplicates. Length is C(n+degree, n).
inline std::vector<MultiIndex> enumerate_monomials(int vars_minus_one, int degree) {
    if (vars_minus_one < 0 || degree < 0)
        throw std::invalid_argument("enumerate_monomials: negative arguments");
    const std::size_t n = static_cast<std::size_t>(vars_minus_one);
    std::vector<MultiIndex> out;
    std::vector<int> cur(n + 1, 0);
    cur[0] = degree;
    for (;;) {
        out.emplace_back(cur);
        // Next vector in decreasing-lex order: move one unit from the
        // rightmost movable position and flush everything after it.
        int tail = cur[n];
        std::size_t j = n;
        bool found = false;
        while (j-- > 0) {
            if (cur[j] > 0) { found = true; break; }
        }
        if (!found) break;
        cur[j] -= 1;
        cur[j + 1] = tail + 1;
        for (std::size_t i = j + 2; i <= n; ++i) cur[i] = 0;
        if (j + 1 != n) cur[n] = 0;
    }
    return out;
}

/// C(n+b, n) as a machine integer, for sizing matrices. Throws on overflow;
/// formula-level counts that may be huge go through binomial.hpp instead.
inline std::size_t monomial_count(int vars_minus_one, int degree) {
    if (vars_minus_one < 0 || degree < 0)
        throw std::invalid_argument("monomial_count: negative arguments");
    unsigned __int128 r = 1;
    for (int i = 1; i <= vars_minus_one; ++i) {
        r = r * static_cast<unsigned __int128>(degree + i) / static_cast<unsigned>(i);
        if (r > static_cast<unsigned __int128>(SIZE_MAX))
            throw std::overflow_error("monomial_count: overflow");
    }
    return static_cast<std::size_t>(r);
}

/// A monomial basis (fixed #vars and degree) with O(1) position lookup.
class MonomialBasis {
public:
    MonomialBasis(int vars_minus_one, int degree)
        : n_(vars_minus_one), degree_(degree),
          list_(enumerate_monomials(vars_minus_one, degree)) {
        pos_.reserve(list_.size());
        for (std::size_t i = 0; i < list_.size(); ++i) pos_.emplace(list_[i], i);
    }

    int vars_minus_one() const { return n_; }
    int degree() const { return degree_; }
    std::size_t size() const { return list_.size(); }
    const MultiIndex& operator[](std::size_t i) const { return list_[i]; }
    const std::vector<MultiIndex>& list() const { return list_; }

    std::size_t index_of(const MultiIndex& m) const {
        auto it = pos_.find(m);
        if (it == pos_.end()) throw std::invalid_argument("MonomialBasis: not a basis element");
        return it->second;
    }

private:
    int n_;
    int degree_;
    std::vector<MultiIndex> list_;
    std::unordered_map<MultiIndex, std::size_t, MultiIndexHash> pos_;
};

}  // namespace powsec
