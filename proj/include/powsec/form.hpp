#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "powsec/fp.hpp"
#include "powsec/multiindex.hpp"

namespace powsec {

/// A homogeneous form over F_p, stored as a dense coefficient vector on the
/// graded-lex monomial basis of its degree.
struct DenseForm {
    int n = 0;       // number of variables minus one
    int degree = 0;
    std::vector<std::uint64_t> coeffs;  // indexed as enumerate_monomials(n, degree)

    bool is_zero() const {
        for (auto c : coeffs)
            if (c) return false;
        return true;
    }
};

inline DenseForm zero_form(int n, int degree) {
    DenseForm f;
    f.n = n;
    f.degree = degree;
    f.coeffs.assign(monomial_count(n, degree), 0);
    return f;
}

/// Exact product of two forms, coefficients reduced mod p.
inline DenseForm multiply(const DenseForm& a, const DenseForm& b, const PrimeField& f) {
    if (a.n != b.n) throw std::invalid_argument("multiply: variable count mismatch");
    MonomialBasis ba(a.n, a.degree), bb(b.n, b.degree), bc(a.n, a.degree + b.degree);
    DenseForm c;
    c.n = a.n;
    c.degree = a.degree + b.degree;
    c.coeffs.assign(bc.size(), 0);
    for (std::size_t i = 0; i < ba.size(); ++i) {
        if (a.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < bb.size(); ++j) {
            if (b.coeffs[j] == 0) continue;
            const std::size_t k = bc.index_of(ba[i] + bb[j]);
            c.coeffs[k] = f.add(c.coeffs[k], f.mul(a.coeffs[i], b.coeffs[j]));
        }
    }
    return c;
}

/// f^e by repeated exact convolution.
inline DenseForm power(const DenseForm& base, int e, const PrimeField& f) {
    if (e < 0) throw std::invalid_argument("power: negative exponent");
    DenseForm acc;
    acc.n = base.n;
    acc.degree = 0;
    acc.coeffs = {1};
    for (int i = 0; i < e; ++i) acc = multiply(acc, base, f);
    return acc;
}

/// Uniformly random nonzero form of the given degree.
inline DenseForm random_form(Rng& rng, const PrimeField& f, int n, int degree) {
    MonomialBasis basis(n, degree);
    DenseForm out;
    out.n = n;
    out.degree = degree;
    do {
        out.coeffs = random_point(rng, f, basis.size());
    } while (out.is_zero());
    return out;
}

}  // namespace powsec
