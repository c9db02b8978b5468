#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <utility>

#include "powsec/multiindex.hpp"

namespace powsec {

/// C(a, b) as an arbitrary-precision integer; 0 when b < 0 or b > a.
/// Everything downstream (bound tables, ledger identities) consumes this,
/// and the comparison tables of large degree overflow 64 bits.
inline mpz_class binom(unsigned long a, long b) {
    if (b < 0 || static_cast<unsigned long>(b) > a) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), a, static_cast<unsigned long>(b));
    return r;
}

/// C(a, b) for arbitrary-precision a and machine b, via the falling
/// factorial a(a-1)...(a-b+1)/b!. Uses the complementary index when that is
/// smaller, so C(N+k, N) costs k multiplications however large N is.
inline mpz_class binom(const mpz_class& a, long b) {
    if (b < 0) return 0;
    if (a >= 0 && a < b) return 0;
    if (a.fits_ulong_p()) {
        mpz_class r;
        mpz_bin_uiui(r.get_mpz_t(), a.get_ui(), static_cast<unsigned long>(b));
        return r;
    }
    if (a > 0) {
        const mpz_class comp = a - b;
        if (comp >= 0 && comp < b && comp.fits_slong_p()) b = comp.get_si();
    }
    mpz_class num = 1;
    for (long i = 0; i < b; ++i) num *= (a - i);
    mpz_class den;
    mpz_fac_ui(den.get_mpz_t(), static_cast<unsigned long>(b));
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

/// Number of degree-b monomials in n+1 variables: C(n+b, n).
inline mpz_class num_monomials(int n, int b) {
    if (n < 0 || b < 0) throw std::invalid_argument("num_monomials: negative arguments");
    return binom(static_cast<unsigned long>(n + b), static_cast<long>(n));
}

/// N_d = C(n+d, n) - 1, the dimension of the space of degree-d
/// hypersurfaces of P^n (equivalently the ambient dimension of the d-th
/// Veronese embedding).
inline mpz_class N_d(int n, int d) {
    if (n < 1 || d < 1) throw std::invalid_argument("N_d: requires n >= 1, d >= 1");
    return num_monomials(n, d) - 1;
}

/// N_d^k = C(N_d+k, N_d) - 1, the dimension of the space of degree-k
/// hypersurfaces of P^{N_d}.
inline mpz_class N_dk(int n, int d, int k) {
    if (k < 1) throw std::invalid_argument("N_dk: requires k >= 1");
    return binom(mpz_class(N_d(n, d) + k), static_cast<long>(k)) - 1;
}

/// Both sides of the hockey-stick identity
///   sum_{l=0}^{a-1} C(n-1+l, n-1)  =  C(n+a-1, n).
/// Returned as a pair so tests can assert the equality instead of trusting it.
inline std::pair<mpz_class, mpz_class> hockey_stick(int n, int a) {
    if (n < 1 || a < 1) throw std::invalid_argument("hockey_stick: requires n >= 1, a >= 1");
    mpz_class lhs = 0;
    for (int l = 0; l < a; ++l)
        lhs += binom(static_cast<unsigned long>(n - 1 + l), static_cast<long>(n - 1));
    mpz_class rhs = binom(static_cast<unsigned long>(n + a - 1), static_cast<long>(n));
    return {lhs, rhs};
}

/// Multinomial coefficient d! / prod(alpha_i!) for |alpha| = d. This is the
/// coefficient of x^alpha in (x_0 + ... + x_n)^d, and the coefficient of
/// l^alpha x^alpha in L^d for a linear form L with coefficients l.
inline mpz_class multinomial(const MultiIndex& alpha) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(alpha.degree()));
    for (int e : alpha.exponents()) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(e));
        mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), f.get_mpz_t());
    }
    return r;
}

/// Falling factorial a(a-1)...(a-b+1); the scalar produced when the b-th
/// derivative hits a power of degree a.
inline mpz_class falling_factorial(int a, int b) {
    if (b < 0) throw std::invalid_argument("falling_factorial: negative order");
    if (b > a) return 0;
    mpz_class r = 1;
    for (int i = 0; i < b; ++i) r *= (a - i);
    return r;
}

/// Checked narrowing of a formula-level integer to a machine integer.
inline long to_long(const mpz_class& v) {
    if (!v.fits_slong_p()) throw std::overflow_error("integer too large for machine word");
    return static_cast<long>(v.get_si());
}

}  // namespace powsec
