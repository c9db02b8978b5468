#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "powsec/binomial.hpp"
#include "powsec/form.hpp"
#include "powsec/fp_matrix.hpp"
#include "powsec/linear_system.hpp"

namespace powsec {

/// Terracini computation on the variety of k-th powers of degree-d forms in
/// n+1 variables, living in the space of degree-dk forms.
struct SecantReport {
    int n = 0, d = 0, k = 0, h = 0;
    long computed_secant_dim = -1;
    long expected_secant_dim = -1;
    Verdict verdict = Verdict::InconclusiveExcess;
    std::uint64_t seed = 0;
    std::uint64_t prime = 0;
    int trials = 0;

    bool defective() const { return computed_secant_dim < expected_secant_dim; }
};

struct CrossCheckResult {
    bool agree = false;
    SecantReport secant;
    DimensionReport linear_system;
};

/// Rows spanning the affine tangent space of the powers variety at [F^k]:
/// F^{k-1} times the degree-d monomial basis, with columns indexed by the
/// degree-dk monomials. Always C(n+d, n) rows.
inline FpMatrix tangent_space_rows(int n, int d, int k, const DenseForm& F, const PrimeField& f) {
    if (F.is_zero()) throw std::invalid_argument("tangent_space_rows: F must be nonzero");
    if (f.p() <= static_cast<std::uint64_t>(d) * static_cast<std::uint64_t>(k))
        throw std::invalid_argument("tangent_space_rows: requires p > d*k");
    const DenseForm Fk1 = power(F, k - 1, f);
    MonomialBasis dbasis(n, d);
    MonomialBasis big(n, d * k);
    MonomialBasis fb(n, d * (k - 1));
    FpMatrix m(dbasis.size(), big.size(), f);
    for (std::size_t r = 0; r < dbasis.size(); ++r) {
        for (std::size_t j = 0; j < fb.size(); ++j) {
            if (Fk1.coeffs[j] == 0) continue;
            const std::size_t c = big.index_of(fb[j] + dbasis[r]);
            m.set(r, c, f.add(m.at(r, c), Fk1.coeffs[j]));
        }
    }
    return m;
}

/// Expected dimension of the h-secant variety of the powers variety:
/// min{ C(n+dk,n) - 1, h*(N_d + 1) - 1 } in P^{N_dk}.
inline mpz_class expected_secant_dim(int n, int d, int k, int h) {
    (void)k;
    const mpz_class ambient = binom(static_cast<unsigned long>(n + d * k), static_cast<long>(n)) - 1;
    const mpz_class span = mpz_class(h) * (N_d(n, d) + 1) - 1;
    return ambient < span ? ambient : span;
}

/// Terracini: stack tangent rows at h random forms; the secant dimension is
/// the rank minus one. Random specializations bound the generic rank from
/// below, so the maximum over trials is kept and matching the expected
/// dimension certifies non-defectivity.
inline SecantReport secant_dimension(int n, int d, int k, int h, std::uint64_t seed,
                                     const EngineOptions& opt = {}) {
    if (k < 1 || h < 1) throw std::invalid_argument("secant_dimension: requires k >= 1, h >= 1");
    const std::size_t cols = monomial_count(n, d * k);
    if (cols > opt.size_cap) throw std::length_error("secant_dimension: matrix exceeds the size cap");

    SecantReport rep;
    rep.n = n;
    rep.d = d;
    rep.k = k;
    rep.h = h;
    rep.seed = seed;
    rep.prime = opt.field.p();
    rep.trials = opt.trials;
    rep.expected_secant_dim = to_long(expected_secant_dim(n, d, k, h));

    long best = -1;
    for (int t = 0; t < opt.trials; ++t) {
        FpMatrix m(0, cols, opt.field);
        for (int i = 0; i < h; ++i) {
            Rng rng = Rng::derived(seed + static_cast<std::uint64_t>(t), static_cast<std::uint64_t>(i));
            const DenseForm F = random_form(rng, opt.field, n, d);
            m.append_rows(tangent_space_rows(n, d, k, F, opt.field));
        }
        const long dim = static_cast<long>(m.rank()) - 1;
        if (dim > best) best = dim;
    }
    rep.computed_secant_dim = best;
    rep.verdict = (rep.computed_secant_dim == rep.expected_secant_dim) ? Verdict::CertifiedExpected
                                                                       : Verdict::InconclusiveExcess;
    return rep;
}

/// The two routes to the same defectivity question: the direct Terracini
/// rank on the powers variety, and the linear system of degree-k
/// hypersurfaces of P^{N_d} containing V_{n,d} and double at h points. The
/// equivalence is the content of the identifiability tool; the flag records
/// whether the two verdicts coincide.
inline CrossCheckResult cross_check(int n, int d, int k, int h, std::uint64_t seed,
                                    const EngineOptions& opt = {}) {
    if (k < 2) throw std::invalid_argument("cross_check: requires k >= 2");
    CrossCheckResult res;
    res.secant = secant_dimension(n, d, k, h, seed, opt);
    res.linear_system = compute_dimension(veronese_double_points(n, d, k, h), seed, opt);
    const bool secant_expected = res.secant.verdict == Verdict::CertifiedExpected;
    const bool system_expected = res.linear_system.verdict == Verdict::CertifiedExpected;
    res.agree = (secant_expected == system_expected);
    return res;
}

/// The identifiability bound for k-th powers of degree-d forms:
///   min{ floor(C(N+k-3, N) / (N+1)) - 1, floor(C(n+kd, n) / (N+1)) - 1 },
/// with N = N_d. May be negative, in which case no h is certified.
inline mpz_class identifiability_bound(int n, int d, int k) {
    if (k < 3) throw std::invalid_argument("identifiability_bound: requires k >= 3");
    const mpz_class N = N_d(n, d);
    const mpz_class Np1 = N + 1;
    mpz_class b1, b2;
    const mpz_class num1 = binom(mpz_class(N + k - 3), to_long(N));
    mpz_fdiv_q(b1.get_mpz_t(), num1.get_mpz_t(), Np1.get_mpz_t());
    b1 -= 1;
    const mpz_class num2 = binom(static_cast<unsigned long>(n + k * d), static_cast<long>(n));
    mpz_fdiv_q(b2.get_mpz_t(), num2.get_mpz_t(), Np1.get_mpz_t());
    b2 -= 1;
    return b1 < b2 ? b1 : b2;
}

}  // namespace powsec
