#pragma once

#include <stdexcept>
#include <variant>
#include <vector>

#include "powsec/binomial.hpp"
#include "powsec/multiindex.hpp"
#include "powsec/toric.hpp"

namespace powsec {

/// Degree-k slice of the inverse system of a monomial ideal: either a
/// coordinate-subspace ideal (the perp is spanned by monomials supported in
/// the complementary face) or the power of the maximal ideal of a
/// coordinate point (the perp is spanned by monomials of bounded degree in
/// the other variables). Represented by membership predicates and closed
/// form dimensions; explicit monomial lists appear only in oracles.
class InverseSystemSlice {
public:
    struct CoordinateSubspace {
        std::vector<int> face;  // surviving coordinate indices
    };
    struct FatPointPower {
        int index;  // coordinate point
        int a;      // multiplicity
    };

    InverseSystemSlice(int N, int k, CoordinateSubspace c)
        : N_(N), k_(k), kind_(std::move(c)) {}
    InverseSystemSlice(int N, int k, FatPointPower f) : N_(N), k_(k), kind_(std::move(f)) {
        if (std::get<FatPointPower>(kind_).a < 1)
            throw std::invalid_argument("InverseSystemSlice: multiplicity must be >= 1");
    }

    int N() const { return N_; }
    int k() const { return k_; }

    /// Is the degree-k monomial gamma a member of the slice?
    bool contains(const MultiIndex& gamma) const {
        if (const auto* c = std::get_if<CoordinateSubspace>(&kind_)) {
            for (int i = 0; i <= N_; ++i) {
                if (gamma[static_cast<std::size_t>(i)] == 0) continue;
                bool in_face = false;
                for (int v : c->face)
                    if (v == i) { in_face = true; break; }
                if (!in_face) return false;
            }
            return true;
        }
        const auto& f = std::get<FatPointPower>(kind_);
        return k_ - gamma[static_cast<std::size_t>(f.index)] <= f.a - 1;
    }

    /// Closed-form dimension: C(n+k, n) for a face on n+1 indices,
    /// C(N+a-1, N) for a fat-point power.
    mpz_class dim() const {
        if (const auto* c = std::get_if<CoordinateSubspace>(&kind_)) {
            const int n = static_cast<int>(c->face.size()) - 1;
            return binom(static_cast<unsigned long>(n + k_), static_cast<long>(n));
        }
        const auto& f = std::get<FatPointPower>(kind_);
        return binom(static_cast<unsigned long>(N_ + f.a - 1), static_cast<long>(N_));
    }

private:
    int N_;
    int k_;
    std::variant<CoordinateSubspace, FatPointPower> kind_;
};

namespace apolarity_detail {

inline void require_sink(const Triangulation& t) {
    // Throws if the sink property fails; the fat point sits at the origin
    // coordinate point, which must belong to the sink face only.
    (void)sink_hyperplane(t);
}

}  // namespace apolarity_detail

/// Number of conditions the scheme Pi union {p_0^a} imposes on degree-k
/// hypersurfaces of P^N: the dimension of the span of the inverse-system
/// slices,
///   C(N+a-1, N) + C(n+kd, n) - C(n+a-1, n).
inline mpz_class conditions_count_planes_plus_fatpoint(int n, int d, int k, int a,
                                                       const Triangulation& t) {
    if (a < 1 || a > k)
        throw std::invalid_argument("conditions_count_planes_plus_fatpoint: requires 1 <= a <= k");
    if (t.n != n || t.d != d)
        throw std::invalid_argument("conditions_count_planes_plus_fatpoint: triangulation mismatch");
    apolarity_detail::require_sink(t);
    const mpz_class N = N_d(n, d);
    return binom(mpz_class(N + a - 1), static_cast<long>(N.get_si())) +
           binom(static_cast<unsigned long>(n + k * d), static_cast<long>(n)) -
           binom(static_cast<unsigned long>(n + a - 1), static_cast<long>(n));
}

/// dim L_{N,k}(Pi, a) = C(N+k,N) - C(n+kd,n) - C(N+a-1,N) + C(n+a-1,n) - 1,
/// exact for 1 <= a <= k.
inline mpz_class dim_L_planes_fatpoint(int n, int d, int k, int a) {
    if (a < 1 || a > k) throw std::invalid_argument("dim_L_planes_fatpoint: requires 1 <= a <= k");
    const long N = to_long(N_d(n, d));
    return binom(static_cast<unsigned long>(N + k), N) -
           binom(static_cast<unsigned long>(n + k * d), static_cast<long>(n)) -
           binom(static_cast<unsigned long>(N + a - 1), N) +
           binom(static_cast<unsigned long>(n + a - 1), static_cast<long>(n)) - 1;
}

/// Expected dimension of L_{N,k}(V, a) for a fat point supported on the
/// Veronese:
///   max{-1, C(N+k,N) - C(n+kd,n) - [C(N+a-1,N) - C(n+a-1,n)] - 1}.
/// The defining parameter count is only asserted by the theory for a <= k;
/// larger multiplicities are rejected as formula-undefined.
inline mpz_class expected_dim_V_fatpoint(int n, int d, int k, int a) {
    if (a < 1) throw std::invalid_argument("expected_dim_V_fatpoint: requires a >= 1");
    if (a > k) throw std::domain_error("expected_dim_V_fatpoint: formula undefined for a > k");
    const mpz_class inner = dim_L_planes_fatpoint(n, d, k, a);
    return inner < -1 ? mpz_class(-1) : inner;
}

}  // namespace powsec
