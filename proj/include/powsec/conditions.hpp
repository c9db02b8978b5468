#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "powsec/binomial.hpp"
#include "powsec/form.hpp"
#include "powsec/fp_matrix.hpp"
#include "powsec/multiindex.hpp"

namespace powsec {

// ---------------------------------------------------------------------------
// Base-locus components
// ---------------------------------------------------------------------------

enum class SubspacePlacement { Coordinate, Random };

struct FatPointSupport {
    enum class Kind { GeneralAmbient, GeneralOnVeronese, CoordinatePoint };
    Kind kind = Kind::GeneralAmbient;
    int n = 0, d = 0;    // for GeneralOnVeronese: the Veronese V_{n,d}
    int index = 0;       // for CoordinatePoint

    static FatPointSupport general() { return {}; }
    static FatPointSupport on_veronese(int n, int d) {
        return {Kind::GeneralOnVeronese, n, d, 0};
    }
    static FatPointSupport coordinate(int index) {
        return {Kind::CoordinatePoint, 0, 0, index};
    }
};

struct VeroneseImage {
    int n, d;
};
struct LinearSubspace {
    int n;
    SubspacePlacement placement = SubspacePlacement::Random;
};
struct CoordinatePlanes {
    std::vector<std::vector<int>> faces;  // vertex-index subsets of {0..N}, each of size n+1
};
struct FatPoint {
    int multiplicity;  // m >= 1; a double point is m = 2
    FatPointSupport support;
};

using BaseComponent = std::variant<VeroneseImage, LinearSubspace, CoordinatePlanes, FatPoint>;

/// One block of interpolation-matrix rows: the linear conditions a single
/// base-locus component imposes on degree-k hypersurfaces of P^N. Columns
/// are always indexed by enumerate_monomials(N, k), so blocks from
/// different components stack by concatenation.
struct ConditionBlock {
    FpMatrix rows;
    std::string provenance;
    std::size_t nominal_row_count;
};

// ---------------------------------------------------------------------------
// Points on the Veronese
// ---------------------------------------------------------------------------

/// nu_d(l) for l in P^n: the point of P^N whose alpha-coordinate is the
/// coefficient (d choose alpha) l^alpha of the power L^d. Points built this
/// way lie exactly on the zero locus of build_veronese_block's row space.
inline std::vector<std::uint64_t> veronese_point(int n, int d,
                                                 const std::vector<std::uint64_t>& ell,
                                                 const PrimeField& f) {
    if (static_cast<int>(ell.size()) != n + 1)
        throw std::invalid_argument("veronese_point: bad parameter length");
    MonomialBasis basis(n, d);
    std::vector<std::uint64_t> q(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const MultiIndex& alpha = basis[i];
        std::uint64_t v = f.reduce(multinomial(alpha));
        for (int j = 0; j <= n; ++j)
            v = f.mul(v, f.pow(ell[static_cast<std::size_t>(j)],
                               static_cast<std::uint64_t>(alpha[static_cast<std::size_t>(j)])));
        q[i] = v;
    }
    return q;
}

// ---------------------------------------------------------------------------
// Block builders
// ---------------------------------------------------------------------------

/// Conditions of a fat point of multiplicity m at a given support point:
/// the scheme imposes C(N+m-1, N) conditions on degree-k forms. Rows are
/// the derivatives of order <= m-1 taken in the affine chart where the
/// first nonzero coordinate of the point equals 1; the chart realizes the
/// projective normalization so the row count matches the scheme length.
inline ConditionBlock build_fatpoint_block(int N, int k, int m,
                                           std::vector<std::uint64_t> q,
                                           const PrimeField& f) {
    if (N < 1) throw std::invalid_argument("build_fatpoint_block: requires N >= 1");
    if (m < 1) throw std::invalid_argument("build_fatpoint_block: multiplicity must be >= 1");
    if (f.p() <= static_cast<std::uint64_t>(k))
        throw std::invalid_argument("build_fatpoint_block: requires p > k");
    if (static_cast<int>(q.size()) != N + 1)
        throw std::invalid_argument("build_fatpoint_block: point length != N+1");

    int chart = -1;
    for (int i = 0; i <= N; ++i)
        if (q[static_cast<std::size_t>(i)] != 0) { chart = i; break; }
    if (chart < 0) throw std::invalid_argument("build_fatpoint_block: zero vector is not a projective point");

    // Scale so the chart coordinate is 1.
    const std::uint64_t scale = f.inv(q[static_cast<std::size_t>(chart)]);
    for (auto& x : q) x = f.mul(x, scale);

    MonomialBasis cols(N, k);

    // Derivative multi-indices over the N chart variables, all orders < m.
    std::vector<MultiIndex> derivs;
    for (int ord = 0; ord < m; ++ord) {
        auto level = enumerate_monomials(N - 1, ord);
        for (auto& b : level) derivs.push_back(std::move(b));
    }

    ConditionBlock block{FpMatrix(derivs.size(), cols.size(), f), "fat point", derivs.size()};
    for (std::size_t r = 0; r < derivs.size(); ++r) {
        const MultiIndex& beta = derivs[r];  // indexed over variables != chart
        for (std::size_t c = 0; c < cols.size(); ++c) {
            const MultiIndex& alpha = cols[c];
            std::uint64_t entry = 1;
            bool zero = false;
            int bi = 0;
            for (int i = 0; i <= N && !zero; ++i) {
                if (i == chart) continue;  // chart variable fixed to 1
                const int a = alpha[static_cast<std::size_t>(i)];
                const int b = beta[static_cast<std::size_t>(bi++)];
                if (b > a) { zero = true; break; }
                if (b > 0) entry = f.mul(entry, f.reduce(falling_factorial(a, b)));
                if (entry == 0) { zero = true; break; }
                entry = f.mul(entry, f.pow(q[static_cast<std::size_t>(i)],
                                           static_cast<std::uint64_t>(a - b)));
                if (entry == 0) zero = true;
            }
            if (!zero) block.rows.set(r, c, entry);
        }
    }
    return block;
}

/// Conditions of containing a linear subspace Lambda = P^n parametrized by
/// a full-rank (n+1)x(N+1) matrix A (rows = images of the parameters): for
/// each degree-k monomial mu in the n+1 parameters, the row collects, per
/// column monomial of P^N, the coefficient of t^mu in its pullback. The
/// C(n+k, n) rows have full row rank (restriction of forms to a linear
/// subspace is surjective).
inline ConditionBlock build_linear_subspace_block_from_matrix(
    int N, int k, int n, const std::vector<std::vector<std::uint64_t>>& A, const PrimeField& f) {
    if (static_cast<int>(A.size()) != n + 1)
        throw std::invalid_argument("linear subspace: parametrization must have n+1 rows");

    MonomialBasis cols(N, k);
    MonomialBasis rows(n, k);

    ConditionBlock block{FpMatrix(rows.size(), cols.size(), f), "linear subspace", rows.size()};

    // Pullbacks of the ambient coordinates: linear forms in the parameters.
    std::vector<DenseForm> pullback_coord(static_cast<std::size_t>(N + 1));
    for (int j = 0; j <= N; ++j) {
        DenseForm lin = zero_form(n, 1);
        for (int i = 0; i <= n; ++i)
            lin.coeffs[static_cast<std::size_t>(i)] = A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        pullback_coord[static_cast<std::size_t>(j)] = std::move(lin);
    }

    for (std::size_t c = 0; c < cols.size(); ++c) {
        const MultiIndex& alpha = cols[c];
        DenseForm prod;
        prod.n = n;
        prod.degree = 0;
        prod.coeffs = {1};
        bool zero = false;
        for (int j = 0; j <= N && !zero; ++j) {
            for (int e = 0; e < alpha[static_cast<std::size_t>(j)]; ++e) {
                prod = multiply(prod, pullback_coord[static_cast<std::size_t>(j)], f);
                if (prod.is_zero()) { zero = true; break; }
            }
        }
        if (zero) continue;
        for (std::size_t r = 0; r < rows.size(); ++r)
            block.rows.set(r, c, prod.coeffs[r]);
    }
    return block;
}

/// Parametrization matrix for a coordinate or seeded-random placement of
/// Lambda. A degenerate random draw (rank < n+1) is discarded and redrawn.
inline std::vector<std::vector<std::uint64_t>> subspace_parametrization(
    int N, int n, SubspacePlacement placement, Rng& rng, const PrimeField& f) {
    if (n > N) throw std::invalid_argument("linear subspace: requires n <= N");
    std::vector<std::vector<std::uint64_t>> A(static_cast<std::size_t>(n + 1),
                                              std::vector<std::uint64_t>(static_cast<std::size_t>(N + 1), 0));
    if (placement == SubspacePlacement::Coordinate) {
        for (int i = 0; i <= n; ++i) A[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
        return A;
    }
    for (;;) {
        FpMatrix m(static_cast<std::size_t>(n + 1), static_cast<std::size_t>(N + 1), f);
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= N; ++j) {
                A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = rng.below(f.p());
                m.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j),
                      A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
            }
        if (m.rank() == static_cast<std::size_t>(n + 1)) return A;
    }
}

inline ConditionBlock build_linear_subspace_block(int N, int k, int n,
                                                  SubspacePlacement placement,
                                                  Rng& rng, const PrimeField& f) {
    auto A = subspace_parametrization(N, n, placement, rng, f);
    return build_linear_subspace_block_from_matrix(N, k, n, A, f);
}

/// Conditions of containing the Veronese V_{n,d}, as the pullback map
/// Sym^k(Sym^d) -> Sym^{dk}: rows are indexed by the degree-dk monomials mu
/// of P^n, and the row for mu holds, per column monomial of degree k in the
/// Veronese coordinates y_alpha, the coefficient with which nu_d^*(y-monomial)
/// contributes to x^mu. Since nu_d^*(y_alpha) = (d choose alpha) x^alpha,
/// the entry is the product of the per-factor multinomials, computed as an
/// exact integer and reduced mod p. Row count C(n+dk, n); projective
/// normality makes the block full row rank.
inline ConditionBlock build_veronese_block(int n, int d, int k, const PrimeField& f) {
    if (n < 1 || d < 1 || k < 1)
        throw std::invalid_argument("build_veronese_block: requires n, d, k >= 1");
    MonomialBasis dbasis(n, d);       // coordinates of P^N
    const int N = static_cast<int>(dbasis.size()) - 1;
    MonomialBasis cols(N, k);
    MonomialBasis rows(n, d * k);

    ConditionBlock block{FpMatrix(rows.size(), cols.size(), f), "veronese pullback", rows.size()};
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const MultiIndex& gamma = cols[c];
        std::vector<int> mu(static_cast<std::size_t>(n + 1), 0);
        mpz_class weight = 1;
        for (int a = 0; a <= N; ++a) {
            const int e = gamma[static_cast<std::size_t>(a)];
            if (e == 0) continue;
            const MultiIndex& alpha = dbasis[static_cast<std::size_t>(a)];
            for (int i = 0; i <= n; ++i) mu[static_cast<std::size_t>(i)] += e * alpha[static_cast<std::size_t>(i)];
            mpz_class w = multinomial(alpha);
            for (int t = 0; t < e; ++t) weight *= w;
        }
        const std::size_t r = rows.index_of(MultiIndex(mu));
        block.rows.set(r, c, f.reduce(weight));
    }
    return block;
}

/// Conditions of containing a union of coordinate n-planes: a form contains
/// every plane iff each monomial supported inside some face has zero
/// coefficient, so the rows are unit vectors on exactly those columns.
inline ConditionBlock build_planes_block(int N, int k,
                                         const std::vector<std::vector<int>>& faces,
                                         const PrimeField& f) {
    MonomialBasis cols(N, k);
    std::vector<std::set<int>> face_sets;
    face_sets.reserve(faces.size());
    for (const auto& face : faces) {
        for (int v : face)
            if (v < 0 || v > N) throw std::invalid_argument("build_planes_block: face index out of range");
        face_sets.emplace_back(face.begin(), face.end());
    }

    std::vector<std::size_t> supported;
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const MultiIndex& alpha = cols[c];
        for (const auto& fs : face_sets) {
            bool inside = true;
            for (int i = 0; i <= N; ++i)
                if (alpha[static_cast<std::size_t>(i)] > 0 && !fs.count(i)) { inside = false; break; }
            if (inside) { supported.push_back(c); break; }
        }
    }

    ConditionBlock block{FpMatrix(supported.size(), cols.size(), f), "coordinate planes", supported.size()};
    for (std::size_t r = 0; r < supported.size(); ++r) block.rows.set(r, supported[r], 1);
    return block;
}

}  // namespace powsec
