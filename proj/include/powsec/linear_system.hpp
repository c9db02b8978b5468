#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "powsec/binomial.hpp"
#include "powsec/conditions.hpp"
#include "powsec/fp_matrix.hpp"
#include "powsec/toric.hpp"

namespace powsec {

/// A linear system of degree-k hypersurfaces of P^N with a prescribed base
/// locus: the central description of every system the engines compute.
struct LinearSystemSpec {
    int N = 0;
    int k = 0;
    std::vector<BaseComponent> components;
    std::string label;
};

enum class Verdict { CertifiedExpected, InconclusiveExcess, ClosedForm, FormulaUndefined };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::CertifiedExpected: return "certified-expected";
        case Verdict::InconclusiveExcess: return "inconclusive-excess";
        case Verdict::ClosedForm: return "closed-form";
        case Verdict::FormulaUndefined: return "formula-undefined";
    }
    return "?";
}

struct DimensionReport {
    LinearSystemSpec spec;
    long computed_dim = -1;                 // projective; -1 = empty
    std::optional<long> expected_dim;       // absent when no formula applies
    std::optional<long> virtual_dim;
    std::optional<long> closed_form_dim;    // for the certified-special cases
    Verdict verdict = Verdict::FormulaUndefined;
    std::uint64_t seed = 0;
    std::uint64_t prime = 0;
    int trials = 0;
};

struct EngineOptions {
    PrimeField field{};
    int trials = 3;
    std::size_t size_cap = 6000;  // maximum matrix columns (and rows)
};

// ---------------------------------------------------------------------------
// Spec constructors for the systems of interest
// ---------------------------------------------------------------------------

/// L_{N,k}(V_{n,d}, 2^h): contain the Veronese, double at h general points.
inline LinearSystemSpec veronese_double_points(int n, int d, int k, int h) {
    const int N = static_cast<int>(monomial_count(n, d)) - 1;
    LinearSystemSpec s{N, k, {}, ""};
    s.components.push_back(VeroneseImage{n, d});
    for (int i = 0; i < h; ++i)
        s.components.push_back(FatPoint{2, FatPointSupport::general()});
    s.label = "L_{" + std::to_string(N) + "," + std::to_string(k) + "}(V_{" + std::to_string(n) +
              "," + std::to_string(d) + "},2^" + std::to_string(h) + ")";
    return s;
}

/// L_{N,k}(V_{n,d}, a): contain the Veronese, one fat point of multiplicity
/// a supported generally on it.
inline LinearSystemSpec veronese_fat_point(int n, int d, int k, int a) {
    const int N = static_cast<int>(monomial_count(n, d)) - 1;
    LinearSystemSpec s{N, k, {}, ""};
    s.components.push_back(VeroneseImage{n, d});
    s.components.push_back(FatPoint{a, FatPointSupport::on_veronese(n, d)});
    s.label = "L_{" + std::to_string(N) + "," + std::to_string(k) + "}(V_{" + std::to_string(n) +
              "," + std::to_string(d) + "}," + std::to_string(a) + ")";
    return s;
}

/// L_{N,k}(Lambda, 2^h): contain a general n-dimensional linear subspace,
/// double at h general points.
inline LinearSystemSpec subspace_double_points(int N, int k, int n, int h,
                                               SubspacePlacement placement = SubspacePlacement::Random) {
    LinearSystemSpec s{N, k, {}, ""};
    s.components.push_back(LinearSubspace{n, placement});
    for (int i = 0; i < h; ++i)
        s.components.push_back(FatPoint{2, FatPointSupport::general()});
    s.label = "L_{" + std::to_string(N) + "," + std::to_string(k) + "}(Lambda_" + std::to_string(n) +
              ",2^" + std::to_string(h) + ")";
    return s;
}

/// L_{N,k}(2^h): plain double points in general position.
inline LinearSystemSpec double_points(int N, int k, int h) {
    LinearSystemSpec s{N, k, {}, ""};
    for (int i = 0; i < h; ++i)
        s.components.push_back(FatPoint{2, FatPointSupport::general()});
    s.label = "L_{" + std::to_string(N) + "," + std::to_string(k) + "}(2^" + std::to_string(h) + ")";
    return s;
}

/// L_{N,k}(Pi, a): contain the union of coordinate planes of a toric
/// degeneration, plus one fat point at the sink coordinate point.
inline LinearSystemSpec planes_fat_point(const Triangulation& t, int k, int a) {
    const int N = static_cast<int>(monomial_count(t.n, t.d)) - 1;
    LinearSystemSpec s{N, k, {}, ""};
    s.components.push_back(CoordinatePlanes{union_planes(t)});
    if (a >= 1) s.components.push_back(FatPoint{a, FatPointSupport::coordinate(sink_hyperplane(t))});
    s.label = "L_{" + std::to_string(N) + "," + std::to_string(k) + "}(Pi_{" + std::to_string(t.n) +
              "," + std::to_string(t.d) + "}," + std::to_string(a) + ")";
    return s;
}

// ---------------------------------------------------------------------------
// Expected / virtual dimension formulas
// ---------------------------------------------------------------------------

struct ExpectedDims {
    bool defined = false;
    mpz_class virtual_dim;
    mpz_class expected_dim;  // max(-1, virtual)
};

namespace engine_detail {

struct SpecShape {
    const VeroneseImage* veronese = nullptr;
    const LinearSubspace* subspace = nullptr;
    const CoordinatePlanes* planes = nullptr;
    std::vector<const FatPoint*> points;
    bool other = false;
};

inline SpecShape shape_of(const LinearSystemSpec& spec) {
    SpecShape sh;
    for (const auto& comp : spec.components) {
        if (const auto* v = std::get_if<VeroneseImage>(&comp)) {
            if (sh.veronese) sh.other = true;
            sh.veronese = v;
        } else if (const auto* l = std::get_if<LinearSubspace>(&comp)) {
            if (sh.subspace) sh.other = true;
            sh.subspace = l;
        } else if (const auto* p = std::get_if<CoordinatePlanes>(&comp)) {
            if (sh.planes) sh.other = true;
            sh.planes = p;
        } else if (const auto* f = std::get_if<FatPoint>(&comp)) {
            sh.points.push_back(f);
        }
    }
    return sh;
}

inline bool all_general_double(const std::vector<const FatPoint*>& pts) {
    for (const auto* p : pts)
        if (p->multiplicity != 2 || p->support.kind != FatPointSupport::Kind::GeneralAmbient)
            return false;
    return true;
}

}  // namespace engine_detail

/// Virtual and expected dimension for the component combinations with a
/// defined parameter count: V + general double points, Lambda + general
/// double points, V + one fat point on V (a <= k), Pi + one fat point at the
/// sink (a <= k), and plain general double points. Anything else is
/// formula-undefined.
inline ExpectedDims expected_dimension(const LinearSystemSpec& spec) {
    using namespace engine_detail;
    const SpecShape sh = shape_of(spec);
    if (sh.other) return {};
    const int N = spec.N, k = spec.k;
    const mpz_class total = binom(static_cast<unsigned long>(N + k), static_cast<long>(N));
    const long h = static_cast<long>(sh.points.size());

    ExpectedDims out;
    auto finish = [&](mpz_class vdim) {
        out.defined = true;
        out.virtual_dim = vdim;
        out.expected_dim = vdim < -1 ? mpz_class(-1) : vdim;
    };

    if (sh.veronese && !sh.subspace && !sh.planes) {
        const int n = sh.veronese->n, d = sh.veronese->d;
        const mpz_class hilb = binom(static_cast<unsigned long>(n + k * d), static_cast<long>(n));
        if (all_general_double(sh.points)) {
            finish(total - hilb - h * (N + 1) - 1);
            return out;
        }
        if (sh.points.size() == 1 &&
            sh.points[0]->support.kind == FatPointSupport::Kind::GeneralOnVeronese) {
            const int a = sh.points[0]->multiplicity;
            if (a > k) return {};  // refined count only valid up to the degree
            const mpz_class overlap = binom(static_cast<unsigned long>(N + a - 1), static_cast<long>(N)) -
                                      binom(static_cast<unsigned long>(n + a - 1), static_cast<long>(n));
            finish(total - hilb - overlap - 1);
            return out;
        }
        return {};
    }
    if (sh.subspace && !sh.veronese && !sh.planes && all_general_double(sh.points)) {
        const int n = sh.subspace->n;
        finish(total - binom(static_cast<unsigned long>(n + k), static_cast<long>(n)) - h * (N + 1) - 1);
        return out;
    }
    if (sh.planes && !sh.veronese && !sh.subspace) {
        // Pi is a degeneration of V_{n,d}: recover (n, d) from the face size
        // and count, and apply the toric closed form.
        const int n = static_cast<int>(sh.planes->faces.front().size()) - 1;
        mpz_class dn = static_cast<unsigned long>(sh.planes->faces.size());
        mpz_class root;
        mpz_root(root.get_mpz_t(), dn.get_mpz_t(), static_cast<unsigned long>(n));
        const int d = static_cast<int>(root.get_ui());
        const mpz_class hilb = binom(static_cast<unsigned long>(n + k * d), static_cast<long>(n));
        int a = 0;
        if (sh.points.size() == 1 &&
            sh.points[0]->support.kind == FatPointSupport::Kind::CoordinatePoint)
            a = sh.points[0]->multiplicity;
        else if (!sh.points.empty())
            return {};
        if (a > k) return {};
        const mpz_class overlap = binom(static_cast<unsigned long>(N + a - 1), static_cast<long>(N)) -
                                  binom(static_cast<unsigned long>(n + a - 1), static_cast<long>(n));
        finish(total - hilb - overlap - 1);
        return out;
    }
    if (!sh.veronese && !sh.subspace && !sh.planes && all_general_double(sh.points)) {
        finish(total - h * (N + 1) - 1);
        return out;
    }
    return {};
}

// ---------------------------------------------------------------------------
// Closed forms for the certified-special cases
// ---------------------------------------------------------------------------

/// Alexander-Hirschowitz exceptions for L_{N,k}(2^h).
inline bool is_ah_exception(int N, int k, int h) {
    if (k == 2) return N >= 2 && 2 <= h && h <= N;
    if (k == 3) return N == 4 && h == 7;
    if (k == 4) return (N == 2 && h == 5) || (N == 3 && h == 9) || (N == 4 && h == 14);
    return false;
}

/// The known dimension at a plain-double-point special case: the quadric
/// formula C(N+2,2) - h(N+1) + C(h,2) - 1, and dimension 0 at each of the
/// four isolated exceptions.
inline std::optional<mpz_class> ah_closed_form_dim(int N, int k, int h) {
    if (!is_ah_exception(N, k, h)) return std::nullopt;
    if (k == 2) {
        return binom(static_cast<unsigned long>(N + 2), 2L) - static_cast<long>(h) * (N + 1) +
               binom(static_cast<unsigned long>(h), 2L) - 1;
    }
    return mpz_class(0);
}

// ---------------------------------------------------------------------------
// The engine
// ---------------------------------------------------------------------------

namespace engine_detail {

inline int max_veronese_dk(const LinearSystemSpec& spec) {
    int dk = 0;
    for (const auto& comp : spec.components) {
        if (const auto* v = std::get_if<VeroneseImage>(&comp))
            dk = std::max(dk, v->d * spec.k);
        if (const auto* f = std::get_if<FatPoint>(&comp))
            if (f->support.kind == FatPointSupport::Kind::GeneralOnVeronese)
                dk = std::max(dk, f->support.d * spec.k);
    }
    return dk;
}

inline FpMatrix assemble(const LinearSystemSpec& spec, std::uint64_t trial_seed,
                         const EngineOptions& opt) {
    const std::size_t cols = monomial_count(spec.N, spec.k);
    FpMatrix m(0, cols, opt.field);
    std::uint64_t salt = 0;
    for (const auto& comp : spec.components) {
        Rng rng = Rng::derived(trial_seed, salt++);
        if (const auto* v = std::get_if<VeroneseImage>(&comp)) {
            if (static_cast<int>(monomial_count(v->n, v->d)) - 1 != spec.N)
                throw std::invalid_argument("compute_dimension: Veronese component does not fit P^N");
            m.append_rows(build_veronese_block(v->n, v->d, spec.k, opt.field).rows);
        } else if (const auto* l = std::get_if<LinearSubspace>(&comp)) {
            m.append_rows(build_linear_subspace_block(spec.N, spec.k, l->n, l->placement, rng, opt.field).rows);
        } else if (const auto* pl = std::get_if<CoordinatePlanes>(&comp)) {
            m.append_rows(build_planes_block(spec.N, spec.k, pl->faces, opt.field).rows);
        } else if (const auto* f = std::get_if<FatPoint>(&comp)) {
            std::vector<std::uint64_t> q;
            switch (f->support.kind) {
                case FatPointSupport::Kind::GeneralAmbient:
                    q = random_projective_point(rng, opt.field, static_cast<std::size_t>(spec.N + 1));
                    break;
                case FatPointSupport::Kind::GeneralOnVeronese: {
                    auto ell = random_projective_point(rng, opt.field,
                                                       static_cast<std::size_t>(f->support.n + 1));
                    q = veronese_point(f->support.n, f->support.d, ell, opt.field);
                    break;
                }
                case FatPointSupport::Kind::CoordinatePoint:
                    if (f->support.index < 0 || f->support.index > spec.N)
                        throw std::invalid_argument("compute_dimension: coordinate point outside P^N");
                    q.assign(static_cast<std::size_t>(spec.N + 1), 0);
                    q[static_cast<std::size_t>(f->support.index)] = 1;
                    break;
            }
            m.append_rows(build_fatpoint_block(spec.N, spec.k, f->multiplicity, q, opt.field).rows);
        }
        if (m.rows() > opt.size_cap * 4)
            throw std::length_error("compute_dimension: row count exceeds the size cap");
    }
    return m;
}

}  // namespace engine_detail

/// Stack all condition blocks, compute the projective dimension
/// C(N+k,N) - rank - 1 over F_p, repeat over fresh seeds and keep the
/// minimum (a rank achieved at any single specialization bounds the generic
/// rank from below, so the minimum dimension is the strongest certificate).
/// A matching expected dimension certifies non-speciality; an excess is
/// inconclusive unless a classical closed form covers the case.
inline DimensionReport compute_dimension(const LinearSystemSpec& spec, std::uint64_t seed,
                                         const EngineOptions& opt = {}) {
    const int dk = engine_detail::max_veronese_dk(spec);
    if (opt.field.p() <= static_cast<std::uint64_t>(dk))
        throw std::invalid_argument("compute_dimension: requires p > d*k for Veronese components");
    if (opt.trials < 1) throw std::invalid_argument("compute_dimension: trials must be >= 1");
    const std::size_t cols = monomial_count(spec.N, spec.k);
    if (cols > opt.size_cap)
        throw std::length_error("compute_dimension: matrix exceeds the size cap");

    long best = -1;
    bool first = true;
    for (int t = 0; t < opt.trials; ++t) {
        FpMatrix m = engine_detail::assemble(spec, seed + static_cast<std::uint64_t>(t), opt);
        const long dim = static_cast<long>(cols) - static_cast<long>(m.rank()) - 1;
        if (first || dim < best) best = dim;
        first = false;
    }

    DimensionReport rep;
    rep.spec = spec;
    rep.computed_dim = best;
    rep.seed = seed;
    rep.prime = opt.field.p();
    rep.trials = opt.trials;

    const ExpectedDims ed = expected_dimension(spec);
    if (!ed.defined) {
        rep.verdict = Verdict::FormulaUndefined;
        return rep;
    }
    rep.expected_dim = to_long(ed.expected_dim);
    rep.virtual_dim = to_long(ed.virtual_dim);

    if (rep.computed_dim == *rep.expected_dim) {
        rep.verdict = Verdict::CertifiedExpected;
        return rep;
    }

    // Plain double points may fall in the certified-special list.
    const auto sh = engine_detail::shape_of(spec);
    if (!sh.veronese && !sh.subspace && !sh.planes && engine_detail::all_general_double(sh.points)) {
        auto cf = ah_closed_form_dim(spec.N, spec.k, static_cast<int>(sh.points.size()));
        if (cf) {
            rep.closed_form_dim = to_long(*cf);
            if (rep.computed_dim == *rep.closed_form_dim) {
                rep.verdict = Verdict::ClosedForm;
                return rep;
            }
        }
    }
    rep.verdict = Verdict::InconclusiveExcess;
    return rep;
}

/// Desk verification of the headline bound: reports on L_{N,k}(V, 2^h) for
/// every h from 0 to floor(C(N+k-3, N) / (N+1)) (optionally clipped).
inline std::vector<DimensionReport> certify_main_theorem(int n, int d, int k, std::uint64_t seed,
                                                         const EngineOptions& opt = {},
                                                         std::optional<int> h_max = std::nullopt) {
    if (k < 3) throw std::invalid_argument("certify_main_theorem: requires k >= 3");
    const mpz_class N = N_d(n, d);
    const mpz_class bound_num = binom(mpz_class(N + k - 3), static_cast<long>(N.get_si()));
    mpz_class bound;
    mpz_fdiv_q(bound.get_mpz_t(), bound_num.get_mpz_t(), mpz_class(N + 1).get_mpz_t());
    long h_bound = to_long(bound);
    if (h_max && *h_max < h_bound) h_bound = *h_max;

    std::vector<DimensionReport> reports;
    for (long h = 0; h <= h_bound; ++h)
        reports.push_back(compute_dimension(veronese_double_points(n, d, k, static_cast<int>(h)), seed, opt));
    return reports;
}

}  // namespace powsec
