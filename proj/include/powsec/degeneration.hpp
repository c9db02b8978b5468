#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "powsec/binomial.hpp"
#include "powsec/linear_system.hpp"

namespace powsec {

/// Dimension bookkeeping of the two-component degeneration that proves the
/// main bound: the linear system on the general fiber degenerates to a
/// fiber product of systems on the exceptional component (a linear subspace
/// with the double points) and on the strict transform (the Veronese with
/// one fat point), glued along a system on the intersection P^{N-1}.
struct LedgerEntry {
    int n = 0, d = 0, k = 0;
    long h = 0;
    // Closed-form dimensions of the five constituent systems.
    mpz_class dim_L_P;    // L_{N,k-1}(Lambda, 2^h)
    mpz_class dim_hat_P;  // L_{N,k-2}(Lambda, 2^h)
    mpz_class dim_L_F;    // L_{N,k}(V, k-1)
    mpz_class dim_hat_F;  // L_{N,k}(V, k)
    mpz_class dim_R;      // L_{N-1,k-1}(Lambda_R)
    mpz_class ledger_total;        // dim_hat_P + dim_hat_F + dim_R + 2
    mpz_class vdim_general_fiber;  // vdim L_{N,k}(V, 2^h), unclamped
    mpz_class edim_general_fiber;  // max(-1, vdim)
    bool consistent = false;       // ledger_total == vdim_general_fiber
};

/// The admissible range of h for the degeneration at (n, d, k).
inline mpz_class ledger_h_bound(int n, int d, int k) {
    const mpz_class N = N_d(n, d);
    const mpz_class num = binom(mpz_class(N + k - 3), to_long(N));
    mpz_class b;
    mpz_class Np1 = N + 1;
    mpz_fdiv_q(b.get_mpz_t(), num.get_mpz_t(), Np1.get_mpz_t());
    return b;
}

/// Evaluate both sides of the central-fiber dimension formula. The entry is
/// consistent exactly when the three kernel/restriction dimensions plus two
/// reproduce the expected dimension of the general fiber; this integer
/// identity is what closes the proof of the main bound.
inline LedgerEntry ledger(int n, int d, int k, long h) {
    if (k < 4) throw std::domain_error("ledger: requires k >= 4 (k = 3 forces h = 0 separately)");
    if (h < 0 || mpz_class(h) > ledger_h_bound(n, d, k))
        throw std::domain_error("ledger: h outside the admissible bound");

    const long N = to_long(N_d(n, d));
    auto B = [](long a, long b) { return binom(static_cast<unsigned long>(a), b); };

    LedgerEntry e;
    e.n = n;
    e.d = d;
    e.k = k;
    e.h = h;
    e.dim_L_P = B(N + k - 1, N) - B(n + k - 1, n) - h * (N + 1) - 1;
    e.dim_hat_P = B(N + k - 2, N) - B(n + k - 2, n) - h * (N + 1) - 1;
    e.dim_L_F = B(N + k, N) - B(n + k * d, n) - (B(N + k - 2, N) - B(n + k - 2, n)) - 1;
    e.dim_hat_F = B(N + k, N) - B(n + k * d, n) - (B(N + k - 1, N) - B(n + k - 1, n)) - 1;
    e.dim_R = B(N + k - 2, N - 1) - B(n + k - 2, n - 1) - 1;
    e.ledger_total = e.dim_hat_P + e.dim_hat_F + e.dim_R + 2;

    e.vdim_general_fiber = B(N + k, N) - B(n + k * d, n) - h * (N + 1) - 1;
    e.edim_general_fiber = e.vdim_general_fiber < -1 ? mpz_class(-1) : e.vdim_general_fiber;
    // The proof-closing identity manipulates the raw parameter counts; the
    // clamp only matters in the degenerate d = 1 corner where the general
    // fiber system is empty outright.
    e.consistent = (e.ledger_total == e.vdim_general_fiber);
    return e;
}

/// Ledger entry with every constituent recomputed by the rank engine
/// instead of the closed form.
struct BruteForceLedgerEntry {
    LedgerEntry closed_form;
    long computed_L_P = 0, computed_hat_P = 0, computed_L_F = 0, computed_hat_F = 0,
              computed_R = 0;
    bool all_match = false;  // every computed dim equals its (clamped) closed form
    bool verified = false;   // no constituent came back inconclusive
};

inline BruteForceLedgerEntry ledger_bruteforce(int n, int d, int k, long h,
                                               std::uint64_t seed, const EngineOptions& opt = {}) {
    BruteForceLedgerEntry out;
    out.closed_form = ledger(n, d, k, h);
    const int N = static_cast<int>(to_long(N_d(n, d)));

    auto run = [&](const LinearSystemSpec& spec) { return compute_dimension(spec, seed, opt); };

    const DimensionReport rep_L_P = run(subspace_double_points(N, k - 1, n, static_cast<int>(h)));
    const DimensionReport rep_hat_P = run(subspace_double_points(N, k - 2, n, static_cast<int>(h)));
    const DimensionReport rep_L_F = run(veronese_fat_point(n, d, k, k - 1));
    const DimensionReport rep_hat_F = run(veronese_fat_point(n, d, k, k));
    // The gluing system lives on the intersection P^{N-1} and interpolates
    // Lambda_R = P^{n-1}.
    const DimensionReport rep_R = run(subspace_double_points(N - 1, k - 1, n - 1, 0));

    out.computed_L_P = rep_L_P.computed_dim;
    out.computed_hat_P = rep_hat_P.computed_dim;
    out.computed_L_F = rep_L_F.computed_dim;
    out.computed_hat_F = rep_hat_F.computed_dim;
    out.computed_R = rep_R.computed_dim;

    auto clamp = [](const mpz_class& v) { return v < -1 ? mpz_class(-1) : v; };
    out.all_match = mpz_class(out.computed_L_P) == clamp(out.closed_form.dim_L_P) &&
                    mpz_class(out.computed_hat_P) == clamp(out.closed_form.dim_hat_P) &&
                    mpz_class(out.computed_L_F) == clamp(out.closed_form.dim_L_F) &&
                    mpz_class(out.computed_hat_F) == clamp(out.closed_form.dim_hat_F) &&
                    mpz_class(out.computed_R) == clamp(out.closed_form.dim_R);
    out.verified = rep_L_P.verdict != Verdict::InconclusiveExcess &&
                   rep_hat_P.verdict != Verdict::InconclusiveExcess &&
                   rep_L_F.verdict != Verdict::InconclusiveExcess &&
                   rep_hat_F.verdict != Verdict::InconclusiveExcess &&
                   rep_R.verdict != Verdict::InconclusiveExcess;
    return out;
}

/// CSV export: one row per entry with the five constituent dims, the ledger
/// total, the expected dimension of the general fiber and the consistency flag.
inline std::string ledger_csv_header() {
    return "n,d,k,h,dim_L_P,dim_hat_P,dim_L_F,dim_hat_F,dim_R,ledger_total,edim_general_fiber,consistent";
}

inline std::string ledger_csv_row(const LedgerEntry& e) {
    std::ostringstream os;
    os << e.n << ',' << e.d << ',' << e.k << ',' << e.h << ',' << e.dim_L_P << ',' << e.dim_hat_P
       << ',' << e.dim_L_F << ',' << e.dim_hat_F << ',' << e.dim_R << ',' << e.ledger_total << ','
       << e.edim_general_fiber << ',' << (e.consistent ? "true" : "false");
    return os.str();
}

}  // namespace powsec
