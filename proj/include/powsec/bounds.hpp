#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "powsec/binomial.hpp"
#include "powsec/secant.hpp"

namespace powsec {

/// One row of the bound comparison for fixed (n, k) and varying d.
struct BoundsRow {
    int d = 0;
    mpz_class main_bound;     // non-defectivity bound
    mpz_class thm2_bound;     // identifiability bound (may be negative: vacuous)
    mpz_class nenashev_bound; // may be negative: vacuous
    mpq_class generic_rank;   // expected generic rank, reduced fraction
    mpz_class fos_bound;      // k^n

    mpz_class generic_rank_ceil() const {
        mpz_class c;
        mpz_cdiv_q(c.get_mpz_t(), generic_rank.get_num_mpz_t(), generic_rank.get_den_mpz_t());
        return c;
    }
};

/// floor(C(N+k-3, N) / (N+1)) with N = N_d(n, d): powers of degree-d forms
/// are certified non-defective up to this many summands (k >= 3).
inline mpz_class bound_main(int n, int d, int k) {
    if (k < 3) throw std::invalid_argument("bound_main: requires k >= 3");
    const mpz_class N = N_d(n, d);
    const mpz_class num = binom(mpz_class(N + k - 3), to_long(N));
    mpz_class Np1 = N + 1, b;
    mpz_fdiv_q(b.get_mpz_t(), num.get_mpz_t(), Np1.get_mpz_t());
    return b;
}

/// floor(C(n+dk, n) / C(n+d, n) - C(n+d, n)); negative values mean the
/// bound says nothing.
inline mpz_class bound_nenashev(int n, int d, int k) {
    if (n < 1 || d < 1 || k < 1) throw std::invalid_argument("bound_nenashev: requires n, d, k >= 1");
    const mpz_class A = binom(static_cast<unsigned long>(n + d * k), static_cast<long>(n));
    const mpz_class B = binom(static_cast<unsigned long>(n + d), static_cast<long>(n));
    mpz_class q;
    const mpz_class num = A - B * B;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), B.get_mpz_t());
    return q;
}

/// The expected generic rank C(n+kd, n) / C(n+d, n) as a reduced fraction.
inline mpq_class generic_rank_expected(int n, int d, int k) {
    mpq_class q(binom(static_cast<unsigned long>(n + d * k), static_cast<long>(n)),
                binom(static_cast<unsigned long>(n + d), static_cast<long>(n)));
    q.canonicalize();
    return q;
}

inline mpz_class fos_bound(int n, int k) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(n));
    return r;
}

struct ComparisonTable {
    int n = 0, k = 0;
    std::vector<BoundsRow> rows;
    // Smallest d in range with thm2_bound > nenashev_bound; -1 if none.
    int crossover_d = -1;
};

inline ComparisonTable comparison_table(int n, int k, int d_from, int d_to) {
    if (k < 3) throw std::invalid_argument("comparison_table: requires k >= 3");
    if (d_from < 1 || d_to < d_from) throw std::invalid_argument("comparison_table: bad degree range");
    ComparisonTable table;
    table.n = n;
    table.k = k;
    for (int d = d_from; d <= d_to; ++d) {
        BoundsRow row;
        row.d = d;
        row.main_bound = bound_main(n, d, k);
        row.thm2_bound = identifiability_bound(n, d, k);
        row.nenashev_bound = bound_nenashev(n, d, k);
        row.generic_rank = generic_rank_expected(n, d, k);
        row.fos_bound = fos_bound(n, k);
        if (table.crossover_d < 0 && row.thm2_bound > row.nenashev_bound) table.crossover_d = d;
        table.rows.push_back(std::move(row));
    }
    return table;
}

inline std::string bounds_csv_header() {
    return "d,main_bound,thm2_bound,nenashev_bound,generic_rank_num,generic_rank_den,fos_bound";
}

inline std::string bounds_csv_row(const BoundsRow& r) {
    std::ostringstream os;
    os << r.d << ',' << r.main_bound << ',' << r.thm2_bound << ',' << r.nenashev_bound << ','
       << r.generic_rank.get_num() << ',' << r.generic_rank.get_den() << ',' << r.fos_bound;
    return os.str();
}

namespace bounds_detail {

/// Real-valued (un-floored) curves for the plot, matching the printed
/// figure rather than the integer tables.
inline double curve_thm2(int n, int d, int k) {
    const double N = mpz_class(N_d(n, d)).get_d();
    const double b1 = binom(mpz_class(N_d(n, d) + k - 3), to_long(N_d(n, d))).get_d() / (N + 1) - 1;
    const double b2 = binom(static_cast<unsigned long>(n + k * d), static_cast<long>(n)).get_d() / (N + 1) - 1;
    return b1 < b2 ? b1 : b2;
}

inline double curve_nenashev(int n, int d, int k) {
    const double A = binom(static_cast<unsigned long>(n + d * k), static_cast<long>(n)).get_d();
    const double B = binom(static_cast<unsigned long>(n + d), static_cast<long>(n)).get_d();
    return A / B - B;
}

inline double curve_rank(int n, int d, int k) {
    const double A = binom(static_cast<unsigned long>(n + d * k), static_cast<long>(n)).get_d();
    const double B = binom(static_cast<unsigned long>(n + d), static_cast<long>(n)).get_d();
    return A / B;
}

inline std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

}  // namespace bounds_detail

/// Fixed 800x600 line chart on a log-10 vertical axis: identifiability
/// bound in blue, Nenashev in red, expected generic rank in green.
/// Non-positive values have no logarithm and are simply not drawn.
inline std::string comparison_svg(const ComparisonTable& table) {
    using namespace bounds_detail;
    const int W = 800, H = 600, ml = 70, mr = 20, mt = 20, mb = 50;
    const int d_from = table.rows.front().d, d_to = table.rows.back().d;

    double ymax = 1.0;
    for (const auto& row : table.rows) {
        ymax = std::max(ymax, curve_thm2(table.n, row.d, table.k));
        ymax = std::max(ymax, curve_nenashev(table.n, row.d, table.k));
        ymax = std::max(ymax, curve_rank(table.n, row.d, table.k));
    }
    const double logmax = std::ceil(std::log10(ymax));

    auto xpix = [&](double d) {
        return ml + (d - d_from) / std::max(1.0, double(d_to - d_from)) * (W - ml - mr);
    };
    auto ypix = [&](double v) {
        return mt + (1.0 - std::log10(v) / logmax) * (H - mt - mb);
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
        << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
    svg << "  <rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << (W - ml - mr)
        << "\" height=\"" << (H - mt - mb) << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int e = 0; e <= static_cast<int>(logmax); ++e) {
        const double y = ypix(std::pow(10.0, e));
        svg << "  <text x=\"" << (ml - 8) << "\" y=\"" << fmt(y)
            << "\" text-anchor=\"end\" font-size=\"12\">1e" << e << "</text>\n";
    }
    for (const auto& row : table.rows) {
        svg << "  <text x=\"" << fmt(xpix(row.d)) << "\" y=\"" << (H - mb + 20)
            << "\" text-anchor=\"middle\" font-size=\"12\">" << row.d << "</text>\n";
    }

    struct Curve {
        const char* color;
        double (*f)(int, int, int);
    };
    const Curve curves[] = {{"blue", curve_thm2}, {"red", curve_nenashev}, {"green", curve_rank}};
    for (const auto& c : curves) {
        std::string points;
        for (const auto& row : table.rows) {
            const double v = c.f(table.n, row.d, table.k);
            if (v <= 0) continue;
            points += fmt(xpix(row.d)) + "," + fmt(ypix(v)) + " ";
        }
        if (!points.empty()) points.pop_back();
        svg << "  <polyline fill=\"none\" stroke=\"" << c.color << "\" stroke-width=\"2\" points=\""
            << points << "\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace powsec
