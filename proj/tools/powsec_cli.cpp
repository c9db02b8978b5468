// powsec: certification tool for secant non-defectivity of varieties of
// k-th powers of degree-d forms, via exact rank computations over a prime
// field. All randomness flows from --seed; identical invocations produce
// byte-identical output.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <powsec/apolarity.hpp>
#include <powsec/bounds.hpp>
#include <powsec/degeneration.hpp>
#include <powsec/linear_system.hpp>
#include <powsec/secant.hpp>
#include <powsec/serialize.hpp>
#include <powsec/toric.hpp>

using namespace powsec;

namespace {

struct GlobalConfig {
    std::uint64_t seed = 20240001;
    std::uint64_t prime = PrimeField::kDefaultPrime;
    int trials = 3;
    std::size_t size_cap = 6000;
    std::string format = "json";
};

std::uint64_t env_u64(const char* name, std::uint64_t fallback) {
    const char* v = std::getenv(name);
    if (!v) return fallback;
    return std::strtoull(v, nullptr, 10);
}

int exit_code(Verdict v) {
    switch (v) {
        case Verdict::CertifiedExpected:
        case Verdict::ClosedForm:
            return 0;
        default:
            return 2;
    }
}

EngineOptions engine_options(const GlobalConfig& g) {
    EngineOptions opt;
    opt.field = PrimeField(g.prime);
    opt.trials = g.trials;
    opt.size_cap = g.size_cap;
    return opt;
}

void print_dim_csv(const DimensionReport& r) {
    std::cout << "label,N,k,computed_dim,expected_dim,virtual_dim,verdict,seed,prime,trials\n";
    std::cout << '"' << r.spec.label << "\"," << r.spec.N << ',' << r.spec.k << ','
              << r.computed_dim << ','
              << (r.expected_dim ? std::to_string(*r.expected_dim) : "") << ','
              << (r.virtual_dim ? std::to_string(*r.virtual_dim) : "") << ','
              << to_string(r.verdict) << ',' << r.seed << ',' << r.prime << ',' << r.trials << '\n';
}

std::pair<int, int> parse_range(const std::string& s) {
    const auto dots = s.find("..");
    if (dots == std::string::npos) {
        const int v = std::stoi(s);
        return {v, v};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"powsec: non-defectivity and identifiability certification for powers of forms"};
    app.fallthrough();
    app.set_help_flag("--help", "Print help and exit");

    GlobalConfig g;
    g.seed = env_u64("POWSEC_SEED", g.seed);
    g.prime = env_u64("POWSEC_PRIME", g.prime);
    g.size_cap = static_cast<std::size_t>(env_u64("POWSEC_SIZE_CAP", g.size_cap));

    app.add_option("--seed", g.seed, "Seed for every random choice");
    app.add_option("--prime", g.prime, "Prime modulus for the rank computations");
    app.add_option("--trials", g.trials, "Independent random trials per dimension");
    app.add_option("--size-cap", g.size_cap, "Maximum matrix columns before refusing");
    app.add_option("--format", g.format, "Output format: json, csv or svg where applicable");

    // --- dim ---------------------------------------------------------------
    auto* dim = app.add_subcommand("dim", "Dimension of an interpolation linear system");
    dim->set_help_flag("--help", "Print help and exit");
    std::string system = "V2h";
    int dn = 1, dd = 2, dk = 3, dh = 0, da = 1, dN = 2;
    bool coordinate_lambda = false;
    dim->add_option("--system", system, "V2h | AH | Lambda2h | Vfat | Pifat");
    dim->add_option("--n", dn, "Dimension n of the source projective space");
    dim->add_option("--d", dd, "Veronese degree d");
    dim->add_option("--k", dk, "Degree of the hypersurfaces");
    dim->add_option("--h", dh, "Number of general double points");
    dim->add_option("--a", da, "Fat point multiplicity");
    dim->add_option("--N", dN, "Ambient dimension (AH and Lambda2h systems)");
    dim->add_flag("--coordinate", coordinate_lambda, "Use a coordinate placement for Lambda");

    // --- secant ------------------------------------------------------------
    auto* secant = app.add_subcommand("secant", "Terracini secant dimension of the powers variety");
    secant->set_help_flag("--help", "Print help and exit");
    int sn = 1, sd = 2, sk = 2, sh = 1;
    bool do_cross = false;
    secant->add_option("--n", sn, "Dimension n");
    secant->add_option("--d", sd, "Degree d of the forms");
    secant->add_option("--k", sk, "Power k");
    secant->add_option("--h", sh, "Number of summands");
    secant->add_flag("--cross", do_cross, "Also run the linear-system method and compare verdicts");

    // --- bounds ------------------------------------------------------------
    auto* bounds = app.add_subcommand("bounds", "Bound formulas at a single (n, d, k)");
    int bn = 2, bd = 2, bk = 5;
    bounds->add_option("--n", bn, "Dimension n");
    bounds->add_option("--d", bd, "Degree d");
    bounds->add_option("--k", bk, "Power k");

    // --- toric -------------------------------------------------------------
    auto* toric = app.add_subcommand("toric", "Regular triangulation of d*Delta_n");
    int tn = 2, td = 3;
    std::string emit;
    toric->add_option("--n", tn, "Simplex dimension n");
    toric->add_option("--d", td, "Dilation d");
    toric->add_option("--emit", emit, "json or svg (alias of --format)");

    // --- ledger ------------------------------------------------------------
    auto* ledger_cmd = app.add_subcommand("ledger", "Degeneration dimension ledger");
    ledger_cmd->set_help_flag("--help", "Print help and exit");
    int ln = 1, ld = 2, lk = 4;
    int lh = -1;
    bool brute = false;
    ledger_cmd->add_option("--n", ln, "Dimension n");
    ledger_cmd->add_option("--d", ld, "Degree d");
    ledger_cmd->add_option("--k", lk, "Degree k of the systems (k >= 4)");
    ledger_cmd->add_option("--h", lh, "Single h (default: all admissible)");
    ledger_cmd->add_flag("--bruteforce", brute, "Recompute every constituent by rank");

    // --- report ------------------------------------------------------------
    auto* report = app.add_subcommand("report", "Bound comparison table over a degree range");
    int rn = 2, rk = 5;
    std::string rd = "2..10";
    report->add_option("--n", rn, "Dimension n");
    report->add_option("--k", rk, "Power k (k >= 3)");
    report->add_option("--d", rd, "Degree range, e.g. 2..10");

    app.require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 1 : 1;
    }

    try {
        if (*dim) {
            const auto opt = engine_options(g);
            LinearSystemSpec spec;
            if (system == "V2h") {
                spec = veronese_double_points(dn, dd, dk, dh);
            } else if (system == "AH") {
                spec = double_points(dN, dk, dh);
            } else if (system == "Lambda2h") {
                spec = subspace_double_points(dN, dk, dn, dh,
                                              coordinate_lambda ? SubspacePlacement::Coordinate
                                                                : SubspacePlacement::Random);
            } else if (system == "Vfat") {
                spec = veronese_fat_point(dn, dd, dk, da);
            } else if (system == "Pifat") {
                spec = planes_fat_point(standard_triangulation(dn, dd), dk, da);
            } else {
                std::cerr << "unknown --system " << system << "\n";
                return 1;
            }
            const DimensionReport rep = compute_dimension(spec, g.seed, opt);
            if (g.format == "csv")
                print_dim_csv(rep);
            else
                std::cout << to_json(rep).dump(2) << "\n";
            return exit_code(rep.verdict);
        }

        if (*secant) {
            const auto opt = engine_options(g);
            if (do_cross) {
                const CrossCheckResult res = cross_check(sn, sd, sk, sh, g.seed, opt);
                std::cout << to_json(res).dump(2) << "\n";
                return res.agree ? exit_code(res.secant.verdict) : 2;
            }
            const SecantReport rep = secant_dimension(sn, sd, sk, sh, g.seed, opt);
            std::cout << to_json(rep).dump(2) << "\n";
            return exit_code(rep.verdict);
        }

        if (*bounds) {
            BoundsRow row;
            row.d = bd;
            row.main_bound = bound_main(bn, bd, bk);
            row.thm2_bound = identifiability_bound(bn, bd, bk);
            row.nenashev_bound = bound_nenashev(bn, bd, bk);
            row.generic_rank = generic_rank_expected(bn, bd, bk);
            row.fos_bound = fos_bound(bn, bk);
            if (g.format == "csv") {
                std::cout << bounds_csv_header() << "\n" << bounds_csv_row(row) << "\n";
            } else {
                json j = to_json(row);
                j["generic_rank_ceil"] = row.generic_rank_ceil().get_str();
                std::cout << j.dump(2) << "\n";
            }
            return 0;
        }

        if (*toric) {
            const Triangulation t = standard_triangulation(tn, td);
            std::string fmt = emit.empty() ? g.format : emit;
            if (fmt == "svg") {
                std::cout << triangulation_svg(t);
            } else {
                std::cout << to_json(t).dump(2) << "\n";
            }
            return 0;
        }

        if (*ledger_cmd) {
            const auto opt = engine_options(g);
            std::vector<long> hs;
            if (lh >= 0) {
                hs.push_back(lh);
            } else {
                const long top = to_long(ledger_h_bound(ln, ld, lk));
                for (long h = 0; h <= top; ++h) hs.push_back(h);
            }
            bool all_ok = true;
            if (g.format == "csv") std::cout << ledger_csv_header() << "\n";
            json rows = json::array();
            for (long h : hs) {
                if (brute) {
                    const auto entry = ledger_bruteforce(ln, ld, lk, h, g.seed, opt);
                    all_ok = all_ok && entry.closed_form.consistent && entry.all_match && entry.verified;
                    if (g.format == "csv")
                        std::cout << ledger_csv_row(entry.closed_form) << "\n";
                    else
                        rows.push_back(to_json(entry));
                } else {
                    const auto entry = ledger(ln, ld, lk, h);
                    all_ok = all_ok && entry.consistent;
                    if (g.format == "csv")
                        std::cout << ledger_csv_row(entry) << "\n";
                    else
                        rows.push_back(to_json(entry));
                }
            }
            if (g.format != "csv") std::cout << rows.dump(2) << "\n";
            return all_ok ? 0 : 2;
        }

        if (*report) {
            const auto [d_from, d_to] = parse_range(rd);
            const ComparisonTable table = comparison_table(rn, rk, d_from, d_to);
            if (g.format == "csv") {
                std::cout << bounds_csv_header() << "\n";
                for (const auto& row : table.rows) std::cout << bounds_csv_row(row) << "\n";
            } else if (g.format == "svg") {
                std::cout << comparison_svg(table);
            } else {
                std::cout << to_json(table).dump(2) << "\n";
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
