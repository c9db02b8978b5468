#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <powsec/bounds.hpp>
#include <powsec/serialize.hpp>

using namespace powsec;

TEST_CASE("main bound examples") {
    CHECK(bound_main(1, 2, 5) == 2);  // floor(C(4,2)/3)
    CHECK(bound_main(2, 3, 5) == 5);  // floor(55/10)
    CHECK(bound_main(2, 2, 3) == 0);
    CHECK_THROWS_AS(bound_main(1, 2, 2), std::invalid_argument);
}

TEST_CASE("k = 3 yields the empty bound for every (n, d)") {
    for (int n = 1; n <= 4; ++n)
        for (int d = 1; d <= 5; ++d) CHECK(bound_main(n, d, 3) == 0);
}

TEST_CASE("nenashev bound examples") {
    CHECK(bound_nenashev(2, 2, 5) == 5);   // floor(66/6 - 6)
    CHECK(bound_nenashev(2, 3, 5) == 3);   // floor(136/10 - 10)
    CHECK(bound_nenashev(1, 1, 2) == -1);  // floor(3/2 - 2): vacuous
}

TEST_CASE("expected generic rank") {
    for (int k = 1; k <= 6; ++k) {
        mpq_class expected(binom(static_cast<unsigned long>(2 + k), 2L), 3);
        expected.canonicalize();
        CHECK(generic_rank_expected(2, 1, k) == expected);
    }
    CHECK(generic_rank_expected(2, 2, 5) == 11);
    CHECK(generic_rank_expected(1, 2, 3) == mpq_class(7, 3));
    CHECK(generic_rank_expected(2, 2, 5).get_den() == 1);
}

TEST_CASE("identifiability bound sits strictly below the defectivity bound") {
    for (int n = 1; n <= 3; ++n)
        for (int d = 1; d <= 5; ++d)
            for (int k = 3; k <= 7; ++k)
                CHECK(identifiability_bound(n, d, k) <= bound_main(n, d, k) - 1);
}

TEST_CASE("fos bound is k^n") {
    CHECK(fos_bound(2, 5) == 25);
    CHECK(fos_bound(3, 2) == 8);
    CHECK(fos_bound(1, 7) == 7);
}

TEST_CASE("comparison table: the identifiability bound overtakes Nenashev's") {
    auto table = comparison_table(2, 5, 2, 10);
    REQUIRE(table.rows.size() == 9);
    for (const auto& row : table.rows) {
        if (row.d >= 4) CHECK(row.thm2_bound > row.nenashev_bound);
    }
    // The computed crossover: already at d = 3 for these parameters.
    CHECK(table.crossover_d <= 4);
    CHECK(table.crossover_d == 3);
}

TEST_CASE("asymptotics: the main bound grows like d^2 at n = 2, k = 5") {
    // Ratio window frozen from the computed sequence: monotone decreasing
    // from 14/36 at d = 6 toward the limit 1/4.
    mpq_class prev;
    bool first = true;
    for (int d = 6; d <= 14; ++d) {
        mpq_class ratio(bound_main(2, d, 5), mpz_class(d) * d);
        ratio.canonicalize();
        CHECK(ratio >= mpq_class(1, 4));
        CHECK(ratio <= mpq_class(2, 5));
        if (!first) CHECK(ratio < prev);
        prev = ratio;
        first = false;
    }
}

TEST_CASE("for large degree the main bound keeps growing while Nenashev's is vacuous") {
    mpz_class prev = -1;
    for (int d = 6; d <= 14; ++d) {
        CHECK(bound_nenashev(2, d, 5) < 0);
        const mpz_class cur = bound_main(2, d, 5);
        CHECK(cur > prev);
        prev = cur;
    }
}

TEST_CASE("csv rows carry the exact interface columns") {
    auto table = comparison_table(2, 5, 2, 3);
    CHECK(bounds_csv_header() ==
          "d,main_bound,thm2_bound,nenashev_bound,generic_rank_num,generic_rank_den,fos_bound");
    CHECK(bounds_csv_row(table.rows[0]) == "2,3,2,5,11,1,25");
    json j = to_json(table.rows[0]);
    CHECK(j["main_bound"] == "3");
    CHECK(j["generic_rank_num"] == "11");
}

TEST_CASE("svg chart renders the three curves") {
    auto table = comparison_table(2, 5, 2, 10);
    auto svg = comparison_svg(table);
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.find("stroke=\"blue\"") != std::string::npos);
    CHECK(svg.find("stroke=\"red\"") != std::string::npos);
    CHECK(svg.find("stroke=\"green\"") != std::string::npos);
    CHECK(svg.find("width=\"800\" height=\"600\"") != std::string::npos);
}
