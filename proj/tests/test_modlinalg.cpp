#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <powsec/fp.hpp>
#include <powsec/fp_matrix.hpp>

#include <algorithm>
#include <set>

using namespace powsec;

namespace {

// Independent oracle: textbook Gauss-Jordan with last-nonzero pivoting
// (deliberately a different pivot rule than the library).
std::size_t naive_rank(std::vector<std::vector<std::uint64_t>> a, std::uint64_t p) {
    const PrimeField f(p);
    if (a.empty()) return 0;
    const std::size_t rows = a.size(), cols = a[0].size();
    std::size_t rank = 0;
    std::vector<bool> used(rows, false);
    for (std::size_t col = 0; col < cols; ++col) {
        std::size_t piv = rows;
        for (std::size_t r = 0; r < rows; ++r)
            if (!used[r] && a[r][col] != 0) piv = r;  // keep the last one
        if (piv == rows) continue;
        used[piv] = true;
        ++rank;
        const std::uint64_t inv = f.inv(a[piv][col]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == piv || a[r][col] == 0) continue;
            const std::uint64_t fac = f.mul(a[r][col], inv);
            for (std::size_t c = 0; c < cols; ++c) a[r][c] = f.sub(a[r][c], f.mul(fac, a[piv][c]));
        }
    }
    return rank;
}

FpMatrix from_rows(const std::vector<std::vector<std::uint64_t>>& rows, const PrimeField& f) {
    FpMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size(), f);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) m.set(r, c, rows[r][c]);
    return m;
}

}  // namespace

TEST_CASE("primality checking") {
    CHECK_NOTHROW(PrimeField(2));
    CHECK_NOTHROW(PrimeField(65521));
    CHECK_NOTHROW(PrimeField(2147483647ull));
    CHECK_NOTHROW(PrimeField((1ull << 61) - 1));
    CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(65536), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(2147483647ull * 2 + 1), std::invalid_argument);
}

TEST_CASE("field arithmetic round trips") {
    PrimeField f(101);
    for (std::uint64_t a = 1; a < 101; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK(f.reduce(mpz_class(-1)) == 100);
    mpz_class big("1000000000000000000000");
    mpz_class m = big % 101;
    CHECK(f.reduce(big) == m.get_ui());
}

TEST_CASE("rank of simple matrices") {
    PrimeField f(65521);
    FpMatrix id(3, 3, f);
    for (int i = 0; i < 3; ++i) id.set(i, i, 1);
    CHECK(id.rank() == 3);

    FpMatrix zero(4, 7, f);
    CHECK(zero.rank() == 0);

    FpMatrix prop = from_rows({{1, 2, 3}, {2, 4, 6}}, f);
    CHECK(prop.rank() == 1);
}

TEST_CASE("rank agrees with the naive oracle on random matrices") {
    const std::uint64_t p = 101;
    PrimeField f(p);
    Rng rng(20240601);
    int checked = 0;
    for (int seed_trial = 0; seed_trial < 1000; ++seed_trial) {
        const std::size_t rows = 1 + rng.below(40);
        const std::size_t cols = 1 + rng.below(40);
        std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
        // Mix in low-rank structure half the time so ranks are not always full.
        const bool structured = rng.below(2) == 0;
        if (structured) {
            const std::size_t inner = 1 + rng.below(5);
            std::vector<std::vector<std::uint64_t>> u(rows, std::vector<std::uint64_t>(inner));
            std::vector<std::vector<std::uint64_t>> v(inner, std::vector<std::uint64_t>(cols));
            for (auto& row : u)
                for (auto& x : row) x = rng.below(p);
            for (auto& row : v)
                for (auto& x : row) x = rng.below(p);
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j) {
                    std::uint64_t s = 0;
                    for (std::size_t t = 0; t < inner; ++t) s = f.add(s, f.mul(u[i][t], v[t][j]));
                    a[i][j] = s;
                }
        } else {
            for (auto& row : a)
                for (auto& x : row) x = rng.below(p);
        }
        CHECK(from_rows(a, f).rank() == naive_rank(a, p));
        ++checked;
    }
    CHECK(checked == 1000);
}

TEST_CASE("rank invariants: stacking, permutation, scaling") {
    PrimeField f(2147483647ull);
    Rng rng(7);
    for (int t = 0; t < 20; ++t) {
        const std::size_t rows = 2 + rng.below(10), cols = 2 + rng.below(10);
        std::vector<std::vector<std::uint64_t>> rowsdata(rows, std::vector<std::uint64_t>(cols));
        for (auto& row : rowsdata)
            for (auto& x : row) x = rng.below(100);  // small values, frequent dependencies
        FpMatrix a = from_rows(rowsdata, f);

        FpMatrix doubled = a;
        doubled.append_rows(a);
        CHECK(doubled.rank() == a.rank());

        auto shuffled = rowsdata;
        for (std::size_t i = shuffled.size(); i > 1; --i)
            std::swap(shuffled[i - 1], shuffled[rng.below(i)]);
        for (auto& row : shuffled) {
            const std::uint64_t s = 1 + rng.below(f.p() - 1);
            for (auto& x : row) x = f.mul(x, s);
        }
        CHECK(from_rows(shuffled, f).rank() == a.rank());
    }
}

TEST_CASE("random_point determinism and distinctness") {
    PrimeField f(2147483647ull);
    Rng a(42), b(42), c(43);
    auto pa = random_point(a, f, 3);
    auto pb = random_point(b, f, 3);
    auto pc = random_point(c, f, 3);
    CHECK(pa == pb);
    CHECK(pa != pc);

    Rng e(1);
    CHECK(random_point(e, f, 0).empty());

    // Distinct seeds give distinct vectors essentially always.
    std::set<std::vector<std::uint64_t>> seen;
    for (std::uint64_t s = 0; s < 200; ++s) {
        Rng r(s);
        seen.insert(random_point(r, f, 3));
    }
    CHECK(seen.size() == 200);
}
