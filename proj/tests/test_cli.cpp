#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const char* cli = std::getenv("POWSEC_CLI");
    REQUIRE(cli != nullptr);
    const std::string cmd = std::string(cli) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

}  // namespace

TEST_CASE("identical run configurations produce byte-identical output") {
    for (const std::string& args :
         {std::string("dim --system V2h --n 1 --d 2 --k 4 --h 1 --seed 99"),
          std::string("secant --n 2 --d 2 --k 3 --h 1 --seed 7"),
          std::string("report --n 2 --k 5 --d 2..8 --format csv"),
          std::string("toric --n 2 --d 3 --emit svg"),
          std::string("ledger --n 1 --d 2 --k 5 --format csv")}) {
        auto a = run(args);
        auto b = run(args);
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.out == b.out);
        CHECK(!a.out.empty());
    }
}

TEST_CASE("certified systems exit zero") {
    CHECK(run("dim --system V2h --n 1 --d 2 --k 4 --h 1").exit_code == 0);
    CHECK(run("dim --system AH --N 4 --k 3 --h 7").exit_code == 0);  // closed form
    CHECK(run("dim --system AH --N 2 --k 4 --h 5").exit_code == 0);  // closed form
    CHECK(run("secant --n 1 --d 2 --k 3 --h 1").exit_code == 0);

    auto squares = run("secant --n 1 --d 2 --k 2 --h 2");
    CHECK(squares.exit_code == 0);
    CHECK(squares.out.find("\"computed_secant_dim\": 4") != std::string::npos);
}

TEST_CASE("inconclusive and defective cases exit two") {
    // Sums of two squares of ternary quadrics are defective.
    CHECK(run("secant --n 2 --d 2 --k 2 --h 2").exit_code == 2);
    // Verdict disagreement between the two methods.
    CHECK(run("secant --n 1 --d 2 --k 4 --h 2 --cross").exit_code == 2);
}

TEST_CASE("usage and configuration errors exit one") {
    CHECK(run("dim --system nonsense --n 1 --d 2 --k 3").exit_code == 1);
    CHECK(run("dim --system V2h --n 1 --d 2 --k 3 --prime 100").exit_code == 1);  // not prime
    CHECK(run("dim --system V2h --n 1 --d 2 --k 3 --prime 5").exit_code == 1);    // p <= d*k
    CHECK(run("bounds --n 2 --d 2 --k 2").exit_code == 1);                        // k < 3
    CHECK(run("dim --system V2h --n 2 --d 3 --k 5 --size-cap 100").exit_code == 1);
    CHECK(run("nosuchcommand").exit_code == 1);
}

TEST_CASE("seed overrides flow through the environment") {
    auto flagged = run("dim --system V2h --n 1 --d 2 --k 4 --h 1 --seed 4242");
    const char* cli = std::getenv("POWSEC_CLI");
    REQUIRE(cli != nullptr);
    const std::string cmd = "POWSEC_SEED=4242 " + std::string(cli) +
                            " dim --system V2h --n 1 --d 2 --k 4 --h 1 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    pclose(pipe);
    CHECK(out == flagged.out);
}

TEST_CASE("json is the default format everywhere") {
    for (const std::string& args : {std::string("dim --system Vfat --n 1 --d 2 --k 3 --a 2"),
                                   std::string("dim --system Pifat --n 2 --d 2 --k 2 --a 1"),
                                   std::string("dim --system Lambda2h --N 4 --k 3 --n 1 --h 2"),
                                   std::string("secant --n 1 --d 1 --k 3 --h 2"),
                                   std::string("bounds --n 2 --d 3 --k 5"),
                                   std::string("toric --n 2 --d 2"),
                                   std::string("ledger --n 1 --d 2 --k 4"),
                                   std::string("report --n 2 --k 5 --d 2..4")}) {
        auto res = run(args);
        REQUIRE(!res.out.empty());
        CHECK((res.out[0] == '{' || res.out[0] == '['));
    }
}
