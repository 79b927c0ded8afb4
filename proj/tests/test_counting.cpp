#include <filesystem>

#include "doctest.h"
#include "juggle/counting.hpp"
#include "juggle/errors.hpp"

using namespace juggle;

namespace {

big_int classic_pattern_count(int b, int n) {
    // Single-ball-at-a-time counting: (1/n) sum over divisors of
    // mu(n/d) ((b+1)^d - b^d).
    big_int sum = 0;
    for (int d : divisors(n)) {
        const int mu = mobius(n / d);
        if (mu == 0) continue;
        big_int term;
        mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(b + 1),
                      static_cast<unsigned long>(d));
        big_int lower;
        mpz_ui_pow_ui(lower.get_mpz_t(), static_cast<unsigned long>(b),
                      static_cast<unsigned long>(d));
        sum += mu * (term - lower);
    }
    REQUIRE(sum % n == 0);
    return sum / n;
}

}  // namespace

TEST_SUITE("counting") {

TEST_CASE("siteswap counts on worked examples") {
    pattern_counter counter;
    for (int n = 1; n <= 5; ++n) CHECK(counter.siteswap_count(0, n) == 1);
    CHECK(counter.siteswap_count(2, 1) == 2);
    CHECK(counter.siteswap_count(3, 1) == 3);
    CHECK(counter.siteswap_count(3, 2) == 27);
}

TEST_CASE("minimal-period siteswap counts") {
    pattern_counter counter;
    CHECK(counter.minimal_siteswap_count(3, 2) == 24);
    CHECK(counter.minimal_siteswap_count(2, 3) == 39);
    for (int b = 0; b <= 4; ++b)
        CHECK(counter.minimal_siteswap_count(b, 1) == counter.siteswap_count(b, 1));
}

TEST_CASE("pattern counts against reference cells") {
    pattern_counter counter;
    CHECK(counter.pattern_count(2, 3) == 13);
    CHECK(counter.pattern_count(3, 7) == 45142);
    CHECK(counter.pattern_count(4, 12) == big_int("72305691686"));
    CHECK(counter.pattern_count(5, 15) == big_int("42542385162393167"));
    CHECK(counter.pattern_count(4, 9, 2) == 21219536);
    CHECK(counter.pattern_count(4, 7, 3) == 1069002);
    CHECK(counter.pattern_count(5, 9, 2) == big_int("360849352"));
}

TEST_CASE("zero-ball edge cases") {
    pattern_counter counter;
    CHECK(counter.pattern_count(0, 1) == 1);
    for (int n = 2; n <= 6; ++n) CHECK(counter.pattern_count(0, n) == 0);
}

TEST_CASE("crossing-refined counts") {
    pattern_counter counter;
    CHECK(counter.siteswap_count_q(3, 1).str("q") == "q^2+q+1");
    for (int b = 0; b <= 4; ++b)
        for (int n = 1; n <= 5; ++n) {
            CHECK(counter.siteswap_count_q(b, n)(big_int(1)) == counter.siteswap_count(b, n));
            CHECK(counter.pattern_count_q(b, n)(big_int(1)) == counter.pattern_count(b, n));
        }
    for (int b = 0; b <= 6; ++b)
        CHECK(counter.pattern_count_q(b, 1)(big_int(1)) ==
              big_int(static_cast<unsigned long>(partition_count(b))));
}

TEST_CASE("capped crossing-refined counts evaluate to capped counts at q = 1") {
    pattern_counter counter;
    for (int b = 0; b <= 4; ++b)
        for (int n = 1; n <= 4; ++n)
            for (int kappa = 1; kappa <= 3; ++kappa) {
                CHECK(counter.siteswap_count_q(b, n, kappa)(big_int(1)) ==
                      counter.siteswap_count(b, n, kappa));
                CHECK(counter.pattern_count_q(b, n, kappa)(big_int(1)) ==
                      counter.pattern_count(b, n, kappa));
            }
}

TEST_CASE("trace identities") {
    pattern_counter counter;
    const auto r3 = counter.trace_identities(3);
    CHECK(r3.trace == 11);
    CHECK(r3.partition_weighted_sum == 3 + 4 + 2 + 2);
    CHECK(r3.ones_power_sum == 1 + 2 + 8);
    CHECK(r3.period1_patterns == 3);
    CHECK(r3.pass());
    CHECK(counter.trace_identities(5).trace == 50);
    for (int b = 0; b <= 10; ++b) CHECK(counter.trace_identities(b).pass());
}

TEST_CASE("divisibility of the minimal-period counts") {
    pattern_counter counter;
    const std::vector<std::optional<int>> kappas{std::nullopt, 1, 2, 3};
    for (const auto& kappa : kappas)
        for (int b = 0; b <= 5; ++b)
            for (int n = 1; n <= 15; ++n) {
                const big_int ms = counter.minimal_siteswap_count(b, n, kappa);
                const big_int jp = counter.pattern_count(b, n, kappa);
                CHECK(jp * n == ms);
            }
}

TEST_CASE("capacity one degenerates to single-ball juggling") {
    pattern_counter counter;
    for (int b = 0; b <= 5; ++b)
        for (int n = 1; n <= 12; ++n)
            CHECK(counter.pattern_count(b, n, 1) == classic_pattern_count(b, n));
}

TEST_CASE("capacity at or above the ball count is no restriction") {
    pattern_counter counter;
    for (int b = 1; b <= 4; ++b)
        for (int n = 1; n <= 6; ++n) {
            CHECK(counter.pattern_count(b, n, b) == counter.pattern_count(b, n));
            CHECK(counter.pattern_count(b, n, b + 3) == counter.pattern_count(b, n));
        }
}

TEST_CASE("trace decomposition over used ball counts") {
    pattern_counter counter;
    for (int b = 0; b <= 4; ++b)
        for (int n = 1; n <= 6; ++n) {
            big_int rhs = counter.siteswap_count(b, n);
            for (int i = 0; i < b; ++i)
                rhs += pow2(static_cast<unsigned long>(b - i - 1)) * counter.siteswap_count(i, n);
            CHECK(counter.trace_power(b, n) == rhs);
        }
    for (int kappa = 2; kappa <= 3; ++kappa)
        for (int b = 0; b <= 4; ++b)
            for (int n = 1; n <= 6; ++n) {
                big_int rhs = counter.siteswap_count(b, n, kappa);
                for (int i = 0; i < b; ++i)
                    rhs += big_int(capped_composition_count(b - i, kappa)) *
                           counter.siteswap_count(i, n, kappa);
                CHECK(counter.trace_power(b, n, kappa) == rhs);
            }
}

TEST_CASE("capacity three matches unbounded counting for b <= 3") {
    pattern_counter counter;
    for (int b = 2; b <= 3; ++b)
        for (int n = 1; n <= 15; ++n)
            CHECK(counter.pattern_count(b, n, 3) == counter.pattern_count(b, n));
}

TEST_CASE("table emits the full grid") {
    pattern_counter counter;
    const auto records = counter.table(2, 3, 1, 4, 2);
    REQUIRE(records.size() == 8);
    CHECK(records[0].balls == 2);
    CHECK(records[0].period == 1);
    CHECK(records[0].capacity == 2);
    CHECK(records[0].patterns == 2);
    CHECK(records.back().balls == 3);
    CHECK(records.back().period == 4);
    CHECK(records.back().patterns == 224);
    CHECK_THROWS_AS(counter.table(3, 2, 1, 4, {}), std::invalid_argument);
}

TEST_CASE("count detail carries provenance") {
    pattern_counter counter;
    const auto d = counter.count(3, 2);
    CHECK(d.siteswaps == 27);
    CHECK(d.minimal_siteswaps == 24);
    CHECK(d.patterns == 12);
    CHECK(!d.traces_used.empty());
    const auto dq = counter.count_q(3, 1);
    CHECK(dq.patterns(big_int(1)) == 3);
}

TEST_CASE("persistent trace cache round-trips") {
    const auto dir = std::filesystem::temp_directory_path() / "juggle-cache-test";
    std::filesystem::remove_all(dir);
    big_int first;
    {
        pattern_counter counter(dir);
        first = counter.trace_power(3, 4);
    }
    REQUIRE(std::filesystem::exists(dir));
    {
        pattern_counter counter(dir);
        CHECK(counter.trace_power(3, 4) == first);
        CHECK(counter.pattern_count(3, 4) == 310);
    }
    std::filesystem::remove_all(dir);
}

}  // TEST_SUITE
