#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include "genocchi/errors.hpp"
#include "genocchi/triangles.hpp"

using namespace genocchi;

namespace {

// Dense hand iteration of the boustrophedon with support j <= ceil(i/2),
// in 64-bit integers. Good for the first 20 rows.
std::vector<std::vector<std::int64_t>> seidel_oracle(int rows) {
    std::vector<std::vector<std::int64_t>> g(rows + 2, std::vector<std::int64_t>(rows + 3, 0));
    g[1][1] = 1;
    for (int i = 2; i <= rows; ++i) {
        const int top = (i + 1) / 2;
        if (i % 2 == 1)
            for (int j = 1; j <= top; ++j) g[i][j] = g[i][j - 1] + g[i - 1][j];
        else
            for (int j = top; j >= 1; --j) g[i][j] = g[i - 1][j] + g[i][j + 1];
    }
    return g;
}

// The same recurrence read literally: support j <= i.
std::int64_t literal_support_g41() {
    std::int64_t g[5][6] = {};
    g[1][1] = 1;
    for (int i = 2; i <= 4; ++i) {
        if (i % 2 == 1)
            for (int j = 1; j <= i; ++j) g[i][j] = g[i][j - 1] + g[i - 1][j];
        else
            for (int j = i; j >= 1; --j) g[i][j] = g[i - 1][j] + g[i][j + 1];
    }
    return g[4][1];
}

}  // namespace

TEST_CASE("seidel entries") {
    CHECK(seidel_entry(1, 1) == 1);
    CHECK(seidel_entry(2, 2) == 0);
    CHECK(seidel_entry(4, 1) == 2);
    CHECK(seidel_entry(7, 9) == 0);
    CHECK_THROWS_AS(seidel_entry(0, 1), std::out_of_range);
}

TEST_CASE("seidel table matches an independent hand iteration") {
    const auto oracle = seidel_oracle(20);
    for (int i = 1; i <= 20; ++i)
        for (int j = 1; j <= 12; ++j) CHECK(seidel_entry(i, j) == static_cast<long>(oracle[i][j]));
}

TEST_CASE("literal support j <= i would miss H_3") {
    // g_{4,1} = 3 under the literal support, but H_3 = 2.
    CHECK(literal_support_g41() == 3);
    CHECK(median_genocchi(1) == 2);
}

TEST_CASE("published sequences") {
    const std::vector<long> g{1, 1, 3, 17, 155, 2073};
    for (std::size_t n = 1; n <= g.size(); ++n) CHECK(genocchi::genocchi(static_cast<int>(n)) == g[n - 1]);
    const std::vector<long> h_odd{1, 2, 8, 56, 608};
    for (std::size_t n = 0; n < h_odd.size(); ++n) CHECK(median_genocchi(n) == h_odd[n]);
    const std::vector<long> h{1, 1, 2, 7, 38, 295};
    for (std::size_t n = 0; n < h.size(); ++n) CHECK(normalized_genocchi(n) == h[n]);
    CHECK_THROWS_AS(genocchi::genocchi(0), std::out_of_range);
}

TEST_CASE("kreweras entries and rows") {
    CHECK(kreweras(3, 2) == 3);
    CHECK(kreweras(5, 3) == 81);
    CHECK(kreweras(6, 1) == 295);
    CHECK(kreweras_row(1) == BigRow{1});
    CHECK(kreweras_row(4) == BigRow{7, 12, 12, 7});
    CHECK(kreweras_row(6) == BigRow{295, 552, 702, 702, 552, 295});
    CHECK_THROWS_AS(kreweras(3, 0), std::out_of_range);
    CHECK_THROWS_AS(kreweras(3, 4), std::out_of_range);
    CHECK_THROWS_AS(kreweras_row(0), std::out_of_range);
}

TEST_CASE("kreweras identities hold exactly up to row 60") {
    for (std::size_t n = 1; n <= 60; ++n) {
        CAPTURE(n);
        CHECK(kreweras_symmetric(n));
        CHECK(kreweras_border(n));
        CHECK(kreweras_row_sum(n));
        CHECK(kreweras_difference(n));
    }
    // Row 60 is far outside 64-bit range.
    CHECK(mpz_sizeinbase(kreweras(60, 30).get_mpz_t(), 2) > 64);
}

TEST_CASE("difference identity by direct summation, row 7") {
    const BigRow row = kreweras_row(7), prev = kreweras_row(6);
    for (int k = 1; k <= 7; ++k) {
        const BigInt lhs = row[k - 1] - (k >= 2 ? row[k - 2] : BigInt(0));
        BigInt rhs = 0;
        for (int i = k; i <= 6; ++i) rhs += prev[i - 1];
        for (int i = 1; i <= k - 2; ++i) rhs -= prev[i - 1];
        CHECK(lhs == rhs);
    }
}

TEST_CASE("2^n divides H_{2n+1} up to n = 200") {
    for (std::size_t n = 0; n <= 200; ++n) CHECK(median_divisible(n));
    CHECK_NOTHROW(normalized_genocchi(200));
}

TEST_CASE("fresh tables agree with the shared ones regardless of fill order") {
    SeidelTable seidel;
    CHECK(seidel.entry(30, 3) == seidel_entry(30, 3));
    CHECK(seidel.rows_computed() == 30);
    CHECK(seidel.entry(5, 2) == seidel_entry(5, 2));
    KrewerasTable kreweras_fresh;
    CHECK(kreweras_fresh.row(12) == kreweras_row(12));
    CHECK(kreweras_fresh.entry(3, 2) == 3);
}

TEST_CASE("concurrent readers see identical values") {
    SeidelTable table;
    std::vector<BigInt> results(8);
    {
        std::vector<std::jthread> threads;
        for (int t = 0; t < 8; ++t)
            threads.emplace_back([&, t] { results[t] = table.entry(80 + 2 * (t % 2), 1); });
    }
    for (int t = 0; t < 8; ++t) CHECK(results[t] == median_genocchi(t % 2 == 0 ? 39 : 40));
}
