#pragma once

#include <cstddef>
#include <mutex>
#include <vector>

#include <gmpxx.h>

namespace genocchi {

using BigInt = mpz_class;
using BigRow = std::vector<BigInt>;

/// Seidel triangle g_{i,j}, grown one row at a time on demand.
///
/// Row i stores g_{i,1..ceil(i/2)}; every entry outside that support is 0.
/// Odd rows are accumulated left to right from the row above, even rows
/// right to left. With this support the first column of row 2n+2 is the
/// median Genocchi number H_{2n+1} and the last entry of row 2n-1 is the
/// Genocchi number G_{2n}.
///
/// Thread-safe: rows are appended under a mutex and never modified after.
class SeidelTable {
public:
    SeidelTable();

    BigInt entry(std::size_t i, std::size_t j) const;
    BigRow row(std::size_t i) const;

    std::size_t rows_computed() const;

private:
    void ensure_rows(std::size_t count) const;

    mutable std::mutex mutex_;
    mutable std::vector<BigRow> rows_;
};

/// Kreweras triangle h_{n,k}, 1 <= k <= n, grown on demand.
///
/// h_{1,1} = 1; for n >= 2 the first entry is the previous row sum, the
/// second is 2 h_{n,1} - h_{n-1,1}, and the rest follow the four-term
/// recurrence h_{n,k} = 2h_{n,k-1} - h_{n,k-2} - h_{n-1,k-1} - h_{n-1,k-2}.
class KrewerasTable {
public:
    KrewerasTable();

    BigInt entry(std::size_t n, std::size_t k) const;
    BigRow row(std::size_t n) const;

private:
    void ensure_rows(std::size_t count) const;

    mutable std::mutex mutex_;
    mutable std::vector<BigRow> rows_;
};

// Process-wide memoized tables behind the free functions below.
const SeidelTable& seidel_table();
const KrewerasTable& kreweras_table();

/// g_{i,j}; i, j >= 1. Zero outside the support j <= ceil(i/2).
BigInt seidel_entry(std::size_t i, std::size_t j);

/// G_{2n} = g_{2n-1,n}, n >= 1.
BigInt genocchi(std::size_t n);

/// H_{2n+1} = g_{2n+2,1}, n >= 0.
BigInt median_genocchi(std::size_t n);

/// h_n = H_{2n+1} / 2^n. Throws InternalError if the division is inexact.
BigInt normalized_genocchi(std::size_t n);

/// h_{n,k}. Throws std::out_of_range unless 1 <= k <= n.
BigInt kreweras(std::size_t n, std::size_t k);

/// (h_{n,1}, ..., h_{n,n}). Throws std::out_of_range for n = 0.
BigRow kreweras_row(std::size_t n);

// Identity predicates over the Kreweras triangle, exact arithmetic.

bool kreweras_symmetric(std::size_t n);       // h_{n,k} = h_{n,n-k+1}
bool kreweras_border(std::size_t n);          // h_{n,n} = h_{n,1} = h_{n-1}, n >= 2
bool kreweras_row_sum(std::size_t n);         // sum_k h_{n,k} = h_n
bool kreweras_difference(std::size_t n);      // first-difference identity, n >= 2
bool median_divisible(std::size_t n);         // 2^n | H_{2n+1}

}  // namespace genocchi
