#include "genocchi/triangles.hpp"

#include <stdexcept>
#include <string>

#include "genocchi/errors.hpp"

namespace genocchi {

namespace {

std::size_t support(std::size_t i) { return (i + 1) / 2; }

// Zero-extended lookup into a 1-indexed row stored 0-indexed.
const BigInt& at_or_zero(const BigRow& row, std::size_t j) {
    static const BigInt zero = 0;
    if (j == 0 || j > row.size()) return zero;
    return row[j - 1];
}

}  // namespace

SeidelTable::SeidelTable() { rows_.push_back(BigRow{1}); }

void SeidelTable::ensure_rows(std::size_t count) const {
    while (rows_.size() < count) {
        const std::size_t i = rows_.size() + 1;
        const BigRow& above = rows_.back();
        BigRow row(support(i));
        if (i % 2 == 1) {
            for (std::size_t j = 1; j <= row.size(); ++j)
                row[j - 1] = at_or_zero(row, j - 1) + at_or_zero(above, j);
        } else {
            for (std::size_t j = row.size(); j >= 1; --j)
                row[j - 1] = at_or_zero(above, j) + at_or_zero(row, j + 1);
        }
        rows_.push_back(std::move(row));
    }
}

BigRow SeidelTable::row(std::size_t i) const {
    if (i == 0) throw std::out_of_range("Seidel rows are indexed from 1");
    std::lock_guard lock(mutex_);
    ensure_rows(i);
    return rows_[i - 1];
}

BigInt SeidelTable::entry(std::size_t i, std::size_t j) const {
    if (i == 0 || j == 0) throw std::out_of_range("Seidel entries are indexed from 1");
    if (j > support(i)) return 0;
    std::lock_guard lock(mutex_);
    ensure_rows(i);
    return rows_[i - 1][j - 1];
}

std::size_t SeidelTable::rows_computed() const {
    std::lock_guard lock(mutex_);
    return rows_.size();
}

KrewerasTable::KrewerasTable() { rows_.push_back(BigRow{1}); }

void KrewerasTable::ensure_rows(std::size_t count) const {
    while (rows_.size() < count) {
        const std::size_t n = rows_.size() + 1;
        const BigRow& prev = rows_.back();
        BigRow row(n);
        for (const BigInt& h : prev) row[0] += h;
        row[1] = 2 * row[0] - prev[0];
        for (std::size_t k = 3; k <= n; ++k) {
            row[k - 1] = 2 * row[k - 2] - row[k - 3] - at_or_zero(prev, k - 1) -
                         at_or_zero(prev, k - 2);
        }
        rows_.push_back(std::move(row));
    }
}

BigRow KrewerasTable::row(std::size_t n) const {
    if (n == 0) throw std::out_of_range("Kreweras rows are indexed from 1");
    std::lock_guard lock(mutex_);
    ensure_rows(n);
    return rows_[n - 1];
}

BigInt KrewerasTable::entry(std::size_t n, std::size_t k) const {
    if (n == 0 || k == 0 || k > n) {
        throw std::out_of_range("Kreweras entry (" + std::to_string(n) + "," +
                                std::to_string(k) + ") outside 1 <= k <= n");
    }
    std::lock_guard lock(mutex_);
    ensure_rows(n);
    return rows_[n - 1][k - 1];
}

const SeidelTable& seidel_table() {
    static const SeidelTable table;
    return table;
}

const KrewerasTable& kreweras_table() {
    static const KrewerasTable table;
    return table;
}

BigInt seidel_entry(std::size_t i, std::size_t j) { return seidel_table().entry(i, j); }

BigInt genocchi(std::size_t n) {
    if (n == 0) throw std::out_of_range("genocchi(n) requires n >= 1");
    return seidel_entry(2 * n - 1, n);
}

BigInt median_genocchi(std::size_t n) { return seidel_entry(2 * n + 2, 1); }

BigInt normalized_genocchi(std::size_t n) {
    const BigInt median = median_genocchi(n);
    BigInt quotient;
    mpz_fdiv_q_2exp(quotient.get_mpz_t(), median.get_mpz_t(), n);
    if (quotient * (BigInt(1) << n) != median) {
        throw InternalError("H_{2n+1} not divisible by 2^n at n = " + std::to_string(n));
    }
    return quotient;
}

BigInt kreweras(std::size_t n, std::size_t k) { return kreweras_table().entry(n, k); }

BigRow kreweras_row(std::size_t n) { return kreweras_table().row(n); }

bool kreweras_symmetric(std::size_t n) {
    const BigRow row = kreweras_row(n);
    for (std::size_t k = 0; k < n; ++k)
        if (row[k] != row[n - 1 - k]) return false;
    return true;
}

bool kreweras_border(std::size_t n) {
    if (n < 2) return true;
    const BigRow row = kreweras_row(n);
    const BigInt h = normalized_genocchi(n - 1);
    return row.front() == h && row.back() == h;
}

bool kreweras_row_sum(std::size_t n) {
    BigInt sum = 0;
    for (const BigInt& h : kreweras_row(n)) sum += h;
    return sum == normalized_genocchi(n);
}

bool kreweras_difference(std::size_t n) {
    if (n < 2) return true;
    const BigRow row = kreweras_row(n);
    const BigRow prev = kreweras_row(n - 1);
    for (std::size_t k = 1; k <= n; ++k) {
        const BigInt lhs = at_or_zero(row, k) - at_or_zero(row, k - 1);
        BigInt rhs = 0;
        for (std::size_t i = k; i <= n - 1; ++i) rhs += at_or_zero(prev, i);
        for (std::size_t i = 1; i + 2 <= k; ++i) rhs -= at_or_zero(prev, i);
        if (lhs != rhs) return false;
    }
    return true;
}

bool median_divisible(std::size_t n) {
    return mpz_scan1(median_genocchi(n).get_mpz_t(), 0) >= n;
}

}  // namespace genocchi
