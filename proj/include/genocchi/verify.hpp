#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "genocchi/models.hpp"

namespace genocchi {

struct CheckRecord {
    std::string name;
    bool passed = true;
    std::vector<std::string> witnesses;  // canonical serializations, first failures only
};

/// One (order, family) unit of work. `model` is a family name or
/// "triangle" for the identities of the reference triangle itself.
struct CellReport {
    int n = 0;
    std::string model;
    std::uint64_t total = 0;
    std::vector<std::uint64_t> k_hist;
    std::vector<std::uint64_t> l_hist;
    std::vector<CheckRecord> checks;

    bool passed() const;
    const CheckRecord* find(std::string_view name) const;
};

struct ConsistencyReport {
    int n = 0;
    BigRow reference_row;  // Kreweras row n
    BigInt reference_total;
    std::vector<CellReport> cells;

    bool passed() const;
    const CellReport* find(int n, std::string_view model) const;
};

struct SuiteOptions {
    int max_n = 6;
    int pairs_n = 4;  // 0 disables the pair count
    unsigned threads = 1;
    int max_order = 8;
    int pairs_guard = 5;
    RedundancyRule rule = RedundancyRule::corrected;
};

/// Totals and k/l histograms of all five families at order n, each checked
/// against Kreweras row n and h_n. Throws GuardError beyond `max_order`.
ConsistencyReport count_matrix(int n, int max_order = 8);

/// Every cross-model invariant for n = 1..max_n, plus the triangle
/// identities and, up to pairs_n, the Hetyei pair count. Failures are
/// reported, never thrown; bounds beyond the guards throw GuardError.
/// Cells run on `threads` workers; the report does not depend on it.
ConsistencyReport run_suite(const SuiteOptions& options = {});

std::string to_json(const ConsistencyReport& report);
std::string to_text(const ConsistencyReport& report);

}  // namespace genocchi
