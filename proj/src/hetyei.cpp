#include <algorithm>
#include <iterator>
#include <stdexcept>
#include <cstdint>
#include <string>

#include "genocchi/errors.hpp"
#include "genocchi/models.hpp"

namespace genocchi {

std::vector<int> redundancy_chain(const HetyeiTuple& tuple) {
    std::vector<int> chain{tuple.order()};
    for (;;) {
        const int current = chain.back();
        const HetyeiPair& p = tuple.at(current);
        if (p.u == current && p.v == current) return chain;
        // p.u < current here since u <= v <= current and not both equal.
        chain.push_back(p.u);
    }
}

std::vector<int> redundant_positions(const HetyeiTuple& tuple, RedundancyRule rule) {
    const int n = tuple.order();
    const std::vector<int> chain = redundancy_chain(tuple);
    std::vector<int> positions;
    // chain is descending; walk positions upward from l_m, tracking the
    // largest chain value not exceeding the position.
    auto anchor = chain.rbegin();
    for (int l = chain.back(); l <= n; ++l) {
        while (std::next(anchor) != chain.rend() && *std::next(anchor) <= l) ++anchor;
        const HetyeiPair& p = tuple.at(l);
        bool redundant;
        if (l == n && rule == RedundancyRule::corrected)
            redundant = p.u == n && p.v == n;
        else
            redundant = p.contains(*anchor);
        if (redundant) positions.push_back(l);
    }
    return positions;
}

Statistics statistics(const HetyeiTuple& tuple, RedundancyRule rule) {
    const int n = tuple.order();
    const std::vector<int> redundant = redundant_positions(tuple, rule);
    int last_one = 1;
    for (int i = 1; i <= n; ++i)
        if (tuple.at(i).contains(1)) last_one = i;
    return {n + 1 - redundant.back(), n + 1 - last_one};
}

namespace {

// Depth-first over a_1, b_1, ..., a_n, b_n with a_i in [0, i], b_i in [i].
// Value t can only be covered at indices >= t, so a branch dies once the
// uncovered values >= t outnumber the coordinates left at those indices.
class PairCounter {
public:
    explicit PairCounter(int n) : n_(n), hits_(static_cast<std::size_t>(n) + 1, 0) {}

    std::uint64_t run() { return descend(0); }

private:
    bool completable(int coordinate) const {
        int uncovered = 0;
        for (int t = n_; t >= 1; --t) {
            if (hits_[static_cast<std::size_t>(t)] == 0) ++uncovered;
            const int first = std::max(2 * (t - 1), coordinate);
            if (uncovered > 2 * n_ - first) return false;
        }
        return true;
    }

    std::uint64_t descend(int coordinate) {
        if (!completable(coordinate)) return 0;
        if (coordinate == 2 * n_) return 1;
        const int index = coordinate / 2 + 1;
        const bool is_a = coordinate % 2 == 0;
        std::uint64_t total = 0;
        if (is_a) total += descend(coordinate + 1);  // a_i = 0
        for (int value = 1; value <= index; ++value) {
            ++hits_[static_cast<std::size_t>(value)];
            total += descend(coordinate + 1);
            --hits_[static_cast<std::size_t>(value)];
        }
        return total;
    }

    int n_;
    std::vector<int> hits_;
};

}  // namespace

BigInt hetyei_pair_count(int n, int max_order) {
    if (n < 1) throw std::invalid_argument("hetyei_pair_count requires n >= 1");
    if (n > max_order)
        throw GuardError("pair count at n = " + std::to_string(n) + " exceeds the guard n <= " +
                         std::to_string(max_order));
    const std::uint64_t count = PairCounter(n).run();
    BigInt result;
    mpz_import(result.get_mpz_t(), 1, -1, sizeof(count), 0, 0, &count);
    return result;
}

}  // namespace genocchi
