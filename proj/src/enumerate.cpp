#include "genocchi/enumerate.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <thread>

#include "genocchi/errors.hpp"

namespace genocchi {

namespace {

void check_order(int n, const EnumerationOptions& options) {
    if (n < 1) throw std::invalid_argument("enumeration order must be >= 1, got " + std::to_string(n));
    if (n > options.max_order)
        throw GuardError("enumeration at n = " + std::to_string(n) + " exceeds the guard n <= " +
                         std::to_string(options.max_order));
}

// Applies a Shard at the first node whose candidate list has two or more
// entries. Every node above it is forced, so it is unique.
class BranchFilter {
public:
    explicit BranchFilter(Shard shard) : shard_(shard) {
        if (shard_.count == 0 || shard_.index >= shard_.count)
            throw std::invalid_argument("invalid shard");
    }

    bool take(int depth, std::size_t index, std::size_t candidates) {
        if (shard_.count == 1) return true;
        if (branch_depth_ < 0 && candidates >= 2) branch_depth_ = depth;
        if (depth != branch_depth_) return true;
        return index % shard_.count == shard_.index;
    }

    // A tree without any branching belongs to shard 0.
    bool emit() const { return shard_.count == 1 || branch_depth_ >= 0 || shard_.index == 0; }

private:
    Shard shard_;
    int branch_depth_ = -1;
};

// Values 1..count sorted by their decimal strings, so that a DFS over
// space-separated integer tokens walks the serializations in string order.
std::vector<int> token_order(int count) {
    std::vector<int> values(static_cast<std::size_t>(count));
    for (int v = 1; v <= count; ++v) values[static_cast<std::size_t>(v - 1)] = v;
    std::sort(values.begin(), values.end(),
              [](int a, int b) { return std::to_string(a) < std::to_string(b); });
    return values;
}

// Sorts candidates by the text they contribute, terminator included. A
// terminator that never occurs inside a token keeps contributions
// prefix-free, so sibling order equals the order of every completion.
template <class T, class KeyFn>
void order_by_key(std::vector<T>& candidates, KeyFn key) {
    std::vector<std::pair<std::string, T>> keyed;
    keyed.reserve(candidates.size());
    for (const T& c : candidates) keyed.emplace_back(key(c), c);
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i < keyed.size(); ++i) candidates[i] = keyed[i].second;
}

// --- PD2N ------------------------------------------------------------------

class DumontSearch {
public:
    DumontSearch(int n, const std::function<void(const DumontPermutation&)>& visit, Shard shard)
        : size_(2 * n + 2),
          visit_(visit),
          filter_(shard),
          order_(token_order(size_)),
          word_(static_cast<std::size_t>(size_)),
          used_(static_cast<std::size_t>(size_) + 1, false) {}

    void run() { descend(1); }

private:
    bool admissible(int position, int value) const {
        if (used_[static_cast<std::size_t>(value)]) return false;
        if (position % 2 == 1 ? value <= position : value >= position) return false;
        // 2i+1 only after 2i, for 2 <= 2i < size.
        if (value % 2 == 1 && value >= 3 && value <= size_ - 1 &&
            !used_[static_cast<std::size_t>(value - 1)])
            return false;
        return true;
    }

    // Every unused value still needs an open position it fits: an odd
    // position below it or an even position above it.
    bool completable(int position) const {
        for (int v = 1; v <= size_; ++v) {
            if (used_[static_cast<std::size_t>(v)]) continue;
            bool fits = false;
            for (int p = position + 1; p <= size_ && !fits; ++p)
                fits = p % 2 == 1 ? v > p : v < p;
            if (!fits) return false;
        }
        return true;
    }

    void descend(int position) {
        if (position > size_) {
            if (filter_.emit()) visit_(DumontPermutation::from_word(word_));
            return;
        }
        std::vector<int> candidates;
        for (int v : order_)
            if (admissible(position, v)) candidates.push_back(v);
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            if (!filter_.take(position, c, candidates.size())) continue;
            const int v = candidates[c];
            word_[static_cast<std::size_t>(position - 1)] = v;
            used_[static_cast<std::size_t>(v)] = true;
            if (completable(position)) descend(position + 1);
            used_[static_cast<std::size_t>(v)] = false;
        }
    }

    int size_;
    const std::function<void(const DumontPermutation&)>& visit_;
    BranchFilter filter_;
    std::vector<int> order_;
    std::vector<int> word_;
    std::vector<bool> used_;
};

// --- Dellac ----------------------------------------------------------------

class DellacSearch {
public:
    DellacSearch(int n, const std::function<void(const DellacConfiguration&)>& visit, Shard shard)
        : n_(n),
          visit_(visit),
          filter_(shard),
          order_(token_order(n)),
          columns_(static_cast<std::size_t>(2 * n)),
          dots_(static_cast<std::size_t>(n) + 1, 0) {}

    void run() { descend(1); }

private:
    // Column j can still take dots only in rows up to j + n.
    bool capacities_ok(int row) const {
        for (int j = 1; j <= n_; ++j) {
            const int need = 2 - dots_[static_cast<std::size_t>(j)];
            const int rows_left = std::max(0, j + n_ - row);
            if (need > rows_left) return false;
        }
        return true;
    }

    void descend(int row) {
        if (row > 2 * n_) {
            if (filter_.emit()) visit_(DellacConfiguration::from_columns(columns_));
            return;
        }
        std::vector<int> candidates;
        for (int j : order_)
            if (j <= row && row <= j + n_ && dots_[static_cast<std::size_t>(j)] < 2)
                candidates.push_back(j);
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            if (!filter_.take(row, c, candidates.size())) continue;
            const int j = candidates[c];
            columns_[static_cast<std::size_t>(row - 1)] = j;
            ++dots_[static_cast<std::size_t>(j)];
            if (capacities_ok(row)) descend(row + 1);
            --dots_[static_cast<std::size_t>(j)];
        }
    }

    int n_;
    const std::function<void(const DellacConfiguration&)>& visit_;
    BranchFilter filter_;
    std::vector<int> order_;
    std::vector<int> columns_;
    std::vector<int> dots_;
};

// --- Feigin chains ---------------------------------------------------------

// Adds `need` elements of `pool` to `base` in every possible way.
void extend_by(IndexSet base, const std::vector<int>& pool, std::size_t from, int need,
               std::vector<IndexSet>& out) {
    if (need == 0) {
        out.push_back(base);
        return;
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
        IndexSet next = base;
        next.insert(pool[i]);
        extend_by(next, pool, i + 1, need - 1, out);
    }
}

std::string subset_key(IndexSet set, bool last) { return serialize(set) + (last ? "" : ";"); }

class ChainSearch {
public:
    ChainSearch(int n, const std::function<void(const FeiginChain&)>& visit, Shard shard)
        : n_(n), visit_(visit), filter_(shard), subsets_(static_cast<std::size_t>(n) + 1) {}

    void run() { descend(1); }

private:
    // Every prefix extends: I_i needs at most two new elements and the
    // complement of I_{i-1} \ {i} always has room for them.
    void descend(int i) {
        if (i > n_) {
            if (filter_.emit()) visit_(FeiginChain::from_subsets(subsets_));
            return;
        }
        IndexSet base = subsets_[static_cast<std::size_t>(i - 1)];
        base.erase(i);
        const std::vector<int> pool = (IndexSet::range(n_) - base).values();
        std::vector<IndexSet> candidates;
        extend_by(base, pool, 0, i - base.size(), candidates);
        const bool last = i == n_;
        order_by_key(candidates, [last](IndexSet s) { return subset_key(s, last); });
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            if (!filter_.take(i, c, candidates.size())) continue;
            subsets_[static_cast<std::size_t>(i)] = candidates[c];
            descend(i + 1);
        }
    }

    int n_;
    const std::function<void(const FeiginChain&)>& visit_;
    BranchFilter filter_;
    std::vector<IndexSet> subsets_;
};

// --- Set tuples ------------------------------------------------------------

class SetTupleSearch {
public:
    SetTupleSearch(int n, const std::function<void(const SetTuple&)>& visit, Shard shard)
        : n_(n),
          visit_(visit),
          filter_(shard),
          subsets_(static_cast<std::size_t>(n)),
          hits_(static_cast<std::size_t>(n) + 1, 0) {
        for (int a = 1; a <= n; ++a) {
            all_.push_back(IndexSet{a});
            for (int b = a + 1; b <= n; ++b) all_.push_back(IndexSet{a, b});
        }
    }

    void run() { descend(1); }

private:
    int size_of(int value) const { return subsets_[static_cast<std::size_t>(value - 1)].size(); }
    int hits(int value) const { return hits_[static_cast<std::size_t>(value)]; }

    // Occurrences of v at positions before v: at most one. At position v:
    // when #S_v = 2, v is not in S_v and one earlier occurrence exists;
    // when #S_v = 1, v occurs once overall. After v: up to #S_v total.
    bool admissible(int j, IndexSet s) const {
        const int sj = s.size();
        if (sj == 2 && (s.contains(j) || hits(j) != 1)) return false;
        if (sj == 1 && hits(j) + (s.contains(j) ? 1 : 0) > 1) return false;
        for (int v : s.values()) {
            if (v < j) {
                if (hits(v) >= size_of(v)) return false;
                if (size_of(v) == 2 && hits(v) != 1) return false;
            } else if (v > j) {
                if (hits(v) != 0) return false;
            }
        }
        return true;
    }

    // Outstanding occurrences must fit in the two slots per remaining set.
    bool completable(int j) const {
        int need = 0;
        for (int v = 1; v <= n_; ++v) {
            if (v <= j)
                need += size_of(v) - hits(v);
            else
                need += hits(v) == 0 ? 1 : 0;
        }
        for (int v = 1; v <= j; ++v)
            if (hits(v) > size_of(v)) return false;
        return need <= 2 * (n_ - j);
    }

    void apply(IndexSet s, int delta) {
        for (int v : s.values()) hits_[static_cast<std::size_t>(v)] += delta;
    }

    void descend(int j) {
        if (j > n_) {
            if (filter_.emit()) visit_(SetTuple::from_subsets(subsets_));
            return;
        }
        std::vector<IndexSet> candidates;
        for (IndexSet s : all_) {
            subsets_[static_cast<std::size_t>(j - 1)] = s;
            if (admissible(j, s)) candidates.push_back(s);
        }
        const bool last = j == n_;
        order_by_key(candidates, [last](IndexSet s) { return subset_key(s, last); });
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            if (!filter_.take(j, c, candidates.size())) continue;
            const IndexSet s = candidates[c];
            subsets_[static_cast<std::size_t>(j - 1)] = s;
            apply(s, +1);
            if (completable(j)) descend(j + 1);
            apply(s, -1);
        }
        subsets_[static_cast<std::size_t>(j - 1)] = IndexSet{};
    }

    int n_;
    const std::function<void(const SetTuple&)>& visit_;
    BranchFilter filter_;
    std::vector<IndexSet> all_;
    std::vector<IndexSet> subsets_;
    std::vector<int> hits_;
};

// --- Hetyei tuples ---------------------------------------------------------

class HetyeiSearch {
public:
    HetyeiSearch(int n, const std::function<void(const HetyeiTuple&)>& visit, Shard shard)
        : n_(n),
          visit_(visit),
          filter_(shard),
          pairs_(static_cast<std::size_t>(n)),
          hits_(static_cast<std::size_t>(n) + 1, 0) {}

    void run() { descend(1); }

private:
    // Value t can only be covered at positions >= t, two values per
    // position: the uncovered values >= t must fit in positions
    // max(t, l+1), ..., n.
    bool completable(int l) const {
        int uncovered = 0;
        for (int t = n_; t >= 1; --t) {
            if (hits_[static_cast<std::size_t>(t)] == 0) ++uncovered;
            const int slots = 2 * (n_ - std::max(t, l + 1) + 1);
            if (uncovered > slots) return false;
        }
        return true;
    }

    void descend(int l) {
        if (l > n_) {
            if (filter_.emit()) visit_(HetyeiTuple::from_pairs(pairs_));
            return;
        }
        std::vector<HetyeiPair> candidates;
        for (int u = 1; u <= l; ++u)
            for (int v = u; v <= l; ++v) candidates.push_back({u, v});
        const bool last = l == n_;
        order_by_key(candidates, [last](const HetyeiPair& p) {
            return std::to_string(p.u) + ',' + std::to_string(p.v) + (last ? "" : ";");
        });
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            if (!filter_.take(l, c, candidates.size())) continue;
            const HetyeiPair p = candidates[c];
            pairs_[static_cast<std::size_t>(l - 1)] = p;
            ++hits_[static_cast<std::size_t>(p.u)];
            ++hits_[static_cast<std::size_t>(p.v)];
            if (completable(l)) descend(l + 1);
            --hits_[static_cast<std::size_t>(p.u)];
            --hits_[static_cast<std::size_t>(p.v)];
        }
    }

    int n_;
    const std::function<void(const HetyeiTuple&)>& visit_;
    BranchFilter filter_;
    std::vector<HetyeiPair> pairs_;
    std::vector<int> hits_;
};

}  // namespace

void for_each_dumont(int n, const std::function<void(const DumontPermutation&)>& visit,
                     const EnumerationOptions& options) {
    check_order(n, options);
    DumontSearch(n, visit, options.shard).run();
}

void for_each_dellac(int n, const std::function<void(const DellacConfiguration&)>& visit,
                     const EnumerationOptions& options) {
    check_order(n, options);
    DellacSearch(n, visit, options.shard).run();
}

void for_each_chain(int n, const std::function<void(const FeiginChain&)>& visit,
                    const EnumerationOptions& options) {
    check_order(n, options);
    ChainSearch(n, visit, options.shard).run();
}

void for_each_settuple(int n, const std::function<void(const SetTuple&)>& visit,
                       const EnumerationOptions& options) {
    check_order(n, options);
    SetTupleSearch(n, visit, options.shard).run();
}

void for_each_hetyei(int n, const std::function<void(const HetyeiTuple&)>& visit,
                     const EnumerationOptions& options) {
    check_order(n, options);
    HetyeiSearch(n, visit, options.shard).run();
}

void enumerate(Model model, int n, const std::function<void(const ModelObject&)>& visit,
               const EnumerationOptions& options) {
    auto forward = [&visit](const auto& object) { visit(ModelObject(object)); };
    switch (model) {
        case Model::dumont: return for_each_dumont(n, forward, options);
        case Model::dellac: return for_each_dellac(n, forward, options);
        case Model::chain: return for_each_chain(n, forward, options);
        case Model::settuple: return for_each_settuple(n, forward, options);
        case Model::hetyei: return for_each_hetyei(n, forward, options);
    }
}

std::vector<ModelObject> enumerate_all(Model model, int n, const EnumerationOptions& options) {
    std::vector<ModelObject> out;
    enumerate(model, n, [&out](const ModelObject& o) { out.push_back(o); }, options);
    return out;
}

template <class T>
std::vector<T> enumerate_all_of(int n, const EnumerationOptions& options) {
    std::vector<T> out;
    auto push = [&out](const T& o) { out.push_back(o); };
    if constexpr (std::is_same_v<T, DumontPermutation>) for_each_dumont(n, push, options);
    if constexpr (std::is_same_v<T, DellacConfiguration>) for_each_dellac(n, push, options);
    if constexpr (std::is_same_v<T, FeiginChain>) for_each_chain(n, push, options);
    if constexpr (std::is_same_v<T, SetTuple>) for_each_settuple(n, push, options);
    if constexpr (std::is_same_v<T, HetyeiTuple>) for_each_hetyei(n, push, options);
    return out;
}

template std::vector<DumontPermutation> enumerate_all_of(int, const EnumerationOptions&);
template std::vector<DellacConfiguration> enumerate_all_of(int, const EnumerationOptions&);
template std::vector<FeiginChain> enumerate_all_of(int, const EnumerationOptions&);
template std::vector<SetTuple> enumerate_all_of(int, const EnumerationOptions&);
template std::vector<HetyeiTuple> enumerate_all_of(int, const EnumerationOptions&);

std::uint64_t count_objects(Model model, int n, const EnumerationOptions& options) {
    std::uint64_t count = 0;
    enumerate(model, n, [&count](const ModelObject&) { ++count; }, options);
    return count;
}

std::vector<std::string> enumerate_parallel(Model model, int n, unsigned threads, int max_order) {
    check_order(n, EnumerationOptions{max_order, {}});
    threads = std::max(1U, threads);
    std::vector<std::vector<std::string>> parts(threads);
    {
        std::vector<std::jthread> workers;
        for (unsigned t = 0; t < threads; ++t) {
            workers.emplace_back([&, t] {
                EnumerationOptions options{max_order, Shard{t, threads}};
                enumerate(model, n, [&](const ModelObject& o) { parts[t].push_back(serialize(o)); },
                          options);
            });
        }
    }
    std::vector<std::string> all;
    for (auto& part : parts) all.insert(all.end(), part.begin(), part.end());
    std::sort(all.begin(), all.end());
    return all;
}

}  // namespace genocchi
