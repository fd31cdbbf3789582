#include "genocchi/maps.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "genocchi/errors.hpp"

namespace genocchi {

namespace {

std::string str(int v) { return std::to_string(v); }

std::string pool_text(const PoolState& pool) {
    std::string out = "(";
    for (int i = 0; i < pool.size(); ++i) out += (i ? "," : "") + str(pool.entries()[static_cast<std::size_t>(i)]);
    return out + ")";
}

// Rebuilds a map result through its validating factory; a rejection here is
// a defect of the map, not of the caller's input.
template <class Build>
auto checked(const char* map, Build build) {
    try {
        return build();
    } catch (const InvariantError& e) {
        throw InternalError(std::string(map) + " produced an invalid object: " + e.what());
    }
}

}  // namespace

// --- PoolState -------------------------------------------------------------

PoolState PoolState::initial(int n) {
    PoolState pool;
    for (int v = n; v >= 1; --v) pool.entries_.push_back(v);
    return pool;
}

int PoolState::at(int p) const {
    if (p < 1 || p > size()) throw InternalError("pool slot " + str(p) + " outside " + pool_text(*this));
    return entries_[static_cast<std::size_t>(p - 1)];
}

int PoolState::position_of(int value) const {
    const auto it = std::find(entries_.begin(), entries_.end(), value);
    return it == entries_.end() ? 0 : static_cast<int>(it - entries_.begin()) + 1;
}

IndexSet PoolState::as_set() const {
    IndexSet set;
    for (int v : entries_) set.insert(v);
    return set;
}

void PoolState::consume(int p) {
    const int r = size();
    if (p < 1 || p > r) throw InternalError("pool slot " + str(p) + " outside " + pool_text(*this));
    entries_[static_cast<std::size_t>(p - 1)] = entries_.back();
    entries_.pop_back();
}

void PoolState::consume_pair(int p, int q, int returned) {
    const int r = size();
    if (!(1 <= p && p < q && q <= r))
        throw InternalError("pool slots " + str(p) + "," + str(q) + " invalid for " + pool_text(*this));
    if (q < r) {
        entries_[static_cast<std::size_t>(p - 1)] = entries_.back();
        entries_[static_cast<std::size_t>(q - 1)] = returned;
    } else {
        entries_[static_cast<std::size_t>(p - 1)] = returned;
    }
    entries_.pop_back();
}

// --- chains and set tuples -------------------------------------------------

SetTuple chain_to_settuple(const FeiginChain& chain) {
    std::vector<IndexSet> s;
    for (int i = 1; i <= chain.order(); ++i) s.push_back(chain.at(i) - chain.at(i - 1));
    return checked("chain_to_settuple", [&] { return SetTuple::from_subsets(std::move(s)); });
}

FeiginChain settuple_to_chain(const SetTuple& tuple) {
    std::vector<IndexSet> chain{IndexSet{}};
    for (int i = 1; i <= tuple.order(); ++i) {
        IndexSet next = chain.back();
        if (tuple.at(i).size() == 2) {
            if (!next.contains(i))
                throw InternalError("settuple_to_chain: " + str(i) + " missing from I_" + str(i - 1));
            next.erase(i);
        }
        chain.push_back(next | tuple.at(i));
    }
    return checked("settuple_to_chain", [&] { return FeiginChain::from_subsets(std::move(chain)); });
}

FeiginChain settuple_to_chain_closed_form(const SetTuple& tuple) {
    const int n = tuple.order();
    std::vector<IndexSet> preimages(static_cast<std::size_t>(n) + 1);
    for (int j = 1; j <= n; ++j) preimages[static_cast<std::size_t>(j)] = tuple.preimage(j);
    std::vector<IndexSet> chain{IndexSet{}};
    IndexSet seen;
    for (int i = 1; i <= n; ++i) {
        seen = seen | tuple.at(i);
        IndexSet absent;
        for (int j = 1; j <= i; ++j) {
            const IndexSet pre = preimages[static_cast<std::size_t>(j)];
            if (pre.min() < i && i < pre.max()) absent.insert(j);
        }
        chain.push_back(seen - absent);
    }
    return checked("settuple_to_chain_closed_form",
                   [&] { return FeiginChain::from_subsets(std::move(chain)); });
}

// --- phi -------------------------------------------------------------------

PhiTrace phi_trace(const FeiginChain& chain) {
    const int n = chain.order();
    PoolState pool = PoolState::initial(n);
    std::vector<HetyeiPair> pairs(static_cast<std::size_t>(n));
    std::vector<PhiStep> steps;
    for (int k = 1; k <= n; ++k) {
        const IndexSet before = chain.at(k - 1);
        const IndexSet after = chain.at(k);
        const int r = n - k + 1;
        PhiStep step{k, PhiRule::grow_fresh, {}, {}};
        auto slot = [&](int value) {
            const int p = pool.position_of(value);
            if (p == 0)
                throw InternalError("phi step " + str(k) + ": " + str(value) + " not in pool " +
                                    pool_text(pool));
            return p;
        };
        if (before.subset_of(after)) {
            const int p = slot((after - before).min());
            if (before.contains(k)) {
                step.rule = PhiRule::grow_repeat;
                step.pair = {p, p};
            } else {
                step.pair = {p, r};
            }
            pool.consume(p);
        } else {
            const std::vector<int> added = (after - before).values();
            int p = slot(added.at(0));
            int q = slot(added.at(1));
            if (p > q) std::swap(p, q);
            step.rule = PhiRule::swap;
            step.pair = {p, q};
            pool.consume_pair(p, q, k);
        }
        if (pool.as_set() != IndexSet::range(n) - after)
            throw InternalError("phi step " + str(k) + ": pool " + pool_text(pool) +
                                " is not the complement of I_" + str(k));
        step.pool = pool;
        pairs[static_cast<std::size_t>(r - 1)] = step.pair;
        steps.push_back(std::move(step));
    }
    HetyeiTuple tuple = checked("phi", [&] { return HetyeiTuple::from_pairs(std::move(pairs)); });
    return {std::move(tuple), std::move(steps)};
}

HetyeiTuple phi(const FeiginChain& chain) { return phi_trace(chain).tuple; }

FeiginChain phi_inverse(const HetyeiTuple& tuple) {
    const int n = tuple.order();
    PoolState pool = PoolState::initial(n);
    std::vector<IndexSet> chain{IndexSet{}};
    for (int k = 1; k <= n; ++k) {
        const int r = n - k + 1;
        const HetyeiPair& pair = tuple.at(r);
        bool later = false;
        for (int l = r + 1; l <= n && !later; ++l) later = tuple.at(l).contains(r);
        IndexSet next = chain.back();
        if (pair.u == pair.v || !later) {
            if (pair.u != pair.v && pair.v != r)
                throw InternalError("phi_inverse step " + str(k) + ": pair {" + str(pair.u) + "," +
                                    str(pair.v) + "} leaves " + str(r) + " uncovered");
            next.insert(pool.at(pair.u));
            pool.consume(pair.u);
        } else {
            if (!next.contains(k))
                throw InternalError("phi_inverse step " + str(k) + ": swap rule fired but " + str(k) +
                                    " not in I_" + str(k - 1) + ", pool " + pool_text(pool));
            next.erase(k);
            next.insert(pool.at(pair.u));
            next.insert(pool.at(pair.v));
            pool.consume_pair(pair.u, pair.v, k);
        }
        chain.push_back(next);
    }
    return checked("phi_inverse", [&] { return FeiginChain::from_subsets(std::move(chain)); });
}

// --- involutions -----------------------------------------------------------

DumontPermutation involution_t(const DumontPermutation& sigma) {
    const auto [k, l] = statistics(sigma);
    if (k == l) return sigma;
    // 2k -> 2l -> 2l+1 -> 2k+1 -> 2k, applied after sigma.
    auto cycle = [k = k, l = l](int v) {
        if (v == 2 * k) return 2 * l;
        if (v == 2 * l) return 2 * l + 1;
        if (v == 2 * l + 1) return 2 * k + 1;
        if (v == 2 * k + 1) return 2 * k;
        return v;
    };
    std::vector<int> word;
    for (int v : sigma.word()) word.push_back(cycle(v));
    return checked("involution_t", [&] { return DumontPermutation::from_word(std::move(word)); });
}

DellacConfiguration involution_t(const DellacConfiguration& dellac) {
    const int n = dellac.order();
    std::vector<int> c(dellac.row_columns().begin(), dellac.row_columns().end());
    std::swap(c[static_cast<std::size_t>(n - 1)], c[static_cast<std::size_t>(n)]);
    return checked("involution_t", [&] { return DellacConfiguration::from_columns(std::move(c)); });
}

SetTuple involution_t(const SetTuple& tuple) {
    const int n = tuple.order();
    std::vector<IndexSet> s;
    for (IndexSet set : tuple.subsets()) {
        IndexSet swapped = set;
        if (set.contains(1) != set.contains(n)) {
            swapped.erase(1);
            swapped.erase(n);
            swapped.insert(set.contains(1) ? n : 1);
        }
        s.push_back(swapped);
    }
    return checked("involution_t", [&] { return SetTuple::from_subsets(std::move(s)); });
}

DumontPermutation involution_r(const DumontPermutation& sigma) {
    const int size = static_cast<int>(sigma.word().size());
    std::vector<int> word(static_cast<std::size_t>(size));
    for (int i = 1; i <= size; ++i) word[static_cast<std::size_t>(i - 1)] = size + 1 - sigma.at(size + 1 - i);
    return checked("involution_r", [&] { return DumontPermutation::from_word(std::move(word)); });
}

DellacConfiguration involution_r(const DellacConfiguration& dellac) {
    const int n = dellac.order();
    std::vector<int> c(static_cast<std::size_t>(2 * n));
    for (int i = 1; i <= 2 * n; ++i) c[static_cast<std::size_t>(i - 1)] = n + 1 - dellac.column(2 * n + 1 - i);
    return checked("involution_r", [&] { return DellacConfiguration::from_columns(std::move(c)); });
}

SetTuple involution_r(const SetTuple& tuple) {
    const int n = tuple.order();
    std::vector<IndexSet> s;
    for (int i = 1; i <= n; ++i) {
        IndexSet mirrored;
        for (int j : tuple.at(n + 1 - i).values()) mirrored.insert(n + 1 - j);
        s.push_back(mirrored);
    }
    return checked("involution_r", [&] { return SetTuple::from_subsets(std::move(s)); });
}

// --- reduce / lift ---------------------------------------------------------

namespace {

void require_top_class(int n, int l) {
    if (n < 2) throw InvariantError("reducible", "reduction needs order n >= 2");
    if (l != n)
        throw InvariantError("reducible", "l-statistic is " + str(l) + ", reduction needs l = n = " + str(n));
}

}  // namespace

DumontPermutation reduce(const DumontPermutation& sigma) {
    const int n = sigma.order();
    require_top_class(n, statistics(sigma).l);
    std::vector<int> word(sigma.word().begin(), sigma.word().begin() + 2 * n);
    return checked("reduce", [&] { return DumontPermutation::from_word(std::move(word)); });
}

DellacConfiguration reduce(const DellacConfiguration& dellac) {
    const int n = dellac.order();
    require_top_class(n, statistics(dellac).l);
    std::vector<int> c;
    for (int i = 1; i <= 2 * n; ++i)
        if (i != n && i != 2 * n) c.push_back(dellac.column(i));
    return checked("reduce", [&] { return DellacConfiguration::from_columns(std::move(c)); });
}

SetTuple reduce(const SetTuple& tuple) {
    const int n = tuple.order();
    require_top_class(n, statistics(tuple).l);
    std::vector<IndexSet> s(tuple.subsets().begin(), tuple.subsets().end() - 1);
    return checked("reduce", [&] { return SetTuple::from_subsets(std::move(s)); });
}

DumontPermutation lift(const DumontPermutation& sigma) {
    std::vector<int> word(sigma.word().begin(), sigma.word().end());
    const int size = static_cast<int>(word.size());
    word.push_back(size + 2);
    word.push_back(size + 1);
    return checked("lift", [&] { return DumontPermutation::from_word(std::move(word)); });
}

DellacConfiguration lift(const DellacConfiguration& dellac) {
    const int n = dellac.order() + 1;
    std::vector<int> c;
    for (int i = 1; i <= 2 * n - 2; ++i) {
        if (i == n) c.push_back(n);
        c.push_back(dellac.column(i));
    }
    c.push_back(n);
    return checked("lift", [&] { return DellacConfiguration::from_columns(std::move(c)); });
}

SetTuple lift(const SetTuple& tuple) {
    std::vector<IndexSet> s(tuple.subsets().begin(), tuple.subsets().end());
    s.push_back(IndexSet{tuple.order() + 1});
    return checked("lift", [&] { return SetTuple::from_subsets(std::move(s)); });
}

SetTuple embed_permutation(std::span<const int> sigma) {
    const int n = static_cast<int>(sigma.size());
    IndexSet seen;
    std::vector<IndexSet> s;
    for (int v : sigma) {
        if (v < 1 || v > n || seen.contains(v))
            throw InvariantError("permutation", "input is not a permutation of [" + str(n) + "]");
        seen.insert(v);
        s.push_back(IndexSet{v});
    }
    return SetTuple::from_subsets(std::move(s));
}

// --- variant dispatch ------------------------------------------------------

bool has_involutions(Model model) {
    return model == Model::dumont || model == Model::dellac || model == Model::settuple;
}

namespace {

template <class Fn>
ModelObject dispatch(const char* name, const ModelObject& object, Fn fn) {
    return std::visit(
        [&](const auto& o) -> ModelObject {
            using T = std::decay_t<decltype(o)>;
            if constexpr (std::is_same_v<T, DumontPermutation> || std::is_same_v<T, DellacConfiguration> ||
                          std::is_same_v<T, SetTuple>)
                return fn(o);
            else
                throw std::invalid_argument(std::string(name) + " is not defined on " +
                                            std::string(model_name(model_of(object))));
        },
        object);
}

}  // namespace

ModelObject involution_t(const ModelObject& object) {
    return dispatch("t", object, [](const auto& o) { return ModelObject(involution_t(o)); });
}

ModelObject involution_r(const ModelObject& object) {
    return dispatch("r", object, [](const auto& o) { return ModelObject(involution_r(o)); });
}

ModelObject reduce(const ModelObject& object) {
    return dispatch("reduce", object, [](const auto& o) { return ModelObject(reduce(o)); });
}

ModelObject lift(const ModelObject& object) {
    return dispatch("lift", object, [](const auto& o) { return ModelObject(lift(o)); });
}

}  // namespace genocchi
