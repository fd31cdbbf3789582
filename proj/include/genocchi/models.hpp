#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "genocchi/index_set.hpp"
#include "genocchi/triangles.hpp"

namespace genocchi {

/// The five families counted by the normalized median Genocchi numbers.
enum class Model {
    dumont,    // normalized Dumont permutations of the second kind, "pd2n"
    dellac,    // Dellac configurations, "dellac"
    chain,     // Feigin chains (I_0, ..., I_n), "chain"
    settuple,  // difference tuples (S_1, ..., S_n), "settuple"
    hetyei,    // Hetyei multiset tuples ({u_l, v_l}), "hetyei"
};

std::span<const Model> all_models();
std::string_view model_name(Model model);
// Accepts the canonical names and a few aliases ("dc", "feigin", "s", "m").
// Throws ParseError on anything else.
Model parse_model(std::string_view name);

/// Partition indices (k, l), both in [n].
struct Statistics {
    int k = 0;
    int l = 0;
    friend bool operator==(const Statistics&, const Statistics&) = default;
};

/// Result of checking an object against its model's defining conditions.
struct Violation {
    std::string invariant;
    std::string detail;
};

// ---------------------------------------------------------------------------

/// sigma in S_{2n+2} with sigma(2i-1) > 2i-1, sigma(2i) < 2i and
/// sigma^{-1}(2i) < sigma^{-1}(2i+1).
class DumontPermutation {
public:
    /// Throws InvariantError if `word` is not an element of PD2N_n, n >= 1.
    static DumontPermutation from_word(std::vector<int> word);
    static std::optional<Violation> check(std::span<const int> word);

    int order() const { return static_cast<int>(word_.size() / 2) - 1; }
    std::span<const int> word() const { return word_; }
    /// sigma(i), 1-based.
    int at(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }

    friend bool operator==(const DumontPermutation&, const DumontPermutation&) = default;
    friend auto operator<=>(const DumontPermutation&, const DumontPermutation&) = default;

private:
    explicit DumontPermutation(std::vector<int> word) : word_(std::move(word)) {}
    std::vector<int> word_;
};

/// n x 2n tableau with one dot per row, two per column, dots in the band
/// j <= i <= j + n. Stored as the column of each row, bottom row first.
class DellacConfiguration {
public:
    static DellacConfiguration from_columns(std::vector<int> row_columns);
    static std::optional<Violation> check(std::span<const int> row_columns);

    int order() const { return static_cast<int>(columns_.size() / 2); }
    std::span<const int> row_columns() const { return columns_; }
    /// Column of the dot in row i, 1-based.
    int column(int row) const { return columns_[static_cast<std::size_t>(row - 1)]; }

    friend bool operator==(const DellacConfiguration&, const DellacConfiguration&) = default;
    friend auto operator<=>(const DellacConfiguration&, const DellacConfiguration&) = default;

private:
    explicit DellacConfiguration(std::vector<int> c) : columns_(std::move(c)) {}
    std::vector<int> columns_;
};

/// (I_0, ..., I_n) with #I_i = i and I_{i-1} \ {i} a subset of I_i.
class FeiginChain {
public:
    static FeiginChain from_subsets(std::vector<IndexSet> subsets);
    static std::optional<Violation> check(std::span<const IndexSet> subsets);

    int order() const { return static_cast<int>(subsets_.size()) - 1; }
    std::span<const IndexSet> subsets() const { return subsets_; }
    /// I_i, 0 <= i <= n.
    IndexSet at(int i) const { return subsets_[static_cast<std::size_t>(i)]; }

    friend bool operator==(const FeiginChain&, const FeiginChain&) = default;
    friend auto operator<=>(const FeiginChain&, const FeiginChain&) = default;

private:
    explicit FeiginChain(std::vector<IndexSet> s) : subsets_(std::move(s)) {}
    std::vector<IndexSet> subsets_;
};

/// (S_1, ..., S_n) with #S_i = #S_i^{-1} in {1, 2}, where
/// S_i^{-1} = {j : i in S_j}, and S_i^{-1} = {i1 < i < i2} when #S_i = 2.
class SetTuple {
public:
    static SetTuple from_subsets(std::vector<IndexSet> subsets);
    static std::optional<Violation> check(std::span<const IndexSet> subsets);

    int order() const { return static_cast<int>(subsets_.size()); }
    std::span<const IndexSet> subsets() const { return subsets_; }
    /// S_i, 1-based.
    IndexSet at(int i) const { return subsets_[static_cast<std::size_t>(i - 1)]; }
    /// S_i^{-1}.
    IndexSet preimage(int value) const;

    friend bool operator==(const SetTuple&, const SetTuple&) = default;
    friend auto operator<=>(const SetTuple&, const SetTuple&) = default;

private:
    explicit SetTuple(std::vector<IndexSet> s) : subsets_(std::move(s)) {}
    std::vector<IndexSet> subsets_;
};

/// Unordered pair {u, v} held as u <= v.
struct HetyeiPair {
    int u = 0;
    int v = 0;
    bool contains(int x) const { return u == x || v == x; }
    friend bool operator==(const HetyeiPair&, const HetyeiPair&) = default;
    friend auto operator<=>(const HetyeiPair&, const HetyeiPair&) = default;
};

/// ({u_l, v_l})_{l in [n]} with u_l, v_l in [l] and [n] inside the multiset
/// of all entries.
class HetyeiTuple {
public:
    /// Pairs are normalized to u <= v before checking.
    static HetyeiTuple from_pairs(std::vector<HetyeiPair> pairs);
    static std::optional<Violation> check(std::span<const HetyeiPair> pairs);

    int order() const { return static_cast<int>(pairs_.size()); }
    std::span<const HetyeiPair> pairs() const { return pairs_; }
    /// {u_l, v_l}, 1-based.
    const HetyeiPair& at(int l) const { return pairs_[static_cast<std::size_t>(l - 1)]; }

    friend bool operator==(const HetyeiTuple&, const HetyeiTuple&) = default;
    friend auto operator<=>(const HetyeiTuple&, const HetyeiTuple&) = default;

private:
    explicit HetyeiTuple(std::vector<HetyeiPair> p) : pairs_(std::move(p)) {}
    std::vector<HetyeiPair> pairs_;
};

using ModelObject =
    std::variant<DumontPermutation, DellacConfiguration, FeiginChain, SetTuple, HetyeiTuple>;

Model model_of(const ModelObject& object);
int order_of(const ModelObject& object);

// ---------------------------------------------------------------------------
// Canonical text forms. Parsers throw ParseError on bad syntax and
// InvariantError when the object is well-formed but not a member.

std::string serialize(const DumontPermutation& sigma);
std::string serialize(const DellacConfiguration& dellac);
std::string serialize(const FeiginChain& chain);
std::string serialize(const SetTuple& tuple);
std::string serialize(const HetyeiTuple& tuple);
std::string serialize(const ModelObject& object);

// "1,3,4"; the empty set is "".
std::string serialize(IndexSet set);

DumontPermutation parse_dumont(std::string_view text);
DellacConfiguration parse_dellac(std::string_view text);
FeiginChain parse_chain(std::string_view text);
SetTuple parse_settuple(std::string_view text);
HetyeiTuple parse_hetyei(std::string_view text);
ModelObject parse(Model model, std::string_view text);

/// Permutation of [n] in one-line notation, "3 1 2".
std::vector<int> parse_permutation(std::string_view text);

// ---------------------------------------------------------------------------
// Statistics.

/// Which M-redundancy rule classifies Hetyei tuples. `literal` marks the last
/// position whenever it contains n; `corrected` only when its pair is {n, n}.
/// Only the corrected rule matches the transport through the Feigin chains;
/// the literal rule exists so that mismatch can be demonstrated.
enum class RedundancyRule { corrected, literal };

Statistics statistics(const DumontPermutation& sigma);
Statistics statistics(const DellacConfiguration& dellac);
Statistics statistics(const FeiginChain& chain);
Statistics statistics(const SetTuple& tuple);
Statistics statistics(const HetyeiTuple& tuple, RedundancyRule rule = RedundancyRule::corrected);
Statistics statistics(const ModelObject& object, RedundancyRule rule = RedundancyRule::corrected);

inline int k_statistic(const ModelObject& object) { return statistics(object).k; }
inline int l_statistic(const ModelObject& object) { return statistics(object).l; }

// ---------------------------------------------------------------------------
// Hetyei-specific structure.

/// n = l_1 > l_2 > ... > l_m >= 1: l_{i+1} = min{u, v} of the pair at l_i,
/// stopping at the first pair equal to {l_i, l_i}.
std::vector<int> redundancy_chain(const HetyeiTuple& tuple);

/// Ascending M-redundant positions. Never empty; always contains l_m.
std::vector<int> redundant_positions(const HetyeiTuple& tuple,
                                     RedundancyRule rule = RedundancyRule::corrected);

/// Number of pairs ((a_i), (b_i)) with a_i in [0, i], b_i in [i] whose
/// entries cover [n]. Equals H_{2n+1}; each coordinate pair maps two-to-one
/// onto the multisets {u_i, v_i} of [i], so the count is 2^n h_n.
/// Throws GuardError if n > max_order.
BigInt hetyei_pair_count(int n, int max_order = 5);

}  // namespace genocchi
