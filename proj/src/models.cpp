#include "genocchi/models.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <string>

#include "genocchi/errors.hpp"

namespace genocchi {

namespace {

constexpr std::array kModels{Model::dumont, Model::dellac, Model::chain, Model::settuple,
                             Model::hetyei};

std::string str(int v) { return std::to_string(v); }

std::optional<Violation> violation(std::string invariant, std::string detail) {
    return Violation{std::move(invariant), std::move(detail)};
}

template <class T>
T throw_if_invalid(std::optional<Violation> v, T value) {
    if (v) throw InvariantError(v->invariant, v->detail);
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = text.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

// Canonical decimal: digits only, no sign, no leading zero.
int parse_int(std::string_view token, std::string_view what) {
    if (token.empty()) throw ParseError("empty token in " + std::string(what));
    if (token.size() > 1 && token.front() == '0')
        throw ParseError("leading zero in " + std::string(what) + ": '" + std::string(token) + "'");
    int value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || end != token.data() + token.size() || token.front() == '-' ||
        token.front() == '+') {
        throw ParseError("expected a nonnegative integer in " + std::string(what) + ", got '" +
                         std::string(token) + "'");
    }
    return value;
}

std::vector<int> parse_words(std::string_view text, std::string_view what) {
    if (text.empty()) throw ParseError("empty " + std::string(what));
    std::vector<int> out;
    for (std::string_view token : split(text, ' ')) out.push_back(parse_int(token, what));
    return out;
}

IndexSet parse_set(std::string_view text) {
    IndexSet set;
    if (text.empty()) return set;
    int previous = 0;
    for (std::string_view token : split(text, ',')) {
        const int v = parse_int(token, "subset");
        if (v < 1 || v > IndexSet::capacity)
            throw ParseError("subset value " + str(v) + " outside [1, 64]");
        if (v <= previous) throw ParseError("subset values must be strictly ascending");
        set.insert(v);
        previous = v;
    }
    return set;
}

std::vector<IndexSet> parse_sets(std::string_view text) {
    std::vector<IndexSet> sets;
    for (std::string_view part : split(text, ';')) sets.push_back(parse_set(part));
    return sets;
}

std::string join(std::span<const int> values, char sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += sep;
        out += str(values[i]);
    }
    return out;
}

std::string join_sets(std::span<const IndexSet> sets) {
    std::string out;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (i) out += ';';
        out += serialize(sets[i]);
    }
    return out;
}

}  // namespace

std::span<const Model> all_models() { return kModels; }

std::string_view model_name(Model model) {
    switch (model) {
        case Model::dumont: return "pd2n";
        case Model::dellac: return "dellac";
        case Model::chain: return "chain";
        case Model::settuple: return "settuple";
        case Model::hetyei: return "hetyei";
    }
    return "?";
}

Model parse_model(std::string_view name) {
    if (name == "pd2n" || name == "dumont") return Model::dumont;
    if (name == "dellac" || name == "dc") return Model::dellac;
    if (name == "chain" || name == "feigin" || name == "i") return Model::chain;
    if (name == "settuple" || name == "s") return Model::settuple;
    if (name == "hetyei" || name == "m") return Model::hetyei;
    throw ParseError("unknown model '" + std::string(name) +
                     "' (expected pd2n, dellac, chain, settuple or hetyei)");
}

// --- DumontPermutation -----------------------------------------------------

std::optional<Violation> DumontPermutation::check(std::span<const int> word) {
    const int size = static_cast<int>(word.size());
    if (size < 4 || size % 2 != 0)
        return violation("length", "word length must be 2n+2 with n >= 1, got " + str(size));
    std::vector<int> position(static_cast<std::size_t>(size) + 1, 0);
    for (int i = 1; i <= size; ++i) {
        const int v = word[static_cast<std::size_t>(i - 1)];
        if (v < 1 || v > size || position[static_cast<std::size_t>(v)] != 0)
            return violation("permutation", "word is not a permutation of [" + str(size) + "]");
        position[static_cast<std::size_t>(v)] = i;
    }
    for (int i = 1; i <= size; ++i) {
        const int v = word[static_cast<std::size_t>(i - 1)];
        if (i % 2 == 1 && v <= i)
            return violation("odd-excedance", "sigma(" + str(i) + ") = " + str(v) + " <= " + str(i));
        if (i % 2 == 0 && v >= i)
            return violation("even-deficiency", "sigma(" + str(i) + ") = " + str(v) + " >= " + str(i));
    }
    for (int i = 1; 2 * i + 1 < size; ++i) {
        if (position[static_cast<std::size_t>(2 * i)] > position[static_cast<std::size_t>(2 * i + 1)])
            return violation("normalized", str(2 * i + 1) + " appears before " + str(2 * i));
    }
    return std::nullopt;
}

DumontPermutation DumontPermutation::from_word(std::vector<int> word) {
    auto v = check(word);
    return throw_if_invalid(std::move(v), DumontPermutation(std::move(word)));
}

// --- DellacConfiguration ---------------------------------------------------

std::optional<Violation> DellacConfiguration::check(std::span<const int> c) {
    const int rows = static_cast<int>(c.size());
    if (rows < 2 || rows % 2 != 0)
        return violation("shape", "need 2n rows with n >= 1, got " + str(rows));
    const int n = rows / 2;
    std::vector<int> dots(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 1; i <= rows; ++i) {
        const int j = c[static_cast<std::size_t>(i - 1)];
        if (j < 1 || j > n)
            return violation("column-range", "row " + str(i) + " has column " + str(j));
        if (!(j <= i && i <= j + n))
            return violation("band", "dot (" + str(j) + "," + str(i) + ") outside j <= i <= j+n");
        ++dots[static_cast<std::size_t>(j)];
    }
    for (int j = 1; j <= n; ++j) {
        if (dots[static_cast<std::size_t>(j)] != 2)
            return violation("two-per-column",
                             "column " + str(j) + " holds " + str(dots[static_cast<std::size_t>(j)]) + " dots");
    }
    return std::nullopt;
}

DellacConfiguration DellacConfiguration::from_columns(std::vector<int> row_columns) {
    auto v = check(row_columns);
    return throw_if_invalid(std::move(v), DellacConfiguration(std::move(row_columns)));
}

// --- FeiginChain -----------------------------------------------------------

std::optional<Violation> FeiginChain::check(std::span<const IndexSet> s) {
    const int n = static_cast<int>(s.size()) - 1;
    if (n < 1) return violation("length", "need I_0, ..., I_n with n >= 1");
    if (n > IndexSet::capacity) return violation("length", "order above 64 unsupported");
    const IndexSet universe = IndexSet::range(n);
    for (int i = 0; i <= n; ++i) {
        const IndexSet current = s[static_cast<std::size_t>(i)];
        if (!current.subset_of(universe))
            return violation("subset-range", "I_" + str(i) + " not contained in [" + str(n) + "]");
        if (current.size() != i)
            return violation("cardinality", "#I_" + str(i) + " = " + str(current.size()));
        if (i > 0) {
            IndexSet kept = s[static_cast<std::size_t>(i - 1)];
            kept.erase(i);
            if (!kept.subset_of(current))
                return violation("nesting", "I_" + str(i - 1) + " \\ {" + str(i) + "} not in I_" + str(i));
        }
    }
    return std::nullopt;
}

FeiginChain FeiginChain::from_subsets(std::vector<IndexSet> subsets) {
    auto v = check(subsets);
    return throw_if_invalid(std::move(v), FeiginChain(std::move(subsets)));
}

// --- SetTuple --------------------------------------------------------------

std::optional<Violation> SetTuple::check(std::span<const IndexSet> s) {
    const int n = static_cast<int>(s.size());
    if (n < 1) return violation("length", "need S_1, ..., S_n with n >= 1");
    if (n > IndexSet::capacity) return violation("length", "order above 64 unsupported");
    const IndexSet universe = IndexSet::range(n);
    std::vector<IndexSet> inverse(static_cast<std::size_t>(n) + 1);
    for (int j = 1; j <= n; ++j) {
        const IndexSet sj = s[static_cast<std::size_t>(j - 1)];
        if (!sj.subset_of(universe))
            return violation("subset-range", "S_" + str(j) + " not contained in [" + str(n) + "]");
        for (int v : sj.values()) inverse[static_cast<std::size_t>(v)].insert(j);
    }
    for (int i = 1; i <= n; ++i) {
        const int size = s[static_cast<std::size_t>(i - 1)].size();
        const IndexSet pre = inverse[static_cast<std::size_t>(i)];
        if (size != 1 && size != 2)
            return violation("cardinality", "#S_" + str(i) + " = " + str(size));
        if (pre.size() != size)
            return violation("inverse-cardinality",
                             "#S_" + str(i) + " = " + str(size) + " but " + str(i) + " occurs in " +
                                 str(pre.size()) + " sets");
        if (size == 2 && !(pre.min() < i && i < pre.max()))
            return violation("straddle", "S_" + str(i) + "^-1 = {" + serialize(pre) +
                                             "} does not straddle " + str(i));
    }
    return std::nullopt;
}

SetTuple SetTuple::from_subsets(std::vector<IndexSet> subsets) {
    auto v = check(subsets);
    return throw_if_invalid(std::move(v), SetTuple(std::move(subsets)));
}

IndexSet SetTuple::preimage(int value) const {
    IndexSet pre;
    for (int j = 1; j <= order(); ++j)
        if (at(j).contains(value)) pre.insert(j);
    return pre;
}

// --- HetyeiTuple -----------------------------------------------------------

std::optional<Violation> HetyeiTuple::check(std::span<const HetyeiPair> pairs) {
    const int n = static_cast<int>(pairs.size());
    if (n < 1) return violation("length", "need n >= 1 pairs");
    std::vector<bool> covered(static_cast<std::size_t>(n) + 1, false);
    for (int l = 1; l <= n; ++l) {
        const HetyeiPair& p = pairs[static_cast<std::size_t>(l - 1)];
        if (p.u < 1 || p.v < 1 || p.u > l || p.v > l)
            return violation("pair-range", "pair " + str(l) + " = {" + str(p.u) + "," + str(p.v) +
                                               "} not in [" + str(l) + "]^2");
        covered[static_cast<std::size_t>(p.u)] = true;
        covered[static_cast<std::size_t>(p.v)] = true;
    }
    for (int v = 1; v <= n; ++v)
        if (!covered[static_cast<std::size_t>(v)])
            return violation("cover", "value " + str(v) + " missing from the multiset");
    return std::nullopt;
}

HetyeiTuple HetyeiTuple::from_pairs(std::vector<HetyeiPair> pairs) {
    for (HetyeiPair& p : pairs)
        if (p.u > p.v) std::swap(p.u, p.v);
    auto v = check(pairs);
    return throw_if_invalid(std::move(v), HetyeiTuple(std::move(pairs)));
}

// --- variant helpers -------------------------------------------------------

Model model_of(const ModelObject& object) { return static_cast<Model>(object.index()); }

int order_of(const ModelObject& object) {
    return std::visit([](const auto& o) { return o.order(); }, object);
}

// --- serialization ---------------------------------------------------------

std::string serialize(IndexSet set) { return join(set.values(), ','); }

std::string serialize(const DumontPermutation& sigma) { return join(sigma.word(), ' '); }

std::string serialize(const DellacConfiguration& dellac) { return join(dellac.row_columns(), ' '); }

std::string serialize(const FeiginChain& chain) { return join_sets(chain.subsets()); }

std::string serialize(const SetTuple& tuple) { return join_sets(tuple.subsets()); }

std::string serialize(const HetyeiTuple& tuple) {
    std::string out;
    for (int l = 1; l <= tuple.order(); ++l) {
        if (l > 1) out += ';';
        out += str(tuple.at(l).u) + ',' + str(tuple.at(l).v);
    }
    return out;
}

std::string serialize(const ModelObject& object) {
    return std::visit([](const auto& o) { return serialize(o); }, object);
}

DumontPermutation parse_dumont(std::string_view text) {
    return DumontPermutation::from_word(parse_words(text, "permutation word"));
}

DellacConfiguration parse_dellac(std::string_view text) {
    return DellacConfiguration::from_columns(parse_words(text, "Dellac rows"));
}

FeiginChain parse_chain(std::string_view text) { return FeiginChain::from_subsets(parse_sets(text)); }

SetTuple parse_settuple(std::string_view text) { return SetTuple::from_subsets(parse_sets(text)); }

HetyeiTuple parse_hetyei(std::string_view text) {
    if (text.empty()) throw ParseError("empty Hetyei tuple");
    std::vector<HetyeiPair> pairs;
    for (std::string_view part : split(text, ';')) {
        const auto fields = split(part, ',');
        if (fields.size() != 2) throw ParseError("expected 'u,v', got '" + std::string(part) + "'");
        HetyeiPair p{parse_int(fields[0], "pair"), parse_int(fields[1], "pair")};
        if (p.u > p.v) throw ParseError("pair '" + std::string(part) + "' must be written with u <= v");
        pairs.push_back(p);
    }
    return HetyeiTuple::from_pairs(std::move(pairs));
}

ModelObject parse(Model model, std::string_view text) {
    switch (model) {
        case Model::dumont: return parse_dumont(text);
        case Model::dellac: return parse_dellac(text);
        case Model::chain: return parse_chain(text);
        case Model::settuple: return parse_settuple(text);
        case Model::hetyei: return parse_hetyei(text);
    }
    throw ParseError("unknown model");
}

std::vector<int> parse_permutation(std::string_view text) {
    std::vector<int> word = parse_words(text, "permutation");
    std::vector<int> sorted = word;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != static_cast<int>(i) + 1)
            throw InvariantError("permutation", "'" + std::string(text) + "' is not a permutation of [" +
                                                    str(static_cast<int>(word.size())) + "]");
    return word;
}

// --- statistics ------------------------------------------------------------

Statistics statistics(const DumontPermutation& sigma) {
    const int size = static_cast<int>(sigma.word().size());
    return {sigma.at(1) / 2, (sigma.at(size) - 1) / 2};
}

Statistics statistics(const DellacConfiguration& dellac) {
    const int n = dellac.order();
    return {dellac.column(n + 1), dellac.column(n)};
}

Statistics statistics(const FeiginChain& chain) {
    const int n = chain.order();
    Statistics s;
    for (int i = n; i >= 1; --i) {
        if (chain.at(i).contains(1)) s.k = i;
        if (chain.at(i).contains(n)) s.l = i;
    }
    return s;
}

Statistics statistics(const SetTuple& tuple) {
    return {tuple.preimage(1).min(), tuple.preimage(tuple.order()).min()};
}

Statistics statistics(const ModelObject& object, RedundancyRule rule) {
    return std::visit(
        [rule](const auto& o) {
            if constexpr (std::is_same_v<std::decay_t<decltype(o)>, HetyeiTuple>)
                return statistics(o, rule);
            else
                return statistics(o);
        },
        object);
}

}  // namespace genocchi
