#include "genocchi/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

#include "genocchi/enumerate.hpp"
#include "genocchi/errors.hpp"
#include "genocchi/maps.hpp"
#include "json.hpp"

namespace genocchi {

namespace {

constexpr std::size_t kMaxWitnesses = 8;

class Check {
public:
    explicit Check(std::string name) { record_.name = std::move(name); }

    void expect(bool ok, const std::string& witness) {
        if (ok) return;
        record_.passed = false;
        if (record_.witnesses.size() < kMaxWitnesses) record_.witnesses.push_back(witness);
    }

    CheckRecord take() { return std::move(record_); }

private:
    CheckRecord record_;
};

std::uint64_t to_u64(const BigInt& value) {
    if (!value.fits_ulong_p()) throw GuardError("value exceeds 64 bits: " + value.get_str());
    return value.get_ui();
}

std::vector<std::uint64_t> to_u64(const BigRow& row) {
    std::vector<std::uint64_t> out;
    for (const BigInt& h : row) out.push_back(to_u64(h));
    return out;
}

template <class Range>
std::set<std::string> serialized_set(const Range& objects) {
    std::set<std::string> out;
    for (const auto& o : objects) out.insert(serialize(o));
    return out;
}

// Totals and histograms of one family, compared with the triangle row.
CellReport tally(Model model, int n, const std::vector<ModelObject>& objects, RedundancyRule rule) {
    CellReport cell;
    cell.n = n;
    cell.model = std::string(model_name(model));
    cell.total = objects.size();
    cell.k_hist.assign(static_cast<std::size_t>(n), 0);
    cell.l_hist.assign(static_cast<std::size_t>(n), 0);
    std::vector<std::string> k_witness(static_cast<std::size_t>(n)), l_witness(static_cast<std::size_t>(n));

    Check range("statistics-range");
    for (const ModelObject& o : objects) {
        const Statistics s = statistics(o, rule);
        const bool ok = 1 <= s.k && s.k <= n && 1 <= s.l && s.l <= n;
        range.expect(ok, serialize(o));
        if (!ok) continue;
        const auto k = static_cast<std::size_t>(s.k - 1), l = static_cast<std::size_t>(s.l - 1);
        if (cell.k_hist[k]++ == 0) k_witness[k] = serialize(o);
        if (cell.l_hist[l]++ == 0) l_witness[l] = serialize(o);
    }

    const std::string first = objects.empty() ? std::string("<empty family>") : serialize(objects.front());
    Check total("total");
    total.expect(BigInt(static_cast<unsigned long>(cell.total)) == normalized_genocchi(static_cast<std::size_t>(n)),
                 first);

    const std::vector<std::uint64_t> reference = to_u64(kreweras_row(static_cast<std::size_t>(n)));
    Check k_hist("k-histogram"), l_hist("l-histogram");
    for (std::size_t i = 0; i < reference.size(); ++i) {
        k_hist.expect(cell.k_hist[i] == reference[i], k_witness[i].empty() ? first : k_witness[i]);
        l_hist.expect(cell.l_hist[i] == reference[i], l_witness[i].empty() ? first : l_witness[i]);
    }

    cell.checks.push_back(total.take());
    cell.checks.push_back(k_hist.take());
    cell.checks.push_back(l_hist.take());
    cell.checks.push_back(range.take());
    return cell;
}

void common_checks(Model model, const std::vector<ModelObject>& objects, CellReport& cell) {
    Check order("canonical-order"), roundtrip("parse-roundtrip");
    std::string previous;
    for (std::size_t i = 0; i < objects.size(); ++i) {
        const std::string text = serialize(objects[i]);
        order.expect(i == 0 || previous < text, text);
        bool same = false;
        try {
            same = parse(model, text) == objects[i];
        } catch (const std::exception&) {
        }
        roundtrip.expect(same, text);
        previous = text;
    }
    cell.checks.push_back(order.take());
    cell.checks.push_back(roundtrip.take());
}

template <class T>
void involution_checks(const std::vector<T>& objects, int n, CellReport& cell) {
    Check t("t-involution"), r("r-involution");
    for (const T& x : objects) {
        const Statistics s = statistics(x);
        const T tx = involution_t(x);
        t.expect(involution_t(tx) == x && statistics(tx) == Statistics{s.l, s.k} && (s.k != s.l || tx == x),
                 serialize(x));
        const T rx = involution_r(x);
        r.expect(involution_r(rx) == x && statistics(rx) == Statistics{n + 1 - s.l, n + 1 - s.k}, serialize(x));
    }
    cell.checks.push_back(t.take());
    cell.checks.push_back(r.take());
}

template <class T>
void reduction_checks(const std::vector<T>& objects, int n, const SuiteOptions& options, CellReport& cell) {
    if (n < 2) return;
    const std::vector<T> below = enumerate_all_of<T>(n - 1, {options.max_order, {}});
    const std::set<std::string> here = serialized_set(objects);
    const std::set<std::string> expected = serialized_set(below);

    Check bijection("reduce-bijection");
    std::set<std::string> images;
    for (const T& x : objects) {
        if (statistics(x).l != n) continue;
        const T y = reduce(x);
        bijection.expect(lift(y) == x && images.insert(serialize(y)).second, serialize(x));
    }
    bijection.expect(images == expected && BigInt(static_cast<unsigned long>(images.size())) ==
                                               normalized_genocchi(static_cast<std::size_t>(n - 1)),
                     objects.empty() ? "<empty family>" : serialize(objects.front()));

    Check inverse("lift-inverse");
    for (const T& y : below) {
        const T x = lift(y);
        inverse.expect(statistics(x).l == n && reduce(x) == y && here.contains(serialize(x)), serialize(y));
    }
    cell.checks.push_back(bijection.take());
    cell.checks.push_back(inverse.take());
}

template <class T>
std::vector<T> unwrap(const std::vector<ModelObject>& objects) {
    std::vector<T> out;
    for (const ModelObject& o : objects) out.push_back(std::get<T>(o));
    return out;
}

void chain_checks(const std::vector<FeiginChain>& chains, int n, const SuiteOptions& options, CellReport& cell) {
    const std::vector<SetTuple> tuples = enumerate_all_of<SetTuple>(n, {options.max_order, {}});
    Check roundtrip("chain-to-settuple-roundtrip"), transport("chain-to-settuple-transport"),
        image("chain-to-settuple-image"), back("settuple-to-chain-roundtrip"), closed("closed-form-inverse");
    std::set<std::string> images;
    for (const FeiginChain& chain : chains) {
        const SetTuple s = chain_to_settuple(chain);
        roundtrip.expect(settuple_to_chain(s) == chain, serialize(chain));
        transport.expect(statistics(s) == statistics(chain), serialize(chain));
        images.insert(serialize(s));
    }
    image.expect(images == serialized_set(tuples), chains.empty() ? "<empty family>" : serialize(chains.front()));
    for (const SetTuple& s : tuples) {
        const FeiginChain chain = settuple_to_chain(s);
        back.expect(chain_to_settuple(chain) == s, serialize(s));
        closed.expect(settuple_to_chain_closed_form(s) == chain, serialize(s));
    }
    for (Check* c : {&roundtrip, &transport, &image, &back, &closed}) cell.checks.push_back(c->take());
}

void settuple_checks(const std::vector<SetTuple>& tuples, int n, CellReport& cell) {
    Check ends("end-singletons"), embed("embed-image");
    std::set<std::string> singletons;
    for (const SetTuple& s : tuples) {
        ends.expect(s.at(1).size() == 1 && s.at(n).size() == 1 && s.preimage(1).size() == 1 &&
                        s.preimage(n).size() == 1,
                    serialize(s));
        if (std::all_of(s.subsets().begin(), s.subsets().end(), [](IndexSet x) { return x.size() == 1; }))
            singletons.insert(serialize(s));
    }
    std::vector<int> sigma(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) sigma[static_cast<std::size_t>(i)] = i + 1;
    std::set<std::string> embedded;
    std::size_t factorial = 0;
    do {
        const SetTuple s = embed_permutation(sigma);
        const FeiginChain chain = settuple_to_chain(s);
        bool nested = true;
        for (int i = 1; i <= n; ++i) nested = nested && chain.at(i - 1).subset_of(chain.at(i));
        embed.expect(nested, serialize(s));
        embedded.insert(serialize(s));
        ++factorial;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    embed.expect(embedded == singletons && embedded.size() == factorial,
                 tuples.empty() ? "<empty family>" : serialize(tuples.front()));
    cell.checks.push_back(ends.take());
    cell.checks.push_back(embed.take());
}

void hetyei_checks(const std::vector<HetyeiTuple>& tuples, int n, const SuiteOptions& options, CellReport& cell) {
    const std::vector<FeiginChain> chains = enumerate_all_of<FeiginChain>(n, {options.max_order, {}});
    Check roundtrip("phi-roundtrip"), transport("phi-transport"), image("phi-image"),
        back("phi-inverse-roundtrip"), guard("redundancy-guard"), structure("redundancy-structure"),
        orbit("orbit-identity");
    std::set<std::string> images;
    for (const FeiginChain& chain : chains) {
        const HetyeiTuple m = phi(chain);
        roundtrip.expect(phi_inverse(m) == chain, serialize(chain));
        transport.expect(statistics(m, options.rule) == statistics(chain), serialize(m));
        images.insert(serialize(m));
    }
    image.expect(images == serialized_set(tuples), chains.empty() ? "<empty family>" : serialize(chains.front()));
    for (const HetyeiTuple& m : tuples) {
        const FeiginChain chain = phi_inverse(m);
        back.expect(phi(chain) == m, serialize(m));
        guard.expect(statistics(m, options.rule) == statistics(chain), serialize(m));

        const std::vector<int> levels = redundancy_chain(m);
        const std::vector<int> redundant = redundant_positions(m, options.rule);
        bool ok = !redundant.empty() && levels.front() == n &&
                  std::find(redundant.begin(), redundant.end(), levels.back()) != redundant.end() &&
                  m.at(levels.back()) == HetyeiPair{levels.back(), levels.back()};
        for (std::size_t i = 1; i < levels.size(); ++i)
            ok = ok && levels[i] < levels[i - 1] && levels[i] == m.at(levels[i - 1]).u;
        structure.expect(ok, serialize(m));
    }
    const BigInt median = median_genocchi(static_cast<std::size_t>(n));
    orbit.expect((BigInt(static_cast<unsigned long>(tuples.size())) << static_cast<mp_bitcnt_t>(n)) == median,
                 tuples.empty() ? "<empty family>" : serialize(tuples.front()));
    for (Check* c : {&roundtrip, &transport, &image, &back, &guard, &structure, &orbit})
        cell.checks.push_back(c->take());

    if (n <= options.pairs_n) {
        Check pairs("pair-count");
        const BigInt count = hetyei_pair_count(n, options.pairs_guard);
        pairs.expect(count == median, "pairs=" + count.get_str() + " H=" + median.get_str());
        cell.checks.push_back(pairs.take());
    }
}

CellReport family_cell(Model model, int n, const SuiteOptions& options) {
    const std::vector<ModelObject> objects = enumerate_all(model, n, {options.max_order, {}});
    CellReport cell = tally(model, n, objects, options.rule);
    try {
        common_checks(model, objects, cell);
        switch (model) {
            case Model::dumont: {
                const auto xs = unwrap<DumontPermutation>(objects);
                involution_checks(xs, n, cell);
                reduction_checks(xs, n, options, cell);
                break;
            }
            case Model::dellac: {
                const auto xs = unwrap<DellacConfiguration>(objects);
                involution_checks(xs, n, cell);
                reduction_checks(xs, n, options, cell);
                break;
            }
            case Model::settuple: {
                const auto xs = unwrap<SetTuple>(objects);
                involution_checks(xs, n, cell);
                reduction_checks(xs, n, options, cell);
                settuple_checks(xs, n, cell);
                break;
            }
            case Model::chain: chain_checks(unwrap<FeiginChain>(objects), n, options, cell); break;
            case Model::hetyei: hetyei_checks(unwrap<HetyeiTuple>(objects), n, options, cell); break;
        }
    } catch (const std::exception& e) {
        cell.checks.push_back(CheckRecord{"exception", false, {e.what()}});
    }
    return cell;
}

// Published values the triangle module must reproduce.
const std::vector<unsigned long> kGenocchi{1, 1, 3, 17, 155, 2073};          // G_2 ..
const std::vector<unsigned long> kMedian{1, 2, 8, 56, 608};                  // H_1 ..
const std::vector<unsigned long> kNormalized{1, 1, 2, 7, 38, 295};           // h_0 ..
const std::vector<std::vector<unsigned long>> kKrewerasRows{
    {1}, {1, 1}, {2, 3, 2}, {7, 12, 12, 7}, {38, 69, 81, 69, 38}, {295, 552, 702, 702, 552, 295}};

CellReport triangle_reference_cell() {
    CellReport cell;
    cell.model = "triangle";
    Check sequences("published-sequences"), rows("published-rows"), identities("kreweras-identities-60"),
        divisible("median-divisibility-200");
    for (std::size_t i = 0; i < kGenocchi.size(); ++i)
        sequences.expect(genocchi(i + 1) == kGenocchi[i], "G_" + std::to_string(2 * (i + 1)));
    for (std::size_t i = 0; i < kMedian.size(); ++i)
        sequences.expect(median_genocchi(i) == kMedian[i], "H_" + std::to_string(2 * i + 1));
    for (std::size_t i = 0; i < kNormalized.size(); ++i)
        sequences.expect(normalized_genocchi(i) == kNormalized[i], "h_" + std::to_string(i));
    for (std::size_t n = 1; n <= kKrewerasRows.size(); ++n) {
        const BigRow row = kreweras_row(n);
        bool same = true;
        for (std::size_t k = 0; k < n; ++k) same = same && row[k] == kKrewerasRows[n - 1][k];
        rows.expect(same, "row " + std::to_string(n));
    }
    for (std::size_t n = 1; n <= 60; ++n) {
        identities.expect(kreweras_symmetric(n) && kreweras_border(n) && kreweras_row_sum(n) &&
                              kreweras_difference(n),
                          "row " + std::to_string(n));
    }
    for (std::size_t n = 0; n <= 200; ++n) divisible.expect(median_divisible(n), "H_" + std::to_string(2 * n + 1));
    for (Check* c : {&sequences, &rows, &identities, &divisible}) cell.checks.push_back(c->take());
    return cell;
}

CellReport triangle_row_cell(int n) {
    const auto row_index = static_cast<std::size_t>(n);
    CellReport cell;
    cell.n = n;
    cell.model = "triangle";
    cell.total = to_u64(normalized_genocchi(row_index));
    cell.k_hist = to_u64(kreweras_row(row_index));
    cell.l_hist = cell.k_hist;
    const std::string where = "row " + std::to_string(n);
    Check symmetry("kreweras-symmetry"), border("kreweras-border"), sum("kreweras-row-sum"),
        difference("kreweras-difference"), divisible("median-divisible");
    symmetry.expect(kreweras_symmetric(row_index), where);
    border.expect(kreweras_border(row_index), where);
    sum.expect(kreweras_row_sum(row_index), where);
    difference.expect(kreweras_difference(row_index), where);
    divisible.expect(median_divisible(row_index), where);
    for (Check* c : {&symmetry, &border, &sum, &difference, &divisible}) cell.checks.push_back(c->take());
    return cell;
}

void run_cells(std::vector<std::function<CellReport()>>& jobs, std::vector<CellReport>& out, unsigned threads) {
    out.resize(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
            try {
                out[i] = jobs[i]();
            } catch (const std::exception& e) {
                out[i].model = "job-" + std::to_string(i);
                out[i].checks.push_back(CheckRecord{"exception", false, {e.what()}});
            }
        }
    };
    threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(std::max<std::size_t>(1, jobs.size())));
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
}

void check_guards(int max_n, int max_order) {
    if (max_n < 1) throw std::invalid_argument("max_n must be >= 1");
    if (max_n > max_order)
        throw GuardError("order " + std::to_string(max_n) + " exceeds the guard n <= " + std::to_string(max_order));
}

}  // namespace

bool CellReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.passed; });
}

const CheckRecord* CellReport::find(std::string_view name) const {
    for (const CheckRecord& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

bool ConsistencyReport::passed() const {
    return std::all_of(cells.begin(), cells.end(), [](const CellReport& c) { return c.passed(); });
}

const CellReport* ConsistencyReport::find(int order, std::string_view model) const {
    for (const CellReport& c : cells)
        if (c.n == order && c.model == model) return &c;
    return nullptr;
}

ConsistencyReport count_matrix(int n, int max_order) {
    check_guards(n, max_order);
    ConsistencyReport report;
    report.n = n;
    report.reference_row = kreweras_row(static_cast<std::size_t>(n));
    report.reference_total = normalized_genocchi(static_cast<std::size_t>(n));
    for (Model model : all_models())
        report.cells.push_back(tally(model, n, enumerate_all(model, n, {max_order, {}}), RedundancyRule::corrected));
    return report;
}

ConsistencyReport run_suite(const SuiteOptions& options) {
    check_guards(options.max_n, options.max_order);
    if (options.pairs_n > options.pairs_guard)
        throw GuardError("pairs_n " + std::to_string(options.pairs_n) + " exceeds the guard " +
                         std::to_string(options.pairs_guard));

    std::vector<std::function<CellReport()>> jobs;
    jobs.emplace_back(triangle_reference_cell);
    for (int n = 1; n <= options.max_n; ++n) {
        jobs.emplace_back([n] { return triangle_row_cell(n); });
        for (Model model : all_models()) jobs.emplace_back([=] { return family_cell(model, n, options); });
    }

    ConsistencyReport report;
    report.n = options.max_n;
    report.reference_row = kreweras_row(static_cast<std::size_t>(options.max_n));
    report.reference_total = normalized_genocchi(static_cast<std::size_t>(options.max_n));
    run_cells(jobs, report.cells, options.threads);
    return report;
}

std::string to_json(const ConsistencyReport& report) {
    using nlohmann::json;
    json cells = json::array();
    for (const CellReport& cell : report.cells) {
        json checks = json::array();
        for (const CheckRecord& c : cell.checks) {
            checks.push_back({{"name", c.name},
                              {"status", c.passed ? "pass" : "fail"},
                              {"witness", c.witnesses.empty() ? json(nullptr) : json(c.witnesses.front())}});
        }
        cells.push_back({{"n", cell.n},
                         {"model", cell.model},
                         {"total", cell.total},
                         {"k_hist", cell.k_hist},
                         {"l_hist", cell.l_hist},
                         {"checks", std::move(checks)}});
    }
    std::vector<std::string> row;
    for (const BigInt& h : report.reference_row) row.push_back(h.get_str());
    json out = {{"status", report.passed() ? "pass" : "fail"},
                {"n", report.n},
                {"reference_row", row},
                {"reference_total", report.reference_total.get_str()},
                {"cells", std::move(cells)}};
    return out.dump(2);
}

std::string to_text(const ConsistencyReport& report) {
    std::ostringstream out;
    std::size_t passed = 0, total = 0;
    for (const CellReport& cell : report.cells) {
        for (const CheckRecord& c : cell.checks) {
            ++total;
            passed += c.passed ? 1 : 0;
            out << (c.passed ? "PASS " : "FAIL ") << "n=" << cell.n << ' ' << cell.model << ' ' << c.name;
            if (!c.passed && !c.witnesses.empty()) {
                out << "  witness: " << c.witnesses.front();
                for (std::size_t i = 1; i < c.witnesses.size(); ++i) out << " | " << c.witnesses[i];
            }
            out << '\n';
        }
    }
    out << passed << '/' << total << " checks passed\n";
    return out.str();
}

}  // namespace genocchi
