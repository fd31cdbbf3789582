// Acceptance suite: one PASS/FAIL line per criterion. Pass --slow to add the
// order-5 pair count.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "genocchi/enumerate.hpp"
#include "genocchi/maps.hpp"
#include "genocchi/models.hpp"
#include "genocchi/triangles.hpp"

using namespace genocchi;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::string detail;

    void expect(bool condition, const std::string& what) {
        if (condition || !ok) {
            ok = ok && condition;
            return;
        }
        ok = false;
        detail = what;
    }
};

int failures = 0;

void criterion(int id, const char* title, double limit_ms, const std::function<void(Outcome&)>& body) {
    Outcome outcome;
    const auto start = Clock::now();
    try {
        body(outcome);
    } catch (const std::exception& e) {
        outcome.ok = false;
        outcome.detail = std::string("exception: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    if (outcome.ok && limit_ms > 0 && ms >= limit_ms) {
        outcome.ok = false;
        outcome.detail = "over time bound of " + std::to_string(limit_ms) + " ms";
    }
    if (!outcome.ok) ++failures;
    std::printf("%s %2d %-28s %10.3f ms%s%s\n", outcome.ok ? "PASS" : "FAIL", id, title, ms,
                outcome.detail.empty() ? "" : "  ", outcome.detail.c_str());
    std::fflush(stdout);
}

using Cells = std::map<std::pair<int, int>, std::set<std::string>>;

Cells cells_of(Model model, int n) {
    Cells cells;
    enumerate(model, n, [&](const ModelObject& o) {
        const Statistics s = statistics(o);
        cells[{s.k, s.l}].insert(serialize(o));
    });
    return cells;
}

// Hand-checked n = 3 objects, one row per (k, l) cell, columns in Model order.
struct ReferenceRow {
    int k, l;
    const char* objects[5];
};

const ReferenceRow kReference[] = {
    {1, 2, {"2 1 6 3 7 4 8 5", "1 2 2 1 3 3", ";1;1,3;1,2,3", "1;3;2", "1,1;1,2;3,3"}},
    {1, 3, {"2 1 4 3 6 5 8 7", "1 2 3 1 2 3", ";1;1,2;1,2,3", "1;2;3", "1,1;2,2;3,3"}},
    {2, 1, {"4 1 6 2 7 5 8 3", "1 2 1 2 3 3", ";3;1,3;1,2,3", "3;1;2", "1,1;1,2;1,3"}},
    {2, 2, {"4 1 6 2 7 3 8 5", "1 1 2 2 3 3", ";2;1,3;1,2,3", "2;1,3;2", "1,1;1,2;2,3"}},
    {2, 3, {"4 1 5 2 6 3 8 7", "1 1 3 2 2 3", ";2;1,2;1,2,3", "2;1;3", "1,1;2,2;2,3"}},
    {3, 1, {"6 1 4 2 7 5 8 3", "1 2 1 3 2 3", ";3;2,3;1,2,3", "3;2;1", "1,1;2,2;1,3"}},
    {3, 2, {"6 1 4 2 7 3 8 5", "1 1 2 3 2 3", ";2;2,3;1,2,3", "2;3;1", "1,1;1,1;2,3"}},
};

std::string where(Model model, int n) { return std::string(model_name(model)) + " n=" + std::to_string(n); }

template <class T>
void involutions(Outcome& o, int n) {
    for (const T& x : enumerate_all_of<T>(n)) {
        const Statistics s = statistics(x);
        const T t = involution_t(x), r = involution_r(x);
        o.expect(involution_t(t) == x && statistics(t) == Statistics{s.l, s.k}, "t on " + serialize(x));
        o.expect(involution_r(r) == x && statistics(r) == Statistics{n + 1 - s.l, n + 1 - s.k},
                 "r on " + serialize(x));
    }
}

}  // namespace

int main(int argc, char** argv) {
    bool slow = false;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--slow") == 0) {
            slow = true;
        } else {
            std::fprintf(stderr, "usage: %s [--slow]\n", argv[0]);
            return 2;
        }
    }

    criterion(1, "sequences", 1.0, [](Outcome& o) {
        const long g[] = {1, 1, 3, 17, 155, 2073};
        const long h_odd[] = {1, 2, 8, 56, 608};
        const long h[] = {1, 1, 2, 7, 38, 295};
        for (int n = 1; n <= 6; ++n) o.expect(genocchi::genocchi(n) == g[n - 1], "G n=" + std::to_string(n));
        for (int n = 0; n <= 4; ++n) o.expect(median_genocchi(n) == h_odd[n], "H n=" + std::to_string(n));
        for (int n = 0; n <= 5; ++n) o.expect(normalized_genocchi(n) == h[n], "h n=" + std::to_string(n));
    });

    criterion(2, "kreweras triangle", 1000.0, [](Outcome& o) {
        const std::vector<std::vector<long>> rows{
            {1}, {1, 1}, {2, 3, 2}, {7, 12, 12, 7}, {38, 69, 81, 69, 38}, {295, 552, 702, 702, 552, 295}};
        for (int n = 1; n <= 6; ++n) {
            const BigRow row = kreweras_row(n);
            o.expect(row.size() == rows[n - 1].size(), "row length n=" + std::to_string(n));
            for (std::size_t k = 0; k < row.size() && k < rows[n - 1].size(); ++k)
                o.expect(row[k] == rows[n - 1][k], "row n=" + std::to_string(n));
        }
        for (int n = 1; n <= 60; ++n) {
            const std::string at = " n=" + std::to_string(n);
            o.expect(kreweras_symmetric(n), "symmetry" + at);
            o.expect(kreweras_border(n), "border" + at);
            o.expect(kreweras_row_sum(n), "row sum" + at);
            o.expect(kreweras_difference(n), "difference" + at);
        }
    });

    criterion(3, "median divisibility", 5000.0, [](Outcome& o) {
        for (int n = 0; n <= 200; ++n) o.expect(median_divisible(n), "n=" + std::to_string(n));
    });

    criterion(4, "enumeration totals", 60000.0, [](Outcome& o) {
        for (Model model : all_models())
            for (int n = 1; n <= 6; ++n)
                o.expect(normalized_genocchi(n) == static_cast<long>(count_objects(model, n)), where(model, n));
    });

    criterion(5, "partition refinement", 0, [](Outcome& o) {
        for (Model model : all_models()) {
            for (int n = 1; n <= 6; ++n) {
                const BigRow row = kreweras_row(n);
                std::vector<long> k_hist(n), l_hist(n);
                for (const auto& [cell, objects] : cells_of(model, n)) {
                    k_hist[cell.first - 1] += static_cast<long>(objects.size());
                    l_hist[cell.second - 1] += static_cast<long>(objects.size());
                }
                for (int k = 0; k < n; ++k)
                    o.expect(row[k] == k_hist[k] && row[k] == l_hist[k], where(model, n));
            }
            const Cells cells = cells_of(model, 3);
            Cells reference;
            for (const ReferenceRow& row : kReference)
                reference[{row.k, row.l}].insert(row.objects[static_cast<int>(model)]);
            o.expect(cells == reference, "reference cells, " + where(model, 3));
        }
    });

    criterion(6, "bijections and transport", 0, [](Outcome& o) {
        const PhiTrace trace = phi_trace(parse_chain(";3;1,3;1,3,4;1,2,3,5;1,2,3,4,5"));
        o.expect(serialize(trace.tuple) == "1,1;1,2;2,2;3,4;3,5", "worked example pairs");
        const std::vector<std::vector<int>> pools{{5, 4, 1, 2}, {5, 4, 2}, {5, 2}, {4}, {}};
        for (std::size_t k = 0; k < pools.size() && k < trace.steps.size(); ++k) {
            const auto entries = trace.steps[k].pool.entries();
            o.expect(std::vector<int>(entries.begin(), entries.end()) == pools[k],
                     "worked example pool L_" + std::to_string(k + 1));
        }
        for (int n = 1; n <= 6; ++n) {
            std::set<std::string> settuples, hetyei;
            for_each_chain(n, [&](const FeiginChain& chain) {
                const SetTuple s = chain_to_settuple(chain);
                const HetyeiTuple m = phi(chain);
                o.expect(settuple_to_chain(s) == chain && statistics(s) == statistics(chain), serialize(chain));
                o.expect(phi_inverse(m) == chain && statistics(m) == statistics(chain), serialize(chain));
                settuples.insert(serialize(s));
                hetyei.insert(serialize(m));
            });
            std::size_t s_total = 0, m_total = 0;
            for_each_settuple(n, [&](const SetTuple& s) {
                ++s_total;
                o.expect(chain_to_settuple(settuple_to_chain(s)) == s && settuples.contains(serialize(s)),
                         serialize(s));
            });
            for_each_hetyei(n, [&](const HetyeiTuple& m) {
                ++m_total;
                o.expect(phi(phi_inverse(m)) == m && hetyei.contains(serialize(m)), serialize(m));
            });
            o.expect(s_total == settuples.size() && m_total == hetyei.size(), "image size n=" + std::to_string(n));
        }
    });

    criterion(7, "involutions", 0, [](Outcome& o) {
        for (int n = 1; n <= 5; ++n) {
            involutions<DumontPermutation>(o, n);
            involutions<DellacConfiguration>(o, n);
            involutions<SetTuple>(o, n);
        }
    });

    criterion(8, "reduction and lift", 0, [](Outcome& o) {
        for (Model model : {Model::dumont, Model::dellac, Model::settuple}) {
            for (int n = 2; n <= 6; ++n) {
                std::set<std::string> image;
                enumerate(model, n, [&](const ModelObject& x) {
                    if (statistics(x).l != n) return;
                    const ModelObject y = reduce(x);
                    o.expect(lift(y) == x && image.insert(serialize(y)).second, serialize(x));
                });
                o.expect(normalized_genocchi(n - 1) == static_cast<long>(image.size()), where(model, n));
                enumerate(model, n - 1,
                          [&](const ModelObject& y) { o.expect(image.contains(serialize(y)), serialize(y)); });
            }
        }
    });

    criterion(9, "pair count and orbits", 10000.0, [](Outcome& o) {
        for (int n = 1; n <= 4; ++n) o.expect(hetyei_pair_count(n) == median_genocchi(n), "n=" + std::to_string(n));
        for (int n = 1; n <= 6; ++n) {
            const BigInt orbits = BigInt(static_cast<unsigned long>(count_objects(Model::hetyei, n))) << n;
            o.expect(orbits == median_genocchi(n), "orbit identity n=" + std::to_string(n));
        }
    });

    if (slow) {
        criterion(9, "pair count n=5 (slow)", 0,
                  [](Outcome& o) { o.expect(hetyei_pair_count(5) == median_genocchi(5), "n=5"); });
    }

    criterion(10, "redundancy guard", 0, [](Outcome& o) {
        for (int n = 1; n <= 6; ++n)
            for_each_hetyei(n, [&](const HetyeiTuple& m) {
                o.expect(statistics(m) == statistics(phi_inverse(m)), serialize(m));
            });
    });

    std::printf("%s: %d failing criteria\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
