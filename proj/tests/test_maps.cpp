#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <string>
#include <vector>

#include "genocchi/enumerate.hpp"
#include "genocchi/errors.hpp"
#include "genocchi/maps.hpp"

using namespace genocchi;

namespace {

std::vector<int> pool(const PoolState& state) {
    return {state.entries().begin(), state.entries().end()};
}

std::string set_text(IndexSet set) { return serialize(set); }

// Oracles written directly from the defining formulas.

std::string settuple_oracle(const FeiginChain& chain) {
    std::string out;
    for (int i = 1; i <= chain.order(); ++i)
        out += (i > 1 ? ";" : "") + set_text(chain.at(i) - chain.at(i - 1));
    return out;
}

std::string dumont_r_oracle(const DumontPermutation& sigma) {
    const int m = 2 * sigma.order() + 3;
    std::string out;
    for (int i = 1; i < m; ++i) out += (i > 1 ? " " : "") + std::to_string(m - sigma.at(m - i));
    return out;
}

std::string dumont_t_oracle(const DumontPermutation& sigma) {
    const Statistics s = statistics(sigma);
    const int a = 2 * s.k, b = 2 * s.l, c = 2 * s.l + 1, d = 2 * s.k + 1;
    std::string out;
    for (int i = 1; i <= 2 * sigma.order() + 2; ++i) {
        int v = sigma.at(i);
        if (s.k != s.l) v = v == a ? b : v == b ? c : v == c ? d : v == d ? a : v;
        out += (i > 1 ? " " : "") + std::to_string(v);
    }
    return out;
}

std::string dellac_r_oracle(const DellacConfiguration& dellac) {
    const int n = dellac.order();
    std::string out;
    for (int i = 1; i <= 2 * n; ++i)
        out += (i > 1 ? " " : "") + std::to_string(n + 1 - dellac.column(2 * n + 1 - i));
    return out;
}

std::string settuple_t_oracle(const SetTuple& tuple) {
    const int n = tuple.order();
    std::string out;
    for (int i = 1; i <= n; ++i) {
        IndexSet s;
        for (int v : tuple.at(i).values()) s.insert(v == 1 ? n : v == n ? 1 : v);
        out += (i > 1 ? ";" : "") + set_text(s);
    }
    return out;
}

std::string settuple_r_oracle(const SetTuple& tuple) {
    const int n = tuple.order();
    std::string out;
    for (int i = 1; i <= n; ++i) {
        IndexSet s;
        for (int v : tuple.at(n + 1 - i).values()) s.insert(n + 1 - v);
        out += (i > 1 ? ";" : "") + set_text(s);
    }
    return out;
}

}  // namespace

TEST_CASE("pool state updates") {
    PoolState p = PoolState::initial(5);
    CHECK(pool(p) == std::vector<int>{5, 4, 3, 2, 1});
    p.consume(3);
    CHECK(pool(p) == std::vector<int>{5, 4, 1, 2});
    p.consume(4);
    CHECK(pool(p) == std::vector<int>{5, 4, 1});
    p.consume_pair(1, 2, 7);
    CHECK(pool(p) == std::vector<int>{1, 7});
    p.consume_pair(1, 2, 9);
    CHECK(pool(p) == std::vector<int>{9});
    CHECK(p.position_of(9) == 1);
    CHECK(p.position_of(4) == 0);
}

TEST_CASE("chain to set tuple") {
    CHECK(serialize(chain_to_settuple(parse_chain(";1;1,3;1,2,3"))) == "1;3;2");
    CHECK(serialize(chain_to_settuple(parse_chain(";3;1,3;1,3,4;1,2,3,5;1,2,3,4,5"))) == "3;1;4;2,5;4");
    CHECK(serialize(chain_to_settuple(parse_chain(";1;1,2;1,2,3;1,2,3,4"))) == "1;2;3;4");
}

TEST_CASE("set tuple to chain") {
    CHECK(serialize(settuple_to_chain(parse_settuple("1;3;2"))) == ";1;1,3;1,2,3");
    CHECK(serialize(settuple_to_chain(parse_settuple("2;1,3;2"))) == ";2;1,3;1,2,3");
    CHECK(serialize(settuple_to_chain(parse_settuple("1;2;3;4"))) == ";1;1,2;1,2,3;1,2,3,4");
    CHECK(serialize(settuple_to_chain_closed_form(parse_settuple("2;1,3;2"))) == ";2;1,3;1,2,3");
}

TEST_CASE("phi on the worked example, with pools") {
    const PhiTrace trace = phi_trace(parse_chain(";3;1,3;1,3,4;1,2,3,5;1,2,3,4,5"));
    CHECK(serialize(trace.tuple) == "1,1;1,2;2,2;3,4;3,5");
    REQUIRE(trace.steps.size() == 5);
    const std::vector<std::vector<int>> pools{{5, 4, 1, 2}, {5, 4, 2}, {5, 2}, {4}, {}};
    const std::vector<PhiRule> rules{PhiRule::grow_fresh, PhiRule::grow_fresh, PhiRule::grow_repeat,
                                     PhiRule::swap, PhiRule::grow_repeat};
    for (int k = 1; k <= 5; ++k) {
        CAPTURE(k);
        CHECK(trace.steps[k - 1].k == k);
        CHECK(pool(trace.steps[k - 1].pool) == pools[k - 1]);
        CHECK(trace.steps[k - 1].rule == rules[k - 1]);
    }
    CHECK(trace.steps[0].pair == HetyeiPair{3, 5});
}

TEST_CASE("phi small cases") {
    CHECK(serialize(phi(parse_chain(";1"))) == "1,1");
    CHECK(serialize(phi(parse_chain(";3;1,3;1,2,3"))) == "1,1;1,2;1,3");
}

TEST_CASE("phi inverse") {
    CHECK(serialize(phi_inverse(parse_hetyei("1,1;1,2;2,2;3,4;3,5"))) == ";3;1,3;1,3,4;1,2,3,5;1,2,3,4,5");
    CHECK(serialize(phi_inverse(parse_hetyei("1,1"))) == ";1");
    CHECK(serialize(phi_inverse(parse_hetyei("1,1;1,1;2,3"))) == ";2;2,3;1,2,3");
}

TEST_CASE("involutions: examples") {
    CHECK(serialize(involution_t(parse_dumont("4 1 6 2 7 5 8 3"))) == "2 1 6 3 7 4 8 5");
    CHECK(serialize(involution_t(parse_dellac("1 2 2 1 3 3"))) == "1 2 1 2 3 3");
    CHECK(serialize(involution_t(parse_settuple("3;1;2"))) == "1;3;2");
    CHECK(serialize(involution_r(parse_dumont("2 1 4 3 6 5 8 7"))) == "2 1 4 3 6 5 8 7");
    CHECK(serialize(involution_r(parse_dellac("1 2 2 1 3 3"))) == "1 1 3 2 2 3");
    CHECK(serialize(involution_r(parse_settuple("1;2;3;4"))) == "1;2;3;4");
}

TEST_CASE("reduce and lift: examples") {
    CHECK(serialize(reduce(parse_dumont("2 1 4 3 6 5 8 7"))) == "2 1 4 3 6 5");
    CHECK(serialize(reduce(parse_dellac("1 2 3 1 2 3"))) == "1 2 1 2");
    CHECK(serialize(reduce(parse_settuple("1;2;3"))) == "1;2");
    CHECK(serialize(lift(parse_dumont("2 1 4 3 6 5"))) == "2 1 4 3 6 5 8 7");
    CHECK(serialize(lift(parse_dellac("1 2 1 2"))) == "1 2 3 1 2 3");
    CHECK(serialize(lift(parse_settuple("1;2"))) == "1;2;3");

    CHECK_THROWS_AS(reduce(parse_settuple("1;3;2")), InvariantError);
    CHECK_THROWS_AS(reduce(parse_settuple("1")), InvariantError);
    CHECK_THROWS_AS(reduce(ModelObject(parse_chain(";1"))), std::invalid_argument);
    CHECK_THROWS_AS(involution_t(ModelObject(parse_hetyei("1,1"))), std::invalid_argument);
    CHECK(has_involutions(Model::dellac));
    CHECK_FALSE(has_involutions(Model::chain));
}

TEST_CASE("embed permutation") {
    const std::vector<int> a{2, 1, 3}, b{3, 1, 2}, id{1, 2, 3, 4};
    CHECK(serialize(embed_permutation(a)) == "2;1;3");
    CHECK(serialize(embed_permutation(b)) == "3;1;2");
    CHECK(serialize(embed_permutation(id)) == "1;2;3;4");
    const std::vector<int> bad{1, 1, 3};
    CHECK_THROWS_AS(embed_permutation(bad), InvariantError);

    for (int n = 1; n <= 5; ++n) {
        std::vector<int> sigma(n);
        for (int i = 0; i < n; ++i) sigma[i] = i + 1;
        std::set<std::string> image;
        do {
            const SetTuple s = embed_permutation(sigma);
            image.insert(serialize(s));
            const FeiginChain chain = settuple_to_chain(s);
            for (int i = 1; i <= n; ++i) CHECK(chain.at(i - 1).subset_of(chain.at(i)));
        } while (std::next_permutation(sigma.begin(), sigma.end()));
        std::set<std::string> singletons;
        for_each_settuple(n, [&](const SetTuple& s) {
            bool all = true;
            for (int i = 1; i <= n; ++i) all = all && s.at(i).size() == 1;
            if (all) singletons.insert(serialize(s));
        });
        CHECK(image == singletons);
    }
}

TEST_CASE("chain and set tuple bijection, exhaustive n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        std::set<std::string> image;
        for_each_chain(n, [&](const FeiginChain& chain) {
            const SetTuple s = chain_to_settuple(chain);
            CHECK(serialize(s) == settuple_oracle(chain));
            CHECK(statistics(s) == statistics(chain));
            CHECK(settuple_to_chain(s) == chain);
            image.insert(serialize(s));
        });
        std::size_t total = 0;
        for_each_settuple(n, [&](const SetTuple& s) {
            ++total;
            CHECK(image.count(serialize(s)) == 1);
            CHECK(chain_to_settuple(settuple_to_chain(s)) == s);
            CHECK(settuple_to_chain_closed_form(s) == settuple_to_chain(s));
        });
        CHECK(image.size() == total);
    }
}

TEST_CASE("phi bijection, exhaustive n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        std::set<std::string> image;
        for_each_chain(n, [&](const FeiginChain& chain) {
            const PhiTrace trace = phi_trace(chain);
            CHECK(statistics(trace.tuple) == statistics(chain));
            CHECK(phi_inverse(trace.tuple) == chain);
            for (int k = 1; k <= n; ++k)
                CHECK(trace.steps[k - 1].pool.as_set() == IndexSet::range(n) - chain.at(k));
            image.insert(serialize(trace.tuple));
        });
        std::size_t total = 0;
        for_each_hetyei(n, [&](const HetyeiTuple& m) {
            ++total;
            CHECK(image.count(serialize(m)) == 1);
            CHECK(phi(phi_inverse(m)) == m);
        });
        CHECK(image.size() == total);
    }
}

TEST_CASE("involutions and reduction, exhaustive n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        for_each_dumont(n, [&](const DumontPermutation& s) {
            const Statistics st = statistics(s);
            CHECK(serialize(involution_t(s)) == dumont_t_oracle(s));
            CHECK(serialize(involution_r(s)) == dumont_r_oracle(s));
            CHECK(statistics(involution_t(s)) == Statistics{st.l, st.k});
            CHECK(statistics(involution_r(s)) == Statistics{n + 1 - st.l, n + 1 - st.k});
            CHECK(involution_t(involution_t(s)) == s);
            CHECK(involution_r(involution_r(s)) == s);
        });
        for_each_dellac(n, [&](const DellacConfiguration& d) {
            const Statistics st = statistics(d);
            CHECK(serialize(involution_r(d)) == dellac_r_oracle(d));
            CHECK(statistics(involution_t(d)) == Statistics{st.l, st.k});
            CHECK(statistics(involution_r(d)) == Statistics{n + 1 - st.l, n + 1 - st.k});
            CHECK(involution_t(involution_t(d)) == d);
            CHECK(involution_r(involution_r(d)) == d);
            if (st.k == st.l) CHECK(involution_t(d) == d);
        });
        for_each_settuple(n, [&](const SetTuple& s) {
            CHECK(serialize(involution_t(s)) == settuple_t_oracle(s));
            CHECK(serialize(involution_r(s)) == settuple_r_oracle(s));
        });
    }
    for (Model model : {Model::dumont, Model::dellac, Model::settuple}) {
        for (int n = 2; n <= 6; ++n) {
            std::set<std::string> image;
            enumerate(model, n, [&](const ModelObject& o) {
                if (statistics(o).l != n) {
                    CHECK_THROWS_AS(reduce(o), InvariantError);
                    return;
                }
                const ModelObject r = reduce(o);
                CHECK(order_of(r) == n - 1);
                CHECK(lift(r) == o);
                image.insert(serialize(r));
            });
            CHECK(normalized_genocchi(n - 1) == static_cast<long>(image.size()));
            enumerate(model, n - 1, [&](const ModelObject& o) {
                CHECK(image.count(serialize(o)) == 1);
                CHECK(reduce(lift(o)) == o);
                CHECK(statistics(lift(o)).l == n);
            });
        }
    }
}
