#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

#include <algorithm>
#include <set>

#include "slodowy/chamber.hpp"
#include "slodowy/verify.hpp"

using namespace slodowy;

namespace {

std::vector<Rational> chi(std::initializer_list<long long> xs) {
    std::vector<Rational> out;
    for (long long x : xs) out.emplace_back(x);
    return out;
}

} // namespace

TEST_CASE("six chambers with the six known labels") {
    Partition d{3, 2, 1};
    std::vector<Chamber> cs = enumerate_chambers(d);
    REQUIRE(cs.size() == 6);
    std::set<FlagType> labels;
    for (const Chamber& c : cs) labels.insert(c.flag_type);
    std::set<FlagType> expected = {{3, 2, 1}, {2, 3, 1}, {2, 1, 3},
                                   {1, 2, 3}, {1, 3, 2}, {3, 1, 2}};
    CHECK(labels == expected);
}

TEST_CASE("chamber counts for repeated column heights") {
    CHECK(enumerate_chambers(Partition{2}).size() == 2);
    std::set<FlagType> labels;
    for (const Chamber& c : enumerate_chambers(Partition{2})) labels.insert(c.flag_type);
    CHECK(labels == std::set<FlagType>{{1, 1}});

    std::vector<Chamber> cs = enumerate_chambers(Partition{3, 2});
    CHECK(cs.size() == 6);
    std::set<FlagType> distinct;
    for (const Chamber& c : cs) distinct.insert(c.flag_type);
    CHECK(distinct.size() == 3);
}

TEST_CASE("locating character points") {
    Partition d{3, 2, 1};

    auto fund = locate(chi({1, 1}), d);
    REQUIRE(std::holds_alternative<Chamber>(fund));
    CHECK(std::get<Chamber>(fund).flag_type == FlagType{3, 2, 1});
    CHECK(std::get<Chamber>(fund).perm == std::vector<int>{1, 2, 3});

    CHECK(std::holds_alternative<Wall>(locate(chi({0, 0}), d)));
    CHECK(std::holds_alternative<Wall>(locate(chi({0, 5}), d)));
    CHECK(std::holds_alternative<Wall>(locate(chi({3, -3}), d))); // z_1 = z_3

    auto upper_left = locate(chi({-1, 3}), d);
    REQUIRE(std::holds_alternative<Chamber>(upper_left));
    CHECK(std::get<Chamber>(upper_left).flag_type == FlagType{2, 3, 1});

    CHECK(error_kind([&] { locate(chi({1}), d); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("flop graphs") {
    FlopGraph hexagon = flop_graph(Partition{3, 2, 1});
    CHECK(hexagon.nodes.size() == 6);
    CHECK(hexagon.edges.size() == 6);
    for (std::size_t i = 0; i < 6; ++i) CHECK(hexagon.degree(i) == 2);
    CHECK(hexagon.connected());

    FlopGraph single = flop_graph(Partition{2});
    CHECK(single.nodes.size() == 1);
    CHECK(single.edges.empty());

    FlopGraph path = flop_graph(Partition{3, 2});
    REQUIRE(path.nodes.size() == 3);
    CHECK(path.edges.size() == 2);
    // endpoints (2,2,1) and (1,2,2) have degree one, (2,1,2) sits between
    std::map<FlagType, std::size_t> deg;
    for (std::size_t i = 0; i < path.nodes.size(); ++i) deg[path.nodes[i]] = path.degree(i);
    CHECK(deg[FlagType{2, 2, 1}] == 1);
    CHECK(deg[FlagType{1, 2, 2}] == 1);
    CHECK(deg[FlagType{2, 1, 2}] == 2);
}

TEST_CASE("slice chamber products") {
    SlicePair e1(Partition{4, 4, 4, 2, 2, 1, 1}, Partition{5, 4, 3, 3, 2, 1});
    SliceChambers sc = slice_chambers(e1);
    REQUIRE(sc.factor_graphs.size() == 2);
    CHECK(sc.factor_graphs[0].nodes.size() == 6);
    CHECK(sc.factor_graphs[1].nodes.size() == 2);
    CHECK(sc.product.nodes.size() == 12);
    // hexagon x segment: 6*2 + 1*6 edges
    CHECK(sc.product.edges.size() == 6 * 2 + 1 * 6);
    CHECK(sc.product.connected());

    SlicePair e2(Partition{5, 3, 3, 2}, Partition{5, 4, 3, 1});
    SliceChambers sc2 = slice_chambers(e2);
    CHECK(sc2.product.nodes.size() == 3);

    SlicePair point(Partition{3, 2}, Partition{3, 2});
    SliceChambers sc3 = slice_chambers(point);
    CHECK(sc3.product.nodes.size() == 1);
    CHECK(sc3.product.edges.empty());
    CHECK(product_node_label(sc3.product.nodes[0]) == "()");
}

TEST_CASE("dot output is well formed") {
    std::string dot = flop_graph_dot(flop_graph(Partition{3, 2}));
    CHECK(dot.find("graph flops {") == 0);
    CHECK(dot.find("\"2,2,1\"") != std::string::npos);
    CHECK(dot.find("--") != std::string::npos);
    CHECK(dot.back() == '\n');

    std::string adj = chamber_adjacency_dot(Partition{3, 2});
    CHECK(adj.find("graph chambers {") == 0);
    CHECK(std::count(adj.begin(), adj.end(), '-') >= 2);
}

TEST_CASE("chamber property suite passes") {
    SuiteResult r = chamber_suite(4242, 200);
    INFO(r.detail);
    CHECK(r.pass);
}
