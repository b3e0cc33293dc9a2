#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "oracles.hpp"
#include "scspread/errors.hpp"
#include "scspread/protograph.hpp"

using namespace scspread;

TEST_CASE("base graph construction and edge counts") {
    CHECK(make_base_graph(3, 5).edge_count() == 15);
    CHECK(make_base_graph(1, 1).edge_count() == 1);
    CHECK(make_base_graph(4, 7).edge_count() == 28);
    CHECK_THROWS_AS(make_base_graph(0, 5), std::invalid_argument);
    CHECK_THROWS_AS(make_base_graph(3, -1), std::invalid_argument);
}

TEST_CASE("coupling pattern invariants") {
    const auto consecutive = CouplingPattern::consecutive(8);
    CHECK(consecutive.memory() == 8);
    CHECK(consecutive.mt() == 8);
    CHECK(consecutive.size() == 9);

    const CouplingPattern gappy({0, 2, 5});
    CHECK(gappy.memory() == 5);
    CHECK(gappy.mt() == 2);
    CHECK(gappy.contains(2));
    CHECK_FALSE(gappy.contains(1));
    CHECK_FALSE(gappy.contains(6));

    CHECK_THROWS_AS(CouplingPattern({}), std::invalid_argument);
    CHECK_THROWS_AS(CouplingPattern({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(CouplingPattern({0, 2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(CouplingPattern({0, 3, 1}), std::invalid_argument);
}

TEST_CASE("spread_edges splits edges into components") {
    SUBCASE("zero memory keeps the all-one matrix") {
        const auto base = make_base_graph(2, 3);
        const auto comps =
            spread_edges(base, PartitionMatrix::constant(2, 3, 0), CouplingPattern::consecutive(0));
        REQUIRE(comps.mats.size() == 1);
        CHECK(std::all_of(comps.mats[0].begin(), comps.mats[0].end(),
                          [](std::uint8_t b) { return b == 1; }));
    }

    SUBCASE("2x2 split") {
        const auto base = make_base_graph(2, 2);
        const PartitionMatrix p(2, 2, {0, 0, 0, 1});
        const auto comps = spread_edges(base, p, CouplingPattern::consecutive(1));
        REQUIRE(comps.mats.size() == 2);
        CHECK(comps.mats[0] == std::vector<std::uint8_t>{1, 1, 1, 0});
        CHECK(comps.mats[1] == std::vector<std::uint8_t>{0, 0, 0, 1});
    }

    SUBCASE("product assignment on 3x5") {
        const auto base = make_base_graph(3, 5);
        const auto comps =
            spread_edges(base, explicit_product_assignment(base), CouplingPattern::consecutive(8));
        REQUIRE(comps.mats.size() == 9);
        long long ones = 0;
        for (const auto& mat : comps.mats)
            ones += std::accumulate(mat.begin(), mat.end(), 0LL);
        CHECK(ones == 15);
        // H_8 holds exactly the edge (2,4).
        const auto& top = comps.mats[8];
        CHECK(std::accumulate(top.begin(), top.end(), 0) == 1);
        CHECK(top[2 * 5 + 4] == 1);
    }

    SUBCASE("entry outside the pattern names the offender") {
        const auto base = make_base_graph(2, 2);
        const PartitionMatrix p(2, 2, {0, 0, 0, 1});
        try {
            spread_edges(base, p, CouplingPattern({0, 2}));
            FAIL("expected invalid_partition_error");
        } catch (const invalid_partition_error& e) {
            CHECK(e.row == 1);
            CHECK(e.col == 1);
            CHECK(e.value == 1);
        }
    }
}

TEST_CASE("spread and recover round-trip") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const int gamma = 1 + static_cast<int>(seed % 4);
        const int kappa = 1 + static_cast<int>((seed / 4) % 5);
        const auto base = make_base_graph(gamma, kappa);
        const CouplingPattern pattern =
            seed % 2 ? CouplingPattern({0, 2, 5}) : CouplingPattern::consecutive(3);
        const auto p = oracles::random_partition(base, pattern, seed);
        CHECK(recover_partition(spread_edges(base, p, pattern)) == p);
    }
}

TEST_CASE("sc matrix assembly") {
    SUBCASE("3x5 product construction dimensions") {
        const auto base = make_base_graph(3, 5);
        const auto comps =
            spread_edges(base, explicit_product_assignment(base), CouplingPattern::consecutive(8));
        const auto h = build_sc_matrix(comps, 10);
        CHECK(h.rows() == 54);
        CHECK(h.cols() == 50);
        CHECK(h.nnz() == 150);
    }

    SUBCASE("memory zero with one position reproduces H_0") {
        const auto base = make_base_graph(2, 3);
        const auto comps =
            spread_edges(base, PartitionMatrix::constant(2, 3, 0), CouplingPattern::consecutive(0));
        const auto h = build_sc_matrix(comps, 1);
        CHECK(h.rows() == 2);
        CHECK(h.cols() == 3);
        CHECK(h.to_dense() == std::vector<std::uint8_t>(6, 1));
    }

    SUBCASE("hand-assembled 2x2 band") {
        const auto base = make_base_graph(2, 2);
        const PartitionMatrix p(2, 2, {0, 0, 0, 1});
        const auto h = build_sc_matrix(spread_edges(base, p, CouplingPattern::consecutive(1)), 2);
        CHECK(h.rows() == 6);
        CHECK(h.cols() == 4);
        const std::vector<SparseBinaryMatrix::Coord> expected = {
            {0, 0}, {0, 1}, {1, 0}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 3}};
        CHECK(h.nonzeros() == expected);
    }

    SUBCASE("band structure invariants on random instances") {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const int gamma = 1 + static_cast<int>(seed % 3);
            const int kappa = 1 + static_cast<int>((seed / 3) % 4);
            const int length = 1 + static_cast<int>(seed % 5);
            const auto base = make_base_graph(gamma, kappa);
            const auto pattern = CouplingPattern::consecutive(2);
            const auto p = oracles::random_partition(base, pattern, seed + 100);
            const auto h = build_sc_matrix(spread_edges(base, p, pattern), length);
            CHECK(h.nnz() == static_cast<std::int64_t>(length) * gamma * kappa);
            for (int deg : h.col_degrees()) CHECK(deg == gamma);
            for (int deg : h.row_degrees()) {
                CHECK(deg >= 0);
                CHECK(deg <= kappa);
            }
        }
    }

    SUBCASE("coupling length must be positive") {
        const auto base = make_base_graph(2, 2);
        const auto comps =
            spread_edges(base, PartitionMatrix::constant(2, 2, 0), CouplingPattern::consecutive(0));
        CHECK_THROWS_AS(build_sc_matrix(comps, 0), std::invalid_argument);
    }
}

TEST_CASE("explicit product assignment") {
    const auto p35 = explicit_product_assignment(make_base_graph(3, 5));
    CHECK(p35.max_entry() == 8);
    CHECK(p35(2, 4) == 8);

    const auto p1k = explicit_product_assignment(make_base_graph(1, 6));
    CHECK(p1k.max_entry() == 0);

    const auto p22 = explicit_product_assignment(make_base_graph(2, 2));
    CHECK(p22.entries() == std::vector<int>{0, 0, 0, 1});

    for (int gamma = 1; gamma <= 6; ++gamma)
        for (int kappa = 1; kappa <= 6; ++kappa)
            CHECK(explicit_product_assignment(make_base_graph(gamma, kappa)).max_entry() ==
                  (gamma - 1) * (kappa - 1));
}

TEST_CASE("sparse matrix validation and dense refusal") {
    CHECK_THROWS_AS(SparseBinaryMatrix(2, 2, {{0, 0}, {0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(SparseBinaryMatrix(2, 2, {{2, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(SparseBinaryMatrix(2, 2, {{0, -1}}), std::invalid_argument);

    const SparseBinaryMatrix huge(20000, 20000, {});
    CHECK_THROWS_AS(huge.to_dense(), resource_limit_error);
}
