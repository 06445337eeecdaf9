#include "rospave/free_sets.hpp"
#include "rospave/errors.hpp"
#include "rospave/fragmentation.hpp"

#include "support/generators.hpp"

#include <doctest.h>

#include <vector>

using namespace rospave;

TEST_SUITE("free_sets") {

TEST_CASE("map constructor validates") {
    CHECK_THROWS_AS(FixedPointFreeMap({0, 0}), PreconditionViolated); // f(0)=0
    CHECK_THROWS_AS(FixedPointFreeMap({1, 2}), IndexOutOfRange);      // f(1)=2, n=2
    // Declared preimage bound smaller than an actual preimage.
    CHECK_THROWS_AS(FixedPointFreeMap({1, 0, 0}, 1), PreconditionViolated);
    const FixedPointFreeMap ok({1, 0, 0}, 2);
    CHECK(ok.finite_to_one_bound() == 2);
    CHECK(ok(2) == 0);
    // A singleton domain admits no fixed-point-free map.
    CHECK_THROWS_AS(FixedPointFreeMap({0}), PreconditionViolated);
}

TEST_CASE("matrix_of_map structure") {
    const FixedPointFreeMap f({1, 0, 0});
    auto m = matrix_of_map(f);
    CHECK(m.dim() == 3);
    CHECK(m.entry_count() == 3);
    CHECK(m.value_at(0, 1) == Rational(1));
    CHECK(m.value_at(1, 0) == Rational(1));
    CHECK(m.value_at(2, 0) == Rational(1));
    // Row sums are exactly 1, column sums count preimages.
    CHECK(norm_inf(m) == Rational(1));
    CHECK(norm_one(m) == Rational(2)); // |f^-1(0)| = 2
}

TEST_CASE("is_free on hand cases") {
    const FixedPointFreeMap f({1, 0, 0});
    CHECK(is_free(f, IndexSet(3, {})));
    CHECK(is_free(f, IndexSet(3, {0})));   // f(0)=1 outside
    CHECK(is_free(f, IndexSet(3, {1, 2}))); // both map to 0
    CHECK_FALSE(is_free(f, IndexSet(3, {0, 1})));
    CHECK_FALSE(is_free(f, IndexSet(3, {0, 2})));
    CHECK_FALSE(is_free(f, IndexSet::full(3)));
    CHECK_THROWS_AS(is_free(f, IndexSet(4, {0})), DimensionMismatch);
}

TEST_CASE("freeness is half fragmentation of the map matrix") {
    testsupport::Rng rng(401);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + trial % 8;
        auto f = testsupport::random_fixed_point_free_map(rng, n);
        auto m = matrix_of_map(f);
        auto a = testsupport::random_subset(rng, n);
        const bool free_set = is_free(f, a);
        // The row sums of the restriction are 0 or 1, so any threshold in
        // [0, 1) separates the two cases identically.
        CHECK(free_set == check_fragmentation(m, a, Rational(1, 2)).fragmented());
        CHECK(free_set == check_fragmentation(m, a, Rational(0)).fragmented());
        CHECK(free_set == check_fragmentation(m, a, Rational(3, 4)).fragmented());
        CHECK(free_set == testsupport::naive_is_free(f, a));
    }
}

TEST_CASE("pave_free worked example") {
    // 0 and 1 swap (an even cycle), 2 hangs off 0, so 2 lands opposite its
    // image.
    auto p = pave_free(FixedPointFreeMap({1, 0, 0}));
    REQUIRE(p.blocks().size() == 2);
    CHECK(p.blocks()[0] == IndexSet(3, {0}));
    CHECK(p.blocks()[1] == IndexSet(3, {1, 2}));
}

TEST_CASE("pave_free on pure cycles") {
    // Even cycle: two alternating blocks.
    std::vector<std::size_t> even{1, 2, 3, 0};
    auto pe = pave_free(FixedPointFreeMap(std::move(even)));
    REQUIRE(pe.blocks().size() == 2);
    CHECK(pe.blocks()[0] == IndexSet(4, {0, 2}));
    CHECK(pe.blocks()[1] == IndexSet(4, {1, 3}));
    // Odd cycle: the third color lands on the least index.
    std::vector<std::size_t> odd{1, 2, 0};
    auto po = pave_free(FixedPointFreeMap(std::move(odd)));
    REQUIRE(po.blocks().size() == 3);
    CHECK(po.blocks()[2] == IndexSet(3, {0}));
    // Swap direction: 2-cycle.
    auto p2 = pave_free(FixedPointFreeMap({1, 0}));
    REQUIRE(p2.blocks().size() == 2);
}

TEST_CASE("pave_free blocks are free, at most three, for every small map") {
    for (std::size_t n = 2; n <= 6; ++n) {
        testsupport::for_all_fixed_point_free_maps(n, [&](const FixedPointFreeMap& f) {
            auto p = pave_free(f);
            CHECK(p.ambient_dim() == n);
            CHECK(p.blocks().size() >= 2);
            CHECK(p.blocks().size() <= 3);
            for (const auto& block : p.blocks()) {
                CHECK(is_free(f, block));
            }
        });
    }
}

TEST_CASE("pave_free scales to large random maps") {
    testsupport::Rng rng(402);
    for (std::size_t n : {1000u, 20000u}) {
        auto f = testsupport::random_fixed_point_free_map(rng, n);
        auto p = pave_free(f);
        CHECK(p.blocks().size() <= 3);
        for (const auto& block : p.blocks()) {
            CHECK(is_free(f, block));
        }
    }
}

TEST_CASE("pave_free degenerate sizes") {
    // Empty domain: empty partition, no blocks to check.
    std::vector<std::size_t> none;
    CHECK(pave_free(FixedPointFreeMap(std::move(none))).blocks().empty());
}

}
