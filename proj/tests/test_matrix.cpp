#include "rospave/matrix.hpp"
#include "rospave/errors.hpp"

#include "support/generators.hpp"

#include <doctest.h>

using namespace rospave;

namespace {

NonnegativeMatrix two_by_two() {
    // [[0, 2], [1, 0]]
    return NonnegativeMatrix::from_triplets(
        2, {{0, 1, Rational(2)}, {1, 0, Rational(1)}});
}

} // namespace

TEST_SUITE("matrix") {

TEST_CASE("from_triplets validates and normalizes") {
    auto m = two_by_two();
    CHECK(m.dim() == 2);
    CHECK(m.entry_count() == 2);
    CHECK(m.value_at(0, 1) == Rational(2));
    CHECK(m.value_at(1, 0) == Rational(1));
    CHECK(m.value_at(0, 0) == Rational(0));

    CHECK_THROWS_AS(NonnegativeMatrix::from_triplets(2, {{0, 2, Rational(1)}}),
                    IndexOutOfRange);
    CHECK_THROWS_AS(NonnegativeMatrix::from_triplets(2, {{0, 1, Rational(-1)}}),
                    NegativeEntry);
    CHECK_THROWS_AS(
        NonnegativeMatrix::from_triplets(
            2, {{0, 1, Rational(1)}, {0, 1, Rational(2)}}),
        ParseError);

    // Explicit zeros are dropped, so the two forms are equal.
    auto with_zero = NonnegativeMatrix::from_triplets(
        2, {{0, 1, Rational(2)}, {1, 0, Rational(1)}, {1, 1, Rational(0)}});
    CHECK(with_zero == m);
    CHECK(with_zero.entry_count() == 2);
}

TEST_CASE("norms on a fixed matrix") {
    // [[0, 2, 0], [1, 0, 3], [0, 1, 0]]
    auto m = NonnegativeMatrix::from_triplets(3, {{0, 1, Rational(2)},
                                                  {1, 0, Rational(1)},
                                                  {1, 2, Rational(3)},
                                                  {2, 1, Rational(1)}});
    CHECK(norm_inf(m) == Rational(4));  // row 1
    CHECK(norm_one(m) == Rational(3));  // columns 1 and 2 tie at 3
    const auto norms = matrix_norms(m);
    CHECK(norms.norm_inf == Rational(4));
    CHECK(norms.norm_one == Rational(3));
}

TEST_CASE("norms of the zero and empty matrices") {
    NonnegativeMatrix zero = NonnegativeMatrix::from_triplets(3, {});
    CHECK(zero.is_zero());
    CHECK(norm_inf(zero) == Rational(0));
    CHECK(norm_one(zero) == Rational(0));

    NonnegativeMatrix empty = NonnegativeMatrix::from_triplets(0, {});
    CHECK(norm_inf(empty) == Rational(0));
    CHECK(norm_one(empty) == Rational(0));
}

TEST_CASE("transpose swaps the norms") {
    testsupport::Rng rng(20260816);
    for (int trial = 0; trial < 50; ++trial) {
        auto m = testsupport::random_sparse_matrix(rng, 12, 40);
        auto mt = transpose(m);
        CHECK(norm_inf(m) == norm_one(mt));
        CHECK(norm_one(m) == norm_inf(mt));
        CHECK(transpose(mt) == m);
    }
}

TEST_CASE("transpose moves each entry") {
    auto m = two_by_two();
    auto mt = transpose(m);
    CHECK(mt.value_at(1, 0) == Rational(2));
    CHECK(mt.value_at(0, 1) == Rational(1));
}

TEST_CASE("zero_diagonal removes exactly the diagonal") {
    auto m = NonnegativeMatrix::from_triplets(3, {{0, 0, Rational(5)},
                                                  {0, 1, Rational(1)},
                                                  {1, 1, Rational(2)},
                                                  {2, 0, Rational(3)}});
    auto z = zero_diagonal(m);
    CHECK(z.value_at(0, 0) == Rational(0));
    CHECK(z.value_at(1, 1) == Rational(0));
    CHECK(z.value_at(0, 1) == Rational(1));
    CHECK(z.value_at(2, 0) == Rational(3));
    CHECK(z.entry_count() == 2);
}

TEST_CASE("triangular_split on the worked two by two") {
    // [[0, 2], [1, 0]]: scale is the max row sum 2, upper part keeps
    // entry (0,1) at 2/2 = 1, lower part keeps (1,0) at 1/2.
    auto split = triangular_split(two_by_two());
    CHECK(split.scale == Rational(2));
    CHECK(split.upper.value_at(0, 1) == Rational(1));
    CHECK(split.upper.entry_count() == 1);
    CHECK(split.lower.value_at(1, 0) == Rational(1, 2));
    CHECK(split.lower.entry_count() == 1);
}

TEST_CASE("triangular_split parts recombine and stay bounded") {
    testsupport::Rng rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        auto m = testsupport::random_dense_matrix(rng, 9);
        if (m.is_zero()) {
            continue;
        }
        auto split = triangular_split(m);
        CHECK(split.scale == norm_inf(m));
        CHECK(norm_inf(split.upper) <= Rational(1));
        CHECK(norm_inf(split.lower) <= Rational(1));
        // scale * (upper + lower) recovers the off-diagonal part.
        auto z = zero_diagonal(m);
        for (const auto& e : z.all_entries()) {
            Rational reassembled =
                split.scale * (split.upper.value_at(e.row, e.col) +
                               split.lower.value_at(e.row, e.col));
            CHECK(reassembled == e.value);
        }
        // The parts are strictly triangular.
        for (const auto& e : split.upper.all_entries()) {
            CHECK(e.col > e.row);
        }
        for (const auto& e : split.lower.all_entries()) {
            CHECK(e.col < e.row);
        }
    }
}

TEST_CASE("triangular_split rejects the zero matrix") {
    auto zero = NonnegativeMatrix::from_triplets(2, {});
    CHECK_THROWS_AS(triangular_split(zero), ZeroMatrix);
    // A matrix whose only mass sits on the diagonal still has positive
    // norm, so it splits to two zero parts.
    auto diag = NonnegativeMatrix::from_triplets(2, {{0, 0, Rational(3)}});
    auto split = triangular_split(diag);
    CHECK(split.scale == Rational(3));
    CHECK(split.upper.is_zero());
    CHECK(split.lower.is_zero());
}

}
