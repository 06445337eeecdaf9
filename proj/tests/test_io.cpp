#include "rospave/io.hpp"
#include "rospave/errors.hpp"
#include "rospave/paving.hpp"

#include "support/generators.hpp"

#include <json.hpp>

#include <doctest.h>

using namespace rospave;
using nlohmann::json;

TEST_SUITE("io") {

TEST_CASE("matrix JSON round trip") {
    const char* doc = R"({"n": 3, "entries": [[0, 1, "1/2"], [2, 0, "3"]]})";
    auto m = parse_matrix(doc);
    CHECK(m.dim() == 3);
    CHECK(m.value_at(0, 1) == Rational(1, 2));
    CHECK(m.value_at(2, 0) == Rational(3));
    CHECK(parse_matrix(serialize_matrix(m)) == m);
}

TEST_CASE("matrix CSV form") {
    auto m = parse_matrix("0, 1/2, 0\n0, 0, 0.25\n3, 0, 0\n");
    CHECK(m.dim() == 3);
    CHECK(m.value_at(0, 1) == Rational(1, 2));
    CHECK(m.value_at(1, 2) == Rational(1, 4));
    CHECK(m.value_at(2, 0) == Rational(3));
    // Trailing blank lines are tolerated; ragged rows are not.
    CHECK(parse_matrix("0,1\n1,0\n\n").dim() == 2);
    CHECK_THROWS_AS(parse_matrix("0,1\n1\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix("0,1\n\n1,0\n"), ParseError);
    // Negative entries are structural errors, not parse errors.
    CHECK_THROWS_AS(parse_matrix("0,-1\n0,0\n"), NegativeEntry);
}

TEST_CASE("matrix parse errors") {
    CHECK_THROWS_AS(parse_matrix("{\"n\": 2}"), ParseError);
    CHECK_THROWS_AS(parse_matrix(R"({"n": 2, "entries": [[0, 1, 0.5]]})"), ParseError);
    CHECK_THROWS_AS(parse_matrix(R"({"n": 2, "entries": [[0, 5, "1"]]})"), IndexOutOfRange);
    CHECK_THROWS_AS(parse_matrix(R"({"n": -2, "entries": []})"), ParseError);
    CHECK_THROWS_AS(parse_matrix("{broken"), ParseError);
}

TEST_CASE("random matrices survive both serializations") {
    testsupport::Rng rng(601);
    for (int trial = 0; trial < 25; ++trial) {
        auto m = testsupport::random_sparse_matrix(rng, 8, 20);
        CHECK(parse_matrix(serialize_matrix(m)) == m);
    }
}

TEST_CASE("partition documents") {
    const IndexPartition p(4, {IndexSet(4, {0, 2}), IndexSet(4, {1, 3})});
    auto round = parse_partition(serialize_partition(p));
    CHECK(round == p);
    // The pave output wrapper is unwrapped transparently.
    json wrapped;
    wrapped["partition"] = json::parse(serialize_partition(p));
    wrapped["block_count"] = 2;
    CHECK(parse_partition(wrapped.dump()) == p);
    // Coverage violations surface as PreconditionViolated.
    CHECK_THROWS_AS(parse_partition(R"({"n": 3, "blocks": [[0, 1]]})"), PreconditionViolated);
    CHECK_THROWS_AS(parse_partition(R"({"n": 2, "blocks": [[0, 1], [1]]})"),
                    PreconditionViolated);
}

TEST_CASE("index set, map, family and interval documents") {
    const IndexSet s(5, {1, 4});
    CHECK(parse_index_set(serialize_index_set(s)) == s);

    const FixedPointFreeMap f({1, 2, 0}, 2);
    auto f2 = parse_map(serialize_map(f));
    CHECK(f2 == f);
    CHECK(f2.finite_to_one_bound() == 2);
    const FixedPointFreeMap unbounded({1, 0});
    CHECK_FALSE(parse_map(serialize_map(unbounded)).finite_to_one_bound().has_value());
    CHECK_THROWS_AS(parse_map(R"({"n": 3, "f": [1, 2]})"), ParseError);
    CHECK_THROWS_AS(parse_map(R"({"n": 2, "f": [0, 0]})"), PreconditionViolated);

    const SetFamily fam(6, {IndexSet(6, {0, 1}), IndexSet(6, {3, 5})});
    auto fam2 = parse_family(serialize_family(fam));
    CHECK(fam2.ambient_dim() == 6);
    REQUIRE(fam2.size() == 2);
    CHECK(fam2.sets()[0] == fam.sets()[0]);
    CHECK(fam2.sets()[1] == fam.sets()[1]);

    const IntervalPartition iv({0, 2, 7});
    auto iv2 = parse_intervals(serialize_intervals(iv));
    CHECK(iv2.endpoints().size() == 3);
    CHECK(iv2.ambient_dim() == 7);
    CHECK_THROWS_AS(parse_intervals(R"({"endpoints": [1, 2]})"), PreconditionViolated);
}

TEST_CASE("block list keeps disjointness but not coverage") {
    const std::vector<IndexSet> blocks{IndexSet(6, {0, 3}), IndexSet(6, {5})};
    auto [n, parsed] = parse_block_list(serialize_block_list(6, blocks));
    CHECK(n == 6);
    REQUIRE(parsed.size() == 2);
    CHECK(parsed[0] == blocks[0]);
    CHECK(parsed[1] == blocks[1]);
}

TEST_CASE("negative indices are index errors, not silent wraps") {
    CHECK_THROWS_AS(parse_index_set(R"({"n": 3, "set": [-1]})"), IndexOutOfRange);
    CHECK_THROWS_AS(parse_map(R"({"n": 2, "f": [-1, 0]})"), IndexOutOfRange);
}

TEST_CASE("certificate document shape") {
    auto m = parse_matrix(R"({"n": 2, "entries": [[0, 1, "1"]]})");
    auto cert = check_fragmentation(m, IndexSet::full(2), Rational(1, 2));
    auto doc = json::parse(serialize_certificate(cert));
    CHECK(doc["epsilon"] == "1/2");
    CHECK(doc["set"] == json::array({0, 1}));
    REQUIRE(doc["residuals"].size() == 2);
    CHECK(doc["residuals"][0][0] == 0);
    CHECK(doc["residuals"][0][1] == "1");
    CHECK(doc["verdict"]["violated_at"] == 0);

    auto good = check_fragmentation(m, IndexSet::full(2), Rational(1));
    auto gdoc = json::parse(serialize_certificate(good));
    CHECK(gdoc["verdict"] == "fragmented");
}

TEST_CASE("serialization is deterministic") {
    auto m = parse_matrix(R"({"n": 2, "entries": [[0, 1, "1/2"]]})");
    CHECK(serialize_matrix(m) == serialize_matrix(m));
    auto p = pave(m, Rational(1, 2));
    CHECK(serialize_partition(p) == serialize_partition(p));
}

}
