#include <doctest.h>

#include "brute.hh"

#include <ppk/bigraph.hh>
#include <ppk/errors.hh>

#include <cstdio>
#include <string>

using namespace ppk;
using std::vector;

namespace
{
    auto M(vector<std::string> rows) -> OrderedBigraph
    {
        return OrderedBigraph::from_strings(rows);
    }
}

TEST_CASE("bicomplement flips every entry")
{
    CHECK(bicomplement(M({"10", "01"})) == M({"01", "10"}));
    auto empty = OrderedBigraph(0, 0);
    CHECK(bicomplement(empty) == empty);
    for (unsigned seed = 0 ; seed < 20 ; ++seed) {
        auto g = brute::random_matrix(5, 7, seed);
        CHECK(bicomplement(bicomplement(g)) == g);
        auto h = bicomplement(g);
        for (int i = 0 ; i < 5 ; ++i)
            for (int j = 0 ; j < 7 ; ++j)
                CHECK(h.adjacent(i, j) != g.adjacent(i, j));
    }
}

TEST_CASE("induced_sub keeps the order and the entries")
{
    auto g = M({"10", "01"});
    CHECK(induced_sub(g, {0}, {0, 1}) == M({"10"}));
    auto e = induced_sub(g, {0, 1}, {});
    CHECK(e.n1() == 2);
    CHECK(e.n2() == 0);
    CHECK(induced_sub(g, {0, 1}, {0, 1}) == g);
    CHECK(induced_sub(g, {1, 0}, {1, 0}) == g);
    CHECK_THROWS_AS(induced_sub(g, {2}, {0}), PreconditionViolated);
    CHECK_THROWS_AS(induced_sub(g, {0}, {-1}), PreconditionViolated);

    for (unsigned seed = 0 ; seed < 20 ; ++seed) {
        auto h = brute::random_matrix(6, 6, seed);
        vector<int> r{1, 3, 4}, c{0, 2, 5};
        CHECK(induced_sub(bicomplement(h), r, c) == bicomplement(induced_sub(h, r, c)));
    }
}

TEST_CASE("pair_status")
{
    CHECK(pair_status(M({"10", "01"}), {{0}, {1}}) == PairStatus::anticomplete);
    CHECK(pair_status(M({"11"}), {{0}, {0, 1}}) == PairStatus::complete);
    CHECK(pair_status(M({"10"}), {{0}, {0, 1}}) == PairStatus::mixed);
    CHECK(pair_status(M({"10"}), {{}, {}}) == PairStatus::anticomplete);

    for (unsigned seed = 0 ; seed < 50 ; ++seed) {
        auto g = brute::random_matrix(4, 4, seed, 30);
        VertexSetPair p{{0, 2}, {1, 3}};
        bool anti = pair_status(g, p) == PairStatus::anticomplete;
        CHECK(anti == brute::anticomplete(g, p.z1, p.z2));
        CHECK(anti == (pair_status(bicomplement(g), p) == PairStatus::complete));
    }
}

TEST_CASE("valid_pair")
{
    auto g = M({"10", "01"});
    CHECK(valid_pair(g, {{0, 1}, {1}}));
    CHECK_FALSE(valid_pair(g, {{0, 2}, {1}}));
    CHECK_FALSE(valid_pair(g, {{1, 0}, {1}}));
    CHECK_FALSE(valid_pair(g, {{1, 1}, {1}}));
}

TEST_CASE("obm text format")
{
    auto g = parse_obm("# a comment\n2 3\n101\n010\n");
    CHECK(g == M({"101", "010"}));
    CHECK(format_obm(g) == "2 3\n101\n010\n");
    CHECK(parse_obm(format_obm(g)) == g);
    CHECK(parse_obm("2 3\r\n101\r\n010\r\n\n") == g);
    CHECK(parse_obm("0 0\n") == OrderedBigraph(0, 0));
    CHECK(parse_obm("2 0\n\n\n").n1() == 2);

    CHECK_THROWS_AS(parse_obm(""), ParseError);
    CHECK_THROWS_AS(parse_obm("2 3\n101\n"), ParseError);
    CHECK_THROWS_AS(parse_obm("2 3\n101\n01\n"), ParseError);
    CHECK_THROWS_AS(parse_obm("2 3\n101\n012\n"), ParseError);
    CHECK_THROWS_AS(parse_obm("2 3\n101\n010\n111\n"), ParseError);
    CHECK_THROWS_AS(parse_obm("-1 3\n"), ParseError);
    CHECK_THROWS_AS(parse_obm("2 x\n"), ParseError);

    for (unsigned seed = 0 ; seed < 10 ; ++seed) {
        auto h = brute::random_matrix(9, 70, seed);
        CHECK(parse_obm(format_obm(h)) == h);
    }

    std::string path = "test_bigraph_roundtrip.obm";
    write_obm(path, g);
    CHECK(read_obm(path) == g);
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_obm("does/not/exist.obm"), Error);
}

TEST_CASE("degrees and transpose")
{
    auto g = M({"110", "011", "000"});
    CHECK(g.max_degree(Side::rows) == 2);
    CHECK(g.max_degree(Side::cols) == 2);
    CHECK(g.edge_count() == 4);
    auto t = g.transpose();
    CHECK(t == M({"100", "110", "010"}));
    CHECK(t.transpose() == g);
}
