#include <doctest.h>

#include "brute.hh"

#include <ppk/containment.hh>
#include <ppk/errors.hh>
#include <ppk/generators.hh>
#include <ppk/sparsify.hh>

using namespace ppk;
using std::vector;

namespace
{
    auto M(vector<std::string> rows) -> OrderedBigraph
    {
        return OrderedBigraph::from_strings(rows);
    }

    /// Independent recount of the tagged invariant.
    auto degrees_ok(const OrderedBigraph & g, const VertexSetPair & p, double eps, bool dense) -> bool
    {
        for (int a : p.z1) {
            int bad = 0;
            for (int b : p.z2)
                bad += g.adjacent(a, b) != dense;
            if (bad > eps * double(p.z2.size()))
                return false;
        }
        for (int b : p.z2) {
            int bad = 0;
            for (int a : p.z1)
                bad += g.adjacent(a, b) != dense;
            if (bad > eps * double(p.z1.size()))
                return false;
        }
        return true;
    }
}

TEST_CASE("d is large enough for the averaging step")
{
    CHECK(SparsifyParams{0.1, 1, 1}.d() == 40);
    CHECK(SparsifyParams{1.0 / 64, 1, 1}.d() == 256);
    for (double eps : {0.01, 0.05, 0.1, 0.124})
        CHECK(4.0 / double(SparsifyParams{eps, 1, 1}.d()) <= eps + 1e-12);
}

TEST_CASE("sparsify: fixed examples")
{
    SparsifyParams params{0.1, 2, 2};

    auto zero = sparsify(OrderedBigraph(80, 4), M({"1"}), params);
    CHECK(zero.kind == SparsifyOutcome::Kind::sparse_pair);
    CHECK(zero.pair.z1.size() == 2);
    CHECK(zero.pair.z2.size() == 2);
    CHECK(brute::anticomplete(OrderedBigraph(80, 4), zero.pair.z1, zero.pair.z2));

    auto one = sparsify(full_matrix(80, 4), M({"0"}), params);
    CHECK(one.kind == SparsifyOutcome::Kind::dense_pair);
    CHECK(brute::anticomplete(OrderedBigraph(80, 4), one.pair.z1, one.pair.z2));
    CHECK(one.pair == zero.pair);

    auto found = sparsify(full_matrix(40, 2), M({"1"}), SparsifyParams{0.1, 1, 1});
    CHECK(found.kind == SparsifyOutcome::Kind::found);
    REQUIRE(found.embedding);
    CHECK(verify_embedding(full_matrix(40, 2), M({"1"}), *found.embedding));
}

TEST_CASE("sparsify: preconditions name the failing inequality")
{
    try {
        sparsify(OrderedBigraph(79, 4), M({"1"}), SparsifyParams{0.1, 2, 2});
        FAIL("expected PreconditionViolated");
    }
    catch (const PreconditionViolated & e) {
        CHECK(std::string(e.what()).find("h1 * d^h2 * m1") != std::string::npos);
    }
    try {
        sparsify(OrderedBigraph(80, 3), M({"1"}), SparsifyParams{0.1, 2, 2});
        FAIL("expected PreconditionViolated");
    }
    catch (const PreconditionViolated & e) {
        CHECK(std::string(e.what()).find("2 * h1 * h2 * m2") != std::string::npos);
    }
    CHECK_THROWS_AS(sparsify(OrderedBigraph(80, 4), M({"1"}), SparsifyParams{0.125, 2, 2}), PreconditionViolated);
    CHECK_THROWS_AS(sparsify(OrderedBigraph(80, 4), M({"1"}), SparsifyParams{0.1, 0, 2}), PreconditionViolated);
}

TEST_CASE("sparsify: outcomes are valid and never Found on pattern-free hosts")
{
    vector<OrderedBigraph> patterns{M({"1"}), M({"0"}), M({"1", "1"}), M({"1", "0"}), M({"0", "1", "1"})};
    int runs = 0, pairs = 0;
    for (auto & h : patterns)
        for (unsigned seed = 0 ; seed < 12 ; ++seed) {
            SparsifyParams params{0.12, 1 + int(seed % 3), 1 + int(seed % 2)};
            int n1 = h.n1() * int(params.d()) * params.m1 + int(seed % 5);
            int n2 = 2 * h.n1() * h.n2() * params.m2 + int(seed % 4);
            int percent = seed % 4 == 0 ? 2 : seed % 4 == 1 ? 98 : 50;
            auto host = brute::random_matrix(n1, n2, seed * 17 + 3, percent);
            auto out = sparsify(host, h, params);
            CHECK(check_sparsify_outcome(host, h, params, out));
            if (out.kind == SparsifyOutcome::Kind::found) {
                CHECK(verify_embedding(host, h, *out.embedding));
            }
            else {
                ++pairs;
                CHECK(int(out.pair.z1.size()) == params.m1);
                CHECK(int(out.pair.z2.size()) == params.m2);
                CHECK(degrees_ok(host, out.pair, params.eps, out.kind == SparsifyOutcome::Kind::dense_pair));
            }
            if (! embeds(host, h))
                CHECK(out.kind != SparsifyOutcome::Kind::found);
            ++runs;
        }
    CHECK(runs == 60);
    CHECK(pairs > 0);
}

TEST_CASE("sparsify: two-column pattern on a pattern-free host")
{
    // [10;01] needs a 1 above-left of a 1 with 0s off the diagonal; a matrix
    // whose rows are all equal cannot contain it
    auto h = M({"10", "01"});
    SparsifyParams params{0.12, 1, 2};
    int n1 = 2 * 34 * 34;
    vector<std::string> rows(n1, "1011010011010010");
    auto host = OrderedBigraph::from_strings(rows);
    REQUIRE_FALSE(embeds(host, h));
    auto out = sparsify(host, h, params);
    CHECK(out.kind != SparsifyOutcome::Kind::found);
    CHECK(check_sparsify_outcome(host, h, params, out));
    CHECK(degrees_ok(host, out.pair, params.eps, out.kind == SparsifyOutcome::Kind::dense_pair));
}
