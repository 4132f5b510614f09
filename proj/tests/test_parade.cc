#include <doctest.h>

#include "brute.hh"

#include <ppk/errors.hh>
#include <ppk/generators.hh>
#include <ppk/parade.hh>

#include <cmath>

using namespace ppk;
using std::vector;

namespace
{
    auto block_of(int size, int from, int to) -> BitSet
    {
        BitSet b(size);
        for (int v = from ; v < to ; ++v)
            b.set(v);
        return b;
    }

    /// Two blocks of eight on each side of a 16 x 16 host.
    auto halves(const OrderedBigraph & g) -> Parade
    {
        return Parade(g, { -2, -1, 1, 2 },
                { block_of(16, 0, 8), block_of(16, 8, 16), block_of(16, 0, 8), block_of(16, 8, 16) });
    }

    auto brute_max_degree(const OrderedBigraph & g, const vector<int> & ys, const vector<int> & xs) -> int
    {
        int best = 0;
        for (int y : ys) {
            int c = 0;
            for (int x : xs)
                c += g.adjacent(x, y);
            best = std::max(best, c);
        }
        return best;
    }

    auto members(int mask, const vector<int> & from) -> vector<int>
    {
        vector<int> out;
        for (std::size_t k = 0 ; k < from.size() ; ++k)
            if (mask >> k & 1)
                out.push_back(from[k]);
        return out;
    }

    /// Least max-degree from Y to X over all X, Y of at least the mu fractions,
    /// by enumerating every pair of subsets.
    auto brute_least(const Parade & p, int h, int j, double mu) -> int
    {
        auto bh = p.block(h).to_indices(), bj = p.block(j).to_indices();
        int best = 1 << 30;
        for (int mx = 1 ; mx < (1 << bh.size()) ; ++mx) {
            auto xs = members(mx, bh);
            if (double(xs.size()) < mu * double(bh.size()))
                continue;
            for (int my = 1 ; my < (1 << bj.size()) ; ++my) {
                auto ys = members(my, bj);
                if (double(ys.size()) < mu * double(bj.size()))
                    continue;
                best = std::min(best, brute_max_degree(p.host(), ys, xs));
            }
        }
        return best;
    }

    auto brute_d(const Parade & p, int j, int h) -> int
    {
        return brute_max_degree(p.host(), p.block(j).to_indices(), p.block(h).to_indices());
    }

    auto brute_resistant(const Parade & p, double phi, double mu) -> bool
    {
        double n1 = p.host().n1();
        for (int h : p.negative())
            for (int j : p.positive())
                if (! (brute_least(p, h, j, mu) > brute_d(p, j, h) * std::pow(n1, -phi) * (1 + 1e-12)))
                    return false;
        return true;
    }

    auto brute_band(const Parade & p, double tau, double phi, double mu) -> bool
    {
        double n1 = p.host().n1();
        for (int h : p.negative())
            for (int j : p.positive()) {
                double bh = p.block_size(h);
                if (brute_d(p, j, h) > tau * bh * (1 + 1e-12))
                    return false;
                if (! (brute_least(p, h, j, mu) > tau * std::pow(n1, -phi) * bh * (1 + 1e-12)))
                    return false;
            }
        return true;
    }

    /// The s with n1^-(s+1)phi < ratio <= n1^-s phi, by direct search.
    auto brute_type(double ratio, double n1, double phi) -> int
    {
        for (int s = 0 ; ; ++s)
            if (std::pow(n1, -(s + 1) * phi) < ratio && ratio <= std::pow(n1, -s * phi) * (1 + 1e-12))
                return s;
    }

    auto contraction_of(const Parade & small, const Parade & big) -> bool
    {
        if (small.indices() != big.indices())
            return false;
        for (int i : big.indices())
            if (! small.block(i).is_subset_of(big.block(i)))
                return false;
        return true;
    }
}

TEST_CASE("interval parades follow the block layout")
{
    auto g = OrderedBigraph(8, 8, vector<BitSet>(8, BitSet(8)));
    auto p = build_interval_parade(g, 2);
    CHECK(p.indices() == vector<int>{ -2, -1, 1, 2 });
    CHECK(p.block(-2).to_indices() == vector<int>{ 0, 1 });
    CHECK(p.block(-1).to_indices() == vector<int>{ 2, 3 });
    CHECK(p.block(1).to_indices() == vector<int>{ 0, 1 });
    CHECK(p.block(2).to_indices() == vector<int>{ 2, 3 });
    CHECK(p.length() == std::pair{ 2, 2 });
    CHECK(p.width() == std::pair{ 2, 2 });

    auto g10 = OrderedBigraph(10, 10, vector<BitSet>(10, BitSet(10)));
    auto p10 = build_interval_parade(g10, 2);
    CHECK(p10.block(-2).to_indices() == vector<int>{ 0, 1, 2 });
    CHECK(p10.block(-1).to_indices() == vector<int>{ 3, 4, 5 });

    auto g4 = OrderedBigraph(4, 4, vector<BitSet>(4, BitSet(4)));
    auto p4 = build_interval_parade(g4, 1);
    CHECK(p4.block(-1).count() == 2);
    CHECK(p4.block(1).count() == 2);

    CHECK_THROWS_AS(build_interval_parade(g4, 2), PreconditionViolated);
}

TEST_CASE("parade validation and width convention")
{
    auto g = OrderedBigraph(4, 5, vector<BitSet>(4, BitSet(5)));
    CHECK_THROWS_AS(Parade(g, { 0 }, { block_of(4, 0, 1) }), PreconditionViolated);
    CHECK_THROWS_AS(Parade(g, { -1, -2 }, { block_of(4, 0, 2), block_of(4, 1, 3) }), PreconditionViolated);
    CHECK_THROWS_AS(Parade(g, { -1 }, { BitSet(4) }), PreconditionViolated);
    CHECK_THROWS_AS(Parade(g, { 1 }, { block_of(4, 0, 2) }), PreconditionViolated);

    Parade rows_only(g, { -1, -3 }, { block_of(4, 0, 1), block_of(4, 1, 4) });
    CHECK(rows_only.indices() == vector<int>{ -3, -1 });
    CHECK(rows_only.width() == std::pair{ 1, 5 });
    CHECK(rows_only.length() == std::pair{ 2, 0 });
}

TEST_CASE("max-degree function matches recomputation after contractions")
{
    for (unsigned seed = 1 ; seed <= 10 ; ++seed) {
        auto g = brute::random_matrix(16, 16, seed, 30);
        auto p = halves(g);
        MaxDegreeFunction d(p);
        for (int h : p.negative())
            for (int j : p.positive()) {
                CHECK(d(j, h) == brute_d(p, j, h));
                CHECK(d(h, j) == brute_max_degree(g.transpose(), p.block(h).to_indices(), p.block(j).to_indices()));
            }
        CHECK(d(-1, -2) == 0);

        p.set_block(-1, block_of(16, 8, 11));
        p.set_block(2, block_of(16, 12, 16));
        d.refresh(p, -1);
        d.refresh(p, 2);
        CHECK(d == MaxDegreeFunction(p));
    }
}

TEST_CASE("shrink_resist on an edgeless host gives the full blocks as a witness")
{
    auto g = OrderedBigraph(16, 16, vector<BitSet>(16, BitSet(16)));
    auto out = shrink_resist(halves(g), 0.5, 0.5);
    REQUIRE(out.kind == ShrinkOutcome::Kind::anticomplete);
    CHECK(out.witness->h == -2);
    CHECK(out.witness->j == 1);
    CHECK(out.witness->x == iota_vector(8));
    CHECK(out.witness->y == iota_vector(8));
    CHECK(out.contractions == 0);
}

TEST_CASE("shrink_resist leaves a complete host unchanged")
{
    auto g = full_matrix(16, 16);
    auto p = halves(g);
    auto out = shrink_resist(p, 0.5, 0.5);
    REQUIRE(out.kind == ShrinkOutcome::Kind::contraction);
    CHECK(out.contractions == 0);
    CHECK(out.exact);
    for (int i : p.indices())
        CHECK(out.contraction.block(i) == p.block(i));
}

TEST_CASE("shrink_resist outputs pass the exhaustive check")
{
    const double mu = 0.5;
    int resistant = 0;
    for (int percent : { 30, 70 })
    for (double phi : { 0.25, 0.5, 1.0 }) {
        for (unsigned seed = 1 ; seed <= 6 ; ++seed) {
            CAPTURE(percent);
            CAPTURE(phi);
            CAPTURE(seed);
            auto g = brute::random_matrix(16, 16, seed, percent);
            auto p = halves(g);
            auto out = shrink_resist(p, phi, mu);
            CHECK(out.exact);
            CHECK(out.contractions <= out.contraction_limit);
            CHECK(out.contraction_limit == std::floor(16.0 / phi));
            CHECK(contraction_of(out.contraction, p));
            double beta = std::pow(mu, 1 + 16.0 / phi);
            CHECK(out.log_beta == doctest::Approx(std::log(beta)));

            if (out.kind == ShrinkOutcome::Kind::anticomplete) {
                auto & w = *out.witness;
                CHECK(brute::anticomplete(g, w.x, w.y));
                CHECK(double(w.x.size()) >= beta * p.block_size(w.h));
                CHECK(double(w.y.size()) >= beta * p.block_size(w.j));
                continue;
            }
            for (int i : p.indices())
                CHECK(out.contraction.block_size(i) >= beta * p.block_size(i));
            CHECK(brute_resistant(out.contraction, phi, mu));
            CHECK(check_shrink_resistant(out.contraction, phi, mu).ok);
            ++resistant;
        }
    }
    CHECK(resistant > 0);
}

TEST_CASE("shrink_resist contracts onto a resistant core")
{
    // rows 0..5 are adjacent to every column of the block; rows 6..11 meet
    // columns 0..5 in a 12-cycle and columns 6..11 completely
    vector<BitSet> rows(32, BitSet(32));
    for (int r = 0 ; r < 12 ; ++r)
        for (int c = 0 ; c < 12 ; ++c)
            if (r < 6 || c >= 6 || c == r - 6 || c == (r - 5) % 6)
                rows[r].set(c);
    OrderedBigraph g(32, 32, std::move(rows));
    Parade p(g, { -1, 1 }, { block_of(32, 0, 12), block_of(32, 0, 12) });

    const double phi = 0.5, mu = 0.5;
    CHECK_FALSE(check_shrink_resistant(p, phi, mu).ok);
    auto out = shrink_resist(p, phi, mu);
    REQUIRE(out.kind == ShrinkOutcome::Kind::contraction);
    CHECK(out.contractions == 1);
    CHECK(out.exact);
    CHECK(out.contraction.block(-1).to_indices() == vector<int>{ 6, 7, 8, 9, 10, 11 });
    CHECK(out.contraction.block(1).to_indices() == vector<int>{ 0, 1, 2, 3, 4, 5 });
    CHECK(brute_d(out.contraction, 1, -1) == 2);
    CHECK(brute_resistant(out.contraction, phi, mu));
    CHECK(check_shrink_resistant(out.contraction, phi, mu).ok);
}

TEST_CASE("a parade with a shrinking pair fails the resistance check")
{
    // block -1 has one row adjacent to all of block 1 and the other rows adjacent to nothing
    vector<std::string> rows(16, std::string(16, '0'));
    rows[0] = "1111111100000000";
    rows[8] = "1111111111111111";
    for (int r = 9 ; r < 16 ; ++r)
        rows[r] = "1111111111111111";
    for (int r = 1 ; r < 8 ; ++r)
        rows[r] = "0000000011111111";
    auto g = OrderedBigraph::from_strings(rows);
    auto p = halves(g);
    auto check = check_shrink_resistant(p, 0.5, 0.5);
    CHECK_FALSE(check.ok);
    CHECK(check.violating == std::pair{ -2, 1 });
    CHECK_FALSE(brute_resistant(p, 0.5, 0.5));
}

TEST_CASE("pair types use the half-open interval")
{
    // 4^-0.5 = 1/2: a ratio exactly on the boundary takes the larger type
    CHECK(pair_type(1, 2, 4, 0.5) == 1);
    CHECK(pair_type(2, 2, 4, 0.5) == 0);
    CHECK(pair_type(1, 4, 4, 0.5) == 2);
    CHECK_THROWS_AS(pair_type(0, 4, 4, 0.5), PreconditionViolated);
    for (int n1 : { 5, 16, 24, 100 })
        for (double phi : { 0.1, 0.3, 0.7 })
            for (int b = 1 ; b <= 12 ; ++b)
                for (int d = 1 ; d <= b ; ++d) {
                    CAPTURE(n1);
                    CAPTURE(phi);
                    CHECK(pair_type(d, b, n1, phi) == brute_type(double(d) / b, n1, phi));
                }
}

TEST_CASE("pigeonhole grid agrees with exhaustive search for two colours")
{
    CHECK(ramsey_bound(2, 2) == 9);
    CHECK(ramsey_bound(3, 1) == 1);
    CHECK(ramsey_bound(2, 3) == 2 * 32 + 1);

    for (unsigned seed = 1 ; seed <= 50 ; ++seed) {
        auto bits = brute::random_matrix(3, 9, seed);
        ColourGrid grid(3, vector<int>(9));
        for (int r = 0 ; r < 3 ; ++r)
            for (int c = 0 ; c < 9 ; ++c)
                grid[r][c] = bits.adjacent(r, c);

        auto fast = pigeonhole_grid(grid, 2, 2);
        REQUIRE(fast);
        auto slow = exhaustive_grid(grid, 2);
        REQUIRE(slow);
        for (const auto * choice : { &*fast, &*slow }) {
            CHECK(choice->rows.size() == 2);
            CHECK(choice->cols.size() == 2);
            for (int r : choice->rows)
                for (int c : choice->cols)
                    CHECK(grid[r][c] == choice->colour);
        }

        // lexicographically least row pair with some monochromatic column pair
        bool found = false;
        for (int r1 = 0 ; r1 < 3 && ! found ; ++r1)
            for (int r2 = r1 + 1 ; r2 < 3 && ! found ; ++r2)
                for (int c1 = 0 ; c1 < 9 && ! found ; ++c1)
                    for (int c2 = c1 + 1 ; c2 < 9 && ! found ; ++c2)
                        if (grid[r1][c1] == grid[r1][c2] && grid[r2][c1] == grid[r2][c2] && grid[r1][c1] == grid[r2][c1]) {
                            found = true;
                            CHECK(slow->rows == vector<int>{ r1, r2 });
                        }
        CHECK(found);
    }

    ColourGrid striped{ { 0, 1, 0, 1 }, { 1, 0, 1, 0 } };
    CHECK_FALSE(pigeonhole_grid(striped, 2, 2));
    CHECK_FALSE(exhaustive_grid(striped, 2));
}

TEST_CASE("find_band on a uniform host returns the least indices")
{
    auto g = full_matrix(24, 24);
    auto p = build_interval_parade(g, 3);
    const double phi = 0.25, mu = 0.5;
    auto band = find_band(p, 2, phi, mu);
    CHECK(band.cert.J == vector<int>{ -3, -2, 1, 2 });
    CHECK(band.cert.type == 0);
    CHECK(band.cert.tau() == 1.0);
    CHECK(band.cert.phi == 2 * phi);
    CHECK(brute_band(band.sub, band.cert.tau(), band.cert.phi, mu));
    CHECK(check_band(band.sub, band.cert).ok);

    auto single = find_band(p, 1, phi, mu);
    CHECK(single.cert.J == vector<int>{ -3, 1 });

    CHECK_THROWS_AS(find_band(p, 4, phi, mu), ParadeTooShort);
}

TEST_CASE("find_band picks a monochromatic grid from a checkerboard of types")
{
    // six row blocks and six column blocks of four; the pair (a, b) is complete
    // when a + b is even and a perfect matching otherwise
    const int blocks = 6, size = 4, n = blocks * size;
    vector<BitSet> rows(n, BitSet(n));
    for (int a = 0 ; a < blocks ; ++a)
        for (int b = 0 ; b < blocks ; ++b)
            for (int x = 0 ; x < size ; ++x)
                for (int y = 0 ; y < size ; ++y)
                    if ((a + b) % 2 == 0 || x == y)
                        rows[a * size + x].set(b * size + y);
    OrderedBigraph g(n, n, std::move(rows));
    vector<int> idx;
    vector<BitSet> bl;
    for (int a = 0 ; a < blocks ; ++a) {
        idx.push_back(-(blocks - a));
        bl.push_back(block_of(n, a * size, (a + 1) * size));
        idx.push_back(a + 1);
        bl.push_back(block_of(n, a * size, (a + 1) * size));
    }
    Parade p(g, idx, bl);

    const double phi = 0.2;
    ColourGrid types(blocks, vector<int>(blocks));
    for (int a = 0 ; a < blocks ; ++a)
        for (int b = 0 ; b < blocks ; ++b)
            types[a][b] = brute_type(double(brute_d(p, b + 1, a - blocks)) / size, n, phi);
    CHECK(types[0][0] != types[0][1]);

    auto band = find_band(p, 2, phi, 0.5);
    REQUIRE(band.cert.J.size() == 4);
    auto neg = band.sub.negative(), pos = band.sub.positive();
    for (int h : neg)
        for (int j : pos)
            CHECK(types[h + blocks][j - 1] == band.cert.type);
    CHECK(band.cert.J == vector<int>{ -6, -4, 1, 3 });
}

TEST_CASE("homog outcomes on the fixtures")
{
    const double phi = 0.5, mu = 0.5;

    auto empty = OrderedBigraph(16, 16, vector<BitSet>(16, BitSet(16)));
    auto none = homog(halves(empty), 1, phi, mu);
    CHECK(none.kind == HomogOutcome::Kind::anticomplete);

    auto full = full_matrix(16, 16);
    auto all = homog(halves(full), 2, phi, mu);
    REQUIRE(all.kind == HomogOutcome::Kind::band);
    CHECK(all.band->cert.phi == phi);
    CHECK(brute_band(all.band->sub, all.band->cert.tau(), phi, mu));

    for (unsigned seed = 1 ; seed <= 6 ; ++seed) {
        CAPTURE(seed);
        auto g = brute::random_matrix(16, 16, seed, 30);
        auto p = halves(g);
        auto out = homog(p, 1, phi, mu);
        double beta = std::exp(out.log_beta);
        CHECK(out.log_beta == doctest::Approx((1 + 2 * 16.0 / phi) * std::log(mu)));
        if (out.kind == HomogOutcome::Kind::anticomplete) {
            auto & w = *out.witness;
            CHECK(brute::anticomplete(g, w.x, w.y));
            CHECK(double(w.x.size()) >= beta * p.block_size(w.h));
            continue;
        }
        auto & band = *out.band;
        for (int i : band.sub.indices()) {
            CHECK(band.sub.block(i).is_subset_of(p.block(i)));
            CHECK(band.sub.block_size(i) >= beta * p.block_size(i));
        }
        CHECK(brute_band(band.sub, band.cert.tau(), phi, mu));
        CHECK(check_band(band.sub, band.cert).ok);
    }
}

TEST_CASE("band check samples above the exhaustive limit")
{
    auto g = full_matrix(40, 40);
    Parade p(g, { -1, 1 }, { block_of(40, 0, 20), block_of(40, 0, 20) });
    BandCertificate cert{ 0.0, 0.5, 0.5, 0, { -1, 1 } };
    auto check = check_band(p, cert);
    CHECK(check.ok);
    CHECK_FALSE(check.exhaustive);

    BandCertificate too_small{ std::log(0.5), 0.5, 0.5, 1, { -1, 1 } };
    CHECK_FALSE(check_band(p, too_small).ok);
}
