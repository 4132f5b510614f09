#ifndef PPK_GENERATORS_HH
#define PPK_GENERATORS_HH 1

#include <ppk/bigraph.hh>

#include <cstdint>
#include <vector>

namespace ppk
{
    /// Each entry is 1 independently with probability p. Row-major draw order.
    auto gen_random(int n1, int n2, double p, std::uint64_t seed) -> OrderedBigraph;

    struct GirthParams
    {
        int n = 0;
        int g = 4;
        std::uint64_t seed = 0;

        auto edge_probability() const -> double;
    };

    struct GirthResult
    {
        OrderedBigraph graph;
        std::uint64_t seed_used = 0;
        int cycles_broken = 0;
    };

    /**
     * Random n x n bigraph with girth more than g: draw a 2n x 2n bigraph with
     * edge probability n^(1/g - 1) / 2, delete one vertex from every cycle of
     * length at most g, then trim each side to exactly n vertices by dropping
     * the highest-indexed survivors. If more than n/2 cycles had to be broken
     * the draw is retried with the next seed, up to 32 seeds in total.
     *
     * Throws PreconditionViolated unless g >= 4 is even and n >= 2, and
     * RetriesExhausted if every seed fails.
     */
    auto gen_girth(const GirthParams & params) -> GirthResult;

    inline constexpr int girth_max_attempts = 32;

    /// Every ordered tree bigraph with exactly t vertices and both sides
    /// nonempty (t >= 2), in order of h1 then row-major bit pattern.
    auto all_tree_patterns(int t) -> std::vector<OrderedBigraph>;

    /// Star with the centre on side centre_side and the given number of leaves.
    auto star_pattern(Side centre_side, int leaves) -> OrderedBigraph;

    /// Path with t vertices, starting on side start, the ordered "staircase".
    auto path_pattern(Side start, int t) -> OrderedBigraph;

    /**
     * Point-line incidence bigraph of the projective plane over the prime
     * field GF(q): rows are points, columns are lines, both listed as
     * normalised homogeneous coordinates (first nonzero entry 1) in
     * lexicographic order. Every line has q + 1 points and two distinct
     * lines share exactly one point. Throws PreconditionViolated unless q is
     * a prime below 256.
     */
    auto projective_plane(int q) -> OrderedBigraph;

    auto identity_matrix(int n) -> OrderedBigraph;
    auto full_matrix(int n1, int n2) -> OrderedBigraph;
}

#endif
