#ifndef PPK_SPARSE_EMBEDDER_HH
#define PPK_SPARSE_EMBEDDER_HH 1

#include <ppk/bigraph.hh>
#include <ppk/containment.hh>
#include <ppk/rng.hh>
#include <ppk/tree_pattern.hh>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ppk
{
    struct MainConstants
    {
        int t = 2;
        int r = 1;
        int n = 2;
        double eps = 0.0;
        /// t^(K^r) = n.
        double K = 0.0;
        /// k[s] = 4 (K^(s-1) + ... + 1) for 1 <= s <= r-1; k[0] = 0.
        std::vector<double> k;
        /// ceil(n t^(-5 K^(r-1))), computed in log space.
        long long bound = 1;
    };

    /// Throws PreconditionViolated unless t >= 2, r >= 1, n >= 2.
    auto compute_constants(int t, int r, int n) -> MainConstants;

    /// As compute_constants, but with K given rather than derived from n.
    auto constants_with_K(int t, int r, int n, double K) -> MainConstants;

    struct SparseOptions
    {
        std::uint64_t seed = default_seed;
        /// Transversal search is exhaustive when the product of the candidate
        /// set sizes is at most this, and sampled otherwise.
        long long exhaustive_budget = 1'000'000;
        int samples = 1000;
        /// Replaces the K derived from n. Used to exercise the level
        /// construction on hosts far below the size at which it is reached.
        std::optional<double> K_override;
        int max_rounds = 100'000;
        /// When the degree cap fails, look for an embedding by direct search
        /// before running the construction.
        bool probe_on_cap_violation = true;
    };

    struct SparseOutcome
    {
        enum class Kind
        {
            pair,
            found
        };

        Kind kind = Kind::pair;
        VertexSetPair pair;
        std::optional<Embedding> embedding;
        MainConstants constants;
        /// Which branch produced the result: star, star-found, anticomplete-state,
        /// x-limit, edge-pair, levels, probe, fallback.
        std::string route;
        bool degree_cap_holds = true;
        int descents = 0;
        int augmentations = 0;
    };

    auto to_string(SparseOutcome::Kind kind) -> std::string;

    /**
     * Either an embedding of the pattern or an anticomplete pair with both
     * sides of size at least the bound ceil(n t^(-5 K^(r-1))), n = min(n1, n2).
     *
     * Radius 1 uses the star argument directly. Larger radius runs the level
     * construction, driven by explicit witnesses: each failure either moves to
     * a smaller, sparser pair of sets (x grows by at least 4), enlarges one of
     * the Y_uv sets, or yields a pair. If the construction stalls (only
     * possible when the degree cap n / (4t^2) fails, or below the scale where
     * its counting applies) a greedy anticomplete pair meeting the bound is
     * returned instead; HypothesisViolated if there is none.
     */
    auto embed_or_pair_sparse(const OrderedBigraph & host, const TreePattern & pattern,
            const SparseOptions & options = SparseOptions{}) -> SparseOutcome;

    /// Pair outcomes are anticomplete and meet the bound; found outcomes verify.
    auto check_sparse_outcome(const OrderedBigraph & host, const TreePattern & pattern,
            const SparseOutcome & outcome) -> bool;

    auto degree_cap_holds(const OrderedBigraph & host, double cap) -> bool;

    /**
     * Greedy anticomplete pair with |Z1| >= need1 and |Z2| >= need2: the
     * need1 lowest-degree rows and their common non-neighbourhood, or the
     * mirror starting from columns. The side that was not chosen is extended
     * to everything anticomplete to the other.
     */
    auto greedy_anticomplete_pair(const OrderedBigraph & g, long long need1, long long need2)
        -> std::optional<VertexSetPair>;

    auto is_anticomplete(const OrderedBigraph & g, const VertexSetPair & p) -> bool;
}

#endif
