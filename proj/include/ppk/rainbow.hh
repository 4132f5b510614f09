#ifndef PPK_RAINBOW_HH
#define PPK_RAINBOW_HH 1

#include <ppk/containment.hh>
#include <ppk/leaf_cover.hh>
#include <ppk/parade.hh>
#include <ppk/rng.hh>
#include <ppk/sparse_embedder.hh>
#include <ppk/tree_pattern.hh>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ppk
{
    /// A tree on nonzero indices whose edges join a negative and a positive index.
    struct Shape
    {
        std::vector<int> vertices;
        /// (negative, positive), sorted.
        std::vector<std::pair<int, int>> edges;

        auto has(int i) const -> bool;
        auto neighbours(int i) const -> std::vector<int>;
        /// Largest distance from root, or -1 if root is not a vertex.
        auto radius_from(int root) const -> int;
        /// The component of the shape minus `removed` that contains `start`.
        auto component_without(int removed, int start) const -> Shape;
        /// Every index negated, as seen from the transposed host.
        auto negated() const -> Shape;

        friend auto operator== (const Shape &, const Shape &) -> bool = default;
    };

    auto single_vertex_shape(int i) -> Shape;

    /// Vertices distinct and nonzero, edges sign-alternating, connected and acyclic.
    auto is_shape(const Shape & s) -> bool;

    /// Every shape on a subset of J that contains root and has root-radius at most max_radius.
    auto all_shapes(const std::vector<int> & J, int root, int max_radius) -> std::vector<Shape>;

    auto random_shape(const std::vector<int> & J, int root, int max_radius, Rng & rng) -> Shape;

    /// The host and its transpose; parades of odd recursion depth live on the transpose.
    struct OrientedHosts
    {
        OrderedBigraph g;
        OrderedBigraph gt;

        explicit OrientedHosts(OrderedBigraph host);

        auto get(bool transposed) const -> const OrderedBigraph & { return transposed ? gt : g; }
    };

    /// A rainbow induced subtree: one host vertex per shape index, a row for
    /// negative indices and a column for positive ones.
    struct RainbowTree
    {
        Shape shape;
        std::map<int, int> vertex;
    };

    /**
     * The level-r data of the recursive construction, in the orientation of
     * its own host. levels[q] is A^q over J. For r >= 1, D[(h, j)] covers
     * C[h] and `inner` is the level r - 1 certificate on the transposed host
     * (indices negated), whose C sets contain every D set.
     */
    struct PanarborealCertificate
    {
        int r = 0;
        bool transposed = false;
        std::vector<int> J;
        std::vector<Parade> levels;
        std::map<int, std::vector<int>> C;
        std::map<std::pair<int, int>, std::vector<int>> D;
        std::shared_ptr<const PanarborealCertificate> inner;
    };

    struct RainbowConstants
    {
        /// Required parade length per side; may be astronomically large.
        double K = 1.0;
        double log_gamma = 0.0;
        /// Band size asked of the recursive call at each level, k'[r] = k.
        std::vector<double> k_at_level;
    };

    /**
     * The constants of the recursion: r = 0 gives K = k, gamma = 1; level r
     * uses k' = the band length for (k, c), the constants of (r - 1, k'), and
     * gamma = beta gamma' / (8k^2) with beta = (8k)^-(1 + 2(2k')^2 k / c), the
     * ratio the band step delivers on a parade with k' blocks per side.
     */
    auto rainbow_constants(int r, int k, double c) -> RainbowConstants;

    struct RainbowOutcome
    {
        enum class Kind
        {
            big_anticomplete,
            high_degree,
            certificate
        };

        /// Which side of a big anticomplete pair has the linear bound.
        enum class Linear
        {
            rows,
            cols
        };

        Kind kind = Kind::certificate;

        int h = 0;
        int j = 0;
        std::vector<int> x;
        std::vector<int> y;
        Linear linear = Linear::rows;

        /// High degree: v in A_h with at least gamma |A_j| neighbours in A_j.
        int v = -1;
        int neighbours = 0;

        std::shared_ptr<const PanarborealCertificate> certificate;
        /// The gamma the outcome's bounds are stated with.
        double log_gamma = 0.0;
        bool exact = true;
    };

    /**
     * The recursive construction on a parade of hosts.g (or hosts.gt when
     * transposed). Returns a big anticomplete pair, a high-degree vertex, or
     * a certificate over k + k indices (all indices when r = 0). Parades
     * shorter than the constants require are attempted anyway; ParadeTooShort
     * propagates when a band step cannot find k + k indices.
     */
    auto rainbow(const OrientedHosts & hosts, const Parade & A, int r, int k, double c,
            const SearchOptions & options = {}) -> RainbowOutcome;

    /**
     * The rainbow tree of the given shape, rooted at h in J-, through w in
     * C_h: each child j of h gets the least vertex of D_{h,j} adjacent to w,
     * and the branch below it comes from the inner certificate. Throws
     * PreconditionViolated for an inadmissible shape or w, and
     * CertificateBroken (with the path) if a cover lookup fails.
     */
    auto materialize_tree(const PanarborealCertificate & cert, const Shape & shape, int h, int w) -> RainbowTree;

    /// Induced, rainbow, of the given shape, and w-isolated in the levels; an
    /// empty string if so, otherwise the first failed condition.
    auto check_rainbow_tree(const PanarborealCertificate & cert, const RainbowTree & tree, int h, int w) -> std::string;

    struct CertificateCheck
    {
        bool ok = true;
        bool exhaustive = true;
        int shapes_checked = 0;
        int trees_checked = 0;
        std::string failure;
    };

    /**
     * Structure (nesting, C_h in A^r_h) plus materialization of every
     * admissible shape when |J| <= 8, otherwise 100 seeded shapes; for each
     * shape every w in C_h when |C_h| <= 8, otherwise 8 seeded vertices.
     */
    auto check_certificate(const PanarborealCertificate & cert, std::uint64_t seed = default_seed) -> CertificateCheck;

    /// The outcome's sets and bounds against the original parade, plus check_certificate.
    auto check_rainbow_outcome(const Parade & A, const RainbowOutcome & outcome, int k, double c) -> std::string;

    struct LinearOptions
    {
        std::uint64_t seed = default_seed;
        /// Random subset samples per shrinking-pair search on blocks above the exhaustive limit.
        int samples = 256;
        int exhaustive_block_limit = 14;
        /// Blocks per side of the interval parade; by default the required
        /// length, capped at 2k and at what the host sides allow.
        std::optional<int> K_override;
        /// When the degree cap fails, look for an embedding by direct search
        /// before running the construction.
        bool probe_on_cap_violation = true;
    };

    struct LinearOutcome
    {
        enum class Kind
        {
            pair,
            found
        };

        Kind kind = Kind::pair;
        VertexSetPair pair;
        /// Which side of the pair has the linear bound.
        RainbowOutcome::Linear linear = RainbowOutcome::Linear::rows;
        std::optional<Embedding> embedding;

        int r = 0;
        int k = 0;
        double c = 0.5;
        RainbowConstants constants;
        /// ln eps, eps = gamma / (2K).
        double log_eps = 0.0;
        /// Blocks per side of the interval parade actually used.
        int K_used = 0;
        /// Size bounds for the linear side and the power 1 - c side.
        long long bound_linear = 1;
        long long bound_power = 1;
        /// Which branch produced the result: edgeless, anticomplete,
        /// certificate, probe, fallback.
        std::string route;
        bool degree_cap_holds = true;
    };

    auto to_string(LinearOutcome::Kind kind) -> std::string;

    /**
     * Either an embedding of the pattern or an anticomplete pair, linear on
     * one side and of size eps |V|^(1-c) on the other. Runs the recursion of
     * depth r (the least radius from a row of the pattern) with band size
     * k = max(h1, h2) on an interval parade. A certificate is turned into an
     * embedding through the shape matching the pattern on the least indices
     * of J. Parades too short for the band steps, and high-degree outcomes
     * when the degree cap fails, fall back to a greedy anticomplete pair.
     *
     * Throws PatternTooLarge when a host side has at most 2k vertices, and
     * HypothesisViolated for a high-degree outcome under the degree cap or
     * when no fallback pair exists.
     */
    auto embed_or_pair_linear(const OrderedBigraph & host, const TreePattern & pattern, double c,
            const LinearOptions & options = LinearOptions{}) -> LinearOutcome;

    /// Pair outcomes are anticomplete and meet the bounds; found outcomes verify.
    auto check_linear_outcome(const OrderedBigraph & host, const TreePattern & pattern,
            const LinearOutcome & outcome) -> bool;
}

#endif
