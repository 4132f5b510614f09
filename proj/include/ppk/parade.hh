#ifndef PPK_PARADE_HH
#define PPK_PARADE_HH 1

#include <ppk/bigraph.hh>
#include <ppk/rng.hh>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ppk
{
    /**
     * Disjoint nonempty blocks indexed by nonzero integers: negative indices
     * hold rows of the host, positive indices hold columns. Indices are kept
     * in increasing order. The host is referenced, not owned.
     */
    class Parade
    {
        private:
            const OrderedBigraph * _host;
            std::vector<int> _indices;
            std::vector<BitSet> _blocks;

        public:
            /// Throws PreconditionViolated on a zero or repeated index, an empty
            /// or out-of-range block, or overlapping blocks on one side.
            Parade(const OrderedBigraph & host, std::vector<int> indices, std::vector<BitSet> blocks);

            auto host() const -> const OrderedBigraph & { return *_host; }
            auto indices() const -> const std::vector<int> & { return _indices; }
            auto negative() const -> std::vector<int>;
            auto positive() const -> std::vector<int>;

            auto has(int i) const -> bool;
            auto block(int i) const -> const BitSet &;
            auto block_size(int i) const -> int { return block(i).count(); }
            auto set_block(int i, BitSet b) -> void;

            /// (|I-|, |I+|)
            auto length() const -> std::pair<int, int>;
            /// Minimum block size per side, or the side size when that side has
            /// no blocks.
            auto width() const -> std::pair<int, int>;

            auto sub(const std::vector<int> & J) const -> Parade;
    };

    inline auto side_of_index(int i) -> Side
    {
        return i < 0 ? Side::rows : Side::cols;
    }

    /// Blocks of p = ceil(n1 / 2K) consecutive rows for -K..-1 (with -K
    /// earliest) and q = ceil(n2 / 2K) consecutive columns for 1..K. Leftover
    /// vertices are unused. Throws PreconditionViolated unless n1, n2 > 2K.
    auto build_interval_parade(const OrderedBigraph & host, int K) -> Parade;

    /// Max over v in X of |N(v) & Y|, where X lies on side sx and Y on the
    /// other side. Zero when X is empty.
    auto max_degree_from(const OrderedBigraph & host, Side sx, const BitSet & X, const BitSet & Y) -> int;

    /// d(i, j) for opposite-sign i, j; zero otherwise.
    class MaxDegreeFunction
    {
        private:
            std::vector<int> _indices;
            std::vector<std::vector<int>> _d;

            auto pos(int i) const -> int;

        public:
            explicit MaxDegreeFunction(const Parade & p);

            auto operator() (int i, int j) const -> int { return _d[pos(i)][pos(j)]; }

            /// Recompute every entry involving index i.
            auto refresh(const Parade & p, int i) -> void;

            /// Sum of ln d(j, h) over h < 0 < j; -infinity if any factor is zero.
            auto log_product() const -> double;

            /// The first (h, j) in index order with d(j, h) = 0.
            auto zero_pair() const -> std::optional<std::pair<int, int>>;

            friend auto operator== (const MaxDegreeFunction &, const MaxDegreeFunction &) -> bool = default;
    };

    struct AnticompleteWitness
    {
        int h = 0;
        int j = 0;
        std::vector<int> x;
        std::vector<int> y;
    };

    /// A pair X in B_h, Y in B_j of the given sizes and the max-degree from Y to X.
    struct SubsetPair
    {
        std::vector<int> x;
        std::vector<int> y;
        int max_degree = 0;
    };

    struct SearchOptions
    {
        /// Searches over X in B_h are exhaustive when |B_h| is at most this.
        int exhaustive_block_limit = 14;
        /// Random X samples used above the limit, besides the greedy candidates.
        int samples = 10'000;
        std::uint64_t seed = default_seed;
    };

    /**
     * Smallest max-degree from Y to X found over X in B_h with |X| = x_size
     * and Y in B_j with |Y| = y_size. For each X the best Y is the y_size
     * columns with fewest neighbours in X, so the result is the true minimum
     * when the X search is exhaustive (reported in the flag).
     */
    auto least_max_degree(const Parade & p, int h, int j, int x_size, int y_size, const SearchOptions & options)
        -> std::pair<SubsetPair, bool>;

    struct ShrinkOutcome
    {
        enum class Kind
        {
            anticomplete,
            contraction
        };

        Kind kind = Kind::contraction;
        std::optional<AnticompleteWitness> witness;
        /// The final contraction (also when a witness was found).
        Parade contraction;
        int contractions = 0;
        /// floor(|I|^2 / phi)
        long long contraction_limit = 0;
        /// ln mu^(1 + |I|^2 / phi)
        double log_beta = 0.0;
        /// Every "no shrinking pair" conclusion came from an exhaustive search.
        bool exact = true;
    };

    /**
     * Contract on shrinking pairs (|X| >= mu|B_h|, |Y| >= mu|B_j|, max-degree
     * from Y to X at most d(j, h) n1^-phi) until none is found, or until some
     * d(j, h) is zero, which yields an anticomplete witness. Every contraction
     * multiplies the max-degree product by at most n1^-phi.
     *
     * Throws PreconditionViolated unless phi > 0, 0 < mu <= 1.
     */
    auto shrink_resist(const Parade & p, double phi, double mu, const SearchOptions & options = {}) -> ShrinkOutcome;

    struct ResistanceCheck
    {
        bool ok = true;
        bool exhaustive = true;
        std::optional<std::pair<int, int>> violating;
        std::optional<SubsetPair> pair;
    };

    auto check_shrink_resistant(const Parade & p, double phi, double mu, const SearchOptions & options = {})
        -> ResistanceCheck;

    /// The s with n1^-(s+1)phi < d / b <= n1^-s phi, in log space. Throws
    /// PreconditionViolated unless d >= 1, b >= d, n1 >= 2, phi > 0.
    auto pair_type(int d, int b, int n1, double phi) -> int;

    using ColourGrid = std::vector<std::vector<int>>;

    /// Rows and columns of a k x k monochromatic subgrid.
    struct GridChoice
    {
        std::vector<int> rows;
        std::vector<int> cols;
        int colour = 0;
    };

    /// With c colours, m = c(k-1) + 1 rows and (k-1) c^m + 1 columns force a
    /// monochromatic k x k subgrid. This returns max(m, (k-1) c^m + 1),
    /// capped at 2^62.
    auto ramsey_bound(int colours, int k) -> long long;

    /**
     * Column colour-vector pigeonhole over the first c(k-1) + 1 rows, then a
     * row pigeonhole within the chosen vector: the first colour vector (by
     * column order) shared by k columns, then the least colour on k of the
     * rows. Uses whatever rows and columns exist, so it may succeed below the
     * bound; nullopt if it does not.
     */
    auto pigeonhole_grid(const ColourGrid & colour, int k, int colours) -> std::optional<GridChoice>;

    /// Lexicographically least row set, then least colour, then least columns.
    auto exhaustive_grid(const ColourGrid & colour, int k) -> std::optional<GridChoice>;

    struct BandCertificate
    {
        double log_tau = 0.0;
        double phi = 0.0;
        double mu = 0.0;
        int type = 0;
        std::vector<int> J;

        auto tau() const -> double;
    };

    struct BandCheck
    {
        bool ok = true;
        bool exhaustive = true;
        std::string failure;
    };

    /// Both band conditions for every h in J-, j in J+; exhaustive when every
    /// negative block has at most exhaustive_block_limit vertices, sampled otherwise.
    auto check_band(const Parade & p, const BandCertificate & cert, const SearchOptions & options = {}) -> BandCheck;

    struct BandResult
    {
        Parade sub;
        BandCertificate cert;
    };

    /**
     * For a (phi, mu)-shrink-resistant parade: k negative and k positive
     * indices on which every pair has the same type s, with tau = n1^-s phi
     * a (2 phi, mu)-band for the sub-parade. Throws ParadeTooShort when no
     * monochromatic k x k grid of types exists.
     */
    auto find_band(const Parade & p, int k, double phi, double mu) -> BandResult;

    struct HomogOutcome
    {
        enum class Kind
        {
            anticomplete,
            band
        };

        Kind kind = Kind::band;
        std::optional<AnticompleteWitness> witness;
        /// The contraction of the whole parade produced by the shrink step.
        Parade contraction;
        std::optional<BandResult> band;
        /// ln mu^(1 + 2|I|^2 / phi)
        double log_beta = 0.0;
        bool exact = true;
    };

    /// shrink_resist at phi/2, then find_band at phi/2, giving a (phi, mu)-band.
    auto homog(const Parade & p, int k, double phi, double mu, const SearchOptions & options = {}) -> HomogOutcome;
}

#endif
