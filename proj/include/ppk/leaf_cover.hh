#ifndef PPK_LEAF_COVER_HH
#define PPK_LEAF_COVER_HH 1

#include <ppk/parade.hh>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ppk
{
    /**
     * Per negative index h: B_h and C_h inside A_h; per pair (h, j): the cover
     * set D_{h,j} inside A_j. D_{h,j} covers C_h and has no neighbour in B_i
     * for i != h, nor in B_h minus C_h.
     */
    struct LeafCoverResult
    {
        std::map<int, std::vector<int>> B;
        std::map<int, std::vector<int>> C;
        std::map<std::pair<int, int>, std::vector<int>> D;
        /// The sets Q_h the C_h were cut from.
        std::map<int, std::vector<int>> Q;

        int k = 1;
        double log_tau = 0.0;
        double phi = 0.0;
        double mu = 0.0;
    };

    /**
     * Build the cover sets for a parade with |I-|, |I+| <= k carrying the band
     * cert (mu <= 1/(8k), tau <= 1/(8k^2)). Negative indices are added one at
     * a time in index order; for each, every A_j is covered greedily by the
     * vertex with most new neighbours (ties to the least index), the cover is
     * cut into chunks of at most 1/(8k^2 tau) vertices, and the largest class
     * of covered vertices agreeing on their chunks (ties to the least chunk
     * vector) becomes Q_h.
     *
     * Throws PreconditionViolated on bad parameters and HypothesisViolated,
     * naming the sets involved, when a step the band guarantees fails.
     */
    auto leaf_cover(const Parade & A, const BandCertificate & cert, int k) -> LeafCoverResult;

    struct LeafCoverCheck
    {
        bool ok = true;
        std::string failure;
        /// |C_h| >= (64k^2)^-k n1^-k phi |A_h| / 16, the bound the construction guarantees.
        bool construction_bound_holds = true;
    };

    /// Every invariant of the result, exactly, including |C_h| >= n1^-k phi |A_h| / 16.
    auto check_leaf_cover(const Parade & A, const LeafCoverResult & result) -> LeafCoverCheck;

    struct HighDegreeWitness
    {
        int h = 0;
        int j = 0;
        /// A vertex of A_j.
        int v = 0;
        int neighbours = 0;
    };

    struct CoverStructure
    {
        std::vector<int> J;
        /// The band sub-parade the cover was built in (blocks F_i inside A_i).
        Parade F;
        BandCertificate band;
        LeafCoverResult cover;
    };

    struct CombinedOutcome
    {
        enum class Kind
        {
            anticomplete,
            high_degree,
            cover
        };

        Kind kind = Kind::cover;
        std::optional<AnticompleteWitness> witness;
        std::optional<HighDegreeWitness> high_degree;
        std::optional<CoverStructure> structure;
        /// ln beta, the common ratio bound of the three outcomes.
        double log_beta = 0.0;
        bool exact = true;
    };

    /// Parade length that makes the band step succeed for k and c.
    auto combined_required_length(int k, double c) -> long long;

    /**
     * homog with mu = 1/(8k), phi = c/k, then either a vertex of some F_j with
     * at least |F_h|/(8k^2) neighbours in F_h, or leaf_cover in the band
     * sub-parade with tau lowered to the largest d(j, h)/|F_h|.
     *
     * Throws ParadeTooShort when no band of k + k indices exists.
     */
    auto combined_cover(const Parade & A, int k, double c, const SearchOptions & options = {}) -> CombinedOutcome;

    struct CombinedCheck
    {
        bool ok = true;
        std::string failure;
    };

    auto check_combined(const Parade & A, int k, double c, const CombinedOutcome & outcome) -> CombinedCheck;
}

#endif
