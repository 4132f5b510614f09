#ifndef PPK_PIPELINE_HH
#define PPK_PIPELINE_HH 1

#include <ppk/bigraph.hh>
#include <ppk/containment.hh>
#include <ppk/rng.hh>

#include <cstdint>
#include <optional>
#include <string>

namespace ppk
{
    /**
     * The result of one find-pair run, self-contained enough to re-verify
     * against the host alone. A pair outcome is anticomplete or complete
     * with |Z1| >= bound1 and |Z2| >= bound2; an embedding outcome maps the
     * pattern, or its bicomplement, into the host.
     */
    struct PurePairReport
    {
        /// sparse, linear, symmetric or linear-symmetric.
        std::string mode;
        /// anticomplete, complete, embedding or bicomplement_embedding.
        std::string outcome;
        OrderedBigraph pattern;
        VertexSetPair pair;
        std::optional<Embedding> embedding;
        long long bound1 = 1;
        long long bound2 = 1;
        /// The branch that produced the result.
        std::string route;

        int t = 0;
        int r = 0;
        /// Sparse modes: t^(K^r) = n. Linear modes: the required parade length.
        double K = 0.0;
        /// Degree cap fraction of the back end (1/(4t^2) sparse, eps linear).
        double eps = 0.0;
        /// Exponent of the power side in linear modes.
        double c = 0.0;
        /// Symmetric modes: sparsify's d, ln of the size factor, m and the
        /// exponent J of the sub-instance (t^(J^r) = m).
        long long d = 0;
        double log_size_factor = 0.0;
        long long m = 0;
        double J = 0.0;
        bool degree_cap_holds = true;
        std::uint64_t seed = default_seed;
        std::optional<double> time_ms;
    };

    struct PipelineOptions
    {
        std::uint64_t seed = default_seed;
        /// Exponent of the power side for the linear back end.
        double c = 0.5;
        /// Symmetric modes: run sparsify with this m even when the size bound
        /// is at most 1, where the pipeline would return the trivial pair.
        std::optional<long long> m_override;
    };

    /// The sparse engine on a tree pattern; pair bounds ceil(n t^(-5K^(r-1))).
    auto find_pair_sparse(const OrderedBigraph & host, const OrderedBigraph & pattern,
            const PipelineOptions & options = {}) -> PurePairReport;

    /// The linear engine on a tree pattern; bounds eps|V| and eps|V|^(1-c).
    auto find_pair_linear(const OrderedBigraph & host, const OrderedBigraph & pattern,
            const PipelineOptions & options = {}) -> PurePairReport;

    /**
     * A pure pair, or an embedding of the pattern or its bicomplement. The
     * pattern or its bicomplement must be a tree. With eps = 1/(4t^2),
     * d = ceil(1/(4 eps)) and size factor (16t^2)^-t: when the size bound
     * (16t^2)^-t n t^(-5K^(r-1)) is at most 1, a pure pair is grown greedily
     * from a single edge or non-edge. Otherwise sparsify with m = floor(2 x
     * factor x n) on both sides, and the sparse engine runs on the sparse
     * side or on the bicomplement of the dense side.
     */
    auto symmetric_pure_pair(const OrderedBigraph & host, const OrderedBigraph & pattern,
            const PipelineOptions & options = {}) -> PurePairReport;

    /// As symmetric_pure_pair with the linear engine behind sparsify; pair
    /// bounds eps m and eps m^(1-c), trivial when those are at most 1.
    auto linear_symmetric(const OrderedBigraph & host, const OrderedBigraph & pattern,
            const PipelineOptions & options = {}) -> PurePairReport;

    /// Runs the named mode.
    auto find_pair(const std::string & mode, const OrderedBigraph & host, const OrderedBigraph & pattern,
            const PipelineOptions & options = {}) -> PurePairReport;

    /// Empty if the report's certificate holds on the host, else the first failure.
    auto check_report(const OrderedBigraph & host, const PurePairReport & report) -> std::string;
}

#endif
