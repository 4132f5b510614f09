#ifndef PPK_BENCH_HH
#define PPK_BENCH_HH 1

#include <ppk/bigraph.hh>
#include <ppk/pipeline.hh>

#include <cstdint>
#include <string>
#include <vector>

namespace ppk
{
    /// One find-pair run on a gen_random host.
    struct BenchCase
    {
        std::string instance;
        int n1 = 16;
        int n2 = 16;
        double p = 0.05;
        std::uint64_t host_seed = default_seed;
        OrderedBigraph pattern;
        std::string mode = "sparse";
        std::uint64_t seed = default_seed;
        double c = 0.5;
    };

    struct BenchRow
    {
        BenchCase bench;
        PurePairReport report;
        double time_ms = 0.0;
        /// Empty when the report re-verifies; otherwise the failure, or the
        /// error the run raised.
        std::string failure;
    };

    /**
     * "smoke": 24 runs on hosts of side 16 to 64. "soundness": 500 runs,
     * alternating sparse and linear, on hosts with sides in [16, 512], p in
     * {0.02, 0.05, 0.1}, cycling through every tree pattern with at most 5
     * vertices. Sizes and densities are drawn from the seed.
     */
    auto bench_suite(const std::string & name, std::uint64_t seed) -> std::vector<BenchCase>;

    auto bench_host(const BenchCase & bench) -> OrderedBigraph;

    /// Row strings joined by '/'.
    auto pattern_label(const OrderedBigraph & pattern) -> std::string;

    auto run_bench_case(const BenchCase & bench, const OrderedBigraph & host) -> BenchRow;

    inline const std::string bench_csv_header = "instance,n1,n2,pattern,mode,outcome,z1,z2,bound,time_ms,seed";

    /// z1, z2 are the pair sizes (empty for embeddings); bound is "bound1/bound2".
    auto bench_csv_row(const BenchRow & row) -> std::string;
}

#endif
