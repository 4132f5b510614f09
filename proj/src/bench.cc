#include <ppk/bench.hh>

#include <ppk/errors.hh>
#include <ppk/generators.hh>
#include <ppk/rng.hh>

#include <chrono>
#include <cstdio>

using std::vector;

namespace ppk
{
    namespace
    {
        auto patterns_up_to(int t_max) -> vector<OrderedBigraph>
        {
            vector<OrderedBigraph> out;
            for (int t = 2 ; t <= t_max ; ++t)
                for (auto & p : all_tree_patterns(t))
                    out.push_back(std::move(p));
            return out;
        }

        auto format_double(double x, const char * format) -> std::string
        {
            char buffer[64];
            std::snprintf(buffer, sizeof buffer, format, x);
            return buffer;
        }
    }

    auto bench_suite(const std::string & name, std::uint64_t seed) -> vector<BenchCase>
    {
        int runs, side_min, side_max, t_max;
        if (name == "smoke") {
            runs = 24;
            side_min = 16;
            side_max = 64;
            t_max = 4;
        }
        else if (name == "soundness") {
            runs = 500;
            side_min = 16;
            side_max = 512;
            t_max = 5;
        }
        else
            throw PreconditionViolated("bench: unknown suite '" + name + "' (smoke, soundness)");

        const double densities[] = { 0.02, 0.05, 0.1 };
        auto patterns = patterns_up_to(t_max);
        Rng rng(seed);
        vector<BenchCase> out;
        for (int i = 0 ; i < runs ; ++i) {
            BenchCase b;
            b.n1 = side_min + int(rng.below(side_max - side_min + 1));
            b.n2 = side_min + int(rng.below(side_max - side_min + 1));
            b.p = densities[rng.below(3)];
            b.host_seed = rng.next_u64();
            b.pattern = patterns[i % patterns.size()];
            b.mode = i % 2 == 0 ? "sparse" : "linear";
            b.seed = seed + i;
            b.instance = name + "-" + std::to_string(i);
            out.push_back(std::move(b));
        }
        return out;
    }

    auto bench_host(const BenchCase & bench) -> OrderedBigraph
    {
        return gen_random(bench.n1, bench.n2, bench.p, bench.host_seed);
    }

    auto pattern_label(const OrderedBigraph & pattern) -> std::string
    {
        std::string out;
        for (const auto & row : pattern.to_strings()) {
            if (! out.empty())
                out += "/";
            out += row;
        }
        return out;
    }

    auto run_bench_case(const BenchCase & bench, const OrderedBigraph & host) -> BenchRow
    {
        BenchRow row;
        row.bench = bench;
        PipelineOptions options;
        options.seed = bench.seed;
        options.c = bench.c;
        auto start = std::chrono::steady_clock::now();
        try {
            row.report = find_pair(bench.mode, host, bench.pattern, options);
            row.failure = check_report(host, row.report);
        }
        catch (const Error & e) {
            row.report.mode = bench.mode;
            row.report.outcome = "error";
            row.failure = e.what();
        }
        row.time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        row.report.time_ms = row.time_ms;
        return row;
    }

    auto bench_csv_row(const BenchRow & row) -> std::string
    {
        const auto & b = row.bench;
        const auto & r = row.report;
        bool pair = r.outcome == "anticomplete" || r.outcome == "complete";
        std::string line = b.instance + "," + std::to_string(b.n1) + "," + std::to_string(b.n2) + ","
            + pattern_label(b.pattern) + "," + b.mode + "," + r.outcome + ",";
        line += pair ? std::to_string(r.pair.z1.size()) + "," + std::to_string(r.pair.z2.size()) + "," : ",,";
        line += pair ? std::to_string(r.bound1) + "/" + std::to_string(r.bound2) : "";
        line += "," + format_double(row.time_ms, "%.3f") + "," + std::to_string(b.seed);
        return line;
    }
}
