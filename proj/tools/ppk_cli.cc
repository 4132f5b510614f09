#include <ppk/bench.hh>
#include <ppk/containment.hh>
#include <ppk/errors.hh>
#include <ppk/generators.hh>
#include <ppk/io_util.hh>
#include <ppk/oracles.hh>
#include <ppk/pipeline.hh>
#include <ppk/report.hh>
#include <ppk/rng.hh>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <iostream>
#include <thread>

using nlohmann::json;
using namespace ppk;

namespace
{
    auto embedding_json(const Embedding & e) -> json
    {
        return json{ { "row_map", e.row_map }, { "col_map", e.col_map } };
    }

    auto pair_json(const VertexSetPair & p) -> json
    {
        return json{ { "z1", p.z1 }, { "z2", p.z2 } };
    }

    auto emit(const std::string & text, const std::string & out) -> void
    {
        if (out.empty())
            std::cout << text;
        else
            write_file_atomically(out, text);
    }

    struct ContainArgs
    {
        std::string host, pattern;
        bool bicomplement = false;
    };

    auto run_contain(const ContainArgs & a) -> int
    {
        auto host = read_obm(a.host);
        auto pattern = read_obm(a.pattern);
        json j;
        if (a.bicomplement) {
            auto r = contains_either(host, pattern);
            j["result"] = r.kind == EitherContainment::Kind::none ? "none"
                : r.kind == EitherContainment::Kind::pattern ? "pattern" : "bicomplement";
            j["embedding"] = r.embedding ? embedding_json(*r.embedding) : json(nullptr);
        }
        else {
            auto e = contains(host, pattern);
            j["result"] = e ? "pattern" : "none";
            j["embedding"] = e ? embedding_json(*e) : json(nullptr);
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    struct FindPairArgs
    {
        std::string mode, host, pattern, json_out;
        double c = 0.5;
        std::uint64_t seed = default_seed;
        bool timings = false;
    };

    auto run_find_pair(const FindPairArgs & a) -> int
    {
        auto host = read_obm(a.host);
        auto pattern = read_obm(a.pattern);
        PipelineOptions options;
        options.seed = a.seed;
        options.c = a.c;
        auto start = std::chrono::steady_clock::now();
        auto report = find_pair(a.mode, host, pattern, options);
        report.time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        auto failure = check_report(host, report);
        if (! failure.empty()) {
            std::cerr << "ppk: internal certificate failure: " << failure << "\n";
            return 2;
        }
        emit(report_to_json(report, a.timings), a.json_out);
        return 0;
    }

    struct GenArgs
    {
        int n1 = 0, n2 = 0, n = 0, g = 4;
        double p = 0.0;
        std::uint64_t seed = default_seed;
        std::string out;
    };

    auto run_gen_random(const GenArgs & a) -> int
    {
        write_obm(a.out, gen_random(a.n1, a.n2, a.p, a.seed));
        return 0;
    }

    auto run_gen_girth(const GenArgs & a) -> int
    {
        auto r = gen_girth(GirthParams{ a.n, a.g, a.seed });
        write_obm(a.out, r.graph);
        std::cerr << "seed_used " << r.seed_used << ", cycles_broken " << r.cycles_broken << "\n";
        return 0;
    }

    struct OracleArgs
    {
        std::string host, objective = "maxmin";
    };

    auto run_oracle(const OracleArgs & a) -> int
    {
        auto host = read_obm(a.host);
        auto objective = parse_objective(a.objective);
        auto pair = oracle_max_anticomplete(host, objective);
        json j = pair_json(pair);
        j["objective"] = to_string(objective);
        j["value"] = objective_value(pair, objective);
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    struct VerifyArgs
    {
        std::string report, host;
    };

    auto run_verify(const VerifyArgs & a) -> int
    {
        auto failure = verify_report(read_file(a.report), read_obm(a.host));
        if (failure.empty()) {
            std::cout << "ok\n";
            return 0;
        }
        std::cout << "fail: " << failure << "\n";
        return 1;
    }

    struct BenchArgs
    {
        std::string suite = "smoke", out;
        std::uint64_t seed = default_seed;
        unsigned jobs = 1;
    };

    auto run_bench(const BenchArgs & a) -> int
    {
        auto cases = bench_suite(a.suite, a.seed);
        std::vector<BenchRow> rows(cases.size());
        std::atomic<std::size_t> next{ 0 };
        auto worker = [&] {
            for (std::size_t i ; (i = next++) < cases.size() ; )
                rows[i] = run_bench_case(cases[i], bench_host(cases[i]));
        };
        unsigned jobs = std::max(1u, std::min<unsigned>(a.jobs, cases.size()));
        std::vector<std::thread> threads;
        for (unsigned i = 1 ; i < jobs ; ++i)
            threads.emplace_back(worker);
        worker();
        for (auto & t : threads)
            t.join();

        std::string csv = bench_csv_header + "\n";
        int failures = 0;
        for (const auto & row : rows) {
            csv += bench_csv_row(row) + "\n";
            if (! row.failure.empty()) {
                ++failures;
                std::cerr << row.bench.instance << ": " << row.failure << "\n";
            }
        }
        emit(csv, a.out);
        std::cerr << rows.size() << " runs, " << failures << " failures\n";
        return failures == 0 ? 0 : 1;
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{ "Anticomplete pairs and tree-pattern embeddings in ordered 0/1 matrices" };
    app.require_subcommand(1);

    std::uint64_t seed = default_seed;
    try {
        if (auto s = seed_from_environment())
            seed = *s;
    }
    catch (const Error & e) {
        std::cerr << "ppk: " << e.what() << "\n";
        return 2;
    }

    ContainArgs contain_args;
    auto contain = app.add_subcommand("contain", "Least order-preserving embedding of a pattern");
    contain->add_option("--host", contain_args.host)->required();
    contain->add_option("--pattern", contain_args.pattern)->required();
    contain->add_flag("--bicomplement", contain_args.bicomplement, "Also try the bicomplement of the pattern");

    FindPairArgs fp_args;
    fp_args.seed = seed;
    auto fp = app.add_subcommand("find-pair", "Anticomplete or pure pair, or an embedding of the pattern");
    fp->add_option("--mode", fp_args.mode)->required()
        ->check(CLI::IsMember({ "sparse", "linear", "symmetric", "linear-symmetric" }));
    fp->add_option("--host", fp_args.host)->required();
    fp->add_option("--pattern", fp_args.pattern)->required();
    fp->add_option("--c", fp_args.c, "Exponent of the power side in linear modes");
    fp->add_option("--seed", fp_args.seed);
    fp->add_option("--json", fp_args.json_out, "Write the report here instead of stdout");
    fp->add_flag("--timings", fp_args.timings, "Include time_ms in the report");

    GenArgs gen_args;
    gen_args.seed = seed;
    auto gen = app.add_subcommand("gen", "Generate a host");
    gen->require_subcommand(1);
    auto gen_rand = gen->add_subcommand("random", "Independent entries with probability p");
    gen_rand->add_option("--n1", gen_args.n1)->required();
    gen_rand->add_option("--n2", gen_args.n2)->required();
    gen_rand->add_option("--p", gen_args.p)->required();
    gen_rand->add_option("--seed", gen_args.seed);
    gen_rand->add_option("--out", gen_args.out)->required();
    auto gen_g = gen->add_subcommand("girth", "n x n host of girth greater than g");
    gen_g->add_option("--n", gen_args.n)->required();
    gen_g->add_option("--g", gen_args.g)->required();
    gen_g->add_option("--seed", gen_args.seed);
    gen_g->add_option("--out", gen_args.out)->required();

    OracleArgs oracle_args;
    auto oracle = app.add_subcommand("oracle", "Exact optima");
    oracle->require_subcommand(1);
    auto max_ac = oracle->add_subcommand("max-anticomplete", "Largest anticomplete pair");
    max_ac->add_option("--host", oracle_args.host)->required();
    max_ac->add_option("--objective", oracle_args.objective)->check(CLI::IsMember({ "maxmin", "maxsum" }));

    VerifyArgs verify_args;
    auto verify = app.add_subcommand("verify", "Re-check a report against its host");
    verify->add_option("--report", verify_args.report)->required();
    verify->add_option("--host", verify_args.host)->required();

    BenchArgs bench_args;
    bench_args.seed = seed;
    auto bench = app.add_subcommand("bench", "Run a seeded suite and write CSV");
    bench->add_option("--suite", bench_args.suite)->check(CLI::IsMember({ "smoke", "soundness" }));
    bench->add_option("--out", bench_args.out)->required();
    bench->add_option("--seed", bench_args.seed);
    bench->add_option("--jobs", bench_args.jobs, "Worker threads");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*contain)
            return run_contain(contain_args);
        if (*fp)
            return run_find_pair(fp_args);
        if (*gen_rand)
            return run_gen_random(gen_args);
        if (*gen_g)
            return run_gen_girth(gen_args);
        if (*max_ac)
            return run_oracle(oracle_args);
        if (*verify)
            return run_verify(verify_args);
        if (*bench)
            return run_bench(bench_args);
    }
    catch (const Error & e) {
        std::cerr << "ppk: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
