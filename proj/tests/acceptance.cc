// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.
// Exit status is the number of failed criteria.

#include "brute.hh"

#include <ppk/bench.hh>
#include <ppk/containment.hh>
#include <ppk/errors.hh>
#include <ppk/generators.hh>
#include <ppk/io_util.hh>
#include <ppk/leaf_cover.hh>
#include <ppk/oracles.hh>
#include <ppk/parade.hh>
#include <ppk/pipeline.hh>
#include <ppk/rainbow.hh>
#include <ppk/tree_pattern.hh>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

#include <unistd.h>

using namespace ppk;
using std::vector;

namespace
{
    // Pinned tolerances.
    constexpr double runtime_limit_seconds = 600.0;
    constexpr double relative_slack = 1e-12;
    constexpr double mixing_margin = 1e-9;

    struct Verdict
    {
        bool pass = true;
        std::ostringstream detail;

        auto fail(const std::string & why) -> void
        {
            if (pass)
                detail << "first failure: " << why << "; ";
            pass = false;
        }
    };

    auto seconds_since(std::chrono::steady_clock::time_point start) -> double
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }

    auto exact_ceil(double x) -> long long
    {
        return std::max(1LL, (long long)(std::ceil(x * (1 - relative_slack))));
    }

    /// Shortest cycle by BFS from every vertex; -1 when acyclic. Rows are
    /// vertices 0..n1-1, columns n1..n1+n2-1.
    auto bfs_girth(const OrderedBigraph & g) -> int
    {
        int n1 = g.n1(), n = n1 + g.n2();
        vector<vector<int>> adj(n);
        for (int a = 0 ; a < n1 ; ++a)
            for (int b = 0 ; b < g.n2() ; ++b)
                if (g.adjacent(a, b)) {
                    adj[a].push_back(n1 + b);
                    adj[n1 + b].push_back(a);
                }
        int best = -1;
        for (int s = 0 ; s < n ; ++s) {
            vector<int> dist(n, -1), parent(n, -1);
            std::deque<int> queue{ s };
            dist[s] = 0;
            while (! queue.empty()) {
                int u = queue.front();
                queue.pop_front();
                for (int v : adj[u]) {
                    if (dist[v] < 0) {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    }
                    else if (v != parent[u]) {
                        int len = dist[u] + dist[v] + 1;
                        if (best < 0 || len < best)
                            best = len;
                    }
                }
            }
        }
        return best;
    }

    auto has_all_ones_2x2(const OrderedBigraph & g) -> bool
    {
        for (int a = 0 ; a < g.n1() ; ++a)
            for (int b = a + 1 ; b < g.n1() ; ++b) {
                int common = 0;
                for (int c = 0 ; c < g.n2() ; ++c)
                    common += g.adjacent(a, c) && g.adjacent(b, c);
                if (common >= 2)
                    return true;
            }
        return false;
    }

    auto is_pair_anticomplete(const OrderedBigraph & g, const VertexSetPair & p) -> bool
    {
        return ! p.z1.empty() && ! p.z2.empty() && brute::anticomplete(g, p.z1, p.z2);
    }

    // Criteria 1 and 2 share the soundness runs.

    struct SoundnessRun
    {
        vector<BenchRow> rows;
        vector<OrderedBigraph> hosts;
        double seconds = 0.0;
    };

    auto soundness_runs() -> SoundnessRun
    {
        SoundnessRun run;
        auto start = std::chrono::steady_clock::now();
        for (const auto & bench : bench_suite("soundness", default_seed)) {
            run.hosts.push_back(bench_host(bench));
            run.rows.push_back(run_bench_case(bench, run.hosts.back()));
        }
        run.seconds = seconds_since(start);
        return run;
    }

    auto criterion_soundness(const SoundnessRun & run) -> Verdict
    {
        Verdict v;
        int pairs = 0, found = 0;
        for (std::size_t i = 0 ; i < run.rows.size() ; ++i) {
            const auto & row = run.rows[i];
            const auto & host = run.hosts[i];
            const auto & report = row.report;
            if (! row.failure.empty())
                v.fail(row.bench.instance + ": " + row.failure);
            else if (report.outcome == "anticomplete") {
                ++pairs;
                if (! is_pair_anticomplete(host, report.pair))
                    v.fail(row.bench.instance + ": pair is not anticomplete");
            }
            else if (report.outcome == "embedding") {
                ++found;
                if (! report.embedding || ! verify_embedding(host, row.bench.pattern, *report.embedding))
                    v.fail(row.bench.instance + ": embedding does not verify");
            }
            else
                v.fail(row.bench.instance + ": unexpected outcome " + report.outcome);
        }
        if (run.rows.size() != 500)
            v.fail("suite has " + std::to_string(run.rows.size()) + " runs");
        if (run.seconds >= runtime_limit_seconds)
            v.fail("runtime " + std::to_string(run.seconds) + " s");
        v.detail << run.rows.size() << " runs, " << pairs << " pairs, " << found << " embeddings, "
                 << run.seconds << " s";
        return v;
    }

    /// Empty when the pair meets the bound of its mode, else the shortfall.
    auto bound_shortfall(const OrderedBigraph & host, const OrderedBigraph & pattern, const PurePairReport & report,
            double c) -> std::string
    {
        int t = pattern.n1() + pattern.n2();
        long long z1 = report.pair.z1.size(), z2 = report.pair.z2.size();
        if (report.mode == "sparse") {
            int r = brute::radius(pattern);
            double n = std::min(host.n1(), host.n2());
            double K = std::pow(std::log(n) / std::log(double(t)), 1.0 / r);
            long long need = exact_ceil(n * std::pow(double(t), -5.0 * std::pow(K, r - 1)));
            if (z1 < need || z2 < need)
                return "sparse pair below " + std::to_string(need);
            return "";
        }
        TreePattern tree(pattern);
        auto rc = rainbow_constants(report.r, std::max(tree.h1(), tree.h2()), c);
        double eps = std::exp(rc.log_gamma - std::log(2.0 * rc.K));
        if (std::abs(std::log(report.eps) - std::log(eps)) > 1e-9 * std::max(1.0, std::abs(std::log(eps))))
            return "reported eps differs from the constant chain";
        double n1 = host.n1(), n2 = host.n2();
        bool rows_linear = z1 >= exact_ceil(eps * n1) && z2 >= exact_ceil(eps * std::pow(n2, 1 - c));
        bool cols_linear = z1 >= exact_ceil(eps * std::pow(n1, 1 - c)) && z2 >= exact_ceil(eps * n2);
        if (! rows_linear && ! cols_linear)
            return "linear pair below both orientations of the bound";
        return "";
    }

    /// n x n permutation matrix; it avoids every tree pattern with a vertex of degree 2.
    auto permutation_host(int n, std::uint64_t seed) -> OrderedBigraph
    {
        Rng rng(seed);
        vector<int> perm = iota_vector(n);
        for (int i = n - 1 ; i > 0 ; --i)
            std::swap(perm[i], perm[rng.below(i + 1)]);
        vector<BitSet> rows(n, BitSet(n));
        for (int a = 0 ; a < n ; ++a)
            rows[a].set(perm[a]);
        return OrderedBigraph(n, n, std::move(rows));
    }

    auto criterion_completeness(const SoundnessRun & run) -> Verdict
    {
        Verdict v;
        int evaluated = 0, embedded = 0, capped = 0;
        for (std::size_t i = 0 ; i < run.rows.size() ; ++i) {
            const auto & row = run.rows[i];
            const auto & host = run.hosts[i];
            if (row.report.outcome != "anticomplete")
                continue;
            if (embeds(host, row.bench.pattern)) {
                ++embedded;
                continue;
            }
            if (! row.report.degree_cap_holds) {
                ++capped;
                continue;
            }
            ++evaluated;
            auto why = bound_shortfall(host, row.bench.pattern, row.report, row.bench.c);
            if (! why.empty())
                v.fail(row.bench.instance + ": " + why);
        }

        // pattern-free hosts on which the degree hypotheses hold
        int extra = 0;
        for (int t = 3 ; t <= 5 ; ++t)
            for (const auto & pattern : all_tree_patterns(t))
                for (int n : { 16, 64, 200, 512 })
                    for (std::string mode : { "sparse", "linear" }) {
                        auto host = permutation_host(n, std::uint64_t(n * 31 + t));
                        PipelineOptions options;
                        auto report = find_pair(mode, host, pattern, options);
                        if (! report.degree_cap_holds)
                            continue;
                        ++extra;
                        if (report.outcome != "anticomplete" || ! is_pair_anticomplete(host, report.pair)) {
                            v.fail("permutation host " + std::to_string(n) + " " + mode + ": outcome " + report.outcome);
                            continue;
                        }
                        auto why = bound_shortfall(host, pattern, report, options.c);
                        if (! why.empty())
                            v.fail("permutation host " + std::to_string(n) + " " + mode + ": " + why);
                    }
        v.detail << evaluated << " qualifying soundness runs (of the pair runs, " << embedded
                 << " hosts contain the pattern and " << capped << " break the degree cap); " << extra
                 << " runs on pattern-free permutation hosts";
        return v;
    }

    auto criterion_star_on_matching() -> Verdict
    {
        Verdict v;
        auto host = identity_matrix(9);
        auto report = find_pair_sparse(host, star_pattern(Side::rows, 2));
        if (report.outcome != "anticomplete")
            v.fail("outcome " + report.outcome);
        else {
            if (report.pair.z1.size() != 4)
                v.fail("|Z1| = " + std::to_string(report.pair.z1.size()));
            if (report.pair.z2.size() < 5)
                v.fail("|Z2| = " + std::to_string(report.pair.z2.size()));
            if (! is_pair_anticomplete(host, report.pair))
                v.fail("pair is not anticomplete");
            v.detail << "sizes (" << report.pair.z1.size() << ", " << report.pair.z2.size() << ")";
        }
        return v;
    }

    auto criterion_oracles() -> Verdict
    {
        Verdict v;
        int exhaustive = 0;
        for (unsigned seed = 0 ; seed < 200 ; ++seed) {
            int n1 = 1 + seed % 4, n2 = 1 + (seed / 4) % 4;
            auto g = brute::random_matrix(n1, n2, seed, 30 + int(seed % 3) * 20);
            for (auto objective : { Objective::max_min, Objective::max_sum }) {
                auto p = oracle_max_anticomplete(g, objective);
                int expected = brute::max_anticomplete_value(g, objective == Objective::max_min);
                bool ok = p.z1.empty() ? expected == 0
                                       : valid_pair(g, p) && brute::anticomplete(g, p.z1, p.z2)
                                           && objective_value(p, objective) == expected;
                if (! ok)
                    v.fail("branch and bound differs from enumeration, seed " + std::to_string(seed));
                ++exhaustive;
            }
        }

        int sanity = 0, pairs = 0;
        auto patterns = all_tree_patterns(5);
        for (unsigned i = 0 ; i < 100 ; ++i) {
            // sides above 2k for every pattern with at most 5 vertices
            int n1 = 9 + i % 10, n2 = 9 + (i / 10) % 10;
            auto g = brute::random_matrix(n1, n2, 1000 + i, 5 + int(i % 3) * 5);
            const auto & pattern = patterns[i % patterns.size()];
            PipelineOptions options;
            options.seed = i + 1;
            auto report = find_pair(i % 2 == 0 ? "sparse" : "linear", g, pattern, options);
            ++sanity;
            if (report.outcome != "anticomplete")
                continue;
            ++pairs;
            int optimum = objective_value(oracle_max_anticomplete(g, Objective::max_min), Objective::max_min);
            int mine = int(std::min(report.pair.z1.size(), report.pair.z2.size()));
            if (mine > optimum || ! is_pair_anticomplete(g, report.pair))
                v.fail("pair exceeds the max-min optimum on instance " + std::to_string(i));
        }
        v.detail << exhaustive << " exhaustive comparisons, " << sanity << " sanity instances (" << pairs << " pairs)";
        return v;
    }

    auto criterion_containment() -> Verdict
    {
        Verdict v;
        vector<OrderedBigraph> patterns;
        for (int a = 1 ; a <= 3 ; ++a)
            for (int b = 1 ; b <= 3 ; ++b)
                for (int mask = 0 ; mask < (1 << (a * b)) ; ++mask) {
                    vector<std::string> rows(a, std::string(b, '0'));
                    for (int e = 0 ; e < a * b ; ++e)
                        if (mask >> e & 1)
                            rows[e / b][e % b] = '1';
                    patterns.push_back(OrderedBigraph::from_strings(a, b, rows));
                }
        long long comparisons = 0;
        for (unsigned seed = 1 ; seed <= 100 ; ++seed) {
            int n1 = 1 + seed % 6, n2 = 1 + (seed / 6) % 6;
            auto host = brute::random_matrix(n1, n2, seed, 20 + int(seed % 4) * 20);
            for (const auto & pattern : patterns) {
                ++comparisons;
                if (contains(host, pattern) != brute::contains(host, pattern))
                    v.fail("disagreement at seed " + std::to_string(seed));
            }
        }
        if (contains(OrderedBigraph::from_strings({ "10" }), OrderedBigraph::from_strings({ "01" })))
            v.fail("[01] found in [10]");
        v.detail << comparisons << " comparisons, order-sensitivity case absent";
        return v;
    }

    auto block_of(int size, int from, int to) -> BitSet
    {
        BitSet b(size);
        for (int x = from ; x < to ; ++x)
            b.set(x);
        return b;
    }

    auto degree_into(const OrderedBigraph & g, const vector<int> & ys, const vector<int> & xs) -> int
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

    /// Least max-degree from Y to X over every X, Y of at least the mu fractions.
    auto least_over_fractions(const Parade & p, int h, int j, double mu) -> int
    {
        auto bh = p.block(h).to_indices(), bj = p.block(j).to_indices();
        int best = 1 << 30;
        for (int mx = 1 ; mx < (1 << bh.size()) ; ++mx) {
            auto xs = brute::subset(mx, int(bh.size()));
            if (double(xs.size()) < mu * double(bh.size()))
                continue;
            for (auto & x : xs)
                x = bh[x];
            for (int my = 1 ; my < (1 << bj.size()) ; ++my) {
                auto ys = brute::subset(my, int(bj.size()));
                if (double(ys.size()) < mu * double(bj.size()))
                    continue;
                for (auto & y : ys)
                    y = bj[y];
                best = std::min(best, degree_into(p.host(), ys, xs));
            }
        }
        return best;
    }

    auto resistant(const Parade & p, double phi, double mu) -> bool
    {
        double n1 = p.host().n1();
        for (int h : p.negative())
            for (int j : p.positive()) {
                int d = degree_into(p.host(), p.block(j).to_indices(), p.block(h).to_indices());
                if (! (least_over_fractions(p, h, j, mu) > d * std::pow(n1, -phi) * (1 + relative_slack)))
                    return false;
            }
        return true;
    }

    auto type_of(double ratio, double n1, double phi) -> int
    {
        for (int s = 0 ; ; ++s)
            if (std::pow(n1, -(s + 1) * phi) < ratio && ratio <= std::pow(n1, -s * phi) * (1 + relative_slack))
                return s;
    }

    /// Band from find_band checked by recomputing every type and the blocks.
    auto band_valid(const Parade & p, const BandResult & band, double phi) -> bool
    {
        if (band.sub.indices() != band.cert.J || band.cert.phi != 2 * phi)
            return false;
        double n1 = p.host().n1();
        for (int i : band.sub.indices())
            if (! p.has(i) || ! (band.sub.block(i) == p.block(i)))
                return false;
        for (int h : band.sub.negative())
            for (int j : band.sub.positive()) {
                auto bh = p.block(h).to_indices();
                int d = degree_into(p.host(), p.block(j).to_indices(), bh);
                if (d == 0 || type_of(double(d) / bh.size(), n1, phi) != band.cert.type)
                    return false;
            }
        return true;
    }

    auto criterion_parades() -> Verdict
    {
        Verdict v;
        int shrink_runs = 0, band_runs = 0;
        const double mu = 0.5;
        for (int percent : { 30, 70 })
            for (double phi : { 0.25, 0.5, 1.0 })
                for (unsigned seed = 1 ; seed <= 6 ; ++seed) {
                    auto g = brute::random_matrix(16, 16, seed, percent);
                    Parade p(g, { -2, -1, 1, 2 },
                            { block_of(16, 0, 8), block_of(16, 8, 16), block_of(16, 0, 8), block_of(16, 8, 16) });
                    auto out = shrink_resist(p, phi, mu);
                    ++shrink_runs;
                    long long limit = (long long)(std::floor(16.0 / phi));
                    if (out.contractions > limit || out.contraction_limit != limit)
                        v.fail("contraction count above floor(|I|^2/phi)");
                    if (! out.exact)
                        v.fail("shrink search was not exhaustive");
                    if (out.kind == ShrinkOutcome::Kind::anticomplete) {
                        if (! brute::anticomplete(g, out.witness->x, out.witness->y) || out.witness->x.empty())
                            v.fail("shrink witness is not anticomplete");
                        continue;
                    }
                    if (! resistant(out.contraction, phi, mu))
                        v.fail("contraction is not shrink-resistant");
                    for (int k : { 1, 2 }) {
                        try {
                            auto band = find_band(out.contraction, k, phi, mu);
                            ++band_runs;
                            if (! band_valid(out.contraction, band, phi))
                                v.fail("band types disagree with recomputation");
                        }
                        catch (const ParadeTooShort &) {
                            if (k == 1)
                                v.fail("find_band failed with k = 1");
                        }
                    }
                }

        int grids = 0;
        for (unsigned seed = 1 ; seed <= 50 ; ++seed) {
            auto bits = brute::random_matrix(3, 9, seed);
            ColourGrid grid(3, vector<int>(9));
            for (int r = 0 ; r < 3 ; ++r)
                for (int c = 0 ; c < 9 ; ++c)
                    grid[r][c] = bits.adjacent(r, c);
            auto fast = pigeonhole_grid(grid, 2, 2);
            bool exists = false;
            for (int r1 = 0 ; r1 < 3 ; ++r1)
                for (int r2 = r1 + 1 ; r2 < 3 ; ++r2)
                    for (int c1 = 0 ; c1 < 9 ; ++c1)
                        for (int c2 = c1 + 1 ; c2 < 9 ; ++c2) {
                            int x = grid[r1][c1];
                            exists |= grid[r1][c2] == x && grid[r2][c1] == x && grid[r2][c2] == x;
                        }
            bool fast_ok = fast && fast->rows.size() == 2 && fast->cols.size() == 2;
            if (fast_ok)
                for (int r : fast->rows)
                    for (int c : fast->cols)
                        fast_ok &= grid[r][c] == fast->colour;
            if (fast_ok != exists || bool(exhaustive_grid(grid, 2)) != exists)
                v.fail("pigeonhole grid disagrees with exhaustive search at seed " + std::to_string(seed));
            ++grids;
        }
        v.detail << shrink_runs << " shrink runs, " << band_runs << " bands, " << grids << " colourings";
        return v;
    }

    /// Rows and columns permuted, optionally transposed.
    auto relabelled(const OrderedBigraph & g, bool transpose, std::uint64_t seed) -> OrderedBigraph
    {
        auto base = transpose ? g.transpose() : g;
        vector<int> rp = iota_vector(base.n1()), cp = iota_vector(base.n2());
        if (seed != 0) {
            Rng rng(seed);
            for (int i = int(rp.size()) - 1 ; i > 0 ; --i)
                std::swap(rp[i], rp[rng.below(i + 1)]);
            for (int i = int(cp.size()) - 1 ; i > 0 ; --i)
                std::swap(cp[i], cp[rng.below(i + 1)]);
        }
        vector<BitSet> rows(base.n1(), BitSet(base.n2()));
        for (int a = 0 ; a < base.n1() ; ++a)
            for (int b : base.row(a).to_indices())
                rows[rp[a]].set(cp[b]);
        return OrderedBigraph(base.n1(), base.n2(), std::move(rows));
    }

    /// Every row and column has q + 1 ones and any two rows share exactly one column.
    auto is_plane_incidence(const OrderedBigraph & g, int q) -> bool
    {
        for (int a = 0 ; a < g.n1() ; ++a)
            if (g.degree(Side::rows, a) != q + 1)
                return false;
        for (int b = 0 ; b < g.n2() ; ++b)
            if (g.degree(Side::cols, b) != q + 1)
                return false;
        for (int a = 0 ; a < g.n1() ; ++a)
            for (int b = a + 1 ; b < g.n1() ; ++b)
                if (BitSet::count_and(g.row(a), g.row(b)) != 1)
                    return false;
        return true;
    }

    auto criterion_leaf_cover() -> Verdict
    {
        Verdict v;
        const int k = 1;
        const double mu = 1.0 / 8, phi = 1.0;
        int fixtures = 0;
        for (int q : { 67, 71, 73, 79, 83 }) {
            auto plane = projective_plane(q);
            if (! is_plane_incidence(plane, q))
                v.fail("PG(2," + std::to_string(q) + ") incidence axioms");
            for (int variant = 0 ; variant < 4 ; ++variant) {
                ++fixtures;
                auto g = relabelled(plane, variant % 2 == 1, variant >= 2 ? std::uint64_t(q * 10 + variant) : 0);
                int n = g.n1();
                Parade A(g, { -1, 1 }, { block_of(n, 0, n), block_of(n, 0, n) });

                // band bullet 1, exactly
                double tau = double(q + 1) / n;
                auto all = iota_vector(n);
                if (degree_into(g, all, all) > tau * n * (1 + relative_slack))
                    v.fail("band bullet 1 fails");
                // band bullet 2: two mu-fractions of size t span more than
                // (q+1)t^2/n - sqrt(q) t (1 - t/n) > 0 edges
                double t = std::ceil(mu * n);
                if (! ((q + 1) * t / n > std::sqrt(double(q)) * (1 - t / n) + mixing_margin))
                    v.fail("mixing-lemma inequality fails");

                BandCertificate cert{ std::log(tau), phi, mu, 0, { -1, 1 } };
                auto result = leaf_cover(A, cert, k);
                auto check = check_leaf_cover(A, result);
                if (! check.ok)
                    v.fail("checker: " + check.failure);

                // the same invariants with plain loops
                const auto & B = result.B.at(-1);
                const auto & C = result.C.at(-1);
                const auto & D = result.D.at({ -1, 1 });
                std::vector<char> inB(n, 0), inC(n, 0);
                for (int x : B)
                    inB[x] = 1;
                for (int x : C) {
                    inC[x] = 1;
                    if (! inB[x])
                        v.fail("C not inside B");
                }
                if (2.0 * B.size() < n)
                    v.fail("|B| below |A|/2");
                if (double(C.size()) < std::pow(double(n), -k * phi) * n / 16 * (1 - relative_slack))
                    v.fail("|C| below its bound");
                if (double(D.size()) > 1.0 / (8 * k * k * tau) * (1 + relative_slack))
                    v.fail("|D| above 1/(8k^2 tau)");
                for (int x = 0 ; x < n ; ++x) {
                    bool hit = false;
                    for (int y : D)
                        hit |= g.adjacent(x, y);
                    if (inC[x] && ! hit)
                        v.fail("D does not cover C");
                    if (inB[x] && ! inC[x] && hit)
                        v.fail("D meets B minus C");
                }
            }
        }
        v.detail << fixtures << " banded fixtures";
        return v;
    }

    auto criterion_rainbow_base() -> Verdict
    {
        Verdict v;
        int runs = 0;
        for (int blocks = 1 ; blocks <= 4 ; ++blocks)
            for (std::uint64_t seed = 1 ; seed <= 5 ; ++seed) {
                OrientedHosts hosts(gen_random(16, 16, 0.1 * double(seed), seed));
                Parade A = build_interval_parade(hosts.g, blocks);
                auto o = rainbow(hosts, A, 0, blocks, 0.5);
                ++runs;
                if (o.kind != RainbowOutcome::Kind::certificate || ! o.certificate) {
                    v.fail("depth zero did not return a certificate");
                    continue;
                }
                if (o.log_gamma != 0.0)
                    v.fail("gamma is not 1");
                for (int h : A.negative())
                    if (o.certificate->C.at(h) != A.block(h).to_indices())
                        v.fail("C_h differs from A_h");
                auto check = check_certificate(*o.certificate, seed);
                if (! check.ok)
                    v.fail("certificate check: " + check.failure);
                if (! check.exhaustive)
                    v.fail("certificate check was not exhaustive");
            }
        v.detail << runs << " parades with |J| <= 8";
        return v;
    }

    auto criterion_girth() -> Verdict
    {
        Verdict v;
        int runs = 0;
        for (int g : { 4, 6 })
            for (std::uint64_t seed = 1 ; seed <= 25 ; ++seed) {
                auto r = gen_girth(GirthParams{ 50, g, seed });
                ++runs;
                int found = bfs_girth(r.graph);
                if (found != -1 && found <= g)
                    v.fail("girth " + std::to_string(found) + " for g = " + std::to_string(g));
                if (g == 4 && has_all_ones_2x2(r.graph))
                    v.fail("all-ones 2x2 submatrix");
            }
        v.detail << runs << " generated hosts";
        return v;
    }

    auto run_cli(const std::string & args, const std::string & seed) -> int
    {
        std::string command = "PPK_SEED=" + seed + " '" + PPK_CLI_PATH + "' " + args + " 2>/dev/null";
        return std::system(command.c_str());
    }

    auto criterion_determinism() -> Verdict
    {
        Verdict v;
        namespace fs = std::filesystem;
        auto dir = fs::temp_directory_path() / ("ppk-acceptance-" + std::to_string(::getpid()));
        fs::create_directories(dir);
        auto at = [&] (const std::string & name) { return (dir / name).string(); };
        std::string pattern = at("pattern.obm");
        write_obm(pattern, path_pattern(Side::rows, 4));

        int compared = 0;
        auto same_twice = [&] (const std::string & args_a, const std::string & out_a,
                const std::string & args_b, const std::string & out_b) {
            if (run_cli(args_a, "7") != 0 || run_cli(args_b, "7") != 0) {
                v.fail("command failed: " + args_a);
                return;
            }
            ++compared;
            if (read_file(out_a) != read_file(out_b))
                v.fail("outputs differ: " + args_a);
        };
        same_twice("gen random --n1 60 --n2 70 --p 0.05 --out " + at("r1.obm"), at("r1.obm"),
                "gen random --n1 60 --n2 70 --p 0.05 --out " + at("r2.obm"), at("r2.obm"));
        same_twice("gen girth --n 40 --g 6 --out " + at("g1.obm"), at("g1.obm"),
                "gen girth --n 40 --g 6 --out " + at("g2.obm"), at("g2.obm"));
        for (std::string mode : { "sparse", "linear", "symmetric", "linear-symmetric" })
            for (std::string host : { "r1.obm", "g1.obm" }) {
                std::string base = "find-pair --mode " + mode + " --host " + at(host) + " --pattern " + pattern + " --json ";
                same_twice(base + at("a.json"), at("a.json"), base + at("b.json"), at("b.json"));
            }
        fs::remove_all(dir);
        v.detail << compared << " repeated invocations byte-identical";
        return v;
    }
}

auto main() -> int
{
    int failures = 0;
    auto report = [&] (int number, const std::string & name, const std::function<Verdict ()> & run) {
        auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = run();
        }
        catch (const std::exception & e) {
            v.fail(std::string("exception: ") + e.what());
        }
        failures += ! v.pass;
        std::cout << "criterion " << number << " " << (v.pass ? "PASS" : "FAIL") << "  " << name << ": "
                  << v.detail.str() << " [" << seconds_since(start) << " s]" << std::endl;
    };

    SoundnessRun soundness;
    report(1, "soundness suite", [&] {
        soundness = soundness_runs();
        return criterion_soundness(soundness);
    });
    report(2, "completeness against the bounds", [&] { return criterion_completeness(soundness); });
    report(3, "radius-1 star on a matching", criterion_star_on_matching);
    report(4, "oracle agreement", criterion_oracles);
    report(5, "containment correctness", criterion_containment);
    report(6, "parade machinery", criterion_parades);
    report(7, "leaf cover on banded fixtures", criterion_leaf_cover);
    report(8, "rainbow base case", criterion_rainbow_base);
    report(9, "girth generator", criterion_girth);
    report(10, "determinism", criterion_determinism);
    return failures;
}
