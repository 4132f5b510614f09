#include <ppk/pipeline.hh>

#include <ppk/errors.hh>
#include <ppk/rainbow.hh>
#include <ppk/sparse_embedder.hh>
#include <ppk/sparsify.hh>
#include <ppk/thresholds.hh>
#include <ppk/tree_pattern.hh>

#include <cmath>

using std::vector;

namespace ppk
{
    namespace
    {
        auto bounds_of(const LinearOutcome & o) -> std::pair<long long, long long>
        {
            return o.linear == RainbowOutcome::Linear::rows ? std::pair{ o.bound_linear, o.bound_power }
                                                            : std::pair{ o.bound_power, o.bound_linear };
        }

        auto linear_options(const PipelineOptions & options) -> LinearOptions
        {
            LinearOptions lo;
            lo.seed = options.seed;
            return lo;
        }

        auto sparse_options(const PipelineOptions & options) -> SparseOptions
        {
            SparseOptions so;
            so.seed = options.seed;
            return so;
        }

        /// A pure pair grown from one edge or non-edge: anticomplete if the
        /// host has a non-edge, complete otherwise.
        auto grown_pure_pair(const OrderedBigraph & host, PurePairReport & report) -> void
        {
            if (auto p = greedy_anticomplete_pair(host, 1, 1)) {
                report.outcome = "anticomplete";
                report.pair = *p;
                return;
            }
            if (auto p = greedy_anticomplete_pair(bicomplement(host), 1, 1)) {
                report.outcome = "complete";
                report.pair = *p;
                return;
            }
            throw PreconditionViolated("symmetric pipeline: the host has an empty side");
        }

        auto lift(const VertexSetPair & local, const vector<int> & rows, const vector<int> & cols) -> VertexSetPair
        {
            VertexSetPair out;
            for (int v : local.z1)
                out.z1.push_back(rows[v]);
            for (int v : local.z2)
                out.z2.push_back(cols[v]);
            return out;
        }

        auto lift(const Embedding & local, const vector<int> & rows, const vector<int> & cols) -> Embedding
        {
            Embedding out;
            for (int v : local.row_map)
                out.row_map.push_back(rows[v]);
            for (int v : local.col_map)
                out.col_map.push_back(cols[v]);
            return out;
        }

        auto symmetric_impl(const OrderedBigraph & host, const OrderedBigraph & pattern,
                const PipelineOptions & options, bool linear) -> PurePairReport
        {
            PurePairReport report;
            report.mode = linear ? "linear-symmetric" : "symmetric";
            report.pattern = pattern;
            report.seed = options.seed;
            report.c = linear ? options.c : 0.0;

            // the statement is symmetric in the pattern and its bicomplement
            bool flipped = false;
            OrderedBigraph T = pattern;
            if (! is_tree(pattern)) {
                T = bicomplement(pattern);
                flipped = true;
                if (! is_tree(T))
                    throw PreconditionViolated("symmetric pipeline: neither the pattern nor its bicomplement is a tree");
            }
            TreePattern tree(T);
            int t = tree.size();
            int n = std::min(host.n1(), host.n2());
            if (n < 2)
                throw PreconditionViolated("symmetric pipeline: host needs at least 2 vertices on each side");
            report.t = t;
            report.r = tree.radius();

            double eps_front = 1.0 / (4.0 * t * t);
            report.log_size_factor = -t * std::log(16.0 * t * t);
            report.d = SparsifyParams{ eps_front, 1, 1 }.d();

            double log_bound1, log_bound2;
            if (linear) {
                int w1 = tree.best_root_on(Side::rows);
                report.r = tree.radius_from(w1);
                auto rc = rainbow_constants(report.r, std::max(tree.h1(), tree.h2()), options.c);
                double log_eps = rc.log_gamma - std::log(2.0 * rc.K);
                report.K = rc.K;
                report.eps = std::exp(log_eps);
                double log_m = report.log_size_factor + std::log(double(n));
                log_bound1 = log_eps + log_m;
                log_bound2 = log_eps + (1.0 - options.c) * log_m;
            }
            else {
                auto mc = compute_constants(t, report.r, n);
                report.K = mc.K;
                report.eps = eps_front;
                log_bound1 = log_bound2 = report.log_size_factor + std::log(double(n))
                    - 5.0 * std::pow(mc.K, report.r - 1) * std::log(double(t));
            }

            if (std::max(log_bound1, log_bound2) <= 0.0 && ! options.m_override) {
                report.route = "trivial";
                grown_pure_pair(host, report);
                return report;
            }

            long long m = options.m_override.value_or(snap_floor(2.0 * std::exp(report.log_size_factor) * n));
            report.m = m;
            auto sp = sparsify(host, T, SparsifyParams{ eps_front, int(m), int(m) });
            if (sp.kind == SparsifyOutcome::Kind::found) {
                report.route = "sparsify";
                report.outcome = flipped ? "bicomplement_embedding" : "embedding";
                report.embedding = sp.embedding;
                return report;
            }

            const auto & Y1 = sp.pair.z1;
            const auto & Y2 = sp.pair.z2;
            bool complemented = sp.kind == SparsifyOutcome::Kind::dense_pair;
            OrderedBigraph sub = induced_sub(host, Y1, Y2);
            if (complemented)
                sub = bicomplement(sub);
            if (m >= 2)
                report.J = linear ? 0.0 : compute_constants(t, report.r, int(m)).K;

            bool found;
            VertexSetPair local_pair;
            Embedding local_embedding;
            std::string engine_route;
            if (linear) {
                auto o = embed_or_pair_linear(sub, tree, options.c, linear_options(options));
                found = o.kind == LinearOutcome::Kind::found;
                engine_route = o.route;
                report.degree_cap_holds = o.degree_cap_holds;
                if (found)
                    local_embedding = *o.embedding;
                else {
                    local_pair = o.pair;
                    std::tie(report.bound1, report.bound2) = bounds_of(o);
                }
            }
            else {
                auto o = embed_or_pair_sparse(sub, tree, sparse_options(options));
                found = o.kind == SparseOutcome::Kind::found;
                engine_route = o.route;
                report.degree_cap_holds = o.degree_cap_holds;
                if (found)
                    local_embedding = *o.embedding;
                else {
                    local_pair = o.pair;
                    report.bound1 = report.bound2 = count_cutoff_log(log_bound1);
                }
            }
            report.route = std::string(complemented ? "dense" : "sparse") + "/" + engine_route;
            if (found) {
                report.outcome = (flipped != complemented) ? "bicomplement_embedding" : "embedding";
                report.embedding = lift(local_embedding, Y1, Y2);
            }
            else {
                report.outcome = complemented ? "complete" : "anticomplete";
                report.pair = lift(local_pair, Y1, Y2);
            }
            return report;
        }
    }

    auto find_pair_sparse(const OrderedBigraph & host, const OrderedBigraph & pattern,
            const PipelineOptions & options) -> PurePairReport
    {
        TreePattern tree(pattern);
        auto o = embed_or_pair_sparse(host, tree, sparse_options(options));
        PurePairReport report;
        report.mode = "sparse";
        report.pattern = pattern;
        report.seed = options.seed;
        report.t = o.constants.t;
        report.r = o.constants.r;
        report.K = o.constants.K;
        report.eps = 1.0 / (4.0 * report.t * report.t);
        report.route = o.route;
        report.degree_cap_holds = o.degree_cap_holds;
        if (o.kind == SparseOutcome::Kind::found) {
            report.outcome = "embedding";
            report.embedding = o.embedding;
        }
        else {
            report.outcome = "anticomplete";
            report.pair = o.pair;
            report.bound1 = report.bound2 = o.constants.bound;
        }
        return report;
    }

    auto find_pair_linear(const OrderedBigraph & host, const OrderedBigraph & pattern,
            const PipelineOptions & options) -> PurePairReport
    {
        TreePattern tree(pattern);
        auto o = embed_or_pair_linear(host, tree, options.c, linear_options(options));
        PurePairReport report;
        report.mode = "linear";
        report.pattern = pattern;
        report.seed = options.seed;
        report.t = tree.size();
        report.r = o.r;
        report.K = o.constants.K;
        report.eps = std::exp(o.log_eps);
        report.c = options.c;
        report.route = o.route;
        report.degree_cap_holds = o.degree_cap_holds;
        if (o.kind == LinearOutcome::Kind::found) {
            report.outcome = "embedding";
            report.embedding = o.embedding;
        }
        else {
            report.outcome = "anticomplete";
            report.pair = o.pair;
            std::tie(report.bound1, report.bound2) = bounds_of(o);
        }
        return report;
    }

    auto symmetric_pure_pair(const OrderedBigraph & host, const OrderedBigraph & pattern,
            const PipelineOptions & options) -> PurePairReport
    {
        return symmetric_impl(host, pattern, options, false);
    }

    auto linear_symmetric(const OrderedBigraph & host, const OrderedBigraph & pattern,
            const PipelineOptions & options) -> PurePairReport
    {
        if (! (options.c > 0.0 && options.c <= 1.0))
            throw PreconditionViolated("linear_symmetric: need 0 < c <= 1");
        return symmetric_impl(host, pattern, options, true);
    }

    auto find_pair(const std::string & mode, const OrderedBigraph & host, const OrderedBigraph & pattern,
            const PipelineOptions & options) -> PurePairReport
    {
        if (mode == "sparse")
            return find_pair_sparse(host, pattern, options);
        if (mode == "linear")
            return find_pair_linear(host, pattern, options);
        if (mode == "symmetric")
            return symmetric_pure_pair(host, pattern, options);
        if (mode == "linear-symmetric")
            return linear_symmetric(host, pattern, options);
        throw PreconditionViolated("find_pair: unknown mode '" + mode + "'");
    }

    auto check_report(const OrderedBigraph & host, const PurePairReport & report) -> std::string
    {
        if (report.outcome == "embedding" || report.outcome == "bicomplement_embedding") {
            if (! report.embedding)
                return "embedding outcome without an embedding";
            auto target = report.outcome == "embedding" ? report.pattern : bicomplement(report.pattern);
            if (! verify_embedding(host, target, *report.embedding))
                return "embedding does not verify";
            return "";
        }
        if (report.outcome != "anticomplete" && report.outcome != "complete")
            return "unknown outcome '" + report.outcome + "'";
        if (! valid_pair(host, report.pair))
            return "pair is not sorted, duplicate-free and in range";
        if (report.pair.z1.empty() || report.pair.z2.empty())
            return "pair has an empty side";
        auto status = pair_status(host, report.pair);
        if (report.outcome == "anticomplete" && status != PairStatus::anticomplete)
            return "pair is not anticomplete";
        if (report.outcome == "complete" && status != PairStatus::complete)
            return "pair is not complete";
        if ((long long)(report.pair.z1.size()) < report.bound1)
            return "|Z1| below its bound";
        if ((long long)(report.pair.z2.size()) < report.bound2)
            return "|Z2| below its bound";
        return "";
    }
}
