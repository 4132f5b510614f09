#include <ppk/sparsify.hh>
#include <ppk/errors.hh>

#include <algorithm>
#include <cmath>
#include <numeric>

using std::string;
using std::vector;

namespace ppk
{
    auto SparsifyParams::d() const -> long long
    {
        return static_cast<long long>(std::ceil(4.0 / eps - 1e-12));
    }

    auto to_string(SparsifyOutcome::Kind kind) -> string
    {
        switch (kind) {
            case SparsifyOutcome::Kind::sparse_pair: return "sparse_pair";
            case SparsifyOutcome::Kind::dense_pair: return "dense_pair";
            case SparsifyOutcome::Kind::found: return "found";
        }
        return "?";
    }

    namespace
    {
        /// The k members of candidates with fewest neighbours in target, ties to
        /// the smaller index, returned in increasing index order.
        auto fewest_neighbours(const OrderedBigraph & g, Side side, const vector<int> & candidates,
                const BitSet & target, int k) -> vector<int>
        {
            vector<std::pair<int, int>> keyed;
            keyed.reserve(candidates.size());
            for (int v : candidates)
                keyed.emplace_back(BitSet::count_and(g.neighbours(side, v), target), v);
            std::sort(keyed.begin(), keyed.end());
            vector<int> result;
            for (int i = 0 ; i < k ; ++i)
                result.push_back(keyed[i].second);
            std::sort(result.begin(), result.end());
            return result;
        }

        /// Consecutive equal blocks; the remainder joins the last block.
        auto interval_blocks(int n, int count) -> vector<vector<int>>
        {
            vector<vector<int>> blocks(count);
            int size = n / count;
            for (int b = 0 ; b < count ; ++b) {
                int end = b + 1 == count ? n : (b + 1) * size;
                for (int x = b * size ; x < end ; ++x)
                    blocks[b].push_back(x);
            }
            return blocks;
        }
    }

    auto sparsify(const OrderedBigraph & host, const OrderedBigraph & h, const SparsifyParams & params) -> SparsifyOutcome
    {
        int h1 = h.n1(), h2 = h.n2();
        if (h1 < 1 || h2 < 1)
            throw PreconditionViolated("sparsify: pattern needs h1, h2 >= 1");
        if (! (params.eps > 0.0 && params.eps < 0.125))
            throw PreconditionViolated("sparsify: need 0 < eps < 1/8");
        if (params.m1 < 1 || params.m2 < 1)
            throw PreconditionViolated("sparsify: need m1, m2 >= 1");

        long long d = params.d();
        long double need1 = (long double) h1 * std::pow((long double) d, h2) * params.m1;
        if ((long double) host.n1() < need1)
            throw PreconditionViolated("sparsify: |V1(G)| >= h1 * d^h2 * m1 fails: " + std::to_string(host.n1())
                    + " < " + std::to_string(h1) + " * " + std::to_string(d) + "^" + std::to_string(h2)
                    + " * " + std::to_string(params.m1));
        long long need2 = 2LL * h1 * h2 * params.m2;
        if (host.n2() < need2)
            throw PreconditionViolated("sparsify: |V2(G)| >= 2 * h1 * h2 * m2 fails: " + std::to_string(host.n2())
                    + " < " + std::to_string(need2));

        auto row_blocks = interval_blocks(host.n1(), h1);
        auto col_blocks = interval_blocks(host.n2(), h2);

        vector<BitSet> q;
        for (auto & b : row_blocks)
            q.push_back(BitSet::from_indices(host.n1(), b));

        // u is a problem for x if x has fewer than |Q_u|/d neighbours in Q_u
        // (H-adjacent) or non-neighbours in Q_u (not H-adjacent)
        auto is_problem = [&] (int u, int v, int x) {
            int in_q = q[u].count();
            int adj = BitSet::count_and(host.col(x), q[u]);
            int relevant = h.adjacent(u, v) ? adj : in_q - adj;
            return (long long) relevant * d < in_q;
        };

        vector<int> x_of(h2, -1);
        vector<bool> in_w(h2, false);
        int w_size = 0;
        bool grew = true;
        while (grew && w_size < h2) {
            grew = false;
            for (int v = 0 ; v < h2 && ! grew ; ++v) {
                if (in_w[v])
                    continue;
                for (int x : col_blocks[v]) {
                    bool ok = true;
                    for (int u = 0 ; u < h1 && ok ; ++u)
                        ok = ! is_problem(u, v, x);
                    if (! ok)
                        continue;
                    for (int u = 0 ; u < h1 ; ++u) {
                        if (h.adjacent(u, v))
                            q[u] &= host.col(x);
                        else
                            q[u].subtract(host.col(x));
                    }
                    x_of[v] = x;
                    in_w[v] = true;
                    ++w_size;
                    grew = true;
                    break;
                }
            }
        }

        SparsifyOutcome outcome;
        if (w_size == h2) {
            Embedding e;
            for (int u = 0 ; u < h1 ; ++u)
                e.row_map.push_back(q[u].first());
            e.col_map = x_of;
            if (! verify_embedding(host, h, e))
                throw CertificateBroken("sparsify: completed W does not give an embedding");
            outcome.kind = SparsifyOutcome::Kind::found;
            outcome.embedding = std::move(e);
            return outcome;
        }

        int v = 0;
        while (in_w[v])
            ++v;

        int best_u = -1;
        vector<int> best_c;
        for (int u = 0 ; u < h1 ; ++u) {
            vector<int> c;
            for (int x : col_blocks[v])
                if (is_problem(u, v, x))
                    c.push_back(x);
            if (c.size() > best_c.size() || best_u == -1) {
                best_u = u;
                best_c = std::move(c);
            }
        }
        if (best_c.size() * std::size_t(h1) < col_blocks[v].size())
            throw CertificateBroken("sparsify: no problem vertex covers a 1/h1 fraction of B_v");

        bool dense = ! h.adjacent(best_u, v);
        OrderedBigraph flipped = dense ? host.bicomplement() : OrderedBigraph();
        const OrderedBigraph & g = dense ? flipped : host;

        auto q_u = q[best_u].to_indices();
        auto c_set = BitSet::from_indices(host.n2(), best_c);
        auto x1 = fewest_neighbours(g, Side::rows, q_u, c_set, 2 * params.m1);
        auto x1_set = BitSet::from_indices(host.n1(), x1);
        auto x2 = fewest_neighbours(g, Side::cols, best_c, x1_set, 2 * params.m2);
        auto x2_set = BitSet::from_indices(host.n2(), x2);

        outcome.kind = dense ? SparsifyOutcome::Kind::dense_pair : SparsifyOutcome::Kind::sparse_pair;
        outcome.pair.z1 = fewest_neighbours(g, Side::rows, x1, x2_set, params.m1);
        outcome.pair.z2 = fewest_neighbours(g, Side::cols, x2, x1_set, params.m2);
        if (! check_sparsify_outcome(host, h, params, outcome))
            throw CertificateBroken("sparsify: selected pair violates its degree bound");
        return outcome;
    }

    auto check_sparsify_outcome(const OrderedBigraph & host, const OrderedBigraph & h,
            const SparsifyParams & params, const SparsifyOutcome & outcome) -> bool
    {
        if (outcome.kind == SparsifyOutcome::Kind::found)
            return outcome.embedding && verify_embedding(host, h, *outcome.embedding);

        auto & p = outcome.pair;
        if (! valid_pair(host, p) || int(p.z1.size()) != params.m1 || int(p.z2.size()) != params.m2)
            return false;

        bool dense = outcome.kind == SparsifyOutcome::Kind::dense_pair;
        auto y1 = BitSet::from_indices(host.n1(), p.z1);
        auto y2 = BitSet::from_indices(host.n2(), p.z2);
        const double slack = 1e-9;
        for (int a : p.z1) {
            int adj = BitSet::count_and(host.row(a), y2);
            int bad = dense ? params.m2 - adj : adj;
            if (bad > params.eps * params.m2 + slack)
                return false;
        }
        for (int b : p.z2) {
            int adj = BitSet::count_and(host.col(b), y1);
            int bad = dense ? params.m1 - adj : adj;
            if (bad > params.eps * params.m1 + slack)
                return false;
        }
        return true;
    }
}
