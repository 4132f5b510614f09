#include <ppk/generators.hh>
#include <ppk/errors.hh>
#include <ppk/oracles.hh>
#include <ppk/rng.hh>
#include <ppk/tree_pattern.hh>

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <optional>
#include <string>

using std::string;
using std::vector;

namespace ppk
{
    auto gen_random(int n1, int n2, double p, std::uint64_t seed) -> OrderedBigraph
    {
        if (n1 < 0 || n2 < 0)
            throw PreconditionViolated("gen_random: sizes must be non-negative");
        if (! (p >= 0.0 && p <= 1.0))
            throw PreconditionViolated("gen_random: need 0 <= p <= 1, got p = " + std::to_string(p));

        Rng rng(seed);
        vector<BitSet> rows(n1, BitSet(n2));
        for (int i = 0 ; i < n1 ; ++i)
            for (int j = 0 ; j < n2 ; ++j)
                if (rng.bernoulli(p))
                    rows[i].set(j);
        return OrderedBigraph(n1, n2, std::move(rows));
    }

    auto GirthParams::edge_probability() const -> double
    {
        return 0.5 * std::pow(double(n), 1.0 / g - 1.0);
    }

    namespace
    {
        /// Mutable bigraph on 2n + 2n vertices with vertex deletion. Vertex ids:
        /// rows 0 .. m-1, columns m .. 2m-1.
        class CycleBreaker
        {
            private:
                int _m;
                int _g;
                vector<BitSet> _adj;
                BitSet _alive;
                vector<int> _path;
                BitSet _on_path;

                auto dfs(int start, int v) -> bool
                {
                    int len = int(_path.size());
                    BitSet next = _adj[v] & _alive;
                    for (int w = next.find_next(start + 1) ; w != -1 ; w = next.find_next(w + 1)) {
                        if (_on_path.test(w))
                            continue;
                        if (len + 1 > _g)
                            break;
                        _path.push_back(w);
                        _on_path.set(w);
                        if (len + 1 >= 4 && _adj[w].test(start))
                            return true;
                        if (len + 1 < _g && dfs(start, w))
                            return true;
                        _on_path.reset(w);
                        _path.pop_back();
                    }
                    return false;
                }

            public:
                CycleBreaker(const OrderedBigraph & g, int girth) :
                    _m(g.n1()),
                    _g(girth),
                    _adj(2 * g.n1(), BitSet(2 * g.n1())),
                    _alive(2 * g.n1(), true),
                    _on_path(2 * g.n1())
                {
                    for (int i = 0 ; i < _m ; ++i)
                        g.row(i).for_each([&] (int j) {
                            _adj[i].set(_m + j);
                            _adj[_m + j].set(i);
                        });
                }

                /// A cycle of length at most g whose least vertex is >= from,
                /// as a vertex list starting at its least vertex.
                auto short_cycle_from(int & from) -> std::optional<vector<int>>
                {
                    for ( ; from < 2 * _m ; ++from) {
                        if (! _alive.test(from))
                            continue;
                        _path.assign(1, from);
                        _on_path = BitSet(2 * _m);
                        _on_path.set(from);
                        if (dfs(from, from))
                            return _path;
                    }
                    return std::nullopt;
                }

                auto kill(int v) -> void
                {
                    _alive.reset(v);
                }

                auto alive() const -> const BitSet &
                {
                    return _alive;
                }
        };
    }

    auto gen_girth(const GirthParams & params) -> GirthResult
    {
        int n = params.n, g = params.g;
        if (n < 2)
            throw PreconditionViolated("gen_girth: need n >= 2, got n = " + std::to_string(n));
        if (g < 4 || g % 2 != 0)
            throw PreconditionViolated("gen_girth: need even g >= 4, got g = " + std::to_string(g));

        double p = params.edge_probability();
        for (int attempt = 0 ; attempt < girth_max_attempts ; ++attempt) {
            std::uint64_t seed = params.seed + std::uint64_t(attempt);
            auto base = gen_random(2 * n, 2 * n, p, seed);
            CycleBreaker breaker(base, g);

            int broken = 0, from = 0;
            bool too_many = false;
            while (auto cycle = breaker.short_cycle_from(from)) {
                // the cycle starts at its least vertex
                breaker.kill(cycle->front());
                if (++broken > n / 2) {
                    too_many = true;
                    break;
                }
            }
            if (too_many)
                continue;

            vector<int> rows, cols;
            breaker.alive().for_each([&] (int v) {
                if (v < 2 * n) {
                    if (int(rows.size()) < n)
                        rows.push_back(v);
                }
                else if (int(cols.size()) < n)
                    cols.push_back(v - 2 * n);
            });
            if (int(rows.size()) < n || int(cols.size()) < n)
                continue;

            auto result = base.induced_sub(rows, cols);
            auto measured = girth(result);
            if (measured && *measured <= g)
                throw CertificateBroken("gen_girth: output has a cycle of length " + std::to_string(*measured));
            return GirthResult{std::move(result), seed, broken};
        }

        throw RetriesExhausted("gen_girth: more than n/2 short cycles for " + std::to_string(girth_max_attempts)
                + " consecutive seeds; n = " + std::to_string(n) + " is too small for g = " + std::to_string(g));
    }

    auto all_tree_patterns(int t) -> vector<OrderedBigraph>
    {
        if (t < 2 || t > 8)
            throw PreconditionViolated("all_tree_patterns: need 2 <= t <= 8, got " + std::to_string(t));

        vector<OrderedBigraph> result;
        for (int h1 = 1 ; h1 < t ; ++h1) {
            int h2 = t - h1;
            int cells = h1 * h2;
            for (std::uint64_t mask = 0 ; mask < (std::uint64_t{1} << cells) ; ++mask) {
                if (std::popcount(mask) != t - 1)
                    continue;
                vector<BitSet> rows(h1, BitSet(h2));
                for (int c = 0 ; c < cells ; ++c)
                    if (mask >> (cells - 1 - c) & 1)
                        rows[c / h2].set(c % h2);
                OrderedBigraph candidate(h1, h2, std::move(rows));
                if (is_tree(candidate))
                    result.push_back(std::move(candidate));
            }
        }
        return result;
    }

    auto star_pattern(Side centre_side, int leaves) -> OrderedBigraph
    {
        if (leaves < 1)
            throw PreconditionViolated("star_pattern: need at least one leaf");
        vector<BitSet> rows(1, BitSet(leaves, true));
        OrderedBigraph star(1, leaves, std::move(rows));
        return centre_side == Side::rows ? star : star.transpose();
    }

    auto path_pattern(Side start, int t) -> OrderedBigraph
    {
        if (t < 2)
            throw PreconditionViolated("path_pattern: need at least two vertices");
        int h1 = (t + 1) / 2, h2 = t / 2;
        vector<BitSet> rows(h1, BitSet(h2));
        // vertex k of the path is row k/2 for even k, column k/2 for odd k
        for (int k = 0 ; k + 1 < t ; ++k)
            rows[(k % 2 == 0 ? k : k + 1) / 2].set(k / 2);
        OrderedBigraph path(h1, h2, std::move(rows));
        return start == Side::rows ? path : path.transpose();
    }

    auto projective_plane(int q) -> OrderedBigraph
    {
        bool prime = q >= 2 && q < 256;
        for (int d = 2 ; d * d <= q && prime ; ++d)
            prime = q % d != 0;
        if (! prime)
            throw PreconditionViolated("projective_plane: need a prime q below 256, got " + std::to_string(q));

        vector<std::array<int, 3>> points;
        for (int y = 0 ; y < q ; ++y)
            for (int z = 0 ; z < q ; ++z)
                points.push_back({ 1, y, z });
        for (int z = 0 ; z < q ; ++z)
            points.push_back({ 0, 1, z });
        points.push_back({ 0, 0, 1 });
        std::sort(points.begin(), points.end());

        int n = int(points.size());
        vector<BitSet> rows(n, BitSet(n));
        for (int a = 0 ; a < n ; ++a)
            for (int b = 0 ; b < n ; ++b) {
                const auto & p = points[a];
                const auto & l = points[b];
                if ((p[0] * l[0] + p[1] * l[1] + p[2] * l[2]) % q == 0)
                    rows[a].set(b);
            }
        return OrderedBigraph(n, n, std::move(rows));
    }

    auto identity_matrix(int n) -> OrderedBigraph
    {
        vector<BitSet> rows(n, BitSet(n));
        for (int i = 0 ; i < n ; ++i)
            rows[i].set(i);
        return OrderedBigraph(n, n, std::move(rows));
    }

    auto full_matrix(int n1, int n2) -> OrderedBigraph
    {
        return OrderedBigraph(n1, n2, vector<BitSet>(n1, BitSet(n2, true)));
    }
}
