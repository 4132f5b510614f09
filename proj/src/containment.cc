#include <ppk/containment.hh>

#include <algorithm>
#include <queue>

using std::optional;
using std::vector;

namespace ppk
{
    namespace
    {
        /**
         * Backtracking search for an induced, order-preserving copy of a
         * pattern. Pattern vertices are visited in BFS order so that each new
         * vertex usually has an assigned neighbour, and its candidates are the
         * host neighbourhood of that neighbour's image, filtered by the
         * adjacency and non-adjacency constraints to every assigned vertex on
         * the other side and by the order window from assigned vertices on the
         * same side.
         */
        class Search
        {
            private:
                const OrderedBigraph & _host;
                const OrderedBigraph & _pattern;
                int _h1, _h2;
                vector<BitSet> _degree_ok;
                vector<int> _fixed, _image, _order;

                auto side(int v) const -> Side { return v < _h1 ? Side::rows : Side::cols; }
                auto index(int v) const -> int { return v < _h1 ? v : v - _h1; }
                auto side_count(Side s) const -> int { return s == Side::rows ? _h1 : _h2; }

                auto pattern_adjacent(int u, int v) const -> bool
                {
                    if (side(u) == side(v))
                        return false;
                    return side(u) == Side::rows ? _pattern.adjacent(index(u), index(v)) : _pattern.adjacent(index(v), index(u));
                }

                auto pattern_degree(int v) const -> int
                {
                    return _pattern.degree(side(v), index(v));
                }

                auto build_order() -> void
                {
                    int t = _h1 + _h2;
                    vector<bool> seen(t, false);
                    std::queue<int> q;
                    _order.clear();
                    auto visit = [&] (int v) {
                        seen[v] = true;
                        _order.push_back(v);
                        q.push(v);
                    };

                    for (int v = 0 ; v < t ; ++v)
                        if (_fixed[v] >= 0)
                            visit(v);

                    while (int(_order.size()) < t) {
                        if (q.empty()) {
                            int best = -1;
                            for (int v = 0 ; v < t ; ++v)
                                if (! seen[v] && (best == -1 || pattern_degree(v) > pattern_degree(best)))
                                    best = v;
                            visit(best);
                        }
                        int v = q.front();
                        q.pop();
                        const auto & nbrs = _pattern.neighbours(side(v), index(v));
                        int offset = side(v) == Side::rows ? _h1 : 0;
                        nbrs.for_each([&] (int u) {
                            if (! seen[offset + u])
                                visit(offset + u);
                        });
                    }
                }

                auto expand(std::size_t position) -> bool
                {
                    if (position == _order.size())
                        return true;

                    int v = _order[position];
                    Side s = side(v);
                    int idx = index(v), count = side_count(s), host_count = _host.size(s);

                    BitSet candidates = _degree_ok[v];
                    if (_fixed[v] >= 0) {
                        bool ok = candidates.test(_fixed[v]);
                        candidates = BitSet(host_count);
                        if (ok)
                            candidates.set(_fixed[v]);
                    }

                    int lo = idx, hi = host_count - (count - idx);
                    for (std::size_t p = 0 ; p < position ; ++p) {
                        int a = _order[p];
                        if (side(a) != s) {
                            const auto & n = _host.neighbours(side(a), _image[a]);
                            if (pattern_adjacent(v, a))
                                candidates &= n;
                            else
                                candidates.subtract(n);
                        }
                        else if (index(a) < idx)
                            lo = std::max(lo, _image[a] + (idx - index(a)));
                        else
                            hi = std::min(hi, _image[a] - (index(a) - idx));
                    }

                    for (int x = candidates.find_next(std::max(lo, 0)) ; x != -1 && x <= hi ; x = candidates.find_next(x + 1)) {
                        _image[v] = x;
                        if (expand(position + 1))
                            return true;
                    }
                    _image[v] = -1;
                    return false;
                }

            public:
                Search(const OrderedBigraph & host, const OrderedBigraph & pattern) :
                    _host(host),
                    _pattern(pattern),
                    _h1(pattern.n1()),
                    _h2(pattern.n2()),
                    _fixed(_h1 + _h2, -1),
                    _image(_h1 + _h2, -1)
                {
                    for (int v = 0 ; v < _h1 + _h2 ; ++v) {
                        Side s = side(v);
                        BitSet ok(host.size(s));
                        int need = pattern_degree(v);
                        for (int x = 0 ; x < host.size(s) ; ++x)
                            if (host.degree(s, x) >= need)
                                ok.set(x);
                        _degree_ok.push_back(std::move(ok));
                    }
                }

                auto fix(int v, int x) -> void { _fixed[v] = x; }
                auto unfix(int v) -> void { _fixed[v] = -1; }

                auto run() -> bool
                {
                    if (_h1 > _host.n1() || _h2 > _host.n2())
                        return false;
                    std::fill(_image.begin(), _image.end(), -1);
                    build_order();
                    return expand(0);
                }

                auto image(int v) const -> int { return _image[v]; }

                auto embedding() const -> Embedding
                {
                    Embedding e;
                    e.row_map.assign(_image.begin(), _image.begin() + _h1);
                    e.col_map.assign(_image.begin() + _h1, _image.end());
                    return e;
                }
        };
    }

    auto embeds(const OrderedBigraph & host, const OrderedBigraph & pattern) -> bool
    {
        Search search(host, pattern);
        return search.run();
    }

    auto contains(const OrderedBigraph & host, const OrderedBigraph & pattern) -> optional<Embedding>
    {
        Search search(host, pattern);
        if (! search.run())
            return std::nullopt;

        // Pin pattern vertices one at a time, rows then columns, each to the
        // least host vertex that still extends to a full embedding.
        int h1 = pattern.n1(), t = pattern.n1() + pattern.n2();
        vector<int> pinned(t, -1);
        Embedding witness = search.embedding();

        for (int v = 0 ; v < t ; ++v) {
            bool is_row = v < h1;
            int first = (v == 0 || v == h1) ? 0 : pinned[v - 1] + 1;
            int known_good = is_row ? witness.row_map[v] : witness.col_map[v - h1];
            for (int x = first ; x < known_good ; ++x) {
                search.fix(v, x);
                if (search.run()) {
                    witness = search.embedding();
                    break;
                }
            }
            pinned[v] = is_row ? witness.row_map[v] : witness.col_map[v - h1];
            search.fix(v, pinned[v]);
        }

        return witness;
    }

    auto verify_embedding(const OrderedBigraph & host, const OrderedBigraph & pattern, const Embedding & e) -> bool
    {
        if (int(e.row_map.size()) != pattern.n1() || int(e.col_map.size()) != pattern.n2())
            return false;

        auto monotone = [] (const vector<int> & m, int n) {
            for (std::size_t i = 0 ; i < m.size() ; ++i) {
                if (m[i] < 0 || m[i] >= n)
                    return false;
                if (i > 0 && m[i - 1] >= m[i])
                    return false;
            }
            return true;
        };
        if (! monotone(e.row_map, host.n1()) || ! monotone(e.col_map, host.n2()))
            return false;

        for (int a = 0 ; a < pattern.n1() ; ++a)
            for (int b = 0 ; b < pattern.n2() ; ++b)
                if (pattern.adjacent(a, b) != host.adjacent(e.row_map[a], e.col_map[b]))
                    return false;
        return true;
    }

    auto contains_either(const OrderedBigraph & host, const OrderedBigraph & pattern) -> EitherContainment
    {
        if (auto e = contains(host, pattern))
            return EitherContainment{ EitherContainment::Kind::pattern, e };
        if (auto e = contains(host, pattern.bicomplement()))
            return EitherContainment{ EitherContainment::Kind::bicomplement, e };
        return EitherContainment{};
    }
}
