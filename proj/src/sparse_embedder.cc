#include <ppk/sparse_embedder.hh>
#include <ppk/errors.hh>
#include <ppk/thresholds.hh>

#include <algorithm>
#include <cmath>
#include <numeric>

using std::optional;
using std::string;
using std::vector;

namespace ppk
{
    auto compute_constants(int t, int r, int n) -> MainConstants
    {
        if (t < 2 || r < 1 || n < 2)
            throw PreconditionViolated("compute_constants: need t >= 2, r >= 1, n >= 2");
        double K = std::pow(std::log(double(n)) / std::log(double(t)), 1.0 / r);
        double nearest = std::round(K);
        if (std::fabs(K - nearest) <= 1e-12 * std::max(1.0, nearest))
            K = nearest;
        return constants_with_K(t, r, n, K);
    }

    auto constants_with_K(int t, int r, int n, double K) -> MainConstants
    {
        if (t < 2 || r < 1 || n < 2 || ! (K > 0.0))
            throw PreconditionViolated("constants_with_K: need t >= 2, r >= 1, n >= 2, K > 0");
        MainConstants c;
        c.t = t;
        c.r = r;
        c.n = n;
        c.eps = 1.0 / (4.0 * t * t);
        c.K = K;
        c.k.assign(r, 0.0);
        for (int s = 1 ; s < r ; ++s)
            c.k[s] = 4.0 * (std::pow(K, s - 1) + (s >= 2 ? c.k[s - 1] / 4.0 : 0.0));
        c.bound = snap_ceil_exp(std::log(double(n)) - 5.0 * std::pow(K, r - 1) * std::log(double(t)));
        if (c.bound < 1)
            c.bound = 1;
        return c;
    }

    auto to_string(SparseOutcome::Kind kind) -> string
    {
        return kind == SparseOutcome::Kind::pair ? "pair" : "found";
    }

    auto is_anticomplete(const OrderedBigraph & g, const VertexSetPair & p) -> bool
    {
        auto z2 = BitSet::from_indices(g.n2(), p.z2);
        for (int a : p.z1)
            if (g.row(a).intersects(z2))
                return false;
        return true;
    }

    auto degree_cap_holds(const OrderedBigraph & host, double cap) -> bool
    {
        return host.max_degree(Side::rows) <= cap + snap_tolerance && host.max_degree(Side::cols) <= cap + snap_tolerance;
    }

    namespace
    {
        auto by_degree(const OrderedBigraph & g, Side s) -> vector<int>
        {
            vector<int> order(g.size(s));
            std::iota(order.begin(), order.end(), 0);
            std::stable_sort(order.begin(), order.end(), [&] (int a, int b) {
                return g.degree(s, a) < g.degree(s, b);
            });
            return order;
        }

        auto greedy_from(const OrderedBigraph & g, Side first, long long need_first, long long need_second)
            -> optional<VertexSetPair>
        {
            Side second = opposite(first);
            if (need_first > g.size(first) || need_second > g.size(second))
                return std::nullopt;
            auto order = by_degree(g, first);
            BitSet covered(g.size(second));
            for (long long i = 0 ; i < std::max(1LL, need_first) ; ++i)
                covered |= g.neighbours(first, order[i]);
            BitSet other(g.size(second), true);
            other.subtract(covered);
            if (other.count() < std::max(1LL, need_second))
                return std::nullopt;
            vector<int> mine;
            for (int v = 0 ; v < g.size(first) ; ++v)
                if (! g.neighbours(first, v).intersects(other))
                    mine.push_back(v);
            VertexSetPair p;
            if (first == Side::rows) {
                p.z1 = std::move(mine);
                p.z2 = other.to_indices();
            }
            else {
                p.z1 = other.to_indices();
                p.z2 = std::move(mine);
            }
            return p;
        }
    }

    auto greedy_anticomplete_pair(const OrderedBigraph & g, long long need1, long long need2)
        -> optional<VertexSetPair>
    {
        if (auto p = greedy_from(g, Side::rows, need1, need2))
            return p;
        return greedy_from(g, Side::cols, need2, need1);
    }

    namespace
    {
        auto oriented_pair(Side side_of_a, vector<int> a, vector<int> b) -> VertexSetPair
        {
            if (side_of_a == Side::rows)
                return VertexSetPair{std::move(a), std::move(b)};
            return VertexSetPair{std::move(b), std::move(a)};
        }

        struct Step
        {
            enum class Kind
            {
                found,
                pair,
                descended,
                augmented
            };

            Kind kind;
            VertexSetPair pair;
            Embedding embedding;
            string route;
        };

        /// The level construction for radius at least 2, with its state.
        class LevelEngine
        {
            private:
                const OrderedBigraph & _g;
                const TreePattern & _tp;
                const MainConstants & _c;
                const SparseOptions & _opt;
                Rng _rng;
                double _log_t, _log_n, _log_eps;
                int _t, _r;
                int _root;
                vector<int> _parent, _level;
                vector<vector<int>> _levels, _children;

                double _x = 0.0;
                vector<int> _a[2];

                vector<vector<int>> _block;
                vector<BitSet> _block_set;
                // indexed by the child v of the edge (parent(v), v)
                vector<BitSet> _xs, _ys;

                auto side(int v) const -> Side { return _tp.side(v); }

                auto nb(Side s, int h) const -> const BitSet & { return _g.neighbours(s, h); }

                auto log_d(double x) const -> double
                {
                    return _log_eps + _log_n - _c.K * x * _log_t;
                }

                auto log_p(int s) const -> double
                {
                    return s == _r ? 0.0 : log_d(_x) - _c.K * _c.k[s] * _log_t;
                }

                auto log_f(int s) const -> double
                {
                    return (_c.K * _c.k[s - 1] + 2.0) * _log_t;
                }

                /// ceil(n t^-y)
                auto size_need(double y) const -> long long
                {
                    return std::max(1LL, snap_ceil_exp(_log_n - y * _log_t));
                }

                /// ceil(count / f) for f = exp(log_f)
                auto ceil_div(int count, double lf) const -> int
                {
                    if (count == 0)
                        return 0;
                    if (lf >= std::log(cutoff_infinity))
                        return 1;
                    return int(snap_ceil(double(count) / std::exp(lf)));
                }

                auto within_f(long long y_size, long long x_size, double lf) const -> bool
                {
                    if (y_size == 0)
                        return true;
                    if (x_size == 0)
                        return false;
                    return std::log(double(y_size)) <= std::log(double(x_size)) + lf + snap_tolerance;
                }

                auto limit() const -> double
                {
                    return std::pow(_c.K, _r - 1);
                }

                /// Replace the state by (X, the |X| vertices of region with fewest
                /// neighbours in X) at x_new, if that pair really qualifies.
                auto try_descend(Side sx, const vector<int> & x_set, const BitSet & region, double x_new) -> bool
                {
                    if (x_new > limit() + snap_tolerance)
                        return false;
                    long long need = size_need(x_new);
                    if ((long long) x_set.size() < need || region.count() < int(x_set.size()))
                        return false;

                    Side so = opposite(sx);
                    auto xs = BitSet::from_indices(_g.size(sx), x_set);
                    vector<std::pair<int, int>> keyed;
                    region.for_each([&] (int z) {
                        keyed.emplace_back(BitSet::count_and(nb(so, z), xs), z);
                    });
                    std::sort(keyed.begin(), keyed.end());
                    vector<int> chosen;
                    for (std::size_t i = 0 ; i < x_set.size() ; ++i)
                        chosen.push_back(keyed[i].second);
                    std::sort(chosen.begin(), chosen.end());
                    auto cs = BitSet::from_indices(_g.size(so), chosen);

                    long long cut = at_most_cutoff_log(log_d(x_new));
                    for (int a : x_set)
                        if (BitSet::count_and(nb(sx, a), cs) >= cut)
                            return false;
                    for (int z : chosen)
                        if (BitSet::count_and(nb(so, z), xs) >= cut)
                            return false;

                    _a[side_index(sx)] = x_set;
                    _a[side_index(so)] = chosen;
                    _x = x_new;
                    return true;
                }

                auto build_blocks() -> bool
                {
                    long long b = size_need(_x + 1.0);
                    int count[2] = {_tp.h1(), _tp.h2()};
                    for (int s = 0 ; s < 2 ; ++s)
                        if ((long long) count[s] * b > (long long) _a[s].size())
                            return false;
                    _block.assign(_t, {});
                    _block_set.clear();
                    for (int v = 0 ; v < _t ; ++v) {
                        int si = side_index(side(v));
                        int i = _tp.index_in_side(v);
                        _block[v].assign(_a[si].begin() + i * b, _a[si].begin() + (i + 1) * b);
                        _block_set.push_back(BitSet::from_indices(_g.size(side(v)), _block[v]));
                    }
                    return true;
                }

                /// The edge into v: a large X_uv gives a descent
                /// (s < r) or an anticomplete pair (s = r).
                auto check_edge(int v) -> optional<Step>
                {
                    int u = _parent[v], s = _level[v];
                    auto x_list = _xs[v].to_indices();
                    BitSet rest = difference(_block_set[v], _ys[v]);
                    if (s < _r) {
                        if ((long long) x_list.size() >= size_need(_x + _c.k[s])
                                && try_descend(side(u), x_list, rest, _x + _c.k[s]))
                            return Step{Step::Kind::descended, {}, {}, "descent"};
                        return std::nullopt;
                    }
                    if ((long long) x_list.size() >= _c.bound && rest.count() >= _c.bound) {
                        auto p = oriented_pair(side(u), x_list, rest.to_indices());
                        if (is_anticomplete(_g, p))
                            return Step{Step::Kind::pair, std::move(p), {}, "edge-pair"};
                    }
                    return std::nullopt;
                }

                auto build_xy() -> optional<Step>
                {
                    _xs.clear();
                    _ys.clear();
                    for (int v = 0 ; v < _t ; ++v) {
                        _xs.emplace_back(v == _root ? 0 : _g.size(side(_parent[v])));
                        _ys.emplace_back(_g.size(side(v)));
                    }
                    for (int v = 0 ; v < _t ; ++v) {
                        if (v == _root || _level[v] < 2)
                            continue;
                        grow_xy(v);
                        if (auto step = check_edge(v))
                            return step;
                    }
                    return std::nullopt;
                }

                /// Greedy maximal Y_uv: repeatedly add the B_v vertex with most
                /// neighbours among B_u vertices not yet sparse to B_v \ Y_uv.
                auto grow_xy(int v) -> void
                {
                    int u = _parent[v], s = _level[v];
                    Side su = side(u), sv = side(v);
                    long long cut = count_cutoff_log(log_p(s));
                    double lf = log_f(s);
                    int half = int(_block[v].size()) / 2;

                    BitSet rest = _block_set[v];
                    BitSet y(_g.size(sv));
                    vector<int> deg(_g.size(su), 0);
                    BitSet x(_g.size(su)), not_x(_g.size(su));
                    for (int a : _block[u]) {
                        deg[a] = BitSet::count_and(nb(su, a), rest);
                        if (deg[a] < cut)
                            x.set(a);
                        else
                            not_x.set(a);
                    }
                    int x_count = x.count(), y_count = 0;
                    while (y_count + 1 <= half) {
                        int best = -1, best_gain = -1;
                        rest.for_each([&] (int z) {
                            int gain = BitSet::count_and(nb(sv, z), not_x);
                            if (gain > best_gain) {
                                best_gain = gain;
                                best = z;
                            }
                        });
                        if (best == -1)
                            break;
                        int new_x = x_count;
                        BitSet touched = nb(sv, best) & not_x;
                        touched.for_each([&] (int a) {
                            if (deg[a] - 1 < cut)
                                ++new_x;
                        });
                        if (! within_f(y_count + 1, new_x, lf))
                            break;
                        (nb(sv, best) & _block_set[u]).for_each([&] (int a) {
                            --deg[a];
                            if (not_x.test(a) && deg[a] < cut) {
                                not_x.reset(a);
                                x.set(a);
                            }
                        });
                        rest.reset(best);
                        y.set(best);
                        ++y_count;
                        x_count = new_x;
                    }
                    _ys[v] = y;
                    _xs[v] = trimmed(x, ceil_div(y_count, lf));
                }

                static auto trimmed(const BitSet & x, int keep) -> BitSet
                {
                    BitSet result(x.size());
                    int kept = 0;
                    for (int a = x.find_next(0) ; a != -1 && kept < keep ; a = x.find_next(a + 1), ++kept)
                        result.set(a);
                    return result;
                }

                auto x_union(int u) const -> BitSet
                {
                    BitSet result(_g.size(side(u)));
                    for (int v : _children[u])
                        result |= _xs[v];
                    return result;
                }

                auto levels_step(int & augmentations) -> optional<Step>
                {
                    vector<int> y(_t, -1);
                    vector<BitSet> allowed_p(_t);
                    vector<BitSet> xu(_t);
                    for (int v = 0 ; v < _t ; ++v)
                        xu[v] = x_union(v);

                    Side sr = side(_root);
                    long long cut1 = count_cutoff_log(log_p(1));
                    vector<BitSet> avail;
                    for (int v : _levels[1])
                        avail.push_back(difference(_block_set[v], xu[v]));
                    for (int cand : _block[_root]) {
                        bool ok = true;
                        for (std::size_t i = 0 ; i < _levels[1].size() && ok ; ++i)
                            ok = BitSet::count_and(nb(sr, cand), avail[i]) >= cut1;
                        if (ok) {
                            y[_root] = cand;
                            break;
                        }
                    }
                    if (y[_root] == -1) {
                        std::size_t best = 0;
                        vector<vector<int>> bad(_levels[1].size());
                        for (std::size_t i = 0 ; i < _levels[1].size() ; ++i) {
                            for (int cand : _block[_root])
                                if (BitSet::count_and(nb(sr, cand), avail[i]) < cut1)
                                    bad[i].push_back(cand);
                            if (bad[i].size() > bad[best].size())
                                best = i;
                        }
                        auto take = std::min<long long>((long long) bad[best].size(), size_need(_x + 2.0));
                        vector<int> x_set(bad[best].begin(), bad[best].begin() + take);
                        if (try_descend(sr, x_set, avail[best], _x + _c.k[1]))
                            return Step{Step::Kind::descended, {}, {}, "descent"};
                        return std::nullopt;
                    }
                    for (std::size_t i = 0 ; i < _levels[1].size() ; ++i)
                        allowed_p[_levels[1][i]] = nb(sr, y[_root]) & avail[i];

                    for (int s = 2 ; s <= _r ; ++s) {
                        auto result = transversal_level(s, y, allowed_p, xu, augmentations);
                        if (result)
                            return result;
                        if (y[_levels[s - 1].front()] == -1)
                            return std::nullopt;
                    }

                    for (int v : _levels[_r])
                        y[v] = allowed_p[v].first();
                    Embedding e;
                    for (int i = 0 ; i < _tp.h1() ; ++i)
                        e.row_map.push_back(y[_tp.vertex(Side::rows, i)]);
                    for (int j = 0 ; j < _tp.h2() ; ++j)
                        e.col_map.push_back(y[_tp.vertex(Side::cols, j)]);
                    if (! verify_embedding(_g, _tp.graph(), e))
                        throw CertificateBroken("level construction pinned a non-embedding");
                    return Step{Step::Kind::found, {}, std::move(e), "levels"};
                }

                /// Pins level s-1 by a valid transversal and sets P_v for v in
                /// level s. Returns a step on descent, pair or augmentation; nullopt
                /// with level s-1 pinned on success, or unpinned when stuck.
                auto transversal_level(int s, vector<int> & y, vector<BitSet> & allowed_p,
                        const vector<BitSet> & xu, int & augmentations) -> optional<Step>
                {
                    const auto & lp = _levels[s - 1];
                    const auto & ls = _levels[s];
                    Side ss = side(ls.front());
                    Side sp = opposite(ss);

                    BitSet c(_g.size(ss));
                    for (int w = 0 ; w < _t ; ++w)
                        if (y[w] != -1) {
                            if (side(w) == ss)
                                c.set(y[w]);
                            else
                                c |= nb(side(w), y[w]);
                        }
                    vector<BitSet> allowed(_t);
                    for (int v : ls) {
                        allowed[v] = difference(_block_set[v], c);
                        allowed[v].subtract(xu[v]);
                    }
                    long long cut = count_cutoff_log(log_p(s));

                    vector<vector<int>> cand;
                    long double product = 1;
                    for (int u : lp) {
                        cand.push_back(allowed_p[u].to_indices());
                        if (cand.back().empty())
                            return std::nullopt;
                        product *= cand.back().size();
                    }
                    int m = int(lp.size());

                    auto privates = [&] (const vector<int> & pick, int i, const BitSet * others) {
                        BitSet priv = nb(sp, pick[i]);
                        if (others)
                            priv.subtract(*others);
                        else
                            for (int j = 0 ; j < m ; ++j)
                                if (j != i)
                                    priv.subtract(nb(sp, pick[j]));
                        return priv;
                    };
                    auto valid = [&] (const vector<int> & pick) {
                        for (int i = 0 ; i < m ; ++i) {
                            if (_children[lp[i]].empty())
                                continue;
                            auto priv = privates(pick, i, nullptr);
                            for (int v : _children[lp[i]])
                                if (BitSet::count_and(priv, allowed[v]) < cut)
                                    return false;
                        }
                        return true;
                    };

                    bool exhaustive = product <= (long double) _opt.exhaustive_budget;
                    vector<vector<int>> tried;
                    optional<vector<int>> good;
                    if (exhaustive) {
                        vector<int> idx(m, 0), pick(m);
                        while (true) {
                            for (int i = 0 ; i < m ; ++i)
                                pick[i] = cand[i][idx[i]];
                            if (valid(pick)) {
                                good = pick;
                                break;
                            }
                            int i = m - 1;
                            while (i >= 0 && ++idx[i] == int(cand[i].size()))
                                idx[i--] = 0;
                            if (i < 0)
                                break;
                        }
                    }
                    else {
                        for (int k = 0 ; k < _opt.samples && ! good ; ++k) {
                            vector<int> pick(m);
                            for (int i = 0 ; i < m ; ++i)
                                pick[i] = cand[i][_rng.below(cand[i].size())];
                            if (valid(pick))
                                good = pick;
                            else
                                tried.push_back(std::move(pick));
                        }
                    }

                    if (good) {
                        for (int i = 0 ; i < m ; ++i)
                            y[lp[i]] = (*good)[i];
                        for (int i = 0 ; i < m ; ++i) {
                            auto priv = privates(*good, i, nullptr);
                            for (int v : _children[lp[i]])
                                allowed_p[v] = priv & allowed[v];
                        }
                        return std::nullopt;
                    }

                    // no valid transversal: find a problem set X for some edge and
                    // use it to enlarge Y_uv
                    for (int i = 0 ; i < m ; ++i) {
                        int u = lp[i];
                        if (_children[u].empty())
                            continue;
                        long long need = std::max<long long>(1,
                                (long long) std::ceil(double(cand[i].size()) / double(ls.size()) - snap_tolerance));
                        auto attempt = [&] (const vector<int> & pick) -> optional<Step> {
                            BitSet c_other(_g.size(ss));
                            for (int j = 0 ; j < m ; ++j)
                                if (j != i)
                                    c_other |= nb(sp, pick[j]);
                            for (int v : _children[u]) {
                                vector<int> x_set;
                                for (int cnd : cand[i]) {
                                    BitSet priv = difference(nb(sp, cnd), c_other);
                                    if (BitSet::count_and(priv, allowed[v]) < cut)
                                        x_set.push_back(cnd);
                                }
                                if ((long long) x_set.size() < need)
                                    continue;
                                if (auto step = augment(v, x_set, c, c_other, xu[v], augmentations))
                                    return step;
                            }
                            return std::nullopt;
                        };
                        if (exhaustive) {
                            vector<int> idx(m, 0), pick(m);
                            while (true) {
                                for (int j = 0 ; j < m ; ++j)
                                    pick[j] = cand[j][idx[j]];
                                if (auto step = attempt(pick))
                                    return step;
                                // advance every coordinate except i
                                int j = m - 1;
                                for ( ; j >= 0 ; --j) {
                                    if (j == i)
                                        continue;
                                    if (++idx[j] < int(cand[j].size()))
                                        break;
                                    idx[j] = 0;
                                }
                                if (j < 0)
                                    break;
                            }
                        }
                        else
                            for (auto & pick : tried)
                                if (auto step = attempt(pick))
                                    return step;
                    }
                    return std::nullopt;
                }

                auto augment(int v, const vector<int> & x_set, const BitSet & c, const BitSet & c_other,
                        const BitSet & xv, int & augmentations) -> optional<Step>
                {
                    int u = _parent[v], s = _level[v];
                    Side su = side(u);
                    BitSet raw = (c | c_other) & _block_set[v];
                    raw |= xv;
                    BitSet new_y = _ys[v];
                    if (! raw.is_subset_of(_ys[v]))
                        new_y |= raw;
                    else {
                        int z = difference(_block_set[v], _ys[v]).first();
                        if (z == -1)
                            return std::nullopt;
                        new_y.set(z);
                    }
                    BitSet new_x = _xs[v] | BitSet::from_indices(_g.size(su), x_set);

                    long long cut = count_cutoff_log(log_p(s));
                    double lf = log_f(s);
                    int y_count = new_y.count();
                    if (y_count > int(_block[v].size()) / 2 || ! within_f(y_count, new_x.count(), lf))
                        return std::nullopt;
                    BitSet rest = difference(_block_set[v], new_y);
                    bool ok = true;
                    new_x.for_each([&] (int a) {
                        if (BitSet::count_and(nb(su, a), rest) >= cut)
                            ok = false;
                    });
                    if (! ok)
                        return std::nullopt;

                    _ys[v] = new_y;
                    _xs[v] = trimmed(new_x, ceil_div(y_count, lf));
                    ++augmentations;
                    if (auto step = check_edge(v))
                        return step;
                    return Step{Step::Kind::augmented, {}, {}, "augmented"};
                }

            public:
                LevelEngine(const OrderedBigraph & g, const TreePattern & tp, const MainConstants & c,
                        const SparseOptions & opt) :
                    _g(g),
                    _tp(tp),
                    _c(c),
                    _opt(opt),
                    _rng(opt.seed),
                    _log_t(std::log(double(c.t))),
                    _log_n(std::log(double(c.n))),
                    _log_eps(std::log(c.eps)),
                    _t(tp.size()),
                    _r(c.r),
                    _root(tp.centre()),
                    _parent(tp.parents(_root)),
                    _level(tp.size()),
                    _levels(tp.levels(_root)),
                    _children(tp.size())
                {
                    for (int v = 0 ; v < _t ; ++v) {
                        _level[v] = tp.distance(_root, v);
                        if (_parent[v] != -1)
                            _children[_parent[v]].push_back(v);
                    }
                    _a[0] = iota_vector(g.n1());
                    _a[1] = iota_vector(g.n2());
                }

                int descents = 0;
                int augmentations = 0;

                auto run() -> optional<Step>
                {
                    for (int round = 0 ; round < _opt.max_rounds ; ++round) {
                        VertexSetPair whole{_a[0], _a[1]};
                        if (is_anticomplete(_g, whole)
                                && (long long) _a[0].size() >= _c.bound && (long long) _a[1].size() >= _c.bound)
                            return Step{Step::Kind::pair, std::move(whole), {}, "anticomplete-state"};

                        if (_x >= limit() - _c.k[_r - 1] - snap_tolerance) {
                            if ((long long) _a[0].size() < _c.bound)
                                return std::nullopt;
                            vector<int> x_set(_a[0].begin(), _a[0].begin() + _c.bound);
                            BitSet covered(_g.n2());
                            for (int a : x_set)
                                covered |= _g.row(a);
                            vector<int> rest;
                            for (int b : _a[1])
                                if (! covered.test(b))
                                    rest.push_back(b);
                            if ((long long) rest.size() < _c.bound)
                                return std::nullopt;
                            return Step{Step::Kind::pair, VertexSetPair{x_set, rest}, {}, "x-limit"};
                        }

                        if (! build_blocks())
                            return std::nullopt;
                        if (auto step = build_xy()) {
                            if (step->kind == Step::Kind::descended) {
                                ++descents;
                                continue;
                            }
                            return step;
                        }

                        bool descended = false;
                        for ( ; round < _opt.max_rounds ; ++round) {
                            auto step = levels_step(augmentations);
                            if (! step)
                                return std::nullopt;
                            if (step->kind == Step::Kind::augmented)
                                continue;
                            if (step->kind == Step::Kind::descended) {
                                ++descents;
                                descended = true;
                                break;
                            }
                            return step;
                        }
                        if (! descended)
                            return std::nullopt;
                    }
                    return std::nullopt;
                }
        };

        auto star_case(const OrderedBigraph & host, const TreePattern & tp, SparseOutcome & out) -> bool
        {
            int centre = tp.centre();
            Side cs = tp.side(centre), ls = opposite(cs);
            int d = tp.size() - 1;
            for (int h = 0 ; h < host.size(cs) ; ++h) {
                if (host.degree(cs, h) < d)
                    continue;
                vector<int> leaves;
                for (int z = host.neighbours(cs, h).first() ; int(leaves.size()) < d ; z = host.neighbours(cs, h).find_next(z + 1))
                    leaves.push_back(z);
                Embedding e;
                if (cs == Side::rows) {
                    e.row_map = {h};
                    e.col_map = leaves;
                }
                else {
                    e.row_map = leaves;
                    e.col_map = {h};
                }
                out.kind = SparseOutcome::Kind::found;
                out.embedding = std::move(e);
                out.route = "star-found";
                return true;
            }

            int n = std::min(host.n1(), host.n2());
            vector<int> centre_set = iota_vector(n / d);
            BitSet covered(host.size(ls));
            for (int h : centre_set)
                covered |= host.neighbours(cs, h);
            vector<int> other;
            for (int z = 0 ; z < host.size(ls) ; ++z)
                if (! covered.test(z))
                    other.push_back(z);
            if ((long long) centre_set.size() < out.constants.bound || (long long) other.size() < out.constants.bound)
                return false;
            out.kind = SparseOutcome::Kind::pair;
            out.pair = oriented_pair(cs, std::move(centre_set), std::move(other));
            out.route = "star";
            return true;
        }
    }

    auto embed_or_pair_sparse(const OrderedBigraph & host, const TreePattern & pattern,
            const SparseOptions & options) -> SparseOutcome
    {
        int t = pattern.size();
        int n = std::min(host.n1(), host.n2());
        if (t < 2)
            throw PreconditionViolated("embed_or_pair_sparse: pattern needs at least 2 vertices");
        if (n < 2)
            throw PreconditionViolated("embed_or_pair_sparse: host needs at least 2 vertices on each side");

        SparseOutcome out;
        int r = pattern.radius();
        out.constants = options.K_override ? constants_with_K(t, r, n, *options.K_override) : compute_constants(t, r, n);
        out.degree_cap_holds = degree_cap_holds(host, double(n) / (4.0 * t * t));

        auto probe = [&] () {
            if (auto e = contains(host, pattern.graph())) {
                out.kind = SparseOutcome::Kind::found;
                out.embedding = std::move(*e);
                out.route = "probe";
                return true;
            }
            return false;
        };

        if (! out.degree_cap_holds && options.probe_on_cap_violation && probe())
            return out;

        if (r == 1) {
            if (star_case(host, pattern, out))
                return out;
        }
        else {
            LevelEngine engine(host, pattern, out.constants, options);
            auto step = engine.run();
            out.descents = engine.descents;
            out.augmentations = engine.augmentations;
            if (step) {
                if (step->kind == Step::Kind::found) {
                    out.kind = SparseOutcome::Kind::found;
                    out.embedding = std::move(step->embedding);
                }
                else {
                    out.kind = SparseOutcome::Kind::pair;
                    out.pair = std::move(step->pair);
                }
                out.route = step->route;
                if (check_sparse_outcome(host, pattern, out))
                    return out;
            }
        }

        if (auto p = greedy_anticomplete_pair(host, out.constants.bound, out.constants.bound)) {
            out.kind = SparseOutcome::Kind::pair;
            out.pair = std::move(*p);
            out.embedding.reset();
            out.route = "fallback";
            return out;
        }
        if (out.degree_cap_holds && probe())
            return out;
        throw HypothesisViolated("embed_or_pair_sparse: no anticomplete pair of size " + std::to_string(out.constants.bound)
                + " found and the pattern does not embed; the degree cap n/(4t^2) = "
                + std::to_string(double(n) / (4.0 * t * t)) + (out.degree_cap_holds ? " holds" : " fails"));
    }

    auto check_sparse_outcome(const OrderedBigraph & host, const TreePattern & pattern, const SparseOutcome & outcome) -> bool
    {
        if (outcome.kind == SparseOutcome::Kind::found)
            return outcome.embedding && verify_embedding(host, pattern.graph(), *outcome.embedding);
        auto & p = outcome.pair;
        return valid_pair(host, p) && is_anticomplete(host, p)
            && (long long) p.z1.size() >= outcome.constants.bound && (long long) p.z2.size() >= outcome.constants.bound;
    }
}
