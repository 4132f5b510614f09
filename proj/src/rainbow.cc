#include <ppk/rainbow.hh>

#include <ppk/errors.hh>
#include <ppk/thresholds.hh>

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <set>

using std::vector;

namespace ppk
{
    namespace
    {
        constexpr double minus_infinity = -std::numeric_limits<double>::infinity();

        auto to_bitset(int size, const vector<int> & v) -> BitSet
        {
            return BitSet::from_indices(size, v);
        }

        auto contains_sorted(const vector<int> & v, int x) -> bool
        {
            return std::binary_search(v.begin(), v.end(), x);
        }

        /// Distances from root over the vertices it reaches.
        auto distances(const Shape & s, int root) -> std::map<int, int>
        {
            std::map<int, int> dist;
            if (! s.has(root))
                return dist;
            std::deque<int> queue{ root };
            dist[root] = 0;
            while (! queue.empty()) {
                int u = queue.front();
                queue.pop_front();
                for (int v : s.neighbours(u))
                    if (! dist.count(v)) {
                        dist[v] = dist[u] + 1;
                        queue.push_back(v);
                    }
            }
            return dist;
        }

        auto oriented_edge(int a, int b) -> std::pair<int, int>
        {
            return a < 0 ? std::pair{ a, b } : std::pair{ b, a };
        }

        /// The same blocks seen from the transposed host, indices negated.
        auto transposed_parade(const OrientedHosts & hosts, const Parade & A, bool transposed) -> Parade
        {
            vector<int> indices;
            vector<BitSet> blocks;
            for (int i : A.indices()) {
                indices.push_back(-i);
                blocks.push_back(A.block(i));
            }
            return Parade(hosts.get(! transposed), std::move(indices), std::move(blocks));
        }

        /// ceil-free version of the band length for (k, c), as a double that may be infinite.
        auto band_length(double k, double c) -> double
        {
            double colours = double(snap_floor(2.0 * k / c + 1.0));
            double m = colours * (k - 1.0) + 1.0;
            if (k == 1.0)
                return 1.0;
            double log_cols = std::log(k - 1.0) + m * std::log(colours);
            double cols = log_cols > 700.0 ? std::numeric_limits<double>::infinity() : std::exp(log_cols) + 1.0;
            return std::max(m, cols);
        }

        /// ln of the ratio the band step guarantees on k' + k' blocks: (8k)^-(1 + 2(2k')^2 k / c).
        auto log_band_beta(double k, double k_prime, double c) -> double
        {
            if (std::isinf(k_prime))
                return minus_infinity;
            return -(1.0 + 8.0 * k_prime * k_prime * k / c) * std::log(8.0 * k);
        }

        /// gamma = beta gamma' / max(8k^2, 16); the 16 keeps |C_h| >= gamma n1^-c |A_h| for k = 1.
        auto log_gamma_step(double k, double log_beta, double log_gamma_inner) -> double
        {
            return log_beta - std::log(std::max(8.0 * k * k, 16.0)) + log_gamma_inner;
        }

        auto ratio_at_least(long long count, double size, double log_ratio) -> bool
        {
            return count >= count_cutoff_log(log_ratio + std::log(size));
        }
    }

    auto Shape::has(int i) const -> bool
    {
        return std::find(vertices.begin(), vertices.end(), i) != vertices.end();
    }

    auto Shape::neighbours(int i) const -> vector<int>
    {
        vector<int> out;
        for (auto [a, b] : edges) {
            if (a == i)
                out.push_back(b);
            else if (b == i)
                out.push_back(a);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    auto Shape::radius_from(int root) const -> int
    {
        auto dist = distances(*this, root);
        if (dist.empty())
            return -1;
        int best = 0;
        for (auto [v, d] : dist)
            best = std::max(best, d);
        return best;
    }

    auto Shape::component_without(int removed, int start) const -> Shape
    {
        Shape rest;
        for (int v : vertices)
            if (v != removed)
                rest.vertices.push_back(v);
        for (auto e : edges)
            if (e.first != removed && e.second != removed)
                rest.edges.push_back(e);
        auto dist = distances(rest, start);
        Shape out;
        for (auto [v, d] : dist)
            out.vertices.push_back(v);
        for (auto e : rest.edges)
            if (dist.count(e.first))
                out.edges.push_back(e);
        return out;
    }

    auto Shape::negated() const -> Shape
    {
        Shape out;
        for (int v : vertices)
            out.vertices.push_back(-v);
        std::sort(out.vertices.begin(), out.vertices.end());
        for (auto [a, b] : edges)
            out.edges.emplace_back(-b, -a);
        std::sort(out.edges.begin(), out.edges.end());
        return out;
    }

    auto single_vertex_shape(int i) -> Shape
    {
        return Shape{ { i }, {} };
    }

    auto is_shape(const Shape & s) -> bool
    {
        if (s.vertices.empty())
            return false;
        std::set<int> vs(s.vertices.begin(), s.vertices.end());
        if (vs.size() != s.vertices.size() || vs.count(0))
            return false;
        if (s.edges.size() + 1 != s.vertices.size())
            return false;
        std::set<std::pair<int, int>> es;
        for (auto [a, b] : s.edges) {
            if (! (a < 0 && b > 0) || ! vs.count(a) || ! vs.count(b))
                return false;
            if (! es.insert({ a, b }).second)
                return false;
        }
        // |E| = |V| - 1 and connected makes it a tree
        return distances(s, s.vertices.front()).size() == s.vertices.size();
    }

    auto all_shapes(const vector<int> & J, int root, int max_radius) -> vector<Shape>
    {
        if (std::find(J.begin(), J.end(), root) == J.end())
            throw PreconditionViolated("all_shapes: root is not in J");
        if (J.size() > 20)
            throw TooLarge("all_shapes: more than 20 indices");
        vector<int> others;
        for (int i : J)
            if (i != root)
                others.push_back(i);

        vector<Shape> out;
        for (unsigned mask = 0 ; mask < (1u << others.size()) ; ++mask) {
            vector<int> vs{ root };
            for (unsigned b = 0 ; b < others.size() ; ++b)
                if (mask & (1u << b))
                    vs.push_back(others[b]);
            std::sort(vs.begin(), vs.end());
            vector<std::pair<int, int>> pairs;
            for (int a : vs)
                for (int b : vs)
                    if (a < 0 && b > 0)
                        pairs.emplace_back(a, b);
            std::size_t need = vs.size() - 1;
            if (pairs.size() < need)
                continue;

            // every need-subset of the candidate edges, in lexicographic order
            vector<std::size_t> pick(need);
            for (std::size_t t = 0 ; t < need ; ++t)
                pick[t] = t;
            while (true) {
                Shape s{ vs, {} };
                for (auto t : pick)
                    s.edges.push_back(pairs[t]);
                std::sort(s.edges.begin(), s.edges.end());
                if (is_shape(s) && s.radius_from(root) <= max_radius)
                    out.push_back(std::move(s));

                std::size_t t = need;
                while (t > 0 && pick[t - 1] == pairs.size() - need + t - 1)
                    --t;
                if (t == 0)
                    break;
                ++pick[t - 1];
                for (std::size_t u = t ; u < need ; ++u)
                    pick[u] = pick[u - 1] + 1;
            }
        }
        return out;
    }

    auto random_shape(const vector<int> & J, int root, int max_radius, Rng & rng) -> Shape
    {
        if (std::find(J.begin(), J.end(), root) == J.end())
            throw PreconditionViolated("random_shape: root is not in J");
        Shape s = single_vertex_shape(root);
        std::map<int, int> depth{ { root, 0 } };
        int steps = int(rng.below(J.size()));
        for (int step = 0 ; step < steps ; ++step) {
            vector<std::pair<int, int>> options;
            for (auto [u, d] : depth)
                if (d < max_radius)
                    for (int x : J)
                        if (! depth.count(x) && (x < 0) != (u < 0))
                            options.emplace_back(u, x);
            if (options.empty())
                break;
            auto [u, x] = options[rng.below(options.size())];
            depth[x] = depth[u] + 1;
            s.vertices.push_back(x);
            s.edges.push_back(oriented_edge(u, x));
        }
        std::sort(s.vertices.begin(), s.vertices.end());
        std::sort(s.edges.begin(), s.edges.end());
        return s;
    }

    OrientedHosts::OrientedHosts(OrderedBigraph host) :
        g(std::move(host)),
        gt(g.transpose())
    {
    }

    auto rainbow_constants(int r, int k, double c) -> RainbowConstants
    {
        if (r < 0 || k < 1 || ! (c > 0.0 && c <= 1.0))
            throw PreconditionViolated("rainbow_constants: need r >= 0, k >= 1 and 0 < c <= 1");
        RainbowConstants out;
        out.k_at_level.assign(r + 1, 0.0);
        out.k_at_level[r] = k;
        for (int q = r ; q >= 1 ; --q)
            out.k_at_level[q - 1] = band_length(out.k_at_level[q], c);
        out.K = out.k_at_level[0];
        double log_gamma = 0.0;
        for (int q = 1 ; q <= r ; ++q) {
            double kq = out.k_at_level[q];
            log_gamma = log_gamma_step(kq, log_band_beta(kq, out.k_at_level[q - 1], c), log_gamma);
        }
        out.log_gamma = log_gamma;
        return out;
    }

    auto rainbow(const OrientedHosts & hosts, const Parade & A, int r, int k, double c,
            const SearchOptions & options) -> RainbowOutcome
    {
        if (r < 0 || k < 1 || ! (c > 0.0 && c <= 1.0))
            throw PreconditionViolated("rainbow: need r >= 0, k >= 1 and 0 < c <= 1");
        bool transposed;
        if (&A.host() == &hosts.g)
            transposed = false;
        else if (&A.host() == &hosts.gt)
            transposed = true;
        else
            throw PreconditionViolated("rainbow: the parade is not on either orientation of the host");
        const auto & g = hosts.get(transposed);

        auto [n_neg, n_pos] = A.length();
        if (r == 0) {
            if (n_neg < k || n_pos < k)
                throw ParadeTooShort("rainbow: fewer than k blocks on a side", k);
            auto cert = std::make_shared<PanarborealCertificate>();
            cert->r = 0;
            cert->transposed = transposed;
            cert->J = A.indices();
            cert->levels = { A };
            for (int h : A.negative())
                cert->C[h] = A.block(h).to_indices();
            RainbowOutcome out;
            out.kind = RainbowOutcome::Kind::certificate;
            out.certificate = std::move(cert);
            out.log_gamma = 0.0;
            return out;
        }

        // the band size the recursive call is asked for, capped by what the parade holds
        double k_theory = band_length(k, c);
        int available = std::min(n_neg, n_pos);
        int k_inner = std::max(k, int(std::min<double>(k_theory, available)));

        auto inner = rainbow(hosts, transposed_parade(hosts, A, transposed), r - 1, k_inner, c, options);

        if (inner.kind == RainbowOutcome::Kind::big_anticomplete) {
            RainbowOutcome out;
            out.kind = RainbowOutcome::Kind::big_anticomplete;
            out.h = -inner.j;
            out.j = -inner.h;
            out.x = inner.y;
            out.y = inner.x;
            out.linear = inner.linear == RainbowOutcome::Linear::rows ? RainbowOutcome::Linear::cols : RainbowOutcome::Linear::rows;
            out.log_gamma = inner.log_gamma;
            out.exact = inner.exact;
            return out;
        }
        if (inner.kind == RainbowOutcome::Kind::high_degree) {
            RainbowOutcome out = inner;
            out.h = -inner.h;
            out.j = -inner.j;
            return out;
        }

        const auto & sub = *inner.certificate;
        vector<int> L;
        for (int i : sub.J)
            L.push_back(-i);
        std::sort(L.begin(), L.end());

        // k_inner blocks per side, nearest the middle of the index range
        vector<int> chosen;
        {
            vector<int> neg, pos;
            for (int i : L)
                (i < 0 ? neg : pos).push_back(i);
            int take = std::min({ k_inner, int(neg.size()), int(pos.size()) });
            chosen.insert(chosen.end(), neg.end() - take, neg.end());
            chosen.insert(chosen.end(), pos.begin(), pos.begin() + take);
        }

        const Parade & top = sub.levels[r - 1];
        vector<BitSet> primed_blocks;
        for (int i : chosen)
            primed_blocks.push_back(i < 0 ? top.block(-i) : to_bitset(g.n2(), sub.C.at(-i)));
        Parade primed(g, chosen, std::move(primed_blocks));

        auto co = combined_cover(primed, k, c, options);
        auto co_check = check_combined(primed, k, c, co);
        if (! co_check.ok)
            throw CertificateBroken("rainbow: level " + std::to_string(r) + " cover step: " + co_check.failure);

        RainbowOutcome out;
        out.log_gamma = log_gamma_step(k, co.log_beta, inner.log_gamma);
        out.exact = inner.exact && co.exact;

        if (co.kind == CombinedOutcome::Kind::anticomplete) {
            out.kind = RainbowOutcome::Kind::big_anticomplete;
            out.h = co.witness->h;
            out.j = co.witness->j;
            out.x = co.witness->x;
            out.y = co.witness->y;
            out.linear = RainbowOutcome::Linear::rows;
            return out;
        }
        if (co.kind == CombinedOutcome::Kind::high_degree) {
            const auto & hd = *co.high_degree;
            out.kind = RainbowOutcome::Kind::high_degree;
            out.h = hd.j;
            out.j = hd.h;
            out.v = hd.v;
            out.neighbours = BitSet::count_and(g.col(hd.v), A.block(hd.h));
            return out;
        }

        const auto & st = *co.structure;
        auto cert = std::make_shared<PanarborealCertificate>();
        cert->r = r;
        cert->transposed = transposed;
        cert->J = st.J;
        for (int q = 0 ; q < r ; ++q) {
            vector<BitSet> blocks;
            for (int i : st.J)
                blocks.push_back(sub.levels[q].block(-i));
            cert->levels.emplace_back(g, st.J, std::move(blocks));
        }
        {
            vector<BitSet> blocks;
            for (int i : st.J)
                blocks.push_back(i < 0 ? to_bitset(g.n1(), st.cover.B.at(i)) : sub.levels[r - 1].block(-i));
            cert->levels.emplace_back(g, st.J, std::move(blocks));
        }
        cert->C = st.cover.C;
        cert->D = st.cover.D;
        cert->inner = inner.certificate;

        out.kind = RainbowOutcome::Kind::certificate;
        out.certificate = std::move(cert);
        return out;
    }

    namespace
    {
        auto materialize_into(const PanarborealCertificate & cert, const Shape & shape, int h, int w,
                const std::string & path, std::map<int, int> & vertex) -> void
        {
            vertex[h] = w;
            const auto & g = cert.levels.front().host();
            for (int j : shape.neighbours(h)) {
                std::string where = path + " -> (" + std::to_string(h) + ", " + std::to_string(j) + ")";
                auto it = cert.D.find({ h, j });
                if (it == cert.D.end() || ! cert.inner)
                    throw CertificateBroken("materialize_tree: no cover set at" + where);
                int ws = -1;
                for (int u : it->second)
                    if (g.adjacent(w, u)) {
                        ws = u;
                        break;
                    }
                if (ws < 0)
                    throw CertificateBroken("materialize_tree: cover set misses w at" + where);
                const auto & inner = *cert.inner;
                if (! inner.C.count(-j) || ! contains_sorted(inner.C.at(-j), ws))
                    throw CertificateBroken("materialize_tree: cover vertex outside the inner C set at" + where);

                Shape branch = shape.component_without(h, j).negated();
                std::map<int, int> sub;
                materialize_into(inner, branch, -j, ws, where, sub);
                for (auto [i, v] : sub)
                    vertex[-i] = v;
            }
        }
    }

    auto materialize_tree(const PanarborealCertificate & cert, const Shape & shape, int h, int w) -> RainbowTree
    {
        if (h >= 0 || ! is_shape(shape) || ! shape.has(h))
            throw PreconditionViolated("materialize_tree: need a shape containing the negative root");
        for (int i : shape.vertices)
            if (! contains_sorted(cert.J, i))
                throw PreconditionViolated("materialize_tree: shape index " + std::to_string(i) + " is not in J");
        if (shape.radius_from(h) > cert.r)
            throw PreconditionViolated("materialize_tree: shape radius exceeds the certificate depth");
        if (! cert.C.count(h) || ! contains_sorted(cert.C.at(h), w))
            throw PreconditionViolated("materialize_tree: w is not in C_h");

        RainbowTree tree;
        tree.shape = shape;
        materialize_into(cert, shape, h, w, "root " + std::to_string(h), tree.vertex);
        return tree;
    }

    auto check_rainbow_tree(const PanarborealCertificate & cert, const RainbowTree & tree, int h, int w) -> std::string
    {
        const auto & s = tree.shape;
        if (! is_shape(s))
            return "not a shape";
        if (tree.vertex.size() != s.vertices.size())
            return "vertex map does not match the shape";
        for (int i : s.vertices)
            if (! tree.vertex.count(i) || ! contains_sorted(cert.J, i))
                return "shape index " + std::to_string(i) + " unmapped or outside J";
        if (! tree.vertex.count(h) || tree.vertex.at(h) != w)
            return "root not at w";

        const auto & A0 = cert.levels.front();
        const auto & g = A0.host();
        // rainbow: one vertex in each block used
        for (auto [i, v] : tree.vertex)
            if (! A0.block(i).test(v))
                return "vertex of index " + std::to_string(i) + " outside its block";

        // induced with the shape's edges
        std::set<std::pair<int, int>> edges(s.edges.begin(), s.edges.end());
        for (auto [a, va] : tree.vertex)
            for (auto [b, vb] : tree.vertex)
                if (a < 0 && b > 0 && g.adjacent(va, vb) != bool(edges.count({ a, b })))
                    return "not induced at (" + std::to_string(a) + ", " + std::to_string(b) + ")";

        auto dist = distances(s, h);
        int r = cert.r;
        for (auto [i, v] : tree.vertex) {
            int d = dist.at(i);
            if (d > r)
                return "radius exceeds the depth";
            if (! cert.levels[r - d].block(i).test(v))
                return "vertex of index " + std::to_string(i) + " outside level " + std::to_string(r - d);
        }
        for (auto [i, v] : tree.vertex) {
            if (i == h)
                continue;
            int d = dist.at(i);
            int q = r + 1 - d;
            int parent = 0;
            for (int u : s.neighbours(i))
                if (dist.at(u) == d - 1)
                    parent = u;
            const auto & level = cert.levels[q];
            const auto & nb = g.neighbours(side_of_index(i), v);
            for (int x : cert.J) {
                if ((x < 0) == (i < 0))
                    continue;
                if (! nb.intersects(level.block(x)))
                    continue;
                if (x != parent || ! level.block(x).test(tree.vertex.at(parent)))
                    return "vertex of index " + std::to_string(i) + " sees level " + std::to_string(q)
                        + " block " + std::to_string(x) + " away from its parent";
            }
        }
        return "";
    }

    namespace
    {
        auto check_structure(const PanarborealCertificate & cert) -> std::string
        {
            if (int(cert.levels.size()) != cert.r + 1)
                return "level count differs from r + 1";
            for (const auto & level : cert.levels)
                if (level.indices() != cert.J)
                    return "level indices differ from J";
            for (int q = 1 ; q <= cert.r ; ++q)
                for (int i : cert.J)
                    if (! cert.levels[q].block(i).is_subset_of(cert.levels[q - 1].block(i)))
                        return "levels not nested at index " + std::to_string(i);
            for (int h : cert.levels.front().negative()) {
                if (! cert.C.count(h) || cert.C.at(h).empty())
                    return "missing C set for " + std::to_string(h);
                for (int v : cert.C.at(h))
                    if (! cert.levels[cert.r].block(h).test(v))
                        return "C_h outside A^r_h for h = " + std::to_string(h);
            }
            if (cert.r == 0)
                return "";
            if (! cert.inner || cert.inner->r != cert.r - 1)
                return "missing inner certificate";
            for (int h : cert.levels.front().negative())
                for (int j : cert.levels.front().positive()) {
                    auto it = cert.D.find({ h, j });
                    if (it == cert.D.end())
                        return "missing D set";
                    if (! cert.inner->C.count(-j))
                        return "inner certificate lacks C for " + std::to_string(-j);
                    for (int u : it->second)
                        if (! contains_sorted(cert.inner->C.at(-j), u))
                            return "D set outside the inner C set";
                }
            return check_structure(*cert.inner);
        }
    }

    auto check_certificate(const PanarborealCertificate & cert, std::uint64_t seed) -> CertificateCheck
    {
        CertificateCheck out;
        auto fail = [&] (std::string why) {
            if (out.ok) {
                out.ok = false;
                out.failure = std::move(why);
            }
        };
        if (auto s = check_structure(cert) ; ! s.empty()) {
            fail(s);
            return out;
        }

        Rng rng(seed);
        bool exhaustive_shapes = cert.J.size() <= 8;
        for (int h : cert.levels.front().negative()) {
            vector<Shape> shapes;
            if (exhaustive_shapes)
                shapes = all_shapes(cert.J, h, cert.r);
            else
                for (int t = 0 ; t < 100 ; ++t)
                    shapes.push_back(random_shape(cert.J, h, cert.r, rng));

            vector<int> ws = cert.C.at(h);
            if (ws.size() > 8) {
                out.exhaustive = false;
                vector<int> picked{ ws.front(), ws.back() };
                while (picked.size() < 8)
                    picked.push_back(ws[rng.below(ws.size())]);
                ws = picked;
            }
            for (const auto & shape : shapes) {
                ++out.shapes_checked;
                for (int w : ws) {
                    ++out.trees_checked;
                    try {
                        auto tree = materialize_tree(cert, shape, h, w);
                        if (auto why = check_rainbow_tree(cert, tree, h, w) ; ! why.empty()) {
                            fail(why);
                            return out;
                        }
                    }
                    catch (const CertificateBroken & e) {
                        fail(e.what());
                        return out;
                    }
                }
            }
        }
        if (! exhaustive_shapes)
            out.exhaustive = false;
        return out;
    }

    auto check_rainbow_outcome(const Parade & A, const RainbowOutcome & o, int k, double c) -> std::string
    {
        const auto & g = A.host();
        double ln_n1 = std::log(double(g.n1())), ln_n2 = std::log(double(g.n2()));
        double lg = o.log_gamma;
        switch (o.kind) {
            case RainbowOutcome::Kind::big_anticomplete: {
                if (o.h >= 0 || o.j <= 0 || ! A.has(o.h) || ! A.has(o.j))
                    return "pair indices are not a negative and a positive index of the parade";
                for (int v : o.x)
                    if (! A.block(o.h).test(v))
                        return "X outside A_h";
                for (int v : o.y)
                    if (! A.block(o.j).test(v))
                        return "Y outside A_j";
                BitSet y = to_bitset(g.n2(), o.y);
                for (int v : o.x)
                    if (g.row(v).intersects(y))
                        return "X and Y are not anticomplete";
                double lx = o.linear == RainbowOutcome::Linear::rows ? lg : lg - c * ln_n1;
                double ly = o.linear == RainbowOutcome::Linear::rows ? lg - c * ln_n2 : lg;
                if (! ratio_at_least(o.x.size(), A.block_size(o.h), lx))
                    return "|X| below its bound";
                if (! ratio_at_least(o.y.size(), A.block_size(o.j), ly))
                    return "|Y| below its bound";
                return "";
            }
            case RainbowOutcome::Kind::high_degree: {
                if (! A.has(o.h) || ! A.has(o.j) || (o.h < 0) == (o.j < 0))
                    return "high-degree indices are not of opposite sign";
                if (! A.block(o.h).test(o.v))
                    return "v outside A_h";
                int count = BitSet::count_and(g.neighbours(side_of_index(o.h), o.v), A.block(o.j));
                if (count != o.neighbours)
                    return "reported neighbour count is wrong";
                if (! ratio_at_least(count, A.block_size(o.j), lg))
                    return "v has fewer than gamma |A_j| neighbours";
                return "";
            }
            case RainbowOutcome::Kind::certificate: {
                if (! o.certificate)
                    return "missing certificate";
                const auto & cert = *o.certificate;
                if (&cert.levels.front().host() != &g)
                    return "certificate is on the other orientation";
                int neg = 0, pos = 0;
                for (int i : cert.J) {
                    if (! A.has(i))
                        return "J is not inside the parade's indices";
                    (i < 0 ? neg : pos) += 1;
                }
                if (neg < k || pos < k)
                    return "fewer than k indices of J on a side";
                auto check = check_certificate(cert);
                if (! check.ok)
                    return "certificate: " + check.failure;
                for (int i : cert.J) {
                    if (! cert.levels.front().block(i).is_subset_of(A.block(i)))
                        return "A^0 not inside A at " + std::to_string(i);
                    if (! ratio_at_least(cert.levels.back().block_size(i), A.block_size(i), lg))
                        return "|A^r_i| below gamma |A_i| at " + std::to_string(i);
                }
                for (auto & [h, C] : cert.C)
                    if (! ratio_at_least(C.size(), A.block_size(h), lg - c * ln_n1))
                        return "|C_h| below gamma n1^-c |A_h| at " + std::to_string(h);
                return "";
            }
        }
        return "unknown outcome";
    }

    auto to_string(LinearOutcome::Kind kind) -> std::string
    {
        return kind == LinearOutcome::Kind::pair ? "pair" : "found";
    }

    namespace
    {
        auto set_bounds(LinearOutcome & out, const OrderedBigraph & host) -> void
        {
            double n_lin = out.linear == RainbowOutcome::Linear::rows ? host.n1() : host.n2();
            double n_pow = out.linear == RainbowOutcome::Linear::rows ? host.n2() : host.n1();
            out.bound_linear = count_cutoff_log(out.log_eps + std::log(n_lin));
            out.bound_power = count_cutoff_log(out.log_eps + (1.0 - out.c) * std::log(n_pow));
        }

        auto needs(const LinearOutcome & out) -> std::pair<long long, long long>
        {
            return out.linear == RainbowOutcome::Linear::rows ? std::pair{ out.bound_linear, out.bound_power }
                                                              : std::pair{ out.bound_power, out.bound_linear };
        }

        auto fallback_pair(LinearOutcome & out, const OrderedBigraph & host) -> void
        {
            out.route = "fallback";
            out.kind = LinearOutcome::Kind::pair;
            for (auto side : { RainbowOutcome::Linear::rows, RainbowOutcome::Linear::cols }) {
                out.linear = side;
                set_bounds(out, host);
                auto [need1, need2] = needs(out);
                if (auto p = greedy_anticomplete_pair(host, need1, need2)) {
                    out.pair = *p;
                    return;
                }
            }
            throw HypothesisViolated("embed_or_pair_linear: no anticomplete pair meets the bounds");
        }
    }

    auto embed_or_pair_linear(const OrderedBigraph & host, const TreePattern & pattern, double c,
            const LinearOptions & options) -> LinearOutcome
    {
        if (! (c > 0.0 && c <= 1.0))
            throw PreconditionViolated("embed_or_pair_linear: need 0 < c <= 1");
        if (pattern.size() < 2)
            throw PreconditionViolated("embed_or_pair_linear: the pattern needs at least two vertices");

        LinearOutcome out;
        out.c = c;
        int w1 = pattern.best_root_on(Side::rows);
        out.r = pattern.radius_from(w1);
        out.k = std::max(pattern.h1(), pattern.h2());
        out.constants = rainbow_constants(out.r, out.k, c);
        out.log_eps = out.constants.log_gamma - std::log(2.0 * out.constants.K);
        set_bounds(out, host);

        double eps = std::exp(out.log_eps);
        out.degree_cap_holds = host.max_degree(Side::rows) < eps * host.n2()
            && host.max_degree(Side::cols) < eps * host.n1();

        if (host.edge_count() == 0) {
            out.route = "edgeless";
            out.pair = VertexSetPair{ iota_vector(host.n1()), iota_vector(host.n2()) };
            return out;
        }
        if (std::min(host.n1(), host.n2()) <= 2 * out.k)
            throw PatternTooLarge("embed_or_pair_linear: a host side has at most 2k vertices");

        if (! out.degree_cap_holds && options.probe_on_cap_violation)
            if (auto e = contains(host, pattern.graph())) {
                out.kind = LinearOutcome::Kind::found;
                out.embedding = *e;
                out.route = "probe";
                return out;
            }

        int side_limit = (std::min(host.n1(), host.n2()) - 1) / 2;
        int K = options.K_override.value_or(
            int(std::min<double>(out.constants.K, std::min(side_limit, 2 * out.k))));
        K = std::max(K, out.k);
        if (K > side_limit)
            throw PatternTooLarge("embed_or_pair_linear: the parade does not fit the host");
        out.K_used = K;

        OrientedHosts hosts(host);
        Parade A = build_interval_parade(hosts.g, K);
        SearchOptions search;
        search.seed = options.seed;
        search.samples = options.samples;
        search.exhaustive_block_limit = options.exhaustive_block_limit;

        RainbowOutcome o;
        try {
            o = rainbow(hosts, A, out.r, out.k, c, search);
        }
        catch (const ParadeTooShort &) {
            fallback_pair(out, host);
            return out;
        }

        switch (o.kind) {
            case RainbowOutcome::Kind::big_anticomplete:
                out.route = "anticomplete";
                out.linear = o.linear;
                out.pair = VertexSetPair{ o.x, o.y };
                set_bounds(out, host);
                return out;
            case RainbowOutcome::Kind::high_degree:
                if (out.degree_cap_holds)
                    throw HypothesisViolated("embed_or_pair_linear: a vertex of index " + std::to_string(o.h)
                        + " has at least gamma |A_j| neighbours although the degree cap holds");
                fallback_pair(out, host);
                return out;
            case RainbowOutcome::Kind::certificate:
                break;
        }

        const auto & cert = *o.certificate;
        vector<int> neg, pos;
        for (int i : cert.J)
            (i < 0 ? neg : pos).push_back(i);
        // the pattern on the least indices of J, rows and columns in order
        Shape shape;
        for (int a = 0 ; a < pattern.h1() ; ++a)
            shape.vertices.push_back(neg[a]);
        for (int b = 0 ; b < pattern.h2() ; ++b)
            shape.vertices.push_back(pos[b]);
        std::sort(shape.vertices.begin(), shape.vertices.end());
        for (int a = 0 ; a < pattern.h1() ; ++a)
            for (int b = 0 ; b < pattern.h2() ; ++b)
                if (pattern.graph().adjacent(a, b))
                    shape.edges.emplace_back(neg[a], pos[b]);
        std::sort(shape.edges.begin(), shape.edges.end());

        int h = neg[pattern.index_in_side(w1)];
        int w = cert.C.at(h).front();
        auto tree = materialize_tree(cert, shape, h, w);
        if (auto why = check_rainbow_tree(cert, tree, h, w) ; ! why.empty())
            throw CertificateBroken("embed_or_pair_linear: materialized tree fails: " + why);

        Embedding e;
        for (int a = 0 ; a < pattern.h1() ; ++a)
            e.row_map.push_back(tree.vertex.at(neg[a]));
        for (int b = 0 ; b < pattern.h2() ; ++b)
            e.col_map.push_back(tree.vertex.at(pos[b]));
        if (! verify_embedding(host, pattern.graph(), e))
            throw CertificateBroken("embed_or_pair_linear: the rainbow tree is not an ordered copy of the pattern");
        out.kind = LinearOutcome::Kind::found;
        out.embedding = std::move(e);
        out.route = "certificate";
        return out;
    }

    auto check_linear_outcome(const OrderedBigraph & host, const TreePattern & pattern, const LinearOutcome & out) -> bool
    {
        if (out.kind == LinearOutcome::Kind::found)
            return out.embedding && verify_embedding(host, pattern.graph(), *out.embedding);
        if (! valid_pair(host, out.pair) || ! is_anticomplete(host, out.pair))
            return false;
        auto [need1, need2] = needs(out);
        return (long long)(out.pair.z1.size()) >= need1 && (long long)(out.pair.z2.size()) >= need2;
    }
}
