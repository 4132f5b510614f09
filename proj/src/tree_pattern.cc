#include <ppk/tree_pattern.hh>
#include <ppk/errors.hh>

#include <algorithm>
#include <queue>

using std::vector;

namespace ppk
{
    namespace
    {
        auto adjacency_lists(const OrderedBigraph & g) -> vector<vector<int>>
        {
            int h1 = g.n1();
            vector<vector<int>> adj(g.n1() + g.n2());
            for (int i = 0 ; i < g.n1() ; ++i)
                for (int j = 0 ; j < g.n2() ; ++j)
                    if (g.adjacent(i, j)) {
                        adj[i].push_back(h1 + j);
                        adj[h1 + j].push_back(i);
                    }
            for (auto & a : adj)
                std::sort(a.begin(), a.end());
            return adj;
        }

        auto bfs(const vector<vector<int>> & adj, int start) -> vector<int>
        {
            vector<int> dist(adj.size(), -1);
            std::queue<int> q;
            dist[start] = 0;
            q.push(start);
            while (! q.empty()) {
                int v = q.front();
                q.pop();
                for (int u : adj[v])
                    if (dist[u] == -1) {
                        dist[u] = dist[v] + 1;
                        q.push(u);
                    }
            }
            return dist;
        }
    }

    auto is_tree(const OrderedBigraph & g) -> bool
    {
        int t = g.n1() + g.n2();
        if (t == 0)
            return false;
        if (g.edge_count() != t - 1)
            return false;
        auto d = bfs(adjacency_lists(g), 0);
        return std::none_of(d.begin(), d.end(), [] (int x) { return x < 0; });
    }

    TreePattern::TreePattern(OrderedBigraph g) :
        _graph(std::move(g)),
        _h1(_graph.n1()),
        _h2(_graph.n2())
    {
        if (! is_tree(_graph))
            throw PreconditionViolated("pattern is not a tree (it must be connected with exactly t-1 edges)");

        _adj = adjacency_lists(_graph);
        for (int v = 0 ; v < size() ; ++v)
            _dist.push_back(bfs(_adj, v));

        // double BFS: the farthest vertex from anything is a diameter end
        auto from0 = _dist[0];
        int a = int(std::max_element(from0.begin(), from0.end()) - from0.begin());
        int diameter = *std::max_element(_dist[a].begin(), _dist[a].end());
        _radius = (diameter + 1) / 2;
    }

    auto TreePattern::adjacent(int u, int v) const -> bool
    {
        return std::binary_search(_adj[u].begin(), _adj[u].end(), v);
    }

    auto TreePattern::radius_from(int w) const -> int
    {
        return *std::max_element(_dist[w].begin(), _dist[w].end());
    }

    auto TreePattern::centre() const -> int
    {
        for (int v = 0 ; v < size() ; ++v)
            if (radius_from(v) == _radius)
                return v;
        throw CertificateBroken("tree has no centre");
    }

    auto TreePattern::best_root_on(Side s) const -> int
    {
        int best = -1;
        for (int i = 0 ; i < (s == Side::rows ? _h1 : _h2) ; ++i) {
            int v = vertex(s, i);
            if (best == -1 || radius_from(v) < radius_from(best))
                best = v;
        }
        return best;
    }

    auto TreePattern::parents(int w) const -> vector<int>
    {
        vector<int> result(size(), -1);
        for (int v = 0 ; v < size() ; ++v) {
            if (v == w)
                continue;
            for (int u : _adj[v])
                if (_dist[w][u] + 1 == _dist[w][v]) {
                    result[v] = u;
                    break;
                }
        }
        return result;
    }

    auto TreePattern::levels(int w) const -> vector<vector<int>>
    {
        vector<vector<int>> result(radius_from(w) + 1);
        for (int v = 0 ; v < size() ; ++v)
            result[_dist[w][v]].push_back(v);
        return result;
    }

    auto brute_force_radius(const TreePattern & t) -> int
    {
        int best = -1;
        for (int w = 0 ; w < t.size() ; ++w) {
            int ecc = 0;
            for (int v = 0 ; v < t.size() ; ++v)
                ecc = std::max(ecc, t.distance(w, v));
            if (best == -1 || ecc < best)
                best = ecc;
        }
        return best;
    }
}
