#ifndef PPK_TREE_PATTERN_HH
#define PPK_TREE_PATTERN_HH 1

#include <ppk/bigraph.hh>

#include <vector>

namespace ppk
{
    /**
     * An ordered bigraph that is a tree, with per-root caches. Pattern vertices
     * get a single id: rows are 0 .. h1-1, columns are h1 .. h1+h2-1.
     */
    class TreePattern
    {
        private:
            OrderedBigraph _graph;
            int _h1 = 0, _h2 = 0;
            std::vector<std::vector<int>> _adj;
            std::vector<std::vector<int>> _dist;
            int _radius = 0;

        public:
            /// Throws PreconditionViolated unless g is a tree (connected, t-1 edges, t >= 1).
            explicit TreePattern(OrderedBigraph g);

            auto graph() const -> const OrderedBigraph & { return _graph; }
            auto size() const -> int { return _h1 + _h2; }
            auto h1() const -> int { return _h1; }
            auto h2() const -> int { return _h2; }

            auto side(int v) const -> Side { return v < _h1 ? Side::rows : Side::cols; }
            auto index_in_side(int v) const -> int { return v < _h1 ? v : v - _h1; }
            auto vertex(Side s, int index) const -> int { return s == Side::rows ? index : _h1 + index; }

            auto neighbours(int v) const -> const std::vector<int> & { return _adj[v]; }
            auto degree(int v) const -> int { return int(_adj[v].size()); }
            auto adjacent(int u, int v) const -> bool;

            auto distance(int u, int v) const -> int { return _dist[u][v]; }

            /// Smallest r such that some vertex reaches every vertex within r edges.
            auto radius() const -> int { return _radius; }

            /// Length of the longest path starting at w.
            auto radius_from(int w) const -> int;

            /// Least-id vertex achieving the radius.
            auto centre() const -> int;

            /// Least-id vertex on side s minimising radius_from.
            auto best_root_on(Side s) const -> int;

            /// parent[v] is the neighbour of v on the path to w; parent[w] = -1.
            auto parents(int w) const -> std::vector<int>;

            /// levels[s] holds the vertices at distance exactly s from w, in id order.
            auto levels(int w) const -> std::vector<std::vector<int>>;
    };

    /// Radius by brute force over all roots; used to cross-check the double BFS.
    auto brute_force_radius(const TreePattern & t) -> int;

    /// True iff g, viewed as a graph, is connected and acyclic.
    auto is_tree(const OrderedBigraph & g) -> bool;
}

#endif
