#include <ppk/oracles.hh>
#include <ppk/errors.hh>

#include <algorithm>
#include <queue>

using std::vector;

namespace ppk
{
    auto parse_objective(const std::string & text) -> Objective
    {
        if (text == "maxmin")
            return Objective::max_min;
        if (text == "maxsum")
            return Objective::max_sum;
        throw ParseError("objective must be maxmin or maxsum, got '" + text + "'");
    }

    auto to_string(Objective objective) -> std::string
    {
        return objective == Objective::max_min ? "maxmin" : "maxsum";
    }

    auto objective_value(const VertexSetPair & pair, Objective objective) -> int
    {
        int a = int(pair.z1.size()), b = int(pair.z2.size());
        return objective == Objective::max_min ? std::min(a, b) : a + b;
    }

    namespace
    {
        class BranchAndBound
        {
            private:
                const OrderedBigraph & _g;
                Objective _objective;
                vector<int> _chosen;
                vector<int> _best_rows;
                BitSet _best_cols;
                int _best_value = 0;

                auto value(int rows, int cols) const -> int
                {
                    return _objective == Objective::max_min ? std::min(rows, cols) : rows + cols;
                }

                auto search(int next, const BitSet & cols) -> void
                {
                    int compatible = 0;
                    for (int i = next ; i < _g.n1() ; ++i)
                        if (! cols.is_subset_of(_g.row(i)))
                            ++compatible;
                    if (value(int(_chosen.size()) + compatible, cols.count()) <= _best_value)
                        return;

                    if (! _chosen.empty()) {
                        int here = value(int(_chosen.size()), cols.count());
                        if (here > _best_value) {
                            _best_value = here;
                            _best_rows = _chosen;
                            _best_cols = cols;
                        }
                    }
                    if (next == _g.n1())
                        return;

                    BitSet narrowed = difference(cols, _g.row(next));
                    if (narrowed.empty()) {
                        search(next + 1, cols);
                        return;
                    }
                    _chosen.push_back(next);
                    search(next + 1, narrowed);
                    _chosen.pop_back();
                    // a row with no neighbour in cols never hurts, so it is always taken
                    if (narrowed.count() != cols.count())
                        search(next + 1, cols);
                }

            public:
                BranchAndBound(const OrderedBigraph & g, Objective objective) :
                    _g(g),
                    _objective(objective),
                    _best_cols(g.n2())
                {
                }

                auto run() -> VertexSetPair
                {
                    search(0, BitSet(_g.n2(), true));
                    if (_best_value == 0)
                        return VertexSetPair{};
                    return VertexSetPair{_best_rows, _best_cols.to_indices()};
                }
        };
    }

    auto oracle_max_anticomplete(const OrderedBigraph & g, Objective objective) -> VertexSetPair
    {
        if (g.n1() + g.n2() > oracle_max_vertices)
            throw TooLarge("oracle_max_anticomplete: n1 + n2 = " + std::to_string(g.n1() + g.n2())
                    + " exceeds " + std::to_string(oracle_max_vertices));
        return BranchAndBound(g, objective).run();
    }

    auto girth(const OrderedBigraph & g) -> std::optional<int>
    {
        int n1 = g.n1(), total = g.n1() + g.n2();
        auto neighbours = [&] (int v) {
            return v < n1 ? g.neighbours(Side::rows, v) : g.neighbours(Side::cols, v - n1);
        };
        auto id = [&] (int v, int w) { return v < n1 ? w + n1 : w; };

        int best = -1;
        vector<int> dist(total), parent(total);
        for (int root = 0 ; root < total ; ++root) {
            std::fill(dist.begin(), dist.end(), -1);
            dist[root] = 0;
            parent[root] = -1;
            std::queue<int> queue;
            queue.push(root);
            while (! queue.empty()) {
                int u = queue.front();
                queue.pop();
                if (best != -1 && 2 * dist[u] + 1 >= best)
                    break;
                neighbours(u).for_each([&] (int raw) {
                    int w = id(u, raw);
                    if (dist[w] == -1) {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push(w);
                    }
                    else if (parent[u] != w) {
                        int length = dist[u] + dist[w] + 1;
                        if (best == -1 || length < best)
                            best = length;
                    }
                });
            }
        }
        if (best == -1)
            return std::nullopt;
        return best;
    }
}
