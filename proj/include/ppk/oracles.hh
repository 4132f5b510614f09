#ifndef PPK_ORACLES_HH
#define PPK_ORACLES_HH 1

#include <ppk/bigraph.hh>

#include <optional>
#include <string>

namespace ppk
{
    enum class Objective
    {
        max_min,
        max_sum
    };

    auto parse_objective(const std::string & text) -> Objective;
    auto to_string(Objective objective) -> std::string;

    inline constexpr int oracle_max_vertices = 40;

    /**
     * Exact optimum anticomplete pair (Z1, Z2) with both sides nonempty, by
     * branch and bound over row subsets; Z2 is always the common
     * non-neighbourhood of Z1. If every entry is 1 there is no such pair and
     * (empty, empty) is returned. Among optimal pairs the first one found in
     * include-before-exclude row order is returned.
     *
     * Throws TooLarge if n1 + n2 > 40.
     */
    auto oracle_max_anticomplete(const OrderedBigraph & g, Objective objective) -> VertexSetPair;

    auto objective_value(const VertexSetPair & pair, Objective objective) -> int;

    /// Length of a shortest cycle, or nullopt for a forest. BFS from every vertex.
    auto girth(const OrderedBigraph & g) -> std::optional<int>;
}

#endif
