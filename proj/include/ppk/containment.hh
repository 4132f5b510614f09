#ifndef PPK_CONTAINMENT_HH
#define PPK_CONTAINMENT_HH 1

#include <ppk/bigraph.hh>

#include <optional>
#include <vector>

namespace ppk
{
    /**
     * An order-preserving, side-preserving map from pattern vertices to host
     * vertices, realising the pattern as an induced sub-bigraph (that is, as a
     * submatrix).
     */
    struct Embedding
    {
        std::vector<int> row_map;
        std::vector<int> col_map;

        friend auto operator== (const Embedding &, const Embedding &) -> bool = default;
        friend auto operator<=> (const Embedding &, const Embedding &) = default;
    };

    /// The lexicographically least embedding (by row_map, then col_map), if any.
    auto contains(const OrderedBigraph & host, const OrderedBigraph & pattern) -> std::optional<Embedding>;

    /// Whether any embedding exists; cheaper than contains when the answer is yes.
    auto embeds(const OrderedBigraph & host, const OrderedBigraph & pattern) -> bool;

    auto verify_embedding(const OrderedBigraph & host, const OrderedBigraph & pattern, const Embedding & e) -> bool;

    struct EitherContainment
    {
        enum class Kind
        {
            none,
            pattern,
            bicomplement
        };

        Kind kind = Kind::none;
        std::optional<Embedding> embedding;
    };

    /// Tests the pattern first, then its bicomplement.
    auto contains_either(const OrderedBigraph & host, const OrderedBigraph & pattern) -> EitherContainment;
}

#endif
