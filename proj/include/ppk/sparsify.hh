#ifndef PPK_SPARSIFY_HH
#define PPK_SPARSIFY_HH 1

#include <ppk/bigraph.hh>
#include <ppk/containment.hh>

#include <optional>
#include <string>

namespace ppk
{
    struct SparsifyParams
    {
        double eps = 0.1;
        int m1 = 1;
        int m2 = 1;

        /// ceil(4 / eps). Large enough that the final averaging step gives at
        /// most eps * m neighbours per vertex.
        auto d() const -> long long;
    };

    struct SparsifyOutcome
    {
        enum class Kind
        {
            sparse_pair,
            dense_pair,
            found
        };

        Kind kind = Kind::sparse_pair;
        VertexSetPair pair;
        std::optional<Embedding> embedding;
    };

    auto to_string(SparsifyOutcome::Kind kind) -> std::string;

    /**
     * Either an embedding of h in host, or sets Y1, Y2 of sizes exactly m1,
     * m2 in which every vertex has at most eps times the other side's size
     * neighbours (sparse_pair) or non-neighbours (dense_pair).
     *
     * Requires n1 >= h1 * d^h2 * m1 and n2 >= 2 * h1 * h2 * m2; throws
     * PreconditionViolated naming the failing inequality otherwise.
     */
    auto sparsify(const OrderedBigraph & host, const OrderedBigraph & h, const SparsifyParams & params) -> SparsifyOutcome;

    /// Exact check of the outcome's tagged invariant.
    auto check_sparsify_outcome(const OrderedBigraph & host, const OrderedBigraph & h,
            const SparsifyParams & params, const SparsifyOutcome & outcome) -> bool;
}

#endif
