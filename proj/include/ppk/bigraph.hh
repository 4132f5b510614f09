#ifndef PPK_BIGRAPH_HH
#define PPK_BIGRAPH_HH 1

#include <ppk/bitset.hh>

#include <string>
#include <string_view>
#include <vector>

namespace ppk
{
    /// Rows are V1, columns are V2.
    enum class Side
    {
        rows = 0,
        cols = 1
    };

    inline auto opposite(Side s) -> Side
    {
        return s == Side::rows ? Side::cols : Side::rows;
    }

    inline auto side_index(Side s) -> int
    {
        return static_cast<int>(s);
    }

    /**
     * A 0/1 matrix viewed as a bipartite graph with ordered sides. The order on
     * each side is the index order. Adjacency is stored twice, as row bitsets
     * and as column bitsets, so that neighbourhoods on either side are a
     * lookup. Immutable once built.
     */
    class OrderedBigraph
    {
        private:
            int _n1 = 0, _n2 = 0;
            std::vector<BitSet> _rows, _cols;

        public:
            OrderedBigraph() = default;

            /// Edgeless n1 x n2.
            OrderedBigraph(int n1, int n2);

            /// Build from row bitsets, each of size n2.
            OrderedBigraph(int n1, int n2, std::vector<BitSet> rows);

            /// Each string is a row of '0'/'1' characters. All rows must have
            /// the same length; n2 is taken from the first row (0 if none).
            static auto from_strings(const std::vector<std::string> & rows) -> OrderedBigraph;

            /// Like from_strings, for matrices that may have zero columns.
            static auto from_strings(int n1, int n2, const std::vector<std::string> & rows) -> OrderedBigraph;

            auto n1() const -> int { return _n1; }
            auto n2() const -> int { return _n2; }
            auto size(Side s) const -> int { return s == Side::rows ? _n1 : _n2; }

            auto adjacent(int row, int col) const -> bool { return _rows[row].test(col); }

            auto row(int i) const -> const BitSet & { return _rows[i]; }
            auto col(int j) const -> const BitSet & { return _cols[j]; }

            /// Neighbourhood of vertex v on side s, as a bitset over the other side.
            auto neighbours(Side s, int v) const -> const BitSet &
            {
                return s == Side::rows ? _rows[v] : _cols[v];
            }

            auto degree(Side s, int v) const -> int { return neighbours(s, v).count(); }
            auto max_degree(Side s) const -> int;
            auto edge_count() const -> long long;

            auto bicomplement() const -> OrderedBigraph;

            /// Swap the roles of the two sides.
            auto transpose() const -> OrderedBigraph;

            /// Rows and columns are taken in increasing index order regardless of
            /// the order given. Throws PreconditionViolated on out-of-range indices.
            auto induced_sub(const std::vector<int> & rows, const std::vector<int> & cols) const -> OrderedBigraph;

            auto to_strings() const -> std::vector<std::string>;

            friend auto operator== (const OrderedBigraph &, const OrderedBigraph &) -> bool = default;
    };

    struct VertexSetPair
    {
        std::vector<int> z1, z2;

        friend auto operator== (const VertexSetPair &, const VertexSetPair &) -> bool = default;
    };

    /// Sorted, duplicate-free and in range.
    auto valid_pair(const OrderedBigraph & g, const VertexSetPair & p) -> bool;

    enum class PairStatus
    {
        anticomplete,
        complete,
        mixed
    };

    auto to_string(PairStatus s) -> std::string;

    /// An empty pair (either side empty) is vacuously both; it is reported as
    /// anticomplete.
    auto pair_status(const OrderedBigraph & g, const VertexSetPair & p) -> PairStatus;

    auto bicomplement(const OrderedBigraph & g) -> OrderedBigraph;
    auto induced_sub(const OrderedBigraph & g, const std::vector<int> & rows, const std::vector<int> & cols) -> OrderedBigraph;

    /// Sorted, deduplicated copy.
    auto normalised(std::vector<int> v) -> std::vector<int>;

    auto iota_vector(int n) -> std::vector<int>;

    /// The .obm text format: optional '#' comment lines, a header "n1 n2",
    /// then n1 lines of n2 characters from {0,1}.
    auto parse_obm(std::string_view text) -> OrderedBigraph;
    auto format_obm(const OrderedBigraph & g) -> std::string;
    auto read_obm(const std::string & path) -> OrderedBigraph;

    /// Written to a temporary file and renamed into place.
    auto write_obm(const std::string & path, const OrderedBigraph & g) -> void;
}

#endif
