#include <ppk/bigraph.hh>
#include <ppk/errors.hh>
#include <ppk/io_util.hh>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

using std::string;
using std::string_view;
using std::vector;

namespace ppk
{
    OrderedBigraph::OrderedBigraph(int n1, int n2) :
        _n1(n1),
        _n2(n2),
        _rows(n1, BitSet(n2)),
        _cols(n2, BitSet(n1))
    {
        if (n1 < 0 || n2 < 0)
            throw PreconditionViolated("negative bigraph dimensions");
    }

    OrderedBigraph::OrderedBigraph(int n1, int n2, vector<BitSet> rows) :
        _n1(n1),
        _n2(n2),
        _rows(std::move(rows)),
        _cols(n2, BitSet(n1))
    {
        if (n1 < 0 || n2 < 0)
            throw PreconditionViolated("negative bigraph dimensions");
        if (int(_rows.size()) != n1)
            throw PreconditionViolated("row count does not match n1");
        for (int i = 0 ; i < n1 ; ++i) {
            if (_rows[i].size() != n2)
                throw PreconditionViolated("row width does not match n2");
            _rows[i].for_each([&] (int j) { _cols[j].set(i); });
        }
    }

    auto OrderedBigraph::from_strings(const vector<string> & rows) -> OrderedBigraph
    {
        return from_strings(int(rows.size()), rows.empty() ? 0 : int(rows.front().size()), rows);
    }

    auto OrderedBigraph::from_strings(int n1, int n2, const vector<string> & rows) -> OrderedBigraph
    {
        if (int(rows.size()) != n1)
            throw PreconditionViolated("expected " + std::to_string(n1) + " rows");
        vector<BitSet> bits(n1, BitSet(n2));
        for (int i = 0 ; i < n1 ; ++i) {
            if (int(rows[i].size()) != n2)
                throw PreconditionViolated("row " + std::to_string(i) + " has wrong length");
            for (int j = 0 ; j < n2 ; ++j) {
                if (rows[i][j] == '1')
                    bits[i].set(j);
                else if (rows[i][j] != '0')
                    throw PreconditionViolated("row " + std::to_string(i) + " has a character other than 0/1");
            }
        }
        return OrderedBigraph(n1, n2, std::move(bits));
    }

    auto OrderedBigraph::max_degree(Side s) const -> int
    {
        int result = 0;
        for (int v = 0 ; v < size(s) ; ++v)
            result = std::max(result, degree(s, v));
        return result;
    }

    auto OrderedBigraph::edge_count() const -> long long
    {
        long long result = 0;
        for (auto & r : _rows)
            result += r.count();
        return result;
    }

    auto OrderedBigraph::bicomplement() const -> OrderedBigraph
    {
        OrderedBigraph result = *this;
        for (auto & r : result._rows)
            r.flip();
        for (auto & c : result._cols)
            c.flip();
        return result;
    }

    auto OrderedBigraph::transpose() const -> OrderedBigraph
    {
        OrderedBigraph result;
        result._n1 = _n2;
        result._n2 = _n1;
        result._rows = _cols;
        result._cols = _rows;
        return result;
    }

    auto OrderedBigraph::induced_sub(const vector<int> & rows_in, const vector<int> & cols_in) const -> OrderedBigraph
    {
        auto rows = normalised(rows_in), cols = normalised(cols_in);
        for (int r : rows)
            if (r < 0 || r >= _n1)
                throw PreconditionViolated("induced_sub: row index " + std::to_string(r) + " out of range");
        for (int c : cols)
            if (c < 0 || c >= _n2)
                throw PreconditionViolated("induced_sub: column index " + std::to_string(c) + " out of range");

        vector<BitSet> bits(rows.size(), BitSet(int(cols.size())));
        for (std::size_t a = 0 ; a < rows.size() ; ++a)
            for (std::size_t b = 0 ; b < cols.size() ; ++b)
                if (adjacent(rows[a], cols[b]))
                    bits[a].set(int(b));
        return OrderedBigraph(int(rows.size()), int(cols.size()), std::move(bits));
    }

    auto OrderedBigraph::to_strings() const -> vector<string>
    {
        vector<string> result(_n1, string(_n2, '0'));
        for (int i = 0 ; i < _n1 ; ++i)
            _rows[i].for_each([&] (int j) { result[i][j] = '1'; });
        return result;
    }

    auto normalised(vector<int> v) -> vector<int>
    {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        return v;
    }

    auto iota_vector(int n) -> vector<int>
    {
        vector<int> result(std::max(n, 0));
        std::iota(result.begin(), result.end(), 0);
        return result;
    }

    auto valid_pair(const OrderedBigraph & g, const VertexSetPair & p) -> bool
    {
        auto check = [] (const vector<int> & z, int n) {
            for (std::size_t i = 0 ; i < z.size() ; ++i) {
                if (z[i] < 0 || z[i] >= n)
                    return false;
                if (i > 0 && z[i - 1] >= z[i])
                    return false;
            }
            return true;
        };
        return check(p.z1, g.n1()) && check(p.z2, g.n2());
    }

    auto to_string(PairStatus s) -> string
    {
        switch (s) {
            case PairStatus::anticomplete: return "anticomplete";
            case PairStatus::complete:     return "complete";
            case PairStatus::mixed:        return "mixed";
        }
        return "?";
    }

    auto pair_status(const OrderedBigraph & g, const VertexSetPair & p) -> PairStatus
    {
        if (p.z1.empty() || p.z2.empty())
            return PairStatus::anticomplete;

        auto cols = BitSet::from_indices(g.n2(), p.z2);
        long long edges = 0;
        for (int r : p.z1)
            edges += BitSet::count_and(g.row(r), cols);

        if (edges == 0)
            return PairStatus::anticomplete;
        if (edges == (long long)(p.z1.size()) * (long long)(p.z2.size()))
            return PairStatus::complete;
        return PairStatus::mixed;
    }

    auto bicomplement(const OrderedBigraph & g) -> OrderedBigraph
    {
        return g.bicomplement();
    }

    auto induced_sub(const OrderedBigraph & g, const vector<int> & rows, const vector<int> & cols) -> OrderedBigraph
    {
        return g.induced_sub(rows, cols);
    }

    auto parse_obm(string_view text) -> OrderedBigraph
    {
        vector<string> lines;
        std::istringstream in{string(text)};
        string line;
        while (std::getline(in, line)) {
            if (! line.empty() && line.back() == '\r')
                line.pop_back();
            if (! line.empty() && line.front() == '#')
                continue;
            lines.push_back(line);
        }

        if (lines.empty())
            throw ParseError("obm: missing header line");

        std::istringstream header(lines.front());
        long long n1 = -1, n2 = -1;
        string extra;
        if (! (header >> n1 >> n2) || (header >> extra) || n1 < 0 || n2 < 0)
            throw ParseError("obm: header must be two non-negative integers \"n1 n2\"");

        if ((long long)(lines.size()) - 1 < n1)
            throw ParseError("obm: expected " + std::to_string(n1) + " matrix lines, found " + std::to_string(lines.size() - 1));
        for (std::size_t i = n1 + 1 ; i < lines.size() ; ++i)
            if (! lines[i].empty())
                throw ParseError("obm: unexpected content after " + std::to_string(n1) + " matrix lines");

        vector<string> rows(lines.begin() + 1, lines.begin() + 1 + n1);
        for (std::size_t i = 0 ; i < rows.size() ; ++i) {
            if ((long long)(rows[i].size()) != n2)
                throw ParseError("obm: line " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size())
                        + " characters, expected " + std::to_string(n2));
            if (rows[i].find_first_not_of("01") != string::npos)
                throw ParseError("obm: line " + std::to_string(i + 1) + " contains a character other than 0/1");
        }

        return OrderedBigraph::from_strings(int(n1), int(n2), rows);
    }

    auto format_obm(const OrderedBigraph & g) -> string
    {
        string result = std::to_string(g.n1()) + " " + std::to_string(g.n2()) + "\n";
        for (auto & r : g.to_strings())
            result += r + "\n";
        return result;
    }

    auto read_obm(const string & path) -> OrderedBigraph
    {
        return parse_obm(read_file(path));
    }

    auto write_obm(const string & path, const OrderedBigraph & g) -> void
    {
        write_file_atomically(path, format_obm(g));
    }
}
