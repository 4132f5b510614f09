#include <ppk/parade.hh>
#include <ppk/errors.hh>
#include <ppk/thresholds.hh>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <string>

using std::pair;
using std::string;
using std::vector;

namespace ppk
{
    Parade::Parade(const OrderedBigraph & host, vector<int> indices, vector<BitSet> blocks) :
        _host(&host)
    {
        if (indices.size() != blocks.size())
            throw PreconditionViolated("parade: index and block counts differ");

        vector<int> order = iota_vector(int(indices.size()));
        std::sort(order.begin(), order.end(), [&] (int a, int b) { return indices[a] < indices[b]; });

        BitSet used_rows(host.n1()), used_cols(host.n2());
        for (int o : order) {
            int i = indices[o];
            if (i == 0)
                throw PreconditionViolated("parade: index 0 is not allowed");
            if (! _indices.empty() && _indices.back() == i)
                throw PreconditionViolated("parade: repeated index " + std::to_string(i));
            auto & b = blocks[o];
            BitSet & used = i < 0 ? used_rows : used_cols;
            if (b.size() != used.size())
                throw PreconditionViolated("parade: block " + std::to_string(i) + " is on the wrong side");
            if (b.empty())
                throw PreconditionViolated("parade: block " + std::to_string(i) + " is empty");
            if (b.intersects(used))
                throw PreconditionViolated("parade: block " + std::to_string(i) + " overlaps another block");
            used |= b;
            _indices.push_back(i);
            _blocks.push_back(std::move(b));
        }
    }

    auto Parade::negative() const -> vector<int>
    {
        vector<int> result;
        for (int i : _indices)
            if (i < 0)
                result.push_back(i);
        return result;
    }

    auto Parade::positive() const -> vector<int>
    {
        vector<int> result;
        for (int i : _indices)
            if (i > 0)
                result.push_back(i);
        return result;
    }

    auto Parade::has(int i) const -> bool
    {
        return std::binary_search(_indices.begin(), _indices.end(), i);
    }

    auto Parade::block(int i) const -> const BitSet &
    {
        auto it = std::lower_bound(_indices.begin(), _indices.end(), i);
        if (it == _indices.end() || *it != i)
            throw PreconditionViolated("parade: no block with index " + std::to_string(i));
        return _blocks[it - _indices.begin()];
    }

    auto Parade::set_block(int i, BitSet b) -> void
    {
        const BitSet & old = block(i);
        if (b.empty() || ! b.is_subset_of(old))
            throw PreconditionViolated("parade: a contraction must keep a nonempty subset of block " + std::to_string(i));
        _blocks[std::lower_bound(_indices.begin(), _indices.end(), i) - _indices.begin()] = std::move(b);
    }

    auto Parade::length() const -> pair<int, int>
    {
        int neg = int(std::count_if(_indices.begin(), _indices.end(), [] (int i) { return i < 0; }));
        return { neg, int(_indices.size()) - neg };
    }

    auto Parade::width() const -> pair<int, int>
    {
        int w1 = -1, w2 = -1;
        for (std::size_t k = 0 ; k < _indices.size() ; ++k) {
            int & w = _indices[k] < 0 ? w1 : w2;
            int c = _blocks[k].count();
            if (w < 0 || c < w)
                w = c;
        }
        return { w1 < 0 ? _host->n1() : w1, w2 < 0 ? _host->n2() : w2 };
    }

    auto Parade::sub(const vector<int> & J) const -> Parade
    {
        vector<BitSet> blocks;
        for (int i : J)
            blocks.push_back(block(i));
        return Parade(*_host, J, std::move(blocks));
    }

    auto build_interval_parade(const OrderedBigraph & host, int K) -> Parade
    {
        if (K < 1)
            throw PreconditionViolated("build_interval_parade: need K >= 1");
        if (host.n1() <= 2 * K || host.n2() <= 2 * K)
            throw PreconditionViolated("build_interval_parade: need both sides larger than 2K = "
                    + std::to_string(2 * K) + ", got " + std::to_string(host.n1()) + " x " + std::to_string(host.n2()));

        int p = (host.n1() + 2 * K - 1) / (2 * K);
        int q = (host.n2() + 2 * K - 1) / (2 * K);
        vector<int> indices;
        vector<BitSet> blocks;
        for (int i = -K ; i <= -1 ; ++i) {
            BitSet b(host.n1());
            int start = (K + i) * p;
            for (int u = start ; u < start + p ; ++u)
                b.set(u);
            indices.push_back(i);
            blocks.push_back(std::move(b));
        }
        for (int i = 1 ; i <= K ; ++i) {
            BitSet b(host.n2());
            for (int v = (i - 1) * q ; v < i * q ; ++v)
                b.set(v);
            indices.push_back(i);
            blocks.push_back(std::move(b));
        }
        return Parade(host, std::move(indices), std::move(blocks));
    }

    auto max_degree_from(const OrderedBigraph & host, Side sx, const BitSet & X, const BitSet & Y) -> int
    {
        int best = 0;
        X.for_each([&] (int v) { best = std::max(best, BitSet::count_and(host.neighbours(sx, v), Y)); });
        return best;
    }

    MaxDegreeFunction::MaxDegreeFunction(const Parade & p) :
        _indices(p.indices()),
        _d(_indices.size(), vector<int>(_indices.size(), 0))
    {
        for (int i : _indices)
            if (i < 0)
                refresh(p, i);
    }

    auto MaxDegreeFunction::pos(int i) const -> int
    {
        auto it = std::lower_bound(_indices.begin(), _indices.end(), i);
        if (it == _indices.end() || *it != i)
            throw PreconditionViolated("max-degree function: no index " + std::to_string(i));
        return int(it - _indices.begin());
    }

    auto MaxDegreeFunction::refresh(const Parade & p, int i) -> void
    {
        int a = pos(i);
        for (int j : _indices) {
            if ((i < 0) == (j < 0))
                continue;
            int b = pos(j);
            _d[a][b] = max_degree_from(p.host(), side_of_index(i), p.block(i), p.block(j));
            _d[b][a] = max_degree_from(p.host(), side_of_index(j), p.block(j), p.block(i));
        }
    }

    auto MaxDegreeFunction::log_product() const -> double
    {
        double sum = 0.0;
        for (int h : _indices)
            for (int j : _indices)
                if (h < 0 && j > 0) {
                    int d = (*this)(j, h);
                    if (d == 0)
                        return -std::numeric_limits<double>::infinity();
                    sum += std::log(double(d));
                }
        return sum;
    }

    auto MaxDegreeFunction::zero_pair() const -> std::optional<pair<int, int>>
    {
        for (int h : _indices)
            for (int j : _indices)
                if (h < 0 && j > 0 && (*this)(j, h) == 0)
                    return pair{ h, j };
        return std::nullopt;
    }

    namespace
    {
        /// For a fixed X: the y_size columns of B_j with fewest neighbours in X
        /// (ties to lower index) and the resulting max-degree.
        auto best_y(const OrderedBigraph & host, const vector<int> & bj, const BitSet & X, int y_size)
            -> pair<int, vector<int>>
        {
            vector<pair<int, int>> counts;
            counts.reserve(bj.size());
            for (int v : bj)
                counts.emplace_back(BitSet::count_and(host.col(v), X), v);
            std::stable_sort(counts.begin(), counts.end(),
                    [] (const auto & a, const auto & b) { return a.first < b.first; });
            vector<int> y;
            for (int k = 0 ; k < y_size ; ++k)
                y.push_back(counts[k].second);
            std::sort(y.begin(), y.end());
            return { y_size > 0 ? counts[y_size - 1].first : 0, y };
        }

        /// The x_size rows of B_h with fewest neighbours in Y, ties to lower index.
        auto fewest_into(const OrderedBigraph & host, const vector<int> & bh, const BitSet & Y, int x_size) -> vector<int>
        {
            vector<pair<int, int>> counts;
            for (int u : bh)
                counts.emplace_back(BitSet::count_and(host.row(u), Y), u);
            std::stable_sort(counts.begin(), counts.end(),
                    [] (const auto & a, const auto & b) { return a.first < b.first; });
            vector<int> x;
            for (int k = 0 ; k < x_size ; ++k)
                x.push_back(counts[k].second);
            std::sort(x.begin(), x.end());
            return x;
        }
    }

    auto least_max_degree(const Parade & p, int h, int j, int x_size, int y_size, const SearchOptions & options)
        -> pair<SubsetPair, bool>
    {
        const auto & host = p.host();
        vector<int> bh = p.block(h).to_indices(), bj = p.block(j).to_indices();
        if (x_size < 1 || x_size > int(bh.size()) || y_size < 1 || y_size > int(bj.size()))
            throw PreconditionViolated("least_max_degree: subset sizes out of range");

        SubsetPair best;
        bool have = false;
        auto consider = [&] (const vector<int> & x) {
            auto [md, y] = best_y(host, bj, BitSet::from_indices(host.n1(), x), y_size);
            if (! have || md < best.max_degree) {
                best = SubsetPair{ x, std::move(y), md };
                have = true;
            }
        };

        if (int(bh.size()) <= options.exhaustive_block_limit) {
            vector<int> pick(x_size);
            std::iota(pick.begin(), pick.end(), 0);
            int n = int(bh.size());
            while (true) {
                vector<int> x;
                for (int k : pick)
                    x.push_back(bh[k]);
                consider(x);
                if (best.max_degree == 0)
                    break;
                int k = x_size - 1;
                while (k >= 0 && pick[k] == n - x_size + k)
                    --k;
                if (k < 0)
                    break;
                ++pick[k];
                for (int m = k + 1 ; m < x_size ; ++m)
                    pick[m] = pick[m - 1] + 1;
            }
            return { best, true };
        }

        // greedy peeling, then alternate between the best X for Y and the best Y for X
        auto x = fewest_into(host, bh, p.block(j), x_size);
        consider(x);
        for (int round = 0 ; round < 4 ; ++round) {
            int before = best.max_degree;
            x = fewest_into(host, bh, BitSet::from_indices(host.n2(), best.y), x_size);
            consider(x);
            if (best.max_degree >= before)
                break;
        }

        Rng rng(options.seed);
        vector<int> pool = bh;
        for (int s = 0 ; s < options.samples && best.max_degree > 0 ; ++s) {
            for (int k = 0 ; k < x_size ; ++k)
                std::swap(pool[k], pool[k + rng.below(pool.size() - k)]);
            vector<int> sample(pool.begin(), pool.begin() + x_size);
            std::sort(sample.begin(), sample.end());
            consider(sample);
        }
        return { best, false };
    }

    namespace
    {
        auto log_n1(const Parade & p) -> double
        {
            return std::log(double(p.host().n1()));
        }

        auto check_parameters(const char * who, const Parade & p, double phi, double mu) -> void
        {
            if (! (phi > 0.0))
                throw PreconditionViolated(string(who) + ": need phi > 0");
            if (! (mu > 0.0 && mu <= 1.0))
                throw PreconditionViolated(string(who) + ": need 0 < mu <= 1");
            if (p.host().n1() < 2)
                throw PreconditionViolated(string(who) + ": need at least two rows in the host");
        }

        auto at_least(double mu, int size) -> int
        {
            return int(std::min<long long>(count_cutoff(mu * size), size));
        }

        /// A shrinking pair for (h, j) exists iff the least max-degree is below this.
        auto shrink_cutoff(int d, double phi, double ln_n1) -> long long
        {
            return at_most_cutoff_log(std::log(double(d)) - phi * ln_n1);
        }
    }

    auto shrink_resist(const Parade & p, double phi, double mu, const SearchOptions & options) -> ShrinkOutcome
    {
        check_parameters("shrink_resist", p, phi, mu);
        double ln_n1 = log_n1(p);
        double size = double(p.indices().size());

        ShrinkOutcome out{ ShrinkOutcome::Kind::contraction, std::nullopt, p, 0,
            snap_floor(size * size / phi), (1.0 + size * size / phi) * std::log(mu), true };
        Parade & cur = out.contraction;
        MaxDegreeFunction d(cur);

        while (true) {
            if (auto z = d.zero_pair()) {
                out.kind = ShrinkOutcome::Kind::anticomplete;
                out.witness = AnticompleteWitness{ z->first, z->second,
                    cur.block(z->first).to_indices(), cur.block(z->second).to_indices() };
                return out;
            }

            std::optional<pair<pair<int, int>, SubsetPair>> shrink;
            bool exact = true;
            for (int h : cur.negative()) {
                for (int j : cur.positive()) {
                    auto [found, exhaustive] = least_max_degree(cur, h, j,
                            at_least(mu, cur.block_size(h)), at_least(mu, cur.block_size(j)), options);
                    if (found.max_degree < shrink_cutoff(d(j, h), phi, ln_n1)) {
                        shrink = { { h, j }, std::move(found) };
                        break;
                    }
                    exact = exact && exhaustive;
                }
                if (shrink)
                    break;
            }
            if (! shrink) {
                out.exact = exact;
                return out;
            }

            auto [h, j] = shrink->first;
            double before = d.log_product();
            cur.set_block(h, BitSet::from_indices(p.host().n1(), shrink->second.x));
            cur.set_block(j, BitSet::from_indices(p.host().n2(), shrink->second.y));
            d.refresh(cur, h);
            d.refresh(cur, j);
            double after = d.log_product();
            if (after > before - phi * ln_n1 + snap_tolerance)
                throw CertificateBroken("shrink_resist: contraction did not reduce the max-degree product by n1^-phi");
            if (++out.contractions > out.contraction_limit)
                throw CertificateBroken("shrink_resist: more than floor(|I|^2 / phi) contractions");
        }
    }

    auto check_shrink_resistant(const Parade & p, double phi, double mu, const SearchOptions & options) -> ResistanceCheck
    {
        check_parameters("check_shrink_resistant", p, phi, mu);
        double ln_n1 = log_n1(p);
        MaxDegreeFunction d(p);
        ResistanceCheck result;
        for (int h : p.negative())
            for (int j : p.positive()) {
                auto [found, exhaustive] = least_max_degree(p, h, j,
                        at_least(mu, p.block_size(h)), at_least(mu, p.block_size(j)), options);
                result.exhaustive = result.exhaustive && exhaustive;
                if (d(j, h) == 0 || found.max_degree < shrink_cutoff(d(j, h), phi, ln_n1)) {
                    result.ok = false;
                    result.violating = pair{ h, j };
                    result.pair = std::move(found);
                    return result;
                }
            }
        return result;
    }

    auto pair_type(int d, int b, int n1, double phi) -> int
    {
        if (d < 1 || b < d || n1 < 2 || ! (phi > 0.0))
            throw PreconditionViolated("pair_type: need 1 <= d <= b, n1 >= 2, phi > 0; got d = "
                    + std::to_string(d) + ", b = " + std::to_string(b));
        double value = (std::log(double(b)) - std::log(double(d))) / (phi * std::log(double(n1)));
        return int(snap_floor(value));
    }

    auto ramsey_bound(int colours, int k) -> long long
    {
        if (colours < 1 || k < 1)
            throw PreconditionViolated("ramsey_bound: need at least one colour and k >= 1");
        constexpr long long cap = 1LL << 62;
        long long m = (long long)(colours) * (k - 1) + 1;
        long double cols = (long double)(k - 1) * std::pow((long double)(colours), (long double)(m)) + 1;
        long long c = cols >= (long double)(cap) ? cap : (long long)(cols);
        return std::max(m, c);
    }

    auto pigeonhole_grid(const ColourGrid & colour, int k, int colours) -> std::optional<GridChoice>
    {
        if (k < 1 || colours < 1)
            throw PreconditionViolated("pigeonhole_grid: need k >= 1 and at least one colour");
        int n_rows = int(colour.size());
        if (n_rows < k)
            return std::nullopt;
        int n_cols = int(colour[0].size());
        int used = int(std::min<long long>(n_rows, (long long)(colours) * (k - 1) + 1));

        std::map<vector<int>, vector<int>> by_vector;
        for (int c = 0 ; c < n_cols ; ++c) {
            vector<int> key(used);
            for (int r = 0 ; r < used ; ++r)
                key[r] = colour[r][c];
            auto & cols = by_vector[key];
            cols.push_back(c);
            if (int(cols.size()) != k)
                continue;

            vector<vector<int>> rows_of(colours);
            for (int r = 0 ; r < used ; ++r) {
                if (key[r] < 0 || key[r] >= colours)
                    throw PreconditionViolated("pigeonhole_grid: colour out of range");
                rows_of[key[r]].push_back(r);
            }
            for (int col = 0 ; col < colours ; ++col)
                if (int(rows_of[col].size()) >= k)
                    return GridChoice{ vector<int>(rows_of[col].begin(), rows_of[col].begin() + k), cols, col };
        }
        return std::nullopt;
    }

    auto exhaustive_grid(const ColourGrid & colour, int k) -> std::optional<GridChoice>
    {
        if (k < 1)
            throw PreconditionViolated("exhaustive_grid: need k >= 1");
        int n_rows = int(colour.size());
        if (n_rows < k)
            return std::nullopt;
        int n_cols = int(colour[0].size());
        int max_colour = 0;
        for (const auto & row : colour)
            for (int c : row)
                max_colour = std::max(max_colour, c);

        vector<int> pick(k);
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            for (int col = 0 ; col <= max_colour ; ++col) {
                vector<int> cols;
                for (int c = 0 ; c < n_cols && int(cols.size()) < k ; ++c)
                    if (std::all_of(pick.begin(), pick.end(), [&] (int r) { return colour[r][c] == col; }))
                        cols.push_back(c);
                if (int(cols.size()) == k)
                    return GridChoice{ pick, cols, col };
            }
            int m = k - 1;
            while (m >= 0 && pick[m] == n_rows - k + m)
                --m;
            if (m < 0)
                return std::nullopt;
            ++pick[m];
            for (int q = m + 1 ; q < k ; ++q)
                pick[q] = pick[q - 1] + 1;
        }
    }

    namespace
    {
        constexpr double exhaustive_grid_budget = 1e6;

        auto row_subsets(int n, int k) -> double
        {
            return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
        }
    }

    auto BandCertificate::tau() const -> double
    {
        return std::exp(log_tau);
    }

    auto check_band(const Parade & p, const BandCertificate & cert, const SearchOptions & options) -> BandCheck
    {
        check_parameters("check_band", p, cert.phi, cert.mu);
        double ln_n1 = log_n1(p);
        MaxDegreeFunction d(p);
        BandCheck result;
        for (int h : p.negative())
            if (p.block_size(h) > options.exhaustive_block_limit)
                result.exhaustive = false;

        for (int h : p.negative())
            for (int j : p.positive()) {
                double ln_bh = std::log(double(p.block_size(h)));
                string where = " for (h, j) = (" + std::to_string(h) + ", " + std::to_string(j) + ")";
                if (d(j, h) >= at_most_cutoff_log(cert.log_tau + ln_bh)) {
                    result.ok = false;
                    result.failure = "max-degree " + std::to_string(d(j, h)) + " exceeds tau |B_h|" + where;
                    return result;
                }
                auto [found, exhaustive] = least_max_degree(p, h, j,
                        at_least(cert.mu, p.block_size(h)), at_least(cert.mu, p.block_size(j)), options);
                if (found.max_degree < at_most_cutoff_log(cert.log_tau - cert.phi * ln_n1 + ln_bh)) {
                    result.ok = false;
                    result.failure = "subsets with max-degree " + std::to_string(found.max_degree)
                        + " at most tau n1^-phi |B_h|" + where;
                    return result;
                }
            }
        return result;
    }

    auto find_band(const Parade & p, int k, double phi, double mu) -> BandResult
    {
        check_parameters("find_band", p, phi, mu);
        if (k < 1)
            throw PreconditionViolated("find_band: need k >= 1");
        int colours = int(snap_floor(1.0 / phi + 1.0));
        long long required = ramsey_bound(colours, k);

        auto neg = p.negative(), pos = p.positive();
        if (int(neg.size()) < k || int(pos.size()) < k)
            throw ParadeTooShort("find_band: fewer than k blocks on a side", required);

        MaxDegreeFunction d(p);
        ColourGrid types(neg.size(), vector<int>(pos.size()));
        for (std::size_t a = 0 ; a < neg.size() ; ++a)
            for (std::size_t b = 0 ; b < pos.size() ; ++b) {
                int dj = d(pos[b], neg[a]);
                if (dj == 0)
                    throw PreconditionViolated("find_band: parade is not shrink-resistant, d("
                            + std::to_string(pos[b]) + ", " + std::to_string(neg[a]) + ") = 0");
                types[a][b] = pair_type(dj, p.block_size(neg[a]), p.host().n1(), phi);
                colours = std::max(colours, types[a][b] + 1);
            }

        auto choice = pigeonhole_grid(types, k, colours);
        if (! choice && row_subsets(int(neg.size()), k) <= exhaustive_grid_budget)
            choice = exhaustive_grid(types, k);
        if (! choice)
            throw ParadeTooShort("find_band: no k x k grid of pairs of equal type", required);

        BandCertificate cert;
        cert.type = choice->colour;
        cert.log_tau = -cert.type * phi * log_n1(p);
        cert.phi = 2.0 * phi;
        cert.mu = mu;
        for (int r : choice->rows)
            cert.J.push_back(neg[r]);
        for (int c : choice->cols)
            cert.J.push_back(pos[c]);
        return BandResult{ p.sub(cert.J), cert };
    }

    auto homog(const Parade & p, int k, double phi, double mu, const SearchOptions & options) -> HomogOutcome
    {
        auto shrunk = shrink_resist(p, phi / 2.0, mu, options);
        HomogOutcome out{ HomogOutcome::Kind::band, std::nullopt, shrunk.contraction, std::nullopt,
            shrunk.log_beta, shrunk.exact };
        if (shrunk.kind == ShrinkOutcome::Kind::anticomplete) {
            out.kind = HomogOutcome::Kind::anticomplete;
            out.witness = shrunk.witness;
            return out;
        }
        out.band = find_band(shrunk.contraction, k, phi / 2.0, mu);
        return out;
    }
}
