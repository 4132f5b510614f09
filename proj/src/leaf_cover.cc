#include <ppk/leaf_cover.hh>
#include <ppk/errors.hh>
#include <ppk/thresholds.hh>

#include <algorithm>
#include <cmath>
#include <limits>

using std::pair;
using std::string;
using std::vector;

namespace ppk
{
    namespace
    {
        auto where(int h, int j) -> string
        {
            return " (h = " + std::to_string(h) + ", j = " + std::to_string(j) + ")";
        }

        /// Rows adjacent to some column of cols.
        auto rows_hit(const OrderedBigraph & host, const vector<int> & cols) -> BitSet
        {
            BitSet hit(host.n1());
            for (int v : cols)
                hit |= host.col(v);
            return hit;
        }

        class CoverBuilder
        {
            private:
                const Parade & _A;
                const OrderedBigraph & _host;
                int _k;
                double _log_tau, _phi, _mu, _ln_n1;
                vector<int> _neg, _pos;
                std::map<int, BitSet> _P;
                LeafCoverResult _result;

                auto violated(const string & what) const -> HypothesisViolated
                {
                    return HypothesisViolated("leaf_cover: " + what);
                }

                auto compute_P() -> void
                {
                    for (int h : _neg) {
                        BitSet P(_host.n1());
                        _A.block(h).for_each([&] (int v) {
                            bool low = true;
                            for (int j : _pos) {
                                long long cut = count_cutoff_log(std::log(2.0 * _k) + _log_tau
                                        + std::log(double(_A.block_size(j))));
                                if (BitSet::count_and(_host.row(v), _A.block(j)) >= cut)
                                    low = false;
                            }
                            if (low)
                                P.set(v);
                        });
                        if (2 * P.count() < _A.block_size(h))
                            throw violated("fewer than |A_h|/2 vertices of low degree in block "
                                    + std::to_string(h) + "; the max-degree bound of the band fails");
                        _P.emplace(h, std::move(P));
                    }
                }

                /// Step (1): a greedy cover X of T inside S, in order of addition.
                auto cover_step(int g, int j, const BitSet & T, const BitSet & S, BitSet & covered) -> vector<int>
                {
                    double ln_ag = std::log(double(_A.block_size(g)));
                    long long stop = count_cutoff(_mu * _A.block_size(g));
                    long long min_gain = at_most_cutoff_log(_log_tau - _phi * _ln_n1 + ln_ag);
                    long long budget = at_most_cutoff_log(std::log(2.0) + _phi * _ln_n1 - _log_tau);

                    vector<int> X;
                    BitSet in_X(_host.n2());
                    covered = BitSet(_host.n1());
                    while (true) {
                        BitSet rest = difference(T, covered);
                        if (rest.count() < stop)
                            return X;
                        int best = -1, gain = -1;
                        S.for_each([&] (int v) {
                            if (in_X.test(v))
                                return;
                            int c = BitSet::count_and(_host.col(v), rest);
                            if (c > gain) {
                                gain = c;
                                best = v;
                            }
                        });
                        if (gain < min_gain)
                            throw violated("band fails" + where(g, j) + ": " + std::to_string(rest.count())
                                    + " uncovered vertices of T_g and S_j of size " + std::to_string(S.count())
                                    + " have max-degree " + std::to_string(std::max(gain, 0))
                                    + ", at most tau n1^-phi |A_g|");
                        if (int(X.size()) + 1 >= budget)
                            throw violated("cover of T_g" + where(g, j) + " exceeds 2 n1^phi / tau vertices");
                        X.push_back(best);
                        in_X.set(best);
                        covered |= _host.col(best) & T;
                    }
                }

                auto add_index(int g) -> void
                {
                    const auto & Ag = _A.block(g);
                    int ag = Ag.count();

                    // T_g: low-degree vertices of A_g with no neighbour in an existing cover set
                    vector<int> all_D;
                    for (const auto & [key, d] : _result.D)
                        all_D.insert(all_D.end(), d.begin(), d.end());
                    BitSet T = difference(_P.at(g), rows_hit(_host, all_D));
                    if (4 * T.count() < ag)
                        throw violated("T_g has fewer than |A_g|/4 vertices for g = " + std::to_string(g));

                    BitSet Y = T;
                    std::map<int, vector<int>> X_of;
                    for (int j : _pos) {
                        BitSet S(_host.n2());
                        _A.block(j).for_each([&] (int v) {
                            for (const auto & [h, Q] : _result.Q) {
                                long long cut = count_cutoff_log(std::log(4.0 * _k * _k) + _log_tau
                                        + std::log(double(Q.size())));
                                int c = 0;
                                for (int u : Q)
                                    c += _host.adjacent(u, v);
                                if (c >= cut)
                                    return;
                            }
                            S.set(v);
                        });
                        if (2 * S.count() < _A.block_size(j))
                            throw violated("S_j has fewer than |A_j|/2 vertices" + where(g, j));
                        BitSet covered;
                        X_of[j] = cover_step(g, j, T, S, covered);
                        Y &= covered;
                    }
                    if (8 * Y.count() < ag)
                        throw violated("fewer than |A_g|/8 vertices covered for every j, g = " + std::to_string(g));

                    // Step (2): chunk each cover and group covered vertices by their chunk vectors
                    long long chunk = std::max(1LL,
                            snap_floor(std::exp(-std::log(8.0 * _k * _k) - _log_tau)));
                    std::map<vector<int>, vector<int>> classes;
                    Y.for_each([&] (int v) {
                        vector<int> type;
                        for (int j : _pos) {
                            const auto & X = X_of[j];
                            int at = 0;
                            while (! _host.adjacent(v, X[at]))
                                ++at;
                            type.push_back(int(at / chunk));
                        }
                        classes[type].push_back(v);
                    });
                    const vector<int> * best_type = nullptr;
                    const vector<int> * best_class = nullptr;
                    for (const auto & [type, members] : classes)
                        if (! best_class || members.size() > best_class->size()) {
                            best_type = &type;
                            best_class = &members;
                        }

                    double log_bound = -_k * std::log(64.0 * _k * _k) - _k * _phi * _ln_n1
                        + std::log(double(ag)) - std::log(8.0);
                    if (double(best_class->size()) < std::exp(log_bound) * (1 - snap_tolerance))
                        throw violated("largest chunk class below (64k^2 n1^phi)^-k |A_g| / 8 for g = " + std::to_string(g));

                    _result.Q[g] = *best_class;
                    for (std::size_t a = 0 ; a < _pos.size() ; ++a) {
                        const auto & X = X_of[_pos[a]];
                        std::size_t from = std::size_t((*best_type)[a] * chunk);
                        std::size_t to = std::min(X.size(), std::size_t(from + chunk));
                        vector<int> D(X.begin() + from, X.begin() + to);
                        std::sort(D.begin(), D.end());
                        _result.D[{ g, _pos[a] }] = std::move(D);
                    }
                }

                auto finish() -> void
                {
                    vector<int> all_D;
                    for (const auto & [key, d] : _result.D)
                        all_D.insert(all_D.end(), d.begin(), d.end());
                    BitSet hit_any = rows_hit(_host, all_D);

                    for (int i : _neg) {
                        vector<int> others;
                        for (const auto & [key, d] : _result.D)
                            if (key.first != i)
                                others.insert(others.end(), d.begin(), d.end());
                        BitSet hit_others = rows_hit(_host, others);

                        vector<int> C;
                        for (int v : _result.Q[i])
                            if (! hit_others.test(v))
                                C.push_back(v);
                        if (2 * C.size() < _result.Q[i].size())
                            throw violated("more than half of Q_i meets other cover sets for i = " + std::to_string(i));

                        BitSet B = BitSet::from_indices(_host.n1(), C);
                        B |= difference(_A.block(i), hit_any);
                        if (2 * B.count() < _A.block_size(i))
                            throw violated("B_i below |A_i|/2 for i = " + std::to_string(i));
                        _result.C[i] = std::move(C);
                        _result.B[i] = B.to_indices();
                    }
                }

            public:
                CoverBuilder(const Parade & A, const BandCertificate & cert, int k) :
                    _A(A),
                    _host(A.host()),
                    _k(k),
                    _log_tau(cert.log_tau),
                    _phi(cert.phi),
                    _mu(cert.mu),
                    _ln_n1(std::log(double(A.host().n1()))),
                    _neg(A.negative()),
                    _pos(A.positive())
                {
                    _result.k = k;
                    _result.log_tau = cert.log_tau;
                    _result.phi = cert.phi;
                    _result.mu = cert.mu;
                }

                auto run() -> LeafCoverResult
                {
                    if (_neg.empty())
                        return _result;
                    if (_pos.empty()) {
                        for (int h : _neg) {
                            _result.Q[h] = _A.block(h).to_indices();
                            _result.C[h] = _result.Q[h];
                            _result.B[h] = _result.Q[h];
                        }
                        return _result;
                    }
                    compute_P();
                    for (int g : _neg)
                        add_index(g);
                    finish();
                    return _result;
                }
        };
    }

    auto leaf_cover(const Parade & A, const BandCertificate & cert, int k) -> LeafCoverResult
    {
        auto [neg, pos] = A.length();
        if (k < 1 || neg > k || pos > k)
            throw PreconditionViolated("leaf_cover: need k >= 1 and at most k blocks per side");
        if (! (cert.phi > 0.0))
            throw PreconditionViolated("leaf_cover: need phi > 0");
        if (! (cert.mu > 0.0) || cert.mu > 1.0 / (8.0 * k) * (1 + snap_tolerance))
            throw PreconditionViolated("leaf_cover: need 0 < mu <= 1/(8k)");
        if (cert.log_tau > -std::log(8.0 * k * k) + snap_tolerance)
            throw PreconditionViolated("leaf_cover: need tau <= 1/(8k^2), got tau = " + std::to_string(cert.tau()));
        return CoverBuilder(A, cert, k).run();
    }

    auto check_leaf_cover(const Parade & A, const LeafCoverResult & r) -> LeafCoverCheck
    {
        const auto & host = A.host();
        LeafCoverCheck out;
        auto fail = [&] (const string & why) {
            out.ok = false;
            if (out.failure.empty())
                out.failure = why;
        };
        double ln_n1 = std::log(double(host.n1()));
        int k = r.k;
        auto neg = A.negative(), pos = A.positive();

        for (int h : neg) {
            if (! r.B.count(h) || ! r.C.count(h)) {
                fail("missing B or C for h = " + std::to_string(h));
                return out;
            }
            BitSet B = BitSet::from_indices(host.n1(), r.B.at(h));
            BitSet C = BitSet::from_indices(host.n1(), r.C.at(h));
            int ah = A.block_size(h);
            if (! C.is_subset_of(B) || ! B.is_subset_of(A.block(h)))
                fail("C_h in B_h in A_h fails for h = " + std::to_string(h));
            if (2 * B.count() < ah)
                fail("|B_h| < |A_h|/2 for h = " + std::to_string(h));
            double ln_ah = std::log(double(ah));
            if (C.count() < count_cutoff_log(-k * r.phi * ln_n1 + ln_ah - std::log(16.0)))
                fail("|C_h| < n1^-k phi |A_h| / 16 for h = " + std::to_string(h));
            if (C.count() < count_cutoff_log(-k * std::log(64.0 * k * k) - k * r.phi * ln_n1 + ln_ah - std::log(16.0)))
                out.construction_bound_holds = false;
        }

        long long max_D = at_most_cutoff_log(-std::log(8.0 * k * k) - r.log_tau);
        for (int h : neg)
            for (int j : pos) {
                auto it = r.D.find({ h, j });
                if (it == r.D.end()) {
                    fail("missing D" + where(h, j));
                    continue;
                }
                BitSet D = BitSet::from_indices(host.n2(), it->second);
                if (! D.is_subset_of(A.block(j)))
                    fail("D_{h,j} not inside A_j" + where(h, j));
                if (D.count() >= max_D)
                    fail("|D_{h,j}| > 1/(8k^2 tau)" + where(h, j));
                BitSet hit = rows_hit(host, it->second);
                for (int v : r.C.at(h))
                    if (! hit.test(v)) {
                        fail("D_{h,j} does not cover C_h" + where(h, j));
                        break;
                    }
                for (int i : neg) {
                    BitSet forbidden = BitSet::from_indices(host.n1(), r.B.at(i));
                    if (i == h)
                        forbidden.subtract(BitSet::from_indices(host.n1(), r.C.at(i)));
                    if (hit.intersects(forbidden))
                        fail("D_{h,j} meets B_i" + string(i == h ? " minus C_h" : "") + " for i = "
                                + std::to_string(i) + where(h, j));
                }
            }
        return out;
    }

    auto combined_required_length(int k, double c) -> long long
    {
        if (k < 1 || ! (c > 0.0))
            throw PreconditionViolated("combined_required_length: need k >= 1 and c > 0");
        double phi = c / k;
        return ramsey_bound(int(snap_floor(2.0 / phi + 1.0)), k);
    }

    auto combined_cover(const Parade & A, int k, double c, const SearchOptions & options) -> CombinedOutcome
    {
        if (k < 1 || ! (c > 0.0))
            throw PreconditionViolated("combined_cover: need k >= 1 and c > 0");
        double mu = 1.0 / (8.0 * k), phi = c / k;
        auto h = homog(A, k, phi, mu, options);

        CombinedOutcome out;
        out.log_beta = h.log_beta;
        out.exact = h.exact;
        if (h.kind == HomogOutcome::Kind::anticomplete) {
            out.kind = CombinedOutcome::Kind::anticomplete;
            out.witness = h.witness;
            return out;
        }

        auto & band = *h.band;
        const auto & F = band.sub;
        const auto & host = A.host();
        double log_tau = -std::numeric_limits<double>::infinity();
        for (int hh : F.negative())
            for (int j : F.positive()) {
                long long cut = count_cutoff(F.block_size(hh) / (8.0 * k * k));
                int top = -1, top_v = -1;
                F.block(j).for_each([&] (int v) {
                    int deg = BitSet::count_and(host.col(v), F.block(hh));
                    if (deg > top) {
                        top = deg;
                        top_v = v;
                    }
                });
                if (top >= cut) {
                    out.kind = CombinedOutcome::Kind::high_degree;
                    out.high_degree = HighDegreeWitness{ hh, j, top_v,
                        BitSet::count_and(host.col(top_v), A.block(hh)) };
                    return out;
                }
                if (top > 0)
                    log_tau = std::max(log_tau, std::log(double(top)) - std::log(double(F.block_size(hh))));
            }

        BandCertificate lowered = band.cert;
        lowered.log_tau = std::min(band.cert.log_tau, log_tau);
        out.kind = CombinedOutcome::Kind::cover;
        out.structure = CoverStructure{ band.cert.J, F, lowered, leaf_cover(F, lowered, k) };
        return out;
    }

    auto check_combined(const Parade & A, int k, double c, const CombinedOutcome & o) -> CombinedCheck
    {
        const auto & host = A.host();
        CombinedCheck out;
        auto fail = [&] (const string & why) {
            out.ok = false;
            if (out.failure.empty())
                out.failure = why;
        };
        auto ratio_ok = [&] (double size, double whole, double log_factor) {
            return size >= std::exp(o.log_beta + log_factor) * whole * (1 - snap_tolerance);
        };

        switch (o.kind) {
            case CombinedOutcome::Kind::anticomplete: {
                const auto & w = *o.witness;
                BitSet X = BitSet::from_indices(host.n1(), w.x), Y = BitSet::from_indices(host.n2(), w.y);
                if (! X.is_subset_of(A.block(w.h)) || ! Y.is_subset_of(A.block(w.j)))
                    fail("witness sets outside their blocks");
                for (int u : w.x)
                    if (host.row(u).intersects(Y))
                        fail("witness sets are not anticomplete");
                if (! ratio_ok(X.count(), A.block_size(w.h), 0.0) || ! ratio_ok(Y.count(), A.block_size(w.j), 0.0))
                    fail("witness below the beta fraction");
                break;
            }
            case CombinedOutcome::Kind::high_degree: {
                const auto & w = *o.high_degree;
                if (! A.block(w.j).test(w.v))
                    fail("high-degree vertex outside A_j");
                int deg = BitSet::count_and(host.col(w.v), A.block(w.h));
                if (deg != w.neighbours || ! ratio_ok(deg, A.block_size(w.h), -std::log(8.0 * k * k)))
                    fail("high-degree vertex below beta |A_h| / (8k^2)");
                break;
            }
            case CombinedOutcome::Kind::cover: {
                const auto & s = *o.structure;
                const auto & r = s.cover;
                auto neg = s.F.negative(), pos = s.F.positive();
                if (int(neg.size()) != k || int(pos.size()) != k)
                    fail("J does not have k indices per side");
                for (int i : s.F.indices())
                    if (! s.F.block(i).is_subset_of(A.block(i)) || ! ratio_ok(s.F.block_size(i), A.block_size(i), 0.0))
                        fail("F_i not a beta fraction of A_i for i = " + std::to_string(i));
                auto inner = check_leaf_cover(s.F, r);
                if (! inner.ok)
                    fail(inner.failure);
                double ln_n1 = std::log(double(host.n1()));
                for (int h : neg) {
                    if (! ratio_ok(double(r.B.at(h).size()), A.block_size(h), -std::log(2.0)))
                        fail("|B_h| < beta |A_h| / 2");
                    if (! ratio_ok(double(r.C.at(h).size()), A.block_size(h), -c * ln_n1 - std::log(16.0)))
                        fail("|C_h| < beta n1^-c |A_h| / 16");
                }
                for (int h : neg)
                    for (int j : pos) {
                        BitSet hit = rows_hit(host, r.D.at({ h, j }));
                        for (int i : neg) {
                            BitSet B = BitSet::from_indices(host.n1(), r.B.at(i));
                            BitSet C = BitSet::from_indices(host.n1(), r.C.at(i));
                            if (hit.intersects(difference(B, C)))
                                fail("D_{h,j} meets B_i minus C_i" + where(h, j));
                            if (i != h && hit.intersects(C))
                                fail("D_{h,j} meets C_i for i != h" + where(h, j));
                        }
                    }
                break;
            }
        }
        return out;
    }
}
