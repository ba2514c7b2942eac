#include "bracelet/enclosing_rank.hpp"

#include "bracelet/bounding.hpp"
#include "bracelet/necklace_rank.hpp"
#include "closure.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>

namespace bracelet {

namespace {

using u128 = unsigned __int128;

Count to_count(u128 x) {
    Count hi = static_cast<unsigned long long>(x >> 64);
    return (hi << 64) + static_cast<unsigned long long>(x);
}

// Everything that depends on V only.
struct Side {
    Word V;
    SubwordTable t;
    BoundingTables b;
    PrefixAutomaton a;
    std::vector<int> theta;  // least final bound, by the longest suffix of r^R that is a prefix of V
};

std::unique_ptr<Side> make_side(const Word& V, int k) {
    auto s = std::make_unique<Side>();
    s->V = V;
    s->t = build_subword_table(V, k);
    s->b = build_bounding_tables(s->t);
    s->a = build_prefix_automaton(V, k);
    size_t m = V.size();
    s->theta.assign(m + 1, s->t.prefix_of_v(m));
    for (size_t J = 1; J < m; ++J)
        for (int a : s->a.chain(static_cast<int>(J)))
            if (a > 0)
                s->theta[J] = std::max(s->theta[J], s->t.id_at(static_cast<size_t>(a), m));
    return s;
}

bool windows_geq(const Word& r, const Word& p) {
    size_t m = r.size();
    for (size_t q = 0; q < m; ++q)
        for (size_t a = 0; a < p.size(); ++a) {
            int c = r[(q + a) % m];
            if (c != p[a]) {
                if (c < p[a])
                    return false;
                break;
            }
        }
    return true;
}

size_t last_occurrence(const Word& r, const Word& p, bool cyclic) {
    size_t m = r.size();
    for (size_t q = cyclic ? m : m + 1 - p.size(); q-- > 0;) {
        bool hit = true;
        for (size_t a = 0; a < p.size() && hit; ++a)
            hit = r[(q + a) % m] == p[a];
        if (hit)
            return q;
    }
    return 0;
}

template <class T>
struct Cell {
    T cnt = 0, ws = 0;
};

template <class T>
T marked(const Side& S, const Word& p, int k) {
    const Word& V = S.V;
    size_t m = V.size(), L = p.size(), i = L - 1;
    auto ap = build_prefix_automaton(p, k);
    auto K = static_cast<size_t>(k);

    Word u = reverse(p);
    int J = 0, jf = 0;
    if (!detail::scan_valid(S.a, u, J) || !detail::scan_valid(ap, p, jf))
        return 0;

    struct Exact {
        Word r, u;
        int jf;
    };
    using Grid = std::vector<Cell<T>>;
    std::vector<Exact> exact;
    std::map<int, Grid> grids;  // keyed by J, which no longer changes
    size_t width = S.t.size(L);
    auto fresh = [&](size_t w) { return Grid((L + 1) * w); };

    if (S.t.id_of(u) != Bottom) {
        exact.push_back({p, u, jf});
    } else {
        int s = bound_of(u, S.t, true);
        if (s < S.t.prefix_of_v(L))
            return 0;
        auto& g = grids.emplace(J, fresh(width)).first->second;
        auto& c = g[static_cast<size_t>(jf) * width + static_cast<size_t>(s)];
        c.cnt = 1;
        c.ws = static_cast<T>(m);
    }

    for (size_t t = L; t < m; ++t) {
        size_t nw = S.t.size(t + 1);
        int floor = S.t.prefix_of_v(t + 1);
        T gap = static_cast<T>(m - (t - i));
        std::map<int, Grid> next;
        std::vector<Exact> nexact;
        for (const auto& e : exact)
            for (int c = 0; c < k; ++c) {
                auto cc = static_cast<size_t>(c);
                auto ej = static_cast<size_t>(e.jf);
                if (!ap.ok[ej][cc])
                    continue;
                Word u2;
                u2.reserve(t + 1);
                u2.push_back(c);
                u2.insert(u2.end(), e.u.begin(), e.u.end());
                if (std::lexicographical_compare(u2.begin(), u2.end(), V.begin(), V.begin() + static_cast<long>(t + 1)))
                    continue;
                Word r2 = e.r;
                r2.push_back(c);
                int j2 = ap.delta[ej][cc];
                if (S.t.id_of(u2) != Bottom) {
                    nexact.push_back({std::move(r2), std::move(u2), j2});
                    continue;
                }
                int J2 = 0;
                detail::scan_valid(S.a, u2, J2);
                size_t last = last_occurrence(r2, p, false);
                auto it = next.find(J2);
                if (it == next.end())
                    it = next.emplace(J2, fresh(nw)).first;
                auto& cell = it->second[static_cast<size_t>(j2) * nw + static_cast<size_t>(bound_of(u2, S.t, true))];
                cell.cnt += 1;
                cell.ws += static_cast<T>(m - last);
            }
        for (auto& [lab, g] : grids) {
            auto it = next.find(lab);
            if (it == next.end())
                it = next.emplace(lab, fresh(nw)).first;
            Grid& ng = it->second;
            for (size_t j = 0; j <= L; ++j)
                for (size_t s = 0; s < width; ++s) {
                    const auto& cell = g[j * width + s];
                    if (cell.cnt == 0)
                        continue;
                    for (size_t c = 0; c < K; ++c) {
                        if (!ap.ok[j][c])
                            continue;
                        int s2 = S.b.XW(t, static_cast<int>(s), static_cast<int>(c));
                        if (s2 < floor)
                            continue;
                        auto j2 = static_cast<size_t>(ap.delta[j][c]);
                        auto& out = ng[j2 * nw + static_cast<size_t>(s2)];
                        out.cnt += cell.cnt;
                        if (j2 == L)
                            out.ws += cell.cnt * gap;
                        else
                            out.ws += cell.ws;
                    }
                }
        }
        grids = std::move(next);
        exact = std::move(nexact);
        width = nw;
    }

    T total = 0;
    for (const auto& e : exact)
        if (windows_geq(e.r, p) && !(min_rotation(e.u) < V))
            total += static_cast<T>(m - last_occurrence(e.r, p, true));

    // windows wrapping from the end of r into its first symbols
    std::vector<char> good(L + 1, 1);
    std::vector<size_t> wrap(L + 1, 0);
    for (size_t j = 0; j <= L; ++j)
        for (int b : ap.chain(static_cast<int>(j))) {
            auto bb = static_cast<size_t>(b);
            if (bb == 0 || bb >= L)
                continue;
            int r = 0;
            for (size_t q = 0; q + bb < L && r == 0; ++q)
                if (p[q] != p[bb + q])
                    r = p[q] < p[bb + q] ? -1 : 1;
            if (r < 0)
                good[j] = 0;
            else if (r == 0)
                wrap[j] = bb;  // the chain descends, so the last hit is the latest occurrence
        }
    for (const auto& [lab, g] : grids) {
        auto need = static_cast<size_t>(S.theta[static_cast<size_t>(lab)]);
        for (size_t j = 0; j <= L; ++j) {
            if (!good[j])
                continue;
            for (size_t s = need; s < width; ++s) {
                const auto& cell = g[j * width + s];
                total += wrap[j] ? cell.cnt * static_cast<T>(wrap[j]) : cell.ws;
            }
        }
    }
    return total;
}

Count marked_dispatch(const Side& S, const Word& p, int k) {
    // fits when m k^m < 2^127
    double bits = static_cast<double>(S.V.size()) * std::log2(static_cast<double>(k)) +
                  std::log2(static_cast<double>(S.V.size()) + 1);
    if (bits < 126)
        return to_count(marked<u128>(S, p, k));
    return marked<Count>(S, p, k);
}

bool periodic_with(const Word& p, size_t g) {
    for (size_t a = g; a < p.size(); ++a)
        if (p[a] != p[a - g])
            return false;
    return true;
}

bool has_prefix(const Word& w, const Word& p) {
    return w.size() >= p.size() && std::equal(p.begin(), p.end(), w.begin());
}

// Class counts by Moebius-style inversion of the size-weighted counts over
// the divisors of n.
class Enclosing {
public:
    Enclosing(const Word& v, int k) : v_(v), k_(k), divs_(divisors_of(v.size())) {}

    Count with_prefix(const Word& p) {
        p_ = p;
        prim_.clear();
        Count total = 0;
        for (size_t f : divs_)
            total += primitive_powers(f, v_.size());
        return total;
    }

private:
    const Side& side(size_t f) {
        auto it = sides_.find(f);
        if (it == sides_.end())
            it = sides_.emplace(f, make_side(Word(v_.begin(), v_.begin() + static_cast<long>(f)), k_)).first;
        return *it->second;
    }

    // Primitive D of length g with the class of D^{f/g} counted against v[0..f).
    Count primitive_powers(size_t g, size_t f) {
        Word Vf(v_.begin(), v_.begin() + static_cast<long>(f));
        Word Vg(v_.begin(), v_.begin() + static_cast<long>(g));
        size_t L = p_.size();
        if (g < L) {
            Word D(p_.begin(), p_.begin() + static_cast<long>(g));
            if (!is_lyndon(D) || !periodic_with(p_, g))
                return 0;
            return min_rotation(reverse(power(D, f / g))) < Vf ? 0 : 1;
        }
        Count c = primitive(g);
        if (g < f && is_lyndon(Vg) && has_prefix(min_rotation(reverse(Vg)), p_) && power(Vg, f / g) < Vf)
            c -= 1;
        return c;
    }

    Count primitive(size_t f) {
        auto it = prim_.find(f);
        if (it != prim_.end())
            return it->second;
        Count tot = marked_dispatch(side(f), p_, k_);
        for (size_t g : divisors_of(f))
            if (g < f)
                tot -= Count(g) * primitive_powers(g, f);
        Count r = tot / f;
        prim_.emplace(f, r);
        return r;
    }

    Word v_;
    int k_;
    std::vector<size_t> divs_;
    Word p_;
    std::map<size_t, std::unique_ptr<Side>> sides_;
    std::map<size_t, Count> prim_;
};

}  // namespace

Word EnclosingParams::prefix(const Word& v) const {
    Word p(v.begin(), v.begin() + static_cast<long>(i));
    p.push_back(x);
    return p;
}

std::vector<EnclosingParams> enclosing_params(const Word& v) {
    require_nonempty(v);
    std::vector<EnclosingParams> out;
    for (size_t i = 1; i < v.size(); ++i) {
        Word p(v.begin(), v.begin() + static_cast<long>(i));
        if (!is_prenecklace(p))
            break;
        size_t l = lyndon_prefix_length(p);
        for (int x = v[i - l]; x < v[i]; ++x)
            out.push_back({i, x, l});
    }
    return out;
}

Count count_marked(const Word& V, const Word& p, int k) {
    require_nonempty(V);
    if (p.empty() || p.size() > V.size())
        throw word_error("marker must be nonempty and no longer than the word");
    auto S = make_side(V, k);
    return marked_dispatch(*S, p, k);
}

Count count_enclosing_with_prefix(const Word& v, const Word& p, int k) {
    require_nonempty(v);
    if (p.empty() || p.size() > v.size())
        throw word_error("prefix must be nonempty and no longer than the word");
    Enclosing e(v, k);
    return e.with_prefix(p);
}

Count rank_enclosing(const Word& v, int k) {
    require_nonempty(v);
    Enclosing e(v, k);
    Count total = 0;
    for (const auto& q : enclosing_params(v))
        total += e.with_prefix(q.prefix(v));
    return total;
}

}  // namespace bracelet
