#include "bracelet/necklace_rank.hpp"

#include <boost/multiprecision/integer.hpp>
#include <map>
#include <stdexcept>

namespace bracelet {

using boost::multiprecision::pow;

std::vector<int> PrefixAutomaton::chain(int j) const {
    std::vector<int> out;
    for (; j >= 0; j = fail[static_cast<size_t>(j)])
        out.push_back(j);
    return out;
}

PrefixAutomaton build_prefix_automaton(const Word& v, int k) {
    PrefixAutomaton a;
    a.v = v;
    a.k = k;
    a.fail = failure_function(v);
    size_t n = v.size();
    a.delta.assign(n + 1, std::vector<int>(static_cast<size_t>(k), 0));
    a.ok.assign(n + 1, std::vector<char>(static_cast<size_t>(k), 1));
    for (size_t j = 0; j <= n; ++j) {
        for (int c = 0; c < k; ++c) {
            auto cc = static_cast<size_t>(c);
            bool here = j < n && v[j] == c;
            int up = j == 0 ? 0 : a.delta[static_cast<size_t>(a.fail[j])][cc];
            a.delta[j][cc] = here ? static_cast<int>(j) + 1 : up;
            bool fine = j >= n || c >= v[j];
            a.ok[j][cc] = fine && (j == 0 || a.ok[static_cast<size_t>(a.fail[j])][cc]);
        }
    }
    return a;
}

std::vector<size_t> divisors_of(size_t n) {
    std::vector<size_t> d;
    for (size_t e = 1; e <= n; ++e)
        if (n % e == 0)
            d.push_back(e);
    return d;
}

std::vector<int> mobius_table(size_t n) {
    std::vector<int> mu(n + 1, 1);
    mu[0] = 0;
    std::vector<char> composite(n + 1, 0);
    for (size_t p = 2; p <= n; ++p) {
        if (composite[p])
            continue;
        for (size_t m = p; m <= n; m += p) {
            if (m > p)
                composite[m] = 1;
            mu[m] = -mu[m];
        }
        for (size_t m = p * p; m <= n; m += p * p)
            mu[m] = 0;
    }
    return mu;
}

Count count_all_rotations_geq(size_t L, const Word& w, int k) {
    if (w.size() != L || L == 0)
        throw word_error("length mismatch");
    // Rotations of u are all >= w iff the periodic word u^inf avoids every
    // v[0..m).y with y < v[m]. The automaton state is determined by the
    // last L symbols, so such u are exactly the closed walks of length L.
    auto a = build_prefix_automaton(w, k);
    size_t states = L + 1;
    Count total = 0;
    std::vector<Count> cur(states), nxt(states);
    for (size_t q = 0; q < states; ++q) {
        std::fill(cur.begin(), cur.end(), Count(0));
        cur[q] = 1;
        for (size_t step = 0; step < L; ++step) {
            std::fill(nxt.begin(), nxt.end(), Count(0));
            for (size_t j = 0; j < states; ++j) {
                if (cur[j] == 0)
                    continue;
                for (int c = 0; c < k; ++c)
                    if (a.ok[j][static_cast<size_t>(c)])
                        nxt[static_cast<size_t>(a.delta[j][static_cast<size_t>(c)])] += cur[j];
            }
            std::swap(cur, nxt);
        }
        total += cur[q];
    }
    return total;
}

namespace {

bool power_below(const Word& u, size_t t, const Word& v) { return power(u, t) < v; }

// Lyndon counts below the prefixes v[0..e) for every divisor e of |v|.
class LyndonBelow {
public:
    LyndonBelow(const Word& v, int k) : v_(v), k_(k) {}

    const Count& operator()(size_t e) {
        auto it = memo_.find(e);
        if (it != memo_.end())
            return it->second;
        Word u(v_.begin(), v_.begin() + static_cast<long>(e));
        // words of length e with a rotation < u, grouped by primitive root
        Count below = pow(Count(k_), static_cast<unsigned>(e)) - count_all_rotations_geq(e, u, k_);
        for (size_t d : divisors_of(e)) {
            if (d == e)
                continue;
            Word p(u.begin(), u.begin() + static_cast<long>(d));
            Count terms = (*this)(d);
            if (is_lyndon(p) && power_below(p, e / d, u))
                terms += 1;
            below -= d * terms;
        }
        if (below % e != 0)
            throw std::logic_error("inexact Lyndon division");
        return memo_[e] = below / e;
    }

private:
    Word v_;
    int k_;
    std::map<size_t, Count> memo_;
};

}  // namespace

Count count_lyndon_below(size_t e, const Word& w, int k) {
    if (w.size() != e || e == 0)
        throw word_error("length mismatch");
    return LyndonBelow(w, k)(e);
}

DivisorDecomposition decompose(const Word& v, int k) {
    require_nonempty(v);
    DivisorDecomposition d;
    d.divisors = divisors_of(v.size());
    d.mobius = mobius_table(v.size());
    LyndonBelow lb(v, k);
    for (size_t e : d.divisors)
        d.lyndon_below.push_back(lb(e));
    return d;
}

Count rank_necklaces(const Word& v, int k) {
    require_nonempty(v);
    size_t n = v.size();
    if (n == 1)
        return v[0];
    if (n == 2) {
        Count r = 0;
        for (int x = 0; x < v[0]; ++x)
            r += k - x;
        return r + std::max(0, v[1] - v[0]);
    }
    auto d = decompose(v, k);
    Count r = 0;
    for (size_t i = 0; i < d.divisors.size(); ++i) {
        size_t e = d.divisors[i];
        Word p(v.begin(), v.begin() + static_cast<long>(e));
        r += d.lyndon_below[i];
        if (is_lyndon(p) && power_below(p, n / e, v))
            r += 1;
    }
    return r;
}

Count count_necklaces(size_t n, int k) {
    if (n == 0)
        throw word_error("empty word");
    return rank_necklaces(Word(n, k - 1), k) + 1;
}

}  // namespace bracelet
