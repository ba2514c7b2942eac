#include "bracelet/palindromic_rank.hpp"

#include "bracelet/necklace_rank.hpp"
#include "closure.hpp"

#include <stdexcept>

namespace bracelet {

namespace {

using boost::multiprecision::pow;

struct Context {
    Word v;
    int k;
    SubwordTable t;
    BoundingTables b;
    PrefixAutomaton a;
    Context(const Word& v_, int k_)
        : v(v_), k(k_), t(build_subword_table(v_, k_)), b(build_bounding_tables(t)),
          a(build_prefix_automaton(v_, k_)) {}
};

// Dense (j, s) grid for one layer; s is stored shifted by one for Bottom.
struct Grid {
    size_t width;
    std::vector<Count> cell;
    Grid(size_t states, size_t bounds) : width(bounds + 1), cell(states * width) {}
    Count& at(int j, int s) { return cell[static_cast<size_t>(j) * width + static_cast<size_t>(s + 1)]; }
};

// Counts pairs (alpha, tail) with alpha a palindrome of length n - |tail|,
// grown outward from a core of length `start`, such that every rotation of
// alpha.tail is > v. Cores that are exact cyclic subwords of v are carried
// explicitly; all others are grouped by automaton state and strict bound.
Count count_forms(const Context& c, size_t start, const std::vector<Word>& tails, LayerCounts* out) {
    size_t n = c.v.size();
    size_t L = n - tails.front().size();
    size_t states = n + 1;
    std::vector<Word> expl;
    Grid grid(states, c.t.size(start));

    auto admit = [&](const Word& w, std::vector<Word>& ex, Grid& g) {
        int j = 0;
        if (!detail::scan_valid(c.a, w, j))
            return;
        if (c.t.id_of(w) != Bottom)
            ex.push_back(w);
        else
            g.at(j, bound_of(w, c.t, true)) += 1;
    };
    auto record = [&](size_t l, Grid& g) {
        if (!out)
            return;
        int i = static_cast<int>((l + 1) / 2);
        for (size_t j = 0; j < states; ++j)
            for (size_t s = 0; s < g.width; ++s)
                if (g.cell[j * g.width + s] != 0)
                    out->cells[{i, static_cast<int>(j), static_cast<int>(s) - 1}] = g.cell[j * g.width + s];
    };

    if (start == 0) {
        expl.push_back(Word{});
    } else {
        for (int x = 0; x < c.k; ++x)
            admit(Word{x}, expl, grid);
    }
    size_t l = start;
    record(l, grid);
    while (l + 2 <= L) {
        Grid next(states, c.t.size(l + 2));
        int floor = c.t.prefix_of_v(l + 2);
        for (size_t j = 0; j < states; ++j)
            for (int s = Bottom; s < static_cast<int>(c.t.size(l)); ++s) {
                const Count& cnt = grid.at(static_cast<int>(j), s);
                if (cnt == 0)
                    continue;
                int s1 = c.b.WX(l, s);
                for (int x = 0; x < c.k; ++x) {
                    auto xx = static_cast<size_t>(x);
                    if (!c.a.ok[j][xx])
                        continue;
                    int s2 = c.b.XW(l + 1, s1, x);
                    if (s2 < floor)
                        continue;
                    next.at(c.a.delta[j][xx], s2) += cnt;
                }
            }
        std::vector<Word> ex;
        for (const auto& w : expl)
            for (int x = 0; x < c.k; ++x) {
                Word u;
                u.reserve(w.size() + 2);
                u.push_back(x);
                u.insert(u.end(), w.begin(), w.end());
                u.push_back(x);
                admit(u, ex, next);
            }
        expl = std::move(ex);
        grid = std::move(next);
        l += 2;
        record(l, grid);
    }
    if (l != L)
        throw std::logic_error("layer parity mismatch");

    Count total = 0;
    for (const auto& w : expl)
        for (const auto& tail : tails) {
            Word u = w;
            u.insert(u.end(), tail.begin(), tail.end());
            if (min_rotation(u) > c.v)
                total += 1;
        }
    for (const auto& tail : tails)
        for (size_t j = 0; j < states; ++j) {
            auto need = detail::closure_threshold(c.a, c.t, static_cast<int>(j), tail);
            if (!need)
                continue;
            for (int s = *need; s < static_cast<int>(c.t.size(L)); ++s)
                total += grid.at(static_cast<int>(j), s);
        }
    return total;
}

std::vector<Word> single_tails(int k) {
    std::vector<Word> t;
    for (int x = 0; x < k; ++x)
        t.push_back(Word{x});
    return t;
}

std::vector<Word> double_tails(int k) {
    std::vector<Word> t;
    for (int x = 0; x < k; ++x)
        t.push_back(Word{x, x});
    return t;
}

void require_parity(const Word& v, bool odd) {
    require_nonempty(v);
    if ((v.size() % 2 == 1) != odd)
        throw word_error(odd ? "odd length required" : "even length required");
}

Word half(const Word& v) { return Word(v.begin(), v.begin() + static_cast<long>(v.size() / 2)); }

bool palindromic_rep(const Word& v) { return is_necklace(v) && is_palindromic_necklace(v); }

Count exact_half(const Count& x) {
    if (x % 2 != 0)
        throw std::domain_error("half of an odd count");
    return x / 2;
}

Count branch(const Word& v, int k, BranchRule rule, bool e_shape);

Count shape_count(const Word& v, int k, BranchRule rule, bool e_shape) {
    require_parity(v, false);
    Count own = e_shape ? size_PE(v, k) : size_PS(v, k);
    return exact_half(own + branch(v, k, rule, e_shape));
}

Count branch(const Word& v, int k, BranchRule rule, bool e_shape) {
    Word h = half(v);
    switch (rule) {
    case BranchRule::OddPeriod:
        return odd_period_above(v, k);
    case BranchRule::HalfPrefix:
        return h.size() % 2 ? size_PO(h, k) : shape_count(h, k, rule, e_shape);
    default:
        return h.size() % 2 ? size_PO(v, k) : shape_count(h, k, rule, e_shape);
    }
}

}  // namespace

int size_X(const Word& v, int j, int s, const SubwordTable& table) {
    size_t n = v.size();
    if (j < 0 || static_cast<size_t>(j) >= n || n < 2)
        throw word_error("state out of range");
    const Word& sw = table.subwords.at(n - 1).at(static_cast<size_t>(s));
    int count = 0;
    for (int x = 0; x < table.k; ++x) {
        Word u(v.begin(), v.begin() + j);
        u.push_back(x);
        u.insert(u.end(), sw.begin(), sw.end());
        if (!(u < v))
            ++count;
    }
    return count;
}

Count size_PO(const Word& v, int k, LayerCounts* layers) {
    require_parity(v, true);
    return count_forms(Context(v, k), 0, single_tails(k), layers);
}

Count size_PE(const Word& v, int k, LayerCounts* layers) {
    require_parity(v, false);
    return count_forms(Context(v, k), 1, single_tails(k), layers);
}

Count size_PS(const Word& v, int k, LayerCounts* layers) {
    require_parity(v, false);
    return count_forms(Context(v, k), 0, double_tails(k), layers);
}

Count odd_period_above(const Word& v, int k) {
    require_nonempty(v);
    if (v.size() % 2)
        return size_PO(v, k);
    Word h = half(v);
    Count r = odd_period_above(h, k);
    if (palindromic_rep(h) && period(h) % 2 == 1 && power(h, 2) > v)
        r += 1;
    return r;
}

Count ge(const Word& v, int k, BranchRule rule) { return shape_count(v, k, rule, true); }
Count gs(const Word& v, int k, BranchRule rule) { return shape_count(v, k, rule, false); }

Count total_palindromic(size_t n, int k) {
    if (n == 0)
        throw word_error("empty word");
    if (n % 2)
        return pow(Count(k), static_cast<unsigned>((n + 1) / 2));
    Word bottom(n, 0);
    return exact_half(size_PE(bottom, k) + size_PS(bottom, k)) + 1;
}

Count printed_even_total(size_t n, int k) {
    size_t h = n / 2;
    size_t l = h % 2 ? (n + 2) / 4 : n / 4;
    Count kk(k);
    return (pow(kk, static_cast<unsigned>(h)) * (k + 2) + pow(kk, static_cast<unsigned>(l))) / 2 - k;
}

PalindromicBreakdown palindromic_breakdown(const Word& v, int k) {
    require_nonempty(v);
    PalindromicBreakdown r;
    r.total = total_palindromic(v.size(), k);
    int self = palindromic_rep(v) ? 1 : 0;
    if (v.size() % 2) {
        r.po = size_PO(v, k);
        r.overlap = r.po;
        r.rp = r.total - r.po - self;
        return r;
    }
    r.pe = size_PE(v, k);
    r.ps = size_PS(v, k);
    r.overlap = odd_period_above(v, k);
    r.ge = exact_half(r.pe + r.overlap);
    r.gs = exact_half(r.ps + r.overlap);
    r.rp = r.total - (r.ge + r.gs - r.overlap) - self;
    return r;
}

Count rank_palindromic(const Word& v, int k) { return palindromic_breakdown(v, k).rp; }

}  // namespace bracelet
