#include "bracelet/bounding.hpp"

#include <algorithm>
#include <numeric>

namespace bracelet {

namespace {

Word cyclic_subword(const Word& v, size_t start, size_t l) {
    Word w(l);
    for (size_t i = 0; i < l; ++i)
        w[i] = v[(start + i) % v.size()];
    return w;
}

}  // namespace

int SubwordTable::id_of(const Word& w) const {
    if (w.size() >= subwords.size())
        return Bottom;
    const auto& s = subwords[w.size()];
    auto it = std::lower_bound(s.begin(), s.end(), w);
    return it != s.end() && *it == w ? static_cast<int>(it - s.begin()) : Bottom;
}

SubwordTable build_subword_table(const Word& v, int k) {
    require_nonempty(v);
    size_t n = v.size();
    SubwordTable t;
    t.v = v;
    t.k = k;
    t.subwords.resize(n + 1);
    t.pos_to_id.assign(n + 1, std::vector<int>(n, 0));
    t.prefix_id.resize(n + 1);
    t.suffix_id.resize(n + 1);
    t.subwords[0] = {Word{}};
    for (size_t l = 1; l <= n; ++l) {
        std::vector<Word> words(n);
        for (size_t p = 0; p < n; ++p)
            words[p] = cyclic_subword(v, p, l);
        auto& s = t.subwords[l];
        s = words;
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        for (size_t p = 0; p < n; ++p)
            t.pos_to_id[l][p] = static_cast<int>(std::lower_bound(s.begin(), s.end(), words[p]) - s.begin());
        t.prefix_id[l].assign(s.size(), 0);
        t.suffix_id[l].assign(s.size(), 0);
        for (size_t p = 0; p < n; ++p) {
            auto id = static_cast<size_t>(t.pos_to_id[l][p]);
            t.prefix_id[l][id] = t.pos_to_id[l - 1][p];
            t.suffix_id[l][id] = t.pos_to_id[l - 1][(p + 1) % n];
        }
    }
    return t;
}

int bound_of(const Word& w, const SubwordTable& table, bool strict) {
    const auto& s = table.subwords.at(w.size());
    auto it = strict ? std::lower_bound(s.begin(), s.end(), w)
                     : std::upper_bound(s.begin(), s.end(), w);
    return static_cast<int>(it - s.begin()) - 1;
}

XWTable build_XW(const SubwordTable& table) {
    size_t n = table.n();
    XWTable xw(n);
    for (size_t l = 0; l < n; ++l) {
        const auto& next = table.subwords[l + 1];
        const auto& suf = table.suffix_id[l + 1];
        std::vector<size_t> order(next.size());
        std::iota(order.begin(), order.end(), 0);
        xw[l].assign(table.size(l) + 1, std::vector<int>(static_cast<size_t>(table.k)));
        for (int s = Bottom; s < static_cast<int>(table.size(l)); ++s)
            for (int x = 0; x < table.k; ++x) {
                // keys (t[0], id of t[1..]) increase along S(l+1)
                auto it = std::upper_bound(order.begin(), order.end(), 0, [&](int, size_t i) {
                    return next[i][0] > x || (next[i][0] == x && suf[i] > s);
                });
                xw[l][static_cast<size_t>(s + 1)][static_cast<size_t>(x)] =
                    static_cast<int>(it - order.begin()) - 1;
            }
    }
    return xw;
}

WXTable build_WX(const SubwordTable& table) {
    size_t n = table.n();
    WXTable wx(n);
    for (size_t l = 0; l < n; ++l) {
        const auto& pre = table.prefix_id[l + 1];
        wx[l].assign(table.size(l) + 1, Bottom);
        for (int s = Bottom; s < static_cast<int>(table.size(l)); ++s)
            wx[l][static_cast<size_t>(s + 1)] =
                static_cast<int>(std::upper_bound(pre.begin(), pre.end(), s) - pre.begin()) - 1;
    }
    return wx;
}

BoundingTables build_bounding_tables(const SubwordTable& table) {
    return {build_XW(table), build_WX(table)};
}

}  // namespace bracelet
