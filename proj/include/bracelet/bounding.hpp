#pragma once

#include "bracelet/core_words.hpp"

#include <vector>

namespace bracelet {

// A bound is an index into S(v, l); Bottom lies below every subword.
constexpr int Bottom = -1;

struct SubwordTable {
    Word v;
    int k = 0;
    // subwords[l] = sorted distinct cyclic subwords of length l, l = 0..n.
    std::vector<std::vector<Word>> subwords;
    // pos_to_id[l][p] = id of the length-l subword starting at p.
    std::vector<std::vector<int>> pos_to_id;
    // For t in S(l): ids in S(l-1) of t without its last / first symbol.
    std::vector<std::vector<int>> prefix_id, suffix_id;

    size_t n() const { return v.size(); }
    size_t size(size_t l) const { return subwords[l].size(); }
    // Id of w in S(|w|), or Bottom when w is not a cyclic subword.
    int id_of(const Word& w) const;
    int id_at(size_t start, size_t l) const { return pos_to_id[l][start % n()]; }
    // Id of v[0..l).
    int prefix_of_v(size_t l) const { return pos_to_id[l][0]; }
};

SubwordTable build_subword_table(const Word& v, int k);

// Largest s in S(|w|) with s < w (strict) or s <= w (weak).
int bound_of(const Word& w, const SubwordTable& table, bool strict);

// xw[l][s+1][x]: strict bound of x.w in S(l+1) for any w of length l with
// strict bound s. wx[l][s+1]: strict bound of w.x, the same for every x.
using XWTable = std::vector<std::vector<std::vector<int>>>;
using WXTable = std::vector<std::vector<int>>;

XWTable build_XW(const SubwordTable& table);
WXTable build_WX(const SubwordTable& table);

struct BoundingTables {
    XWTable xw;
    WXTable wx;
    int XW(size_t l, int s, int x) const { return xw[l][static_cast<size_t>(s + 1)][static_cast<size_t>(x)]; }
    int WX(size_t l, int s, int = 0) const { return wx[l][static_cast<size_t>(s + 1)]; }
};

BoundingTables build_bounding_tables(const SubwordTable& table);

}  // namespace bracelet
