#pragma once

#include "bracelet/core_words.hpp"

#include <vector>

namespace bracelet {

// The representative of an enclosing bracelet starts with
// p = v[0..i) x, v[i-l] <= x < v[i], where l is the Lyndon prefix length of v[0..i).
struct EnclosingParams {
    size_t i = 0;
    int x = 0;
    size_t l = 0;
    Word prefix(const Word& v) const;
};

std::vector<EnclosingParams> enclosing_params(const Word& v);

// Sum over words r = p.phi of length |V| such that every cyclic window of r
// of length |p| is >= p and every rotation of r^R is >= V, of the distance
// from the last cyclic occurrence of p in r to the end of r. Each necklace
// class with these properties contributes its size.
Count count_marked(const Word& V, const Word& p, int k);

// Necklace classes of length |v| whose least rotation starts with p and
// whose mirror has least rotation >= v.
Count count_enclosing_with_prefix(const Word& v, const Word& p, int k);

// Bracelets with <u> < v <= <u^R>.
Count rank_enclosing(const Word& v, int k);

}  // namespace bracelet
