#pragma once

#include "bracelet/core_words.hpp"

#include <vector>

namespace bracelet {

// KMP automaton of v. State j means the longest suffix of the text read so
// far that is a prefix of v has length j.
struct PrefixAutomaton {
    Word v;
    int k = 0;
    std::vector<int> fail;
    std::vector<std::vector<int>> delta;  // [j][c]
    // ok[j][c]: appending c to a text in state j creates no factor
    // v[0..m).y with y < v[m], i.e. c >= v[m] for every border m of the state.
    std::vector<std::vector<char>> ok;

    size_t n() const { return v.size(); }
    // j, fail[j], ..., 0
    std::vector<int> chain(int j) const;
};

PrefixAutomaton build_prefix_automaton(const Word& v, int k);

struct DivisorDecomposition {
    std::vector<size_t> divisors;
    std::vector<int> mobius;          // mobius[m], m = 0..n
    std::vector<Count> lyndon_below;  // per divisor e: Lyndon words of length e below v[0..e)
};

std::vector<size_t> divisors_of(size_t n);
std::vector<int> mobius_table(size_t n);
DivisorDecomposition decompose(const Word& v, int k);

// Words u of length L all of whose rotations are >= w.
Count count_all_rotations_geq(size_t L, const Word& w, int k);
// Lyndon words of length e strictly below w.
Count count_lyndon_below(size_t e, const Word& w, int k);
// Necklace representatives of length |v| strictly below v.
Count rank_necklaces(const Word& v, int k);
Count count_necklaces(size_t n, int k);

}  // namespace bracelet
