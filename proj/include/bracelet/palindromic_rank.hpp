#pragma once

#include "bracelet/bounding.hpp"
#include "bracelet/core_words.hpp"

#include <map>
#include <tuple>

namespace bracelet {

// (i, j, s) -> number of palindromic cores at layer i with automaton state j
// and strict bound s. Odd case and phi.phi^R: cores of length 2i; even case
// x.phi.y.phi^R: cores of length 2i-1.
struct LayerCounts {
    std::map<std::tuple<int, int, int>, Count> cells;
};

struct PalindromicBreakdown {
    Count po, pe, ps, ge, gs, overlap, total, rp;
};

// How GE/GS account for classes holding both word shapes.
enum class BranchRule {
    OddPeriod,   // count odd-period palindromic classes above v (exact)
    HalfPrefix,  // |PO(v[0..n/2))| or GE(v[0..n/2)) by parity of n/2
    Literal,     // |PO(v)| for odd n/2 as printed; undefined for even n
};

// Symbols x with v[0..j) x s >= v, s the id of a subword of length n-1.
int size_X(const Word& v, int j, int s, const SubwordTable& table);

// Word counts with every rotation > v. PO: palindromes, n odd.
// PE: x.phi.y.phi^R, n even. PS: phi.phi^R, n even.
Count size_PO(const Word& v, int k, LayerCounts* layers = nullptr);
Count size_PE(const Word& v, int k, LayerCounts* layers = nullptr);
Count size_PS(const Word& v, int k, LayerCounts* layers = nullptr);

// Palindromic necklace classes of odd period with representative > v.
Count odd_period_above(const Word& v, int k);

Count ge(const Word& v, int k, BranchRule rule = BranchRule::OddPeriod);
Count gs(const Word& v, int k, BranchRule rule = BranchRule::OddPeriod);

Count total_palindromic(size_t n, int k);
// The closed even-length formula as printed: (k^{n/2}(k+2) + k^l)/2 - k.
Count printed_even_total(size_t n, int k);

PalindromicBreakdown palindromic_breakdown(const Word& v, int k);
Count rank_palindromic(const Word& v, int k);

}  // namespace bracelet
