#include "bracelet/bracelet_api.hpp"

#include "bracelet/enclosing_rank.hpp"
#include "bracelet/necklace_rank.hpp"
#include "bracelet/palindromic_rank.hpp"

#include <stdexcept>

namespace bracelet {

void validate_word(const Word& v, int k) {
    require_nonempty(v);
    if (k < 1)
        throw word_error("alphabet is empty");
    for (int x : v)
        if (x < 0 || x >= k)
            throw word_error("symbol out of alphabet");
}

RankBreakdown rank_bracelet(const Word& v, int k) {
    validate_word(v, k);
    RankBreakdown r;
    if (v.size() <= 2) {
        // every necklace of length 1 or 2 is palindromic
        r.rn = rank_necklaces(v, k);
        r.rp = r.rn;
        r.re = 0;
        r.rb = r.rn;
        return r;
    }
    r.rn = rank_necklaces(v, k);
    r.rp = rank_palindromic(v, k);
    r.re = rank_enclosing(v, k);
    Count sum = r.rn + r.rp + r.re;
    if (sum % 2 != 0)
        throw std::logic_error("odd rank sum");
    r.rb = sum / 2;
    return r;
}

Count count_bracelets(size_t n, int k) {
    if (n == 0)
        throw word_error("empty word");
    return rank_bracelet(Word(n, k - 1), k).rb + 1;
}

Word unrank_bracelet(const Count& z, size_t n, int k) {
    if (n == 0)
        throw word_error("empty word");
    if (z < 0 || z >= count_bracelets(n, k))
        throw std::out_of_range("index out of range");
    Word w(n, 0);
    for (size_t p = 0; p < n; ++p) {
        // largest x with rank(prefix x 0...0) <= z
        int lo = 0, hi = k - 1;
        while (lo < hi) {
            int mid = (lo + hi + 1) / 2;
            w[p] = mid;
            if (rank_bracelet(w, k).rb <= z)
                lo = mid;
            else
                hi = mid - 1;
        }
        w[p] = lo;
    }
    return w;
}

}  // namespace bracelet
