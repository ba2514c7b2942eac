#pragma once

#include "bracelet/core_words.hpp"

namespace bracelet {

struct RankBreakdown {
    Count rn, rp, re, rb;
};

// Counts of representatives strictly below v; rb = (rn + rp + re) / 2.
RankBreakdown rank_bracelet(const Word& v, int k);
// The bracelet representative with 0-based rank z.
Word unrank_bracelet(const Count& z, size_t n, int k);
Count count_bracelets(size_t n, int k);

void validate_word(const Word& v, int k);

}  // namespace bracelet
