#pragma once

#include "bracelet/core_words.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace bracelet {

struct budget_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ClassKind { Necklace, Bracelet, PalindromicNecklace };
enum class RankKind { Necklace, Palindromic, Enclosing, Bracelet };

// 2^24 words unless BRACELET_BUDGET is set.
std::uint64_t default_budget();
void check_budget(size_t n, int k, std::uint64_t budget);

// Brute force over all k^n words, built once and queried many times.
class Oracle {
public:
    Oracle(size_t n, int k, std::uint64_t budget = default_budget());

    size_t n() const { return n_; }
    int k() const { return k_; }
    const std::vector<Word>& necklaces() const { return necklaces_; }
    const std::vector<Word>& bracelets() const { return bracelets_; }
    const std::vector<Word>& palindromic() const { return palindromic_; }
    const std::vector<Word>& classes(ClassKind kind) const;

    // Bracelets whose two necklace representatives satisfy <u> < v <= <u^R>.
    std::vector<Word> enclosing(const Word& v) const;
    Count rank(RankKind kind, const Word& v) const;

private:
    size_t n_;
    int k_;
    std::vector<Word> necklaces_, bracelets_, palindromic_;
    std::vector<Word> mirror_;  // mirror_[i] = <reverse(necklaces_[i])>
};

std::vector<Word> enumerate_class(ClassKind kind, size_t n, int k,
                                  std::uint64_t budget = default_budget());
std::vector<Word> oracle_enclosing(const Word& v, int k,
                                   std::uint64_t budget = default_budget());
Count oracle_rank(RankKind kind, const Word& v, int k,
                  std::uint64_t budget = default_budget());

// Calls f on every word of length n over k symbols in lexicographic order.
template <class F>
void for_each_word(size_t n, int k, F&& f) {
    Word w(n, 0);
    while (true) {
        f(static_cast<const Word&>(w));
        size_t i = n;
        while (i > 0 && w[i - 1] == k - 1)
            w[--i] = 0;
        if (i == 0)
            return;
        ++w[i - 1];
    }
}

}  // namespace bracelet
