#include "bracelet/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace bracelet {

std::uint64_t default_budget() {
    if (const char* env = std::getenv("BRACELET_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
        }
    }
    return std::uint64_t{1} << 24;
}

void check_budget(size_t n, int k, std::uint64_t budget) {
    Count total = boost::multiprecision::pow(Count(k), static_cast<unsigned>(n));
    if (total > budget)
        throw budget_exceeded("enumeration of " + total.str() + " words exceeds budget " +
                              std::to_string(budget));
}

Oracle::Oracle(size_t n, int k, std::uint64_t budget) : n_(n), k_(k) {
    if (n == 0)
        throw word_error("empty word");
    check_budget(n, k, budget);
    for_each_word(n, k, [&](const Word& w) {
        if (!is_necklace(w))
            return;
        Word m = min_rotation(reverse(w));
        necklaces_.push_back(w);
        mirror_.push_back(m);
        if (m == w)
            palindromic_.push_back(w);
        if (w <= m)
            bracelets_.push_back(w);
    });
}

const std::vector<Word>& Oracle::classes(ClassKind kind) const {
    switch (kind) {
    case ClassKind::Necklace: return necklaces_;
    case ClassKind::Bracelet: return bracelets_;
    default: return palindromic_;
    }
}

std::vector<Word> Oracle::enclosing(const Word& v) const {
    std::vector<Word> out;
    for (size_t i = 0; i < necklaces_.size() && necklaces_[i] < v; ++i)
        if (necklaces_[i] != mirror_[i] && v <= mirror_[i])
            out.push_back(necklaces_[i]);
    return out;
}

Count Oracle::rank(RankKind kind, const Word& v) const {
    auto below = [&](const std::vector<Word>& xs) {
        return Count(std::lower_bound(xs.begin(), xs.end(), v) - xs.begin());
    };
    switch (kind) {
    case RankKind::Necklace: return below(necklaces_);
    case RankKind::Palindromic: return below(palindromic_);
    case RankKind::Bracelet: return below(bracelets_);
    default: return Count(enclosing(v).size());
    }
}

std::vector<Word> enumerate_class(ClassKind kind, size_t n, int k, std::uint64_t budget) {
    return Oracle(n, k, budget).classes(kind);
}

std::vector<Word> oracle_enclosing(const Word& v, int k, std::uint64_t budget) {
    return Oracle(v.size(), k, budget).enclosing(v);
}

Count oracle_rank(RankKind kind, const Word& v, int k, std::uint64_t budget) {
    return Oracle(v.size(), k, budget).rank(kind, v);
}

}  // namespace bracelet
