#include "bracelet/palindromic_rank.hpp"
#include "bracelet/oracle.hpp"
#include "ground_truth.hpp"
#include "helpers.hpp"

#include <doctest.h>

#include <set>

using namespace bracelet;
using boost::multiprecision::pow;

namespace {

Count brute_forms(const Word& v, int k, int shape) {
    size_t n = v.size();
    Count c = 0;
    for_each_word(n, k, [&](const Word& w) {
        bool ok = false;
        if (shape == 0)  // phi x phi^R
            ok = w == reverse(w);
        else if (shape == 1)  // x phi y phi^R
            ok = Word(w.begin() + 1, w.end()) == reverse(Word(w.begin() + 1, w.end()));
        else  // phi phi^R
            ok = w == reverse(w);
        if (ok && min_rotation(w) > v)
            c += 1;
    });
    return c;
}

bool is_e_shape(const Word& w) {
    Word t(w.begin() + 1, w.end());
    return t == reverse(t);
}

}  // namespace

TEST_CASE("size_X") {
    auto t = build_subword_table(W("aaaaa"), 3);
    CHECK(size_X(W("aaaaa"), 2, 0, t) == 3);
    auto u = build_subword_table(W("aab"), 2);
    CHECK(size_X(W("aab"), 0, static_cast<int>(u.size(2)) - 1, u) == 2);
    CHECK(size_X(W("aab"), 0, 0, u) == 1);
}

TEST_CASE("PO, PE, PS examples") {
    CHECK(size_PO(W("aaaaa"), 2) == 7);
    CHECK(size_PO(W("aaaaaaa"), 3) == 80);
    CHECK(size_PO(W("ccccc"), 3) == 0);
    CHECK(size_PO(W("aabab"), 2) == brute_forms(W("aabab"), 2, 0));
    CHECK(size_PE(W("bbbb"), 2) == 0);
    CHECK(size_PE(W("aaab"), 2) == brute_forms(W("aaab"), 2, 1));
    CHECK(size_PE(W("aaaaaa"), 2) == 15);
    CHECK(size_PS(W("bbbb"), 2) == 0);
    CHECK(size_PS(W("aaab"), 2) == brute_forms(W("aaab"), 2, 2));
    CHECK(size_PS(W("ab"), 2) == 1);
    CHECK_THROWS_AS(size_PO(W("aaaa"), 2), word_error);
    CHECK_THROWS_AS(size_PE(W("aaa"), 2), word_error);
}

TEST_CASE("PO, PE, PS match brute-force form counts") {
    for (int k = 2; k <= 3; ++k)
        for (size_t n = 1; n <= (k == 2 ? 10u : 6u); ++n)
            for_each_word(n, k, [&](const Word& v) {
                if (n % 2) {
                    REQUIRE(size_PO(v, k) == brute_forms(v, k, 0));
                } else {
                    REQUIRE(size_PE(v, k) == brute_forms(v, k, 1));
                    REQUIRE(size_PS(v, k) == brute_forms(v, k, 2));
                }
            });
}

TEST_CASE("GE and GS") {
    CHECK(ge(W("aaaa"), 2) == 4);
    CHECK(ge(W("bbbb"), 2) == 0);
    CHECK(gs(W("bbbb"), 2) == 0);
    CHECK(gs(W("aaaa"), 2) == 2);
    // the half-prefix reading halves an odd number here
    CHECK_THROWS_AS(ge(W("aaaa"), 2, BranchRule::HalfPrefix), std::domain_error);
}

TEST_CASE("odd-period branch obeys its half-length recursion") {
    for_each_word(8, 2, [&](const Word& v) {
        Word h(v.begin(), v.begin() + 4);
        Count r = odd_period_above(h, 2);
        if (is_necklace(h) && is_palindromic_necklace(h) && period(h) % 2 == 1 && power(h, 2) > v)
            r += 1;
        REQUIRE(odd_period_above(v, 2) == r);
    });
}

TEST_CASE("totals") {
    CHECK(total_palindromic(5, 2) == 8);
    CHECK(total_palindromic(2, 2) == 3);
    CHECK(total_palindromic(4, 2) == 6);
    CHECK(printed_even_total(4, 2) == 7);
    CHECK(printed_even_total(2, 2) == 3);
    for (size_t n = 1; n <= 13; n += 2)
        CHECK(total_palindromic(n, 2) == pow(Count(2), static_cast<unsigned>((n + 1) / 2)));
    for (int k = 1; k <= 3; ++k)
        for (size_t n = 1; n <= 10; ++n)
            REQUIRE(total_palindromic(n, k) == enumerate_class(ClassKind::PalindromicNecklace, n, k).size());
}

TEST_CASE("rank_palindromic examples") {
    CHECK(rank_palindromic(W("aaaaaa"), 2) == 0);
    CHECK(rank_palindromic(W("acc"), 4) == 5);
    CHECK(rank_palindromic(W("cccc"), 3) == total_palindromic(4, 3) - 1);
    auto b = palindromic_breakdown(W("abab"), 2);
    CHECK(b.rp == b.total - (b.ge + b.gs - b.overlap) - 1);
}

TEST_CASE("rank_palindromic equals the oracle") {
    std::pair<size_t, int> ranges[] = {{10, 2}, {7, 3}, {5, 4}};
    for (auto [top, k] : ranges)
        for (size_t n = 1; n <= top; ++n) {
            Oracle o(n, k);
            for_each_word(n, k, [&](const Word& v) { REQUIRE(rank_palindromic(v, k) == o.rank(RankKind::Palindromic, v)); });
        }
}

TEST_CASE("word shapes inside palindromic classes") {
    for (int k = 2; k <= 3; ++k)
        for (size_t n = 1; n <= (k == 2 ? 11u : 8u); ++n)
            for (const auto& c : enumerate_class(ClassKind::PalindromicNecklace, n, k)) {
                std::set<Word> orbit;
                for (size_t r = 0; r < n; ++r)
                    orbit.insert(rotate(c, r));
                int odd = 0, e = 0, s = 0;
                for (const auto& w : orbit) {
                    bool pal = w == reverse(w);
                    if (n % 2)
                        odd += pal;
                    else {
                        e += is_e_shape(w);
                        s += pal;
                        bool constant = std::count(w.begin(), w.end(), w[0]) == static_cast<long>(n);
                        REQUIRE((is_e_shape(w) && pal) == constant);
                    }
                }
                if (n % 2) {
                    REQUIRE(odd == 1);
                } else {
                    REQUIRE(e + s >= 1);
                    REQUIRE(e <= 2);
                    REQUIRE(s <= 2);
                }
            }
}

TEST_CASE("layer cells equal brute-force palindromes, n <= 8") {
    for (size_t n = 2; n <= 8; ++n)
        for_each_word(n, 2, [&](const Word& v) {
            LayerCounts got;
            if (n % 2) {
                size_PO(v, 2, &got);
                REQUIRE(got.cells == ground_truth::palindrome_layers(v, 2, 0, n - 1));
            } else {
                size_PE(v, 2, &got);
                REQUIRE(got.cells == ground_truth::palindrome_layers(v, 2, 1, n - 1));
                LayerCounts ps;
                size_PS(v, 2, &ps);
                REQUIRE(ps.cells == ground_truth::palindrome_layers(v, 2, 0, n - 2));
            }
        });
}
