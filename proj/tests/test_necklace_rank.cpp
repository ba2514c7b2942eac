#include "bracelet/necklace_rank.hpp"
#include "bracelet/oracle.hpp"
#include "helpers.hpp"

#include <doctest.h>

#include <boost/integer/common_factor.hpp>

using namespace bracelet;
using boost::multiprecision::pow;

TEST_CASE("count_all_rotations_geq") {
    CHECK(count_all_rotations_geq(5, W("aaaaa"), 3) == 243);
    // words of length 4 whose least rotation is >= abab: abab, baba, abbb, babb, bbab, bbba, bbbb
    CHECK(count_all_rotations_geq(4, W("abab"), 2) == 7);
    CHECK(count_all_rotations_geq(6, W("cccccc"), 3) == 1);
    CHECK(count_all_rotations_geq(1, W("b"), 3) == 2);
}

TEST_CASE("count_all_rotations_geq matches brute force, L <= 8") {
    for (int k = 2; k <= 3; ++k)
        for (size_t L = 1; L <= (k == 2 ? 8u : 6u); ++L)
            for_each_word(L, k, [&](const Word& w) {
                Count brute = 0;
                for_each_word(L, k, [&](const Word& u) {
                    if (!(min_rotation(u) < w))
                        brute += 1;
                });
                REQUIRE(count_all_rotations_geq(L, w, k) == brute);
            });
}

TEST_CASE("count_lyndon_below") {
    CHECK(count_lyndon_below(1, W("b"), 2) == 1);
    CHECK(count_lyndon_below(3, W("abb"), 2) == 1);
    CHECK(count_lyndon_below(4, W("bbbb"), 2) == 3);
    CHECK(count_lyndon_below(6, W("aaaaaa"), 2) == 0);
}

TEST_CASE("Lyndon counts sum to k^n") {
    for (int k = 2; k <= 3; ++k)
        for (size_t n = 1; n <= 14; ++n) {
            Count sum = 0;
            for (size_t e : divisors_of(n)) {
                Count lyn = count_lyndon_below(e, Word(e, k - 1), k) + (e == 1 ? 1 : 0);
                sum += Count(e) * lyn;
            }
            REQUIRE(sum == pow(Count(k), static_cast<unsigned>(n)));
        }
}

TEST_CASE("divisors and Moebius") {
    CHECK(divisors_of(12) == std::vector<size_t>{1, 2, 3, 4, 6, 12});
    auto mu = mobius_table(12);
    CHECK(mu[1] == 1);
    CHECK(mu[4] == 0);
    CHECK(mu[6] == 1);
    CHECK(mu[7] == -1);
    for (size_t m = 1; m <= 12; ++m) {
        int s = 0;
        for (size_t d : divisors_of(m))
            s += mu[d];
        CHECK(s == (m == 1 ? 1 : 0));
    }
}

TEST_CASE("rank_necklaces examples") {
    CHECK(rank_necklaces(W("aaaaaaa"), 2) == 0);
    CHECK(rank_necklaces(W("abab"), 2) == 3);
    CHECK(rank_necklaces(W("acc"), 4) == 8);
    CHECK(rank_necklaces(W("d"), 4) == 3);
    CHECK(rank_necklaces(W("ba"), 2) == 2);
}

TEST_CASE("necklace totals agree with Burnside, n <= 14, k <= 4") {
    for (int k = 1; k <= 4; ++k)
        for (size_t n = 1; n <= 14; ++n) {
            Count sum = 0;
            for (size_t d = 1; d <= n; ++d)
                if (n % d == 0) {
                    size_t m = n / d;
                    size_t phi = 0;
                    for (size_t a = 1; a <= m; ++a)
                        if (boost::integer::gcd(a, m) == 1)
                            ++phi;
                    sum += Count(phi) * pow(Count(k), static_cast<unsigned>(d));
                }
            REQUIRE(count_necklaces(n, k) == sum / n);
            REQUIRE(rank_necklaces(Word(n, k - 1), k) + 1 == sum / n);
        }
}

TEST_CASE("rank_necklaces equals the oracle and is monotone") {
    std::pair<size_t, int> ranges[] = {{10, 2}, {7, 3}, {5, 4}};
    for (auto [top, k] : ranges)
        for (size_t n = 1; n <= top; ++n) {
            Oracle o(n, k);
            Count prev = 0;
            for_each_word(n, k, [&](const Word& v) {
                Count r = rank_necklaces(v, k);
                REQUIRE(r == o.rank(RankKind::Necklace, v));
                REQUIRE(r >= prev);
                prev = r;
            });
        }
}
