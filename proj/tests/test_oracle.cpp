#include "bracelet/oracle.hpp"
#include "helpers.hpp"

#include <doctest.h>

#include <algorithm>

using namespace bracelet;

TEST_CASE("class enumeration") {
    auto b = enumerate_class(ClassKind::Bracelet, 8, 2);
    REQUIRE(b.size() == 30);
    CHECK(b[0] == W("aaaaaaaa"));
    CHECK(b[1] == W("aaaaaaab"));
    CHECK(std::is_sorted(b.begin(), b.end()));
    CHECK(enumerate_class(ClassKind::Necklace, 4, 2).size() == 6);
    CHECK(enumerate_class(ClassKind::PalindromicNecklace, 5, 2).size() == 8);
    CHECK(enumerate_class(ClassKind::Necklace, 3, 4).size() == 24);
    CHECK(enumerate_class(ClassKind::PalindromicNecklace, 3, 4).size() == 16);
}

TEST_CASE("enclosing lists") {
    CHECK(oracle_enclosing(W("acc"), 4) == std::vector<Word>{W("abd")});
    CHECK(oracle_enclosing(W("aaaa"), 2).empty());
    auto e = oracle_enclosing(W("aaca"), 4);
    CHECK(std::find(e.begin(), e.end(), W("aabc")) != e.end());
    // the larger representative itself is enclosed by its own bracelet
    CHECK(oracle_enclosing(W("acb"), 3) == std::vector<Word>{W("abc")});
}

TEST_CASE("oracle ranks") {
    CHECK(oracle_rank(RankKind::Bracelet, W("bbbbbbbb"), 2) == 29);
    CHECK(oracle_rank(RankKind::Necklace, W("abab"), 2) == 3);
    CHECK(oracle_rank(RankKind::Palindromic, W("acc"), 4) == 5);
    CHECK(oracle_rank(RankKind::Enclosing, W("acc"), 4) == 1);
}

TEST_CASE("bracelets are one or two necklace classes") {
    for (int k = 2; k <= 3; ++k)
        for (size_t n = 1; n <= 7; ++n) {
            Oracle o(n, k);
            size_t pal = o.palindromic().size();
            size_t chiral = o.necklaces().size() - pal;
            REQUIRE(chiral % 2 == 0);
            REQUIRE(o.bracelets().size() == pal + chiral / 2);
            for (const auto& b : o.bracelets())
                REQUIRE(bracelet_representative(b) == b);
        }
}

TEST_CASE("budget") {
    CHECK_THROWS_AS(Oracle(30, 2, 1000), budget_exceeded);
    CHECK_NOTHROW(check_budget(10, 2, 1024));
    CHECK_THROWS_AS(check_budget(11, 2, 1024), budget_exceeded);
}
