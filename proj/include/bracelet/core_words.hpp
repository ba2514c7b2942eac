#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bracelet {

using Word = std::vector<int>;
using Count = boost::multiprecision::cpp_int;

struct word_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Ordered alphabet; symbol order is the order given, not character order.
class Alphabet {
public:
    explicit Alphabet(std::string symbols);
    int k() const { return static_cast<int>(symbols_.size()); }
    const std::string& symbols() const { return symbols_; }
    char symbol(int i) const { return symbols_.at(static_cast<size_t>(i)); }
    int index(char c) const;
    Word parse(std::string_view s) const;
    std::string format(const Word& w) const;

private:
    std::string symbols_;
    int lookup_[256];
};

struct CanonicalForms {
    Word necklace_rep;
    Word bracelet_rep;
    size_t period = 0;
    bool is_palindromic = false;
};

void require_nonempty(const Word& w);

Word rotate(const Word& w, size_t r);
Word reverse(const Word& w);
Word power(const Word& w, size_t t);
size_t period(const Word& w);

// Booth's least rotation; returns the start offset.
size_t min_rotation_offset(const Word& w);
Word min_rotation(const Word& w);
Word min_rotation_naive(const Word& w);

Word bracelet_representative(const Word& w);
bool is_necklace(const Word& w);
bool is_lyndon(const Word& w);
bool is_palindromic_necklace(const Word& w);
CanonicalForms canonical_forms(const Word& w);

// Longest prefix that is a Lyndon word.
size_t lyndon_prefix_length(const Word& w);
// Prefix of some necklace; the empty word counts.
bool is_prenecklace(const Word& w);

// fail[j] = length of the longest proper border of v[0..j); fail[0] = -1.
std::vector<int> failure_function(const Word& v);
size_t longest_suffix_prefix_match(const Word& w, const Word& v);

}  // namespace bracelet
