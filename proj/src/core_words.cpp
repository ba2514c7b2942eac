#include "bracelet/core_words.hpp"

#include <algorithm>

namespace bracelet {

Alphabet::Alphabet(std::string symbols) : symbols_(std::move(symbols)) {
    std::fill(std::begin(lookup_), std::end(lookup_), -1);
    if (symbols_.empty())
        throw word_error("alphabet is empty");
    for (size_t i = 0; i < symbols_.size(); ++i) {
        auto c = static_cast<unsigned char>(symbols_[i]);
        if (lookup_[c] != -1)
            throw word_error(std::string("duplicate symbol '") + symbols_[i] + "'");
        lookup_[c] = static_cast<int>(i);
    }
}

int Alphabet::index(char c) const {
    int i = lookup_[static_cast<unsigned char>(c)];
    if (i < 0)
        throw word_error(std::string("symbol '") + c + "' not in alphabet");
    return i;
}

Word Alphabet::parse(std::string_view s) const {
    if (s.empty())
        throw word_error("empty word");
    Word w;
    w.reserve(s.size());
    for (char c : s)
        w.push_back(index(c));
    return w;
}

std::string Alphabet::format(const Word& w) const {
    std::string s;
    s.reserve(w.size());
    for (int x : w)
        s.push_back(symbol(x));
    return s;
}

void require_nonempty(const Word& w) {
    if (w.empty())
        throw word_error("empty word");
}

Word rotate(const Word& w, size_t r) {
    if (w.empty())
        return w;
    r %= w.size();
    Word out(w.begin() + static_cast<long>(r), w.end());
    out.insert(out.end(), w.begin(), w.begin() + static_cast<long>(r));
    return out;
}

Word reverse(const Word& w) { return Word(w.rbegin(), w.rend()); }

Word power(const Word& w, size_t t) {
    Word out;
    out.reserve(w.size() * t);
    for (size_t i = 0; i < t; ++i)
        out.insert(out.end(), w.begin(), w.end());
    return out;
}

size_t period(const Word& w) {
    require_nonempty(w);
    size_t n = w.size();
    auto f = failure_function(w);
    size_t p = n - static_cast<size_t>(f[n]);
    return n % p == 0 ? p : n;
}

size_t min_rotation_offset(const Word& w) {
    size_t n = w.size();
    if (n == 0)
        return 0;
    std::vector<long> f(2 * n, -1);
    size_t k = 0;
    for (size_t j = 1; j < 2 * n; ++j) {
        int sj = w[j % n];
        long i = f[j - k - 1];
        while (i != -1 && sj != w[(k + static_cast<size_t>(i) + 1) % n]) {
            if (sj < w[(k + static_cast<size_t>(i) + 1) % n])
                k = j - static_cast<size_t>(i) - 1;
            i = f[static_cast<size_t>(i)];
        }
        if (sj != w[(k + static_cast<size_t>(i) + 1) % n]) {
            if (sj < w[k % n])
                k = j;
            f[j - k] = -1;
        } else {
            f[j - k] = i + 1;
        }
    }
    return k % n;
}

Word min_rotation(const Word& w) {
    require_nonempty(w);
    return rotate(w, min_rotation_offset(w));
}

Word min_rotation_naive(const Word& w) {
    require_nonempty(w);
    Word best = w;
    for (size_t r = 1; r < w.size(); ++r)
        best = std::min(best, rotate(w, r));
    return best;
}

Word bracelet_representative(const Word& w) {
    return std::min(min_rotation(w), min_rotation(reverse(w)));
}

bool is_necklace(const Word& w) { return min_rotation(w) == w; }

bool is_lyndon(const Word& w) {
    require_nonempty(w);
    return is_necklace(w) && period(w) == w.size();
}

bool is_palindromic_necklace(const Word& w) {
    return min_rotation(w) == min_rotation(reverse(w));
}

CanonicalForms canonical_forms(const Word& w) {
    CanonicalForms c;
    c.necklace_rep = min_rotation(w);
    Word mirror = min_rotation(reverse(w));
    c.bracelet_rep = std::min(c.necklace_rep, mirror);
    c.period = period(w);
    c.is_palindromic = c.necklace_rep == mirror;
    return c;
}

namespace {

// Length of the longest Lyndon prefix of the longest prenecklace prefix,
// and whether the whole word is a prenecklace.
std::pair<size_t, bool> prenecklace_scan(const Word& w) {
    size_t l = 1;
    for (size_t i = 1; i < w.size(); ++i) {
        if (w[i] < w[i - l])
            return {l, false};
        if (w[i] > w[i - l])
            l = i + 1;
    }
    return {l, true};
}

}  // namespace

size_t lyndon_prefix_length(const Word& w) {
    require_nonempty(w);
    return prenecklace_scan(w).first;
}

bool is_prenecklace(const Word& w) {
    return w.empty() || prenecklace_scan(w).second;
}

std::vector<int> failure_function(const Word& v) {
    std::vector<int> f(v.size() + 1);
    f[0] = -1;
    int k = -1;
    for (size_t i = 0; i < v.size(); ++i) {
        while (k >= 0 && v[static_cast<size_t>(k)] != v[i])
            k = f[static_cast<size_t>(k)];
        f[i + 1] = ++k;
    }
    return f;
}

size_t longest_suffix_prefix_match(const Word& w, const Word& v) {
    auto f = failure_function(v);
    size_t j = 0;
    for (int c : w) {
        if (j == v.size())
            j = static_cast<size_t>(f[j]);
        while (true) {
            if (j < v.size() && v[j] == c) {
                ++j;
                break;
            }
            if (j == 0)
                break;
            j = static_cast<size_t>(f[j]);
        }
    }
    return j;
}

}  // namespace bracelet
