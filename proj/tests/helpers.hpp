#pragma once

#include "bracelet/core_words.hpp"

#include <string>

// Words written with letters a, b, c, ... for symbols 0, 1, 2, ...
inline bracelet::Word W(const std::string& s) {
    bracelet::Word w;
    for (char c : s)
        w.push_back(c - 'a');
    return w;
}

inline std::string S(const bracelet::Word& w) {
    std::string s;
    for (int x : w)
        s.push_back(static_cast<char>('a' + x));
    return s;
}
