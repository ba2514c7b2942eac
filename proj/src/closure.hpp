#pragma once

#include "bracelet/bounding.hpp"
#include "bracelet/necklace_rank.hpp"

#include <optional>

namespace bracelet::detail {

// alpha has length L = n - |tail|, is not a cyclic subword of v, has no
// factor below the prefix of v of the same length, and ends in automaton
// state j. Returns the least strict bound s of alpha for which every
// rotation of alpha.tail exceeds v, or nullopt if none does.
inline std::optional<int> closure_threshold(const PrefixAutomaton& a, const SubwordTable& t,
                                            int j, const Word& tail) {
    size_t n = a.n(), b = tail.size(), L = n - b;
    int need = t.prefix_of_v(L);
    auto compare = [&](size_t from, size_t len, size_t at) {
        for (size_t i = 0; i < len; ++i)
            if (tail[from + i] != a.v[at + i])
                return tail[from + i] < a.v[at + i] ? -1 : 1;
        return 0;
    };
    // rotations starting inside alpha at a border, or at the tail itself
    for (int m : a.chain(j)) {
        auto mm = static_cast<size_t>(m);
        int r = compare(0, b, mm);
        if (r < 0)
            return std::nullopt;
        if (r == 0)
            need = std::max(need, t.id_at(mm + b, L));
    }
    // rotations starting strictly inside the tail
    for (size_t g = 1; g < b; ++g) {
        int r = compare(b - g, g, 0);
        if (r < 0)
            return std::nullopt;
        if (r == 0)
            need = std::max(need, t.id_at(g, L));
    }
    return need;
}

// Runs the automaton over w; false if some factor falls below v.
inline bool scan_valid(const PrefixAutomaton& a, const Word& w, int& state) {
    int j = 0;
    for (int c : w) {
        auto jj = static_cast<size_t>(j);
        if (!a.ok[jj][static_cast<size_t>(c)])
            return false;
        j = a.delta[jj][static_cast<size_t>(c)];
    }
    state = j;
    return true;
}

}  // namespace bracelet::detail
