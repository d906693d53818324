#pragma once

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace precy {

// Graded sign conventions. An orientation of a combinatorial object is an
// ordered word of symbols, each carrying a parity; reordering the word picks
// up (-1) for every transposition of two odd symbols. Even symbols commute
// with everything.

// perm maps target position -> source position (target[i] = source[perm[i]]).
// parity is indexed by source position, reduced mod 2.
inline int koszul_sign(const std::vector<int>& perm, const std::vector<int>& parity) {
    int sign = 1;
    for (size_t i = 0; i < perm.size(); ++i) {
        if (!(parity[perm[i]] & 1)) continue;
        for (size_t j = i + 1; j < perm.size(); ++j) {
            if ((parity[perm[j]] & 1) && perm[i] > perm[j]) sign = -sign;
        }
    }
    return sign;
}

// Sign relating two orderings of the same symbol set. Symbols are opaque ids,
// each appearing exactly once in both words.
inline int reorder_sign(const std::vector<int>& from, const std::vector<int>& to,
                        const std::vector<int>& parity_of_symbol) {
    if (from.size() != to.size()) throw std::invalid_argument("reorder_sign: size mismatch");
    std::unordered_map<int, int> pos;
    pos.reserve(from.size());
    for (size_t i = 0; i < from.size(); ++i) pos[from[i]] = static_cast<int>(i);
    std::vector<int> perm(to.size());
    std::vector<int> parity(from.size());
    for (size_t i = 0; i < to.size(); ++i) {
        auto it = pos.find(to[i]);
        if (it == pos.end()) throw std::invalid_argument("reorder_sign: symbol sets differ");
        perm[i] = it->second;
        parity[it->second] = parity_of_symbol[to[i]] & 1;
    }
    return koszul_sign(perm, parity);
}

} // namespace precy
