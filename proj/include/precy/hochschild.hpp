#pragma once

#include <string>
#include <vector>

#include "precy/necklace.hpp"

namespace precy {

// Hochschild word a0[a1|...|an]: a cyclically composable tuple of morphisms,
// reduced (no identity in a slot position; the head a0 may be an identity).
struct HochWord {
    Necklace a0;
    std::vector<Necklace> slots;

    int n() const { return static_cast<int>(slots.size()); }
    int hom_deg() const {
        int d = a0.hom_deg();
        for (const auto& s : slots) d += s.hom_deg() + 1;
        return d;
    }
    auto operator<=>(const HochWord&) const = default;
};

using HochChain = LinComb<HochWord>;

// Negative cyclic chain sum_i x_i u^i, stored as coefficients by u power.
using NegCyclicChain = std::vector<HochChain>;

// Validates cyclic composability and reducedness; throws on failure.
HochWord make_word(Necklace a0, std::vector<Necklace> slots);

// Hochschild boundary. Merges follow the path-order products the cyclic
// composability forces; prefix signs use the homological parities
// P(i) = |a0| + sum_{1<=j<=i} (|a_j|+1):
//   d on the head:      +1
//   d on slot i:        -(-1)^{P(i-1)}
//   merge (a_i,a_{i+1}): +(-1)^{P(i)}   (i=0 is the head merge)
//   wrap (a_n * a0):    -(-1)^{(|a_n|+1) P(n-1)}
// Merges producing an identity in a slot drop out (normalized complex).
HochChain hoch_b(const HochWord& w);
HochChain hoch_b(const HochChain& c);

// Normalized Connes operator: all rotations of the word with an identity
// head; terms placing an identity into a slot vanish.
HochChain connes_B(const HochWord& w);
HochChain connes_B(const HochChain& c);

// (b + uB) on a negative cyclic chain: coefficient i of the result is
// b(x_i) + B(x_{i-1}). The result may be one entry longer than the input.
NegCyclicChain neg_cyclic_d(const NegCyclicChain& x);

bool is_zero(const NegCyclicChain& x);

// All reduced Hochschild words of the path category of K with at most
// max_slots slot entries and at most total_beads beads across the whole word.
std::vector<HochWord> enumerate_hoch_words(const OrderedComplex& K, int max_slots,
                                           int total_beads);

std::string to_string(const HochWord& w);
std::string to_string(const HochChain& c);

// Parses "01*12[21|10]"; "e0[01|10]" has an identity head; "02" alone is a
// word with no slots.
HochWord parse_word(const std::string& text);

} // namespace precy
