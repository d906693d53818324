#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "precy/hochschild.hpp"

namespace precy {

// Input configuration of a multi-output cochain vertex with ell outputs
// O_0..O_{ell-1} read clockwise (O_0 marked). Sector i sits between O_i and
// O_{i+1 mod ell}; its letters are stored in clockwise order, which is also
// their path-composition order. Region labels follow the rule "right of an
// arrow = its source": crossing a letter clockwise goes source -> target, so
// the letters of one sector form a composable chain and all interior labels
// are determined. start_label[i] is the label of the first sub-region of
// sector i (free data when the sector is empty, s(first letter) otherwise).
struct InKey {
    std::vector<std::vector<Necklace>> sectors;
    std::vector<int> start_label;

    int ell() const { return static_cast<int>(sectors.size()); }
    int total_letters() const {
        int n = 0;
        for (const auto& s : sectors) n += static_cast<int>(s.size());
        return n;
    }
    int end_label(int i) const {
        return sectors[i].empty() ? start_label[i] : sectors[i].back().tgt();
    }
    auto operator<=>(const InKey&) const = default;
};

using OutT = std::vector<Necklace>; // one entry per output, O_0 first
using OutComb = LinComb<OutT>;

// Extensional multi-output cochain: finite support table. Keys absent from
// the table evaluate to zero. sh_deg is the shifted degree; bracket signs use
// the parity of sh_deg - 1.
struct Cochain {
    int ell = 1;
    int sh_deg = 2;
    std::map<InKey, OutComb> table;

    OutComb eval(const InKey& k) const {
        auto it = table.find(k);
        return it == table.end() ? OutComb() : it->second;
    }
    void add(const InKey& k, const OutT& t, const Scalar& c);
    bool is_zero() const;
    bool operator==(const Cochain& o) const {
        return ell == o.ell && table == o.table;
    }
};

// A cochain presented as a function (used for lazily evaluated operators like
// [mu, F] whose support is infinite).
struct CochainFn {
    int ell = 1;
    int sh_deg = 2;
    std::function<OutComb(const InKey&)> eval;
};

CochainFn as_fn(const Cochain& c);

// Throws std::invalid_argument when the key breaks label or composability
// rules (identity letters, non-composable sector chains, label mismatches).
void validate_key(const InKey& k);

// Checks that a value tuple is consistent with the key: entry j runs from
// start_label[j] (region clockwise-after O_j) to end_label[j-1] (region
// clockwise-before O_j).
bool entry_consistent(const InKey& k, const OutT& t);

// All keys over the path category of K with the given shape bounds. Letters
// are enumerated per sector with at most beads_per_letter beads each and at
// most total_letters letters across all sectors; free labels range over all
// vertices.
std::vector<InKey> enumerate_keys(const OrderedComplex& K, int ell,
                                  int total_letters, int beads_per_letter,
                                  int total_beads);

// The unit cochain: ell = 1, no letters, label k |-> e_k.
Cochain unit_cochain(const OrderedComplex& K);

// The closed 2-output cochain solving the chain-level nondegeneracy equation
// for the circle. Supported on one-letter keys whose far label k is an
// endpoint of the word P, where it keeps the whole word:
//   eps(P)/2 (e_k, P) for k = t(P),  -eps(P)/2 (P, e_k) for k = s(P),
// eps = +1 clockwise, -1 counterclockwise (loop words receive both terms),
// plus the Z/2-rotation image of all that; the result is rotation invariant
// and closed for the Hochschild differential. Zero on keys with two or more
// letters and on far labels away from the endpoints. Letters enumerated up
// to the bead bound.
Cochain alpha_cochain(const OrderedComplex& K, int bead_bound);

// Generator of the Z/ell rotation: new O_0 = old O_1, sectors and values
// rotate along, Koszul bookkeeping on letters and values.
Cochain zl_rotate(const Cochain& F);

// Average of eps^{-k} rotate^k with eps = (-1)^{(d-1)(ell-1)}.
Cochain zl_symmetrize(const Cochain& F, int d);

bool zl_invariant(const Cochain& F, int d);

std::string to_string(const InKey& k);
std::string to_string(const OutT& t);
std::string to_string(const Cochain& c);

} // namespace precy
