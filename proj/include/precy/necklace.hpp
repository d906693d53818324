#pragma once

#include <compare>
#include <string>
#include <vector>

#include "precy/lincomb.hpp"
#include "precy/simplicial.hpp"

namespace precy {

// One bead of a necklace: a simplex traversed front-to-back, or a 1-simplex
// traversed backwards (the formal inverse adjoined in the localization).
struct Bead {
    Simplex verts; // strictly increasing
    bool inv = false;

    int src() const { return inv ? verts.back() : verts.front(); }
    int tgt() const { return inv ? verts.front() : verts.back(); }
    int dim() const { return static_cast<int>(verts.size()) - 1; }
    // homological degree of the generator
    int hom_deg() const { return dim() - 1; }

    auto operator<=>(const Bead&) const = default;
};

// A morphism of the path category: composable chain of beads, fully reduced
// with respect to (v0v1)*(v1v0) = id. Empty chain = identity at obj.
struct Necklace {
    int src_ = 0, tgt_ = 0;
    std::vector<Bead> beads;

    static Necklace identity(int obj) { return Necklace{obj, obj, {}}; }

    int src() const { return src_; }
    int tgt() const { return tgt_; }
    bool is_identity() const { return beads.empty(); }
    int hom_deg() const {
        int d = 0;
        for (const auto& b : beads) d += b.hom_deg();
        return d;
    }
    // stored (cohomological) degree, sum of 1 - dim over beads
    int stored_deg() const { return -hom_deg(); }

    auto operator<=>(const Necklace&) const = default;
};

using Morph = LinComb<Necklace>;

// Reduces a raw composable bead chain (cancels adjacent mutually inverse
// 1-simplex beads until stable).
Necklace make_necklace(int src, int tgt, std::vector<Bead> beads);

// Path-order composition a then b; requires a.tgt() == b.src().
Necklace compose(const Necklace& a, const Necklace& b);
Morph compose(const Morph& a, const Morph& b);

// The dg differential. Zero on identities, 1-simplices and inverses;
// d(v0..vn) = sum_{i=1}^{n-1} (-1)^i ((v0..\hat v_i..vn) - (v0..v_i)*(v_i..vn)),
// extended as a degree -1 derivation for the path product.
Morph differential(const Necklace& n);
Morph differential(const Morph& m);

// All reduced necklaces src -> tgt with at most size_bound beads.
std::vector<Necklace> enumerate_basis(const OrderedComplex& K, int src, int tgt,
                                      int size_bound);

// All reduced necklaces between any pair of objects, bead count bounded.
std::vector<Necklace> enumerate_all(const OrderedComplex& K, int size_bound);

enum class Orient { Identity, CCW, CW };

// Circle-specific: sign of the net displacement of a morphism of the triangle
// circle, counting each forward bead +1 and each inverse bead -1.
Orient classify_orientation(const Necklace& n);

// Net displacement (number of forward steps minus inverse steps).
int circle_displacement(const Necklace& n);

std::string to_string(const Bead& b);
std::string to_string(const Necklace& n);
std::string to_string(const Morph& m);

Necklace parse_necklace(const std::string& text);

} // namespace precy
