#include "precy/necklace.hpp"

#include <algorithm>
#include <stdexcept>

namespace precy {

static bool cancels(const Bead& a, const Bead& b) {
    return a.dim() == 1 && b.dim() == 1 && a.verts == b.verts && a.inv != b.inv;
}

Necklace make_necklace(int src, int tgt, std::vector<Bead> beads) {
    std::vector<Bead> out;
    out.reserve(beads.size());
    int at = src;
    for (auto& b : beads) {
        if (b.src() != at)
            throw std::invalid_argument("make_necklace: beads not composable");
        at = b.tgt();
        if (!out.empty() && cancels(out.back(), b)) {
            out.pop_back();
        } else {
            out.push_back(std::move(b));
        }
    }
    if (at != tgt) throw std::invalid_argument("make_necklace: target mismatch");
    return Necklace{src, tgt, std::move(out)};
}

Necklace compose(const Necklace& a, const Necklace& b) {
    if (a.tgt() != b.src())
        throw std::invalid_argument("compose: endpoint mismatch");
    std::vector<Bead> beads = a.beads;
    beads.insert(beads.end(), b.beads.begin(), b.beads.end());
    return make_necklace(a.src(), b.tgt(), std::move(beads));
}

Morph compose(const Morph& a, const Morph& b) {
    Morph out;
    for (const auto& [na, ca] : a.terms())
        for (const auto& [nb, cb] : b.terms())
            out.add(compose(na, nb), ca * cb);
    return out;
}

// d on a single bead; nonzero only for simplices of dimension >= 2.
static Morph bead_differential(const Bead& bd) {
    Morph out;
    if (bd.inv || bd.dim() < 2) return out;
    const Simplex& v = bd.verts;
    int n = bd.dim();
    for (int i = 1; i <= n - 1; ++i) {
        Scalar sgn = (i % 2) ? Scalar(-1) : Scalar(1);
        Simplex dropped;
        for (int j = 0; j <= n; ++j)
            if (j != i) dropped.push_back(v[j]);
        out.add(make_necklace(v.front(), v.back(), {Bead{dropped, false}}), sgn);
        Simplex left(v.begin(), v.begin() + i + 1);
        Simplex right(v.begin() + i, v.end());
        out.add(make_necklace(v.front(), v.back(),
                              {Bead{left, false}, Bead{right, false}}),
                -sgn);
    }
    return out;
}

Morph differential(const Necklace& n) {
    Morph out;
    int prefix = 0; // homological degree of beads to the left
    for (size_t k = 0; k < n.beads.size(); ++k) {
        Morph dk = bead_differential(n.beads[k]);
        if (!dk.is_zero()) {
            Scalar sgn = (prefix % 2) ? Scalar(-1) : Scalar(1);
            for (const auto& [mid, c] : dk.terms()) {
                std::vector<Bead> beads(n.beads.begin(), n.beads.begin() + k);
                beads.insert(beads.end(), mid.beads.begin(), mid.beads.end());
                beads.insert(beads.end(), n.beads.begin() + k + 1, n.beads.end());
                out.add(make_necklace(n.src(), n.tgt(), std::move(beads)), sgn * c);
            }
        }
        prefix += n.beads[k].hom_deg();
    }
    return out;
}

Morph differential(const Morph& m) {
    return m.map([](const Necklace& n) { return differential(n); });
}

// Generating beads out of a vertex: forward simplices starting there plus
// inverted 1-simplices ending there.
static std::vector<Bead> beads_from(const OrderedComplex& K, int v) {
    std::vector<Bead> out;
    for (const auto& s : K.simplices) {
        if (s.size() >= 2 && s.front() == v) out.push_back(Bead{s, false});
        if (s.size() == 2 && s.back() == v) out.push_back(Bead{s, true});
    }
    return out;
}

static void enumerate_rec(const OrderedComplex& K, const Necklace& cur, int tgt,
                          int budget, std::vector<Necklace>& out) {
    if (cur.tgt() == tgt) out.push_back(cur);
    if (budget == 0) return;
    for (const Bead& b : beads_from(K, cur.tgt())) {
        if (!cur.beads.empty() && cancels(cur.beads.back(), b)) continue;
        Necklace next = cur;
        next.beads.push_back(b);
        next.tgt_ = b.tgt();
        enumerate_rec(K, next, tgt, budget - 1, out);
    }
}

std::vector<Necklace> enumerate_basis(const OrderedComplex& K, int src, int tgt,
                                      int size_bound) {
    std::vector<Necklace> out;
    enumerate_rec(K, Necklace::identity(src), tgt, size_bound, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Necklace> enumerate_all(const OrderedComplex& K, int size_bound) {
    std::vector<Necklace> out;
    for (int u : K.vertices)
        for (int v : K.vertices) {
            auto part = enumerate_basis(K, u, v, size_bound);
            out.insert(out.end(), part.begin(), part.end());
        }
    std::sort(out.begin(), out.end());
    return out;
}

int circle_displacement(const Necklace& n) {
    int disp = 0;
    for (const auto& b : n.beads) {
        if (b.dim() != 1)
            throw std::invalid_argument("circle_displacement: non-edge bead");
        int a = b.verts[0], c = b.verts[1];
        int step;
        if (a == 0 && c == 1) step = 1;
        else if (a == 1 && c == 2) step = 1;
        else if (a == 0 && c == 2) step = -1; // forward (02) walks clockwise
        else throw std::invalid_argument("circle_displacement: edge outside triangle");
        disp += b.inv ? -step : step;
    }
    return disp;
}

Orient classify_orientation(const Necklace& n) {
    if (n.is_identity()) return Orient::Identity;
    int d = circle_displacement(n);
    if (d == 0) throw std::logic_error("reduced circle necklace with zero displacement");
    return d > 0 ? Orient::CCW : Orient::CW;
}

std::string to_string(const Bead& b) {
    bool wide = false;
    for (int v : b.verts)
        if (v > 9 || v < 0) wide = true;
    std::string s;
    auto emit = [&](int v) {
        if (!s.empty() && wide) s += ',';
        s += std::to_string(v);
    };
    if (b.inv) {
        emit(b.verts[1]);
        emit(b.verts[0]);
    } else {
        for (int v : b.verts) emit(v);
    }
    return s;
}

std::string to_string(const Necklace& n) {
    if (n.is_identity()) return "e" + std::to_string(n.src());
    std::string s;
    for (size_t i = 0; i < n.beads.size(); ++i) {
        if (i) s += '*';
        s += to_string(n.beads[i]);
    }
    return s;
}

std::string to_string(const Morph& m) {
    if (m.is_zero()) return "0";
    std::string s;
    for (const auto& [n, c] : m.terms()) {
        if (!s.empty()) s += " + ";
        s += format_scalar(c) + "·" + to_string(n);
    }
    return s;
}

static Bead parse_bead(const std::string& tok) {
    std::vector<int> vs;
    if (tok.find(',') != std::string::npos) {
        size_t p = 0;
        while (p < tok.size()) {
            size_t q = tok.find(',', p);
            if (q == std::string::npos) q = tok.size();
            vs.push_back(std::stoi(tok.substr(p, q - p)));
            p = q + 1;
        }
    } else {
        for (char ch : tok) {
            if (ch < '0' || ch > '9')
                throw std::invalid_argument("parse_necklace: bad bead " + tok);
            vs.push_back(ch - '0');
        }
    }
    if (vs.size() < 2) throw std::invalid_argument("parse_necklace: bead too short");
    if (std::is_sorted(vs.begin(), vs.end()) &&
        std::adjacent_find(vs.begin(), vs.end()) == vs.end())
        return Bead{vs, false};
    if (vs.size() == 2 && vs[0] > vs[1]) return Bead{{vs[1], vs[0]}, true};
    throw std::invalid_argument("parse_necklace: bead must be increasing or a reversed edge");
}

Necklace parse_necklace(const std::string& text) {
    if (!text.empty() && text[0] == 'e')
        return Necklace::identity(std::stoi(text.substr(1)));
    std::vector<Bead> beads;
    size_t p = 0;
    while (p < text.size()) {
        size_t q = text.find('*', p);
        if (q == std::string::npos) q = text.size();
        beads.push_back(parse_bead(text.substr(p, q - p)));
        p = q + 1;
    }
    if (beads.empty()) throw std::invalid_argument("parse_necklace: empty");
    return make_necklace(beads.front().src(), beads.back().tgt(), beads);
}

} // namespace precy
