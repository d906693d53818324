#include "precy/bracket.hpp"

#include <stdexcept>

namespace precy {

namespace {

int letter_par(const Necklace& L) { return (L.hom_deg() + 1) & 1; }

// Suspended parity sum of letters strictly before position (s, i) in the
// clockwise reading from the marked output.
int prefix_weight(const InKey& k, int s, int i) {
    int w = 0;
    for (int a = 0; a < s; ++a)
        for (const auto& L : k.sectors[a]) w += letter_par(L);
    for (int b = 0; b < i; ++b) w += letter_par(k.sectors[s][b]);
    return w & 1;
}

} // namespace

// Marked graft: G's marked output O_0 is plugged into one letter slot of F,
// so the slot letter must equal the first entry of G's value tuple. The
// composite key replaces the letter by G's input fan (host prefix joins G's
// sector 0, host tail joins G's last sector); the composite value keeps all
// of F's outputs and appends G's unmarked ones after the slot sector's
// output. Sign: (-1)^{||G|| W} with W = suspended parity of F's letters
// before the slot plus the number of output legs before it; this is the
// unique weight making the operation pre-Lie on raw tables.
Cochain necklace_compose(const Cochain& F, const Cochain& G) {
    Cochain R;
    R.ell = F.ell + G.ell - 1;
    R.sh_deg = F.sh_deg + G.sh_deg - 1;
    int gpar = (G.sh_deg - 1) & 1;
    for (const auto& [KF, VF] : F.table) {
        for (int sf = 0; sf < F.ell; ++sf) {
            for (int p = 0; p < static_cast<int>(KF.sectors[sf].size());
                 ++p) {
                const Necklace& L = KF.sectors[sf][p];
                int w = (prefix_weight(KF, sf, p) + sf) & 1;
                Scalar comp_sign = (gpar && w) ? Scalar(-1) : Scalar(1);
                for (const auto& [KG, VG] : G.table) {
                    for (const auto& [TG, cG] : VG.terms()) {
                        if (TG[0] != L) continue;
                        InKey KC;
                        for (int i = 0; i < sf; ++i) {
                            KC.sectors.push_back(KF.sectors[i]);
                            KC.start_label.push_back(KF.start_label[i]);
                        }
                        std::vector<Necklace> pre(
                            KF.sectors[sf].begin(),
                            KF.sectors[sf].begin() + p);
                        std::vector<Necklace> tail(
                            KF.sectors[sf].begin() + p + 1,
                            KF.sectors[sf].end());
                        std::vector<Necklace> first = pre;
                        first.insert(first.end(), KG.sectors[0].begin(),
                                     KG.sectors[0].end());
                        int first_label = pre.empty()
                                              ? KG.start_label[0]
                                              : KF.start_label[sf];
                        KC.sectors.push_back(first);
                        KC.start_label.push_back(first_label);
                        for (int t = 1; t < G.ell; ++t) {
                            KC.sectors.push_back(KG.sectors[t]);
                            KC.start_label.push_back(KG.start_label[t]);
                        }
                        KC.sectors.back().insert(KC.sectors.back().end(),
                                                 tail.begin(), tail.end());
                        for (int i = sf + 1; i < F.ell; ++i) {
                            KC.sectors.push_back(KF.sectors[i]);
                            KC.start_label.push_back(KF.start_label[i]);
                        }
                        for (const auto& [TF, cF] : VF.terms()) {
                            OutT TC(TF.begin(), TF.begin() + sf + 1);
                            TC.insert(TC.end(), TG.begin() + 1, TG.end());
                            TC.insert(TC.end(), TF.begin() + sf + 1,
                                      TF.end());
                            R.add(KC, TC, cF * cG * comp_sign);
                        }
                    }
                }
            }
        }
    }
    return R;
}

Cochain make_mu(const OrderedComplex& K, int bead_bound) {
    Cochain mu;
    mu.ell = 1;
    mu.sh_deg = 2;
    std::vector<Necklace> words;
    for (const Necklace& w : enumerate_all(K, bead_bound))
        if (!w.is_identity()) words.push_back(w);
    for (const Necklace& x : words) {
        for (const Necklace& y : words) {
            if (x.tgt() != y.src()) continue;
            if (static_cast<int>(x.beads.size() + y.beads.size()) >
                bead_bound)
                continue;
            InKey k;
            k.sectors = {{x, y}};
            k.start_label = {x.src()};
            mu.add(k, {compose(x, y)}, Scalar(1));
        }
        Morph dx = differential(x);
        for (const auto& [nck, c] : dx.terms()) {
            InKey k;
            k.sectors = {{x}};
            k.start_label = {x.src()};
            mu.add(k, {nck}, c);
        }
    }
    return mu;
}

Cochain necklace_bracket(const Cochain& F, const Cochain& G) {
    Cochain fg = necklace_compose(F, G);
    Cochain gf = necklace_compose(G, F);
    int fpar = (F.sh_deg - 1) & 1;
    int gpar = (G.sh_deg - 1) & 1;
    Scalar s = (fpar && gpar) ? Scalar(1) : Scalar(-1);
    for (const auto& [k, v] : gf.table)
        for (const auto& [t, c] : v.terms()) fg.add(k, t, c * s);
    return fg;
}

Cochain add_cochains(const Cochain& a, const Cochain& b) {
    if (a.ell != b.ell)
        throw std::invalid_argument("cochain arity mismatch in sum");
    Cochain r = a;
    for (const auto& [k, v] : b.table)
        for (const auto& [t, c] : v.terms()) r.add(k, t, c);
    return r;
}

Cochain scale_cochain(const Cochain& a, const Scalar& c) {
    Cochain r;
    r.ell = a.ell;
    r.sh_deg = a.sh_deg;
    if (c == 0) return r;
    for (const auto& [k, v] : a.table) r.table[k] = c * v;
    return r;
}

// Slot signs: letters count with suspended parity, output legs count as odd,
// both accumulated clockwise from the marked output. Absorbing a letter into
// the output on its counterclockwise side (front of sector j into output j)
// costs an extra -1 relative to the clockwise side; mu o F terms carry the
// Koszul (-1)^{||F|| |L|'} for moving the letter past F, F o mu terms carry
// the commutator's -(-1)^{||F||}. Pinned jointly by d(alpha) = 0 for the
// circle alpha and delta^2 = 0 across both parities.
OutComb mu_bracket_at(const CochainFn& F, const InKey& K) {
    OutComb out;
    int ell = K.ell();
    int fpar = (F.sh_deg - 1) & 1;

    // d applied to each output value (|d|' is even: no parity factor).
    {
        OutComb FK = F.eval(K);
        for (const auto& [T, c] : FK.terms()) {
            for (int j = 0; j < ell; ++j) {
                Morph dT = differential(T[j]);
                for (const auto& [n, dc] : dT.terms()) {
                    OutT T2 = T;
                    T2[j] = n;
                    out += LinComb<OutT>(T2, c * dc);
                }
            }
        }
    }

    // Letter absorbed into an adjacent output: the first letter of sector j
    // left-composes into output j, the last letter right-composes into
    // output j+1.
    for (int j = 0; j < ell; ++j) {
        if (K.sectors[j].empty()) continue;
        {
            Necklace L = K.sectors[j].front();
            InKey K2 = K;
            K2.sectors[j].erase(K2.sectors[j].begin());
            K2.start_label[j] = L.tgt();
            int e = 1 + j + prefix_weight(K, j, 0) + fpar * letter_par(L);
            Scalar s = (e & 1) ? Scalar(-1) : Scalar(1);
            OutComb FK2 = F.eval(K2);
            for (const auto& [T, c] : FK2.terms()) {
                OutT T2 = T;
                T2[j] = compose(L, T[j]);
                out += LinComb<OutT>(T2, c * s);
            }
        }
        {
            int last = static_cast<int>(K.sectors[j].size()) - 1;
            Necklace L = K.sectors[j].back();
            InKey K2 = K;
            K2.sectors[j].pop_back();
            int jo = (j + 1) % ell;
            int e = j + prefix_weight(K, j, last) + fpar * letter_par(L);
            Scalar s = (e & 1) ? Scalar(-1) : Scalar(1);
            OutComb FK2 = F.eval(K2);
            for (const auto& [T, c] : FK2.terms()) {
                OutT T2 = T;
                T2[jo] = compose(T[jo], L);
                out += LinComb<OutT>(T2, c * s);
            }
        }
    }

    // F applied after a product of adjacent letters or after the internal
    // differential of one letter.
    for (int j = 0; j < ell; ++j) {
        int n = static_cast<int>(K.sectors[j].size());
        for (int i = 0; i < n; ++i) {
            int e = fpar + j + prefix_weight(K, j, i);
            Scalar base = (e & 1) ? Scalar(-1) : Scalar(1);
            if (i + 1 < n) {
                Necklace M =
                    compose(K.sectors[j][i], K.sectors[j][i + 1]);
                if (!M.is_identity()) {
                    InKey K2 = K;
                    K2.sectors[j].erase(K2.sectors[j].begin() + i + 1);
                    K2.sectors[j][i] = M;
                    out += base * F.eval(K2);
                }
            }
            Morph dL = differential(K.sectors[j][i]);
            for (const auto& [dn, dc] : dL.terms()) {
                InKey K2 = K;
                K2.sectors[j][i] = dn;
                out += Scalar(base * dc) * F.eval(K2);
            }
        }
    }
    return out;
}

Cochain mu_bracket(const Cochain& F, const std::vector<InKey>& domain) {
    Cochain R;
    R.ell = F.ell;
    R.sh_deg = F.sh_deg + 1;
    CochainFn f = as_fn(F);
    for (const auto& k : domain) {
        OutComb v = mu_bracket_at(f, k);
        for (const auto& [t, c] : v.terms()) R.add(k, t, c);
    }
    return R;
}

bool is_mu_closed(const Cochain& F, const std::vector<InKey>& domain) {
    CochainFn f = as_fn(F);
    for (const auto& k : domain)
        if (!mu_bracket_at(f, k).is_zero()) return false;
    return true;
}

} // namespace precy
