#include "precy/cochain.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace precy {

void Cochain::add(const InKey& k, const OutT& t, const Scalar& c) {
    if (static_cast<int>(t.size()) != ell || k.ell() != ell)
        throw std::invalid_argument("cochain entry arity mismatch");
    validate_key(k);
    if (!entry_consistent(k, t))
        throw std::invalid_argument("cochain entry label mismatch: " +
                                    to_string(k) + " -> " + to_string(t));
    table[k] += LinComb<OutT>(t, c);
    if (table[k].is_zero()) table.erase(k);
}

bool Cochain::is_zero() const {
    for (const auto& [k, v] : table)
        if (!v.is_zero()) return false;
    return true;
}

CochainFn as_fn(const Cochain& c) {
    return CochainFn{c.ell, c.sh_deg,
                     [c](const InKey& k) { return c.eval(k); }};
}

void validate_key(const InKey& k) {
    if (k.sectors.empty() || k.sectors.size() != k.start_label.size())
        throw std::invalid_argument("key shape mismatch");
    for (int i = 0; i < k.ell(); ++i) {
        int at = k.start_label[i];
        for (const auto& L : k.sectors[i]) {
            if (L.is_identity())
                throw std::invalid_argument("identity letter in key");
            if (L.src() != at)
                throw std::invalid_argument("sector chain not composable");
            at = L.tgt();
        }
    }
}

bool entry_consistent(const InKey& k, const OutT& t) {
    if (static_cast<int>(t.size()) != k.ell()) return false;
    int ell = k.ell();
    for (int j = 0; j < ell; ++j) {
        int before = k.end_label((j + ell - 1) % ell);
        int after = k.start_label[j];
        if (t[j].src() != after || t[j].tgt() != before) return false;
    }
    return true;
}

namespace {

struct KeyEnum {
    const OrderedComplex& K;
    const std::vector<Necklace>& basis;
    std::vector<InKey>& out;
    InKey cur;

    void sector(int i, int letters_left, int beads_left) {
        if (i == cur.ell()) {
            out.push_back(cur);
            return;
        }
        cur.sectors[i].clear();
        for (int v : K.vertices) {
            cur.start_label[i] = v;
            sector(i + 1, letters_left, beads_left);
        }
        chain(i, letters_left, beads_left);
        cur.sectors[i].clear();
    }

    // Extends the (nonempty when recursing onward) chain in sector i.
    void chain(int i, int letters_left, int beads_left) {
        if (!cur.sectors[i].empty()) {
            cur.start_label[i] = cur.sectors[i].front().src();
            sector(i + 1, letters_left, beads_left);
        }
        if (letters_left == 0) return;
        for (const auto& L : basis) {
            if (L.is_identity()) continue;
            if (!cur.sectors[i].empty() &&
                L.src() != cur.sectors[i].back().tgt())
                continue;
            int nb = static_cast<int>(L.beads.size());
            if (nb > beads_left) continue;
            cur.sectors[i].push_back(L);
            chain(i, letters_left - 1, beads_left - nb);
            cur.sectors[i].pop_back();
        }
    }
};

} // namespace

std::vector<InKey> enumerate_keys(const OrderedComplex& K, int ell,
                                  int total_letters, int beads_per_letter,
                                  int total_beads) {
    std::vector<Necklace> basis = enumerate_all(K, beads_per_letter);
    InKey cur;
    cur.sectors.assign(ell, {});
    cur.start_label.assign(ell, 0);
    std::vector<InKey> out;
    KeyEnum e{K, basis, out, cur};
    e.sector(0, total_letters, total_beads);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Cochain unit_cochain(const OrderedComplex& K) {
    Cochain u;
    u.ell = 1;
    u.sh_deg = 2;
    for (int v : K.vertices) {
        InKey k;
        k.sectors.assign(1, {});
        k.start_label = {v};
        u.add(k, {Necklace::identity(v)}, Scalar(1));
    }
    return u;
}

Cochain alpha_cochain(const OrderedComplex& K, int bead_bound) {
    Cochain a;
    a.ell = 2;
    a.sh_deg = 2;
    for (const auto& P : enumerate_all(K, bead_bound)) {
        if (P.is_identity() || P.hom_deg() != 0) continue;
        Orient o = classify_orientation(P);
        if (o == Orient::Identity) continue;
        Scalar half = (o == Orient::CW) ? Scalar(1, 2) : Scalar(-1, 2);
        int s = P.src(), t = P.tgt();
        // Localized rule: a one-letter key contributes only when the far
        // label k is an endpoint of the word, and the value keeps the whole
        // word: +eps/2 (e_k, P) when k = t(P), -eps/2 (P, e_k) when k = s(P)
        // (a loop key receives both terms). eps = +1 for clockwise words.
        if (t != s) {
            InKey bot;
            bot.sectors = {{}, {P}};
            bot.start_label = {t, s};
            a.add(bot, {Necklace::identity(t), P}, half);
        }
        {
            InKey bot;
            bot.sectors = {{}, {P}};
            bot.start_label = {s, s};
            if (t == s) a.add(bot, {Necklace::identity(s), P}, half);
            a.add(bot, {P, Necklace::identity(s)}, -half);
        }
    }
    // The other rotation class is the Z/2 image; the sum is invariant.
    Cochain rot = zl_rotate(a);
    for (const auto& [k, v] : rot.table)
        for (const auto& [t, c] : v.terms()) a.add(k, t, c);
    return a;
}

namespace {

int letter_parity_sum(const std::vector<Necklace>& v) {
    int p = 0;
    for (const auto& L : v) p += (L.hom_deg() + 1) & 1;
    return p & 1;
}

int value_parity_sum(const OutT& t, int from) {
    int p = 0;
    for (int j = from; j < static_cast<int>(t.size()); ++j)
        p += t[j].hom_deg() & 1;
    return p & 1;
}

} // namespace

Cochain zl_rotate(const Cochain& F) {
    Cochain r;
    r.ell = F.ell;
    r.sh_deg = F.sh_deg;
    int ell = F.ell;
    for (const auto& [k, v] : F.table) {
        // New sector i = old sector i+1: the old sector 0 block moves past
        // the remaining letters, the old O_0 value past the other values.
        InKey nk;
        nk.sectors.resize(ell);
        nk.start_label.resize(ell);
        for (int i = 0; i < ell; ++i) {
            nk.sectors[i] = k.sectors[(i + 1) % ell];
            nk.start_label[i] = k.start_label[(i + 1) % ell];
        }
        int rest = 0;
        for (int i = 1; i < ell; ++i) rest += letter_parity_sum(k.sectors[i]);
        int key_sign = letter_parity_sum(k.sectors[0]) * (rest & 1);
        for (const auto& [t, c] : v.terms()) {
            OutT nt;
            for (int j = 0; j < ell; ++j) nt.push_back(t[(j + 1) % ell]);
            int val_sign = (t[0].hom_deg() & 1) * value_parity_sum(t, 1);
            Scalar s = ((key_sign + val_sign) & 1) ? Scalar(-1) : Scalar(1);
            r.add(nk, nt, c * s);
        }
    }
    return r;
}

Cochain zl_symmetrize(const Cochain& F, int d) {
    int ell = F.ell;
    Scalar eps = (((d - 1) * (ell - 1)) % 2 != 0) ? Scalar(-1) : Scalar(1);
    Cochain acc;
    acc.ell = ell;
    acc.sh_deg = F.sh_deg;
    Cochain cur = F;
    Scalar w(1);
    for (int k = 0; k < ell; ++k) {
        for (const auto& [key, v] : cur.table)
            for (const auto& [t, c] : v.terms()) acc.add(key, t, c * w);
        cur = zl_rotate(cur);
        w = w / eps;
    }
    std::map<InKey, OutComb> scaled;
    for (auto& [key, v] : acc.table) {
        OutComb w2 = (Scalar(1) / Scalar(ell)) * v;
        if (!w2.is_zero()) scaled[key] = w2;
    }
    acc.table = std::move(scaled);
    return acc;
}

bool zl_invariant(const Cochain& F, int d) {
    int ell = F.ell;
    Scalar eps = (((d - 1) * (ell - 1)) % 2 != 0) ? Scalar(-1) : Scalar(1);
    Cochain r = zl_rotate(F);
    Cochain diff = r;
    for (const auto& [k, v] : F.table)
        for (const auto& [t, c] : v.terms()) diff.add(k, t, -c * eps);
    return diff.is_zero();
}

std::string to_string(const InKey& k) {
    std::ostringstream os;
    os << "<";
    for (int i = 0; i < k.ell(); ++i) {
        if (i) os << " | ";
        os << "#" << k.start_label[i];
        for (const auto& L : k.sectors[i]) os << " " << to_string(L);
    }
    os << ">";
    return os.str();
}

std::string to_string(const OutT& t) {
    std::ostringstream os;
    os << "(";
    for (size_t j = 0; j < t.size(); ++j) {
        if (j) os << " , ";
        os << to_string(t[j]);
    }
    os << ")";
    return os.str();
}

std::string to_string(const Cochain& c) {
    std::ostringstream os;
    for (const auto& [k, v] : c.table) {
        os << to_string(k) << " ->";
        for (const auto& [t, coef] : v.terms())
            os << " " << format_scalar(coef) << "*" << to_string(t);
        os << "\n";
    }
    return os.str();
}

} // namespace precy
