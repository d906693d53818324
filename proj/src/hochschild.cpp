#include "precy/hochschild.hpp"

#include <stdexcept>

namespace precy {

HochWord make_word(Necklace a0, std::vector<Necklace> slots) {
    int at = a0.tgt();
    for (const auto& s : slots) {
        if (s.is_identity())
            throw std::invalid_argument("make_word: identity in a slot");
        if (s.src() != at) throw std::invalid_argument("make_word: not composable");
        at = s.tgt();
    }
    if (at != a0.src())
        throw std::invalid_argument("make_word: not cyclically composable");
    return HochWord{std::move(a0), std::move(slots)};
}

// prefix parity P(i) = |a0| + sum_{1<=j<=i}(|a_j|+1), taken mod 2
static int prefix_parity(const HochWord& w, int i) {
    int p = w.a0.hom_deg();
    for (int j = 1; j <= i; ++j) p += w.slots[j - 1].hom_deg() + 1;
    return p & 1;
}

static void add_word_checked(HochChain& out, Necklace a0,
                             std::vector<Necklace> slots, const Scalar& coeff) {
    for (const auto& s : slots)
        if (s.is_identity()) return; // normalized complex
    out.add(make_word(std::move(a0), std::move(slots)), coeff);
}

HochChain hoch_b(const HochWord& w) {
    HochChain out;
    const int n = w.n();

    // d on the head
    Morph da0 = differential(w.a0);
    for (const auto& [m, c] : da0.terms()) add_word_checked(out, m, w.slots, c);

    for (int i = 1; i <= n; ++i) {
        // d on slot i
        Morph ds = differential(w.slots[i - 1]);
        if (!ds.is_zero()) {
            Scalar sgn = prefix_parity(w, i - 1) ? Scalar(1) : Scalar(-1);
            for (const auto& [m, c] : ds.terms()) {
                auto slots = w.slots;
                slots[i - 1] = m;
                add_word_checked(out, w.a0, std::move(slots), sgn * c);
            }
        }
    }

    // head merge a0 * a1
    if (n >= 1) {
        Scalar sgn = prefix_parity(w, 0) ? Scalar(-1) : Scalar(1);
        std::vector<Necklace> slots(w.slots.begin() + 1, w.slots.end());
        add_word_checked(out, compose(w.a0, w.slots[0]), std::move(slots), sgn);
    }
    // interior merges (a_i, a_{i+1}) for i = 1..n-1
    for (int i = 1; i + 1 <= n; ++i) {
        Scalar sgn = prefix_parity(w, i) ? Scalar(-1) : Scalar(1);
        auto slots = w.slots;
        Necklace merged = compose(slots[i - 1], slots[i]);
        slots[i - 1] = merged;
        slots.erase(slots.begin() + i);
        add_word_checked(out, w.a0, std::move(slots), sgn);
    }
    // wrap merge a_n * a0
    if (n >= 1) {
        int eta_n = (w.slots[n - 1].hom_deg() + 1) & 1;
        int sgn_exp = (eta_n * prefix_parity(w, n - 1)) & 1;
        Scalar sgn = sgn_exp ? Scalar(1) : Scalar(-1); // extra global minus
        std::vector<Necklace> slots(w.slots.begin(), w.slots.end() - 1);
        add_word_checked(out, compose(w.slots[n - 1], w.a0), std::move(slots), sgn);
    }
    return out;
}

HochChain hoch_b(const HochChain& c) {
    return c.map([](const HochWord& w) { return hoch_b(w); });
}

HochChain connes_B(const HochWord& w) {
    HochChain out;
    const int n = w.n();
    // suspended parities, the head counts as a slot letter once rotated
    std::vector<int> eta(n + 1);
    eta[0] = (w.a0.hom_deg() + 1) & 1;
    for (int i = 1; i <= n; ++i) eta[i] = (w.slots[i - 1].hom_deg() + 1) & 1;

    for (int i = 0; i <= n; ++i) {
        // head becomes e at the source of a_i; word rotates to
        // [a_i|...|a_n|a0|...|a_{i-1}]
        int left = 0, right = 0;
        for (int j = 0; j < i; ++j) left += eta[j];
        for (int j = i; j <= n; ++j) right += eta[j];
        Scalar sgn = ((left & 1) && (right & 1)) ? Scalar(-1) : Scalar(1);
        std::vector<Necklace> slots;
        slots.reserve(n + 1);
        for (int j = i; j <= n; ++j) slots.push_back(j == 0 ? w.a0 : w.slots[j - 1]);
        for (int j = 0; j < i; ++j) slots.push_back(j == 0 ? w.a0 : w.slots[j - 1]);
        int head_obj = slots.front().src();
        add_word_checked(out, Necklace::identity(head_obj), std::move(slots), sgn);
    }
    return out;
}

HochChain connes_B(const HochChain& c) {
    return c.map([](const HochWord& w) { return connes_B(w); });
}

NegCyclicChain neg_cyclic_d(const NegCyclicChain& x) {
    NegCyclicChain out(x.size() + 1);
    for (size_t i = 0; i < x.size(); ++i) {
        out[i] += hoch_b(x[i]);
        out[i + 1] += connes_B(x[i]);
    }
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

bool is_zero(const NegCyclicChain& x) {
    for (const auto& c : x)
        if (!c.is_zero()) return false;
    return true;
}

std::vector<HochWord> enumerate_hoch_words(const OrderedComplex& K, int max_slots,
                                           int total_beads) {
    std::vector<HochWord> out;
    // heads may be identities; slots may not
    for (int u : K.vertices)
        for (int v : K.vertices)
            for (const Necklace& a0 : enumerate_basis(K, u, v, total_beads)) {
                int left = total_beads - static_cast<int>(a0.beads.size());
                // grow slot lists recursively
                struct Rec {
                    const OrderedComplex& K;
                    const Necklace& a0;
                    int max_slots;
                    std::vector<HochWord>& out;
                    void go(std::vector<Necklace>& slots, int at, int budget) {
                        if (at == a0.src()) out.push_back(HochWord{a0, slots});
                        if (static_cast<int>(slots.size()) == max_slots) return;
                        for (int w2 : K.vertices)
                            for (const Necklace& s :
                                 enumerate_basis(K, at, w2, budget)) {
                                if (s.is_identity()) continue;
                                slots.push_back(s);
                                go(slots, s.tgt(),
                                   budget - static_cast<int>(s.beads.size()));
                                slots.pop_back();
                            }
                    }
                } rec{K, a0, max_slots, out};
                std::vector<Necklace> slots;
                rec.go(slots, a0.tgt(), left);
            }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string to_string(const HochWord& w) {
    std::string s = to_string(w.a0);
    if (!w.slots.empty()) {
        s += '[';
        for (size_t i = 0; i < w.slots.size(); ++i) {
            if (i) s += '|';
            s += to_string(w.slots[i]);
        }
        s += ']';
    }
    return s;
}

std::string to_string(const HochChain& c) {
    if (c.is_zero()) return "0";
    std::string s;
    for (const auto& [w, coef] : c.terms()) {
        if (!s.empty()) s += " + ";
        s += format_scalar(coef) + "·" + to_string(w);
    }
    return s;
}

HochWord parse_word(const std::string& text) {
    auto lb = text.find('[');
    if (lb == std::string::npos) return make_word(parse_necklace(text), {});
    auto rb = text.rfind(']');
    if (rb == std::string::npos || rb < lb)
        throw std::invalid_argument("parse_word: unbalanced brackets");
    Necklace a0 = parse_necklace(text.substr(0, lb));
    std::vector<Necklace> slots;
    std::string inner = text.substr(lb + 1, rb - lb - 1);
    size_t p = 0;
    while (p <= inner.size() && !inner.empty()) {
        size_t q = inner.find('|', p);
        if (q == std::string::npos) q = inner.size();
        slots.push_back(parse_necklace(inner.substr(p, q - p)));
        if (q == inner.size()) break;
        p = q + 1;
    }
    return make_word(std::move(a0), std::move(slots));
}

} // namespace precy
