#pragma once

#include "precy/cochain.hpp"

namespace precy {

// Plugs one output of G into one letter slot of F, summed over all entry
// pairs, letter positions and outputs of G with matching value. The marked
// output of the composite is F's; G's remaining outputs split the host
// sector. Composition sign is (-1)^{||G|| * W} with ||G|| = parity of
// G.sh_deg - 1 and W the suspended parity sum of F's letters before the slot
// (values are treated as even; the engine's cochains are valued in
// homologically even morphisms, where this model is exact).
Cochain necklace_compose(const Cochain& F, const Cochain& G);

// [F, G] = F o G - (-1)^{||F|| ||G||} G o F.
Cochain necklace_bracket(const Cochain& F, const Cochain& G);

// The structure maps of the path category as a bounded extensional table:
// every two-letter key with at most bead_bound total beads maps to the path
// product of its letters, every one-letter key to the internal differential
// of its letter. Bracketing against it reproduces [mu, -] on any key whose
// consultations stay within the bound.
Cochain make_mu(const OrderedComplex& K, int bead_bound);

// Pointwise sum; arities must agree.
Cochain add_cochains(const Cochain& a, const Cochain& b);
Cochain scale_cochain(const Cochain& a, const Scalar& c);

// The differential [mu, F] evaluated at one key, mu = path product plus
// internal differential. Lazy: F is consulted only at keys derived from K
// (letter merges, differentials, letter removals), so infinite-support F's
// are fine.
OutComb mu_bracket_at(const CochainFn& F, const InKey& K);

// Extensional restriction of [mu, F] to the given key list.
Cochain mu_bracket(const Cochain& F, const std::vector<InKey>& domain);

// True when [mu, F] vanishes on every key of the domain.
bool is_mu_closed(const Cochain& F, const std::vector<InKey>& domain);

} // namespace precy
