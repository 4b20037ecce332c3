#pragma once

#include "reducta/zn.hpp"

#include <functional>

namespace reducta {

// Star multiplication hook: the automorphisms are multiplicative, so words of
// degree >= 2 need an actual product (oracle- or rewrite-backed).
using StarFn = std::function<ZElement(const ZElement&, const ZElement&)>;

// q_i on a single generator, left-normalized.
ZElement zhelobenko_gen(int n, int i, GeneratorId g);

// q_i on an element: the shifted Weyl action on coefficients, the generator
// table on letters, products through mult.
ZElement zhelobenko(int n, int i, const ZElement& x, const StarFn& mult);

// Composition q_{w[0]} q_{w[1]} ... q_{w[k-1]} (rightmost applied first).
ZElement zhelobenko_word(int n, const std::vector<int>& word, const ZElement& x, const StarFn& mult);

// Reduced word s_1 (s_2 s_1) (s_3 s_2 s_1) ... for the longest element.
std::vector<int> longest_element_word(int n);
// Any reduced word for the permutation sigma (1-based image table).
std::vector<int> reduced_word(const std::vector<int>& sigma);

// q_{w_0} as the composition of elementary automorphisms.
ZElement zhelobenko_longest(int n, const ZElement& x, const StarFn& mult);
// The closed form on a plain generator: (-1)^{i+j} z_{i'j'} prod_{a<i'} A_{ai'}
// prod_{b>j'} A_{j'b}, and tring_i -> tring_{i'} for the diagonal.
ZElement zhelobenko_longest_closed(int n, GeneratorId g);

// sigma'_i squared at the Z level: z_kl -> +-z_kl with the doubled sign rule.
ZElement sigma_auto_squared(int n, int i, const ZElement& x);

} // namespace reducta
