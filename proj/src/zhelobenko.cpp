#include "reducta/zhelobenko.hpp"

namespace reducta {

namespace {

using Named = Coefficient::Named;

Coefficient A(int n, int i, int j) { return Coefficient::named(n, Named::A, i, j); }

} // namespace

ZElement zhelobenko_gen(int n, int i, GeneratorId g) {
    if (i < 1 || i >= n) throw BadIndex("zhelobenko index");
    const int s = i, t = i + 1;
    auto z = [n](int a, int b) { return ZElement::gen(n, {a, b}); };
    if (g.is_t()) {
        int k = g.i;
        if (k != s && k != t) return z(k, k);
        // q_i(t_i) = -(th-1)^{-1} t_i + th (th-1)^{-1} t_{i+1} and the mirrored line
        Coefficient invm = Coefficient::inv_linear(n, s, t, -1);
        Coefficient thc = Coefficient::theta_diff(n, s, t);
        if (k == s) return z(s, s) * (-invm) + z(t, t) * (thc * invm);
        return z(s, s) * (thc * invm) + z(t, t) * (-invm);
    }
    int a = g.i, b = g.j;
    bool ai = (a == s || a == t), bi = (b == s || b == t);
    if (!ai && !bi) return z(a, b);
    if (ai && bi) {
        if (a == s && b == t)
            return -z(t, s).times_coeff_on_right(A(n, s, t) * Coefficient::named(n, Named::B, s, t));
        return -z(s, t); // a == t, b == s
    }
    if (a == s) return -z(t, b).times_coeff_on_right(A(n, s, t));
    if (a == t) return z(s, b);
    if (b == s) return -z(a, t);
    return z(a, s).times_coeff_on_right(A(n, s, t)); // b == t
}

ZElement zhelobenko(int n, int i, const ZElement& x, const StarFn& mult) {
    if (i < 1 || i >= n) throw BadIndex("zhelobenko index");
    std::vector<int> sigma(n + 1);
    for (int k = 1; k <= n; ++k) sigma[k] = k;
    std::swap(sigma[i], sigma[i + 1]);
    ZElement out(n);
    for (const auto& [w, c] : x.terms()) {
        ZElement acc(n, c.weyl_act(sigma, /*shifted=*/true));
        for (const GeneratorId& g : w) {
            ZElement img = zhelobenko_gen(n, i, g);
            acc = w.size() > 1 ? mult(acc, img) : acc.free_mul(img);
        }
        out = out + acc;
    }
    return out;
}

ZElement zhelobenko_word(int n, const std::vector<int>& word, const ZElement& x, const StarFn& mult) {
    ZElement acc = x;
    for (size_t k = word.size(); k-- > 0;) acc = zhelobenko(n, word[k], acc, mult);
    return acc;
}

std::vector<int> longest_element_word(int n) {
    std::vector<int> w;
    for (int blk = 1; blk < n; ++blk)
        for (int s = blk; s >= 1; --s) w.push_back(s);
    return w;
}

std::vector<int> reduced_word(const std::vector<int>& sigma) {
    // bubble sort: each adjacent swap that removes an inversion contributes s_i
    std::vector<int> perm(sigma.begin() + 1, sigma.end());
    int n = (int)perm.size();
    std::vector<int> word;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int k = 0; k + 1 < n; ++k)
            if (perm[k] > perm[k + 1]) {
                std::swap(perm[k], perm[k + 1]);
                word.push_back(k + 1);
                moved = true;
            }
    }
    // sigma = product of the recorded adjacent transpositions applied right to left
    std::reverse(word.begin(), word.end());
    return word;
}

ZElement zhelobenko_longest(int n, const ZElement& x, const StarFn& mult) {
    return zhelobenko_word(n, longest_element_word(n), x, mult);
}

ZElement zhelobenko_longest_closed(int n, GeneratorId g) {
    int ip = n + 1 - g.i, jp = n + 1 - g.j;
    if (g.is_t()) return t_ring(n, ip); // interpreting the diagonal as tring_i
    // prod_{a<i'} A_{a,i'} prod_{b>j'} A_{j',b}; the pair (j',i') is common to
    // both ranges when j' < i' and its second occurrence enters as B, not A
    // (the composed automorphisms force A*B = th/(th-2) there).
    Coefficient c = Coefficient::one(n);
    for (int a = 1; a < ip; ++a) c *= A(n, a, ip);
    for (int b = jp + 1; b <= n; ++b)
        c *= (b == ip) ? Coefficient::named(n, Coefficient::Named::B, jp, b) : A(n, jp, b);
    Rat sign((g.i + g.j) % 2 ? -1 : 1);
    return ZElement::gen(n, {ip, jp}).times_coeff_on_right(c) * sign;
}

ZElement sigma_auto_squared(int n, int i, const ZElement& x) {
    ZElement out(n);
    for (const auto& [w, c] : x.terms()) {
        int sign = 1;
        for (const GeneratorId& g : w) {
            int touches = (g.i == i || g.i == i + 1) + (g.j == i || g.j == i + 1);
            if (touches == 1) sign = -sign;
        }
        out.add_term(w, c * Rat(sign));
    }
    return out;
}

} // namespace reducta
