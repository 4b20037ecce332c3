#include "doctest.h"

#include "reducta/projector.hpp"
#include "reducta/relations.hpp"
#include "reducta/rules.hpp"
#include "reducta/zhelobenko.hpp"

using namespace reducta;

namespace {

StarFn oracle_mult(const Oracle& oracle) {
    return [&oracle](const ZElement& a, const ZElement& b) {
        return oracle.eval_free(a.free_mul(b));
    };
}

Coefficient A(int n, int i, int j) { return Coefficient::named(n, Coefficient::Named::A, i, j); }

} // namespace

TEST_CASE("generator table") {
    // q_1(z_13) = -z_23 A_12 for n=3
    CHECK(zhelobenko_gen(3, 1, {1, 3}) ==
          -ZElement::gen(3, {2, 3}).times_coeff_on_right(A(3, 1, 2)));
    // q_1(t_1) = -(th_12-1)^{-1} t_1 + th_12 (th_12-1)^{-1} t_2
    Coefficient inv = Coefficient::inv_linear(2, 1, 2, -1);
    ZElement expect = ZElement::gen(2, {1, 1}) * (-inv) +
                      ZElement::gen(2, {2, 2}) * (Coefficient::theta_diff(2, 1, 2) * inv);
    CHECK(zhelobenko_gen(2, 1, {1, 1}) == expect);
    // untouched indices are fixed
    CHECK(zhelobenko_gen(4, 2, {1, 4}) == ZElement::gen(4, {1, 4}));
}

TEST_CASE("hat generator table from the paper") {
    // q_i(zhat_ik) = -zhat_{i+1,k}, q_i(zhat_{k,i+1}) = A'_{i+1,i} zhat_{k,i}
    int n = 3;
    Oracle oracle(n);
    auto mult = oracle_mult(oracle);
    CHECK(zhelobenko(n, 1, zhat(n, 1, 3), mult) == -zhat(n, 2, 3));
    CHECK(zhelobenko(n, 1, zhat(n, 3, 1), mult) == -zhat(n, 3, 2));
    CHECK(zhelobenko(n, 1, zhat(n, 2, 3), mult) ==
          zhat(n, 1, 3).times_coeff_on_right(A(n, 2, 1)));
    CHECK(zhelobenko(n, 1, zhat(n, 3, 2), mult) ==
          zhat(n, 3, 1) * Coefficient::named(n, Coefficient::Named::Ap, 2, 1));
    CHECK(zhelobenko(n, 1, zhat(n, 1, 2), mult) ==
          -(zhat(n, 2, 1) * Coefficient::named(n, Coefficient::Named::Ap, 2, 1)));
    CHECK(zhelobenko(n, 1, zhat(n, 2, 1), mult) ==
          -zhat(n, 1, 2).times_coeff_on_right(A(n, 2, 1)));
}

TEST_CASE("tring chain matches the closed linear form") {
    for (int n = 2; n <= 4; ++n) {
        Oracle oracle(n);
        auto mult = oracle_mult(oracle);
        for (int l = 2; l <= n; ++l) {
            std::vector<int> word;
            for (int k = l - 1; k >= 1; --k) word.push_back(k);
            CHECK(zhelobenko_word(n, word, ZElement::gen(n, {1, 1}), mult) == t_ring(n, l));
        }
    }
}

TEST_CASE("braid relations on all generators") {
    for (int n = 3; n <= 4; ++n) {
        Oracle oracle(n);
        auto mult = oracle_mult(oracle);
        for (int i = 1; i + 1 < n; ++i)
            for (const auto& g : all_generators(n)) {
                ZElement x = ZElement::gen(n, g);
                ZElement lhs = zhelobenko_word(n, {i, i + 1, i}, x, mult);
                ZElement rhs = zhelobenko_word(n, {i + 1, i, i + 1}, x, mult);
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("inversion relation") {
    // q_i^2(x) = (h_i+1)^{-1} sigma_i^2(x) (h_i+1) with h_{alpha_i}+1 = theta_{i,i+1}
    for (int n = 2; n <= 3; ++n) {
        Oracle oracle(n);
        auto mult = oracle_mult(oracle);
        for (int i = 1; i < n; ++i)
            for (const auto& g : all_generators(n)) {
                ZElement lhs = zhelobenko_word(n, {i, i}, ZElement::gen(n, g), mult);
                ZElement sig = sigma_auto_squared(n, i, ZElement::gen(n, g));
                ZElement rhs(n);
                Coefficient th = Coefficient::theta_diff(n, i, i + 1);
                for (const auto& [w, c] : sig.terms()) {
                    Weight mu = zword_weight(n, w);
                    std::vector<long> neg(n);
                    for (int k = 0; k < n; ++k) neg[k] = -mu.coords[k];
                    rhs.add_term(w, c * th.shift(neg) * th.inverse());
                }
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("symmetric group action on the tring variables") {
    int n = 3;
    Oracle oracle(n);
    auto mult = oracle_mult(oracle);
    std::vector<std::vector<int>> perms = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 1, 3, 2},
                                           {0, 2, 3, 1}, {0, 3, 1, 2}, {0, 3, 2, 1}};
    for (const auto& sigma : perms) {
        std::vector<int> word = reduced_word(sigma);
        for (int i = 1; i <= n; ++i)
            CHECK(zhelobenko_word(n, word, t_ring(n, i), mult) == t_ring(n, sigma[i]));
    }
}

TEST_CASE("longest element closed form") {
    for (int n = 2; n <= 3; ++n) {
        Oracle oracle(n);
        auto mult = oracle_mult(oracle);
        for (const auto& g : all_generators(n)) {
            if (g.is_t()) {
                CHECK(zhelobenko_longest(n, t_ring(n, g.i), mult) ==
                      zhelobenko_longest_closed(n, g));
            } else {
                CHECK(zhelobenko_longest(n, ZElement::gen(n, g), mult) ==
                      zhelobenko_longest_closed(n, g));
            }
        }
    }
    // n=2: q_{w_0} is the single elementary automorphism
    Oracle oracle(2);
    auto mult = oracle_mult(oracle);
    for (const auto& g : all_generators(2))
        CHECK(zhelobenko_longest(2, ZElement::gen(2, g), mult) ==
              zhelobenko(2, 1, ZElement::gen(2, g), mult));
}

TEST_CASE("epsilon and omega compatibilities") {
    // The epsilon compatibility holds in the twisted form q_i eps q_i =
    // sigma_i^2 eps: the bare form picks up the sign character of sigma_i^2 on
    // generators with exactly one index in {i, i+1} (invisible for n = 2).
    for (int n = 2; n <= 3; ++n) {
        Oracle oracle(n);
        auto mult = oracle_mult(oracle);
        for (int i = 1; i < n; ++i)
            for (const auto& g : all_generators(n)) {
                ZElement x = ZElement::gen(n, g);
                CHECK(zhelobenko(n, i, involution(zhelobenko(n, i, x, mult), Involution::epsilon),
                                 mult) ==
                      sigma_auto_squared(n, i, involution(x, Involution::epsilon)));
                // omega q_i = q_{i'-1} omega with i' = n+1-i holds as printed
                if (n > 2)
                    CHECK(involution(zhelobenko(n, i, x, mult), Involution::omega) ==
                          zhelobenko(n, n - i, involution(x, Involution::omega), mult));
                else
                    CHECK(involution(zhelobenko(n, i, x, mult), Involution::omega) ==
                          zhelobenko(n, i, involution(x, Involution::omega), mult));
            }
    }
}

TEST_CASE("the relation system is closed under epsilon and omega") {
    int n = 2;
    Oracle oracle(n);
    RuleSet rules = derive_ordering_rules(oracle, GeneratorBasis{.n = n});
    for (const auto& r : build_relations(n)) {
        CHECK(normal_order(involution(r.body_zt, Involution::epsilon), rules).is_zero());
        CHECK(normal_order(involution(r.body_zt, Involution::omega), rules).is_zero());
    }
}

TEST_CASE("longest element maps forward rules to reversed-order rules") {
    int n = 2;
    Oracle oracle(n);
    auto mult = oracle_mult(oracle);
    RuleSet fwd = derive_ordering_rules(oracle, GeneratorBasis{.n = n});
    for (const auto& [lhs, rule] : fwd.rules()) {
        // q_{w_0}(lhs - rhs) must still evaluate to zero...
        ZElement body(n);
        body.add_term({lhs.first, lhs.second}, Coefficient::one(n));
        body = body - star_expr_to_element(n, rule.rhs);
        ZElement image = zhelobenko_longest(n, body, mult);
        CHECK(oracle.eval_free(image).is_zero());
        // ...and its leading word is reversed-order rewritable: first >= second
        // in the reversed comparator means second-before-first in not4
        GeneratorId fi{n + 1 - lhs.first.i, n + 1 - lhs.first.j};
        GeneratorId se{n + 1 - lhs.second.i, n + 1 - lhs.second.j};
        CHECK(gen_order_lt(fi, se));
    }
}
