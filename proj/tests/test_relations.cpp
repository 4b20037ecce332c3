#include "doctest.h"

#include "reducta/projector.hpp"
#include "reducta/relations.hpp"
#include "reducta/verify.hpp"

using namespace reducta;

namespace {
Coefficient A(int n, int i, int j) { return Coefficient::named(n, Coefficient::Named::A, i, j); }
} // namespace

TEST_CASE("relation counts are n^2(n^2-1)/2") {
    CHECK(build_relations(2).size() == 6);
    CHECK(build_relations(3).size() == 36);
    CHECK(build_relations(4).size() == 120);
    CHECK(build_relations(3, Relation::Family::T1).size() == 6);
    CHECK(build_relations(4, Relation::Family::T2).size() == 12);
}

TEST_CASE("printed forms of sample instances") {
    {
        // type 1, n=3, (1,2,3): z_12 z_13 - z_13 z_12 A_32
        auto rels = build_relations(3, Relation::Family::T1);
        ZElement expect = ZElement::gen(3, {1, 2}).free_mul(ZElement::gen(3, {1, 3})) -
                          ZElement::gen(3, {1, 3})
                              .free_mul(ZElement::gen(3, {1, 2}))
                              .times_coeff_on_right(A(3, 3, 2));
        bool found = false;
        for (const auto& r : rels) found |= (r.body_zt == expect);
        CHECK(found);
    }
    {
        // type 2, n=4, (1,2,3,4): [z_12, z_34] - z_32 z_14 D_1234
        auto rels = build_relations(4, Relation::Family::T2);
        ZElement expect = ZElement::gen(4, {1, 2}).free_mul(ZElement::gen(4, {3, 4})) -
                          ZElement::gen(4, {3, 4}).free_mul(ZElement::gen(4, {1, 2})) -
                          ZElement::gen(4, {3, 2})
                              .free_mul(ZElement::gen(4, {1, 4}))
                              .times_coeff_on_right(Coefficient::d_coeff(4, 1, 2, 3, 4));
        bool found = false;
        for (const auto& r : rels) found |= (r.body_zt == expect);
        CHECK(found);
    }
    {
        // type 3b, n=2, (1,2) target 1: zhat_12 tring_1 - tring_1 zhat_12 C'_21
        //                               + tring_2 zhat_12 / (th_12 + 2)
        auto rels = build_relations(2, Relation::Family::T3b);
        ZElement zh(2), t1(2), t2(2);
        zh.add_term({GeneratorId{1, 2}}, Coefficient::one(2));
        t1.add_term({GeneratorId{1, 1}}, Coefficient::one(2));
        t2.add_term({GeneratorId{2, 2}}, Coefficient::one(2));
        ZElement expect =
            zh.free_mul(t1) -
            t1.free_mul(zh).times_coeff_on_right(Coefficient::named(2, Coefficient::Named::Cp, 2, 1)) +
            t2.free_mul(zh).times_coeff_on_right(Coefficient::inv_linear(2, 1, 2, 2));
        bool found = false;
        for (const auto& r : rels) found |= (r.body_hat == expect);
        CHECK(found);
    }
}

TEST_CASE("relation bodies are weight homogeneous and purely quadratic plus constant") {
    for (int n = 2; n <= 3; ++n)
        for (const auto& r : build_relations(n)) {
            CHECK(r.body_hat.is_weight_homogeneous());
            for (const auto& [w, c] : r.body_hat.terms()) CHECK(w.size() != 1);
        }
}

TEST_CASE("every n=2 relation evaluates to zero under the oracle") {
    Oracle oracle(2);
    for (const auto& r : build_relations(2)) {
        INFO(r.name());
        CHECK(oracle.eval_free(r.body_zt).is_zero());
    }
}

TEST_CASE("the parallel verification path agrees with the serial one") {
    SuiteResult serial = verify_relations(2, 1);
    SuiteResult parallel = verify_relations(2, 4);
    CHECK(serial.ok);
    CHECK(parallel.ok);
    CHECK(serial.summary == parallel.summary);
}

TEST_CASE("basis change round trip") {
    int n = 3;
    ZElement x(n);
    x.add_term({GeneratorId{1, 2}, GeneratorId{3, 3}}, Coefficient::theta(n, 1));
    x.add_term({GeneratorId{2, 2}}, A(n, 1, 3));
    x.add_term({GeneratorId{3, 1}}, Coefficient::one(n));
    CHECK(change_basis(change_basis(x, BasisDirection::to_hat_ring), BasisDirection::from_hat_ring) == x);
    CHECK(change_basis(change_basis(x, BasisDirection::from_hat_ring), BasisDirection::to_hat_ring) == x);

    // zhat_21 = z_21 A_12 and tring_2 = A_12 t_2 - (th_12-1)^{-1} t_1
    ZElement zh21 = zhat(2, 2, 1);
    ZElement expect_zh = ZElement::gen(2, {2, 1}).times_coeff_on_right(A(2, 1, 2));
    CHECK(zh21 == expect_zh);
    ZElement tr2 = t_ring(2, 2);
    ZElement expect_tr = ZElement::gen(2, {2, 2}) * A(2, 1, 2) -
                         ZElement::gen(2, {1, 1}) * Coefficient::inv_linear(2, 1, 2, -1);
    CHECK(tr2 == expect_tr);
}

TEST_CASE("involutions") {
    int n = 3;
    // epsilon(z_12 * z_13) = z_31 * z_21
    ZElement x(n);
    x.add_term({GeneratorId{1, 2}, GeneratorId{1, 3}}, Coefficient::one(n));
    ZElement ex = involution(x, Involution::epsilon);
    ZElement expect(n);
    expect.add_term({GeneratorId{3, 1}, GeneratorId{2, 1}}, Coefficient::one(n));
    CHECK(ex == expect);

    // omega(z_12) = z_23 for n=3 (sign +1)
    ZElement z12 = ZElement::gen(n, {1, 2});
    CHECK(involution(z12, Involution::omega) == ZElement::gen(n, {2, 3}));

    // omega(th_12) = th_23 for n=3
    ZElement c(n, Coefficient::theta_diff(n, 1, 2));
    CHECK(involution(c, Involution::omega) == ZElement(n, Coefficient::theta_diff(n, 2, 3)));

    // both are involutive and commute
    ZElement y(n);
    y.add_term({GeneratorId{2, 1}, GeneratorId{1, 3}}, A(n, 1, 2));
    y.add_term({GeneratorId{2, 2}}, Coefficient::theta(n, 3));
    CHECK(involution(involution(y, Involution::epsilon), Involution::epsilon) == y);
    CHECK(involution(involution(y, Involution::omega), Involution::omega) == y);
    CHECK(involution(involution(y, Involution::epsilon), Involution::omega) ==
          involution(involution(y, Involution::omega), Involution::epsilon));
}

TEST_CASE("central elements") {
    auto cents = central_elements(2);
    REQUIRE(cents.size() == 3);
    // h_1 + h_2 = theta_1 + theta_2 + 3
    ZElement expect0(2, Coefficient(Polynomial::variable(2, 1) + Polynomial::variable(2, 2) +
                                    Polynomial(2, Rat(3))));
    CHECK(cents[0] == expect0);
    // (theta_1 - 1) t_1 + (theta_2 - 2) t_2
    ZElement expect2(2);
    expect2.add_term({GeneratorId{1, 1}},
                     Coefficient(Polynomial::variable(2, 1) - Polynomial(2, Rat(1))));
    expect2.add_term({GeneratorId{2, 2}},
                     Coefficient(Polynomial::variable(2, 2) - Polynomial(2, Rat(2))));
    CHECK(cents[2] == expect2);

    // commutator of t_1 + t_2 with z_12 vanishes under the oracle
    Oracle oracle(2);
    ZElement z12 = ZElement::gen(2, {1, 2});
    ZElement comm = oracle.eval_free(cents[1].free_mul(z12)) -
                    oracle.eval_free(z12.free_mul(cents[1]));
    CHECK(comm.is_zero());
}

TEST_CASE("sum of t in the ring variables") {
    // sum t_i = sum tring_i prod_{a != i} (th_ia + 1)/th_ia
    for (int n = 2; n <= 3; ++n) {
        ZElement lhs(n);
        for (int i = 1; i <= n; ++i) lhs.add_term({GeneratorId{i, i}}, Coefficient::one(n));
        ZElement rhs(n);
        for (int i = 1; i <= n; ++i) {
            Coefficient c = Coefficient::one(n);
            for (int a = 1; a <= n; ++a)
                if (a != i)
                    c *= (Coefficient::theta_diff(n, i, a) + Coefficient::one(n)) *
                         Coefficient::inv_linear(n, i, a, 0);
            rhs = rhs + t_ring(n, i) * c;
        }
        CHECK(lhs == rhs);
    }
}
