#include "reducta/relations.hpp"

namespace reducta {

namespace {

using Named = Coefficient::Named;

ZElement hat_gen(int n, int i, int j) { return ZElement::gen(n, {i, j}); }

Coefficient A(int n, int i, int j) { return Coefficient::named(n, Named::A, i, j); }
Coefficient Ap(int n, int i, int j) { return Coefficient::named(n, Named::Ap, i, j); }
Coefficient B(int n, int i, int j) { return Coefficient::named(n, Named::B, i, j); }
Coefficient Bp(int n, int i, int j) { return Coefficient::named(n, Named::Bp, i, j); }
Coefficient Cp(int n, int i, int j) { return Coefficient::named(n, Named::Cp, i, j); }
Coefficient inv(int n, int i, int j, long c) { return Coefficient::inv_linear(n, i, j, c); }
Coefficient th(int n, int i, int j) { return Coefficient::theta_diff(n, i, j); }

// kappa_{ikl}: the coefficient of zhat_ik zhat_kl in the type-3a relation,
// one case per relative position of i, k, l.
Coefficient kappa_3a(int n, int i, int k, int l) {
    if (i < k && k < l) return Ap(n, i, k);
    if (i < l && l < k) return Ap(n, i, k) * Ap(n, l, k) * B(n, l, k);
    if (k < i && i < l) return A(n, k, i);
    if (k < l && l < i) return A(n, k, i) * A(n, l, i) * Bp(n, l, i);
    if (l < i && i < k) return Ap(n, i, k) * Ap(n, l, k) * B(n, l, k) * A(n, l, i) * Bp(n, l, i);
    return A(n, k, i) * Ap(n, l, k) * B(n, l, k) * A(n, l, i) * Bp(n, l, i); // l < k < i
}

// E-ring_{ikl}: the right hand side shared by the six type-3a cases.
ZElement ering_3a(int n, int i, int k, int l) {
    ZElement tdiff_ik = hat_gen(n, i, i) - hat_gen(n, k, k);
    ZElement tdiff_kl = hat_gen(n, k, k) - hat_gen(n, l, l);
    Coefficient c1 = (th(n, i, l) + Coefficient::one(n)) * inv(n, i, k, 0) * inv(n, i, l, 0);
    Coefficient c2 = (th(n, i, l) - Coefficient::one(n)) * inv(n, k, l, 0) * inv(n, i, l, 0);
    ZElement out = -(tdiff_ik * c1 + tdiff_kl * c2).free_mul(hat_gen(n, i, l));
    for (int a = 1; a <= n; ++a) {
        if (a == i || a == k || a == l) continue;
        out = out + hat_gen(n, a, l).free_mul(hat_gen(n, i, a))
                        .times_coeff_on_right(B(n, a, i) * inv(n, k, a, 1));
    }
    return out;
}

Relation make(int, Relation::Family fam, std::vector<int> idx, ZElement body_hat) {
    Relation r;
    r.family = fam;
    r.indices = std::move(idx);
    r.body_hat = std::move(body_hat);
    r.body_zt = change_basis(r.body_hat, BasisDirection::from_hat_ring);
    if (!r.body_hat.is_weight_homogeneous(&r.weight))
        throw Error("relation body is not weight homogeneous: " + r.name());
    return r;
}

Relation make_zt(int, Relation::Family fam, std::vector<int> idx, ZElement body_zt) {
    Relation r;
    r.family = fam;
    r.indices = std::move(idx);
    r.body_zt = std::move(body_zt);
    r.body_hat = change_basis(r.body_zt, BasisDirection::to_hat_ring);
    if (!r.body_zt.is_weight_homogeneous(&r.weight))
        throw Error("relation body is not weight homogeneous: " + r.name());
    return r;
}

} // namespace

std::string Relation::family_code(Family f) {
    switch (f) {
        case Family::T1: return "1";
        case Family::T2: return "2";
        case Family::T3a: return "3a";
        case Family::T3b: return "3b";
        case Family::T4a: return "4a";
        case Family::T4b: return "4b";
    }
    return "?";
}

Relation::Family Relation::family_from_code(const std::string& code) {
    if (code == "1") return Family::T1;
    if (code == "2") return Family::T2;
    if (code == "3a") return Family::T3a;
    if (code == "3b") return Family::T3b;
    if (code == "4a") return Family::T4a;
    if (code == "4b") return Family::T4b;
    throw Error("unknown relation family: " + code);
}

std::string Relation::name() const {
    std::string s = "type" + family_code(family) + "(";
    for (size_t k = 0; k < indices.size(); ++k) s += (k ? "," : "") + std::to_string(indices[k]);
    return s + ")";
}

std::vector<Relation> build_relations(int n, Relation::Family family) {
    if (n < 2) throw BadIndex("relations need n >= 2");
    std::vector<Relation> out;
    using F = Relation::Family;
    switch (family) {
        case F::T1:
            // z_ij z_ik = z_ik z_ij A_kj and z_ji z_ki = z_ki z_ji A'_kj, j < k
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    for (int k = j + 1; k <= n; ++k) {
                        if (i == j || i == k) continue;
                        ZElement row = ZElement::gen(n, {i, j}).free_mul(ZElement::gen(n, {i, k})) -
                                       ZElement::gen(n, {i, k})
                                           .free_mul(ZElement::gen(n, {i, j}))
                                           .times_coeff_on_right(A(n, k, j));
                        out.push_back(make_zt(n, F::T1, {i, j, k, 0}, std::move(row)));
                        ZElement col = ZElement::gen(n, {j, i}).free_mul(ZElement::gen(n, {k, i})) -
                                       ZElement::gen(n, {k, i})
                                           .free_mul(ZElement::gen(n, {j, i}))
                                           .times_coeff_on_right(Ap(n, k, j));
                        out.push_back(make_zt(n, F::T1, {i, j, k, 1}, std::move(col)));
                    }
            break;
        case F::T2:
            // pairwise distinct i,j,k,l with i < k
            for (int i = 1; i <= n; ++i)
                for (int k = i + 1; k <= n; ++k)
                    for (int j = 1; j <= n; ++j)
                        for (int l = 1; l <= n; ++l) {
                            if (j == l || j == i || j == k || l == i || l == k) continue;
                            ZElement lhs = ZElement::gen(n, {i, j}).free_mul(ZElement::gen(n, {k, l}));
                            if (j < l) {
                                lhs = lhs - ZElement::gen(n, {k, l}).free_mul(ZElement::gen(n, {i, j}));
                            } else {
                                lhs = lhs - ZElement::gen(n, {k, l})
                                                .free_mul(ZElement::gen(n, {i, j}))
                                                .times_coeff_on_right(Ap(n, j, l) * Ap(n, l, j));
                            }
                            lhs = lhs - ZElement::gen(n, {k, j})
                                            .free_mul(ZElement::gen(n, {i, l}))
                                            .times_coeff_on_right(Coefficient::d_coeff(n, i, j, k, l));
                            out.push_back(make_zt(n, F::T2, {i, j, k, l}, std::move(lhs)));
                        }
            break;
        case F::T3a:
            for (int i = 1; i <= n; ++i)
                for (int k = 1; k <= n; ++k)
                    for (int l = 1; l <= n; ++l) {
                        if (i == k || k == l || i == l) continue;
                        ZElement body = hat_gen(n, i, k)
                                            .free_mul(hat_gen(n, k, l))
                                            .times_coeff_on_right(kappa_3a(n, i, k, l)) -
                                        hat_gen(n, k, l)
                                            .free_mul(hat_gen(n, i, k))
                                            .times_coeff_on_right(B(n, k, i)) -
                                        ering_3a(n, i, k, l);
                        out.push_back(make(n, F::T3a, {i, k, l}, std::move(body)));
                    }
            break;
        case F::T3b:
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                    if (i == j) continue;
                    ZElement zij = hat_gen(n, i, j);
                    for (int m = 1; m <= n; ++m) {
                        ZElement ti = hat_gen(n, i, i), tj = hat_gen(n, j, j);
                        ZElement rhs(n);
                        if (m == i) {
                            rhs = ti.free_mul(zij).times_coeff_on_right(Cp(n, j, i)) -
                                  tj.free_mul(zij).times_coeff_on_right(inv(n, i, j, 2));
                            for (int a = 1; a <= n; ++a) {
                                if (a == i || a == j) continue;
                                rhs = rhs - hat_gen(n, a, j).free_mul(hat_gen(n, i, a))
                                                .times_coeff_on_right(inv(n, i, a, 2));
                            }
                        } else if (m == j) {
                            rhs = -ti.free_mul(zij).times_coeff_on_right(Cp(n, j, i) * inv(n, i, j, -1)) +
                                  tj.free_mul(zij).times_coeff_on_right(A(n, i, j) * Ap(n, j, i) * B(n, j, i));
                            for (int a = 1; a <= n; ++a) {
                                if (a == i || a == j) continue;
                                rhs = rhs + hat_gen(n, a, j).free_mul(hat_gen(n, i, a))
                                                .times_coeff_on_right(A(n, i, j) * Ap(n, j, i) *
                                                                      B(n, a, i) * inv(n, j, a, 1));
                            }
                        } else {
                            int k = m;
                            Coefficient ci = (th(n, i, j) + Coefficient::from_rat(n, 3)) * B(n, j, i) *
                                             inv(n, i, k, 1) * inv(n, i, k, -1) * inv(n, j, k, -1);
                            Coefficient cj = (th(n, i, j) + Coefficient::one(n)) * B(n, j, i) *
                                             inv(n, i, k, -1) * inv(n, j, k, -1) * inv(n, j, k, -1);
                            Coefficient ck = A(n, i, k) * A(n, k, i) * A(n, j, k) * Bp(n, j, k);
                            rhs = ti.free_mul(zij).times_coeff_on_right(ci) +
                                  tj.free_mul(zij).times_coeff_on_right(cj) +
                                  hat_gen(n, k, k).free_mul(zij).times_coeff_on_right(ck);
                            rhs = rhs - hat_gen(n, k, j).free_mul(hat_gen(n, i, k))
                                            .times_coeff_on_right((th(n, i, j) + Coefficient::one(n)) *
                                                                  B(n, k, i) * inv(n, i, k, -1) *
                                                                  inv(n, j, k, -1));
                            for (int a = 1; a <= n; ++a) {
                                if (a == i || a == j || a == k) continue;
                                rhs = rhs - hat_gen(n, a, j).free_mul(hat_gen(n, i, a))
                                                .times_coeff_on_right(
                                                    (th(n, i, j) + Coefficient::one(n)) * inv(n, i, k, -1) *
                                                    inv(n, j, k, -1) * B(n, a, i) * inv(n, k, a, 1));
                            }
                        }
                        ZElement body = zij.free_mul(hat_gen(n, m, m)) - rhs;
                        out.push_back(make(n, F::T3b, {i, j, m}, std::move(body)));
                    }
                }
            break;
        case F::T4a:
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    ZElement ti = hat_gen(n, i, i), tj = hat_gen(n, j, j);
                    out.push_back(make(n, F::T4a, {i, j}, ti.free_mul(tj) - tj.free_mul(ti)));
                }
            break;
        case F::T4b:
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    ZElement tdiff = hat_gen(n, i, i) - hat_gen(n, j, j);
                    ZElement body = hat_gen(n, i, j).free_mul(hat_gen(n, j, i)) -
                                    hat_gen(n, j, i).free_mul(hat_gen(n, i, j)) -
                                    ZElement(n, th(n, i, j)) +
                                    tdiff.free_mul(tdiff) * inv(n, i, j, 0);
                    for (int a = 1; a <= n; ++a) {
                        if (a == i || a == j) continue;
                        body = body - hat_gen(n, a, i).free_mul(hat_gen(n, i, a)) * inv(n, j, a, 1) +
                               hat_gen(n, a, j).free_mul(hat_gen(n, j, a)) * inv(n, i, a, 1);
                    }
                    out.push_back(make(n, F::T4b, {i, j}, std::move(body)));
                }
            break;
    }
    return out;
}

std::vector<Relation> build_relations(int n) {
    std::vector<Relation> out;
    for (auto fam : {Relation::Family::T1, Relation::Family::T2, Relation::Family::T3a,
                     Relation::Family::T3b, Relation::Family::T4a, Relation::Family::T4b}) {
        auto part = build_relations(n, fam);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

} // namespace reducta
