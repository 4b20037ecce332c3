#include "doctest.h"

#include "reducta/linalg.hpp"

#include <random>

using namespace reducta;

namespace {

// generic nodes x_i = theta_i, y_j = -theta_{m+j} + c_j living in 2m variables
void generic_nodes(int m, std::vector<Coefficient>& x, std::vector<Coefficient>& y) {
    int nv = 2 * m;
    x.clear();
    y.clear();
    for (int i = 1; i <= m; ++i) x.push_back(Coefficient::theta(nv, i));
    for (int j = 1; j <= m; ++j)
        y.push_back(-Coefficient::theta(nv, m + j) + Coefficient::from_rat(nv, j));
}

} // namespace

TEST_CASE("m=1 cauchy basics") {
    std::vector<Coefficient> x{Coefficient::theta(2, 1)}, y{-Coefficient::theta(2, 2)};
    CoeffMatrix a = cauchy_matrix(x, y);
    CHECK(a.at(0, 0) == Coefficient::inv_linear(2, 1, 2, 0));
    CHECK(cauchy_det(x, y) == Coefficient::inv_linear(2, 1, 2, 0));
    CoeffMatrix inv = cauchy_inverse(x, y);
    CHECK(inv.at(0, 0) == Coefficient::theta_diff(2, 1, 2));
}

TEST_CASE("bacd determinant closed form equals elimination") {
    for (int m = 2; m <= 3; ++m) {
        int nv = m;
        CoeffMatrix a = bacd_matrix(m, nv);
        Coefficient closed = bacd_det(m, nv);
        CHECK(det(a) == closed);
        // and the closed form matches the general cauchy determinant under the
        // specialization x_i = theta_i, y_j = -theta_j + 1
        std::vector<Coefficient> x, y;
        for (int i = 1; i <= m; ++i) x.push_back(Coefficient::theta(nv, i));
        for (int j = 1; j <= m; ++j)
            y.push_back(-Coefficient::theta(nv, j) + Coefficient::one(nv));
        CHECK(cauchy_det(x, y) == closed);
    }
}

TEST_CASE("bacd inverse is a two-sided inverse") {
    for (int m = 2; m <= 3; ++m) {
        CoeffMatrix a = bacd_matrix(m, m);
        CoeffMatrix inv = bacd_inverse(m, m);
        CHECK((a * inv).is_identity());
        CHECK((inv * a).is_identity());
    }
}

TEST_CASE("general cauchy inverse identity") {
    for (int m = 2; m <= 3; ++m) {
        std::vector<Coefficient> x, y;
        generic_nodes(m, x, y);
        CoeffMatrix a = cauchy_matrix(x, y);
        CoeffMatrix inv = cauchy_inverse(x, y);
        CHECK((a * inv).is_identity());
        CHECK((inv * a).is_identity());
        CHECK(det(a) == cauchy_det(x, y));
    }
}

TEST_CASE("symmetric node specialization gives a symmetric matrix") {
    int nv = 3;
    std::vector<Coefficient> x, y;
    for (int i = 1; i <= 3; ++i) {
        x.push_back(Coefficient::theta(nv, i));
        y.push_back(Coefficient::theta(nv, i));
    }
    CoeffMatrix a = cauchy_matrix(x, y);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(a.at(i, j) == a.at(j, i));
}

TEST_CASE("degenerate cauchy nodes are rejected") {
    std::vector<Coefficient> x{Coefficient::theta(2, 1), Coefficient::theta(2, 1)};
    std::vector<Coefficient> y{-Coefficient::theta(2, 2), -Coefficient::theta(2, 2) + Coefficient::one(2)};
    CHECK_THROWS_AS(cauchy_inverse(x, y), DegenerateNodes);
    std::vector<Coefficient> x2{Coefficient::theta(2, 1)}, y2{-Coefficient::theta(2, 1)};
    CHECK_THROWS_AS(cauchy_matrix(x2, y2), ZeroDenominator);
}

TEST_CASE("residue identity behind the explicit inverse") {
    // 1/(th_ik+1) prod_{b!=i} (th_ib+1)/th_ib
    //   - sum_{j!=i} 1/(th_ij (th_jk+1)) prod_{b!=i,j} (th_jb+1)/th_jb
    //   = delta_ik prod_{b!=i} th_ib/(th_ib-1)
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<long> draw(-40, 40);
    int m = 4;
    int checked = 0;
    while (checked < 12) {
        std::vector<Rat> pt(m);
        for (int k = 0; k < m; ++k) pt[k] = rat(draw(rng), 1 + (long)(rng() % 5));
        bool safe = true;
        for (int a = 0; a < m && safe; ++a)
            for (int b = 0; b < m && safe; ++b) {
                if (a == b) continue;
                Rat d = pt[a] - pt[b];
                if (d == 0 || d == 1 || d == -1) safe = false;
            }
        if (!safe) continue;
        ++checked;
        for (int i = 1; i <= m; ++i)
            for (int k = 1; k <= m; ++k) {
                auto th = [&](int a, int b) { return pt[a - 1] - pt[b - 1]; };
                Rat lhs = Rat(1) / (th(i, k) + 1);
                for (int b = 1; b <= m; ++b)
                    if (b != i) lhs *= (th(i, b) + 1) / th(i, b);
                for (int j = 1; j <= m; ++j) {
                    if (j == i) continue;
                    Rat term = Rat(1) / (th(i, j) * (th(j, k) + 1));
                    for (int b = 1; b <= m; ++b)
                        if (b != i && b != j) term *= (th(j, b) + 1) / th(j, b);
                    lhs -= term;
                }
                Rat rhs(0);
                if (i == k) {
                    rhs = 1;
                    for (int b = 1; b <= m; ++b)
                        if (b != i) rhs *= th(i, b) / (th(i, b) - 1);
                }
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("solve") {
    int nv = 2;
    CoeffMatrix id = CoeffMatrix::identity(3, nv);
    CoeffMatrix b(3, 1, nv);
    b.at(0, 0) = Coefficient::theta(nv, 1);
    b.at(1, 0) = Coefficient::named(nv, Coefficient::Named::A, 1, 2);
    b.at(2, 0) = Coefficient::one(nv);
    CHECK(solve(id, b) == b);

    // 2x2 bacd system solved against the closed-form inverse
    CoeffMatrix a = bacd_matrix(2, nv);
    CoeffMatrix sol = solve(a, CoeffMatrix::identity(2, nv));
    CHECK(sol == bacd_inverse(2, nv));

    // unit triangular systems back-substitute without division
    CoeffMatrix tri = CoeffMatrix::identity(2, nv);
    tri.at(0, 1) = Coefficient::named(nv, Coefficient::Named::B, 1, 2);
    CoeffMatrix rhs(2, 1, nv);
    rhs.at(0, 0) = Coefficient::one(nv);
    rhs.at(1, 0) = Coefficient::theta(nv, 2);
    CoeffMatrix x = solve(tri, rhs);
    CHECK(x.at(1, 0) == Coefficient::theta(nv, 2));
    CHECK(x.at(0, 0) == Coefficient::one(nv) -
                            Coefficient::named(nv, Coefficient::Named::B, 1, 2) *
                                Coefficient::theta(nv, 2));

    // singular matrix throws
    CoeffMatrix sing(2, 2, nv);
    sing.at(0, 0) = Coefficient::one(nv);
    sing.at(0, 1) = Coefficient::one(nv);
    sing.at(1, 0) = Coefficient::from_rat(nv, 2);
    sing.at(1, 1) = Coefficient::from_rat(nv, 2);
    CHECK_THROWS_AS(solve(sing, CoeffMatrix::identity(2, nv)), Singular);
    CHECK(det(sing).is_zero());
}

TEST_CASE("solve_consistent handles rectangular systems") {
    int nv = 2;
    CoeffMatrix a(3, 2, nv);
    a.at(0, 0) = Coefficient::one(nv);
    a.at(1, 1) = Coefficient::one(nv);
    a.at(2, 0) = Coefficient::one(nv);
    a.at(2, 1) = Coefficient::one(nv);
    std::vector<Coefficient> b{Coefficient::theta(nv, 1), Coefficient::theta(nv, 2),
                               Coefficient::theta(nv, 1) + Coefficient::theta(nv, 2)};
    auto sol = solve_consistent(a, b);
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == Coefficient::theta(nv, 1));
    CHECK((*sol)[1] == Coefficient::theta(nv, 2));

    b[2] = Coefficient::one(nv); // now inconsistent
    CHECK(!solve_consistent(a, b).has_value());
}

TEST_CASE("elimination determinant at random numeric points for larger m") {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<long> draw(-30, 30);
    for (int m = 4; m <= 6; ++m) {
        // random rational nodes; retry until all pairwise sums are nonzero
        std::vector<Coefficient> x, y;
        int nv = 1;
        while (true) {
            x.clear();
            y.clear();
            for (int i = 0; i < m; ++i) {
                x.push_back(Coefficient::from_rat(nv, rat(draw(rng), 1 + (long)(rng() % 3))));
                y.push_back(Coefficient::from_rat(nv, rat(draw(rng), 1 + (long)(rng() % 3))));
            }
            bool ok = true;
            for (int i = 0; i < m && ok; ++i)
                for (int j = 0; j < m && ok; ++j) {
                    if ((x[i] + y[j]).is_zero()) ok = false;
                    if (i != j && ((x[i] - x[j]).is_zero() || (y[i] - y[j]).is_zero())) ok = false;
                }
            if (ok) break;
        }
        CoeffMatrix a = cauchy_matrix(x, y);
        CHECK(det(a) == cauchy_det(x, y));
    }
}
