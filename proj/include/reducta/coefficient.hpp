#pragma once

#include "reducta/polynomial.hpp"

#include <vector>

namespace reducta {

// theta_i - theta_j + c with the canonical orientation i < j. A flip of the
// pair negates the form; callers account for the sign.
struct LinearForm {
    int i = 0, j = 0; // 1-based, i < j
    long c = 0;

    bool operator==(const LinearForm& o) const { return i == o.i && j == o.j && c == o.c; }
    bool operator<(const LinearForm& o) const {
        if (i != o.i) return i < o.i;
        if (j != o.j) return j < o.j;
        return c < o.c;
    }
    Polynomial to_poly(int nvars) const;
    std::string str() const;
};

// Builds the canonically oriented form for theta_i - theta_j + c; the returned
// sign is -1 when the pair had to be flipped.
std::pair<LinearForm, int> make_linear_form(int i, int j, long c);

// An element of the localized Cartan ring: num / (prod of linear forms * den_gen).
// den_gen is an escape hatch for non-factorable denominators; it stays 1 on
// every path the relation machinery exercises.
class Coefficient {
  public:
    Coefficient() : nvars_(0), num_(0), den_gen_(0) {}
    explicit Coefficient(int nvars)
        : nvars_(nvars), num_(nvars), den_gen_(nvars, Rat(1)) {}
    Coefficient(int nvars, const Rat& c)
        : nvars_(nvars), num_(nvars, c), den_gen_(nvars, Rat(1)) {}
    explicit Coefficient(Polynomial num)
        : nvars_(num.nvars()), num_(std::move(num)), den_gen_(nvars_, Rat(1)) {}

    static Coefficient zero(int nvars) { return Coefficient(nvars); }
    static Coefficient one(int nvars) { return Coefficient(nvars, Rat(1)); }
    static Coefficient from_rat(int nvars, const Rat& c) { return Coefficient(nvars, c); }
    // theta_i as a coefficient.
    static Coefficient theta(int nvars, int i);
    // theta_ij = theta_i - theta_j.
    static Coefficient theta_diff(int nvars, int i, int j);
    static Coefficient from_linear_form(int nvars, const LinearForm& f);
    // 1 / (theta_i - theta_j + c).
    static Coefficient inv_linear(int nvars, int i, int j, long c);

    enum class Named { A, Ap, B, Bp, Cp };
    // A_ij, A'_ij, B_ij, B'_ij, C'_ij of the coefficient ring.
    static Coefficient named(int nvars, Named kind, int i, int j);
    // D_ijkl = 1/theta_ik - 1/theta_jl.
    static Coefficient d_coeff(int nvars, int i, int j, int k, int l);

    int nvars() const { return nvars_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_rational() const { return num_.is_constant() && den_lin_.empty() && den_gen_.is_one(); }
    Rat rational_value() const;

    const Polynomial& num() const { return num_; }
    const std::vector<std::pair<LinearForm, int>>& den_linear() const { return den_lin_; }
    const Polynomial& den_general() const { return den_gen_; }
    Polynomial den_poly() const;

    Coefficient operator-() const;
    Coefficient operator+(const Coefficient& o) const;
    Coefficient operator-(const Coefficient& o) const;
    Coefficient operator*(const Coefficient& o) const;
    Coefficient operator/(const Coefficient& o) const;
    Coefficient& operator+=(const Coefficient& o) { *this = *this + o; return *this; }
    Coefficient& operator-=(const Coefficient& o) { *this = *this - o; return *this; }
    Coefficient& operator*=(const Coefficient& o) { *this = *this * o; return *this; }
    Coefficient& operator/=(const Coefficient& o) { *this = *this / o; return *this; }
    Coefficient operator*(const Rat& c) const;
    Coefficient inverse() const { return one(nvars_) / *this; }

    // Equality by cross multiplication (with a structural fast path).
    bool operator==(const Coefficient& o) const;
    bool operator!=(const Coefficient& o) const { return !(*this == o); }

    // theta_a -> theta_a + mu[a] for the weight vector mu (0-indexed, length nvars).
    Coefficient shift(const std::vector<long>& mu) const;
    // Weyl action by the permutation sigma (1-based image table sigma[k] = image of k).
    // shifted=true: theta_k -> theta_{sigma(k)}. shifted=false: h_k -> h_{sigma(k)}.
    Coefficient weyl_act(const std::vector<int>& sigma, bool shifted) const;
    // Substitute theta_k by the polynomial images[k] (0-indexed) everywhere.
    Coefficient substitute_all(const std::vector<Polynomial>& images) const;

    Rat evaluate(const std::vector<Rat>& point) const;

    Coefficient widen(int new_nvars) const;

    // True when the reduced denominator is a product of theta_i - theta_j + c
    // with i<j and c in [-max_abs_c, max_abs_c] (and den_gen == 1).
    bool denominator_within(long max_abs_c) const;
    // Variant of the paper's admissible set theta_ij + l, i<j, l >= min_c.
    bool denominator_shifts_at_least(long min_c) const;

    std::string str() const;

  private:
    void require_same_ring(const Coefficient& o) const {
        if (nvars_ != o.nvars_) throw RingMismatch();
    }
    void reduce();
    void push_den_form(const LinearForm& f, int mult);

    int nvars_;
    Polynomial num_;
    std::vector<std::pair<LinearForm, int>> den_lin_; // sorted by form
    Polynomial den_gen_;
};

inline Coefficient operator*(const Rat& c, const Coefficient& x) { return x * c; }

// Writes p as scalar * prod(form^mult) * residual, peeling only exact factors
// theta_i - theta_j + c with |c| <= max_abs_c.
struct LinearFactorization {
    std::vector<std::pair<LinearForm, int>> factors;
    Polynomial residual;
};
LinearFactorization extract_linear_factors(const Polynomial& p, long max_abs_c = 64);

} // namespace reducta
