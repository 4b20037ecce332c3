#pragma once

#include "reducta/error.hpp"
#include "reducta/rational.hpp"

#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace reducta {

// Hard cap on the number of theta-variables; exponents per variable < 256.
inline constexpr int kMaxVars = 16;

// Exponent vector of a monomial in theta_1..theta_n, fixed capacity.
struct Monomial {
    std::array<uint8_t, kMaxVars> e{};

    int deg() const {
        int d = 0;
        for (auto x : e) d += x;
        return d;
    }
    bool operator==(const Monomial& o) const { return e == o.e; }
    // Graded lex: total degree first, then exponents left to right;
    // theta_1-heavy monomials sort (and print) ahead of theta_2-heavy ones.
    bool operator<(const Monomial& o) const {
        int da = deg(), db = o.deg();
        if (da != db) return da < db;
        return std::memcmp(e.data(), o.e.data(), kMaxVars) < 0;
    }
    Monomial operator*(const Monomial& o) const {
        Monomial r;
        for (int k = 0; k < kMaxVars; ++k) r.e[k] = uint8_t(e[k] + o.e[k]);
        return r;
    }
    // Componentwise quotient; nullopt if some exponent would go negative.
    std::optional<Monomial> divide(const Monomial& o) const {
        Monomial r;
        for (int k = 0; k < kMaxVars; ++k) {
            if (e[k] < o.e[k]) return std::nullopt;
            r.e[k] = uint8_t(e[k] - o.e[k]);
        }
        return r;
    }
};

// Sparse multivariate polynomial over Q; terms sorted ascending by Monomial,
// no zero coefficients stored. nvars is the ring parameter n.
class Polynomial {
  public:
    using Term = std::pair<Monomial, Rat>;

    Polynomial() : nvars_(0) {}
    explicit Polynomial(int nvars) : nvars_(nvars) { check_nvars(nvars); }
    Polynomial(int nvars, const Rat& c) : nvars_(nvars) {
        check_nvars(nvars);
        if (c != 0) terms_.push_back({Monomial{}, c});
    }

    static Polynomial variable(int nvars, int var_one_based, const Rat& coeff = Rat(1));
    static Polynomial constant(int nvars, const Rat& c) { return Polynomial(nvars, c); }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.deg() == 0); }
    bool is_one() const { return terms_.size() == 1 && terms_[0].first.deg() == 0 && terms_[0].second == 1; }
    Rat constant_value() const;
    int degree() const { return terms_.empty() ? -1 : terms_.back().first.deg(); }
    int degree_in(int var_one_based) const;
    size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    const Term& leading_term() const { return terms_.back(); }

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o) { *this = *this + o; return *this; }
    Polynomial& operator-=(const Polynomial& o) { *this = *this - o; return *this; }
    Polynomial& operator*=(const Polynomial& o) { *this = *this * o; return *this; }
    Polynomial operator*(const Rat& c) const;
    bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    // Substitute theta_k -> theta_k + delta[k] (delta indexed from 0, length nvars).
    Polynomial shift(const std::vector<long>& delta) const;
    // Substitute theta_k -> theta_{perm[k]} + offset[k]; perm is 0-indexed.
    Polynomial substitute_vars(const std::vector<int>& perm, const std::vector<long>& offset) const;
    // Substitute every variable simultaneously; images is 0-indexed, length nvars.
    Polynomial substitute_all(const std::vector<Polynomial>& images) const;

    Rat evaluate(const std::vector<Rat>& point) const;

    // Exact division; nullopt if o does not divide *this.
    std::optional<Polynomial> divide_exact(const Polynomial& o) const;
    // Fast exact division by theta_vi - theta_vj + c (synthetic division).
    std::optional<Polynomial> divide_by_linear(int vi, int vj, long c) const;

    // Re-read in a ring with more variables (stability embedding).
    Polynomial widen(int new_nvars) const;

    std::string str(const std::string& var_stem = "th") const;

    // Build from a raw term list (unsorted, possibly with duplicates).
    static Polynomial from_terms(int nvars, std::vector<Term> raw);

  private:
    static void check_nvars(int n) {
        if (n < 0 || n > kMaxVars) throw BadIndex("ring supports at most " + std::to_string(kMaxVars) + " variables");
    }
    void require_same_ring(const Polynomial& o) const {
        if (nvars_ != o.nvars_) throw RingMismatch();
    }

    int nvars_;
    std::vector<Term> terms_;
};

inline Polynomial operator*(const Rat& c, const Polynomial& p) { return p * c; }

} // namespace reducta
