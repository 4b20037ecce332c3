#pragma once

#include "reducta/coefficient.hpp"
#include "reducta/weights.hpp"

#include <map>
#include <vector>

namespace reducta {

// A PBW letter of the localized enveloping algebra of gl_n + gl_n. Cartan
// elements e_ii never appear as letters; straightening absorbs them into
// coefficients as theta_i + i.
struct Letter {
    enum Species : uint8_t { EMINUS = 0, EBIG = 1, EPLUS = 2 };
    uint8_t species;
    uint8_t i, j; // 1-based

    static Letter e(int i, int j) {
        if (i == j) throw BadIndex("cartan e_ii is not a letter");
        return Letter{i > j ? EMINUS : EPLUS, (uint8_t)i, (uint8_t)j};
    }
    static Letter E(int i, int j) { return Letter{EBIG, (uint8_t)i, (uint8_t)j}; }

    bool operator==(const Letter& o) const {
        return species == o.species && i == o.i && j == o.j;
    }
    // PBW position order: e_minus block, then E block ordered like the
    // generators of Z_n, then e_plus block; e blocks are lexicographic.
    bool operator<(const Letter& o) const {
        if (species != o.species) return species < o.species;
        if (species == EBIG) return gen_order_lt({i, j}, {o.i, o.j});
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
    Weight weight(int n) const { return Weight::root(n, i, j); }
    std::string str() const {
        std::string stem = species == EBIG ? "Ebig" : "e";
        return stem + "[" + std::to_string(i) + "," + std::to_string(j) + "]";
    }
};

using Word = std::vector<Letter>;

struct WordLess {
    bool operator()(const Word& a, const Word& b) const {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

Weight word_weight(int n, const Word& w);
bool word_is_pbw(const Word& w);

struct StraightenFlags {
    bool drop_plus_suffix = false;  // work mod the left ideal generated by n_+
    bool drop_minus_prefix = false; // additionally drop words that start in n_-
};

// Element of the localized enveloping algebra, coefficients on the left of
// PBW-ordered words.
class EnvElement {
  public:
    using Terms = std::map<Word, Coefficient, WordLess>;

    EnvElement() : n_(0) {}
    explicit EnvElement(int n) : n_(n) {}
    EnvElement(int n, const Coefficient& c) : n_(n) { add_term({}, c); }

    static EnvElement one(int n) { return EnvElement(n, Coefficient::one(n)); }
    static EnvElement letter(int n, Letter l, const Coefficient& c);
    static EnvElement letter(int n, Letter l);

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }

    void add_term(const Word& w, const Coefficient& c);

    EnvElement operator+(const EnvElement& o) const;
    EnvElement operator-(const EnvElement& o) const;
    EnvElement operator-() const;
    EnvElement operator*(const Coefficient& c) const; // left multiplication by a coefficient
    bool operator==(const EnvElement& o) const;

    // Moves a right coefficient to the left: x * phi with x homogeneous words.
    EnvElement times_coeff_on_right(const Coefficient& c) const;

    std::string str() const;

  private:
    int n_;
    Terms terms_;
};

// Lie brackets of the symmetric pair: [e,e] -> e, [e,E] -> E, [E,E] -> e,
// with Cartan outputs returned as the polynomial part.
struct BracketResult {
    std::vector<std::pair<Rat, Letter>> letters;
    Polynomial cartan; // sum over produced e_aa of (theta_a + a), signed
};
BracketResult bracket_letters(int n, const Letter& a, const Letter& b);

// Lie bracket as an EnvElement (exposed for tests).
EnvElement bracket(int n, const Letter& a, const Letter& b);

// Straightens a raw term list into PBW normal form.
EnvElement straighten(int n, std::vector<std::pair<Word, Coefficient>> pending,
                      const StraightenFlags& flags = {});

// Associative product; coefficients cross letters via shift(., -weight).
EnvElement multiply(const EnvElement& a, const EnvElement& b, const StraightenFlags& flags = {});

// Canonical double coset representative: PBW terms containing any e letter
// are dropped (they lie in the left or right ideal).
EnvElement reduce_to_coset(const EnvElement& x);

// The braid cover automorphism of the Lie algebra, extended to the
// enveloping algebra: letters get the sign-permutation rule, coefficients
// the unshifted Weyl action.
EnvElement sigma_auto(int i, const EnvElement& x);

} // namespace reducta
