#pragma once

#include "reducta/enveloping.hpp"

#include <functional>
#include <map>

namespace reducta {

using ZWord = std::vector<GeneratorId>;

struct ZWordLess {
    bool operator()(const ZWord& a, const ZWord& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

Weight zword_weight(int n, const ZWord& w);
bool zword_ordered(const ZWord& w, GenOrder ord = GenOrder::not4);
// Rewriting measure: (k-1)d(I_1) + (k-2)d(I_2) + ... + d(I_{k-1}).
long zword_measure(const ZWord& w);

// Left-coefficient combination of words in the generators z_ij, t_i. The same
// container serves the free algebra (words as star products) and the tilde
// coordinates (words as images of PBW monomials); context decides.
class ZElement {
  public:
    using Terms = std::map<ZWord, Coefficient, ZWordLess>;

    ZElement() : n_(0) {}
    explicit ZElement(int n) : n_(n) {}
    ZElement(int n, const Coefficient& c) : n_(n) { add_term({}, c); }

    static ZElement gen(int n, GeneratorId g);
    static ZElement gen(int n, GeneratorId g, const Coefficient& c);

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    void add_term(const ZWord& w, const Coefficient& c);

    ZElement operator+(const ZElement& o) const;
    ZElement operator-(const ZElement& o) const;
    ZElement operator-() const;
    ZElement operator*(const Coefficient& c) const; // left coefficient
    ZElement operator*(const Rat& c) const;
    bool operator==(const ZElement& o) const;

    // Word concatenation with coefficient crossing (free product, no relations).
    ZElement free_mul(const ZElement& o) const;
    // Right coefficient moved to the left through each (weight homogeneous) word.
    ZElement times_coeff_on_right(const Coefficient& c) const;

    // Maximal degree (word length) and weight homogeneity helpers.
    int degree() const;
    bool is_weight_homogeneous(Weight* out = nullptr) const;
    // Splits into weight-homogeneous components.
    std::map<Weight, ZElement> weight_components() const;

    ZElement widen(int new_n) const;

    std::string str() const;

  private:
    int n_;
    Terms terms_;
};

// Substitutes every letter by an element (with coefficient crossing).
ZElement substitute_letters(const ZElement& x, const std::function<ZElement(GeneratorId)>& image);

// Lift between Z_n coset representatives and the enveloping algebra. lift
// assumes every word already PBW-sorted (tilde coordinates).
EnvElement lift(const ZElement& x);
ZElement project_coset(const EnvElement& x);

// --- hat/ring change of variables -------------------------------------------

// tring_l in the t basis (the closed linear form of the q-chain definition).
ZElement t_ring(int n, int l);
// t_l in the tring basis (inverse change of variables).
ZElement t_plain_in_ring(int n, int l);
// zhat_ij = z_ij * prod_{k<i} A_ki, as a left-normalized z element.
ZElement zhat(int n, int i, int j);
// z_ij expressed as zhat_ij times the inverse unit.
ZElement z_plain_in_hat(int n, int i, int j);

enum class BasisDirection { to_hat_ring, from_hat_ring };
// to_hat_ring: input letters mean z/t, output letters mean zhat/tring.
// from_hat_ring: the inverse. Round trip is the identity.
ZElement change_basis(const ZElement& x, BasisDirection dir);

// --- involutions and central elements ---------------------------------------

enum class Involution { epsilon, omega };
// epsilon: Chevalley anti-involution, z_ij -> z_ji, fixes theta.
// omega: Dynkin diagram flip, z_ij -> (-1)^{i+j+1} z_{j'i'}, theta_k -> -theta_{k'}-(n+1).
ZElement involution(const ZElement& x, Involution kind);

// h_1+...+h_n (a pure coefficient), t_1+...+t_n, and sum (h_i - 2i) t_i.
std::vector<ZElement> central_elements(int n);

} // namespace reducta
