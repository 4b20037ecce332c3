#pragma once

#include "reducta/linalg.hpp"
#include "reducta/projector.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>

namespace reducta {

struct GenPair {
    GeneratorId first, second;
    bool operator==(const GenPair& o) const { return first == o.first && second == o.second; }
    bool operator<(const GenPair& o) const {
        return first != o.first ? first < o.first : second < o.second;
    }
    std::string str() const { return "(" + first.str() + ", " + second.str() + ")"; }
};

// Sum of quadratic star monomials with left coefficients plus a constant.
struct StarExpr {
    std::map<GenPair, Coefficient> quad;
    Coefficient constant;

    void add_quad(const GenPair& p, const Coefficient& c);
};

// Rewrite z_I * z_J (I after J in the chosen order) into ordered monomials
// plus a constant; no linear terms occur for the symmetric pair.
struct OrderingRule {
    GenPair lhs;
    StarExpr rhs;
};

// Which degree-1 generator set and which total order the rules live in.
struct GeneratorBasis {
    int n = 0;
    GenOrder order = GenOrder::not4;
    bool reversed = false; // derive rules for the opposite order
    bool hat = false;      // zhat/tring generators instead of z/t

    bool lt(const GeneratorId& a, const GeneratorId& b) const {
        return reversed ? gen_order_lt(b, a, order) : gen_order_lt(a, b, order);
    }
    bool leq(const GeneratorId& a, const GeneratorId& b) const { return a == b || lt(a, b); }
    // Expansion of the generator in the plain z/t letters.
    ZElement expand(GeneratorId g) const;
    std::vector<GeneratorId> sorted_generators() const;
};

class RuleSet {
  public:
    RuleSet() = default;
    RuleSet(GeneratorBasis basis, std::map<GenPair, OrderingRule> rules,
            std::map<GenPair, StarExpr> tilde_exprs = {})
        : basis_(std::move(basis)), rules_(std::move(rules)), tilde_exprs_(std::move(tilde_exprs)) {}

    const GeneratorBasis& basis() const { return basis_; }
    size_t size() const { return rules_.size(); }
    const std::map<GenPair, OrderingRule>& rules() const { return rules_; }
    const OrderingRule* find(const GeneratorId& a, const GeneratorId& b) const;
    // Ordered star expansion of the quadratic tilde monomial \tilde{g_K g_L}.
    const std::map<GenPair, StarExpr>& tilde_exprs() const { return tilde_exprs_; }

    // Rule right hand side with every coefficient shifted by delta (the
    // negated weight of the word prefix it crosses); memoized, copies of the
    // rule set share the cache.
    struct ShiftedRhs {
        std::vector<std::pair<GenPair, Coefficient>> quad;
        Coefficient constant;
    };
    const ShiftedRhs& shifted_rhs(const OrderingRule& rule, const std::vector<long>& delta) const;

  private:
    struct ShiftCache {
        std::mutex mu;
        std::map<std::pair<GenPair, std::vector<long>>, std::unique_ptr<ShiftedRhs>> map;
    };
    GeneratorBasis basis_;
    std::map<GenPair, OrderingRule> rules_;
    std::map<GenPair, StarExpr> tilde_exprs_;
    std::shared_ptr<ShiftCache> shift_cache_ = std::make_shared<ShiftCache>();
};

// Computes every pairwise star product through the projector oracle, expresses
// the results in the tilde coordinates of the quadratic PBW monomials, inverts
// the unit-triangular transition matrix per weight block, and emits one rule
// per unordered generator pair.
RuleSet derive_ordering_rules(const Oracle& oracle, const GeneratorBasis& basis);

enum class RewriteStrategy { leftmost, rightmost };

struct RewriteStats {
    long steps = 0;
    bool measure_monotone = true;
};

// Default step cap; the environment variable REDUCTA_STEP_CAP overrides it.
long rewrite_step_cap();

// Fixed point of the rewrite rules: every surviving word is ordered. The
// paper's measure is monitored on quadratic replacements for the standard
// order and must never increase.
ZElement normal_order(const ZElement& x, const RuleSet& rules,
                      RewriteStrategy strategy = RewriteStrategy::leftmost,
                      RewriteStats* stats = nullptr, long step_cap = 0);

// Star product through the rewrite engine.
ZElement star_rewrite(const ZElement& a, const ZElement& b, const RuleSet& rules);

// Converts a tilde-coordinate element to the ordered star-monomial basis.
// Quadratic words go through the derived conversion table; longer words
// recurse through oracle expansions and finish with one rewriting pass.
ZElement tilde_to_star(const ZElement& tilde, const Oracle& oracle, const RuleSet& rules);

// Evaluates a star expression back to a free-algebra element (for checks).
ZElement star_expr_to_element(int n, const StarExpr& e);

} // namespace reducta
