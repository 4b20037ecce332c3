#include "reducta/weight_blocks.hpp"

#include "reducta/linalg.hpp"

#include <set>
#include <sstream>

namespace reducta {

std::vector<Weight> relation_weights(int n) {
    std::set<Weight> seen;
    auto gens = all_generators(n);
    for (const auto& a : gens)
        for (const auto& b : gens)
            if (gen_order_lt(b, a)) seen.insert(a.weight(n) + b.weight(n));
    return {seen.begin(), seen.end()};
}

WeightBlockReport verify_weight_block(int n, const Weight& weight,
                                      const std::vector<Relation>& relations,
                                      const RuleSet& hat_rules) {
    WeightBlockReport rep;
    rep.weight = weight;

    // Unknowns: unordered pairs of that weight; knowns: ordered pairs.
    auto gens = all_generators(n);
    std::vector<GenPair> unordered, ordered;
    for (const auto& a : gens)
        for (const auto& b : gens) {
            if (!(a.weight(n) + b.weight(n) == weight)) continue;
            if (gen_order_lt(b, a))
                unordered.push_back({a, b});
            else
                ordered.push_back({a, b});
        }
    rep.unknowns = (int)unordered.size();

    std::vector<const Relation*> block;
    for (const auto& r : relations)
        if (r.weight == weight) block.push_back(&r);
    rep.relations_used = (int)block.size();
    rep.square = (rep.relations_used == rep.unknowns);
    if (!rep.square) {
        rep.detail = "relation count differs from the unordered monomial count";
        return rep;
    }
    if (rep.unknowns == 0) {
        rep.solvable = rep.matches_rules = rep.denominators_admissible = true;
        return rep;
    }

    auto col_of = [](const std::vector<GenPair>& v, const GenPair& p) -> int {
        for (size_t k = 0; k < v.size(); ++k)
            if (v[k] == p) return (int)k;
        return -1;
    };

    int q = rep.unknowns, m = (int)ordered.size();
    CoeffMatrix A(q, q, n), RHS(q, m + 1, n);
    for (int r = 0; r < q; ++r) {
        for (const auto& [w, c] : block[r]->body_hat.terms()) {
            if (w.empty()) {
                RHS.at(r, m) -= c; // constants move to the right hand side
                continue;
            }
            if (w.size() != 2) throw Error("relation body has a non-quadratic term: " + block[r]->name());
            GenPair p{w[0], w[1]};
            int cx = col_of(unordered, p);
            if (cx >= 0) {
                A.at(r, cx) += c;
            } else {
                int cy = col_of(ordered, p);
                if (cy < 0) throw Error("pair outside the weight block: " + p.str());
                RHS.at(r, cy) -= c;
            }
        }
    }

    CoeffMatrix sol;
    try {
        sol = solve_field(A, RHS);
    } catch (const Singular&) {
        rep.detail = "block matrix is singular";
        throw SingularBlock("weight block " + rep.detail);
    }
    rep.solvable = true;

    rep.matches_rules = true;
    std::ostringstream detail;
    // The denominator bound concerns the coefficients placed on one side of
    // the monomials, uniformly per block: the raising-side blocks are solved
    // with right coefficients, the lowering-side blocks are their images under
    // the anti-involution, which moves coefficients to the left. A left and a
    // right placement differ by the shift across the block weight.
    bool left_ok = true, right_ok = true;
    for (int x = 0; x < q; ++x)
        for (int y = 0; y <= m; ++y) {
            left_ok = left_ok && sol.at(x, y).denominator_within(2);
            Coefficient right_form = y < m ? sol.at(x, y).shift(weight.coords) : sol.at(x, y);
            right_ok = right_ok && right_form.denominator_within(2);
        }
    rep.denominators_admissible = left_ok || right_ok;
    if (!rep.denominators_admissible) detail << "inadmissible denominators in both placements; ";
    for (int x = 0; x < q; ++x) {
        OrderingRule rule;
        rule.lhs = unordered[x];
        rule.rhs.constant = sol.at(x, m);
        for (int y = 0; y < m; ++y) rule.rhs.add_quad(ordered[y], sol.at(x, y));
        const OrderingRule* oracle_rule = hat_rules.find(rule.lhs.first, rule.lhs.second);
        if (!oracle_rule) {
            rep.matches_rules = false;
            detail << "no oracle rule for " << rule.lhs.str() << "; ";
        } else {
            bool same = oracle_rule->rhs.constant == rule.rhs.constant &&
                        oracle_rule->rhs.quad.size() == rule.rhs.quad.size();
            if (same)
                for (const auto& [p, c] : rule.rhs.quad) {
                    auto it = oracle_rule->rhs.quad.find(p);
                    if (it == oracle_rule->rhs.quad.end() || !(it->second == c)) {
                        same = false;
                        break;
                    }
                }
            if (!same) {
                rep.matches_rules = false;
                detail << "solution differs from the oracle rule for " << rule.lhs.str() << "; ";
            }
        }
        rep.solved.push_back(std::move(rule));
    }
    rep.detail = detail.str();
    return rep;
}

} // namespace reducta
