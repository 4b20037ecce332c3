#pragma once

#include "reducta/relations.hpp"
#include "reducta/rules.hpp"

namespace reducta {

// Result of solving one per-weight block of the relation system for the
// unordered monomials and comparing with the oracle-derived rules.
struct WeightBlockReport {
    Weight weight;
    int unknowns = 0;
    int relations_used = 0;
    bool square = false;
    bool solvable = false;
    bool matches_rules = false;
    bool denominators_admissible = false;
    std::vector<OrderingRule> solved; // in the hat generators
    std::string detail;

    bool ok() const { return square && solvable && matches_rules && denominators_admissible; }
};

// Assembles the block A X = B Y + C of the printed relation system at the
// given weight (over the hat generators), solves it exactly, and compares the
// solution with the oracle-derived hat rules. Denominator admissibility means
// every factor is theta_ij + c with i < j and |c| <= 2.
WeightBlockReport verify_weight_block(int n, const Weight& weight,
                                      const std::vector<Relation>& relations,
                                      const RuleSet& hat_rules);

// All weights occurring among the unordered hat pairs.
std::vector<Weight> relation_weights(int n);

} // namespace reducta
