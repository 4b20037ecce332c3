#pragma once

#include "reducta/stability.hpp"
#include "reducta/weight_blocks.hpp"
#include "reducta/zhelobenko.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace reducta {

struct SuiteResult {
    bool ok = true;
    std::string summary;
    std::vector<std::string> failures;

    void merge(const SuiteResult& o);
};

// Every relation body evaluates to zero through the projector oracle.
SuiteResult verify_relations(int n, int jobs = 1);
// Leftmost and rightmost reduction of cubic words agree; n >= 4 uses a random
// sample of the given size.
SuiteResult verify_pbw(int n, uint64_t seed = 1, int jobs = 1, int sample = 200);
// Braid relations, inversion relation, the symmetric group action on tring,
// the longest-element closed form, the involution compatibilities, and the
// closure of the relation system under epsilon and omega.
SuiteResult verify_zhelobenko(int n);
// The three central elements commute with every generator.
SuiteResult verify_central(int n);
// Cauchy determinant and inverse identities at size m = n, the general-node
// identities at m <= 4, and the residue identity at random numeric points.
SuiteResult verify_cauchy(int n, uint64_t seed = 1, int points = 100);
// Stabilization of the multiplication and the cut bijection from n+1 to n.
SuiteResult verify_stability(int n);
// Every weight block of the printed system solves to the oracle rules.
SuiteResult verify_weight_blocks(int n, int jobs = 1);
// Ordering rules: count, soundness against the oracle, and measure-monotone
// termination on random words.
SuiteResult verify_rules(int n, uint64_t seed = 1, int words = 500, int max_len = 4);

} // namespace reducta
