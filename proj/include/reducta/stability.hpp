#pragma once

#include "reducta/relations.hpp"
#include "reducta/projector.hpp"
#include "reducta/rules.hpp"

#include <optional>

namespace reducta {

// iota_n: letterwise identity, coefficients re-read in the larger ring.
ZElement embed(const ZElement& x, int target_n);

// Cut procedure from Z_{n+1} relations to Z_n relations, over the hat letters:
// drops every quadratic term whose right factor is z_{i,n+1} (i <= n). Throws
// NotCuttable when a z_{i,n+1} left factor is present.
Relation cut(const Relation& rel);
// Non-throwing variant; nullopt when ineligible or when column/row-(n+1)
// letters survive the cut.
std::optional<Relation> try_cut(const Relation& rel);

struct StabilizationPairReport {
    GenPair pair;
    bool delta_zero = false;
    bool in_span = false;
    std::vector<Coefficient> xi; // right coefficients, indexed a = 1..n
};

struct StabilizationReport {
    int n = 0;
    bool all_ok = false;
    std::vector<StabilizationPairReport> pairs;
    std::string str() const;
};

// For every pair of Z_n generators, verifies that the multiplication defect
// iota(x *_n y) - x *_{n+1} y lies in the span of z_{n+1,a} *_{n+1} z_{b,n+1}
// with b = i+k-j-l+a. Throws SpanFailure when some defect leaves the span.
StabilizationReport check_stabilization(int n, const Oracle& oracle_n, const Oracle& oracle_n1);

// Lemma support: every word of x carries a letter in the given column.
bool words_touch_column(const ZElement& x, int column);

} // namespace reducta
