#pragma once

#include "reducta/zn.hpp"

#include <string>
#include <vector>

namespace reducta {

// One instance of the defining relation system. body_hat is written over the
// zhat/tring letters (the coefficient-bounded form); body_zt is its expansion
// over the plain z/t letters. Both are asserted-zero elements of the free
// module, words meaning star monomials.
struct Relation {
    enum class Family { T1, T2, T3a, T3b, T4a, T4b };
    Family family;
    std::vector<int> indices;
    ZElement body_hat;
    ZElement body_zt;
    Weight weight;

    std::string name() const;
    static std::string family_code(Family f);
    static Family family_from_code(const std::string& code);
};

// The full system for Z_n: n^2(n^2-1)/2 instances across the six families.
std::vector<Relation> build_relations(int n);
std::vector<Relation> build_relations(int n, Relation::Family family);

} // namespace reducta
