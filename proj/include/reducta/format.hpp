#pragma once

#include "reducta/relations.hpp"
#include "reducta/rules.hpp"

#include <string>

namespace reducta {

// hat=true prints the letters as the ring/hat generators.
std::string latex_zelement(const ZElement& x, bool hat = false);
std::string latex_coefficient(const Coefficient& c);

// Structured text: {"terms":[{"coeff":{"num":...,"den":[...]},"word":[[...]]}]}
std::string json_zelement(const ZElement& x, bool hat = false);

std::string json_relation(const Relation& r);
std::string latex_relation(const Relation& r);
std::string text_relation(const Relation& r);

std::string text_rule(const OrderingRule& r);
std::string json_rule(const OrderingRule& r);

} // namespace reducta
