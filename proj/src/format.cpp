#include "reducta/format.hpp"

#include "reducta/parser.hpp"

#include "json.hpp"

#include <sstream>

namespace reducta {

namespace {

std::string latex_poly(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        Rat a = c;
        if (a < 0) {
            out << "-";
            a = -a;
        } else if (!first) {
            out << "+";
        }
        first = false;
        bool printed = false;
        if (a != 1 || m.deg() == 0) {
            if (is_integer(a))
                out << a.get_str();
            else
                out << "\\tfrac{" << a.get_num().get_str() << "}{" << a.get_den().get_str() << "}";
            printed = true;
        }
        for (int k = 0; k < kMaxVars; ++k)
            if (m.e[k]) {
                if (printed) out << " ";
                out << "\\theta_{" << (k + 1) << "}";
                if (m.e[k] > 1) out << "^{" << int(m.e[k]) << "}";
                printed = true;
            }
    }
    return out.str();
}

std::string latex_form(const LinearForm& f, int mult) {
    std::ostringstream out;
    out << "(\\theta_{" << f.i << f.j << "}";
    if (f.c > 0) out << "+" << f.c;
    if (f.c < 0) out << "-" << (-f.c);
    out << ")";
    if (mult > 1) out << "^{" << mult << "}";
    return out.str();
}

std::string latex_word(const ZWord& w, bool hat) {
    std::ostringstream out;
    for (const GeneratorId& g : w) {
        if (g.is_t())
            out << (hat ? "\\mathring{t}_{" : "t_{") << g.i << "}";
        else
            out << (hat ? "\\mathring{z}_{" : "z_{") << g.i << g.j << "}";
        out << " ";
    }
    return out.str();
}

} // namespace

std::string latex_coefficient(const Coefficient& c) {
    bool trivial_den = c.den_linear().empty() && c.den_general().is_one();
    if (trivial_den) return latex_poly(c.num());
    std::ostringstream den;
    bool first = true;
    for (const auto& [f, m] : c.den_linear()) {
        if (!first) den << " ";
        first = false;
        den << latex_form(f, m);
    }
    if (!c.den_general().is_one()) den << (first ? "" : " ") << "(" << latex_poly(c.den_general()) << ")";
    return "\\frac{" + latex_poly(c.num()) + "}{" + den.str() + "}";
}

std::string latex_zelement(const ZElement& x, bool hat) {
    if (x.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : x.terms()) {
        if (!first) out << " + ";
        first = false;
        out << "\\left(" << latex_coefficient(c) << "\\right) " << latex_word(w, hat);
    }
    return out.str();
}

std::string json_zelement(const ZElement& x, bool hat) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [w, c] : x.terms()) {
        nlohmann::json den = nlohmann::json::array();
        for (const auto& [f, m] : c.den_linear())
            for (int k = 0; k < m; ++k) den.push_back(f.str());
        if (!c.den_general().is_one()) den.push_back(c.den_general().str());
        nlohmann::json word = nlohmann::json::array();
        for (const GeneratorId& g : w) {
            if (g.is_t())
                word.push_back(nlohmann::json::array({hat ? "tring" : "t", g.i}));
            else
                word.push_back(nlohmann::json::array({hat ? "zhat" : "z", g.i, g.j}));
        }
        terms.push_back({{"coeff", {{"num", c.num().str()}, {"den", den}}}, {"word", word}});
    }
    return nlohmann::json{{"terms", terms}}.dump();
}

namespace {

bool printed_in_hat(Relation::Family f) {
    return f == Relation::Family::T3a || f == Relation::Family::T3b ||
           f == Relation::Family::T4a || f == Relation::Family::T4b;
}

// The paper places the relation coefficients on the right of the monomials,
// where they stay coefficient-bounded; displays follow that convention.
Coefficient right_coefficient(int n, const ZWord& w, const Coefficient& c) {
    return c.shift(zword_weight(n, w).coords);
}

std::string gen_text(const GeneratorId& g, bool hat) {
    if (!hat) return g.str();
    return g.is_t() ? "tring[" + std::to_string(g.i) + "]"
                    : "zhat[" + std::to_string(g.i) + "," + std::to_string(g.j) + "]";
}

} // namespace

std::string text_relation(const Relation& r) {
    bool hat = printed_in_hat(r.family);
    const ZElement& body = hat ? r.body_hat : r.body_zt;
    int n = body.n();
    std::ostringstream out;
    out << r.name() << ": ";
    bool first = true;
    for (const auto& [w, c] : body.terms()) {
        if (!first) out << " + ";
        first = false;
        bool started = false;
        for (const GeneratorId& g : w) {
            out << (started ? "*" : "") << gen_text(g, hat);
            started = true;
        }
        Coefficient rc = right_coefficient(n, w, c);
        if (!rc.is_one() || !started) out << (started ? "*(" : "(") << rc.str() << ")";
    }
    if (first) out << "0";
    out << " = 0";
    return out.str();
}

std::string latex_relation(const Relation& r) {
    bool hat = printed_in_hat(r.family);
    const ZElement& body = hat ? r.body_hat : r.body_zt;
    int n = body.n();
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : body.terms()) {
        if (!first) out << " + ";
        first = false;
        out << latex_word(w, hat);
        Coefficient rc = right_coefficient(n, w, c);
        if (!rc.is_one() || w.empty()) out << "\\left(" << latex_coefficient(rc) << "\\right)";
    }
    if (first) out << "0";
    out << " = 0";
    return out.str();
}

std::string json_relation(const Relation& r) {
    bool hat = printed_in_hat(r.family);
    nlohmann::json j;
    j["family"] = Relation::family_code(r.family);
    j["indices"] = r.indices;
    j["body"] = nlohmann::json::parse(json_zelement(hat ? r.body_hat : r.body_zt, hat));
    return j.dump();
}

std::string text_rule(const OrderingRule& r) {
    std::ostringstream out;
    out << r.lhs.first.str() << " * " << r.lhs.second.str() << " -> ";
    bool first = true;
    for (const auto& [p, c] : r.rhs.quad) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.str() << ")*" << p.first.str() << "*" << p.second.str();
    }
    if (!r.rhs.constant.is_zero()) {
        if (!first) out << " + ";
        out << "(" << r.rhs.constant.str() << ")";
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

std::string json_rule(const OrderingRule& r) {
    auto gen_json = [](const GeneratorId& g) {
        return g.is_t() ? nlohmann::json::array({"t", g.i})
                        : nlohmann::json::array({"z", g.i, g.j});
    };
    auto coeff_json = [](const Coefficient& c) {
        nlohmann::json den = nlohmann::json::array();
        for (const auto& [f, m] : c.den_linear())
            for (int k = 0; k < m; ++k) den.push_back(f.str());
        if (!c.den_general().is_one()) den.push_back(c.den_general().str());
        return nlohmann::json{{"num", c.num().str()}, {"den", den}};
    };
    nlohmann::json j;
    j["lhs"] = nlohmann::json::array({gen_json(r.lhs.first), gen_json(r.lhs.second)});
    nlohmann::json quad = nlohmann::json::array();
    for (const auto& [p, c] : r.rhs.quad)
        quad.push_back({{"coeff", coeff_json(c)},
                        {"pair", nlohmann::json::array({gen_json(p.first), gen_json(p.second)})}});
    j["quad"] = quad;
    j["constant"] = coeff_json(r.rhs.constant);
    return j.dump();
}

} // namespace reducta
