#include "reducta/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace reducta {

Polynomial Polynomial::variable(int nvars, int var, const Rat& coeff) {
    check_nvars(nvars);
    if (var < 1 || var > nvars) throw BadIndex("variable " + std::to_string(var) + " of " + std::to_string(nvars));
    Polynomial p(nvars);
    if (coeff != 0) {
        Monomial m;
        m.e[var - 1] = 1;
        p.terms_.push_back({m, coeff});
    }
    return p;
}

Rat Polynomial::constant_value() const {
    if (terms_.empty()) return Rat(0);
    if (!is_constant()) throw Error("polynomial is not constant: " + str());
    return terms_[0].second;
}

int Polynomial::degree_in(int var) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max<int>(d, m.e[var - 1]);
    return d;
}

Polynomial Polynomial::from_terms(int nvars, std::vector<Term> raw) {
    std::sort(raw.begin(), raw.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    Polynomial p(nvars);
    for (auto& [m, c] : raw) {
        if (!p.terms_.empty() && p.terms_.back().first == m)
            p.terms_.back().second += c;
        else
            p.terms_.push_back({m, c});
        if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
    }
    return p;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require_same_ring(o);
    Polynomial r(nvars_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        if (terms_[i].first == o.terms_[j].first) {
            Rat c = terms_[i].second + o.terms_[j].second;
            if (c != 0) r.terms_.push_back({terms_[i].first, std::move(c)});
            ++i, ++j;
        } else if (terms_[i].first < o.terms_[j].first) {
            r.terms_.push_back(terms_[i++]);
        } else {
            r.terms_.push_back(o.terms_[j++]);
        }
    }
    while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
    while (j < o.terms_.size()) r.terms_.push_back(o.terms_[j++]);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same_ring(o);
    if (terms_.empty() || o.terms_.empty()) return Polynomial(nvars_);
    // multiply the smaller list into the larger one, one sorted merge per term
    const Polynomial& big = terms_.size() >= o.terms_.size() ? *this : o;
    const Polynomial& small = terms_.size() >= o.terms_.size() ? o : *this;
    Polynomial acc(nvars_);
    std::vector<Term> row;
    for (const auto& [ms, cs] : small.terms_) {
        row.clear();
        row.reserve(big.terms_.size());
        for (const auto& [mb, cb] : big.terms_) row.push_back({ms * mb, cs * cb});
        // rows are already sorted: multiplying by a fixed monomial preserves order
        Polynomial part(nvars_);
        part.terms_ = std::move(row);
        acc += part;
        row = std::move(part.terms_);
    }
    return acc;
}

Polynomial Polynomial::operator*(const Rat& c) const {
    if (c == 0) return Polynomial(nvars_);
    Polynomial r(*this);
    for (auto& [m, x] : r.terms_) x *= c;
    return r;
}

Polynomial Polynomial::shift(const std::vector<long>& delta) const {
    std::vector<int> id(nvars_);
    for (int k = 0; k < nvars_; ++k) id[k] = k;
    return substitute_vars(id, delta);
}

Polynomial Polynomial::substitute_vars(const std::vector<int>& perm, const std::vector<long>& offset) const {
    Polynomial result(nvars_);
    // Per-variable powers of (theta_{perm[k]} + offset[k]) are built on demand.
    std::vector<std::vector<Polynomial>> powers(nvars_);
    auto power_of = [&](int k, int exp) -> const Polynomial& {
        auto& tab = powers[k];
        if (tab.empty()) tab.push_back(Polynomial(nvars_, Rat(1)));
        while ((int)tab.size() <= exp) {
            Polynomial base = Polynomial::variable(nvars_, perm[k] + 1);
            if (offset[k] != 0) base += Polynomial(nvars_, Rat(offset[k]));
            tab.push_back(tab.back() * base);
        }
        return tab[exp];
    };
    for (const auto& [m, c] : terms_) {
        Polynomial t(nvars_, c);
        for (int k = 0; k < nvars_; ++k)
            if (m.e[k]) {
                if (perm[k] == k && offset[k] == 0) {
                    Monomial mk;
                    mk.e[k] = m.e[k];
                    t = Polynomial::from_terms(nvars_, {{mk, Rat(1)}}) * t;
                } else {
                    t = t * power_of(k, m.e[k]);
                }
            }
        result += t;
    }
    return result;
}

Polynomial Polynomial::substitute_all(const std::vector<Polynomial>& images) const {
    if ((int)images.size() < nvars_) throw BadIndex("substitution image list too short");
    Polynomial result(nvars_);
    std::vector<std::vector<Polynomial>> powers(nvars_);
    auto power_of = [&](int k, int exp) -> const Polynomial& {
        auto& tab = powers[k];
        if (tab.empty()) tab.push_back(Polynomial(nvars_, Rat(1)));
        while ((int)tab.size() <= exp) tab.push_back(tab.back() * images[k]);
        return tab[exp];
    };
    for (const auto& [m, c] : terms_) {
        Polynomial t(nvars_, c);
        for (int k = 0; k < nvars_; ++k)
            if (m.e[k]) t = t * power_of(k, m.e[k]);
        result += t;
    }
    return result;
}

Rat Polynomial::evaluate(const std::vector<Rat>& point) const {
    if ((int)point.size() < nvars_) throw BadIndex("evaluation point too short");
    Rat total(0);
    for (const auto& [m, c] : terms_) {
        Rat t = c;
        for (int k = 0; k < nvars_; ++k)
            for (int p = 0; p < m.e[k]; ++p) t *= point[k];
        total += t;
    }
    return total;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& o) const {
    require_same_ring(o);
    if (o.is_zero()) return std::nullopt;
    Polynomial rem(*this), quot(nvars_);
    const auto& dlt = o.leading_term();
    while (!rem.is_zero()) {
        const auto& rlt = rem.leading_term();
        auto q = rlt.first.divide(dlt.first);
        if (!q) return std::nullopt;
        Rat qc = rlt.second / dlt.second;
        Polynomial qt = Polynomial::from_terms(nvars_, {{*q, qc}});
        quot += qt;
        rem -= qt * o;
    }
    return quot;
}

std::optional<Polynomial> Polynomial::divide_by_linear(int vi, int vj, long c) const {
    if (is_zero()) return Polynomial(nvars_);
    int d = degree_in(vi);
    if (d == 0) return std::nullopt;
    // Horner in theta_vi: with s = theta_vj - c and P = sum a_k theta_vi^k,
    // the quotient coefficients satisfy b_{k-1} = a_k + s b_k downward from
    // b_{d-1} = a_d, and the remainder a_0 + s b_0 must vanish.
    std::vector<std::vector<Term>> buckets(d + 1);
    for (const auto& [m, coeff] : terms_) {
        Monomial r = m;
        int k = r.e[vi - 1];
        r.e[vi - 1] = 0;
        buckets[k].push_back({r, coeff});
    }
    auto bucket_poly = [&](int k) { return from_terms(nvars_, buckets[k]); };
    auto mul_s = [&](const Polynomial& p) {
        // p * (theta_vj - c)
        std::vector<Term> out;
        out.reserve(p.terms_.size() * 2);
        for (const auto& [m, coeff] : p.terms_) {
            Monomial mj = m;
            mj.e[vj - 1] = uint8_t(mj.e[vj - 1] + 1);
            out.push_back({mj, coeff});
            if (c != 0) out.push_back({m, coeff * Rat(-c)});
        }
        return from_terms(nvars_, std::move(out));
    };
    Polynomial quotient(nvars_);
    Polynomial b = bucket_poly(d);
    for (int k = d - 1; k >= 0; --k) {
        // attach theta_vi^k to b and accumulate into the quotient
        std::vector<Term> shifted;
        shifted.reserve(b.terms_.size());
        for (const auto& [m, coeff] : b.terms_) {
            Monomial mk = m;
            mk.e[vi - 1] = uint8_t(mk.e[vi - 1] + k);
            shifted.push_back({mk, coeff});
        }
        quotient += from_terms(nvars_, std::move(shifted));
        b = bucket_poly(k) + mul_s(b);
        if (k == 0 && !b.is_zero()) return std::nullopt; // nonzero remainder
    }
    return quotient;
}

Polynomial Polynomial::widen(int new_nvars) const {
    check_nvars(new_nvars);
    if (new_nvars < nvars_) throw BadIndex("cannot narrow a polynomial ring");
    Polynomial r(*this);
    r.nvars_ = new_nvars;
    return r;
}

std::string Polynomial::str(const std::string& var_stem) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    // Display descending so the leading term comes first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        bool lead = (it == terms_.rbegin());
        Rat a = c;
        if (a < 0) {
            out << (lead ? "-" : " - ");
            a = -a;
        } else if (!lead) {
            out << " + ";
        }
        bool printed_num = false;
        if (a != 1 || m.deg() == 0) {
            out << a.get_str();
            printed_num = true;
        }
        for (int k = 0; k < kMaxVars; ++k)
            if (m.e[k]) {
                if (printed_num) out << "*";
                out << var_stem << "(" << (k + 1) << ")";
                if (m.e[k] > 1) out << "^" << int(m.e[k]);
                printed_num = true;
            }
    }
    return out.str();
}

} // namespace reducta
