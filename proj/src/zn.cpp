#include "reducta/zn.hpp"

#include <sstream>

namespace reducta {

Weight zword_weight(int n, const ZWord& w) {
    Weight mu(n);
    for (const GeneratorId& g : w) {
        mu.coords[g.i - 1] += 1;
        mu.coords[g.j - 1] -= 1;
    }
    return mu;
}

bool zword_ordered(const ZWord& w, GenOrder ord) {
    for (size_t p = 0; p + 1 < w.size(); ++p)
        if (gen_order_lt(w[p + 1], w[p], ord)) return false;
    return true;
}

long zword_measure(const ZWord& w) {
    long m = 0;
    long k = (long)w.size();
    for (size_t p = 0; p + 1 < w.size(); ++p) m += (k - 1 - (long)p) * w[p].d();
    return m;
}

ZElement ZElement::gen(int n, GeneratorId g) { return gen(n, g, Coefficient::one(n)); }

ZElement ZElement::gen(int n, GeneratorId g, const Coefficient& c) {
    if (g.i < 1 || g.i > n || g.j < 1 || g.j > n) throw BadIndex(g.str());
    ZElement x(n);
    x.add_term({g}, c);
    return x;
}

void ZElement::add_term(const ZWord& w, const Coefficient& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ZElement ZElement::operator+(const ZElement& o) const {
    if (n_ != o.n_) throw RingMismatch();
    ZElement r(*this);
    for (const auto& [w, c] : o.terms_) r.add_term(w, c);
    return r;
}

ZElement ZElement::operator-(const ZElement& o) const { return *this + (-o); }

ZElement ZElement::operator-() const {
    ZElement r(*this);
    for (auto& [w, c] : r.terms_) c = -c;
    return r;
}

ZElement ZElement::operator*(const Coefficient& c) const {
    ZElement r(n_);
    for (const auto& [w, x] : terms_) r.add_term(w, c * x);
    return r;
}

ZElement ZElement::operator*(const Rat& c) const {
    ZElement r(n_);
    for (const auto& [w, x] : terms_) r.add_term(w, x * c);
    return r;
}

bool ZElement::operator==(const ZElement& o) const {
    if (n_ != o.n_ || terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt)
        if (it->first != jt->first || !(it->second == jt->second)) return false;
    return true;
}

ZElement ZElement::free_mul(const ZElement& o) const {
    if (n_ != o.n_) throw RingMismatch();
    ZElement r(n_);
    for (const auto& [wa, ca] : terms_) {
        Weight mu = zword_weight(n_, wa);
        std::vector<long> neg(n_);
        for (int k = 0; k < n_; ++k) neg[k] = -mu.coords[k];
        for (const auto& [wb, cb] : o.terms_) {
            ZWord w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add_term(w, ca * cb.shift(neg));
        }
    }
    return r;
}

ZElement ZElement::times_coeff_on_right(const Coefficient& c) const {
    ZElement r(n_);
    for (const auto& [w, x] : terms_) {
        Weight mu = zword_weight(n_, w);
        std::vector<long> neg(n_);
        for (int k = 0; k < n_; ++k) neg[k] = -mu.coords[k];
        r.add_term(w, x * c.shift(neg));
    }
    return r;
}

int ZElement::degree() const {
    int d = 0;
    for (const auto& [w, c] : terms_) d = std::max<int>(d, (int)w.size());
    return d;
}

bool ZElement::is_weight_homogeneous(Weight* out) const {
    bool first = true;
    Weight mu(n_);
    for (const auto& [w, c] : terms_) {
        Weight wm = zword_weight(n_, w);
        if (first) {
            mu = wm;
            first = false;
        } else if (!(wm == mu)) {
            return false;
        }
    }
    if (out) *out = mu;
    return true;
}

std::map<Weight, ZElement> ZElement::weight_components() const {
    std::map<Weight, ZElement> comps;
    for (const auto& [w, c] : terms_) {
        Weight mu = zword_weight(n_, w);
        auto [it, fresh] = comps.try_emplace(mu, ZElement(n_));
        it->second.add_term(w, c);
    }
    return comps;
}

ZElement ZElement::widen(int new_n) const {
    ZElement r(new_n);
    for (const auto& [w, c] : terms_) r.add_term(w, c.widen(new_n));
    return r;
}

std::string ZElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.str() << ")";
        for (const GeneratorId& g : w) out << "*" << g.str();
    }
    return out.str();
}

ZElement substitute_letters(const ZElement& x, const std::function<ZElement(GeneratorId)>& image) {
    int n = x.n();
    ZElement out(n);
    for (const auto& [w, c] : x.terms()) {
        ZElement acc(n, c);
        for (const GeneratorId& g : w) acc = acc.free_mul(image(g));
        out = out + acc;
    }
    return out;
}

EnvElement lift(const ZElement& x) {
    int n = x.n();
    EnvElement e(n);
    for (const auto& [w, c] : x.terms()) {
        Word ew;
        ew.reserve(w.size());
        for (const GeneratorId& g : w) ew.push_back(Letter::E(g.i, g.j));
        if (!word_is_pbw(ew)) throw Error("lift expects PBW-sorted words: " + x.str());
        e.add_term(ew, c);
    }
    return e;
}

ZElement project_coset(const EnvElement& x) {
    EnvElement red = reduce_to_coset(x);
    ZElement z(x.n());
    for (const auto& [w, c] : red.terms()) {
        ZWord zw;
        zw.reserve(w.size());
        for (const Letter& l : w) zw.push_back({l.i, l.j});
        z.add_term(zw, c);
    }
    return z;
}

// --- hat/ring change of variables -------------------------------------------

ZElement t_ring(int n, int l) {
    if (l < 1 || l > n) throw BadIndex("t_ring index");
    // tring_l = t_l prod_{j<l} A_jl - sum_{k<l} t_k (theta_kl - 1)^{-1} prod_{j<k} A_jl
    ZElement r(n);
    Coefficient lead = Coefficient::one(n);
    for (int j = 1; j < l; ++j) lead *= Coefficient::named(n, Coefficient::Named::A, j, l);
    r.add_term({GeneratorId{l, l}}, lead);
    for (int k = 1; k < l; ++k) {
        Coefficient c = Coefficient::inv_linear(n, k, l, -1);
        for (int j = 1; j < k; ++j) c *= Coefficient::named(n, Coefficient::Named::A, j, l);
        r.add_term({GeneratorId{k, k}}, -c);
    }
    return r;
}

ZElement t_plain_in_ring(int n, int l) {
    if (l < 1 || l > n) throw BadIndex("t index");
    // t_l = tring_l prod_{j<l} A'_jl + sum_{k<l} tring_k theta_kl^{-1} prod_{j<l, j!=k} A'_jk
    ZElement r(n);
    Coefficient lead = Coefficient::one(n);
    for (int j = 1; j < l; ++j) lead *= Coefficient::named(n, Coefficient::Named::Ap, j, l);
    r.add_term({GeneratorId{l, l}}, lead);
    for (int k = 1; k < l; ++k) {
        Coefficient c = Coefficient::inv_linear(n, k, l, 0);
        for (int j = 1; j < l; ++j)
            if (j != k) c *= Coefficient::named(n, Coefficient::Named::Ap, j, k);
        r.add_term({GeneratorId{k, k}}, c);
    }
    return r;
}

ZElement zhat(int n, int i, int j) {
    if (i == j) return ZElement::gen(n, {i, i});
    // zhat_ij = z_ij prod_{k<i} A_ki; the product crosses z_ij to the left.
    Coefficient c = Coefficient::one(n);
    for (int k = 1; k < i; ++k) c *= Coefficient::named(n, Coefficient::Named::A, k, i);
    return ZElement::gen(n, {i, j}).times_coeff_on_right(c);
}

ZElement z_plain_in_hat(int n, int i, int j) {
    if (i == j) return ZElement::gen(n, {i, i});
    Coefficient c = Coefficient::one(n);
    for (int k = 1; k < i; ++k) c *= Coefficient::named(n, Coefficient::Named::Ap, k, i);
    return ZElement::gen(n, {i, j}).times_coeff_on_right(c);
}

ZElement change_basis(const ZElement& x, BasisDirection dir) {
    int n = x.n();
    if (dir == BasisDirection::from_hat_ring) {
        // letters of x mean zhat/tring; expand them in z/t
        return substitute_letters(x, [n](GeneratorId g) {
            return g.is_t() ? t_ring(n, g.i) : zhat(n, g.i, g.j);
        });
    }
    // letters of x mean z/t; rewrite over the hat/ring letters
    return substitute_letters(x, [n](GeneratorId g) {
        return g.is_t() ? t_plain_in_ring(n, g.i) : z_plain_in_hat(n, g.i, g.j);
    });
}

ZElement involution(const ZElement& x, Involution kind) {
    int n = x.n();
    ZElement out(n);
    if (kind == Involution::epsilon) {
        for (const auto& [w, c] : x.terms()) {
            ZWord rw(w.rbegin(), w.rend());
            for (auto& g : rw) std::swap(g.i, g.j);
            // epsilon fixes theta; the left coefficient of the reversed word
            // is the original one shifted by the original weight.
            Weight mu = zword_weight(n, w);
            out.add_term(rw, c.shift(mu.coords));
        }
        return out;
    }
    std::vector<Polynomial> images(n);
    for (int k = 1; k <= n; ++k)
        images[k - 1] = -Polynomial::variable(n, n + 1 - k) - Polynomial(n, Rat(n + 1));
    for (const auto& [w, c] : x.terms()) {
        ZWord iw;
        int sign = 1;
        for (const GeneratorId& g : w) {
            iw.push_back({n + 1 - g.j, n + 1 - g.i});
            if ((g.i + g.j + 1) % 2) sign = -sign;
        }
        out.add_term(iw, c.substitute_all(images) * Rat(sign));
    }
    return out;
}

std::vector<ZElement> central_elements(int n) {
    std::vector<ZElement> out;
    Polynomial h_sum(n, Rat((long)n * (n + 1) / 2));
    for (int i = 1; i <= n; ++i) h_sum += Polynomial::variable(n, i);
    out.push_back(ZElement(n, Coefficient(h_sum)));
    ZElement t_sum(n), weighted(n);
    for (int i = 1; i <= n; ++i) {
        t_sum.add_term({GeneratorId{i, i}}, Coefficient::one(n));
        Polynomial hi = Polynomial::variable(n, i) - Polynomial(n, Rat(i)); // h_i - 2i
        weighted.add_term({GeneratorId{i, i}}, Coefficient(hi));
    }
    out.push_back(t_sum);
    out.push_back(weighted);
    return out;
}

} // namespace reducta
