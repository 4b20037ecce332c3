#include "reducta/enveloping.hpp"

#include <sstream>

namespace reducta {

Weight word_weight(int n, const Word& w) {
    Weight mu(n);
    for (const Letter& l : w) {
        mu.coords[l.i - 1] += 1;
        mu.coords[l.j - 1] -= 1;
    }
    return mu;
}

bool word_is_pbw(const Word& w) {
    for (size_t p = 0; p + 1 < w.size(); ++p)
        if (w[p + 1] < w[p]) return false;
    return true;
}

EnvElement EnvElement::letter(int n, Letter l, const Coefficient& c) {
    EnvElement x(n);
    x.add_term({l}, c);
    return x;
}

EnvElement EnvElement::letter(int n, Letter l) { return letter(n, l, Coefficient::one(n)); }

void EnvElement::add_term(const Word& w, const Coefficient& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

EnvElement EnvElement::operator+(const EnvElement& o) const {
    EnvElement r(*this);
    for (const auto& [w, c] : o.terms_) r.add_term(w, c);
    return r;
}

EnvElement EnvElement::operator-(const EnvElement& o) const { return *this + (-o); }

EnvElement EnvElement::operator-() const {
    EnvElement r(*this);
    for (auto& [w, c] : r.terms_) c = -c;
    return r;
}

EnvElement EnvElement::operator*(const Coefficient& c) const {
    if (c.is_zero()) return EnvElement(n_);
    EnvElement r(n_);
    for (const auto& [w, x] : terms_) r.add_term(w, c * x);
    return r;
}

EnvElement EnvElement::times_coeff_on_right(const Coefficient& c) const {
    EnvElement r(n_);
    for (const auto& [w, x] : terms_) {
        Weight mu = word_weight(n_, w);
        std::vector<long> neg(n_);
        for (int k = 0; k < n_; ++k) neg[k] = -mu.coords[k];
        r.add_term(w, x * c.shift(neg));
    }
    return r;
}

bool EnvElement::operator==(const EnvElement& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (!(it->first == jt->first)) return false;
        if (!(it->second == jt->second)) return false;
    }
    return true;
}

std::string EnvElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.str() << ")";
        for (const Letter& l : w) out << "*" << l.str();
    }
    return out.str();
}

namespace {

// e_ab as a bracket output: offdiagonal letters stay letters, e_aa becomes
// the Cartan polynomial theta_a + a.
void emit_e(int n, int a, int b, const Rat& sign, BracketResult& out) {
    if (sign == 0) return;
    if (a == b) {
        out.cartan += (Polynomial::variable(n, a) + Polynomial(n, Rat(a))) * sign;
    } else {
        out.letters.push_back({sign, Letter::e(a, b)});
    }
}

void emit_E(int a, int b, const Rat& sign, BracketResult& out) {
    if (sign == 0) return;
    out.letters.push_back({sign, Letter::E(a, b)});
}

} // namespace

BracketResult bracket_letters(int n, const Letter& a, const Letter& b) {
    BracketResult out;
    out.cartan = Polynomial(n);
    bool a_small = a.species != Letter::EBIG;
    bool b_small = b.species != Letter::EBIG;
    Rat one(1), minus(-1);
    if (a_small && b_small) {
        // [e_ij, e_kl] = d_jk e_il - d_il e_kj
        if (a.j == b.i) emit_e(n, a.i, b.j, one, out);
        if (a.i == b.j) emit_e(n, b.i, a.j, minus, out);
    } else if (a_small && !b_small) {
        // [e_ij, E_kl] = d_jk E_il - d_il E_kj
        if (a.j == b.i) emit_E(a.i, b.j, one, out);
        if (a.i == b.j) emit_E(b.i, a.j, minus, out);
    } else if (!a_small && b_small) {
        // [E_ij, e_kl] = -[e_kl, E_ij]
        if (b.j == a.i) emit_E(b.i, a.j, minus, out);
        if (b.i == a.j) emit_E(a.i, b.j, one, out);
    } else {
        // [E_ij, E_kl] = d_jk e_il - d_il e_kj
        if (a.j == b.i) emit_e(n, a.i, b.j, one, out);
        if (a.i == b.j) emit_e(n, b.i, a.j, minus, out);
    }
    return out;
}

EnvElement bracket(int n, const Letter& a, const Letter& b) {
    BracketResult br = bracket_letters(n, a, b);
    EnvElement x(n);
    for (const auto& [c, l] : br.letters) x.add_term({l}, Coefficient(n, c));
    if (!br.cartan.is_zero()) x.add_term({}, Coefficient(br.cartan));
    return x;
}

EnvElement straighten(int n, std::vector<std::pair<Word, Coefficient>> pending,
                      const StraightenFlags& flags) {
    EnvElement out(n);
    while (!pending.empty()) {
        auto [w, coeff] = std::move(pending.back());
        pending.pop_back();
        if (coeff.is_zero()) continue;
        if (flags.drop_plus_suffix && !w.empty() && w.back().species == Letter::EPLUS) continue;
        if (flags.drop_minus_prefix && !w.empty() && w.front().species == Letter::EMINUS) continue;
        size_t p = 0;
        bool ordered = true;
        for (; p + 1 < w.size(); ++p)
            if (w[p + 1] < w[p]) {
                ordered = false;
                break;
            }
        if (ordered) {
            out.add_term(w, coeff);
            continue;
        }
        // x y = y x + [x, y] at the leftmost inversion.
        Word swapped = w;
        std::swap(swapped[p], swapped[p + 1]);
        BracketResult br = bracket_letters(n, w[p], w[p + 1]);
        pending.push_back({std::move(swapped), coeff});
        for (const auto& [c, l] : br.letters) {
            Word shorter;
            shorter.reserve(w.size() - 1);
            shorter.insert(shorter.end(), w.begin(), w.begin() + p);
            shorter.push_back(l);
            shorter.insert(shorter.end(), w.begin() + p + 2, w.end());
            pending.push_back({std::move(shorter), coeff * c});
        }
        if (!br.cartan.is_zero()) {
            // The Cartan polynomial sits at position p; commute it to the
            // front across the prefix.
            Word shorter;
            shorter.reserve(w.size() - 2);
            shorter.insert(shorter.end(), w.begin(), w.begin() + p);
            shorter.insert(shorter.end(), w.begin() + p + 2, w.end());
            Coefficient cc(br.cartan);
            if (p > 0) {
                Weight mu = word_weight(n, Word(w.begin(), w.begin() + p));
                std::vector<long> neg(n);
                for (int k = 0; k < n; ++k) neg[k] = -mu.coords[k];
                cc = cc.shift(neg);
            }
            pending.push_back({std::move(shorter), coeff * cc});
        }
    }
    return out;
}

EnvElement multiply(const EnvElement& a, const EnvElement& b, const StraightenFlags& flags) {
    if (a.n() != b.n()) throw RingMismatch();
    int n = a.n();
    std::vector<std::pair<Word, Coefficient>> pending;
    for (const auto& [wa, ca] : a.terms()) {
        Weight mu = word_weight(n, wa);
        std::vector<long> neg(n);
        for (int k = 0; k < n; ++k) neg[k] = -mu.coords[k];
        for (const auto& [wb, cb] : b.terms()) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            pending.push_back({std::move(w), ca * cb.shift(neg)});
        }
    }
    return straighten(n, std::move(pending), flags);
}

EnvElement reduce_to_coset(const EnvElement& x) {
    EnvElement r(x.n());
    for (const auto& [w, c] : x.terms()) {
        bool pure = true;
        for (const Letter& l : w)
            if (l.species != Letter::EBIG) {
                pure = false;
                break;
            }
        if (pure) r.add_term(w, c);
    }
    return r;
}

EnvElement sigma_auto(int i, const EnvElement& x) {
    int n = x.n();
    if (i < 1 || i >= n) throw BadIndex("sigma_auto index");
    std::vector<int> sigma(n + 1);
    for (int k = 1; k <= n; ++k) sigma[k] = k;
    std::swap(sigma[i], sigma[i + 1]);
    std::vector<std::pair<Word, Coefficient>> pending;
    for (const auto& [w, c] : x.terms()) {
        Word img;
        img.reserve(w.size());
        int sign = 1;
        for (const Letter& l : w) {
            // sign rule (-1)^{delta_ik + delta_il} on e_kl and E_kl alike
            if (l.i == i) sign = -sign;
            if (l.j == i) sign = -sign;
            int ni = sigma[l.i], nj = sigma[l.j];
            img.push_back(l.species == Letter::EBIG ? Letter::E(ni, nj) : Letter::e(ni, nj));
        }
        pending.push_back({std::move(img), c.weyl_act(sigma, /*shifted=*/false) * Rat(sign)});
    }
    return straighten(n, std::move(pending));
}

} // namespace reducta
