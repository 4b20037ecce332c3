#include "reducta/coefficient.hpp"

#include <algorithm>
#include <sstream>

namespace reducta {

namespace {

// Single-word modular probe: evaluates p at the base point with theta_i
// forced onto the hyperplane of the form, mod a large prime. A zero result is
// a necessary condition for divisibility; false positives only cost a failed
// exact division.
constexpr uint64_t kProbeMod = 2305843009213693951ull; // 2^61 - 1

uint64_t mulmod(uint64_t a, uint64_t b) {
    return (uint64_t)((__uint128_t)a * b % kProbeMod);
}

uint64_t rat_mod(const Rat& c) {
    uint64_t num = mpz_fdiv_ui(c.get_num().get_mpz_t(), kProbeMod);
    if (c.get_den() == 1) return num;
    uint64_t den = mpz_fdiv_ui(c.get_den().get_mpz_t(), kProbeMod);
    // modular inverse by Fermat; den is never divisible by the prime for the
    // small denominators arising here
    uint64_t inv = 1, base = den, e = kProbeMod - 2;
    while (e) {
        if (e & 1) inv = mulmod(inv, base);
        base = mulmod(base, base);
        e >>= 1;
    }
    return mulmod(num, inv);
}

uint64_t poly_eval_mod(const Polynomial& p, const uint64_t* pt) {
    // per-variable power tables up to the occurring degrees
    uint64_t powers[kMaxVars][256];
    int have[kMaxVars];
    for (int k = 0; k < kMaxVars; ++k) {
        powers[k][0] = 1;
        have[k] = 0;
    }
    uint64_t acc = 0;
    for (const auto& [m, c] : p.terms()) {
        uint64_t t = rat_mod(c);
        for (int k = 0; k < kMaxVars; ++k) {
            int e = m.e[k];
            if (!e) continue;
            while (have[k] < e) {
                powers[k][have[k] + 1] = mulmod(powers[k][have[k]], pt[k]);
                ++have[k];
            }
            t = mulmod(t, powers[k][e]);
        }
        acc = (acc + t) % kProbeMod;
    }
    return acc;
}

bool vanishes_on_form(const Polynomial& p, const LinearForm& f) {
    if (p.is_zero()) return true;
    if (p.degree_in(f.i) == 0 || p.degree_in(f.j) == 0) return false;
    uint64_t pt[kMaxVars];
    for (int k = 0; k < kMaxVars; ++k) pt[k] = 1000003ull + 7919ull * (k + 1);
    long c = f.c;
    pt[f.i - 1] = c >= 0 ? (pt[f.j - 1] - (uint64_t)c + kProbeMod) % kProbeMod
                         : (pt[f.j - 1] + (uint64_t)(-c)) % kProbeMod;
    return poly_eval_mod(p, pt) == 0;
}

} // namespace

Polynomial LinearForm::to_poly(int nvars) const {
    Polynomial p = Polynomial::variable(nvars, i) - Polynomial::variable(nvars, j);
    if (c != 0) p += Polynomial(nvars, Rat(c));
    return p;
}

std::string LinearForm::str() const {
    std::ostringstream out;
    out << "th(" << i << "," << j << ")";
    if (c > 0) out << "+" << c;
    if (c < 0) out << "-" << (-c);
    return out.str();
}

std::pair<LinearForm, int> make_linear_form(int i, int j, long c) {
    if (i == j) throw BadIndex("linear form needs i != j");
    if (i < j) return {LinearForm{i, j, c}, 1};
    return {LinearForm{j, i, -c}, -1};
}

LinearFactorization extract_linear_factors(const Polynomial& p, long max_abs_c) {
    LinearFactorization out{{}, p};
    if (p.is_zero() || p.is_constant()) return out;
    int n = p.nvars();
    std::vector<int> present;
    for (int v = 1; v <= n; ++v)
        if (out.residual.degree_in(v) > 0) present.push_back(v);

    bool changed = true;
    while (changed && !out.residual.is_constant()) {
        changed = false;
        for (size_t a = 0; a < present.size() && !out.residual.is_constant(); ++a)
            for (size_t b = 0; b < present.size() && !out.residual.is_constant(); ++b) {
                if (a == b) continue;
                int i = present[a], j = present[b];
                if (i > j) continue;
                if (out.residual.degree_in(i) == 0 || out.residual.degree_in(j) == 0) continue;
                for (long c = -max_abs_c; c <= max_abs_c; ++c) {
                    LinearForm f{i, j, c};
                    while (vanishes_on_form(out.residual, f)) {
                        auto q = out.residual.divide_by_linear(f.i, f.j, f.c);
                        if (!q) break;
                        out.residual = std::move(*q);
                        auto it = std::find_if(out.factors.begin(), out.factors.end(),
                                               [&](const auto& kv) { return kv.first == f; });
                        if (it != out.factors.end())
                            it->second += 1;
                        else
                            out.factors.push_back({f, 1});
                        changed = true;
                        if (out.residual.is_constant()) break;
                    }
                    if (out.residual.is_constant()) break;
                }
            }
    }
    std::sort(out.factors.begin(), out.factors.end());
    return out;
}

Coefficient Coefficient::theta(int nvars, int i) {
    return Coefficient(Polynomial::variable(nvars, i));
}

Coefficient Coefficient::theta_diff(int nvars, int i, int j) {
    return Coefficient(Polynomial::variable(nvars, i) - Polynomial::variable(nvars, j));
}

Coefficient Coefficient::from_linear_form(int nvars, const LinearForm& f) {
    return Coefficient(f.to_poly(nvars));
}

Coefficient Coefficient::inv_linear(int nvars, int i, int j, long c) {
    auto [f, sign] = make_linear_form(i, j, c);
    Coefficient r(nvars, Rat(sign));
    r.den_lin_.push_back({f, 1});
    return r;
}

Coefficient Coefficient::named(int nvars, Named kind, int i, int j) {
    if (i == j || i < 1 || j < 1 || i > nvars || j > nvars)
        throw BadIndex("named coefficient needs distinct indices within the ring");
    // A = th/(th-1), A' = (th-1)/th, B = (th-1)/(th-2), B' = (th-2)/(th-1),
    // C' = (th-3)/(th-2), all in th = theta_ij.
    long num_c = 0, den_c = 0;
    switch (kind) {
        case Named::A: num_c = 0; den_c = -1; break;
        case Named::Ap: num_c = -1; den_c = 0; break;
        case Named::B: num_c = -1; den_c = -2; break;
        case Named::Bp: num_c = -2; den_c = -1; break;
        case Named::Cp: num_c = -3; den_c = -2; break;
    }
    Polynomial num = Polynomial::variable(nvars, i) - Polynomial::variable(nvars, j) +
                     Polynomial(nvars, Rat(num_c));
    Coefficient r(num);
    auto [f, sign] = make_linear_form(i, j, den_c);
    if (sign < 0) r.num_ = -r.num_;
    r.den_lin_.push_back({f, 1});
    r.reduce();
    return r;
}

Coefficient Coefficient::d_coeff(int nvars, int i, int j, int k, int l) {
    if (i == k || j == l) throw BadIndex("d_coeff needs i != k and j != l");
    return inv_linear(nvars, i, k, 0) - inv_linear(nvars, j, l, 0);
}

Rat Coefficient::rational_value() const {
    if (!is_rational()) throw Error("coefficient is not rational: " + str());
    return num_.constant_value();
}

bool Coefficient::is_one() const {
    if (den_lin_.empty() && den_gen_.is_one()) return num_.is_one();
    return *this == one(nvars_);
}

Polynomial Coefficient::den_poly() const {
    Polynomial d = den_gen_;
    for (const auto& [f, m] : den_lin_) {
        Polynomial fp = f.to_poly(nvars_);
        for (int k = 0; k < m; ++k) d *= fp;
    }
    return d;
}

void Coefficient::push_den_form(const LinearForm& f, int mult) {
    auto it = std::lower_bound(den_lin_.begin(), den_lin_.end(), std::make_pair(f, 0),
                               [](const auto& x, const auto& y) { return x.first < y.first; });
    if (it != den_lin_.end() && it->first == f)
        it->second += mult;
    else
        den_lin_.insert(it, {f, mult});
}

void Coefficient::reduce() {
    if (num_.is_zero()) {
        den_lin_.clear();
        den_gen_ = Polynomial(nvars_, Rat(1));
        return;
    }
    if (!den_gen_.is_one() && !den_gen_.is_constant()) {
        auto fact = extract_linear_factors(den_gen_);
        if (!fact.factors.empty()) {
            for (const auto& [f, m] : fact.factors) push_den_form(f, m);
            den_gen_ = fact.residual;
        }
    }
    if (den_gen_.is_constant() && !den_gen_.is_one()) {
        num_ = num_ * (Rat(1) / den_gen_.constant_value());
        den_gen_ = Polynomial(nvars_, Rat(1));
    }
    // Cancel linear denominator factors that divide the numerator exactly.
    for (auto& [f, m] : den_lin_) {
        while (m > 0 && vanishes_on_form(num_, f)) {
            auto q = num_.divide_by_linear(f.i, f.j, f.c);
            if (!q) break;
            num_ = std::move(*q);
            --m;
        }
    }
    den_lin_.erase(std::remove_if(den_lin_.begin(), den_lin_.end(),
                                  [](const auto& kv) { return kv.second == 0; }),
                   den_lin_.end());
    if (!den_gen_.is_one()) {
        if (auto q = num_.divide_exact(den_gen_)) {
            num_ = std::move(*q);
            den_gen_ = Polynomial(nvars_, Rat(1));
        } else {
            // normalize the general factor to monic
            Rat lc = den_gen_.leading_term().second;
            if (lc != 1) {
                den_gen_ = den_gen_ * (Rat(1) / lc);
                num_ = num_ * (Rat(1) / lc);
            }
        }
    }
}

Coefficient Coefficient::operator-() const {
    Coefficient r(*this);
    r.num_ = -r.num_;
    return r;
}

Coefficient Coefficient::operator+(const Coefficient& o) const {
    require_same_ring(o);
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    Coefficient r(nvars_);
    // Common denominator = lcm of the linear parts (multiset max).
    size_t i = 0, j = 0;
    std::vector<std::pair<LinearForm, int>> lcm;
    Polynomial extra_a(nvars_, Rat(1)), extra_b(nvars_, Rat(1));
    while (i < den_lin_.size() || j < o.den_lin_.size()) {
        if (j >= o.den_lin_.size() || (i < den_lin_.size() && den_lin_[i].first < o.den_lin_[j].first)) {
            lcm.push_back(den_lin_[i]);
            for (int k = 0; k < den_lin_[i].second; ++k) extra_b *= den_lin_[i].first.to_poly(nvars_);
            ++i;
        } else if (i >= den_lin_.size() || o.den_lin_[j].first < den_lin_[i].first) {
            lcm.push_back(o.den_lin_[j]);
            for (int k = 0; k < o.den_lin_[j].second; ++k) extra_a *= o.den_lin_[j].first.to_poly(nvars_);
            ++j;
        } else {
            int ma = den_lin_[i].second, mb = o.den_lin_[j].second;
            lcm.push_back({den_lin_[i].first, std::max(ma, mb)});
            Polynomial fp = den_lin_[i].first.to_poly(nvars_);
            for (int k = ma; k < std::max(ma, mb); ++k) extra_a *= fp;
            for (int k = mb; k < std::max(ma, mb); ++k) extra_b *= fp;
            ++i, ++j;
        }
    }
    Polynomial na = num_ * extra_a, nb = o.num_ * extra_b;
    if (den_gen_ == o.den_gen_) {
        r.num_ = na + nb;
        r.den_gen_ = den_gen_;
    } else {
        r.num_ = na * o.den_gen_ + nb * den_gen_;
        r.den_gen_ = den_gen_ * o.den_gen_;
    }
    r.den_lin_ = std::move(lcm);
    r.reduce();
    return r;
}

Coefficient Coefficient::operator-(const Coefficient& o) const { return *this + (-o); }

Coefficient Coefficient::operator*(const Coefficient& o) const {
    require_same_ring(o);
    if (is_zero() || o.is_zero()) return zero(nvars_);
    Coefficient r(nvars_);
    r.num_ = num_ * o.num_;
    r.den_lin_ = den_lin_;
    for (const auto& [f, m] : o.den_lin_) r.push_den_form(f, m);
    r.den_gen_ = den_gen_.is_one() ? o.den_gen_ : (o.den_gen_.is_one() ? den_gen_ : den_gen_ * o.den_gen_);
    r.reduce();
    return r;
}

Coefficient Coefficient::operator*(const Rat& c) const {
    if (c == 0) return zero(nvars_);
    Coefficient r(*this);
    r.num_ = r.num_ * c;
    return r;
}

Coefficient Coefficient::operator/(const Coefficient& o) const {
    require_same_ring(o);
    if (o.is_zero()) throw DivisionByZero();
    if (is_zero()) return zero(nvars_);
    Coefficient r(nvars_);
    r.num_ = num_ * o.den_gen_;
    for (const auto& [f, m] : o.den_lin_) {
        Polynomial fp = f.to_poly(nvars_);
        for (int k = 0; k < m; ++k) r.num_ *= fp;
    }
    r.den_lin_ = den_lin_;
    auto fact = extract_linear_factors(o.num_);
    for (const auto& [f, m] : fact.factors) r.push_den_form(f, m);
    if (fact.residual.is_constant()) {
        r.num_ = r.num_ * (Rat(1) / fact.residual.constant_value());
        r.den_gen_ = den_gen_;
    } else {
        r.den_gen_ = den_gen_.is_one() ? fact.residual : den_gen_ * fact.residual;
    }
    r.reduce();
    return r;
}

bool Coefficient::operator==(const Coefficient& o) const {
    require_same_ring(o);
    if (num_ == o.num_ && den_lin_ == o.den_lin_ && den_gen_ == o.den_gen_) return true;
    if (num_.is_zero() || o.num_.is_zero()) return num_.is_zero() && o.num_.is_zero();
    // Cheap modular rejection before the exact cross multiplication.
    uint64_t pt[kMaxVars];
    for (int k = 0; k < kMaxVars; ++k) pt[k] = 1000003ull + 7919ull * (k + 1);
    auto den_mod = [&](const Coefficient& x) {
        uint64_t d = poly_eval_mod(x.den_gen_, pt);
        for (const auto& [f, m] : x.den_lin_) {
            uint64_t v = (pt[f.i - 1] + kProbeMod - pt[f.j - 1] +
                          (uint64_t)((f.c % (long)kProbeMod + (long)kProbeMod)) ) % kProbeMod;
            for (int k = 0; k < m; ++k) d = mulmod(d, v);
        }
        return d;
    };
    uint64_t da = den_mod(*this), db = den_mod(o);
    if (da != 0 && db != 0 &&
        mulmod(poly_eval_mod(num_, pt), db) != mulmod(poly_eval_mod(o.num_, pt), da))
        return false;
    return num_ * o.den_poly() == o.num_ * den_poly();
}

Coefficient Coefficient::shift(const std::vector<long>& mu) const {
    if ((int)mu.size() < nvars_) throw BadIndex("shift vector too short");
    bool all_zero = true;
    for (int k = 0; k < nvars_; ++k) all_zero &= (mu[k] == 0);
    if (all_zero) return *this;
    Coefficient r(nvars_);
    r.num_ = num_.shift(mu);
    r.den_gen_ = den_gen_.shift(mu);
    for (const auto& [f, m] : den_lin_) {
        LinearForm g{f.i, f.j, f.c + mu[f.i - 1] - mu[f.j - 1]};
        r.push_den_form(g, m);
    }
    r.reduce();
    return r;
}

Coefficient Coefficient::weyl_act(const std::vector<int>& sigma, bool shifted) const {
    if ((int)sigma.size() < nvars_ + 1) throw BadIndex("permutation table too short");
    std::vector<int> perm0(nvars_);
    std::vector<long> offset(nvars_, 0);
    for (int k = 1; k <= nvars_; ++k) {
        perm0[k - 1] = sigma[k] - 1;
        if (!shifted) offset[k - 1] = sigma[k] - k;
    }
    Coefficient r(nvars_);
    r.num_ = num_.substitute_vars(perm0, offset);
    r.den_gen_ = den_gen_.substitute_vars(perm0, offset);
    for (const auto& [f, m] : den_lin_) {
        long c = f.c;
        if (!shifted) c += (sigma[f.i] - f.i) - (sigma[f.j] - f.j);
        auto [g, sign] = make_linear_form(sigma[f.i], sigma[f.j], c);
        if (sign < 0 && (m % 2)) r.num_ = -r.num_;
        r.push_den_form(g, m);
    }
    r.reduce();
    return r;
}

Coefficient Coefficient::substitute_all(const std::vector<Polynomial>& images) const {
    Coefficient r(nvars_);
    r.num_ = num_.substitute_all(images);
    r.den_gen_ = den_gen_.substitute_all(images);
    for (const auto& [f, m] : den_lin_) {
        Polynomial fp = f.to_poly(nvars_).substitute_all(images);
        auto fact = extract_linear_factors(fp);
        if (!fact.residual.is_constant())
            throw Error("substitution does not preserve linear denominators");
        Rat scale = fact.residual.constant_value();
        for (int k = 0; k < m; ++k) r.num_ = r.num_ * (Rat(1) / scale);
        for (const auto& [g, mg] : fact.factors) r.push_den_form(g, mg * m);
    }
    r.reduce();
    return r;
}

Rat Coefficient::evaluate(const std::vector<Rat>& point) const {
    Rat den(1);
    for (const auto& [f, m] : den_lin_) {
        Rat v = point[f.i - 1] - point[f.j - 1] + Rat(f.c);
        if (v == 0) throw PoleHit(f.str());
        for (int k = 0; k < m; ++k) den *= v;
    }
    Rat dg = den_gen_.evaluate(point);
    if (dg == 0) throw PoleHit(den_gen_.str());
    return num_.evaluate(point) / (den * dg);
}

Coefficient Coefficient::widen(int new_nvars) const {
    Coefficient r(new_nvars);
    r.num_ = num_.widen(new_nvars);
    r.den_gen_ = den_gen_.widen(new_nvars);
    r.den_lin_ = den_lin_;
    return r;
}

bool Coefficient::denominator_within(long max_abs_c) const {
    if (!den_gen_.is_one()) return false;
    for (const auto& [f, m] : den_lin_)
        if (f.c > max_abs_c || f.c < -max_abs_c) return false;
    return true;
}

bool Coefficient::denominator_shifts_at_least(long min_c) const {
    if (!den_gen_.is_one()) return false;
    for (const auto& [f, m] : den_lin_)
        if (f.c < min_c) return false;
    return true;
}

std::string Coefficient::str() const {
    std::ostringstream out;
    bool den_trivial = den_lin_.empty() && den_gen_.is_one();
    if (den_trivial) return num_.str();
    out << "(" << num_.str() << ")/(";
    bool first = true;
    for (const auto& [f, m] : den_lin_) {
        if (!first) out << "*";
        first = false;
        out << "(" << f.str() << ")";
        if (m > 1) out << "^" << m;
    }
    if (!den_gen_.is_one()) {
        if (!first) out << "*";
        out << "(" << den_gen_.str() << ")";
    }
    out << ")";
    return out.str();
}

} // namespace reducta
