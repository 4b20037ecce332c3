#include "reducta/projector.hpp"

#include <algorithm>
#include <numeric>

namespace reducta {

ProjectorConfig ProjectorConfig::make(int n) {
    ProjectorConfig cfg;
    cfg.n = n;
    // Normal ordering induced by the reduced word s_1 (s_2 s_1) (s_3 s_2 s_1)...
    std::vector<int> word;
    for (int blk = 1; blk < n; ++blk)
        for (int s = blk; s >= 1; --s) word.push_back(s);
    for (size_t t = 0; t < word.size(); ++t) {
        // beta_t = s_{i_1} ... s_{i_{t-1}} (alpha_{i_t}), reflections applied right to left
        int a = word[t], b = word[t] + 1;
        for (size_t r = t; r-- > 0;) {
            int s = word[r];
            auto swap_idx = [s](int& x) {
                if (x == s) x = s + 1;
                else if (x == s + 1) x = s;
            };
            swap_idx(a);
            swap_idx(b);
        }
        cfg.root_order.push_back({std::min(a, b), std::max(a, b)});
    }
    cfg.rho.resize(cfg.root_order.size());
    for (size_t t = 0; t < cfg.root_order.size(); ++t)
        cfg.rho[t] = cfg.root_order[t].second - cfg.root_order[t].first;
    return cfg;
}

bool ProjectorConfig::is_normal_ordering() const {
    // Each root appears exactly once and any sum gamma = alpha + beta sits
    // between alpha and beta.
    size_t expect = (size_t)n * (n - 1) / 2;
    if (root_order.size() != expect) return false;
    auto pos = [&](int i, int j) -> int {
        for (size_t t = 0; t < root_order.size(); ++t)
            if (root_order[t] == std::make_pair(i, j)) return (int)t;
        return -1;
    };
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (pos(i, j) < 0) return false;
    for (int i = 1; i <= n; ++i)
        for (int k = i + 1; k <= n; ++k)
            for (int j = k + 1; j <= n; ++j) {
                int a = pos(i, k), g = pos(i, j), b = pos(k, j);
                if (!((a < g && g < b) || (b < g && g < a))) return false;
            }
    return true;
}

namespace {

int env_degree(const EnvElement& x) {
    int d = 0;
    for (const auto& [w, c] : x.terms()) d = std::max<int>(d, (int)w.size());
    return d;
}

// One factor P_gamma applied on the left of z, mod the left ideal I_+.
EnvElement apply_factor(const ProjectorConfig& cfg, int i, int j, const EnvElement& z, int cap) {
    const int n = cfg.n;
    StraightenFlags mod_iplus{.drop_plus_suffix = true};
    EnvElement raise = EnvElement::letter(n, Letter::e(i, j));
    EnvElement lower = EnvElement::letter(n, Letter::e(j, i));
    EnvElement out = z;
    EnvElement u = z;
    Coefficient coeff = Coefficient::one(n);
    Rat factorial(1);
    for (int k = 1; !u.is_zero(); ++k) {
        if (k > cap)
            throw TruncationCapExceeded("factor (" + std::to_string(i) + "," + std::to_string(j) +
                                        ") at k=" + std::to_string(k));
        u = multiply(raise, u, mod_iplus);
        if (u.is_zero()) break;
        factorial *= k;
        // h_gamma + rho(h_gamma) + k = theta_ij + k
        coeff *= Coefficient::inv_linear(n, i, j, k);
        EnvElement term = u;
        for (int m = 0; m < k; ++m) term = multiply(lower, term, mod_iplus);
        Rat scale = Rat((k % 2) ? -1 : 1) / factorial;
        out = out + term * (coeff * scale);
    }
    return out;
}

} // namespace

EnvElement apply_projector(const ProjectorConfig& cfg, const EnvElement& y) {
    int cap = cfg.k_cap > 0 ? cfg.k_cap : 2 * env_degree(y) + 2;
    EnvElement z = y;
    for (size_t t = cfg.root_order.size(); t-- > 0;)
        z = apply_factor(cfg, cfg.root_order[t].first, cfg.root_order[t].second, z, cap);
    return z;
}

ZElement Oracle::mult(const ZElement& x, const ZElement& y) const {
    EnvElement py = apply_projector(cfg_, lift(y));
    StraightenFlags coset{.drop_plus_suffix = true, .drop_minus_prefix = true};
    return project_coset(multiply(lift(x), py, coset));
}

ZElement Oracle::mult_gens(GeneratorId a, GeneratorId b) const {
    return eval_word({a, b});
}

ZElement Oracle::eval_word(const ZWord& w) const {
    if (w.empty()) return ZElement(cfg_.n, Coefficient::one(cfg_.n));
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = word_cache_.find(w);
        if (it != word_cache_.end()) return it->second;
    }
    ZElement acc = ZElement::gen(cfg_.n, w[0]);
    for (size_t p = 1; p < w.size(); ++p) acc = mult(acc, ZElement::gen(cfg_.n, w[p]));
    {
        std::lock_guard<std::mutex> lock(mu_);
        word_cache_.emplace(w, acc);
    }
    return acc;
}

ZElement Oracle::eval_free(const ZElement& x) const {
    ZElement out(cfg_.n);
    for (const auto& [w, c] : x.terms()) out = out + eval_word(w) * c;
    return out;
}

} // namespace reducta
