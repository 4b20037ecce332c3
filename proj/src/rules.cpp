#include "reducta/rules.hpp"

#include <algorithm>
#include <cstdlib>

namespace reducta {

void StarExpr::add_quad(const GenPair& p, const Coefficient& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = quad.try_emplace(p, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) quad.erase(it);
    }
}

ZElement GeneratorBasis::expand(GeneratorId g) const {
    if (!hat) return ZElement::gen(n, g);
    return g.is_t() ? t_ring(n, g.i) : zhat(n, g.i, g.j);
}

std::vector<GeneratorId> GeneratorBasis::sorted_generators() const {
    auto gens = all_generators(n, order);
    if (reversed) std::reverse(gens.begin(), gens.end());
    return gens;
}

const OrderingRule* RuleSet::find(const GeneratorId& a, const GeneratorId& b) const {
    auto it = rules_.find(GenPair{a, b});
    return it == rules_.end() ? nullptr : &it->second;
}

const RuleSet::ShiftedRhs& RuleSet::shifted_rhs(const OrderingRule& rule,
                                                const std::vector<long>& delta) const {
    auto key = std::make_pair(rule.lhs, delta);
    std::lock_guard<std::mutex> lock(shift_cache_->mu);
    auto it = shift_cache_->map.find(key);
    if (it != shift_cache_->map.end()) return *it->second;
    auto out = std::make_unique<ShiftedRhs>();
    for (const auto& [p, c] : rule.rhs.quad) out->quad.push_back({p, c.shift(delta)});
    out->constant = rule.rhs.constant.shift(delta);
    return *shift_cache_->map.emplace(std::move(key), std::move(out)).first->second;
}

namespace {

// Per-weight workspace: the sorted pairs of that weight and the tilde words
// spanned by their PBW images.
struct WeightBlock {
    Weight weight;
    std::vector<GenPair> pairs;          // K <= L in the basis order
    std::vector<ZElement> pair_images;   // \tilde{g_K g_L} in tilde coordinates
    std::vector<ZWord> words;            // tilde words occurring (nonempty)
    bool has_constant = false;           // weight 0 blocks carry a constant column
};

std::map<ZWord, int, ZWordLess> index_words(const std::vector<ZElement>& elems, bool* constant_seen) {
    std::map<ZWord, int, ZWordLess> idx;
    for (const auto& e : elems)
        for (const auto& [w, c] : e.terms()) {
            if (w.empty()) {
                *constant_seen = true;
                continue;
            }
            if (w.size() == 1) throw Error("unexpected linear term in a quadratic image");
            idx.try_emplace(w, 0);
        }
    int k = 0;
    for (auto& [w, i] : idx) i = k++;
    return idx;
}

// Expresses v over {pair_images} + {1}; throws if v leaves the span.
std::pair<std::vector<Coefficient>, Coefficient> coords_in_pair_basis(const WeightBlock& blk,
                                                                      const ZElement& v, int n) {
    bool constant_seen = blk.has_constant;
    std::vector<ZElement> all = blk.pair_images;
    all.push_back(v);
    std::map<ZWord, int, ZWordLess> idx = index_words(all, &constant_seen);
    int rows = (int)idx.size() + (constant_seen ? 1 : 0);
    int cols = (int)blk.pairs.size() + (constant_seen ? 1 : 0);
    CoeffMatrix a(rows, cols, n);
    std::vector<Coefficient> b(rows, Coefficient::zero(n));
    auto row_of = [&](const ZWord& w) -> int {
        if (w.empty()) return (int)idx.size();
        return idx.at(w);
    };
    for (size_t p = 0; p < blk.pair_images.size(); ++p)
        for (const auto& [w, c] : blk.pair_images[p].terms()) a.at(row_of(w), (int)p) = c;
    if (constant_seen) a.at((int)idx.size(), cols - 1) = Coefficient::one(n);
    for (const auto& [w, c] : v.terms()) b[row_of(w)] = c;
    auto sol = solve_consistent(a, b);
    if (!sol) throw SingularBlock("quadratic image outside the PBW pair span");
    Coefficient constant = constant_seen ? sol->back() : Coefficient::zero(n);
    sol->resize(blk.pairs.size(), Coefficient::zero(n));
    return {*sol, constant};
}

} // namespace

RuleSet derive_ordering_rules(const Oracle& oracle, const GeneratorBasis& basis) {
    const int n = basis.n;
    auto gens = basis.sorted_generators();

    // Oracle star products for every pair, plus the PBW pair images.
    std::map<GenPair, ZElement> star;
    for (const auto& a : gens)
        for (const auto& b : gens) {
            ZElement prod = oracle.eval_free(basis.expand(a).free_mul(basis.expand(b)));
            star.emplace(GenPair{a, b}, std::move(prod));
        }

    // Group the ordered pairs by weight.
    std::map<Weight, WeightBlock> blocks;
    for (size_t x = 0; x < gens.size(); ++x)
        for (size_t y = 0; y < gens.size(); ++y) {
            if (!basis.leq(gens[x], gens[y])) continue;
            GenPair p{gens[x], gens[y]};
            Weight w = gens[x].weight(n) + gens[y].weight(n);
            auto [it, fresh] = blocks.try_emplace(w, WeightBlock{});
            it->second.weight = w;
            it->second.pairs.push_back(p);
            EnvElement img = multiply(lift(basis.expand(p.first)), lift(basis.expand(p.second)),
                                      {.drop_plus_suffix = true, .drop_minus_prefix = true});
            it->second.pair_images.push_back(project_coset(img));
            if (w.is_zero()) it->second.has_constant = true;
        }

    // Per block: S(p) = sum_w M[p][w] W(w) + D[p]; invert M to express the
    // tilde pair monomials in ordered star products.
    std::map<GenPair, StarExpr> tilde_expr; // W(pair) as a star expression
    for (auto& [wt, blk] : blocks) {
        int q = (int)blk.pairs.size();
        CoeffMatrix m(q, q, n);
        std::vector<Coefficient> dvec(q, Coefficient::zero(n));
        for (int r = 0; r < q; ++r) {
            auto [coords, constant] = coords_in_pair_basis(blk, star.at(blk.pairs[r]), n);
            for (int c = 0; c < q; ++c) m.at(r, c) = coords[c];
            dvec[r] = constant;
        }
        // S = M W + D, hence W = M^{-1} S - M^{-1} D.
        CoeffMatrix rhs(q, q + 1, n);
        for (int r = 0; r < q; ++r) {
            rhs.at(r, r) = Coefficient::one(n);
            rhs.at(r, q) = dvec[r];
        }
        CoeffMatrix inv;
        try {
            inv = solve_field(m, rhs); // [M^{-1} | M^{-1} D]
        } catch (const Singular&) {
            throw SingularBlock("transition matrix M is singular at a weight block");
        }
        for (int w = 0; w < q; ++w) {
            StarExpr e;
            e.constant = -inv.at(w, q);
            for (int p = 0; p < q; ++p) e.add_quad(blk.pairs[p], inv.at(w, p));
            tilde_expr.emplace(blk.pairs[w], std::move(e));
        }
    }

    // Rules for the unordered pairs.
    std::map<GenPair, OrderingRule> rules;
    for (const auto& a : gens)
        for (const auto& b : gens) {
            if (basis.leq(a, b)) continue; // ordered or equal
            GenPair lhs{a, b};
            const WeightBlock& blk = blocks.at(a.weight(n) + b.weight(n));
            auto [coords, constant] = coords_in_pair_basis(blk, star.at(lhs), n);
            OrderingRule rule;
            rule.lhs = lhs;
            rule.rhs.constant = constant;
            for (size_t w = 0; w < blk.pairs.size(); ++w) {
                if (coords[w].is_zero()) continue;
                const StarExpr& e = tilde_expr.at(blk.pairs[w]);
                rule.rhs.constant += coords[w] * e.constant;
                for (const auto& [p, c] : e.quad) rule.rhs.add_quad(p, coords[w] * c);
            }
            rules.emplace(lhs, std::move(rule));
        }
    return RuleSet(basis, std::move(rules), std::move(tilde_expr));
}

ZElement tilde_to_star(const ZElement& tilde, const Oracle& oracle, const RuleSet& rules) {
    const int n = tilde.n();
    ZElement star_free(n); // words read as star monomials, possibly unordered
    std::vector<std::pair<ZWord, Coefficient>> pending(tilde.terms().begin(), tilde.terms().end());
    long guard = 0;
    while (!pending.empty()) {
        auto [w, coeff] = std::move(pending.back());
        pending.pop_back();
        if (++guard > rewrite_step_cap()) throw StepCapExceeded("tilde_to_star");
        if (w.size() <= 1) {
            star_free.add_term(w, coeff);
            continue;
        }
        if (w.size() == 2) {
            auto it = rules.tilde_exprs().find(GenPair{w[0], w[1]});
            if (it == rules.tilde_exprs().end())
                throw Error("no tilde conversion for " + w[0].str() + " " + w[1].str());
            star_free = star_free + star_expr_to_element(n, it->second) * coeff;
            continue;
        }
        // \tilde{w} = z_{w_1} * \tilde{w'} - corrections (strictly smaller words)
        ZWord rest(w.begin() + 1, w.end());
        ZElement rest_t(n);
        rest_t.add_term(rest, Coefficient::one(n));
        ZElement expansion = oracle.mult(ZElement::gen(n, w[0]), rest_t);
        for (const auto& [v, c] : expansion.terms()) {
            if (v == w) continue; // unit diagonal
            pending.push_back({v, -(coeff * c)});
        }
        ZElement rest_star = tilde_to_star(rest_t, oracle, rules);
        star_free = star_free + (ZElement::gen(n, w[0]).free_mul(rest_star)) * coeff;
    }
    return normal_order(star_free, rules);
}

long rewrite_step_cap() {
    if (const char* env = std::getenv("REDUCTA_STEP_CAP")) {
        long v = std::atol(env);
        if (v > 0) return v;
    }
    return 2000000;
}

ZElement normal_order(const ZElement& x, const RuleSet& rules, RewriteStrategy strategy,
                      RewriteStats* stats, long step_cap) {
    const GeneratorBasis& basis = rules.basis();
    const int n = x.n();
    if (step_cap <= 0) step_cap = rewrite_step_cap();
    bool monitor = basis.order == GenOrder::not4 && !basis.reversed;
    long steps = 0;
    ZElement out(n);
    std::vector<std::pair<ZWord, Coefficient>> pending(x.terms().begin(), x.terms().end());
    while (!pending.empty()) {
        auto [w, coeff] = std::move(pending.back());
        pending.pop_back();
        if (coeff.is_zero()) continue;
        int inv = -1;
        for (size_t p = 0; p + 1 < w.size(); ++p)
            if (basis.lt(w[p + 1], w[p])) {
                inv = (int)p;
                if (strategy == RewriteStrategy::leftmost) break;
            }
        if (inv < 0) {
            out.add_term(w, coeff);
            continue;
        }
        if (++steps > step_cap)
            throw StepCapExceeded("normal_order after " + std::to_string(steps) + " steps");
        const OrderingRule* rule = rules.find(w[inv], w[inv + 1]);
        if (!rule) throw Error("missing ordering rule for " + w[inv].str() + " " + w[inv + 1].str());
        long measure_old = monitor ? zword_measure(w) : 0;
        ZWord prefix(w.begin(), w.begin() + inv);
        ZWord suffix(w.begin() + inv + 2, w.end());
        Weight mu = zword_weight(n, prefix);
        std::vector<long> delta(n);
        for (int k = 0; k < n; ++k) delta[k] = -mu.coords[k];
        const RuleSet::ShiftedRhs& rhs = rules.shifted_rhs(*rule, delta);
        for (const auto& [p, c] : rhs.quad) {
            ZWord w2 = prefix;
            w2.push_back(p.first);
            w2.push_back(p.second);
            w2.insert(w2.end(), suffix.begin(), suffix.end());
            if (monitor && zword_measure(w2) > measure_old) {
                if (stats) stats->measure_monotone = false;
                throw MeasureIncreased(w[inv].str() + " " + w[inv + 1].str());
            }
            pending.push_back({std::move(w2), coeff * c});
        }
        if (!rhs.constant.is_zero()) {
            ZWord w3 = prefix;
            w3.insert(w3.end(), suffix.begin(), suffix.end());
            pending.push_back({std::move(w3), coeff * rhs.constant});
        }
    }
    if (stats) stats->steps = steps;
    return out;
}

ZElement star_rewrite(const ZElement& a, const ZElement& b, const RuleSet& rules) {
    return normal_order(a.free_mul(b), rules);
}

ZElement star_expr_to_element(int n, const StarExpr& e) {
    ZElement out(n, e.constant);
    for (const auto& [p, c] : e.quad) out.add_term({p.first, p.second}, c);
    return out;
}

} // namespace reducta
