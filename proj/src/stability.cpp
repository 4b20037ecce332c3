#include "reducta/stability.hpp"

#include "reducta/linalg.hpp"

#include <sstream>

namespace reducta {

ZElement embed(const ZElement& x, int target_n) {
    if (target_n < x.n()) throw BadIndex("embedding cannot shrink the ring");
    return x.widen(target_n);
}

namespace {

bool fits_in(const ZElement& x, int n) {
    for (const auto& [w, c] : x.terms())
        for (const GeneratorId& g : w)
            if (g.i > n || g.j > n) return false;
    return true;
}

// The cut body, or nullopt when a column-(n+1) left factor is present.
std::optional<ZElement> cut_body(const ZElement& body, int col) {
    ZElement out(body.n());
    for (const auto& [w, c] : body.terms()) {
        if (!w.empty() && w.front().j == col && w.front().i < col) return std::nullopt;
        if (!w.empty() && w.back().j == col && w.back().i < col) continue; // suppressed
        out.add_term(w, c);
    }
    return out;
}

} // namespace

std::optional<Relation> try_cut(const Relation& rel) {
    int big = rel.body_hat.n();
    int n = big - 1;
    auto body = cut_body(rel.body_hat, big);
    if (!body || !fits_in(*body, n)) return std::nullopt;
    // re-read the surviving terms in the smaller ring; coefficients of shared
    // terms must not involve theta_{n+1}
    ZElement small(n);
    for (const auto& [w, c] : body->terms()) {
        if (c.num().degree_in(big) > 0 || c.den_general().degree_in(big) > 0) return std::nullopt;
        for (const auto& [f, m] : c.den_linear())
            if (f.i == big || f.j == big) return std::nullopt;
        Coefficient narrowed(Polynomial::from_terms(n, c.num().terms()));
        if (!c.den_general().is_one())
            narrowed = narrowed / Coefficient(Polynomial::from_terms(n, c.den_general().terms()));
        for (const auto& [f, m] : c.den_linear())
            for (int t = 0; t < m; ++t) narrowed *= Coefficient::inv_linear(n, f.i, f.j, f.c);
        small.add_term(w, narrowed);
    }
    Relation out;
    out.family = rel.family;
    out.indices = rel.indices;
    out.body_hat = small;
    out.body_zt = change_basis(small, BasisDirection::from_hat_ring);
    if (!out.body_hat.is_weight_homogeneous(&out.weight)) return std::nullopt;
    return out;
}

Relation cut(const Relation& rel) {
    int big = rel.body_hat.n();
    for (const auto& [w, c] : rel.body_hat.terms())
        if (!w.empty() && w.front().j == big && w.front().i < big)
            throw NotCuttable(rel.name());
    auto out = try_cut(rel);
    if (!out) throw Error("cut did not produce a relation over the smaller ring: " + rel.name());
    return *out;
}

std::string StabilizationReport::str() const {
    std::ostringstream out;
    out << "stabilization n=" << n << " -> n+1: " << (all_ok ? "ok" : "FAILED") << "\n";
    for (const auto& p : pairs) {
        out << "  " << p.pair.str() << ": "
            << (p.delta_zero ? "defect 0" : (p.in_span ? "defect in span" : "OUTSIDE SPAN"));
        if (!p.delta_zero) {
            out << "; xi =";
            for (size_t a = 0; a < p.xi.size(); ++a) out << " [" << (a + 1) << "] " << p.xi[a].str();
        }
        out << "\n";
    }
    return out.str();
}

StabilizationReport check_stabilization(int n, const Oracle& oracle_n, const Oracle& oracle_n1) {
    if (oracle_n.n() != n || oracle_n1.n() != n + 1) throw BadIndex("stabilization oracle sizes");
    const int big = n + 1;
    StabilizationReport rep;
    rep.n = n;
    rep.all_ok = true;
    auto gens = all_generators(n);
    for (const auto& x : gens)
        for (const auto& y : gens) {
            StabilizationPairReport pr;
            pr.pair = {x, y};
            ZElement small = oracle_n.mult_gens(x, y);
            ZElement large = oracle_n1.mult_gens(x, y);
            ZElement delta = embed(small, big) - large;
            if (delta.is_zero()) {
                pr.delta_zero = true;
                pr.in_span = true;
                pr.xi.assign(n, Coefficient::zero(big));
                rep.pairs.push_back(std::move(pr));
                continue;
            }
            // span: v_a = z_{n+1,a} * z_{b,n+1}, b = i+k-j-l+a
            int shift = x.i + y.i - x.j - y.j;
            std::vector<ZElement> span;
            std::vector<int> span_a;
            for (int a = 1; a <= n; ++a) {
                int b = shift + a;
                if (b < 1 || b > n) continue;
                span.push_back(oracle_n1.mult_gens({big, a}, {b, big}));
                span_a.push_back(a);
            }
            // rows: tilde words of delta and the span elements
            std::map<ZWord, int, ZWordLess> idx;
            for (const auto& [w, c] : delta.terms()) idx.try_emplace(w, 0);
            for (const auto& v : span)
                for (const auto& [w, c] : v.terms()) idx.try_emplace(w, 0);
            int r = 0;
            for (auto& [w, k] : idx) k = r++;
            CoeffMatrix A(r, (int)span.size(), big);
            std::vector<Coefficient> bvec(r, Coefficient::zero(big));
            for (size_t s = 0; s < span.size(); ++s)
                for (const auto& [w, c] : span[s].terms()) A.at(idx.at(w), (int)s) = c;
            for (const auto& [w, c] : delta.terms()) bvec[idx.at(w)] = c;
            auto sol = solve_consistent(A, bvec);
            if (!sol) {
                rep.all_ok = false;
                rep.pairs.push_back(std::move(pr));
                throw SpanFailure(pr.pair.str());
            }
            pr.in_span = true;
            pr.xi.assign(n, Coefficient::zero(big));
            for (size_t s = 0; s < span.size(); ++s) {
                // left eta -> right xi through the span weight
                int a = span_a[s], b = shift + a;
                std::vector<long> mu(big, 0);
                mu[b - 1] += 1;
                mu[a - 1] -= 1;
                pr.xi[a - 1] = (*sol)[s].shift(mu);
            }
            rep.pairs.push_back(std::move(pr));
        }
    return rep;
}

bool words_touch_column(const ZElement& x, int column) {
    for (const auto& [w, c] : x.terms()) {
        bool touched = false;
        for (const GeneratorId& g : w)
            if (g.j == column) {
                touched = true;
                break;
            }
        if (!touched) return false;
    }
    return true;
}

} // namespace reducta
