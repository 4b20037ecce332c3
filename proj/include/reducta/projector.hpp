#pragma once

#include "reducta/zn.hpp"

#include <mutex>
#include <utility>

namespace reducta {

// Truncated factorized extremal projector of the diagonal gl_n.
struct ProjectorConfig {
    int n = 0;
    // Positive roots eps_i - eps_j (i < j) in a normal ordering.
    std::vector<std::pair<int, int>> root_order;
    // rho pairing rho(h_{eps_i-eps_j}); invariant: equals j - i.
    std::vector<long> rho;
    // Safety bound on the k-series per factor; 0 means 2*deg + 2.
    int k_cap = 0;

    static ProjectorConfig make(int n);
    bool is_normal_ordering() const;
};

// P y mod the left ideal generated by n_+, applied factor by factor right to
// left; each factor's series stops when e_gamma annihilates the running term.
EnvElement apply_projector(const ProjectorConfig& cfg, const EnvElement& y);

// Multiplication oracle a * b = a P b with cached generator products.
class Oracle {
  public:
    explicit Oracle(ProjectorConfig cfg) : cfg_(std::move(cfg)) {}
    explicit Oracle(int n) : cfg_(ProjectorConfig::make(n)) {}

    int n() const { return cfg_.n; }
    const ProjectorConfig& config() const { return cfg_; }

    // x, y in tilde coordinates (PBW-sorted words); result in tilde coordinates.
    ZElement mult(const ZElement& x, const ZElement& y) const;
    // Star product of two generators, cached.
    ZElement mult_gens(GeneratorId a, GeneratorId b) const;
    // Left-folded star evaluation of a free word g_1 * g_2 * ... * g_k, cached.
    ZElement eval_word(const ZWord& w) const;
    // Evaluates a free-algebra element term by term under the star product.
    ZElement eval_free(const ZElement& x) const;

  private:
    ProjectorConfig cfg_;
    mutable std::mutex mu_;
    mutable std::map<ZWord, ZElement, ZWordLess> word_cache_;
};

} // namespace reducta
