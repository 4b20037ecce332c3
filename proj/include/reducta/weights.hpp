#pragma once

#include "reducta/error.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace reducta {

// Integer vector in the epsilon basis of h*.
struct Weight {
    std::vector<long> coords;

    Weight() = default;
    explicit Weight(int n) : coords(n, 0) {}
    static Weight eps(int n, int i) {
        Weight w(n);
        w.coords[i - 1] = 1;
        return w;
    }
    static Weight root(int n, int i, int j) { // eps_i - eps_j
        Weight w(n);
        w.coords[i - 1] += 1;
        w.coords[j - 1] -= 1;
        return w;
    }

    int n() const { return (int)coords.size(); }
    bool is_zero() const {
        for (long c : coords)
            if (c) return false;
        return true;
    }
    Weight operator+(const Weight& o) const {
        Weight r = *this;
        for (size_t k = 0; k < coords.size(); ++k) r.coords[k] += o.coords[k];
        return r;
    }
    Weight operator-(const Weight& o) const {
        Weight r = *this;
        for (size_t k = 0; k < coords.size(); ++k) r.coords[k] -= o.coords[k];
        return r;
    }
    Weight operator-() const {
        Weight r = *this;
        for (auto& c : r.coords) c = -c;
        return r;
    }
    bool operator==(const Weight& o) const { return coords == o.coords; }
    bool operator<(const Weight& o) const { return coords < o.coords; }
};

// Height d: the coordinate sum of w in the simple root basis. Defined on the
// root lattice (coordinates summing to zero); d(eps_i - eps_j) = j - i.
inline long height(const Weight& w) {
    long total = 0, acc = 0, d = 0;
    for (long c : w.coords) total += c;
    if (total != 0) throw NotInRootLattice();
    // w = sum_k l_k alpha_k with l_k = partial sums of coords.
    for (size_t k = 0; k + 1 < w.coords.size(); ++k) {
        acc += w.coords[k];
        d += acc;
    }
    return d;
}

// b - a in Q_+: all left partial sums nonnegative, total zero.
inline bool leq_Q(const Weight& a, const Weight& b) {
    long acc = 0;
    for (size_t k = 0; k < a.coords.size(); ++k) acc += b.coords[k] - a.coords[k];
    if (acc != 0) return false;
    acc = 0;
    for (size_t k = 0; k < a.coords.size(); ++k) {
        acc += b.coords[k] - a.coords[k];
        if (acc < 0) return false;
    }
    return true;
}

// E_ij / z_ij; i == j encodes t_i.
struct GeneratorId {
    int i = 0, j = 0;

    bool is_t() const { return i == j; }
    bool operator==(const GeneratorId& o) const { return i == o.i && j == o.j; }
    bool operator!=(const GeneratorId& o) const { return !(*this == o); }
    bool operator<(const GeneratorId& o) const { return i != o.i ? i < o.i : j < o.j; }
    Weight weight(int n) const { return i == j ? Weight(n) : Weight::root(n, i, j); }
    long d() const { return j - i; } // height of the weight
    std::string str() const {
        if (i == j) return "t[" + std::to_string(i) + "]";
        return "z[" + std::to_string(i) + "," + std::to_string(j) + "]";
    }
};

enum class GenOrder { not4, not4p };

// The total order on generators. not4: E_ij before E_kl when i-j > k-l, ties
// broken by i > k. not4p agrees on the i-j comparison but breaks ties by i > k
// on the lowering side, i < k on the raising side, and fixes the weight-zero
// block as t_1, t_2, ..., t_n.
inline bool gen_order_lt(const GeneratorId& a, const GeneratorId& b, GenOrder ord = GenOrder::not4) {
    int da = a.i - a.j, db = b.i - b.j;
    if (da != db) return da > db;
    if (ord == GenOrder::not4) return a.i > b.i;
    if (da > 0) return a.i > b.i;
    if (da < 0) return a.i < b.i;
    return a.i < b.i; // t_1 before t_2 before ...
}

inline bool gen_order_leq(const GeneratorId& a, const GeneratorId& b, GenOrder ord = GenOrder::not4) {
    return a == b || gen_order_lt(a, b, ord);
}

// All n^2 generators sorted by the chosen order.
inline std::vector<GeneratorId> all_generators(int n, GenOrder ord = GenOrder::not4) {
    std::vector<GeneratorId> gens;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) gens.push_back({i, j});
    std::stable_sort(gens.begin(), gens.end(),
                     [ord](const GeneratorId& a, const GeneratorId& b) { return gen_order_lt(a, b, ord); });
    return gens;
}

} // namespace reducta
