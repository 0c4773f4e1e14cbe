#pragma once

// Closed-form dimension and distance bounds: the generic Goppa bounds, the
// row-dependency accounting (delta_j, Delta_j, theta_{q-1}) for the Gamma6
// family, and the chain propagation that yields per-family dimension
// estimates.  Everything here is exact integer arithmetic, no matrices.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace goppa {

inline int64_t ipow(int64_t b, uint32_t e) {
    int64_t r = 1;
    while (e--) r *= b;
    return r;
}

struct BoundReport {
    uint32_t q = 0, l = 0, j = 0;
    int64_t t = 0;
    int64_t n = 0;                 // t^2 - t - 1, length of the Gamma6 family
    std::vector<int64_t> delta;    // delta_1 .. delta_j
    int64_t Delta = 0;             // sum of deltas
    std::optional<int64_t> theta;  // (q-1)*2l, present only when j >= q-1
    int64_t r_bound = 0;           // redundancy upper bound
    int64_t k_bound = 0;           // dimension lower bound (raw, may be negative)
    int64_t d_bound = 0;           // designed distance j(t+1)+1
};

// Row-dependency accounting for Gamma6^(j): each layer v contributes
// delta_v = l + 2lv removable q-ary rows; from layer q-1 on, another
// theta = (q-1)2l rows of the first layer become dependent.  Orders q-1
// and q share one accounting because the parity matrices collapse.
inline BoundReport redundancy_accounting(uint32_t q, uint32_t l, uint32_t j) {
    if (j < 1 || j > q) throw std::invalid_argument("order out of range");
    BoundReport r;
    r.q = q;
    r.l = l;
    r.j = j;
    r.t = ipow(q, l);
    r.n = r.t * r.t - r.t - 1;
    uint32_t jeff = j > q - 1 ? q - 1 : j;  // the G^q matrix collapses to q-1 layers
    for (uint32_t v = 1; v <= jeff; ++v) r.delta.push_back(int64_t(l) + 2 * int64_t(l) * v);
    for (int64_t d : r.delta) r.Delta += d;
    r.r_bound = 2 * int64_t(l) * jeff * (r.t + 1) - r.Delta;
    if (j >= q - 1) {
        r.theta = int64_t(q - 1) * 2 * l;
        r.r_bound -= *r.theta;
    }
    r.k_bound = r.n - r.r_bound;
    r.d_bound = int64_t(j) * (r.t + 1) + 1;
    return r;
}

// Generic Goppa dimension bound k >= n - m * deg(G_full), plus the
// sharpened value n - m(q-1) deg(G) that applies when the order is
// exactly q (the G^q / G^{q-1} collapse).
struct GenericDimBound {
    int64_t lemma2 = 0;
    std::optional<int64_t> lemma3;
};

inline GenericDimBound generic_dim_bound(int64_t n, uint32_t m, int64_t deg_full, uint32_t q = 0,
                                         std::optional<int64_t> deg_g_at_order_q = std::nullopt) {
    GenericDimBound b;
    b.lemma2 = n - int64_t(m) * deg_full;
    if (deg_g_at_order_q) b.lemma3 = n - int64_t(m) * int64_t(q - 1) * *deg_g_at_order_q;
    return b;
}

inline int64_t clamp_display(int64_t v) { return v < 0 ? 0 : v; }

// Gamma1^(q) dimension estimate: one more than the Gamma6^(q) bound, via
// the chain equalities at order q-1.
inline int64_t gamma1_q_dim_estimate(uint32_t q, uint32_t l) {
    return redundancy_accounting(q, l, q - 1).k_bound + 1;
}

// Per-family dimension estimates, column order
// (Gamma1, Gamma1*, Gamma2=Gamma3, C3*=Gamma4*, Gamma5=Gamma6).
struct ChainEstimates {
    int64_t k1 = 0, k1s = 0, k2 = 0, k3s = 0, k5 = 0;
    std::vector<int64_t> as_vector() const { return {k1, k1s, k2, k3s, k5}; }
};

inline ChainEstimates chain_dim_estimates(uint32_t q, uint32_t l, uint32_t i) {
    if (i < 1 || i > q) throw std::invalid_argument("order out of range");
    int64_t k6 = redundancy_accounting(q, l, i).k_bound;
    ChainEstimates e;
    e.k5 = k6;
    if (i < q - 1) {
        e.k3s = k6 + l;
        e.k2 = e.k3s;
        e.k1s = e.k2 + l;
    } else {
        e.k3s = k6;
        e.k2 = k6;
        e.k1s = k6;
    }
    e.k1 = e.k1s + 1;
    return e;
}

// Theorem-1 style designed distances: i(t+1)+1 for the Gamma6 family and
// the Gamma1 analogue i(t-1)+1.
inline int64_t theorem1_distance_bound(uint32_t q, uint32_t l, uint32_t i) {
    return int64_t(i) * (ipow(q, l) + 1) + 1;
}

inline int64_t gamma1_distance_bound(uint32_t q, uint32_t l, uint32_t i) {
    return int64_t(i) * (ipow(q, l) - 1) + 1;
}

}  // namespace goppa
