#pragma once

// Machine verification of the relations among the six code families: the
// x^q / x^{q-1} equivalence, shortening maps, the three support
// permutations, subcode containments below order q-1 and equalities at
// q-1, assembled into a ChainReport per (q, l, order).

#include <unordered_map>

#include "bounds.hpp"
#include "code.hpp"

namespace goppa {

enum class MapKind { ShiftBeta, Invert, AffineGamma };

inline const char* to_string(MapKind k) {
    switch (k) {
        case MapKind::ShiftBeta: return "shift-beta";
        case MapKind::Invert: return "invert";
        case MapKind::AffineGamma: return "affine-gamma";
    }
    return "?";
}

// A support bijection between two family supports.  perm[i] is the
// codomain index of the image of domain point i; set equality of the image
// with the codomain is checked at construction.
struct SupportMap {
    MapKind kind;
    uint32_t parameter = 0;
    SupportSet domain;
    SupportSet codomain;
    std::vector<size_t> perm;
};

// Parameters are found by first-hit scan in canonical element order.  The
// shift uses beta with beta^t + beta = -1 (the odd-characteristic form of
// the condition; with it L2 + beta = L3 exactly).  The affine map sends
// beta to gamma(beta + 1) with gamma^{t+1} = -1, which carries L5 onto L6;
// gamma beta - 1 with the same gamma is its inverse direction.
inline SupportMap make_support_map(MapKind kind, const FamilyContext& ctx) {
    const Field* f = ctx.field.get();
    int64_t t = int64_t(ctx.t);

    SupportMap m;
    m.kind = kind;
    auto apply = [&](uint32_t x) -> uint32_t {
        switch (kind) {
            case MapKind::ShiftBeta: return f->add(x, m.parameter);
            case MapKind::Invert: return f->inv(x);
            case MapKind::AffineGamma: return f->mul(m.parameter, f->add(x, 1));
        }
        throw std::invalid_argument("unknown map kind");
    };

    if (kind == MapKind::ShiftBeta) {
        m.domain = build_support(SupportVariant::L2, ctx);
        m.codomain = build_support(SupportVariant::L3, ctx);
        bool found = false;
        for (uint32_t v : f->elements())
            if (f->add(f->pow(v, t), v) == f->neg(1)) {
                m.parameter = v;
                found = true;
                break;
            }
        if (!found) throw std::invalid_argument("no beta with beta^t + beta = -1");
    } else if (kind == MapKind::Invert) {
        m.domain = build_support(SupportVariant::L3s, ctx);
        m.codomain = build_support(SupportVariant::L4s, ctx);
    } else {
        m.domain = build_support(SupportVariant::L5, ctx);
        m.codomain = build_support(SupportVariant::L6, ctx);
        bool found = false;
        for (uint32_t v : f->elements())
            if (v != 0 && f->pow(v, t + 1) == f->neg(1)) {
                m.parameter = v;
                found = true;
                break;
            }
        if (!found) throw std::invalid_argument("no gamma with gamma^(t+1) = -1");
    }

    std::unordered_map<uint32_t, size_t> where;
    for (size_t i = 0; i < m.codomain.points.size(); ++i) where.emplace(m.codomain.points[i], i);
    m.perm.reserve(m.domain.points.size());
    for (uint32_t x : m.domain.points) {
        auto it = where.find(apply(x));
        if (it == where.end()) throw std::logic_error("support map image is not the codomain");
        m.perm.push_back(it->second);
    }
    if (m.perm.size() != m.codomain.points.size())
        throw std::logic_error("support map is not a bijection");
    return m;
}

inline SupportMap make_support_map(MapKind kind, uint32_t q, uint32_t l) {
    return make_support_map(kind, make_family_context(q, l));
}

// Gamma(L, (x-c)^q) and Gamma(L, (x-c)^{q-1}) define the same q-ary code;
// verified as row-space equality of the expanded parity matrices.
inline bool verify_power_q_equiv(const SupportSet& L, uint32_t q, uint32_t center,
                                 unsigned threads = 0) {
    if (L.contains(center)) throw std::invalid_argument("center must not lie in the support");
    Poly g = Poly::linear(L.field.get(), center);
    CodeInstance a = make_code(L, g, q, std::nullopt, threads);
    CodeInstance b = make_code(L, g, q - 1, std::nullopt, threads);
    return Mat::row_space_equal(a.h_base, b.h_base, threads);
}

// Shortening in an information symbol: keep the words vanishing at the
// point and delete that coordinate.
inline CodeInstance shorten_info(const CodeInstance& c, uint32_t point, unsigned threads = 0) {
    size_t idx = c.support.index_of(point);
    CodeInstance s = c;
    s.support = c.support.without(point);
    s.h_ext = c.h_ext.without_col(idx);
    s.h_base = expand_to_base(s.h_ext, s.base_field);
    s.n = c.n - 1;
    s.k = s.n - s.h_base.rank(threads);
    return s;
}

// Shortening in a redundancy symbol (the Gamma3 -> C3* construction):
// after adjoining the t-th-power row, the first row becomes all ones and
// the column at {0} becomes a unit column; both are deleted.  What remains
// are the rows alpha^s / G(alpha)^j, s = 1 .. j*deg(G), over L \ {0}.
inline CodeInstance shorten_redundancy(const CodeInstance& c, unsigned threads = 0) {
    if (!c.support.contains(0)) throw std::invalid_argument("support does not contain 0");
    if (c.extra_factor) throw std::invalid_argument("extra factor not supported here");
    uint32_t g0 = c.g_poly.eval(0);
    if (c.ext_field->pow(c.ext_field->inv(g0), c.order) != 1)
        throw std::invalid_argument("first parity row is not a unit row at {0}");
    CodeInstance s = c;
    s.support = c.support.without(0);
    size_t deg = size_t(c.g_poly.degree()) * c.order;
    s.h_ext = parity_rows(s.support, c.g_poly, c.order, 1, deg);
    s.h_base = expand_to_base(s.h_ext, s.base_field);
    s.n = c.n - 1;
    s.k = s.n - s.h_base.rank(threads);
    return s;
}

// Permuted-subspace equality: move c1's generator through the support map
// and check every row against c2's parity matrix, plus dimension equality.
inline bool verify_equivalence(const CodeInstance& c1, const CodeInstance& c2,
                               const SupportMap& map, unsigned threads = 0) {
    if (map.domain.points != c1.support.points || map.codomain.points != c2.support.points)
        throw std::invalid_argument("support mismatch");
    if (c1.k != c2.k) return false;
    Mat g = generator_matrix(c1, threads).with_cols_permuted(map.perm);
    return syndromes_vanish(c2.h_base, g);
}

struct SubcodeReport {
    bool contained = false;
    size_t k_sub = 0, k_super = 0;
    int64_t redundancy_gap = 0;  // r_sub - r_super = k_super - k_sub
    bool gap_at_most_l = false;
};

inline SubcodeReport verify_subcode(const CodeInstance& sub, const CodeInstance& super,
                                    uint32_t l, unsigned threads = 0) {
    if (sub.support.points != super.support.points) throw std::invalid_argument("support mismatch");
    SubcodeReport r;
    r.k_sub = sub.k;
    r.k_super = super.k;
    r.redundancy_gap = int64_t(super.k) - int64_t(sub.k);
    r.gap_at_most_l = r.redundancy_gap >= 0 && r.redundancy_gap <= int64_t(l);
    r.contained = sub.k <= super.k && syndromes_vanish(super.h_base, generator_matrix(sub, threads));
    return r;
}

enum class CollapsePair { Gamma2Gamma1Star, Gamma5Gamma4Star };

struct CollapseReport {
    bool pair_equal = false;       // H_left^(q-1) and H_right^(q-1) span the same row space
    bool left_collapses = false;   // Gamma^(q-1) == Gamma^(q), left family
    bool right_collapses = false;  // same, right family
    size_t k = 0;                  // shared dimension at order q-1
    bool ok() const { return pair_equal && left_collapses && right_collapses; }
};

inline CollapseReport verify_order_q_collapse(CollapsePair pair, const FamilyContext& ctx,
                                              unsigned threads = 0) {
    uint32_t q = ctx.q;
    CodeFamily lf = pair == CollapsePair::Gamma2Gamma1Star ? CodeFamily::Gamma2 : CodeFamily::Gamma5;
    CodeFamily rf = pair == CollapsePair::Gamma2Gamma1Star ? CodeFamily::Gamma1Star : CodeFamily::Gamma4Star;
    CodeInstance lq1 = make_family_code(lf, ctx, q - 1, std::nullopt, G6Sign::Plus, threads);
    CodeInstance lq = make_family_code(lf, ctx, q, std::nullopt, G6Sign::Plus, threads);
    CodeInstance rq1 = make_family_code(rf, ctx, q - 1, std::nullopt, G6Sign::Plus, threads);
    CodeInstance rq = make_family_code(rf, ctx, q, std::nullopt, G6Sign::Plus, threads);
    CollapseReport rep;
    rep.pair_equal = Mat::row_space_equal(lq1.h_base, rq1.h_base, threads);
    rep.left_collapses = Mat::row_space_equal(lq1.h_base, lq.h_base, threads);
    rep.right_collapses = Mat::row_space_equal(rq1.h_base, rq.h_base, threads);
    rep.k = lq1.k;
    return rep;
}

struct ChainRelation {
    std::string id;
    std::string expected;  // equal | subcode | shortening | dominates
    bool verified = false;
    size_t n = 0;
    int64_t k_left = 0;
    int64_t k_right = 0;
};

struct FamilyDim {
    std::string name;
    size_t n = 0;
    size_t k = 0;
    int64_t k_estimate = 0;
};

struct ChainReport {
    uint32_t q = 0, l = 0, order = 0;
    std::vector<FamilyDim> families;
    std::vector<ChainRelation> relations;
    bool all_pass = true;
};

// Runs every relation of the chain at one cumulativity order.  Verdicts are
// recorded, never thrown.
inline ChainReport verify_chain(uint32_t q, uint32_t l, uint32_t i, unsigned threads = 0) {
    if (i < 1 || i > q) throw std::invalid_argument("order out of range");
    FamilyContext ctx = make_family_context(q, l);
    ChainReport rep;
    rep.q = q;
    rep.l = l;
    rep.order = i;

    CodeInstance g1 = make_family_code(CodeFamily::Gamma1, ctx, i, std::nullopt, G6Sign::Plus, threads);
    CodeInstance g1s = make_family_code(CodeFamily::Gamma1Star, ctx, i, std::nullopt, G6Sign::Plus, threads);
    CodeInstance g2 = make_family_code(CodeFamily::Gamma2, ctx, i, std::nullopt, G6Sign::Plus, threads);
    CodeInstance g3 = make_family_code(CodeFamily::Gamma3, ctx, i, std::nullopt, G6Sign::Plus, threads);
    CodeInstance c3s = shorten_redundancy(g3, threads);
    CodeInstance g4s = make_family_code(CodeFamily::Gamma4Star, ctx, i, std::nullopt, G6Sign::Plus, threads);
    CodeInstance g5 = make_family_code(CodeFamily::Gamma5, ctx, i, std::nullopt, G6Sign::Plus, threads);
    CodeInstance g6 = make_family_code(CodeFamily::Gamma6, ctx, i, std::nullopt, G6Sign::Plus, threads);

    ChainEstimates est = chain_dim_estimates(q, l, i);
    rep.families = {
        {"gamma1", g1.n, g1.k, est.k1},     {"gamma1*", g1s.n, g1s.k, est.k1s},
        {"gamma2", g2.n, g2.k, est.k2},     {"gamma3", g3.n, g3.k, est.k2},
        {"c3*", c3s.n, c3s.k, est.k3s},     {"gamma4*", g4s.n, g4s.k, est.k3s},
        {"gamma5", g5.n, g5.k, est.k5},     {"gamma6", g6.n, g6.k, est.k5},
    };

    auto push = [&](std::string id, std::string expected, bool ok, size_t n, int64_t kl, int64_t kr) {
        rep.relations.push_back({std::move(id), std::move(expected), ok, n, kl, kr});
        rep.all_pass = rep.all_pass && rep.relations.back().verified;
    };

    {
        CodeInstance sh = shorten_info(g1, 0, threads);
        bool ok = sh.n == g1s.n && sh.k == g1s.k && sh.k == g1.k - 1 &&
                  Mat::row_space_equal(sh.h_base, g1s.h_base, threads);
        push("shorten-info-gamma1-gamma1*", "shortening", ok, g1.n, int64_t(g1.k), int64_t(g1s.k));
    }

    if (i < q - 1) {
        SubcodeReport r = verify_subcode(g2, g1s, l, threads);
        push("subcode-gamma2-gamma1*", "subcode", r.contained && r.gap_at_most_l, g2.n,
             int64_t(g2.k), int64_t(g1s.k));
    } else {
        bool ok = g2.k == g1s.k && Mat::row_space_equal(g2.h_base, g1s.h_base, threads);
        push("rowspace-gamma2-gamma1*", "equal", ok, g2.n, int64_t(g2.k), int64_t(g1s.k));
    }

    {
        SupportMap m = make_support_map(MapKind::ShiftBeta, ctx);
        push("equiv-gamma2-gamma3", "equal", verify_equivalence(g2, g3, m, threads), g2.n,
             int64_t(g2.k), int64_t(g3.k));
    }

    push("shorten-red-gamma3-c3*", "shortening", c3s.n == g3.n - 1 && c3s.k == g3.k, g3.n,
         int64_t(g3.k), int64_t(c3s.k));

    {
        SupportMap m = make_support_map(MapKind::Invert, ctx);
        push("equiv-c3*-gamma4*", "equal", verify_equivalence(c3s, g4s, m, threads), c3s.n,
             int64_t(c3s.k), int64_t(g4s.k));
    }

    if (i < q - 1) {
        SubcodeReport r = verify_subcode(g5, g4s, l, threads);
        push("subcode-gamma5-gamma4*", "subcode", r.contained && r.gap_at_most_l, g5.n,
             int64_t(g5.k), int64_t(g4s.k));
    } else {
        bool ok = g5.k == g4s.k && Mat::row_space_equal(g5.h_base, g4s.h_base, threads);
        push("rowspace-gamma5-gamma4*", "equal", ok, g5.n, int64_t(g5.k), int64_t(g4s.k));
    }

    {
        SupportMap m = make_support_map(MapKind::AffineGamma, ctx);
        push("equiv-gamma5-gamma6", "equal", verify_equivalence(g5, g6, m, threads), g5.n,
             int64_t(g5.k), int64_t(g6.k));
    }

    if (i >= q - 1) {
        auto collapse = [&](const CodeInstance& at_order, CodeFamily fam, const char* id) {
            uint32_t other = i == q ? q - 1 : q;
            CodeInstance o = make_family_code(fam, ctx, other, std::nullopt, G6Sign::Plus, threads);
            bool ok = Mat::row_space_equal(at_order.h_base, o.h_base, threads) && at_order.k == o.k;
            push(id, "equal", ok, at_order.n, int64_t(at_order.k), int64_t(o.k));
        };
        collapse(g2, CodeFamily::Gamma2, "collapse-gamma2");
        collapse(g1s, CodeFamily::Gamma1Star, "collapse-gamma1*");
        collapse(g5, CodeFamily::Gamma5, "collapse-gamma5");
        collapse(g4s, CodeFamily::Gamma4Star, "collapse-gamma4*");
    }

    {
        bool ok = true;
        for (const FamilyDim& fd : rep.families) ok = ok && int64_t(fd.k) >= fd.k_estimate;
        push("dimensions-dominate-estimates", "dominates", ok, g6.n, int64_t(g6.k), est.k5);
    }

    return rep;
}

}  // namespace goppa
