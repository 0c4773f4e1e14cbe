#pragma once

// Construction of cumulative-separable Goppa code instances: supports,
// parity-check matrices in both the flat and the layered form, subfield
// expansion, dimension, generator matrix, and the classical membership
// test that is independent of any matrix construction.

#include "matrix.hpp"
#include "poly.hpp"

namespace goppa {

enum class SupportVariant { L1, L1s, L2, L3, L3s, L4s, L5, L6 };

inline const char* to_string(SupportVariant v) {
    switch (v) {
        case SupportVariant::L1: return "L1";
        case SupportVariant::L1s: return "L1*";
        case SupportVariant::L2: return "L2";
        case SupportVariant::L3: return "L3";
        case SupportVariant::L3s: return "L3*";
        case SupportVariant::L4s: return "L4*";
        case SupportVariant::L5: return "L5";
        case SupportVariant::L6: return "L6";
    }
    return "?";
}

// Ordered code locator set.  Points follow the canonical alpha-power order
// of Field::elements(), so zero, when present, is last.
struct SupportSet {
    FieldRef field;
    std::string label;
    std::vector<uint32_t> points;

    size_t size() const { return points.size(); }

    size_t index_of(uint32_t v) const {
        for (size_t i = 0; i < points.size(); ++i)
            if (points[i] == v) return i;
        throw std::invalid_argument("point not in support");
    }

    bool contains(uint32_t v) const {
        for (uint32_t p : points)
            if (p == v) return true;
        return false;
    }

    SupportSet without(uint32_t v) const {
        SupportSet s{field, label + "\\{" + field->to_text(v) + "}", {}};
        bool seen = false;
        for (uint32_t p : points) {
            if (p == v) {
                seen = true;
                continue;
            }
            s.points.push_back(p);
        }
        if (!seen) throw std::invalid_argument("point not in support");
        return s;
    }
};

inline SupportSet support_from_excluded(const FamilyContext& ctx, const char* label,
                                        const std::set<uint32_t>& excluded, bool drop_zero) {
    SupportSet s{ctx.field, label, {}};
    for (uint32_t v : ctx.field->elements()) {
        if (excluded.count(v)) continue;
        if (drop_zero && v == 0) continue;
        s.points.push_back(v);
    }
    return s;
}

inline SupportSet build_support(SupportVariant variant, const FamilyContext& ctx,
                                G6Sign g6_sign = G6Sign::Plus) {
    auto roots_of = [&](GoppaFamily fam) {
        return roots_in_field(goppa_family_polynomial(fam, ctx, g6_sign), *ctx.field);
    };
    switch (variant) {
        case SupportVariant::L1: return support_from_excluded(ctx, "L1", roots_of(GoppaFamily::G1), false);
        case SupportVariant::L1s: return support_from_excluded(ctx, "L1*", roots_of(GoppaFamily::G1), true);
        case SupportVariant::L2: return support_from_excluded(ctx, "L2", roots_of(GoppaFamily::G1), true);
        case SupportVariant::L3: return support_from_excluded(ctx, "L3", roots_of(GoppaFamily::G3), false);
        case SupportVariant::L3s: return support_from_excluded(ctx, "L3*", roots_of(GoppaFamily::G3), true);
        case SupportVariant::L4s: return support_from_excluded(ctx, "L4*", roots_of(GoppaFamily::G4), true);
        case SupportVariant::L5: return support_from_excluded(ctx, "L5", roots_of(GoppaFamily::G4), true);
        case SupportVariant::L6: return support_from_excluded(ctx, "L6", roots_of(GoppaFamily::G6), false);
    }
    throw std::invalid_argument("unknown support variant");
}

inline SupportSet build_support(SupportVariant variant, uint32_t q, uint32_t l,
                                G6Sign g6_sign = G6Sign::Plus) {
    return build_support(variant, make_family_context(q, l), g6_sign);
}

// Rows alpha_i^s / G(alpha_i)^j for s in [s_from, s_from + nrows); the flat
// form of the parity matrix uses s = 0 .. deg(G^j)-1.
inline Mat parity_rows(const SupportSet& L, const Poly& g, uint32_t j, size_t s_from,
                       size_t nrows) {
    const Field* f = L.field.get();
    if (g.field() != f) throw std::invalid_argument("field mismatch");
    size_t n = L.size();
    Mat h(f, nrows, n);
    for (size_t i = 0; i < n; ++i) {
        uint32_t x = L.points[i];
        uint32_t gx = g.eval(x);
        if (gx == 0) throw std::domain_error("support point is a root of G");
        uint32_t e = f->pow(f->inv(gx), int64_t(j));
        uint32_t num = f->pow(x, int64_t(s_from));
        for (size_t s = 0; s < nrows; ++s) {
            h.at(s, i) = f->mul(num, e);
            num = f->mul(num, x);
        }
    }
    return h;
}

inline Mat parity_check_standard(const SupportSet& L, const Poly& g, uint32_t j,
                                 const std::optional<Poly>& extra = std::nullopt) {
    if (j < 1) throw std::invalid_argument("cumulativity order must be >= 1");
    size_t deg = size_t(g.degree()) * j;
    if (!extra) return parity_rows(L, g, j, 0, deg);

    // Full polynomial G^j * extra; rows s = 0 .. deg-1 of alpha^s / F(alpha).
    const Field* f = L.field.get();
    deg += size_t(extra->degree());
    size_t n = L.size();
    Mat h(f, deg, n);
    for (size_t i = 0; i < n; ++i) {
        uint32_t x = L.points[i];
        uint32_t gx = g.eval(x);
        uint32_t ex = extra->eval(x);
        if (gx == 0 || ex == 0) throw std::domain_error("support point is a root of G");
        uint32_t e = f->mul(f->pow(f->inv(gx), int64_t(j)), f->inv(ex));
        uint32_t num = 1;
        for (size_t s = 0; s < deg; ++s) {
            h.at(s, i) = f->mul(num, e);
            num = f->mul(num, x);
        }
    }
    return h;
}

// Layered form: stacked blocks of tau rows alpha^s / G(alpha)^v for
// v = j, j-1, ..., 1.
inline Mat parity_check_layered(const SupportSet& L, const Poly& g, uint32_t j) {
    if (j < 1) throw std::invalid_argument("cumulativity order must be >= 1");
    size_t tau = size_t(g.degree());
    Mat h(L.field.get(), size_t(j) * tau, L.size());
    size_t r = 0;
    for (uint32_t v = j; v >= 1; --v) {
        Mat blk = parity_rows(L, g, v, 0, tau);
        for (size_t s = 0; s < tau; ++s, ++r)
            std::copy(blk.row(s), blk.row(s) + blk.cols(), h.row(r));
    }
    return h;
}

// Subfield expansion: each GF(q^m) row becomes m rows over GF(q) by reading
// the polynomial-basis coordinates of every entry.
inline Mat expand_to_base(const Mat& h, const FieldRef& base) {
    const Field* ext = h.field();
    if (base->q() != ext->q() || base->m() != 1) throw std::invalid_argument("base field mismatch");
    uint32_t m = ext->m();
    Mat out(base.get(), h.rows() * m, h.cols());
    for (size_t r = 0; r < h.rows(); ++r)
        for (size_t c = 0; c < h.cols(); ++c) {
            uint32_t v = h.at(r, c);
            if (v == 0) continue;
            for (uint32_t d = 0; d < m; ++d) out.at(r * m + d, c) = ext->digit(v, d);
        }
    return out;
}

struct CodeInstance {
    FieldRef ext_field;
    FieldRef base_field;
    SupportSet support;
    Poly g_poly;
    uint32_t order = 0;
    std::optional<Poly> extra_factor;
    Poly full_poly;  // g^order * extra_factor
    Mat h_ext;       // flat form over the extension field
    Mat h_base;
    size_t n = 0;
    size_t k = 0;

    Mat layered_parity() const { return parity_check_layered(support, g_poly, order); }
};

inline CodeInstance make_code(const SupportSet& L, const Poly& g, uint32_t j,
                              const std::optional<Poly>& extra = std::nullopt,
                              unsigned threads = 0) {
    if (j < 1) throw std::invalid_argument("cumulativity order must be >= 1");
    CodeInstance c;
    c.ext_field = L.field;
    c.base_field = Field::make(L.field->q(), 1);
    c.support = L;
    c.g_poly = g;
    c.order = j;
    c.extra_factor = extra;
    c.full_poly = g.pow(j);
    if (extra) c.full_poly = c.full_poly * *extra;
    c.h_ext = parity_check_standard(L, g, j, extra);
    c.h_base = expand_to_base(c.h_ext, c.base_field);
    c.n = L.size();
    c.k = c.n - c.h_base.rank(threads);
    return c;
}

enum class CodeFamily { Gamma1, Gamma1Star, Gamma2, Gamma3, Gamma3Star, Gamma4Star, Gamma5, Gamma6 };

inline const char* to_string(CodeFamily f) {
    switch (f) {
        case CodeFamily::Gamma1: return "gamma1";
        case CodeFamily::Gamma1Star: return "gamma1*";
        case CodeFamily::Gamma2: return "gamma2";
        case CodeFamily::Gamma3: return "gamma3";
        case CodeFamily::Gamma3Star: return "gamma3*";
        case CodeFamily::Gamma4Star: return "gamma4*";
        case CodeFamily::Gamma5: return "gamma5";
        case CodeFamily::Gamma6: return "gamma6";
    }
    return "?";
}

inline CodeInstance make_family_code(CodeFamily fam, const FamilyContext& ctx, uint32_t order,
                                     const std::optional<Poly>& extra = std::nullopt,
                                     G6Sign g6_sign = G6Sign::Plus, unsigned threads = 0) {
    SupportVariant sv;
    GoppaFamily gf;
    switch (fam) {
        case CodeFamily::Gamma1: sv = SupportVariant::L1; gf = GoppaFamily::G1; break;
        case CodeFamily::Gamma1Star: sv = SupportVariant::L1s; gf = GoppaFamily::G1; break;
        case CodeFamily::Gamma2: sv = SupportVariant::L2; gf = GoppaFamily::G2; break;
        case CodeFamily::Gamma3: sv = SupportVariant::L3; gf = GoppaFamily::G3; break;
        case CodeFamily::Gamma3Star: sv = SupportVariant::L3s; gf = GoppaFamily::G3; break;
        case CodeFamily::Gamma4Star: sv = SupportVariant::L4s; gf = GoppaFamily::G4; break;
        case CodeFamily::Gamma5: sv = SupportVariant::L5; gf = GoppaFamily::G5; break;
        case CodeFamily::Gamma6: sv = SupportVariant::L6; gf = GoppaFamily::G6; break;
        default: throw std::invalid_argument("unknown family");
    }
    return make_code(build_support(sv, ctx, g6_sign), goppa_family_polynomial(gf, ctx, g6_sign),
                     order, extra, threads);
}

inline CodeInstance make_family_code(CodeFamily fam, uint32_t q, uint32_t l, uint32_t order,
                                     const std::optional<Poly>& extra = std::nullopt,
                                     G6Sign g6_sign = G6Sign::Plus, unsigned threads = 0) {
    return make_family_code(fam, make_family_context(q, l), order, extra, g6_sign, threads);
}

// k x n generator over the base field; rows span the code.
inline Mat generator_matrix(const CodeInstance& c, unsigned threads = 0) {
    Mat g = c.h_base.null_space(threads);
    if (g.rows() != c.k) throw std::logic_error("null space dimension disagrees with rank");
    return g;
}

// Classical membership test: sum c_i (x - alpha_i)^{-1} == 0 mod G_full.
// Works straight from the support and polynomial, no matrices involved.
inline bool goppa_membership(const SupportSet& L, const Poly& g_full,
                             const std::vector<uint32_t>& word) {
    if (word.size() != L.size()) throw std::invalid_argument("length mismatch");
    const Field* f = L.field.get();
    std::vector<uint32_t> acc(size_t(g_full.degree()), 0);
    for (size_t i = 0; i < word.size(); ++i) {
        if (word[i] == 0) continue;
        Poly t = inv_linear_mod(g_full, L.points[i]).scaled(word[i]);
        for (size_t d = 0; d < acc.size(); ++d) acc[d] = f->add(acc[d], t.coeff(d));
    }
    for (uint32_t v : acc)
        if (v) return false;
    return true;
}

inline bool goppa_membership(const CodeInstance& c, const std::vector<uint32_t>& word) {
    return goppa_membership(c.support, c.full_poly, word);
}

}  // namespace goppa
