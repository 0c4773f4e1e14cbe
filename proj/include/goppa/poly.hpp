#pragma once

// Dense univariate polynomials over a Field, plus the six Goppa family
// polynomials G1..G6 over GF(t^2), t = q^l.

#include <algorithm>
#include <cassert>
#include <optional>
#include <set>

#include "field.hpp"

namespace goppa {

class Poly {
  public:
    Poly() = default;
    explicit Poly(const Field* f) : f_(f) {}
    explicit Poly(const FieldRef& f) : f_(f.get()) {}
    Poly(const Field* f, std::vector<uint32_t> coeffs) : f_(f), c_(std::move(coeffs)) { trim(); }

    static Poly zero(const Field* f) { return Poly(f); }
    static Poly constant(const Field* f, uint32_t v) { return Poly(f, {v}); }
    static Poly x(const Field* f) { return Poly(f, {0, 1}); }
    static Poly monomial(const Field* f, size_t deg, uint32_t coef) {
        std::vector<uint32_t> c(deg + 1, 0);
        c[deg] = coef;
        return Poly(f, std::move(c));
    }
    // x - a
    static Poly linear(const Field* f, uint32_t a) { return Poly(f, {f->neg(a), 1}); }

    const Field* field() const { return f_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return int(c_.size()) - 1; }
    uint32_t coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
    uint32_t lead() const { return c_.empty() ? 0 : c_.back(); }
    const std::vector<uint32_t>& coeffs() const { return c_; }

    uint32_t eval(uint32_t x) const {
        uint32_t r = 0;
        for (size_t i = c_.size(); i-- > 0;) r = f_->add(f_->mul(r, x), c_[i]);
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        check(a, b);
        std::vector<uint32_t> c(std::max(a.c_.size(), b.c_.size()), 0);
        for (size_t i = 0; i < c.size(); ++i) c[i] = a.f_->add(a.coeff(i), b.coeff(i));
        return Poly(a.f_, std::move(c));
    }

    friend Poly operator-(const Poly& a, const Poly& b) {
        check(a, b);
        std::vector<uint32_t> c(std::max(a.c_.size(), b.c_.size()), 0);
        for (size_t i = 0; i < c.size(); ++i) c[i] = a.f_->sub(a.coeff(i), b.coeff(i));
        return Poly(a.f_, std::move(c));
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        check(a, b);
        if (a.is_zero() || b.is_zero()) return Poly(a.f_);
        std::vector<uint32_t> c(a.c_.size() + b.c_.size() - 1, 0);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] = a.f_->add(c[i + j], a.f_->mul(a.c_[i], b.c_[j]));
        }
        return Poly(a.f_, std::move(c));
    }

    Poly scaled(uint32_t s) const {
        std::vector<uint32_t> c(c_);
        for (auto& v : c) v = f_->mul(v, s);
        return Poly(f_, std::move(c));
    }

    Poly pow(uint32_t e) const {
        Poly r = constant(f_, 1);
        Poly base = *this;
        while (e) {
            if (e & 1) r = r * base;
            base = e > 1 ? base * base : base;
            e >>= 1;
        }
        return r;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly(f_);
        std::vector<uint32_t> c(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) {
            uint32_t k = uint32_t(i % f_->q());
            c[i - 1] = f_->mul(c_[i], k);  // k is in the prime subfield
        }
        return Poly(f_, std::move(c));
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return scaled(f_->inv(lead()));
    }

    // Quotient and remainder of *this by d.
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        check(*this, d);
        if (d.is_zero()) throw std::domain_error("division by zero polynomial");
        Poly rem = *this;
        if (rem.degree() < d.degree()) return {Poly(f_), rem};
        std::vector<uint32_t> q(rem.c_.size() - d.c_.size() + 1, 0);
        uint32_t dlinv = f_->inv(d.lead());
        while (!rem.is_zero() && rem.degree() >= d.degree()) {
            size_t shift = rem.c_.size() - d.c_.size();
            uint32_t factor = f_->mul(rem.lead(), dlinv);
            q[shift] = factor;
            for (size_t i = 0; i < d.c_.size(); ++i)
                rem.c_[i + shift] = f_->sub(rem.c_[i + shift], f_->mul(factor, d.c_[i]));
            rem.trim();
        }
        return {Poly(f_, std::move(q)), rem};
    }

    Poly operator%(const Poly& d) const { return divmod(d).second; }

    static Poly gcd(Poly a, Poly b) {
        check(a, b);
        if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd(0, 0) undefined");
        while (!b.is_zero()) {
            Poly r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    bool is_separable() const { return gcd(*this, derivative()).degree() == 0; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.f_ == b.f_ && a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    std::string to_text() const {
        if (is_zero()) return f_->to_text(0);
        std::string s;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (i) s += ' ';
            s += f_->to_text(c_[i]);
        }
        return s;
    }

  private:
    static void check(const Poly& a, const Poly& b) {
        if (a.f_ != b.f_) throw std::invalid_argument("field mismatch");
    }
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    const Field* f_ = nullptr;
    std::vector<uint32_t> c_;
};

// (x - a)^{-1} mod g, via synthetic division: g(x) - g(a) = (x - a) q(x),
// hence (x - a)^{-1} = -q(x) / g(a).  Requires g(a) != 0.
inline Poly inv_linear_mod(const Poly& g, uint32_t a) {
    const Field* f = g.field();
    uint32_t ga = g.eval(a);
    if (ga == 0) throw std::domain_error("(x - a) divides g");
    int n = g.degree();
    std::vector<uint32_t> q(size_t(n), 0);
    uint32_t acc = g.coeff(size_t(n));
    for (int i = n - 1; i >= 0; --i) {
        q[size_t(i)] = acc;
        acc = f->add(f->mul(acc, a), g.coeff(size_t(i)));
    }
    uint32_t s = f->neg(f->inv(ga));
    return Poly(f, std::move(q)).scaled(s);
}

// Exhaustive root search over a field.
inline std::set<uint32_t> roots_in_field(const Poly& p, const Field& fld) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial");
    std::set<uint32_t> r;
    for (uint32_t v : fld.elements())
        if (p.eval(v) == 0) r.insert(v);
    return r;
}

enum class GoppaFamily { G1, G2, G3, G4, G5, G6 };

// Sign of the constant/linear tail of G6 (and only G6): Plus is the
// x^{t+1}+1 form, Minus the x^{t+1}-1 form used by the embedded ternary
// code sequence.
enum class G6Sign { Plus, Minus };

struct FamilyContext {
    uint32_t q = 0, l = 0;
    uint64_t t = 0;
    FieldRef field;  // GF(t^2)
};

inline FamilyContext make_family_context(uint32_t q, uint32_t l, uint64_t cap = Field::kDefaultCap) {
    if (q < 3) throw std::invalid_argument("family polynomials need q >= 3");
    FamilyContext ctx;
    ctx.q = q;
    ctx.l = l;
    ctx.t = 1;
    for (uint32_t i = 0; i < l; ++i) ctx.t *= q;
    ctx.field = Field::make(q, 2 * l, cap);
    return ctx;
}

inline Poly goppa_family_polynomial(GoppaFamily fam, const FamilyContext& ctx,
                                    G6Sign sign = G6Sign::Plus) {
    const Field* f = ctx.field.get();
    size_t t = size_t(ctx.t);
    auto mono = [&](size_t d) { return Poly::monomial(f, d, 1); };
    uint32_t one = 1;
    switch (fam) {
        case GoppaFamily::G1: return mono(t - 1) + Poly::constant(f, one);
        case GoppaFamily::G2: return mono(t) + mono(1);
        case GoppaFamily::G3: return mono(t) + mono(1) + Poly::constant(f, one);
        case GoppaFamily::G4: return mono(t) + mono(t - 1) + Poly::constant(f, one);
        case GoppaFamily::G5: return mono(t + 1) + mono(t) + mono(1);
        case GoppaFamily::G6:
            if (sign == G6Sign::Plus) return mono(t + 1) + Poly::constant(f, one);
            return mono(t + 1) - Poly::constant(f, one);
    }
    throw std::invalid_argument("unknown family");
}

inline Poly goppa_family_polynomial(GoppaFamily fam, uint32_t q, uint32_t l,
                                    G6Sign sign = G6Sign::Plus) {
    return goppa_family_polynomial(fam, make_family_context(q, l), sign);
}

}  // namespace goppa
