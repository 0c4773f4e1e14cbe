#pragma once

// Finite fields GF(q^m) for prime q, with exact table-driven arithmetic.
//
// Elements are stored packed: the polynomial-basis coordinate vector
// (c0, c1, ..., c_{m-1}) is encoded as the integer c0 + c1*q + ... in
// [0, q^m).  The prime subfield therefore occupies the values 0..q-1.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace goppa {

class Field;
using FieldRef = std::shared_ptr<const Field>;

class Field {
  public:
    static constexpr uint64_t kDefaultCap = uint64_t(1) << 24;

    // Deterministic construction: the modulus is the lexicographically
    // smallest monic primitive polynomial of degree m over GF(q), comparing
    // coefficient tuples constant term first.  Results are cached, so the
    // same (q, m) always hands back the identical Field object.
    static FieldRef make(uint32_t q, uint32_t m, uint64_t cap = kDefaultCap);

    uint32_t q() const { return q_; }
    uint32_t m() const { return m_; }
    uint64_t size() const { return size_; }
    bool prime_field() const { return m_ == 1; }

    // Modulus coefficients, constant term first, including the leading 1.
    const std::vector<uint8_t>& modulus() const { return modulus_; }

    uint32_t zero() const { return 0; }
    uint32_t one() const { return 1; }
    uint32_t alpha() const { return antilog_[1]; }

    uint32_t add(uint32_t a, uint32_t b) const {
        if (addtab_width_) return addtab_[a * addtab_width_ + b];
        return add_digits(a, b);
    }

    uint32_t neg(uint32_t a) const { return negtab_[a]; }

    uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

    uint32_t mul(uint32_t a, uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        return antilog_[log_[a] + log_[b]];
    }

    uint32_t inv(uint32_t a) const {
        if (a == 0) throw std::domain_error("inversion of zero");
        return antilog_[group_order_ - log_[a]];
    }

    uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }

    // a^e for any integer exponent (negative allowed for nonzero a).
    uint32_t pow(uint32_t a, int64_t e) const;

    // Discrete log to base alpha; a must be nonzero.
    uint32_t log(uint32_t a) const {
        if (a == 0) throw std::domain_error("log of zero");
        return log_[a];
    }

    uint32_t alpha_pow(int64_t e) const;

    uint32_t digit(uint32_t v, uint32_t i) const { return v / qpow_[i] % q_; }

    uint32_t from_digits(const std::vector<uint8_t>& c) const;

    // Canonical element order: alpha^0, alpha^1, ..., alpha^(q^m-2), 0.
    std::vector<uint32_t> elements() const;

    // Text form: m base-q digits, constant coordinate first; digits beyond
    // 9 use letters (a = 10).
    std::string to_text(uint32_t v) const;
    uint32_t from_text(const std::string& s) const;

  private:
    Field() = default;

    uint32_t add_digits(uint32_t a, uint32_t b) const {
        uint32_t r = 0;
        for (uint32_t i = 0; i < m_; ++i) {
            uint32_t s = a % q_ + b % q_;
            if (s >= q_) s -= q_;
            r += s * qpow_[i];
            a /= q_;
            b /= q_;
        }
        return r;
    }

    uint32_t q_ = 0, m_ = 0;
    uint64_t size_ = 0;
    uint32_t group_order_ = 0;  // q^m - 1
    std::vector<uint8_t> modulus_;
    std::vector<uint32_t> antilog_;  // length 2*(q^m-1), wraps around
    std::vector<uint32_t> log_;
    std::vector<uint32_t> negtab_;
    std::vector<uint32_t> qpow_;
    std::vector<uint32_t> addtab_;  // full add table for small fields
    uint64_t addtab_width_ = 0;
};

namespace detail {

inline bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Multiply v by x and reduce mod f (packed coefficients, degree m).
inline uint32_t mulx_mod(uint32_t v, const std::vector<uint8_t>& f, uint32_t q,
                         const std::vector<uint32_t>& qpow, uint32_t m) {
    uint32_t lead = v / qpow[m - 1] % q;
    uint32_t shifted = (v - lead * qpow[m - 1]) * q;
    if (lead == 0) return shifted;
    // subtract lead * (f - x^m), i.e. add lead * (-f_low)
    uint32_t r = 0;
    for (uint32_t i = 0; i < m; ++i) {
        uint32_t a = shifted / qpow[i] % q;
        uint32_t s = (a + (q - f[i]) % q * lead) % q;
        r += s * qpow[i];
    }
    return r;
}

}  // namespace detail

inline FieldRef Field::make(uint32_t q, uint32_t m, uint64_t cap) {
    if (!detail::is_prime_u32(q)) throw std::invalid_argument("q must be prime");
    if (m < 1) throw std::invalid_argument("extension degree must be >= 1");

    static std::mutex cache_mutex;
    static std::map<std::pair<uint32_t, uint32_t>, FieldRef> cache;
    {
        std::lock_guard<std::mutex> lk(cache_mutex);
        auto it = cache.find({q, m});
        if (it != cache.end()) return it->second;
    }

    uint64_t size = 1;
    for (uint32_t i = 0; i < m; ++i) {
        size *= q;
        if (size > cap) throw std::invalid_argument("field size exceeds cap");
    }

    auto fld = std::shared_ptr<Field>(new Field());
    fld->q_ = q;
    fld->m_ = m;
    fld->size_ = size;
    fld->group_order_ = uint32_t(size - 1);
    fld->qpow_.resize(m + 1);
    fld->qpow_[0] = 1;
    for (uint32_t i = 1; i <= m; ++i) fld->qpow_[i] = fld->qpow_[i - 1] * q;

    // Scan monic degree-m polynomials in ascending lex order (constant term
    // varies slowest) for the first one making x a generator of the full
    // multiplicative group; that simultaneously proves irreducibility.
    std::vector<uint8_t> f(m + 1, 0);
    f[m] = 1;
    std::vector<uint32_t> powers;
    powers.reserve(size - 1);
    bool found = false;
    while (!found) {
        powers.clear();
        uint32_t p = 1;
        uint64_t order = 0;
        do {
            powers.push_back(p);
            p = detail::mulx_mod(p, f, q, fld->qpow_, m);
            ++order;
        } while (p != 1 && p != 0 && order < size);
        if (p == 1 && order == size - 1) {
            found = true;
            break;
        }
        // odometer on (c_{m-1}, ..., c_0), c_{m-1} fastest
        uint32_t i = m - 1;
        while (true) {
            if (++f[i] < q) break;
            f[i] = 0;
            if (i == 0) throw std::logic_error("no primitive polynomial found");
            --i;
        }
    }
    fld->modulus_ = f;

    fld->antilog_.resize(2 * (size - 1));
    fld->log_.assign(size, 0);
    for (uint64_t i = 0; i < size - 1; ++i) {
        fld->antilog_[i] = powers[i];
        fld->antilog_[i + size - 1] = powers[i];
        fld->log_[powers[i]] = uint32_t(i);
    }

    fld->negtab_.resize(size);
    for (uint64_t v = 0; v < size; ++v) {
        uint32_t r = 0;
        for (uint32_t i = 0; i < m; ++i) r += (q - uint32_t(v) / fld->qpow_[i] % q) % q * fld->qpow_[i];
        fld->negtab_[v] = r;
    }

    if (size <= 4096) {
        fld->addtab_width_ = size;
        fld->addtab_.resize(size * size);
        for (uint64_t a = 0; a < size; ++a)
            for (uint64_t b = 0; b < size; ++b)
                fld->addtab_[a * size + b] = fld->add_digits(uint32_t(a), uint32_t(b));
    }

    FieldRef ref = fld;
    std::lock_guard<std::mutex> lk(cache_mutex);
    cache.emplace(std::make_pair(q, m), ref);
    return ref;
}

inline uint32_t Field::pow(uint32_t a, int64_t e) const {
    if (a == 0) {
        if (e < 0) throw std::domain_error("inversion of zero");
        return e == 0 ? 1 : 0;
    }
    int64_t n = group_order_;
    int64_t le = ((e % n) + n) % n;
    return antilog_[uint64_t(log_[a]) * uint64_t(le) % uint64_t(n)];
}

inline uint32_t Field::alpha_pow(int64_t e) const {
    int64_t n = group_order_;
    return antilog_[uint32_t(((e % n) + n) % n)];
}

inline uint32_t Field::from_digits(const std::vector<uint8_t>& c) const {
    if (c.size() > m_) throw std::invalid_argument("too many coordinates");
    uint32_t v = 0;
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] >= q_) throw std::invalid_argument("coordinate out of range");
        v += c[i] * qpow_[i];
    }
    return v;
}

inline std::vector<uint32_t> Field::elements() const {
    std::vector<uint32_t> r(size_);
    for (uint64_t i = 0; i + 1 < size_; ++i) r[i] = antilog_[i];
    r[size_ - 1] = 0;
    return r;
}

inline std::string Field::to_text(uint32_t v) const {
    static const char* digits = "0123456789abcdefghij";
    std::string s(m_, '0');
    for (uint32_t i = 0; i < m_; ++i) s[i] = digits[digit(v, i)];
    return s;
}

inline uint32_t Field::from_text(const std::string& s) const {
    if (s.size() != m_) throw std::invalid_argument("element text has wrong length");
    uint32_t v = 0;
    for (uint32_t i = 0; i < m_; ++i) {
        char ch = s[i];
        uint32_t d = ch >= 'a' ? 10 + uint32_t(ch - 'a') : uint32_t(ch - '0');
        if (d >= q_) throw std::invalid_argument("digit out of range");
        v += d * qpow_[i];
    }
    return v;
}

// A field element together with its owning field.  Arithmetic between
// elements of different fields throws.
struct Fe {
    const Field* f = nullptr;
    uint32_t v = 0;

    Fe() = default;
    Fe(const Field* fld, uint32_t val) : f(fld), v(val) {}
    Fe(const FieldRef& fld, uint32_t val) : f(fld.get()), v(val) {}

    static void check(const Fe& a, const Fe& b) {
        if (a.f != b.f) throw std::invalid_argument("field mismatch");
    }

    bool is_zero() const { return v == 0; }

    friend Fe operator+(Fe a, Fe b) { check(a, b); return {a.f, a.f->add(a.v, b.v)}; }
    friend Fe operator-(Fe a, Fe b) { check(a, b); return {a.f, a.f->sub(a.v, b.v)}; }
    friend Fe operator*(Fe a, Fe b) { check(a, b); return {a.f, a.f->mul(a.v, b.v)}; }
    friend Fe operator/(Fe a, Fe b) { check(a, b); return {a.f, a.f->div(a.v, b.v)}; }
    Fe operator-() const { return {f, f->neg(v)}; }
    Fe inv() const { return {f, f->inv(v)}; }
    Fe pow(int64_t e) const { return {f, f->pow(v, e)}; }
    friend bool operator==(const Fe& a, const Fe& b) { return a.f == b.f && a.v == b.v; }
    friend bool operator!=(const Fe& a, const Fe& b) { return !(a == b); }
    friend std::ostream& operator<<(std::ostream& os, const Fe& a) { return os << a.f->to_text(a.v); }
};

}  // namespace goppa
