#pragma once

// Dense matrices over a Field with exact rank / null-space / solve.
//
// Rank computations over prime fields run on a packed uint8 buffer with a
// branch-free update loop; this is the hot path behind every dimension in
// the tables.  Pivoting is fixed (first nonzero in column order) so results
// are bit-reproducible, with or without threads.

#include <atomic>
#include <cstring>
#include <optional>
#include <thread>

#include "field.hpp"

namespace goppa {

inline unsigned default_threads() {
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? hc : 1;
}

namespace detail {

inline void axpy_mod_row(uint8_t* dst, const uint8_t* src, size_t len, uint8_t q) {
    for (size_t i = 0; i < len; ++i) {
        uint8_t v = uint8_t(dst[i] + src[i]);
        dst[i] = v >= q ? uint8_t(v - q) : v;
    }
}

struct PrimeTables {
    uint32_t q;
    std::vector<uint8_t> mul;  // q*q
    std::vector<uint8_t> inv;  // q
    explicit PrimeTables(uint32_t q_) : q(q_), mul(q_ * q_), inv(q_) {
        for (uint32_t a = 0; a < q; ++a)
            for (uint32_t b = 0; b < q; ++b) mul[a * q + b] = uint8_t(a * b % q);
        for (uint32_t a = 1; a < q; ++a)
            for (uint32_t b = 1; b < q; ++b)
                if (a * b % q == 1) inv[a] = uint8_t(b);
    }
};

// In-place row echelon over GF(q) on uint8 entries.  Returns pivot columns.
// With reduced=true the result is the RREF.
inline std::vector<size_t> echelon_u8(uint8_t* a, size_t rows, size_t cols, uint32_t q,
                                      bool reduced, unsigned threads) {
    PrimeTables tab(q);
    if (threads == 0) threads = default_threads();
    std::vector<size_t> pivots;
    std::vector<uint8_t> scaled(size_t(q) * cols);  // row scaled by each multiplier
    std::vector<char> have(q, 0);

    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pr = r;
        while (pr < rows && a[pr * cols + c] == 0) ++pr;
        if (pr == rows) continue;
        if (pr != r)
            for (size_t x = c; x < cols; ++x) std::swap(a[r * cols + x], a[pr * cols + x]);

        uint8_t* piv = a + r * cols;
        uint8_t pv = piv[c];
        if (pv != 1) {
            const uint8_t* row = tab.mul.data() + size_t(tab.inv[pv]) * q;
            for (size_t x = c; x < cols; ++x) piv[x] = row[piv[x]];
        }

        std::fill(have.begin(), have.end(), 0);
        auto scaled_row = [&](uint8_t g) -> const uint8_t* {
            uint8_t* s = scaled.data() + size_t(g) * cols;
            if (!have[g]) {
                const uint8_t* row = tab.mul.data() + size_t(g) * q;
                for (size_t x = c; x < cols; ++x) s[x] = row[piv[x]];
                have[g] = 1;
            }
            return s;
        };

        size_t lo = reduced ? 0 : r + 1;
        auto eliminate = [&](size_t rr_begin, size_t rr_end) {
            for (size_t rr = rr_begin; rr < rr_end; ++rr) {
                if (rr == r) continue;
                uint8_t e = a[rr * cols + c];
                if (e == 0) continue;
                const uint8_t* s = scaled.data() + size_t(q - e) * cols;
                axpy_mod_row(a + rr * cols + c, s + c, cols - c, uint8_t(q));
            }
        };

        size_t span = rows - lo;
        if (threads > 1 && span * (cols - c) > (size_t(1) << 21)) {
            for (uint8_t g = 1; g < q; ++g) scaled_row(g);
            size_t chunk = (span + threads - 1) / threads;
            std::vector<std::thread> ts;
            for (unsigned t = 0; t < threads; ++t) {
                size_t b = lo + t * chunk;
                size_t e = std::min(rows, b + chunk);
                if (b >= e) break;
                ts.emplace_back(eliminate, b, e);
            }
            for (auto& t : ts) t.join();
        } else {
            for (size_t rr = lo; rr < rows; ++rr) {
                if (rr == r) continue;
                uint8_t e = a[rr * cols + c];
                if (e == 0) continue;
                axpy_mod_row(a + rr * cols + c, scaled_row(uint8_t(q - e)) + c, cols - c, uint8_t(q));
            }
        }

        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace detail

class Mat {
  public:
    Mat() = default;
    Mat(const Field* f, size_t rows, size_t cols)
        : f_(f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}
    Mat(const FieldRef& f, size_t rows, size_t cols) : Mat(f.get(), rows, cols) {}

    static Mat identity(const Field* f, size_t n) {
        Mat m(f, n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    const Field* field() const { return f_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    uint32_t& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    uint32_t at(size_t r, size_t c) const { return a_[r * cols_ + c]; }
    const uint32_t* row(size_t r) const { return a_.data() + r * cols_; }
    uint32_t* row(size_t r) { return a_.data() + r * cols_; }

    friend bool operator==(const Mat& x, const Mat& y) {
        return x.f_ == y.f_ && x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    Mat transposed() const {
        Mat m(f_, cols_, rows_);
        for (size_t r = 0; r < rows_; ++r)
            for (size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
        return m;
    }

    static Mat vstack(const Mat& x, const Mat& y) {
        if (x.f_ != y.f_ || x.cols_ != y.cols_) throw std::invalid_argument("shape/field mismatch");
        Mat m(x.f_, x.rows_ + y.rows_, x.cols_);
        std::copy(x.a_.begin(), x.a_.end(), m.a_.begin());
        std::copy(y.a_.begin(), y.a_.end(), m.a_.begin() + ptrdiff_t(x.a_.size()));
        return m;
    }

    Mat with_cols_permuted(const std::vector<size_t>& perm) const {
        if (perm.size() != cols_) throw std::invalid_argument("permutation size mismatch");
        Mat m(f_, rows_, cols_);
        for (size_t r = 0; r < rows_; ++r)
            for (size_t c = 0; c < cols_; ++c) m.at(r, perm[c]) = at(r, c);
        return m;
    }

    Mat without_col(size_t c) const {
        Mat m(f_, rows_, cols_ - 1);
        for (size_t r = 0; r < rows_; ++r) {
            for (size_t x = 0; x < c; ++x) m.at(r, x) = at(r, x);
            for (size_t x = c + 1; x < cols_; ++x) m.at(r, x - 1) = at(r, x);
        }
        return m;
    }

    size_t rank(unsigned threads = 0) const {
        Mat tmp;
        return echelonize(tmp, false, threads).size();
    }

    // Reduced row echelon form; pivot columns returned through `pivots`.
    Mat rref(std::vector<size_t>& pivots, unsigned threads = 0) const {
        Mat out;
        pivots = echelonize(out, true, threads);
        return out;
    }

    // Basis of the right null space, one vector per row, deterministic
    // (free columns in ascending order).
    Mat null_space(unsigned threads = 0) const {
        std::vector<size_t> piv;
        Mat R = rref(piv, threads);
        std::vector<char> is_piv(cols_, 0);
        for (size_t p : piv) is_piv[p] = 1;
        Mat basis(f_, cols_ - piv.size(), cols_);
        size_t bi = 0;
        for (size_t fc = 0; fc < cols_; ++fc) {
            if (is_piv[fc]) continue;
            basis.at(bi, fc) = 1;
            for (size_t i = 0; i < piv.size(); ++i) basis.at(bi, piv[i]) = f_->neg(R.at(i, fc));
            ++bi;
        }
        return basis;
    }

    // True iff the row spaces coincide (rank(A) = rank(B) = rank(A over B)).
    static bool row_space_equal(const Mat& x, const Mat& y, unsigned threads = 0) {
        if (x.f_ != y.f_) throw std::invalid_argument("field mismatch");
        if (x.cols_ != y.cols_) throw std::invalid_argument("column count mismatch");
        size_t rx = x.rank(threads);
        size_t ry = y.rank(threads);
        if (rx != ry) return false;
        return vstack(x, y).rank(threads) == rx;
    }

    // Any solution of (*this) * x = b, free variables set to zero.
    std::optional<std::vector<uint32_t>> solve(const std::vector<uint32_t>& b) const {
        if (b.size() != rows_) throw std::invalid_argument("dimension mismatch");
        Mat aug(f_, rows_, cols_ + 1);
        for (size_t r = 0; r < rows_; ++r) {
            std::copy(row(r), row(r) + cols_, aug.row(r));
            aug.at(r, cols_) = b[r];
        }
        std::vector<size_t> piv;
        Mat R = aug.rref(piv);
        std::vector<uint32_t> x(cols_, 0);
        for (size_t i = 0; i < piv.size(); ++i) {
            if (piv[i] == cols_) return std::nullopt;  // row (0 ... 0 | 1)
            x[piv[i]] = R.at(i, cols_);
        }
        return x;
    }

    // this * other
    Mat mul(const Mat& other) const {
        if (f_ != other.f_) throw std::invalid_argument("field mismatch");
        if (cols_ != other.rows_) throw std::invalid_argument("dimension mismatch");
        Mat out(f_, rows_, other.cols_);
        if (f_->prime_field()) {
            uint64_t q = f_->q();
            Mat bt = other.transposed();
            for (size_t r = 0; r < rows_; ++r)
                for (size_t c = 0; c < other.cols_; ++c) {
                    const uint32_t* x = row(r);
                    const uint32_t* y = bt.row(c);
                    uint64_t acc = 0;
                    for (size_t i = 0; i < cols_; ++i) acc += uint64_t(x[i]) * y[i];
                    out.at(r, c) = uint32_t(acc % q);
                }
            return out;
        }
        for (size_t r = 0; r < rows_; ++r)
            for (size_t i = 0; i < cols_; ++i) {
                uint32_t v = at(r, i);
                if (v == 0) continue;
                for (size_t c = 0; c < other.cols_; ++c)
                    out.at(r, c) = f_->add(out.at(r, c), f_->mul(v, other.at(i, c)));
            }
        return out;
    }

    bool is_zero() const {
        for (uint32_t v : a_)
            if (v) return false;
        return true;
    }

    // Dump format: header `q m rows cols`, then one line per row of
    // space-separated element text forms.
    void dump(std::ostream& os) const {
        os << f_->q() << ' ' << f_->m() << ' ' << rows_ << ' ' << cols_ << '\n';
        for (size_t r = 0; r < rows_; ++r) {
            for (size_t c = 0; c < cols_; ++c) {
                if (c) os << ' ';
                os << f_->to_text(at(r, c));
            }
            os << '\n';
        }
    }

  private:
    // Shared echelon driver.  For prime fields the work runs on a uint8
    // copy; otherwise on a uint32 copy with table arithmetic.
    std::vector<size_t> echelonize(Mat& out, bool reduced, unsigned threads) const {
        if (f_->prime_field()) {
            std::vector<uint8_t> buf(a_.size());
            for (size_t i = 0; i < a_.size(); ++i) buf[i] = uint8_t(a_[i]);
            auto piv = detail::echelon_u8(buf.data(), rows_, cols_, f_->q(), reduced, threads);
            if (reduced) {
                out = Mat(f_, rows_, cols_);
                for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = buf[i];
                out.shrink_to(piv.size());
            }
            return piv;
        }
        Mat work = *this;
        std::vector<size_t> pivots;
        size_t r = 0;
        for (size_t c = 0; c < cols_ && r < rows_; ++c) {
            size_t pr = r;
            while (pr < rows_ && work.at(pr, c) == 0) ++pr;
            if (pr == rows_) continue;
            if (pr != r)
                for (size_t x = c; x < cols_; ++x) std::swap(work.at(r, x), work.at(pr, x));
            uint32_t pinv = f_->inv(work.at(r, c));
            if (pinv != 1)
                for (size_t x = c; x < cols_; ++x) work.at(r, x) = f_->mul(work.at(r, x), pinv);
            size_t lo = reduced ? 0 : r + 1;
            for (size_t rr = lo; rr < rows_; ++rr) {
                if (rr == r) continue;
                uint32_t e = work.at(rr, c);
                if (e == 0) continue;
                uint32_t g = f_->neg(e);
                for (size_t x = c; x < cols_; ++x)
                    work.at(rr, x) = f_->add(work.at(rr, x), f_->mul(g, work.at(r, x)));
            }
            pivots.push_back(c);
            ++r;
        }
        if (reduced) {
            out = std::move(work);
            out.shrink_to(pivots.size());
        }
        return pivots;
    }

    void shrink_to(size_t nrows) {
        rows_ = nrows;
        a_.resize(nrows * cols_);
    }

    const Field* f_ = nullptr;
    size_t rows_ = 0, cols_ = 0;
    std::vector<uint32_t> a_;
};

// True iff h * g^T == 0, i.e. every row of g is in the right null space
// of h.  Prime fields use lazy-reduction integer dot products.
inline bool syndromes_vanish(const Mat& h, const Mat& g) {
    if (h.field() != g.field()) throw std::invalid_argument("field mismatch");
    if (h.cols() != g.cols()) throw std::invalid_argument("length mismatch");
    const Field* f = h.field();
    size_t n = h.cols();
    if (f->prime_field()) {
        uint64_t q = f->q();
        for (size_t gr = 0; gr < g.rows(); ++gr)
            for (size_t hr = 0; hr < h.rows(); ++hr) {
                const uint32_t* x = g.row(gr);
                const uint32_t* y = h.row(hr);
                uint64_t acc = 0;
                for (size_t i = 0; i < n; ++i) acc += uint64_t(x[i]) * y[i];
                if (acc % q) return false;
            }
        return true;
    }
    for (size_t gr = 0; gr < g.rows(); ++gr)
        for (size_t hr = 0; hr < h.rows(); ++hr) {
            uint32_t acc = 0;
            for (size_t i = 0; i < n; ++i) acc = f->add(acc, f->mul(g.at(gr, i), h.at(hr, i)));
            if (acc) return false;
        }
    return true;
}

}  // namespace goppa
