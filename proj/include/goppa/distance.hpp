#pragma once

// Exact minimum distance by exhaustive enumeration (projective message
// representatives, loopless Gray stepping), pseudorandom upper bounds, and
// the constructive minimum-weight witness for the Gamma6 family.

#include <chrono>
#include <random>
#include <unordered_map>

#include "bounds.hpp"
#include "code.hpp"

namespace goppa {

using Codeword = std::vector<uint32_t>;

inline size_t hamming_weight(const Codeword& w) {
    size_t r = 0;
    for (uint32_t v : w) r += v != 0;
    return r;
}

struct DistanceResult {
    enum class Method { Exhaustive, SampledUpperBound, Witness };
    std::optional<int64_t> d;
    Method method = Method::Exhaustive;
    uint64_t enumerated = 0;
    double elapsed_s = 0;
};

inline const char* to_string(DistanceResult::Method m) {
    switch (m) {
        case DistanceResult::Method::Exhaustive: return "exhaustive";
        case DistanceResult::Method::SampledUpperBound: return "sampled-upper-bound";
        case DistanceResult::Method::Witness: return "witness";
    }
    return "?";
}

inline int64_t designed_distance(int64_t deg_full) { return deg_full + 1; }

namespace detail {

// One enumeration unit: messages with first nonzero digit 1 at `lead`,
// optionally a fixed second digit, and `free_digits` trailing free digits.
struct EnumChunk {
    size_t lead = 0;
    std::optional<uint32_t> second = std::nullopt;
    size_t free_digits = 0;
};

// Walks all q^D tuples, one +/-1 digit change per step (loopless reflected
// Gray).  on_change(digit, up) is called per step.
template <typename F>
void gray_walk(size_t D, uint32_t q, F&& on_change) {
    if (D == 0) return;
    std::vector<uint32_t> a(D, 0);
    std::vector<int8_t> o(D, 1);
    std::vector<size_t> focus(D + 1);
    for (size_t j = 0; j <= D; ++j) focus[j] = j;
    while (true) {
        size_t j = focus[0];
        focus[0] = 0;
        if (j == D) return;
        a[j] = uint32_t(int32_t(a[j]) + o[j]);
        on_change(j, o[j] > 0);
        if (a[j] == 0 || a[j] == q - 1) {
            o[j] = int8_t(-o[j]);
            focus[j] = focus[j + 1];
            focus[j + 1] = j + 1;
        }
    }
}

struct ExhaustiveState {
    const uint8_t* rows;      // k x n generator, packed
    const uint8_t* neg_rows;  // negated rows
    size_t k, n;
    uint32_t q;
};

inline void add_row_count(uint8_t* cw, const uint8_t* row, size_t n, uint8_t q, size_t& weight) {
    size_t w = 0;
    for (size_t i = 0; i < n; ++i) {
        uint8_t v = uint8_t(cw[i] + row[i]);
        v = v >= q ? uint8_t(v - q) : v;
        cw[i] = v;
        w += v != 0;
    }
    weight = w;
}

inline std::pair<size_t, uint64_t> run_chunk(const ExhaustiveState& st, const EnumChunk& ch) {
    std::vector<uint8_t> cw(st.n, 0);
    size_t weight = 0;
    add_row_count(cw.data(), st.rows + ch.lead * st.n, st.n, uint8_t(st.q), weight);
    if (ch.second) {
        const uint8_t* r = st.rows + (ch.lead + 1) * st.n;
        for (uint32_t rep = 0; rep < *ch.second; ++rep)
            add_row_count(cw.data(), r, st.n, uint8_t(st.q), weight);
    }
    size_t best = weight;
    uint64_t visited = 1;
    size_t base = ch.lead + (ch.second ? 2 : 1);
    gray_walk(ch.free_digits, st.q, [&](size_t j, bool up) {
        const uint8_t* r = (up ? st.rows : st.neg_rows) + (base + j) * st.n;
        add_row_count(cw.data(), r, st.n, uint8_t(st.q), weight);
        if (weight < best) best = weight;
        ++visited;
    });
    return {best, visited};
}

}  // namespace detail

// Exact minimum distance by scanning one representative per scalar class
// of nonzero messages: (q^k - 1)/(q - 1) codewords in total.  Refuses when
// q^k exceeds cap.  The result is a plain minimum over a fixed set, so it
// does not depend on the thread count.  In fast mode the scan stops once
// the designed distance is reached (that value is already a lower bound,
// so the result is still exact).
inline DistanceResult min_distance_exact(const Mat& G, uint64_t cap = uint64_t(1) << 36,
                                         unsigned threads = 0, bool fast = false,
                                         int64_t designed = 0) {
    const Field* f = G.field();
    if (!f->prime_field()) throw std::invalid_argument("generator must be over the base field");
    auto t0 = std::chrono::steady_clock::now();
    DistanceResult res;
    res.method = DistanceResult::Method::Exhaustive;
    size_t k = G.rows(), n = G.cols();
    uint32_t q = f->q();
    if (k == 0) {
        res.elapsed_s = 0;
        return res;
    }

    long double total = 1;
    for (size_t i = 0; i < k; ++i) {
        total *= q;
        if (total > (long double)cap) throw std::invalid_argument("q^k exceeds enumeration cap");
    }

    std::vector<uint8_t> rows(k * n), neg(k * n);
    for (size_t r = 0; r < k; ++r)
        for (size_t c = 0; c < n; ++c) {
            rows[r * n + c] = uint8_t(G.at(r, c));
            neg[r * n + c] = uint8_t(f->neg(G.at(r, c)));
        }
    detail::ExhaustiveState st{rows.data(), neg.data(), k, n, q};

    std::vector<detail::EnumChunk> chunks;
    for (size_t p = 0; p < k; ++p) {
        if (p + 1 == k) {
            chunks.push_back({p, std::nullopt, 0});
        } else {
            for (uint32_t v = 0; v < q; ++v) chunks.push_back({p, v, k - p - 2});
        }
    }

    if (threads == 0) threads = default_threads();
    size_t early = fast && designed > 0 ? size_t(designed) : 0;
    std::atomic<size_t> next{0};
    std::atomic<size_t> global_best{n + 1};
    std::vector<uint64_t> counts(threads, 0);
    auto worker = [&](unsigned ti) {
        while (true) {
            size_t idx = next.fetch_add(1);
            if (idx >= chunks.size()) return;
            if (early && global_best.load(std::memory_order_relaxed) <= early) return;
            auto [best, visited] = detail::run_chunk(st, chunks[idx]);
            counts[ti] += visited;
            size_t cur = global_best.load(std::memory_order_relaxed);
            while (best < cur && !global_best.compare_exchange_weak(cur, best)) {
            }
        }
    };
    if (threads <= 1) {
        worker(0);
    } else {
        std::vector<std::thread> ts;
        for (unsigned t = 0; t < threads; ++t) ts.emplace_back(worker, t);
        for (auto& t : ts) t.join();
    }
    for (uint64_t c : counts) res.enumerated += c;
    res.d = int64_t(global_best.load());
    res.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

// Upper bound: minimum weight over `samples` pseudorandom nonzero codewords
// plus all generator rows.  Reproducible for a fixed seed.
inline DistanceResult min_distance_upper(const Mat& G, uint64_t samples, uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("samples must be >= 1");
    const Field* f = G.field();
    auto t0 = std::chrono::steady_clock::now();
    DistanceResult res;
    res.method = DistanceResult::Method::SampledUpperBound;
    size_t k = G.rows(), n = G.cols();
    if (k == 0) {
        res.elapsed_s = 0;
        return res;
    }
    uint32_t q = f->q();
    size_t best = n + 1;
    for (size_t r = 0; r < k; ++r) {
        size_t w = 0;
        for (size_t c = 0; c < n; ++c) w += G.at(r, c) != 0;
        best = std::min(best, w);
    }
    std::mt19937_64 rng(seed);
    std::vector<uint32_t> msg(k);
    std::vector<uint32_t> cw(n);
    for (uint64_t s = 0; s < samples; ++s) {
        bool nonzero = false;
        for (size_t i = 0; i < k; ++i) {
            msg[i] = uint32_t(rng() % q);
            nonzero |= msg[i] != 0;
        }
        if (!nonzero) {
            msg[rng() % k] = 1 + uint32_t(rng() % (q - 1));
        }
        std::fill(cw.begin(), cw.end(), 0);
        for (size_t i = 0; i < k; ++i) {
            if (msg[i] == 0) continue;
            for (size_t c = 0; c < n; ++c)
                cw[c] = f->add(cw[c], f->mul(msg[i], G.at(i, c)));
        }
        size_t w = hamming_weight(cw);
        best = std::min(best, w);
        ++res.enumerated;
    }
    res.d = int64_t(best);
    res.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

// The q-1 cosets of the order-(t+1) subgroup reachable with step
// (t-1)/(q-1): group j is { alpha^{(t-1)u + (t-1)/(q-1) j} : u = 0..t }.
// The Goppa polynomial of the Gamma6 family is constant on each group; the
// excluded index j* is the one where that constant vanishes (those t+1
// elements are exactly the roots).
struct Theorem1Witness {
    uint32_t q = 0, l = 0, order = 0;
    int64_t t = 0;
    std::vector<std::vector<size_t>> groups;  // support index lists, all q-1 cosets; groups[j*] empty
    uint32_t excluded_j = 0;
    std::vector<uint32_t> group_values;       // lambda_j = G6 value on group j (prime subfield)
    std::vector<uint32_t> chosen_groups;      // the i group indices carrying nonzero values
    std::vector<uint32_t> small_vector;       // length q-1: per valid group in index order, then a0
    Codeword lifted;                          // length n over GF(q)
    size_t weight = 0;
};

inline Theorem1Witness build_theorem1_witness(uint32_t q, uint32_t l, uint32_t i) {
    if (!(1 < i && i + 1 < q)) throw std::invalid_argument("order must satisfy 1 < i < q-1");
    FamilyContext ctx = make_family_context(q, l);
    const Field* f = ctx.field.get();
    int64_t t = int64_t(ctx.t);
    int64_t group_order = t * t - 1;
    int64_t step = (t - 1) / int64_t(q - 1);

    Theorem1Witness w;
    w.q = q;
    w.l = l;
    w.order = i;
    w.t = t;

    SupportSet L = build_support(SupportVariant::L6, ctx);
    std::unordered_map<uint32_t, size_t> pos;
    for (size_t idx = 0; idx < L.points.size(); ++idx) pos.emplace(L.points[idx], idx);

    uint32_t zeta = f->alpha_pow(group_order / int64_t(q - 1));  // order q-1
    w.groups.resize(q - 1);
    w.group_values.resize(q - 1);
    bool have_excluded = false;
    for (uint32_t j = 0; j < q - 1; ++j) {
        uint32_t lam = f->add(f->pow(zeta, j), 1);  // in the prime subfield
        w.group_values[j] = lam;
        if (lam == 0) {
            w.excluded_j = j;
            have_excluded = true;
            continue;
        }
        for (int64_t u = 0; u <= t; ++u)
            w.groups[j].push_back(pos.at(f->alpha_pow((t - 1) * u + step * int64_t(j))));
    }
    if (!have_excluded) throw std::logic_error("no excluded coset found");

    for (uint32_t j = 0; j < q - 1 && w.chosen_groups.size() < i; ++j)
        if (j != w.excluded_j) w.chosen_groups.push_back(j);

    // Reduced system over GF(q): rows v = 1..i, sum_j a_j lambda_j^{-v} = -a0
    // with a0 normalized to 1.  The columns are a Vandermonde family, so the
    // solution is unique with every entry nonzero.
    FieldRef base = Field::make(q, 1);
    Mat M(base, i, i);
    std::vector<uint32_t> rhs(i, base->neg(1));
    for (uint32_t col = 0; col < i; ++col) {
        uint32_t x = base->inv(w.group_values[w.chosen_groups[col]]);
        for (uint32_t v = 1; v <= i; ++v) M.at(v - 1, col) = base->pow(x, v);
    }
    auto sol = M.solve(rhs);
    if (!sol) throw std::logic_error("reduced Vandermonde system unsolvable");
    for (uint32_t v : *sol)
        if (v == 0) throw std::logic_error("degenerate witness support");

    w.small_vector.assign(q - 1, 0);
    {
        size_t slot = 0;
        for (uint32_t j = 0; j < q - 1; ++j) {
            if (j == w.excluded_j) continue;
            for (size_t c = 0; c < w.chosen_groups.size(); ++c)
                if (w.chosen_groups[c] == j) w.small_vector[slot] = (*sol)[c];
            ++slot;
        }
        w.small_vector[q - 2] = 1;  // a0
    }

    w.lifted.assign(L.size(), 0);
    for (size_t c = 0; c < w.chosen_groups.size(); ++c)
        for (size_t idx : w.groups[w.chosen_groups[c]]) w.lifted[idx] = (*sol)[c];
    if (L.points.back() != 0) throw std::logic_error("support does not end with zero");
    w.lifted[L.size() - 1] = 1;  // a0
    w.weight = hamming_weight(w.lifted);

    // Verify against the parity matrix of Gamma6^(i) and the membership
    // oracle; a failure here is a defect, not an input error.
    Poly g6 = goppa_family_polynomial(GoppaFamily::G6, ctx);
    Mat h = parity_check_standard(L, g6, i);
    std::vector<uint32_t> word(w.lifted.begin(), w.lifted.end());
    Mat row(ctx.field, 1, L.size());
    for (size_t c = 0; c < L.size(); ++c) row.at(0, c) = word[c];
    if (!syndromes_vanish(h, row)) throw std::logic_error("witness has nonzero syndrome");
    if (w.weight != size_t(i) * size_t(t + 1) + 1) throw std::logic_error("witness weight mismatch");
    return w;
}

struct Theorem1Check {
    bool ok = false;
    int64_t claimed = 0;                    // i(t+1)+1
    size_t witness_weight = 0;
    std::optional<int64_t> exhaustive_d;    // present when q^k fits the cap
    bool exhausted = false;
};

inline Theorem1Check theorem1_check(uint32_t q, uint32_t l, uint32_t i,
                                    uint64_t cap = uint64_t(1) << 36, unsigned threads = 0) {
    Theorem1Check res;
    res.claimed = theorem1_distance_bound(q, l, i);
    Theorem1Witness w = build_theorem1_witness(q, l, i);
    res.witness_weight = w.weight;
    CodeInstance c = make_family_code(CodeFamily::Gamma6, q, l, i, std::nullopt, G6Sign::Plus, threads);
    long double total = 1;
    bool fits = true;
    for (size_t x = 0; x < c.k; ++x) {
        total *= q;
        if (total > (long double)cap) {
            fits = false;
            break;
        }
    }
    if (fits) {
        DistanceResult d = min_distance_exact(generator_matrix(c, threads), cap, threads);
        res.exhaustive_d = d.d;
        res.exhausted = true;
        res.ok = res.witness_weight == size_t(res.claimed) && d.d && *d.d == res.claimed;
    } else {
        res.ok = res.witness_weight == size_t(res.claimed);
    }
    return res;
}

}  // namespace goppa
