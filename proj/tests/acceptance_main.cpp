// Acceptance suite: one line per criterion, PASS or FAIL, nonzero exit on
// any failure.  Every expected value is pinned here, in code.

#include <cstdarg>
#include <cstdio>
#include <cstring>
#include <sstream>

#include "goppa/tables.hpp"

using namespace goppa;

namespace {

int failures = 0;
bool criterion_ok = true;

void sub(bool ok, const char* fmt, ...) {
    if (!ok) {
        va_list ap;
        va_start(ap, fmt);
        printf("      FAIL: ");
        vprintf(fmt, ap);
        printf("\n");
        va_end(ap);
        criterion_ok = false;
    }
}

void criterion(int id, const char* title) {
    printf("  criterion %d: %-58s %s\n", id, title, criterion_ok ? "PASS" : "FAIL");
    if (!criterion_ok) ++failures;
    criterion_ok = true;
}

struct DimCase {
    uint32_t q, l;
    size_t k;
};

}  // namespace

static void criterion_1_2() {
    const DimCase t2[] = {{3, 2, 16}, {3, 3, 401}, {3, 4, 5215},
                          {5, 2, 256}, {5, 3, 12571}, {7, 2, 1296}};
    for (const auto& c : t2) {
        CodeInstance code = make_family_code(CodeFamily::Gamma6, c.q, c.l, c.q);
        sub(code.k == c.k, "table II (%u,%u): k_real=%zu expected %zu", c.q, c.l, code.k, c.k);
    }
    criterion(1, "table II dimensions by rank");

    const DimCase t4[] = {{3, 2, 17}, {3, 3, 402}, {3, 4, 5216},
                          {5, 2, 257}, {5, 3, 12572}, {7, 2, 1297}};
    for (const auto& c : t4) {
        CodeInstance code = make_family_code(CodeFamily::Gamma1, c.q, c.l, c.q);
        sub(code.k == c.k, "table IV (%u,%u): k_real=%zu expected %zu", c.q, c.l, code.k, c.k);
    }
    criterion(2, "table IV dimensions by rank");
}

static void criterion_3() {
    struct EstCase {
        uint32_t q, l;
        int64_t est2, est4;
    };
    const EstCase cases[] = {{3, 2, 15, 16},     {5, 2, 247, 248},     {7, 2, 1271, 1272},
                             {11, 2, 9919, 9921}, {3, 3, 401, 402},     {3, 4, 5215, 5216},
                             {5, 3, 12571, 12572}};
    for (const auto& c : cases) {
        int64_t e2 = redundancy_accounting(c.q, c.l, c.q).k_bound;
        int64_t e4 = gamma1_q_dim_estimate(c.q, c.l);
        sub(e2 == c.est2, "table II estimate (%u,%u): %lld expected %lld", c.q, c.l,
            (long long)e2, (long long)c.est2);
        sub(e4 == c.est4,
            "table IV estimate (%u,%u): %lld expected %lld"
            "%s",
            c.q, c.l, (long long)e4, (long long)c.est4,
            c.q == 11 ? "  [source defect: the chain rule k1=k6_est+1 the other six rows follow "
                        "gives 9920; the printed 9921 follows no consistent formula]"
                      : "");
    }
    criterion(3, "table II/IV estimation columns from formulas alone");
}

static void criterion_4() {
    FamilyContext ctx = make_family_context(3, 2);
    SupportSet plus_support = build_support(SupportVariant::L6, ctx, G6Sign::Plus);
    sub(plus_support.contains(1), "variant x^10+1 unexpectedly excludes 1");
    printf("      variant report: x^10+1 cannot host (x-1)^i (1 lies in its support); "
           "x^10-1 used\n");
    SupportSet L = build_support(SupportVariant::L6, ctx, G6Sign::Minus);
    Poly g = goppa_family_polynomial(GoppaFamily::G6, ctx, G6Sign::Minus);
    struct Row {
        uint32_t i;
        size_t k;
        int64_t d;
    };
    const Row rows[] = {{0, 16, 31}, {1, 15, 33}, {4, 11, 35}, {10, 7, 42}, {13, 5, 44}};
    for (const Row& r : rows) {
        std::optional<Poly> extra;
        if (r.i > 0) extra = Poly::linear(ctx.field.get(), 1).pow(r.i);
        CodeInstance c = make_code(L, g, 3, extra);
        sub(c.k == r.k, "table III i=%u: k=%zu expected %zu", r.i, c.k, r.k);
        DistanceResult d = min_distance_exact(generator_matrix(c), uint64_t(1) << 36, 0);
        sub(d.d && *d.d == r.d, "table III i=%u: d=%lld expected %lld", r.i,
            (long long)(d.d ? *d.d : -1), (long long)r.d);
        sub(*d.d >= designed_distance(c.full_poly.degree()),
            "table III i=%u: d below the designed distance", r.i);
    }
    criterion(4, "table III exact minimum distances (variant x^10-1)");
}

static void criterion_5() {
    for (auto [i, expect] : {std::pair{2u, 13}, {3u, 19}}) {
        Theorem1Check c = theorem1_check(5, 1, i);
        sub(c.ok && c.exhausted && c.exhaustive_d && *c.exhaustive_d == expect,
            "(5,1) order %u: exact d %lld expected %d", i,
            (long long)(c.exhaustive_d ? *c.exhaustive_d : -1), expect);
    }
    for (uint32_t i = 2; i <= 5; ++i) {
        try {
            Theorem1Witness w = build_theorem1_witness(7, 2, i);
            sub(w.weight == size_t(i) * 50 + 1, "(7,2) order %u: witness weight %zu", i, w.weight);
        } catch (const std::exception& e) {
            sub(false, "(7,2) order %u: witness failed: %s", i, e.what());
        }
    }
    criterion(5, "theorem-1 distances: exhaustive at (5,1), witnesses at (7,2)");
}

static void criterion_6() {
    for (auto [q, l, table_id] :
         {std::tuple{3u, 2u, 5}, {3u, 3u, 6}, {5u, 2u, 7}, {7u, 2u, 8}}) {
        const tables::ChainTable& tab = tables::chain_table(table_id);
        for (uint32_t i = 1; i <= q; ++i) {
            ChainReport rep = verify_chain(q, l, i);
            for (const auto& r : rep.relations)
                sub(r.verified, "(%u,%u) order %u: relation %s", q, l, i, r.id.c_str());
            if (i > q - 1) continue;
            int64_t cols[5] = {int64_t(rep.families[0].k), int64_t(rep.families[1].k),
                               int64_t(rep.families[2].k), int64_t(rep.families[4].k),
                               int64_t(rep.families[6].k)};
            for (int c = 0; c < 5; ++c) {
                int64_t paper = tab.k[i - 1][size_t(c)];
                if (i == q - 1) {
                    sub(cols[c] == paper, "(%u,%u) order %u col %d: k=%lld table %lld", q, l, i, c,
                        (long long)cols[c], (long long)paper);
                } else {
                    sub(cols[c] >= paper, "(%u,%u) order %u col %d: k=%lld below table %lld", q, l,
                        i, c, (long long)cols[c], (long long)paper);
                    if (cols[c] > paper)
                        printf("      note: (%u,%u) order %u col %d exceeds the table: %lld > %lld\n",
                               q, l, i, c, (long long)cols[c], (long long)paper);
                }
            }
        }
    }
    criterion(6, "chain verification all-PASS with table dimensions");
}

static void criterion_7() {
    // layered vs flat parity, membership of generator rows, and the order
    // subcode chain, on every instance of the test grid
    struct GridEntry {
        uint32_t q, l, max_order;
    };
    for (const GridEntry& g : {GridEntry{3, 2, 3}, {5, 1, 5}}) {
        FamilyContext ctx = make_family_context(g.q, g.l);
        for (CodeFamily fam : {CodeFamily::Gamma1, CodeFamily::Gamma1Star, CodeFamily::Gamma2,
                               CodeFamily::Gamma3, CodeFamily::Gamma4Star, CodeFamily::Gamma5,
                               CodeFamily::Gamma6}) {
            CodeInstance prev;
            for (uint32_t j = 1; j <= g.max_order; ++j) {
                CodeInstance c = make_family_code(fam, ctx, j);
                sub(Mat::row_space_equal(c.h_ext, c.layered_parity()),
                    "(%u,%u) %s order %u: layered form differs", g.q, g.l, to_string(fam), j);
                Mat gen = generator_matrix(c);
                bool member = true;
                for (size_t r = 0; r < gen.rows(); ++r) {
                    std::vector<uint32_t> word(gen.row(r), gen.row(r) + gen.cols());
                    member = member && goppa_membership(c, word);
                }
                sub(member, "(%u,%u) %s order %u: generator row fails membership", g.q, g.l,
                    to_string(fam), j);
                if (j > 1)
                    sub(syndromes_vanish(prev.h_base, gen),
                        "(%u,%u) %s order %u: not a subcode of order %u", g.q, g.l,
                        to_string(fam), j, j - 1);
                prev = c;
            }
        }
    }

    // every exact distance computed at desk scale respects the Goppa bound
    for (auto [q, l, j] : {std::tuple{5u, 1u, 2u}, {5u, 1u, 3u}}) {
        CodeInstance c = make_family_code(CodeFamily::Gamma6, q, l, j);
        DistanceResult d = min_distance_exact(generator_matrix(c));
        sub(d.d && *d.d >= designed_distance(c.full_poly.degree()),
            "(%u,%u) order %u: exact d below designed distance", q, l, j);
    }

    // the (x-c)^q / (x-c)^{q-1} equality, exhaustively over GF(9), GF(27)
    // and GF(25) supports
    for (auto [q, m] : {std::pair{3u, 2u}, {3u, 3u}, {5u, 2u}}) {
        auto f = Field::make(q, m);
        for (uint32_t center : f->elements()) {
            SupportSet L{f, "punctured", {}};
            for (uint32_t v : f->elements())
                if (v != center) L.points.push_back(v);
            sub(verify_power_q_equiv(L, q, center), "GF(%u^%u) center %u: x^q vs x^(q-1) differ",
                q, m, center);
        }
    }
    criterion(7, "property suites (layered, membership, subcodes, power-q)");
}

static void criterion_8() {
    tables::TableOptions opt;
    std::string t1 = tables::to_csv(tables::run_table(5, opt));
    opt.threads = 2;
    std::string t2 = tables::to_csv(tables::run_table(5, opt));
    sub(t1 == t2, "table 5 output differs across runs/threads");

    auto chain_sig = [](const ChainReport& r) {
        std::ostringstream os;
        for (const auto& rel : r.relations)
            os << rel.id << '=' << rel.verified << ':' << rel.k_left << '/' << rel.k_right << ';';
        for (const auto& f : r.families) os << f.name << '=' << f.k << ';';
        return os.str();
    };
    sub(chain_sig(verify_chain(3, 2, 2, 1)) == chain_sig(verify_chain(3, 2, 2, 2)),
        "chain report differs across thread counts");

    CodeInstance c = make_family_code(CodeFamily::Gamma6, 5, 1, 2);
    Mat g = generator_matrix(c);
    DistanceResult d1 = min_distance_exact(g, uint64_t(1) << 36, 1);
    DistanceResult d2 = min_distance_exact(g, uint64_t(1) << 36, 3);
    sub(d1.d == d2.d && d1.enumerated == d2.enumerated, "mindist differs across thread counts");

    Theorem1Witness w1 = build_theorem1_witness(5, 1, 2);
    Theorem1Witness w2 = build_theorem1_witness(5, 1, 2);
    sub(w1.lifted == w2.lifted && w1.small_vector == w2.small_vector,
        "witness construction is not canonical");
    criterion(8, "determinism of gating commands");
}

int main() {
    printf("acceptance suite\n");
    criterion_1_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    if (failures == 0)
        printf("all criteria passed\n");
    else
        printf("%d criteria FAILED\n", failures);
    return failures;
}
