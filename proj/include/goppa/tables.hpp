#pragma once

// Embedded table data from the source of the construction, plus the engine
// that recomputes every cell the library can compute and grades it
// PASS/FAIL.  Paper values are constants here and are never overwritten by
// computed ones; the tool is a verifier, not a regenerator.

#include <array>
#include <span>
#include <sstream>

#include "chains.hpp"
#include "distance.hpp"

namespace goppa::tables {

// Tables II and IV: parameters of Gamma6^(q) and Gamma1^(q).
struct DimTableRow {
    uint32_t q, l;
    int64_t n, k_est, k_real, d_est;
    bool extended;  // heavy instance, off by default
};

inline constexpr DimTableRow kTable2[] = {
    {3, 2, 71, 15, 16, 31, false},      {3, 3, 701, 401, 401, 85, false},
    {3, 4, 6479, 5215, 5215, 247, false}, {5, 2, 599, 247, 256, 131, false},
    {5, 3, 15499, 12571, 12571, 631, false}, {7, 2, 2351, 1271, 1296, 351, false},
    {11, 2, 14519, 9919, 10000, 1343, true},
};

inline constexpr DimTableRow kTable4[] = {
    {3, 2, 73, 16, 17, 25, false},      {3, 3, 703, 402, 402, 79, false},
    {3, 4, 6481, 5216, 5216, 241, false}, {5, 2, 601, 248, 257, 121, false},
    {5, 3, 15501, 12572, 12572, 621, false}, {7, 2, 2353, 1272, 1297, 337, false},
    {11, 2, 14522, 9921, 10002, 1331, true},
};

// Table III: ternary codes embedded in Gamma6(L6, (x^10 - 1)^3) over
// GF(81) by extra factors (x-1)^i.  The final column is the best-known-
// codes reference value, stored verbatim.
struct EmbeddedRow {
    uint32_t extra_power;
    int64_t n, k, d, d_best_known;
};

inline constexpr EmbeddedRow kTable3[] = {
    {0, 71, 16, 31, 31}, {1, 71, 15, 33, 32}, {4, 71, 11, 35, 36},
    {10, 71, 7, 42, 42}, {13, 71, 5, 44, 45},
};

// Tables V-VIII: dimensions of the five chain columns
// (Gamma1, Gamma1*, Gamma2=Gamma3, C3*=Gamma4*, Gamma5=Gamma6)
// for cumulativity orders 1..q-1.
struct ChainTable {
    uint32_t q, l;
    std::array<int64_t, 5> n;
    std::vector<std::array<int64_t, 5>> k;  // row index = order - 1
};

inline const ChainTable& chain_table(int id) {
    static const ChainTable t5{3, 2, {73, 72, 72, 71, 71},
                               {{42, 41, 39, 39, 37}, {17, 16, 16, 16, 16}}};
    static const ChainTable t6{3, 3, {703, 702, 702, 701, 701},
                               {{549, 548, 545, 545, 542}, {402, 401, 401, 401, 401}}};
    static const ChainTable t7{5, 2, {601, 600, 600, 599, 599},
                               {{506, 505, 503, 503, 501},
                                {412, 411, 409, 409, 407},
                                {322, 321, 319, 319, 317},
                                {257, 256, 256, 256, 256}}};
    static const ChainTable t8{7, 2, {2353, 2352, 2352, 2351, 2351},
                               {{2162, 2161, 2159, 2159, 2157},
                                {1972, 1971, 1969, 1969, 1967},
                                {1786, 1785, 1783, 1783, 1781},
                                {1604, 1603, 1601, 1601, 1599},
                                {1426, 1425, 1423, 1423, 1421},
                                {1297, 1296, 1296, 1296, 1296}}};
    switch (id) {
        case 5: return t5;
        case 6: return t6;
        case 7: return t7;
        case 8: return t8;
    }
    throw std::invalid_argument("no chain table with that id");
}

struct Cell {
    std::string name;
    int64_t paper = 0;
    std::optional<int64_t> computed;
    std::string verdict;  // PASS | FAIL | SKIPPED(extended) | SKIPPED(cap) | REF
};

struct TableRowReport {
    std::string label;
    std::vector<Cell> cells;
    bool pass = true;     // SKIPPED and REF cells do not fail a row
    bool skipped = false;
};

struct TableReport {
    int id = 0;
    std::string note;
    std::vector<TableRowReport> rows;
    bool all_pass = true;
};

struct TableOptions {
    bool include_extended = false;
    unsigned threads = 0;
    uint64_t cap = uint64_t(1) << 36;
    uint64_t seed = 1;
};

namespace detail {

inline Cell exact_cell(std::string name, int64_t paper, int64_t computed) {
    return {std::move(name), paper, computed, computed == paper ? "PASS" : "FAIL"};
}

// Tables V-VIII entries are rank-computed at order q-1 and chain estimates
// below it, so the row gate is equality at q-1 and dominance before that.
inline Cell chain_cell(std::string name, int64_t paper, int64_t computed, bool require_equal) {
    bool ok = require_equal ? computed == paper : computed >= paper;
    return {std::move(name), paper, computed, ok ? "PASS" : "FAIL"};
}

inline void finish_row(TableRowReport& row, TableReport& rep) {
    for (const Cell& c : row.cells)
        if (c.verdict == "FAIL") row.pass = false;
    rep.all_pass = rep.all_pass && row.pass;
    rep.rows.push_back(std::move(row));
}

inline bool pow_fits(uint32_t q, size_t k, uint64_t cap) {
    long double total = 1;
    for (size_t i = 0; i < k; ++i) {
        total *= q;
        if (total > (long double)cap) return false;
    }
    return true;
}

}  // namespace detail

inline TableReport run_dim_table(int id, const TableOptions& opt) {
    bool six = id == 2;
    TableReport rep;
    rep.id = id;
    rep.note = six ? "Gamma6^(q) = (x^(t+1)+1)^q, t = q^l" : "Gamma1^(q) = (x^(t-1)+1)^q, t = q^l";
    for (const DimTableRow& r : (six ? std::span(kTable2) : std::span(kTable4))) {
        TableRowReport row;
        row.label = "q=" + std::to_string(r.q) + " l=" + std::to_string(r.l);
        if (r.extended && !opt.include_extended) {
            row.skipped = true;
            const std::pair<const char*, int64_t> vals[] = {
                {"n", r.n}, {"k_est", r.k_est}, {"k_real", r.k_real}, {"d_est", r.d_est}};
            for (const auto& [nm, pv] : vals)
                row.cells.push_back({nm, pv, std::nullopt, "SKIPPED(extended)"});
            detail::finish_row(row, rep);
            continue;
        }
        int64_t k_est = six ? redundancy_accounting(r.q, r.l, r.q).k_bound
                            : gamma1_q_dim_estimate(r.q, r.l);
        int64_t d_est = six ? theorem1_distance_bound(r.q, r.l, r.q)
                            : gamma1_distance_bound(r.q, r.l, r.q);
        CodeInstance c = make_family_code(six ? CodeFamily::Gamma6 : CodeFamily::Gamma1, r.q, r.l,
                                          r.q, std::nullopt, G6Sign::Plus, opt.threads);
        row.cells.push_back(detail::exact_cell("n", r.n, int64_t(c.n)));
        row.cells.push_back(detail::exact_cell("k_est", r.k_est, k_est));
        row.cells.push_back(detail::exact_cell("k_real", r.k_real, int64_t(c.k)));
        row.cells.push_back(detail::exact_cell("d_est", r.d_est, d_est));
        detail::finish_row(row, rep);
    }
    return rep;
}

// The x^(t+1)+1 polynomial of the family definition cannot carry the
// (x-1)^i factor (1 stays in the support there); the x^(t+1)-1 variant can,
// and it is the one that reproduces the table.  Both variants are tried and
// the one used is reported.
inline TableReport run_embedded_table(const TableOptions& opt) {
    TableReport rep;
    rep.id = 3;
    FamilyContext ctx = make_family_context(3, 2);
    SupportSet plus_L = build_support(SupportVariant::L6, ctx, G6Sign::Plus);
    bool plus_valid = !plus_L.contains(1);
    SupportSet L = build_support(SupportVariant::L6, ctx, G6Sign::Minus);
    rep.note = std::string("variant x^10-1 used; x^10+1 ") +
               (plus_valid ? "also valid" : "rejected: (x-1) vanishes on its support");
    Poly g = goppa_family_polynomial(GoppaFamily::G6, ctx, G6Sign::Minus);
    for (const EmbeddedRow& r : kTable3) {
        TableRowReport row;
        row.label = "i=" + std::to_string(r.extra_power);
        std::optional<Poly> extra;
        if (r.extra_power > 0) extra = Poly::linear(ctx.field.get(), 1).pow(r.extra_power);
        CodeInstance c = make_code(L, g, 3, extra, opt.threads);
        row.cells.push_back(detail::exact_cell("n", r.n, int64_t(c.n)));
        row.cells.push_back(detail::exact_cell("k", r.k, int64_t(c.k)));
        if (detail::pow_fits(3, c.k, opt.cap)) {
            DistanceResult d = min_distance_exact(generator_matrix(c, opt.threads), opt.cap, opt.threads);
            row.cells.push_back(detail::exact_cell("d", r.d, *d.d));
        } else {
            row.cells.push_back({"d", r.d, std::nullopt, "SKIPPED(cap)"});
        }
        row.cells.push_back({"d_best_known", r.d_best_known, std::nullopt, "REF"});
        detail::finish_row(row, rep);
    }
    return rep;
}

inline TableReport run_chain_table(int id, const TableOptions& opt) {
    const ChainTable& t = chain_table(id);
    TableReport rep;
    rep.id = id;
    rep.note = "q=" + std::to_string(t.q) + " l=" + std::to_string(t.l) +
               "; dimensions per order, equality required at order q-1";
    static const char* col[] = {"gamma1", "gamma1*", "gamma2=gamma3", "c3*=gamma4*",
                                "gamma5=gamma6"};
    FamilyContext ctx = make_family_context(t.q, t.l);
    {
        TableRowReport row;
        row.label = "n";
        SupportSet L1 = build_support(SupportVariant::L1, ctx);
        SupportSet L3 = build_support(SupportVariant::L3, ctx);
        SupportSet L6 = build_support(SupportVariant::L6, ctx);
        int64_t ns[5] = {int64_t(L1.size()), int64_t(L1.size()) - 1, int64_t(L3.size()),
                         int64_t(L3.size()) - 1, int64_t(L6.size())};
        for (int c = 0; c < 5; ++c) row.cells.push_back(detail::exact_cell(col[c], t.n[c], ns[c]));
        detail::finish_row(row, rep);
    }
    for (size_t i = 1; i <= t.k.size(); ++i) {
        TableRowReport row;
        row.label = "i=" + std::to_string(i);
        auto code = [&](CodeFamily fam) {
            return make_family_code(fam, ctx, uint32_t(i), std::nullopt, G6Sign::Plus, opt.threads);
        };
        CodeInstance g3 = code(CodeFamily::Gamma3);
        CodeInstance c3s = shorten_redundancy(g3, opt.threads);
        int64_t pairs[5][2] = {
            {int64_t(code(CodeFamily::Gamma1).k), -1},
            {int64_t(code(CodeFamily::Gamma1Star).k), -1},
            {int64_t(code(CodeFamily::Gamma2).k), int64_t(g3.k)},
            {int64_t(c3s.k), int64_t(code(CodeFamily::Gamma4Star).k)},
            {int64_t(code(CodeFamily::Gamma5).k), int64_t(code(CodeFamily::Gamma6).k)},
        };
        bool equal_required = i + 1 >= t.q;  // order q-1
        for (int c = 0; c < 5; ++c) {
            Cell cell = detail::chain_cell(col[c], t.k[i - 1][c], pairs[c][0], equal_required);
            if (pairs[c][1] >= 0 && pairs[c][1] != pairs[c][0]) cell.verdict = "FAIL";
            row.cells.push_back(cell);
        }
        detail::finish_row(row, rep);
    }
    return rep;
}

inline TableReport run_table(int id, const TableOptions& opt = {}) {
    switch (id) {
        case 2:
        case 4: return run_dim_table(id, opt);
        case 3: return run_embedded_table(opt);
        case 5:
        case 6:
        case 7:
        case 8: return run_chain_table(id, opt);
    }
    throw std::invalid_argument("table id must be in 2..8");
}

inline std::string to_csv(const TableReport& rep) {
    std::ostringstream os;
    os << "table,row,cell,paper,computed,verdict\n";
    for (const TableRowReport& row : rep.rows)
        for (const Cell& c : row.cells) {
            os << rep.id << ',' << row.label << ',' << c.name << ',' << c.paper << ',';
            if (c.computed) os << *c.computed;
            else os << '-';
            os << ',' << c.verdict << '\n';
        }
    os << rep.id << ",summary,all_pass," << (rep.all_pass ? 1 : 0) << ",-,"
       << (rep.all_pass ? "PASS" : "FAIL") << '\n';
    return os.str();
}

}  // namespace goppa::tables
