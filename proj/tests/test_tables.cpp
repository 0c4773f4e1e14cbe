#include <catch2/catch_amalgamated.hpp>

#include "goppa/tables.hpp"

using namespace goppa;
using namespace goppa::tables;

TEST_CASE("embedded ternary code table") {
    TableReport rep = run_table(3);
    CHECK(rep.all_pass);
    CHECK(rep.note.find("x^10-1") != std::string::npos);
    REQUIRE(rep.rows.size() == 5);
    // the d column values and the verbatim best-known references
    int64_t ks[] = {16, 15, 11, 7, 5};
    int64_t ds[] = {31, 33, 35, 42, 44};
    int64_t refs[] = {31, 32, 36, 42, 45};
    for (size_t i = 0; i < 5; ++i) {
        const auto& cells = rep.rows[i].cells;
        REQUIRE(cells[1].computed == ks[i]);
        REQUIRE(cells[2].computed == ds[i]);
        REQUIRE(cells[3].paper == refs[i]);
        REQUIRE(cells[3].verdict == "REF");
    }
}

TEST_CASE("chain tables run clean") {
    for (int id : {5, 6, 7}) {
        TableReport rep = run_table(id);
        INFO("table " << id);
        CHECK(rep.all_pass);
        for (const auto& row : rep.rows)
            for (const auto& c : row.cells) REQUIRE(c.verdict != "FAIL");
    }
}

TEST_CASE("chain table constants carry the published rows") {
    const ChainTable& t5 = chain_table(5);
    CHECK(t5.n == std::array<int64_t, 5>{73, 72, 72, 71, 71});
    CHECK(t5.k[0] == std::array<int64_t, 5>{42, 41, 39, 39, 37});
    CHECK(t5.k[1] == std::array<int64_t, 5>{17, 16, 16, 16, 16});
    const ChainTable& t7 = chain_table(7);
    CHECK(t7.k[3] == std::array<int64_t, 5>{257, 256, 256, 256, 256});
    CHECK_THROWS_AS(chain_table(2), std::invalid_argument);
}

TEST_CASE("extended rows are skipped by default") {
    TableOptions opt;
    TableReport rep = run_dim_table(2, opt);
    bool found_skip = false;
    for (const auto& row : rep.rows)
        if (row.skipped) {
            found_skip = true;
            for (const auto& c : row.cells) REQUIRE(c.verdict == "SKIPPED(extended)");
        }
    CHECK(found_skip);
    CHECK(rep.rows.size() == 7);
}

TEST_CASE("csv output is stable and well-formed") {
    TableReport rep = run_table(5);
    std::string csv = to_csv(rep);
    CHECK(csv.rfind("table,row,cell,paper,computed,verdict\n", 0) == 0);
    CHECK(csv.find("FAIL") == std::string::npos);
    CHECK(csv.find("summary,all_pass,1") != std::string::npos);
    // byte-identical on a second run
    CHECK(to_csv(run_table(5)) == csv);
    CHECK_THROWS_AS(run_table(9), std::invalid_argument);
}
