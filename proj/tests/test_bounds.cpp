#include <catch2/catch_amalgamated.hpp>

#include "goppa/bounds.hpp"

using namespace goppa;

TEST_CASE("delta accounting identity") {
    // Delta_j is the plain sum of the per-layer deletions delta_v = l + 2lv.
    for (uint32_t q : {3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u})
        for (uint32_t l : {1u, 2u, 3u})
            for (uint32_t j = 1; j < q; ++j) {
                BoundReport r = redundancy_accounting(q, l, j);
                int64_t sum = 0;
                for (uint32_t v = 1; v <= j; ++v) sum += int64_t(l) + 2 * int64_t(l) * v;
                REQUIRE(r.Delta == sum);
                REQUIRE(r.Delta == int64_t(l) * j * (j + 2));
                REQUIRE(r.delta.front() == 3 * int64_t(l));
            }
}

TEST_CASE("gamma6 dimension bounds reproduce the estimation column") {
    CHECK(redundancy_accounting(3, 2, 3).k_bound == 15);
    CHECK(redundancy_accounting(3, 3, 3).k_bound == 401);
    CHECK(redundancy_accounting(3, 4, 3).k_bound == 5215);
    CHECK(redundancy_accounting(5, 2, 5).k_bound == 247);
    CHECK(redundancy_accounting(5, 3, 5).k_bound == 12571);
    CHECK(redundancy_accounting(7, 2, 7).k_bound == 1271);
    CHECK(redundancy_accounting(11, 2, 11).k_bound == 9919);
    CHECK_THROWS_AS(redundancy_accounting(3, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(redundancy_accounting(3, 2, 4), std::invalid_argument);
}

TEST_CASE("theta appears only from order q-1 on") {
    BoundReport low = redundancy_accounting(5, 2, 3);
    CHECK_FALSE(low.theta.has_value());
    BoundReport high = redundancy_accounting(5, 2, 4);
    REQUIRE(high.theta.has_value());
    CHECK(*high.theta == 16);  // (q-1) * 2l
    CHECK(redundancy_accounting(5, 2, 5).r_bound == high.r_bound);
}

TEST_CASE("low-order bounds match the dependence tables") {
    // (3,2): i=1 row ends at 37; the computed rank equals it exactly.
    CHECK(redundancy_accounting(3, 2, 1).k_bound == 37);
    CHECK(redundancy_accounting(5, 2, 1).k_bound == 501);
    CHECK(redundancy_accounting(5, 2, 2).k_bound == 407);
    CHECK(redundancy_accounting(5, 2, 3).k_bound == 317);
    CHECK(redundancy_accounting(7, 2, 5).k_bound == 1421);
    CHECK(redundancy_accounting(3, 3, 1).k_bound == 542);
}

TEST_CASE("gamma1 estimate is the gamma6 bound plus one") {
    CHECK(gamma1_q_dim_estimate(3, 2) == 16);
    CHECK(gamma1_q_dim_estimate(3, 3) == 402);
    CHECK(gamma1_q_dim_estimate(3, 4) == 5216);
    CHECK(gamma1_q_dim_estimate(5, 2) == 248);
    CHECK(gamma1_q_dim_estimate(5, 3) == 12572);
    CHECK(gamma1_q_dim_estimate(7, 2) == 1272);
}

TEST_CASE("chain estimate propagation") {
    ChainEstimates e = chain_dim_estimates(3, 2, 1);
    CHECK(e.as_vector() == std::vector<int64_t>{42, 41, 39, 39, 37});
    ChainEstimates f = chain_dim_estimates(7, 2, 1);
    CHECK(f.as_vector() == std::vector<int64_t>{2162, 2161, 2159, 2159, 2157});
    // at order q-1 the chain collapses onto the theta-improved gamma6 bound
    ChainEstimates g = chain_dim_estimates(5, 2, 4);
    CHECK(g.as_vector() == std::vector<int64_t>{248, 247, 247, 247, 247});
    ChainEstimates h = chain_dim_estimates(3, 2, 2);
    CHECK(h.as_vector() == std::vector<int64_t>{16, 15, 15, 15, 15});
}

TEST_CASE("generic dimension bounds") {
    GenericDimBound a = generic_dim_bound(71, 4, 30, 3, 10);
    CHECK(a.lemma2 == 71 - 120);
    REQUIRE(a.lemma3.has_value());
    CHECK(*a.lemma3 == -9);
    CHECK(clamp_display(*a.lemma3) == 0);
    CHECK(generic_dim_bound(71, 4, 10).lemma2 == 31);
    // Gamma(L, G) with deg 1 and n = q^m - 1
    CHECK(generic_dim_bound(80, 4, 1).lemma2 == 76);
}

TEST_CASE("distance bounds") {
    CHECK(theorem1_distance_bound(3, 2, 3) == 31);
    CHECK(theorem1_distance_bound(5, 2, 5) == 131);
    CHECK(theorem1_distance_bound(3, 3, 3) == 85);
    CHECK(theorem1_distance_bound(11, 2, 11) == 1343);
    CHECK(gamma1_distance_bound(3, 2, 3) == 25);
    CHECK(gamma1_distance_bound(7, 2, 7) == 337);
}
