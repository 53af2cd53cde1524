#include <catch2/catch_amalgamated.hpp>

#include "ladprob/model_m1.hpp"
#include "ladprob/model_m2.hpp"
#include "ladprob/oracle.hpp"

using namespace ladprob;

TEST_CASE("m1 exhaustive tallies match the closed-form counts") {
    AlphaCache cache;
    for (unsigned y : {0u, 1u, 2u})
        for (unsigned z : {0u, 1u, 2u}) {
            DomainSpec spec{y, z};
            std::uint64_t dx = spec.d_x().convert_to<std::uint64_t>();
            for (std::uint64_t n = 1; n <= std::min<std::uint64_t>(4, dx); ++n) {
                auto t = oracle::enumerate_m1(n, spec);
                CHECK(t.total == m1::rho_total(n, spec, cache));
                for (auto& [k, c] : t.by_k) CHECK(c == m1::beta(k, n, spec, cache));
                for (auto& [sizes, c] : t.by_group_sizes)
                    if (sizes.first >= 1 && sizes.second >= 1)
                        CHECK(c == m1::rho_groups(sizes.first, sizes.second, spec, cache));
                for (auto& [ks, c] : t.by_k1_k2)
                    if (ks.first >= 1 && ks.second >= 1)
                        CHECK(c == m1::lambda_coeff(ks.first, ks.second, n, spec, cache));
                for (auto& [j, c] : t.by_joint)
                    if (j[1] >= 1 && j[2] >= 1)
                        CHECK(c == m1::delta_coeff(j[1], j[2], j[0], n - j[0], spec, cache));
            }
        }
}

TEST_CASE("m2 exhaustive tallies match the intersection numerators") {
    AlphaCache cache;
    for (unsigned y : {0u, 1u, 2u})
        for (unsigned z : {0u, 1u, 2u}) {
            DomainSpec spec{y, z};
            std::uint64_t dx = spec.d_x().convert_to<std::uint64_t>();
            for (std::uint64_t n1 = 1; n1 <= 3; ++n1)
                for (std::uint64_t n2 = 1; n1 + n2 <= std::min<std::uint64_t>(5, dx); ++n2) {
                    auto t = oracle::enumerate_m2(n1, n2, spec);
                    ExactInt rho = m2::rho_groups_m2(n1, n2, spec);
                    CHECK(t.total == rho);
                    m2::AvCache av(n1, n2, spec, cache);
                    std::uint64_t u_max = std::min<std::uint64_t>(
                        {n1, n2, spec.d_y().convert_to<std::uint64_t>()});
                    for (std::uint64_t u = 0; u <= u_max; ++u) {
                        ExactInt count = 0;
                        if (auto it = t.by_intersection.find(u); it != t.by_intersection.end())
                            count = it->second;
                        CHECK(ExactProb::ratio(count, rho) ==
                              m2::prob_intersection_eq(av, u));
                    }
                }
        }
}

TEST_CASE("exhaustive caps") {
    CHECK_THROWS_AS(oracle::enumerate_m1(3, DomainSpec{3, 2}), cap_exceeded); // d_X = 32
    CHECK_THROWS_AS(oracle::enumerate_m1(9, DomainSpec{2, 2}), cap_exceeded);
    CHECK_THROWS_AS(oracle::enumerate_m2(5, 5, DomainSpec{2, 2}), cap_exceeded);
    CHECK_THROWS_AS(oracle::enumerate_m1(5, DomainSpec{1, 1}), impossible_event); // n > d_X
}

TEST_CASE("monte carlo m2 agrees with exact probabilities") {
    AlphaCache cache;
    DomainSpec spec{1, 1};
    const std::uint64_t n1 = 2, n2 = 2;
    auto r = oracle::monte_carlo_m2(n1, n2, spec, 40000, 12345);
    CHECK(r.algorithm == "m2-direct");
    CHECK(r.samples == 40000);
    m2::AvCache av(n1, n2, spec, cache);
    for (std::uint64_t u = 0; u <= 2; ++u) {
        double exact = to_double(m2::prob_intersection_eq(av, u));
        std::uint64_t c = r.by_intersection.count(u) ? r.by_intersection.at(u) : 0;
        double se = std::sqrt(exact * (1 - exact) / double(r.samples));
        CHECK(std::abs(r.frequency(c) - exact) <= 5 * se + 1e-12);
    }
}

TEST_CASE("monte carlo m1 rejection agrees with exact probabilities") {
    AlphaCache cache;
    DomainSpec spec{1, 1};
    const std::uint64_t n = 3;
    auto r = oracle::monte_carlo_m1(n, spec, 40000, 999);
    CHECK(r.algorithm == "m1-rejection");
    CHECK(r.attempts >= r.samples);
    ExactInt rho = m1::rho_total(n, spec, cache);
    for (auto& [k, c] : r.by_k) {
        double exact = to_double(ExactProb::ratio(m1::beta(k, n, spec, cache), rho));
        double se = std::sqrt(exact * (1 - exact) / double(r.samples));
        CHECK(std::abs(r.frequency(c) - exact) <= 5 * se + 1e-12);
    }
    CHECK_THROWS_AS(oracle::monte_carlo_m1(5, DomainSpec{1, 1}, 10, 1), impossible_event);
}

TEST_CASE("monte carlo is reproducible per seed") {
    DomainSpec spec{2, 1};
    auto a = oracle::monte_carlo_m2(2, 3, spec, 5000, 7);
    auto b = oracle::monte_carlo_m2(2, 3, spec, 5000, 7);
    CHECK(a.by_intersection == b.by_intersection);
    auto c = oracle::monte_carlo_m2(2, 3, spec, 5000, 8);
    CHECK(a.by_intersection != c.by_intersection);
}
