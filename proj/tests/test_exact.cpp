#include <catch2/catch_amalgamated.hpp>

#include "ladprob/exact.hpp"

using namespace ladprob;

TEST_CASE("big_binomial small and huge arguments") {
    CHECK(big_binomial(ExactInt(5), 2) == 10);
    CHECK(big_binomial(ExactInt(5), 0) == 1);
    CHECK(big_binomial(ExactInt(4), 5) == 0);
    CHECK(big_binomial(ExactInt(-3), 1) == 0);

    ExactInt m = ExactInt(1) << 143;
    CHECK(big_binomial(m, 1) == m);
    CHECK(big_binomial(m, 2) == m * (m - 1) / 2);
    // Pascal recurrence on huge arguments
    CHECK(big_binomial(m, 3) == big_binomial(m - 1, 3) + big_binomial(m - 1, 2));
}

TEST_CASE("big_multinomial") {
    CHECK(big_multinomial(ExactInt(4), 1, 2) == 12);
    CHECK(big_multinomial(ExactInt(3), 2, 2) == 0);
    CHECK(big_multinomial(ExactInt(6), 0, 0) == 1);
}

TEST_CASE("ExactProb normalization and arithmetic") {
    auto p = ExactProb::ratio(2, 4);
    CHECK(p.num() == 1);
    CHECK(p.den() == 2);
    CHECK(p.complement() == ExactProb::ratio(1, 2));
    CHECK(p + p == ExactProb::one());
    CHECK(p * p == ExactProb::ratio(1, 4));
    CHECK(ExactProb::ratio(1, 3) < p);
    CHECK_THROWS_AS(ExactProb::ratio(1, 0), impossible_event);
    CHECK_THROWS_AS(ExactProb::ratio(3, 2), std::logic_error);
}

TEST_CASE("to_decimal rendering conventions") {
    CHECK(to_decimal(ExactProb::zero()) == "0");
    CHECK(to_decimal(ExactProb::one()) == "1");
    CHECK(to_decimal(ExactProb::ratio(1, 2)) == "0.5000");
    CHECK(to_decimal(ExactProb::ratio(1, 2), 2) == "0.50");
    CHECK(to_decimal(ExactProb::ratio(244, 1000000)) == "0.0002440");
    CHECK(to_decimal(ExactProb::ratio(105, ExactInt("10000000000000"))) == "1.05e-11");
    // near-one values switch to the 1 - epsilon convention (2 sig digits)
    ExactInt den("10000000000");
    CHECK(to_decimal(ExactProb::ratio(den - 4295, den)) == "1 - 4.3e-7");
    CHECK(to_decimal(ExactProb::ratio(9999, 10000), 1) == "1 - 1e-4");
    // near-one values switch to the epsilon form before the fixed path rounds
    CHECK(to_decimal(ExactProb::ratio(9995, 10000), 1) == "1 - 5e-4");
    // rounding that carries into the leading digit
    CHECK(to_decimal(ExactProb::ratio(999, 1000), 1) == "1");
    CHECK(to_decimal(ExactProb::ratio(99999, 100000000)) == "0.001000");
}

TEST_CASE("to_double") {
    CHECK(to_double(ExactProb::ratio(1, 2)) == Catch::Approx(0.5));
    CHECK(to_double(ExactProb::ratio(1, ExactInt("1000000000000000000000"))) ==
          Catch::Approx(1e-21));
    ExactInt big = ExactInt(1) << 400;
    CHECK(to_double(ExactProb::ratio(ExactInt(1) << 100, big)) ==
          Catch::Approx(std::ldexp(1.0, -300)));
}
