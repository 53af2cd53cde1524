#ifndef LADPROB_ASYMPTOTICS_HPP
#define LADPROB_ASYMPTOTICS_HPP

#include <cmath>
#include <cstdint>

#include "ladprob/exact.hpp"

namespace ladprob {

/// EGF regime: d_Y = d fixed, d_Z -> infinity, phi(z) = e^z - 1. Counts in
/// this vocabulary are normalized by n!/d_Z^n relative to the OGF counts and
/// carry the egf_ prefix to keep the two regimes apart.
namespace egf {

struct AsymptoticResult {
    ExactInt exact;        // sum_{i=0..d} (-1)^i C(d,i) 2^(d-i) (d-i)^n
    ExactInt leading;      // 2^d d^n
    ExactProb relative_gap; // |exact - leading| / leading
};

inline ExactInt pow_int(std::uint64_t base, std::uint64_t exp) {
    // 0^0 = 1 by the empty-product convention used throughout.
    ExactInt r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) r *= base;
    return r;
}

inline AsymptoticResult egf_rho(std::uint64_t d, std::uint64_t n) {
    if (d < 1) throw std::domain_error("egf_rho requires d >= 1");
    AsymptoticResult res;
    res.exact = 0;
    for (std::uint64_t i = 0; i <= d; ++i) {
        ExactInt term = big_binomial(ExactInt(d), i) * (ExactInt(1) << (d - i)) *
                        pow_int(d - i, n);
        if (i % 2 == 0) res.exact += term; else res.exact -= term;
    }
    res.leading = (ExactInt(1) << d) * pow_int(d, n);
    ExactInt gap = res.exact - res.leading;
    if (gap < 0) gap = -gap;
    res.relative_gap = gap <= res.leading ? ExactProb::ratio(gap, res.leading)
                                          : ExactProb::one();
    return res;
}

/// Closed forms for the two-group EGF count at d in {2, 3, 4}.
inline ExactInt egf_rho_groups_closed(std::uint64_t d, std::uint64_t n1, std::uint64_t n2) {
    if (n1 < 1 || n2 < 1) throw std::domain_error("group sizes must be >= 1");
    switch (d) {
    case 2:
        return 2;
    case 3:
        return 3 * ((ExactInt(1) << n1) + (ExactInt(1) << n2)) - 6;
    case 4:
        return 4 * (pow_int(3, n1) + pow_int(3, n2)) + 6 * (ExactInt(1) << (n1 + n2)) -
               12 * ((ExactInt(1) << n1) + (ExactInt(1) << n2) - 1);
    default:
        throw std::domain_error("closed form only available for d in {2, 3, 4}");
    }
}

/// Decay exponent beta of the d = 3 ratio rho(n1,n2)/rho(n) ~ (3/8) e^(-beta n)
/// under n1 = alpha n, alpha > 1/2. Not a probability.
inline double d3_ratio_exponent(double alpha) {
    return std::log(3.0) - alpha * std::log(2.0);
}

} // namespace egf
} // namespace ladprob

#endif
