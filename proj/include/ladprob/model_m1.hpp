#ifndef LADPROB_MODEL_M1_HPP
#define LADPROB_MODEL_M1_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ladprob/alpha.hpp"
#include "ladprob/exact.hpp"

namespace ladprob {

/// Size knowledge attached to an instance or query. Only n and the domain
/// split are mandatory; the M1 cases dictate which of the rest must be set.
struct SizeProfile {
    std::optional<std::uint64_t> n, n1, n2, k, k1, k2;
    DomainSpec spec;
};

enum class M1Case { A, B, C, D, E, F };

inline M1Case m1_case_from_string(const std::string& s) {
    if (s.size() == 1 && s[0] >= 'A' && s[0] <= 'F')
        return static_cast<M1Case>(s[0] - 'A');
    if (s.size() == 1 && s[0] >= 'a' && s[0] <= 'f')
        return static_cast<M1Case>(s[0] - 'a');
    throw parse_error("unknown M1 case '" + s + "' (expected A..F)");
}

namespace m1 {

/// Total count of instances of size n split into two projection-disjoint
/// groups: sum_k 2^k C(d_Y, k) alpha(k; n).
inline ExactInt rho_total(std::uint64_t n, const DomainSpec& spec,
                          AlphaCache& cache = default_alpha_cache()) {
    if (n < 1) throw std::domain_error("rho_total requires n >= 1");
    const ExactInt dy = spec.d_y();
    ExactInt sum = 0;
    ExactInt two_k = 1;
    for (std::uint64_t k = 1; k <= n; ++k) {
        two_k *= 2;
        if (dy < k) break;
        sum += two_k * big_binomial(dy, k) * alpha(k, n, spec, cache);
    }
    return sum;
}

/// Count with both group sizes known: sum over k1, k2 >= 1 of
/// C(d_Y; k1, k2) alpha(k1; n1) alpha(k2; n2).
inline ExactInt rho_groups(std::uint64_t n1, std::uint64_t n2, const DomainSpec& spec,
                           AlphaCache& cache = default_alpha_cache()) {
    if (n1 < 1 || n2 < 1) throw std::domain_error("rho_groups requires n1, n2 >= 1");
    const ExactInt dy = spec.d_y();
    ExactInt sum = 0;
    for (std::uint64_t k1 = 1; k1 <= n1 && dy >= k1; ++k1) {
        ExactInt a1 = alpha(k1, n1, spec, cache);
        if (a1 == 0) continue;
        for (std::uint64_t k2 = 1; k2 <= n2 && dy >= ExactInt(k1) + k2; ++k2) {
            ExactInt a2 = alpha(k2, n2, spec, cache);
            if (a2 == 0) continue;
            sum += big_multinomial(dy, k1, k2) * a1 * a2;
        }
    }
    return sum;
}

/// Case (C): instances of size n whose projection has size k.
inline ExactInt beta(std::uint64_t k, std::uint64_t n, const DomainSpec& spec,
                     AlphaCache& cache = default_alpha_cache()) {
    if (n < 1) throw std::domain_error("beta requires n >= 1");
    return (ExactInt(1) << k) * big_binomial(spec.d_y(), k) * alpha(k, n, spec, cache);
}

/// Case (D): group projection sizes known, total size n.
inline ExactInt lambda_coeff(std::uint64_t k1, std::uint64_t k2, std::uint64_t n,
                             const DomainSpec& spec,
                             AlphaCache& cache = default_alpha_cache()) {
    if (k1 < 1 || k2 < 1) throw std::domain_error("lambda requires k1, k2 >= 1");
    return big_multinomial(spec.d_y(), k1, k2) * alpha(k1 + k2, n, spec, cache);
}

/// Case (E): group sizes and total projection size known. k = 1 is
/// impossible because both group projections are non-empty.
inline ExactInt gamma_coeff(std::uint64_t k, std::uint64_t n1, std::uint64_t n2,
                            const DomainSpec& spec,
                            AlphaCache& cache = default_alpha_cache()) {
    if (n1 < 1 || n2 < 1) throw std::domain_error("gamma requires n1, n2 >= 1");
    if (k < 2) return 0;
    const ExactInt dy = spec.d_y();
    ExactInt sum = 0;
    for (std::uint64_t k1 = 1; k1 < k; ++k1) {
        std::uint64_t k2 = k - k1;
        if (k1 > n1 || k2 > n2 || dy < k) continue;
        ExactInt a1 = alpha(k1, n1, spec, cache);
        if (a1 == 0) continue;
        sum += big_multinomial(dy, k1, k2) * a1 * alpha(k2, n2, spec, cache);
    }
    return sum;
}

/// Case (F): full size information.
inline ExactInt delta_coeff(std::uint64_t k1, std::uint64_t k2, std::uint64_t n1,
                            std::uint64_t n2, const DomainSpec& spec,
                            AlphaCache& cache = default_alpha_cache()) {
    if (k1 < 1 || k1 > n1 || k2 < 1 || k2 > n2)
        throw std::domain_error("delta requires 1 <= k_i <= n_i");
    return big_multinomial(spec.d_y(), k1, k2) *
           alpha(k1, n1, spec, cache) * alpha(k2, n2, spec, cache);
}

namespace detail {
inline std::uint64_t require(const std::optional<std::uint64_t>& f, const char* name) {
    if (!f) throw missing_field(name);
    return *f;
}
} // namespace detail

/// Conditional probability matching the size knowledge of the given case:
///   B: Pr(n1,n2 / n)     C: Pr(k / n)        D: Pr(k1,k2 / n)
///   E: Pr(k / n1,n2)     F: Pr(k1,k2 / n1,n2)
inline ExactProb m1_probability(M1Case c, const SizeProfile& p,
                                AlphaCache& cache = default_alpha_cache()) {
    using detail::require;
    const DomainSpec& spec = p.spec;
    switch (c) {
    case M1Case::A:
        throw missing_field("case A carries no conditional question");
    case M1Case::B: {
        std::uint64_t n1 = require(p.n1, "n1"), n2 = require(p.n2, "n2");
        std::uint64_t n = p.n ? *p.n : n1 + n2;
        if (n != n1 + n2) throw std::domain_error("n must equal n1 + n2");
        return ExactProb::ratio(rho_groups(n1, n2, spec, cache), rho_total(n, spec, cache));
    }
    case M1Case::C: {
        std::uint64_t n = require(p.n, "n"), k = require(p.k, "k");
        return ExactProb::ratio(beta(k, n, spec, cache), rho_total(n, spec, cache));
    }
    case M1Case::D: {
        std::uint64_t n = require(p.n, "n");
        std::uint64_t k1 = require(p.k1, "k1"), k2 = require(p.k2, "k2");
        return ExactProb::ratio(lambda_coeff(k1, k2, n, spec, cache),
                                rho_total(n, spec, cache));
    }
    case M1Case::E: {
        std::uint64_t n1 = require(p.n1, "n1"), n2 = require(p.n2, "n2");
        std::uint64_t k = require(p.k, "k");
        return ExactProb::ratio(gamma_coeff(k, n1, n2, spec, cache),
                                rho_groups(n1, n2, spec, cache));
    }
    case M1Case::F: {
        std::uint64_t n1 = require(p.n1, "n1"), n2 = require(p.n2, "n2");
        std::uint64_t k1 = require(p.k1, "k1"), k2 = require(p.k2, "k2");
        return ExactProb::ratio(delta_coeff(k1, k2, n1, n2, spec, cache),
                                rho_groups(n1, n2, spec, cache));
    }
    }
    throw std::logic_error("unreachable");
}

/// Pr(k1 = r / n1, n2) = sum_{k2>=1} delta(r, k2; n1, n2) / rho(n1, n2).
/// r = 1 is the probability that Y is a pattern for the positive group.
inline ExactProb pattern_probability(std::uint64_t n1, std::uint64_t n2,
                                     const DomainSpec& spec, std::uint64_t r,
                                     AlphaCache& cache = default_alpha_cache()) {
    if (r < 1 || r > n1 || spec.d_y() < r)
        throw std::domain_error("pattern probability requires 1 <= r <= min(n1, d_Y)");
    const ExactInt dy = spec.d_y();
    ExactInt numerator = 0;
    ExactInt a1 = alpha(r, n1, spec, cache);
    if (a1 != 0) {
        for (std::uint64_t k2 = 1; k2 <= n2 && dy >= ExactInt(r) + k2; ++k2) {
            ExactInt a2 = alpha(k2, n2, spec, cache);
            if (a2 == 0) continue;
            numerator += big_multinomial(dy, r, k2) * a2;
        }
        numerator *= a1;
    }
    return ExactProb::ratio(numerator, rho_groups(n1, n2, spec, cache));
}

/// Probability that all d_Y values occur (k = d_Y). Exactly 0 when
/// d_Y exceeds the number of observations.
inline ExactProb robustness_probability(const SizeProfile& p, bool grouped,
                                        AlphaCache& cache = default_alpha_cache()) {
    using detail::require;
    const ExactInt dy = p.spec.d_y();
    if (grouped) {
        std::uint64_t n1 = require(p.n1, "n1"), n2 = require(p.n2, "n2");
        ExactInt denom = rho_groups(n1, n2, p.spec, cache);
        if (denom == 0) throw impossible_event("rho(n1,n2) = 0");
        if (dy > n1 + n2) return ExactProb::zero();
        std::uint64_t k = dy.convert_to<std::uint64_t>();
        return ExactProb::ratio(gamma_coeff(k, n1, n2, p.spec, cache), denom);
    }
    std::uint64_t n = require(p.n, "n");
    ExactInt denom = rho_total(n, p.spec, cache);
    if (denom == 0) throw impossible_event("rho(n) = 0");
    if (dy > n) return ExactProb::zero();
    std::uint64_t k = dy.convert_to<std::uint64_t>();
    return ExactProb::ratio(beta(k, n, p.spec, cache), denom);
}

/// Occupancy variant of ungrouped robustness: probability that n uniform
/// distinct observations hit all d_Y values, with no class weighting.
/// (The class-weighted form above tilts the distribution towards larger k;
/// both variants are exposed because published tables disagree on which
/// one they use.)
inline ExactProb coverage_probability(std::uint64_t n, const DomainSpec& spec,
                                      AlphaCache& cache = default_alpha_cache()) {
    if (n == 0) throw std::domain_error("n must be >= 1");
    const ExactInt dy = spec.d_y();
    ExactInt denom = big_binomial(spec.d_x(), n);
    if (denom == 0) throw impossible_event("no instance of this size exists");
    if (dy > n) return ExactProb::zero();
    std::uint64_t k = dy.convert_to<std::uint64_t>();
    return ExactProb::ratio(alpha(k, n, spec, cache), denom);
}

struct ScanPoint {
    unsigned y_attrs;
    ExactProb ratio;
};

struct ScanResult {
    std::vector<ScanPoint> points;
    unsigned argmax = 0;     // smallest |Y| on ties
    bool unimodal = true;    // observed, not guaranteed
};

/// Sweeps |Y| over [y_lo, y_hi] with |Z| = total_attrs - |Y| and reports the
/// ratio rho(n1,n2) / rho(n) per point.
inline ScanResult scan_attribute_count(std::uint64_t n1, std::uint64_t n2,
                                       unsigned total_attrs, unsigned y_lo, unsigned y_hi,
                                       AlphaCache& cache = default_alpha_cache()) {
    if (y_lo < 1 || y_hi > total_attrs || y_lo > y_hi)
        throw std::domain_error("scan range must lie within [1, total_attrs]");
    ScanResult res;
    for (unsigned y = y_lo; y <= y_hi; ++y) {
        DomainSpec spec{y, total_attrs - y};
        ExactInt num = rho_groups(n1, n2, spec, cache);
        ExactInt den = rho_total(n1 + n2, spec, cache);
        res.points.push_back({y, den == 0 ? ExactProb::zero() : ExactProb::ratio(num, den)});
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < res.points.size(); ++i)
        if (res.points[best].ratio < res.points[i].ratio) best = i;
    res.argmax = res.points[best].y_attrs;
    bool falling = false;
    for (std::size_t i = 1; i < res.points.size(); ++i) {
        if (res.points[i].ratio < res.points[i - 1].ratio) falling = true;
        else if (falling && res.points[i - 1].ratio < res.points[i].ratio) res.unimodal = false;
    }
    return res;
}

} // namespace m1
} // namespace ladprob

#endif
