#ifndef LADPROB_MODEL_M2_HPP
#define LADPROB_MODEL_M2_HPP

#include <cstdint>
#include <map>
#include <optional>

#include "ladprob/alpha.hpp"
#include "ladprob/exact.hpp"

namespace ladprob {
namespace m2 {

/// Model M2 count with group sizes known: C(d_X; n1, n2).
inline ExactInt rho_groups_m2(std::uint64_t n1, std::uint64_t n2, const DomainSpec& spec) {
    if (n1 < 1 || n2 < 1) throw std::domain_error("rho_groups_m2 requires n1, n2 >= 1");
    return big_multinomial(spec.d_x(), n1, n2);
}

/// A(n1, n2; v) = [z1^n1 z2^n2] (1 + phi(z1) + phi(z2))^(d_Y - v)
///                              (1 + phi(z1 + z2))^v
/// with loop bounds k <= min(d_Y - v, n1) and
/// l <= min(v d_Z, n1 - k, d_Z (d_Y - k) - n2).
inline ExactInt coefficient_A(std::uint64_t n1, std::uint64_t n2, std::uint64_t v,
                              const DomainSpec& spec,
                              AlphaCache& cache = default_alpha_cache()) {
    const ExactInt dy = spec.d_y();
    const ExactInt dz = spec.d_z();
    if (ExactInt(v) > dy) throw std::domain_error("coefficient_A requires v <= d_Y");
    ExactInt sum = 0;
    std::uint64_t k_max = n1;
    if (dy - v < k_max) k_max = (dy - v).convert_to<std::uint64_t>();
    for (std::uint64_t k = 0; k <= k_max; ++k) {
        ExactInt cy = big_binomial(dy - v, k);
        ExactInt l_cap = dz * (dy - k) - n2; // from C(d_Z (d_Y - k) - l, n2) != 0
        if (l_cap < 0) continue;
        std::uint64_t l_max = n1 - k;
        if (l_cap < l_max) l_max = l_cap.convert_to<std::uint64_t>();
        if (v == 0) l_max = 0; // C(0, l) = 0 for l >= 1
        ExactInt vdz = v * dz;
        if (vdz < l_max) l_max = vdz.convert_to<std::uint64_t>();
        for (std::uint64_t l = 0; l <= l_max; ++l) {
            ExactInt a = cache.alpha(k, n1 - l, spec);
            if (a == 0) continue;
            sum += cy * big_binomial(vdz, l) * big_binomial(dz * (dy - k) - l, n2) * a;
        }
    }
    return sum;
}

/// Reference evaluation without the clamped loop bounds; test-only
/// differential route (small domains).
inline ExactInt coefficient_A_unclamped(std::uint64_t n1, std::uint64_t n2, std::uint64_t v,
                                        const DomainSpec& spec,
                                        AlphaCache& cache = default_alpha_cache()) {
    const ExactInt dy = spec.d_y();
    const ExactInt dz = spec.d_z();
    ExactInt sum = 0;
    std::uint64_t k_hi = (dy - v).convert_to<std::uint64_t>();
    for (std::uint64_t k = 0; k <= k_hi; ++k) {
        // l beyond n1 makes alpha(k; n1 - l) meaningless (negative size)
        std::uint64_t l_hi = n1;
        ExactInt vdz = v * dz;
        if (vdz < l_hi) l_hi = vdz.convert_to<std::uint64_t>();
        for (std::uint64_t l = 0; l <= l_hi; ++l) {
            if (l > n1 - k) break;
            sum += big_binomial(dy - v, k) * big_binomial(vdz, l) *
                   big_binomial(dz * (dy - k) - l, n2) * cache.alpha(k, n1 - l, spec);
        }
    }
    return sum;
}

/// Memoizes A(n1, n2; v) across v for one (n1, n2, spec) profile;
/// prob_intersection_at_most(t) reuses A_0..A_t.
class AvCache {
public:
    AvCache(std::uint64_t n1, std::uint64_t n2, DomainSpec spec,
            AlphaCache& cache = default_alpha_cache())
        : n1_(n1), n2_(n2), spec_(spec), alpha_(cache) {}

    const ExactInt& at(std::uint64_t v) {
        auto it = memo_.find(v);
        if (it == memo_.end())
            it = memo_.emplace(v, coefficient_A(n1_, n2_, v, spec_, alpha_)).first;
        return it->second;
    }

    std::uint64_t n1() const { return n1_; }
    std::uint64_t n2() const { return n2_; }
    const DomainSpec& spec() const { return spec_; }

private:
    std::uint64_t n1_, n2_;
    DomainSpec spec_;
    AlphaCache& alpha_;
    std::map<std::uint64_t, ExactInt> memo_;
};

/// Query for the size of the intersection of the two group projections:
/// exactly one of `u` (exact size) or `t` (upper bound) is set.
struct IntersectionQuery {
    std::uint64_t n1 = 0, n2 = 0;
    DomainSpec spec;
    std::optional<std::uint64_t> u, t;

    void validate() const {
        if (n1 < 1 || n2 < 1) throw std::domain_error("intersection query requires n1, n2 >= 1");
        if (u.has_value() == t.has_value())
            throw std::domain_error("exactly one of u (exact) or t (at most) must be set");
        if (u && (*u > n1 || *u > n2 || spec.d_y() < *u))
            throw std::domain_error("u must satisfy 0 <= u <= min(n1, n2, d_Y)");
        if (t && spec.d_y() < *t)
            throw std::domain_error("t must satisfy 0 <= t <= d_Y");
    }
};

/// Pr(|pi_Y(G1) ^ pi_Y(G2)| = u / n1, n2)
///   = C(d_Y, u) sum_{v=0..u} (-1)^(u-v) C(u, v) A_v / rho.
inline ExactProb prob_intersection_eq(AvCache& av, std::uint64_t u) {
    const DomainSpec& spec = av.spec();
    if (u > av.n1() || u > av.n2() || spec.d_y() < u)
        return ExactProb::zero();
    ExactInt num = 0;
    for (std::uint64_t v = 0; v <= u; ++v) {
        ExactInt term = big_binomial(ExactInt(u), u - v) * av.at(v);
        if ((u - v) % 2 == 0) num += term; else num -= term;
    }
    num *= big_binomial(spec.d_y(), u);
    // A negative numerator cannot arise from data; it would be a bug in the
    // alternating sum.
    if (num < 0) throw std::logic_error("negative intersection count");
    return ExactProb::ratio(num, rho_groups_m2(av.n1(), av.n2(), spec));
}

/// Pr(|pi_Y(G1) ^ pi_Y(G2)| <= t / n1, n2)
///   = sum_{v=0..t} (-1)^(t-v) C(d_Y, v) C(d_Y - v - 1, t - v) A_v / rho.
inline ExactProb prob_intersection_at_most(AvCache& av, std::uint64_t t) {
    const DomainSpec& spec = av.spec();
    if (spec.d_y() <= t) return ExactProb::one();
    ExactInt num = 0;
    for (std::uint64_t v = 0; v <= t; ++v) {
        ExactInt term = big_binomial(spec.d_y(), v) *
                        big_binomial(spec.d_y() - v - 1, t - v) * av.at(v);
        if ((t - v) % 2 == 0) num += term; else num -= term;
    }
    if (num < 0) throw std::logic_error("negative cumulative intersection count");
    return ExactProb::ratio(num, rho_groups_m2(av.n1(), av.n2(), spec));
}

inline ExactProb prob_intersection(const IntersectionQuery& q,
                                   AlphaCache& cache = default_alpha_cache()) {
    q.validate();
    AvCache av(q.n1, q.n2, q.spec, cache);
    return q.u ? prob_intersection_eq(av, *q.u) : prob_intersection_at_most(av, *q.t);
}

} // namespace m2
} // namespace ladprob

#endif
