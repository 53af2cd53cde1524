#ifndef LADPROB_ORACLE_HPP
#define LADPROB_ORACLE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ladprob/errors.hpp"
#include "ladprob/exact.hpp"

namespace ladprob {
namespace oracle {

/// Exact event counts from brute-force enumeration of the sample space.
/// Points of the X-domain are encoded 0..d_X-1 with y-class = point / d_Z.
struct OracleTally {
    ExactInt total = 0;
    std::map<std::uint64_t, ExactInt> by_k;
    std::map<std::pair<std::uint64_t, std::uint64_t>, ExactInt> by_group_sizes; // (n1, n2)
    std::map<std::pair<std::uint64_t, std::uint64_t>, ExactInt> by_k1_k2;
    std::map<std::uint64_t, ExactInt> by_intersection; // u; the two-groups model only
    // (n1, k1, k2) joint tally; n2 = n - n1, k = k1 + k2
    std::map<std::array<std::uint64_t, 3>, ExactInt> by_joint;
};

namespace detail {

inline std::uint64_t small_domain(const DomainSpec& spec, const char* what) {
    if (spec.d_x() > 16)
        throw cap_exceeded(std::string(what) + ": exhaustive enumeration needs d_X <= 16");
    return spec.d_x().convert_to<std::uint64_t>();
}

inline unsigned y_class(std::uint64_t point, const DomainSpec& spec) {
    return static_cast<unsigned>(point >> spec.z_attrs);
}

/// Visits all size-n subsets of {0..width-1} as index vectors.
template <typename F>
inline void for_each_combination(std::uint64_t width, std::uint64_t n, F&& f) {
    if (n > width) return;
    std::vector<std::uint64_t> idx(n);
    for (std::uint64_t i = 0; i < n; ++i) idx[i] = i;
    while (true) {
        f(idx);
        std::int64_t j = static_cast<std::int64_t>(n) - 1;
        while (j >= 0 && idx[j] == width - n + j) --j;
        if (j < 0) return;
        ++idx[j];
        for (std::uint64_t i = j + 1; i < n; ++i) idx[i] = idx[i - 1] + 1;
    }
}

} // namespace detail

/// Single-total-size model: uniform over (G1, G2) with |G1| + |G2| = n and
/// disjoint Y-projections (either group may be empty). Enumerates every
/// n-subset of the domain and every whole-class group assignment.
inline OracleTally enumerate_m1(std::uint64_t n, const DomainSpec& spec) {
    const std::uint64_t dx = detail::small_domain(spec, "m1 oracle");
    if (n > 8) throw cap_exceeded("m1 oracle: enumeration needs n <= 8");
    if (n > dx) throw impossible_event("n exceeds the domain size");
    OracleTally t;
    detail::for_each_combination(dx, n, [&](const std::vector<std::uint64_t>& pts) {
        // class -> multiplicity within the chosen point set
        std::map<unsigned, std::uint64_t> classes;
        for (std::uint64_t p : pts) ++classes[detail::y_class(p, spec)];
        const std::uint64_t k = classes.size();
        std::vector<std::uint64_t> sizes;
        for (auto& [c, m] : classes) sizes.push_back(m);
        for (std::uint64_t assign = 0; assign < (std::uint64_t(1) << k); ++assign) {
            std::uint64_t n1 = 0, k1 = 0;
            for (std::uint64_t i = 0; i < k; ++i)
                if (assign & (std::uint64_t(1) << i)) { n1 += sizes[i]; ++k1; }
            ++t.total;
            ++t.by_k[k];
            ++t.by_group_sizes[{n1, n - n1}];
            ++t.by_k1_k2[{k1, k - k1}];
            ++t.by_joint[{n1, k1, k - k1}];
        }
    });
    return t;
}

/// Two-known-sizes model: uniform over ordered disjoint subsets (G1, G2)
/// with |G1| = n1, |G2| = n2, no projection constraint.
inline OracleTally enumerate_m2(std::uint64_t n1, std::uint64_t n2, const DomainSpec& spec) {
    const std::uint64_t dx = detail::small_domain(spec, "m2 oracle");
    if (n1 + n2 > 8) throw cap_exceeded("m2 oracle: enumeration needs n1 + n2 <= 8");
    if (n1 + n2 > dx) throw impossible_event("n1 + n2 exceeds the domain size");
    OracleTally t;
    detail::for_each_combination(dx, n1, [&](const std::vector<std::uint64_t>& g1) {
        std::vector<std::uint64_t> rest;
        for (std::uint64_t p = 0; p < dx; ++p)
            if (!std::binary_search(g1.begin(), g1.end(), p)) rest.push_back(p);
        std::set<unsigned> y1;
        for (std::uint64_t p : g1) y1.insert(detail::y_class(p, spec));
        detail::for_each_combination(rest.size(), n2, [&](const std::vector<std::uint64_t>& pick) {
            std::set<unsigned> y2;
            for (std::uint64_t i : pick) y2.insert(detail::y_class(rest[i], spec));
            std::uint64_t u = 0;
            for (unsigned c : y2) u += y1.count(c);
            ++t.total;
            ++t.by_k[y1.size() + y2.size() - u];
            ++t.by_group_sizes[{n1, n2}];
            ++t.by_k1_k2[{y1.size(), y2.size()}];
            ++t.by_intersection[u];
        });
    });
    return t;
}

/// Sampled event frequencies with binomial standard errors.
struct MonteCarloResult {
    std::string algorithm; // "m2-direct" or "m1-rejection"
    std::uint64_t seed = 0;
    std::uint64_t samples = 0;  // accepted draws
    std::uint64_t attempts = 0; // total draws (> samples under rejection)
    std::map<std::uint64_t, std::uint64_t> by_k;
    std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> by_group_sizes;
    std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> by_k1_k2;
    std::map<std::uint64_t, std::uint64_t> by_intersection;

    double frequency(std::uint64_t count) const {
        return samples ? double(count) / double(samples) : 0.0;
    }
    double std_error(std::uint64_t count) const {
        if (!samples) return 0.0;
        double p = frequency(count);
        return std::sqrt(p * (1.0 - p) / double(samples));
    }
};

namespace detail {

/// n distinct uniform points from a possibly huge domain; resamples
/// collisions, which are rare because n stays desk-scale.
inline std::vector<std::uint64_t> sample_points(std::uint64_t n, const ExactInt& dx,
                                                std::mt19937_64& rng) {
    if (dx < ExactInt(n)) throw impossible_event("sample size exceeds the domain size");
    const std::uint64_t width = dx.convert_to<std::uint64_t>(); // d_X <= 2^63 by construction
    std::uniform_int_distribution<std::uint64_t> dist(0, width - 1);
    std::set<std::uint64_t> picked;
    while (picked.size() < n) picked.insert(dist(rng));
    return {picked.begin(), picked.end()};
}

} // namespace detail

/// Direct sampler for the two-known-sizes model: draw n1 + n2 distinct
/// points, shuffle, split.
inline MonteCarloResult monte_carlo_m2(std::uint64_t n1, std::uint64_t n2,
                                       const DomainSpec& spec, std::uint64_t samples,
                                       std::uint64_t seed) {
    if (spec.y_attrs + spec.z_attrs > 62)
        throw cap_exceeded("monte carlo sampler needs at most 62 attributes");
    MonteCarloResult r;
    r.algorithm = "m2-direct";
    r.seed = seed;
    std::mt19937_64 rng(seed);
    for (std::uint64_t s = 0; s < samples; ++s) {
        auto pts = detail::sample_points(n1 + n2, spec.d_x(), rng);
        std::shuffle(pts.begin(), pts.end(), rng);
        std::set<unsigned> y1, y2;
        for (std::uint64_t i = 0; i < n1 + n2; ++i)
            (i < n1 ? y1 : y2).insert(detail::y_class(pts[i], spec));
        std::uint64_t u = 0;
        for (unsigned c : y2) u += y1.count(c);
        ++r.samples;
        ++r.attempts;
        ++r.by_k[y1.size() + y2.size() - u];
        ++r.by_group_sizes[{n1, n2}];
        ++r.by_k1_k2[{y1.size(), y2.size()}];
        ++r.by_intersection[u];
    }
    return r;
}

/// Rejection sampler for the single-total-size model: draw n distinct points
/// and a uniform per-point group labeling, accept iff every occupied y-class
/// lands wholly in one group. Accepted outcomes are uniform over the model.
inline MonteCarloResult monte_carlo_m1(std::uint64_t n, const DomainSpec& spec,
                                       std::uint64_t samples, std::uint64_t seed) {
    if (spec.y_attrs + spec.z_attrs > 62)
        throw cap_exceeded("monte carlo sampler needs at most 62 attributes");
    MonteCarloResult r;
    r.algorithm = "m1-rejection";
    r.seed = seed;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coin(0, 1);
    while (r.samples < samples) {
        ++r.attempts;
        auto pts = detail::sample_points(n, spec.d_x(), rng);
        std::map<unsigned, int> class_group; // first label seen per y-class
        std::uint64_t n1 = 0;
        bool ok = true;
        std::set<unsigned> y1, y2;
        for (std::uint64_t p : pts) {
            int g = coin(rng);
            unsigned c = detail::y_class(p, spec);
            auto [it, fresh] = class_group.emplace(c, g);
            if (!fresh && it->second != g) { ok = false; break; }
            n1 += g == 0;
            (g == 0 ? y1 : y2).insert(c);
        }
        if (!ok) continue;
        ++r.samples;
        ++r.by_k[class_group.size()];
        ++r.by_group_sizes[{n1, n - n1}];
        ++r.by_k1_k2[{y1.size(), y2.size()}];
    }
    return r;
}

} // namespace oracle
} // namespace ladprob

#endif
