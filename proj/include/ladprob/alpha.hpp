#ifndef LADPROB_ALPHA_HPP
#define LADPROB_ALPHA_HPP

#include <cstdint>
#include <cstdlib>
#include <mutex>
#include <unordered_map>

#include "ladprob/exact.hpp"

namespace ladprob {

/// alpha(k; n) counts the ways n distinct observations realize exactly k
/// fixed Y-values, each value occurring at least once: the coefficient of
/// z^n in ((1+z)^d_Z - 1)^k.
///
/// Two evaluation routes exist and must agree:
///   direct     sum_{r=1..k} (-1)^(k-r) C(k,r) C(r d_Z, n)
///   recurrence alpha(k;n) = sum_{m>=1} C(d_Z, m) alpha(k-1; n-m)
class AlphaCache {
public:
    AlphaCache() {
        if (const char* cap = std::getenv("LADPROB_ALPHA_CACHE_MAX"))
            max_entries_ = std::strtoull(cap, nullptr, 10);
    }

    ExactInt alpha(std::uint64_t k, std::uint64_t n, const DomainSpec& spec) {
        if (k == 0) return n == 0 ? 1 : 0;
        if (n < k) return 0;
        if (ExactInt(n) > ExactInt(k) * spec.d_z()) return 0;

        const Key key{k, n, spec.z_attrs};
        {
            std::lock_guard lock(mu_);
            if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        }
        // The direct sum costs k huge-binomial evaluations of length n; the
        // convolution amortizes across the whole (k', n') triangle, which
        // pays off once k grows past the per-term cost.
        ExactInt v = k <= 48 ? alpha_direct(k, n, spec) : alpha_recurrence(k, n, spec);
        std::lock_guard lock(mu_);
        if (memo_.size() < max_entries_) memo_.emplace(key, v);
        return v;
    }

    ExactInt alpha_direct(std::uint64_t k, std::uint64_t n, const DomainSpec& spec) const {
        if (k == 0) return n == 0 ? 1 : 0;
        if (n < k) return 0;
        const ExactInt dz = spec.d_z();
        ExactInt sum = 0;
        for (std::uint64_t r = 1; r <= k; ++r) {
            ExactInt term = big_binomial(ExactInt(k), r) * big_binomial(r * dz, n);
            if ((k - r) % 2 == 0) sum += term; else sum -= term;
        }
        return sum;
    }

    ExactInt alpha_recurrence(std::uint64_t k, std::uint64_t n, const DomainSpec& spec) {
        if (k == 0) return n == 0 ? 1 : 0;
        if (n < k) return 0;
        const ExactInt dz = spec.d_z();
        ExactInt sum = 0;
        // alpha(k-1; n-m) vanishes for m > n-k+1, and C(d_Z, m) for m > d_Z.
        std::uint64_t m_max = n - k + 1;
        if (dz < m_max) m_max = dz.convert_to<std::uint64_t>();
        for (std::uint64_t m = 1; m <= m_max; ++m)
            sum += big_binomial(dz, m) * alpha(k - 1, n - m, spec);
        return sum;
    }

    std::size_t size() const {
        std::lock_guard lock(mu_);
        return memo_.size();
    }

private:
    struct Key {
        std::uint64_t k, n;
        unsigned z_attrs;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& key) const {
            std::size_t h = key.k;
            h = h * 1000003u ^ key.n;
            h = h * 1000003u ^ key.z_attrs;
            return h;
        }
    };

    mutable std::mutex mu_;
    std::unordered_map<Key, ExactInt, KeyHash> memo_;
    std::size_t max_entries_ = 1u << 22;
};

/// Process-wide cache; modules take an AlphaCache& so workers may instead
/// instantiate their own.
inline AlphaCache& default_alpha_cache() {
    static AlphaCache cache;
    return cache;
}

inline ExactInt alpha(std::uint64_t k, std::uint64_t n, const DomainSpec& spec,
                      AlphaCache& cache = default_alpha_cache()) {
    return cache.alpha(k, n, spec);
}

} // namespace ladprob

#endif
