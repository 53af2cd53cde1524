#ifndef LADPROB_EXACT_HPP
#define LADPROB_EXACT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>

#include "ladprob/errors.hpp"

namespace ladprob {

/// Arbitrary-precision integer for all counting quantities. Signed, because
/// the alternating sums pass through negative intermediates; public APIs
/// return nonnegative values.
using ExactInt = boost::multiprecision::cpp_int;

/// The attribute split (|Y|, |Z|). Domain sizes are always derived, never
/// stored: d_Y = 2^|Y|, d_Z = 2^|Z|, d_X = d_Y * d_Z.
struct DomainSpec {
    unsigned y_attrs = 0;
    unsigned z_attrs = 0;

    ExactInt d_y() const { return ExactInt(1) << y_attrs; }
    ExactInt d_z() const { return ExactInt(1) << z_attrs; }
    ExactInt d_x() const { return ExactInt(1) << (y_attrs + z_attrs); }

    bool operator==(const DomainSpec&) const = default;
};

/// C(m, n) for huge m and small n, as the falling factorial
/// m (m-1) ... (m-n+1) / n!. The division is performed incrementally so
/// every intermediate stays integral.
inline ExactInt big_binomial(const ExactInt& m, std::uint64_t n) {
    if (m < 0) return 0;
    if (n == 0) return 1;
    if (m < n) return 0;
    ExactInt r = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
        r *= m - i;
        r /= i + 1;
    }
    return r;
}

inline ExactInt big_binomial(std::uint64_t m, std::uint64_t n) {
    return big_binomial(ExactInt(m), n);
}

/// C(m; k1, k2) = C(m, k1) * C(m - k1, k2); 0 when k1 + k2 > m.
inline ExactInt big_multinomial(const ExactInt& m, std::uint64_t k1, std::uint64_t k2) {
    if (m < ExactInt(k1) + k2) return 0;
    return big_binomial(m, k1) * big_binomial(m - k1, k2);
}

inline ExactInt big_multinomial(std::uint64_t d, std::uint64_t k1, std::uint64_t k2) {
    return big_multinomial(ExactInt(d), k1, k2);
}

/// Exact probability: a rational in [0, 1], stored in lowest terms.
class ExactProb {
public:
    ExactProb() : num_(0), den_(1) {}

    static ExactProb ratio(ExactInt num, ExactInt den) {
        if (den == 0)
            throw impossible_event("conditioning event has zero count");
        if (den < 0) { num = -num; den = -den; }
        if (num < 0 || num > den)
            throw std::logic_error("probability outside [0,1]: " + num.str() + "/" + den.str());
        ExactInt g = boost::multiprecision::gcd(num, den);
        return ExactProb(num / g, den / g);
    }

    static ExactProb zero() { return ExactProb(); }
    static ExactProb one() { return ExactProb(1, 1); }

    const ExactInt& num() const { return num_; }
    const ExactInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == den_; }

    ExactProb complement() const { return ExactProb(den_ - num_, den_); }

    friend ExactProb operator+(const ExactProb& a, const ExactProb& b) {
        return ratio(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend ExactProb operator*(const ExactProb& a, const ExactProb& b) {
        return ratio(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend bool operator==(const ExactProb& a, const ExactProb& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator<(const ExactProb& a, const ExactProb& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator<=(const ExactProb& a, const ExactProb& b) {
        return a.num_ * b.den_ <= b.num_ * a.den_;
    }

private:
    ExactProb(ExactInt n, ExactInt d) : num_(std::move(n)), den_(std::move(d)) {}
    ExactInt num_, den_;
};

/// Decimal exponent e with 10^e <= num/den < 10^(e+1). Requires num > 0.
inline long decimal_exponent(const ExactInt& num, const ExactInt& den) {
    long e = 0;
    ExactInt n = num, d = den;
    while (n < d) { n *= 10; --e; }
    while (n >= d * 10) { d *= 10; ++e; }
    return e;
}

namespace detail {

// First `sig` decimal digits of num/den (rounded half up) plus the decimal
// exponent of the leading digit.
inline std::pair<std::string, long> significand(const ExactInt& num, const ExactInt& den,
                                                unsigned sig) {
    long e = decimal_exponent(num, den);
    // scaled = num/den * 10^(sig-1-e), rounded.
    ExactInt n = num, d = den;
    long shift = static_cast<long>(sig) - 1 - e;
    if (shift >= 0)
        for (long i = 0; i < shift; ++i) n *= 10;
    else
        for (long i = 0; i < -shift; ++i) d *= 10;
    ExactInt digits = (2 * n + d) / (2 * d);
    std::string s = digits.str();
    if (s.size() > sig) { // rounding carried into a new leading digit
        ++e;
        s.pop_back();
    }
    return {s, e};
}

inline std::string scientific(const ExactInt& num, const ExactInt& den, unsigned sig) {
    auto [s, e] = significand(num, den, sig);
    while (s.size() > 1 && s.back() == '0') s.pop_back();
    std::string out(1, s[0]);
    if (s.size() > 1) out += "." + s.substr(1);
    out += "e" + std::to_string(e);
    return out;
}

inline std::string fixed(const std::string& digits, long e) {
    // e <= -1 for probabilities strictly below 1.
    std::string out = "0.";
    for (long i = 0; i < -e - 1; ++i) out += '0';
    return out + digits;
}

} // namespace detail

/// Renders p with `sig_digits` significant digits. Values with 1-p < 10^-3
/// follow the "1 - epsilon" convention, epsilon in scientific notation with
/// two significant digits.
inline std::string to_decimal(const ExactProb& p, unsigned sig_digits = 4) {
    if (sig_digits < 1) sig_digits = 1;
    if (p.is_zero()) return "0";
    if (p.is_one()) return "1";
    ExactProb eps = p.complement();
    if (1000 * eps.num() < eps.den())
        return "1 - " + detail::scientific(eps.num(), eps.den(), 2);
    auto [digits, e] = detail::significand(p.num(), p.den(), sig_digits);
    if (e >= 0) return "1"; // p < 1 rounded up to 1 at this precision
    if (e >= -4) return detail::fixed(digits, e);
    return detail::scientific(p.num(), p.den(), sig_digits);
}

/// Lossy conversion for reporting and tolerance checks; underflows to 0
/// below roughly 1e-308.
inline double to_double(const ExactProb& p) {
    if (p.is_zero()) return 0.0;
    using boost::multiprecision::msb;
    const ExactInt& n = p.num();
    const ExactInt& d = p.den();
    long bn = static_cast<long>(msb(n));
    long bd = static_cast<long>(msb(d));
    long sn = bn > 62 ? bn - 62 : 0;
    long sd = bd > 62 ? bd - 62 : 0;
    double vn = static_cast<double>((n >> sn).convert_to<std::uint64_t>());
    double vd = static_cast<double>((d >> sd).convert_to<std::uint64_t>());
    return std::ldexp(vn / vd, static_cast<int>(sn - sd));
}

} // namespace ladprob

#endif
