#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hotplug {

/// Exact arbitrary-precision rational; every memory/load quantity in the
/// library is carried in this type and never rounded.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational rat(long long num, long long den = 1) {
    return Rational(BigInt(num), BigInt(den));
}

/// r^e for small non-negative exponents.
Rational rat_pow(const Rational& r, unsigned e);

/// "num/den" in lowest terms ("num" when den == 1).
std::string to_fraction_string(const Rational& r);

/// Fixed-point decimal with `places` digits, rounded half away from zero.
std::string to_decimal_string(const Rational& r, int places = 6);

/// Parses the exact output of to_fraction_string.
Rational fraction_from_string(const std::string& s);

/// One achievable or converse (memory, load) pair, exact.
struct TradeoffPoint {
    Rational memory;
    Rational load;

    bool operator==(const TradeoffPoint&) const = default;
};

} // namespace hotplug
