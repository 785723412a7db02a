#include "hotplug/rational.hpp"

#include <stdexcept>

namespace hotplug {

Rational rat_pow(const Rational& r, unsigned e) {
    Rational acc(1);
    Rational base = r;
    while (e > 0) {
        if (e & 1u) acc *= base;
        base *= base;
        e >>= 1u;
    }
    return acc;
}

std::string to_fraction_string(const Rational& r) {
    const BigInt num = numerator(r);
    const BigInt den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string to_decimal_string(const Rational& r, int places) {
    if (places < 0) throw std::invalid_argument("negative decimal places");
    BigInt scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;
    BigInt num = numerator(r) * scale;
    const BigInt den = denominator(r);
    const bool negative = num < 0;
    if (negative) num = -num;
    // Round half away from zero.
    BigInt q = (2 * num + den) / (2 * den);
    BigInt whole = q / scale;
    BigInt frac = q % scale;
    std::string fs = frac.str();
    fs.insert(fs.begin(), static_cast<std::size_t>(places) - fs.size(), '0');
    std::string out = whole.str();
    if (places > 0) out += "." + fs;
    if (negative && (whole != 0 || frac != 0)) out.insert(out.begin(), '-');
    return out;
}

Rational fraction_from_string(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    const BigInt num(s.substr(0, slash));
    const BigInt den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
}

} // namespace hotplug
