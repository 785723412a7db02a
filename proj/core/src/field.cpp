#include "hotplug/field.hpp"

namespace hotplug {

PrimeField::PrimeField(std::uint32_t order) : q_(order) {
    if (!is_prime(order)) {
        throw std::invalid_argument("field order must be prime, got " +
                                    std::to_string(order));
    }
}

Fe PrimeField::pow(Fe a, std::uint64_t e) const noexcept {
    std::uint64_t base = a % q_;
    std::uint64_t acc = 1 % q_;
    while (e > 0) {
        if (e & 1) acc = (acc * base) % q_;
        base = (base * base) % q_;
        e >>= 1;
    }
    return static_cast<Fe>(acc);
}

Fe PrimeField::inv(Fe a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return pow(a, q_ - 2);
}

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

std::uint32_t smallest_prime_at_least(std::uint64_t n) {
    if (n < 2) n = 2;
    for (std::uint64_t c = n;; ++c) {
        if (c > 0x7fffffffULL) {
            throw std::invalid_argument("no supported prime >= " + std::to_string(n));
        }
        if (is_prime(c)) return static_cast<std::uint32_t>(c);
    }
}

} // namespace hotplug
