#pragma once

#include <cstdint>
#include <stdexcept>

namespace hotplug {

/// Element of a prime field, stored in canonical form 0 <= v < q.
using Fe = std::uint32_t;

/// Arithmetic context for GF(q), q prime.
///
/// All operations expect canonical operands and return canonical results.
/// The context is a small trivially copyable value; matrices embed a copy so
/// that arithmetic never needs an out-of-band modulus argument.
class PrimeField {
public:
    /// Throws std::invalid_argument unless order is prime.
    explicit PrimeField(std::uint32_t order);

    std::uint32_t order() const noexcept { return q_; }

    Fe add(Fe a, Fe b) const noexcept {
        std::uint64_t s = std::uint64_t(a) + b;
        return static_cast<Fe>(s >= q_ ? s - q_ : s);
    }

    Fe sub(Fe a, Fe b) const noexcept {
        return a >= b ? a - b : static_cast<Fe>(a + q_ - b);
    }

    Fe neg(Fe a) const noexcept { return a == 0 ? 0 : q_ - a; }

    Fe mul(Fe a, Fe b) const noexcept {
        return static_cast<Fe>((std::uint64_t(a) * b) % q_);
    }

    /// a^e by square and multiply; pow(0, 0) == 1.
    Fe pow(Fe a, std::uint64_t e) const noexcept;

    /// Multiplicative inverse via Fermat (a^(q-2)).
    /// Throws std::domain_error when a == 0.
    Fe inv(Fe a) const;

    /// Canonical representative of an arbitrary 64-bit value.
    Fe reduce(std::uint64_t x) const noexcept { return static_cast<Fe>(x % q_); }

    bool operator==(const PrimeField&) const noexcept = default;

private:
    std::uint32_t q_;
};

bool is_prime(std::uint64_t n) noexcept;

/// Smallest prime >= n (and >= 2). Throws std::invalid_argument when the
/// result would not fit the element type.
std::uint32_t smallest_prime_at_least(std::uint64_t n);

} // namespace hotplug
