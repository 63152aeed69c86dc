#pragma once

#include <compare>
#include <cstdint>

namespace kaplansky {

bool is_prime(std::uint32_t n) noexcept;

/// Characteristic of a prime field F_d. Construction rejects non-primes,
/// so a PrimeChar value is a proof that d is prime.
class PrimeChar {
public:
    explicit PrimeChar(std::uint32_t d);

    std::uint32_t value() const noexcept { return d_; }

    friend auto operator<=>(PrimeChar, PrimeChar) noexcept = default;

private:
    std::uint32_t d_;
};

/// Canonical residue in F_d, always normalized to 0 <= value < d.
/// Arithmetic between residues of different characteristics is a structural
/// bug in the caller and throws std::invalid_argument.
class Coeff {
public:
    Coeff(std::int64_t n, PrimeChar d) noexcept;

    std::uint32_t value() const noexcept { return v_; }
    PrimeChar characteristic() const noexcept { return d_; }
    bool is_zero() const noexcept { return v_ == 0; }

    Coeff operator-() const noexcept;

    /// Multiplicative inverse; throws std::domain_error on zero.
    Coeff inverse() const;

    friend Coeff operator+(Coeff a, Coeff b);
    friend Coeff operator-(Coeff a, Coeff b);
    friend Coeff operator*(Coeff a, Coeff b);
    friend bool operator==(Coeff, Coeff) noexcept = default;

private:
    std::uint32_t v_;
    PrimeChar d_;
};

} // namespace kaplansky
