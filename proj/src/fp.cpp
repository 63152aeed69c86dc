#include "kaplansky/fp.hpp"

#include <stdexcept>
#include <string>

namespace kaplansky {

bool is_prime(std::uint32_t n) noexcept {
    if (n < 2)
        return false;
    for (std::uint64_t f = 2; f * f <= n; ++f)
        if (n % f == 0)
            return false;
    return true;
}

PrimeChar::PrimeChar(std::uint32_t d) : d_(d) {
    if (!is_prime(d))
        throw std::invalid_argument("characteristic must be prime, got " + std::to_string(d));
}

namespace {

std::uint32_t normalize(std::int64_t n, std::uint32_t d) noexcept {
    std::int64_t m = n % static_cast<std::int64_t>(d);
    if (m < 0)
        m += d;
    return static_cast<std::uint32_t>(m);
}

void require_same(PrimeChar a, PrimeChar b) {
    if (a != b)
        throw std::invalid_argument("mixed characteristics: F_" + std::to_string(a.value()) +
                                    " vs F_" + std::to_string(b.value()));
}

} // namespace

Coeff::Coeff(std::int64_t n, PrimeChar d) noexcept : v_(normalize(n, d.value())), d_(d) {}

Coeff Coeff::operator-() const noexcept {
    return Coeff(v_ == 0 ? 0 : static_cast<std::int64_t>(d_.value()) - v_, d_);
}

Coeff Coeff::inverse() const {
    if (v_ == 0)
        throw std::domain_error("division by zero in F_" + std::to_string(d_.value()));
    // Extended Euclid on (d, v); d prime guarantees gcd 1.
    std::int64_t r0 = d_.value(), r1 = v_, t0 = 0, t1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        std::int64_t tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
    }
    return Coeff(t0, d_);
}

Coeff operator+(Coeff a, Coeff b) {
    require_same(a.d_, b.d_);
    return Coeff(static_cast<std::int64_t>(a.v_) + b.v_, a.d_);
}

Coeff operator-(Coeff a, Coeff b) {
    require_same(a.d_, b.d_);
    return Coeff(static_cast<std::int64_t>(a.v_) - b.v_, a.d_);
}

Coeff operator*(Coeff a, Coeff b) {
    require_same(a.d_, b.d_);
    return Coeff(static_cast<std::int64_t>(a.v_) * b.v_, a.d_);
}

} // namespace kaplansky
