#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kaplansky/fp.hpp"

namespace kaplansky {

/// Exponent triple (i, j, k) of a monomial x^i y^j z^k. Exponents are signed
/// and bounded by exp_limit; arithmetic that would leave the range throws
/// std::overflow_error instead of wrapping.
struct ExpVec {
    std::int32_t i = 0;
    std::int32_t j = 0;
    std::int32_t k = 0;

    friend auto operator<=>(const ExpVec&, const ExpVec&) noexcept = default;
};

inline constexpr std::int32_t exp_limit = (1 << 20) - 1;

ExpVec checked_add(ExpVec a, ExpVec b);
ExpVec checked_scale(ExpVec a, std::int64_t m);

/// Subset of the variables {x, y, z}; names the inversion sets that appear
/// as subscripts (f_yz inverts y and z, etc.).
class VarSet {
public:
    constexpr VarSet() noexcept = default;

    static constexpr VarSet none() noexcept { return VarSet{0}; }
    static constexpr VarSet x() noexcept { return VarSet{1}; }
    static constexpr VarSet y() noexcept { return VarSet{2}; }
    static constexpr VarSet z() noexcept { return VarSet{4}; }
    static constexpr VarSet xy() noexcept { return VarSet{3}; }
    static constexpr VarSet xz() noexcept { return VarSet{5}; }
    static constexpr VarSet yz() noexcept { return VarSet{6}; }
    static constexpr VarSet xyz() noexcept { return VarSet{7}; }

    constexpr bool has_x() const noexcept { return bits_ & 1; }
    constexpr bool has_y() const noexcept { return bits_ & 2; }
    constexpr bool has_z() const noexcept { return bits_ & 4; }

    constexpr VarSet operator|(VarSet o) const noexcept { return VarSet{static_cast<std::uint8_t>(bits_ | o.bits_)}; }
    /// Symmetric difference: composing two inversions cancels shared variables.
    constexpr VarSet operator^(VarSet o) const noexcept { return VarSet{static_cast<std::uint8_t>(bits_ ^ o.bits_)}; }

    friend constexpr bool operator==(VarSet, VarSet) noexcept = default;

private:
    explicit constexpr VarSet(std::uint8_t bits) noexcept : bits_(bits) {}
    std::uint8_t bits_ = 0;
};

struct LaurentTerm {
    ExpVec exp;
    std::uint32_t coeff; // in [1, d)

    friend auto operator<=>(const LaurentTerm&, const LaurentTerm&) noexcept = default;
};

/// Sparse Laurent polynomial over F_d in the commuting variables x, y, z.
///
/// Canonical form: terms sorted lexicographically by (i, j, k), coefficients
/// reduced to [1, d), no explicit zero terms. Equality, ordering, hashing and
/// serialization all read this canonical form, so structurally equal
/// polynomials are identical. The zero polynomial keeps its characteristic so
/// that mixed-characteristic arithmetic is always detectable (it throws
/// std::invalid_argument).
class Laurent {
public:
    explicit Laurent(PrimeChar d) : char_(d) {}

    static Laurent zero(PrimeChar d) { return Laurent(d); }
    static Laurent constant(PrimeChar d, std::int64_t c);
    static Laurent monomial(PrimeChar d, ExpVec e, std::int64_t c = 1);

    /// Build from arbitrary (exponent, integer) pairs: coefficients are
    /// normalized mod d, duplicate exponents merged, zeros dropped.
    static Laurent make(PrimeChar d, std::span<const std::pair<ExpVec, std::int64_t>> entries);
    static Laurent make(PrimeChar d, std::initializer_list<std::pair<ExpVec, std::int64_t>> entries);

    PrimeChar characteristic() const noexcept { return char_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }
    std::span<const LaurentTerm> terms() const noexcept { return terms_; }

    Coeff coeff_at(ExpVec e) const noexcept;

    /// The single term when the polynomial is a (nonzero) monomial.
    std::optional<LaurentTerm> as_monomial() const noexcept;

    /// Variable inversion f_S: substitute v -> v^-1 for each v in S.
    Laurent inverted(VarSet vars) const;

    Laurent operator-() const;

    std::size_t hash() const noexcept;
    std::string str() const;

    friend Laurent operator+(const Laurent& a, const Laurent& b);
    friend Laurent operator-(const Laurent& a, const Laurent& b);
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    friend bool operator==(const Laurent&, const Laurent&) noexcept = default;
    friend auto operator<=>(const Laurent&, const Laurent&) noexcept = default;

private:
    Laurent(PrimeChar d, std::vector<LaurentTerm> sorted) : char_(d), terms_(std::move(sorted)) {}

    PrimeChar char_;
    std::vector<LaurentTerm> terms_;
};

/// f^n for n >= 0 (pow(f, 0) = 1); negative n throws std::invalid_argument.
Laurent pow(const Laurent& f, std::int64_t n);

} // namespace kaplansky
