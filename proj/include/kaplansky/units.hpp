#pragma once

#include <array>
#include <string>
#include <vector>

#include "kaplansky/group_ring.hpp"

namespace kaplansky {

/// Parameters of the infinite unit family: characteristic d and the two free
/// integer exponents (t shifts the z-powers of the ansatz, w is a global
/// z-shift of the q/r pair).
struct FamilyParams {
    PrimeChar characteristic;
    std::int32_t t = 0;
    std::int32_t w = 0;
};

/// The seven z-only Laurent polynomials f1..f7 of the ansatz
///   p = (1+x)(1+y) f1
///   q = (1+x)(x^-1+y^-1) f2 + (1+y^-1) f3
///   r = (1+y^-1)(x+y) f4 + (1+x) f5
///   s = (x+2+x^-1+y+2+y^-1) f6 + f7.
/// Construction rejects tables whose entries involve x or y, or that mix
/// characteristics.
class FTable {
public:
    explicit FTable(std::array<Laurent, 7> f);

    PrimeChar characteristic() const noexcept { return f_[0].characteristic(); }

    /// 1-based accessor matching the f1..f7 naming; throws std::out_of_range.
    const Laurent& f(int index) const;

    const std::array<Laurent, 7>& all() const noexcept { return f_; }

    friend bool operator==(const FTable&, const FTable&) = default;

private:
    std::array<Laurent, 7> f_;
};

/// The order-21 unit in F_2[P]:
///   p = (1+x)(1+y)(1+z^-1)
///   q = x^-1 y^-1 + x + y^-1 z + z
///   r = 1 + x + y^-1 z + x y z
///   s = 1 + (x + x^-1 + y + y^-1) z^-1.
GroupRingElem gardam_unit();

enum class Char3Variant { base, x_y_flipped };

/// The two related units in F_3[P]; x_y_flipped replaces (q, r) by (q_x, r_y).
GroupRingElem char3_unit(Char3Variant variant);

/// Closed-form f-table for the family: with h = (1 - z^(1-2t))^(d-2),
///   f1 = (z^t + z^(1-t)) h,  f2 = z^w h,  f3 = z^w (1 + z^(2t-1)) h,
///   f4 = z^(w+t) h,  f5 = z^w (z^t + z^(1-t)) h,  f6 = h,  f7 = z^(2t-1).
FTable family_f_table(const FamilyParams& params);

/// Substitutes an f-table into the ansatz shape above.
GroupRingElem assemble_from_f(const FTable& ft);

/// The family unit written directly in closed form; equals
/// assemble_from_f(family_f_table(params)) and is kept as a separate route
/// so the two constructions check each other.
GroupRingElem family_unit(const FamilyParams& params);

/// Variant transforms on the (p, s) pair: 0 is the identity,
/// 1 is (p_z, z s), 2 is (p_z, z^-1 s_z). Out-of-range -> std::out_of_range.
GroupRingElem ps_variant(const GroupRingElem& u, int index);

/// Variant transforms on the (q, r) pair: 0 identity, 1 (q_z, z r_z),
/// 2 (q_x, r_y), 3 (q_xz, z r_yz), 4 (z^-1 q, z^-1 r), 5 (z^-1 q_x, z^-1 r_y).
/// Out-of-range -> std::out_of_range.
GroupRingElem qr_variant(const GroupRingElem& u, int index);

struct IdentityCheck {
    std::string name;
    Laurent residual;

    bool ok() const noexcept { return residual.is_zero(); }
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;

    bool all_zero() const noexcept {
        for (const auto& c : checks)
            if (!c.ok())
                return false;
        return true;
    }
};

/// The six-line equation system on f1..f7 equivalent to "the adjoint inverts
/// the assembled element", with f* denoting z-inversion. Chained equalities
/// are reported pairwise against the leftmost expression: 11 residuals.
IdentityReport check_f_system(const FTable& ft);

/// The identities used to back-solve the f-system into the closed family
/// form, evaluated on family_f_table(params): proportionality relations, the
/// zero and unit factorizations, and the Frobenius collapse of (1 - g)^d.
IdentityReport check_reduction_chain(const FamilyParams& params);

} // namespace kaplansky
