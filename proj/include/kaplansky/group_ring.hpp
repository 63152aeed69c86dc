#pragma once

#include <optional>
#include <utility>

#include "kaplansky/laurent.hpp"

namespace kaplansky {

/// Element of the group ring F_d[P] for the torsion-free group
/// P = <a, b | (a^2)^b = a^-2, (b^2)^a = b^-2>, written in the normal form
///
///     u = p + q a + r b + s ab,
///
/// where p, q, r, s are Laurent polynomials in the commuting elements
/// x = a^2, y = b^2, z = (ab)^2. The normal form is unique, so equality and
/// ordering are componentwise; the defaulted ordering (characteristic, then
/// p, q, r, s lexicographically by canonical term lists) is the documented
/// total order used for deterministic output.
class GroupRingElem {
public:
    explicit GroupRingElem(PrimeChar d)
        : char_(d), p_(d), q_(d), r_(d), s_(d) {}

    /// Throws std::invalid_argument when the components disagree on d.
    GroupRingElem(Laurent p, Laurent q, Laurent r, Laurent s);

    static GroupRingElem one(PrimeChar d);

    PrimeChar characteristic() const noexcept { return char_; }
    const Laurent& p() const noexcept { return p_; }
    const Laurent& q() const noexcept { return q_; }
    const Laurent& r() const noexcept { return r_; }
    const Laurent& s() const noexcept { return s_; }

    bool is_zero() const noexcept {
        return p_.is_zero() && q_.is_zero() && r_.is_zero() && s_.is_zero();
    }

    friend GroupRingElem operator+(const GroupRingElem& a, const GroupRingElem& b);
    friend GroupRingElem operator-(const GroupRingElem& a, const GroupRingElem& b);

    /// Product via the closed-form component table obtained by pushing
    /// coefficients through the commutation rules a f = f_yz a, b f = f_xz b,
    /// ab f = f_xy ab and reducing with a^2 = x, b^2 = y, ba = x^-1 y z^-1 ab.
    friend GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b);

    friend bool operator==(const GroupRingElem&, const GroupRingElem&) noexcept = default;
    friend auto operator<=>(const GroupRingElem&, const GroupRingElem&) noexcept = default;

private:
    PrimeChar char_;
    Laurent p_, q_, r_, s_;
};

/// Same product computed by a deliberately independent route: each basis
/// product g' * g (g', g in {1, a, b, ab}) is expanded as a word over {a, b}
/// and rewritten step by step with only the presentation facts
/// (aa -> x, bb -> y, ba -> x^-1 y z^-1 ab, plus the coefficient twists).
/// Exists purely as a cross-check of operator*; keep both routes.
GroupRingElem mul_oracle(const GroupRingElem& lhs, const GroupRingElem& rhs);

/// Candidate inverse (x^-1 p_yz, -x^-1 q, -y^-1 r, z^-1 s_yz) of
/// u = (p, q, r, s).
GroupRingElem gardam_adjoint(const GroupRingElem& u);

struct UnitVerdict {
    enum class Status { verified, not_verified_by_adjoint };

    Status status = Status::not_verified_by_adjoint;
    /// Set when status == verified: the two-sided inverse (the adjoint).
    std::optional<GroupRingElem> inverse;
    /// Set when status != verified: adjoint(u)*u - 1 and u*adjoint(u) - 1.
    std::optional<GroupRingElem> left_residual;
    std::optional<GroupRingElem> right_residual;

    bool verified() const noexcept { return status == Status::verified; }
};

/// Checks whether the adjoint inverts u on both sides. A negative verdict
/// means "not certified by this construction", not "not a unit".
UnitVerdict verify_unit(const GroupRingElem& u);

/// True for k m g with k a nonzero scalar, m a monomial in x, y, z and g a
/// basis element: exactly one component nonzero, and that one a monomial.
bool is_trivial(const GroupRingElem& u);

/// The component symmetries p_xy = x^-1 y^-1 p, q_xy = y q, r_xy = x^-1 r,
/// s_xy = s, which collapse the four unit equations down to two.
bool check_xy_symmetry(const GroupRingElem& u);

/// Keys of the reduced two-equation system. A quadruple satisfying
/// check_xy_symmetry whose (p,s)- and (q,r)-keys agree pairwise is a unit
/// with the adjoint as inverse; the searches join on these.
std::pair<Laurent, Laurent> reduced_pair_keys(const Laurent& p, const Laurent& s);
std::pair<Laurent, Laurent> reduced_pair_keys_qr(const Laurent& q, const Laurent& r);

bool check_reduced(const GroupRingElem& u);

/// Componentwise scalar multiple c * u.
GroupRingElem scaled(const GroupRingElem& u, Coeff c);

} // namespace kaplansky
