#include "kaplansky/group_ring.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace kaplansky {

namespace {

void require_same(PrimeChar a, PrimeChar b) {
    if (a != b)
        throw std::invalid_argument("mixed characteristics: F_" + std::to_string(a.value()) +
                                    " vs F_" + std::to_string(b.value()));
}

Laurent mono(PrimeChar d, std::int32_t i, std::int32_t j, std::int32_t k) {
    return Laurent::monomial(d, ExpVec{i, j, k});
}

} // namespace

GroupRingElem::GroupRingElem(Laurent p, Laurent q, Laurent r, Laurent s)
    : char_(p.characteristic()), p_(std::move(p)), q_(std::move(q)), r_(std::move(r)),
      s_(std::move(s)) {
    require_same(char_, q_.characteristic());
    require_same(char_, r_.characteristic());
    require_same(char_, s_.characteristic());
}

GroupRingElem GroupRingElem::one(PrimeChar d) {
    return GroupRingElem(Laurent::constant(d, 1), Laurent(d), Laurent(d), Laurent(d));
}

GroupRingElem operator+(const GroupRingElem& a, const GroupRingElem& b) {
    return GroupRingElem(a.p_ + b.p_, a.q_ + b.q_, a.r_ + b.r_, a.s_ + b.s_);
}

GroupRingElem operator-(const GroupRingElem& a, const GroupRingElem& b) {
    return GroupRingElem(a.p_ - b.p_, a.q_ - b.q_, a.r_ - b.r_, a.s_ - b.s_);
}

GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b) {
    require_same(a.char_, b.char_);
    const PrimeChar d = a.char_;
    const VarSet yz = VarSet::yz(), xz = VarSet::xz(), xy = VarSet::xy();

    // (p' + q'a + r'b + s'ab)(p + qa + rb + s ab), components of 1, a, b, ab:
    Laurent P = a.p_ * b.p_ + mono(d, 1, 0, 0) * (a.q_ * b.q_.inverted(yz)) +
                mono(d, 0, 1, 0) * (a.r_ * b.r_.inverted(xz)) +
                mono(d, 0, 0, 1) * (a.s_ * b.s_.inverted(xy));
    Laurent Q = a.p_ * b.q_ + a.q_ * b.p_.inverted(yz) +
                mono(d, -1, 0, -1) * (a.r_ * b.s_.inverted(xz)) +
                mono(d, 0, -1, 0) * (a.s_ * b.r_.inverted(xy));
    Laurent R = a.p_ * b.r_ + mono(d, 1, 0, 0) * (a.q_ * b.s_.inverted(yz)) +
                a.r_ * b.p_.inverted(xz) + mono(d, 0, -1, 1) * (a.s_ * b.q_.inverted(xy));
    Laurent S = a.p_ * b.s_ + a.q_ * b.r_.inverted(yz) +
                mono(d, -1, 1, -1) * (a.r_ * b.q_.inverted(xz)) + a.s_ * b.p_.inverted(xy);
    return GroupRingElem(std::move(P), std::move(Q), std::move(R), std::move(S));
}

namespace {

// Moving a Laurent coefficient from the right of a generator to its left
// inverts these variables: a f = f_yz a, b f = f_xz b.
VarSet letter_twist(char g) {
    return g == 'a' ? VarSet::yz() : VarSet::xz();
}

int basis_index(const std::string& w) {
    if (w.empty())
        return 0;
    if (w == "a")
        return 1;
    if (w == "b")
        return 2;
    return 3; // "ab"
}

// Rewrites coeff * word to normal form using only the presentation facts:
// aa -> x, bb -> y, ba -> x^-1 y z^-1 ab. Cofactors produced in the middle
// of the word are pushed left through the prefix one letter at a time.
void reduce_word(PrimeChar d, Laurent coeff, std::string word, Laurent out[4]) {
    for (;;) {
        std::size_t pos = word.size();
        for (std::size_t i = 0; i + 1 < word.size(); ++i) {
            if ((word[i] == 'a' && word[i + 1] == 'a') ||
                (word[i] == 'b' && word[i + 1] == 'b') || (word[i] == 'b' && word[i + 1] == 'a')) {
                pos = i;
                break;
            }
        }
        if (pos == word.size())
            break;
        Laurent cofactor(d);
        std::string replacement;
        if (word[pos] == 'a') {
            cofactor = mono(d, 1, 0, 0); // aa = x
        } else if (word[pos + 1] == 'b') {
            cofactor = mono(d, 0, 1, 0); // bb = y
        } else {
            cofactor = mono(d, -1, 1, -1); // ba = x^-1 y z^-1 ab
            replacement = "ab";
        }
        for (std::size_t j = pos; j-- > 0;)
            cofactor = cofactor.inverted(letter_twist(word[j]));
        coeff = coeff * cofactor;
        word = word.substr(0, pos) + replacement + word.substr(pos + 2);
    }
    const int idx = basis_index(word);
    out[idx] = out[idx] + coeff;
}

} // namespace

GroupRingElem mul_oracle(const GroupRingElem& lhs, const GroupRingElem& rhs) {
    require_same(lhs.characteristic(), rhs.characteristic());
    const PrimeChar d = lhs.characteristic();
    const std::string words[4] = {"", "a", "b", "ab"};
    const Laurent* lcomp[4] = {&lhs.p(), &lhs.q(), &lhs.r(), &lhs.s()};
    const Laurent* rcomp[4] = {&rhs.p(), &rhs.q(), &rhs.r(), &rhs.s()};

    Laurent out[4] = {Laurent(d), Laurent(d), Laurent(d), Laurent(d)};
    for (int gi = 0; gi < 4; ++gi) {
        if (lcomp[gi]->is_zero())
            continue;
        VarSet twist = VarSet::none();
        for (const char c : words[gi])
            twist = twist ^ letter_twist(c);
        for (int gj = 0; gj < 4; ++gj) {
            if (rcomp[gj]->is_zero())
                continue;
            reduce_word(d, *lcomp[gi] * rcomp[gj]->inverted(twist), words[gi] + words[gj], out);
        }
    }
    return GroupRingElem(out[0], out[1], out[2], out[3]);
}

GroupRingElem gardam_adjoint(const GroupRingElem& u) {
    const PrimeChar d = u.characteristic();
    const VarSet yz = VarSet::yz();
    return GroupRingElem(mono(d, -1, 0, 0) * u.p().inverted(yz), -(mono(d, -1, 0, 0) * u.q()),
                         -(mono(d, 0, -1, 0) * u.r()), mono(d, 0, 0, -1) * u.s().inverted(yz));
}

UnitVerdict verify_unit(const GroupRingElem& u) {
    const GroupRingElem adj = gardam_adjoint(u);
    const GroupRingElem id = GroupRingElem::one(u.characteristic());
    const GroupRingElem left = adj * u - id;
    const GroupRingElem right = u * adj - id;

    UnitVerdict v;
    if (left.is_zero() && right.is_zero()) {
        v.status = UnitVerdict::Status::verified;
        v.inverse = adj;
    } else {
        v.status = UnitVerdict::Status::not_verified_by_adjoint;
        v.left_residual = left;
        v.right_residual = right;
    }
    return v;
}

bool is_trivial(const GroupRingElem& u) {
    const Laurent* comps[4] = {&u.p(), &u.q(), &u.r(), &u.s()};
    const Laurent* only = nullptr;
    for (const Laurent* c : comps) {
        if (c->is_zero())
            continue;
        if (only != nullptr)
            return false;
        only = c;
    }
    return only != nullptr && only->as_monomial().has_value();
}

bool check_xy_symmetry(const GroupRingElem& u) {
    const PrimeChar d = u.characteristic();
    const VarSet xy = VarSet::xy();
    return u.p().inverted(xy) == mono(d, -1, -1, 0) * u.p() &&
           u.q().inverted(xy) == mono(d, 0, 1, 0) * u.q() &&
           u.r().inverted(xy) == mono(d, -1, 0, 0) * u.r() && u.s().inverted(xy) == u.s();
}

std::pair<Laurent, Laurent> reduced_pair_keys(const Laurent& p, const Laurent& s) {
    require_same(p.characteristic(), s.characteristic());
    const PrimeChar d = p.characteristic();
    const Laurent p_yz = p.inverted(VarSet::yz());
    const Laurent s_yz = s.inverted(VarSet::yz());
    return {p * p_yz + mono(d, 1, 0, 0) * (s * s_yz),
            p * s_yz + mono(d, 0, 1, 1) * (p_yz * s)};
}

std::pair<Laurent, Laurent> reduced_pair_keys_qr(const Laurent& q, const Laurent& r) {
    require_same(q.characteristic(), r.characteristic());
    const PrimeChar d = q.characteristic();
    const Laurent q_yz = q.inverted(VarSet::yz());
    const Laurent r_yz = r.inverted(VarSet::yz());
    return {r * r_yz + mono(d, 1, 0, 0) * (q * q_yz) + mono(d, 1, 0, 0),
            r * q_yz + mono(d, 0, 1, 1) * (q * r_yz)};
}

bool check_reduced(const GroupRingElem& u) {
    const auto ps = reduced_pair_keys(u.p(), u.s());
    const auto qr = reduced_pair_keys_qr(u.q(), u.r());
    return ps.first == qr.first && ps.second == qr.second;
}

GroupRingElem scaled(const GroupRingElem& u, Coeff c) {
    const Laurent k = Laurent::constant(u.characteristic(), c.value());
    return GroupRingElem(k * u.p(), k * u.q(), k * u.r(), k * u.s());
}

} // namespace kaplansky
