#include "kaplansky/units.hpp"

#include <stdexcept>
#include <utility>

namespace kaplansky {

namespace {

Laurent zpow(PrimeChar d, std::int32_t e) {
    return Laurent::monomial(d, ExpVec{0, 0, e});
}

Laurent xmono(PrimeChar d, std::int32_t i) {
    return Laurent::monomial(d, ExpVec{i, 0, 0});
}

Laurent ymono(PrimeChar d, std::int32_t j) {
    return Laurent::monomial(d, ExpVec{0, j, 0});
}

Laurent one(PrimeChar d) {
    return Laurent::constant(d, 1);
}

bool z_only(const Laurent& f) {
    for (const auto& t : f.terms())
        if (t.exp.i != 0 || t.exp.j != 0)
            return false;
    return true;
}

} // namespace

FTable::FTable(std::array<Laurent, 7> f) : f_(std::move(f)) {
    for (int i = 1; i < 7; ++i)
        if (f_[i].characteristic() != f_[0].characteristic())
            throw std::invalid_argument("f-table entries disagree on the characteristic");
    for (int i = 0; i < 7; ++i)
        if (!z_only(f_[i]))
            throw std::invalid_argument("f" + std::to_string(i + 1) +
                                        " must be a polynomial in z only");
}

const Laurent& FTable::f(int index) const {
    if (index < 1 || index > 7)
        throw std::out_of_range("f-table index must be 1..7, got " + std::to_string(index));
    return f_[static_cast<std::size_t>(index - 1)];
}

GroupRingElem gardam_unit() {
    const PrimeChar d(2);
    const Laurent p = Laurent::make(d, {{ExpVec{0, 0, 0}, 1}, {ExpVec{1, 0, 0}, 1}}) *
                      Laurent::make(d, {{ExpVec{0, 0, 0}, 1}, {ExpVec{0, 1, 0}, 1}}) *
                      Laurent::make(d, {{ExpVec{0, 0, 0}, 1}, {ExpVec{0, 0, -1}, 1}});
    const Laurent q = Laurent::make(d, {{ExpVec{-1, -1, 0}, 1},
                                        {ExpVec{1, 0, 0}, 1},
                                        {ExpVec{0, -1, 1}, 1},
                                        {ExpVec{0, 0, 1}, 1}});
    const Laurent r = Laurent::make(d, {{ExpVec{0, 0, 0}, 1},
                                        {ExpVec{1, 0, 0}, 1},
                                        {ExpVec{0, -1, 1}, 1},
                                        {ExpVec{1, 1, 1}, 1}});
    const Laurent s = Laurent::make(d, {{ExpVec{0, 0, 0}, 1},
                                        {ExpVec{1, 0, -1}, 1},
                                        {ExpVec{-1, 0, -1}, 1},
                                        {ExpVec{0, 1, -1}, 1},
                                        {ExpVec{0, -1, -1}, 1}});
    return GroupRingElem(p, q, r, s);
}

GroupRingElem char3_unit(Char3Variant variant) {
    const PrimeChar d(3);
    const Laurent one_plus_x = one(d) + xmono(d, 1);
    const Laurent one_plus_yinv = one(d) + ymono(d, -1);
    const Laurent z_minus_zinv = zpow(d, 1) - zpow(d, -1);

    const Laurent p = one_plus_x * (one(d) + ymono(d, 1)) * (zpow(d, -1) - zpow(d, 1));
    const Laurent q =
        one_plus_x * (xmono(d, -1) + ymono(d, -1)) * (one(d) - zpow(d, -1)) +
        one_plus_yinv * z_minus_zinv;
    const Laurent r = one_plus_yinv * (xmono(d, 1) + ymono(d, 1)) * (zpow(d, 1) - one(d)) +
                      one_plus_x * z_minus_zinv;
    const Laurent s =
        -zpow(d, 1) +
        (one(d) + xmono(d, 1) + xmono(d, -1) + ymono(d, 1) + ymono(d, -1)) *
            (zpow(d, -1) - one(d));

    if (variant == Char3Variant::base)
        return GroupRingElem(p, q, r, s);
    return GroupRingElem(p, q.inverted(VarSet::x()), r.inverted(VarSet::y()), s);
}

FTable family_f_table(const FamilyParams& params) {
    const PrimeChar d = params.characteristic;
    const std::int32_t t = params.t, w = params.w;
    const Laurent h = pow(one(d) - zpow(d, 1 - 2 * t), d.value() - 2);
    const Laurent zt_pair = zpow(d, t) + zpow(d, 1 - t);
    return FTable({zt_pair * h, zpow(d, w) * h, zpow(d, w) * (one(d) + zpow(d, 2 * t - 1)) * h,
                   zpow(d, w + t) * h, zpow(d, w) * zt_pair * h, h, zpow(d, 2 * t - 1)});
}

GroupRingElem assemble_from_f(const FTable& ft) {
    const PrimeChar d = ft.characteristic();
    const Laurent one_plus_x = one(d) + xmono(d, 1);
    const Laurent one_plus_yinv = one(d) + ymono(d, -1);

    const Laurent p = one_plus_x * (one(d) + ymono(d, 1)) * ft.f(1);
    const Laurent q = one_plus_x * (xmono(d, -1) + ymono(d, -1)) * ft.f(2) +
                      one_plus_yinv * ft.f(3);
    const Laurent r = one_plus_yinv * (xmono(d, 1) + ymono(d, 1)) * ft.f(4) +
                      one_plus_x * ft.f(5);
    const Laurent s = (xmono(d, 1) + xmono(d, -1) + ymono(d, 1) + ymono(d, -1) +
                       Laurent::constant(d, 4)) *
                          ft.f(6) +
                      ft.f(7);
    return GroupRingElem(p, q, r, s);
}

GroupRingElem family_unit(const FamilyParams& params) {
    const PrimeChar d = params.characteristic;
    const std::int32_t t = params.t, w = params.w;
    const Laurent h = pow(one(d) - zpow(d, 1 - 2 * t), d.value() - 2);
    const Laurent zt_pair = zpow(d, t) + zpow(d, 1 - t);
    const Laurent one_plus_x = one(d) + xmono(d, 1);
    const Laurent one_plus_yinv = one(d) + ymono(d, -1);

    const Laurent p = one_plus_x * (one(d) + ymono(d, 1)) * zt_pair * h;
    const Laurent q = zpow(d, w) *
                      (one_plus_x * (xmono(d, -1) + ymono(d, -1)) +
                       one_plus_yinv * (one(d) + zpow(d, 2 * t - 1))) *
                      h;
    const Laurent r = zpow(d, w) *
                      (one_plus_yinv * (xmono(d, 1) + ymono(d, 1)) * zpow(d, t) +
                       one_plus_x * zt_pair) *
                      h;
    const Laurent s = zpow(d, 2 * t - 1) +
                      (Laurent::constant(d, 4) + xmono(d, 1) + xmono(d, -1) + ymono(d, 1) +
                       ymono(d, -1)) *
                          h;
    return GroupRingElem(p, q, r, s);
}

GroupRingElem ps_variant(const GroupRingElem& u, int index) {
    const PrimeChar d = u.characteristic();
    const VarSet z = VarSet::z();
    switch (index) {
    case 0:
        return u;
    case 1:
        return GroupRingElem(u.p().inverted(z), u.q(), u.r(), zpow(d, 1) * u.s());
    case 2:
        return GroupRingElem(u.p().inverted(z), u.q(), u.r(), zpow(d, -1) * u.s().inverted(z));
    default:
        throw std::out_of_range("ps_variant index must be 0..2, got " + std::to_string(index));
    }
}

GroupRingElem qr_variant(const GroupRingElem& u, int index) {
    const PrimeChar d = u.characteristic();
    const VarSet x = VarSet::x(), y = VarSet::y(), z = VarSet::z(), xz = VarSet::xz();
    const VarSet yz = VarSet::yz();
    switch (index) {
    case 0:
        return u;
    case 1:
        return GroupRingElem(u.p(), u.q().inverted(z), zpow(d, 1) * u.r().inverted(z), u.s());
    case 2:
        return GroupRingElem(u.p(), u.q().inverted(x), u.r().inverted(y), u.s());
    case 3:
        return GroupRingElem(u.p(), u.q().inverted(xz), zpow(d, 1) * u.r().inverted(yz), u.s());
    case 4:
        return GroupRingElem(u.p(), zpow(d, -1) * u.q(), zpow(d, -1) * u.r(), u.s());
    case 5:
        return GroupRingElem(u.p(), zpow(d, -1) * u.q().inverted(x),
                             zpow(d, -1) * u.r().inverted(y), u.s());
    default:
        throw std::out_of_range("qr_variant index must be 0..5, got " + std::to_string(index));
    }
}

IdentityReport check_f_system(const FTable& ft) {
    const PrimeChar d = ft.characteristic();
    const VarSet zset = VarSet::z();
    const auto star = [&](int i) { return ft.f(i).inverted(zset); };
    const Laurent z = zpow(d, 1);
    const Laurent four = Laurent::constant(d, 4);

    // Cross terms f_i* f_j + z f_j* f_i that the last two lines share.
    const auto cross = [&](int i, int j) { return star(i) * ft.f(j) + z * (star(j) * ft.f(i)); };

    const Laurent f2s_f5 = star(2) * ft.f(5);
    const Laurent f3s_f3 = star(3) * ft.f(3);
    const Laurent f2s_f2 = star(2) * ft.f(2);

    IdentityReport rep;
    rep.checks.push_back({"f7* f7 = 1", star(7) * ft.f(7) - one(d)});
    rep.checks.push_back({"f3* f3 = f5* f5", f3s_f3 - star(5) * ft.f(5)});
    rep.checks.push_back({"f3* f3 = (f7* f6 + f6* f7) + 4 f6* f6",
                          f3s_f3 - (star(7) * ft.f(6) + star(6) * ft.f(7) + four * (star(6) * ft.f(6)))});
    rep.checks.push_back({"f2* f2 = f4* f4", f2s_f2 - star(4) * ft.f(4)});
    rep.checks.push_back({"f2* f2 = f6* f6", f2s_f2 - star(6) * ft.f(6)});
    rep.checks.push_back(
        {"f1* f1 = f2* f3 + f4* f5", star(1) * ft.f(1) - (star(2) * ft.f(3) + star(4) * ft.f(5))});
    rep.checks.push_back({"f2* f5 = z f5* f2", f2s_f5 - z * (star(5) * ft.f(2))});
    rep.checks.push_back({"f2* f5 = f3* f4", f2s_f5 - star(3) * ft.f(4)});
    rep.checks.push_back({"f2* f5 = z f4* f3", f2s_f5 - z * (star(4) * ft.f(3))});
    rep.checks.push_back(
        {"f2* f5 = (f6* f1 + z f1* f6) - (f2* f4 + z f4* f2)", f2s_f5 - (cross(6, 1) - cross(2, 4))});
    rep.checks.push_back({"f3* f5 + z f5* f3 = (f7* f1 + z f1* f7) + 4 (f2* f4 + z f4* f2)",
                          cross(3, 5) - (cross(7, 1) + four * cross(2, 4))});
    return rep;
}

IdentityReport check_reduction_chain(const FamilyParams& params) {
    const PrimeChar d = params.characteristic;
    const std::int32_t t = params.t, w = params.w;
    const FTable ft = family_f_table(params);
    const VarSet zset = VarSet::z();
    const auto star = [&](const Laurent& f) { return f.inverted(zset); };

    const Laurent zt_pair = zpow(d, t) + zpow(d, 1 - t);
    const Laurent g = zpow(d, 1 - 2 * t);

    IdentityReport rep;
    rep.checks.push_back({"f5 = z^(1-t) f3", ft.f(5) - zpow(d, 1 - t) * ft.f(3)});
    rep.checks.push_back({"f1 = (z^t + z^(1-t)) f6", ft.f(1) - zt_pair * ft.f(6)});
    rep.checks.push_back(
        {"(f1 - (z^t + z^(1-t)) f6)(f1* - (z^-t + z^(t-1)) f6*) = 0",
         (ft.f(1) - zt_pair * ft.f(6)) *
             (star(ft.f(1)) - (zpow(d, -t) + zpow(d, t - 1)) * star(ft.f(6)))});
    rep.checks.push_back({"f3 = (1 + z^(2t-1)) f2",
                          ft.f(3) - (one(d) + zpow(d, 2 * t - 1)) * ft.f(2)});
    rep.checks.push_back(
        {"(f7 - z^(2t-1)(1 - z^(1-2t))^2 f6)(f7* - z^(1-2t)(1 - z^(2t-1))^2 f6*) = 1",
         (ft.f(7) - zpow(d, 2 * t - 1) * pow(one(d) - g, 2) * ft.f(6)) *
                 (star(ft.f(7)) - g * pow(one(d) - zpow(d, 2 * t - 1), 2) * star(ft.f(6))) -
             one(d)});
    rep.checks.push_back({"(1 - g)^d = 1 + (-g)^d for g = z^(1-2t)",
                          pow(one(d) - g, d.value()) - (one(d) + pow(-g, d.value()))});
    rep.checks.push_back({"f4 = z^t f2", ft.f(4) - zpow(d, t) * ft.f(2)});
    rep.checks.push_back({"f2 = z^w f6", ft.f(2) - zpow(d, w) * ft.f(6)});
    return rep;
}

} // namespace kaplansky
