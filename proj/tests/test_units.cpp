#include <doctest.h>

#include <array>
#include <set>
#include <stdexcept>

#include "kaplansky/units.hpp"

using namespace kaplansky;

namespace {

const PrimeChar d2(2);
const PrimeChar d3(3);

Laurent zp(PrimeChar d, std::int32_t k, std::int64_t c = 1) {
    return Laurent::monomial(d, ExpVec{0, 0, k}, c);
}

FTable char3_base_f_table() {
    const Laurent one = Laurent::constant(d3, 1);
    return FTable({zp(d3, -1) - zp(d3, 1), one - zp(d3, -1), zp(d3, 1) - zp(d3, -1),
                   zp(d3, 1) - one, zp(d3, 1) - zp(d3, -1), zp(d3, -1) - one, zp(d3, 1, -1)});
}

} // namespace

TEST_CASE("the order-21 unit: support sizes and verification") {
    const GroupRingElem u = gardam_unit();
    CHECK(u.characteristic() == d2);
    CHECK(u.p().term_count() == 8);
    CHECK(u.q().term_count() == 4);
    CHECK(u.r().term_count() == 4);
    CHECK(u.s().term_count() == 5);
    CHECK(check_xy_symmetry(u));
    CHECK(check_reduced(u));
    CHECK_FALSE(is_trivial(u));

    const UnitVerdict verdict = verify_unit(u);
    REQUIRE(verdict.verified());
    REQUIRE(verdict.inverse.has_value());
    CHECK(*verdict.inverse == gardam_adjoint(u));
    CHECK(*verdict.inverse * u == GroupRingElem::one(d2));
    CHECK(u * *verdict.inverse == GroupRingElem::one(d2));
    CHECK(mul_oracle(u, *verdict.inverse) == GroupRingElem::one(d2));
}

TEST_CASE("characteristic-3 units: base, flip, and their relation") {
    const GroupRingElem base = char3_unit(Char3Variant::base);
    const GroupRingElem flipped = char3_unit(Char3Variant::x_y_flipped);
    for (const GroupRingElem& u : {base, flipped}) {
        CHECK(u.characteristic() == d3);
        CHECK(check_xy_symmetry(u));
        CHECK(check_reduced(u));
        CHECK_FALSE(is_trivial(u));
        CHECK(verify_unit(u).verified());
    }
    CHECK(base != flipped);
    CHECK(flipped == GroupRingElem(base.p(), base.q().inverted(VarSet::x()),
                                   base.r().inverted(VarSet::y()), base.s()));
    CHECK(qr_variant(base, 2) == flipped);
}

TEST_CASE("the backsolved f-table reproduces the characteristic-3 base unit") {
    CHECK(assemble_from_f(char3_base_f_table()) == char3_unit(Char3Variant::base));
    CHECK(check_f_system(char3_base_f_table()).all_zero());
}

TEST_CASE("frozen family tables") {
    const FTable t200 = family_f_table(FamilyParams{d2, 0, 0});
    const Laurent one2 = Laurent::constant(d2, 1);
    CHECK(t200.f(1) == one2 + zp(d2, 1));
    CHECK(t200.f(2) == one2);
    CHECK(t200.f(3) == one2 + zp(d2, -1));
    CHECK(t200.f(4) == one2);
    CHECK(t200.f(5) == one2 + zp(d2, 1));
    CHECK(t200.f(6) == one2);
    CHECK(t200.f(7) == zp(d2, -1));

    // h = (1 - z^(1-2t))^(d-2) at d = 3, t = 1: 1 - z^-1 = 1 + 2 z^-1.
    const FTable t310 = family_f_table(FamilyParams{d3, 1, 0});
    CHECK(t310.f(6) == Laurent::make(d3, {{ExpVec{0, 0, 0}, 1}, {ExpVec{0, 0, -1}, 2}}));
    CHECK(t310.f(7) == zp(d3, 1));
}

TEST_CASE("the closed family form and the assembled f-table route agree") {
    for (const std::uint32_t dv : {2u, 3u, 5u, 7u}) {
        const PrimeChar d(dv);
        for (std::int32_t t = -1; t <= 2; ++t)
            for (std::int32_t w = -1; w <= 1; ++w) {
                const FamilyParams params{d, t, w};
                const GroupRingElem direct = family_unit(params);
                CHECK(direct == assemble_from_f(family_f_table(params)));
                CHECK(check_xy_symmetry(direct));
                CHECK(verify_unit(direct).verified());
                CHECK_FALSE(is_trivial(direct));
            }
    }
}

TEST_CASE("f-tables must be z-only and single-characteristic") {
    const Laurent bad = Laurent::monomial(d3, ExpVec{1, 0, 0});
    const Laurent good = Laurent::constant(d3, 1);
    CHECK_THROWS_AS(FTable({bad, good, good, good, good, good, good}), std::invalid_argument);
    const Laurent other = Laurent::constant(PrimeChar(5), 1);
    CHECK_THROWS_AS(FTable({good, good, good, other, good, good, good}), std::invalid_argument);

    const FTable ok = char3_base_f_table();
    CHECK_THROWS_AS((void)ok.f(0), std::out_of_range);
    CHECK_THROWS_AS((void)ok.f(8), std::out_of_range);
    CHECK(ok.f(7) == zp(d3, 1, -1));
}

TEST_CASE("all 18 pair-transform combinations of the order-21 unit are units") {
    const GroupRingElem u = gardam_unit();
    std::set<GroupRingElem> distinct;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 6; ++j) {
            const GroupRingElem v = ps_variant(qr_variant(u, j), i);
            CHECK(check_xy_symmetry(v));
            CHECK(check_reduced(v));
            CHECK_FALSE(is_trivial(v));
            CHECK(verify_unit(v).verified());
            distinct.insert(v);
        }
    CHECK(distinct.size() == 18);

    // The d = 2 family member sits inside the table of transforms.
    CHECK(distinct.count(family_unit(FamilyParams{d2, 0, 0})) == 1);
}

TEST_CASE("pair transforms: identity slot and range checks") {
    const GroupRingElem u = gardam_unit();
    CHECK(ps_variant(u, 0) == u);
    CHECK(qr_variant(u, 0) == u);
    CHECK_THROWS_AS(ps_variant(u, 3), std::out_of_range);
    CHECK_THROWS_AS(ps_variant(u, -1), std::out_of_range);
    CHECK_THROWS_AS(qr_variant(u, 6), std::out_of_range);
    CHECK_THROWS_AS(qr_variant(u, -1), std::out_of_range);
}

TEST_CASE("the f-system reports eleven named residuals, all zero on the family") {
    const IdentityReport rep = check_f_system(family_f_table(FamilyParams{d3, 1, 0}));
    CHECK(rep.checks.size() == 11);
    CHECK(rep.all_zero());
    CHECK(rep.checks.front().name == "f7* f7 = 1");
    for (const auto& check : rep.checks)
        CHECK(check.ok());
}

TEST_CASE("the f-system pinpoints a broken entry") {
    const FTable good = family_f_table(FamilyParams{d3, 1, 0});
    auto fs = good.all();
    // f7 -> z f7 leaves "f7* f7 = 1" intact (the z factors cancel under the
    // z-inversion star), so shift by a constant instead.
    fs[6] = fs[6] + Laurent::constant(d3, 1);
    const IdentityReport rep = check_f_system(FTable(fs));
    CHECK_FALSE(rep.all_zero());
    CHECK_FALSE(rep.checks[0].ok()); // f7* f7 = 1
    CHECK(rep.checks[3].ok());       // f2* f2 = f4* f4 is untouched
}

TEST_CASE("the reduction chain holds on a parameter grid") {
    for (const std::uint32_t dv : {2u, 3u, 5u, 7u}) {
        const PrimeChar d(dv);
        for (std::int32_t t = -1; t <= 2; ++t)
            for (std::int32_t w = -1; w <= 1; ++w) {
                const IdentityReport rep = check_reduction_chain(FamilyParams{d, t, w});
                CHECK(rep.checks.size() == 8);
                CHECK(rep.all_zero());
            }
    }
}
