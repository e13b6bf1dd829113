#include <catch2/catch_amalgamated.hpp>

#include "hodgeci/hodgeci.hpp"

using namespace hodgeci;

namespace {

/* quadric-threefold ambient written out by hand */
CustomAmbient quadric3_literal() {
    CustomAmbient c;
    c.id = "quadric3";
    c.dim = 3;
    {
        HodgeDiamond d(3);
        for (int k = 0; k <= 3; ++k) {
            BigradedDims t;
            t.add(k, k, 1);
            d.set_table(2 * k, std::move(t));
        }
        c.sections.push_back(std::move(d));
    }
    {
        HodgeDiamond d(2);
        BigradedDims t0, t1, t2;
        t0.add(0, 0, 1);
        t1.add(1, 1, 2);
        t2.add(2, 2, 1);
        d.set_table(0, t0);
        d.set_table(2, t1);
        d.set_table(4, t2);
        c.sections.push_back(std::move(d));
    }
    c.sections.push_back(projective_space_diamond(1));
    c.sections.push_back(point_diamond(2));
    return c;
}

}  // namespace

TEST_CASE("projective spaces have one class in each even degree") {
    HodgeDiamond p4 = projective_space_diamond(4);
    CHECK(p4.valid());
    for (int k = 0; k <= 8; ++k) {
        if (k % 2 == 0)
            CHECK(p4.table(k) == BigradedDims{{{k / 2, k / 2}, 1}});
        else
            CHECK(p4.table(k).empty());
    }
    CHECK_THROWS_AS(projective_space_diamond(-1), RangeError);
}

TEST_CASE("tower sections of built-in ambients are smaller projective spaces") {
    AmbientSpec p4{ProjectiveSpace{4}};
    CHECK(p4.dim() == 4);
    CHECK(p4.label() == "P4");
    CHECK(p4.base_id() == "P");
    CHECK(ambient_degree(p4) == 1);
    CHECK(tower_section(p4, 0) == projective_space_diamond(4));
    CHECK(tower_section(p4, 3) == projective_space_diamond(1));
    CHECK_THROWS_AS(tower_section(p4, 5), RangeError);

    AmbientSpec p3 = shift_tower(p4);
    CHECK(p3.is_projective_space());
    CHECK(p3.dim() == 3);
}

TEST_CASE("custom ambient towers carry their own section diamonds") {
    AmbientSpec q3{quadric3_literal()};
    CHECK(q3.dim() == 3);
    CHECK(q3.label() == "quadric3");
    CHECK(q3.base_id() == "quadric3");
    CHECK(ambient_degree(q3) == 2);
    CHECK(tower_section(q3, 1).table(2).at(1, 1) == 2);
    CHECK(validate_custom_spec(q3).valid());

    AmbientSpec shifted = shift_tower(q3);
    CHECK(shifted.dim() == 2);
    CHECK(shifted.base_id() == "quadric3");
    CHECK(tower_section(shifted, 0) == tower_section(q3, 1));
}

TEST_CASE("custom ambient validation catches malformed towers") {
    SECTION("reserved and empty ids") {
        CustomAmbient c = quadric3_literal();
        c.id = "P";
        CHECK_FALSE(validate_custom_spec(AmbientSpec{c}).valid());
        c.id = "";
        CHECK_FALSE(validate_custom_spec(AmbientSpec{c}).valid());
    }
    SECTION("wrong number of sections") {
        CustomAmbient c = quadric3_literal();
        c.sections.pop_back();
        CHECK_FALSE(validate_custom_spec(AmbientSpec{c}).valid());
    }
    SECTION("wrong dimension chain") {
        CustomAmbient c = quadric3_literal();
        c.sections[2] = projective_space_diamond(2);
        CHECK_FALSE(validate_custom_spec(AmbientSpec{c}).valid());
    }
    SECTION("disconnected section") {
        CustomAmbient c = quadric3_literal();
        HodgeDiamond d(1);
        BigradedDims t0, t1;
        t0.add(0, 0, 2);
        t1.add(1, 0, 1);
        t1.add(0, 1, 1);
        d.set_table(0, t0);
        d.set_table(1, t1);
        d.set_table(2, tate_twist(t0, 1));
        c.sections[2] = std::move(d);
        ValidationReport rep = validate_custom_spec(AmbientSpec{c});
        CHECK_FALSE(rep.valid());
    }
    SECTION("consecutive sections must share cohomology below the smaller middle") {
        CustomAmbient c = quadric3_literal();
        // a surface with h^1 != 0 cannot be a hyperplane section of a
        // threefold with h^1 = 0
        HodgeDiamond d(2);
        BigradedDims t0, t1, t2;
        t0.add(0, 0, 1);
        t1.add(1, 0, 1);
        t1.add(0, 1, 1);
        t2.add(1, 1, 2);
        d.set_table(0, t0);
        d.set_table(1, t1);
        d.set_table(2, t2);
        d.set_table(3, reflect(t1, 2));
        d.set_table(4, tate_twist(t0, 2));
        REQUIRE(d.valid());
        c.sections[1] = std::move(d);
        CHECK_FALSE(validate_custom_spec(AmbientSpec{c}).valid());
    }
    SECTION("bottom section must be a positive point count") {
        CustomAmbient c = quadric3_literal();
        c.sections[3] = HodgeDiamond(0);  // zero points
        CHECK_FALSE(validate_custom_spec(AmbientSpec{c}).valid());
    }
}

TEST_CASE("point counts multiply the ambient degree") {
    AmbientSpec p2{ProjectiveSpace{2}};
    CHECK(point_count(CISpec{p2, {2, 3}}) == 6);
    CHECK_THROWS_AS(point_count(CISpec{p2, {2}}), DimensionError);
    AmbientSpec q3{quadric3_literal()};
    CHECK(point_count(CISpec{q3, {2, 2, 3}}) == 24);
}

TEST_CASE("memo keys normalize linear factors and degree order") {
    AmbientSpec p4{ProjectiveSpace{4}};
    CHECK(memo_key(p4, {5}).str() == "P^4|5");
    CHECK(memo_key(p4, {3, 2}).str() == "P^4|2,3");
    CHECK(memo_key(p4, {1, 4}).str() == "P^3|4");
    CHECK(memo_key(p4, {1, 1, 1, 1}).str() == "P^0|");

    SECTION("folding a linear factor equals shifting the tower") {
        std::vector<int> ds{2, 3};
        std::vector<int> ds1 = ds;
        ds1.push_back(1);
        CHECK(memo_key(p4, ds1).str() == memo_key(shift_tower(p4), ds).str());

        AmbientSpec q3{quadric3_literal()};
        CHECK(memo_key(q3, {3, 1}).str() == memo_key(shift_tower(q3), {3}).str());
    }

    SECTION("invalid degree lists") {
        CHECK_THROWS_AS(memo_key(p4, {0}), SpecError);
        CHECK_THROWS_AS(memo_key(p4, {1, 1, 1, 1, 1}), SpecError);
        CHECK_THROWS_AS(memo_key(AmbientSpec{ProjectiveSpace{2}}, {2, 2, 2}), SpecError);
    }
}

TEST_CASE("memo store is insert-once with collision detection") {
    MemoStore memo;
    CHECK(memo.find("x") == nullptr);
    memo.put("x", point_diamond(3));
    REQUIRE(memo.find("x") != nullptr);
    CHECK(memo.find("x")->betti(0) == 3);
    CHECK(memo.size() == 1);

    memo.put("x", point_diamond(3));  // same value is fine
    CHECK(memo.size() == 1);
    CHECK_THROWS_AS(memo.put("x", point_diamond(4)), ConsistencyError);
}
