#include <catch2/catch_amalgamated.hpp>

#include "hodgeci/hodgeci.hpp"

using namespace hodgeci;

namespace {

AmbientSpec P(int n) { return AmbientSpec{ProjectiveSpace{n}}; }

HodgeDiamond run(const CISpec& spec) {
    MemoStore memo;
    return compute_diamond(spec, memo);
}

long long alternating_sum(const CircleBundleCohomology& t) {
    long long s = 0;
    for (int k = 0; k < static_cast<int>(t.degrees.size()); ++k)
        s += (k % 2 == 0 ? 1 : -1) * t.betti(k);
    return s;
}

}  // namespace

TEST_CASE("circle bundle over a projective line has the Hopf pattern") {
    CircleBundleCohomology t = circle_bundle_cohomology(projective_space_diamond(1), 2);
    REQUIRE(t.degrees.size() == 4);
    CHECK(t.betti(0) == 1);
    CHECK(t.betti(1) == 0);
    CHECK(t.betti(2) == 0);
    CHECK(t.betti(3) == 1);
    REQUIRE(t.degrees[0].pieces().size() == 1);
    CHECK(t.degrees[0].pieces()[0].first == 0);
    REQUIRE(t.degrees[3].pieces().size() == 1);
    CHECK(t.degrees[3].pieces()[0].first == 4);  // top class sits two weights up
    CHECK(t.degrees[3].pieces()[0].second == BigradedDims{{{2, 2}, 1}});
    CHECK(t.betti(7) == 0);
    CHECK(t.betti(-1) == 0);
}

TEST_CASE("circle bundle over an elliptic curve") {
    CircleBundleCohomology t = circle_bundle_cohomology(run({P(2), {3}}), 2);
    CHECK(t.betti(0) == 1);
    CHECK(t.betti(1) == 2);
    CHECK(t.betti(2) == 2);
    CHECK(t.betti(3) == 1);
    REQUIRE(t.degrees[1].pieces().size() == 1);
    CHECK(t.degrees[1].pieces()[0].first == 1);
    CHECK(t.degrees[1].pieces()[0].second == BigradedDims{{{1, 0}, 1}, {{0, 1}, 1}});
    REQUIRE(t.degrees[2].pieces().size() == 1);
    CHECK(t.degrees[2].pieces()[0].first == 3);
    CHECK(t.degrees[2].pieces()[0].second == BigradedDims{{{2, 1}, 1}, {{1, 2}, 1}});
    CHECK(alternating_sum(t) == 0);
}

TEST_CASE("circle bundle over a quartic surface") {
    CircleBundleCohomology t = circle_bundle_cohomology(run({P(3), {4}}), 3);
    CHECK(t.betti(0) == 1);
    CHECK(t.betti(1) == 0);
    CHECK(t.betti(2) == 21);
    CHECK(t.betti(3) == 21);
    CHECK(t.betti(4) == 0);
    CHECK(t.betti(5) == 1);
    REQUIRE(t.degrees[2].pieces().size() == 1);
    CHECK(t.degrees[2].pieces()[0].first == 2);
    REQUIRE(t.degrees[3].pieces().size() == 1);
    CHECK(t.degrees[3].pieces()[0].first == 4);
    REQUIRE(t.degrees[5].pieces().size() == 1);
    CHECK(t.degrees[5].pieces()[0].second == BigradedDims{{{3, 3}, 1}});
    CHECK(alternating_sum(t) == 0);
}

TEST_CASE("circle bundle euler characteristic vanishes over engine-produced loci") {
    MemoStore memo;
    Context ctx{memo};
    for (int n = 1; n <= 4; ++n)
        for (int d1 = 1; d1 <= 3; ++d1)
            for (int d2 = d1; d2 <= 3; ++d2) {
                HodgeDiamond i2 = compute_diamond(CISpec{P(n + 1), {d1, d2}}, ctx);
                CHECK(alternating_sum(circle_bundle_cohomology(i2, n)) == 0);
            }
}

TEST_CASE("circle bundle argument validation") {
    CHECK_THROWS_AS(circle_bundle_cohomology(projective_space_diamond(2), 2), DimensionError);
    CHECK_THROWS_AS(circle_bundle_cohomology(projective_space_diamond(1), 0), DimensionError);
}

TEST_CASE("blow-up along a codimension-two center") {
    HodgeDiamond q3 = run({P(4), {2}});
    HodgeDiamond curve = run({P(4), {2, 3, 5}});
    REQUIRE(curve.table(1).at(1, 0) == 76);

    HodgeDiamond blown = blowup_correction(q3, curve);
    CHECK(blown.dim() == 3);
    CHECK(blown.table(2) == BigradedDims{{{1, 1}, 2}});
    CHECK(blown.table(3) == BigradedDims{{{2, 1}, 76}, {{1, 2}, 76}});
    CHECK(blown.table(4) == BigradedDims{{{2, 2}, 2}});
    CHECK(blown.valid());
    CHECK(euler_characteristic(blown) == -146);
    CHECK(euler_characteristic(blown) ==
          euler_characteristic(q3) + euler_characteristic(curve));

    SECTION("no center means no change") {
        CHECK(blowup_correction(q3, std::nullopt) == q3);
    }
    SECTION("wrong codimension is rejected") {
        CHECK_THROWS_AS(blowup_correction(q3, run({P(4), {2, 3}})), DimensionError);
        CHECK_THROWS_AS(blowup_correction(q3, point_diamond(5)), DimensionError);
    }
}

TEST_CASE("euler bookkeeping for the degenerate quintic") {
    HodgeDiamond v1 = run({P(4), {3}});
    HodgeDiamond v2 = run({P(4), {2}});
    HodgeDiamond i2 = run({P(4), {2, 3}});
    HodgeDiamond i3 = run({P(4), {2, 3, 5}});
    HodgeDiamond nearby = run({P(4), {5}});
    HodgeDiamond v2_tilde = blowup_correction(v2, i3);

    REQUIRE(euler_characteristic(v1) == -6);
    REQUIRE(euler_characteristic(v2_tilde) == -146);
    REQUIRE(euler_characteristic(i2) == 24);
    REQUIRE(euler_characteristic(nearby) == -200);

    CheckReport rep = union_euler_check(v1, v2_tilde, i2, &nearby);
    REQUIRE(rep.items.size() == 2);
    CHECK(rep.items[0].ok);
    CHECK(rep.items[1].ok);
    CHECK(rep.passed());
    CHECK(rep.items[0].detail.find("-176") != std::string::npos);

    SECTION("a wrong nearby fiber is flagged") {
        HodgeDiamond wrong = run({P(4), {4}});
        CheckReport bad = union_euler_check(v1, v2_tilde, i2, &wrong);
        CHECK_FALSE(bad.passed());
    }
    SECTION("dimension mismatches are rejected") {
        CHECK_THROWS_AS(union_euler_check(v1, i2, i2, nullptr), DimensionError);
        CHECK_THROWS_AS(union_euler_check(v1, v2_tilde, v1, nullptr), DimensionError);
        CHECK_THROWS_AS(union_euler_check(v1, v2_tilde, i2, &i3), DimensionError);
    }
}
