#include <catch2/catch_amalgamated.hpp>

#include "hodgeci/hodgeci.hpp"

using namespace hodgeci;

namespace {

AmbientSpec P(int n) { return AmbientSpec{ProjectiveSpace{n}}; }

HodgeDiamond run(const CISpec& spec) {
    MemoStore memo;
    return compute_diamond(spec, memo);
}

}  // namespace

TEST_CASE("degree list parsing") {
    CHECK(parse_degrees("5") == std::vector<int>{5});
    CHECK(parse_degrees("2,3") == std::vector<int>{2, 3});
    CHECK(parse_degrees("10,2,7") == std::vector<int>{10, 2, 7});
    CHECK_THROWS_AS(parse_degrees(""), SchemaError);
    CHECK_THROWS_AS(parse_degrees("a"), SchemaError);
    CHECK_THROWS_AS(parse_degrees("2,,3"), SchemaError);
    CHECK_THROWS_AS(parse_degrees("2,x"), SchemaError);
    CHECK_THROWS_AS(parse_degrees("0"), SchemaError);
    CHECK_THROWS_AS(parse_degrees("-2"), SchemaError);
    CHECK_THROWS_AS(parse_degrees("3.5"), SchemaError);
}

TEST_CASE("split argument parsing") {
    SplitPlan s = parse_split_arg("3,2", 5);
    CHECK((s.d1 == 3 && s.d2 == 2));
    CHECK_THROWS_AS(parse_split_arg("3", 5), SchemaError);
    CHECK_THROWS_AS(parse_split_arg("3,2,1", 5), SchemaError);
    CHECK_THROWS_AS(parse_split_arg("3,3", 5), SpecError);
}

TEST_CASE("projective ambient parsing") {
    CHECK(parse_projective_ambient("P4").dim() == 4);
    CHECK(parse_projective_ambient("P10").dim() == 10);
    CHECK_THROWS_AS(parse_projective_ambient("X4"), SchemaError);
    CHECK_THROWS_AS(parse_projective_ambient("P"), SchemaError);
    CHECK_THROWS_AS(parse_projective_ambient("Px"), SchemaError);
    CHECK_THROWS_AS(parse_projective_ambient("P-1"), SpecError);
}

TEST_CASE("diamond serialization agrees across formats") {
    HodgeDiamond x = run({P(4), {5}});

    json j = diamond_to_json(x);
    CHECK(j["dim"] == 3);
    bool found = false;
    long long json_total = 0;
    for (const auto& row : j["cohomology"]) {
        REQUIRE(row.size() == 4);
        json_total += row[3].get<long long>();
        if (row == json({3, 2, 1, 101})) found = true;
    }
    CHECK(found);

    std::string csv = render_diamond_csv(x);
    CHECK(csv.rfind("k,p,q,value\n", 0) == 0);
    CHECK(csv.find("3,2,1,101\n") != std::string::npos);
    long long csv_total = 0;
    for (int k = 0; k <= 6; ++k) csv_total += x.betti(k);
    CHECK(json_total == csv_total);  // both carry every entry exactly once

    std::string pretty = render_diamond_pretty(x);
    CHECK(pretty.find("101") != std::string::npos);
    CHECK(pretty.find("-") == std::string::npos);
}

TEST_CASE("weight structure serialization") {
    MemoStore memo;
    Context ctx{memo};
    CISpec spec{P(4), {5}};
    SplitPlan split = make_split(5, 3, 2);
    WeightGradedMHS mhs = assemble_amhs(spec, split, ctx);
    MiddleSummands s = middle_summands(spec, split, ctx);
    BigradedDims middle = middle_hodge(spec, split, ctx);

    json j = mhs_to_json(mhs);
    CHECK(j["degree"] == 3);
    REQUIRE(j["pieces"].size() == 3);
    CHECK(j["pieces"][0]["weight"] == 2);
    CHECK(j["pieces"][2]["weight"] == 4);

    std::string pretty = render_mhs_pretty(mhs, s, middle);
    CHECK(pretty.find("weight 2:") != std::string::npos);
    CHECK(pretty.find("total graded dimension: 204") != std::string::npos);
    CHECK(pretty.find("contributions to h^{2,1}: 5 + 0 + 1 + 19 + 76 = 101") != std::string::npos);

    std::string csv = render_mhs_csv(mhs);
    CHECK(csv.rfind("weight,p,q,value\n", 0) == 0);
    CHECK(csv.find("3,2,1,81\n") != std::string::npos);

    json t = summands_to_json(s, middle);
    CHECK(t["split"] == json({3, 2}));
    CHECK(t["summands"]["prim_v1"].size() == 2);
    std::string tcsv = render_summands_csv(s, middle);
    CHECK(tcsv.find("i3_middle,1,0,76\n") != std::string::npos);
}

TEST_CASE("trace serialization") {
    MemoStore memo;
    TraceLog log;
    Context ctx{memo, &log};
    compute_diamond(CISpec{P(3), {4}}, ctx);
    const std::string root = "P^3|4";

    std::string pretty = render_trace_pretty(log, root);
    CHECK(pretty.rfind(root, 0) == 0);
    CHECK(pretty.find("middle-split 1+3") != std::string::npos);
    CHECK(pretty.find("(shared, see above)") != std::string::npos);
    CHECK(pretty.find("linear-section") != std::string::npos);
    CHECK(pretty.find("point-count") != std::string::npos);

    json j = trace_to_json(log, root);
    CHECK(j["root"] == root);
    CHECK(j["nodes"].size() == log.nodes.size());
    CHECK(j["nodes"].back()["key"] == root);
    CHECK(j["nodes"].back()["split"] == json({1, 3}));
}

TEST_CASE("ambient files round-trip byte for byte") {
    MemoStore memo;
    Context ctx{memo};
    AmbientSpec q3 = detail::make_quadric3_ambient(ctx);

    std::string text = emit_ambient_file(q3);
    AmbientSpec parsed = parse_ambient_file(text);
    CHECK(parsed.label() == "quadric3");
    CHECK(parsed.dim() == 3);
    CHECK(ambient_degree(parsed) == 2);
    CHECK(validate_custom_spec(parsed).valid());
    CHECK(emit_ambient_file(parsed) == text);

    for (int r = 0; r <= 3; ++r) CHECK(tower_section(parsed, r) == tower_section(q3, r));

    SECTION("projective ambients have no file form") {
        CHECK_THROWS_AS(emit_ambient_file(P(4)), SpecError);
    }
}

TEST_CASE("ambient file schema errors name the offending field") {
    MemoStore memo;
    Context ctx{memo};
    const std::string good = emit_ambient_file(detail::make_quadric3_ambient(ctx));
    json j = json::parse(good);

    auto expect_schema_error = [](const json& doc, const std::string& needle) {
        try {
            parse_ambient_json(doc);
            FAIL("expected a schema error mentioning '" << needle << "'");
        } catch (const SchemaError& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };

    SECTION("not json at all") {
        CHECK_THROWS_AS(parse_ambient_file("not json"), SchemaError);
        CHECK_THROWS_AS(parse_ambient_file("[]"), SchemaError);
    }
    SECTION("missing fields") {
        for (const char* field : {"kind", "id", "dim", "degree", "sections"}) {
            json bad = j;
            bad.erase(field);
            expect_schema_error(bad, field);
        }
    }
    SECTION("wrong kind") {
        json bad = j;
        bad["kind"] = "projective";
        expect_schema_error(bad, "kind");
    }
    SECTION("wrong section count") {
        json bad = j;
        bad["sections"].erase(1);
        expect_schema_error(bad, "sections");
    }
    SECTION("malformed quadruple") {
        json bad = j;
        bad["sections"][1][0] = {0, 0, 0};
        expect_schema_error(bad, "sections[1][0]");
    }
    SECTION("entry off the support line") {
        json bad = j;
        bad["sections"][1][0] = {1, 1, 1, 4};
        expect_schema_error(bad, "p + q");
    }
    SECTION("negative value") {
        json bad = j;
        bad["sections"][2][0] = {0, 0, 0, -1};
        expect_schema_error(bad, "negative");
    }
    SECTION("duplicate entry") {
        json bad = j;
        bad["sections"][2].push_back({0, 0, 0, 1});
        expect_schema_error(bad, "duplicate");
    }
    SECTION("degree out of step with the bottom count") {
        json bad = j;
        bad["degree"] = 7;
        expect_schema_error(bad, "degree");
    }
}

TEST_CASE("verification report rendering") {
    VerifySummary sum;
    sum.checks.push_back({"alpha", 3, {}});
    sum.checks.push_back({"beta", 2, {{"case-1", "numbers differ"}}});
    CHECK_FALSE(sum.passed());
    CHECK(sum.total_cases() == 5);

    std::string pretty = render_verify_pretty(sum);
    CHECK(pretty.find("ok   alpha") != std::string::npos);
    CHECK(pretty.find("FAIL beta") != std::string::npos);
    CHECK(pretty.find("case-1: numbers differ") != std::string::npos);
    CHECK(pretty.find("verification FAILED") != std::string::npos);

    json j = verify_to_json(sum);
    CHECK(j["passed"] == false);
    CHECK(j["cases"] == 5);
    CHECK(j["checks"][1]["failures"][0]["case"] == "case-1");
}
