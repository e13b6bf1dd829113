#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hodgeci/engine.hpp"
#include "hodgeci/verify.hpp"

namespace hodgeci {

using json = nlohmann::json;

/* ---- command-line argument helpers ---- */

inline int parse_int_strict(const std::string& s, const std::string& what) {
    size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw SchemaError(what + ": not an integer: '" + s + "'");
    }
    if (pos != s.size()) throw SchemaError(what + ": not an integer: '" + s + "'");
    return v;
}

/* "5" or "2,3" -> {5} or {2,3} */
inline std::vector<int> parse_degrees(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        int d = parse_int_strict(item, "degree");
        if (d < 1) throw SchemaError("degree must be >= 1, got " + std::to_string(d));
        out.push_back(d);
    }
    if (out.empty()) throw SchemaError("empty degree list");
    return out;
}

/* "3,2" -> split 3+2 of degree d */
inline SplitPlan parse_split_arg(const std::string& s, int d) {
    std::vector<int> parts = parse_degrees(s);
    if (parts.size() != 2) throw SchemaError("split must be two degrees, e.g. 3,2");
    return make_split(d, parts[0], parts[1]);
}

/* "P4" -> projective 4-space */
inline AmbientSpec parse_projective_ambient(const std::string& s) {
    if (s.size() < 2 || s[0] != 'P') throw SchemaError("ambient must look like P<N>, got '" + s + "'");
    return AmbientSpec(ProjectiveSpace{parse_int_strict(s.substr(1), "ambient dimension")});
}

/* ---- diamond renderers ---- */

inline json diamond_to_json(const HodgeDiamond& d) {
    json rows = json::array();
    for (int k = 0; k <= 2 * d.dim(); ++k)
        for (const auto& [pq, v] : d.table(k).entries()) rows.push_back({k, pq.first, pq.second, v});
    return json{{"dim", d.dim()}, {"cohomology", rows}};
}

inline std::string render_diamond_csv(const HodgeDiamond& d) {
    std::string out = "k,p,q,value\n";
    for (int k = 0; k <= 2 * d.dim(); ++k)
        for (const auto& [pq, v] : d.table(k).entries())
            out += std::to_string(k) + "," + std::to_string(pq.first) + "," + std::to_string(pq.second) +
                   "," + std::to_string(v) + "\n";
    return out;
}

inline std::string render_diamond_pretty(const HodgeDiamond& d) {
    const int n = d.dim();
    size_t width = 1;
    for (int k = 0; k <= 2 * n; ++k)
        for (const auto& [pq, v] : d.table(k).entries()) width = std::max(width, std::to_string(v).size());

    std::vector<std::string> rows;
    size_t widest = 0;
    for (int k = 0; k <= 2 * n; ++k) {
        std::string row;
        for (int p = std::min(k, n); p >= std::max(0, k - n); --p) {
            std::string cell = std::to_string(d.table(k).at(p, k - p));
            if (!row.empty()) row += "  ";
            row += std::string(width - cell.size(), ' ') + cell;
        }
        widest = std::max(widest, row.size());
        rows.push_back(std::move(row));
    }
    std::string out;
    for (std::string& row : rows) {
        out += std::string((widest - row.size()) / 2, ' ') + row + "\n";
    }
    return out;
}

/* ---- weight-graded structure renderers ---- */

inline json dims_to_json(const BigradedDims& t) {
    json rows = json::array();
    for (const auto& [pq, v] : t.entries()) rows.push_back({pq.first, pq.second, v});
    return rows;
}

inline json mhs_to_json(const WeightGradedMHS& mhs) {
    json pieces = json::array();
    for (const auto& [w, dims] : mhs.pieces()) pieces.push_back({{"weight", w}, {"dims", dims_to_json(dims)}});
    return json{{"degree", mhs.degree()}, {"pieces", pieces}};
}

inline std::string render_mhs_csv(const WeightGradedMHS& mhs) {
    std::string out = "weight,p,q,value\n";
    for (const auto& [w, dims] : mhs.pieces())
        for (const auto& [pq, v] : dims.entries())
            out += std::to_string(w) + "," + std::to_string(pq.first) + "," + std::to_string(pq.second) +
                   "," + std::to_string(v) + "\n";
    return out;
}

/* the inputs of the middle-degree assembly and the per-entry arithmetic */
inline std::string render_summands_pretty(const MiddleSummands& s, const BigradedDims& middle) {
    std::string out;
    const std::string v1 = "V_" + std::to_string(s.split.d1);
    const std::string v2 = "V_" + std::to_string(s.split.d2);
    out += "summands for the split " + std::to_string(s.split.d1) + "+" + std::to_string(s.split.d2) +
           ":\n";
    out += "  prim middle " + v1 + ": " + detail::render_dims_inline(s.prim_v1) + "\n";
    out += "  prim middle " + v2 + ": " + detail::render_dims_inline(s.prim_v2) + "\n";
    out += "  prim middle I2: " + detail::render_dims_inline(s.prim_i2) + "\n";
    out += "  middle I3: " + (s.i3_present ? detail::render_dims_inline(s.i3_middle) : std::string("absent")) +
           "\n";

    out += "\ncontributions (" + v1 + " + " + v2 + " + I2 + I2 twist + I3 twist):\n";
    std::vector<std::pair<std::pair<int, int>, long long>> cells(middle.entries().begin(),
                                                                 middle.entries().end());
    std::sort(cells.begin(), cells.end(),
              [](const auto& a, const auto& b) { return a.first.first > b.first.first; });
    for (const auto& [pq, v] : cells) {
        const auto [p, q] = pq;
        long long c1 = s.prim_v1.at(p, q);
        long long c2 = s.prim_v2.at(p, q);
        long long c3 = s.prim_i2.at(p, q - 1);
        long long c4 = s.prim_i2.at(p - 1, q);
        long long c5 = s.i3_middle.at(p - 1, q - 1);
        out += "  contributions to h^{" + std::to_string(p) + "," + std::to_string(q) +
               "}: " + std::to_string(c1) + " + " + std::to_string(c2) + " + " + std::to_string(c3) + " + " +
               std::to_string(c4) + " + " + std::to_string(c5) + " = " + std::to_string(v) + "\n";
    }
    return out;
}

inline std::string render_mhs_pretty(const WeightGradedMHS& mhs, const MiddleSummands& s,
                                     const BigradedDims& middle) {
    std::string out;
    for (const auto& [w, dims] : mhs.pieces())
        out += "weight " + std::to_string(w) + ": " + detail::render_dims_inline(dims) + "   (dim " +
               std::to_string(dims.total()) + ")\n";
    out += "total graded dimension: " + std::to_string(mhs.total_dimension()) + "\n\n";
    out += render_summands_pretty(s, middle);
    return out;
}

inline json summands_to_json(const MiddleSummands& s, const BigradedDims& middle) {
    return json{{"n", s.n},
                {"split", {s.split.d1, s.split.d2}},
                {"summands",
                 {{"prim_v1", dims_to_json(s.prim_v1)},
                  {"prim_v2", dims_to_json(s.prim_v2)},
                  {"prim_i2", dims_to_json(s.prim_i2)},
                  {"i3_middle", dims_to_json(s.i3_middle)}}},
                {"middle", dims_to_json(middle)}};
}

inline std::string render_summands_csv(const MiddleSummands& s, const BigradedDims& middle) {
    std::string out = "summand,p,q,value\n";
    auto block = [&out](const char* name, const BigradedDims& t) {
        for (const auto& [pq, v] : t.entries())
            out += std::string(name) + "," + std::to_string(pq.first) + "," + std::to_string(pq.second) +
                   "," + std::to_string(v) + "\n";
    };
    block("prim_v1", s.prim_v1);
    block("prim_v2", s.prim_v2);
    block("prim_i2", s.prim_i2);
    block("i3_middle", s.i3_middle);
    block("middle", middle);
    return out;
}

/* ---- recursion trace renderers ---- */

inline std::string rule_name(FillRule r) {
    switch (r) {
        case FillRule::LinearBase: return "linear-section";
        case FillRule::PointCount: return "point-count";
        case FillRule::MiddleSplit: return "middle-split";
    }
    return "?";
}

inline json trace_to_json(const TraceLog& log, const std::string& root) {
    json nodes = json::array();
    for (const TraceNode& n : log.nodes) {
        json j{{"key", n.key},       {"ambient", n.ambient}, {"eff_dim", n.eff_dim},
               {"dim", n.dim},       {"degrees", n.degrees}, {"rule", rule_name(n.rule)},
               {"children", n.children}};
        if (n.rule == FillRule::MiddleSplit) j["split"] = {n.split.d1, n.split.d2};
        nodes.push_back(std::move(j));
    }
    return json{{"root", root}, {"nodes", nodes}};
}

inline std::string render_trace_pretty(const TraceLog& log, const std::string& root) {
    std::string out;
    std::set<std::string> seen;
    std::function<void(const std::string&, int)> walk = [&](const std::string& key, int depth) {
        out += std::string(static_cast<size_t>(depth) * 2, ' ');
        const TraceNode* n = log.find(key);
        if (!n) {
            out += key + " (missing)\n";
            return;
        }
        if (!seen.insert(key).second) {
            out += key + " (shared, see above)\n";
            return;
        }
        out += key + "  dim " + std::to_string(n->dim) + "  " + rule_name(n->rule);
        if (n->rule == FillRule::MiddleSplit)
            out += " " + std::to_string(n->split.d1) + "+" + std::to_string(n->split.d2);
        out += "\n";
        for (const std::string& c : n->children) walk(c, depth + 1);
    };
    walk(root, 0);
    return out;
}

/* ---- ambient description files ----

   JSON with keys: kind ("custom"), id, dim, degree, sections.  sections[r] is
   the r-fold linear section's cohomology as [k, p, q, value] quadruples; the
   degree field must match the point count of the bottom section. */

inline HodgeDiamond section_from_quadruples(const json& arr, int dim, const std::string& where) {
    if (!arr.is_array()) throw SchemaError(where + ": expected an array of [k,p,q,value] quadruples");
    HodgeDiamond d(dim);
    std::set<std::array<int, 3>> used;
    for (size_t i = 0; i < arr.size(); ++i) {
        const json& q = arr[i];
        const std::string here = where + "[" + std::to_string(i) + "]";
        if (!q.is_array() || q.size() != 4) throw SchemaError(here + ": expected [k,p,q,value]");
        for (const json& x : q)
            if (!x.is_number_integer()) throw SchemaError(here + ": entries must be integers");
        int k = q[0].get<int>(), p = q[1].get<int>(), qq = q[2].get<int>();
        long long v = q[3].get<long long>();
        if (k < 0 || k > 2 * dim) throw SchemaError(here + ": k out of range for dimension " + std::to_string(dim));
        if (p + qq != k) throw SchemaError(here + ": p + q must equal k");
        if (v < 0) throw SchemaError(here + ": negative dimension value");
        if (!used.insert({k, p, qq}).second) throw SchemaError(here + ": duplicate (k,p,q) entry");
        BigradedDims t;
        t.add(p, qq, v);
        d.add_table(k, t);
    }
    return d;
}

inline AmbientSpec parse_ambient_json(const json& j) {
    if (!j.is_object()) throw SchemaError("ambient file: root must be an object");
    for (const char* field : {"kind", "id", "dim", "degree", "sections"})
        if (!j.contains(field)) throw SchemaError(std::string("ambient file: missing field '") + field + "'");
    if (!j["kind"].is_string() || j["kind"].get<std::string>() != "custom")
        throw SchemaError("ambient file: kind must be \"custom\"");
    if (!j["id"].is_string()) throw SchemaError("ambient file: id must be a string");
    if (!j["dim"].is_number_integer()) throw SchemaError("ambient file: dim must be an integer");
    if (!j["degree"].is_number_integer()) throw SchemaError("ambient file: degree must be an integer");
    if (!j["sections"].is_array()) throw SchemaError("ambient file: sections must be an array");

    CustomAmbient c;
    c.id = j["id"].get<std::string>();
    c.dim = j["dim"].get<int>();
    if (c.dim < 0) throw SchemaError("ambient file: dim must be >= 0");
    const json& secs = j["sections"];
    if (static_cast<int>(secs.size()) != c.dim + 1)
        throw SchemaError("ambient file: sections must have dim + 1 = " + std::to_string(c.dim + 1) +
                          " entries, got " + std::to_string(secs.size()));
    for (int r = 0; r <= c.dim; ++r)
        c.sections.push_back(
            section_from_quadruples(secs[static_cast<size_t>(r)], c.dim - r, "sections[" + std::to_string(r) + "]"));

    AmbientSpec a(std::move(c));
    long long degree = j["degree"].get<long long>();
    if (degree != ambient_degree(a))
        throw SchemaError("ambient file: degree " + std::to_string(degree) +
                          " does not match the bottom section point count " +
                          std::to_string(ambient_degree(a)));
    return a;
}

inline AmbientSpec parse_ambient_file(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("ambient file: ") + e.what());
    }
    return parse_ambient_json(j);
}

/* canonical serialization: alphabetical keys, one section per line, entries
   sorted by (k,p,q) */
inline std::string emit_ambient_file(const AmbientSpec& a) {
    if (a.is_projective_space())
        throw SpecError("built-in projective ambients have no file form");
    const CustomAmbient& c = a.custom();
    std::string out = "{\n";
    out += "  \"degree\": " + std::to_string(ambient_degree(a)) + ",\n";
    out += "  \"dim\": " + std::to_string(c.dim) + ",\n";
    out += "  \"id\": " + json(c.id).dump() + ",\n";
    out += "  \"kind\": \"custom\",\n";
    out += "  \"sections\": [\n";
    for (size_t r = 0; r < c.sections.size(); ++r) {
        const HodgeDiamond& d = c.sections[r];
        out += "    [";
        bool first = true;
        for (int k = 0; k <= 2 * d.dim(); ++k)
            for (const auto& [pq, v] : d.table(k).entries()) {
                if (!first) out += ", ";
                first = false;
                out += "[" + std::to_string(k) + "," + std::to_string(pq.first) + "," +
                       std::to_string(pq.second) + "," + std::to_string(v) + "]";
            }
        out += r + 1 < c.sections.size() ? "],\n" : "]\n";
    }
    out += "  ]\n}\n";
    return out;
}

/* ---- verification report renderers ---- */

inline std::string render_verify_pretty(const VerifySummary& sum) {
    std::string out;
    for (const VerifyCheck& c : sum.checks) {
        out += (c.failures.empty() ? "ok   " : "FAIL ") + c.name + "  (" + std::to_string(c.cases) +
               " cases";
        if (!c.failures.empty()) out += ", " + std::to_string(c.failures.size()) + " failures";
        out += ")\n";
        for (const VerifyFailure& f : c.failures) out += "     " + f.case_label + ": " + f.detail + "\n";
    }
    out += sum.passed() ? "all checks passed" : "verification FAILED";
    out += " (" + std::to_string(sum.total_cases()) + " cases)\n";
    return out;
}

inline json verify_to_json(const VerifySummary& sum) {
    json checks = json::array();
    for (const VerifyCheck& c : sum.checks) {
        json fails = json::array();
        for (const VerifyFailure& f : c.failures) fails.push_back({{"case", f.case_label}, {"detail", f.detail}});
        checks.push_back({{"name", c.name}, {"cases", c.cases}, {"failures", fails}});
    }
    return json{{"passed", sum.passed()}, {"cases", sum.total_cases()}, {"checks", checks}};
}

}  // namespace hodgeci
