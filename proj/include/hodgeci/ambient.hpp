#pragma once

#include <algorithm>
#include <string>
#include <variant>
#include <vector>

#include "hodgeci/diamond.hpp"

namespace hodgeci {

struct ProjectiveSpace {
    int N = 0;
};

/* Ambient given by its tower of generic linear sections: sections[r] is the
   full diamond of the r-fold hyperplane section, r = 0..dim, so sections[0]
   is the ambient itself and sections[dim] is a point set whose count is the
   degree of the ambient under its polarization. */
struct CustomAmbient {
    std::string id;
    int dim = 0;
    std::vector<HodgeDiamond> sections;
};

class AmbientSpec {
public:
    AmbientSpec(ProjectiveSpace p) : v_(p) {
        if (p.N < 0) throw SpecError("projective space of negative dimension");
    }
    AmbientSpec(CustomAmbient c) : v_(std::move(c)) {}

    bool is_projective_space() const { return std::holds_alternative<ProjectiveSpace>(v_); }
    const ProjectiveSpace& projective() const { return std::get<ProjectiveSpace>(v_); }
    const CustomAmbient& custom() const { return std::get<CustomAmbient>(v_); }

    int dim() const {
        return is_projective_space() ? projective().N : custom().dim;
    }

    /* display name: "P4" for projective space, the id for custom ambients */
    std::string label() const {
        return is_projective_space() ? "P" + std::to_string(projective().N) : custom().id;
    }

    /* identity used in memo keys; the tower level is tracked separately */
    std::string base_id() const { return is_projective_space() ? "P" : custom().id; }

private:
    std::variant<ProjectiveSpace, CustomAmbient> v_;
};

inline HodgeDiamond projective_space_diamond(int N) {
    if (N < 0) throw RangeError("projective space of negative dimension");
    HodgeDiamond d(N);
    for (int k = 0; k <= N; ++k) {
        BigradedDims t;
        t.add(k, k, 1);
        d.set_table(2 * k, std::move(t));
    }
    return d;
}

/* Diamond of the r-fold generic linear section of the ambient. */
inline HodgeDiamond tower_section(const AmbientSpec& a, int r) {
    if (r < 0 || r > a.dim())
        throw RangeError("tower level " + std::to_string(r) + " outside [0, " + std::to_string(a.dim()) + "]");
    if (a.is_projective_space()) return projective_space_diamond(a.projective().N - r);
    return a.custom().sections[static_cast<size_t>(r)];
}

/* Degree of the ambient under its polarization: the point count at the bottom
   of the tower (1 for projective space). */
inline long long ambient_degree(const AmbientSpec& a) {
    if (a.is_projective_space()) return 1;
    const CustomAmbient& c = a.custom();
    if (c.sections.size() != static_cast<size_t>(c.dim) + 1)
        throw SpecError("custom ambient tower has the wrong number of sections");
    return c.sections.back().table_or_zero(0).at(0, 0);
}

/* The ambient one tower level down: P^{N-1}, or the custom tower with its top
   section dropped.  Keeps the id, so memo keys of the two phrasings agree. */
inline AmbientSpec shift_tower(const AmbientSpec& a) {
    if (a.dim() < 1) throw RangeError("cannot shift a zero-dimensional ambient");
    if (a.is_projective_space()) return AmbientSpec(ProjectiveSpace{a.projective().N - 1});
    CustomAmbient c = a.custom();
    c.dim -= 1;
    c.sections.erase(c.sections.begin());
    return AmbientSpec(std::move(c));
}

struct Violation {
    std::string where;
    std::string what;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool valid() const { return violations.empty(); }
};

/* Structural validation of a custom ambient tower: section count, dimension
   chain, per-diamond invariants, Lefschetz agreement of consecutive sections
   below the smaller middle, connectedness, and a positive bottom count. */
inline ValidationReport validate_custom_spec(const AmbientSpec& a) {
    if (a.is_projective_space()) throw SpecError("validate_custom_spec needs a custom ambient");
    const CustomAmbient& c = a.custom();
    ValidationReport rep;
    auto flag = [&rep](std::string where, std::string what) {
        rep.violations.push_back({std::move(where), std::move(what)});
    };

    if (c.id.empty() || c.id == "P") flag("id", "must be nonempty and not the reserved name P");
    if (c.dim < 0) {
        flag("dim", "negative");
        return rep;
    }
    if (c.sections.size() != static_cast<size_t>(c.dim) + 1) {
        flag("sections", "expected " + std::to_string(c.dim + 1) + " sections, found " +
                             std::to_string(c.sections.size()));
        return rep;
    }
    for (int r = 0; r <= c.dim; ++r) {
        const HodgeDiamond& s = c.sections[static_cast<size_t>(r)];
        const std::string where = "sections[" + std::to_string(r) + "]";
        if (s.dim() != c.dim - r) {
            flag(where, "dimension " + std::to_string(s.dim()) + ", expected " + std::to_string(c.dim - r));
            continue;
        }
        for (const std::string& v : s.validate()) flag(where, v);
        if (r < c.dim && s.table_or_zero(0).at(0, 0) != 1) flag(where, "positive-dimensional section not connected");
    }
    if (rep.valid()) {
        // Lefschetz: consecutive sections agree strictly below the middle of the smaller one.
        for (int r = 0; r + 1 <= c.dim; ++r) {
            const HodgeDiamond& s0 = c.sections[static_cast<size_t>(r)];
            const HodgeDiamond& s1 = c.sections[static_cast<size_t>(r + 1)];
            for (int k = 0; k < c.dim - r - 1; ++k)
                if (s0.table(k) != s1.table(k))
                    flag("sections[" + std::to_string(r) + "," + std::to_string(r + 1) + "]",
                         "tower sections disagree in degree " + std::to_string(k));
        }
        if (c.sections.back().table(0).at(0, 0) < 1) flag("sections[" + std::to_string(c.dim) + "]", "degree count missing");
    }
    return rep;
}

/* A complete intersection inside the ambient's linear-section tower: the
   common zero locus of hypersurfaces of the listed degrees.  Degree-1 factors
   are the tower's own sections and normalize away. */
struct CISpec {
    AmbientSpec ambient;
    std::vector<int> degrees;
};

inline long long point_count(const CISpec& spec) {
    long long expect_dim = spec.ambient.dim() - static_cast<long long>(spec.degrees.size());
    if (expect_dim != 0)
        throw DimensionError("point_count needs a zero-dimensional intersection, got dimension " +
                             std::to_string(expect_dim));
    long long c = ambient_degree(spec.ambient);
    for (int d : spec.degrees) {
        if (d < 1) throw SpecError("degrees must be >= 1");
        c = checked_mul(c, d);
    }
    return c;
}

/* Canonical subproblem identity: base ambient id, remaining tower dimension
   after folding degree-1 factors into the shift, and the sorted multidegree
   of the genuinely nonlinear factors. */
struct MemoKey {
    std::string ambient;
    int eff_dim = 0;
    std::vector<int> degrees;  // sorted ascending, all >= 2

    std::string str() const {
        std::string s = ambient + "^" + std::to_string(eff_dim) + "|";
        for (size_t i = 0; i < degrees.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(degrees[i]);
        }
        return s;
    }
};

inline MemoKey memo_key(const AmbientSpec& a, const std::vector<int>& degrees) {
    MemoKey k;
    k.ambient = a.base_id();
    k.eff_dim = a.dim();
    for (int d : degrees) {
        if (d < 1) throw SpecError("degrees must be >= 1");
        if (d == 1)
            k.eff_dim -= 1;
        else
            k.degrees.push_back(d);
    }
    if (k.eff_dim < static_cast<int>(k.degrees.size()))
        throw SpecError("dimension underflow: more degrees than ambient dimensions");
    std::sort(k.degrees.begin(), k.degrees.end());
    return k;
}

/* Insert-once cache of computed diamonds.  Entries are immutable; writing a
   different value under an existing key is an internal error (and a live
   cross-check that independent derivations agree).  Single-threaded use. */
class MemoStore {
public:
    const HodgeDiamond* find(const std::string& key) const {
        auto it = entries_.find(key);
        return it == entries_.end() ? nullptr : &it->second;
    }

    const HodgeDiamond& put(const std::string& key, HodgeDiamond d) {
        auto it = entries_.find(key);
        if (it != entries_.end()) {
            if (!(it->second == d)) throw ConsistencyError("memo collision with a different diamond: " + key);
            return it->second;
        }
        return entries_.emplace(key, std::move(d)).first->second;
    }

    size_t size() const { return entries_.size(); }

private:
    std::map<std::string, HodgeDiamond> entries_;
};

}  // namespace hodgeci
