#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hodgeci/ambient.hpp"
#include "hodgeci/mhs.hpp"

namespace hodgeci {

/* One degeneration step: the degree-d hypersurface moves to the union of a
   degree-d1 and a degree-d2 hypersurface.  The middle-degree output does not
   depend on the choice of split. */
struct SplitPlan {
    int d = 0;
    int d1 = 0;
    int d2 = 0;
};

inline SplitPlan choose_split(int d) {
    if (d < 2) throw SpecError("cannot split degree " + std::to_string(d));
    return {d, 1, d - 1};
}

inline SplitPlan make_split(int d, int d1, int d2) {
    if (d1 < 1 || d2 < 1 || d1 + d2 != d)
        throw SpecError("invalid split " + std::to_string(d1) + "+" + std::to_string(d2) + " of degree " +
                        std::to_string(d));
    return {d, d1, d2};
}

enum class FillRule { LinearBase, PointCount, MiddleSplit };

struct TraceNode {
    std::string key;
    std::string ambient;
    int eff_dim = 0;
    int dim = 0;
    std::vector<int> degrees;
    FillRule rule = FillRule::LinearBase;
    SplitPlan split{};
    std::vector<std::string> children;
};

struct TraceLog {
    std::vector<TraceNode> nodes;

    const TraceNode* find(const std::string& key) const {
        for (const TraceNode& n : nodes)
            if (n.key == key) return &n;
        return nullptr;
    }
};

struct Context {
    MemoStore& memo;
    TraceLog* trace = nullptr;
    /* Degree-0 primitive cohomology is reduced (count - 1).  The verification
       driver can disable this to demonstrate how the plane-curve genus
       identity pins the convention down; the engine default is the truth. */
    bool reduced_point_prim = true;
};

namespace detail {

/* Normalized subproblem: degree-1 factors folded into the tower level, the
   rest sorted ascending.  eff_dim is the ambient dimension minus the folded
   tower level, so dim() = eff_dim - #degrees. */
struct Problem {
    const AmbientSpec* ambient = nullptr;
    int eff_dim = 0;
    std::vector<int> degrees;

    int shift() const { return ambient->dim() - eff_dim; }
    int dim() const { return eff_dim - static_cast<int>(degrees.size()); }

    /* measure for the well-founded recursion order: (dim, total degree) */
    long long total_degree() const {
        long long t = shift();
        for (int d : degrees) t += d;
        return t;
    }

    std::string key() const {
        MemoKey k;
        k.ambient = ambient->base_id();
        k.eff_dim = eff_dim;
        k.degrees = degrees;
        return k.str();
    }
};

inline Problem make_problem(const AmbientSpec& a, const std::vector<int>& degrees) {
    MemoKey k = memo_key(a, degrees);
    Problem p;
    p.ambient = &a;
    p.eff_dim = k.eff_dim;
    p.degrees = std::move(k.degrees);
    return p;
}

/* child with the same ambient and raw degree list `degs` (may contain 1s) */
inline Problem derive(const Problem& base, std::vector<int> degs) {
    Problem p;
    p.ambient = base.ambient;
    p.eff_dim = base.eff_dim;
    for (size_t i = 0; i < degs.size();) {
        if (degs[i] < 1) throw SpecError("degrees must be >= 1");
        if (degs[i] == 1) {
            p.eff_dim -= 1;
            degs.erase(degs.begin() + static_cast<long>(i));
        } else {
            ++i;
        }
    }
    if (p.eff_dim < static_cast<int>(degs.size()))
        throw SpecError("dimension underflow: more degrees than ambient dimensions");
    std::sort(degs.begin(), degs.end());
    p.degrees = std::move(degs);
    return p;
}

struct Subproblems {
    SplitPlan split;
    Problem v1, v2, i2;
    std::optional<Problem> i3;  // absent when dim V_d = 1
};

/* V_d of dimension n >= 1 inside W = the intersection of the remaining
   degrees; the split degenerates V_d into V_d1 u V_d2 with I2 = V_d1 n V_d2
   and I3 = V_d n V_d1 n V_d2. */
inline Subproblems make_subproblems(const Problem& p, SplitPlan split) {
    if (p.degrees.empty()) throw SpecError("no degree to split");
    const int d = p.degrees.back();
    if (split.d != d)
        throw SpecError("split of degree " + std::to_string(split.d) + " does not match largest degree " +
                        std::to_string(d));
    const int n = p.dim();
    if (n < 1) throw SpecError("middle formula needs positive dimension");

    std::vector<int> rest(p.degrees.begin(), p.degrees.end() - 1);
    auto with = [&rest](std::initializer_list<int> extra) {
        std::vector<int> v = rest;
        v.insert(v.end(), extra);
        return v;
    };

    Subproblems s;
    s.split = split;
    s.v1 = derive(p, with({split.d1}));
    s.v2 = derive(p, with({split.d2}));
    s.i2 = derive(p, with({split.d1, split.d2}));
    if (n >= 2) s.i3 = derive(p, with({d, split.d1, split.d2}));

    // every subproblem is strictly smaller in lexicographic (dim, total degree)
    auto smaller = [&p, n](const Problem& q) {
        if (q.dim() != n) return q.dim() < n;
        return q.total_degree() < p.total_degree();
    };
    if (!smaller(s.v1) || !smaller(s.v2) || !smaller(s.i2) || (s.i3 && !smaller(*s.i3)))
        throw ConsistencyError("split produced a subproblem that is not smaller");
    return s;
}

}  // namespace detail

inline const HodgeDiamond& compute(const detail::Problem& p, Context& ctx);

/* Primitive part of the middle cohomology: the cokernel of cup product with
   the polarization class from two degrees below, so table[m] minus the
   (1,1)-twist of table[m-2].  For point sets this is reduced H^0. */
inline BigradedDims prim_middle_of(const detail::Problem& p, Context& ctx) {
    const HodgeDiamond& d = compute(p, ctx);
    const int m = d.dim();
    if (m == 0) {
        long long count = d.table(0).at(0, 0);
        BigradedDims out;
        out.add(0, 0, count - (ctx.reduced_point_prim ? 1 : 0));
        return out;
    }
    return difference(d.table(m), tate_twist(d.table_or_zero(m - 2), 1));
}

/* Kernel of cup product with the polarization class at or above the middle:
   table[k] minus the (1,1)-twist of table[k+2]. */
inline BigradedDims prim_above(const HodgeDiamond& d, int k) {
    if (k < d.dim()) throw RangeError("prim_above needs k >= dim");
    if (k > 2 * d.dim()) return {};
    return difference(d.table(k), tate_twist(d.table_or_zero(k + 2), -1));
}

/* Extend a middle table to the full diamond: degrees below the middle are the
   ambient tower's stable values, degrees above come from duality.  `ref` is
   the section of the ambient tower the variety sits in (dimension > n). */
inline HodgeDiamond lefschetz_fill(const HodgeDiamond& ref, int n, const BigradedDims& middle) {
    if (n < 0) throw DimensionError("negative dimension");
    if (ref.dim() <= n) throw DimensionError("lefschetz_fill: reference section does not dominate the variety");
    if (!middle.supported_on_total(n) || !middle.supported_in_box(0, n) || !middle.is_symmetric())
        throw ConsistencyError("lefschetz_fill: malformed middle table");
    HodgeDiamond out(n);
    for (int k = 0; k < n; ++k) out.set_table(k, ref.table(k));
    out.set_table(n, middle);
    for (int k = n + 1; k <= 2 * n; ++k) out.set_table(k, reflect(out.table(2 * n - k), n));
    std::vector<std::string> bad = out.validate();
    if (!bad.empty()) throw ConsistencyError("lefschetz_fill produced an invalid diamond: " + bad.front());
    return out;
}

/* The five summands contributing the middle cohomology of V_d under the
   degeneration V_d => V_d1 + V_d2:

       prim H^{n-1}(I2)            (weight n-1)
       prim H^n(V_d1)              (weight n)
       prim H^n(V_d2)              (weight n)
       H^{n-2}(I3) (1,1)-twisted   (weight n)
       prim H^{n-1}(I2) twisted    (weight n+1)
*/
struct MiddleSummands {
    int n = 0;
    SplitPlan split;
    BigradedDims prim_v1, prim_v2, prim_i2, i3_middle;
    bool i3_present = false;
};

namespace detail {

inline MiddleSummands summands_for(const Problem& p, const Subproblems& subs, Context& ctx) {
    MiddleSummands s;
    s.n = p.dim();
    s.split = subs.split;
    s.prim_v1 = prim_middle_of(subs.v1, ctx);
    s.prim_v2 = prim_middle_of(subs.v2, ctx);
    s.prim_i2 = prim_middle_of(subs.i2, ctx);
    if (subs.i3) {
        s.i3_present = true;
        s.i3_middle = compute(*subs.i3, ctx).table(s.n - 2);
    }
    return s;
}

inline BigradedDims collapse_middle(const MiddleSummands& s) {
    const int n = s.n;
    BigradedDims out;
    auto put = [&out, n](int p, int q, long long v) {
        if (p >= 0 && p <= n && q >= 0 && q <= n) out.add(p, q, v);
    };
    for (const auto& [pq, v] : s.prim_v1.entries()) put(pq.first, pq.second, v);
    for (const auto& [pq, v] : s.prim_v2.entries()) put(pq.first, pq.second, v);
    for (const auto& [pq, v] : s.prim_i2.entries()) {
        put(pq.first, pq.second + 1, v);      // untwisted copy, one Hodge step down in q
        put(pq.first + 1, pq.second, v);      // (1,1)-twisted copy
    }
    for (const auto& [pq, v] : s.i3_middle.entries()) put(pq.first + 1, pq.second + 1, v);
    if (!out.is_symmetric()) throw ConsistencyError("assembled middle table is not symmetric");
    return out;
}

}  // namespace detail

/* Full diamond of a normalized subproblem, memoized.  Base cases: no degrees
   left means a tower section, dimension zero means a point count; otherwise
   the middle comes from the canonical split of the largest degree and the
   rest of the diamond from the tower and duality. */
inline const HodgeDiamond& compute(const detail::Problem& p, Context& ctx) {
    const std::string key = p.key();
    if (const HodgeDiamond* hit = ctx.memo.find(key)) return *hit;

    TraceNode node;
    node.key = key;
    node.ambient = p.ambient->label();
    node.eff_dim = p.eff_dim;
    node.dim = p.dim();
    node.degrees = p.degrees;

    HodgeDiamond out;
    if (p.degrees.empty()) {
        node.rule = FillRule::LinearBase;
        out = tower_section(*p.ambient, p.shift());
    } else if (p.dim() == 0) {
        node.rule = FillRule::PointCount;
        long long c = ambient_degree(*p.ambient);
        for (int d : p.degrees) c = checked_mul(c, d);
        out = point_diamond(c);
    } else {
        node.rule = FillRule::MiddleSplit;
        node.split = choose_split(p.degrees.back());
        detail::Subproblems subs = detail::make_subproblems(p, node.split);
        node.children = {subs.v1.key(), subs.v2.key(), subs.i2.key()};
        if (subs.i3) node.children.push_back(subs.i3->key());
        MiddleSummands s = detail::summands_for(p, subs, ctx);
        out = lefschetz_fill(tower_section(*p.ambient, p.shift()), p.dim(), detail::collapse_middle(s));
    }

    std::vector<std::string> bad = out.validate();
    if (!bad.empty()) throw ConsistencyError("computed diamond invalid (" + key + "): " + bad.front());
    const HodgeDiamond& stored = ctx.memo.put(key, std::move(out));
    if (ctx.trace) ctx.trace->nodes.push_back(std::move(node));
    return stored;
}

/* Public entry points take the raw problem description and normalize it. */

inline HodgeDiamond compute_diamond(const CISpec& spec, Context& ctx,
                                    std::optional<SplitPlan> top_split = std::nullopt) {
    detail::Problem p = detail::make_problem(spec.ambient, spec.degrees);
    if (!top_split) return compute(p, ctx);

    if (p.degrees.empty()) throw SpecError("split override needs a degree >= 2");
    detail::Subproblems subs = detail::make_subproblems(p, *top_split);
    MiddleSummands s = detail::summands_for(p, subs, ctx);
    HodgeDiamond out =
        lefschetz_fill(tower_section(*p.ambient, p.shift()), p.dim(), detail::collapse_middle(s));
    if (ctx.trace && !ctx.trace->find(p.key())) {
        TraceNode node;
        node.key = p.key();
        node.ambient = p.ambient->label();
        node.eff_dim = p.eff_dim;
        node.dim = p.dim();
        node.degrees = p.degrees;
        node.rule = FillRule::MiddleSplit;
        node.split = *top_split;
        node.children = {subs.v1.key(), subs.v2.key(), subs.i2.key()};
        if (subs.i3) node.children.push_back(subs.i3->key());
        ctx.trace->nodes.push_back(std::move(node));
    }
    return ctx.memo.put(p.key(), std::move(out));
}

inline HodgeDiamond compute_diamond(const CISpec& spec, MemoStore& memo) {
    Context ctx{memo};
    return compute_diamond(spec, ctx);
}

inline BigradedDims prim_middle(const CISpec& spec, Context& ctx) {
    return prim_middle_of(detail::make_problem(spec.ambient, spec.degrees), ctx);
}

inline MiddleSummands middle_summands(const CISpec& spec, SplitPlan split, Context& ctx) {
    detail::Problem p = detail::make_problem(spec.ambient, spec.degrees);
    if (p.degrees.empty()) throw SpecError("no degree >= 2 to degenerate");
    detail::Subproblems subs = detail::make_subproblems(p, split);
    return detail::summands_for(p, subs, ctx);
}

inline BigradedDims middle_hodge(const CISpec& spec, SplitPlan split, Context& ctx) {
    return detail::collapse_middle(middle_summands(spec, split, ctx));
}

/* Weight-graded pieces of the limit structure on the middle degree. */
inline WeightGradedMHS assemble_amhs(const CISpec& spec, SplitPlan split, Context& ctx) {
    MiddleSummands s = middle_summands(spec, split, ctx);
    WeightGradedMHS mhs(s.n);
    mhs.add_piece(s.n - 1, s.prim_i2);
    mhs.add_piece(s.n, s.prim_v1 + s.prim_v2 + tate_twist(s.i3_middle, 1));
    mhs.add_piece(s.n + 1, tate_twist(s.prim_i2, 1));
    std::vector<std::string> bad = mhs.validate();
    if (!bad.empty()) throw ConsistencyError("assembled weight pieces invalid: " + bad.front());
    return mhs;
}

struct CheckItem {
    std::string label;
    bool ok = false;
    std::string detail;
};

struct CheckReport {
    std::vector<CheckItem> items;
    bool passed() const {
        for (const CheckItem& it : items)
            if (!it.ok) return false;
        return true;
    }
};

namespace detail {
inline std::string render_dims_inline(const BigradedDims& t) {
    if (t.empty()) return "0";
    std::string s;
    for (const auto& [pq, v] : t.entries()) {
        if (!s.empty()) s += " ";
        s += "h^{" + std::to_string(pq.first) + "," + std::to_string(pq.second) + "}=" + std::to_string(v);
    }
    return s;
}
}  // namespace detail

/* Above-middle diagnostic for k >= n+2: the degree-k cohomology of V_d must
   equal the twist of prim H^{k-2}(I2) plus the twist of H^{k-2}(I3),
   entrywise.  (At k = n+1 the corresponding count is known to overshoot, so
   that degree is filled by duality, never by this formula.) */
inline CheckReport high_degree_check(const CISpec& spec, SplitPlan split, Context& ctx) {
    detail::Problem p = detail::make_problem(spec.ambient, spec.degrees);
    if (p.degrees.empty()) throw SpecError("no degree >= 2 to degenerate");
    const int n = p.dim();
    detail::Subproblems subs = detail::make_subproblems(p, split);
    const HodgeDiamond& x = compute(p, ctx);
    const HodgeDiamond& i2 = compute(subs.i2, ctx);
    const HodgeDiamond* i3 = subs.i3 ? &compute(*subs.i3, ctx) : nullptr;

    CheckReport rep;
    for (int k = n + 2; k <= 2 * n; ++k) {
        BigradedDims rhs = tate_twist(prim_above(i2, k - 2), 1);
        if (i3) rhs = rhs + tate_twist(i3->table_or_zero(k - 2), 1);
        const BigradedDims& lhs = x.table(k);
        CheckItem item;
        item.label = "k=" + std::to_string(k);
        item.ok = lhs == rhs;
        item.detail = "H^k = " + detail::render_dims_inline(lhs) + " | from I2, I3 = " +
                      detail::render_dims_inline(rhs);
        rep.items.push_back(std::move(item));
    }
    return rep;
}

}  // namespace hodgeci
