#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hodgeci/diagnostics.hpp"
#include "hodgeci/engine.hpp"
#include "hodgeci/oracles.hpp"

namespace hodgeci {

/* Cross-verification sweeps: the engine against the independent oracles and
   its own structural identities, over configurable ranges.  Used by the
   `verify` CLI command and by the test suite. */

struct VerifyOptions {
    int max_degree = 10;      // hypersurface degrees swept
    int max_ambient_dim = 6;  // largest projective ambient P^N
    int ci_max_degree = 4;    // complete-intersection factor degrees swept
    int ci_max_factors = 3;
    bool reduced_point_prim = true;  // engine convention knob, see Context
};

struct VerifyFailure {
    std::string case_label;
    std::string detail;
};

struct VerifyCheck {
    std::string name;
    long long cases = 0;
    std::vector<VerifyFailure> failures;
};

struct VerifySummary {
    std::vector<VerifyCheck> checks;

    bool passed() const {
        for (const VerifyCheck& c : checks)
            if (!c.failures.empty()) return false;
        return true;
    }

    long long total_cases() const {
        long long t = 0;
        for (const VerifyCheck& c : checks) t += c.cases;
        return t;
    }
};

namespace detail {

inline std::string degrees_label(const std::vector<int>& ds, int N) {
    std::string s = "[";
    for (size_t i = 0; i < ds.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(ds[i]);
    }
    return s + "] in P" + std::to_string(N);
}

/* non-decreasing multidegree sequences of the given length in [2, maxd] */
inline void enumerate_multidegrees(int len, int maxd, int lo, std::vector<int>& cur,
                                   const std::function<void(const std::vector<int>&)>& fn) {
    if (len == 0) {
        fn(cur);
        return;
    }
    for (int d = lo; d <= maxd; ++d) {
        cur.push_back(d);
        enumerate_multidegrees(len - 1, maxd, d, cur, fn);
        cur.pop_back();
    }
}

inline BigradedDims expected_hypersurface_middle(int d, int n) {
    BigradedDims mid = griffiths_prim_dims(d, n);
    if (n % 2 == 0) mid.add(n / 2, n / 2, 1);  // the hyperplane-class power
    return mid;
}

inline std::string dims_str(const BigradedDims& t) {
    if (t.empty()) return "0";
    std::string s;
    for (const auto& [pq, v] : t.entries()) {
        if (!s.empty()) s += " ";
        s += "h^{" + std::to_string(pq.first) + "," + std::to_string(pq.second) + "}=" + std::to_string(v);
    }
    return s;
}

/* random valid diamond: symmetric middle over a projective tower */
inline HodgeDiamond random_diamond(std::mt19937& rng, int n) {
    BigradedDims mid;
    std::uniform_int_distribution<int> val(0, 5);
    for (int p = 0; 2 * p <= n; ++p) {
        int v = val(rng);
        if (2 * p == n) {
            mid.add(p, p, v + 1);
        } else if (v > 0) {
            mid.add(p, n - p, v);
            mid.add(n - p, p, v);
        }
    }
    return lefschetz_fill(projective_space_diamond(n + 1), n, mid);
}

/* the quadric-threefold ambient with its tower generated by the engine */
inline AmbientSpec make_quadric3_ambient(Context& ctx) {
    CustomAmbient c;
    c.id = "quadric3";
    c.dim = 3;
    for (int r = 0; r <= 3; ++r) {
        std::vector<int> degs{2};
        degs.insert(degs.end(), static_cast<size_t>(r), 1);
        c.sections.push_back(compute_diamond(CISpec{AmbientSpec(ProjectiveSpace{4}), degs}, ctx));
    }
    return AmbientSpec(std::move(c));
}

}  // namespace detail

inline VerifySummary run_verification(const VerifyOptions& opt) {
    VerifySummary sum;
    MemoStore memo;
    Context ctx{memo};
    ctx.reduced_point_prim = opt.reduced_point_prim;

    auto ambient = [](int N) { return AmbientSpec(ProjectiveSpace{N}); };

    // chi_y oracle self-validation on projective spaces and quadrics
    {
        VerifyCheck check;
        check.name = "oracle-self";
        for (int N = 2; N <= std::max(2, opt.max_ambient_dim); ++N) {
            ++check.cases;
            std::vector<long long> chi = chi_y_ci({1}, N);
            for (int p = 0; p < N; ++p)
                if (chi[static_cast<size_t>(p)] != (p % 2 == 0 ? 1 : -1))
                    check.failures.push_back({"[1] in P" + std::to_string(N), "chi_p != (-1)^p"});
        }
        ++check.cases;
        if (chi_y_ci({2}, 3) != std::vector<long long>{1, -2, 1})
            check.failures.push_back({"[2] in P3", "expected chi = (1, -2, 1)"});
        ++check.cases;
        if (chi_y_ci({2}, 4) != std::vector<long long>{1, -1, 1, -1})
            check.failures.push_back({"[2] in P4", "expected chi = (1, -1, 1, -1)"});
        ++check.cases;
        if (chi_y_ci({2, 3}, 2) != std::vector<long long>{6})
            check.failures.push_back({"[2,3] in P2", "expected chi_0 = point count 6"});
        sum.checks.push_back(std::move(check));
    }

    // engine vs Jacobian-ring monomial counts for hypersurfaces
    {
        VerifyCheck check;
        check.name = "hypersurface-oracle";
        for (int n = 1; n <= opt.max_ambient_dim - 1; ++n)
            for (int d = 2; d <= opt.max_degree; ++d) {
                ++check.cases;
                HodgeDiamond x = compute_diamond(CISpec{ambient(n + 1), {d}}, ctx);
                BigradedDims want = detail::expected_hypersurface_middle(d, n);
                if (x.table(n) != want)
                    check.failures.push_back({detail::degrees_label({d}, n + 1),
                                              "middle " + detail::dims_str(x.table(n)) + " vs oracle " +
                                                  detail::dims_str(want)});
            }
        sum.checks.push_back(std::move(check));
    }

    // engine vs chi_y genus for complete intersections
    {
        VerifyCheck check;
        check.name = "ci-oracle";
        std::vector<int> cur;
        for (int m = 2; m <= opt.max_ambient_dim; ++m)
            for (int r = 1; r <= std::min(opt.ci_max_factors, m); ++r)
                detail::enumerate_multidegrees(r, opt.ci_max_degree, 2, cur,
                                               [&](const std::vector<int>& ds) {
                    ++check.cases;
                    const int n = m - static_cast<int>(ds.size());
                    HodgeDiamond x = compute_diamond(CISpec{ambient(m), ds}, ctx);
                    std::vector<long long> chi = chi_y_ci(ds, m);
                    BigradedDims want = reconstruct_middle(chi, n);
                    if (x.table(n) != want)
                        check.failures.push_back({detail::degrees_label(ds, m),
                                                  "middle " + detail::dims_str(x.table(n)) + " vs oracle " +
                                                      detail::dims_str(want)});
                    long long chi_top = 0;
                    for (int p = 0; p <= n; ++p)
                        chi_top = checked_add(chi_top, p % 2 == 0 ? chi[static_cast<size_t>(p)]
                                                                  : -chi[static_cast<size_t>(p)]);
                    if (chi_top != euler_characteristic(x))
                        check.failures.push_back({detail::degrees_label(ds, m),
                                                  "chi_{y=-1} = " + std::to_string(chi_top) +
                                                      " vs euler " + std::to_string(euler_characteristic(x))});
                });
        sum.checks.push_back(std::move(check));
    }

    // the middle table must not depend on the split
    {
        VerifyCheck check;
        check.name = "split-independence";
        for (int n = 1; n <= opt.max_ambient_dim - 1; ++n)
            for (int d = 2; d <= opt.max_degree; ++d) {
                CISpec spec{ambient(n + 1), {d}};
                BigradedDims canonical = compute_diamond(spec, ctx).table(n);
                std::map<int, long long> canonical_f;
                for (int d1 = 1; 2 * d1 <= d; ++d1) {
                    ++check.cases;
                    SplitPlan split = make_split(d, d1, d - d1);
                    BigradedDims mid = middle_hodge(spec, split, ctx);
                    if (mid != canonical)
                        check.failures.push_back({detail::degrees_label({d}, n + 1) + " split " +
                                                      std::to_string(d1) + "+" + std::to_string(d - d1),
                                                  "middle differs from canonical split"});
                    std::map<int, long long> f = graded_F_dims(assemble_amhs(spec, split, ctx));
                    if (d1 == 1)
                        canonical_f = f;
                    else if (f != canonical_f)
                        check.failures.push_back({detail::degrees_label({d}, n + 1) + " split " +
                                                      std::to_string(d1) + "+" + std::to_string(d - d1),
                                                  "graded-F collapse differs across splits"});
                }
            }
        sum.checks.push_back(std::move(check));
    }

    // plane curves: engine genus against the closed form and adjunction
    {
        VerifyCheck check;
        check.name = "plane-curve-genus";
        for (int d = 1; d <= std::max(10, opt.max_degree); ++d) {
            ++check.cases;
            HodgeDiamond x = compute_diamond(CISpec{ambient(2), {d}}, ctx);
            long long g = x.table(1).at(1, 0);
            long long want = static_cast<long long>(d - 1) * (d - 2) / 2;
            if (g != want || g != genus_adjunction({d}, 2))
                check.failures.push_back(
                    {"[" + std::to_string(d) + "] in P2",
                     "genus " + std::to_string(g) + " != " + std::to_string(want) +
                         "; degeneration identity g(d) = g(d1) + g(d2) + d1*d2 - 1 violated"});
        }
        sum.checks.push_back(std::move(check));
    }

    // weight-piece identities of the limit structure
    {
        VerifyCheck check;
        check.name = "amhs-invariants";
        auto probe = [&](const CISpec& spec, int n) {
            ++check.cases;
            const std::string label = detail::degrees_label(spec.degrees, spec.ambient.dim());
            SplitPlan split = choose_split(*std::max_element(spec.degrees.begin(), spec.degrees.end()));
            WeightGradedMHS mhs = assemble_amhs(spec, split, ctx);
            const BigradedDims* lo = mhs.piece(n - 1);
            const BigradedDims* hi = mhs.piece(n + 1);
            if (!lo || !hi || *hi != tate_twist(*lo, 1))
                check.failures.push_back({label, "weight n+1 piece is not the twist of weight n-1"});
            HodgeDiamond x = compute_diamond(spec, ctx);
            if (mhs.total_dimension() != x.betti(n))
                check.failures.push_back({label, "total graded dimension != middle Betti number"});
            if (!mhs.validate().empty())
                check.failures.push_back({label, "weight piece violates symmetry/support"});
            std::map<int, long long> f = graded_F_dims(mhs);
            std::map<int, long long> mid_f;
            for (const auto& [pq, v] : x.table(n).entries()) {
                auto [it, fresh] = mid_f.try_emplace(pq.first, 0);
                it->second += v;
                (void)fresh;
            }
            if (f != mid_f) check.failures.push_back({label, "graded-F collapse != middle Hodge numbers"});
        };
        for (int n = 1; n <= opt.max_ambient_dim - 1; ++n)
            for (int d = 2; d <= opt.max_degree; ++d) probe(CISpec{ambient(n + 1), {d}}, n);
        std::vector<int> cur;
        for (int m = 2; m <= opt.max_ambient_dim; ++m)
            for (int r = 1; r <= std::min(opt.ci_max_factors, m - 1); ++r)
                detail::enumerate_multidegrees(r, opt.ci_max_degree, 2, cur,
                                               [&](const std::vector<int>& ds) {
                    probe(CISpec{ambient(m), ds}, m - static_cast<int>(ds.size()));
                });
        sum.checks.push_back(std::move(check));
    }

    // above-middle degrees against the double and triple locus
    {
        VerifyCheck check;
        check.name = "high-degree";
        auto probe = [&](const CISpec& spec) {
            ++check.cases;
            int dmax = *std::max_element(spec.degrees.begin(), spec.degrees.end());
            CheckReport rep = high_degree_check(spec, choose_split(dmax), ctx);
            for (const CheckItem& item : rep.items)
                if (!item.ok)
                    check.failures.push_back({detail::degrees_label(spec.degrees, spec.ambient.dim()) + " " +
                                                  item.label,
                                              item.detail});
        };
        for (int n = 1; n <= opt.max_ambient_dim - 1; ++n)
            for (int d = 2; d <= opt.max_degree; ++d) probe(CISpec{ambient(n + 1), {d}});
        std::vector<int> cur;
        for (int m = 2; m <= opt.max_ambient_dim; ++m)
            for (int r = 1; r <= std::min(opt.ci_max_factors, m - 1); ++r)
                detail::enumerate_multidegrees(r, opt.ci_max_degree, 2, cur,
                                               [&](const std::vector<int>& ds) {
                    probe(CISpec{ambient(m), ds});
                });
        sum.checks.push_back(std::move(check));
    }

    // custom-ambient path vs the built-in path on the quadric threefold
    {
        VerifyCheck check;
        check.name = "two-path";
        AmbientSpec q3 = detail::make_quadric3_ambient(ctx);
        if (!validate_custom_spec(q3).valid())
            check.failures.push_back({"quadric3", "generated tower failed validation"});
        for (int d = 1; d <= opt.ci_max_degree; ++d) {
            ++check.cases;
            MemoStore fresh;  // keep the custom-keyed entries separate
            Context cctx{fresh};
            cctx.reduced_point_prim = opt.reduced_point_prim;
            HodgeDiamond via_custom = compute_diamond(CISpec{q3, {d}}, cctx);
            HodgeDiamond via_builtin = compute_diamond(CISpec{ambient(4), {2, d}}, ctx);
            if (!(via_custom == via_builtin))
                check.failures.push_back({"[" + std::to_string(d) + "] in quadric3",
                                          "differs from [2," + std::to_string(d) + "] in P4"});
        }
        sum.checks.push_back(std::move(check));
    }

    // circle bundle over the double locus
    {
        VerifyCheck check;
        check.name = "circle-bundle";
        {
            ++check.cases;  // Hopf pattern over P1
            CircleBundleCohomology t = circle_bundle_cohomology(projective_space_diamond(1), 2);
            bool ok = t.betti(0) == 1 && t.betti(1) == 0 && t.betti(2) == 0 && t.betti(3) == 1 &&
                      t.degrees[3].pieces().size() == 1 && t.degrees[3].pieces()[0].first == 4 &&
                      t.degrees[3].pieces()[0].second == BigradedDims{{{2, 2}, 1}};
            if (!ok) check.failures.push_back({"I2 = P1, n = 2", "expected Hopf dimensions (1, 0, 0, 1)"});
        }
        for (int d = 2; d <= std::min(5, opt.max_degree); ++d)
            for (int n = 1; n <= std::min(4, opt.max_ambient_dim - 1); ++n) {
                ++check.cases;
                CISpec spec{ambient(n + 1), {d}};
                detail::Problem p = detail::make_problem(spec.ambient, spec.degrees);
                detail::Subproblems subs = detail::make_subproblems(p, choose_split(d));
                CircleBundleCohomology t = circle_bundle_cohomology(compute(subs.i2, ctx), n);
                long long alt = 0;
                for (int k = 0; k <= 2 * n - 1; ++k)
                    alt = checked_add(alt, k % 2 == 0 ? t.betti(k) : -t.betti(k));
                if (alt != 0)
                    check.failures.push_back({detail::degrees_label({d}, n + 1),
                                              "circle-bundle alternating sum " + std::to_string(alt)});
            }
        sum.checks.push_back(std::move(check));
    }

    // blow-up correction preserves the Euler characteristic additively
    {
        VerifyCheck check;
        check.name = "blowup-chi";
        std::mt19937 rng(20260822u);
        std::uniform_int_distribution<int> dims(2, 5);
        for (int t = 0; t < 20; ++t) {
            ++check.cases;
            int nb = dims(rng);
            HodgeDiamond base = detail::random_diamond(rng, nb);
            HodgeDiamond center = detail::random_diamond(rng, nb - 2);
            HodgeDiamond blown = blowup_correction(base, center);
            if (euler_characteristic(blown) !=
                checked_add(euler_characteristic(base), euler_characteristic(center)))
                check.failures.push_back({"random case " + std::to_string(t), "chi not additive"});
        }
        sum.checks.push_back(std::move(check));
    }

    // special-fiber Euler characteristic bookkeeping
    {
        VerifyCheck check;
        check.name = "union-euler";
        for (int n = 1; n <= std::min(4, opt.max_ambient_dim - 1); ++n)
            for (int d = 2; d <= std::min(6, opt.max_degree); ++d)
                for (int d1 = 1; 2 * d1 <= d; ++d1) {
                    ++check.cases;
                    CISpec spec{ambient(n + 1), {d}};
                    detail::Problem p = detail::make_problem(spec.ambient, spec.degrees);
                    detail::Subproblems subs = detail::make_subproblems(p, make_split(d, d1, d - d1));
                    const HodgeDiamond& v1 = compute(subs.v1, ctx);
                    const HodgeDiamond& v2 = compute(subs.v2, ctx);
                    const HodgeDiamond& i2 = compute(subs.i2, ctx);
                    std::optional<HodgeDiamond> i3;
                    if (subs.i3) i3 = compute(*subs.i3, ctx);
                    HodgeDiamond v2t = blowup_correction(v2, i3);
                    const HodgeDiamond& nearby = compute(p, ctx);
                    CheckReport rep = union_euler_check(v1, v2t, i2, &nearby);
                    if (!rep.passed())
                        check.failures.push_back({detail::degrees_label({d}, n + 1) + " split " +
                                                      std::to_string(d1) + "+" + std::to_string(d - d1),
                                                  rep.items.back().detail});
                }
        sum.checks.push_back(std::move(check));
    }

    return sum;
}

}  // namespace hodgeci
