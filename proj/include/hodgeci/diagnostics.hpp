#pragma once

#include <optional>

#include "hodgeci/engine.hpp"

namespace hodgeci {

/* Cohomology of the unit circle bundle T of the degeneration, fibered over
   the double locus I2 (dimension n-1).  Each degree carries a single weight:

       H^k(T) = prim H^k(I2)                weight k      for k <= n-1
       H^k(T) = prim H^{k-1}(I2) twisted    weight k+1    for k >= n

   and H^k(T) = 0 outside [0, 2n-1].  Zero pieces are dropped. */
struct CircleBundleCohomology {
    int n = 0;
    HodgeDiamond base;
    std::vector<WeightGradedMHS> degrees;  // index k = 0..2n-1

    long long betti(int k) const {
        if (k < 0 || k >= static_cast<int>(degrees.size())) return 0;
        return degrees[static_cast<size_t>(k)].total_dimension();
    }
};

inline CircleBundleCohomology circle_bundle_cohomology(const HodgeDiamond& i2, int n) {
    if (n < 1) throw DimensionError("circle bundle needs n >= 1");
    if (i2.dim() != n - 1)
        throw DimensionError("double locus must have dimension n-1 = " + std::to_string(n - 1) + ", got " +
                             std::to_string(i2.dim()));
    CircleBundleCohomology out;
    out.n = n;
    out.base = i2;
    for (int k = 0; k <= 2 * n - 1; ++k) {
        WeightGradedMHS piece(k);
        if (k <= n - 1) {
            // cokernel of cup product with the polarization from two degrees below
            BigradedDims prim = difference(i2.table_or_zero(k), tate_twist(i2.table_or_zero(k - 2), 1));
            if (!prim.empty()) piece.add_piece(k, std::move(prim));
        } else {
            BigradedDims top = tate_twist(prim_above(i2, k - 1), 1);
            if (!top.empty()) piece.add_piece(k + 1, std::move(top));
        }
        out.degrees.push_back(std::move(piece));
    }
    return out;
}

/* Blow up along a smooth center of codimension two: each degree k of the
   center contributes its (1,1)-twist to degree k+2 of the result. */
inline HodgeDiamond blowup_correction(const HodgeDiamond& base,
                                      const std::optional<HodgeDiamond>& center) {
    if (!center) return base;
    if (center->dim() != base.dim() - 2)
        throw DimensionError("blow-up center must have codimension two");
    HodgeDiamond out = base;
    for (int k = 0; k <= 2 * center->dim(); ++k) out.add_table(k + 2, tate_twist(center->table(k), 1));
    std::vector<std::string> bad = out.validate();
    if (!bad.empty()) throw ConsistencyError("blow-up produced an invalid diamond: " + bad.front());
    return out;
}

/* Euler characteristic bookkeeping for the special fiber V_d1 u V~_d2 glued
   along I2.  The Mayer-Vietoris side chi(V1) + chi(V~2) - chi(I2) must agree
   with the vanishing-cycle side chi(V_d) + chi(I2) computed from the smooth
   nearby fiber, when the latter is supplied. */
inline CheckReport union_euler_check(const HodgeDiamond& v1, const HodgeDiamond& v2_tilde,
                                     const HodgeDiamond& i2, const HodgeDiamond* nearby = nullptr) {
    if (v1.dim() != v2_tilde.dim() || i2.dim() != v1.dim() - 1)
        throw DimensionError("union_euler_check: components and double locus dimensions inconsistent");
    CheckReport rep;
    long long mv = checked_sub(checked_add(euler_characteristic(v1), euler_characteristic(v2_tilde)),
                               euler_characteristic(i2));
    {
        CheckItem item;
        item.label = "mayer-vietoris";
        item.ok = true;
        item.detail = "chi(V1) + chi(V2~) - chi(I2) = " + std::to_string(euler_characteristic(v1)) + " + " +
                      std::to_string(euler_characteristic(v2_tilde)) + " - " +
                      std::to_string(euler_characteristic(i2)) + " = " + std::to_string(mv);
        rep.items.push_back(std::move(item));
    }
    if (nearby) {
        if (nearby->dim() != v1.dim()) throw DimensionError("union_euler_check: nearby fiber dimension mismatch");
        long long vc = checked_add(euler_characteristic(*nearby), euler_characteristic(i2));
        CheckItem item;
        item.label = "vanishing-cycle";
        item.ok = mv == vc;
        item.detail = "chi(V_d) + chi(I2) = " + std::to_string(euler_characteristic(*nearby)) + " + " +
                      std::to_string(euler_characteristic(i2)) + " = " + std::to_string(vc) +
                      (item.ok ? " (agrees)" : " (DISAGREES with " + std::to_string(mv) + ")");
        rep.items.push_back(std::move(item));
    }
    return rep;
}

}  // namespace hodgeci
