#pragma once

#include <string>
#include <vector>

#include "hodgeci/bigraded.hpp"
#include "hodgeci/series.hpp"

namespace hodgeci {

/* Independent classical computations used to cross-check the degeneration
   engine.  Nothing here touches the recursion: residue-style monomial
   counting, a generating function for the chi_y genus, and adjunction. */

enum class OracleSource { GriffithsResidue, ChiYGenus, Adjunction };

struct OracleResult {
    OracleSource source = OracleSource::GriffithsResidue;
    BigradedDims dims;
    long long value = 0;
    std::string note;
};

/* Number of monomials of total degree t in `vars` variables with every
   exponent at most max_exp, by inclusion-exclusion over the variables that
   overshoot. */
inline long long bounded_monomial_count(long long t, int vars, long long max_exp) {
    if (t < 0 || vars < 1) return 0;
    long long total = 0;
    for (int j = 0; j <= vars; ++j) {
        long long rem = t - static_cast<long long>(j) * (max_exp + 1);
        if (rem < 0) break;
        long long term = checked_mul(binomial(vars, j), binomial(rem + vars - 1, vars - 1));
        total = checked_add(total, j % 2 == 0 ? term : -term);
    }
    if (total < 0) throw ConsistencyError("monomial count went negative");
    return total;
}

/* Primitive middle Hodge numbers of a smooth degree-d hypersurface in
   P^{n+1} from the Jacobian-ring description: h^{n-q,q}_prim counts the
   monomials of degree (q+1)d - (n+2) in n+2 variables with every exponent
   at most d-2. */
inline BigradedDims griffiths_prim_dims(int d, int n) {
    if (d < 1) throw SpecError("hypersurface degree must be >= 1");
    if (n < 1) throw DimensionError("hypersurface dimension must be >= 1");
    BigradedDims out;
    for (int q = 0; q <= n; ++q) {
        long long t = static_cast<long long>(q + 1) * d - (n + 2);
        out.add(n - q, q, bounded_monomial_count(t, n + 2, d - 2));
    }
    return out;
}

/* chi_p = sum_q (-1)^q h^q(X, Omega^p) for the complete intersection of the
   given multidegree in P^N, via the classical generating function

     sum_n chi_y(X_n) z^{n+r} =
         1/((1+zy)(1-z)) * prod_i ((1+zy)^{a_i} - (1-z)^{a_i})
                                 / ((1+zy)^{a_i} + y (1-z)^{a_i})

   expanded with exact integer coefficients.  Returns (chi_0, ..., chi_n). */
inline std::vector<long long> chi_y_ci(const std::vector<int>& degrees, int N) {
    const int r = static_cast<int>(degrees.size());
    if (N < 0 || r < 1 || r > N) throw DimensionError("need 1 <= #degrees <= N");
    for (int a : degrees)
        if (a < 1) throw SpecError("degrees must be >= 1");
    const int n = N - r;
    const int zc = N + 1;
    const int yc = n + 3;  // one spare order to verify the polynomial degree bound

    const BivariateSeries one_pzy = BivariateSeries::linear(zc, yc, 1, 0, 1);   // 1 + zy
    const BivariateSeries one_mz = BivariateSeries::linear(zc, yc, 1, -1, 0);   // 1 - z
    BivariateSeries g = one_pzy.mul(one_mz).inverse();
    for (int a : degrees) {
        BivariateSeries pa = one_pzy.pow(a);
        BivariateSeries ma = one_mz.pow(a);
        g = g.mul(pa.sub(ma)).mul(pa.add(ma.shift_y()).inverse());
    }
    std::vector<long long> chi(static_cast<size_t>(n) + 1);
    for (int p = 0; p <= n; ++p) chi[static_cast<size_t>(p)] = g.coeff(N, p);
    if (g.coeff(N, n + 1) != 0 || g.coeff(N, n + 2) != 0)
        throw ConsistencyError("chi_y polynomial exceeds the dimension bound");
    return chi;
}

/* Recover the middle Hodge numbers of an n-dimensional complete intersection
   in projective space from its chi_p values: removing the forced non-middle
   contribution t_p = (-1)^p (present when 2p != n) leaves the middle column,
   up to the sign of the alternating sum:

       h^{p, n-p} = (-1)^{n-p} (chi_p - t_p).  */
inline BigradedDims reconstruct_middle(const std::vector<long long>& chi, int n) {
    if (n < 0 || chi.size() != static_cast<size_t>(n) + 1)
        throw SpecError("need exactly chi_0..chi_n");
    BigradedDims out;
    for (int p = 0; p <= n; ++p) {
        long long t = 2 * p != n ? (p % 2 == 0 ? 1 : -1) : 0;
        long long v = checked_sub(chi[static_cast<size_t>(p)], t);
        if ((n - p) % 2 != 0) v = -v;
        if (v < 0) throw ConsistencyError("reconstructed middle Hodge number is negative");
        out.add(p, n - p, v);
    }
    if (!out.is_symmetric()) throw ConsistencyError("reconstructed middle table is not symmetric");
    return out;
}

/* Genus of a smooth complete intersection curve in P^N by adjunction:
   2g - 2 = deg * (sum of degrees - N - 1). */
inline long long genus_adjunction(const std::vector<int>& degrees, int N) {
    if (N - static_cast<int>(degrees.size()) != 1)
        throw DimensionError("genus_adjunction needs a curve: #degrees = N - 1");
    long long deg = 1, sum = 0;
    for (int d : degrees) {
        if (d < 1) throw SpecError("degrees must be >= 1");
        deg = checked_mul(deg, d);
        sum = checked_add(sum, d);
    }
    long long twog2 = checked_mul(deg, sum - N - 1);
    if (twog2 % 2 != 0) throw ConsistencyError("adjunction degree is odd");
    return 1 + twog2 / 2;
}

}  // namespace hodgeci
