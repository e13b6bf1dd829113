#pragma once

#include <string>
#include <vector>

#include "hodgeci/bigraded.hpp"

namespace hodgeci {

/* Full Hodge diamond of a smooth projective variety of dimension n: one
   bigraded table per cohomological degree k = 0..2n.  Valid diamonds satisfy
   conjugation symmetry in every degree, Poincare/Serre duality between
   degrees k and 2n-k, and have degree 0 concentrated at (0,0) where the
   value counts connected components. */
class HodgeDiamond {
public:
    HodgeDiamond() : dim_(0), table_(1) {}
    explicit HodgeDiamond(int dim) : dim_(dim), table_(dim >= 0 ? 2 * dim + 1 : 0) {
        if (dim < 0) throw DimensionError("negative dimension for a Hodge diamond");
    }

    int dim() const { return dim_; }

    const BigradedDims& table(int k) const {
        check_degree(k);
        return table_[static_cast<size_t>(k)];
    }

    /* degree lookup that treats everything outside [0, 2n] as zero */
    BigradedDims table_or_zero(int k) const {
        if (k < 0 || k > 2 * dim_) return {};
        return table_[static_cast<size_t>(k)];
    }

    void set_table(int k, BigradedDims t) {
        check_degree(k);
        table_[static_cast<size_t>(k)] = std::move(t);
    }

    void add_table(int k, const BigradedDims& t) {
        check_degree(k);
        table_[static_cast<size_t>(k)] = table_[static_cast<size_t>(k)] + t;
    }

    long long betti(int k) const { return k < 0 || k > 2 * dim_ ? 0 : table_[static_cast<size_t>(k)].total(); }

    bool operator==(const HodgeDiamond& other) const = default;

    /* Returns the list of invariant violations; empty means valid. */
    std::vector<std::string> validate() const {
        std::vector<std::string> bad;
        for (int k = 0; k <= 2 * dim_; ++k) {
            const BigradedDims& t = table_[static_cast<size_t>(k)];
            if (!t.supported_on_total(k))
                bad.push_back("degree " + std::to_string(k) + ": entry off the line p+q=k");
            if (!t.supported_in_box(0, dim_))
                bad.push_back("degree " + std::to_string(k) + ": index outside [0, dim]");
            if (!t.is_symmetric())
                bad.push_back("degree " + std::to_string(k) + ": h^{p,q} != h^{q,p}");
        }
        for (int k = 0; k <= dim_; ++k) {
            if (reflect(table_[static_cast<size_t>(k)], dim_) != table_[static_cast<size_t>(2 * dim_ - k)])
                bad.push_back("degrees " + std::to_string(k) + "/" + std::to_string(2 * dim_ - k) +
                              ": duality mismatch");
        }
        const BigradedDims& h0 = table_[0];
        if (h0.at(0, 0) < 1) bad.push_back("degree 0: no connected-component count at (0,0)");
        for (const auto& [pq, v] : h0.entries()) {
            (void)v;
            if (pq != BigradedDims::Key{0, 0}) bad.push_back("degree 0: support away from (0,0)");
        }
        return bad;
    }

    bool valid() const { return validate().empty(); }

private:
    void check_degree(int k) const {
        if (k < 0 || k > 2 * dim_)
            throw RangeError("cohomological degree " + std::to_string(k) + " outside [0, " +
                             std::to_string(2 * dim_) + "]");
    }

    int dim_;
    std::vector<BigradedDims> table_;
};

/* dim-0 diamond of `count` reduced points */
inline HodgeDiamond point_diamond(long long count) {
    if (count < 1) throw SpecError("point count must be positive");
    HodgeDiamond d(0);
    BigradedDims t;
    t.add(0, 0, count);
    d.set_table(0, std::move(t));
    return d;
}

/* The degree-(2n-k) table reflected through (p,q) -> (n-p, n-q); for a valid
   diamond this equals the degree-k table, which makes it the natural duality
   transport for partially built tables. */
inline BigradedDims dual_reflect(const HodgeDiamond& d, int k) {
    if (k < 0 || k > 2 * d.dim()) throw RangeError("dual_reflect: degree outside [0, 2 dim]");
    return reflect(d.table(2 * d.dim() - k), d.dim());
}

inline long long euler_characteristic(const HodgeDiamond& d) {
    long long chi = 0;
    for (int k = 0; k <= 2 * d.dim(); ++k) {
        long long b = d.betti(k);
        chi = checked_add(chi, k % 2 == 0 ? b : -b);
    }
    return chi;
}

}  // namespace hodgeci
