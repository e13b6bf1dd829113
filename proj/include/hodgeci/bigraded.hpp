#pragma once

#include <initializer_list>
#include <map>
#include <utility>

#include "hodgeci/numeric.hpp"

namespace hodgeci {

/* Finitely supported table of nonnegative dimensions indexed by (p, q).
   Zero entries are never stored, so equality of tables is equality of the
   stored maps.  Lookups outside the support return 0.  Negative (p, q)
   indices are legal; the engine clamps them where a formula demands it. */
class BigradedDims {
public:
    using Key = std::pair<int, int>;
    using Map = std::map<Key, long long>;

    BigradedDims() = default;
    BigradedDims(std::initializer_list<std::pair<Key, long long>> init) {
        for (const auto& [pq, v] : init) add(pq.first, pq.second, v);
    }

    long long at(int p, int q) const {
        auto it = entries_.find({p, q});
        return it == entries_.end() ? 0 : it->second;
    }

    /* Accumulate a nonnegative contribution.  Subtraction happens only through
       difference(), which rejects negative results. */
    void add(int p, int q, long long v) {
        if (v < 0) throw ConsistencyError("negative contribution to a dimension table");
        if (v == 0) return;
        auto [it, fresh] = entries_.try_emplace({p, q}, 0);
        it->second = checked_add(it->second, v);
        (void)fresh;
    }

    long long total() const {
        long long t = 0;
        for (const auto& [pq, v] : entries_) t = checked_add(t, v);
        return t;
    }

    bool empty() const { return entries_.empty(); }
    const Map& entries() const { return entries_; }

    bool operator==(const BigradedDims& other) const = default;

    /* h^{p,q} = h^{q,p} */
    bool is_symmetric() const {
        for (const auto& [pq, v] : entries_)
            if (at(pq.second, pq.first) != v) return false;
        return true;
    }

    /* every entry sits on the line p + q = k */
    bool supported_on_total(int k) const {
        for (const auto& [pq, v] : entries_) {
            (void)v;
            if (pq.first + pq.second != k) return false;
        }
        return true;
    }

    /* every index lies in [lo, hi] */
    bool supported_in_box(int lo, int hi) const {
        for (const auto& [pq, v] : entries_) {
            (void)v;
            if (pq.first < lo || pq.first > hi || pq.second < lo || pq.second > hi) return false;
        }
        return true;
    }

private:
    Map entries_;
};

/* Tate twist by (s, s): shifts every index and, at the structure level, the
   weight by 2s.  tate_twist(tate_twist(x, a), b) == tate_twist(x, a + b). */
inline BigradedDims tate_twist(const BigradedDims& dims, int s) {
    BigradedDims out;
    for (const auto& [pq, v] : dims.entries()) out.add(pq.first + s, pq.second + s, v);
    return out;
}

inline BigradedDims operator+(const BigradedDims& a, const BigradedDims& b) {
    BigradedDims out = a;
    for (const auto& [pq, v] : b.entries()) out.add(pq.first, pq.second, v);
    return out;
}

/* Componentwise a - b; any negative component is an internal consistency error. */
inline BigradedDims difference(const BigradedDims& a, const BigradedDims& b) {
    BigradedDims out;
    for (const auto& [pq, v] : a.entries()) {
        long long d = checked_sub(v, b.at(pq.first, pq.second));
        if (d < 0) throw ConsistencyError("componentwise difference went negative");
        out.add(pq.first, pq.second, d);
    }
    for (const auto& [pq, v] : b.entries())
        if (a.at(pq.first, pq.second) == 0 && v != 0)
            throw ConsistencyError("componentwise difference went negative");
    return out;
}

inline BigradedDims transpose(const BigradedDims& dims) {
    BigradedDims out;
    for (const auto& [pq, v] : dims.entries()) out.add(pq.second, pq.first, v);
    return out;
}

/* (p, q) -> (n - p, n - q), the index map of Poincare/Serre duality. */
inline BigradedDims reflect(const BigradedDims& dims, int n) {
    BigradedDims out;
    for (const auto& [pq, v] : dims.entries()) out.add(n - pq.first, n - pq.second, v);
    return out;
}

}  // namespace hodgeci
