#pragma once

#include <vector>

#include "hodgeci/numeric.hpp"

namespace hodgeci {

/* Truncated bivariate power series with exact integer coefficients: elements
   of Z[[z, y]] / (z^zcap, y^ycap).  Just enough arithmetic for generating-
   function coefficient extraction; inversion needs a unit constant term. */
class BivariateSeries {
public:
    BivariateSeries(int zcap, int ycap) : zcap_(zcap), ycap_(ycap), c_(static_cast<size_t>(zcap) * ycap, 0) {
        if (zcap < 1 || ycap < 1) throw RangeError("series truncation orders must be positive");
    }

    static BivariateSeries constant(int zcap, int ycap, long long v) {
        BivariateSeries s(zcap, ycap);
        s.set(0, 0, v);
        return s;
    }

    /* a + b*z + c*z*y builder for the basic linear factors */
    static BivariateSeries linear(int zcap, int ycap, long long a, long long bz, long long bzy) {
        BivariateSeries s(zcap, ycap);
        s.set(0, 0, a);
        if (zcap > 1) s.set(1, 0, bz);
        if (zcap > 1 && ycap > 1) s.set(1, 1, bzy);
        return s;
    }

    int zcap() const { return zcap_; }
    int ycap() const { return ycap_; }

    long long coeff(int i, int j) const {
        if (i < 0 || i >= zcap_ || j < 0 || j >= ycap_) return 0;
        return c_[idx(i, j)];
    }

    void set(int i, int j, long long v) {
        if (i < 0 || i >= zcap_ || j < 0 || j >= ycap_) throw RangeError("series coefficient out of range");
        c_[idx(i, j)] = v;
    }

    BivariateSeries add(const BivariateSeries& o) const {
        same_shape(o);
        BivariateSeries r(zcap_, ycap_);
        for (size_t t = 0; t < c_.size(); ++t) r.c_[t] = checked_add(c_[t], o.c_[t]);
        return r;
    }

    BivariateSeries sub(const BivariateSeries& o) const {
        same_shape(o);
        BivariateSeries r(zcap_, ycap_);
        for (size_t t = 0; t < c_.size(); ++t) r.c_[t] = checked_sub(c_[t], o.c_[t]);
        return r;
    }

    BivariateSeries mul(const BivariateSeries& o) const {
        same_shape(o);
        BivariateSeries r(zcap_, ycap_);
        for (int i = 0; i < zcap_; ++i)
            for (int j = 0; j < ycap_; ++j) {
                long long v = c_[idx(i, j)];
                if (v == 0) continue;
                for (int a = 0; i + a < zcap_; ++a)
                    for (int b = 0; j + b < ycap_; ++b) {
                        long long w = o.c_[o.idx(a, b)];
                        if (w == 0) continue;
                        size_t t = idx(i + a, j + b);
                        r.c_[t] = checked_add(r.c_[t], checked_mul(v, w));
                    }
            }
        return r;
    }

    BivariateSeries pow(int e) const {
        if (e < 0) throw RangeError("negative series power");
        BivariateSeries r = constant(zcap_, ycap_, 1);
        for (int t = 0; t < e; ++t) r = r.mul(*this);
        return r;
    }

    /* multiply by y */
    BivariateSeries shift_y() const {
        BivariateSeries r(zcap_, ycap_);
        for (int i = 0; i < zcap_; ++i)
            for (int j = 0; j + 1 < ycap_; ++j) r.c_[idx(i, j + 1)] = c_[idx(i, j)];
        return r;
    }

    /* Multiplicative inverse; the constant coefficient must be a unit of Z.
       Solved coefficientwise in row-major order, so every intermediate value
       stays an exact integer. */
    BivariateSeries inverse() const {
        long long u = coeff(0, 0);
        if (u != 1 && u != -1) throw ConsistencyError("series inversion needs constant coefficient +-1");
        BivariateSeries r(zcap_, ycap_);
        for (int i = 0; i < zcap_; ++i)
            for (int j = 0; j < ycap_; ++j) {
                long long acc = (i == 0 && j == 0) ? 1 : 0;
                for (int a = 0; a <= i; ++a)
                    for (int b = 0; b <= j; ++b) {
                        if (a == 0 && b == 0) continue;
                        long long d = coeff(a, b);
                        if (d == 0) continue;
                        acc = checked_sub(acc, checked_mul(d, r.coeff(i - a, j - b)));
                    }
                r.c_[idx(i, j)] = u == 1 ? acc : -acc;
            }
        return r;
    }

private:
    size_t idx(int i, int j) const { return static_cast<size_t>(i) * ycap_ + j; }
    void same_shape(const BivariateSeries& o) const {
        if (zcap_ != o.zcap_ || ycap_ != o.ycap_) throw RangeError("series truncation orders differ");
    }

    int zcap_, ycap_;
    std::vector<long long> c_;
};

}  // namespace hodgeci
