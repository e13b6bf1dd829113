#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hodgeci/bigraded.hpp"

namespace hodgeci {

/* Weight-graded pieces of a mixed structure on one cohomological degree.
   Pieces are kept in strictly increasing weight order; a piece may be the
   zero table (pieces that are structurally present but happen to vanish). */
class WeightGradedMHS {
public:
    explicit WeightGradedMHS(int degree) : degree_(degree) {
        if (degree < 0) throw RangeError("negative cohomological degree");
    }

    int degree() const { return degree_; }

    void add_piece(int weight, BigradedDims dims) {
        if (!pieces_.empty() && weight <= pieces_.back().first)
            throw ConsistencyError("weights must be strictly increasing");
        pieces_.emplace_back(weight, std::move(dims));
    }

    const std::vector<std::pair<int, BigradedDims>>& pieces() const { return pieces_; }

    const BigradedDims* piece(int weight) const {
        for (const auto& [w, dims] : pieces_)
            if (w == weight) return &dims;
        return nullptr;
    }

    long long total_dimension() const {
        long long t = 0;
        for (const auto& [w, dims] : pieces_) {
            (void)w;
            t = checked_add(t, dims.total());
        }
        return t;
    }

    std::vector<std::string> validate() const {
        std::vector<std::string> bad;
        for (const auto& [w, dims] : pieces_) {
            if (!dims.supported_on_total(w))
                bad.push_back("weight " + std::to_string(w) + ": entry off the line p+q=w");
            if (!dims.is_symmetric())
                bad.push_back("weight " + std::to_string(w) + ": piece not symmetric");
        }
        return bad;
    }

private:
    int degree_;
    std::vector<std::pair<int, BigradedDims>> pieces_;
};

/* Collapse the weight grading to the Hodge filtration grading: dimension of
   Gr_F^p summed over all pieces.  Additive over concatenation of pieces. */
inline std::map<int, long long> graded_F_dims(const WeightGradedMHS& mhs) {
    std::map<int, long long> out;
    for (const auto& [w, dims] : mhs.pieces()) {
        (void)w;
        for (const auto& [pq, v] : dims.entries()) {
            auto [it, fresh] = out.try_emplace(pq.first, 0);
            it->second = checked_add(it->second, v);
            (void)fresh;
        }
    }
    return out;
}

}  // namespace hodgeci
