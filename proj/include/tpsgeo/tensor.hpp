#pragma once

#include "tpsgeo/errors.hpp"

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace tpsgeo {

/// Uniform carrier for tensor components at one point: valence (r, s) and a
/// dense row-major array of shape d^(r+s). Slot conventions are fixed by the
/// producing operation; for (1, k) tensors the k argument slots come first
/// and the contravariant (output) slot last.
class TensorAtPoint {
public:
    TensorAtPoint() : r_(0), s_(0), dim_(0) {}

    TensorAtPoint(int r, int s, int dim, std::vector<double> point)
        : r_(r), s_(s), dim_(dim), point_(std::move(point)) {
        std::size_t size = 1;
        for (int k = 0; k < r + s; ++k) size *= static_cast<std::size_t>(dim);
        data_.assign(size, 0.0);
    }

    int rank() const { return r_ + s_; }
    int contravariant_rank() const { return r_; }
    int covariant_rank() const { return s_; }
    int dim() const { return dim_; }
    const std::vector<double>& point() const { return point_; }
    const std::vector<double>& data() const { return data_; }
    std::vector<double>& mutable_data() { return data_; }

    double& at(std::initializer_list<int> idx) { return data_[flat(idx)]; }
    double at(std::initializer_list<int> idx) const { return data_[flat(idx)]; }

    template <typename... I>
    double& operator()(I... idx) {
        return at({static_cast<int>(idx)...});
    }
    template <typename... I>
    double operator()(I... idx) const {
        return at({static_cast<int>(idx)...});
    }

    double max_abs() const {
        double m = 0.0;
        for (double v : data_) m = std::max(m, std::abs(v));
        return m;
    }

private:
    std::size_t flat(std::initializer_list<int> idx) const {
        if (static_cast<int>(idx.size()) != rank())
            throw ValenceMismatchError("tensor index count " + std::to_string(idx.size()) +
                                       " does not match rank " + std::to_string(rank()));
        std::size_t f = 0;
        for (int i : idx) f = f * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(i);
        return f;
    }

    int r_, s_, dim_;
    std::vector<double> point_;
    std::vector<double> data_;
};

} // namespace tpsgeo
