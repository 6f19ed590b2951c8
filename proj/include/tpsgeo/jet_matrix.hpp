#pragma once

#include "tpsgeo/jet.hpp"

#include <vector>

namespace tpsgeo {

/// Dense rectangular matrix of jets. Row-major storage.
class JetMatrix {
public:
    JetMatrix() : rows_(0), cols_(0) {}
    JetMatrix(int rows, int cols, const Jet2& fill)
        : rows_(rows), cols_(cols),
          m_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill) {}

    static JetMatrix zero(int rows, int cols, int jet_dim) {
        return JetMatrix(rows, cols, Jet2::constant(jet_dim, 0.0));
    }

    static JetMatrix identity(int n, int jet_dim) {
        JetMatrix m = zero(n, n, jet_dim);
        for (int i = 0; i < n; ++i) m.at(i, i) = Jet2::constant(jet_dim, 1.0);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Jet2& at(int r, int c) { return m_[index(r, c)]; }
    const Jet2& at(int r, int c) const { return m_[index(r, c)]; }

    JetMatrix transposed() const {
        JetMatrix t(cols_, rows_, m_.empty() ? Jet2() : m_[0]);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    /// Max-abs difference of the value parts against the identity matrix.
    double value_identity_defect() const;

private:
    std::size_t index(int r, int c) const {
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(c);
    }

    int rows_, cols_;
    std::vector<Jet2> m_;
};

JetMatrix operator*(const JetMatrix& a, const JetMatrix& b);

/// Gauss-Jordan inverse with partial pivoting, carried out entirely in jet
/// arithmetic so value, gradient and Hessian of the inverse are all exact.
/// Throws SingularMatrixError when the value part is singular or the 1-norm
/// condition estimate exceeds cond_limit.
JetMatrix jet_matrix_inverse(const JetMatrix& m, double cond_limit = 1e12);

/// 1-norm condition estimate of the value part (norm(A) * norm(inv(A))).
double value_condition_estimate(const JetMatrix& m);

struct LeastSquaresResult {
    std::vector<double> coefficients;
    double residual; // max-norm of the defect A*c - b
};

/// Minimizer of |A c - b|^2 via the normal equations. Requires rows >= cols
/// and full column rank; a rank-deficient design throws RankDeficientError
/// naming the dependent column.
LeastSquaresResult least_squares(const std::vector<std::vector<double>>& design,
                                 const std::vector<double>& target);

namespace detail {

/// Plain double-valued inverse (same pivoting as the jet version). Returns
/// false when singular; cond receives the 1-norm condition estimate.
bool invert_values(std::vector<std::vector<double>>& a, double& cond);

} // namespace detail

} // namespace tpsgeo
