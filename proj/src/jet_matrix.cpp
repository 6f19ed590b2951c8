#include "tpsgeo/jet_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tpsgeo {

double JetMatrix::value_identity_defect() const {
    double worst = 0.0;
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) {
            const double want = (r == c) ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(at(r, c).value() - want));
        }
    return worst;
}

JetMatrix operator*(const JetMatrix& a, const JetMatrix& b) {
    if (a.cols() != b.rows()) throw std::logic_error("JetMatrix shape mismatch in product");
    JetMatrix r = JetMatrix::zero(a.rows(), b.cols(), a.at(0, 0).dim());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) {
            Jet2 acc = Jet2::constant(a.at(0, 0).dim(), 0.0);
            for (int k = 0; k < a.cols(); ++k) acc = acc + a.at(i, k) * b.at(k, j);
            r.at(i, j) = acc;
        }
    return r;
}

namespace {

double norm1_values(const JetMatrix& m) {
    double best = 0.0;
    for (int c = 0; c < m.cols(); ++c) {
        double s = 0.0;
        for (int r = 0; r < m.rows(); ++r) s += std::abs(m.at(r, c).value());
        best = std::max(best, s);
    }
    return best;
}

} // namespace

JetMatrix jet_matrix_inverse(const JetMatrix& m, double cond_limit) {
    if (m.rows() != m.cols()) throw std::logic_error("jet_matrix_inverse: matrix not square");
    const int n = m.rows();
    const int jd = m.at(0, 0).dim();

    JetMatrix a = m;
    JetMatrix inv = JetMatrix::identity(n, jd);

    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a.at(r, col).value()) > std::abs(a.at(pivot, col).value())) pivot = r;
        if (a.at(pivot, col).value() == 0.0)
            throw SingularMatrixError(std::numeric_limits<double>::infinity(),
                                      "zero pivot in column " + std::to_string(col));
        if (pivot != col)
            for (int c = 0; c < n; ++c) {
                std::swap(a.at(pivot, c), a.at(col, c));
                std::swap(inv.at(pivot, c), inv.at(col, c));
            }
        const Jet2 scale = reciprocal(a.at(col, col));
        for (int c = 0; c < n; ++c) {
            a.at(col, c) = a.at(col, c) * scale;
            inv.at(col, c) = inv.at(col, c) * scale;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            const Jet2 factor = a.at(r, col);
            if (factor.value() == 0.0 && factor.is_finite()) {
                bool zero = true;
                for (int i = 0; i < jd && zero; ++i)
                    if (factor.grad(i) != 0.0) zero = false;
                if (zero) {
                    bool hzero = true;
                    for (int i = 0; i < jd && hzero; ++i)
                        for (int j = 0; j <= i && hzero; ++j)
                            if (factor.hess(i, j) != 0.0) hzero = false;
                    if (hzero) continue;
                }
            }
            for (int c = 0; c < n; ++c) {
                a.at(r, c) = a.at(r, c) - factor * a.at(col, c);
                inv.at(r, c) = inv.at(r, c) - factor * inv.at(col, c);
            }
        }
    }

    const double cond = norm1_values(m) * norm1_values(inv);
    if (!(cond <= cond_limit)) throw SingularMatrixError(cond);
    return inv;
}

double value_condition_estimate(const JetMatrix& m) {
    try {
        JetMatrix inv = jet_matrix_inverse(m, std::numeric_limits<double>::infinity());
        return norm1_values(m) * norm1_values(inv);
    } catch (const SingularMatrixError&) {
        return std::numeric_limits<double>::infinity();
    }
}

namespace detail {

bool invert_values(std::vector<std::vector<double>>& a, double& cond) {
    const std::size_t n = a.size();
    double norm_a = 0.0;
    for (std::size_t c = 0; c < n; ++c) {
        double s = 0.0;
        for (std::size_t r = 0; r < n; ++r) s += std::abs(a[r][c]);
        norm_a = std::max(norm_a, s);
    }

    std::vector<std::vector<double>> inv(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1.0;

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
        if (a[pivot][col] == 0.0) {
            cond = std::numeric_limits<double>::infinity();
            return false;
        }
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        const double scale = 1.0 / a[col][col];
        for (std::size_t c = 0; c < n; ++c) {
            a[col][c] *= scale;
            inv[col][c] *= scale;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const double f = a[r][col];
            if (f == 0.0) continue;
            for (std::size_t c = 0; c < n; ++c) {
                a[r][c] -= f * a[col][c];
                inv[r][c] -= f * inv[col][c];
            }
        }
    }

    double norm_inv = 0.0;
    for (std::size_t c = 0; c < n; ++c) {
        double s = 0.0;
        for (std::size_t r = 0; r < n; ++r) s += std::abs(inv[r][c]);
        norm_inv = std::max(norm_inv, s);
    }
    cond = norm_a * norm_inv;
    a = std::move(inv);
    return true;
}

} // namespace detail

LeastSquaresResult least_squares(const std::vector<std::vector<double>>& design,
                                 const std::vector<double>& target) {
    const std::size_t rows = design.size();
    if (rows == 0 || rows != target.size())
        throw std::logic_error("least_squares: empty design or size mismatch");
    const std::size_t cols = design[0].size();
    if (rows < cols) throw std::logic_error("least_squares: fewer rows than columns");

    // Normal equations: (A^T A) c = A^T b, solved by Gaussian elimination
    // with partial pivoting; a near-zero pivot identifies a dependent column.
    std::vector<std::vector<double>> ata(cols, std::vector<double>(cols, 0.0));
    std::vector<double> atb(cols, 0.0);
    double scale = 0.0;
    for (std::size_t r = 0; r < rows; ++r) {
        if (design[r].size() != cols) throw std::logic_error("least_squares: ragged design");
        for (std::size_t i = 0; i < cols; ++i) {
            atb[i] += design[r][i] * target[r];
            for (std::size_t j = 0; j < cols; ++j) ata[i][j] += design[r][i] * design[r][j];
        }
    }
    for (std::size_t i = 0; i < cols; ++i) scale = std::max(scale, std::abs(ata[i][i]));
    if (scale == 0.0) throw RankDeficientError(0);

    for (std::size_t col = 0; col < cols; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < cols; ++r)
            if (std::abs(ata[r][col]) > std::abs(ata[pivot][col])) pivot = r;
        if (std::abs(ata[pivot][col]) <= 1e-12 * scale)
            throw RankDeficientError(static_cast<int>(col));
        std::swap(ata[pivot], ata[col]);
        std::swap(atb[pivot], atb[col]);
        for (std::size_t r = 0; r < cols; ++r) {
            if (r == col) continue;
            const double f = ata[r][col] / ata[col][col];
            if (f == 0.0) continue;
            for (std::size_t c = 0; c < cols; ++c) ata[r][c] -= f * ata[col][c];
            atb[r] -= f * atb[col];
        }
    }

    LeastSquaresResult out;
    out.coefficients.assign(cols, 0.0);
    for (std::size_t i = 0; i < cols; ++i) out.coefficients[i] = atb[i] / ata[i][i];

    out.residual = 0.0;
    for (std::size_t r = 0; r < rows; ++r) {
        double pred = 0.0;
        for (std::size_t i = 0; i < cols; ++i) pred += design[r][i] * out.coefficients[i];
        out.residual = std::max(out.residual, std::abs(pred - target[r]));
    }
    return out;
}

} // namespace tpsgeo
