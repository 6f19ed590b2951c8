#include "tpsgeo/curvature.hpp"

#include "tpsgeo/errors.hpp"

#include <cmath>

namespace tpsgeo {

CurvatureData riemann(const PointStructure& ps, const ChristoffelData& ch) {
    const int d = ps.dim;
    CurvatureData cd;
    cd.dim = d;
    cd.riem_ud.assign(static_cast<std::size_t>(d) * d * d * d, 0.0);
    cd.riem_dn.assign(static_cast<std::size_t>(d) * d * d * d, 0.0);
    cd.ric.assign(static_cast<std::size_t>(d) * d, 0.0);
    cd.q_ud.assign(static_cast<std::size_t>(d) * d, 0.0);

    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c)
                for (int w = 0; w < d; ++w) {
                    double acc = ch.dG(w, b, c, a) - ch.dG(w, a, c, b);
                    for (int e = 0; e < d; ++e)
                        acc += ch.G(w, a, e) * ch.G(e, b, c) - ch.G(w, b, e) * ch.G(e, a, c);
                    cd.Rud(a, b, c, w) = acc;
                }

    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c)
                for (int w = 0; w < d; ++w) {
                    double acc = 0.0;
                    for (int f = 0; f < d; ++f) acc += ps.g_value(f, w) * cd.Rud(a, b, c, f);
                    cd.Rdn(a, b, c, w) = acc;
                }

    return cd;
}

void ricci_scalar_q(const PointStructure& ps, CurvatureData& cd) {
    const int d = cd.dim;
    for (int b = 0; b < d; ++b)
        for (int c = 0; c < d; ++c) {
            double acc = 0.0;
            for (int a = 0; a < d; ++a) acc += cd.Rud(a, b, c, a);
            cd.Ric(b, c) = acc;
        }
    cd.scal = 0.0;
    for (int b = 0; b < d; ++b)
        for (int c = 0; c < d; ++c) cd.scal += ps.gup_value(b, c) * cd.Ric(b, c);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            double acc = 0.0;
            for (int e = 0; e < d; ++e) acc += ps.gup_value(a, e) * cd.Ric(e, b);
            cd.Q(a, b) = acc;
        }
}

CurvatureData compute_curvature(const PointStructure& ps, const ChristoffelData& ch) {
    CurvatureData cd = riemann(ps, ch);
    ricci_scalar_q(ps, cd);
    return cd;
}

double xi_sectional(const PointStructure& ps, const CurvatureData& cd,
                    std::span<const double> x) {
    const int d = ps.dim;
    if (static_cast<int>(x.size()) != d)
        throw std::logic_error("xi_sectional: vector dimension mismatch");

    double gxx = 0.0, gxxi = 0.0;
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            gxx += ps.g_value(a, b) * x[static_cast<std::size_t>(a)] * x[static_cast<std::size_t>(b)];
            gxxi += ps.g_value(a, b) * x[static_cast<std::size_t>(a)] * ps.xi_value(b);
        }
    if (std::abs(gxx) <= 1e-8)
        throw VectorArgumentError("xi_sectional: X is isotropic (|g(X,X)| <= 1e-8)");
    if (std::abs(gxxi) > 1e-8)
        throw VectorArgumentError("xi_sectional: X is not orthogonal to xi");
    if (std::abs(std::abs(gxx) - 1.0) > 1e-8)
        throw VectorArgumentError("xi_sectional: X is not normalized to |g(X,X)| = 1");

    double k = 0.0;
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c)
                for (int w = 0; w < d; ++w)
                    k += x[static_cast<std::size_t>(a)] * ps.xi_value(b) * ps.xi_value(c) *
                         x[static_cast<std::size_t>(w)] * cd.Rdn(a, b, c, w);
    return k;
}

std::vector<std::vector<double>> value_metric(const ModelSpec& spec,
                                              std::span<const double> point) {
    const int d = spec.dim();
    std::vector<std::vector<double>> frame(static_cast<std::size_t>(d),
                                           std::vector<double>(static_cast<std::size_t>(d)));
    for (int i = 0; i < d; ++i)
        for (int a = 0; a < d; ++a)
            frame[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)] =
                eval_expr(spec.frame[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)],
                          point)
                    .value();

    // theta^i_a = (frame^T)^{-1}, g_ab = sum_i eps_i theta^i_a theta^i_b
    std::vector<std::vector<double>> ft(static_cast<std::size_t>(d),
                                        std::vector<double>(static_cast<std::size_t>(d)));
    for (int i = 0; i < d; ++i)
        for (int a = 0; a < d; ++a)
            ft[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)] =
                frame[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)];
    double cond = 0.0;
    if (!detail::invert_values(ft, cond))
        throw SingularMatrixError(cond, "frame matrix in value_metric");
    // ft is now (frame^T)^{-1}; theta^i_a = ft[i][a]

    std::vector<std::vector<double>> g(static_cast<std::size_t>(d),
                                       std::vector<double>(static_cast<std::size_t>(d), 0.0));
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            double acc = 0.0;
            for (int i = 0; i < d; ++i)
                acc += static_cast<double>(spec.epsilon[static_cast<std::size_t>(i)]) *
                       ft[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)] *
                       ft[static_cast<std::size_t>(i)][static_cast<std::size_t>(b)];
            g[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = acc;
        }
    return g;
}

namespace {

/// Christoffels at a point, all metric derivatives by central differences.
std::vector<double> fd_christoffel_values(const ModelSpec& spec,
                                          std::span<const double> point, double h) {
    const int d = spec.dim();
    const auto g0 = value_metric(spec, point);
    std::vector<std::vector<double>> ginv = g0;
    double cond = 0.0;
    if (!detail::invert_values(ginv, cond))
        throw SingularMatrixError(cond, "metric in fd_oracle");

    // dg[e][a][b] = d_e g_ab
    std::vector<double> dg(static_cast<std::size_t>(d) * d * d, 0.0);
    std::vector<double> shifted(point.begin(), point.end());
    for (int e = 0; e < d; ++e) {
        shifted[static_cast<std::size_t>(e)] = point[static_cast<std::size_t>(e)] + h;
        const auto gp = value_metric(spec, shifted);
        shifted[static_cast<std::size_t>(e)] = point[static_cast<std::size_t>(e)] - h;
        const auto gm = value_metric(spec, shifted);
        shifted[static_cast<std::size_t>(e)] = point[static_cast<std::size_t>(e)];
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
                dg[(static_cast<std::size_t>(e) * d + a) * d + b] =
                    (gp[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] -
                     gm[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) /
                    (2.0 * h);
    }
    const auto DG = [&](int e, int a, int b) {
        return dg[(static_cast<std::size_t>(e) * d + a) * d + b];
    };

    std::vector<double> gamma(static_cast<std::size_t>(d) * d * d, 0.0);
    for (int c = 0; c < d; ++c)
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) {
                double acc = 0.0;
                for (int e = 0; e < d; ++e)
                    acc += ginv[static_cast<std::size_t>(c)][static_cast<std::size_t>(e)] *
                           (DG(a, e, b) + DG(b, a, e) - DG(e, a, b));
                gamma[(static_cast<std::size_t>(c) * d + a) * d + b] = 0.5 * acc;
            }
    return gamma;
}

} // namespace

FdCurvature fd_oracle(const ModelSpec& spec, std::span<const double> point, double h) {
    const int d = spec.dim();
    FdCurvature out;
    out.ch.dim = d;
    out.ch.gamma = fd_christoffel_values(spec, point, h);
    out.ch.dgamma.assign(static_cast<std::size_t>(d) * d * d * d, 0.0);

    std::vector<double> shifted(point.begin(), point.end());
    for (int e = 0; e < d; ++e) {
        shifted[static_cast<std::size_t>(e)] = point[static_cast<std::size_t>(e)] + h;
        const auto gp = fd_christoffel_values(spec, shifted, h);
        shifted[static_cast<std::size_t>(e)] = point[static_cast<std::size_t>(e)] - h;
        const auto gm = fd_christoffel_values(spec, shifted, h);
        shifted[static_cast<std::size_t>(e)] = point[static_cast<std::size_t>(e)];
        for (int c = 0; c < d; ++c)
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b)
                    out.ch.dG(c, a, b, e) = (gp[(static_cast<std::size_t>(c) * d + a) * d + b] -
                                             gm[(static_cast<std::size_t>(c) * d + a) * d + b]) /
                                            (2.0 * h);
    }

    out.riem_ud.assign(static_cast<std::size_t>(d) * d * d * d, 0.0);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c)
                for (int w = 0; w < d; ++w) {
                    double acc = out.ch.dG(w, b, c, a) - out.ch.dG(w, a, c, b);
                    for (int e = 0; e < d; ++e)
                        acc += out.ch.G(w, a, e) * out.ch.G(e, b, c) -
                               out.ch.G(w, b, e) * out.ch.G(e, a, c);
                    out.riem_ud[((static_cast<std::size_t>(a) * d + b) * d + c) * d + w] = acc;
                }
    return out;
}

} // namespace tpsgeo
