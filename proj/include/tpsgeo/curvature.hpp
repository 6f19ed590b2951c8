#pragma once

#include "tpsgeo/connection.hpp"

namespace tpsgeo {

/// Riemann curvature and its traces at one point.
///
/// Conventions: R(X, Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z -
/// nabla_{[X,Y]} Z; riem_ud is laid out [a][b][c][w] meaning
/// R(d_a, d_b) d_c = riem_ud[a][b][c][w] d_w, riem_dn[a][b][c][w] =
/// g(R(d_a, d_b) d_c, d_w). The Ricci trace is
/// Ric(X, Y) = sum_i eps_i g(R(E_i, X)Y, E_i), which in coordinates is the
/// contraction Ric_bc = R^a_{c a b} of riem_ud over its first and last slot.
struct CurvatureData {
    int dim = 0;
    std::vector<double> riem_ud;
    std::vector<double> riem_dn;
    std::vector<double> ric;
    std::vector<double> q_ud; // (Q X)^a = q^a_b X^b
    double scal = 0.0;

    double Rud(int a, int b, int c, int w) const {
        return riem_ud[((static_cast<std::size_t>(a) * dim + b) * dim + c) * dim + w];
    }
    double Rdn(int a, int b, int c, int w) const {
        return riem_dn[((static_cast<std::size_t>(a) * dim + b) * dim + c) * dim + w];
    }
    double Ric(int a, int b) const { return ric[static_cast<std::size_t>(a) * dim + b]; }
    double Q(int a, int b) const { return q_ud[static_cast<std::size_t>(a) * dim + b]; }

    double& Rud(int a, int b, int c, int w) {
        return riem_ud[((static_cast<std::size_t>(a) * dim + b) * dim + c) * dim + w];
    }
    double& Rdn(int a, int b, int c, int w) {
        return riem_dn[((static_cast<std::size_t>(a) * dim + b) * dim + c) * dim + w];
    }
    double& Ric(int a, int b) { return ric[static_cast<std::size_t>(a) * dim + b]; }
    double& Q(int a, int b) { return q_ud[static_cast<std::size_t>(a) * dim + b]; }
};

/// Riemann components from dGamma + Gamma Gamma; ric/scal/q left zero.
CurvatureData riemann(const PointStructure& ps, const ChristoffelData& ch);

/// Completes Ricci, scalar curvature and the Ricci operator in place.
void ricci_scalar_q(const PointStructure& ps, CurvatureData& cd);

/// riemann + ricci_scalar_q.
CurvatureData compute_curvature(const PointStructure& ps, const ChristoffelData& ch);

/// xi-sectional curvature of the plane spanned by xi and X. Requires X
/// orthogonal to xi and normalized to |g(X, X)| = 1; rejects isotropic,
/// non-orthogonal and unnormalized input rather than rescaling. The value
/// returned is R(X, xi, xi, X) with the X-slot pairing normalized by
/// eps_X = sign g(X, X), which for a trans-para-Sasakian model equals
/// -eps_X (alpha^2 + beta^2 - xi(beta)).
double xi_sectional(const PointStructure& ps, const CurvatureData& cd,
                    std::span<const double> x);

/// Independent finite-difference route: Christoffels from central
/// differences of value-level metric samples (step h), curvature from
/// central differences of those Christoffels. Accuracy O(h^2).
struct FdCurvature {
    ChristoffelData ch;
    std::vector<double> riem_ud;

    double Rud(int a, int b, int c, int w) const {
        return riem_ud[((static_cast<std::size_t>(a) * ch.dim + b) * ch.dim + c) * ch.dim + w];
    }
};

FdCurvature fd_oracle(const ModelSpec& spec, std::span<const double> point, double h = 1e-4);

/// Value-level coordinate metric at a point (no derivatives), used by the
/// finite-difference oracle.
std::vector<std::vector<double>> value_metric(const ModelSpec& spec,
                                              std::span<const double> point);

} // namespace tpsgeo
