#pragma once

#include "tpsgeo/curvature.hpp"

namespace tpsgeo {

/// Nijenhuis torsion of phi and the normality defect N - 2 d(eta) (x) xi,
/// both on the coordinate basis ((1,2) tensors, slots [X][Y][out]).
struct NormalityData {
    TensorAtPoint nijenhuis;
    TensorAtPoint normality_defect;
};

NormalityData nijenhuis_normality(const PointStructure& ps);

/// d(eta) as a (0,2) tensor from the coordinate curl (1/2)(d_a eta_b -
/// d_b eta_a); route_disagreement is the max difference against the frame
/// bracket formula of the paracontact-form definition.
struct DetaData {
    TensorAtPoint deta;
    double route_disagreement = 0.0;
};

DetaData exterior_deta(const PointStructure& ps);

/// Lie derivatives along xi of g, phi and eta.
struct LieData {
    TensorAtPoint lie_g;   // (0,2)
    TensorAtPoint lie_phi; // (1,1), slots [out][arg]
    TensorAtPoint lie_eta; // (0,1)
};

LieData lie_derivatives(const PointStructure& ps);

/// Max-norm defect of the defining nabla phi equation of a trans-para-
/// Sasakian structure of type (alpha, beta), over coordinate basis pairs.
double tps_residual(const PointStructure& ps, const ChristoffelData& ch, const AlphaBeta& ab);

/// Derived scalar checks: xi(alpha), xi(beta), the 2 alpha beta - xi(alpha)
/// residual, and the standing-assumption vector phi(grad alpha) +
/// (2n-1) grad beta with its max-norm.
struct AlphaBetaCalculus {
    double xi_alpha = 0.0;
    double xi_beta = 0.0;
    double two_alpha_beta_residual = 0.0; // |2 alpha beta - xi(alpha)|
    std::vector<double> standing_vector;  // phi(grad alpha) + (2n-1) grad beta
    double standing_residual = 0.0;
};

AlphaBetaCalculus alpha_beta_calculus(const PointStructure& ps, const AlphaBeta& ab);

} // namespace tpsgeo
