#pragma once

#include "tpsgeo/point_structure.hpp"
#include "tpsgeo/tensor.hpp"

#include <functional>

namespace tpsgeo {

/// Levi-Civita connection coefficients and their first coordinate
/// derivatives at one point. gamma is symmetric in the two lower indices
/// exactly as stored.
struct ChristoffelData {
    int dim = 0;
    std::vector<double> gamma;  // [c][a][b] = Gamma^c_ab
    std::vector<double> dgamma; // [c][a][b][e] = d_e Gamma^c_ab

    double G(int c, int a, int b) const {
        return gamma[(static_cast<std::size_t>(c) * dim + a) * dim + b];
    }
    double dG(int c, int a, int b, int e) const {
        return dgamma[((static_cast<std::size_t>(c) * dim + a) * dim + b) * dim + e];
    }
    double& G(int c, int a, int b) {
        return gamma[(static_cast<std::size_t>(c) * dim + a) * dim + b];
    }
    double& dG(int c, int a, int b, int e) {
        return dgamma[((static_cast<std::size_t>(c) * dim + a) * dim + b) * dim + e];
    }
};

/// Gamma^c_ab = (1/2) g^ce (d_a g_eb + d_b g_ae - d_e g_ab) from metric jets;
/// dgamma comes out of the same computation carried in jet arithmetic.
ChristoffelData christoffel(const PointStructure& ps);

/// Connection coefficients as jets (value and gradient valid; Hessian
/// truncated). Shared by christoffel() and the alpha/beta extraction.
std::vector<Jet2> christoffel_jets(const PointStructure& ps);

/// Frame Koszul route, the independent oracle for christoffel(): returns
/// omega[i][j][k] with nabla_{E_i} E_j = omega[i][j][k] E_k, computed from
/// the frame brackets and the constant frame metric.
std::vector<double> frame_connection_koszul(const ModelSpec& spec,
                                            std::span<const double> point);

/// Frame bracket components c[i][j][k]: [E_i, E_j] = c[i][j][k] E_k.
std::vector<double> frame_brackets(const PointStructure& ps);

/// Tensor field given as jet-valued components at a point, covariant slots
/// indexed after contravariant ones, row-major over shape d^(r+s).
struct JetTensorField {
    int r = 0, s = 0, dim = 0;
    std::vector<Jet2> components;
};

using TensorFieldEvaluator = std::function<JetTensorField(std::span<const double>)>;

/// nabla T: one extra covariant slot appended last (the derivative index).
/// Component rule: d_e T plus Gamma corrections, one per index.
TensorAtPoint covariant_derivative(const PointStructure& ps, const ChristoffelData& ch,
                                   const JetTensorField& field);

TensorAtPoint covariant_derivative(const ModelSpec& spec, std::span<const double> point,
                                   const TensorFieldEvaluator& field);

/// The trans-para-Sasakian functions and their first derivatives at a point,
/// recovered from nabla xi by pseudo-orthonormal frame traces. The residual
/// of the defining equation for nabla xi is reported as fit quality: a large
/// value means the model is not trans-para-Sasakian at this point.
struct AlphaBeta {
    double alpha = 0.0;
    double beta = 0.0;
    std::vector<double> d_alpha;    // lower index: (d alpha)_a
    std::vector<double> d_beta;     // lower index
    std::vector<double> grad_alpha; // raised with g^ab
    std::vector<double> grad_beta;
    double xi_alpha = 0.0; // xi(alpha)
    double xi_beta = 0.0;  // xi(beta)
    double nabla_xi_residual = 0.0;
};

AlphaBeta extract_alpha_beta(const PointStructure& ps);

} // namespace tpsgeo
