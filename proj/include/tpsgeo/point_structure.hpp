#pragma once

#include "tpsgeo/jet_matrix.hpp"
#include "tpsgeo/model_spec.hpp"

#include <vector>

namespace tpsgeo {

/// All structure tensors of the almost paracontact metric manifold at one
/// point, as second-order jets in the coordinates. Immutable after assembly.
struct PointStructure {
    std::vector<double> point;
    int n = 1;
    int dim = 3;
    int xi_index = 0;
    std::vector<int> epsilon;
    std::vector<std::vector<int>> phi_frame;

    JetMatrix frame;   // frame.at(i, a): component of E_i along coordinate a
    JetMatrix coframe; // coframe.at(i, a): theta^i_a, dual to the frame
    JetMatrix g_dn;    // coordinate metric g_ab
    JetMatrix g_up;    // inverse metric g^ab (jet inverse of g_dn)
    JetMatrix phi;     // phi.at(a, b): coordinate components phi^a_b
    std::vector<Jet2> xi;  // xi^a
    std::vector<Jet2> eta; // eta_a = g_ab xi^b

    double frame_condition = 0.0;

    double g_value(int a, int b) const { return g_dn.at(a, b).value(); }
    double gup_value(int a, int b) const { return g_up.at(a, b).value(); }
    double phi_value(int a, int b) const { return phi.at(a, b).value(); }
    double xi_value(int a) const { return xi[static_cast<std::size_t>(a)].value(); }
    double eta_value(int a) const { return eta[static_cast<std::size_t>(a)].value(); }
};

/// Build all structure tensors at the point. Throws SingularMatrixError when
/// the frame degenerates and AssemblyError when a postcondition (duality,
/// eta(xi) = 1, metric signature) fails.
PointStructure assemble(const ModelSpec& spec, std::span<const double> point);

/// Residuals of the compatibility axioms, each reported separately:
/// phi(xi) = 0, eta(phi X) = 0, eta(xi) = 1, phi^2 = id - eta otimes xi, and
/// g(phi X, phi Y) = -g(X, Y) + eta(X) eta(Y) over the coordinate basis.
struct CompatibilityReport {
    double phi_xi = 0.0;
    double eta_phi = 0.0;
    double eta_xi = 0.0;
    double phi_square = 0.0;
    double metric = 0.0;

    double max() const;
};

CompatibilityReport check_compatibility(const PointStructure& ps);

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations (values
/// ascending). Used for the metric signature check.
std::vector<double> symmetric_eigenvalues(std::vector<std::vector<double>> m);

} // namespace tpsgeo
