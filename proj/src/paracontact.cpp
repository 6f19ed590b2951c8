#include "tpsgeo/paracontact.hpp"

#include <cmath>

namespace tpsgeo {

NormalityData nijenhuis_normality(const PointStructure& ps) {
    const int d = ps.dim;

    // On coordinate fields all bare brackets vanish, so N needs only the
    // phi component jets:
    //   N^w_ab = phi^c_a d_c phi^w_b - phi^c_b d_c phi^w_a
    //          + phi^w_e (d_b phi^e_a - d_a phi^e_b).
    NormalityData out{TensorAtPoint(1, 2, d, ps.point), TensorAtPoint(1, 2, d, ps.point)};
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int w = 0; w < d; ++w) {
                double acc = 0.0;
                for (int c = 0; c < d; ++c)
                    acc += ps.phi_value(c, a) * ps.phi.at(w, b).grad(c) -
                           ps.phi_value(c, b) * ps.phi.at(w, a).grad(c);
                for (int e = 0; e < d; ++e)
                    acc += ps.phi_value(w, e) *
                           (ps.phi.at(e, a).grad(b) - ps.phi.at(e, b).grad(a));
                out.nijenhuis(a, b, w) = acc;
            }

    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            const double deta_ab =
                0.5 * (ps.eta[static_cast<std::size_t>(b)].grad(a) -
                       ps.eta[static_cast<std::size_t>(a)].grad(b));
            for (int w = 0; w < d; ++w)
                out.normality_defect(a, b, w) =
                    out.nijenhuis(a, b, w) - 2.0 * deta_ab * ps.xi_value(w);
        }
    return out;
}

DetaData exterior_deta(const PointStructure& ps) {
    const int d = ps.dim;
    DetaData out{TensorAtPoint(0, 2, d, ps.point), 0.0};

    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            out.deta(a, b) = 0.5 * (ps.eta[static_cast<std::size_t>(b)].grad(a) -
                                    ps.eta[static_cast<std::size_t>(a)].grad(b));

    // Independent route on frame slots: d(eta)(E_i, E_j) =
    // (1/2)(E_i(eta(E_j)) - E_j(eta(E_i)) - eta([E_i, E_j])).
    const auto brackets = frame_brackets(ps);
    const auto C = [&](int i, int j, int k) {
        return brackets[(static_cast<std::size_t>(i) * d + j) * d + k];
    };

    std::vector<Jet2> eta_of_frame(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
        Jet2 acc = Jet2::constant(d, 0.0);
        for (int a = 0; a < d; ++a)
            acc = acc + ps.eta[static_cast<std::size_t>(a)] * ps.frame.at(j, a);
        eta_of_frame[static_cast<std::size_t>(j)] = acc;
    }
    std::vector<double> eta_frame_values(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k)
        eta_frame_values[static_cast<std::size_t>(k)] =
            eta_of_frame[static_cast<std::size_t>(k)].value();

    double worst = 0.0;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            double ei_eta_j = 0.0, ej_eta_i = 0.0, eta_bracket = 0.0;
            for (int a = 0; a < d; ++a) {
                ei_eta_j += ps.frame.at(i, a).value() * eta_of_frame[static_cast<std::size_t>(j)].grad(a);
                ej_eta_i += ps.frame.at(j, a).value() * eta_of_frame[static_cast<std::size_t>(i)].grad(a);
            }
            for (int k = 0; k < d; ++k)
                eta_bracket += eta_frame_values[static_cast<std::size_t>(k)] * C(i, j, k);
            const double bracket_route = 0.5 * (ei_eta_j - ej_eta_i - eta_bracket);

            double curl_route = 0.0;
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b)
                    curl_route += ps.frame.at(i, a).value() * ps.frame.at(j, b).value() *
                                  out.deta(a, b);
            worst = std::max(worst, std::abs(bracket_route - curl_route));
        }
    out.route_disagreement = worst;
    return out;
}

LieData lie_derivatives(const PointStructure& ps) {
    const int d = ps.dim;
    LieData out{TensorAtPoint(0, 2, d, ps.point), TensorAtPoint(1, 1, d, ps.point),
                TensorAtPoint(0, 1, d, ps.point)};

    // (L_xi g)_ab = xi^c d_c g_ab + g_cb d_a xi^c + g_ac d_b xi^c
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            double acc = 0.0;
            for (int c = 0; c < d; ++c) {
                acc += ps.xi_value(c) * ps.g_dn.at(a, b).grad(c);
                acc += ps.g_value(c, b) * ps.xi[static_cast<std::size_t>(c)].grad(a);
                acc += ps.g_value(a, c) * ps.xi[static_cast<std::size_t>(c)].grad(b);
            }
            out.lie_g(a, b) = acc;
        }

    // (L_xi phi)^a_b = xi^c d_c phi^a_b - phi^c_b d_c xi^a + phi^a_c d_b xi^c
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            double acc = 0.0;
            for (int c = 0; c < d; ++c) {
                acc += ps.xi_value(c) * ps.phi.at(a, b).grad(c);
                acc -= ps.phi_value(c, b) * ps.xi[static_cast<std::size_t>(a)].grad(c);
                acc += ps.phi_value(a, c) * ps.xi[static_cast<std::size_t>(c)].grad(b);
            }
            out.lie_phi(a, b) = acc;
        }

    // (L_xi eta)_a = xi^c d_c eta_a + eta_c d_a xi^c
    for (int a = 0; a < d; ++a) {
        double acc = 0.0;
        for (int c = 0; c < d; ++c) {
            acc += ps.xi_value(c) * ps.eta[static_cast<std::size_t>(a)].grad(c);
            acc += ps.eta_value(c) * ps.xi[static_cast<std::size_t>(c)].grad(a);
        }
        out.lie_eta(a) = acc;
    }
    return out;
}

double tps_residual(const PointStructure& ps, const ChristoffelData& ch, const AlphaBeta& ab) {
    const int d = ps.dim;
    double worst = 0.0;
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            // g(X, phi Y) with X = d_a, Y = d_b
            double g_phi = 0.0;
            for (int c = 0; c < d; ++c) g_phi += ps.g_value(a, c) * ps.phi_value(c, b);
            for (int w = 0; w < d; ++w) {
                double nabla_phi = ps.phi.at(w, b).grad(a);
                for (int e = 0; e < d; ++e)
                    nabla_phi += ch.G(w, a, e) * ps.phi_value(e, b) -
                                 ch.G(e, a, b) * ps.phi_value(w, e);
                const double rhs =
                    ab.alpha * (-ps.g_value(a, b) * ps.xi_value(w) +
                                ps.eta_value(b) * (w == a ? 1.0 : 0.0)) +
                    ab.beta * (g_phi * ps.xi_value(w) + ps.eta_value(b) * ps.phi_value(w, a));
                worst = std::max(worst, std::abs(nabla_phi - rhs));
            }
        }
    return worst;
}

AlphaBetaCalculus alpha_beta_calculus(const PointStructure& ps, const AlphaBeta& ab) {
    const int d = ps.dim;
    AlphaBetaCalculus out;
    out.xi_alpha = ab.xi_alpha;
    out.xi_beta = ab.xi_beta;
    out.two_alpha_beta_residual = std::abs(2.0 * ab.alpha * ab.beta - ab.xi_alpha);
    out.standing_vector.assign(static_cast<std::size_t>(d), 0.0);
    const double factor = static_cast<double>(2 * ps.n - 1);
    for (int w = 0; w < d; ++w) {
        double acc = factor * ab.grad_beta[static_cast<std::size_t>(w)];
        for (int b = 0; b < d; ++b)
            acc += ps.phi_value(w, b) * ab.grad_alpha[static_cast<std::size_t>(b)];
        out.standing_vector[static_cast<std::size_t>(w)] = acc;
        out.standing_residual = std::max(out.standing_residual, std::abs(acc));
    }
    return out;
}

} // namespace tpsgeo
