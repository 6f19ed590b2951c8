#include "tpsgeo/point_structure.hpp"

#include "tpsgeo/errors.hpp"

#include <algorithm>
#include <cmath>

namespace tpsgeo {

double CompatibilityReport::max() const {
    return std::max({phi_xi, eta_phi, eta_xi, phi_square, metric});
}

std::vector<double> symmetric_eigenvalues(std::vector<std::vector<double>> m) {
    const std::size_t n = m.size();
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += m[p][q] * m[p][q];
        if (off < 1e-30) break;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                if (m[p][q] == 0.0) continue;
                const double theta = (m[q][q] - m[p][p]) / (2.0 * m[p][q]);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double mkp = m[k][p], mkq = m[k][q];
                    m[k][p] = c * mkp - s * mkq;
                    m[k][q] = s * mkp + c * mkq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double mpk = m[p][k], mqk = m[q][k];
                    m[p][k] = c * mpk - s * mqk;
                    m[q][k] = s * mpk + c * mqk;
                }
            }
    }
    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = m[i][i];
    std::sort(eig.begin(), eig.end());
    return eig;
}

PointStructure assemble(const ModelSpec& spec, std::span<const double> point) {
    const int d = spec.dim();
    if (static_cast<int>(point.size()) != d)
        throw std::logic_error("assemble: point dimension mismatch");

    PointStructure ps;
    ps.point.assign(point.begin(), point.end());
    ps.n = spec.n;
    ps.dim = d;
    ps.xi_index = spec.xi_index;
    ps.epsilon = spec.epsilon;
    ps.phi_frame = spec.phi_frame;

    ps.frame = JetMatrix::zero(d, d, d);
    for (int i = 0; i < d; ++i)
        for (int a = 0; a < d; ++a)
            ps.frame.at(i, a) =
                eval_expr(spec.frame[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)],
                          point);

    JetMatrix frame_inv;
    try {
        frame_inv = jet_matrix_inverse(ps.frame, 1e12);
    } catch (const SingularMatrixError& e) {
        std::string where = "frame matrix at point (";
        for (int c = 0; c < d; ++c) {
            if (c) where += ", ";
            where += std::to_string(point[static_cast<std::size_t>(c)]);
        }
        throw SingularMatrixError(e.condition_estimate, where + ")");
    }
    ps.coframe = frame_inv.transposed(); // coframe.at(i, a) = theta^i_a
    ps.frame_condition = value_condition_estimate(ps.frame);

    // Duality check theta E = id at value level.
    {
        JetMatrix prod = JetMatrix::zero(d, d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                Jet2 acc = Jet2::constant(d, 0.0);
                for (int a = 0; a < d; ++a) acc = acc + ps.coframe.at(i, a) * ps.frame.at(j, a);
                prod.at(i, j) = acc;
            }
        if (prod.value_identity_defect() > 1e-10)
            throw AssemblyError("coframe duality defect exceeds 1e-10");
    }

    // g_ab = sum_i eps_i theta^i_a theta^i_b, symmetric by shared entries.
    ps.g_dn = JetMatrix::zero(d, d, d);
    for (int a = 0; a < d; ++a)
        for (int b = a; b < d; ++b) {
            Jet2 acc = Jet2::constant(d, 0.0);
            for (int i = 0; i < d; ++i)
                acc = acc + static_cast<double>(ps.epsilon[static_cast<std::size_t>(i)]) *
                                (ps.coframe.at(i, a) * ps.coframe.at(i, b));
            ps.g_dn.at(a, b) = acc;
            ps.g_dn.at(b, a) = acc;
        }

    ps.g_up = jet_matrix_inverse(ps.g_dn, 1e12);

    // phi^a_b = E_j^a P[j][i] theta^i_b.
    ps.phi = JetMatrix::zero(d, d, d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            Jet2 acc = Jet2::constant(d, 0.0);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) {
                    const int p = ps.phi_frame[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
                    if (p == 0) continue;
                    acc = acc + static_cast<double>(p) * (ps.frame.at(j, a) * ps.coframe.at(i, b));
                }
            ps.phi.at(a, b) = acc;
        }

    ps.xi.resize(static_cast<std::size_t>(d));
    for (int a = 0; a < d; ++a) ps.xi[static_cast<std::size_t>(a)] = ps.frame.at(ps.xi_index, a);

    ps.eta.resize(static_cast<std::size_t>(d));
    for (int a = 0; a < d; ++a) {
        Jet2 acc = Jet2::constant(d, 0.0);
        for (int b = 0; b < d; ++b) acc = acc + ps.g_dn.at(a, b) * ps.xi[static_cast<std::size_t>(b)];
        ps.eta[static_cast<std::size_t>(a)] = acc;
    }

    {
        double eta_xi = 0.0;
        for (int a = 0; a < d; ++a) eta_xi += ps.eta_value(a) * ps.xi_value(a);
        if (std::abs(eta_xi - 1.0) > 1e-10)
            throw AssemblyError("eta(xi) deviates from 1 by more than 1e-10");
    }

    // Value-level signature (n+1, n).
    {
        std::vector<std::vector<double>> g(static_cast<std::size_t>(d),
                                           std::vector<double>(static_cast<std::size_t>(d)));
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
                g[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = ps.g_value(a, b);
        const auto eig = symmetric_eigenvalues(std::move(g));
        int plus = 0, minus = 0;
        for (double e : eig) {
            if (e > 1e-8)
                ++plus;
            else if (e < -1e-8)
                ++minus;
        }
        if (plus != spec.n + 1 || minus != spec.n)
            throw AssemblyError("metric signature is not (" + std::to_string(spec.n + 1) + ", " +
                                std::to_string(spec.n) + ") at the sample point");
    }

    return ps;
}

CompatibilityReport check_compatibility(const PointStructure& ps) {
    const int d = ps.dim;
    CompatibilityReport rep;

    for (int a = 0; a < d; ++a) {
        double acc = 0.0;
        for (int b = 0; b < d; ++b) acc += ps.phi_value(a, b) * ps.xi_value(b);
        rep.phi_xi = std::max(rep.phi_xi, std::abs(acc));
    }

    for (int b = 0; b < d; ++b) {
        double acc = 0.0;
        for (int a = 0; a < d; ++a) acc += ps.eta_value(a) * ps.phi_value(a, b);
        rep.eta_phi = std::max(rep.eta_phi, std::abs(acc));
    }

    {
        double acc = 0.0;
        for (int a = 0; a < d; ++a) acc += ps.eta_value(a) * ps.xi_value(a);
        rep.eta_xi = std::abs(acc - 1.0);
    }

    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            double acc = 0.0;
            for (int c = 0; c < d; ++c) acc += ps.phi_value(a, c) * ps.phi_value(c, b);
            acc -= (a == b) ? 1.0 : 0.0;
            acc += ps.xi_value(a) * ps.eta_value(b);
            rep.phi_square = std::max(rep.phi_square, std::abs(acc));
        }

    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            double acc = ps.g_value(a, b) - ps.eta_value(a) * ps.eta_value(b);
            for (int c = 0; c < d; ++c)
                for (int e = 0; e < d; ++e)
                    acc += ps.phi_value(c, a) * ps.g_value(c, e) * ps.phi_value(e, b);
            rep.metric = std::max(rep.metric, std::abs(acc));
        }

    return rep;
}

} // namespace tpsgeo
