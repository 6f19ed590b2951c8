#include "tpsgeo/curvfamily.hpp"

#include "tpsgeo/errors.hpp"

namespace tpsgeo {

namespace {

double kron(int a, int b) { return a == b ? 1.0 : 0.0; }

} // namespace

FamilyTensor projective(const PointStructure& ps, const CurvatureData& cd) {
    const int d = ps.dim;
    const double inv2n = 1.0 / static_cast<double>(2 * ps.n);
    FamilyTensor out{FamilyKind::Projective, TensorAtPoint(1, 3, d, ps.point)};
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
            for (int z = 0; z < d; ++z)
                for (int w = 0; w < d; ++w)
                    out.components(x, y, z, w) =
                        cd.Rud(x, y, z, w) -
                        inv2n * (cd.Ric(y, z) * kron(w, x) - cd.Ric(x, z) * kron(w, y));
    return out;
}

FamilyTensor conformal(const PointStructure& ps, const CurvatureData& cd) {
    const int d = ps.dim;
    const double c1 = 1.0 / static_cast<double>(2 * ps.n - 1);
    const double c2 = cd.scal / static_cast<double>(2 * ps.n * (2 * ps.n - 1));
    FamilyTensor out{FamilyKind::Conformal, TensorAtPoint(1, 3, d, ps.point)};
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
            for (int z = 0; z < d; ++z)
                for (int w = 0; w < d; ++w)
                    out.components(x, y, z, w) =
                        cd.Rud(x, y, z, w) -
                        c1 * (ps.g_value(y, z) * cd.Q(w, x) - ps.g_value(x, z) * cd.Q(w, y) +
                              cd.Ric(y, z) * kron(w, x) - cd.Ric(x, z) * kron(w, y)) +
                        c2 * (ps.g_value(y, z) * kron(w, x) - ps.g_value(x, z) * kron(w, y));
    return out;
}

FamilyTensor concircular(const PointStructure& ps, const CurvatureData& cd) {
    const int d = ps.dim;
    const double c = cd.scal / static_cast<double>(2 * ps.n * (2 * ps.n + 1));
    FamilyTensor out{FamilyKind::Concircular, TensorAtPoint(1, 3, d, ps.point)};
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
            for (int z = 0; z < d; ++z)
                for (int w = 0; w < d; ++w)
                    out.components(x, y, z, w) =
                        cd.Rud(x, y, z, w) -
                        c * (ps.g_value(y, z) * kron(w, x) - ps.g_value(x, z) * kron(w, y));
    return out;
}

FamilyTensor projective_ricci(const PointStructure& ps, const CurvatureData& cd) {
    const int d = ps.dim;
    const double c1 = static_cast<double>(2 * ps.n + 1) / static_cast<double>(2 * ps.n);
    const double c2 = cd.scal / static_cast<double>(2 * ps.n);
    FamilyTensor out{FamilyKind::ProjectiveRicci, TensorAtPoint(0, 2, d, ps.point)};
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
            out.components(x, y) = c1 * cd.Ric(x, y) - c2 * ps.g_value(x, y);
    return out;
}

FamilyTensor pseudo_projective(const PointStructure& ps, const CurvatureData& cd, double a,
                               double b) {
    if (a == 0.0 || b == 0.0)
        throw ModelValidationError("pp_params", "a and b must be nonzero");
    const int d = ps.dim;
    const double c =
        (a + 2.0 * ps.n * b) * cd.scal / static_cast<double>(2 * ps.n * (2 * ps.n + 1));
    FamilyTensor out{FamilyKind::PseudoProjective, TensorAtPoint(1, 3, d, ps.point)};
    out.a = a;
    out.b = b;
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
            for (int z = 0; z < d; ++z)
                for (int w = 0; w < d; ++w)
                    out.components(x, y, z, w) =
                        a * cd.Rud(x, y, z, w) +
                        b * (cd.Ric(y, z) * kron(w, x) - cd.Ric(x, z) * kron(w, y)) -
                        c * (ps.g_value(y, z) * kron(w, x) - ps.g_value(x, z) * kron(w, y));
    return out;
}

FamilyTensor pc_bochner(const PointStructure& ps, const CurvatureData& cd) {
    const int d = ps.dim;
    const double n2 = static_cast<double>(2 * ps.n);
    const double k = -(cd.scal - n2) / (n2 + 2.0);
    const double inv = 1.0 / (n2 + 4.0);

    // Ric(phi X, Z) and g(X, phi Y) as matrices over basis slots.
    std::vector<double> ric_phi(static_cast<std::size_t>(d) * d, 0.0);
    std::vector<double> g_phi(static_cast<std::size_t>(d) * d, 0.0);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            double rp = 0.0, gp = 0.0;
            for (int c = 0; c < d; ++c) {
                rp += ps.phi_value(c, a) * cd.Ric(c, b);
                gp += ps.g_value(a, c) * ps.phi_value(c, b);
            }
            ric_phi[static_cast<std::size_t>(a) * d + b] = rp;
            g_phi[static_cast<std::size_t>(a) * d + b] = gp;
        }
    const auto RP = [&](int a, int b) { return ric_phi[static_cast<std::size_t>(a) * d + b]; };
    const auto GP = [&](int a, int b) { return g_phi[static_cast<std::size_t>(a) * d + b]; };

    FamilyTensor out{FamilyKind::PcBochner, TensorAtPoint(0, 4, d, ps.point)};
    out.k = k;
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
            for (int z = 0; z < d; ++z)
                for (int w = 0; w < d; ++w) {
                    const double eta_x = ps.eta_value(x), eta_y = ps.eta_value(y);
                    const double eta_z = ps.eta_value(z), eta_w = ps.eta_value(w);
                    double acc = cd.Rdn(x, y, z, w);
                    acc += inv * (cd.Ric(x, z) * ps.g_value(y, w) -
                                  cd.Ric(y, z) * ps.g_value(x, w) +
                                  cd.Ric(y, w) * ps.g_value(x, z) -
                                  cd.Ric(x, w) * ps.g_value(y, z) +
                                  RP(x, z) * GP(y, w) - RP(y, z) * GP(x, w) +
                                  RP(y, w) * GP(x, z) - RP(x, w) * GP(y, z) +
                                  2.0 * RP(x, y) * GP(z, w) + 2.0 * RP(z, w) * GP(x, y) -
                                  cd.Ric(x, z) * eta_y * eta_w + cd.Ric(y, z) * eta_x * eta_w -
                                  cd.Ric(y, w) * eta_x * eta_z + cd.Ric(x, w) * eta_y * eta_z);
                    acc += (k - 4.0) * inv *
                           (ps.g_value(x, z) * ps.g_value(y, w) -
                            ps.g_value(y, z) * ps.g_value(x, w));
                    acc -= (k + n2) * inv *
                           (GP(y, w) * GP(x, z) - GP(x, w) * GP(y, z) +
                            2.0 * GP(x, y) * GP(z, w));
                    acc -= k * inv *
                           (ps.g_value(x, z) * eta_y * eta_w - ps.g_value(y, z) * eta_x * eta_w +
                            ps.g_value(y, w) * eta_x * eta_z - ps.g_value(x, w) * eta_y * eta_z);
                    out.components(x, y, z, w) = acc;
                }
    return out;
}

TensorAtPoint derivation_action(const CurvatureData& cd, const TensorAtPoint& t) {
    const int d = cd.dim;
    if (t.dim() != d) throw std::logic_error("derivation_action: dimension mismatch");

    if (t.contravariant_rank() == 1 && t.covariant_rank() == 3) {
        TensorAtPoint out(1, 5, d, t.point());
        for (int x = 0; x < d; ++x)
            for (int y = 0; y < d; ++y)
                for (int u = 0; u < d; ++u)
                    for (int v = 0; v < d; ++v)
                        for (int z = 0; z < d; ++z)
                            for (int w = 0; w < d; ++w) {
                                double acc = 0.0;
                                for (int e = 0; e < d; ++e)
                                    acc += cd.Rud(x, y, e, w) * t(u, v, z, e) -
                                           cd.Rud(x, y, u, e) * t(e, v, z, w) -
                                           cd.Rud(x, y, v, e) * t(u, e, z, w) -
                                           cd.Rud(x, y, z, e) * t(u, v, e, w);
                                out(x, y, u, v, z, w) = acc;
                            }
        return out;
    }

    if (t.contravariant_rank() == 0 && t.covariant_rank() == 2) {
        TensorAtPoint out(0, 4, d, t.point());
        for (int x = 0; x < d; ++x)
            for (int y = 0; y < d; ++y)
                for (int u = 0; u < d; ++u)
                    for (int v = 0; v < d; ++v) {
                        double acc = 0.0;
                        for (int e = 0; e < d; ++e)
                            acc -= cd.Rud(x, y, u, e) * t(e, v) + cd.Rud(x, y, v, e) * t(u, e);
                        out(x, y, u, v) = acc;
                    }
        return out;
    }

    if (t.contravariant_rank() == 0 && t.covariant_rank() == 4) {
        TensorAtPoint out(0, 6, d, t.point());
        for (int x = 0; x < d; ++x)
            for (int y = 0; y < d; ++y)
                for (int a = 0; a < d; ++a)
                    for (int b = 0; b < d; ++b)
                        for (int c = 0; c < d; ++c)
                            for (int f = 0; f < d; ++f) {
                                double acc = 0.0;
                                for (int e = 0; e < d; ++e)
                                    acc -= cd.Rud(x, y, a, e) * t(e, b, c, f) +
                                           cd.Rud(x, y, b, e) * t(a, e, c, f) +
                                           cd.Rud(x, y, c, e) * t(a, b, e, f) +
                                           cd.Rud(x, y, f, e) * t(a, b, c, e);
                                out(x, y, a, b, c, f) = acc;
                            }
        return out;
    }

    throw ValenceMismatchError("derivation_action supports valences (1,3), (0,2) and (0,4)");
}

} // namespace tpsgeo
