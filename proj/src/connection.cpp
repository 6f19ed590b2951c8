#include "tpsgeo/connection.hpp"

#include <cmath>

namespace tpsgeo {

std::vector<Jet2> christoffel_jets(const PointStructure& ps) {
    const int d = ps.dim;
    std::vector<Jet2> gj(static_cast<std::size_t>(d) * d * d);
    const auto idx = [d](int c, int a, int b) {
        return (static_cast<std::size_t>(c) * d + a) * d + b;
    };
    for (int c = 0; c < d; ++c)
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) {
                Jet2 acc = Jet2::constant(d, 0.0);
                for (int e = 0; e < d; ++e) {
                    const Jet2 term = ps.g_dn.at(e, b).partial(a) + ps.g_dn.at(a, e).partial(b) -
                                      ps.g_dn.at(a, b).partial(e);
                    acc = acc + ps.g_up.at(c, e) * term;
                }
                gj[idx(c, a, b)] = acc * 0.5;
            }
    return gj;
}

ChristoffelData christoffel(const PointStructure& ps) {
    const int d = ps.dim;
    const auto gj = christoffel_jets(ps);
    ChristoffelData ch;
    ch.dim = d;
    ch.gamma.assign(static_cast<std::size_t>(d) * d * d, 0.0);
    ch.dgamma.assign(static_cast<std::size_t>(d) * d * d * d, 0.0);
    for (int c = 0; c < d; ++c)
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) {
                const Jet2& j = gj[(static_cast<std::size_t>(c) * d + a) * d + b];
                ch.G(c, a, b) = j.value();
                for (int e = 0; e < d; ++e) ch.dG(c, a, b, e) = j.grad(e);
            }
    return ch;
}

std::vector<double> frame_brackets(const PointStructure& ps) {
    const int d = ps.dim;
    std::vector<double> c(static_cast<std::size_t>(d) * d * d, 0.0);
    const auto idx = [d](int i, int j, int k) {
        return (static_cast<std::size_t>(i) * d + j) * d + k;
    };
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            // [E_i, E_j]^a = E_i^b d_b E_j^a - E_j^b d_b E_i^a
            std::vector<double> br(static_cast<std::size_t>(d), 0.0);
            for (int a = 0; a < d; ++a) {
                double acc = 0.0;
                for (int b = 0; b < d; ++b)
                    acc += ps.frame.at(i, b).value() * ps.frame.at(j, a).grad(b) -
                           ps.frame.at(j, b).value() * ps.frame.at(i, a).grad(b);
                br[static_cast<std::size_t>(a)] = acc;
            }
            for (int k = 0; k < d; ++k) {
                double acc = 0.0;
                for (int a = 0; a < d; ++a)
                    acc += ps.coframe.at(k, a).value() * br[static_cast<std::size_t>(a)];
                c[idx(i, j, k)] = acc;
            }
        }
    return c;
}

std::vector<double> frame_connection_koszul(const ModelSpec& spec,
                                            std::span<const double> point) {
    const PointStructure ps = assemble(spec, point);
    const int d = ps.dim;
    const auto c = frame_brackets(ps);
    const auto C = [&](int i, int j, int k) {
        return c[(static_cast<std::size_t>(i) * d + j) * d + k];
    };
    const auto eps = [&](int i) {
        return static_cast<double>(ps.epsilon[static_cast<std::size_t>(i)]);
    };

    // Constant frame metric: the Koszul formula reduces to bracket terms,
    // 2 eps_k w^k_ij = eps_k c^k_ij - eps_j c^j_ik - eps_i c^i_jk.
    std::vector<double> w(static_cast<std::size_t>(d) * d * d, 0.0);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                w[(static_cast<std::size_t>(i) * d + j) * d + k] =
                    0.5 * (C(i, j, k) - eps(j) * eps(k) * C(i, k, j) -
                           eps(i) * eps(k) * C(j, k, i));
    return w;
}

TensorAtPoint covariant_derivative(const PointStructure& ps, const ChristoffelData& ch,
                                   const JetTensorField& field) {
    const int d = ps.dim;
    if (field.dim != d) throw std::logic_error("covariant_derivative: dimension mismatch");
    const int rank = field.r + field.s;
    std::size_t size = 1;
    for (int k = 0; k < rank; ++k) size *= static_cast<std::size_t>(d);
    if (field.components.size() != size)
        throw ValenceMismatchError("tensor field component count does not match valence");

    TensorAtPoint out(field.r, field.s + 1, d, ps.point);

    std::vector<int> idx(static_cast<std::size_t>(rank), 0);
    const auto flat = [&](const std::vector<int>& ix) {
        std::size_t f = 0;
        for (int v : ix) f = f * static_cast<std::size_t>(d) + static_cast<std::size_t>(v);
        return f;
    };
    const auto out_flat = [&](const std::vector<int>& ix, int e) {
        std::size_t f = 0;
        for (int v : ix) f = f * static_cast<std::size_t>(d) + static_cast<std::size_t>(v);
        return f * static_cast<std::size_t>(d) + static_cast<std::size_t>(e);
    };

    std::vector<double> result(size * static_cast<std::size_t>(d), 0.0);
    for (std::size_t pos = 0; pos < size; ++pos) {
        // decode pos into idx
        std::size_t rem = pos;
        for (int k = rank - 1; k >= 0; --k) {
            idx[static_cast<std::size_t>(k)] = static_cast<int>(rem % static_cast<std::size_t>(d));
            rem /= static_cast<std::size_t>(d);
        }
        const Jet2& comp = field.components[pos];
        for (int e = 0; e < d; ++e) {
            double acc = comp.grad(e);
            std::vector<int> jx = idx;
            for (int k = 0; k < field.r; ++k) {
                const int up = idx[static_cast<std::size_t>(k)];
                for (int f = 0; f < d; ++f) {
                    jx[static_cast<std::size_t>(k)] = f;
                    acc += ch.G(up, e, f) * field.components[flat(jx)].value();
                }
                jx[static_cast<std::size_t>(k)] = up;
            }
            for (int k = field.r; k < rank; ++k) {
                const int dn = idx[static_cast<std::size_t>(k)];
                for (int f = 0; f < d; ++f) {
                    jx[static_cast<std::size_t>(k)] = f;
                    acc -= ch.G(f, e, dn) * field.components[flat(jx)].value();
                }
                jx[static_cast<std::size_t>(k)] = dn;
            }
            result[out_flat(idx, e)] = acc;
        }
    }

    out.mutable_data() = std::move(result); // same row-major flattening
    return out;
}

TensorAtPoint covariant_derivative(const ModelSpec& spec, std::span<const double> point,
                                   const TensorFieldEvaluator& field) {
    const PointStructure ps = assemble(spec, point);
    const ChristoffelData ch = christoffel(ps);
    return covariant_derivative(ps, ch, field(point));
}

AlphaBeta extract_alpha_beta(const PointStructure& ps) {
    const int d = ps.dim;
    const int two_n = 2 * ps.n;
    const auto gj = christoffel_jets(ps);
    const auto G = [&](int c, int a, int b) -> const Jet2& {
        return gj[(static_cast<std::size_t>(c) * d + a) * d + b];
    };
    const auto eps = [&](int i) {
        return static_cast<double>(ps.epsilon[static_cast<std::size_t>(i)]);
    };

    // nabla_a xi^c as jets (value and gradient trusted).
    std::vector<Jet2> nabla_xi(static_cast<std::size_t>(d) * d);
    for (int c = 0; c < d; ++c)
        for (int a = 0; a < d; ++a) {
            Jet2 acc = ps.xi[static_cast<std::size_t>(c)].partial(a);
            for (int b = 0; b < d; ++b) acc = acc + G(c, a, b) * ps.xi[static_cast<std::size_t>(b)];
            nabla_xi[static_cast<std::size_t>(c) * d + a] = acc;
        }

    // nabla_{E_i} xi^c, phi E_i components, and the two traces:
    //   beta  = -(1/2n) sum_i eps_i g(nabla_{E_i} xi, E_i)
    //   alpha =  (1/2n) sum_i eps_i g(nabla_{E_i} xi, phi E_i)
    Jet2 alpha_jet = Jet2::constant(d, 0.0);
    Jet2 beta_jet = Jet2::constant(d, 0.0);
    for (int i = 0; i < d; ++i) {
        std::vector<Jet2> nxi(static_cast<std::size_t>(d));
        for (int c = 0; c < d; ++c) {
            Jet2 acc = Jet2::constant(d, 0.0);
            for (int a = 0; a < d; ++a)
                acc = acc + ps.frame.at(i, a) * nabla_xi[static_cast<std::size_t>(c) * d + a];
            nxi[static_cast<std::size_t>(c)] = acc;
        }
        std::vector<Jet2> phi_ei(static_cast<std::size_t>(d), Jet2::constant(d, 0.0));
        for (int j = 0; j < d; ++j) {
            const int p = ps.phi_frame[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
            if (p == 0) continue;
            for (int a = 0; a < d; ++a)
                phi_ei[static_cast<std::size_t>(a)] =
                    phi_ei[static_cast<std::size_t>(a)] + static_cast<double>(p) * ps.frame.at(j, a);
        }
        Jet2 g_nxi_ei = Jet2::constant(d, 0.0);
        Jet2 g_nxi_phi = Jet2::constant(d, 0.0);
        for (int c = 0; c < d; ++c)
            for (int e = 0; e < d; ++e) {
                g_nxi_ei = g_nxi_ei +
                           ps.g_dn.at(c, e) * nxi[static_cast<std::size_t>(c)] * ps.frame.at(i, e);
                g_nxi_phi = g_nxi_phi + ps.g_dn.at(c, e) * nxi[static_cast<std::size_t>(c)] *
                                            phi_ei[static_cast<std::size_t>(e)];
            }
        beta_jet = beta_jet + eps(i) * g_nxi_ei;
        alpha_jet = alpha_jet + eps(i) * g_nxi_phi;
    }
    alpha_jet = alpha_jet * (1.0 / static_cast<double>(two_n));
    beta_jet = beta_jet * (-1.0 / static_cast<double>(two_n));

    AlphaBeta ab;
    ab.alpha = alpha_jet.value() + 0.0; // + 0.0 canonicalizes negative zero
    ab.beta = beta_jet.value() + 0.0;
    ab.d_alpha.assign(static_cast<std::size_t>(d), 0.0);
    ab.d_beta.assign(static_cast<std::size_t>(d), 0.0);
    for (int a = 0; a < d; ++a) {
        ab.d_alpha[static_cast<std::size_t>(a)] = alpha_jet.grad(a) + 0.0;
        ab.d_beta[static_cast<std::size_t>(a)] = beta_jet.grad(a) + 0.0;
    }
    ab.grad_alpha.assign(static_cast<std::size_t>(d), 0.0);
    ab.grad_beta.assign(static_cast<std::size_t>(d), 0.0);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            ab.grad_alpha[static_cast<std::size_t>(a)] +=
                ps.gup_value(a, b) * ab.d_alpha[static_cast<std::size_t>(b)];
            ab.grad_beta[static_cast<std::size_t>(a)] +=
                ps.gup_value(a, b) * ab.d_beta[static_cast<std::size_t>(b)];
        }
    for (int a = 0; a < d; ++a) {
        ab.grad_alpha[static_cast<std::size_t>(a)] += 0.0;
        ab.grad_beta[static_cast<std::size_t>(a)] += 0.0;
    }
    ab.xi_alpha = 0.0;
    ab.xi_beta = 0.0;
    for (int a = 0; a < d; ++a) {
        ab.xi_alpha += ps.xi_value(a) * ab.d_alpha[static_cast<std::size_t>(a)];
        ab.xi_beta += ps.xi_value(a) * ab.d_beta[static_cast<std::size_t>(a)];
    }
    ab.xi_alpha += 0.0;
    ab.xi_beta += 0.0;

    // Residual of nabla_X xi = -alpha phi X - beta (X - eta(X) xi) over the
    // coordinate basis.
    double res = 0.0;
    for (int c = 0; c < d; ++c)
        for (int a = 0; a < d; ++a) {
            const double lhs = nabla_xi[static_cast<std::size_t>(c) * d + a].value();
            const double rhs = -ab.alpha * ps.phi_value(c, a) -
                               ab.beta * ((c == a ? 1.0 : 0.0) -
                                          ps.eta_value(a) * ps.xi_value(c));
            res = std::max(res, std::abs(lhs - rhs));
        }
    ab.nabla_xi_residual = res;
    return ab;
}

} // namespace tpsgeo
