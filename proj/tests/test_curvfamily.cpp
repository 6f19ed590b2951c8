#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "test_util.hpp"
#include "tpsgeo/curvfamily.hpp"

#include <cmath>

using namespace tpsgeo;
using testutil::close;

namespace {

struct Geo {
    PointStructure ps;
    ChristoffelData ch;
    CurvatureData cd;
};

Geo geo(const ModelSpec& spec, const std::vector<double>& p) {
    Geo g{assemble(spec, p), {}, {}};
    g.ch = christoffel(g.ps);
    g.cd = compute_curvature(g.ps, g.ch);
    return g;
}

/// Constant-curvature curvature data R(X,Y)Z = kappa (g(Y,Z)X - g(X,Z)Y)
/// on top of a real point structure; Einstein with lambda = kappa (d-1).
CurvatureData constant_curvature(const PointStructure& ps, double kappa) {
    const int d = ps.dim;
    CurvatureData cd;
    cd.dim = d;
    cd.riem_ud.assign(81, 0.0);
    cd.riem_dn.assign(81, 0.0);
    cd.ric.assign(9, 0.0);
    cd.q_ud.assign(9, 0.0);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c)
                for (int w = 0; w < d; ++w)
                    cd.Rud(a, b, c, w) = kappa * (ps.g_value(b, c) * (w == a ? 1.0 : 0.0) -
                                                  ps.g_value(a, c) * (w == b ? 1.0 : 0.0));
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c)
                for (int w = 0; w < d; ++w) {
                    double acc = 0.0;
                    for (int f = 0; f < d; ++f) acc += ps.g_value(f, w) * cd.Rud(a, b, c, f);
                    cd.Rdn(a, b, c, w) = acc;
                }
    ricci_scalar_q(ps, cd);
    return cd;
}

} // namespace

TEST_CASE("flat model: every family tensor vanishes except PC-Bochner") {
    const auto g = geo(builtin_model("flat3"), {0.0, 0.0, 0.0});
    CHECK(projective(g.ps, g.cd).components.max_abs() == 0.0);
    CHECK(conformal(g.ps, g.cd).components.max_abs() == 0.0);
    CHECK(concircular(g.ps, g.cd).components.max_abs() == 0.0);
    CHECK(projective_ricci(g.ps, g.cd).components.max_abs() == 0.0);
    CHECK(pseudo_projective(g.ps, g.cd, 1.0, 1.0).components.max_abs() == 0.0);
    CHECK(pc_bochner(g.ps, g.cd).components.max_abs() > 0.1);
}

TEST_CASE("flat-model PC-Bochner component B(e1,e2,e2,e1) = 2/3") {
    const auto g = geo(builtin_model("flat3"), {0.0, 0.0, 0.0});
    const FamilyTensor B = pc_bochner(g.ps, g.cd);
    CHECK(close(B.k, 0.5, 1e-15)); // k = -(0 - 2)/4
    CHECK(close(B.components(0, 1, 1, 0), 2.0 / 3.0, 1e-12));
    // antisymmetry in (X, Y) holds on the flat model (Ric = 0)
    for (int x = 0; x < 3; ++x)
        for (int z = 0; z < 3; ++z)
            for (int w = 0; w < 3; ++w) CHECK(B.components(x, x, z, w) == 0.0);
}

TEST_CASE("PC-Bochner swap defect equals the Ric-phi anticommutator term") {
    // The PC-Bochner formula is antisymmetric in (X, Y) in every term except
    // 2 Ric(phi X, Y) g(Z, phi W)/(2n+4), so the swap defect must equal
    // (2/(2n+4)) (Ric(phi X, Y) + Ric(phi Y, X)) g(Z, phi W) exactly.
    const ModelSpec spec = builtin_model("example25");
    const auto pts = sample_points(spec, 10, 21);
    for (const auto& p : pts) {
        const auto g = geo(spec, p);
        const FamilyTensor B = pc_bochner(g.ps, g.cd);
        const auto ric_phi = [&](int a, int b) {
            double acc = 0.0;
            for (int c = 0; c < 3; ++c) acc += g.ps.phi_value(c, a) * g.cd.Ric(c, b);
            return acc;
        };
        const auto g_phi = [&](int a, int b) {
            double acc = 0.0;
            for (int c = 0; c < 3; ++c) acc += g.ps.g_value(a, c) * g.ps.phi_value(c, b);
            return acc;
        };
        for (int x = 0; x < 3; ++x)
            for (int y = 0; y < 3; ++y)
                for (int z = 0; z < 3; ++z)
                    for (int w = 0; w < 3; ++w) {
                        const double defect =
                            B.components(x, y, z, w) + B.components(y, x, z, w);
                        const double anticomm =
                            (2.0 / 6.0) * (ric_phi(x, y) + ric_phi(y, x)) * g_phi(z, w);
                        CHECK(close(defect, anticomm, 1e-9));
                    }
    }
}

TEST_CASE("(1,3) family tensors are antisymmetric in (X, Y)") {
    const ModelSpec spec = builtin_model("example25");
    const auto pts = sample_points(spec, 25, 33);
    for (const auto& p : pts) {
        const auto g = geo(spec, p);
        const TensorAtPoint tensors[] = {projective(g.ps, g.cd).components,
                                         conformal(g.ps, g.cd).components,
                                         concircular(g.ps, g.cd).components,
                                         pseudo_projective(g.ps, g.cd, 1.0, 1.0).components};
        for (const auto& t : tensors)
            for (int x = 0; x < 3; ++x)
                for (int y = 0; y < 3; ++y)
                    for (int z = 0; z < 3; ++z)
                        for (int w = 0; w < 3; ++w)
                            CHECK(close(t(x, y, z, w) + t(y, x, z, w), 0.0, 1e-8));
    }
}

TEST_CASE("conformal tensor vanishes in dimension 3") {
    const ModelSpec spec = builtin_model("example25");
    const auto pts = sample_points(spec, 100, 42);
    for (const auto& p : pts) {
        const auto g = geo(spec, p);
        CHECK(conformal(g.ps, g.cd).components.max_abs() < 1e-6);
    }
}

TEST_CASE("conformal tensor is trace free") {
    const ModelSpec spec = builtin_model("example25");
    for (const auto& p : sample_points(spec, 25, 77)) {
        const auto g = geo(spec, p);
        const FamilyTensor C = conformal(g.ps, g.cd);
        for (int y = 0; y < 3; ++y)
            for (int z = 0; z < 3; ++z) {
                double tr = 0.0;
                for (int a = 0; a < 3; ++a) tr += C.components(a, y, z, a);
                CHECK(close(tr, 0.0, 1e-6));
            }
    }
}

TEST_CASE("pseudo-projective reduces to projective at (1, -1/2n)") {
    const ModelSpec spec = builtin_model("example25");
    for (const auto& p : sample_points(spec, 25, 2)) {
        const auto g = geo(spec, p);
        const FamilyTensor P = projective(g.ps, g.cd);
        const FamilyTensor PP = pseudo_projective(g.ps, g.cd, 1.0, -0.5); // n = 1
        for (int x = 0; x < 3; ++x)
            for (int y = 0; y < 3; ++y)
                for (int z = 0; z < 3; ++z)
                    for (int w = 0; w < 3; ++w)
                        CHECK(close(PP.components(x, y, z, w), P.components(x, y, z, w), 1e-10));
    }
}

TEST_CASE("pseudo-projective is homogeneous in (a, b)") {
    const auto g = geo(builtin_model("example25"), {0.2, 0.4, -0.3});
    const FamilyTensor one = pseudo_projective(g.ps, g.cd, 0.7, -1.3);
    const FamilyTensor two = pseudo_projective(g.ps, g.cd, 1.4, -2.6);
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            for (int z = 0; z < 3; ++z)
                for (int w = 0; w < 3; ++w)
                    CHECK(close(two.components(x, y, z, w), 2.0 * one.components(x, y, z, w),
                                1e-12));
}

TEST_CASE("zero pseudo-projective constants are rejected") {
    const auto g = geo(builtin_model("flat3"), {0.0, 0.0, 0.0});
    CHECK_THROWS_AS(pseudo_projective(g.ps, g.cd, 0.0, 1.0), ModelValidationError);
    CHECK_THROWS_AS(pseudo_projective(g.ps, g.cd, 1.0, 0.0), ModelValidationError);
}

TEST_CASE("concircular equals riemann wherever scal = 0") {
    // Synthetic curvature with a zero trace: the scal coefficient drops out
    // bitwise.
    auto g = geo(builtin_model("example25"), {0.1, -0.2, 0.6});
    SplitMix64 rng(55);
    for (double& v : g.cd.riem_ud) v = 2.0 * rng.next_double() - 1.0;
    g.cd.scal = 0.0;
    const FamilyTensor cbar = concircular(g.ps, g.cd);
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            for (int z = 0; z < 3; ++z)
                for (int w = 0; w < 3; ++w)
                    CHECK(cbar.components(x, y, z, w) == g.cd.Rud(x, y, z, w));
}

TEST_CASE("constant-curvature input: Einstein algebra") {
    const ModelSpec spec = builtin_model("example25");
    const PointStructure ps = assemble(spec, std::vector<double>{0.3, 0.1, -0.4});
    const double kappa = 0.8;
    const CurvatureData cd = constant_curvature(ps, kappa);
    const double lambda = kappa * 2.0; // (d - 1) kappa

    SUBCASE("Ric = lambda g and scal = d lambda") {
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                CHECK(close(cd.Ric(a, b), lambda * ps.g_value(a, b), 1e-12));
        CHECK(close(cd.scal, 3.0 * lambda, 1e-12));
    }
    SUBCASE("projective tensor equals R minus the lambda wedge, here zero") {
        const FamilyTensor P = projective(ps, cd);
        for (int x = 0; x < 3; ++x)
            for (int y = 0; y < 3; ++y)
                for (int z = 0; z < 3; ++z)
                    for (int w = 0; w < 3; ++w) {
                        const double wedge =
                            (lambda / 2.0) * (ps.g_value(y, z) * (w == x ? 1.0 : 0.0) -
                                              ps.g_value(x, z) * (w == y ? 1.0 : 0.0));
                        CHECK(close(P.components(x, y, z, w), cd.Rud(x, y, z, w) - wedge,
                                    1e-12));
                        CHECK(close(P.components(x, y, z, w), 0.0, 1e-12));
                    }
    }
    SUBCASE("projective Ricci tensor vanishes on Einstein input") {
        CHECK(projective_ricci(ps, cd).components.max_abs() < 1e-12);
    }
    SUBCASE("conformal tensor is trace free and vanishes in dimension 3") {
        const FamilyTensor C = conformal(ps, cd);
        CHECK(C.components.max_abs() < 1e-12);
    }
}

TEST_CASE("derivation action") {
    const ModelSpec spec = builtin_model("example25");

    SUBCASE("flat curvature annihilates every tensor") {
        const auto g = geo(builtin_model("flat3"), {0.4, 0.2, -0.6});
        TensorAtPoint t(1, 3, 3, g.ps.point);
        SplitMix64 rng(3);
        for (double& v : t.mutable_data()) v = rng.next_double();
        CHECK(derivation_action(g.cd, t).max_abs() == 0.0);
    }

    SUBCASE("R . g = 0 by metric compatibility") {
        for (const auto& p : sample_points(spec, 25, 13)) {
            const auto g = geo(spec, p);
            TensorAtPoint gt(0, 2, 3, g.ps.point);
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b) gt(a, b) = g.ps.g_value(a, b);
            CHECK(derivation_action(g.cd, gt).max_abs() < 1e-7);
        }
    }

    SUBCASE("R . R is finite and reported") {
        const auto g = geo(spec, {0.25, -0.45, 0.15});
        TensorAtPoint rdn(0, 4, 3, g.ps.point);
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                for (int c = 0; c < 3; ++c)
                    for (int w = 0; w < 3; ++w) rdn(a, b, c, w) = g.cd.Rdn(a, b, c, w);
        const TensorAtPoint rr = derivation_action(g.cd, rdn);
        CHECK(std::isfinite(rr.max_abs()));
    }

    SUBCASE("unsupported valences are rejected") {
        const auto g = geo(builtin_model("flat3"), {0.0, 0.0, 0.0});
        TensorAtPoint bad(0, 3, 3, g.ps.point);
        CHECK_THROWS_AS(derivation_action(g.cd, bad), ValenceMismatchError);
    }
}
