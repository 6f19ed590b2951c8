#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "test_util.hpp"
#include "tpsgeo/jet_matrix.hpp"

#include <cmath>

using namespace tpsgeo;
using testutil::close;
using testutil::close_rel;
using testutil::Poly3;

namespace {

Jet2 var(int i, double v) { return Jet2::variable(3, i, v); }

} // namespace

TEST_CASE("exp(2z) jet at the origin") {
    const Jet2 z = var(2, 0.0);
    const Jet2 f = exp(2.0 * z);
    CHECK(f.value() == doctest::Approx(1.0));
    CHECK(f.grad(0) == 0.0);
    CHECK(f.grad(1) == 0.0);
    CHECK(f.grad(2) == doctest::Approx(2.0));
    CHECK(f.hess(2, 2) == doctest::Approx(4.0));
    CHECK(f.hess(0, 2) == 0.0);
}

TEST_CASE("y * exp(z) jet at the origin") {
    const Jet2 y = var(1, 0.0);
    const Jet2 z = var(2, 0.0);
    const Jet2 f = y * exp(z);
    CHECK(f.value() == 0.0);
    CHECK(f.grad(1) == doctest::Approx(1.0));
    CHECK(f.grad(0) == 0.0);
    CHECK(f.grad(2) == 0.0);
    CHECK(f.hess(1, 2) == doctest::Approx(1.0));
    CHECK(f.hess(2, 1) == f.hess(1, 2));
}

TEST_CASE("multiplication by the constant one is the identity") {
    SplitMix64 rng(11);
    const Poly3 p = Poly3::random(rng);
    const std::vector<double> pt{0.3, -0.7, 0.2};
    const Jet2 f = p.eval_jet(pt);
    const Jet2 g = f * Jet2::constant(3, 1.0);
    CHECK(g.value() == f.value());
    for (int i = 0; i < 3; ++i) {
        CHECK(g.grad(i) == f.grad(i));
        for (int j = 0; j < 3; ++j) CHECK(g.hess(i, j) == f.hess(i, j));
    }
}

TEST_CASE("domain errors carry the offending value") {
    const Jet2 zero = Jet2::constant(3, 0.0);
    const Jet2 one = Jet2::constant(3, 1.0);
    CHECK_THROWS_AS(one / zero, JetDomainError);
    CHECK_THROWS_AS(log(zero - 1.0), JetDomainError);
    try {
        log(zero - 1.0);
    } catch (const JetDomainError& e) {
        CHECK(e.offending_value == -1.0);
    }
    CHECK_THROWS_AS(powi(zero, -1), JetDomainError);
}

TEST_CASE("mixing jet dimensions is a contract violation") {
    const Jet2 a = Jet2::constant(3, 1.0);
    const Jet2 b = Jet2::constant(2, 1.0);
    CHECK_THROWS_AS(a + b, std::logic_error);
}

TEST_CASE("product jets match central finite differences on random cubics") {
    SplitMix64 rng(42);
    const double h = 1e-4;
    for (int trial = 0; trial < 50; ++trial) {
        const Poly3 p = Poly3::random(rng);
        const Poly3 q = Poly3::random(rng);
        std::vector<double> pt{2.0 * rng.next_double() - 1.0, 2.0 * rng.next_double() - 1.0,
                               2.0 * rng.next_double() - 1.0};
        const auto f = [&](const std::vector<double>& x) {
            return p.eval(x[0], x[1], x[2]) * q.eval(x[0], x[1], x[2]);
        };
        const Jet2 jet = p.eval_jet(pt) * q.eval_jet(pt);

        for (int i = 0; i < 3; ++i) {
            auto xp = pt, xm = pt;
            xp[static_cast<std::size_t>(i)] += h;
            xm[static_cast<std::size_t>(i)] -= h;
            const double fd = (f(xp) - f(xm)) / (2.0 * h);
            CHECK(close_rel(jet.grad(i), fd, 1e-5));
        }
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j <= i; ++j) {
                double fd = 0.0;
                if (i == j) {
                    auto xp = pt, xm = pt;
                    xp[static_cast<std::size_t>(i)] += h;
                    xm[static_cast<std::size_t>(i)] -= h;
                    fd = (f(xp) - 2.0 * f(pt) + f(xm)) / (h * h);
                } else {
                    auto xpp = pt, xpm = pt, xmp = pt, xmm = pt;
                    xpp[static_cast<std::size_t>(i)] += h;
                    xpp[static_cast<std::size_t>(j)] += h;
                    xpm[static_cast<std::size_t>(i)] += h;
                    xpm[static_cast<std::size_t>(j)] -= h;
                    xmp[static_cast<std::size_t>(i)] -= h;
                    xmp[static_cast<std::size_t>(j)] += h;
                    xmm[static_cast<std::size_t>(i)] -= h;
                    xmm[static_cast<std::size_t>(j)] -= h;
                    fd = (f(xpp) - f(xpm) - f(xmp) + f(xmm)) / (4.0 * h * h);
                }
                CHECK(close_rel(jet.hess(i, j), fd, 1e-5));
            }
    }
}

TEST_CASE("hessian stays symmetric through random composition chains") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        Jet2 acc = var(static_cast<int>(rng.next_u64() % 3), rng.next_double());
        for (int step = 0; step < 12; ++step) {
            const Jet2 other = var(static_cast<int>(rng.next_u64() % 3),
                                   2.0 * rng.next_double() - 1.0);
            switch (rng.next_u64() % 6) {
            case 0: acc = acc + other; break;
            case 1: acc = acc - other; break;
            case 2: acc = acc * other; break;
            case 3: acc = acc / (other * other + 2.0); break;
            case 4: acc = sin(acc); break;
            default: acc = exp(acc * 0.25); break;
            }
        }
        REQUIRE(acc.is_finite());
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) CHECK(acc.hess(i, j) == acc.hess(j, i));
    }
}

namespace {

/// Jet matrix with full derivative content: entries are quadratics in the
/// coordinates, evaluated at a fixed point, plus a diagonal shift for
/// conditioning.
JetMatrix random_well_conditioned(SplitMix64& rng, int n) {
    const std::vector<double> pt{0.2, -0.3, 0.5};
    JetMatrix m = JetMatrix::zero(n, n, 3);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            const Poly3 p = Poly3::random(rng);
            m.at(r, c) = p.eval_jet(pt) * 0.4 + Jet2::constant(3, r == c ? 3.0 : 0.0);
        }
    return m;
}

double product_identity_defect_full(const JetMatrix& a, const JetMatrix& b) {
    const JetMatrix prod = a * b;
    double worst = 0.0;
    for (int r = 0; r < prod.rows(); ++r)
        for (int c = 0; c < prod.cols(); ++c) {
            const Jet2& e = prod.at(r, c);
            worst = std::max(worst, std::abs(e.value() - (r == c ? 1.0 : 0.0)));
            for (int i = 0; i < 3; ++i) {
                worst = std::max(worst, std::abs(e.grad(i)));
                for (int j = 0; j <= i; ++j) worst = std::max(worst, std::abs(e.hess(i, j)));
            }
        }
    return worst;
}

} // namespace

TEST_CASE("inverse of the identity is the identity") {
    const JetMatrix id = JetMatrix::identity(3, 3);
    const JetMatrix inv = jet_matrix_inverse(id);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            CHECK(inv.at(r, c).value() == doctest::Approx(r == c ? 1.0 : 0.0));
            for (int i = 0; i < 3; ++i) CHECK(inv.at(r, c).grad(i) == 0.0);
        }
}

TEST_CASE("frame matrix at the origin inverts to the identity coframe") {
    // rows (e^z, 0, y e^z), (0, e^z, 0), (0, 0, 1) evaluated at the origin
    const Jet2 y = var(1, 0.0), z = var(2, 0.0);
    JetMatrix m = JetMatrix::zero(3, 3, 3);
    m.at(0, 0) = exp(z);
    m.at(0, 2) = y * exp(z);
    m.at(1, 1) = exp(z);
    m.at(2, 2) = Jet2::constant(3, 1.0);
    const JetMatrix inv = jet_matrix_inverse(m);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            CHECK(close(inv.at(r, c).value(), r == c ? 1.0 : 0.0, 1e-14));
}

TEST_CASE("diag(e^z, e^z, 1) at z = 0.3 inverts entrywise") {
    const double expm = 0.7408182206817179; // e^{-0.3}
    const Jet2 z = var(2, 0.3);
    JetMatrix m = JetMatrix::zero(3, 3, 3);
    m.at(0, 0) = exp(z);
    m.at(1, 1) = exp(z);
    m.at(2, 2) = Jet2::constant(3, 1.0);
    const JetMatrix inv = jet_matrix_inverse(m);
    CHECK(close(inv.at(0, 0).value(), expm, 1e-14));
    CHECK(close(inv.at(1, 1).value(), expm, 1e-14));
    CHECK(close(inv.at(2, 2).value(), 1.0, 1e-14));
    CHECK(close(inv.at(0, 0).grad(2), -expm, 1e-14));
    CHECK(close(inv.at(1, 1).grad(2), -expm, 1e-14));
    CHECK(close(inv.at(2, 2).grad(2), 0.0, 1e-14));
    CHECK(close(inv.at(0, 1).value(), 0.0, 1e-14));
}

TEST_CASE("matrix times its inverse is the identity in value, grad and hess") {
    SplitMix64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        const JetMatrix m = random_well_conditioned(rng, 3);
        const JetMatrix inv = jet_matrix_inverse(m);
        CHECK(product_identity_defect_full(m, inv) < 1e-10);
        CHECK(product_identity_defect_full(inv, m) < 1e-10);
    }
}

TEST_CASE("double inversion returns to the original matrix") {
    SplitMix64 rng(9);
    for (int trial = 0; trial < 10; ++trial) {
        const JetMatrix m = random_well_conditioned(rng, 4 + static_cast<int>(trial % 2));
        const JetMatrix back = jet_matrix_inverse(jet_matrix_inverse(m));
        for (int r = 0; r < m.rows(); ++r)
            for (int c = 0; c < m.cols(); ++c) {
                CHECK(close(back.at(r, c).value(), m.at(r, c).value(), 1e-9));
                for (int i = 0; i < 3; ++i)
                    CHECK(close(back.at(r, c).grad(i), m.at(r, c).grad(i), 1e-9));
            }
    }
}

TEST_CASE("singular matrices are rejected with a condition estimate") {
    JetMatrix m = JetMatrix::zero(2, 2, 3);
    m.at(0, 0) = Jet2::constant(3, 1.0);
    m.at(0, 1) = Jet2::constant(3, 2.0);
    m.at(1, 0) = Jet2::constant(3, 2.0);
    m.at(1, 1) = Jet2::constant(3, 4.0);
    CHECK_THROWS_AS(jet_matrix_inverse(m), SingularMatrixError);
}

TEST_CASE("least squares: identity design is exact") {
    const auto r = least_squares({{1.0, 0.0}, {0.0, 1.0}}, {3.0, -1.0});
    CHECK(r.coefficients[0] == doctest::Approx(3.0));
    CHECK(r.coefficients[1] == doctest::Approx(-1.0));
    CHECK(r.residual == doctest::Approx(0.0));
}

TEST_CASE("least squares: consistent overdetermined system") {
    const auto r = least_squares({{1.0}, {1.0}}, {1.0, 1.0});
    CHECK(r.coefficients[0] == doctest::Approx(1.0));
    CHECK(r.residual == doctest::Approx(0.0));
}

TEST_CASE("least squares: all-zero curvature fits lambda = 0 exactly") {
    // Ric = lambda g rows on the flat metric diag(1, -1, 1), Ric = 0.
    const auto r = least_squares({{1.0}, {-1.0}, {1.0}, {0.0}}, {0.0, 0.0, 0.0, 0.0});
    CHECK(r.coefficients[0] == 0.0);
    CHECK(r.residual == 0.0);
}

TEST_CASE("least squares: dependent column is reported") {
    CHECK_THROWS_AS(least_squares({{1.0, 2.0}, {2.0, 4.0}, {3.0, 6.0}}, {1.0, 2.0, 3.0}),
                    RankDeficientError);
    try {
        least_squares({{1.0, 2.0}, {2.0, 4.0}, {3.0, 6.0}}, {1.0, 2.0, 3.0});
    } catch (const RankDeficientError& e) {
        CHECK(e.dependent_column >= 0);
        CHECK(e.dependent_column <= 1);
    }
}

TEST_CASE("partial extracts first-order content") {
    const Jet2 y = var(1, 0.5), z = var(2, -0.25);
    const Jet2 f = y * y * exp(z); // d/dy = 2 y e^z, d/dy d/dz = 2 y e^z
    const Jet2 fy = f.partial(1);
    CHECK(close(fy.value(), 2.0 * 0.5 * std::exp(-0.25), 1e-14));
    CHECK(close(fy.grad(2), 2.0 * 0.5 * std::exp(-0.25), 1e-14));
    CHECK(close(fy.grad(1), 2.0 * std::exp(-0.25), 1e-14));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(fy.hess(i, j) == 0.0);
}
