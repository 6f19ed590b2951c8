#pragma once

#include "tpsgeo/errors.hpp"

#include <cmath>
#include <span>
#include <vector>

namespace tpsgeo {

/// Second-order forward-mode jet: a scalar value together with its gradient
/// and Hessian with respect to the d model coordinates. All arithmetic below
/// propagates derivatives by the exact chain and product rules truncated at
/// order 2. The Hessian is stored as a packed lower triangle, so symmetry is
/// structural rather than numerical.
///
/// The dimension d is fixed when a jet is created; combining jets of
/// different dimensions is a programming error and throws std::logic_error.
class Jet2 {
public:
    Jet2() : dim_(0), value_(0.0) {}

    static Jet2 constant(int dim, double v) {
        Jet2 j(dim);
        j.value_ = v;
        return j;
    }

    /// Coordinate seed: value v, unit gradient along coordinate `index`.
    static Jet2 variable(int dim, int index, double v) {
        Jet2 j(dim);
        j.value_ = v;
        j.grad_[static_cast<std::size_t>(index)] = 1.0;
        return j;
    }

    int dim() const { return dim_; }
    double value() const { return value_; }
    double grad(int i) const { return grad_[static_cast<std::size_t>(i)]; }
    double hess(int i, int j) const { return hess_[tri_index(i, j)]; }

    /// The jet of the partial derivative along coordinate a. Value and
    /// gradient are exact; the second-order part is truncated to zero, so
    /// results that pass through partial() are trusted to first order only.
    Jet2 partial(int a) const {
        Jet2 r(dim_);
        r.value_ = grad(a);
        for (int i = 0; i < dim_; ++i) r.grad_[static_cast<std::size_t>(i)] = hess(a, i);
        return r;
    }

    bool is_finite() const {
        if (!std::isfinite(value_)) return false;
        for (double g : grad_)
            if (!std::isfinite(g)) return false;
        for (double h : hess_)
            if (!std::isfinite(h)) return false;
        return true;
    }

    Jet2 operator-() const {
        Jet2 r(dim_);
        r.value_ = -value_;
        for (std::size_t i = 0; i < grad_.size(); ++i) r.grad_[i] = -grad_[i];
        for (std::size_t i = 0; i < hess_.size(); ++i) r.hess_[i] = -hess_[i];
        return r;
    }

    friend Jet2 operator+(const Jet2& a, const Jet2& b) {
        require_same_dim(a, b);
        Jet2 r(a.dim_);
        r.value_ = a.value_ + b.value_;
        for (std::size_t i = 0; i < r.grad_.size(); ++i) r.grad_[i] = a.grad_[i] + b.grad_[i];
        for (std::size_t i = 0; i < r.hess_.size(); ++i) r.hess_[i] = a.hess_[i] + b.hess_[i];
        return r;
    }

    friend Jet2 operator-(const Jet2& a, const Jet2& b) {
        require_same_dim(a, b);
        Jet2 r(a.dim_);
        r.value_ = a.value_ - b.value_;
        for (std::size_t i = 0; i < r.grad_.size(); ++i) r.grad_[i] = a.grad_[i] - b.grad_[i];
        for (std::size_t i = 0; i < r.hess_.size(); ++i) r.hess_[i] = a.hess_[i] - b.hess_[i];
        return r;
    }

    friend Jet2 operator*(const Jet2& a, const Jet2& b) {
        require_same_dim(a, b);
        Jet2 r(a.dim_);
        r.value_ = a.value_ * b.value_;
        for (std::size_t i = 0; i < r.grad_.size(); ++i)
            r.grad_[i] = a.value_ * b.grad_[i] + b.value_ * a.grad_[i];
        for (int i = 0; i < a.dim_; ++i)
            for (int j = 0; j <= i; ++j) {
                const std::size_t t = tri_index(i, j);
                r.hess_[t] = a.value_ * b.hess_[t] + b.value_ * a.hess_[t] +
                             a.grad(i) * b.grad(j) + a.grad(j) * b.grad(i);
            }
        return r;
    }

    friend Jet2 operator/(const Jet2& a, const Jet2& b) { return a * reciprocal(b); }

    friend Jet2 operator+(const Jet2& a, double c) {
        Jet2 r = a;
        r.value_ += c;
        return r;
    }
    friend Jet2 operator+(double c, const Jet2& a) { return a + c; }
    friend Jet2 operator-(const Jet2& a, double c) { return a + (-c); }
    friend Jet2 operator-(double c, const Jet2& a) { return -a + c; }

    friend Jet2 operator*(const Jet2& a, double c) {
        Jet2 r(a.dim_);
        r.value_ = a.value_ * c;
        for (std::size_t i = 0; i < r.grad_.size(); ++i) r.grad_[i] = a.grad_[i] * c;
        for (std::size_t i = 0; i < r.hess_.size(); ++i) r.hess_[i] = a.hess_[i] * c;
        return r;
    }
    friend Jet2 operator*(double c, const Jet2& a) { return a * c; }

    friend Jet2 operator/(const Jet2& a, double c) {
        if (c == 0.0) throw JetDomainError("div", 0.0);
        return a * (1.0 / c);
    }
    friend Jet2 operator/(double c, const Jet2& a) { return reciprocal(a) * c; }

    /// f(u) for unary f with given value and first/second derivative at u.
    friend Jet2 chain(const Jet2& u, double f0, double f1, double f2) {
        Jet2 r(u.dim_);
        r.value_ = f0;
        for (std::size_t i = 0; i < r.grad_.size(); ++i) r.grad_[i] = f1 * u.grad_[i];
        for (int i = 0; i < u.dim_; ++i)
            for (int j = 0; j <= i; ++j) {
                const std::size_t t = tri_index(i, j);
                r.hess_[t] = f1 * u.hess_[t] + f2 * u.grad(i) * u.grad(j);
            }
        return r;
    }

    friend Jet2 reciprocal(const Jet2& u) {
        if (u.value_ == 0.0) throw JetDomainError("div", 0.0);
        const double iv = 1.0 / u.value_;
        return chain(u, iv, -iv * iv, 2.0 * iv * iv * iv);
    }

private:
    explicit Jet2(int dim)
        : dim_(dim),
          value_(0.0),
          grad_(static_cast<std::size_t>(dim), 0.0),
          hess_(tri_size(dim), 0.0) {}

    static std::size_t tri_size(int d) {
        return static_cast<std::size_t>(d) * static_cast<std::size_t>(d + 1) / 2;
    }

    static std::size_t tri_index(int i, int j) {
        if (j > i) std::swap(i, j);
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(i + 1) / 2 +
               static_cast<std::size_t>(j);
    }

    static void require_same_dim(const Jet2& a, const Jet2& b) {
        if (a.dim_ != b.dim_)
            throw std::logic_error("Jet2 dimension mismatch: " + std::to_string(a.dim_) +
                                   " vs " + std::to_string(b.dim_));
    }

    int dim_;
    double value_;
    std::vector<double> grad_;
    std::vector<double> hess_; // packed lower triangle
};

inline Jet2 exp(const Jet2& u) {
    const double e = std::exp(u.value());
    return chain(u, e, e, e);
}

inline Jet2 log(const Jet2& u) {
    if (!(u.value() > 0.0)) throw JetDomainError("log", u.value());
    const double iv = 1.0 / u.value();
    return chain(u, std::log(u.value()), iv, -iv * iv);
}

inline Jet2 sin(const Jet2& u) {
    const double s = std::sin(u.value()), c = std::cos(u.value());
    return chain(u, s, c, -s);
}

inline Jet2 cos(const Jet2& u) {
    const double s = std::sin(u.value()), c = std::cos(u.value());
    return chain(u, c, -s, -c);
}

inline Jet2 sinh(const Jet2& u) {
    const double s = std::sinh(u.value()), c = std::cosh(u.value());
    return chain(u, s, c, s);
}

inline Jet2 cosh(const Jet2& u) {
    const double s = std::sinh(u.value()), c = std::cosh(u.value());
    return chain(u, c, s, c);
}

/// Integer power. Negative exponents go through reciprocal, so a zero base
/// with a negative exponent is a domain error; fractional powers are not
/// provided and must be written via exp/log.
inline Jet2 powi(const Jet2& u, int n) {
    if (n == 0) return Jet2::constant(u.dim(), 1.0);
    if (n < 0) return reciprocal(powi(u, -n));
    if (n == 1) return chain(u, u.value(), 1.0, 0.0);
    double p = 1.0; // u^(n-2)
    for (int k = 0; k < n - 2; ++k) p *= u.value();
    const double v = u.value();
    return chain(u, p * v * v, static_cast<double>(n) * p * v,
                 static_cast<double>(n) * static_cast<double>(n - 1) * p);
}

} // namespace tpsgeo
