#pragma once

#include "tpsgeo/jet.hpp"

#include <span>
#include <string>
#include <vector>

namespace tpsgeo {

enum class ExprKind {
    Constant,
    Coordinate,
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    PowInt,
    Exp,
    Log,
    Sin,
    Cos,
    Sinh,
    Cosh,
};

/// Immutable scalar-field expression tree. Coordinates are referenced by
/// index into the owning model's coordinate list.
class ScalarExpr {
public:
    static ScalarExpr constant(double v);
    static ScalarExpr coordinate(int index);
    static ScalarExpr unary(ExprKind kind, ScalarExpr child);
    static ScalarExpr binary(ExprKind kind, ScalarExpr lhs, ScalarExpr rhs);
    static ScalarExpr pow_int(ScalarExpr base, int exponent);

    ExprKind kind() const { return kind_; }
    double number() const { return number_; }
    int coordinate_index() const { return index_; }
    int exponent() const { return exponent_; }
    const std::vector<ScalarExpr>& children() const { return kids_; }

    bool structurally_equal(const ScalarExpr& other) const;

    /// Largest coordinate index referenced, or -1 for constant expressions.
    int max_coordinate_index() const;

private:
    ScalarExpr() = default;

    ExprKind kind_ = ExprKind::Constant;
    double number_ = 0.0;
    int index_ = 0;
    int exponent_ = 0;
    std::vector<ScalarExpr> kids_;
};

/// Evaluate to a second-order jet at the point (coordinates seeded as jet
/// variables). Domain errors are rethrown annotated with the printed form of
/// the failing subexpression.
Jet2 eval_expr(const ScalarExpr& e, std::span<const double> point);

/// Canonical printer; the output reparses to a structurally equal tree.
std::string to_string(const ScalarExpr& e, std::span<const std::string> coord_names);

} // namespace tpsgeo
