#include "tpsgeo/expr.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace tpsgeo {

ScalarExpr ScalarExpr::constant(double v) {
    ScalarExpr e;
    e.kind_ = ExprKind::Constant;
    e.number_ = v;
    return e;
}

ScalarExpr ScalarExpr::coordinate(int index) {
    ScalarExpr e;
    e.kind_ = ExprKind::Coordinate;
    e.index_ = index;
    return e;
}

ScalarExpr ScalarExpr::unary(ExprKind kind, ScalarExpr child) {
    ScalarExpr e;
    e.kind_ = kind;
    e.kids_.push_back(std::move(child));
    return e;
}

ScalarExpr ScalarExpr::binary(ExprKind kind, ScalarExpr lhs, ScalarExpr rhs) {
    ScalarExpr e;
    e.kind_ = kind;
    e.kids_.push_back(std::move(lhs));
    e.kids_.push_back(std::move(rhs));
    return e;
}

ScalarExpr ScalarExpr::pow_int(ScalarExpr base, int exponent) {
    ScalarExpr e;
    e.kind_ = ExprKind::PowInt;
    e.exponent_ = exponent;
    e.kids_.push_back(std::move(base));
    return e;
}

bool ScalarExpr::structurally_equal(const ScalarExpr& other) const {
    if (kind_ != other.kind_) return false;
    switch (kind_) {
    case ExprKind::Constant:
        if (number_ != other.number_) return false;
        break;
    case ExprKind::Coordinate:
        if (index_ != other.index_) return false;
        break;
    case ExprKind::PowInt:
        if (exponent_ != other.exponent_) return false;
        break;
    default:
        break;
    }
    if (kids_.size() != other.kids_.size()) return false;
    for (std::size_t i = 0; i < kids_.size(); ++i)
        if (!kids_[i].structurally_equal(other.kids_[i])) return false;
    return true;
}

int ScalarExpr::max_coordinate_index() const {
    int best = (kind_ == ExprKind::Coordinate) ? index_ : -1;
    for (const auto& k : kids_) best = std::max(best, k.max_coordinate_index());
    return best;
}

namespace {

Jet2 eval_node(const ScalarExpr& e, std::span<const double> point,
               std::span<const std::string> names);

Jet2 eval_children_op(const ScalarExpr& e, std::span<const double> point,
                      std::span<const std::string> names) {
    const int d = static_cast<int>(point.size());
    switch (e.kind()) {
    case ExprKind::Constant:
        return Jet2::constant(d, e.number());
    case ExprKind::Coordinate:
        return Jet2::variable(d, e.coordinate_index(),
                              point[static_cast<std::size_t>(e.coordinate_index())]);
    case ExprKind::Add:
        return eval_node(e.children()[0], point, names) + eval_node(e.children()[1], point, names);
    case ExprKind::Sub:
        return eval_node(e.children()[0], point, names) - eval_node(e.children()[1], point, names);
    case ExprKind::Mul:
        return eval_node(e.children()[0], point, names) * eval_node(e.children()[1], point, names);
    case ExprKind::Div:
        return eval_node(e.children()[0], point, names) / eval_node(e.children()[1], point, names);
    case ExprKind::Neg:
        return -eval_node(e.children()[0], point, names);
    case ExprKind::PowInt:
        return powi(eval_node(e.children()[0], point, names), e.exponent());
    case ExprKind::Exp:
        return exp(eval_node(e.children()[0], point, names));
    case ExprKind::Log:
        return log(eval_node(e.children()[0], point, names));
    case ExprKind::Sin:
        return sin(eval_node(e.children()[0], point, names));
    case ExprKind::Cos:
        return cos(eval_node(e.children()[0], point, names));
    case ExprKind::Sinh:
        return sinh(eval_node(e.children()[0], point, names));
    case ExprKind::Cosh:
        return cosh(eval_node(e.children()[0], point, names));
    }
    throw std::logic_error("eval_expr: bad node kind");
}

Jet2 eval_node(const ScalarExpr& e, std::span<const double> point,
               std::span<const std::string> names) {
    try {
        return eval_children_op(e, point, names);
    } catch (const JetDomainError& err) {
        throw JetDomainError(std::string(err.what()) + " in '" + to_string(e, names) + "'",
                             err.offending_value);
    }
}

std::vector<std::string> fallback_names(std::size_t d) {
    std::vector<std::string> names;
    names.reserve(d);
    for (std::size_t i = 0; i < d; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

int precedence(ExprKind k) {
    switch (k) {
    case ExprKind::Add:
    case ExprKind::Sub:
        return 1;
    case ExprKind::Mul:
    case ExprKind::Div:
        return 2;
    case ExprKind::PowInt:
        return 3;
    case ExprKind::Neg:
        return 4;
    default:
        return 5;
    }
}

/// Print precedence: a negative literal renders with a leading '-', so for
/// parenthesization it behaves like a unary minus.
int print_precedence(const ScalarExpr& e) {
    if (e.kind() == ExprKind::Constant && std::signbit(e.number())) return precedence(ExprKind::Neg);
    return precedence(e.kind());
}

std::string format_number(double v) {
    std::array<char, 48> buf{};
    auto [p, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    (void)ec;
    return std::string(buf.data(), p);
}

std::string print_node(const ScalarExpr& e, std::span<const std::string> names) {
    const auto child = [&](std::size_t i, bool needs_parens) {
        std::string s = print_node(e.children()[i], names);
        return needs_parens ? "(" + s + ")" : s;
    };
    const int my = precedence(e.kind());
    switch (e.kind()) {
    case ExprKind::Constant:
        return format_number(e.number());
    case ExprKind::Coordinate:
        return names[static_cast<std::size_t>(e.coordinate_index())];
    case ExprKind::Add:
        return child(0, print_precedence(e.children()[0]) < my) + " + " +
               child(1, print_precedence(e.children()[1]) <= my);
    case ExprKind::Sub:
        return child(0, print_precedence(e.children()[0]) < my) + " - " +
               child(1, print_precedence(e.children()[1]) <= my);
    case ExprKind::Mul:
        return child(0, print_precedence(e.children()[0]) < my) + "*" +
               child(1, print_precedence(e.children()[1]) <= my);
    case ExprKind::Div:
        return child(0, print_precedence(e.children()[0]) < my) + "/" +
               child(1, print_precedence(e.children()[1]) <= my);
    case ExprKind::Neg:
        return "-" + child(0, print_precedence(e.children()[0]) <= my);
    case ExprKind::PowInt:
        return child(0, print_precedence(e.children()[0]) < my) + "^" +
               std::to_string(e.exponent());
    case ExprKind::Exp:
        return "exp(" + print_node(e.children()[0], names) + ")";
    case ExprKind::Log:
        return "log(" + print_node(e.children()[0], names) + ")";
    case ExprKind::Sin:
        return "sin(" + print_node(e.children()[0], names) + ")";
    case ExprKind::Cos:
        return "cos(" + print_node(e.children()[0], names) + ")";
    case ExprKind::Sinh:
        return "sinh(" + print_node(e.children()[0], names) + ")";
    case ExprKind::Cosh:
        return "cosh(" + print_node(e.children()[0], names) + ")";
    }
    throw std::logic_error("to_string: bad node kind");
}

} // namespace

Jet2 eval_expr(const ScalarExpr& e, std::span<const double> point) {
    const auto names = fallback_names(point.size());
    if (e.max_coordinate_index() >= static_cast<int>(point.size()))
        throw std::logic_error("eval_expr: coordinate index out of range for point dimension");
    return eval_node(e, point, names);
}

std::string to_string(const ScalarExpr& e, std::span<const std::string> coord_names) {
    return print_node(e, coord_names);
}

} // namespace tpsgeo
