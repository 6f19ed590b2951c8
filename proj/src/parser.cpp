#include "tpsgeo/parser.hpp"

#include "tpsgeo/errors.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

namespace tpsgeo {

const std::vector<std::string>& expression_function_names() {
    static const std::vector<std::string> names = {"exp", "log", "sin",
                                                   "cos", "sinh", "cosh"};
    return names;
}

namespace {

enum class TokKind { Number, Ident, String, Punct, End };

struct Token {
    TokKind kind = TokKind::End;
    std::size_t offset = 0;
    std::string text;       // ident / string payload / punct char
    double number = 0.0;
    bool is_integer = false;
    long int_value = 0;
};

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    std::size_t i = 0;
    const std::size_t n = src.size();
    while (i < n) {
        const char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == '#') {
            while (i < n && src[i] != '\n') ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = i;
            bool has_dot = false, has_exp = false;
            while (i < n) {
                const char d = src[i];
                if (std::isdigit(static_cast<unsigned char>(d))) {
                    ++i;
                } else if (d == '.' && !has_dot && !has_exp) {
                    has_dot = true;
                    ++i;
                } else if ((d == 'e' || d == 'E') && !has_exp && i + 1 < n &&
                           (std::isdigit(static_cast<unsigned char>(src[i + 1])) ||
                            ((src[i + 1] == '+' || src[i + 1] == '-') && i + 2 < n &&
                             std::isdigit(static_cast<unsigned char>(src[i + 2]))))) {
                    has_exp = true;
                    ++i;
                    if (src[i] == '+' || src[i] == '-') ++i;
                } else {
                    break;
                }
            }
            Token t;
            t.kind = TokKind::Number;
            t.offset = start;
            t.text = std::string(src.substr(start, i - start));
            t.number = std::strtod(t.text.c_str(), nullptr);
            t.is_integer = !has_dot && !has_exp;
            if (t.is_integer) t.int_value = std::strtol(t.text.c_str(), nullptr, 10);
            out.push_back(std::move(t));
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = i;
            while (i < n && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_'))
                ++i;
            Token t;
            t.kind = TokKind::Ident;
            t.offset = start;
            t.text = std::string(src.substr(start, i - start));
            out.push_back(std::move(t));
            continue;
        }
        if (c == '"') {
            const std::size_t start = i;
            ++i;
            std::string payload;
            while (i < n && src[i] != '"') payload += src[i++];
            if (i >= n) throw SyntaxError(start, {"closing '\"'"});
            ++i;
            Token t;
            t.kind = TokKind::String;
            t.offset = start;
            t.text = std::move(payload);
            out.push_back(std::move(t));
            continue;
        }
        if (std::string_view("+-*/^(),=;[]").find(c) != std::string_view::npos) {
            Token t;
            t.kind = TokKind::Punct;
            t.offset = i;
            t.text = std::string(1, c);
            out.push_back(std::move(t));
            ++i;
            continue;
        }
        throw SyntaxError(i, {"token"});
    }
    Token end;
    end.kind = TokKind::End;
    end.offset = n;
    out.push_back(std::move(end));
    return out;
}

class TokenStream {
public:
    explicit TokenStream(std::vector<Token> toks) : toks_(std::move(toks)) {}

    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
    bool at_end() const { return peek().kind == TokKind::End; }

    bool accept_punct(char c) {
        if (peek().kind == TokKind::Punct && peek().text[0] == c) {
            next();
            return true;
        }
        return false;
    }

    void expect_punct(char c, const std::string& what) {
        if (!accept_punct(c)) throw SyntaxError(peek().offset, {what});
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

class ExprParser {
public:
    ExprParser(TokenStream& ts, std::span<const std::string> coords)
        : ts_(ts), coords_(coords) {}

    ScalarExpr parse() { return additive(); }

private:
    ScalarExpr additive() {
        ScalarExpr e = multiplicative();
        for (;;) {
            if (ts_.accept_punct('+'))
                e = ScalarExpr::binary(ExprKind::Add, std::move(e), multiplicative());
            else if (ts_.accept_punct('-'))
                e = ScalarExpr::binary(ExprKind::Sub, std::move(e), multiplicative());
            else
                return e;
        }
    }

    ScalarExpr multiplicative() {
        ScalarExpr e = power();
        for (;;) {
            if (ts_.accept_punct('*'))
                e = ScalarExpr::binary(ExprKind::Mul, std::move(e), power());
            else if (ts_.accept_punct('/'))
                e = ScalarExpr::binary(ExprKind::Div, std::move(e), power());
            else
                return e;
        }
    }

    ScalarExpr power() {
        ScalarExpr e = unary();
        while (ts_.accept_punct('^')) e = ScalarExpr::pow_int(std::move(e), integer_exponent());
        return e;
    }

    int integer_exponent() {
        int sign = 1;
        if (ts_.accept_punct('-'))
            sign = -1;
        else
            ts_.accept_punct('+');
        const Token& t = ts_.peek();
        if (t.kind != TokKind::Number || !t.is_integer)
            throw SyntaxError(t.offset, {"integer exponent"});
        ts_.next();
        return sign * static_cast<int>(t.int_value);
    }

    ScalarExpr unary() {
        if (ts_.accept_punct('-')) return ScalarExpr::unary(ExprKind::Neg, unary());
        return primary();
    }

    ScalarExpr primary() {
        const Token& t = ts_.peek();
        if (t.kind == TokKind::Number) {
            ts_.next();
            return ScalarExpr::constant(t.number);
        }
        if (t.kind == TokKind::Ident) {
            ts_.next();
            const auto& funcs = expression_function_names();
            for (std::size_t f = 0; f < funcs.size(); ++f) {
                if (t.text != funcs[f]) continue;
                ts_.expect_punct('(', "'(' after function name");
                ScalarExpr arg = additive();
                ts_.expect_punct(')', "')'");
                static const ExprKind kinds[] = {ExprKind::Exp, ExprKind::Log,
                                                 ExprKind::Sin, ExprKind::Cos,
                                                 ExprKind::Sinh, ExprKind::Cosh};
                return ScalarExpr::unary(kinds[f], std::move(arg));
            }
            for (std::size_t c = 0; c < coords_.size(); ++c)
                if (t.text == coords_[c]) return ScalarExpr::coordinate(static_cast<int>(c));
            std::vector<std::string> candidates(coords_.begin(), coords_.end());
            candidates.insert(candidates.end(), funcs.begin(), funcs.end());
            throw UnknownIdentifierError(t.offset, t.text, std::move(candidates));
        }
        if (ts_.accept_punct('(')) {
            ScalarExpr e = additive();
            ts_.expect_punct(')', "')'");
            return e;
        }
        throw SyntaxError(t.offset, {"expression"});
    }

    TokenStream& ts_;
    std::span<const std::string> coords_;
};

double expect_number(TokenStream& ts) {
    int sign = 1;
    if (ts.accept_punct('-'))
        sign = -1;
    else
        ts.accept_punct('+');
    const Token& t = ts.peek();
    if (t.kind != TokKind::Number) throw SyntaxError(t.offset, {"number"});
    ts.next();
    return sign * t.number;
}

long expect_integer(TokenStream& ts) {
    int sign = 1;
    if (ts.accept_punct('-'))
        sign = -1;
    else
        ts.accept_punct('+');
    const Token& t = ts.peek();
    if (t.kind != TokKind::Number || !t.is_integer) throw SyntaxError(t.offset, {"integer"});
    ts.next();
    return sign * t.int_value;
}

std::string expect_ident(TokenStream& ts, const std::string& what) {
    const Token& t = ts.peek();
    if (t.kind != TokKind::Ident) throw SyntaxError(t.offset, {what});
    ts.next();
    return t.text;
}

/// Frame-field name "E<k>" (1-based in files) -> 0-based index.
int frame_index(const std::string& name, int d, std::size_t offset) {
    if (name.size() < 2 || name[0] != 'E')
        throw SyntaxError(offset, {"frame field name E1..E" + std::to_string(d)});
    int k = 0;
    auto [p, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), k);
    if (ec != std::errc() || p != name.data() + name.size() || k < 1 || k > d)
        throw SyntaxError(offset, {"frame field name E1..E" + std::to_string(d)});
    return k - 1;
}

} // namespace

ScalarExpr parse_expr(std::string_view source, std::span<const std::string> coord_names) {
    TokenStream ts(tokenize(source));
    ExprParser p(ts, coord_names);
    ScalarExpr e = p.parse();
    if (!ts.at_end()) throw SyntaxError(ts.peek().offset, {"operator or end of expression"});
    return e;
}

ModelSpec parse_model(std::string_view source) {
    TokenStream ts(tokenize(source));
    ModelSpec spec;
    spec.n = 0; // marks "not yet declared"

    bool have_name = false, have_coords = false, have_epsilon = false, have_xi = false;
    std::vector<bool> have_frame_row, have_phi_col;

    const auto require_layout = [&](const char* who) {
        if (spec.n < 1 || !have_coords)
            throw ModelValidationError(who, "n and coords must be declared first");
    };

    while (!ts.at_end()) {
        const Token key = ts.peek();
        const std::string kw = expect_ident(ts, "statement keyword");
        if (kw == "model") {
            const Token& t = ts.peek();
            if (t.kind != TokKind::String) throw SyntaxError(t.offset, {"quoted model name"});
            spec.name = t.text;
            ts.next();
            have_name = true;
        } else if (kw == "n") {
            ts.expect_punct('=', "'='");
            spec.n = static_cast<int>(expect_integer(ts));
            if (spec.n < 1) throw ModelValidationError("n", "must be >= 1");
            have_frame_row.assign(static_cast<std::size_t>(spec.dim()), false);
            have_phi_col.assign(static_cast<std::size_t>(spec.dim()), false);
            spec.frame.assign(static_cast<std::size_t>(spec.dim()), {});
            spec.phi_frame.assign(static_cast<std::size_t>(spec.dim()),
                                  std::vector<int>(static_cast<std::size_t>(spec.dim()), 0));
        } else if (kw == "coords") {
            if (spec.n < 1) throw ModelValidationError("coords", "n must be declared first");
            ts.expect_punct('=', "'='");
            spec.coords.clear();
            spec.coords.push_back(expect_ident(ts, "coordinate name"));
            while (ts.accept_punct(',')) spec.coords.push_back(expect_ident(ts, "coordinate name"));
            have_coords = true;
        } else if (kw == "frame") {
            require_layout("frame");
            const Token& nameTok = ts.peek();
            const int i = frame_index(expect_ident(ts, "frame field name"), spec.dim(),
                                      nameTok.offset);
            ts.expect_punct('=', "'='");
            ts.expect_punct('(', "'('");
            std::vector<ScalarExpr> row;
            ExprParser ep(ts, spec.coords);
            row.push_back(ep.parse());
            while (ts.accept_punct(',')) row.push_back(ep.parse());
            ts.expect_punct(')', "')'");
            if (static_cast<int>(row.size()) != spec.dim())
                throw ModelValidationError("frame",
                                           "frame row needs exactly " +
                                               std::to_string(spec.dim()) + " components");
            spec.frame[static_cast<std::size_t>(i)] = std::move(row);
            have_frame_row[static_cast<std::size_t>(i)] = true;
        } else if (kw == "epsilon") {
            require_layout("epsilon");
            ts.expect_punct('=', "'='");
            ts.expect_punct('(', "'('");
            spec.epsilon.clear();
            spec.epsilon.push_back(static_cast<int>(expect_integer(ts)));
            while (ts.accept_punct(',')) spec.epsilon.push_back(static_cast<int>(expect_integer(ts)));
            ts.expect_punct(')', "')'");
            have_epsilon = true;
        } else if (kw == "phi") {
            require_layout("phi");
            const Token& nameTok = ts.peek();
            const int i = frame_index(expect_ident(ts, "frame field name"), spec.dim(),
                                      nameTok.offset);
            ts.expect_punct('=', "'='");
            // "0" or a signed integer combination of frame fields.
            if (ts.peek().kind == TokKind::Number && ts.peek().is_integer &&
                ts.peek().int_value == 0) {
                ts.next();
            } else {
                bool first = true;
                for (;;) {
                    int sign = 1;
                    if (ts.accept_punct('-'))
                        sign = -1;
                    else if (!ts.accept_punct('+') && !first)
                        break;
                    int coeff = 1;
                    if (ts.peek().kind == TokKind::Number) {
                        coeff = static_cast<int>(expect_integer(ts));
                        ts.accept_punct('*');
                    }
                    const Token& tgt = ts.peek();
                    const int j = frame_index(expect_ident(ts, "frame field name"), spec.dim(),
                                              tgt.offset);
                    spec.phi_frame[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] +=
                        sign * coeff;
                    first = false;
                    if (ts.peek().kind == TokKind::Punct &&
                        (ts.peek().text[0] == '+' || ts.peek().text[0] == '-'))
                        continue;
                    break;
                }
            }
            have_phi_col[static_cast<std::size_t>(i)] = true;
        } else if (kw == "xi") {
            require_layout("xi");
            ts.expect_punct('=', "'='");
            const Token& nameTok = ts.peek();
            spec.xi_index = frame_index(expect_ident(ts, "frame field name"), spec.dim(),
                                        nameTok.offset);
            have_xi = true;
        } else if (kw == "pp_params") {
            ts.expect_punct('=', "'='");
            ts.expect_punct('(', "'('");
            spec.pp_a = expect_number(ts);
            ts.expect_punct(',', "','");
            spec.pp_b = expect_number(ts);
            ts.expect_punct(')', "')'");
        } else if (kw == "box") {
            require_layout("box");
            const Token& nameTok = ts.peek();
            const std::string coord = expect_ident(ts, "coordinate name");
            int ci = -1;
            for (std::size_t c = 0; c < spec.coords.size(); ++c)
                if (spec.coords[c] == coord) ci = static_cast<int>(c);
            if (ci < 0)
                throw UnknownIdentifierError(nameTok.offset, coord, spec.coords);
            if (expect_ident(ts, "'in'") != "in") throw SyntaxError(nameTok.offset, {"'in'"});
            ts.expect_punct('[', "'['");
            const double lo = expect_number(ts);
            ts.expect_punct(',', "','");
            const double hi = expect_number(ts);
            ts.expect_punct(']', "']'");
            if (spec.box_lo.empty()) {
                spec.box_lo.assign(spec.coords.size(), -1.0);
                spec.box_hi.assign(spec.coords.size(), 1.0);
            }
            spec.box_lo[static_cast<std::size_t>(ci)] = lo;
            spec.box_hi[static_cast<std::size_t>(ci)] = hi;
        } else {
            throw SyntaxError(key.offset, {"model", "n", "coords", "frame", "epsilon", "phi",
                                           "xi", "pp_params", "box"});
        }
        ts.expect_punct(';', "';'");
    }

    if (!have_name) throw ModelValidationError("model", "missing model name statement");
    if (spec.n < 1) throw ModelValidationError("n", "missing n statement");
    if (!have_coords) throw ModelValidationError("coords", "missing coords statement");
    for (std::size_t i = 0; i < have_frame_row.size(); ++i)
        if (!have_frame_row[i])
            throw ModelValidationError("frame", "missing frame row E" + std::to_string(i + 1));
    if (!have_epsilon) throw ModelValidationError("epsilon", "missing epsilon statement");
    for (std::size_t i = 0; i < have_phi_col.size(); ++i)
        if (!have_phi_col[i])
            throw ModelValidationError("phi", "missing phi action for E" + std::to_string(i + 1));
    if (!have_xi) throw ModelValidationError("xi", "missing xi statement");
    if (spec.box_lo.empty()) {
        spec.box_lo.assign(spec.coords.size(), -1.0);
        spec.box_hi.assign(spec.coords.size(), 1.0);
    }

    validate_model_spec(spec);
    return spec;
}

} // namespace tpsgeo
