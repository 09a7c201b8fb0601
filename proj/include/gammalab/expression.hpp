#pragma once

// Small expression language shared by the variety sampler, the classifier
// and the decay probe: complex literals (suffix i), named parameters,
// + - * / ^ with integer exponents, parentheses and sqrt().

#include <cctype>
#include <complex>
#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "gammalab/errors.hpp"

namespace gammalab {

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    enum class Kind { number, variable, add, sub, mul, div, pow, neg, sqrt_fn };
    Kind kind;
    std::complex<double> value{0.0, 0.0};  // number
    int var_index = -1;                    // variable
    std::string var_name;
    ExprPtr a, b;
    long exponent = 0;  // pow
};

namespace detail {

struct ExprParser {
    std::string s;
    std::vector<std::string> vars;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw argument_error("expression parse: " + msg + " near '" + s.substr(i, 16) + "'");
    }

    ExprPtr make(ExprNode n) { return std::make_shared<const ExprNode>(std::move(n)); }

    ExprPtr parse_number() {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() &&
               (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.')) ++i;
        if (i < s.size() && (s[i] == 'e' || s[i] == 'E') &&
            i + 1 < s.size() &&
            (std::isdigit(static_cast<unsigned char>(s[i + 1])) || s[i + 1] == '-' ||
             s[i + 1] == '+')) {
            i += 2;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        }
        double v = 1.0;
        if (i > start) v = std::stod(s.substr(start, i - start));
        bool imag = false;
        if (i < s.size() && s[i] == 'i') {
            imag = true;
            ++i;
        }
        if (i == start && !imag) fail("number expected");
        ExprNode n;
        n.kind = ExprNode::Kind::number;
        n.value = imag ? std::complex<double>(0.0, v) : std::complex<double>(v, 0.0);
        return make(std::move(n));
    }

    ExprPtr parse_primary() {
        skip_ws();
        if (i >= s.size()) fail("unexpected end of input");
        if (eat('(')) {
            ExprPtr e = parse_sum();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (eat('-')) {
            ExprNode n;
            n.kind = ExprNode::Kind::neg;
            n.a = parse_factor();
            return make(std::move(n));
        }
        if (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.' ||
            (s[i] == 'i' && !std::isalnum(static_cast<unsigned char>(
                                i + 1 < s.size() ? s[i + 1] : ' '))))
            return parse_number();
        if (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_') {
            std::size_t start = i;
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) ||
                                    s[i] == '_')) ++i;
            std::string name = s.substr(start, i - start);
            if (name == "sqrt") {
                if (!eat('(')) fail("expected '(' after sqrt");
                ExprNode n;
                n.kind = ExprNode::Kind::sqrt_fn;
                n.a = parse_sum();
                if (!eat(')')) fail("expected ')'");
                return make(std::move(n));
            }
            if (name == "i") {
                ExprNode n;
                n.kind = ExprNode::Kind::number;
                n.value = {0.0, 1.0};
                return make(std::move(n));
            }
            for (std::size_t v = 0; v < vars.size(); ++v)
                if (vars[v] == name) {
                    ExprNode n;
                    n.kind = ExprNode::Kind::variable;
                    n.var_index = static_cast<int>(v);
                    n.var_name = name;
                    return make(std::move(n));
                }
            fail("unknown identifier '" + name + "'");
        }
        fail("unexpected character");
    }

    ExprPtr parse_factor() {
        ExprPtr base = parse_primary();
        skip_ws();
        if (eat('^')) {
            skip_ws();
            bool negexp = eat('-');
            std::size_t start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (i == start) fail("integer exponent expected after '^'");
            long e = std::stol(s.substr(start, i - start));
            ExprNode n;
            n.kind = ExprNode::Kind::pow;
            n.a = base;
            n.exponent = negexp ? -e : e;
            return make(std::move(n));
        }
        return base;
    }

    ExprPtr parse_term() {
        ExprPtr acc = parse_factor();
        while (true) {
            skip_ws();
            if (eat('*')) {
                ExprNode n;
                n.kind = ExprNode::Kind::mul;
                n.a = acc;
                n.b = parse_factor();
                acc = make(std::move(n));
            } else if (eat('/')) {
                ExprNode n;
                n.kind = ExprNode::Kind::div;
                n.a = acc;
                n.b = parse_factor();
                acc = make(std::move(n));
            } else {
                break;
            }
        }
        return acc;
    }

    ExprPtr parse_sum() {
        ExprPtr acc = parse_term();
        while (true) {
            skip_ws();
            if (eat('+')) {
                ExprNode n;
                n.kind = ExprNode::Kind::add;
                n.a = acc;
                n.b = parse_term();
                acc = make(std::move(n));
            } else if (i < s.size() && s[i] == '-') {
                ++i;
                ExprNode n;
                n.kind = ExprNode::Kind::sub;
                n.a = acc;
                n.b = parse_term();
                acc = make(std::move(n));
            } else {
                break;
            }
        }
        return acc;
    }

    ExprPtr parse_all() {
        ExprPtr e = parse_sum();
        skip_ws();
        if (i != s.size()) fail("trailing input");
        return e;
    }
};

}  // namespace detail

inline ExprPtr parse_expression(const std::string& text,
                                const std::vector<std::string>& variables) {
    detail::ExprParser p;
    p.s = text;
    p.vars = variables;
    return p.parse_all();
}

inline std::complex<double> eval_expr(const ExprPtr& e,
                                      std::span<const std::complex<double>> args) {
    using K = ExprNode::Kind;
    switch (e->kind) {
        case K::number: return e->value;
        case K::variable:
            if (e->var_index < 0 || static_cast<std::size_t>(e->var_index) >= args.size())
                throw argument_error("eval_expr: parameter '" + e->var_name + "' unbound");
            return args[static_cast<std::size_t>(e->var_index)];
        case K::add: return eval_expr(e->a, args) + eval_expr(e->b, args);
        case K::sub: return eval_expr(e->a, args) - eval_expr(e->b, args);
        case K::mul: return eval_expr(e->a, args) * eval_expr(e->b, args);
        case K::div: {
            const std::complex<double> d = eval_expr(e->b, args);
            if (d == std::complex<double>(0.0, 0.0))
                throw domain_error("eval_expr: division by zero");
            return eval_expr(e->a, args) / d;
        }
        case K::pow: {
            const std::complex<double> b = eval_expr(e->a, args);
            if (e->exponent < 0) {
                if (b == std::complex<double>(0.0, 0.0))
                    throw domain_error("eval_expr: negative power of zero");
                return std::pow(1.0 / b, static_cast<double>(-e->exponent));
            }
            std::complex<double> acc(1.0, 0.0);
            for (long k = 0; k < e->exponent; ++k) acc *= b;
            return acc;
        }
        case K::neg: return -eval_expr(e->a, args);
        case K::sqrt_fn: return std::sqrt(eval_expr(e->a, args));
    }
    throw error("eval_expr: unreachable");
}

// --------------------------------------------------------------------------
//  sparse multivariate polynomials over C (for implicit equations)
// --------------------------------------------------------------------------

struct MultiPoly {
    int nvars = 0;
    std::map<std::vector<int>, std::complex<double>> coeffs;  // multi-index -> coefficient

    static MultiPoly constant(int n, std::complex<double> c) {
        MultiPoly p;
        p.nvars = n;
        if (c != std::complex<double>(0.0, 0.0)) p.coeffs[std::vector<int>(n, 0)] = c;
        return p;
    }
    static MultiPoly var(int n, int index) {
        MultiPoly p;
        p.nvars = n;
        std::vector<int> mi(n, 0);
        mi[index] = 1;
        p.coeffs[mi] = {1.0, 0.0};
        return p;
    }
    void prune(double tol = 0.0) {
        for (auto it = coeffs.begin(); it != coeffs.end();)
            it = (std::abs(it->second) <= tol) ? coeffs.erase(it) : std::next(it);
    }
    MultiPoly operator+(const MultiPoly& o) const {
        MultiPoly out = *this;
        for (const auto& [mi, c] : o.coeffs) out.coeffs[mi] += c;
        out.prune();
        return out;
    }
    MultiPoly operator-(const MultiPoly& o) const {
        MultiPoly out = *this;
        for (const auto& [mi, c] : o.coeffs) out.coeffs[mi] -= c;
        out.prune();
        return out;
    }
    MultiPoly operator*(const MultiPoly& o) const {
        MultiPoly out;
        out.nvars = nvars;
        for (const auto& [a, ca] : coeffs)
            for (const auto& [b, cb] : o.coeffs) {
                std::vector<int> mi(nvars);
                for (int k = 0; k < nvars; ++k) mi[k] = a[k] + b[k];
                out.coeffs[mi] += ca * cb;
            }
        out.prune();
        return out;
    }
    bool is_constant() const {
        return coeffs.empty() ||
               (coeffs.size() == 1 &&
                coeffs.begin()->first == std::vector<int>(nvars, 0));
    }
    std::complex<double> constant_value() const {
        if (coeffs.empty()) return {0.0, 0.0};
        return coeffs.begin()->second;
    }
    int total_degree() const {
        int d = 0;
        for (const auto& [mi, c] : coeffs) {
            int t = 0;
            for (int e : mi) t += e;
            d = std::max(d, t);
        }
        return d;
    }
};

namespace detail {

inline MultiPoly expr_to_poly(const ExprPtr& e, int nvars) {
    using K = ExprNode::Kind;
    switch (e->kind) {
        case K::number: return MultiPoly::constant(nvars, e->value);
        case K::variable: return MultiPoly::var(nvars, e->var_index);
        case K::add: return expr_to_poly(e->a, nvars) + expr_to_poly(e->b, nvars);
        case K::sub: return expr_to_poly(e->a, nvars) - expr_to_poly(e->b, nvars);
        case K::mul: return expr_to_poly(e->a, nvars) * expr_to_poly(e->b, nvars);
        case K::div: {
            MultiPoly d = expr_to_poly(e->b, nvars);
            if (!d.is_constant() || d.constant_value() == std::complex<double>(0.0, 0.0))
                throw argument_error("polynomial: division only by nonzero constants");
            MultiPoly n = expr_to_poly(e->a, nvars);
            for (auto& [mi, c] : n.coeffs) c /= d.constant_value();
            return n;
        }
        case K::pow: {
            if (e->exponent < 0)
                throw argument_error("polynomial: negative exponents not allowed");
            MultiPoly b = expr_to_poly(e->a, nvars);
            MultiPoly acc = MultiPoly::constant(nvars, {1.0, 0.0});
            for (long k = 0; k < e->exponent; ++k) acc = acc * b;
            return acc;
        }
        case K::neg: {
            MultiPoly p = expr_to_poly(e->a, nvars);
            for (auto& [mi, c] : p.coeffs) c = -c;
            return p;
        }
        case K::sqrt_fn:
            throw argument_error("polynomial: sqrt is not polynomial");
    }
    throw error("expr_to_poly: unreachable");
}

}  // namespace detail

/// Parse a polynomial in X1..Xn (or x1..xn); n is inferred from the largest
/// index when nvars == 0.
inline MultiPoly parse_multipoly(const std::string& text, int nvars = 0) {
    int max_index = nvars;
    for (std::size_t i = 0; i + 1 < text.size(); ++i)
        if ((text[i] == 'X' || text[i] == 'x') &&
            std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
            int idx = 0;
            std::size_t j = i + 1;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
                idx = idx * 10 + (text[j++] - '0');
            max_index = std::max(max_index, idx);
        }
    if (max_index == 0) throw argument_error("parse_multipoly: no variables X1.. found");
    std::vector<std::string> vars;
    for (int k = 1; k <= max_index; ++k) {
        vars.push_back("X" + std::to_string(k));
        vars.push_back("x" + std::to_string(k));
    }
    ExprPtr ast = parse_expression(text, vars);
    // X_k and x_k share an index: fold the doubled variable list down
    struct Folder {
        static MultiPoly run(const ExprPtr& e, int nv) {
            return detail::expr_to_poly(e, nv);
        }
    };
    // remap doubled indices (2k, 2k+1) -> k
    std::vector<int> remap(vars.size());
    for (std::size_t v = 0; v < vars.size(); ++v) remap[v] = static_cast<int>(v / 2);
    // rebuild with remapped variable indices
    std::function<ExprPtr(const ExprPtr&)> rewrite = [&](const ExprPtr& e) -> ExprPtr {
        ExprNode n = *e;
        if (n.kind == ExprNode::Kind::variable) n.var_index = remap[n.var_index];
        if (n.a) n.a = rewrite(n.a);
        if (n.b) n.b = rewrite(n.b);
        return std::make_shared<const ExprNode>(std::move(n));
    };
    return Folder::run(rewrite(ast), max_index);
}

}  // namespace gammalab
