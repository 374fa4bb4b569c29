#pragma once

/**
 * @file expr.hpp
 * @brief Tiny expression language for closed-form sequence terms x_k.
 *
 * Grammar (numbers, variables `k` and `m`, functions `exp`, `ln`/`log`):
 *
 *   expr    := term (('+' | '-') term)*
 *   term    := unary (('*' | '/') unary)*
 *   unary   := '-' unary | power
 *   power   := primary ('^' unary)?
 *   primary := number | 'k' | 'm' | name '(' expr ')' | '(' expr ')'
 *
 * `log_value` returns ln x_k without forming x_k where it can: exp(E) maps to
 * E, products and quotients to sums and differences of logs, and A^B to
 * B * ln A. This keeps terms like exp(k^m) usable for large k.
 */

#include <cctype>
#include <cmath>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include "bigeo/error.hpp"

namespace bigeo {

class generator_expression {
public:
    static generator_expression parse(std::string_view text) {
        parser p{text, 0};
        generator_expression g;
        g.root_ = p.parse_expr();
        p.skip_space();
        if (p.pos != text.size()) p.fail("unexpected trailing input");
        g.text_ = std::string(text);
        return g;
    }

    const std::string& text() const noexcept { return text_; }

    double eval(double k, double m) const { return eval_node(*root_, k, m); }

    /// ln x_k; domain_error if the term is not a positive finite real.
    double log_value(double k, double m) const {
        const auto t = try_log(*root_, k, m);
        if (!t) {
            std::ostringstream os;
            os << "generator term " << text_ << " is not a positive real at k = " << k;
            throw domain_error(os.str());
        }
        return *t;
    }

    /// k -> ln x_k with m fixed.
    std::function<double(std::size_t)> as_generator(double m) const {
        return [self = *this, m](std::size_t k) { return self.log_value(static_cast<double>(k), m); };
    }

private:
    enum class op { number, var_k, var_m, add, sub, mul, div, pow, neg, exp, ln };

    struct node {
        op kind;
        double value = 0;
        std::shared_ptr<const node> lhs, rhs;
    };
    using node_ptr = std::shared_ptr<const node>;

    struct parser {
        std::string_view s;
        std::size_t pos;

        [[noreturn]] void fail(const std::string& why) const {
            throw parse_error("generator expression: " + why + " at column " + std::to_string(pos + 1));
        }

        void skip_space() {
            while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
        }

        bool accept(char c) {
            skip_space();
            if (pos < s.size() && s[pos] == c) {
                ++pos;
                return true;
            }
            return false;
        }

        static node_ptr make(op kind, node_ptr lhs = nullptr, node_ptr rhs = nullptr, double value = 0) {
            return std::make_shared<const node>(node{kind, value, std::move(lhs), std::move(rhs)});
        }

        node_ptr parse_expr() {
            auto lhs = parse_term();
            for (;;) {
                if (accept('+')) lhs = make(op::add, lhs, parse_term());
                else if (accept('-')) lhs = make(op::sub, lhs, parse_term());
                else return lhs;
            }
        }

        node_ptr parse_term() {
            auto lhs = parse_unary();
            for (;;) {
                if (accept('*')) lhs = make(op::mul, lhs, parse_unary());
                else if (accept('/')) lhs = make(op::div, lhs, parse_unary());
                else return lhs;
            }
        }

        node_ptr parse_unary() {
            if (accept('-')) return make(op::neg, parse_unary());
            return parse_power();
        }

        node_ptr parse_power() {
            auto base = parse_primary();
            if (accept('^')) return make(op::pow, base, parse_unary());
            return base;
        }

        node_ptr parse_primary() {
            skip_space();
            if (pos >= s.size()) fail("unexpected end of input");
            if (accept('(')) {
                auto inner = parse_expr();
                if (!accept(')')) fail("expected ')'");
                return inner;
            }
            const char c = s[pos];
            if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
                const std::string rest(s.substr(pos));
                std::size_t used = 0;
                double v = 0;
                try {
                    v = std::stod(rest, &used);
                } catch (const std::exception&) {
                    fail("malformed number");
                }
                pos += used;
                return make(op::number, nullptr, nullptr, v);
            }
            if (std::isalpha(static_cast<unsigned char>(c))) {
                const std::size_t start = pos;
                while (pos < s.size() && std::isalnum(static_cast<unsigned char>(s[pos]))) ++pos;
                const std::string_view name = s.substr(start, pos - start);
                if (name == "k") return make(op::var_k);
                if (name == "m") return make(op::var_m);
                if (name == "e") return make(op::number, nullptr, nullptr, std::exp(1.0));
                op fn;
                if (name == "exp") fn = op::exp;
                else if (name == "ln" || name == "log") fn = op::ln;
                else {
                    pos = start;
                    fail("unknown name '" + std::string(name) + "'");
                }
                if (!accept('(')) fail("expected '(' after " + std::string(name));
                auto arg = parse_expr();
                if (!accept(')')) fail("expected ')'");
                return make(fn, arg);
            }
            fail(std::string("unexpected character '") + c + "'");
        }
    };

    static double eval_node(const node& n, double k, double m) {
        switch (n.kind) {
        case op::number: return n.value;
        case op::var_k: return k;
        case op::var_m: return m;
        case op::add: return eval_node(*n.lhs, k, m) + eval_node(*n.rhs, k, m);
        case op::sub: return eval_node(*n.lhs, k, m) - eval_node(*n.rhs, k, m);
        case op::mul: return eval_node(*n.lhs, k, m) * eval_node(*n.rhs, k, m);
        case op::div: return eval_node(*n.lhs, k, m) / eval_node(*n.rhs, k, m);
        case op::pow: return std::pow(eval_node(*n.lhs, k, m), eval_node(*n.rhs, k, m));
        case op::neg: return -eval_node(*n.lhs, k, m);
        case op::exp: return std::exp(eval_node(*n.lhs, k, m));
        case op::ln: return std::log(eval_node(*n.lhs, k, m));
        }
        return std::nan("");
    }

    static std::optional<double> finite(double v) {
        return std::isfinite(v) ? std::optional<double>(v) : std::nullopt;
    }

    static std::optional<double> try_log(const node& n, double k, double m) {
        std::optional<double> structural;
        switch (n.kind) {
        case op::exp: structural = finite(eval_node(*n.lhs, k, m)); break;
        case op::mul:
        case op::div: {
            const auto a = try_log(*n.lhs, k, m);
            const auto b = try_log(*n.rhs, k, m);
            if (a && b) structural = finite(n.kind == op::mul ? *a + *b : *a - *b);
            break;
        }
        case op::pow: {
            const auto a = try_log(*n.lhs, k, m);
            if (a) structural = finite(eval_node(*n.rhs, k, m) * *a);
            break;
        }
        default: break;
        }
        if (structural) return structural;
        const double v = eval_node(n, k, m);
        if (!(v > 0) || !std::isfinite(v)) return std::nullopt;
        return std::log(v);
    }

    node_ptr root_;
    std::string text_;
};

} // namespace bigeo
