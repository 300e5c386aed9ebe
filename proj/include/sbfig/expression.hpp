/**
 * sbfig - fixed-figure geometry on S_b-metric spaces
 *
 * Copyright (c) 2026
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 *
 */
#pragma once

// Tiny arithmetic evaluator for numeric literals in input files and flags,
// so that values like "sqrt(2)", "-7/3" or "1+5^(1/3)" are exact to double precision.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' unary)?
//   primary := number | 'pi' | name '(' expr ')' | '(' expr ')'

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>
#include <string_view>

#include "sbfig/core.hpp"

namespace sbfig {

class ExpressionParser {
public:
    explicit ExpressionParser(std::string_view text) : text_(text) {}

    double parse() {
        const double v = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw InputError("cannot evaluate \"" + std::string(text_) + "\" at position " + std::to_string(pos_) + ": " + what);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    double expr() {
        double v = term();
        for (;;) {
            if (eat('+')) v += term();
            else if (eat('-')) v -= term();
            else return v;
        }
    }

    double term() {
        double v = unary();
        for (;;) {
            if (eat('*')) v *= unary();
            else if (eat('/')) v /= unary();
            else return v;
        }
    }

    double unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    double power() {
        const double base = primary();
        if (eat('^')) return std::pow(base, unary());
        return base;
    }

    double primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        if (eat('(')) {
            const double v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c))) return call();
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    double number() {
        const std::string rest(text_.substr(pos_));
        char* end = nullptr;
        const double v = std::strtod(rest.c_str(), &end);
        if (end == rest.c_str()) fail("malformed number");
        pos_ += static_cast<std::size_t>(end - rest.c_str());
        return v;
    }

    double call() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        const std::string name(text_.substr(start, pos_ - start));
        if (name == "pi") return std::numbers::pi;
        if (!eat('(')) fail("expected '(' after " + name);
        const double arg = expr();
        if (!eat(')')) fail("expected ')'");
        if (name == "sqrt") return std::sqrt(arg);
        if (name == "cbrt") return std::cbrt(arg);
        if (name == "exp") return std::exp(arg);
        if (name == "log") return std::log(arg);
        if (name == "abs") return std::fabs(arg);
        pos_ = start;
        fail("unknown function '" + name + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

inline double evaluate_expression(std::string_view text) {
    const double v = ExpressionParser(text).parse();
    if (!std::isfinite(v)) throw InputError("expression \"" + std::string(text) + "\" does not evaluate to a finite real");
    return v;
}

}  // namespace sbfig
