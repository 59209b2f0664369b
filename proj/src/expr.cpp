// Copyright 2026 The geoecon developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "geoecon/expr.hpp"

#include <cctype>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace geoecon {

struct Expr::Node {
    enum class Op {
        constant,
        lambda_var,
        velocity_var,
        add,
        sub,
        mul,
        div,
        pow,
        neg,
        call
    };

    Op op;
    double value = 0.0;                  // constant
    std::size_t index = 0;               // variable index
    double (*fn)(double) = nullptr;      // call
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;

class Parser {
  public:
    explicit Parser(std::string_view text) : text_(text) {}

    NodePtr run() {
        NodePtr root = parse_sum();
        skip_space();
        if (pos_ != text_.size()) {
            fail("unexpected trailing input");
        }
        return root;
    }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& message) const {
        throw std::invalid_argument("expression: " + message + " at offset " +
                                    std::to_string(pos_));
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool consume(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    NodePtr make(Expr::Node node) { return std::make_shared<const Expr::Node>(std::move(node)); }

    NodePtr binary(Expr::Node::Op op, NodePtr lhs, NodePtr rhs) {
        Expr::Node node;
        node.op = op;
        node.lhs = std::move(lhs);
        node.rhs = std::move(rhs);
        return make(std::move(node));
    }

    NodePtr parse_sum() {
        NodePtr lhs = parse_product();
        while (true) {
            if (consume('+')) {
                lhs = binary(Expr::Node::Op::add, lhs, parse_product());
            } else if (consume('-')) {
                lhs = binary(Expr::Node::Op::sub, lhs, parse_product());
            } else {
                return lhs;
            }
        }
    }

    NodePtr parse_product() {
        NodePtr lhs = parse_unary();
        while (true) {
            if (consume('*')) {
                lhs = binary(Expr::Node::Op::mul, lhs, parse_unary());
            } else if (consume('/')) {
                lhs = binary(Expr::Node::Op::div, lhs, parse_unary());
            } else {
                return lhs;
            }
        }
    }

    NodePtr parse_unary() {
        if (consume('-')) {
            Expr::Node node;
            node.op = Expr::Node::Op::neg;
            node.lhs = parse_unary();
            return make(std::move(node));
        }
        if (consume('+')) {
            return parse_unary();
        }
        return parse_power();
    }

    NodePtr parse_power() {
        NodePtr base = parse_primary();
        if (consume('^')) {
            // right associative
            return binary(Expr::Node::Op::pow, base, parse_unary());
        }
        return base;
    }

    NodePtr parse_primary() {
        skip_space();
        if (pos_ >= text_.size()) {
            fail("unexpected end of input");
        }
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            NodePtr inner = parse_sum();
            if (!consume(')')) {
                fail("missing ')'");
            }
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            return parse_number();
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            return parse_ident();
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    NodePtr parse_number() {
        std::size_t used = 0;
        double value = 0.0;
        try {
            value = std::stod(std::string(text_.substr(pos_)), &used);
        } catch (const std::exception&) {
            fail("malformed number");
        }
        pos_ += used;
        Expr::Node node;
        node.op = Expr::Node::Op::constant;
        node.value = value;
        return make(std::move(node));
    }

    NodePtr parse_ident() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            ++pos_;
        }
        const std::string name(text_.substr(start, pos_ - start));

        if ((name[0] == 'l' || name[0] == 'v') && name.size() >= 2 &&
            std::isdigit(static_cast<unsigned char>(name[1])) && name.size() == 2) {
            Expr::Node node;
            node.op = name[0] == 'l' ? Expr::Node::Op::lambda_var : Expr::Node::Op::velocity_var;
            node.index = static_cast<std::size_t>(name[1] - '0');
            if (node.index < 1 || node.index > 9) {
                fail("variable index must be 1..9");
            }
            --node.index;
            return make(std::move(node));
        }
        if (name == "pi") {
            Expr::Node node;
            node.op = Expr::Node::Op::constant;
            node.value = 3.14159265358979323846;
            return make(std::move(node));
        }
        if (name == "e") {
            Expr::Node node;
            node.op = Expr::Node::Op::constant;
            node.value = 2.71828182845904523536;
            return make(std::move(node));
        }

        static const struct {
            const char* name;
            double (*fn)(double);
        } functions[] = {
            {"sin", std::sin},    {"cos", std::cos},   {"tan", std::tan},
            {"exp", std::exp},    {"log", std::log},   {"sqrt", std::sqrt},
            {"sinh", std::sinh},  {"cosh", std::cosh}, {"tanh", std::tanh},
            {"atanh", std::atanh}, {"abs", std::fabs},
        };
        for (const auto& f : functions) {
            if (name == f.name) {
                if (!consume('(')) {
                    fail("function '" + name + "' needs '('");
                }
                NodePtr arg = parse_sum();
                if (!consume(')')) {
                    fail("missing ')'");
                }
                Expr::Node node;
                node.op = Expr::Node::Op::call;
                node.fn = f.fn;
                node.lhs = std::move(arg);
                return make(std::move(node));
            }
        }
        fail("unknown identifier '" + name + "'");
    }
};

double eval_node(const Expr::Node& node, std::span<const double> lambda,
                 std::span<const double> velocity) {
    using Op = Expr::Node::Op;
    switch (node.op) {
        case Op::constant:
            return node.value;
        case Op::lambda_var:
            if (node.index >= lambda.size()) {
                throw std::invalid_argument("expression: lambda index out of range");
            }
            return lambda[node.index];
        case Op::velocity_var:
            if (node.index >= velocity.size()) {
                throw std::invalid_argument("expression: velocity index out of range");
            }
            return velocity[node.index];
        case Op::add:
            return eval_node(*node.lhs, lambda, velocity) + eval_node(*node.rhs, lambda, velocity);
        case Op::sub:
            return eval_node(*node.lhs, lambda, velocity) - eval_node(*node.rhs, lambda, velocity);
        case Op::mul:
            return eval_node(*node.lhs, lambda, velocity) * eval_node(*node.rhs, lambda, velocity);
        case Op::div:
            return eval_node(*node.lhs, lambda, velocity) / eval_node(*node.rhs, lambda, velocity);
        case Op::pow:
            return std::pow(eval_node(*node.lhs, lambda, velocity),
                            eval_node(*node.rhs, lambda, velocity));
        case Op::neg:
            return -eval_node(*node.lhs, lambda, velocity);
        case Op::call:
            return node.fn(eval_node(*node.lhs, lambda, velocity));
    }
    throw std::logic_error("expression: unreachable");
}

}  // namespace

Expr Expr::parse(std::string_view text) {
    return Expr(Parser(text).run());
}

double Expr::eval(std::span<const double> lambda, std::span<const double> velocity) const {
    return eval_node(*root_, lambda, velocity);
}

}  // namespace geoecon
