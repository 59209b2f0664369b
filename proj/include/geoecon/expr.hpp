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

#ifndef GEOECON_EXPR_HPP
#define GEOECON_EXPR_HPP

#include <memory>
#include <span>
#include <string_view>

namespace geoecon {

/// Small arithmetic expression evaluator for provider configuration.
/// Supports + - * / ^, parentheses, the usual unary functions, the
/// constants pi and e, and variables l1..l9 (forcing coefficients) and
/// v1..v9 (their velocities).
class Expr {
  public:
    static Expr parse(std::string_view text);

    double eval(std::span<const double> lambda, std::span<const double> velocity = {}) const;

  private:
    struct Node;
    explicit Expr(std::shared_ptr<const Node> root) : root_(std::move(root)) {}
    std::shared_ptr<const Node> root_;
};

}  // namespace geoecon

#endif
