/*   Copyright 2026 The fuzzcalc authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
 */

#ifndef FUZZCALC_CRISP_EXPR_HPP
#define FUZZCALC_CRISP_EXPR_HPP

#include <memory>
#include <span>
#include <string>

namespace fuzzcalc {

enum class NodeKind { Constant, Variable, Add, Sub, Mul, Pow, Sin, Cos, Exp };

/// Immutable AST of a real-valued expression over variables x1..xn with
/// +, -, *, nonnegative integer powers and sin/cos/exp. Shared-structure
/// value type; cheap to copy.
class CrispExpr {
public:
    static CrispExpr constant(double v);
    static CrispExpr variable(int index); // 1-based
    static CrispExpr add(CrispExpr l, CrispExpr r);
    static CrispExpr sub(CrispExpr l, CrispExpr r);
    static CrispExpr mul(CrispExpr l, CrispExpr r);
    static CrispExpr pow(CrispExpr base, int exponent); // exponent >= 0
    static CrispExpr sin(CrispExpr a);
    static CrispExpr cos(CrispExpr a);
    static CrispExpr exp(CrispExpr a);

    NodeKind kind() const;
    double constant_value() const;
    int variable_index() const;
    int exponent() const;
    CrispExpr child(int i) const; // 0 = left/only, 1 = right

    double eval(std::span<const double> x) const;

    /// Exact symbolic partial derivative with respect to x_var,
    /// constant-folded. Folding is the only simplification so the
    /// user's term grouping is preserved.
    CrispExpr derivative(int var) const;

    /// Constant folding (idempotent).
    CrispExpr folded() const;

    /// Largest variable index appearing in the tree (0 if none).
    int max_variable() const;

    /// True when no variable appears (the expression is a constant
    /// function regardless of folding).
    bool is_constant_function() const { return max_variable() == 0; }

    /// True for the literal constant 0 / 1.
    bool is_zero() const;
    bool is_one() const;

    bool structurally_equal(const CrispExpr& other) const;

    /// Round-trippable text; parse(to_string(e)) is structurally equal
    /// to e.
    std::string to_string() const;

    struct Node; // opaque; defined in the implementation

private:
    explicit CrispExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

} // namespace fuzzcalc

#endif
