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

#include "fuzzcalc/crisp_expr.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fuzzcalc/error.hpp"
#include "fuzzcalc/fuzzy_number.hpp"

namespace fuzzcalc {

struct CrispExpr::Node {
    NodeKind kind;
    double value = 0.0;
    int var = 0;
    int exponent = 0;
    std::shared_ptr<const Node> a, b;
};

namespace {

double ipow(double base, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i)
        r *= base;
    return r;
}

// ^ > * > binary +/-; atoms rank highest.
int precedence(NodeKind k) {
    switch (k) {
    case NodeKind::Add:
    case NodeKind::Sub:
        return 1;
    case NodeKind::Mul:
        return 2;
    case NodeKind::Pow:
        return 3;
    default:
        return 4;
    }
}

} // namespace

CrispExpr CrispExpr::constant(double v) {
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::Constant;
    n->value = v;
    return CrispExpr(std::move(n));
}

CrispExpr CrispExpr::variable(int index) {
    if (index < 1)
        throw Error(ErrorCode::InvalidArgument, "variable index must be positive");
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::Variable;
    n->var = index;
    return CrispExpr(std::move(n));
}

static CrispExpr::Node binary_node(NodeKind k) {
    CrispExpr::Node n;
    n.kind = k;
    return n;
}

CrispExpr CrispExpr::add(CrispExpr l, CrispExpr r) {
    auto n = std::make_shared<Node>(binary_node(NodeKind::Add));
    n->a = l.node_;
    n->b = r.node_;
    return CrispExpr(std::move(n));
}

CrispExpr CrispExpr::sub(CrispExpr l, CrispExpr r) {
    auto n = std::make_shared<Node>(binary_node(NodeKind::Sub));
    n->a = l.node_;
    n->b = r.node_;
    return CrispExpr(std::move(n));
}

CrispExpr CrispExpr::mul(CrispExpr l, CrispExpr r) {
    auto n = std::make_shared<Node>(binary_node(NodeKind::Mul));
    n->a = l.node_;
    n->b = r.node_;
    return CrispExpr(std::move(n));
}

CrispExpr CrispExpr::pow(CrispExpr base, int exponent) {
    if (exponent < 0)
        throw Error(ErrorCode::InvalidArgument, "powers are restricted to nonnegative exponents");
    auto n = std::make_shared<Node>(binary_node(NodeKind::Pow));
    n->a = base.node_;
    n->exponent = exponent;
    return CrispExpr(std::move(n));
}

CrispExpr CrispExpr::sin(CrispExpr a) {
    auto n = std::make_shared<Node>(binary_node(NodeKind::Sin));
    n->a = a.node_;
    return CrispExpr(std::move(n));
}

CrispExpr CrispExpr::cos(CrispExpr a) {
    auto n = std::make_shared<Node>(binary_node(NodeKind::Cos));
    n->a = a.node_;
    return CrispExpr(std::move(n));
}

CrispExpr CrispExpr::exp(CrispExpr a) {
    auto n = std::make_shared<Node>(binary_node(NodeKind::Exp));
    n->a = a.node_;
    return CrispExpr(std::move(n));
}

NodeKind CrispExpr::kind() const { return node_->kind; }
double CrispExpr::constant_value() const { return node_->value; }
int CrispExpr::variable_index() const { return node_->var; }
int CrispExpr::exponent() const { return node_->exponent; }

CrispExpr CrispExpr::child(int i) const { return CrispExpr(i == 0 ? node_->a : node_->b); }

double CrispExpr::eval(std::span<const double> x) const {
    const Node& n = *node_;
    switch (n.kind) {
    case NodeKind::Constant:
        return n.value;
    case NodeKind::Variable:
        if (n.var > static_cast<int>(x.size()))
            throw Error(ErrorCode::ArityError, "evaluation point has too few coordinates");
        return x[static_cast<std::size_t>(n.var - 1)];
    case NodeKind::Add:
        return CrispExpr(n.a).eval(x) + CrispExpr(n.b).eval(x);
    case NodeKind::Sub:
        return CrispExpr(n.a).eval(x) - CrispExpr(n.b).eval(x);
    case NodeKind::Mul:
        return CrispExpr(n.a).eval(x) * CrispExpr(n.b).eval(x);
    case NodeKind::Pow:
        return ipow(CrispExpr(n.a).eval(x), n.exponent);
    case NodeKind::Sin:
        return std::sin(CrispExpr(n.a).eval(x));
    case NodeKind::Cos:
        return std::cos(CrispExpr(n.a).eval(x));
    case NodeKind::Exp:
        return std::exp(CrispExpr(n.a).eval(x));
    }
    return 0.0;
}

CrispExpr CrispExpr::derivative(int var) const {
    const Node& n = *node_;
    switch (n.kind) {
    case NodeKind::Constant:
        return constant(0.0);
    case NodeKind::Variable:
        return constant(n.var == var ? 1.0 : 0.0);
    case NodeKind::Add:
        return add(CrispExpr(n.a).derivative(var), CrispExpr(n.b).derivative(var)).folded();
    case NodeKind::Sub:
        return sub(CrispExpr(n.a).derivative(var), CrispExpr(n.b).derivative(var)).folded();
    case NodeKind::Mul: {
        CrispExpr l(n.a), r(n.b);
        return add(mul(l.derivative(var), r), mul(l, r.derivative(var))).folded();
    }
    case NodeKind::Pow: {
        if (n.exponent == 0)
            return constant(0.0);
        CrispExpr base(n.a);
        CrispExpr outer = mul(constant(static_cast<double>(n.exponent)),
                              n.exponent == 1 ? constant(1.0) : pow(base, n.exponent - 1));
        return mul(outer, base.derivative(var)).folded();
    }
    case NodeKind::Sin:
        return mul(cos(CrispExpr(n.a)), CrispExpr(n.a).derivative(var)).folded();
    case NodeKind::Cos:
        return mul(mul(constant(-1.0), sin(CrispExpr(n.a))), CrispExpr(n.a).derivative(var))
            .folded();
    case NodeKind::Exp:
        return mul(exp(CrispExpr(n.a)), CrispExpr(n.a).derivative(var)).folded();
    }
    return constant(0.0);
}

CrispExpr CrispExpr::folded() const {
    const Node& n = *node_;
    switch (n.kind) {
    case NodeKind::Constant:
    case NodeKind::Variable:
        return *this;
    case NodeKind::Add:
    case NodeKind::Sub:
    case NodeKind::Mul: {
        CrispExpr l = CrispExpr(n.a).folded();
        CrispExpr r = CrispExpr(n.b).folded();
        const bool lc = l.kind() == NodeKind::Constant;
        const bool rc = r.kind() == NodeKind::Constant;
        if (lc && rc) {
            double v = n.kind == NodeKind::Add   ? l.constant_value() + r.constant_value()
                       : n.kind == NodeKind::Sub ? l.constant_value() - r.constant_value()
                                                 : l.constant_value() * r.constant_value();
            return constant(v);
        }
        if (n.kind == NodeKind::Add) {
            if (lc && l.constant_value() == 0.0)
                return r;
            if (rc && r.constant_value() == 0.0)
                return l;
        }
        if (n.kind == NodeKind::Sub && rc && r.constant_value() == 0.0)
            return l;
        if (n.kind == NodeKind::Mul) {
            if ((lc && l.constant_value() == 0.0) || (rc && r.constant_value() == 0.0))
                return constant(0.0);
            if (lc && l.constant_value() == 1.0)
                return r;
            if (rc && r.constant_value() == 1.0)
                return l;
        }
        if (n.kind == NodeKind::Add)
            return add(l, r);
        if (n.kind == NodeKind::Sub)
            return sub(l, r);
        return mul(l, r);
    }
    case NodeKind::Pow: {
        CrispExpr base = CrispExpr(n.a).folded();
        if (n.exponent == 0)
            return constant(1.0);
        if (n.exponent == 1)
            return base;
        if (base.kind() == NodeKind::Constant)
            return constant(ipow(base.constant_value(), n.exponent));
        return pow(base, n.exponent);
    }
    case NodeKind::Sin:
    case NodeKind::Cos:
    case NodeKind::Exp: {
        CrispExpr a = CrispExpr(n.a).folded();
        if (a.kind() == NodeKind::Constant) {
            double v = a.constant_value();
            double r = n.kind == NodeKind::Sin   ? std::sin(v)
                       : n.kind == NodeKind::Cos ? std::cos(v)
                                                 : std::exp(v);
            return constant(r);
        }
        if (n.kind == NodeKind::Sin)
            return sin(a);
        if (n.kind == NodeKind::Cos)
            return cos(a);
        return exp(a);
    }
    }
    return *this;
}

int CrispExpr::max_variable() const {
    const Node& n = *node_;
    switch (n.kind) {
    case NodeKind::Constant:
        return 0;
    case NodeKind::Variable:
        return n.var;
    case NodeKind::Add:
    case NodeKind::Sub:
    case NodeKind::Mul:
        return std::max(CrispExpr(n.a).max_variable(), CrispExpr(n.b).max_variable());
    case NodeKind::Pow:
    case NodeKind::Sin:
    case NodeKind::Cos:
    case NodeKind::Exp:
        return CrispExpr(n.a).max_variable();
    }
    return 0;
}

bool CrispExpr::is_zero() const {
    return node_->kind == NodeKind::Constant && node_->value == 0.0;
}

bool CrispExpr::is_one() const {
    return node_->kind == NodeKind::Constant && node_->value == 1.0;
}

bool CrispExpr::structurally_equal(const CrispExpr& other) const {
    const Node& m = *node_;
    const Node& n = *other.node_;
    if (m.kind != n.kind)
        return false;
    switch (m.kind) {
    case NodeKind::Constant:
        return m.value == n.value;
    case NodeKind::Variable:
        return m.var == n.var;
    case NodeKind::Pow:
        return m.exponent == n.exponent && CrispExpr(m.a).structurally_equal(CrispExpr(n.a));
    case NodeKind::Sin:
    case NodeKind::Cos:
    case NodeKind::Exp:
        return CrispExpr(m.a).structurally_equal(CrispExpr(n.a));
    default:
        return CrispExpr(m.a).structurally_equal(CrispExpr(n.a)) &&
               CrispExpr(m.b).structurally_equal(CrispExpr(n.b));
    }
}

namespace {

void print(const CrispExpr& e, std::ostream& os);

// Binary operators are left-associative, so a right child of equal
// precedence needs parentheses to round-trip structurally.
void print_child(const CrispExpr& c, int parent_prec, bool right, std::ostream& os) {
    int p = precedence(c.kind());
    bool negative_const = c.kind() == NodeKind::Constant && c.constant_value() < 0.0;
    bool parens = p < parent_prec || (right && p == parent_prec) ||
                  (negative_const && parent_prec > 1);
    if (parens)
        os << "(";
    print(c, os);
    if (parens)
        os << ")";
}

void print(const CrispExpr& e, std::ostream& os) {
    switch (e.kind()) {
    case NodeKind::Constant:
        os << format_double(e.constant_value());
        break;
    case NodeKind::Variable:
        os << "x" << e.variable_index();
        break;
    case NodeKind::Add:
        print_child(e.child(0), 1, false, os);
        os << " + ";
        print_child(e.child(1), 1, true, os);
        break;
    case NodeKind::Sub:
        print_child(e.child(0), 1, false, os);
        os << " - ";
        print_child(e.child(1), 1, true, os);
        break;
    case NodeKind::Mul:
        print_child(e.child(0), 2, false, os);
        os << " * ";
        print_child(e.child(1), 2, true, os);
        break;
    case NodeKind::Pow:
        print_child(e.child(0), 4, false, os);
        os << "^" << e.exponent();
        break;
    case NodeKind::Sin:
        os << "sin(";
        print(e.child(0), os);
        os << ")";
        break;
    case NodeKind::Cos:
        os << "cos(";
        print(e.child(0), os);
        os << ")";
        break;
    case NodeKind::Exp:
        os << "exp(";
        print(e.child(0), os);
        os << ")";
        break;
    }
}

} // namespace

std::string CrispExpr::to_string() const {
    std::ostringstream os;
    print(*this, os);
    return os.str();
}

} // namespace fuzzcalc
