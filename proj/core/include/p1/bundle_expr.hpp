#pragma once

// A small expression language for sheaf summaries on P^1.
//
//   expr   := term { "+" term } ;
//   term   := factor { "*" factor } ;
//   factor := atom [ ("^" int) | ("**" int) ] ;
//   atom   := "O" "(" int ")" | "T" "(" uint ")" | "0" | ident
//           | func "(" expr ")" | "(" expr ")" ;
//   func   := "Sym" uint | "Wedge" uint | "Dual" | "Det" | "Twist" int ;
//
// "+" is direct sum, "*" is tensor product (binding tighter than "+"),
// "^m" is the m-fold direct sum and "**m" the m-th tensor power, with a
// negative m meaning the dual of the |m|-th power. "0" is the zero sheaf.

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "p1/splitting.hpp"

namespace p1::expr {

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Zero {};
struct Line {
  Integer degree;
};
struct Torsion {
  Integer length;
};
struct Var {
  std::string name;
};
struct Sum {
  NodePtr left, right;
};
struct Tensor {
  NodePtr left, right;
};
struct Sym {
  std::size_t n;
  NodePtr child;
};
struct Wedge {
  std::size_t k;
  NodePtr child;
};
struct Dual {
  NodePtr child;
};
struct Det {
  NodePtr child;
};
struct Twist {
  NodePtr child;
  Integer d;
};
/// m-fold direct sum.
struct Power {
  NodePtr child;
  std::size_t m;
};
/// m-fold tensor power; negative m is the dual of the |m|-th power.
struct TensorPower {
  NodePtr child;
  Integer m;
};

struct Node {
  std::variant<Zero, Line, Torsion, Var, Sum, Tensor, Sym, Wedge, Dual, Det, Twist, Power, TensorPower> v;
};

/// Immutable expression tree with structural equality.
class BundleExpr {
 public:
  explicit BundleExpr(NodePtr root) : root_(std::move(root)) {}
  const Node& root() const { return *root_; }
  const NodePtr& ptr() const { return root_; }

  friend bool operator==(const BundleExpr& a, const BundleExpr& b);

 private:
  NodePtr root_;
};

// Node constructors.
NodePtr zero();
NodePtr line(Integer d);
NodePtr torsion(Integer length);
NodePtr var(std::string name);
NodePtr sum(NodePtr l, NodePtr r);
NodePtr tensor(NodePtr l, NodePtr r);
NodePtr sym(std::size_t n, NodePtr c);
NodePtr wedge(std::size_t k, NodePtr c);
NodePtr dual(NodePtr c);
NodePtr det(NodePtr c);
NodePtr twist(NodePtr c, Integer d);
NodePtr power(NodePtr c, std::size_t m);
NodePtr tensor_power(NodePtr c, Integer m);

bool equal(const Node& a, const Node& b);

/// Name -> value bindings. Looking up an unbound name is an error.
class Environment {
 public:
  Environment() = default;
  Environment(std::initializer_list<std::pair<const std::string, SheafSummary>> init) : bindings_(init) {}

  /// Adds a binding; rebinding an existing name throws EvalError.
  void bind(const std::string& name, SheafSummary value);
  const SheafSummary& lookup(const std::string& name) const;
  bool contains(const std::string& name) const { return bindings_.count(name) != 0; }

 private:
  std::map<std::string, SheafSummary> bindings_;
};

/// Parses `text`; throws ParseError with byte offset and expected tokens.
BundleExpr parse(std::string_view text);

/// Evaluates by dispatching each node to the splitting-type functors.
/// Throws EvalError for unbound names and for multilinear functors applied
/// to summaries with torsion.
SheafSummary eval(const BundleExpr& e, const Environment& env = {});

/// Parse then evaluate.
SheafSummary eval(std::string_view text, const Environment& env = {});

/// Canonical text "O(a1)^m1 + O(a2)^m2 + ... [+ T(len)]", degrees strictly
/// decreasing; "0" for the zero sheaf.
std::string format(const SheafSummary& s);
std::string format(const SplittingType& s);

/// Renders an expression tree back to source text such that
/// parse(render(e)) == e.
std::string render(const BundleExpr& e);

}  // namespace p1::expr
