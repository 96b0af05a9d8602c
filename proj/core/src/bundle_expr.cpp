#include "p1/bundle_expr.hpp"

#include <cctype>

#include "p1/error.hpp"

namespace p1::expr {

namespace {

template <class T>
NodePtr make(T value) {
  return std::make_shared<const Node>(Node{std::move(value)});
}

constexpr int kMaxDepth = 256;

const std::vector<std::string>& atom_starts() {
  static const std::vector<std::string> v = {"O(",       "T(",   "0",    "identifier", "Sym<n>(",
                                             "Wedge<k>(", "Dual(", "Det(", "Twist<d>(",  "("};
  return v;
}

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  NodePtr parse_all() {
    NodePtr e = parse_expr();
    skip_ws();
    if (pos_ != s_.size()) fail({"+", "*", "end of input"}, "unexpected trailing input");
    return e;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  int depth_ = 0;

  [[noreturn]] void fail(std::vector<std::string> expected, const std::string& msg) const { fail_at(pos_, std::move(expected), msg); }

  [[noreturn]] static void fail_at(std::size_t at, std::vector<std::string> expected, const std::string& msg) {
    std::string what = "parse error at offset " + std::to_string(at) + ": " + msg;
    if (!expected.empty()) {
      what += " (expected one of:";
      for (const auto& e : expected) what += " '" + e + "'";
      what += ")";
    }
    throw ParseError(at, std::move(expected), what);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool peek2(char a, char b) {
    skip_ws();
    return pos_ + 1 < s_.size() && s_[pos_] == a && s_[pos_ + 1] == b;
  }

  void expect(char c) {
    if (!peek(c)) fail({std::string(1, c)}, std::string("expected '") + c + "'");
    ++pos_;
  }

  struct DepthGuard {
    Parser& p;
    explicit DepthGuard(Parser& parser) : p(parser) {
      if (++p.depth_ > kMaxDepth) p.fail({}, "expression nested too deeply");
    }
    ~DepthGuard() { --p.depth_; }
  };

  // int := ["-"] digits
  Integer parse_int(bool allow_sign) {
    skip_ws();
    const std::size_t start = pos_;
    bool neg = false;
    if (pos_ < s_.size() && s_[pos_] == '-') {
      if (!allow_sign) fail({"digits"}, "expected a nonnegative integer");
      neg = true;
      ++pos_;
    }
    const std::size_t digits_start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits_start) {
      pos_ = start;
      fail({"integer"}, "expected an integer");
    }
    Integer v(std::string(s_.substr(digits_start, pos_ - digits_start)), 10);
    return neg ? Integer(-v) : v;
  }

  std::size_t to_count(const Integer& v, std::size_t at, const char* what) {
    if (sgn(v) < 0) fail_at(at, {"digits"}, std::string(what) + " must be nonnegative");
    if (!v.fits_ulong_p()) fail_at(at, {}, std::string(what) + " is too large");
    return static_cast<std::size_t>(v.get_ui());
  }

  NodePtr parse_expr() {
    DepthGuard guard(*this);
    NodePtr left = parse_term();
    while (peek('+')) {
      ++pos_;
      left = sum(left, parse_term());
    }
    return left;
  }

  NodePtr parse_term() {
    NodePtr left = parse_factor();
    while (peek('*') && !peek2('*', '*')) {
      ++pos_;
      left = tensor(left, parse_factor());
    }
    return left;
  }

  NodePtr parse_factor() {
    NodePtr a = parse_atom();
    if (peek2('*', '*')) {
      pos_ += 2;
      return tensor_power(a, parse_int(true));
    }
    if (peek('^')) {
      ++pos_;
      skip_ws();
      const std::size_t at = pos_;
      return power(a, to_count(parse_int(true), at, "direct-sum multiplicity"));
    }
    return a;
  }

  NodePtr parse_func_body() {
    expect('(');
    NodePtr inner = parse_expr();
    expect(')');
    return inner;
  }

  NodePtr parse_atom() {
    DepthGuard guard(*this);
    skip_ws();
    if (pos_ >= s_.size()) fail(atom_starts(), "unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr inner = parse_expr();
      expect(')');
      return inner;
    }
    if (c == '0') {
      ++pos_;
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        fail({"+", "*", ")"}, "bare integers other than 0 are not sheaves");
      return zero();
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) fail(atom_starts(), "expected an atom");

    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    const std::string_view word = s_.substr(start, pos_ - start);

    if (word == "O" && peek('(')) {
      ++pos_;
      Integer d = parse_int(true);
      expect(')');
      return line(std::move(d));
    }
    if (word == "T" && peek('(')) {
      ++pos_;
      skip_ws();
      const std::size_t at = pos_;
      Integer len = parse_int(true);
      if (sgn(len) < 0) fail_at(at, {"digits"}, "torsion length must be nonnegative");
      expect(')');
      return torsion(std::move(len));
    }
    if (word.starts_with("Sym") || word.starts_with("Wedge")) {
      const bool is_sym = word.starts_with("Sym");
      const std::string_view arity = word.substr(is_sym ? 3 : 5);
      if (arity.empty() && pos_ < s_.size() && s_[pos_] == '-')
        fail_at(pos_, {"digits"}, std::string(is_sym ? "Sym" : "Wedge") + " arity must be nonnegative");
      if (arity.empty()) fail({"digits"}, std::string(is_sym ? "Sym" : "Wedge") + " requires an arity");
      if (is_digits(arity)) {
        const std::size_t n = to_count(Integer(std::string(arity), 10), start, "functor arity");
        NodePtr inner = parse_func_body();
        return is_sym ? sym(n, inner) : wedge(n, inner);
      }
    }
    if (word == "Dual") return dual(parse_func_body());
    if (word == "Det") return det(parse_func_body());
    if (word == "Twist") {
      if (pos_ >= s_.size() || !(s_[pos_] == '-' || std::isdigit(static_cast<unsigned char>(s_[pos_]))))
        fail({"integer"}, "Twist requires a degree");
      Integer d = parse_int(true);
      return twist(parse_func_body(), std::move(d));
    }
    if (word.starts_with("Twist") && is_digits(word.substr(5)))
      return twist(parse_func_body(), Integer(std::string(word.substr(5)), 10));
    return var(std::string(word));
  }
};

void check_torsion_free(const SheafSummary& s, const char* functor) {
  if (!s.torsion_free())
    throw EvalError(std::string(functor) + " applied to a summary with torsion is not supported");
}

SheafSummary eval_node(const Node& n, const Environment& env);

template <class>
inline constexpr bool always_false = false;

SheafSummary eval_node(const Node& n, const Environment& env) {
  return std::visit(
      [&](const auto& x) -> SheafSummary {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Zero>) {
          return {};
        } else if constexpr (std::is_same_v<T, Line>) {
          return SheafSummary(SplittingType::line(x.degree));
        } else if constexpr (std::is_same_v<T, Torsion>) {
          return SheafSummary::torsion(x.length);
        } else if constexpr (std::is_same_v<T, Var>) {
          return env.lookup(x.name);
        } else if constexpr (std::is_same_v<T, Sum>) {
          SheafSummary a = eval_node(*x.left, env), b = eval_node(*x.right, env);
          return SheafSummary(direct_sum(a.bundle(), b.bundle()), a.torsion_length() + b.torsion_length());
        } else if constexpr (std::is_same_v<T, Tensor>) {
          SheafSummary a = eval_node(*x.left, env), b = eval_node(*x.right, env);
          check_torsion_free(a, "tensor");
          check_torsion_free(b, "tensor");
          return SheafSummary(p1::tensor(a.bundle(), b.bundle()));
        } else if constexpr (std::is_same_v<T, Sym>) {
          SheafSummary a = eval_node(*x.child, env);
          check_torsion_free(a, "Sym");
          return SheafSummary(p1::sym(x.n, a.bundle()));
        } else if constexpr (std::is_same_v<T, Wedge>) {
          SheafSummary a = eval_node(*x.child, env);
          check_torsion_free(a, "Wedge");
          return SheafSummary(p1::wedge(x.k, a.bundle()));
        } else if constexpr (std::is_same_v<T, Dual>) {
          SheafSummary a = eval_node(*x.child, env);
          check_torsion_free(a, "Dual");
          return SheafSummary(p1::dual(a.bundle()));
        } else if constexpr (std::is_same_v<T, Det>) {
          SheafSummary a = eval_node(*x.child, env);
          check_torsion_free(a, "Det");
          return SheafSummary(p1::det(a.bundle()));
        } else if constexpr (std::is_same_v<T, Twist>) {
          // O_tau (x) O(d) is again O_tau, so torsion passes through a twist.
          SheafSummary a = eval_node(*x.child, env);
          return SheafSummary(p1::twist(a.bundle(), x.d), a.torsion_length());
        } else if constexpr (std::is_same_v<T, Power>) {
          SheafSummary a = eval_node(*x.child, env);
          if (Integer(static_cast<unsigned long>(a.rank())) * static_cast<unsigned long>(x.m) >
              static_cast<unsigned long>(kMaxMaterializedRank))
            throw EvalError("direct-sum power exceeds materialization limit");
          std::vector<Integer> degs;
          degs.reserve(a.rank() * x.m);
          for (std::size_t i = 0; i < x.m; ++i)
            degs.insert(degs.end(), a.bundle().degrees().begin(), a.bundle().degrees().end());
          return SheafSummary(SplittingType(std::move(degs)), a.torsion_length() * static_cast<unsigned long>(x.m));
        } else if constexpr (std::is_same_v<T, TensorPower>) {
          SheafSummary a = eval_node(*x.child, env);
          check_torsion_free(a, "tensor power");
          Integer m = abs(x.m);
          SplittingType base = sgn(x.m) < 0 ? p1::dual(a.bundle()) : a.bundle();
          if (a.rank() > 1) {
            // rank^m must stay materializable: bail out before looping.
            Integer r = static_cast<unsigned long>(a.rank());
            Integer bound;
            if (!m.fits_ulong_p()) throw EvalError("tensor power exceeds materialization limit");
            mpz_pow_ui(bound.get_mpz_t(), r.get_mpz_t(), m.get_ui());
            if (bound > static_cast<unsigned long>(kMaxMaterializedRank))
              throw EvalError("tensor power exceeds materialization limit");
          }
          if (a.rank() == 0) return sgn(m) == 0 ? SheafSummary(SplittingType{0}) : SheafSummary{};
          if (a.rank() == 1) return SheafSummary(SplittingType::line(base.degrees()[0] * m));
          SplittingType out{0};
          for (unsigned long i = 0; i < m.get_ui(); ++i) out = p1::tensor(out, base);
          return SheafSummary(out);
        } else {
          static_assert(always_false<T>);
        }
      },
      n.v);
}

enum Prec { kExpr = 0, kTerm = 1, kFactor = 2, kAtom = 3 };

Prec prec_of(const Node& n) {
  if (std::holds_alternative<Sum>(n.v)) return kExpr;
  if (std::holds_alternative<Tensor>(n.v)) return kTerm;
  if (std::holds_alternative<Power>(n.v) || std::holds_alternative<TensorPower>(n.v)) return kFactor;
  return kAtom;
}

std::string render_node(const Node& n, Prec required);

std::string render_node(const Node& n, Prec required) {
  std::string out = std::visit(
      [&](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Zero>) {
          return "0";
        } else if constexpr (std::is_same_v<T, Line>) {
          return "O(" + x.degree.get_str() + ")";
        } else if constexpr (std::is_same_v<T, Torsion>) {
          return "T(" + x.length.get_str() + ")";
        } else if constexpr (std::is_same_v<T, Var>) {
          return x.name;
        } else if constexpr (std::is_same_v<T, Sum>) {
          return render_node(*x.left, kExpr) + " + " + render_node(*x.right, kTerm);
        } else if constexpr (std::is_same_v<T, Tensor>) {
          return render_node(*x.left, kTerm) + " * " + render_node(*x.right, kFactor);
        } else if constexpr (std::is_same_v<T, Sym>) {
          return "Sym" + std::to_string(x.n) + "(" + render_node(*x.child, kExpr) + ")";
        } else if constexpr (std::is_same_v<T, Wedge>) {
          return "Wedge" + std::to_string(x.k) + "(" + render_node(*x.child, kExpr) + ")";
        } else if constexpr (std::is_same_v<T, Dual>) {
          return "Dual(" + render_node(*x.child, kExpr) + ")";
        } else if constexpr (std::is_same_v<T, Det>) {
          return "Det(" + render_node(*x.child, kExpr) + ")";
        } else if constexpr (std::is_same_v<T, Twist>) {
          return "Twist" + x.d.get_str() + "(" + render_node(*x.child, kExpr) + ")";
        } else if constexpr (std::is_same_v<T, Power>) {
          return render_node(*x.child, kAtom) + "^" + std::to_string(x.m);
        } else if constexpr (std::is_same_v<T, TensorPower>) {
          return render_node(*x.child, kAtom) + "**" + x.m.get_str();
        } else {
          static_assert(always_false<T>);
        }
      },
      n.v);
  if (prec_of(n) < required) return "(" + out + ")";
  return out;
}

}  // namespace

NodePtr zero() { return make(Zero{}); }
NodePtr line(Integer d) { return make(Line{std::move(d)}); }
NodePtr torsion(Integer length) { return make(Torsion{std::move(length)}); }
NodePtr var(std::string name) { return make(Var{std::move(name)}); }
NodePtr sum(NodePtr l, NodePtr r) { return make(Sum{std::move(l), std::move(r)}); }
NodePtr tensor(NodePtr l, NodePtr r) { return make(Tensor{std::move(l), std::move(r)}); }
NodePtr sym(std::size_t n, NodePtr c) { return make(Sym{n, std::move(c)}); }
NodePtr wedge(std::size_t k, NodePtr c) { return make(Wedge{k, std::move(c)}); }
NodePtr dual(NodePtr c) { return make(Dual{std::move(c)}); }
NodePtr det(NodePtr c) { return make(Det{std::move(c)}); }
NodePtr twist(NodePtr c, Integer d) { return make(Twist{std::move(c), std::move(d)}); }
NodePtr power(NodePtr c, std::size_t m) { return make(Power{std::move(c), m}); }
NodePtr tensor_power(NodePtr c, Integer m) { return make(TensorPower{std::move(c), std::move(m)}); }

bool equal(const Node& a, const Node& b) {
  if (a.v.index() != b.v.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b.v);
        if constexpr (std::is_same_v<T, Zero>) {
          return true;
        } else if constexpr (std::is_same_v<T, Line>) {
          return x.degree == y.degree;
        } else if constexpr (std::is_same_v<T, Torsion>) {
          return x.length == y.length;
        } else if constexpr (std::is_same_v<T, Var>) {
          return x.name == y.name;
        } else if constexpr (std::is_same_v<T, Sum> || std::is_same_v<T, Tensor>) {
          return equal(*x.left, *y.left) && equal(*x.right, *y.right);
        } else if constexpr (std::is_same_v<T, Sym>) {
          return x.n == y.n && equal(*x.child, *y.child);
        } else if constexpr (std::is_same_v<T, Wedge>) {
          return x.k == y.k && equal(*x.child, *y.child);
        } else if constexpr (std::is_same_v<T, Dual> || std::is_same_v<T, Det>) {
          return equal(*x.child, *y.child);
        } else if constexpr (std::is_same_v<T, Twist>) {
          return x.d == y.d && equal(*x.child, *y.child);
        } else if constexpr (std::is_same_v<T, Power>) {
          return x.m == y.m && equal(*x.child, *y.child);
        } else if constexpr (std::is_same_v<T, TensorPower>) {
          return x.m == y.m && equal(*x.child, *y.child);
        } else {
          static_assert(always_false<T>);
        }
      },
      a.v);
}

bool operator==(const BundleExpr& a, const BundleExpr& b) { return equal(a.root(), b.root()); }

void Environment::bind(const std::string& name, SheafSummary value) {
  if (!bindings_.emplace(name, std::move(value)).second) throw EvalError("variable '" + name + "' is already bound");
}

const SheafSummary& Environment::lookup(const std::string& name) const {
  auto it = bindings_.find(name);
  if (it == bindings_.end()) throw EvalError("unbound variable '" + name + "'");
  return it->second;
}

BundleExpr parse(std::string_view text) { return BundleExpr(Parser(text).parse_all()); }

SheafSummary eval(const BundleExpr& e, const Environment& env) { return eval_node(e.root(), env); }

SheafSummary eval(std::string_view text, const Environment& env) { return eval(parse(text), env); }

std::string format(const SplittingType& s) { return format(SheafSummary(s)); }

std::string format(const SheafSummary& s) {
  std::string out;
  const auto& d = s.bundle().degrees();
  for (std::size_t i = 0; i < d.size();) {
    std::size_t j = i;
    while (j < d.size() && d[j] == d[i]) ++j;
    if (!out.empty()) out += " + ";
    out += "O(" + d[i].get_str() + ")";
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  if (!s.torsion_free()) {
    if (!out.empty()) out += " + ";
    out += "T(" + s.torsion_length().get_str() + ")";
  }
  return out.empty() ? "0" : out;
}

std::string render(const BundleExpr& e) { return render_node(e.root(), kExpr); }

}  // namespace p1::expr
