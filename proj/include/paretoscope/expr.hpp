#pragma once

// Arithmetic expression trees for objective and oracle formulas.
// Grammar: infix + - * / ^ (right-assoc), unary minus, max(a,b),
// numeric literals, variables x1..xn.

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace paretoscope {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

struct EvalError : std::runtime_error {
  explicit EvalError(const std::string& msg) : std::runtime_error(msg) {}
};

class Expr {
public:
  enum class Op { Const, Var, Add, Sub, Mul, Div, Pow, Neg, Max };

  struct Node {
    Op op = Op::Const;
    int a = -1;      // child indices, always < own index
    int b = -1;
    double value = 0.0;
    int var = 0;     // 0-based variable index for Op::Var
  };

  Expr() = default;

  static Expr parse(const std::string& src) {
    Parser p(src);
    Expr e;
    e.source_ = src;
    e.root_ = p.parse_expr(e.nodes_, 0);
    p.skip_ws();
    if (!p.at_end())
      throw ParseError("trailing characters at position " + std::to_string(p.pos()) +
                       " in \"" + src + "\"");
    return e;
  }

  double eval(const std::vector<double>& x) const {
    thread_local std::vector<double> v;
    v.resize(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      const Node& nd = nodes_[i];
      switch (nd.op) {
        case Op::Const: v[i] = nd.value; break;
        case Op::Var:
          if (nd.var >= static_cast<int>(x.size()))
            throw EvalError("variable x" + std::to_string(nd.var + 1) +
                            " out of range for point of dimension " +
                            std::to_string(x.size()));
          v[i] = x[nd.var];
          break;
        case Op::Add: v[i] = v[nd.a] + v[nd.b]; break;
        case Op::Sub: v[i] = v[nd.a] - v[nd.b]; break;
        case Op::Mul: v[i] = v[nd.a] * v[nd.b]; break;
        case Op::Div:
          if (v[nd.b] == 0.0) throw EvalError("division by zero in \"" + source_ + "\"");
          v[i] = v[nd.a] / v[nd.b];
          break;
        case Op::Pow: v[i] = eval_pow(v[nd.a], v[nd.b]); break;
        case Op::Neg: v[i] = -v[nd.a]; break;
        case Op::Max: v[i] = v[nd.a] > v[nd.b] ? v[nd.a] : v[nd.b]; break;
      }
    }
    return nodes_.empty() ? 0.0 : v[root_];
  }

  // Highest variable index referenced, as a 1-based count (0 if none).
  int max_var() const {
    int hi = 0;
    for (const Node& nd : nodes_)
      if (nd.op == Op::Var && nd.var + 1 > hi) hi = nd.var + 1;
    return hi;
  }

  const std::string& source() const { return source_; }
  bool empty() const { return nodes_.empty(); }

private:
  std::vector<Node> nodes_;
  int root_ = 0;
  std::string source_;

  double eval_pow(double base, double expo) const {
    if (base == 0.0 && expo < 0.0)
      throw EvalError("zero base with negative exponent in \"" + source_ + "\"");
    if (base < 0.0 && std::floor(expo) != expo)
      throw EvalError("negative base with non-integer exponent in \"" + source_ + "\"");
    return std::pow(base, expo);
  }

  class Parser {
  public:
    explicit Parser(const std::string& s) : s_(s) {}

    int parse_expr(std::vector<Node>& out, int depth) {
      check_depth(depth);
      int lhs = parse_term(out, depth + 1);
      for (;;) {
        skip_ws();
        if (try_consume('+')) lhs = emit(out, Op::Add, lhs, parse_term(out, depth + 1));
        else if (try_consume('-')) lhs = emit(out, Op::Sub, lhs, parse_term(out, depth + 1));
        else return lhs;
      }
    }

    void skip_ws() { while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_; }
    bool at_end() const { return i_ >= s_.size(); }
    std::size_t pos() const { return i_; }

  private:
    const std::string& s_;
    std::size_t i_ = 0;

    void check_depth(int depth) {
      if (depth > 200) throw ParseError("expression nests too deeply");
    }

    int parse_term(std::vector<Node>& out, int depth) {
      check_depth(depth);
      int lhs = parse_unary(out, depth + 1);
      for (;;) {
        skip_ws();
        if (try_consume('*')) lhs = emit(out, Op::Mul, lhs, parse_unary(out, depth + 1));
        else if (try_consume('/')) lhs = emit(out, Op::Div, lhs, parse_unary(out, depth + 1));
        else return lhs;
      }
    }

    int parse_unary(std::vector<Node>& out, int depth) {
      check_depth(depth);
      skip_ws();
      if (try_consume('-')) return emit(out, Op::Neg, parse_unary(out, depth + 1), -1);
      if (try_consume('+')) return parse_unary(out, depth + 1);
      return parse_power(out, depth + 1);
    }

    int parse_power(std::vector<Node>& out, int depth) {
      check_depth(depth);
      int base = parse_factor(out, depth + 1);
      skip_ws();
      if (try_consume('^'))
        return emit(out, Op::Pow, base, parse_unary(out, depth + 1));
      return base;
    }

    int parse_factor(std::vector<Node>& out, int depth) {
      check_depth(depth);
      skip_ws();
      if (at_end()) throw ParseError("unexpected end of expression");
      char c = s_[i_];
      if (c == '(') {
        ++i_;
        int e = parse_expr(out, depth + 1);
        expect(')');
        return e;
      }
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number(out);
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_ident(out, depth);
      throw ParseError(std::string("unexpected character '") + c + "' at position " +
                       std::to_string(i_));
    }

    int parse_number(std::vector<Node>& out) {
      const char* start = s_.c_str() + i_;
      char* end = nullptr;
      double val = std::strtod(start, &end);
      if (end == start) throw ParseError("bad numeric literal at position " + std::to_string(i_));
      i_ += static_cast<std::size_t>(end - start);
      Node nd;
      nd.op = Op::Const;
      nd.value = val;
      out.push_back(nd);
      return static_cast<int>(out.size()) - 1;
    }

    int parse_ident(std::vector<Node>& out, int depth) {
      std::size_t start = i_;
      while (i_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
        ++i_;
      std::string name = s_.substr(start, i_ - start);
      if (name == "max") {
        expect('(');
        int a = parse_expr(out, depth + 1);
        expect(',');
        int b = parse_expr(out, depth + 1);
        expect(')');
        return emit(out, Op::Max, a, b);
      }
      if (name.size() >= 2 && name[0] == 'x') {
        bool digits = true;
        for (std::size_t k = 1; k < name.size(); ++k)
          if (!std::isdigit(static_cast<unsigned char>(name[k]))) { digits = false; break; }
        if (digits) {
          long idx = std::strtol(name.c_str() + 1, nullptr, 10);
          if (idx < 1) throw ParseError("variable index must be >= 1 in \"" + name + "\"");
          Node nd;
          nd.op = Op::Var;
          nd.var = static_cast<int>(idx - 1);
          out.push_back(nd);
          return static_cast<int>(out.size()) - 1;
        }
      }
      throw ParseError("unknown identifier \"" + name + "\"");
    }

    int emit(std::vector<Node>& out, Op op, int a, int b) {
      Node nd;
      nd.op = op;
      nd.a = a;
      nd.b = b;
      out.push_back(nd);
      return static_cast<int>(out.size()) - 1;
    }

    bool try_consume(char c) {
      skip_ws();
      if (i_ < s_.size() && s_[i_] == c) { ++i_; return true; }
      return false;
    }

    void expect(char c) {
      if (!try_consume(c))
        throw ParseError(std::string("expected '") + c + "' at position " + std::to_string(i_));
    }
  };
};

} // namespace paretoscope
