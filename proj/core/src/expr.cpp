#include "septensor/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <string>
#include <system_error>

#include "septensor/numfmt.hpp"

namespace septensor {

namespace {

ExprPtr node(ExprKind kind, ExprPtr lhs = nullptr, ExprPtr rhs = nullptr) {
  auto e = std::make_unique<Expr>();
  e->kind = kind;
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  return e;
}

ExprPtr literal(double v) {
  auto e = std::make_unique<Expr>();
  e->kind = ExprKind::literal;
  e->value = v;
  return e;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprPtr run() {
    skip_ws();
    if (pos_ >= text_.size()) {
      throw SyntaxError(pos_, "empty expression");
    }
    ExprPtr e = parse_sum();
    skip_ws();
    if (pos_ < text_.size()) {
      throw SyntaxError(pos_, std::string("unexpected character '") + text_[pos_] + "'");
    }
    return e;
  }

 private:
  // Guards against pathological nesting blowing the call stack.
  static constexpr int kMaxDepth = 256;

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!accept(c)) {
      throw SyntaxError(pos_, std::string("expected ") + what);
    }
  }

  ExprPtr parse_sum() {
    DepthGuard guard(this);
    ExprPtr e = parse_product();
    for (;;) {
      if (accept('+')) {
        e = node(ExprKind::add, std::move(e), parse_product());
      } else if (accept('-')) {
        e = node(ExprKind::sub, std::move(e), parse_product());
      } else {
        return e;
      }
    }
  }

  ExprPtr parse_product() {
    DepthGuard guard(this);
    ExprPtr e = parse_unary();
    for (;;) {
      if (accept('*')) {
        e = node(ExprKind::mul, std::move(e), parse_unary());
      } else if (accept('/')) {
        e = node(ExprKind::div, std::move(e), parse_unary());
      } else {
        return e;
      }
    }
  }

  ExprPtr parse_unary() {
    DepthGuard guard(this);
    if (accept('-')) {
      return node(ExprKind::negate, parse_unary());
    }
    return parse_power();
  }

  // '^' is right-associative and binds tighter than unary minus, so the
  // exponent is parsed as a unary to admit forms like 2^-3.
  ExprPtr parse_power() {
    DepthGuard guard(this);
    ExprPtr base = parse_atom();
    if (accept('^')) {
      return node(ExprKind::pow, std::move(base), parse_unary());
    }
    return base;
  }

  ExprPtr parse_atom() {
    DepthGuard guard(this);
    const char c = peek();
    if (c == '(') {
      ++pos_;
      ExprPtr e = parse_sum();
      expect(')', "')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      return parse_number();
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      return parse_name();
    }
    if (c == '\0') {
      throw SyntaxError(pos_, "unexpected end of input");
    }
    throw SyntaxError(pos_, std::string("unexpected character '") + c + "'");
  }

  ExprPtr parse_number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    if (pos_ == start || (pos_ == start + 1 && text_[start] == '.')) {
      throw SyntaxError(start, "malformed number");
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t exp_mark = pos_;
      ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        throw SyntaxError(exp_mark, "malformed exponent");
      }
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
    if (ec != std::errc{} || ptr != text_.data() + pos_) {
      throw SyntaxError(start, "malformed number");
    }
    return literal(v);
  }

  ExprPtr parse_name() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    if (name == "x") return node(ExprKind::var_x);
    if (name == "y") return node(ExprKind::var_y);
    if (name == "pi") return node(ExprKind::pi);

    ExprKind fn;
    if (name == "sin") {
      fn = ExprKind::sin;
    } else if (name == "cos") {
      fn = ExprKind::cos;
    } else if (name == "exp") {
      fn = ExprKind::exp;
    } else if (name == "sqrt") {
      fn = ExprKind::sqrt;
    } else if (name == "abs") {
      fn = ExprKind::abs;
    } else {
      throw SyntaxError(start, "unknown name '" + std::string(name) + "'");
    }
    expect('(', "'(' after function name");
    ExprPtr arg = parse_sum();
    expect(')', "')'");
    return node(fn, std::move(arg));
  }

  struct DepthGuard {
    explicit DepthGuard(Parser* p) : p(p) {
      if (++p->depth_ > kMaxDepth) {
        throw SyntaxError(p->pos_, "expression too deeply nested");
      }
    }
    ~DepthGuard() { --p->depth_; }
    Parser* p;
  };

  std::string_view text_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

// Precedence levels used by the printer: + - (1), * / (2), unary - (3), ^ (4).
int precedence(ExprKind k) {
  switch (k) {
    case ExprKind::add:
    case ExprKind::sub:
      return 1;
    case ExprKind::mul:
    case ExprKind::div:
      return 2;
    case ExprKind::negate:
      return 3;
    case ExprKind::pow:
      return 4;
    default:
      return 5;  // atoms and function calls never need parentheses
  }
}

void print_rec(const Expr& e, int min_prec, std::string& out) {
  const int prec = precedence(e.kind);
  const bool parens = prec < min_prec;
  if (parens) out += '(';
  switch (e.kind) {
    case ExprKind::literal:
      out += format_double(e.value);
      break;
    case ExprKind::var_x:
      out += 'x';
      break;
    case ExprKind::var_y:
      out += 'y';
      break;
    case ExprKind::pi:
      out += "pi";
      break;
    case ExprKind::negate:
      out += '-';
      print_rec(*e.lhs, 3, out);
      break;
    case ExprKind::add:
      print_rec(*e.lhs, 1, out);
      out += '+';
      print_rec(*e.rhs, 2, out);
      break;
    case ExprKind::sub:
      print_rec(*e.lhs, 1, out);
      out += '-';
      print_rec(*e.rhs, 2, out);
      break;
    case ExprKind::mul:
      print_rec(*e.lhs, 2, out);
      out += '*';
      print_rec(*e.rhs, 3, out);
      break;
    case ExprKind::div:
      print_rec(*e.lhs, 2, out);
      out += '/';
      print_rec(*e.rhs, 3, out);
      break;
    case ExprKind::pow:
      print_rec(*e.lhs, 5, out);  // left operand of ^ is an atom in the grammar
      out += '^';
      print_rec(*e.rhs, 3, out);  // exponent admits unary minus
      break;
    case ExprKind::sin:
    case ExprKind::cos:
    case ExprKind::exp:
    case ExprKind::sqrt:
    case ExprKind::abs: {
      const char* name = e.kind == ExprKind::sin    ? "sin"
                         : e.kind == ExprKind::cos  ? "cos"
                         : e.kind == ExprKind::exp  ? "exp"
                         : e.kind == ExprKind::sqrt ? "sqrt"
                                                    : "abs";
      out += name;
      out += '(';
      print_rec(*e.lhs, 1, out);
      out += ')';
      break;
    }
  }
  if (parens) out += ')';
}

}  // namespace

ExprPtr parse_expr(std::string_view text) { return Parser(text).run(); }

double eval_expr(const Expr& e, double x, double y) {
  switch (e.kind) {
    case ExprKind::literal:
      return e.value;
    case ExprKind::var_x:
      return x;
    case ExprKind::var_y:
      return y;
    case ExprKind::pi:
      return std::numbers::pi;
    case ExprKind::negate:
      return -eval_expr(*e.lhs, x, y);
    case ExprKind::add:
      return eval_expr(*e.lhs, x, y) + eval_expr(*e.rhs, x, y);
    case ExprKind::sub:
      return eval_expr(*e.lhs, x, y) - eval_expr(*e.rhs, x, y);
    case ExprKind::mul:
      return eval_expr(*e.lhs, x, y) * eval_expr(*e.rhs, x, y);
    case ExprKind::div:
      return eval_expr(*e.lhs, x, y) / eval_expr(*e.rhs, x, y);
    case ExprKind::pow:
      return std::pow(eval_expr(*e.lhs, x, y), eval_expr(*e.rhs, x, y));
    case ExprKind::sin:
      return std::sin(eval_expr(*e.lhs, x, y));
    case ExprKind::cos:
      return std::cos(eval_expr(*e.lhs, x, y));
    case ExprKind::exp:
      return std::exp(eval_expr(*e.lhs, x, y));
    case ExprKind::sqrt:
      return std::sqrt(eval_expr(*e.lhs, x, y));
    case ExprKind::abs:
      return std::abs(eval_expr(*e.lhs, x, y));
  }
  return std::nan("");
}

std::string print_expr(const Expr& e) {
  std::string out;
  print_rec(e, 0, out);
  return out;
}

bool expr_equal(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == ExprKind::literal) {
    // Bit comparison so that 0.0 and -0.0 stay distinguishable.
    return a.value == b.value && std::signbit(a.value) == std::signbit(b.value);
  }
  if (static_cast<bool>(a.lhs) != static_cast<bool>(b.lhs)) return false;
  if (static_cast<bool>(a.rhs) != static_cast<bool>(b.rhs)) return false;
  if (a.lhs && !expr_equal(*a.lhs, *b.lhs)) return false;
  if (a.rhs && !expr_equal(*a.rhs, *b.rhs)) return false;
  return true;
}

ExprPtr clone_expr(const Expr& e) {
  auto out = std::make_unique<Expr>();
  out->kind = e.kind;
  out->value = e.value;
  if (e.lhs) out->lhs = clone_expr(*e.lhs);
  if (e.rhs) out->rhs = clone_expr(*e.rhs);
  return out;
}

}  // namespace septensor
