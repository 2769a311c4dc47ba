#pragma once

// Effect-rule expressions: the new value of a fluent as a function of the old
// valuation, the action parameters and the new start time.

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ccgolog/errors.hpp"
#include "ccgolog/program.hpp"
#include "ccgolog/temporal.hpp"
#include "ccgolog/time_function.hpp"

namespace ccgolog {

using ExprValue = std::variant<bool, Rational, Symbol, TFunction>;

inline ExprValue to_expr_value(const Value& v) {
  return std::visit([](const auto& x) -> ExprValue { return x; }, v);
}

inline std::string to_string(const ExprValue& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, TFunction>) {
          return to_string(x);
        } else {
          return to_string(Value(x));
        }
      },
      v);
}

class Expr;
struct ExprLiteral {
  Value value;
};
/// A bare identifier: an action parameter, the keyword `newStart`, or
/// otherwise a symbol constant.
struct ExprName {
  std::string name;
};
/// (old F): the fluent's value in the situation the action is applied to.
struct ExprOld {
  std::string fluent;
};
struct ExprCall;

class Expr {
 public:
  using Node = std::variant<ExprLiteral, ExprName, ExprOld, ExprCall>;

  static Expr literal(Value v);
  static Expr name(std::string n);
  static Expr old(std::string fluent);
  static Expr call(std::string op, std::vector<Expr> args);

  const Node& node() const;
  template <typename T>
  const T* get_if() const {
    return std::get_if<T>(std::addressof(node()));
  }

 private:
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Operators: + - * / abs min max sign, comparisons (< <= = >= > !=),
/// and or not, if, val, constant, linear, piecewise. For piecewise, args
/// are [final-rate, t1, v1, t2, v2, ...].
struct ExprCall {
  std::string op;
  std::vector<Expr> args;
};

inline const Expr::Node& Expr::node() const { return *node_; }

inline Expr Expr::literal(Value v) { return Expr(std::make_shared<const Node>(ExprLiteral{std::move(v)})); }
inline Expr Expr::name(std::string n) { return Expr(std::make_shared<const Node>(ExprName{std::move(n)})); }
inline Expr Expr::old(std::string fluent) {
  return Expr(std::make_shared<const Node>(ExprOld{std::move(fluent)}));
}
inline Expr Expr::call(std::string op, std::vector<Expr> args) {
  return Expr(std::make_shared<const Node>(ExprCall{std::move(op), std::move(args)}));
}

inline std::string to_string(const Expr& e) {
  if (const auto* l = e.get_if<ExprLiteral>()) return to_string(l->value);
  if (const auto* n = e.get_if<ExprName>()) return n->name;
  if (const auto* o = e.get_if<ExprOld>()) return "(old " + o->fluent + ")";
  const auto& c = *e.get_if<ExprCall>();
  std::string out = "(" + c.op;
  if (c.op == "piecewise" && !c.args.empty()) {
    out += " " + to_string(c.args[0]);
    for (std::size_t i = 1; i + 1 < c.args.size(); i += 2) {
      out += " (" + to_string(c.args[i]) + " " + to_string(c.args[i + 1]) + ")";
    }
    return out + ")";
  }
  for (const auto& a : c.args) out += " " + to_string(a);
  return out + ")";
}

/// Fluent names read by an expression via (old F).
template <typename F>
void for_each_old_fluent(const Expr& e, F&& visit) {
  if (const auto* o = e.get_if<ExprOld>()) {
    visit(o->fluent);
  } else if (const auto* c = e.get_if<ExprCall>()) {
    for (const auto& a : c->args) for_each_old_fluent(a, visit);
  }
}

struct ExprContext {
  const Valuation& old;
  const TimePoint& new_start;
  const std::map<std::string, Value>& params;
};

namespace detail {

inline const Rational& as_number(const ExprValue& v, const std::string& op) {
  if (const auto* r = std::get_if<Rational>(&v)) return *r;
  throw DomainError("'" + op + "' expects a number, got " + to_string(v));
}

inline bool as_bool(const ExprValue& v, const std::string& op) {
  if (const auto* b = std::get_if<bool>(&v)) return *b;
  throw DomainError("'" + op + "' expects a boolean, got " + to_string(v));
}

inline const TFunction& as_function(const ExprValue& v, const std::string& op) {
  if (const auto* f = std::get_if<TFunction>(&v)) return *f;
  throw DomainError("'" + op + "' expects a t-function, got " + to_string(v));
}

inline bool expr_values_equal(const ExprValue& a, const ExprValue& b) {
  if (a.index() != b.index()) return false;
  if (const auto* f = std::get_if<TFunction>(&a)) return *f == std::get<TFunction>(b);
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, TFunction>) {
          return false;
        } else {
          return values_equal(Value(x), Value(std::get<T>(b)));
        }
      },
      a);
}

}  // namespace detail

inline ExprValue evaluate(const Expr& e, const ExprContext& ctx) {
  if (const auto* l = e.get_if<ExprLiteral>()) return to_expr_value(l->value);
  if (const auto* n = e.get_if<ExprName>()) {
    if (auto it = ctx.params.find(n->name); it != ctx.params.end()) return to_expr_value(it->second);
    if (n->name == "newStart") return ctx.new_start.value();
    return Symbol{n->name};
  }
  if (const auto* o = e.get_if<ExprOld>()) {
    if (auto it = ctx.old.continuous.find(o->fluent); it != ctx.old.continuous.end()) {
      return it->second;
    }
    return to_expr_value(ctx.old.discrete_value(o->fluent));
  }

  const auto& c = *e.get_if<ExprCall>();
  const std::string& op = c.op;
  auto arity = [&](std::size_t lo, std::size_t hi) {
    if (c.args.size() < lo || c.args.size() > hi) {
      throw DomainError("wrong number of arguments to '" + op + "'");
    }
  };
  auto arg = [&](std::size_t i) { return evaluate(c.args[i], ctx); };
  auto number = [&](std::size_t i) { return detail::as_number(arg(i), op); };

  if (op == "if") {
    arity(3, 3);
    return detail::as_bool(arg(0), op) ? arg(1) : arg(2);
  }
  if (op == "and" || op == "or") {
    bool is_and = op == "and";
    for (std::size_t i = 0; i < c.args.size(); ++i) {
      if (detail::as_bool(arg(i), op) != is_and) return !is_and;
    }
    return is_and;
  }
  if (op == "not") {
    arity(1, 1);
    return !detail::as_bool(arg(0), op);
  }
  if (op == "=" || op == "!=") {
    arity(2, 2);
    bool eq = detail::expr_values_equal(arg(0), arg(1));
    return op == "=" ? eq : !eq;
  }
  if (auto cmp_op = parse_compare_op(op)) {
    arity(2, 2);
    return compare(number(0), *cmp_op, number(1));
  }
  if (op == "+" || op == "*") {
    arity(1, SIZE_MAX);
    Rational acc = number(0);
    for (std::size_t i = 1; i < c.args.size(); ++i) {
      if (op == "+") {
        acc += number(i);
      } else {
        acc *= number(i);
      }
    }
    return acc;
  }
  if (op == "-") {
    arity(1, SIZE_MAX);
    if (c.args.size() == 1) return Rational(-number(0));
    Rational acc = number(0);
    for (std::size_t i = 1; i < c.args.size(); ++i) acc -= number(i);
    return acc;
  }
  if (op == "/") {
    arity(2, 2);
    Rational divisor = number(1);
    if (sgn(divisor) == 0) throw DomainError("division by zero");
    return Rational(number(0) / divisor);
  }
  if (op == "abs") {
    arity(1, 1);
    return Rational(abs(number(0)));
  }
  if (op == "sign") {
    arity(1, 1);
    return Rational(sgn(number(0)));
  }
  if (op == "min" || op == "max") {
    arity(1, SIZE_MAX);
    Rational acc = number(0);
    for (std::size_t i = 1; i < c.args.size(); ++i) {
      Rational x = number(i);
      if (op == "min" ? x < acc : x > acc) acc = x;
    }
    return acc;
  }
  if (op == "val") {
    arity(2, 2);
    return val(detail::as_function(arg(0), op), TimePoint(number(1)));
  }
  if (op == "constant") {
    arity(1, 1);
    return TFunction::constant(number(0));
  }
  if (op == "linear") {
    arity(3, 3);
    return TFunction::linear(number(0), number(1), TimePoint(number(2)));
  }
  if (op == "piecewise") {
    if (c.args.size() < 3 || c.args.size() % 2 == 0) {
      throw DomainError("piecewise expects a final rate and at least one (time value) pair");
    }
    std::vector<Breakpoint> breaks;
    for (std::size_t i = 1; i < c.args.size(); i += 2) {
      Breakpoint b{TimePoint(number(i)), number(i + 1)};
      // Zero-length legs repeat a breakpoint; collapse them when the value
      // agrees (a jump would make the function discontinuous).
      if (!breaks.empty() && breaks.back().time == b.time) {
        if (breaks.back().value != b.value) {
          throw DomainError("piecewise function jumps at time " + to_string(b.time.value()));
        }
        continue;
      }
      if (!breaks.empty() && b.time < breaks.back().time) {
        throw DomainError("piecewise breakpoints must be increasing in time");
      }
      breaks.push_back(std::move(b));
    }
    return TFunction::piecewise(std::move(breaks), number(0));
  }
  throw DomainError("unknown operator '" + op + "'");
}

}  // namespace ccgolog
