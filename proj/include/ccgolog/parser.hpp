#pragma once

// Concrete syntax for programs and domains.
//
// Programs:
//   nil | name | (name arg...) | (test φ) | (seq p...) | (if φ p p)
//   (while φ p) | (tryAll p...) | (withPol p p) | (waitFor τ)
//   (whenever τ p) | (withCtrl φ p) | (par p p) | (prio p p)
// seq and tryAll are n-ary and fold to the right.
//
// Domains are a sequence of
//   (continuous name (constant x) | (linear x v t0) | (piecewise rate (t v)...))
//   (discrete name value)
//   (action name (param...) [(poss φ)])
//   (effect (name param...) fluent expr)
//   (proc name (param...) body)

#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ccgolog/domain.hpp"
#include "ccgolog/errors.hpp"
#include "ccgolog/expression.hpp"
#include "ccgolog/program.hpp"
#include "ccgolog/sexpr.hpp"
#include "ccgolog/tform.hpp"

namespace ccgolog {

inline bool is_program_keyword(std::string_view name) {
  static const std::set<std::string, std::less<>> kKeywords = {
      "nil",  "seq",     "if",       "while",    "tryAll", "withPol", "waitFor",
      "test", "whenever", "withCtrl", "par",      "prio"};
  return kKeywords.contains(name);
}

namespace detail {

[[noreturn]] inline void fail(const std::string& message, const Sexpr& at) {
  throw ParseError(message, at.where);
}

inline const std::string& expect_symbol(const Sexpr& e, const char* what) {
  if (e.is_list) fail(std::string("expected ") + what, e);
  if (parse_rational(e.atom) || e.atom == "true" || e.atom == "false") {
    fail(std::string("expected ") + what + ", got '" + e.atom + "'", e);
  }
  return e.atom;
}

inline Rational expect_number(const Sexpr& e) {
  if (e.is_atom()) {
    if (auto r = parse_rational(e.atom)) return *r;
  }
  fail("expected a number, got '" + to_string(e) + "'", e);
}

inline void expect_size(const Sexpr& e, std::size_t n) {
  if (e.items.size() != n) {
    fail("'" + std::string(e.head()) + "' expects " + std::to_string(n - 1) + " operand(s)", e);
  }
}

inline void expect_min_size(const Sexpr& e, std::size_t n) {
  if (e.items.size() < n) {
    fail("'" + std::string(e.head()) + "' expects at least " + std::to_string(n - 1) +
             " operand(s)",
         e);
  }
}

template <typename T, typename Parse, typename Combine>
T fold_right(const Sexpr& e, std::size_t first, Parse parse, Combine combine) {
  T acc = parse(e.items.back());
  for (std::size_t i = e.items.size() - 1; i-- > first;) acc = combine(parse(e.items[i]), std::move(acc));
  return acc;
}

}  // namespace detail

inline Value parse_value(const Sexpr& e) {
  if (e.is_list) detail::fail("expected a constant", e);
  if (e.atom == "true") return true;
  if (e.atom == "false") return false;
  if (auto r = parse_rational(e.atom)) return *r;
  return Symbol{e.atom};
}

inline TForm parse_tform(const Sexpr& e) {
  if (!e.is_list || e.items.empty() || e.items.front().is_list) {
    detail::fail("expected a t-form such as (>= fluent 5)", e);
  }
  std::string_view head = e.head();
  if (head == "and" || head == "or") {
    detail::expect_min_size(e, 2);
    bool is_and = head == "and";
    return detail::fold_right<TForm>(e, 1, parse_tform, [is_and](TForm a, TForm b) {
      return is_and ? TForm::conj(std::move(a), std::move(b)) : TForm::disj(std::move(a), std::move(b));
    });
  }
  if (head == "not") {
    detail::expect_size(e, 2);
    return TForm::negate(parse_tform(e.items[1]));
  }
  if (auto op = parse_compare_op(head)) {
    detail::expect_size(e, 3);
    return TForm::atom(detail::expect_symbol(e.items[1], "a fluent name"), *op,
                       detail::expect_number(e.items[2]));
  }
  detail::fail("unknown t-form construct '" + std::string(head) + "'", e);
}

inline Formula parse_formula(const Sexpr& e) {
  if (e.is_atom()) {
    if (e.atom == "true") return Formula::constant(true);
    if (e.atom == "false") return Formula::constant(false);
    return Formula::fluent(detail::expect_symbol(e, "a condition"));
  }
  if (e.items.empty() || e.items.front().is_list) detail::fail("expected a condition", e);
  std::string_view head = e.head();
  if (head == "and" || head == "or") {
    detail::expect_min_size(e, 2);
    bool is_and = head == "and";
    return detail::fold_right<Formula>(e, 1, parse_formula, [is_and](Formula a, Formula b) {
      return is_and ? Formula::conj(std::move(a), std::move(b))
                    : Formula::disj(std::move(a), std::move(b));
    });
  }
  if (head == "not") {
    detail::expect_size(e, 2);
    return Formula::negate(parse_formula(e.items[1]));
  }
  if (auto op = parse_compare_op(head)) {
    detail::expect_size(e, 3);
    return Formula::compare(detail::expect_symbol(e.items[1], "a fluent name"), *op,
                            parse_value(e.items[2]));
  }
  detail::fail("unknown condition construct '" + std::string(head) + "'", e);
}

inline Program parse_program(const Sexpr& e) {
  if (e.is_atom()) {
    if (e.atom == "nil") return Program::nil();
    const std::string& name = detail::expect_symbol(e, "a program");
    if (is_program_keyword(name)) detail::fail("'" + name + "' needs operands", e);
    return Program::prim(ActionTerm::named(name));
  }
  if (e.items.empty()) detail::fail("empty program", e);
  if (e.items.front().is_list) detail::fail("expected a construct or action name", e.items.front());
  const std::string& head = e.items.front().atom;

  if (head == "seq") {
    if (e.items.size() == 1) return Program::nil();
    return detail::fold_right<Program>(e, 1, [](const Sexpr& x) { return parse_program(x); },
                                       [](Program a, Program b) { return Program::seq(std::move(a), std::move(b)); });
  }
  if (head == "tryAll") {
    detail::expect_min_size(e, 2);
    return detail::fold_right<Program>(e, 1, [](const Sexpr& x) { return parse_program(x); },
                                       [](Program a, Program b) { return Program::try_all(std::move(a), std::move(b)); });
  }
  if (head == "if") {
    detail::expect_size(e, 4);
    return Program::if_then_else(parse_formula(e.items[1]), parse_program(e.items[2]),
                                 parse_program(e.items[3]));
  }
  if (head == "while") {
    detail::expect_size(e, 3);
    return Program::while_loop(parse_formula(e.items[1]), parse_program(e.items[2]));
  }
  if (head == "test") {
    detail::expect_size(e, 2);
    return Program::test(parse_formula(e.items[1]));
  }
  if (head == "waitFor") {
    detail::expect_size(e, 2);
    return Program::prim(ActionTerm::wait_for(parse_tform(e.items[1])));
  }
  if (head == "whenever") {
    detail::expect_size(e, 3);
    return Program::whenever(parse_tform(e.items[1]), parse_program(e.items[2]));
  }
  if (head == "withCtrl") {
    detail::expect_size(e, 3);
    return Program::with_ctrl(parse_formula(e.items[1]), parse_program(e.items[2]));
  }
  if (head == "withPol" || head == "par" || head == "prio") {
    detail::expect_size(e, 3);
    Program a = parse_program(e.items[1]);
    Program b = parse_program(e.items[2]);
    if (head == "withPol") return Program::with_pol(std::move(a), std::move(b));
    if (head == "par") return Program::par(std::move(a), std::move(b));
    return Program::prio(std::move(a), std::move(b));
  }
  if (head == "nil") detail::fail("'nil' takes no operands", e);

  const std::string& name = detail::expect_symbol(e.items.front(), "an action name");
  std::vector<Value> args;
  for (std::size_t i = 1; i < e.items.size(); ++i) args.push_back(parse_value(e.items[i]));
  return Program::prim(ActionTerm::named(name, std::move(args)));
}

inline Program parse_program(std::string_view text) { return parse_program(read_sexpr(text)); }

inline Expr parse_expr(const Sexpr& e) {
  if (e.is_atom()) {
    if (e.atom == "true") return Expr::literal(true);
    if (e.atom == "false") return Expr::literal(false);
    if (auto r = parse_rational(e.atom)) return Expr::literal(*r);
    return Expr::name(e.atom);
  }
  if (e.items.empty() || e.items.front().is_list) detail::fail("expected an expression", e);
  const std::string& op = e.items.front().atom;
  if (op == "old") {
    detail::expect_size(e, 2);
    return Expr::old(detail::expect_symbol(e.items[1], "a fluent name"));
  }
  std::vector<Expr> args;
  if (op == "piecewise") {
    detail::expect_min_size(e, 3);
    args.push_back(parse_expr(e.items[1]));
    for (std::size_t i = 2; i < e.items.size(); ++i) {
      const Sexpr& pair = e.items[i];
      if (!pair.is_list || pair.items.size() != 2) detail::fail("expected a (time value) pair", pair);
      args.push_back(parse_expr(pair.items[0]));
      args.push_back(parse_expr(pair.items[1]));
    }
    return Expr::call(op, std::move(args));
  }
  static const std::set<std::string, std::less<>> kOps = {
      "+", "-", "*", "/", "abs", "min", "max", "sign", "<", "<=", "=", ">=", ">", "!=",
      "and", "or", "not", "if", "val", "constant", "linear"};
  if (!kOps.contains(op)) detail::fail("unknown operator '" + op + "'", e.items.front());
  for (std::size_t i = 1; i < e.items.size(); ++i) args.push_back(parse_expr(e.items[i]));
  return Expr::call(op, std::move(args));
}

/// A t-function literal as used for initial values.
inline TFunction parse_tfunction(const Sexpr& e) {
  std::string_view head = e.head();
  if (head != "constant" && head != "linear" && head != "piecewise") {
    detail::fail("expected (constant x), (linear x v t0) or (piecewise rate (t v)...)", e);
  }
  for (std::size_t i = 1; i < e.items.size(); ++i) {
    const Sexpr& item = e.items[i];
    if (head == "piecewise" && i > 1) {
      if (!item.is_list || item.items.size() != 2) detail::fail("expected a (time value) pair", item);
      detail::expect_number(item.items[0]);
      detail::expect_number(item.items[1]);
    } else {
      detail::expect_number(item);
    }
  }
  Valuation empty;
  TimePoint zero;
  Bindings none;
  try {
    ExprValue v = evaluate(parse_expr(e), ExprContext{empty, zero, none});
    return std::get<TFunction>(v);
  } catch (const std::exception& ex) {
    detail::fail(ex.what(), e);
  }
}

namespace detail {

inline std::vector<std::string> parse_params(const Sexpr& e) {
  if (!e.is_list) fail("expected a parameter list", e);
  std::vector<std::string> out;
  for (const auto& p : e.items) out.push_back(expect_symbol(p, "a parameter name"));
  return out;
}

[[noreturn]] inline void duplicate(const std::string& what, const Sexpr& at) {
  throw ValidationError(ValidationError::Kind::kDuplicateDeclaration,
                        std::to_string(at.where.line) + ":" + std::to_string(at.where.column) +
                            ": duplicate declaration of " + what);
}

}  // namespace detail

/// Parses declarations without cross-checking them; see validate_domain().
inline Domain parse_domain(std::string_view text) {
  Domain d;
  for (const Sexpr& form : read_sexprs(text)) {
    if (!form.is_list || form.items.empty() || form.items.front().is_list) {
      detail::fail("expected a declaration", form);
    }
    const std::string& kind = form.items.front().atom;
    if (kind == "continuous") {
      detail::expect_size(form, 3);
      const std::string& name = detail::expect_symbol(form.items[1], "a fluent name");
      if (d.is_continuous(name) || d.is_discrete(name)) detail::duplicate("fluent '" + name + "'", form);
      d.continuous_fluents.emplace(name, parse_tfunction(form.items[2]));
    } else if (kind == "discrete") {
      detail::expect_size(form, 3);
      const std::string& name = detail::expect_symbol(form.items[1], "a fluent name");
      if (d.is_continuous(name) || d.is_discrete(name)) detail::duplicate("fluent '" + name + "'", form);
      d.discrete_fluents.emplace(name, parse_value(form.items[2]));
    } else if (kind == "action") {
      if (form.items.size() != 3 && form.items.size() != 4) {
        detail::fail("expected (action name (params...) [(poss condition)])", form);
      }
      ActionDecl decl;
      decl.name = detail::expect_symbol(form.items[1], "an action name");
      decl.params = detail::parse_params(form.items[2]);
      if (form.items.size() == 4) {
        const Sexpr& poss = form.items[3];
        if (poss.head() != "poss" || poss.items.size() != 2) detail::fail("expected (poss condition)", poss);
        decl.precondition = parse_formula(poss.items[1]);
      }
      if (d.actions.contains(decl.name)) detail::duplicate("action '" + decl.name + "'", form);
      d.actions.emplace(decl.name, std::move(decl));
    } else if (kind == "effect") {
      detail::expect_size(form, 4);
      const Sexpr& pattern = form.items[1];
      if (!pattern.is_list || pattern.items.empty()) detail::fail("expected (action params...)", pattern);
      std::vector<std::string> names = detail::parse_params(pattern);
      std::string action = names.front();
      names.erase(names.begin());
      d.effects.push_back(EffectRule{std::move(action), std::move(names),
                                     detail::expect_symbol(form.items[2], "a fluent name"),
                                     parse_expr(form.items[3])});
    } else if (kind == "proc") {
      detail::expect_size(form, 4);
      Procedure proc{detail::expect_symbol(form.items[1], "a procedure name"),
                     detail::parse_params(form.items[2]), form.items[3]};
      if (d.procedures.contains(proc.name)) detail::duplicate("procedure '" + proc.name + "'", form);
      d.procedures.emplace(proc.name, std::move(proc));
    } else {
      detail::fail("unknown declaration '" + kind + "'", form);
    }
  }
  return d;
}

}  // namespace ccgolog
