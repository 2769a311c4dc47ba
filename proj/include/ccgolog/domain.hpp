#pragma once

// Basic action theories: fluent declarations with initial values, action
// preconditions, effect rules (successor state axioms in assignment form)
// and non-recursive procedures.

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ccgolog/errors.hpp"
#include "ccgolog/expression.hpp"
#include "ccgolog/program.hpp"
#include "ccgolog/sexpr.hpp"
#include "ccgolog/situation.hpp"
#include "ccgolog/temporal.hpp"

namespace ccgolog {

struct ActionDecl {
  std::string name;
  std::vector<std::string> params;
  Formula precondition = Formula::constant(true);
};

/// When `action` occurs, `fluent` takes the value of `new_value` evaluated
/// against the old valuation at the new start time.
struct EffectRule {
  std::string action;
  std::vector<std::string> params;
  std::string fluent;
  Expr new_value;
};

/// Body is kept as an s-expression; calls substitute arguments for
/// parameters and parse the result.
struct Procedure {
  std::string name;
  std::vector<std::string> params;
  Sexpr body;
};

struct Domain {
  std::map<std::string, TFunction> continuous_fluents;
  std::map<std::string, Value> discrete_fluents;
  std::map<std::string, ActionDecl> actions;
  std::vector<EffectRule> effects;
  std::map<std::string, Procedure> procedures;

  bool is_continuous(const std::string& fluent) const { return continuous_fluents.contains(fluent); }
  bool is_discrete(const std::string& fluent) const { return discrete_fluents.contains(fluent); }

  Valuation initial_valuation() const { return Valuation{continuous_fluents, discrete_fluents}; }

  Situation initial_situation() const { return Situation{History(), TimePoint(0), initial_valuation()}; }
};

/// Names generated by macro expansion; user declarations may not use them.
inline bool is_hidden_name(std::string_view name) { return name.starts_with("__"); }

using Bindings = std::map<std::string, Value>;

inline Bindings bind_params(const std::vector<std::string>& params, const std::vector<Value>& args) {
  if (params.size() != args.size()) {
    throw DomainError("expected " + std::to_string(params.size()) + " arguments, got " +
                      std::to_string(args.size()));
  }
  Bindings out;
  for (std::size_t i = 0; i < params.size(); ++i) out.emplace(params[i], args[i]);
  return out;
}

/// φ[s]: discrete atoms read from the valuation, continuous atoms evaluated
/// at `start`. Symbols naming a parameter in `params` stand for its value.
inline bool eval_formula(const Formula& phi, const Valuation& v, const TimePoint& start,
                         const Bindings& params = {}) {
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, FormulaConst>) {
          return x.value;
        } else if constexpr (std::is_same_v<T, FormulaFluent>) {
          const Value& value = v.discrete_value(x.name);
          if (const auto* b = std::get_if<bool>(&value)) return *b;
          throw DomainError("fluent '" + x.name + "' is not boolean");
        } else if constexpr (std::is_same_v<T, FormulaCompare>) {
          Value rhs = x.value;
          if (const auto* s = std::get_if<Symbol>(&rhs)) {
            if (auto it = params.find(s->name); it != params.end()) rhs = it->second;
          }
          if (auto it = v.continuous.find(x.fluent); it != v.continuous.end()) {
            const auto* bound = std::get_if<Rational>(&rhs);
            if (!bound) throw DomainError("continuous fluent '" + x.fluent + "' compared to non-number");
            return compare(val(it->second, start), x.op, *bound);
          }
          const Value& lhs = v.discrete_value(x.fluent);
          if (x.op == CompareOp::kEqual) return values_equal(lhs, rhs);
          const auto* a = std::get_if<Rational>(&lhs);
          const auto* b = std::get_if<Rational>(&rhs);
          if (!a || !b) throw DomainError("ordering comparison on non-numeric fluent '" + x.fluent + "'");
          return compare(*a, x.op, *b);
        } else if constexpr (std::is_same_v<T, FormulaAnd>) {
          return eval_formula(x.lhs, v, start, params) && eval_formula(x.rhs, v, start, params);
        } else if constexpr (std::is_same_v<T, FormulaOr>) {
          return eval_formula(x.lhs, v, start, params) || eval_formula(x.rhs, v, start, params);
        } else {
          return !eval_formula(x.operand, v, start, params);
        }
      },
      phi.node());
}

inline bool eval_formula(const Formula& phi, const Situation& s, const Bindings& params = {}) {
  return eval_formula(phi, s.valuation, s.start, params);
}

struct BoundEffect {
  const EffectRule* rule;
  Bindings bindings;
};

/// Effect rules triggered by `a`, with parameters bound to its arguments.
/// waitFor and effect-free actions trigger none.
inline std::vector<BoundEffect> lookup_effects(const ActionTerm& a, const Domain& d) {
  std::vector<BoundEffect> out;
  if (a.is_wait_for()) return out;
  const auto& named = a.named_action();
  for (const auto& rule : d.effects) {
    if (rule.action != named.name) continue;
    out.push_back({&rule, bind_params(rule.params, named.args)});
  }
  return out;
}

}  // namespace ccgolog
