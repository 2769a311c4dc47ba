#pragma once

// Static checks on domains and expanded programs.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ccgolog/domain.hpp"
#include "ccgolog/errors.hpp"
#include "ccgolog/parser.hpp"
#include "ccgolog/program.hpp"

namespace ccgolog {

namespace detail {

[[noreturn]] inline void invalid(ValidationError::Kind kind, const std::string& message) {
  throw ValidationError(kind, message);
}

inline void check_fluent(const Domain& d, const std::string& fluent, const std::string& where) {
  if (!d.is_continuous(fluent) && !d.is_discrete(fluent)) {
    invalid(ValidationError::Kind::kUndeclaredFluent,
            "undeclared fluent '" + fluent + "' in " + where);
  }
}

inline void check_tform(const Domain& d, const TForm& phi, const std::string& where) {
  for_each_atom(phi, [&](const TFormAtom& atom) {
    if (!d.is_continuous(atom.fluent)) {
      if (d.is_discrete(atom.fluent)) {
        invalid(ValidationError::Kind::kSortMismatch,
                "waitFor condition uses discrete fluent '" + atom.fluent + "' in " + where);
      }
      check_fluent(d, atom.fluent, where);
    }
  });
}

inline void check_formula(const Domain& d, const Formula& phi, const std::string& where) {
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, FormulaFluent>) {
          check_fluent(d, x.name, where);
          if (d.is_continuous(x.name)) {
            invalid(ValidationError::Kind::kSortMismatch,
                    "continuous fluent '" + x.name + "' used as a boolean in " + where);
          }
        } else if constexpr (std::is_same_v<T, FormulaCompare>) {
          check_fluent(d, x.fluent, where);
        } else if constexpr (std::is_same_v<T, FormulaNot>) {
          check_formula(d, x.operand, where);
        } else if constexpr (std::is_same_v<T, FormulaAnd> || std::is_same_v<T, FormulaOr>) {
          check_formula(d, x.lhs, where);
          check_formula(d, x.rhs, where);
        }
      },
      phi.node());
}

// Checks references in p; procedure calls found are appended to `calls`
// (or rejected when `calls` is null).
inline void check_program(const Domain& d, const Program& p, const std::string& where,
                          std::vector<std::string>* calls) {
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Prim>) {
          if (x.action.is_wait_for()) {
            check_tform(d, x.action.condition(), where);
            return;
          }
          const auto& a = x.action.named_action();
          std::size_t arity = 0;
          if (auto it = d.actions.find(a.name); it != d.actions.end()) {
            arity = it->second.params.size();
          } else if (auto pt = d.procedures.find(a.name); calls && pt != d.procedures.end()) {
            arity = pt->second.params.size();
            calls->push_back(a.name);
          } else {
            invalid(ValidationError::Kind::kUndeclaredAction,
                    "undeclared action or procedure '" + a.name + "' in " + where);
          }
          if (arity != a.args.size()) {
            invalid(ValidationError::Kind::kArityMismatch,
                    "'" + a.name + "' expects " + std::to_string(arity) + " argument(s) in " + where);
          }
        } else if constexpr (std::is_same_v<T, Test>) {
          check_formula(d, x.condition, where);
        } else if constexpr (std::is_same_v<T, Seq>) {
          check_program(d, x.first, where, calls);
          check_program(d, x.second, where, calls);
        } else if constexpr (std::is_same_v<T, If>) {
          check_formula(d, x.condition, where);
          check_program(d, x.then_branch, where, calls);
          check_program(d, x.else_branch, where, calls);
        } else if constexpr (std::is_same_v<T, While>) {
          check_formula(d, x.condition, where);
          check_program(d, x.body, where, calls);
        } else if constexpr (std::is_same_v<T, TryAll> || std::is_same_v<T, Par>) {
          check_program(d, x.lhs, where, calls);
          check_program(d, x.rhs, where, calls);
        } else if constexpr (std::is_same_v<T, WithPol>) {
          check_program(d, x.policy, where, calls);
          check_program(d, x.main, where, calls);
        } else if constexpr (std::is_same_v<T, Prio>) {
          check_program(d, x.high, where, calls);
          check_program(d, x.low, where, calls);
        } else if constexpr (std::is_same_v<T, Whenever>) {
          check_tform(d, x.condition, where);
          check_program(d, x.body, where, calls);
        } else if constexpr (std::is_same_v<T, WithCtrl>) {
          check_formula(d, x.guard, where);
          check_program(d, x.body, where, calls);
        }
      },
      p.node());
}

// A procedure body with every parameter replaced by a placeholder constant,
// for checking references before any call site exists.
inline Program placeholder_body(const Procedure& proc) {
  std::map<std::string, std::string> bindings;
  for (const auto& p : proc.params) bindings.emplace(p, "0");
  return parse_program(substitute(proc.body, bindings));
}

inline void check_name(const std::string& name, const std::string& what) {
  if (is_hidden_name(name) || is_program_keyword(name) || name == "newStart") {
    invalid(ValidationError::Kind::kReservedName, what + " name '" + name + "' is reserved");
  }
}

}  // namespace detail

/// Rejects undeclared references, duplicate effect rules for one
/// (action, fluent) pair, and recursive procedures.
inline void validate_domain(const Domain& d) {
  using Kind = ValidationError::Kind;
  for (const auto& [name, f] : d.continuous_fluents) detail::check_name(name, "fluent");
  for (const auto& [name, v] : d.discrete_fluents) detail::check_name(name, "fluent");
  for (const auto& [name, decl] : d.actions) {
    detail::check_name(name, "action");
    if (d.procedures.contains(name)) {
      detail::invalid(Kind::kDuplicateDeclaration, "'" + name + "' is both an action and a procedure");
    }
    detail::check_formula(d, decl.precondition, "precondition of '" + name + "'");
  }

  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& rule : d.effects) {
    std::string where = "effect of '" + rule.action + "' on '" + rule.fluent + "'";
    auto it = d.actions.find(rule.action);
    if (it == d.actions.end()) detail::invalid(Kind::kUndeclaredAction, "undeclared action in " + where);
    if (it->second.params.size() != rule.params.size()) {
      detail::invalid(Kind::kArityMismatch, "parameter count differs from declaration in " + where);
    }
    detail::check_fluent(d, rule.fluent, where);
    for_each_old_fluent(rule.new_value, [&](const std::string& f) { detail::check_fluent(d, f, where); });
    if (!seen.emplace(rule.action, rule.fluent).second) {
      detail::invalid(Kind::kDuplicateEffect, "more than one " + where);
    }
  }

  std::map<std::string, std::vector<std::string>> calls;
  for (const auto& [name, proc] : d.procedures) {
    detail::check_name(name, "procedure");
    std::vector<std::string>& out = calls[name];
    detail::check_program(d, detail::placeholder_body(proc), "procedure '" + name + "'", &out);
  }

  // Depth-first search for a call cycle; the report lists the cycle.
  std::map<std::string, int> state;  // 1 = on stack, 2 = done
  std::vector<std::string> stack;
  std::function<void(const std::string&)> visit = [&](const std::string& name) {
    state[name] = 1;
    stack.push_back(name);
    for (const auto& callee : calls[name]) {
      if (state[callee] == 1) {
        std::string cycle;
        auto from = std::find(stack.begin(), stack.end(), callee);
        for (auto it = from; it != stack.end(); ++it) cycle += *it + " -> ";
        detail::invalid(Kind::kRecursiveProcedure, "recursive procedure: " + cycle + callee);
      }
      if (state[callee] == 0) visit(callee);
    }
    stack.pop_back();
    state[name] = 2;
  };
  for (const auto& [name, proc] : d.procedures) {
    if (state[name] == 0) visit(name);
  }
}

/// Checks that a fully expanded program only references declared actions
/// and fluents, with matching arities and sorts.
inline void check_program(const Program& p, const Domain& d) {
  if (!is_core(p)) throw std::logic_error("check_program expects a macro-expanded program");
  detail::check_program(d, p, "program", nullptr);
}

}  // namespace ccgolog
