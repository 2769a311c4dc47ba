#pragma once

// Transition semantics for the deterministic fragment: Poss, successor
// situations, Final, Trans and bounded projection.

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ccgolog/domain.hpp"
#include "ccgolog/errors.hpp"
#include "ccgolog/expression.hpp"
#include "ccgolog/program.hpp"
#include "ccgolog/situation.hpp"
#include "ccgolog/temporal.hpp"

namespace ccgolog {

namespace detail {

inline const ActionDecl& declaration(const NamedAction& a, const Domain& d) {
  auto it = d.actions.find(a.name);
  if (it == d.actions.end()) throw DomainError("undeclared action '" + a.name + "'");
  if (it->second.params.size() != a.args.size()) {
    throw DomainError("action '" + a.name + "' expects " + std::to_string(it->second.params.size()) +
                      " argument(s)");
  }
  return it->second;
}

inline void assign(Valuation& v, const Domain& d, const std::string& fluent, ExprValue value) {
  if (d.is_continuous(fluent)) {
    auto* f = std::get_if<TFunction>(&value);
    if (!f) throw DomainError("effect on continuous fluent '" + fluent + "' must yield a t-function");
    v.continuous.insert_or_assign(fluent, std::move(*f));
    return;
  }
  if (!d.is_discrete(fluent)) throw DomainError("effect on undeclared fluent '" + fluent + "'");
  Value out = std::visit(
      [&](auto&& x) -> Value {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, TFunction>) {
          throw DomainError("effect on discrete fluent '" + fluent + "' yields a t-function");
        } else {
          return Value(std::forward<decltype(x)>(x));
        }
      },
      std::move(value));
  v.discrete.insert_or_assign(fluent, std::move(out));
}

/// The successor situation, or nothing when `a` is not possible in s.
inline std::optional<Situation> try_successor(const ActionTerm& a, const Situation& s, const Domain& d) {
  TimePoint new_start = s.start;
  if (a.is_wait_for()) {
    auto t = ltp(a.condition(), s.valuation, s.start);
    if (!t) return std::nullopt;
    new_start = std::move(*t);
  } else {
    const NamedAction& named = a.named_action();
    const ActionDecl& decl = declaration(named, d);
    if (!eval_formula(decl.precondition, s, bind_params(decl.params, named.args))) return std::nullopt;
  }
  if (new_start < s.start) throw std::logic_error("start time decreased");

  Valuation next = s.valuation;
  for (const BoundEffect& e : lookup_effects(a, d)) {
    ExprContext ctx{s.valuation, new_start, e.bindings};
    assign(next, d, e.rule->fluent, evaluate(e.rule->new_value, ctx));
  }
  return Situation{s.history.extended(a), std::move(new_start), std::move(next)};
}

}  // namespace detail

/// Poss(a, s). waitFor(φ) is possible iff φ has a least time point at or
/// after start(s).
inline bool poss(const ActionTerm& a, const Situation& s, const Domain& d) {
  if (a.is_wait_for()) return ltp(a.condition(), s.valuation, s.start).has_value();
  const NamedAction& named = a.named_action();
  const ActionDecl& decl = detail::declaration(named, d);
  return eval_formula(decl.precondition, s, bind_params(decl.params, named.args));
}

/// do(a, s). Effects are applied simultaneously, each evaluated against the
/// old valuation at the new start time.
inline Situation successor(const ActionTerm& a, const Situation& s, const Domain& d) {
  auto next = detail::try_successor(a, s, d);
  if (!next) {
    throw IllegalActionError("action " + to_trace_string(a) + " is not possible at time " +
                             to_string(s.start.value()));
  }
  return std::move(*next);
}

inline bool final(const Program& p, const Situation& s, const Domain& d) {
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Nil>) {
          return true;
        } else if constexpr (std::is_same_v<T, Prim> || std::is_same_v<T, Test>) {
          return false;
        } else if constexpr (std::is_same_v<T, Seq>) {
          return final(x.first, s, d) && final(x.second, s, d);
        } else if constexpr (std::is_same_v<T, If>) {
          return eval_formula(x.condition, s) ? final(x.then_branch, s, d) : final(x.else_branch, s, d);
        } else if constexpr (std::is_same_v<T, While>) {
          return !eval_formula(x.condition, s) || final(x.body, s, d);
        } else if constexpr (std::is_same_v<T, TryAll>) {
          return final(x.lhs, s, d) || final(x.rhs, s, d);
        } else if constexpr (std::is_same_v<T, WithPol>) {
          return final(x.main, s, d);
        } else {
          throw std::logic_error("final() expects a macro-expanded program");
        }
      },
      p.node());
}

struct Configuration {
  Program program;
  Situation situation;
};

/// The unique next configuration, or nothing if p cannot move in s.
///
/// Within seq the two Trans disjuncts never both apply here: a final
/// program of this fragment has no transition, so trying σ1 first and
/// falling back to σ2 when σ1 is final is exact.
inline std::optional<Configuration> trans(const Program& p, const Situation& s, const Domain& d) {
  return std::visit(
      [&](const auto& x) -> std::optional<Configuration> {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Nil>) {
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, Prim>) {
          auto next = detail::try_successor(x.action, s, d);
          if (!next) return std::nullopt;
          return Configuration{Program::nil(), std::move(*next)};
        } else if constexpr (std::is_same_v<T, Test>) {
          if (!eval_formula(x.condition, s)) return std::nullopt;
          return Configuration{Program::nil(), s};
        } else if constexpr (std::is_same_v<T, Seq>) {
          if (auto c = trans(x.first, s, d)) {
            return Configuration{Program::seq(std::move(c->program), x.second), std::move(c->situation)};
          }
          if (final(x.first, s, d)) return trans(x.second, s, d);
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, If>) {
          return trans(eval_formula(x.condition, s) ? x.then_branch : x.else_branch, s, d);
        } else if constexpr (std::is_same_v<T, While>) {
          if (!eval_formula(x.condition, s)) return std::nullopt;
          auto c = trans(x.body, s, d);
          if (!c) return std::nullopt;
          return Configuration{Program::seq(std::move(c->program), p), std::move(c->situation)};
        } else if constexpr (std::is_same_v<T, TryAll>) {
          if (final(x.lhs, s, d) || final(x.rhs, s, d)) return std::nullopt;
          auto l = trans(x.lhs, s, d);
          auto r = trans(x.rhs, s, d);
          // Earliest resulting start wins; the left branch wins ties.
          if (l && (!r || l->situation.start <= r->situation.start)) {
            return Configuration{Program::try_all(std::move(l->program), x.rhs), std::move(l->situation)};
          }
          if (r) {
            return Configuration{Program::try_all(x.lhs, std::move(r->program)), std::move(r->situation)};
          }
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, WithPol>) {
          if (final(x.main, s, d)) return std::nullopt;
          auto pol = trans(x.policy, s, d);
          auto main = trans(x.main, s, d);
          // The main program moves only when strictly earlier than the policy.
          if (pol && (!main || pol->situation.start <= main->situation.start)) {
            return Configuration{Program::with_pol(std::move(pol->program), x.main),
                                 std::move(pol->situation)};
          }
          if (main) {
            return Configuration{Program::with_pol(x.policy, std::move(main->program)),
                                 std::move(main->situation)};
          }
          return std::nullopt;
        } else {
          throw std::logic_error("trans() expects a macro-expanded program");
        }
      },
      p.node());
}

/// Why p cannot move in s (assuming it cannot).
inline std::string explain_block(const Program& p, const Situation& s, const Domain& d) {
  return std::visit(
      [&](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Nil>) {
          return "nothing left to execute";
        } else if constexpr (std::is_same_v<T, Prim>) {
          if (x.action.is_wait_for()) {
            const TForm& phi = x.action.condition();
            std::string detail = solve_tform(normalize_tform(phi), s.valuation, s.start).empty()
                                     ? " (it never holds from time "
                                     : " (its solution set is open below, from time ";
            return "waitFor condition has no least time point: " + to_string(phi) + detail +
                   to_string(s.start.value()) + ")";
          }
          return "precondition of " + to_trace_string(x.action) + " does not hold at time " +
                 to_string(s.start.value());
        } else if constexpr (std::is_same_v<T, Test>) {
          return "test " + to_string(x.condition) + " is false at time " + to_string(s.start.value());
        } else if constexpr (std::is_same_v<T, Seq>) {
          return final(x.first, s, d) ? explain_block(x.second, s, d) : explain_block(x.first, s, d);
        } else if constexpr (std::is_same_v<T, If>) {
          return explain_block(eval_formula(x.condition, s) ? x.then_branch : x.else_branch, s, d);
        } else if constexpr (std::is_same_v<T, While>) {
          return explain_block(x.body, s, d);
        } else if constexpr (std::is_same_v<T, TryAll>) {
          return "no tryAll branch can move: [" + explain_block(x.lhs, s, d) + "] and [" +
                 explain_block(x.rhs, s, d) + "]";
        } else if constexpr (std::is_same_v<T, WithPol>) {
          return explain_block(x.main, s, d) + "; policy: " + explain_block(x.policy, s, d);
        } else {
          return "program is not macro-expanded";
        }
      },
      p.node());
}

struct TraceEntry {
  TimePoint time;
  ActionTerm action;
};

enum class Outcome { kCompleted, kBlocked, kStepLimit };

inline std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::kCompleted:
      return "completed";
    case Outcome::kBlocked:
      return "blocked";
    case Outcome::kStepLimit:
      return "step-limit";
  }
  return "?";
}

/// `situation` is the final situation (completed) or the one where
/// projection stopped; `remaining` is the program left at that point.
struct ProjectionResult {
  Outcome outcome;
  Situation situation;
  Program remaining;
  std::vector<TraceEntry> trace;
  std::size_t steps = 0;
  std::string reason;

  bool completed() const { return outcome == Outcome::kCompleted; }
};

/// Called after each transition with the situations before and after it.
using TransitionObserver = std::function<void(const Situation&, const Situation&)>;

/// Runs trans from (p, initial situation of d) until a final configuration
/// is reached, no transition exists, or max_steps transitions were made.
inline ProjectionResult project(const Program& p, const Domain& d, std::size_t max_steps,
                                const TransitionObserver& observer = {}) {
  ProjectionResult r{Outcome::kCompleted, d.initial_situation(), p, {}, 0, {}};
  for (;;) {
    if (final(r.remaining, r.situation, d)) return r;
    if (r.steps >= max_steps) {
      r.outcome = Outcome::kStepLimit;
      r.reason = "step limit of " + std::to_string(max_steps) + " transitions reached";
      return r;
    }
    auto next = trans(r.remaining, r.situation, d);
    if (!next) {
      r.outcome = Outcome::kBlocked;
      r.reason = explain_block(r.remaining, r.situation, d);
      return r;
    }
    if (observer) observer(r.situation, next->situation);
    if (next->situation.history.size() > r.situation.history.size()) {
      r.trace.push_back({next->situation.start, next->situation.history.last()});
    }
    ++r.steps;
    r.remaining = std::move(next->program);
    r.situation = std::move(next->situation);
  }
}

}  // namespace ccgolog
