#pragma once

// Generators and independent oracles shared by the test binaries.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "ccgolog/ccgolog.hpp"

namespace ccgolog::testkit {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
inline bool coin(Rng& rng, int percent = 50) { return uniform(rng, 0, 99) < percent; }

/// Small rational with denominator in 1..max_den.
inline Rational small_rational(Rng& rng, long range = 20, long max_den = 4) {
  Rational r(uniform(rng, -range, range), uniform(rng, 1, max_den));
  r.canonicalize();
  return r;
}

inline TFunction random_tfunction(Rng& rng) {
  switch (uniform(rng, 0, 3)) {
    case 0:
      return TFunction::constant(small_rational(rng));
    case 1:
      return TFunction::linear(small_rational(rng), small_rational(rng, 4, 2), TimePoint(small_rational(rng, 5, 2)));
    default: {
      std::vector<Breakpoint> breaks;
      Rational t = small_rational(rng, 5, 2);
      int n = static_cast<int>(uniform(rng, 1, 5));
      for (int i = 0; i < n; ++i) {
        breaks.push_back({TimePoint(t), small_rational(rng)});
        t += Rational(uniform(rng, 1, 8), uniform(rng, 1, 2));
      }
      return TFunction::piecewise(std::move(breaks), small_rational(rng, 3, 2));
    }
  }
}

inline CompareOp random_op(Rng& rng) { return static_cast<CompareOp>(uniform(rng, 0, 4)); }

inline TForm random_tform(Rng& rng, const std::vector<std::string>& fluents, int depth, long range = 20) {
  if (depth <= 0 || coin(rng, 40)) {
    return TForm::atom(fluents[uniform(rng, 0, static_cast<long>(fluents.size()) - 1)], random_op(rng),
                       small_rational(rng, range, 2));
  }
  switch (uniform(rng, 0, 2)) {
    case 0:
      return TForm::conj(random_tform(rng, fluents, depth - 1, range), random_tform(rng, fluents, depth - 1, range));
    case 1:
      return TForm::disj(random_tform(rng, fluents, depth - 1, range), random_tform(rng, fluents, depth - 1, range));
    default:
      return TForm::negate(random_tform(rng, fluents, depth - 1, range));
  }
}

inline Valuation random_valuation(Rng& rng, const std::vector<std::string>& fluents) {
  Valuation v;
  for (const auto& f : fluents) v.continuous.emplace(f, random_tfunction(rng));
  return v;
}

/// Interesting sample times: breakpoints and bound crossings are on a coarse
/// grid, so sample there, in between, and at random points.
inline TimePoint sample_time(Rng& rng) {
  switch (uniform(rng, 0, 2)) {
    case 0:
      return TimePoint(Rational(uniform(rng, -20, 80), 2));
    case 1:
      return TimePoint(Rational(uniform(rng, -200, 800), 12));
    default:
      return TimePoint(Rational(uniform(rng, -10000, 40000), uniform(rng, 1, 997)));
  }
}

// --- Random domains and programs for the engine properties -----------------

/// The fixed action vocabulary of random_domain().
inline const char* kRandomDomainActions = R"(
(continuous clock (linear 0 1 0))
(discrete n 0)
(discrete flag false)
(action setRate (v))
(action shift (k))
(action bend (v))
(action tick ())
(action toggle ())
(action guarded () (poss (< n 3)))
(effect (setRate v) x (linear (val (old x) newStart) v newStart))
(effect (shift k) y (constant (+ (val (old y) newStart) k)))
(effect (bend v) y (piecewise v (newStart (val (old y) newStart)) ((+ newStart 1) (+ (val (old y) newStart) 1))))
(effect (tick) n (+ (old n) 1))
(effect (toggle) flag (not (old flag)))
(effect (guarded) x (constant (val (old x) newStart)))
)";

inline Domain random_domain(Rng& rng) {
  Domain d = parse_domain(kRandomDomainActions);
  d.continuous_fluents.emplace("x", random_tfunction(rng));
  d.continuous_fluents.emplace("y", random_tfunction(rng));
  validate_domain(d);
  return d;
}

/// Hand-written successor for random_domain(), independent of the effect
/// rule evaluator.
inline Situation replay_step(const Situation& s, const ActionTerm& a) {
  Situation out = s;
  out.history = s.history.extended(a);
  if (a.is_wait_for()) {
    out.start = *ltp(a.condition(), s.valuation, s.start);
    return out;
  }
  const TimePoint& t = s.start;
  const auto& named = a.named_action();
  auto arg = [&](std::size_t i) { return std::get<Rational>(named.args.at(i)); };
  auto& c = out.valuation.continuous;
  auto& dsc = out.valuation.discrete;
  if (named.name == "setRate") {
    c.insert_or_assign("x", TFunction::linear(val(s.valuation.continuous.at("x"), t), arg(0), t));
  } else if (named.name == "shift") {
    c.insert_or_assign("y", TFunction::constant(val(s.valuation.continuous.at("y"), t) + arg(0)));
  } else if (named.name == "bend") {
    Rational y0 = val(s.valuation.continuous.at("y"), t);
    c.insert_or_assign("y", TFunction::piecewise({{t, y0}, {TimePoint(t.value() + 1), y0 + 1}}, arg(0)));
  } else if (named.name == "tick") {
    dsc.insert_or_assign("n", Value(Rational(std::get<Rational>(s.valuation.discrete.at("n")) + 1)));
  } else if (named.name == "toggle") {
    dsc.insert_or_assign("flag", Value(!std::get<bool>(s.valuation.discrete.at("flag"))));
  } else if (named.name == "guarded") {
    c.insert_or_assign("x", TFunction::constant(val(s.valuation.continuous.at("x"), t)));
  }
  return out;
}

inline ActionTerm random_named_action(Rng& rng) {
  switch (uniform(rng, 0, 5)) {
    case 0:
      return ActionTerm::named("setRate", {Value(small_rational(rng, 4, 2))});
    case 1:
      return ActionTerm::named("shift", {Value(Rational(uniform(rng, -3, 3)))});
    case 2:
      return ActionTerm::named("bend", {Value(small_rational(rng, 3, 2))});
    case 3:
      return ActionTerm::named("tick");
    case 4:
      return ActionTerm::named("toggle");
    default:
      return ActionTerm::named("guarded");
  }
}

inline Formula random_condition(Rng& rng, int depth = 1) {
  if (depth > 0 && coin(rng, 30)) {
    Formula a = random_condition(rng, depth - 1);
    Formula b = random_condition(rng, depth - 1);
    switch (uniform(rng, 0, 2)) {
      case 0:
        return Formula::conj(a, b);
      case 1:
        return Formula::disj(a, b);
      default:
        return Formula::negate(a);
    }
  }
  switch (uniform(rng, 0, 4)) {
    case 0:
      return Formula::compare("n", CompareOp::kLess, Value(Rational(uniform(rng, 0, 3))));
    case 1:
      return Formula::fluent("flag");
    case 2:
      return Formula::compare(coin(rng) ? "x" : "y", random_op(rng), Value(small_rational(rng, 10, 1)));
    case 3:
      return Formula::constant(coin(rng, 70));
    default:
      return Formula::compare("clock", CompareOp::kLess, Value(Rational(uniform(rng, 1, 30))));
  }
}

/// A random core program of depth at most `depth`.
inline Program random_program(Rng& rng, int depth) {
  static const std::vector<std::string> kFluents = {"x", "y", "clock"};
  if (depth <= 1 || coin(rng, 15)) {
    switch (uniform(rng, 0, 9)) {
      case 0:
        return Program::nil();
      case 1:
        return Program::prim(ActionTerm::wait_for(random_tform(rng, kFluents, 2, 15)));
      case 2:
      case 3: {
        // Clock thresholds make most of these waits advance time.
        TForm later = TForm::atom("clock", coin(rng) ? CompareOp::kGreaterEq : CompareOp::kEqual,
                                  Rational(uniform(rng, 1, 40), uniform(rng, 1, 2)));
        if (coin(rng)) later = TForm::disj(later, random_tform(rng, kFluents, 1, 15));
        return Program::prim(ActionTerm::wait_for(later));
      }
      case 4:
        return Program::test(random_condition(rng));
      default:
        return Program::prim(random_named_action(rng));
    }
  }
  // A while adds two levels: the loop and its seq body.
  switch (uniform(rng, 0, depth >= 3 ? 7 : 6)) {
    case 0:
    case 1:
    case 5:
      return Program::seq(random_program(rng, depth - 1), random_program(rng, depth - 1));
    case 2:
      return Program::if_then_else(random_condition(rng), random_program(rng, depth - 1),
                                   random_program(rng, depth - 1));
    case 7:
      // Loops count with n so that many of them terminate.
      return Program::while_loop(
          Formula::conj(Formula::compare("n", CompareOp::kLess, Value(Rational(uniform(rng, 1, 4)))),
                        random_condition(rng, 0)),
          Program::seq(Program::prim(ActionTerm::named("tick")), random_program(rng, depth - 2)));
    case 3:
      return Program::try_all(random_program(rng, depth - 1), random_program(rng, depth - 1));
    default:
      return Program::with_pol(random_program(rng, depth - 1), random_program(rng, depth - 1));
  }
}

inline int program_depth(const Program& p) {
  return std::visit(
      [](const auto& x) -> int {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Seq>) {
          return 1 + std::max(program_depth(x.first), program_depth(x.second));
        } else if constexpr (std::is_same_v<T, If>) {
          return 1 + std::max(program_depth(x.then_branch), program_depth(x.else_branch));
        } else if constexpr (std::is_same_v<T, While>) {
          return 1 + program_depth(x.body);
        } else if constexpr (std::is_same_v<T, TryAll>) {
          return 1 + std::max(program_depth(x.lhs), program_depth(x.rhs));
        } else if constexpr (std::is_same_v<T, WithPol>) {
          return 1 + std::max(program_depth(x.policy), program_depth(x.main));
        } else {
          return 1;
        }
      },
      p.node());
}

// --- Reference interleaver for par / prio -----------------------------------

/// One step of a straight-line program: a named action, or a wait until
/// clock reaches `wait_until` (clock runs as linear(0, 1, 0)).
struct Step {
  std::string name;  // empty for a wait
  Rational wait_until;
};

struct RefEntry {
  Rational time;
  std::string action;  // "waitFor" for waits
  friend bool operator==(const RefEntry&, const RefEntry&) = default;
};

/// Earliest step first; on equal times the left program goes first.
inline std::vector<RefEntry> reference_interleave(const std::vector<Step>& left, const std::vector<Step>& right) {
  std::vector<RefEntry> out;
  Rational now = 0;
  std::size_t i = 0, j = 0;
  auto when = [&](const Step& s) { return s.name.empty() ? std::max(now, s.wait_until) : now; };
  while (i < left.size() || j < right.size()) {
    bool take_left = j >= right.size() || (i < left.size() && when(left[i]) <= when(right[j]));
    const Step& s = take_left ? left[i++] : right[j++];
    now = when(s);
    out.push_back({now, s.name.empty() ? "waitFor" : s.name});
  }
  return out;
}

}  // namespace ccgolog::testkit
