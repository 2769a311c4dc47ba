#pragma once

// Evaluation of t-forms over time and least time points.

#include <map>
#include <optional>
#include <string>

#include "ccgolog/errors.hpp"
#include "ccgolog/interval_set.hpp"
#include "ccgolog/program.hpp"
#include "ccgolog/time_function.hpp"
#include "ccgolog/tform.hpp"

namespace ccgolog {

/// Fluent values of one situation.
struct Valuation {
  std::map<std::string, TFunction> continuous;
  std::map<std::string, Value> discrete;

  const TFunction& continuous_value(const std::string& fluent) const {
    auto it = continuous.find(fluent);
    if (it == continuous.end()) throw DomainError("unknown continuous fluent '" + fluent + "'");
    return it->second;
  }

  const Value& discrete_value(const std::string& fluent) const {
    auto it = discrete.find(fluent);
    if (it == discrete.end()) throw DomainError("unknown discrete fluent '" + fluent + "'");
    return it->second;
  }

  friend bool operator==(const Valuation& a, const Valuation& b) {
    if (a.continuous != b.continuous || a.discrete.size() != b.discrete.size()) return false;
    auto it = b.discrete.begin();
    for (const auto& [name, value] : a.discrete) {
      if (name != it->first || !values_equal(value, it->second)) return false;
      ++it;
    }
    return true;
  }
};

/// Truth of φ at time t, each atom (F op r) read as val(v[F], t) op r.
inline bool holds(const TForm& phi, const Valuation& v, const TimePoint& t) {
  if (const auto* a = std::get_if<TFormAtom>(&phi.node())) {
    return compare(val(v.continuous_value(a->fluent), t), a->op, a->bound);
  }
  if (const auto* c = std::get_if<TFormAnd>(&phi.node())) {
    return holds(c->lhs, v, t) && holds(c->rhs, v, t);
  }
  if (const auto* d = std::get_if<TFormOr>(&phi.node())) {
    return holds(d->lhs, v, t) || holds(d->rhs, v, t);
  }
  return !holds(phi.as<TFormNot>().operand, v, t);
}

namespace detail {

// Where value(t) = anchor_value + rate * (t - anchor_time) satisfies `op bound`,
// over the whole time line.
inline IntervalSet solve_linear(const Segment& s, CompareOp op, const Rational& bound) {
  if (sgn(s.rate) == 0) {
    return compare(s.anchor_value, op, bound) ? IntervalSet::all() : IntervalSet::empty_set();
  }
  Rational root = s.anchor_time + (bound - s.anchor_value) / s.rate;
  bool rising = sgn(s.rate) > 0;
  switch (op) {
    case CompareOp::kEqual: return IntervalSet::point(root);
    case CompareOp::kLess:
      return rising ? IntervalSet::until(root, false) : IntervalSet::from(root, false);
    case CompareOp::kLessEq:
      return rising ? IntervalSet::until(root, true) : IntervalSet::from(root, true);
    case CompareOp::kGreater:
      return rising ? IntervalSet::from(root, false) : IntervalSet::until(root, false);
    case CompareOp::kGreaterEq:
      return rising ? IntervalSet::from(root, true) : IntervalSet::until(root, true);
  }
  return IntervalSet::empty_set();
}

}  // namespace detail

/// Times (over the whole line) at which val(f, t) op bound.
inline IntervalSet solve_atom(const TFunction& f, CompareOp op, const Rational& bound) {
  IntervalSet out;
  for (const Segment& s : f.segments()) {
    IntervalSet domain = IntervalSet::of(Interval{
        s.from ? Bound::at(*s.from, true) : Bound::infinite(),
        s.to ? Bound::at(*s.to, true) : Bound::infinite()});
    out = out.unite(detail::solve_linear(s, op, bound).intersect(domain));
  }
  return out;
}

namespace detail {

inline IntervalSet solve_unbounded(const TForm& phi, const Valuation& v) {
  if (const auto* a = std::get_if<TFormAtom>(&phi.node())) {
    return solve_atom(v.continuous_value(a->fluent), a->op, a->bound);
  }
  if (const auto* c = std::get_if<TFormAnd>(&phi.node())) {
    IntervalSet lhs = solve_unbounded(c->lhs, v);
    if (lhs.empty()) return lhs;
    return lhs.intersect(solve_unbounded(c->rhs, v));
  }
  if (const auto* d = std::get_if<TFormOr>(&phi.node())) {
    return solve_unbounded(d->lhs, v).unite(solve_unbounded(d->rhs, v));
  }
  // Only reached for input outside negation normal form.
  return solve_unbounded(phi.as<TFormNot>().operand, v).complement();
}

}  // namespace detail

/// The canonical set {t >= window_start | holds(φ, v, t)}. Expects φ in
/// negation normal form; a residual Not is handled by complementing.
inline IntervalSet solve_tform(const TForm& phi, const Valuation& v, const TimePoint& window_start) {
  return detail::solve_unbounded(phi, v).intersect(IntervalSet::from(window_start.value(), true));
}

/// The least time point at or after `start` where φ holds. Absent when φ
/// never holds again or when the infimum of its solution set is not attained.
inline std::optional<TimePoint> ltp(const TForm& phi, const Valuation& v, const TimePoint& start) {
  IntervalSet solutions = solve_tform(normalize_tform(phi), v, start);
  if (auto least = solutions.minimum()) return TimePoint(*least);
  return std::nullopt;
}

}  // namespace ccgolog
