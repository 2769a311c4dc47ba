#pragma once

// Finite unions of intervals over exact rationals, kept in a unique
// canonical form: sorted, nonempty, pairwise disjoint, and never touching at
// a covered endpoint.

#include <algorithm>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "ccgolog/rational.hpp"

namespace ccgolog {

/// An interval endpoint. A missing value is infinite (and then `closed` is
/// meaningless and kept false).
struct Bound {
  std::optional<Rational> value;
  bool closed = false;

  static Bound infinite() { return Bound{}; }
  static Bound at(Rational v, bool closed) { return Bound{std::move(v), closed}; }
  bool finite() const { return value.has_value(); }

  friend bool operator==(const Bound& a, const Bound& b) {
    if (a.finite() != b.finite()) return false;
    if (!a.finite()) return true;
    return *a.value == *b.value && a.closed == b.closed;
  }
};

struct Interval {
  Bound lower;
  Bound upper;

  static Interval all() { return Interval{Bound::infinite(), Bound::infinite()}; }
  static Interval point(const Rational& t) { return Interval{Bound::at(t, true), Bound::at(t, true)}; }
  static Interval closed(const Rational& a, const Rational& b) {
    return Interval{Bound::at(a, true), Bound::at(b, true)};
  }

  bool empty() const {
    if (!lower.finite() || !upper.finite()) return false;
    int c = cmp(*lower.value, *upper.value);
    if (c > 0) return true;
    return c == 0 && !(lower.closed && upper.closed);
  }

  bool contains(const Rational& t) const {
    if (lower.finite()) {
      int c = cmp(t, *lower.value);
      if (c < 0 || (c == 0 && !lower.closed)) return false;
    }
    if (upper.finite()) {
      int c = cmp(t, *upper.value);
      if (c > 0 || (c == 0 && !upper.closed)) return false;
    }
    return true;
  }

  friend bool operator==(const Interval&, const Interval&) = default;
};

namespace detail {

// Orders lower bounds by the set of points they admit: -inf first, and at
// equal values a closed bound before an open one.
inline int compare_lower(const Bound& a, const Bound& b) {
  if (!a.finite() || !b.finite()) return (a.finite() ? 1 : 0) - (b.finite() ? 1 : 0);
  int c = cmp(*a.value, *b.value);
  if (c != 0) return c;
  return (a.closed ? 0 : 1) - (b.closed ? 0 : 1);
}

// Orders upper bounds: +inf last, and at equal values an open bound before a
// closed one.
inline int compare_upper(const Bound& a, const Bound& b) {
  if (!a.finite() || !b.finite()) return (a.finite() ? 0 : 1) - (b.finite() ? 0 : 1);
  int c = cmp(*a.value, *b.value);
  if (c != 0) return c;
  return (a.closed ? 1 : 0) - (b.closed ? 1 : 0);
}

// True when an interval ending at `upper` and one starting at `lower` (not
// before it) overlap or share a covered endpoint.
inline bool joins(const Bound& upper, const Bound& lower) {
  if (!upper.finite() || !lower.finite()) return true;
  int c = cmp(*lower.value, *upper.value);
  if (c < 0) return true;
  return c == 0 && (upper.closed || lower.closed);
}

}  // namespace detail

class IntervalSet {
 public:
  IntervalSet() = default;

  static IntervalSet empty_set() { return IntervalSet(); }
  static IntervalSet all() { return IntervalSet(std::vector<Interval>{Interval::all()}); }
  static IntervalSet of(Interval i) { return IntervalSet(std::vector<Interval>{std::move(i)}); }
  static IntervalSet point(const Rational& t) { return of(Interval::point(t)); }
  /// [t, +inf) or (t, +inf).
  static IntervalSet from(const Rational& t, bool closed) {
    return of(Interval{Bound::at(t, closed), Bound::infinite()});
  }
  /// (-inf, t] or (-inf, t).
  static IntervalSet until(const Rational& t, bool closed) {
    return of(Interval{Bound::infinite(), Bound::at(t, closed)});
  }
  static IntervalSet from_intervals(std::vector<Interval> intervals) {
    return IntervalSet(std::move(intervals));
  }

  const std::vector<Interval>& intervals() const { return intervals_; }
  bool empty() const { return intervals_.empty(); }

  bool contains(const Rational& t) const {
    return std::any_of(intervals_.begin(), intervals_.end(),
                       [&](const Interval& i) { return i.contains(t); });
  }

  IntervalSet unite(const IntervalSet& other) const {
    std::vector<Interval> all = intervals_;
    all.insert(all.end(), other.intervals_.begin(), other.intervals_.end());
    return IntervalSet(std::move(all));
  }

  IntervalSet intersect(const IntervalSet& other) const {
    std::vector<Interval> out;
    std::size_t i = 0, j = 0;
    while (i < intervals_.size() && j < other.intervals_.size()) {
      const Interval& a = intervals_[i];
      const Interval& b = other.intervals_[j];
      Interval cut{detail::compare_lower(a.lower, b.lower) >= 0 ? a.lower : b.lower,
                   detail::compare_upper(a.upper, b.upper) <= 0 ? a.upper : b.upper};
      if (!cut.empty()) out.push_back(std::move(cut));
      if (detail::compare_upper(a.upper, b.upper) <= 0) {
        ++i;
      } else {
        ++j;
      }
    }
    return IntervalSet(std::move(out));
  }

  IntervalSet complement() const {
    std::vector<Interval> out;
    Bound next_lower = Bound::infinite();
    for (const Interval& i : intervals_) {
      if (i.lower.finite()) {
        out.push_back(Interval{next_lower, Bound::at(*i.lower.value, !i.lower.closed)});
      }
      if (!i.upper.finite()) return IntervalSet(std::move(out));
      next_lower = Bound::at(*i.upper.value, !i.upper.closed);
    }
    out.push_back(Interval{next_lower, Bound::infinite()});
    return IntervalSet(std::move(out));
  }

  /// The least element, if the set has one (nonempty, bounded below, and
  /// closed at its lower endpoint).
  std::optional<Rational> minimum() const {
    if (intervals_.empty()) return std::nullopt;
    const Bound& lo = intervals_.front().lower;
    if (!lo.finite() || !lo.closed) return std::nullopt;
    return *lo.value;
  }

  /// The greatest lower bound, when finite.
  std::optional<Rational> infimum() const {
    if (intervals_.empty()) return std::nullopt;
    return intervals_.front().lower.value;
  }

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  explicit IntervalSet(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
    canonicalize();
  }

  void canonicalize() {
    std::erase_if(intervals_, [](const Interval& i) { return i.empty(); });
    std::sort(intervals_.begin(), intervals_.end(), [](const Interval& a, const Interval& b) {
      return detail::compare_lower(a.lower, b.lower) < 0;
    });
    std::vector<Interval> merged;
    for (Interval& i : intervals_) {
      if (!merged.empty() && detail::joins(merged.back().upper, i.lower)) {
        if (detail::compare_upper(merged.back().upper, i.upper) < 0) {
          merged.back().upper = std::move(i.upper);
        }
      } else {
        merged.push_back(std::move(i));
      }
    }
    intervals_ = std::move(merged);
  }

  std::vector<Interval> intervals_;
};

inline std::string to_string(const Interval& i) {
  std::string out = i.lower.finite() ? (i.lower.closed ? "[" : "(") + to_string(*i.lower.value)
                                     : "(-inf";
  out += ", ";
  out += i.upper.finite() ? to_string(*i.upper.value) + (i.upper.closed ? "]" : ")") : "+inf)";
  return out;
}

inline std::string to_string(const IntervalSet& s) {
  if (s.empty()) return "{}";
  std::string out;
  for (const auto& i : s.intervals()) {
    if (!out.empty()) out += " u ";
    out += to_string(i);
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const IntervalSet& s) { return os << to_string(s); }

}  // namespace ccgolog
