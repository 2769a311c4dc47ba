#pragma once

// Symbolic functions of time: the values of continuous fluents.

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ccgolog/rational.hpp"

namespace ccgolog {

struct Constant {
  Rational value;
  friend bool operator==(const Constant&, const Constant&) = default;
};

/// x + rate * (t - origin_time)
struct Linear {
  Rational origin_value;
  Rational rate;
  TimePoint origin_time;
  friend bool operator==(const Linear&, const Linear&) = default;
};

struct Breakpoint {
  TimePoint time;
  Rational value;
  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

/// Linear interpolation between breakpoints. Held at the first breakpoint's
/// value before it; continues at final_rate after the last one.
struct PiecewiseLinear {
  std::vector<Breakpoint> breaks;
  Rational final_rate;
  friend bool operator==(const PiecewiseLinear&, const PiecewiseLinear&) = default;
};

/// One linear piece of a t-function over a closed time range. Missing ends
/// are unbounded.
struct Segment {
  std::optional<Rational> from;
  std::optional<Rational> to;
  Rational anchor_time;
  Rational anchor_value;
  Rational rate;

  Rational value_at(const Rational& t) const { return anchor_value + rate * (t - anchor_time); }
};

class TFunction {
 public:
  using Rep = std::variant<Constant, Linear, PiecewiseLinear>;

  TFunction() : rep_(Constant{Rational(0)}) {}

  static TFunction constant(Rational x) { return TFunction(Constant{std::move(x)}); }

  static TFunction linear(Rational x, Rational rate, TimePoint t0) {
    return TFunction(Linear{std::move(x), std::move(rate), std::move(t0)});
  }

  /// Throws std::invalid_argument unless breaks is nonempty and strictly
  /// increasing in time.
  static TFunction piecewise(std::vector<Breakpoint> breaks, Rational final_rate) {
    if (breaks.empty()) throw std::invalid_argument("piecewise function needs a breakpoint");
    for (std::size_t i = 1; i < breaks.size(); ++i) {
      if (!(breaks[i - 1].time < breaks[i].time)) {
        throw std::invalid_argument("piecewise breakpoints must be strictly increasing in time");
      }
    }
    return TFunction(PiecewiseLinear{std::move(breaks), std::move(final_rate)});
  }

  const Rep& rep() const { return rep_; }

  template <typename T>
  bool is() const {
    return std::holds_alternative<T>(rep_);
  }
  template <typename T>
  const T& as() const {
    return std::get<T>(rep_);
  }

  /// The function as closed linear pieces covering the whole time line.
  std::vector<Segment> segments() const {
    std::vector<Segment> out;
    if (const auto* c = std::get_if<Constant>(&rep_)) {
      out.push_back({std::nullopt, std::nullopt, Rational(0), c->value, Rational(0)});
    } else if (const auto* l = std::get_if<Linear>(&rep_)) {
      out.push_back({std::nullopt, std::nullopt, l->origin_time.value(), l->origin_value, l->rate});
    } else {
      const auto& p = std::get<PiecewiseLinear>(rep_);
      const auto& b = p.breaks;
      out.push_back({std::nullopt, b.front().time.value(), b.front().time.value(), b.front().value,
                     Rational(0)});
      for (std::size_t i = 0; i + 1 < b.size(); ++i) {
        Rational rate = (b[i + 1].value - b[i].value) / (b[i + 1].time.value() - b[i].time.value());
        out.push_back({b[i].time.value(), b[i + 1].time.value(), b[i].time.value(), b[i].value, rate});
      }
      out.push_back({b.back().time.value(), std::nullopt, b.back().time.value(), b.back().value,
                     p.final_rate});
    }
    return out;
  }

  friend bool operator==(const TFunction&, const TFunction&) = default;

 private:
  explicit TFunction(Rep rep) : rep_(std::move(rep)) {}
  Rep rep_;
};

/// The value of f at time t.
inline Rational val(const TFunction& f, const TimePoint& t) {
  if (const auto* c = std::get_if<Constant>(&f.rep())) return c->value;
  if (const auto* l = std::get_if<Linear>(&f.rep())) {
    return l->origin_value + l->rate * (t.value() - l->origin_time.value());
  }
  const auto& p = f.as<PiecewiseLinear>();
  const auto& b = p.breaks;
  if (t <= b.front().time) return b.front().value;
  if (t >= b.back().time) return b.back().value + p.final_rate * (t.value() - b.back().time.value());
  // First breakpoint strictly after t.
  std::size_t hi = 1;
  while (b[hi].time <= t) ++hi;
  const Breakpoint& left = b[hi - 1];
  const Breakpoint& right = b[hi];
  Rational rate = (right.value - left.value) / (right.time.value() - left.time.value());
  return left.value + rate * (t.value() - left.time.value());
}

inline std::string to_string(const TFunction& f) {
  if (const auto* c = std::get_if<Constant>(&f.rep())) return "(constant " + to_string(c->value) + ")";
  if (const auto* l = std::get_if<Linear>(&f.rep())) {
    return "(linear " + to_string(l->origin_value) + " " + to_string(l->rate) + " " +
           to_string(l->origin_time.value()) + ")";
  }
  const auto& p = f.as<PiecewiseLinear>();
  std::string out = "(piecewise " + to_string(p.final_rate);
  for (const auto& b : p.breaks) {
    out += " (" + to_string(b.time.value()) + " " + to_string(b.value) + ")";
  }
  return out + ")";
}

inline std::ostream& operator<<(std::ostream& os, const TFunction& f) { return os << to_string(f); }

}  // namespace ccgolog
