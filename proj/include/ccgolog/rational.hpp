#pragma once

// Exact rational numbers and time points.
//
// All fluent values and time points are exact rationals so that endpoint
// openness of solution sets (and therefore least time points) is decided
// exactly.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace ccgolog {

using Rational = mpq_class;

/// Parses "-12", "3/4", "-2.125". Returns nullopt on anything else.
inline std::optional<Rational> parse_rational(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::size_t pos = 0;
  bool negative = false;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    pos = 1;
  }
  auto digits = [&](std::size_t from) {
    std::size_t i = from;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    return i;
  };
  std::size_t int_end = digits(pos);
  if (int_end == pos) return std::nullopt;
  std::string numerator(text.substr(pos, int_end - pos));
  std::string denominator = "1";
  if (int_end < text.size()) {
    if (text[int_end] == '/') {
      std::size_t den_end = digits(int_end + 1);
      if (den_end == int_end + 1 || den_end != text.size()) return std::nullopt;
      denominator = std::string(text.substr(int_end + 1, den_end - int_end - 1));
      if (denominator.find_first_not_of('0') == std::string::npos) return std::nullopt;
    } else if (text[int_end] == '.') {
      std::size_t frac_end = digits(int_end + 1);
      if (frac_end == int_end + 1 || frac_end != text.size()) return std::nullopt;
      numerator += std::string(text.substr(int_end + 1, frac_end - int_end - 1));
      denominator = "1" + std::string(frac_end - int_end - 1, '0');
    } else {
      return std::nullopt;
    }
  }
  Rational result{mpz_class(numerator, 10), mpz_class(denominator, 10)};
  result.canonicalize();
  if (negative) result = -result;
  return result;
}

/// "50", "-3", "1/3": integers without a denominator.
inline std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Always "p/q", including "20/1".
inline std::string to_fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Fixed-point rendering rounded half away from zero.
inline std::string to_decimal_string(const Rational& r, int places = 6) {
  mpz_class scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  Rational scaled = abs(r) * scale;
  mpz_class whole = scaled.get_num() / scaled.get_den();
  Rational remainder = scaled - Rational(whole);
  if (remainder * 2 >= 1) whole += 1;
  std::string digits = whole.get_str();
  if (digits.size() <= static_cast<std::size_t>(places)) {
    digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
  }
  std::string out;
  if (sgn(r) < 0 && whole != 0) out.push_back('-');
  out += digits.substr(0, digits.size() - places);
  if (places > 0) {
    out.push_back('.');
    out += digits.substr(digits.size() - places);
  }
  return out;
}

/// A point on the (finite) time line, in seconds.
class TimePoint {
 public:
  TimePoint() = default;
  explicit TimePoint(Rational value) : value_(std::move(value)) { value_.canonicalize(); }
  explicit TimePoint(long value) : value_(value) {}

  const Rational& value() const { return value_; }

  friend bool operator==(const TimePoint& a, const TimePoint& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const TimePoint& a, const TimePoint& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  friend std::ostream& operator<<(std::ostream& os, const TimePoint& t) {
    return os << to_string(t.value_);
  }

 private:
  Rational value_{0};
};

}  // namespace ccgolog
