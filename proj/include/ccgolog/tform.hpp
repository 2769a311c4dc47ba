#pragma once

// Temporal formulas: closed Boolean combinations of comparisons between a
// continuous fluent and a real bound.

#include <memory>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "ccgolog/rational.hpp"

namespace ccgolog {

enum class CompareOp { kLess, kLessEq, kEqual, kGreaterEq, kGreater };

inline const char* to_string(CompareOp op) {
  switch (op) {
    case CompareOp::kLess: return "<";
    case CompareOp::kLessEq: return "<=";
    case CompareOp::kEqual: return "=";
    case CompareOp::kGreaterEq: return ">=";
    case CompareOp::kGreater: return ">";
  }
  return "?";
}

inline std::optional<CompareOp> parse_compare_op(std::string_view text) {
  if (text == "<") return CompareOp::kLess;
  if (text == "<=") return CompareOp::kLessEq;
  if (text == "=") return CompareOp::kEqual;
  if (text == ">=") return CompareOp::kGreaterEq;
  if (text == ">") return CompareOp::kGreater;
  return std::nullopt;
}

template <typename T>
bool compare(const T& lhs, CompareOp op, const T& rhs) {
  switch (op) {
    case CompareOp::kLess: return lhs < rhs;
    case CompareOp::kLessEq: return lhs <= rhs;
    case CompareOp::kEqual: return lhs == rhs;
    case CompareOp::kGreaterEq: return lhs >= rhs;
    case CompareOp::kGreater: return lhs > rhs;
  }
  return false;
}

class TForm;

struct TFormAtom {
  std::string fluent;
  CompareOp op;
  Rational bound;
};
struct TFormAnd;
struct TFormOr;
struct TFormNot;

class TForm {
 public:
  using Node = std::variant<TFormAtom, TFormAnd, TFormOr, TFormNot>;

  static TForm atom(std::string fluent, CompareOp op, Rational bound);
  static TForm conj(TForm lhs, TForm rhs);
  static TForm disj(TForm lhs, TForm rhs);
  static TForm negate(TForm operand);

  const Node& node() const;

  template <typename T>
  bool is() const {
    return std::holds_alternative<T>(node());
  }
  template <typename T>
  const T& as() const {
    return std::get<T>(node());
  }

  bool same_node(const TForm& other) const { return node_.get() == other.node_.get(); }

 private:
  explicit TForm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct TFormAnd {
  TForm lhs, rhs;
};
struct TFormOr {
  TForm lhs, rhs;
};
struct TFormNot {
  TForm operand;
};

inline const TForm::Node& TForm::node() const { return *node_; }

inline TForm TForm::atom(std::string fluent, CompareOp op, Rational bound) {
  bound.canonicalize();
  return TForm(std::make_shared<const Node>(TFormAtom{std::move(fluent), op, std::move(bound)}));
}
inline TForm TForm::conj(TForm lhs, TForm rhs) {
  return TForm(std::make_shared<const Node>(TFormAnd{std::move(lhs), std::move(rhs)}));
}
inline TForm TForm::disj(TForm lhs, TForm rhs) {
  return TForm(std::make_shared<const Node>(TFormOr{std::move(lhs), std::move(rhs)}));
}
inline TForm TForm::negate(TForm operand) {
  return TForm(std::make_shared<const Node>(TFormNot{std::move(operand)}));
}

inline bool operator==(const TForm& a, const TForm& b) {
  if (a.same_node(b)) return true;
  if (a.node().index() != b.node().index()) return false;
  if (const auto* x = std::get_if<TFormAtom>(&a.node())) {
    const auto& y = b.as<TFormAtom>();
    return x->fluent == y.fluent && x->op == y.op && x->bound == y.bound;
  }
  if (const auto* x = std::get_if<TFormAnd>(&a.node())) {
    const auto& y = b.as<TFormAnd>();
    return x->lhs == y.lhs && x->rhs == y.rhs;
  }
  if (const auto* x = std::get_if<TFormOr>(&a.node())) {
    const auto& y = b.as<TFormOr>();
    return x->lhs == y.lhs && x->rhs == y.rhs;
  }
  return a.as<TFormNot>().operand == b.as<TFormNot>().operand;
}

/// Prefix concrete syntax, e.g. "(and (>= robotX 9) (<= robotX 11))".
inline std::string to_string(const TForm& f) {
  if (const auto* a = std::get_if<TFormAtom>(&f.node())) {
    return std::string("(") + to_string(a->op) + " " + a->fluent + " " + to_string(a->bound) + ")";
  }
  if (const auto* a = std::get_if<TFormAnd>(&f.node())) {
    return "(and " + to_string(a->lhs) + " " + to_string(a->rhs) + ")";
  }
  if (const auto* o = std::get_if<TFormOr>(&f.node())) {
    return "(or " + to_string(o->lhs) + " " + to_string(o->rhs) + ")";
  }
  return "(not " + to_string(f.as<TFormNot>().operand) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const TForm& f) { return os << to_string(f); }

/// Negation normal form: Not is pushed through And/Or and absorbed into
/// atoms by flipping the comparison; a negated equality becomes a pair of
/// strict inequalities.
inline TForm normalize_tform(const TForm& f, bool negated = false) {
  if (const auto* a = std::get_if<TFormAtom>(&f.node())) {
    if (!negated) return f;
    switch (a->op) {
      case CompareOp::kLess: return TForm::atom(a->fluent, CompareOp::kGreaterEq, a->bound);
      case CompareOp::kLessEq: return TForm::atom(a->fluent, CompareOp::kGreater, a->bound);
      case CompareOp::kGreaterEq: return TForm::atom(a->fluent, CompareOp::kLess, a->bound);
      case CompareOp::kGreater: return TForm::atom(a->fluent, CompareOp::kLessEq, a->bound);
      case CompareOp::kEqual:
        return TForm::disj(TForm::atom(a->fluent, CompareOp::kLess, a->bound),
                           TForm::atom(a->fluent, CompareOp::kGreater, a->bound));
    }
  }
  if (const auto* c = std::get_if<TFormAnd>(&f.node())) {
    auto lhs = normalize_tform(c->lhs, negated);
    auto rhs = normalize_tform(c->rhs, negated);
    return negated ? TForm::disj(std::move(lhs), std::move(rhs))
                   : TForm::conj(std::move(lhs), std::move(rhs));
  }
  if (const auto* d = std::get_if<TFormOr>(&f.node())) {
    auto lhs = normalize_tform(d->lhs, negated);
    auto rhs = normalize_tform(d->rhs, negated);
    return negated ? TForm::conj(std::move(lhs), std::move(rhs))
                   : TForm::disj(std::move(lhs), std::move(rhs));
  }
  return normalize_tform(f.as<TFormNot>().operand, !negated);
}

inline bool is_negation_normal(const TForm& f) {
  if (f.is<TFormAtom>()) return true;
  if (const auto* c = std::get_if<TFormAnd>(&f.node())) {
    return is_negation_normal(c->lhs) && is_negation_normal(c->rhs);
  }
  if (const auto* d = std::get_if<TFormOr>(&f.node())) {
    return is_negation_normal(d->lhs) && is_negation_normal(d->rhs);
  }
  return false;
}

template <typename F>
void for_each_atom(const TForm& f, F&& visit) {
  if (const auto* a = std::get_if<TFormAtom>(&f.node())) {
    visit(*a);
  } else if (const auto* c = std::get_if<TFormAnd>(&f.node())) {
    for_each_atom(c->lhs, visit);
    for_each_atom(c->rhs, visit);
  } else if (const auto* d = std::get_if<TFormOr>(&f.node())) {
    for_each_atom(d->lhs, visit);
    for_each_atom(d->rhs, visit);
  } else {
    for_each_atom(f.as<TFormNot>().operand, visit);
  }
}

}  // namespace ccgolog
