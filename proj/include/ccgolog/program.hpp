#pragma once

// Abstract syntax of cc-Golog: constants, test formulas, action terms and
// programs. All node types are immutable and shared.
//
// Core constructs: nil, primitive action, test, seq, if, while, tryAll,
// withPol. Surface constructs (whenever, withCtrl, par, prio and procedure
// calls written as primitive actions) are removed by expand_macros().

#include <memory>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ccgolog/rational.hpp"
#include "ccgolog/tform.hpp"

namespace ccgolog {

struct Symbol {
  std::string name;
  friend bool operator==(const Symbol&, const Symbol&) = default;
};

/// A ground constant: discrete fluent values and action arguments.
using Value = std::variant<bool, Rational, Symbol>;

inline std::string to_string(const Value& v) {
  if (const auto* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  if (const auto* r = std::get_if<Rational>(&v)) return to_string(*r);
  return std::get<Symbol>(v).name;
}

inline bool values_equal(const Value& a, const Value& b) {
  if (a.index() != b.index()) return false;
  if (const auto* r = std::get_if<Rational>(&a)) return *r == std::get<Rational>(b);
  if (const auto* s = std::get_if<Symbol>(&a)) return *s == std::get<Symbol>(b);
  return std::get<bool>(a) == std::get<bool>(b);
}

// ---------------------------------------------------------------------------
// Formulas (conditions of test, if, while and preconditions)

class Formula;
struct FormulaConst {
  bool value;
};
/// A boolean discrete fluent used as a condition, e.g. `wheels`.
struct FormulaFluent {
  std::string name;
};
/// (op fluent value); for a continuous fluent this is a t-form atom
/// evaluated at the start of the situation.
struct FormulaCompare {
  std::string fluent;
  CompareOp op;
  Value value;
};
struct FormulaAnd;
struct FormulaOr;
struct FormulaNot;

class Formula {
 public:
  using Node =
      std::variant<FormulaConst, FormulaFluent, FormulaCompare, FormulaAnd, FormulaOr, FormulaNot>;

  static Formula constant(bool value);
  static Formula fluent(std::string name);
  static Formula compare(std::string fluent, CompareOp op, Value value);
  static Formula conj(Formula lhs, Formula rhs);
  static Formula disj(Formula lhs, Formula rhs);
  static Formula negate(Formula operand);

  const Node& node() const;
  template <typename T>
  bool is() const {
    return std::holds_alternative<T>(node());
  }
  template <typename T>
  const T& as() const {
    return std::get<T>(node());
  }
  bool same_node(const Formula& other) const { return node_.get() == other.node_.get(); }

 private:
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct FormulaAnd {
  Formula lhs, rhs;
};
struct FormulaOr {
  Formula lhs, rhs;
};
struct FormulaNot {
  Formula operand;
};

inline const Formula::Node& Formula::node() const { return *node_; }

inline Formula Formula::constant(bool value) {
  static const Formula kTrue(std::make_shared<const Node>(FormulaConst{true}));
  static const Formula kFalse(std::make_shared<const Node>(FormulaConst{false}));
  return value ? kTrue : kFalse;
}
inline Formula Formula::fluent(std::string name) {
  return Formula(std::make_shared<const Node>(FormulaFluent{std::move(name)}));
}
inline Formula Formula::compare(std::string fluent, CompareOp op, Value value) {
  if (auto* r = std::get_if<Rational>(&value)) r->canonicalize();
  return Formula(std::make_shared<const Node>(FormulaCompare{std::move(fluent), op, std::move(value)}));
}
inline Formula Formula::conj(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(FormulaAnd{std::move(lhs), std::move(rhs)}));
}
inline Formula Formula::disj(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(FormulaOr{std::move(lhs), std::move(rhs)}));
}
inline Formula Formula::negate(Formula operand) {
  return Formula(std::make_shared<const Node>(FormulaNot{std::move(operand)}));
}

inline bool operator==(const Formula& a, const Formula& b) {
  if (a.same_node(b)) return true;
  if (a.node().index() != b.node().index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = b.as<T>();
        if constexpr (std::is_same_v<T, FormulaConst>) {
          return x.value == y.value;
        } else if constexpr (std::is_same_v<T, FormulaFluent>) {
          return x.name == y.name;
        } else if constexpr (std::is_same_v<T, FormulaCompare>) {
          return x.fluent == y.fluent && x.op == y.op && values_equal(x.value, y.value);
        } else if constexpr (std::is_same_v<T, FormulaNot>) {
          return x.operand == y.operand;
        } else {
          return x.lhs == y.lhs && x.rhs == y.rhs;
        }
      },
      a.node());
}

inline std::string to_string(const Formula& f) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, FormulaConst>) {
          return x.value ? "true" : "false";
        } else if constexpr (std::is_same_v<T, FormulaFluent>) {
          return x.name;
        } else if constexpr (std::is_same_v<T, FormulaCompare>) {
          return std::string("(") + to_string(x.op) + " " + x.fluent + " " + to_string(x.value) + ")";
        } else if constexpr (std::is_same_v<T, FormulaAnd>) {
          return "(and " + to_string(x.lhs) + " " + to_string(x.rhs) + ")";
        } else if constexpr (std::is_same_v<T, FormulaOr>) {
          return "(or " + to_string(x.lhs) + " " + to_string(x.rhs) + ")";
        } else {
          return "(not " + to_string(x.operand) + ")";
        }
      },
      f.node());
}

inline std::ostream& operator<<(std::ostream& os, const Formula& f) { return os << to_string(f); }

/// Reads a t-form as a test condition (same atoms, evaluated at start(s)).
inline Formula to_formula(const TForm& t) {
  if (const auto* a = std::get_if<TFormAtom>(&t.node())) {
    return Formula::compare(a->fluent, a->op, a->bound);
  }
  if (const auto* c = std::get_if<TFormAnd>(&t.node())) {
    return Formula::conj(to_formula(c->lhs), to_formula(c->rhs));
  }
  if (const auto* d = std::get_if<TFormOr>(&t.node())) {
    return Formula::disj(to_formula(d->lhs), to_formula(d->rhs));
  }
  return Formula::negate(to_formula(t.as<TFormNot>().operand));
}

// ---------------------------------------------------------------------------
// Action terms

struct NamedAction {
  std::string name;
  std::vector<Value> args;
};

/// Either a named domain action or the distinguished waitFor(φ).
class ActionTerm {
 public:
  static ActionTerm named(std::string name, std::vector<Value> args = {}) {
    for (auto& a : args) {
      if (auto* r = std::get_if<Rational>(&a)) r->canonicalize();
    }
    return ActionTerm(NamedAction{std::move(name), std::move(args)});
  }
  static ActionTerm wait_for(TForm condition) { return ActionTerm(std::move(condition)); }

  bool is_wait_for() const { return std::holds_alternative<TForm>(rep_); }
  const TForm& condition() const { return std::get<TForm>(rep_); }
  const NamedAction& named_action() const { return std::get<NamedAction>(rep_); }
  /// "waitFor" for waitFor actions.
  const std::string& name() const {
    static const std::string kWaitFor = "waitFor";
    return is_wait_for() ? kWaitFor : named_action().name;
  }

  friend bool operator==(const ActionTerm& a, const ActionTerm& b) {
    if (a.is_wait_for() != b.is_wait_for()) return false;
    if (a.is_wait_for()) return a.condition() == b.condition();
    const auto& x = a.named_action();
    const auto& y = b.named_action();
    if (x.name != y.name || x.args.size() != y.args.size()) return false;
    for (std::size_t i = 0; i < x.args.size(); ++i) {
      if (!values_equal(x.args[i], y.args[i])) return false;
    }
    return true;
  }

 private:
  explicit ActionTerm(NamedAction a) : rep_(std::move(a)) {}
  explicit ActionTerm(TForm c) : rep_(std::move(c)) {}
  std::variant<NamedAction, TForm> rep_;
};

/// Concrete program syntax: `endGo`, `(startGo 50)`, `(waitFor (= clock 8))`.
inline std::string to_string(const ActionTerm& a) {
  if (a.is_wait_for()) return "(waitFor " + to_string(a.condition()) + ")";
  const auto& n = a.named_action();
  if (n.args.empty()) return n.name;
  std::string out = "(" + n.name;
  for (const auto& v : n.args) out += " " + to_string(v);
  return out + ")";
}

/// Trace syntax: `endGo`, `startGo(50)`, `waitFor(= clock 8)`.
inline std::string to_trace_string(const ActionTerm& a) {
  if (a.is_wait_for()) {
    std::string cond = to_string(a.condition());
    return "waitFor(" + cond.substr(1, cond.size() - 2) + ")";
  }
  const auto& n = a.named_action();
  if (n.args.empty()) return n.name;
  std::string out = n.name + "(";
  for (std::size_t i = 0; i < n.args.size(); ++i) {
    if (i > 0) out += ",";
    out += to_string(n.args[i]);
  }
  return out + ")";
}

inline std::ostream& operator<<(std::ostream& os, const ActionTerm& a) { return os << to_string(a); }

// ---------------------------------------------------------------------------
// Programs

class Program;
struct Nil {};
struct Prim {
  ActionTerm action;
};
struct Test {
  Formula condition;
};
struct Seq;
struct If;
struct While;
struct TryAll;
struct WithPol;
struct Whenever;
struct WithCtrl;
struct Par;
struct Prio;

class Program {
 public:
  using Node = std::variant<Nil, Prim, Test, Seq, If, While, TryAll, WithPol, Whenever, WithCtrl,
                            Par, Prio>;

  /// The empty program.
  Program();

  static Program nil() { return Program(); }
  static Program prim(ActionTerm a);
  static Program test(Formula condition);
  static Program seq(Program first, Program second);
  static Program if_then_else(Formula condition, Program then_branch, Program else_branch);
  static Program while_loop(Formula condition, Program body);
  static Program try_all(Program lhs, Program rhs);
  static Program with_pol(Program policy, Program main);
  static Program whenever(TForm condition, Program body);
  static Program with_ctrl(Formula guard, Program body);
  static Program par(Program lhs, Program rhs);
  static Program prio(Program high, Program low);

  const Node& node() const;
  template <typename T>
  bool is() const {
    return std::holds_alternative<T>(node());
  }
  template <typename T>
  const T& as() const {
    return std::get<T>(node());
  }
  bool same_node(const Program& other) const { return node_.get() == other.node_.get(); }

 private:
  explicit Program(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Seq {
  Program first, second;
};
struct If {
  Formula condition;
  Program then_branch, else_branch;
};
struct While {
  Formula condition;
  Program body;
};
struct TryAll {
  Program lhs, rhs;
};
struct WithPol {
  Program policy, main;
};
struct Whenever {
  TForm condition;
  Program body;
};
struct WithCtrl {
  Formula guard;
  Program body;
};
struct Par {
  Program lhs, rhs;
};
struct Prio {
  Program high, low;
};

inline const Program::Node& Program::node() const { return *node_; }

inline Program::Program() {
  static const std::shared_ptr<const Node> kNil = std::make_shared<const Node>(Nil{});
  node_ = kNil;
}
inline Program Program::prim(ActionTerm a) {
  return Program(std::make_shared<const Node>(Prim{std::move(a)}));
}
inline Program Program::test(Formula condition) {
  return Program(std::make_shared<const Node>(Test{std::move(condition)}));
}
inline Program Program::seq(Program first, Program second) {
  return Program(std::make_shared<const Node>(Seq{std::move(first), std::move(second)}));
}
inline Program Program::if_then_else(Formula condition, Program then_branch, Program else_branch) {
  return Program(std::make_shared<const Node>(
      If{std::move(condition), std::move(then_branch), std::move(else_branch)}));
}
inline Program Program::while_loop(Formula condition, Program body) {
  return Program(std::make_shared<const Node>(While{std::move(condition), std::move(body)}));
}
inline Program Program::try_all(Program lhs, Program rhs) {
  return Program(std::make_shared<const Node>(TryAll{std::move(lhs), std::move(rhs)}));
}
inline Program Program::with_pol(Program policy, Program main) {
  return Program(std::make_shared<const Node>(WithPol{std::move(policy), std::move(main)}));
}
inline Program Program::whenever(TForm condition, Program body) {
  return Program(std::make_shared<const Node>(Whenever{std::move(condition), std::move(body)}));
}
inline Program Program::with_ctrl(Formula guard, Program body) {
  return Program(std::make_shared<const Node>(WithCtrl{std::move(guard), std::move(body)}));
}
inline Program Program::par(Program lhs, Program rhs) {
  return Program(std::make_shared<const Node>(Par{std::move(lhs), std::move(rhs)}));
}
inline Program Program::prio(Program high, Program low) {
  return Program(std::make_shared<const Node>(Prio{std::move(high), std::move(low)}));
}

/// Structural equality; embedded constants compare as exact rationals.
inline bool program_equal(const Program& p, const Program& q) {
  if (p.same_node(q)) return true;
  if (p.node().index() != q.node().index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = q.as<T>();
        if constexpr (std::is_same_v<T, Nil>) {
          return true;
        } else if constexpr (std::is_same_v<T, Prim>) {
          return x.action == y.action;
        } else if constexpr (std::is_same_v<T, Test>) {
          return x.condition == y.condition;
        } else if constexpr (std::is_same_v<T, Seq>) {
          return program_equal(x.first, y.first) && program_equal(x.second, y.second);
        } else if constexpr (std::is_same_v<T, If>) {
          return x.condition == y.condition && program_equal(x.then_branch, y.then_branch) &&
                 program_equal(x.else_branch, y.else_branch);
        } else if constexpr (std::is_same_v<T, While>) {
          return x.condition == y.condition && program_equal(x.body, y.body);
        } else if constexpr (std::is_same_v<T, TryAll> || std::is_same_v<T, Par>) {
          return program_equal(x.lhs, y.lhs) && program_equal(x.rhs, y.rhs);
        } else if constexpr (std::is_same_v<T, WithPol>) {
          return program_equal(x.policy, y.policy) && program_equal(x.main, y.main);
        } else if constexpr (std::is_same_v<T, Prio>) {
          return program_equal(x.high, y.high) && program_equal(x.low, y.low);
        } else if constexpr (std::is_same_v<T, Whenever>) {
          return x.condition == y.condition && program_equal(x.body, y.body);
        } else {
          static_assert(std::is_same_v<T, WithCtrl>);
          return x.guard == y.guard && program_equal(x.body, y.body);
        }
      },
      p.node());
}

inline bool operator==(const Program& p, const Program& q) { return program_equal(p, q); }

/// Concrete syntax accepted by parse_program().
inline std::string print_program(const Program& p) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Nil>) {
          return "nil";
        } else if constexpr (std::is_same_v<T, Prim>) {
          return to_string(x.action);
        } else if constexpr (std::is_same_v<T, Test>) {
          return "(test " + to_string(x.condition) + ")";
        } else if constexpr (std::is_same_v<T, Seq>) {
          return "(seq " + print_program(x.first) + " " + print_program(x.second) + ")";
        } else if constexpr (std::is_same_v<T, If>) {
          return "(if " + to_string(x.condition) + " " + print_program(x.then_branch) + " " +
                 print_program(x.else_branch) + ")";
        } else if constexpr (std::is_same_v<T, While>) {
          return "(while " + to_string(x.condition) + " " + print_program(x.body) + ")";
        } else if constexpr (std::is_same_v<T, TryAll>) {
          return "(tryAll " + print_program(x.lhs) + " " + print_program(x.rhs) + ")";
        } else if constexpr (std::is_same_v<T, WithPol>) {
          return "(withPol " + print_program(x.policy) + " " + print_program(x.main) + ")";
        } else if constexpr (std::is_same_v<T, Whenever>) {
          return "(whenever " + to_string(x.condition) + " " + print_program(x.body) + ")";
        } else if constexpr (std::is_same_v<T, WithCtrl>) {
          return "(withCtrl " + to_string(x.guard) + " " + print_program(x.body) + ")";
        } else if constexpr (std::is_same_v<T, Par>) {
          return "(par " + print_program(x.lhs) + " " + print_program(x.rhs) + ")";
        } else {
          return "(prio " + print_program(x.high) + " " + print_program(x.low) + ")";
        }
      },
      p.node());
}

inline std::ostream& operator<<(std::ostream& os, const Program& p) { return os << print_program(p); }

/// True when no surface construct remains. Procedure calls are not detected
/// here since they look like primitive actions.
inline bool is_core(const Program& p) {
  return std::visit(
      [](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Nil> || std::is_same_v<T, Prim> || std::is_same_v<T, Test>) {
          return true;
        } else if constexpr (std::is_same_v<T, Seq>) {
          return is_core(x.first) && is_core(x.second);
        } else if constexpr (std::is_same_v<T, If>) {
          return is_core(x.then_branch) && is_core(x.else_branch);
        } else if constexpr (std::is_same_v<T, While>) {
          return is_core(x.body);
        } else if constexpr (std::is_same_v<T, TryAll>) {
          return is_core(x.lhs) && is_core(x.rhs);
        } else if constexpr (std::is_same_v<T, WithPol>) {
          return is_core(x.policy) && is_core(x.main);
        } else {
          return false;
        }
      },
      p.node());
}

}  // namespace ccgolog
