#pragma once

// Elimination of surface constructs:
//   whenever(τ, σ)  => while(true, seq(waitFor(τ), σ))
//   withCtrl(φ, σ)  => σ with each primitive action or test α replaced by
//                      if(φ, α, false?)
//   par(σ1, σ2)     => tryAll(seq(σ1, setFlg1, flg2?), seq(σ2, setFlg2, flg1?))
//   prio(σ1, σ2)    => withPol(seq(σ1, setFlg), seq(σ2, flg?))
// and inlining of procedure calls.

#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "ccgolog/domain.hpp"
#include "ccgolog/parser.hpp"
#include "ccgolog/program.hpp"
#include "ccgolog/validate.hpp"

namespace ccgolog {

/// Deterministic source of hidden names, all carrying the reserved "__"
/// prefix.
class NameGenerator {
 public:
  explicit NameGenerator(unsigned seed = 0) : counter_(seed) {}

  /// A fresh flag fluent and its setter action, neither declared in d.
  std::pair<std::string, std::string> fresh_flag(const Domain& d) {
    for (;;) {
      std::string n = std::to_string(++counter_);
      std::string flag = "__flg" + n;
      std::string setter = "__setFlg" + n;
      if (!d.is_continuous(flag) && !d.is_discrete(flag) && !d.actions.contains(setter) &&
          !d.procedures.contains(setter)) {
        return {flag, setter};
      }
    }
  }

 private:
  unsigned counter_;
};

struct Expansion {
  Program program;
  Domain domain;
};

namespace detail {

class MacroExpander {
 public:
  MacroExpander(Domain d, NameGenerator& names) : domain_(std::move(d)), names_(names) {}

  Program expand(const Program& p) {
    return std::visit([&](const auto& x) { return expand_node(p, x); }, p.node());
  }

  Domain take_domain() { return std::move(domain_); }

 private:
  Program expand_node(const Program& p, const Nil&) { return p; }
  Program expand_node(const Program& p, const Test&) { return p; }

  Program expand_node(const Program& p, const Prim& x) {
    if (x.action.is_wait_for()) return p;
    const auto& call = x.action.named_action();
    auto it = domain_.procedures.find(call.name);
    if (it == domain_.procedures.end()) return p;
    const Procedure& proc = it->second;
    if (proc.params.size() != call.args.size()) {
      throw ValidationError(ValidationError::Kind::kArityMismatch,
                            "procedure '" + call.name + "' expects " +
                                std::to_string(proc.params.size()) + " argument(s)");
    }
    if (++depth_ > kMaxDepth) {
      throw ValidationError(ValidationError::Kind::kRecursiveProcedure,
                            "procedure expansion of '" + call.name + "' does not terminate");
    }
    std::map<std::string, std::string> bindings;
    for (std::size_t i = 0; i < proc.params.size(); ++i) {
      bindings.emplace(proc.params[i], to_string(call.args[i]));
    }
    Program body = expand(parse_program(substitute(proc.body, bindings)));
    --depth_;
    return body;
  }

  Program expand_node(const Program&, const Seq& x) {
    return Program::seq(expand(x.first), expand(x.second));
  }
  Program expand_node(const Program&, const If& x) {
    return Program::if_then_else(x.condition, expand(x.then_branch), expand(x.else_branch));
  }
  Program expand_node(const Program&, const While& x) {
    return Program::while_loop(x.condition, expand(x.body));
  }
  Program expand_node(const Program&, const TryAll& x) {
    return Program::try_all(expand(x.lhs), expand(x.rhs));
  }
  Program expand_node(const Program&, const WithPol& x) {
    return Program::with_pol(expand(x.policy), expand(x.main));
  }

  Program expand_node(const Program&, const Whenever& x) {
    return Program::while_loop(Formula::constant(true),
                               Program::seq(Program::prim(ActionTerm::wait_for(x.condition)),
                                            expand(x.body)));
  }

  Program expand_node(const Program&, const WithCtrl& x) { return guard(expand(x.body), x.guard); }

  Program expand_node(const Program&, const Par& x) {
    Program lhs = expand(x.lhs);
    Program rhs = expand(x.rhs);
    auto [flag1, set1] = declare_flag();
    auto [flag2, set2] = declare_flag();
    return Program::try_all(
        Program::seq(std::move(lhs), Program::seq(Program::prim(ActionTerm::named(set1)),
                                                  Program::test(Formula::fluent(flag2)))),
        Program::seq(std::move(rhs), Program::seq(Program::prim(ActionTerm::named(set2)),
                                                  Program::test(Formula::fluent(flag1)))));
  }

  Program expand_node(const Program&, const Prio& x) {
    Program high = expand(x.high);
    Program low = expand(x.low);
    auto [flag, set] = declare_flag();
    return Program::with_pol(Program::seq(std::move(high), Program::prim(ActionTerm::named(set))),
                             Program::seq(std::move(low), Program::test(Formula::fluent(flag))));
  }

  static Program guard(const Program& p, const Formula& phi) {
    return std::visit(
        [&](const auto& x) -> Program {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, Prim> || std::is_same_v<T, Test>) {
            return Program::if_then_else(phi, p, Program::test(Formula::constant(false)));
          } else if constexpr (std::is_same_v<T, Nil>) {
            return p;
          } else if constexpr (std::is_same_v<T, Seq>) {
            return Program::seq(guard(x.first, phi), guard(x.second, phi));
          } else if constexpr (std::is_same_v<T, If>) {
            return Program::if_then_else(x.condition, guard(x.then_branch, phi),
                                         guard(x.else_branch, phi));
          } else if constexpr (std::is_same_v<T, While>) {
            return Program::while_loop(x.condition, guard(x.body, phi));
          } else if constexpr (std::is_same_v<T, TryAll>) {
            return Program::try_all(guard(x.lhs, phi), guard(x.rhs, phi));
          } else if constexpr (std::is_same_v<T, WithPol>) {
            return Program::with_pol(guard(x.policy, phi), guard(x.main, phi));
          } else {
            throw std::logic_error("guard applied to an unexpanded program");
          }
        },
        p.node());
  }

  std::pair<std::string, std::string> declare_flag() {
    auto [flag, setter] = names_.fresh_flag(domain_);
    domain_.discrete_fluents.emplace(flag, false);
    domain_.actions.emplace(setter, ActionDecl{setter, {}, Formula::constant(true)});
    domain_.effects.push_back(EffectRule{setter, {}, flag, Expr::literal(true)});
    return {flag, setter};
  }

  static constexpr int kMaxDepth = 256;
  Domain domain_;
  NameGenerator& names_;
  int depth_ = 0;
};

}  // namespace detail

/// Expands p against d. The returned domain is d plus any hidden flag
/// fluents and setter actions introduced for par/prio. The result is checked
/// against that domain.
inline Expansion expand_macros(const Program& p, const Domain& d, NameGenerator& names) {
  detail::MacroExpander expander(d, names);
  Program core = expander.expand(p);
  Domain extended = expander.take_domain();
  check_program(core, extended);
  return {std::move(core), std::move(extended)};
}

inline Expansion expand_macros(const Program& p, const Domain& d) {
  NameGenerator names;
  return expand_macros(p, d, names);
}

}  // namespace ccgolog
