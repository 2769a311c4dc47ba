#pragma once

// Situations as progressed states: the action history, the start time and
// the current fluent valuation.

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include "ccgolog/program.hpp"
#include "ccgolog/rational.hpp"
#include "ccgolog/temporal.hpp"

namespace ccgolog {

/// Persistent action history; extending it shares the prefix.
class History {
 public:
  History() = default;
  History(const History&) = default;
  History(History&&) noexcept = default;
  History& operator=(const History&) = default;
  History& operator=(History&&) noexcept = default;

  // Unlinks iteratively; long histories would otherwise be freed recursively.
  ~History() {
    std::shared_ptr<const Node> n = std::move(head_);
    while (n && n.use_count() == 1) {
      std::shared_ptr<const Node> prev = std::move(n->prev);
      n = std::move(prev);
    }
  }

  History extended(ActionTerm a) const {
    History out;
    out.head_ = std::make_shared<const Node>(Node{std::move(a), head_, size() + 1});
    return out;
  }

  std::size_t size() const { return head_ ? head_->size : 0; }
  bool empty() const { return !head_; }
  const ActionTerm& last() const { return head_->action; }

  /// Oldest first.
  std::vector<ActionTerm> to_vector() const {
    std::vector<ActionTerm> out;
    out.reserve(size());
    for (const Node* n = head_.get(); n; n = n->prev.get()) out.push_back(n->action);
    return {out.rbegin(), out.rend()};
  }

 private:
  struct Node {
    ActionTerm action;
    mutable std::shared_ptr<const Node> prev;
    std::size_t size;
  };
  std::shared_ptr<const Node> head_;
};

struct Situation {
  History history;
  TimePoint start;
  Valuation valuation;
};

}  // namespace ccgolog
