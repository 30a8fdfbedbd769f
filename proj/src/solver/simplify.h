#pragma once

#include <unordered_map>
#include <vector>

#include "solver/term.h"

namespace fusegrey::solver {

// Semantics-preserving rewriting: constant folding, identity elimination,
// pushing comparisons and constant arithmetic through ite nodes.
// eval_term(simplify(t), m) == eval_term(t, m) for every total model m.
TermPtr simplify(const TermPtr& t);

// A set of boolean facts assumed true, used to collapse guarded terms.
// Conjunctions are flattened into their components on insertion, so an
// ite whose condition is an already-assumed chain reduces to its arm.
class Assumptions {
 public:
  // Records `t` (or its negation) as known-true. Returns the number of
  // entries added so push/pop can be paired.
  size_t push(const TermPtr& t, bool negated = false);
  void pop(size_t n);

  // 1 = known true, -1 = known false, 0 = unknown.
  int lookup(const TermPtr& t) const;

  bool empty() const { return order_.empty(); }

 private:
  struct Entry {
    TermPtr term;
    bool value;
  };
  std::vector<Entry> order_;
  // hash -> indices into order_
  std::unordered_map<uint64_t, std::vector<size_t>> index_;
};

// Simplifies under assumed facts: ite conditions (and and/or operands)
// implied by the assumptions collapse. Equivalent to simplify() when the
// assumption set is empty.
TermPtr simplify_under(const TermPtr& t, const Assumptions& assume);

}  // namespace fusegrey::solver
