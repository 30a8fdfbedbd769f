#pragma once

#include <map>
#include <string>

#include "solver/term.h"

namespace fusegrey::solver {

// Total assignment of byte values to variable names.
using Model = std::map<std::string, uint8_t>;

struct EvalValue {
  int32_t i = 0;
  bool b = false;
  bool poison = false;  // came from division or modulo by zero
};

// Ground evaluation: wraparound int32 arithmetic, exact Ovf* predicates.
// Division or modulo by zero yields poison; a comparison or Ovf* over a
// poisoned operand is false. Total over terms whose variables the model
// assigns.
EvalValue eval_term(const TermPtr& t, const Model& model);

// Convenience: evaluates a boolean term.
bool eval_bool(const TermPtr& t, const Model& model);

}  // namespace fusegrey::solver
