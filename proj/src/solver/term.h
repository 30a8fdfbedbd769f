#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace fusegrey::solver {

// Terms are immutable trees over byte variables. Integer semantics are
// 32-bit two's-complement with wraparound; overflow is observable only
// through the explicit Ovf* predicates. Builders fold constants eagerly,
// so a term built from constant leaves is itself a constant.
enum class Op : uint8_t {
  Const,      // 32-bit integer constant
  BoolConst,  // boolean constant
  Var,        // byte variable, values 0..255
  Add, Sub, Mul, Div, Mod,
  Eq, Ne, Lt, Le, Gt, Ge,
  And, Or, Not,
  Ite,        // cond, then, else; arms both int or both bool
  Compose,    // 1..4 byte args, little-endian composition to int
  OvfAdd, OvfSub, OvfMul,  // exact int32 overflow predicates
};

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  Op op = Op::Const;
  int32_t cval = 0;     // Const
  bool bval = false;    // BoolConst
  std::string var;      // Var
  std::vector<TermPtr> args;

  bool is_bool = false;   // value sort
  bool may_poison = false;  // a Div/Mod with possibly-zero divisor below
  uint64_t shash = 0;       // structural hash

  bool is_const() const { return op == Op::Const; }
  bool is_bool_const() const { return op == Op::BoolConst; }
  bool is_true() const { return op == Op::BoolConst && bval; }
  bool is_false() const { return op == Op::BoolConst && !bval; }
};

int32_t wrap32(int64_t v);

// Leaf builders.
TermPtr t_const(int32_t v);
TermPtr t_bool(bool b);
TermPtr t_byte(std::string name);

// Integer-valued builders (operands must be integer-sorted).
TermPtr t_add(TermPtr a, TermPtr b);
TermPtr t_sub(TermPtr a, TermPtr b);
TermPtr t_mul(TermPtr a, TermPtr b);
TermPtr t_div(TermPtr a, TermPtr b);
TermPtr t_mod(TermPtr a, TermPtr b);
TermPtr t_compose(std::vector<TermPtr> bytes_le);

// Boolean-valued builders.
TermPtr t_eq(TermPtr a, TermPtr b);
TermPtr t_ne(TermPtr a, TermPtr b);
TermPtr t_lt(TermPtr a, TermPtr b);
TermPtr t_le(TermPtr a, TermPtr b);
TermPtr t_gt(TermPtr a, TermPtr b);
TermPtr t_ge(TermPtr a, TermPtr b);
TermPtr t_and(TermPtr a, TermPtr b);
TermPtr t_or(TermPtr a, TermPtr b);
TermPtr t_not(TermPtr a);
TermPtr t_ovf_add(TermPtr a, TermPtr b);
TermPtr t_ovf_sub(TermPtr a, TermPtr b);
TermPtr t_ovf_mul(TermPtr a, TermPtr b);

// Ite over two int arms or two bool arms.
TermPtr t_ite(TermPtr cond, TermPtr a, TermPtr b);

bool term_eq(const TermPtr& a, const TermPtr& b);

// Collects variable names in first-occurrence order (deterministic).
void collect_vars(const TermPtr& t, std::vector<std::string>& out);

// Debug dump in s-expression form.
std::string to_sexpr(const TermPtr& t);

}  // namespace fusegrey::solver
