#include "solver/term.h"

#include <cassert>
#include <set>
#include <unordered_set>

#include "support/bytes.h"

namespace fusegrey::solver {

int32_t wrap32(int64_t v) {
  return static_cast<int32_t>(static_cast<uint32_t>(v & 0xFFFFFFFFll));
}

static uint64_t mix(uint64_t h, uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

static TermPtr make(Op op, std::vector<TermPtr> args, int32_t cval = 0,
                    bool bval = false, std::string var = {}) {
  auto t = std::make_shared<Term>();
  t->op = op;
  t->cval = cval;
  t->bval = bval;
  t->var = std::move(var);
  t->args = std::move(args);
  switch (op) {
    case Op::BoolConst:
    case Op::Eq: case Op::Ne: case Op::Lt: case Op::Le:
    case Op::Gt: case Op::Ge: case Op::And: case Op::Or: case Op::Not:
    case Op::OvfAdd: case Op::OvfSub: case Op::OvfMul:
      t->is_bool = true;
      break;
    case Op::Ite:
      t->is_bool = t->args[1]->is_bool;
      break;
    default:
      t->is_bool = false;
  }
  uint64_t h = mix(0x51ed270b, static_cast<uint64_t>(op));
  h = mix(h, static_cast<uint64_t>(static_cast<uint32_t>(cval)));
  h = mix(h, bval ? 2 : 1);
  if (!t->var.empty()) h = mix(h, fnv1a64(t->var));
  for (const auto& a : t->args) {
    h = mix(h, a->shash);
    t->may_poison = t->may_poison || a->may_poison;
  }
  if (op == Op::Div || op == Op::Mod) {
    const auto& d = t->args[1];
    if (!(d->is_const() && d->cval != 0)) t->may_poison = true;
  }
  t->shash = h;
  return t;
}

TermPtr t_const(int32_t v) { return make(Op::Const, {}, v); }
TermPtr t_bool(bool b) { return make(Op::BoolConst, {}, 0, b); }
TermPtr t_byte(std::string name) {
  return make(Op::Var, {}, 0, false, std::move(name));
}

static bool both_const(const TermPtr& a, const TermPtr& b) {
  return a->is_const() && b->is_const();
}

TermPtr t_add(TermPtr a, TermPtr b) {
  if (both_const(a, b))
    return t_const(wrap32(static_cast<int64_t>(a->cval) + b->cval));
  if (a->is_const() && a->cval == 0 && !b->may_poison) return b;
  if (b->is_const() && b->cval == 0 && !a->may_poison) return a;
  return make(Op::Add, {std::move(a), std::move(b)});
}

TermPtr t_sub(TermPtr a, TermPtr b) {
  if (both_const(a, b))
    return t_const(wrap32(static_cast<int64_t>(a->cval) - b->cval));
  if (b->is_const() && b->cval == 0 && !a->may_poison) return a;
  return make(Op::Sub, {std::move(a), std::move(b)});
}

TermPtr t_mul(TermPtr a, TermPtr b) {
  if (both_const(a, b))
    return t_const(wrap32(static_cast<int64_t>(a->cval) * b->cval));
  if (a->is_const() && a->cval == 1 && !b->may_poison) return b;
  if (b->is_const() && b->cval == 1 && !a->may_poison) return a;
  // x*0 folds only when x cannot poison.
  if (a->is_const() && a->cval == 0 && !b->may_poison) return t_const(0);
  if (b->is_const() && b->cval == 0 && !a->may_poison) return t_const(0);
  return make(Op::Mul, {std::move(a), std::move(b)});
}

// INT32_MIN / -1 wraps to INT32_MIN; division by a constant zero is kept
// symbolic (poison is a property of evaluation, not a term).
TermPtr t_div(TermPtr a, TermPtr b) {
  if (both_const(a, b) && b->cval != 0) {
    if (a->cval == INT32_MIN && b->cval == -1) return t_const(INT32_MIN);
    return t_const(a->cval / b->cval);
  }
  return make(Op::Div, {std::move(a), std::move(b)});
}

TermPtr t_mod(TermPtr a, TermPtr b) {
  if (both_const(a, b) && b->cval != 0) {
    if (a->cval == INT32_MIN && b->cval == -1) return t_const(0);
    return t_const(a->cval % b->cval);
  }
  return make(Op::Mod, {std::move(a), std::move(b)});
}

TermPtr t_compose(std::vector<TermPtr> bytes_le) {
  assert(!bytes_le.empty() && bytes_le.size() <= 4);
  bool all_const = true;
  for (const auto& x : bytes_le) all_const = all_const && x->is_const();
  if (all_const) {
    int64_t v = 0;
    for (size_t i = 0; i < bytes_le.size(); ++i)
      v |= static_cast<int64_t>(bytes_le[i]->cval & 0xFF) << (8 * i);
    return t_const(wrap32(v));
  }
  return make(Op::Compose, std::move(bytes_le));
}

static TermPtr cmp(Op op, TermPtr a, TermPtr b) {
  if (both_const(a, b)) {
    int32_t x = a->cval, y = b->cval;
    bool r = false;
    switch (op) {
      case Op::Eq: r = x == y; break;
      case Op::Ne: r = x != y; break;
      case Op::Lt: r = x < y; break;
      case Op::Le: r = x <= y; break;
      case Op::Gt: r = x > y; break;
      case Op::Ge: r = x >= y; break;
      default: assert(false);
    }
    return t_bool(r);
  }
  return make(op, {std::move(a), std::move(b)});
}

TermPtr t_eq(TermPtr a, TermPtr b) { return cmp(Op::Eq, std::move(a), std::move(b)); }
TermPtr t_ne(TermPtr a, TermPtr b) { return cmp(Op::Ne, std::move(a), std::move(b)); }
TermPtr t_lt(TermPtr a, TermPtr b) { return cmp(Op::Lt, std::move(a), std::move(b)); }
TermPtr t_le(TermPtr a, TermPtr b) { return cmp(Op::Le, std::move(a), std::move(b)); }
TermPtr t_gt(TermPtr a, TermPtr b) { return cmp(Op::Gt, std::move(a), std::move(b)); }
TermPtr t_ge(TermPtr a, TermPtr b) { return cmp(Op::Ge, std::move(a), std::move(b)); }

TermPtr t_and(TermPtr a, TermPtr b) {
  if (a->is_true()) return b;
  if (b->is_true()) return a;
  if (a->is_false() || b->is_false()) return t_bool(false);
  return make(Op::And, {std::move(a), std::move(b)});
}

TermPtr t_or(TermPtr a, TermPtr b) {
  if (a->is_false()) return b;
  if (b->is_false()) return a;
  if (a->is_true() || b->is_true()) return t_bool(true);
  return make(Op::Or, {std::move(a), std::move(b)});
}

TermPtr t_not(TermPtr a) {
  if (a->is_bool_const()) return t_bool(!a->bval);
  if (a->op == Op::Not) return a->args[0];
  // Invert comparisons so negated branch conditions keep a canonical
  // shape. Unsafe for possibly-poisoned operands: a poisoned comparison
  // and its inverse are both false.
  auto invertible = [&](Op inv) -> TermPtr {
    if (a->args[0]->may_poison || a->args[1]->may_poison) return nullptr;
    return cmp(inv, a->args[0], a->args[1]);
  };
  switch (a->op) {
    case Op::Eq: if (auto r = invertible(Op::Ne)) return r; break;
    case Op::Ne: if (auto r = invertible(Op::Eq)) return r; break;
    case Op::Lt: if (auto r = invertible(Op::Ge)) return r; break;
    case Op::Le: if (auto r = invertible(Op::Gt)) return r; break;
    case Op::Gt: if (auto r = invertible(Op::Le)) return r; break;
    case Op::Ge: if (auto r = invertible(Op::Lt)) return r; break;
    default: break;
  }
  return make(Op::Not, {std::move(a)});
}

static int64_t ovf_check(Op op, int64_t x, int64_t y) {
  switch (op) {
    case Op::OvfAdd: return x + y;
    case Op::OvfSub: return x - y;
    case Op::OvfMul: return x * y;
    default: assert(false); return 0;
  }
}

static TermPtr ovf(Op op, TermPtr a, TermPtr b) {
  if (both_const(a, b)) {
    int64_t r = ovf_check(op, a->cval, b->cval);
    return t_bool(r < INT32_MIN || r > INT32_MAX);
  }
  return make(op, {std::move(a), std::move(b)});
}

TermPtr t_ovf_add(TermPtr a, TermPtr b) { return ovf(Op::OvfAdd, std::move(a), std::move(b)); }
TermPtr t_ovf_sub(TermPtr a, TermPtr b) { return ovf(Op::OvfSub, std::move(a), std::move(b)); }
TermPtr t_ovf_mul(TermPtr a, TermPtr b) { return ovf(Op::OvfMul, std::move(a), std::move(b)); }

TermPtr t_ite(TermPtr cond, TermPtr a, TermPtr b) {
  assert(cond->is_bool && a->is_bool == b->is_bool);
  if (cond->is_true()) return a;
  if (cond->is_false()) return b;
  if (term_eq(a, b)) return a;
  if (a->is_bool) {
    // Normalize boolean ites into and/or, which simplify further.
    if (a->is_true()) return t_or(cond, std::move(b));
    if (a->is_false()) return t_and(t_not(cond), std::move(b));
    if (b->is_true()) return t_or(t_not(cond), std::move(a));
    if (b->is_false()) return t_and(cond, std::move(a));
  }
  return make(Op::Ite, {std::move(cond), std::move(a), std::move(b)});
}

bool term_eq(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->shash != b->shash || a->op != b->op) return false;
  switch (a->op) {
    case Op::Const: return a->cval == b->cval;
    case Op::BoolConst: return a->bval == b->bval;
    case Op::Var: return a->var == b->var;
    default: break;
  }
  if (a->args.size() != b->args.size()) return false;
  for (size_t i = 0; i < a->args.size(); ++i)
    if (!term_eq(a->args[i], b->args[i])) return false;
  return true;
}

static void collect_vars_rec(const Term* t, std::vector<std::string>& out,
                             std::unordered_set<const Term*>& seen,
                             std::unordered_set<std::string>& names) {
  if (!seen.insert(t).second) return;
  if (t->op == Op::Var) {
    if (names.insert(t->var).second) out.push_back(t->var);
    return;
  }
  for (const auto& a : t->args) collect_vars_rec(a.get(), out, seen, names);
}

void collect_vars(const TermPtr& t, std::vector<std::string>& out) {
  std::unordered_set<const Term*> seen;
  std::unordered_set<std::string> names;
  for (const auto& n : out) names.insert(n);
  collect_vars_rec(t.get(), out, seen, names);
}

static const char* op_name(Op op) {
  switch (op) {
    case Op::Const: return "const";
    case Op::BoolConst: return "bool";
    case Op::Var: return "byte";
    case Op::Add: return "add"; case Op::Sub: return "sub";
    case Op::Mul: return "mul"; case Op::Div: return "div";
    case Op::Mod: return "mod";
    case Op::Eq: return "="; case Op::Ne: return "!=";
    case Op::Lt: return "<"; case Op::Le: return "<=";
    case Op::Gt: return ">"; case Op::Ge: return ">=";
    case Op::And: return "and"; case Op::Or: return "or";
    case Op::Not: return "not"; case Op::Ite: return "ite";
    case Op::Compose: return "compose";
    case Op::OvfAdd: return "ovf+"; case Op::OvfSub: return "ovf-";
    case Op::OvfMul: return "ovf*";
  }
  return "?";
}

std::string to_sexpr(const TermPtr& t) {
  if (!t) return "nil";
  switch (t->op) {
    case Op::Const: return std::to_string(t->cval);
    case Op::BoolConst: return t->bval ? "true" : "false";
    case Op::Var: return t->var;
    default: break;
  }
  std::string s = "(";
  s += op_name(t->op);
  for (const auto& a : t->args) {
    s += ' ';
    s += to_sexpr(a);
  }
  s += ')';
  return s;
}

}  // namespace fusegrey::solver
