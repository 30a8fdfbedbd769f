#include "solver/eval.h"

#include <cassert>
#include <unordered_map>

namespace fusegrey::solver {

namespace {

struct Evaluator {
  const Model& model;
  std::unordered_map<const Term*, EvalValue> memo;

  EvalValue eval(const Term* t) {
    auto it = memo.find(t);
    if (it != memo.end()) return it->second;
    EvalValue v = compute(t);
    memo.emplace(t, v);
    return v;
  }

  EvalValue compute(const Term* t) {
    switch (t->op) {
      case Op::Const: return {t->cval, false, false};
      case Op::BoolConst: return {0, t->bval, false};
      case Op::Var: {
        auto it = model.find(t->var);
        assert(it != model.end() && "model must be total");
        return {static_cast<int32_t>(it->second), false, false};
      }
      case Op::Add: case Op::Sub: case Op::Mul: case Op::Div: case Op::Mod:
        return arith(t);
      case Op::Eq: case Op::Ne: case Op::Lt: case Op::Le:
      case Op::Gt: case Op::Ge:
        return compare(t);
      case Op::And: {
        EvalValue a = eval(t->args[0].get());
        EvalValue b = eval(t->args[1].get());
        return {0, a.b && b.b, false};
      }
      case Op::Or: {
        EvalValue a = eval(t->args[0].get());
        EvalValue b = eval(t->args[1].get());
        return {0, a.b || b.b, false};
      }
      case Op::Not: {
        EvalValue a = eval(t->args[0].get());
        return {0, !a.b, false};
      }
      case Op::Ite: {
        EvalValue c = eval(t->args[0].get());
        return eval(c.b ? t->args[1].get() : t->args[2].get());
      }
      case Op::Compose: {
        int64_t v = 0;
        bool poison = false;
        for (size_t i = 0; i < t->args.size(); ++i) {
          EvalValue a = eval(t->args[i].get());
          poison = poison || a.poison;
          v |= static_cast<int64_t>(a.i & 0xFF) << (8 * i);
        }
        return {wrap32(v), false, poison};
      }
      case Op::OvfAdd: case Op::OvfSub: case Op::OvfMul: {
        EvalValue a = eval(t->args[0].get());
        EvalValue b = eval(t->args[1].get());
        if (a.poison || b.poison) return {0, false, false};
        int64_t x = a.i, y = b.i;
        int64_t r = t->op == Op::OvfAdd ? x + y
                  : t->op == Op::OvfSub ? x - y
                                        : x * y;
        return {0, r < INT32_MIN || r > INT32_MAX, false};
      }
    }
    assert(false);
    return {};
  }

  EvalValue arith(const Term* t) {
    EvalValue a = eval(t->args[0].get());
    EvalValue b = eval(t->args[1].get());
    if (a.poison || b.poison) return {0, false, true};
    int64_t x = a.i, y = b.i;
    switch (t->op) {
      case Op::Add: return {wrap32(x + y), false, false};
      case Op::Sub: return {wrap32(x - y), false, false};
      case Op::Mul: return {wrap32(x * y), false, false};
      case Op::Div:
        if (y == 0) return {0, false, true};
        if (x == INT32_MIN && y == -1) return {INT32_MIN, false, false};
        return {static_cast<int32_t>(a.i / b.i), false, false};
      case Op::Mod:
        if (y == 0) return {0, false, true};
        if (x == INT32_MIN && y == -1) return {0, false, false};
        return {static_cast<int32_t>(a.i % b.i), false, false};
      default: assert(false); return {};
    }
  }

  EvalValue compare(const Term* t) {
    EvalValue a = eval(t->args[0].get());
    EvalValue b = eval(t->args[1].get());
    if (a.poison || b.poison) return {0, false, false};
    bool r = false;
    switch (t->op) {
      case Op::Eq: r = a.i == b.i; break;
      case Op::Ne: r = a.i != b.i; break;
      case Op::Lt: r = a.i < b.i; break;
      case Op::Le: r = a.i <= b.i; break;
      case Op::Gt: r = a.i > b.i; break;
      case Op::Ge: r = a.i >= b.i; break;
      default: assert(false);
    }
    return {0, r, false};
  }
};

}  // namespace

EvalValue eval_term(const TermPtr& t, const Model& model) {
  Evaluator ev{model, {}};
  return ev.eval(t.get());
}

bool eval_bool(const TermPtr& t, const Model& model) {
  assert(t->is_bool);
  return eval_term(t, model).b;
}

}  // namespace fusegrey::solver
