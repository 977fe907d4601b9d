#include "bsrbd/eval.hpp"

#include "bsrbd/error.hpp"

namespace bsrbd {

namespace {

const Rational& var_value(std::span<const Rational> base, VarId x) {
  if (x >= base.size()) throw UnboundSymbol("base variable #" + std::to_string(x) + " is unbound");
  return base[x];
}

std::uint32_t free_value(const FreeTerm& t, const Structure& s, const Assignment& asg) {
  if (!t.is_var()) return s.free_constant(t.id);
  if (t.id >= asg.free.size()) throw UnboundSymbol("free variable #" + std::to_string(t.id) + " is unbound");
  return asg.free[t.id];
}

}  // namespace

Rational eval_term(const GroundTerm& t, std::span<const Rational> skolems) {
  Rational v = t.offset;
  for (const auto& [d, k] : t.coeffs) {
    if (d >= skolems.size()) throw UnboundSymbol("Skolem constant #" + std::to_string(d) + " is unbound");
    v += k * skolems[d];
  }
  return v;
}

bool eval_constraint(const Constraint& c, std::span<const Rational> base, std::span<const Rational> skolems) {
  return std::visit(
      [&](const auto& a) -> bool {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, VarConst>) {
          return holds(var_value(base, a.x), a.rel, eval_term(a.bound, skolems));
        } else if constexpr (std::is_same_v<T, VarVar>) {
          return holds(var_value(base, a.x), a.rel, var_value(base, a.y));
        } else if constexpr (std::is_same_v<T, DiffConst>) {
          return holds(var_value(base, a.x) - var_value(base, a.y), a.rel, a.c);
        } else if constexpr (std::is_same_v<T, GroundCmp>) {
          return holds(eval_term(a.lhs, skolems), a.rel, eval_term(a.rhs, skolems));
        } else if constexpr (std::is_same_v<T, SkolemDef>) {
          return holds(eval_term(GroundTerm::skolem(a.d), skolems), a.rel, eval_term(a.t, skolems));
        } else {
          Rational v = a.constant;
          for (const auto& [x, k] : a.coeffs) v += k * var_value(base, x);
          return holds(v, a.rel, Rational(0));
        }
      },
      c);
}

bool eval_lambda(const Clause& cl, std::span<const Rational> base, std::span<const Rational> skolems) {
  for (const auto& c : cl.constraints)
    if (!eval_constraint(c, base, skolems)) return false;
  return true;
}

bool eval_atom(const FreeAtom& a, const Structure& s, const Assignment& asg) {
  if (const auto* e = std::get_if<Equation>(&a)) return free_value(e->lhs, s, asg) == free_value(e->rhs, s, asg);
  const auto& p = std::get<PredAtom>(a);
  std::vector<std::uint32_t> fa;
  fa.reserve(p.free_args.size());
  for (const auto& t : p.free_args) fa.push_back(free_value(t, s, asg));
  std::vector<Rational> ba;
  ba.reserve(p.base_args.size());
  for (VarId x : p.base_args) ba.push_back(var_value(asg.base, x));
  return s.holds(p.pred, fa, ba);
}

bool eval_clause(const Clause& cl, const Structure& s, const Assignment& asg) {
  if (!eval_lambda(cl, asg.base, s.skolem_values())) return true;
  for (const auto& a : cl.premises)
    if (!eval_atom(a, s, asg)) return true;
  for (const auto& a : cl.conclusions)
    if (eval_atom(a, s, asg)) return true;
  return false;
}

}  // namespace bsrbd
