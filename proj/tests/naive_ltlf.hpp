#pragma once

#include "resplan/formula.hpp"
#include "resplan/model.hpp"

namespace resplan::test {

// Reference evaluator: a direct transcription of the finite-trace semantic
// clauses, one quantifier loop per temporal operator and no sharing of
// subformula results. Deliberately independent of LtlEvaluator's table.
inline bool naive_eval_at(const History& h, int t, const Formula& f, int idx) {
  const FormulaNode& n = f.node(idx);
  const int k = h.horizon();
  switch (n.kind) {
    case NodeKind::True: return true;
    case NodeKind::False: return false;
    case NodeKind::Prop: return h.state(t).test(n.a);
    case NodeKind::Does: return t < k && h.action(n.a, t) == n.b;
    case NodeKind::Not: return !naive_eval_at(h, t, f, n.a);
    case NodeKind::And: return naive_eval_at(h, t, f, n.a) && naive_eval_at(h, t, f, n.b);
    case NodeKind::Or: return naive_eval_at(h, t, f, n.a) || naive_eval_at(h, t, f, n.b);
    case NodeKind::Implies: return !naive_eval_at(h, t, f, n.a) || naive_eval_at(h, t, f, n.b);
    case NodeKind::Next: return t < k && naive_eval_at(h, t + 1, f, n.a);
    case NodeKind::Until:
      for (int t2 = t; t2 <= k; ++t2) {
        if (!naive_eval_at(h, t2, f, n.b)) continue;
        bool prefix = true;
        for (int t3 = t; t3 < t2 && prefix; ++t3) prefix = naive_eval_at(h, t3, f, n.a);
        if (prefix) return true;
      }
      return false;
    case NodeKind::Eventually:
      for (int t2 = t; t2 <= k; ++t2) {
        if (naive_eval_at(h, t2, f, n.a)) return true;
      }
      return false;
    case NodeKind::Globally:
      for (int t2 = t; t2 <= k; ++t2) {
        if (!naive_eval_at(h, t2, f, n.a)) return false;
      }
      return true;
  }
  return false;
}

inline bool naive_eval(const History& h, int t, const Formula& f) {
  return naive_eval_at(h, t, f, f.root());
}

}  // namespace resplan::test
