#pragma once

#include <cstdint>
#include <vector>

#include "resplan/errors.hpp"
#include "resplan/formula.hpp"
#include "resplan/model.hpp"

namespace resplan {

// Finite-trace temporal evaluation. One boolean table cell per
// (subformula, time point), filled by structural induction: children first
// (node indices already order them that way), and within the until/eventually/
// globally recurrences from the final time point backwards. Time is linear in
// |formula| * (k + 1). Next is strong: false at the final time point.
class LtlEvaluator {
 public:
  bool eval(const History& h, int t, const Formula& f) {
    if (t < 0 || t > h.horizon()) throw ValidationError("time point outside the history");
    fill(h, f);
    return cell(f.root(), t, h.horizon()) != 0;
  }

 private:
  std::vector<std::uint8_t> table_;

  std::uint8_t& cell(int idx, int t, int k) {

    return table_[static_cast<std::size_t>(idx) * static_cast<std::size_t>(k + 1) +
                  static_cast<std::size_t>(t)];
  }

  void fill(const History& h, const Formula& f) {
    const int k = h.horizon();
    table_.assign(static_cast<std::size_t>(f.size()) * static_cast<std::size_t>(k + 1), 0);
    for (int idx = 0; idx < f.size(); ++idx) {
      const FormulaNode& n = f.node(idx);
      switch (n.kind) {
        case NodeKind::True:
          for (int t = 0; t <= k; ++t) cell(idx, t, k) = 1;
          break;
        case NodeKind::False:
          break;
        case NodeKind::Prop:
          for (int t = 0; t <= k; ++t) cell(idx, t, k) = h.state(t).test(n.a) ? 1 : 0;
          break;
        case NodeKind::Does:
          for (int t = 0; t < k; ++t) cell(idx, t, k) = h.action(n.a, t) == n.b ? 1 : 0;
          break;
        case NodeKind::Not:
          for (int t = 0; t <= k; ++t) cell(idx, t, k) = cell(n.a, t, k) ? 0 : 1;
          break;
        case NodeKind::And:
          for (int t = 0; t <= k; ++t) {
            cell(idx, t, k) = (cell(n.a, t, k) && cell(n.b, t, k)) ? 1 : 0;
          }
          break;
        case NodeKind::Or:
          for (int t = 0; t <= k; ++t) {
            cell(idx, t, k) = (cell(n.a, t, k) || cell(n.b, t, k)) ? 1 : 0;
          }
          break;
        case NodeKind::Implies:
          for (int t = 0; t <= k; ++t) {
            cell(idx, t, k) = (!cell(n.a, t, k) || cell(n.b, t, k)) ? 1 : 0;
          }
          break;
        case NodeKind::Next:
          for (int t = 0; t < k; ++t) cell(idx, t, k) = cell(n.a, t + 1, k);
          break;
        case NodeKind::Until:
          cell(idx, k, k) = cell(n.b, k, k);
          for (int t = k - 1; t >= 0; --t) {
            cell(idx, t, k) =
                (cell(n.b, t, k) || (cell(n.a, t, k) && cell(idx, t + 1, k))) ? 1 : 0;
          }
          break;
        case NodeKind::Eventually:
          cell(idx, k, k) = cell(n.a, k, k);
          for (int t = k - 1; t >= 0; --t) {
            cell(idx, t, k) = (cell(n.a, t, k) || cell(idx, t + 1, k)) ? 1 : 0;
          }
          break;
        case NodeKind::Globally:
          cell(idx, k, k) = cell(n.a, k, k);
          for (int t = k - 1; t >= 0; --t) {
            cell(idx, t, k) = (cell(n.a, t, k) && cell(idx, t + 1, k)) ? 1 : 0;
          }
          break;
      }
    }
  }
};

inline bool eval_ltlf(const History& h, int t, const Formula& f) {
  LtlEvaluator ev;
  return ev.eval(h, t, f);
}

}  // namespace resplan
