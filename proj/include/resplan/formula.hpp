#pragma once

#include <cassert>
#include <string>
#include <utility>
#include <vector>

#include "resplan/errors.hpp"
#include "resplan/symbols.hpp"

namespace resplan {

// One AST covers both formula languages: the propositional fragment used by
// effect preconditions (atoms + boolean connectives) and the full temporal
// language used for outcomes. Or/Implies and Eventually/Globally are kept as
// distinct node kinds so parsed text reprints the way it was written.
enum class NodeKind {
  True,
  False,
  Prop,     // a = PropId
  Does,     // a = AgentId, b = ActionId
  Not,      // a = child
  And,      // a, b = children
  Or,
  Implies,
  Next,     // a = child
  Until,    // a, b = children
  Eventually,
  Globally,
};

struct FormulaNode {
  NodeKind kind;
  int a = -1;
  int b = -1;
};

// Immutable tree in a flat vector; every node's children precede it, so a
// single ascending pass visits children first.
class Formula {
 public:
  Formula() = default;

  static Formula constant(bool value) {
    return leaf(value ? NodeKind::True : NodeKind::False, -1, -1);
  }
  static Formula prop(PropId p) { return leaf(NodeKind::Prop, p, -1); }
  static Formula does(AgentId i, ActionId a) { return leaf(NodeKind::Does, i, a); }

  static Formula negation(Formula f) { return unary(NodeKind::Not, std::move(f)); }
  static Formula next(Formula f) { return unary(NodeKind::Next, std::move(f)); }
  static Formula eventually(Formula f) { return unary(NodeKind::Eventually, std::move(f)); }
  static Formula globally(Formula f) { return unary(NodeKind::Globally, std::move(f)); }

  static Formula conj(Formula l, Formula r) { return binary(NodeKind::And, std::move(l), std::move(r)); }
  static Formula disj(Formula l, Formula r) { return binary(NodeKind::Or, std::move(l), std::move(r)); }
  static Formula implies(Formula l, Formula r) {
    return binary(NodeKind::Implies, std::move(l), std::move(r));
  }
  static Formula until(Formula l, Formula r) { return binary(NodeKind::Until, std::move(l), std::move(r)); }

  bool empty() const { return nodes_.empty(); }
  int size() const { return static_cast<int>(nodes_.size()); }
  int root() const { return static_cast<int>(nodes_.size()) - 1; }
  const FormulaNode& node(int i) const { return nodes_[static_cast<std::size_t>(i)]; }
  const std::vector<FormulaNode>& nodes() const { return nodes_; }

  bool is_propositional() const {
    for (const auto& n : nodes_) {
      switch (n.kind) {
        case NodeKind::Next:
        case NodeKind::Until:
        case NodeKind::Eventually:
        case NodeKind::Globally:
          return false;
        default:
          break;
      }
    }
    return true;
  }

  // Checks every atom against the declared symbol tables.
  void validate(const Vocabulary& vocab) const {
    for (const auto& n : nodes_) {
      if (n.kind == NodeKind::Prop && (n.a < 0 || n.a >= vocab.prop_count())) {
        throw ValidationError("formula references an undeclared proposition id");
      }
      if (n.kind == NodeKind::Does) {
        if (n.a < 0 || n.a >= vocab.agent_count()) {
          throw ValidationError("formula references an undeclared agent id");
        }
        if (n.b < 0 || n.b >= vocab.action_count()) {
          throw ValidationError("formula references an undeclared action id");
        }
      }
    }
  }

  friend bool operator==(const Formula& lhs, const Formula& rhs) {
    if (lhs.empty() || rhs.empty()) return lhs.empty() && rhs.empty();
    return structurally_equal(lhs, lhs.root(), rhs, rhs.root());
  }

  // Minimal-parenthesis rendering; reparsing the result rebuilds this tree.
  std::string to_string(const Vocabulary& vocab) const {
    std::string out;
    print(root(), 0, vocab, out);
    return out;
  }

 private:
  std::vector<FormulaNode> nodes_;

  static Formula leaf(NodeKind k, int a, int b) {
    Formula f;
    f.nodes_.push_back({k, a, b});
    return f;
  }

  static Formula unary(NodeKind k, Formula child) {
    Formula f = std::move(child);
    f.nodes_.push_back({k, f.root(), -1});
    return f;
  }

  static Formula binary(NodeKind k, Formula l, Formula r) {
    Formula f = std::move(l);
    int offset = f.size();
    int left_root = f.root();
    f.nodes_.reserve(static_cast<std::size_t>(offset + r.size() + 1));
    for (const auto& n : r.nodes_) {
      FormulaNode m = n;
      if (m.kind != NodeKind::Prop && m.kind != NodeKind::Does) {
        if (m.a >= 0) m.a += offset;
        if (m.b >= 0) m.b += offset;
      }
      f.nodes_.push_back(m);
    }
    f.nodes_.push_back({k, left_root, f.root()});
    return f;
  }

  static bool structurally_equal(const Formula& x, int xi, const Formula& y, int yi) {
    const auto& a = x.node(xi);
    const auto& b = y.node(yi);
    if (a.kind != b.kind) return false;
    switch (a.kind) {
      case NodeKind::True:
      case NodeKind::False:
        return true;
      case NodeKind::Prop:
        return a.a == b.a;
      case NodeKind::Does:
        return a.a == b.a && a.b == b.b;
      case NodeKind::Not:
      case NodeKind::Next:
      case NodeKind::Eventually:
      case NodeKind::Globally:
        return structurally_equal(x, a.a, y, b.a);
      default:
        return structurally_equal(x, a.a, y, b.a) && structurally_equal(x, a.b, y, b.b);
    }
  }

  // Precedence levels, loosest first: -> (0), | (1), & (2), U (3), prefix (4).
  static int level(NodeKind k) {
    switch (k) {
      case NodeKind::Implies: return 0;
      case NodeKind::Or: return 1;
      case NodeKind::And: return 2;
      case NodeKind::Until: return 3;
      case NodeKind::Not:
      case NodeKind::Next:
      case NodeKind::Eventually:
      case NodeKind::Globally: return 4;
      default: return 5;
    }
  }

  void print(int i, int min_level, const Vocabulary& vocab, std::string& out) const {
    const auto& n = node(i);
    bool parens = level(n.kind) < min_level;
    if (parens) out += '(';
    switch (n.kind) {
      case NodeKind::True: out += "true"; break;
      case NodeKind::False: out += "false"; break;
      case NodeKind::Prop: out += vocab.props.name(n.a); break;
      case NodeKind::Does:
        out += "do(";
        out += vocab.agents.name(n.a);
        out += ',';
        out += vocab.actions.name(n.b);
        out += ')';
        break;
      case NodeKind::Not:
        out += '!';
        print(n.a, 4, vocab, out);
        break;
      case NodeKind::Next:
        out += "X ";
        print(n.a, 4, vocab, out);
        break;
      case NodeKind::Eventually:
        out += "F ";
        print(n.a, 4, vocab, out);
        break;
      case NodeKind::Globally:
        out += "G ";
        print(n.a, 4, vocab, out);
        break;
      case NodeKind::Implies:
        print(n.a, 1, vocab, out);
        out += " -> ";
        print(n.b, 0, vocab, out);
        break;
      case NodeKind::Or:
        print(n.a, 1, vocab, out);
        out += " | ";
        print(n.b, 2, vocab, out);
        break;
      case NodeKind::And:
        print(n.a, 2, vocab, out);
        out += " & ";
        print(n.b, 3, vocab, out);
        break;
      case NodeKind::Until:
        print(n.a, 4, vocab, out);
        out += " U ";
        print(n.b, 3, vocab, out);
        break;
    }
    if (parens) out += ')';
  }
};

}  // namespace resplan
