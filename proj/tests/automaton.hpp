#pragma once

// The top-down tree automaton used across the test suite: binary trees
// labelled a/b with nullary leaves eps, encoded as negative designs, and the
// nondeterministic acceptor design Q0. The accepted language is the chains
//   L = { b } u { a(b, t) : t in L }
// where `b` abbreviates b(eps, eps).

#include <memory>
#include <string>
#include <vector>

#include "ludics/design.hpp"
#include "ludics/normalize.hpp"

namespace testutil {

struct Tree;
using TreePtr = std::shared_ptr<const Tree>;

struct Tree {
  char label = 0;  // 'a' or 'b'; 0 = eps
  TreePtr left, right;
};

inline TreePtr eps_tree() { return std::make_shared<Tree>(); }
inline TreePtr node(char label, TreePtr l, TreePtr r) {
  return std::make_shared<Tree>(Tree{label, std::move(l), std::move(r)});
}
inline TreePtr leaf(char label) { return node(label, eps_tree(), eps_tree()); }

inline std::size_t tree_nodes(const TreePtr& t) {
  if (!t->label) return 0;
  return 1 + tree_nodes(t->left) + tree_nodes(t->right);
}

inline std::string tree_text(const TreePtr& t) {
  if (!t->label) return "e";
  return std::string(1, t->label) + "(" + tree_text(t->left) + "," +
         tree_text(t->right) + ")";
}

// All trees with exactly n labelled nodes.
inline std::vector<TreePtr> trees_of_size(std::size_t n) {
  if (n == 0) return {eps_tree()};
  std::vector<TreePtr> out;
  for (std::size_t nl = 0; nl + 1 <= n; ++nl) {
    auto lefts = trees_of_size(nl);
    auto rights = trees_of_size(n - 1 - nl);
    for (auto& l : lefts)
      for (auto& r : rights)
        for (char c : {'a', 'b'}) out.push_back(node(c, l, r));
  }
  return out;
}

inline std::vector<TreePtr> trees_up_to(std::size_t n) {
  std::vector<TreePtr> out;
  for (std::size_t k = 0; k <= n; ++k)
    for (auto& t : trees_of_size(k)) out.push_back(t);
  return out;
}

// Membership in the accepted language L above.
inline bool in_language(const TreePtr& t) {
  if (t->label == 'b') return !t->left->label && !t->right->label;
  if (t->label == 'a')
    return t->left->label == 'b' && !t->left->left->label &&
           !t->left->right->label && in_language(t->right);
  return false;
}

// t* — the negative design encoding of a tree: up(x). x|label<l*, r*>.
inline ludics::DesignPtr encode_tree(const TreePtr& t) {
  using namespace ludics;
  DesignPtr body;
  if (!t->label) {
    body = pred(var("x"), "e", {});
  } else {
    body = pred(var("x"), std::string(1, t->label),
                {encode_tree(t->left), encode_tree(t->right)});
  }
  return sum({{"up", {{"x"}, conj({body})}}});
}

// Registers the acceptor definitions q0/q1/q2 in the engine and returns the
// closed run design Q0[t*].
inline ludics::DesignPtr automaton_run(const TreePtr& t, ludics::Engine& eng) {
  using namespace ludics;
  eng.sig.declare("up", 1);
  eng.sig.declare("a", 2);
  eng.sig.declare("b", 2);
  eng.sig.declare("e", 0);
  auto q0inner = sum(
      {{"a", {{"x", "y"}, conj({ref("q1", {"x"}), ref("q0", {"y"})})}},
       {"b", {{"x", "y"}, conj({ref("q2", {"x"}), ref("q2", {"y"})})}}});
  if (!eng.defs.find("q0")) {
    auto q2body = pred(var("x"), "up", {sum({{"e", {{}, daimon()}}})});
    eng.defs.add("q2", {{"x"}, conj({q2body})});
    auto q1inner = sum({{"b",
                         {{"x", "y"},
                          conj({ref("q2", {"x"}), ref("q2", {"y"})})}}});
    eng.defs.add("q1", {{"x"}, conj({pred(var("x"), "up", {q1inner})})});
    eng.defs.add("q0", {{"x"}, conj({pred(var("x"), "up", {q0inner})})});
    validate_defs(eng.defs);
  }
  // Q0[t*] = t*|down<branches of q0>, closed and positive.
  return conj({pred(encode_tree(t), "up", {q0inner})});
}

}  // namespace testutil
