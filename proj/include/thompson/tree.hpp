#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace thompson {

class TreeNode;

// A rooted binary tree where every internal node (caret) has exactly two
// children. A null pointer is a leaf; subtrees are immutable and shared.
using Tree = std::shared_ptr<const TreeNode>;

class TreeNode {
 public:
  ~TreeNode();

  const Tree& left() const { return left_; }
  const Tree& right() const { return right_; }
  std::uint64_t carets() const { return carets_; }
  std::uint32_t height() const { return height_; }

  TreeNode(const TreeNode&) = delete;
  TreeNode& operator=(const TreeNode&) = delete;

 private:
  TreeNode(Tree l, Tree r);
  friend Tree make_caret(Tree left, Tree right);

  Tree left_;
  Tree right_;
  std::uint64_t carets_;
  std::uint32_t height_;
};

Tree make_caret(Tree left, Tree right);
inline Tree leaf() { return nullptr; }

inline std::uint64_t caret_count(const Tree& t) { return t ? t->carets() : 0; }
inline std::uint64_t leaf_count(const Tree& t) { return caret_count(t) + 1; }
inline std::uint32_t tree_height(const Tree& t) { return t ? t->height() : 0; }

// Complete tree: every level down to the height is full.
inline bool is_complete(const Tree& t) {
  return caret_count(t) == (std::uint64_t{1} << tree_height(t)) - 1;
}

bool tree_equal(const Tree& a, const Tree& b);

// Complete tree with 2^levels leaves; levels = 0 gives a single leaf.
Tree build_balanced(unsigned levels);

// Preorder encoding: caret = '1' followed by left then right, leaf = '0'.
// The length is always 2*carets + 1 and the code is prefix-free per subtree.
std::string serialize(const Tree& t);
Tree parse_tree(std::string_view bits);

enum class CaretSide { LeftSide, RightSide, Interior, Root };
const char* to_string(CaretSide side);

struct CaretPosition {
  std::uint64_t caret_index;  // infix (in-order) number, 0-based
  std::uint32_t depth;        // edges from the root
  CaretSide side;
};

// Positions of all carets in infix order. Single leaf gives an empty list.
std::vector<CaretPosition> caret_positions(const Tree& t);

// Leaf numbers m such that a caret has exactly the two leaves (m, m+1) as
// children, in increasing order.
std::vector<std::uint64_t> exposed_leaf_starts(const Tree& t);

// Replaces leaf `leaf_index` with `subtree`.
Tree graft_at_leaf(const Tree& t, std::uint64_t leaf_index, const Tree& subtree);

// Extends the right spine with carets whose left child is a leaf until the
// tree has `target_leaves` leaves. Leaf exponents are unchanged.
Tree pad_to_leaf_count(const Tree& t, std::uint64_t target_leaves);

// DOT fragment for one tree: carets as circles labeled with infix numbers,
// leaves as boxes labeled with leaf numbers.
std::string tree_to_dot_body(const Tree& t, const std::string& prefix);

}  // namespace thompson
