#include "thompson/tree.hpp"

#include <algorithm>
#include <utility>

#include "thompson/error.hpp"

namespace thompson {

TreeNode::TreeNode(Tree l, Tree r)
    : left_(std::move(l)),
      right_(std::move(r)),
      carets_(caret_count(left_) + caret_count(right_) + 1),
      height_(std::max(tree_height(left_), tree_height(right_)) + 1) {}

TreeNode::~TreeNode() {
  // Iterative teardown: deep spines (tens of thousands of carets) would
  // otherwise unwind recursively through the shared_ptr chain.
  std::vector<Tree> pending;
  pending.push_back(std::move(left_));
  pending.push_back(std::move(right_));
  while (!pending.empty()) {
    Tree t = std::move(pending.back());
    pending.pop_back();
    if (t && t.use_count() == 1) {
      auto* n = const_cast<TreeNode*>(t.get());
      pending.push_back(std::move(n->left_));
      pending.push_back(std::move(n->right_));
    }
  }
}

Tree make_caret(Tree left, Tree right) {
  return Tree(new TreeNode(std::move(left), std::move(right)));
}

bool tree_equal(const Tree& a, const Tree& b) {
  std::vector<std::pair<const TreeNode*, const TreeNode*>> stack;
  stack.emplace_back(a.get(), b.get());
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    if (x == y) continue;  // shared subtree or both leaves
    if (!x || !y) return false;
    if (x->carets() != y->carets()) return false;
    stack.emplace_back(x->left().get(), y->left().get());
    stack.emplace_back(x->right().get(), y->right().get());
  }
  return true;
}

Tree build_balanced(unsigned levels) {
  Tree t = leaf();
  for (unsigned i = 0; i < levels; ++i) t = make_caret(t, t);
  return t;
}

std::string serialize(const Tree& t) {
  std::string out;
  out.reserve(2 * caret_count(t) + 1);
  std::vector<const TreeNode*> stack;
  const TreeNode* cur = t.get();
  stack.push_back(cur);
  while (!stack.empty()) {
    cur = stack.back();
    stack.pop_back();
    if (!cur) {
      out.push_back('0');
      continue;
    }
    out.push_back('1');
    stack.push_back(cur->right().get());
    stack.push_back(cur->left().get());
  }
  return out;
}

Tree parse_tree(std::string_view bits) {
  // Frames are carets waiting for children; a completed subtree is folded
  // upward until it lands in an empty child slot.
  struct Frame {
    Tree left;
    bool has_left = false;
  };
  std::vector<Frame> frames;
  Tree done;
  bool have_done = false;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (have_done) throw ParseError("trailing characters after complete tree", i);
    char c = bits[i];
    if (c == '1') {
      frames.emplace_back();
    } else if (c == '0') {
      Tree cur = leaf();
      for (;;) {
        if (frames.empty()) {
          done = std::move(cur);
          have_done = true;
          break;
        }
        Frame& top = frames.back();
        if (!top.has_left) {
          top.left = std::move(cur);
          top.has_left = true;
          break;
        }
        cur = make_caret(std::move(top.left), std::move(cur));
        frames.pop_back();
      }
    } else {
      throw ParseError("invalid character, expected '0' or '1'", i);
    }
  }
  if (!have_done) throw ParseError("premature end of tree encoding", bits.size());
  return done;
}

const char* to_string(CaretSide side) {
  switch (side) {
    case CaretSide::LeftSide: return "left";
    case CaretSide::RightSide: return "right";
    case CaretSide::Interior: return "interior";
    case CaretSide::Root: return "root";
  }
  return "?";
}

std::vector<CaretPosition> caret_positions(const Tree& t) {
  std::vector<CaretPosition> out;
  if (!t) return out;
  out.reserve(t->carets());
  // In-order walk carrying path flags; spine membership depends on the path,
  // not the node (subtrees may be shared).
  struct Frame {
    const TreeNode* node;
    bool all_l, all_r, root;
    std::uint32_t depth;
  };
  std::vector<Frame> stack;
  const TreeNode* cur = t.get();
  bool al = true, ar = true, rt = true;
  std::uint32_t depth = 0;
  while (cur || !stack.empty()) {
    while (cur) {
      stack.push_back({cur, al, ar, rt, depth});
      cur = cur->left().get();
      ar = false;
      rt = false;
      ++depth;
    }
    Frame f = stack.back();
    stack.pop_back();
    CaretSide side = CaretSide::Interior;
    if (f.root) side = CaretSide::Root;
    else if (f.all_l) side = CaretSide::LeftSide;
    else if (f.all_r) side = CaretSide::RightSide;
    out.push_back({static_cast<std::uint64_t>(out.size()), f.depth, side});
    cur = f.node->right().get();
    al = false;
    ar = f.all_r;
    rt = false;
    depth = f.depth + 1;
  }
  return out;
}

std::vector<std::uint64_t> exposed_leaf_starts(const Tree& t) {
  std::vector<std::uint64_t> out;
  std::vector<const TreeNode*> stack;
  std::uint64_t leaves_seen = 0;
  if (t) stack.push_back(t.get());
  else return out;
  // Preorder: when a caret is reached, all leaves strictly left of its
  // subtree have been counted, so its left child's number is leaves_seen.
  while (!stack.empty()) {
    const TreeNode* cur = stack.back();
    stack.pop_back();
    if (!cur) {
      ++leaves_seen;
      continue;
    }
    if (!cur->left() && !cur->right()) {
      out.push_back(leaves_seen);
      leaves_seen += 2;
      continue;
    }
    stack.push_back(cur->right().get());
    stack.push_back(cur->left().get());
  }
  return out;
}

Tree graft_at_leaf(const Tree& t, std::uint64_t leaf_index, const Tree& subtree) {
  if (leaf_index >= leaf_count(t))
    throw Error(Error::Kind::Precondition, "graft_at_leaf: leaf index out of range");
  // Path-copy down to the leaf, sharing the untouched side at each step.
  struct Step {
    const TreeNode* node;
    bool went_left;
  };
  std::vector<Step> path;
  const TreeNode* cur = t.get();
  std::uint64_t k = leaf_index;
  while (cur) {
    std::uint64_t left_leaves = leaf_count(cur->left());
    if (k < left_leaves) {
      path.push_back({cur, true});
      cur = cur->left().get();
    } else {
      k -= left_leaves;
      path.push_back({cur, false});
      cur = cur->right().get();
    }
  }
  Tree rebuilt = subtree;
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    rebuilt = it->went_left ? make_caret(std::move(rebuilt), it->node->right())
                            : make_caret(it->node->left(), std::move(rebuilt));
  }
  return rebuilt;
}

Tree pad_to_leaf_count(const Tree& t, std::uint64_t target_leaves) {
  std::uint64_t have = leaf_count(t);
  if (have > target_leaves)
    throw Error(Error::Kind::Precondition, "pad_to_leaf_count: tree already larger than target");
  if (have == target_leaves) return t;
  Tree chain = leaf();
  for (std::uint64_t i = 0; i < target_leaves - have; ++i)
    chain = make_caret(leaf(), std::move(chain));
  return graft_at_leaf(t, have - 1, chain);
}

std::string tree_to_dot_body(const Tree& t, const std::string& prefix) {
  std::string out;
  std::uint64_t leaf_no = 0, caret_no = 0, fresh = 0;
  auto node_id = [&fresh, &prefix]() { return prefix + "n" + std::to_string(fresh++); };
  if (!t) {
    out += "  " + node_id() + " [shape=box,label=\"0\"];\n";
    return out;
  }
  // In-order walk. Each caret frame owns the ids of both children; carets are
  // numbered when visited (infix), leaves left to right.
  struct Frame {
    const TreeNode* node;
    std::string id, left_id, right_id;
  };
  std::vector<Frame> st;
  auto descend = [&](const TreeNode* n, std::string id) {
    while (n) {
      Frame f{n, std::move(id), node_id(), node_id()};
      id = f.left_id;
      st.push_back(std::move(f));
      n = st.back().node->left().get();
    }
    out += "  " + id + " [shape=box,label=\"" + std::to_string(leaf_no++) + "\"];\n";
  };
  descend(t.get(), node_id());
  while (!st.empty()) {
    Frame f = st.back();
    st.pop_back();
    out += "  " + f.id + " [shape=circle,label=\"" + std::to_string(caret_no++) + "\"];\n";
    out += "  " + f.id + " -> " + f.left_id + ";\n";
    out += "  " + f.id + " -> " + f.right_id + ";\n";
    descend(f.node->right().get(), f.right_id);
  }
  return out;
}

}  // namespace thompson
