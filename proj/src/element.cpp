#include "thompson/element.hpp"

#include <utility>

#include "thompson/error.hpp"

namespace thompson {

Gen inverse(Gen g) {
  switch (g) {
    case Gen::X0: return Gen::X0Inv;
    case Gen::X0Inv: return Gen::X0;
    case Gen::X1: return Gen::X1Inv;
    case Gen::X1Inv: return Gen::X1;
  }
  throw Error(Error::Kind::Invariant, "bad generator");
}

const char* to_string(Gen g) {
  switch (g) {
    case Gen::X0: return "x0";
    case Gen::X0Inv: return "X0";
    case Gen::X1: return "x1";
    case Gen::X1Inv: return "X1";
  }
  return "?";
}

Gen parse_gen(std::string_view s) {
  if (s == "x0") return Gen::X0;
  if (s == "X0") return Gen::X0Inv;
  if (s == "x1") return Gen::X1;
  if (s == "X1") return Gen::X1Inv;
  throw Error(Error::Kind::Parse, "unknown generator '" + std::string(s) +
                                      "', expected one of x0, X0, x1, X1");
}

std::vector<Gen> parse_word(std::string_view s) {
  std::vector<Gen> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == ' ' || s[i] == '\t' || s[i] == '\n') {
      ++i;
      continue;
    }
    if (i + 1 >= s.size())
      throw ParseError("dangling generator letter in word", i);
    out.push_back(parse_gen(s.substr(i, 2)));
    i += 2;
  }
  return out;
}

std::string word_to_string(std::span<const Gen> word) {
  std::string out;
  for (Gen g : word) out += to_string(g);
  return out;
}

const Element& Element::identity() {
  static const Element id = ElementAccess::make_unchecked(leaf(), leaf());
  return id;
}

bool is_reduced(const TreePair& p) {
  auto a = exposed_leaf_starts(p.neg);
  auto b = exposed_leaf_starts(p.pos);
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return false;
    if (a[i] < b[j]) ++i;
    else ++j;
  }
  return true;
}

namespace {

// Mutable mirror of a tree pair used by reduce(). Node 0 is the root slot;
// children/parent are arena indices, -1 for none. A node with no children is
// a leaf.
struct Arena {
  std::vector<std::int64_t> left, right, parent;

  std::int64_t add(std::int64_t p) {
    left.push_back(-1);
    right.push_back(-1);
    parent.push_back(p);
    return static_cast<std::int64_t>(left.size()) - 1;
  }
};

// Builds the arena and records leaf ids in left-to-right order.
std::int64_t build_arena(const Tree& t, Arena& arena, std::vector<std::int64_t>& leaves) {
  std::int64_t root = arena.add(-1);
  struct Item {
    const TreeNode* node;  // null = leaf
    std::int64_t id;
  };
  std::vector<Item> stack;
  stack.push_back({t.get(), root});
  while (!stack.empty()) {
    Item it = stack.back();
    stack.pop_back();
    if (!it.node) {
      leaves.push_back(it.id);
      continue;
    }
    std::int64_t l = arena.add(it.id);
    std::int64_t r = arena.add(it.id);
    arena.left[it.id] = l;
    arena.right[it.id] = r;
    // preorder with left processed first keeps leaves in order
    stack.push_back({it.node->right().get(), r});
    stack.push_back({it.node->left().get(), l});
  }
  return root;
}

Tree arena_to_tree(const Arena& arena, std::int64_t root) {
  // Post-order rebuild; `carry` holds the most recently completed subtree.
  struct Frame {
    std::int64_t id;
    int stage;
    Tree left;
  };
  std::vector<Frame> stack;
  stack.push_back({root, 0, nullptr});
  Tree carry;
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (arena.left[f.id] < 0) {
      carry = leaf();
      stack.pop_back();
    } else if (f.stage == 0) {
      f.stage = 1;
      stack.push_back({arena.left[f.id], 0, nullptr});
    } else if (f.stage == 1) {
      f.left = std::move(carry);
      f.stage = 2;
      stack.push_back({arena.right[f.id], 0, nullptr});
    } else {
      carry = make_caret(std::move(f.left), std::move(carry));
      stack.pop_back();
    }
  }
  return carry;
}

}  // namespace

Element reduce(const TreePair& p) {
  if (leaf_count(p.neg) != leaf_count(p.pos))
    throw Error(Error::Kind::Validation, "tree pair has unequal leaf counts");

  Arena na, pa;
  std::vector<std::int64_t> nleaves, pleaves;
  std::int64_t nroot = build_arena(p.neg, na, nleaves);
  std::int64_t proot = build_arena(p.pos, pa, pleaves);
  std::size_t slots = nleaves.size();

  // Aligned leaf slots as a doubly linked list; merging slot s with its
  // successor removes one caret from each tree.
  std::vector<std::int64_t> nxt(slots), prv(slots);
  for (std::size_t i = 0; i < slots; ++i) {
    nxt[i] = (i + 1 < slots) ? static_cast<std::int64_t>(i + 1) : -1;
    prv[i] = static_cast<std::int64_t>(i) - 1;
  }

  auto candidate = [&](std::int64_t s) -> bool {
    if (s < 0) return false;
    std::int64_t t = nxt[s];
    if (t < 0) return false;
    std::int64_t np = na.parent[nleaves[s]];
    if (np < 0 || np != na.parent[nleaves[t]]) return false;
    std::int64_t pp = pa.parent[pleaves[s]];
    if (pp < 0 || pp != pa.parent[pleaves[t]]) return false;
    return true;
  };

  std::vector<std::int64_t> work;
  for (std::size_t i = 0; i < slots; ++i) work.push_back(static_cast<std::int64_t>(i));
  while (!work.empty()) {
    std::int64_t s = work.back();
    work.pop_back();
    if (!candidate(s)) continue;
    std::int64_t t = nxt[s];
    // The shared parent caret becomes the merged leaf in each tree.
    std::int64_t np = na.parent[nleaves[s]];
    na.left[np] = na.right[np] = -1;
    nleaves[s] = np;
    std::int64_t pp = pa.parent[pleaves[s]];
    pa.left[pp] = pa.right[pp] = -1;
    pleaves[s] = pp;
    nxt[s] = nxt[t];
    if (nxt[t] >= 0) prv[nxt[t]] = s;
    work.push_back(s);
    if (prv[s] >= 0) work.push_back(prv[s]);
  }

  return ElementAccess::make_unchecked(arena_to_tree(na, nroot), arena_to_tree(pa, proot));
}

namespace {

// Union of two leaf-aligned trees.
Tree common_refinement(const Tree& a, const Tree& b) {
  if (!a) return b;
  if (!b) return a;
  struct Frame {
    const Tree* a;
    const Tree* b;
    int stage;
    Tree left;
  };
  std::vector<Frame> stack;
  stack.push_back({&a, &b, 0, nullptr});
  Tree carry;
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (!*f.a) {
      carry = *f.b;
      stack.pop_back();
      continue;
    }
    if (!*f.b) {
      carry = *f.a;
      stack.pop_back();
      continue;
    }
    if (f.stage == 0) {
      f.stage = 1;
      stack.push_back({&(*f.a)->left(), &(*f.b)->left(), 0, nullptr});
    } else if (f.stage == 1) {
      f.left = std::move(carry);
      f.stage = 2;
      stack.push_back({&(*f.a)->right(), &(*f.b)->right(), 0, nullptr});
    } else {
      carry = make_caret(std::move(f.left), std::move(carry));
      stack.pop_back();
    }
  }
  return carry;
}

// M refines Y; returns M's subtree over each leaf of Y, in leaf order.
void subtrees_over(const Tree& y, const Tree& m, std::vector<Tree>& out) {
  struct Item {
    const Tree* y;
    const Tree* m;
  };
  std::vector<Item> stack;
  stack.push_back({&y, &m});
  while (!stack.empty()) {
    Item it = stack.back();
    stack.pop_back();
    if (!*it.y) {
      out.push_back(*it.m);
      continue;
    }
    if (!*it.m)
      throw Error(Error::Kind::Invariant, "refinement does not contain base tree");
    stack.push_back({&(*it.y)->right(), &(*it.m)->right()});
    stack.push_back({&(*it.y)->left(), &(*it.m)->left()});
  }
}

// Replaces the leaves of x, in order, with the given subtrees.
Tree graft_leaves(const Tree& x, const std::vector<Tree>& subs) {
  struct Frame {
    const TreeNode* node;
    int stage;
    Tree left;
  };
  std::size_t next = 0;
  std::vector<Frame> stack;
  Tree carry;
  stack.push_back({x.get(), 0, nullptr});
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (!f.node) {
      carry = subs[next++];
      stack.pop_back();
      continue;
    }
    if (f.stage == 0) {
      f.stage = 1;
      stack.push_back({f.node->left().get(), 0, nullptr});
    } else if (f.stage == 1) {
      f.left = std::move(carry);
      f.stage = 2;
      stack.push_back({f.node->right().get(), 0, nullptr});
    } else {
      carry = make_caret(std::move(f.left), std::move(carry));
      stack.pop_back();
    }
  }
  return carry;
}

}  // namespace

Element multiply(const Element& a, const Element& b) {
  Tree m = common_refinement(a.neg(), b.pos());
  std::vector<Tree> over_bpos, over_aneg;
  subtrees_over(b.pos(), m, over_bpos);
  subtrees_over(a.neg(), m, over_aneg);
  Tree neg = graft_leaves(b.neg(), over_bpos);
  Tree pos = graft_leaves(a.pos(), over_aneg);
  return reduce(TreePair{std::move(neg), std::move(pos)});
}

Element invert(const Element& a) {
  return ElementAccess::make_unchecked(a.pos(), a.neg());
}

bool equals(const Element& a, const Element& b) {
  return tree_equal(a.neg(), b.neg()) && tree_equal(a.pos(), b.pos());
}

const Element& generator_element(Gen g) {
  static const Element x0 =
      ElementAccess::make_unchecked(parse_tree("10100"), parse_tree("11000"));
  static const Element x0i =
      ElementAccess::make_unchecked(parse_tree("11000"), parse_tree("10100"));
  static const Element x1 =
      ElementAccess::make_unchecked(parse_tree("1010100"), parse_tree("1011000"));
  static const Element x1i =
      ElementAccess::make_unchecked(parse_tree("1011000"), parse_tree("1010100"));
  switch (g) {
    case Gen::X0: return x0;
    case Gen::X0Inv: return x0i;
    case Gen::X1: return x1;
    case Gen::X1Inv: return x1i;
  }
  throw Error(Error::Kind::Invariant, "bad generator");
}

Element apply_generator(const Element& a, Gen g) {
  return multiply(a, generator_element(g));
}

Element apply_word(const Element& a, std::span<const Gen> word) {
  Element cur = a;
  for (Gen g : word) cur = apply_generator(cur, g);
  return cur;
}

std::string canonical_key(const Element& e) {
  return serialize(e.neg()) + ":" + serialize(e.pos());
}

Element element_from_bitstrings(std::string_view neg, std::string_view pos) {
  Tree n = parse_tree(neg);
  Tree p = parse_tree(pos);
  if (leaf_count(n) != leaf_count(p))
    throw Error(Error::Kind::Validation,
                "element trees have unequal leaf counts (" +
                    std::to_string(leaf_count(n)) + " vs " + std::to_string(leaf_count(p)) + ")");
  return reduce(TreePair{std::move(n), std::move(p)});
}

}  // namespace thompson
