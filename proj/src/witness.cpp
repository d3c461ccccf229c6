#include "thompson/witness.hpp"

#include <algorithm>

#include "thompson/error.hpp"
#include "thompson/metric.hpp"
#include "thompson/normal_form.hpp"

namespace thompson {

std::uint64_t first_right_caret_index(const Tree& t) {
  if (!t || !t->right())
    throw Error(Error::Kind::Precondition,
                "first_right_caret_index: root has no right-side caret");
  return caret_count(t->left()) + 1 + caret_count(t->right()->left());
}

WitnessElement build_witness(unsigned k, std::uint64_t max_leaves) {
  if (k < 2) throw Error(Error::Kind::Precondition, "witness family requires k >= 2");
  if (4u * k >= 63)
    throw Error(Error::Kind::Resource, "witness leaf count overflows");
  std::uint64_t leaves = std::uint64_t{1} << (4 * k);
  if (leaves > max_leaves)
    throw Error(Error::Kind::Resource,
                "witness for k = " + std::to_string(k) + " needs " +
                    std::to_string(leaves) + " leaves, over the budget of " +
                    std::to_string(max_leaves));

  Tree neg = build_balanced(4 * k);
  std::uint64_t r = first_right_caret_index(neg);
  std::uint64_t s = leaves - 3;

  // T+ from the positive word x0^{r-2} x1 x_s; its minimal tree already has
  // 2^{4k} leaves, so padding is a no-op kept as a guard.
  ExponentVector epos(s + 1, 0);
  epos[0] = r - 2;
  epos[1] = 1;
  epos[s] = 1;
  Tree pos = pad_to_leaf_count(tree_from_exponents(epos), leaves);

  TreePair pair{std::move(neg), std::move(pos)};
  if (leaf_count(pair.neg) != leaf_count(pair.pos))
    throw Error(Error::Kind::Invariant, "witness trees have unequal leaf counts");
  if (!is_reduced(pair))
    throw Error(Error::Kind::Invariant, "witness pair is not reduced");
  Element element = ElementAccess::make_unchecked(pair.neg, pair.pos);
  std::uint64_t len = fordham_length(element);
  return WitnessElement{k, std::move(element), len - 1, r, s};
}

namespace {

// Walks the given spine and checks that the first `count` carets carry a
// complete opposite-side subtree of at least `levels` levels.
bool spine_has_complete_subtrees(const Tree& t, bool left_spine, unsigned count,
                                 unsigned levels) {
  const TreeNode* cur = t.get();
  for (unsigned i = 0; i < count; ++i) {
    if (!cur) return false;
    const Tree& opposite = left_spine ? cur->right() : cur->left();
    if (!is_complete(opposite) || tree_height(opposite) < levels) return false;
    cur = (left_spine ? cur->left() : cur->right()).get();
  }
  return true;
}

}  // namespace

WitnessValidation validate_witness(const WitnessElement& w) {
  WitnessValidation v;
  auto fail = [&v](std::string msg) {
    v.ok = false;
    v.failures.push_back(std::move(msg));
  };

  const Tree& neg = w.element.neg();
  const Tree& pos = w.element.pos();
  std::uint64_t leaves = std::uint64_t{1} << (4 * w.k);

  if (!tree_equal(neg, build_balanced(4 * w.k)))
    fail("T- is not the balanced tree with 2^(4k) leaves");
  if (leaf_count(neg) != leaves || leaf_count(pos) != leaves)
    fail("leaf counts differ from 2^(4k)");
  if (w.s != leaves - 3) fail("s != 2^(4k) - 3");
  if (w.r != first_right_caret_index(neg)) fail("r is not the first right-side caret index");

  auto exposed = exposed_leaf_starts(pos);
  if (exposed != std::vector<std::uint64_t>{1, w.s})
    fail("T+ must have exactly two exposed carets, at leaves (1,2) and (s,s+1)");
  if (!is_reduced(w.element.pair())) fail("pair is not reduced");

  // The proofs use the first 2k carets of each side; deeper side carets of
  // T_{4k} necessarily have smaller opposite subtrees.
  if (!spine_has_complete_subtrees(neg, true, 2 * w.k, w.k + 2))
    fail("left-side carets lack complete right subtrees of >= k+2 levels");
  if (!spine_has_complete_subtrees(neg, false, 2 * w.k, w.k + 2))
    fail("right-side carets lack complete left subtrees of >= k+2 levels");

  v.length = fordham_length(w.element);
  if (v.length != w.n + 1) fail("stored n is not |w| - 1");
  Element wx0 = apply_generator(w.element, Gen::X0);
  Element wx0i = apply_generator(w.element, Gen::X0Inv);
  v.len_wx0 = fordham_length(wx0);
  v.len_wx0inv = fordham_length(wx0i);
  v.dist = distance(wx0, wx0i);
  if (v.len_wx0 != v.length - 1) fail("|w x0| != |w| - 1");
  if (v.len_wx0inv != v.length - 1) fail("|w x0^-1| != |w| - 1");
  if (v.dist != 2) fail("d(w x0, w x0^-1) != 2");

  return v;
}

}  // namespace thompson
