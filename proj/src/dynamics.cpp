#include "thompson/dynamics.hpp"

#include <algorithm>

#include "thompson/error.hpp"

namespace thompson {

namespace {

bool is_right_spine(const Tree& t) {
  const TreeNode* cur = t.get();
  while (cur) {
    if (cur->left()) return false;
    cur = cur->right().get();
  }
  return true;
}

// Type of a right-side caret whose right subtree is s. Its infix successor is
// the bottom of s's left spine (interior) when that spine exists, s itself
// (right side) when s is a caret with a leaf left child, and absent when s is
// a leaf; carets numbered above it all live inside s.
CaretType right_subtype(const Tree& s) {
  if (!s) return CaretType::R0;
  if (s->left()) return CaretType::RI;
  return is_right_spine(s->right()) ? CaretType::R0 : CaretType::RNI;
}

bool exposed_contains(const std::vector<std::uint64_t>& sorted, std::uint64_t m) {
  return std::binary_search(sorted.begin(), sorted.end(), m);
}

}  // namespace

std::optional<RotationOutcome> try_rotation(const Element& e, Gen g,
                                            const std::vector<std::uint64_t>& pos_exposed) {
  const Tree& n = e.neg();
  if (!n) return std::nullopt;
  const Tree& l = n->left();
  const Tree& r = n->right();

  switch (g) {
    case Gen::X0: {
      // Clockwise rotation at the root; C_L becomes the root.
      if (!l) return std::nullopt;
      const Tree& ll = l->left();
      const Tree& lr = l->right();
      Tree moved = make_caret(lr, r);
      if (!lr && !r && exposed_contains(pos_exposed, leaf_count(ll)))
        return std::nullopt;  // the rotated pair would reduce
      std::uint64_t slot = caret_count(l);
      CaretType after = right_subtype(r);
      return RotationOutcome{
          ElementAccess::make_unchecked(make_caret(ll, std::move(moved)), e.pos()), slot,
          CaretType::LL, after};
    }
    case Gen::X0Inv: {
      // Counterclockwise rotation at the root; C_R becomes the root.
      if (!r) return std::nullopt;
      const Tree& rl = r->left();
      const Tree& rr = r->right();
      if (!l && !rl && exposed_contains(pos_exposed, 0)) return std::nullopt;
      std::uint64_t slot = caret_count(l) + 1 + caret_count(rl);
      CaretType before = right_subtype(rr);
      return RotationOutcome{
          ElementAccess::make_unchecked(make_caret(make_caret(l, rl), rr), e.pos()), slot,
          before, CaretType::LL};
    }
    case Gen::X1: {
      // Clockwise rotation at C_R; C_RL becomes the right child of the root.
      if (!r || !r->left()) return std::nullopt;
      const Tree& rl = r->left();
      const Tree& rr = r->right();
      const Tree& rll = rl->left();
      const Tree& rlr = rl->right();
      if (!rlr && !rr &&
          exposed_contains(pos_exposed, leaf_count(l) + leaf_count(rll)))
        return std::nullopt;
      std::uint64_t slot = caret_count(l) + 1 + caret_count(rll);
      CaretType before = rlr ? CaretType::IR : CaretType::I0;
      Tree q = make_caret(rlr, rr);
      CaretType after = right_subtype(q);
      return RotationOutcome{
          ElementAccess::make_unchecked(
              make_caret(l, make_caret(rll, std::move(q))), e.pos()),
          slot, before, after};
    }
    case Gen::X1Inv: {
      // Counterclockwise rotation at C_R; C_RR becomes the right child of the
      // root and C_R turns interior.
      if (!r || !r->right()) return std::nullopt;
      const Tree& rl = r->left();
      const Tree& rr = r->right();
      const Tree& rrl = rr->left();
      const Tree& rrr = rr->right();
      if (!rl && !rrl && exposed_contains(pos_exposed, leaf_count(l)))
        return std::nullopt;
      std::uint64_t slot = caret_count(l) + 1 + caret_count(rl);
      CaretType before = right_subtype(rr);
      CaretType after = rrl ? CaretType::IR : CaretType::I0;
      return RotationOutcome{
          ElementAccess::make_unchecked(
              make_caret(l, make_caret(make_caret(rl, rrl), rrr)), e.pos()),
          slot, before, after};
    }
  }
  throw Error(Error::Kind::Invariant, "bad generator");
}

bool rotation_applicable(const Element& e, Gen g) {
  return try_rotation(e, g, exposed_leaf_starts(e.pos())).has_value();
}

RotationOutcome apply_rotation(const Element& e, Gen g) {
  auto out = try_rotation(e, g, exposed_leaf_starts(e.pos()));
  if (!out)
    throw Error(Error::Kind::Precondition,
                std::string("rotation for ") + to_string(g) +
                    " is not applicable (structural precondition fails or the product"
                    " reduces); use the general apply_generator");
  return *std::move(out);
}

std::uint64_t alpha_index(const Tree& t) {
  if (!t || !t->right())
    throw Error(Error::Kind::Precondition, "alpha_index: right subtree of the root is empty");
  return leaf_count(t->left());
}

std::uint64_t alpha_index_from_normal_form(const NormalForm& nf) {
  if (nf.negative.empty() || nf.negative.front().index != 0) return 1;
  std::uint64_t acc = 1;
  for (std::size_t l = 0; l < nf.negative.size(); ++l) {
    acc += nf.negative[l].exponent;
    if (l + 1 >= nf.negative.size() || nf.negative[l + 1].index >= acc) break;
  }
  return acc;
}

const DeltaChartRow& delta_chart_row(Gen g) {
  static const DeltaChartRow rows[4] = {
      /* X0    */ {CaretType::LL, CaretType::RI, -1, +1},
      /* X0Inv */ {CaretType::RI, CaretType::LL, +1, -1},
      /* X1    */ {CaretType::IR, CaretType::RI, -1, -1},
      /* X1Inv */ {CaretType::RI, CaretType::IR, +1, +1},
  };
  return rows[static_cast<unsigned>(g)];
}

int predict_delta(CaretType pairing, Gen g) {
  const DeltaChartRow& row = delta_chart_row(g);
  if (pairing == CaretType::LL) return row.when_ll;
  if (pairing == CaretType::RNI) return row.when_rni;
  throw Error(Error::Kind::Precondition,
              std::string("delta chart covers only LL and RNI pairings, got ") +
                  to_string(pairing));
}

}  // namespace thompson
