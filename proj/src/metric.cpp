#include "thompson/metric.hpp"

#include "thompson/error.hpp"

namespace thompson {

const char* to_string(CaretType t) {
  switch (t) {
    case CaretType::R0: return "R0";
    case CaretType::RNI: return "RNI";
    case CaretType::RI: return "RI";
    case CaretType::LL: return "LL";
    case CaretType::I0: return "I0";
    case CaretType::IR: return "IR";
    case CaretType::L0: return "L0";
  }
  return "?";
}

std::vector<CaretType> classify_carets(const Tree& t) {
  std::vector<CaretType> out;
  if (!t) return out;
  std::size_t n = static_cast<std::size_t>(t->carets());
  out.resize(n);

  struct Info {
    bool left_caret;      // left edge on the left side (root included)
    bool right_caret;     // right edge on the right side, root excluded
    bool right_is_caret;  // has a caret as right child
  };
  std::vector<Info> info(n);

  // In-order walk with path flags; spine membership is a property of the
  // position, not the node (subtrees can be shared).
  struct Frame {
    const TreeNode* node;
    bool all_l, all_r, root;
  };
  std::vector<Frame> stack;
  const TreeNode* cur = t.get();
  bool al = true, ar = true, rt = true;
  std::size_t idx = 0;
  while (cur || !stack.empty()) {
    while (cur) {
      stack.push_back({cur, al, ar, rt});
      cur = cur->left().get();
      ar = false;
      rt = false;
    }
    Frame f = stack.back();
    stack.pop_back();
    info[idx] = {f.all_l || f.root, f.all_r && !f.root,
                 static_cast<bool>(f.node->right())};
    ++idx;
    cur = f.node->right().get();
    al = false;
    ar = f.all_r;
    rt = false;
  }

  // A caret is interior iff it is on neither side; interior carets drive the
  // R0 / RNI / RI split so precompute the suffix "any interior at >= i".
  std::vector<std::uint8_t> interior(n + 1, 0), any_interior_from(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i)
    interior[i] = !info[i].left_caret && !info[i].right_caret;
  for (std::size_t i = n; i-- > 0;)
    any_interior_from[i] = interior[i] || any_interior_from[i + 1];

  if (!info[0].left_caret)
    throw Error(Error::Kind::Invariant, "caret 0 is not a left caret");
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0) {
      out[i] = CaretType::L0;
    } else if (info[i].left_caret) {
      out[i] = CaretType::LL;
    } else if (interior[i]) {
      out[i] = info[i].right_is_caret ? CaretType::IR : CaretType::I0;
    } else if (i + 1 < n && interior[i + 1]) {
      out[i] = CaretType::RI;
    } else {
      out[i] = any_interior_from[i + 1] ? CaretType::RNI : CaretType::R0;
    }
  }
  return out;
}

namespace {

// Rows/columns ordered R0, RNI, RI, LL, I0, IR.
constexpr unsigned kWeight[6][6] = {
    {0, 2, 2, 1, 1, 3},
    {2, 2, 2, 1, 1, 3},
    {2, 2, 2, 1, 3, 3},
    {1, 1, 1, 2, 2, 2},
    {1, 1, 3, 2, 2, 4},
    {3, 3, 3, 2, 4, 4},
};

}  // namespace

unsigned pair_weight(CaretType a, CaretType b) {
  if (a == CaretType::L0 && b == CaretType::L0) return 0;
  if (a == CaretType::L0 || b == CaretType::L0)
    throw Error(Error::Kind::Invariant, "L0 caret paired with a non-L0 caret");
  return kWeight[static_cast<unsigned>(a)][static_cast<unsigned>(b)];
}

std::vector<CaretPairing> caret_pairings(const TreePair& p) {
  if (caret_count(p.neg) != caret_count(p.pos))
    throw Error(Error::Kind::Precondition, "caret pairing requires equal caret counts");
  std::vector<CaretType> a = classify_carets(p.neg);
  std::vector<CaretType> b = classify_carets(p.pos);
  std::vector<CaretPairing> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out.push_back({a[i], b[i], pair_weight(a[i], b[i])});
  return out;
}

std::uint64_t weight_sum(const TreePair& p) {
  std::uint64_t total = 0;
  for (const auto& cp : caret_pairings(p)) total += cp.weight;
  return total;
}

std::uint64_t fordham_length(const Element& e) {
  return weight_sum(e.pair());
}

std::uint64_t distance(const Element& a, const Element& b) {
  return fordham_length(multiply(invert(a), b));
}

}  // namespace thompson
