#include "thompson/normal_form.hpp"

#include <algorithm>
#include <charconv>

#include "thompson/error.hpp"

namespace thompson {

std::string to_string(const NormalForm& nf) {
  std::string out;
  auto emit = [&out](const NormalFormTerm& t, bool negative) {
    if (!out.empty()) out += ' ';
    out += 'x';
    out += std::to_string(t.index);
    if (negative) {
      out += "^-";
      out += std::to_string(t.exponent);
    } else if (t.exponent != 1) {
      out += '^';
      out += std::to_string(t.exponent);
    }
  };
  for (const auto& t : nf.positive) emit(t, false);
  for (auto it = nf.negative.rbegin(); it != nf.negative.rend(); ++it) emit(*it, true);
  return out;
}

NormalForm parse_normal_form(std::string_view text) {
  NormalForm nf;
  std::size_t i = 0;
  bool seen_negative = false;
  while (i < text.size()) {
    if (text[i] == ' ' || text[i] == '\t' || text[i] == '\n') {
      ++i;
      continue;
    }
    if (text[i] != 'x') throw ParseError("expected 'x'", i);
    ++i;
    std::uint64_t index = 0;
    auto [p1, ec1] = std::from_chars(text.data() + i, text.data() + text.size(), index);
    if (ec1 != std::errc{}) throw ParseError("expected generator index", i);
    i = static_cast<std::size_t>(p1 - text.data());
    std::int64_t exponent = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      auto [p2, ec2] = std::from_chars(text.data() + i, text.data() + text.size(), exponent);
      if (ec2 != std::errc{}) throw ParseError("expected exponent", i);
      i = static_cast<std::size_t>(p2 - text.data());
    }
    if (exponent == 0) throw ParseError("zero exponent", i);
    if (exponent > 0) {
      if (seen_negative)
        throw ParseError("positive letter after the negative part", i);
      nf.positive.push_back({index, static_cast<std::uint64_t>(exponent)});
    } else {
      seen_negative = true;
      // negative part reads in decreasing index order; store ascending
      nf.negative.push_back({index, static_cast<std::uint64_t>(-exponent)});
    }
  }
  std::reverse(nf.negative.begin(), nf.negative.end());
  validate(nf);
  return nf;
}

void validate(const NormalForm& nf) {
  auto check = [](const std::vector<NormalFormTerm>& part, const char* name) {
    for (std::size_t i = 0; i < part.size(); ++i) {
      if (part[i].exponent == 0)
        throw Error(Error::Kind::Validation,
                    std::string("zero exponent in ") + name + " part");
      if (i > 0 && part[i - 1].index >= part[i].index)
        throw Error(Error::Kind::Validation,
                    std::string("indices not strictly increasing in ") + name + " part");
    }
  };
  check(nf.positive, "positive");
  check(nf.negative, "negative");
}

ExponentVector leaf_exponents(const Tree& t) {
  ExponentVector out;
  out.reserve(leaf_count(t));
  // State per path: run = trailing all-left-edge run, tail_r = whether the
  // path above that run consists of right edges only (then the run's top
  // node lies on the right side and its edge does not count).
  struct Frame {
    const TreeNode* node;
    std::uint64_t run;
    bool tail_r;
  };
  std::vector<Frame> stack;
  stack.push_back({t.get(), 0, true});
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    if (!f.node) {
      out.push_back(f.run == 0 ? 0 : f.run - (f.tail_r ? 1 : 0));
      continue;
    }
    stack.push_back({f.node->right().get(), 0, f.tail_r && f.run == 0});
    stack.push_back({f.node->left().get(), f.run + 1, f.tail_r});
  }
  return out;
}

Tree tree_from_exponents(const ExponentVector& exponents) {
  std::uint64_t h = 0;
  bool any = false;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] != 0) {
      h = i;
      any = true;
    }
  }
  auto e_at = [&](std::uint64_t i) -> std::uint64_t {
    return i < exponents.size() ? exponents[i] : 0;
  };

  // Greedy segmentation: each right-side caret's left subtree spans leaves
  // pos..p-1, closed at the first p with sum of codes == p - pos, where the
  // leading leaf's code is E+1 (its chain tops out on the right side) and
  // interior leaves use E directly.
  std::vector<std::uint64_t> code;
  std::uint64_t pos = 0;
  for (;;) {
    if (!any || pos > h) {
      code.push_back(0);  // the last leaf
      break;
    }
    code.push_back(e_at(pos) + 1);
    std::uint64_t running = e_at(pos) + 1;
    std::uint64_t p = pos + 1;
    while (running != p - pos) {
      code.push_back(e_at(p));
      running += e_at(p);
      ++p;
    }
    pos = p;
  }

  std::string bits;
  bits.reserve(2 * code.size());
  for (std::uint64_t c : code) {
    bits.append(static_cast<std::size_t>(c), '1');
    bits.push_back('0');
  }
  return parse_tree(bits);
}

NormalForm pair_to_normal_form(const Element& e) {
  NormalForm nf;
  ExponentVector pos = leaf_exponents(e.pos());
  ExponentVector neg = leaf_exponents(e.neg());
  for (std::size_t i = 0; i < pos.size(); ++i)
    if (pos[i] != 0) nf.positive.push_back({i, pos[i]});
  for (std::size_t i = 0; i < neg.size(); ++i)
    if (neg[i] != 0) nf.negative.push_back({i, neg[i]});
  return nf;
}

Element normal_form_to_pair(const NormalForm& nf) {
  validate(nf);
  ExponentVector epos, eneg;
  for (const auto& t : nf.positive) {
    epos.resize(std::max<std::size_t>(epos.size(), t.index + 1), 0);
    epos[t.index] = t.exponent;
  }
  for (const auto& t : nf.negative) {
    eneg.resize(std::max<std::size_t>(eneg.size(), t.index + 1), 0);
    eneg[t.index] = t.exponent;
  }
  Tree pos = tree_from_exponents(epos);
  Tree neg = tree_from_exponents(eneg);
  std::uint64_t leaves = std::max(leaf_count(pos), leaf_count(neg));
  pos = pad_to_leaf_count(pos, leaves);
  neg = pad_to_leaf_count(neg, leaves);
  return reduce(TreePair{std::move(neg), std::move(pos)});
}

bool is_unique_normal_form(const NormalForm& nf) {
  std::size_t pi = 0;
  auto in_part = [](const std::vector<NormalFormTerm>& part, std::uint64_t idx) {
    return std::binary_search(
        part.begin(), part.end(), NormalFormTerm{idx, 1},
        [](const NormalFormTerm& a, const NormalFormTerm& b) { return a.index < b.index; });
  };
  for (const auto& t : nf.negative) {
    while (pi < nf.positive.size() && nf.positive[pi].index < t.index) ++pi;
    if (pi < nf.positive.size() && nf.positive[pi].index == t.index) {
      if (!in_part(nf.positive, t.index + 1) && !in_part(nf.negative, t.index + 1))
        return false;
    }
  }
  return true;
}

std::uint64_t burillo_d(const NormalForm& nf) {
  std::uint64_t d = 0;
  for (const auto& t : nf.positive) d += t.exponent;
  for (const auto& t : nf.negative) d += t.exponent;
  if (!nf.positive.empty()) d += nf.positive.back().index;
  if (!nf.negative.empty()) d += nf.negative.back().index;
  return d;
}

}  // namespace thompson
