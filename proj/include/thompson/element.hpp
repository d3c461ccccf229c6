#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "thompson/tree.hpp"

namespace thompson {

// Ordered pair (T-, T+) of trees with equal leaf counts.
struct TreePair {
  Tree neg;
  Tree pos;
};

// The four generators of the finite presentation; uppercase letters on the
// CLI ("X0", "X1") denote inverses.
enum class Gen : std::uint8_t { X0, X0Inv, X1, X1Inv };

constexpr Gen kAllGens[] = {Gen::X0, Gen::X0Inv, Gen::X1, Gen::X1Inv};

Gen inverse(Gen g);
const char* to_string(Gen g);
Gen parse_gen(std::string_view s);
std::vector<Gen> parse_word(std::string_view s);
std::string word_to_string(std::span<const Gen> word);

// A group element: the unique reduced tree pair diagram. Construct through
// reduce(), normal_form_to_pair(), or the arithmetic below.
class Element {
 public:
  static const Element& identity();

  const Tree& neg() const { return neg_; }
  const Tree& pos() const { return pos_; }
  TreePair pair() const { return {neg_, pos_}; }
  std::uint64_t carets() const { return caret_count(neg_); }

 private:
  Element(Tree neg, Tree pos) : neg_(std::move(neg)), pos_(std::move(pos)) {}

  // Trusted constructors: callers guarantee the pair is reduced.
  friend Element reduce(const TreePair&);
  friend struct ElementAccess;

  Tree neg_;
  Tree pos_;
};

// Internal backdoor for modules that build reduced pairs directly (rotations
// preserve reducedness; the witness construction verifies it explicitly).
struct ElementAccess {
  static Element make_unchecked(Tree neg, Tree pos) {
    return Element(std::move(neg), std::move(pos));
  }
};

bool is_reduced(const TreePair& p);

// Removes every caret exposed at the same leaf interval in both trees until
// none remain; the result is the unique reduced pair for the element.
Element reduce(const TreePair& p);

// Group product a*b ("a then b"): both pairs are expanded over the common
// refinement of a.neg and b.pos, giving (b.neg expanded, a.pos expanded),
// then reduced.
Element multiply(const Element& a, const Element& b);

Element invert(const Element& a);
bool equals(const Element& a, const Element& b);

const Element& generator_element(Gen g);

// General product by a generator; dynamics::apply_rotation is the fast path.
Element apply_generator(const Element& a, Gen g);
Element apply_word(const Element& a, std::span<const Gen> word);

// serialize(neg) + ":" + serialize(pos); exact equality key for visited sets.
std::string canonical_key(const Element& e);

// Parses "<neg>:<pos>" or a pair of bitstrings; the pair is validated and
// reduced, so unreduced input names the same element.
Element element_from_bitstrings(std::string_view neg, std::string_view pos);

}  // namespace thompson
