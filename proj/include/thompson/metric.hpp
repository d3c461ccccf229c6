#pragma once

#include <cstdint>
#include <vector>

#include "thompson/element.hpp"
#include "thompson/tree.hpp"

namespace thompson {

// The seven caret types. Exactly one caret per tree is L0 (caret number 0);
// the root is a left caret unless it is caret 0.
enum class CaretType : std::uint8_t { R0, RNI, RI, LL, I0, IR, L0 };

const char* to_string(CaretType t);

// One type per caret, in infix order. A single leaf gives an empty list.
std::vector<CaretType> classify_carets(const Tree& t);

// Symmetric weight table; (L0, L0) weighs 0 and L0 never pairs with anything
// else in a valid pair (throws if it does).
unsigned pair_weight(CaretType a, CaretType b);

struct CaretPairing {
  CaretType neg;
  CaretType pos;
  unsigned weight;
};

// Infix-aligned type pairs with weights; requires equal caret counts but not
// reducedness (padding both trees adds only weight-0 pairs).
std::vector<CaretPairing> caret_pairings(const TreePair& p);

// Sum of pairing weights for an arbitrary equal-size pair.
std::uint64_t weight_sum(const TreePair& p);

// Exact word length of the element in the generating set {x0, x1}.
std::uint64_t fordham_length(const Element& e);

// d(a, b) = |a^-1 b|.
std::uint64_t distance(const Element& a, const Element& b);

}  // namespace thompson
