#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "thompson/element.hpp"
#include "thompson/tree.hpp"

namespace thompson {

struct NormalFormTerm {
  std::uint64_t index;
  std::uint64_t exponent;  // > 0
  bool operator==(const NormalFormTerm&) const = default;
};

// Word x_{i1}^{r1}...x_{in}^{rn} x_{jm}^{-sm}...x_{j1}^{-s1} in the infinite
// presentation. Both parts are stored with strictly increasing indices; the
// printed word lists the negative part in decreasing index order.
struct NormalForm {
  std::vector<NormalFormTerm> positive;
  std::vector<NormalFormTerm> negative;

  bool empty() const { return positive.empty() && negative.empty(); }
  bool operator==(const NormalForm&) const = default;
};

// Text format: "x0^2 x1 x2 x9^-1 x0^-2"; exponent 1 is omitted, the empty
// string is the identity.
std::string to_string(const NormalForm& nf);
NormalForm parse_normal_form(std::string_view text);

// Throws unless indices are strictly increasing within each part and all
// exponents are positive.
void validate(const NormalForm& nf);

using ExponentVector = std::vector<std::uint64_t>;

// E(n) for every leaf: the length of the maximal all-left-edge path upward
// from leaf n that does not reach the right side of the tree.
ExponentVector leaf_exponents(const Tree& t);

// Minimal tree realizing the exponent vector (trailing zeros beyond the
// vector's end are implied).
Tree tree_from_exponents(const ExponentVector& exponents);

NormalForm pair_to_normal_form(const Element& e);

// Builds the minimal pair for the word and reduces it. For forms satisfying
// the uniqueness condition the constructed pair is already reduced.
Element normal_form_to_pair(const NormalForm& nf);

// Uniqueness condition: whenever index i occurs in both parts, index i+1
// occurs in at least one part.
bool is_unique_normal_form(const NormalForm& nf);

// D(w) = sum of all exponents + highest positive index + highest negative
// index (empty parts contribute 0). Satisfies D/3 <= |w| <= 3D.
std::uint64_t burillo_d(const NormalForm& nf);

}  // namespace thompson
