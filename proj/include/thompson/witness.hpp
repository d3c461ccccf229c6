#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "thompson/element.hpp"

namespace thompson {

// Member of the family C(k): T- is the balanced tree with 2^{4k} leaves and
// T+ realizes the positive word x0^{r-2} x1 x_s, where r is the infix index
// of the first right-side caret of T- and s = 2^{4k} - 3.
struct WitnessElement {
  unsigned k;
  Element element;
  std::uint64_t n;  // |element| - 1
  std::uint64_t r;
  std::uint64_t s;
};

// Infix index of the right child of the root.
std::uint64_t first_right_caret_index(const Tree& t);

inline constexpr std::uint64_t kDefaultWitnessLeafBudget = std::uint64_t{1} << 22;

WitnessElement build_witness(unsigned k,
                             std::uint64_t max_leaves = kDefaultWitnessLeafBudget);

struct WitnessValidation {
  bool ok = true;
  std::vector<std::string> failures;
  std::uint64_t length = 0;       // |w|
  std::uint64_t len_wx0 = 0;      // |w x0|
  std::uint64_t len_wx0inv = 0;   // |w x0^-1|
  std::uint64_t dist = 0;         // d(w x0, w x0^-1)
};

// Checks every structural invariant of the family plus the length facts
// |w x0| = |w x0^-1| = |w| - 1 and d(w x0, w x0^-1) = 2.
WitnessValidation validate_witness(const WitnessElement& w);

}  // namespace thompson
