#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "thompson/element.hpp"
#include "thompson/metric.hpp"
#include "thompson/normal_form.hpp"

namespace thompson {

// Result of a structural generator action on T-. The positive tree is shared
// untouched, the caret numbering is preserved, and exactly one infix slot
// changes its type.
struct RotationOutcome {
  Element element;
  std::uint64_t affected_index;
  CaretType neg_type_before;
  CaretType neg_type_after;
};

// True iff the structural precondition for g holds on T- and applying g
// causes no reduction (hence no caret-count change).
bool rotation_applicable(const Element& e, Gen g);

// Fast-path variant: `pos_exposed` is exposed_leaf_starts(e.pos()), reusable
// across steps while T+ is unchanged.
std::optional<RotationOutcome> try_rotation(const Element& e, Gen g,
                                            const std::vector<std::uint64_t>& pos_exposed);

// Throws a precondition error directing the caller to apply_generator when
// the rotation does not apply.
RotationOutcome apply_rotation(const Element& e, Gen g);

// Number of the leftmost leaf of the root's right subtree.
std::uint64_t alpha_index(const Tree& t);

// The same index computed from the normal form: 1 + s_1 + ... + s_l where l
// is the first index with j_{l+1} >= the running sum (1 if the negative part
// is empty or does not start at x_0).
std::uint64_t alpha_index_from_normal_form(const NormalForm& nf);

// Word-length change when the affected caret's T+ partner is LL or RNI.
struct DeltaChartRow {
  CaretType from;
  CaretType to;
  int when_ll;
  int when_rni;
};

const DeltaChartRow& delta_chart_row(Gen g);

// Chart lookup; pairings outside {LL, RNI} are unsupported and throw.
int predict_delta(CaretType pairing, Gen g);

}  // namespace thompson
