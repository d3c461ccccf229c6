#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "thompson/dynamics.hpp"
#include "thompson/element.hpp"
#include "thompson/witness.hpp"

namespace thompson {

// Exact ball of the word metric, built by breadth-first search over generator
// multiplication (no length formula involved; this is the metric's oracle).
struct Ball {
  unsigned radius = 0;
  std::unordered_map<std::string, unsigned> members;  // canonical key -> distance

  std::vector<std::uint64_t> sphere_sizes() const;  // index d -> |S(d)|
};

inline constexpr unsigned kDefaultBallLimit = 7;

Ball ball(unsigned n, unsigned limit = kDefaultBallLimit);

struct SearchOptions {
  unsigned cap = 0;
  bool prune_backtracking = true;  // skip g immediately followed by g^-1
  unsigned jobs = 1;
  double budget_seconds = 0;  // 0 = unlimited
  // When set, watch the caret at this infix slot of T-: each time it first
  // stops being a right caret along a path, record whether the length equals
  // tracked_expected_length. Tracking is only meaningful while generator
  // steps preserve the caret numbering (rotation steps); a general-product
  // step invalidates it for the rest of that path.
  std::optional<std::uint64_t> tracked_caret;
  std::uint64_t tracked_expected_length = 0;
  bool verify_incremental = false;  // cross-check fast-path lengths
  std::size_t max_exit_witnesses = 16;
};

struct SearchReport {
  std::string source;
  std::string target;
  std::uint64_t n = 0;
  unsigned cap = 0;
  bool found = false;
  std::optional<unsigned> min_inside_length;
  std::optional<std::string> best_path;
  std::uint64_t paths_explored = 0;
  std::vector<std::string> exit_witnesses;
  bool complete = true;  // false when the wall-clock budget expired
  // Tracked-caret accounting (see SearchOptions::tracked_caret).
  std::uint64_t track_checks = 0;
  std::uint64_t track_violations = 0;
  std::uint64_t track_invalidated = 0;
  std::vector<std::string> violation_samples;
};

// Depth-first enumeration of generator words from src up to length cap,
// pruning prefixes whose endpoint has length > n. found = dst reached while
// staying inside B(n); min_inside_length is the shortest such word length.
SearchReport inside_ball_search(const Element& src, const Element& dst,
                                std::uint64_t n, const SearchOptions& options);

struct AuditStep {
  Gen g;
  std::uint64_t affected_index;
  CaretType pos_pairing;
  int measured_delta;
  std::optional<int> predicted_delta;  // absent when the pairing is off-chart
  std::uint64_t length_after;
  bool r_is_right_after;
};

struct AuditReport {
  unsigned k = 0;
  unsigned m = 0;
  std::uint64_t n = 0;             // |w| - 1
  std::uint64_t tracked_caret = 0; // infix slot of the original root R
  std::uint64_t length_start = 0;  // |w|
  std::uint64_t length_after_prefix = 0;  // |w x0^m|
  std::vector<std::uint64_t> ll_paired_right_carets;  // c_1 < ... < c_m
  bool prefix_ll_count_ok = false;
  std::vector<AuditStep> steps;
  std::optional<std::size_t> first_nonright_step;
  std::optional<std::uint64_t> length_at_first_nonright;
  bool exits_ball_exactly = false;  // length == n+1 at the first non-right step
  bool deltas_match_chart = true;   // over steps with LL/RNI pairings
};

// Applies x0^m then eta to the witness via rotations, recording the affected
// caret, its T+ pairing, and measured vs predicted length changes. Throws if
// any step's rotation precondition fails (naming the step).
AuditReport audit_path(const WitnessElement& w, unsigned m, std::span<const Gen> eta);

}  // namespace thompson
