#include "thompson/convexity.hpp"

#include <atomic>
#include <chrono>
#include <deque>
#include <memory>
#include <thread>
#include <utility>

#include "thompson/error.hpp"
#include "thompson/metric.hpp"

namespace thompson {

std::vector<std::uint64_t> Ball::sphere_sizes() const {
  std::vector<std::uint64_t> out(radius + 1, 0);
  for (const auto& [key, d] : members) ++out[d];
  return out;
}

Ball ball(unsigned n, unsigned limit) {
  if (n > limit)
    throw Error(Error::Kind::Resource,
                "ball radius " + std::to_string(n) + " exceeds the configured limit " +
                    std::to_string(limit));
  Ball b;
  b.radius = n;
  std::deque<Element> frontier;
  b.members.emplace(canonical_key(Element::identity()), 0u);
  frontier.push_back(Element::identity());
  for (unsigned d = 1; d <= n; ++d) {
    std::deque<Element> next;
    for (const Element& e : frontier) {
      for (Gen g : kAllGens) {
        Element m = apply_generator(e, g);
        auto [it, inserted] = b.members.emplace(canonical_key(m), d);
        if (inserted) next.push_back(std::move(m));
      }
    }
    frontier = std::move(next);
  }
  return b;
}

namespace {

struct PosInfo {
  std::vector<CaretType> types;
  std::vector<std::uint64_t> exposed;
};
using PosInfoPtr = std::shared_ptr<const PosInfo>;

PosInfoPtr make_pos_info(const Tree& pos) {
  auto p = std::make_shared<PosInfo>();
  p->types = classify_carets(pos);
  p->exposed = exposed_leaf_starts(pos);
  return p;
}

// Whether the caret at the given infix slot lies on the right side (root
// excluded). Valid only while generator steps preserve the numbering.
bool is_right_at_slot(const Tree& t, std::uint64_t slot) {
  const TreeNode* cur = t.get();
  std::uint64_t k = slot;
  bool all_right = true;
  bool at_root = true;
  while (cur) {
    std::uint64_t lc = caret_count(cur->left());
    if (k == lc) return all_right && !at_root;
    if (k < lc) {
      cur = cur->left().get();
      all_right = false;
    } else {
      k -= lc + 1;
      cur = cur->right().get();
    }
    at_root = false;
  }
  throw Error(Error::Kind::Invariant, "tracked caret slot out of range");
}

struct Node {
  Element e;
  std::uint64_t len;
  PosInfoPtr pos;
  bool tracked_right;
  bool track_valid;
  bool transition_done;
};

struct SearchCtx {
  const Element* dst;
  std::uint64_t dst_len;
  std::uint64_t n;
  const SearchOptions* opt;
  std::chrono::steady_clock::time_point deadline;
  bool has_deadline = false;
  SearchReport rep;
  std::vector<Gen> word;
  std::uint64_t ticks = 0;
  bool budget_exceeded = false;
};

Node make_step(SearchCtx& ctx, const Node& cur, Gen g) {
  const SearchOptions& opt = *ctx.opt;
  if (auto ro = try_rotation(cur.e, g, cur.pos->exposed)) {
    CaretType pt = cur.pos->types[ro->affected_index];
    std::uint64_t len = cur.len - pair_weight(ro->neg_type_before, pt) +
                        pair_weight(ro->neg_type_after, pt);
    if (opt.verify_incremental && len != fordham_length(ro->element))
      throw Error(Error::Kind::Invariant, "incremental length disagrees with recomputation");
    bool right = false;
    if (opt.tracked_caret && cur.track_valid)
      right = is_right_at_slot(ro->element.neg(), *opt.tracked_caret);
    return Node{std::move(ro->element), len,           cur.pos,
                right,                  cur.track_valid, cur.transition_done};
  }
  Element m = apply_generator(cur.e, g);
  std::uint64_t len = fordham_length(m);
  PosInfoPtr pos = make_pos_info(m.pos());
  // The general product can reduce or expand; the caret numbering is no
  // longer the original one, so tracking stops on this path.
  return Node{std::move(m), len, std::move(pos), false, false, cur.transition_done};
}

void track_update(SearchCtx& ctx, const Node& parent, Node& child) {
  if (!ctx.opt->tracked_caret) return;
  if (!child.track_valid) {
    if (parent.track_valid) ++ctx.rep.track_invalidated;
    return;
  }
  if (parent.transition_done) {
    child.transition_done = true;
    return;
  }
  if (parent.tracked_right && !child.tracked_right) {
    child.transition_done = true;
    ++ctx.rep.track_checks;
    if (child.len != ctx.opt->tracked_expected_length) {
      ++ctx.rep.track_violations;
      if (ctx.rep.violation_samples.size() < 16)
        ctx.rep.violation_samples.push_back(word_to_string(ctx.word));
    }
  }
}

void dfs(SearchCtx& ctx, const Node& cur, unsigned depth, Gen last) {
  if (ctx.budget_exceeded) return;
  if (ctx.has_deadline && (++ctx.ticks & 1023u) == 0 &&
      std::chrono::steady_clock::now() > ctx.deadline) {
    ctx.budget_exceeded = true;
    return;
  }
  if (cur.len == ctx.dst_len && equals(cur.e, *ctx.dst)) {
    ctx.rep.found = true;
    if (!ctx.rep.min_inside_length || depth < *ctx.rep.min_inside_length) {
      ctx.rep.min_inside_length = depth;
      ctx.rep.best_path = word_to_string(ctx.word);
    }
    return;  // detours through dst cannot shorten an arrival
  }
  if (depth == ctx.opt->cap) return;
  for (Gen g : kAllGens) {
    if (ctx.opt->prune_backtracking && g == inverse(last)) continue;
    ctx.word.push_back(g);
    Node child = make_step(ctx, cur, g);
    ++ctx.rep.paths_explored;
    track_update(ctx, cur, child);
    if (child.len > ctx.n) {
      if (ctx.rep.exit_witnesses.size() < ctx.opt->max_exit_witnesses)
        ctx.rep.exit_witnesses.push_back(word_to_string(ctx.word));
    } else {
      dfs(ctx, child, depth + 1, g);
    }
    ctx.word.pop_back();
    if (ctx.budget_exceeded) return;
  }
}

SearchCtx make_ctx(const Element& dst, std::uint64_t dst_len, std::uint64_t n,
                   const SearchOptions& opt,
                   std::chrono::steady_clock::time_point deadline, bool has_deadline) {
  SearchCtx ctx;
  ctx.dst = &dst;
  ctx.dst_len = dst_len;
  ctx.n = n;
  ctx.opt = &opt;
  ctx.deadline = deadline;
  ctx.has_deadline = has_deadline;
  return ctx;
}

void merge_reports(SearchReport& into, const SearchReport& from, std::size_t max_exits) {
  if (from.found) {
    if (!into.found || !into.min_inside_length ||
        (from.min_inside_length && *from.min_inside_length < *into.min_inside_length)) {
      into.min_inside_length = from.min_inside_length;
      into.best_path = from.best_path;
    }
    into.found = true;
  }
  into.paths_explored += from.paths_explored;
  for (const auto& w : from.exit_witnesses)
    if (into.exit_witnesses.size() < max_exits) into.exit_witnesses.push_back(w);
  into.complete = into.complete && from.complete;
  into.track_checks += from.track_checks;
  into.track_violations += from.track_violations;
  into.track_invalidated += from.track_invalidated;
  for (const auto& v : from.violation_samples)
    if (into.violation_samples.size() < 16) into.violation_samples.push_back(v);
}

}  // namespace

SearchReport inside_ball_search(const Element& src, const Element& dst,
                                std::uint64_t n, const SearchOptions& options) {
  std::uint64_t src_len = fordham_length(src);
  std::uint64_t dst_len = fordham_length(dst);
  if (src_len > n || dst_len > n)
    throw Error(Error::Kind::Precondition,
                "inside_ball_search: endpoints must start inside B(n)");

  auto deadline = std::chrono::steady_clock::now();
  bool has_deadline = options.budget_seconds > 0;
  if (has_deadline)
    deadline += std::chrono::duration_cast<std::chrono::steady_clock::duration>(
        std::chrono::duration<double>(options.budget_seconds));

  SearchReport rep;
  rep.source = canonical_key(src);
  rep.target = canonical_key(dst);
  rep.n = n;
  rep.cap = options.cap;

  Node root{src, src_len, make_pos_info(src.pos()), false, true, false};
  if (options.tracked_caret)
    root.tracked_right = is_right_at_slot(src.neg(), *options.tracked_caret);

  if (equals(src, dst)) {
    rep.found = true;
    rep.min_inside_length = 0;
    rep.best_path = "";
    return rep;
  }

  unsigned jobs = options.jobs == 0 ? 1 : options.jobs;
  if (jobs <= 1) {
    SearchCtx ctx = make_ctx(dst, dst_len, n, options, deadline, has_deadline);
    ctx.rep.cap = options.cap;
    for (Gen g : kAllGens) {
      ctx.word.push_back(g);
      Node child = make_step(ctx, root, g);
      ++ctx.rep.paths_explored;
      track_update(ctx, root, child);
      if (child.len > n) {
        if (ctx.rep.exit_witnesses.size() < options.max_exit_witnesses)
          ctx.rep.exit_witnesses.push_back(word_to_string(ctx.word));
      } else if (options.cap > 0) {
        dfs(ctx, child, 1, g);
      }
      ctx.word.pop_back();
    }
    merge_reports(rep, ctx.rep, options.max_exit_witnesses);
    rep.complete = rep.complete && !ctx.budget_exceeded;
    return rep;
  }

  // First-letter partition; workers share only immutable inputs and their
  // reports merge in a fixed branch order.
  std::vector<SearchCtx> branch_ctx;
  branch_ctx.reserve(4);
  for (int i = 0; i < 4; ++i)
    branch_ctx.push_back(make_ctx(dst, dst_len, n, options, deadline, has_deadline));
  std::atomic<unsigned> next_branch{0};
  auto worker = [&]() {
    for (;;) {
      unsigned b = next_branch.fetch_add(1);
      if (b >= 4) return;
      SearchCtx& ctx = branch_ctx[b];
      Gen g = kAllGens[b];
      ctx.word.push_back(g);
      Node child = make_step(ctx, root, g);
      ++ctx.rep.paths_explored;
      track_update(ctx, root, child);
      if (child.len > n) {
        if (ctx.rep.exit_witnesses.size() < options.max_exit_witnesses)
          ctx.rep.exit_witnesses.push_back(word_to_string(ctx.word));
      } else if (options.cap > 0) {
        dfs(ctx, child, 1, g);
      }
      ctx.word.pop_back();
    }
  };
  std::vector<std::thread> threads;
  unsigned workers = std::min<unsigned>(jobs, 4);
  threads.reserve(workers);
  for (unsigned i = 0; i < workers; ++i) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  for (const SearchCtx& ctx : branch_ctx) {
    merge_reports(rep, ctx.rep, options.max_exit_witnesses);
    rep.complete = rep.complete && !ctx.budget_exceeded;
  }
  return rep;
}

AuditReport audit_path(const WitnessElement& w, unsigned m, std::span<const Gen> eta) {
  AuditReport rep;
  rep.k = w.k;
  rep.m = m;
  rep.n = w.n;
  rep.tracked_caret = caret_count(w.element.neg()->left());
  rep.length_start = w.n + 1;

  PosInfoPtr pos_info = make_pos_info(w.element.pos());
  Element cur = w.element;
  std::uint64_t len = rep.length_start;

  auto rotate = [&](Gen g, const char* where, std::size_t step) {
    auto ro = try_rotation(cur, g, pos_info->exposed);
    if (!ro)
      throw Error(Error::Kind::Precondition,
                  std::string("audit aborted: rotation precondition fails at ") + where +
                      " step " + std::to_string(step) + " (" + to_string(g) + ")");
    return *std::move(ro);
  };

  for (unsigned i = 0; i < m; ++i) {
    RotationOutcome ro = rotate(Gen::X0, "prefix", i);
    CaretType pt = pos_info->types[ro.affected_index];
    len = len - pair_weight(ro.neg_type_before, pt) + pair_weight(ro.neg_type_after, pt);
    cur = std::move(ro.element);
  }
  rep.length_after_prefix = len;

  {
    std::vector<CaretType> neg_types = classify_carets(cur.neg());
    for (std::size_t i = 0; i < neg_types.size(); ++i) {
      bool right = neg_types[i] == CaretType::R0 || neg_types[i] == CaretType::RNI ||
                   neg_types[i] == CaretType::RI;
      if (right && pos_info->types[i] == CaretType::LL)
        rep.ll_paired_right_carets.push_back(i);
    }
    rep.prefix_ll_count_ok = rep.ll_paired_right_carets.size() == m;
  }

  bool r_right = is_right_at_slot(cur.neg(), rep.tracked_caret);
  for (std::size_t i = 0; i < eta.size(); ++i) {
    Gen g = eta[i];
    RotationOutcome ro = rotate(g, "eta", i);
    CaretType pt = pos_info->types[ro.affected_index];
    int measured = static_cast<int>(pair_weight(ro.neg_type_after, pt)) -
                   static_cast<int>(pair_weight(ro.neg_type_before, pt));
    std::optional<int> predicted;
    if (pt == CaretType::LL || pt == CaretType::RNI) {
      predicted = predict_delta(pt, g);
      if (*predicted != measured) rep.deltas_match_chart = false;
    }
    len = static_cast<std::uint64_t>(static_cast<std::int64_t>(len) + measured);
    cur = std::move(ro.element);
    bool right_now = is_right_at_slot(cur.neg(), rep.tracked_caret);
    rep.steps.push_back({g, ro.affected_index, pt, measured, predicted, len, right_now});
    if (r_right && !right_now && !rep.first_nonright_step) {
      rep.first_nonright_step = i;
      rep.length_at_first_nonright = len;
      rep.exits_ball_exactly = (len == rep.n + 1);
    }
    r_right = right_now;
  }
  return rep;
}

}  // namespace thompson
