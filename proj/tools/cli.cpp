#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "thompson/convexity.hpp"
#include "thompson/dynamics.hpp"
#include "thompson/error.hpp"
#include "thompson/metric.hpp"
#include "thompson/normal_form.hpp"
#include "thompson/tree.hpp"
#include "thompson/witness.hpp"

namespace thompson::cli {

namespace {

using nlohmann::json;

json element_to_json(const Element& e) {
  return json{{"neg", serialize(e.neg())}, {"pos", serialize(e.pos())}};
}

Element element_from_json(const json& j) {
  if (!j.is_object() || !j.contains("neg") || !j.contains("pos") ||
      !j["neg"].is_string() || !j["pos"].is_string())
    throw Error(Error::Kind::Parse,
                "element JSON must be an object {\"neg\": <bits>, \"pos\": <bits>}");
  return element_from_bitstrings(j["neg"].get<std::string>(), j["pos"].get<std::string>());
}

json read_json(std::istream& in) {
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(Error::Kind::Parse, e.what());
  }
}

Element read_element(std::istream& in) { return element_from_json(read_json(in)); }

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

json search_report_to_json(const SearchReport& rep) {
  json j{{"source", rep.source},
         {"target", rep.target},
         {"n", rep.n},
         {"cap", rep.cap},
         {"found", rep.found},
         {"paths_explored", rep.paths_explored},
         {"exit_witnesses", rep.exit_witnesses},
         {"complete", rep.complete},
         {"track_checks", rep.track_checks},
         {"track_violations", rep.track_violations},
         {"track_invalidated", rep.track_invalidated},
         {"violation_samples", rep.violation_samples}};
  j["min_inside_length"] =
      rep.min_inside_length ? json(*rep.min_inside_length) : json(nullptr);
  j["best_path"] = rep.best_path ? json(*rep.best_path) : json(nullptr);
  return j;
}

json audit_report_to_json(const AuditReport& rep) {
  json steps = json::array();
  for (const auto& s : rep.steps) {
    json step{{"generator", to_string(s.g)},
              {"affected_caret", s.affected_index},
              {"pos_pairing", to_string(s.pos_pairing)},
              {"measured_delta", s.measured_delta},
              {"length_after", s.length_after},
              {"r_is_right_after", s.r_is_right_after}};
    step["predicted_delta"] = s.predicted_delta ? json(*s.predicted_delta) : json(nullptr);
    steps.push_back(std::move(step));
  }
  json j{{"k", rep.k},
         {"m", rep.m},
         {"n", rep.n},
         {"tracked_caret", rep.tracked_caret},
         {"length_start", rep.length_start},
         {"length_after_prefix", rep.length_after_prefix},
         {"ll_paired_right_carets", rep.ll_paired_right_carets},
         {"prefix_ll_count_ok", rep.prefix_ll_count_ok},
         {"steps", steps},
         {"exits_ball_exactly", rep.exits_ball_exactly},
         {"deltas_match_chart", rep.deltas_match_chart}};
  j["first_nonright_step"] =
      rep.first_nonright_step ? json(*rep.first_nonright_step) : json(nullptr);
  j["length_at_first_nonright"] =
      rep.length_at_first_nonright ? json(*rep.length_at_first_nonright) : json(nullptr);
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact arithmetic in Thompson's group F"};
  app.require_subcommand(1);

  bool verbose = false;
  auto* len = app.add_subcommand("len", "word length of an element (JSON on stdin)");
  len->add_flag("--verbose", verbose, "emit per-caret type pairs and weights");

  app.add_subcommand("nf", "normal form text of an element (JSON on stdin)");
  app.add_subcommand("pair", "element JSON for a normal form (text on stdin)");
  app.add_subcommand("mul", "product of a JSON array [a, b] (stdin)");
  app.add_subcommand("inv", "inverse of an element (JSON on stdin)");

  std::string gen_letter;
  bool force_general = false, force_rotation = false;
  auto* apply = app.add_subcommand("apply", "apply a generator to an element");
  apply->add_option("--gen", gen_letter, "generator: x0, X0, x1, X1")->required();
  apply->add_flag("--force-general", force_general, "always use the general product");
  apply->add_flag("--force-rotation", force_rotation, "fail unless the rotation applies");

  unsigned ball_n = 0;
  unsigned ball_limit = kDefaultBallLimit;
  bool emit_distances = false;
  auto* ball_cmd = app.add_subcommand("ball", "exact ball of the word metric");
  ball_cmd->add_option("--n", ball_n, "radius")->required();
  ball_cmd->add_option("--limit", ball_limit, "radius guard (default 7)");
  ball_cmd->add_flag("--emit-distances", emit_distances, "one JSON line per member");

  unsigned witness_k = 0;
  auto* witness_cmd = app.add_subcommand("witness", "build a C(k) witness element");
  witness_cmd->add_option("--k", witness_k, "family parameter, k >= 2")->required();

  unsigned ac_k = 0;
  int ac_cap = -1;
  unsigned ac_jobs = 1;
  double ac_budget = 0;
  auto* ac = app.add_subcommand("acfalsify",
                                "search for an inside-ball path from w*x0 to w*x0^-1");
  ac->add_option("--k", ac_k, "witness parameter")->required();
  ac->add_option("--cap", ac_cap, "maximum path length (default k+4)");
  ac->add_option("--jobs", ac_jobs, "worker threads over first-letter prefixes");
  ac->add_option("--budget-seconds", ac_budget, "wall-clock budget (0 = unlimited)");

  unsigned audit_k = 0, audit_m = 0;
  std::string audit_eta;
  auto* audit_cmd = app.add_subcommand("audit", "caret accounting along x0^m eta");
  audit_cmd->add_option("--k", audit_k, "witness parameter")->required();
  audit_cmd->add_option("--m", audit_m, "number of leading x0 letters")->required();
  audit_cmd->add_option("--eta", audit_eta, "generator word, e.g. X0x1")->required();

  std::string dot_out;
  auto* dot_cmd = app.add_subcommand("dot", "DOT graph of an element's trees");
  dot_cmd->add_option("--out", dot_out, "write to a file instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (len->parsed()) {
      Element e = read_element(in);
      if (!verbose) {
        out << fordham_length(e) << "\n";
      } else {
        json pairs = json::array();
        for (const auto& cp : caret_pairings(e.pair()))
          pairs.push_back(json{{"neg", to_string(cp.neg)},
                               {"pos", to_string(cp.pos)},
                               {"weight", cp.weight}});
        out << json{{"length", fordham_length(e)}, {"pairs", pairs}}.dump() << "\n";
      }
    } else if (app.get_subcommand("nf")->parsed()) {
      out << to_string(pair_to_normal_form(read_element(in))) << "\n";
    } else if (app.get_subcommand("pair")->parsed()) {
      out << element_to_json(normal_form_to_pair(parse_normal_form(read_all(in)))).dump()
          << "\n";
    } else if (app.get_subcommand("mul")->parsed()) {
      json j = read_json(in);
      if (!j.is_array() || j.size() != 2)
        throw Error(Error::Kind::Parse, "mul expects a JSON array [a, b]");
      out << element_to_json(multiply(element_from_json(j[0]), element_from_json(j[1])))
                 .dump()
          << "\n";
    } else if (app.get_subcommand("inv")->parsed()) {
      out << element_to_json(invert(read_element(in))).dump() << "\n";
    } else if (apply->parsed()) {
      if (force_general && force_rotation)
        throw Error(Error::Kind::Usage, "choose one of --force-general / --force-rotation");
      Element e = read_element(in);
      Gen g = parse_gen(gen_letter);
      Element result = Element::identity();
      if (force_rotation) {
        result = apply_rotation(e, g).element;
      } else if (force_general) {
        result = apply_generator(e, g);
      } else {
        auto ro = try_rotation(e, g, exposed_leaf_starts(e.pos()));
        result = ro ? ro->element : apply_generator(e, g);
      }
      out << element_to_json(result).dump() << "\n";
    } else if (ball_cmd->parsed()) {
      Ball b = ball(ball_n, ball_limit);
      if (emit_distances) {
        std::vector<std::pair<unsigned, std::string>> rows;
        rows.reserve(b.members.size());
        for (const auto& [key, d] : b.members) rows.emplace_back(d, key);
        std::sort(rows.begin(), rows.end());
        for (const auto& [d, key] : rows)
          out << json{{"canonical", key}, {"distance", d}}.dump() << "\n";
      } else {
        out << json{{"n", b.radius},
                    {"size", b.members.size()},
                    {"sphere_sizes", b.sphere_sizes()}}
                   .dump()
            << "\n";
      }
    } else if (witness_cmd->parsed()) {
      WitnessElement w = build_witness(witness_k);
      std::uint64_t closed_form =
          (std::uint64_t{1} << (witness_k - 1)) + (std::uint64_t{1} << (witness_k - 2)) - 1;
      out << json{{"k", w.k},
                  {"n", w.n},
                  {"r", w.r},
                  {"r_closed_form", closed_form},
                  {"s", w.s},
                  {"length", w.n + 1},
                  {"element", element_to_json(w.element)}}
                 .dump()
          << "\n";
    } else if (ac->parsed()) {
      WitnessElement w = build_witness(ac_k);
      Element src = apply_generator(w.element, Gen::X0);
      Element dst = apply_generator(w.element, Gen::X0Inv);
      SearchOptions opt;
      opt.cap = ac_cap < 0 ? ac_k + 4 : static_cast<unsigned>(ac_cap);
      opt.jobs = ac_jobs;
      opt.budget_seconds = ac_budget;
      opt.tracked_caret = caret_count(w.element.neg()->left());
      opt.tracked_expected_length = w.n + 1;
      SearchReport rep = inside_ball_search(src, dst, w.n, opt);
      json j = search_report_to_json(rep);
      j["k"] = w.k;
      j["witness_length"] = w.n + 1;
      out << j.dump() << "\n";
    } else if (audit_cmd->parsed()) {
      WitnessElement w = build_witness(audit_k);
      std::vector<Gen> eta = parse_word(audit_eta);
      out << audit_report_to_json(audit_path(w, audit_m, eta)).dump() << "\n";
    } else if (dot_cmd->parsed()) {
      Element e = read_element(in);
      std::string dot = "digraph treepair {\n";
      dot += "  subgraph cluster_neg {\n    label=\"T-\";\n";
      dot += tree_to_dot_body(e.neg(), "neg_");
      dot += "  }\n  subgraph cluster_pos {\n    label=\"T+\";\n";
      dot += tree_to_dot_body(e.pos(), "pos_");
      dot += "  }\n}\n";
      if (dot_out.empty()) {
        out << dot;
      } else {
        std::ofstream f(dot_out);
        if (!f) throw Error(Error::Kind::Resource, "cannot open " + dot_out);
        f << dot;
      }
    }
  } catch (const Error& e) {
    json detail{{"kind", Error::kind_name(e.kind())}, {"message", e.what()}};
    if (const auto* pe = dynamic_cast<const ParseError*>(&e)) detail["offset"] = pe->offset();
    err << json{{"error", detail}}.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << json{{"error", {{"kind", "internal"}, {"message", e.what()}}}}.dump() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace thompson::cli
