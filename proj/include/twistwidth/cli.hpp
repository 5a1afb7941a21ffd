// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: `twistwidth {dm|rg|verify} <action> ...`.
//
// Exit codes: 0 success, 1 domain error (error name on stderr), 2 usage or
// parse error.

#ifndef TWISTWIDTH_CLI_HPP_
#define TWISTWIDTH_CLI_HPP_

#include <charconv>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "twistwidth/error.hpp"
#include "twistwidth/io.hpp"
#include "twistwidth/monotone.hpp"
#include "twistwidth/oracle.hpp"
#include "twistwidth/ribbon.hpp"
#include "twistwidth/set_system.hpp"

namespace twistwidth::cli {

namespace detail {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BatteryFailed : public std::runtime_error {
 public:
  BatteryFailed() : std::runtime_error("the cross-check battery reported failures") {}
};

// "1,3,4" -> {1,3,4}; the empty string is the empty list.
inline std::vector<int> parse_label_list(const std::string& text, const std::string& flag) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string token = text.substr(pos, comma - pos);
    int value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || end != token.data() + token.size()) {
      throw UsageError(flag + ": '" + text + "' is not a comma-separated list of integers");
    }
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

inline Subset subset_flag(const std::string& text, int ground, const std::string& flag) {
  const std::vector<int> labels = parse_label_list(text, flag);
  for (int label : labels) {
    if (label < 1 || label > ground) {
      throw Error(Errc::kOutOfRangeElement,
                  flag + ": element " + std::to_string(label) + " not in 1.." + std::to_string(ground));
    }
  }
  return Subset::from_labels(labels);
}

inline std::string join(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(values[i]);
  }
  return out;
}

inline std::string sets_text(const std::vector<Subset>& sets) {
  std::string out;
  for (Subset s : sets) out += s.to_string() + "\n";
  return out;
}

inline Json sets_json(std::span<const Subset> sets) {
  Json out = Json::array();
  for (Subset s : sets) out.push_back(to_json(s));
  return out;
}

}  // namespace detail

// Parses `args` (without the program name) and runs one action.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Delta-matroid twist widths and ribbon-graph partial duals", "twistwidth"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  bool json_flag = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--json", json_flag, "Shorthand for --format json");

  std::string input;
  std::string subset_text;
  std::string sequence_text;
  std::string script_path;
  std::string output_path;
  std::string failures_dir;
  bool brute = false;
  std::uint64_t seed = 42;
  int trials = 100;

  struct Action {
    CLI::App* command;
    std::function<void()> body;
  };
  std::vector<Action> actions;

  auto group = [&](const std::string& name, const std::string& description) {
    CLI::App* g = app.add_subcommand(name, description);
    g->require_subcommand(1);
    g->fallthrough();
    return g;
  };
  auto action = [&](CLI::App* parent, const std::string& name, const std::string& description,
                    std::function<void()> body) {
    CLI::App* a = parent->add_subcommand(name, description);
    a->fallthrough();
    actions.push_back({a, std::move(body)});
    return a;
  };
  auto with_file = [&](CLI::App* a) {
    a->add_option("file", input, "Input JSON file")->required();
    return a;
  };
  auto with_subset = [&](CLI::App* a) {
    a->add_option("-A,--subset", subset_text, "Comma-separated 1-based elements")->required();
    return a;
  };

  auto json_mode = [&] { return json_flag || format == "json"; };
  auto emit = [&](const Json& j, const std::string& text) {
    if (json_mode()) {
      out << j.dump() << "\n";
    } else {
      out << text;
    }
  };

  // dm: set systems
  CLI::App* dm = group("dm", "Set systems and delta-matroids");
  with_file(action(dm, "check", "Symmetric exchange axiom", [&] {
    const SetSystem d = parse_set_system_file(input);
    const AxiomVerdict v = check_symmetric_exchange(d);
    if (v.holds) {
      emit(Json{{"holds", true}}, "holds\n");
    } else {
      const AxiomWitness& w = *v.witness;
      emit(Json{{"holds", false},
                {"witness", Json{{"X", to_json(w.x)}, {"Y", to_json(w.y)}, {"u", w.u + 1}}}},
           "fails: X=" + w.x.to_string() + " Y=" + w.y.to_string() +
               " u=" + std::to_string(w.u + 1) + "\n");
    }
  }));
  with_file(action(dm, "width", "Minimum/maximum feasible size and width", [&] {
    const WidthSummary w = width_summary(parse_set_system_file(input));
    emit(Json{{"r_min", w.r_min}, {"r_max", w.r_max}, {"width", w.width}},
         "r_min " + std::to_string(w.r_min) + "\nr_max " + std::to_string(w.r_max) + "\nwidth " +
             std::to_string(w.width) + "\n");
  }));
  CLI::App* maxwidth = with_file(action(dm, "maxwidth", "Maximum twist width", [&] {
    const SetSystem d = parse_set_system_file(input);
    const int value = brute ? max_twist_width_bruteforce(d) : max_twist_width(d);
    emit(Json{{"max_twist_width", value}, {"method", brute ? "brute-force" : "pairwise"}},
         std::to_string(value) + "\n");
  }));
  maxwidth->add_flag("--brute", brute, "Sweep all 2^n twists instead of feasible pairs");
  with_subset(with_file(action(dm, "twist", "Twist by a subset", [&] {
    const SetSystem d = parse_set_system_file(input);
    const SetSystem t = twist(d, detail::subset_flag(subset_text, d.ground_size(), "-A"));
    const std::vector<Subset> family(t.family().begin(), t.family().end());
    emit(to_json(t), "ground " + std::to_string(t.ground_size()) + "\n" + detail::sets_text(family));
  })));
  with_file(action(dm, "hat", "Feasible sets whose twist attains the maximum twist width", [&] {
    const SetSystem d = parse_set_system_file(input);
    const std::vector<Subset> hat = hat_family(d);
    emit(Json{{"max_twist_width", max_twist_width(d)}, {"hat", detail::sets_json(hat)}},
         detail::sets_text(hat));
  }));
  CLI::App* monotone = with_file(action(dm, "monotone", "Monotone width sequence", [&] {
    const SetSystem d = parse_set_system_file(input);
    const ChoiceStrategy strategy =
        script_path.empty() ? ChoiceStrategy::canonical() : parse_script_file(script_path);
    const WidthTrace trace = monotone_sequence(d, strategy);
    const Json j = trace_to_json(d, trace);
    emit(j, "sequence " + detail::join(j["sequence"].get<std::vector<int>>()) + "\nwidths " +
                detail::join(trace.widths) + "\nmax_twist_width " +
                std::to_string(j["max_twist_width"].get<int>()) + "\nfeasible_final " +
                (j["feasible_final"].get<bool>() ? "true" : "false") + "\n");
  }));
  monotone->add_option("--script", script_path, "JSON file of scripted choices");
  with_file(action(dm, "profile", "Widths after each prefix twist", [&] {
    const SetSystem d = parse_set_system_file(input);
    std::vector<Element> seq;
    for (int label : detail::parse_label_list(sequence_text, "-S")) seq.push_back(label - 1);
    const std::vector<int> widths = width_profile(d, seq);
    emit(Json{{"sequence", twistwidth::detail::labels_of(seq)}, {"widths", widths}},
         detail::join(widths) + "\n");
  }))->add_option("-S,--sequence", sequence_text, "Comma-separated 1-based elements")->required();

  // rg: ribbon graphs
  CLI::App* rg = group("rg", "Ribbon graphs");
  with_file(action(rg, "genus", "Euler genus", [&] {
    const RibbonGraph g = parse_ribbon_graph_file(input);
    const int faces = boundary_count(g, g.edges()).count;
    const int genus = euler_genus(g);
    emit(Json{{"genus", genus}, {"components", components(g)}, {"vertices", g.vertex_count()},
              {"edges", g.edge_count()}, {"faces", faces}},
         std::to_string(genus) + "\n");
  }));
  with_subset(with_file(action(rg, "boundaries", "Boundary components of (V, A)", [&] {
    const RibbonGraph g = parse_ribbon_graph_file(input);
    const BoundaryReport r = boundary_count(g, detail::subset_flag(subset_text, g.edge_count(), "-A"));
    Json walks = Json::array();
    for (const auto& walk : r.walks) {
      Json w = Json::array();
      for (const TraceState& s : walk) w.push_back(Json::array({s.half_edge, s.direction}));
      walks.push_back(std::move(w));
    }
    emit(Json{{"subset", to_json(r.subset)}, {"count", r.count}, {"walks", std::move(walks)},
              {"bare_vertices", r.bare_vertices}},
         std::to_string(r.count) + "\n");
  })));
  with_file(action(rg, "quasitrees", "Spanning quasi-trees", [&] {
    const std::vector<Subset> trees = quasi_trees(parse_ribbon_graph_file(input));
    emit(Json{{"quasi_trees", detail::sets_json(trees)}}, detail::sets_text(trees));
  }));
  with_file(action(rg, "dm", "Delta-matroid of spanning quasi-trees", [&] {
    const SetSystem d = delta_matroid_of(parse_ribbon_graph_file(input));
    out << serialize(d);
  }));
  CLI::App* pdual = with_subset(with_file(action(rg, "pdual", "Partial dual", [&] {
    const RibbonGraph g = parse_ribbon_graph_file(input);
    const RibbonGraph dual = partial_dual(g, detail::subset_flag(subset_text, g.edge_count(), "-A"));
    if (output_path.empty()) {
      out << serialize(dual);
      return;
    }
    std::ofstream file(output_path, std::ios::binary);
    if (!file) throw Error(Errc::kParseError, output_path + ": cannot write file");
    file << serialize(dual);
    emit(Json{{"output", output_path}, {"vertices", dual.vertex_count()},
              {"genus", euler_genus(dual)}},
         "wrote " + output_path + "\n");
  })));
  pdual->add_option("-o,--output", output_path, "Write the partial dual to this file");
  with_subset(with_file(action(rg, "pdgenus", "Euler genus of the partial dual by formula", [&] {
    const RibbonGraph g = parse_ribbon_graph_file(input);
    const int genus = pd_genus_formula(g, detail::subset_flag(subset_text, g.edge_count(), "-A"));
    emit(Json{{"genus", genus}}, std::to_string(genus) + "\n");
  })));
  with_file(action(rg, "maxpdgenus", "Maximum partial-dual Euler genus", [&] {
    const RibbonGraph g = parse_ribbon_graph_file(input);
    const MaxPdGenusMethods m = max_pd_genus_methods(g);
    if (!m.agree()) throw std::logic_error("maximum partial-dual genus methods disagree");
    emit(Json{{"max_pd_genus", m.via_quasi_trees},
              {"via_quasi_trees", m.via_quasi_trees},
              {"via_delta_matroid", m.via_delta_matroid},
              {"via_sweep", m.via_sweep}},
         std::to_string(m.via_quasi_trees) + "\n");
  }));
  with_file(action(rg, "deficiency", "Partial-duality deficiency", [&] {
    const int value = deficiency(parse_ribbon_graph_file(input));
    emit(Json{{"deficiency", value}}, std::to_string(value) + "\n");
  }));

  // verify
  CLI::App* verify = group("verify", "Seeded cross-check battery");
  CLI::App* all = action(verify, "all", "Run every property on seeded instances", [&] {
    if (trials < 1) throw detail::UsageError("--trials must be at least 1");
    const CertificationReport report = certify_theorems(Seeded{seed}, trials);
    if (!failures_dir.empty()) {
      std::filesystem::create_directories(failures_dir);
      for (const auto& p : report.properties) {
        if (!p.first_failure) continue;
        const Json record = Json::parse(*p.first_failure);
        const Json& instance = record["instance"];
        const std::string body = instance.contains("set_system")
                                     ? instance["set_system"].dump()
                                     : instance["ribbon_graph"].dump();
        std::ofstream(std::filesystem::path(failures_dir) / (p.name + ".json")) << body << "\n";
      }
    }
    std::string text;
    for (const auto& p : report.properties) {
      text += (p.failed == 0 ? "PASS " : "FAIL ") + p.name + " (" + std::to_string(p.checked) +
              " checks, " + std::to_string(p.failed) + " failed)\n";
    }
    emit(report.to_json(), text);
    if (!report.all_passed()) throw detail::BatteryFailed();
  });
  all->add_option("--seed", seed, "Base seed");
  all->add_option("--trials", trials, "Number of seeded trials");
  all->add_option("--failures-dir", failures_dir, "Write failing instances here for replay");

  std::vector<std::string> argv_storage{"twistwidth"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    for (const Action& a : actions) {
      if (a.command->parsed()) a.body();
    }
  } catch (const detail::UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const detail::BatteryFailed& e) {
    err << "PropertyFailure: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    if (e.code() == Errc::kParseError) {
      err << "ParseError: " << e.what() << "\n";
      return 2;
    }
    err << e.name() << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "InternalError: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace twistwidth::cli

#endif  // TWISTWIDTH_CLI_HPP_
