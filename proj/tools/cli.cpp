#include "cli.hpp"

#include "gehm/checks.hpp"
#include "gehm/error.hpp"
#include "gehm/invariants.hpp"
#include "gehm/io.hpp"
#include "gehm/ops.hpp"
#include "gehm/random.hpp"
#include "gehm/transition.hpp"
#include "gehm/whitney.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <ostream>

namespace gehm::cli {

namespace {

constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;
constexpr int kGuard = 3;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::size_t parse_index(const std::string& text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw InvalidArgument("expected a non-negative integer, got \"" + text + "\"");
  }
  return std::stoull(text);
}

std::vector<std::size_t> parse_indices(const std::string& text) {
  std::vector<std::size_t> out;
  if (text.empty()) return out;
  for (const auto& part : split(text, ',')) out.push_back(parse_index(part));
  return out;
}

GEdge parse_gedge(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw InvalidArgument("--gedge expects u,v");
  return {static_cast<Vertex>(parse_index(parts[0])), static_cast<Vertex>(parse_index(parts[1]))};
}

std::string stats_json(const Gehm& g) {
  const GehmStats s = stats(g);
  nlohmann::json j;
  j["v"] = s.v;
  j["e"] = s.e;
  j["f"] = s.f;
  j["k"] = s.k;
  j["d"] = s.d;
  j["euler_genus"] = s.euler_genus;
  j["orientable"] = s.orientable;
  j["hyperedge_degrees"] = s.hyperedge_degrees;
  return j.dump();
}

struct Session {
  std::istream& in;
  std::ostream& out;
  Limits limits;
  bool json = false;

  Gehm read(const std::string& path) const { return path == "-" ? read_gehm(in) : load_gehm(path); }

  void print(const Gehm& g) const { out << to_json_string(g) << "\n"; }

  void print(const MultiPoly& p) const { out << (json ? to_json(p).dump() : p.to_string()) << "\n"; }
};

int run_check(Session& s, const std::string& suite, const CheckOptions& opt) {
  std::vector<std::string> names;
  if (suite == "all") names = suite_names();
  else names.push_back(suite);
  bool failed = false;
  for (const auto& name : names) {
    const SuiteReport r = run_suite(name, opt);
    s.out << name << ": " << r.checks << " checks, " << r.failures.size() << " failures\n";
    for (const auto& note : r.notes) s.out << "  note: " << note << "\n";
    for (const auto& f : r.failures) {
      failed = true;
      s.out << "  FAIL " << f.property << ": " << f.detail << "\n";
      for (const auto& g : f.instances) s.out << "  " << to_json_string(g) << "\n";
    }
  }
  return failed ? kCheckFailed : 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polynomial invariants of graph-encoded hypermaps", "gehm"};
  app.require_subcommand(1);
  app.fallthrough();

  Session session{in, out, {}, false};
  std::size_t max_edges = 0;
  auto* max_edges_opt =
      app.add_option("--max-edges", max_edges, "Largest hyperedge count for subset sums (default 20)");
  app.add_option("--max-refinements", session.limits.max_refinements,
                 "Largest refinement count for the Whitney sum");
  app.add_option("--max-vertex-degree", session.limits.max_vertex_degree,
                 "Largest medial vertex degree for full state enumeration");
  app.add_flag("--json", session.json, "Print polynomials as JSON term lists");

  std::string file = "-";
  std::vector<std::string> files;
  std::string edges_text;
  std::size_t edge = 0;

  auto single = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, "Gehm JSON file, or - for standard input");
    return sub;
  };
  auto pair = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("files", files, "Two gehm JSON files")->required()->expected(2);
    return sub;
  };

  auto* stats_cmd = single("stats", "Print v, e, f, k, d, Euler genus and orientability");
  auto* canon_cmd = single("canon", "Print the canonical form");
  auto* iso_cmd = pair("iso", "Test two gehms for equivalence");
  auto* dual_cmd = single("dual", "Geometric dual");
  auto* trial_cmd = single("trial", "Trial (b -> g -> r -> b)");
  auto* pdual_cmd = single("pdual", "Partial dual on a hyperedge set");
  pdual_cmd->add_option("--edges", edges_text, "Hyperedge indices i,j,...");
  auto* delete_cmd = single("delete", "Delete a hyperedge");
  delete_cmd->add_option("--edge", edge, "Hyperedge index")->required();
  auto* contract_cmd = single("contract", "Contract a hyperedge");
  contract_cmd->add_option("--edge", edge, "Hyperedge index")->required();
  auto* restrict_cmd = single("restrict", "Keep only the listed hyperedges");
  restrict_cmd->add_option("--edges", edges_text, "Hyperedge indices i,j,...");
  auto* union_cmd = pair("union", "Disjoint union");

  auto* join_cmd = app.add_subcommand("join", "Join two gehms along a g-edge of each");
  std::vector<std::string> gedges;
  join_cmd->add_option("files", files, "Two gehm JSON files")->required()->expected(2);
  join_cmd->add_option("--gedge", gedges, "g-edge u,v; give once per gehm")->required()->expected(2);

  bool multivariate = false;
  bool delcon = false;
  auto* dichromatic_cmd = single("dichromatic", "Dichromatic polynomial Z(u, v)");
  dichromatic_cmd->add_flag("--multivariate", multivariate, "One variable u_i per hyperedge");
  dichromatic_cmd->add_flag("--delcon", delcon, "Use deletion-contraction");

  bool as_xy = false;
  std::string eval_point;
  auto* tutte_cmd = single("tutte", "Tutte polynomial in X = sqrt(x-1), Y = sqrt(y-1)");
  tutte_cmd->add_flag("--delcon", delcon, "Use deletion-contraction");
  tutte_cmd->add_flag("--as-xy", as_xy, "Expand in x and y");
  tutte_cmd->add_option("--eval", eval_point, "Evaluate exactly at x,y");

  auto* hypertrees_cmd = single("hypertrees", "Count spanning hypertrees");

  std::string omega_t_weights;
  bool dump = false;
  auto* transition_cmd = single("transition", "Transition polynomial of the medial map");
  transition_cmd->add_option("--omega-t", omega_t_weights, "Gem weights a,b,c; loop variable t");
  transition_cmd->add_flag("--multivariate", multivariate, "One variable u_i per hyperedge");
  transition_cmd->add_flag("--dump-medial", dump, "Print the medial map instead");

  auto* whitney_cmd = single("whitney", "Whitney polynomial R(u, v)");

  std::size_t vertices = 0;
  std::size_t isolates = 0;
  std::uint64_t seed = 0;
  auto* random_cmd = app.add_subcommand("random", "Random gehm from three uniform perfect matchings");
  random_cmd->add_option("--vertices", vertices, "Number of vertices (even)")->required();
  random_cmd->add_option("--isolates", isolates, "Number of isolates");
  random_cmd->add_option("--seed", seed, "Seed");

  std::string suite = "all";
  CheckOptions check_opt;
  auto* check_cmd = app.add_subcommand("check", "Run property suites on random gehms");
  std::vector<std::string> suite_choices = suite_names();
  suite_choices.push_back("all");
  check_cmd->add_option("--suite", suite, "Suite name")->check(CLI::IsMember(suite_choices));
  check_cmd->add_option("--trials", check_opt.trials, "Random instances per suite");
  check_cmd->add_option("--max-vertices", check_opt.max_vertices, "Largest vertex count");
  check_cmd->add_option("--seed", check_opt.seed, "Seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (max_edges_opt->count() > 0) {
      session.limits.max_edges = max_edges;
    } else if (const char* env = std::getenv("GEHM_MAX_EDGES"); env != nullptr && *env != '\0') {
      session.limits.max_edges = parse_index(env);
    }
    check_opt.limits = session.limits;
    Session& s = session;

    if (stats_cmd->parsed()) {
      out << stats_json(s.read(file)) << "\n";
    } else if (canon_cmd->parsed()) {
      out << canonical_form(s.read(file)) << "\n";
    } else if (iso_cmd->parsed()) {
      out << (equivalent(s.read(files[0]), s.read(files[1])) ? "true" : "false") << "\n";
    } else if (dual_cmd->parsed()) {
      s.print(dual(s.read(file)));
    } else if (trial_cmd->parsed()) {
      s.print(trial(s.read(file)));
    } else if (pdual_cmd->parsed()) {
      s.print(partial_dual(s.read(file), parse_indices(edges_text)));
    } else if (delete_cmd->parsed()) {
      s.print(delete_hyperedge(s.read(file), edge));
    } else if (contract_cmd->parsed()) {
      s.print(contract_hyperedge(s.read(file), edge));
    } else if (restrict_cmd->parsed()) {
      s.print(restrict_to(s.read(file), parse_indices(edges_text)));
    } else if (union_cmd->parsed()) {
      s.print(disjoint_union(s.read(files[0]), s.read(files[1])));
    } else if (join_cmd->parsed()) {
      s.print(join(s.read(files[0]), parse_gedge(gedges[0]), s.read(files[1]), parse_gedge(gedges[1])));
    } else if (dichromatic_cmd->parsed()) {
      const Gehm g = s.read(file);
      if (multivariate && delcon) throw InvalidArgument("--multivariate and --delcon cannot be combined");
      if (multivariate) s.print(dichromatic_multivariate(g, s.limits));
      else if (delcon) s.print(dichromatic_delcon(g));
      else s.print(dichromatic(g, s.limits));
    } else if (tutte_cmd->parsed()) {
      const Gehm g = s.read(file);
      const MultiPoly t = delcon ? tutte_delcon(g) : tutte(g, s.limits);
      if (!eval_point.empty()) {
        const auto xy = split(eval_point, ',');
        if (xy.size() != 2) throw InvalidArgument("--eval expects x,y");
        out << to_string(evaluate_xy(t, parse_rational(xy[0]), parse_rational(xy[1]))) << "\n";
      } else {
        s.print(as_xy ? expand_xy(t) : t);
      }
    } else if (hypertrees_cmd->parsed()) {
      out << count_spanning_hypertrees(s.read(file), s.limits).str() << "\n";
    } else if (transition_cmd->parsed()) {
      const Gehm g = s.read(file);
      const MedialMap m = medial_map(g);
      if (dump) {
        out << dump_medial(m);
      } else if (!omega_t_weights.empty()) {
        const auto w = split(omega_t_weights, ',');
        if (w.size() != 3) throw InvalidArgument("--omega-t expects a,b,c");
        const WeightSystem ws = omega_t(g, parse_ring_value(w[0]), parse_ring_value(w[1]), parse_ring_value(w[2]));
        s.print(transition_poly(m, ws, "t"));
      } else {
        s.print(transition_poly(m, multivariate ? omega_m_multivariate(g) : omega_m(g), "v"));
      }
    } else if (whitney_cmd->parsed()) {
      s.print(whitney(s.read(file), s.limits));
    } else if (random_cmd->parsed()) {
      s.print(random_gehm(vertices, isolates, seed));
    } else if (check_cmd->parsed()) {
      return run_check(s, suite, check_opt);
    }
    return 0;
  } catch (const GuardExceeded& e) {
    err << "gehm: " << e.what() << "\n";
    return kGuard;
  } catch (const std::exception& e) {
    err << "gehm: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace gehm::cli
