// polynet: validate lists, unfold chains, enumerate, and run the verifications.

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "polynet/errors.hpp"
#include "polynet/json_io.hpp"
#include "polynet/skeleton.hpp"

namespace {

using namespace polynet;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct Global {
  std::string format = "json";
  std::string output;
  unsigned jobs = 1;
  bool reproducible = false;
  bool force = false;
};

class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw ResourceError("cannot open output file " + path);
    }
  }
  std::ostream& out() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

std::string read_list_text(const std::string& inline_list, const std::string& list_file) {
  if (list_file.empty()) return inline_list;
  std::ifstream in(list_file);
  if (!in) throw ValidationError("cannot read list file " + list_file);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
  return text;
}

void print_stats_text(std::ostream& os, const TheoremReport& r, int depth) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  os << pad << r.theorem_id << ": " << to_string(r.status) << '\n';
  for (const auto& [key, value] : r.stats) {
    os << pad << "  " << key << " = ";
    std::visit(
        [&](const auto& v) {
          if constexpr (std::is_same_v<std::decay_t<decltype(v)>, bool>) {
            os << (v ? "true" : "false");
          } else {
            os << v;
          }
        },
        value);
    os << '\n';
  }
  for (const auto& w : r.witnesses) {
    os << pad << "  witness " << w.list.to_string() << " facets " << w.facet_pair.first << ','
       << w.facet_pair.second << " (" << to_string(w.kind) << ")\n";
  }
  for (const auto& n : r.notes) os << pad << "  note: " << n << '\n';
  for (const auto& p : r.parts) print_stats_text(os, p, depth + 1);
}

int run_validate(const Global& g, int n, const std::string& list_text) {
  const UnfoldList list = UnfoldList::parse(n, list_text);
  const bool valid = is_valid_list(list);
  const auto window = shortest_even_window(list);
  Sink sink(g.output);
  if (g.format == "text") {
    sink.out() << list.to_string() << (valid ? " is valid" : " is invalid");
    if (window) sink.out() << "; shortest all-even window [" << window->first << ',' << window->second << ']';
    sink.out() << '\n';
  } else if (g.format == "json") {
    Json out{{"n", n}, {"list", list.entries()}, {"valid", valid}};
    if (window) out["failingSublist"] = {window->first, window->second};
    sink.out() << out.dump() << '\n';
  } else {
    throw ValidationError("validate supports --format json or text");
  }
  return valid ? kExitOk : kExitViolation;
}

int run_unfold(const Global& g, int n, const std::string& list_text) {
  const UnfoldList list = UnfoldList::parse(n, list_text);
  if (!is_valid_list(list)) throw ValidationError("list " + list.to_string() + " is not valid");
  if (g.format == "svg" && n != 3) throw ValidationError("SVG output needs n = 3");
  const Unfolding u = embed_chain(list);
  Sink sink(g.output);
  if (g.format == "svg") {
    sink.out() << unfolding_to_svg(u);
  } else if (g.format == "text") {
    for (std::size_t i = 0; i < u.placements.size(); ++i) {
      sink.out() << "N_" << i << " = " << u.placements[i].coords().to_string() << '\n';
    }
  } else {
    sink.out() << unfolding_to_json(u, list).dump(2) << '\n';
  }
  return kExitOk;
}

struct EnumerateArgs {
  std::string kind;
  int n = 0;
  std::size_t length = 0;
  bool length_given = false;
  bool count_only = false;
  bool all_labelings = false;
  bool up_to_symmetry = false;
  bool up_to_reversal = false;
  std::string polytope = "orthoplex";
};

void emit_count(const Global& g, Sink& sink, const std::string& what, const std::string& count) {
  if (g.format == "json") {
    sink.out() << Json{{"kind", what}, {"count", count}}.dump() << '\n';
  } else {
    sink.out() << count << '\n';
  }
}

int run_enumerate(const Global& g, const EnumerateArgs& a) {
  Sink sink(g.output);
  if (a.kind == "valid-lists") {
    if (!a.length_given) throw ValidationError("valid-lists needs --length");
    if (a.n >= 5 && a.length > 12 && !g.force) {
      throw ResourceError("valid-lists with n >= 5 and length > 12 is long-running; pass --force");
    }
    const EnumerationOptions opts{a.all_labelings ? LabelMode::All : LabelMode::FirstOccurrence, {}};
    if (a.count_only) {
      emit_count(g, sink, a.kind, std::to_string(count_valid_lists(a.n, a.length, opts)));
      return kExitOk;
    }
    enumerate_valid_lists(a.n, a.length, opts, [&](const std::vector<int>& l) {
      if (g.format == "json") {
        sink.out() << Json{{"n", a.n}, {"list", l}}.dump() << '\n';
      } else {
        sink.out() << UnfoldList(a.n, l).to_string() << '\n';
      }
    });
    return kExitOk;
  }
  if (a.kind == "spanning-paths") {
    if (a.n > 5) throw ResourceError("spanning-paths is bounded to n <= 5");
    if (a.count_only || a.up_to_symmetry) {
      if (a.n == 5) std::cerr << "counting Q5 spanning paths; this takes hours\n";
      const auto census = count_spanning_paths_up_to_symmetry(a.n, g.force, g.jobs);
      std::uint64_t value = census.directed_from_start;
      if (a.up_to_symmetry) value = a.up_to_reversal ? census.up_to_symmetry_and_reversal : census.up_to_symmetry;
      if (!a.count_only) throw ValidationError("spanning-paths --up-to-symmetry needs --count-only");
      emit_count(g, sink, a.kind, std::to_string(value));
      return kExitOk;
    }
    if (a.n == 5 && !g.force) throw ResourceError("listing Q5 spanning paths needs --force");
    const std::size_t length = (std::size_t{1} << a.n) - 1;
    const EnumerationOptions opts{a.all_labelings ? LabelMode::All : LabelMode::FirstOccurrence, {}};
    enumerate_valid_lists(a.n, length, opts, [&](const std::vector<int>& l) {
      if (g.format == "json") {
        sink.out() << Json{{"n", a.n}, {"list", l}}.dump() << '\n';
      } else {
        sink.out() << UnfoldList(a.n, l).to_string() << '\n';
      }
    });
    return kExitOk;
  }
  if (a.kind == "spanning-trees") {
    SkeletonGraph graph = a.polytope == "orthoplex" ? hypercube_graph(a.n)
                          : a.polytope == "simplex" ? complete_graph(a.n + 1)
                          : a.polytope == "cube"    ? orthoplex_graph(a.n)
                                                    : throw ValidationError("unknown polytope " + a.polytope);
    const BigInt total = kirchhoff_tree_count(graph);
    auto emit_tree = [&](EdgeMask mask) {
      const auto edges = SpanningTree(graph, mask).edge_list();
      if (g.format == "json") {
        sink.out() << Json{{"polytope", a.polytope}, {"n", a.n}, {"edges", edges}}.dump() << '\n';
      } else {
        for (const auto& [u, v] : edges) sink.out() << u << '-' << v << ' ';
        sink.out() << '\n';
      }
    };
    if (a.up_to_symmetry) {
      CensusOptions opts;
      opts.allow_long = g.force;
      opts.jobs = g.jobs;
      std::vector<EdgeMask> reps;
      if (!a.count_only) opts.on_representative = [&](EdgeMask m) { reps.push_back(m); };
      if (g.force && total > 10000000) std::cerr << "running the full tree census; this takes a while\n";
      opts.jobs = a.count_only ? g.jobs : 1;
      const auto census = count_spanning_trees_up_to_symmetry(graph, opts);
      if (a.count_only) {
        emit_count(g, sink, a.kind, std::to_string(census.orbits));
      } else {
        std::sort(reps.begin(), reps.end());
        for (EdgeMask m : reps) emit_tree(m);
      }
      return kExitOk;
    }
    if (a.count_only) {
      emit_count(g, sink, a.kind, total.get_str());
      return kExitOk;
    }
    if (total > 1000000 && !g.force) throw ResourceError("more than 10^6 spanning trees; pass --force");
    for_each_spanning_tree(graph, emit_tree);
    return kExitOk;
  }
  throw ValidationError("unknown enumeration kind '" + a.kind + "'");
}

struct VerifyArgs {
  std::string id;
  std::string target = "all";
  std::optional<int> dim;
  int n = 4;
  std::string grid_step = "1/10000";
};

int run_verify(const Global& g, const VerifyArgs& a) {
  RunOptions opts;
  opts.jobs = g.jobs;
  opts.allow_long = g.force;
  opts.grid_step = Rational::parse(a.grid_step);
  if (g.force) std::cerr << "long-running checks enabled\n";
  TheoremReport report;
  TheoremStatus expected = TheoremStatus::Verified;
  if (a.id == "simplex-allnet") {
    report = verify_simplex_allnet(a.n, opts);
  } else if (a.id == "orthoplex4-allnet") {
    report = verify_orthoplex4_allnet(opts);
  } else if (a.id == "orthoplex4-chains") {
    report = verify_orthoplex4_chains_exhaustive(opts);
  } else if (a.id == "orthoplex-counterexamples") {
    report = verify_orthoplex_counterexamples(a.dim);
    expected = TheoremStatus::CounterexampleFound;
  } else if (a.id == "polynomials") {
    report = verify_polynomials(opts);
  } else if (a.id == "counts") {
    report = verify_counts(a.target, opts);
  } else {
    throw ValidationError("unknown theorem id '" + a.id + "'");
  }
  Sink sink(g.output);
  if (g.format == "text") {
    print_stats_text(sink.out(), report, 0);
  } else if (g.format == "json") {
    Json out = report_to_json(report, !g.reproducible);
    if (!g.reproducible) out["generatedAt"] = timestamp();
    sink.out() << out.dump(2) << '\n';
  } else {
    throw ValidationError("verify supports --format json or text");
  }
  return report.status == expected ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact ridge unfoldings of simplices and orthoplexes"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "text", "svg"}));
  app.add_option("--output,-o", g.output, "Write output to this file");
  app.add_option("--jobs,-j", g.jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
  app.add_flag("--reproducible", g.reproducible, "Omit timestamps and timings");
  app.add_flag("--force", g.force, "Allow long-running censuses");

  int n = 0;
  std::string list_text;
  std::string list_file;
  auto* validate = app.add_subcommand("validate", "Check that a list is valid");
  auto* unfold = app.add_subcommand("unfold", "Embed the chain of a list");
  for (auto* sub : {validate, unfold}) {
    sub->add_option("-n,--dim", n, "Dimension")->required()->check(CLI::Range(2, 64));
    sub->add_option("list", list_text, "Comma or space separated labels");
    sub->add_option("--list-file", list_file, "Read the list from a file");
    sub->fallthrough();
  }

  EnumerateArgs ea;
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate lists, spanning paths or spanning trees");
  enumerate->add_option("kind", ea.kind, "valid-lists | spanning-paths | spanning-trees")
      ->required()
      ->check(CLI::IsMember({"valid-lists", "spanning-paths", "spanning-trees"}));
  enumerate->add_option("-n,--dim", ea.n, "Dimension")->required()->check(CLI::Range(1, 64));
  auto* length_opt = enumerate->add_option("--length", ea.length, "List length");
  enumerate->add_flag("--count-only", ea.count_only, "Print only the total");
  enumerate->add_flag("--all-labelings", ea.all_labelings, "Count every labeling, not one per relabeling class");
  enumerate->add_flag("--up-to-symmetry", ea.up_to_symmetry, "Reduce by the symmetry group");
  enumerate->add_flag("--up-to-reversal", ea.up_to_reversal, "With --up-to-symmetry, also identify reversals");
  enumerate->add_option("--polytope", ea.polytope, "orthoplex | simplex | cube (spanning-trees)")
      ->check(CLI::IsMember({"orthoplex", "simplex", "cube"}));
  enumerate->fallthrough();

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run a verification");
  verify->add_option("id", va.id,
                     "simplex-allnet | orthoplex4-allnet | orthoplex4-chains | orthoplex-counterexamples | "
                     "polynomials | counts")
      ->required();
  verify->add_option("--target", va.target, "Count target for 'counts'");
  verify->add_option("--dim", va.dim, "Dimension for 'orthoplex-counterexamples'");
  verify->add_option("-n", va.n, "Dimension for 'simplex-allnet'");
  verify->add_option("--grid-step", va.grid_step, "Positivity grid step as p/q");
  verify->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (validate->parsed()) return run_validate(g, n, read_list_text(list_text, list_file));
    if (unfold->parsed()) return run_unfold(g, n, read_list_text(list_text, list_file));
    if (enumerate->parsed()) {
      ea.length_given = length_opt->count() > 0;
      return run_enumerate(g, ea);
    }
    if (verify->parsed()) return run_verify(g, va);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
