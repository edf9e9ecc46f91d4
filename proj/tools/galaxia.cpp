// Command-line front end: generate, solve, verify, exact, reduce, bench.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "galaxia/acyclic.hpp"
#include "galaxia/constructions.hpp"
#include "galaxia/error.hpp"
#include "galaxia/io.hpp"
#include "galaxia/oracle.hpp"
#include "galaxia/solve.hpp"

using namespace galaxia;

namespace {

enum Exit { ok = 0, violation = 1, usage = 2, not_applicable = 3, defect = 4 };

int exit_code(Errc c) {
  switch (c) {
    case Errc::parse:
    case Errc::validate:
    case Errc::bad_params:
    case Errc::bad_shape:
    case Errc::bad_lists:
      return usage;
    case Errc::internal_defect:
      return defect;
    default:
      return not_applicable;
  }
}

// Writes to the named file, or stdout for "" / "-".
template <class F>
void emit(const std::string& path, F&& body) {
  if (path.empty() || path == "-") {
    body(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(Errc::parse, "cannot write " + path);
  body(out);
}

// DIMACS edge format: "p edge n m" then "e u v" with 1-based vertices.
Graph read_edge_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse, "cannot open " + path);
  Graph g;
  bool header = false;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag[0] == 'c' || tag[0] == '#') continue;
    if (tag == "p") {
      std::string kind;
      int n = 0, m = 0;
      if (!(ls >> kind >> n >> m) || n < 0) throw ParseError(line_no, "bad header");
      g = Graph(n);
      header = true;
    } else if (tag == "e") {
      int u = 0, v = 0;
      if (!header || !(ls >> u >> v) || u < 1 || v < 1 || u > g.vertex_count() || v > g.vertex_count())
        throw ParseError(line_no, "bad edge line");
      g.add_edge(u - 1, v - 1);
    } else {
      throw ParseError(line_no, "unknown line type '" + tag + "'");
    }
  }
  if (!header) throw Error(Errc::parse, "missing 'p edge' header");
  return g;
}

void write_edge_graph(std::ostream& out, const Graph& g, const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "c " << c << '\n';
  out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

std::string summary(const SolveResult& r) {
  return "summary algorithm=" + algorithm_name(r.algorithm) + " colours=" + std::to_string(r.colouring.max_colour()) +
         " bound=" + std::to_string(r.bound) + " (" + r.bound_formula + ")";
}

struct GenerateOptions {
  std::string family;
  int n = 10;
  int in_cap = 2;
  int out_cap = 2;
  int labels = 1;
  int indegree = 2;
  int fibres = 1;
  int y_cap = 0;
  std::string name;
  std::uint64_t seed = 1;
  std::string output;
};

int run_generate(const GenerateOptions& o) {
  const std::string seed = std::to_string(o.seed);
  auto write = [&](const LabelledDigraph& ld, const std::string& note) {
    emit(o.output, [&](std::ostream& out) { write_digraph(out, ld, {"generator=" + o.family + ", seed=" + seed + note}); });
  };
  auto plain = [](const Digraph& d) { return LabelledDigraph::from_digraph(d); };
  if (o.family == "random") {
    write(plain(random_digraph(o.n, o.in_cap, o.out_cap, o.seed)), "");
  } else if (o.family == "subcubic") {
    write(plain(random_subcubic(o.n, o.seed)), "");
  } else if (o.family == "oriented-subcubic") {
    write(plain(random_oriented_subcubic(o.n, o.seed)), "");
  } else if (o.family == "dag") {
    write(random_labelled_dag(o.n, o.labels, o.indegree, o.seed), "");
  } else if (o.family == "extremal") {
    auto e = extremal_gnmk(o.fibres, o.labels, o.indegree, o.y_cap > 0 ? std::optional<int>(o.y_cap) : std::nullopt);
    write(e.digraph, std::string(", reduced=") + (e.reduced ? "yes" : "no") + ", X=" + std::to_string(e.x_count) +
                         ", Y=" + std::to_string(e.y_count) + ", Z=" + std::to_string(e.z_count));
    if (e.reduced) std::cerr << "REDUCED instance: Y truncated to " << e.y_count << " vertices\n";
  } else if (o.family == "circuit") {
    std::vector<Arc> arcs;
    for (int i = 0; i < o.n; ++i) arcs.push_back({i, (i + 1) % o.n});
    write(plain(Digraph(o.n, arcs)), "");
  } else if (o.family == "gadget") {
    write(plain(np_gadget().digraph), ", interface arcs a=0 b=1 c=2");
  } else if (o.family == "cubic") {
    Graph g;
    if (!o.name.empty()) {
      auto named = named_cubic(o.name);
      if (!named) throw Error(Errc::bad_params, "unknown cubic graph '" + o.name + "'");
      g = *named;
    } else {
      g = random_cubic(o.n, o.seed);
    }
    emit(o.output, [&](std::ostream& out) {
      write_edge_graph(out, g, {"generator=cubic, " + (o.name.empty() ? "seed=" + seed : "name=" + o.name)});
    });
  } else {
    throw Error(Errc::bad_params, "unknown family '" + o.family + "'");
  }
  return ok;
}

int run_solve(const std::string& input, const std::string& algorithm, int fibres, const std::string& output) {
  const auto alg = parse_algorithm(algorithm);
  if (!alg) throw Error(Errc::bad_params, "unknown algorithm '" + algorithm + "'");
  const LabelledDigraph ld = read_digraph_file(input);
  const SolveResult r = solve(ld, fibres, *alg);
  emit(output, [&](std::ostream& out) {
    out << "# " << summary(r) << '\n';
    if (!r.wavelengths.empty()) {
      write_wavelengths(out, r.wavelengths);
    } else {
      write_colouring(out, r.colouring);
      if (!r.intervals.empty()) write_intervals(out, r.intervals);
    }
  });
  (output.empty() || output == "-" ? std::cerr : std::cout) << summary(r) << '\n';
  return ok;
}

int run_verify(const std::string& input, const std::string& solution_path, bool acircuitic, int fibres) {
  const LabelledDigraph ld = read_digraph_file(input);
  const Digraph& d = ld.digraph();
  const Solution sol = read_solution_file(solution_path, ld.arc_count());
  if (ld.label_count() > 1 || fibres > 1) {
    FibreColouring fc{fibres, sol.colouring.colour, sol.colouring.max_colour()};
    if (auto bad = verify_fibre_colouring(ld, fc)) {
      std::cout << "violation: vertex " << bad->vertex << " colour " << bad->colour << " has " << bad->in << " in and "
                << bad->out << " out labels on " << fibres << " fibres\n";
      return violation;
    }
    if (!sol.wavelengths.empty()) {
      if (auto bad = verify_wavelength_assignment(ld, fibres, sol.wavelengths)) {
        std::cout << "violation: condition " << bad->condition << " fails for arcs " << bad->first_arc << " and "
                  << bad->second_arc << '\n';
        return violation;
      }
    }
    std::cout << "ok: " << fc.colour_count << " colours on " << fibres << " fibres\n";
    return ok;
  }
  try {
    if (auto bad = verify_star_colouring(d, sol.colouring)) {
      std::cout << "violation: arcs " << bad->first_arc << " and " << bad->second_arc << " share colour "
                << sol.colouring.colour[bad->first_arc] << " (rule " << bad->rule << ")\n";
      return violation;
    }
  } catch (const Error& e) {
    std::cout << "violation: " << e.what() << '\n';
    return violation;
  }
  for (const auto& [v, interval] : sol.intervals) {
    if (v < 0 || v >= d.vertex_count()) throw Error(Errc::parse, "interval for unknown vertex " + std::to_string(v));
    for (int a : d.in_arcs(v))
      if (!interval.contains(sol.colouring.colour[a])) {
        std::cout << "violation: arc " << a << " has colour " << sol.colouring.colour[a] << " outside the interval of vertex "
                  << v << '\n';
        return violation;
      }
  }
  if (acircuitic) {
    const auto circuit = find_bicoloured_circuit(d, sol.colouring);
    if (!circuit.empty()) {
      std::cout << "violation: bicoloured circuit through arcs";
      for (int a : circuit) std::cout << ' ' << a;
      std::cout << '\n';
      return violation;
    }
  }
  std::cout << "ok: " << sol.colouring.max_colour() << " colours\n";
  return ok;
}

int run_exact(const std::string& input, int cap, int limit, int fibres, const std::string& output) {
  const LabelledDigraph ld = read_digraph_file(input);
  if (limit <= 0) limit = default_arc_limit();
  if (ld.label_count() > 1 || fibres > 1) {
    const auto r = exact_lambda_n(ld, fibres, cap, limit);
    std::cout << "lambda_" << fibres << " = " << r.colours << '\n';
    if (!output.empty()) emit(output, [&](std::ostream& out) { write_colouring(out, ArcColouring{r.witness.colour, r.colours}); });
    return ok;
  }
  const auto r = exact_dst(ld.digraph(), cap, limit);
  std::cout << "dst = " << r.colours << '\n';
  if (!output.empty()) emit(output, [&](std::ostream& out) { write_colouring(out, r.witness); });
  return ok;
}

int run_reduce(const std::string& input, const std::string& name, bool check, const std::string& output) {
  Graph g;
  std::string source;
  if (!name.empty()) {
    auto named = named_cubic(name);
    if (!named) throw Error(Errc::bad_params, "unknown cubic graph '" + name + "'");
    g = *named;
    source = "name=" + name;
  } else if (!input.empty()) {
    g = read_edge_graph(input);
    source = "file=" + input;
  } else {
    throw Error(Errc::bad_params, "give a graph file or --named");
  }
  const Digraph d = np_reduction(g);
  emit(output, [&](std::ostream& out) { write_digraph(out, LabelledDigraph::from_digraph(d), {"reduction of cubic graph, " + source}); });
  if (check) {
    const bool colourable = edge_colouring_3regular(g).has_value();
    const int dst = exact_dst(d, 4, std::max(default_arc_limit(), d.arc_count())).colours;
    (output.empty() || output == "-" ? std::cerr : std::cout)
        << "edge 3-colourable=" << (colourable ? "yes" : "no") << " dst=" << dst << '\n';
    if ((dst == 3) != colourable) return defect;
  }
  return ok;
}

int run_bench(const std::string& family, const std::vector<int>& sizes, std::uint64_t seed, int count) {
  std::cout << "instance\tn\tarcs\tcolours\tbound\ttime_ms\n";
  for (int n : sizes)
    for (int i = 0; i < count; ++i) {
      const std::uint64_t s = seed * 1000003 + static_cast<std::uint64_t>(n) * 101 + i;
      LabelledDigraph ld;
      int fibres = 1;
      Algorithm alg = Algorithm::automatic;
      if (family == "2k1") {
        ld = LabelledDigraph::from_digraph(random_digraph(n, std::min(4, n - 1), std::min(4, n - 1), s));
        alg = Algorithm::upper_2k1;
      } else if (family == "acyclic") {
        ld = random_labelled_dag(n, 1, std::min(4, n - 1), s);
        alg = Algorithm::acyclic;
      } else if (family == "subcubic") {
        ld = LabelledDigraph::from_digraph(random_subcubic(n, s));
        alg = Algorithm::subcubic;
      } else if (family == "diregular4") {
        ld = LabelledDigraph::from_digraph(random_digraph(n, 2, 2, s));
        alg = Algorithm::diregular4;
      } else if (family == "acircuitic") {
        ld = LabelledDigraph::from_digraph(random_oriented_subcubic(n, s));
        alg = Algorithm::acircuitic;
      } else if (family == "fibre") {
        ld = random_labelled_dag(n, 3, std::min(5, 3 * (n - 1)), s);
        fibres = 2;
      } else {
        throw Error(Errc::bad_params, "unknown bench family '" + family + "'");
      }
      const auto start = std::chrono::steady_clock::now();
      const SolveResult r = solve(ld, fibres, alg);
      const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      std::cout << family << '-' << n << '-' << i << '\t' << n << '\t' << ld.arc_count() << '\t' << r.colouring.max_colour()
                << '\t' << r.bound << '\t' << ms << '\n';
    }
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Directed star colourings and wavelength assignments"};
  app.require_subcommand(1);

  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "Write an instance");
  generate->add_option("family", gen.family,
                       "random | subcubic | oriented-subcubic | dag | extremal | circuit | gadget | cubic")
      ->required();
  generate->add_option("--n", gen.n, "Vertex count");
  generate->add_option("--in-cap", gen.in_cap, "Maximum indegree (random)");
  generate->add_option("--out-cap", gen.out_cap, "Maximum outdegree (random)");
  generate->add_option("--labels", gen.labels, "Label count m");
  generate->add_option("--indegree", gen.indegree, "Maximum indegree k (dag, extremal)");
  generate->add_option("--fibres", gen.fibres, "Fibre count n (extremal)");
  generate->add_option("--y-cap", gen.y_cap, "Truncate Y (extremal)");
  generate->add_option("--name", gen.name, "Named cubic graph");
  generate->add_option("--seed", gen.seed, "Random seed");
  generate->add_option("-o,--output", gen.output, "Output file");

  std::string input, solution, output, algorithm = "auto", name, family = "subcubic";
  int fibres = 1, cap = 12, limit = 0, count = 1;
  bool acircuitic = false, check = false;
  std::uint64_t seed = 1;
  std::vector<int> sizes{10, 50, 100};

  auto* solve_cmd = app.add_subcommand("solve", "Colour an instance with the best applicable algorithm");
  solve_cmd->add_option("input", input, "Instance file")->required();
  solve_cmd->add_option("--algorithm", algorithm, "auto | 2k1 | acyclic | subcubic | diregular4 | acircuitic | smallm | fibre-acyclic");
  solve_cmd->add_option("--fibres", fibres, "Fibres per link");
  solve_cmd->add_option("-o,--output", output, "Solution file");

  auto* verify = app.add_subcommand("verify", "Check a solution file");
  verify->add_option("input", input, "Instance file")->required();
  verify->add_option("solution", solution, "Solution file")->required();
  verify->add_flag("--acircuitic", acircuitic, "Also reject bicoloured circuits");
  verify->add_option("--fibres", fibres, "Fibres per link");

  auto* exact = app.add_subcommand("exact", "Exact optimum by search");
  exact->add_option("input", input, "Instance file")->required();
  exact->add_option("--cap", cap, "Largest colour count to try");
  exact->add_option("--arc-limit", limit, "Refuse larger instances (default GALAXIA_ARC_LIMIT or 40)");
  exact->add_option("--fibres", fibres, "Fibres per link");
  exact->add_option("-o,--output", output, "Write an optimal colouring");

  auto* reduce = app.add_subcommand("reduce", "Cubic graph to digraph with dst 3 iff 3-edge-colourable");
  reduce->add_option("graph", input, "DIMACS edge file");
  reduce->add_option("--named", name, "k4 | k33 | prism | cube | petersen | mobius-kantor");
  reduce->add_flag("--check", check, "Compare edge colourability with the exact dst");
  reduce->add_option("-o,--output", output, "Output file");

  auto* bench = app.add_subcommand("bench", "Timing table (TSV)");
  bench->add_option("family", family, "2k1 | acyclic | subcubic | diregular4 | acircuitic | fibre");
  bench->add_option("--sizes", sizes, "Vertex counts")->delimiter(',');
  bench->add_option("--seed", seed, "Random seed");
  bench->add_option("--count", count, "Instances per size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return usage;
  }

  try {
    if (*generate) return run_generate(gen);
    if (*solve_cmd) return run_solve(input, algorithm, fibres, output);
    if (*verify) return run_verify(input, solution, acircuitic, fibres);
    if (*exact) return run_exact(input, cap, limit, fibres, output);
    if (*reduce) return run_reduce(input, name, check, output);
    if (*bench) return run_bench(family, sizes, seed, count);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return defect;
  }
  return usage;
}
