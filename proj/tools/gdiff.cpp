// gdiff: command-line front end for the differential / R(G) library.
//
// Exit codes: 0 all checks pass, 1 some check failed, 2 usage or parse
// error, 3 a search budget was exhausted.

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <thread>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gdiff/gdiff.hpp"
#include "gdiff/report.hpp"

namespace {

using namespace gdiff;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct IoOptions {
  std::string input = "-";
  std::string format = "graph6";
  std::string out;
  bool json = false;
  bool csv = false;
};

struct RunOptions {
  std::uint64_t budget = kDefaultBudget;
  int jobs = 0;
};

std::string read_all(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<Graph> read_graphs(const IoOptions& io) {
  const std::string text = read_all(io.input);
  if (io.format == "edgelist") return parse_edgelists(text);
  return parse_graph6_lines(text);
}

std::string format_graph(const Graph& g, const std::string& to) {
  return to == "edgelist" ? write_edgelist(g) : write_graph6(g) + "\n";
}

void emit(const IoOptions& io, const std::string& text) {
  if (io.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(io.out, std::ios::binary);
  if (!out) throw ParseError("cannot write " + io.out);
  out << text;
}

int resolve_jobs(int flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("GDIFF_JOBS")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

json header(std::chrono::steady_clock::time_point start) {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return {{"tool", "gdiff"}, {"version", "1.0.0"}, {"generated_at", stamp}, {"elapsed_ms", ms.count()}};
}

int exit_code_for(const std::vector<CheckReport>& reports) {
  bool skipped = false;
  for (const auto& r : reports) {
    if (r.status == Status::fail) return kExitFail;
    skipped = skipped || r.status == Status::skipped;
  }
  return skipped ? kExitBudget : kExitPass;
}

void add_io(CLI::App* cmd, IoOptions& io, bool with_input = true) {
  if (with_input) {
    cmd->add_option("--input", io.input, "input file, '-' for stdin");
    cmd->add_option("--format", io.format, "input format")->check(CLI::IsMember({"graph6", "edgelist"}));
  }
  cmd->add_option("--out", io.out, "write output to this path instead of stdout");
  auto* j = cmd->add_flag("--json", io.json, "JSON output");
  auto* c = cmd->add_flag("--csv", io.csv, "CSV output");
  j->excludes(c);
}

void add_run(CLI::App* cmd, RunOptions& run) {
  cmd->add_option("--budget", run.budget, "search node budget per solver call");
  cmd->add_option("--jobs", run.jobs, "worker threads (default $GDIFF_JOBS or 1)");
}

int cmd_compute(const IoOptions& io, const RunOptions& run) {
  const auto graphs = read_graphs(io);
  std::vector<std::pair<std::string, InvariantRecord>> recs(graphs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < graphs.size(); i = next++) recs[i] = {write_graph6(graphs[i]), full_record(graphs[i], run.budget)};
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < resolve_jobs(run.jobs); ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  bool budget_hit = false;
  for (const auto& [g6, rec] : recs)
    for (const auto& [name, f] : rec.fields()) budget_hit = budget_hit || f->skipped.starts_with("budget");

  if (io.csv) {
    emit(io, records_to_csv(recs));
  } else {
    json arr = json::array();
    for (const auto& [g6, rec] : recs) arr.push_back(record_to_json(g6, rec));
    emit(io, arr.dump(2) + "\n");
  }
  return budget_hit ? kExitBudget : kExitPass;
}

int cmd_roper(const IoOptions& io, const std::string& to) {
  std::string out;
  for (const Graph& g : read_graphs(io)) out += format_graph(build_r(g).total, to);
  emit(io, out);
  return kExitPass;
}

int emit_batch(const IoOptions& io, const BatchResult& res, std::chrono::steady_clock::time_point start,
               bool csv_summary) {
  if (io.csv) {
    emit(io, csv_summary ? summary_to_csv(res.summary) : reports_to_csv(res.reports));
  } else {
    json doc{{"header", header(start)}, {"summary", summary_to_json(res.summary)}, {"reports", json::array()}};
    for (const auto& r : res.reports) doc["reports"].push_back(report_to_json(r));
    emit(io, doc.dump(2) + "\n");
  }
  return exit_code_for(res.reports);
}

std::vector<Graph> random_connected(int count, int n_max, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> order(3, n_max);
  std::bernoulli_distribution coin(0.5);
  std::vector<Graph> out;
  while (static_cast<int>(out.size()) < count) {
    const int n = order(rng);
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (coin(rng)) b.add_edge(i, j);
    Graph g = b.build();
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const auto start = std::chrono::steady_clock::now();
  CLI::App app{"Exact differential of graphs and of the operator R(G), with proposition checks"};
  app.require_subcommand(1);

  IoOptions io;
  RunOptions run;
  std::string to = "graph6";
  std::string props = "all";

  auto* compute = app.add_subcommand("compute", "invariant record for each input graph");
  add_io(compute, io);
  add_run(compute, run);

  auto* roper = app.add_subcommand("roper", "emit R(G) for each input graph");
  add_io(roper, io);
  roper->add_option("--to", to, "output format")->check(CLI::IsMember({"graph6", "edgelist"}));

  FamilySpec spec;
  std::string kind;
  auto* family = app.add_subcommand("family", "emit a member of a named family");
  add_io(family, io, false);
  family->add_option("--kind", kind, "complete|complete_bipartite|kprime|wheel|path|cycle|star|star_plus_edge|empty")
      ->required();
  family->add_option("--n", spec.n, "order");
  family->add_option("--p", spec.p, "smaller part (complete_bipartite)");
  family->add_option("--q", spec.q, "larger part (complete_bipartite)");
  family->add_option("--r", spec.r, "parameter r (kprime)");
  family->add_option("--to", to, "output format")->check(CLI::IsMember({"graph6", "edgelist"}));

  int random_count = 0;
  int n_max = 0;
  int n_min = 3;
  std::uint64_t seed = 1;
  bool allow_n7 = false;
  auto* verify = app.add_subcommand("verify", "run propositions on input graphs");
  add_io(verify, io);
  add_run(verify, run);
  verify->add_option("--props", props, "comma-separated ids or 'all'");
  verify->add_option("--random", random_count, "check this many random connected graphs instead of reading input");
  verify->add_option("--nmax", n_max, "maximum order of random graphs")->default_val(6);
  verify->add_option("--seed", seed, "seed for --random");

  auto* census_cmd = app.add_subcommand("census", "run propositions over all connected graphs up to --nmax");
  add_io(census_cmd, io, false);
  add_run(census_cmd, run);
  census_cmd->add_option("--props", props, "comma-separated ids or 'all'");
  census_cmd->add_option("--nmax", n_max, "largest order (<= 7)")->required();
  census_cmd->add_option("--nmin", n_min, "smallest order")->default_val(3);
  census_cmd->add_flag("--allow-n7", allow_n7, "permit --nmax 7 (several minutes)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*compute) return cmd_compute(io, run);
    if (*roper) return cmd_roper(io, to);
    if (*family) {
      const auto k = family_from_name(kind);
      if (!k) throw std::invalid_argument("unknown family kind '" + kind + "'");
      spec.kind = *k;
      emit(io, format_graph(generate(spec), to));
      return kExitPass;
    }
    if (*verify) {
      const auto ids = parse_prop_list(props);
      if (random_count > 0 && (n_max < 3 || n_max > kCapacity)) throw std::invalid_argument("--nmax must be in 3..64");
      const auto graphs = random_count > 0 ? random_connected(random_count, n_max, seed) : read_graphs(io);
      return emit_batch(io, run_batch(graphs, ids, resolve_jobs(run.jobs), {run.budget}), start, false);
    }
    if (*census_cmd) {
      const auto ids = parse_prop_list(props);
      if (n_max > kCensusMaxOrder || n_max < 1 || n_min < 1 || n_min > n_max) {
        throw std::invalid_argument("census orders must satisfy 1 <= nmin <= nmax <= 7");
      }
      if (n_max == 7 && !allow_n7) throw std::invalid_argument("--nmax 7 needs --allow-n7");
      return emit_batch(io, run_census(n_min, n_max, ids, resolve_jobs(run.jobs), {run.budget}), start, true);
    }
  } catch (const ParseError& e) {
    std::cerr << "gdiff: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "gdiff: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "gdiff: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "gdiff: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
