#include "cli.hpp"

#include "atnlab/budget.hpp"
#include "atnlab/choose.hpp"
#include "atnlab/factor.hpp"
#include "atnlab/graph.hpp"
#include "atnlab/harness.hpp"
#include "atnlab/orient.hpp"
#include "atnlab/poly.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iterator>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace atnlab::cli {

namespace {

using json = nlohmann::ordered_json;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Graph load_graph(const std::string& path) {
  try {
    return parse_edge_list(slurp(path));
  } catch (const std::invalid_argument& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError(std::string(what) + ": '" + item + "' is not an integer");
    }
  }
  if (out.empty()) throw InputError(std::string(what) + ": expected a comma-separated list of integers");
  return out;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << text;
}

struct BudgetFlags {
  std::optional<std::uint64_t> terms, subsets, nodes, ms;

  void attach(CLI::App* cmd) {
    cmd->add_option("--budget-terms", terms, "Term-multiplication limit for the polynomial expansion");
    cmd->add_option("--budget-subsets", subsets, "Arc-subset limit for parity enumeration");
    cmd->add_option("--budget-nodes", nodes, "Search-node limit for orientation and list searches");
    cmd->add_option("--budget-ms", ms, "Wall-clock limit in milliseconds (default: ATNLAB_BUDGET_MS or 60000)");
  }

  Budget resolve() const {
    Budget b = Budget::from_env();
    if (terms) b.max_term_mults = *terms;
    if (subsets) b.max_subsets = *subsets;
    if (nodes) b.max_search_nodes = *nodes;
    if (ms) b.wall_clock = std::chrono::milliseconds(*ms);
    return b;
  }
};

const std::map<std::string, Method> kMethods{{"poly", Method::poly}, {"orient", Method::orient}, {"both", Method::both}};

// ---- subcommands ------------------------------------------------------------

int run_graph_build(const std::string& family, const std::string& params, const std::string& output,
                    std::ostream& out) {
  const auto f = parse_family(family);
  if (!f) throw InputError("unknown family '" + family + "'");
  FamilySpec spec{*f, params.empty() ? std::vector<int>{} : parse_int_list(params, "--params")};
  Graph g;
  try {
    g = build_family(spec);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  emit(to_edge_list(g), output, out);
  return kOk;
}

int run_atn(const std::string& path, Method method, const Budget& budget, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(path);
  std::optional<int> poly, orient;
  std::optional<int> lower;
  bool exceeded = false;
  auto note = [&](const BudgetExceeded& e) {
    exceeded = true;
    if (auto lb = e.proven_lower_bound()) lower = std::max(lower.value_or(0), *lb);
  };
  if (method != Method::orient) {
    try {
      poly = atn_via_polynomial(g, budget);
    } catch (const BudgetExceeded& e) {
      note(e);
    }
  }
  if (method != Method::poly) {
    try {
      orient = atn_via_orientations(g, budget).atn;
    } catch (const BudgetExceeded& e) {
      note(e);
    }
  }
  if (poly && orient && *poly != *orient) {
    err << "error: oracles disagree: poly=" << *poly << " orient=" << *orient << "\n" << to_edge_list(g);
    return kInconsistent;
  }
  const std::optional<int> value = poly ? poly : orient;
  if (value && lower && *lower > *value) {
    err << "error: oracles disagree: value " << *value << " below proven bound " << *lower << "\n"
        << to_edge_list(g);
    return kInconsistent;
  }
  json j;
  j["atn"] = value ? json(*value) : json("budget-exceeded");
  if (method == Method::both) j["methods_agree"] = (poly && orient) ? json(true) : json(nullptr);
  else j["method"] = method_name(method);
  if (exceeded) j["proven_lower_bound"] = lower ? json(*lower) : json(nullptr);
  out << j.dump() << "\n";
  return exceeded ? kBudget : kOk;
}

int run_coef(const std::string& path, const std::string& target, const Budget& budget, std::ostream& out) {
  const Graph g = load_graph(path);
  const std::vector<int> t = parse_int_list(target, "--target");
  if (static_cast<int>(t.size()) != g.order())
    throw InputError("--target has " + std::to_string(t.size()) + " entries, graph has " +
                     std::to_string(g.order()) + " vertices");
  for (int e : t)
    if (e < 0) throw InputError("--target entries must be non-negative");
  out << coefficient(g, ExponentVector(t), budget) << "\n";
  return kOk;
}

int run_orient_diff(const std::string& graph_path, const std::string& orient_path, const Budget& budget,
                    std::ostream& out) {
  const Graph g = load_graph(graph_path);
  Orientation o;
  try {
    o = parse_orientation(slurp(orient_path));
  } catch (const std::invalid_argument& e) {
    throw InputError(orient_path + ": " + e.what());
  }
  if (!(o.base() == g)) throw InputError(orient_path + ": orientation is over a different graph than " + graph_path);
  out << to_json(eulerian_parity_diff(o, budget)) << "\n";
  return kOk;
}

int run_orient_eulerian(const std::string& path, const std::string& output, std::ostream& out) {
  const Graph g = load_graph(path);
  try {
    emit(to_orientation_text(eulerian_orientation(g)), output, out);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  return kOk;
}

int run_factorize(const std::string& path, std::ostream& out) {
  const Graph g = load_graph(path);
  Factorization f;
  try {
    f = one_factorize(g);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  out << to_factorization_text(f);
  return kOk;
}

int run_choosable(const std::string& path, int k, const Budget& budget, std::ostream& out) {
  const Graph g = load_graph(path);
  if (k < 1) throw InputError("--k must be positive");
  const ChoosabilityResult r = is_k_choosable(g, k, budget);
  json j;
  j["k"] = k;
  j["verdict"] = verdict_name(r.verdict);
  j["assignments"] = r.assignments;
  j["witness"] = r.witness ? json::parse(witness_json(*r.witness, false)) : json(nullptr);
  out << j.dump() << "\n";
  return r.verdict == Verdict::unknown ? kBudget : kOk;
}

int run_verify(const std::string& suite, std::optional<int> max_size, const std::string& format, Method method,
               bool timing, const Budget& budget, std::ostream& out) {
  std::vector<ClaimId> ids;
  if (suite == "all") {
    ids = all_claims();
  } else if (auto id = parse_claim(suite)) {
    ids.push_back(*id);
  } else {
    throw InputError("unknown suite '" + suite + "'");
  }
  if (max_size && *max_size < 1) throw InputError("--max-size must be positive");

  SuiteOptions options;
  options.max_size = max_size;
  options.method = method;
  options.budget = budget;
  options.timing = timing;

  std::vector<VerificationReport> reports;
  for (ClaimId id : ids) {
    auto part = run_suite(id, options);
    reports.insert(reports.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  if (format == "json") out << reports_to_json(suite, reports);
  else if (format == "csv") out << reports_to_csv(reports);
  else out << reports_to_table(reports);
  return kOk;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Alon-Tarsi number computations", "atnlab"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  std::string graph_path, output, family, params, target, orient_path, suite, format = "json", method = "both";
  int k = 0;
  std::optional<int> max_size;
  bool timing = false;
  BudgetFlags budget;

  CLI::App* graph = app.add_subcommand("graph", "Graph construction");
  graph->require_subcommand(1);
  CLI::App* build = graph->add_subcommand("build", "Write a family member as an edge list");
  build->add_option("--family", family, "complete | complete_bipartite | complete_multipartite | cycle | path | "
                                        "circulant_bipartite")
      ->required();
  build->add_option("--params", params, "Comma-separated family parameters, e.g. 3,6")->required();
  build->add_option("-o,--output", output, "Output file (default: stdout)");

  CLI::App* atn = app.add_subcommand("atn", "Alon-Tarsi number of a graph");
  atn->add_option("--graph", graph_path, "Edge-list file")->required();
  atn->add_option("--method", method, "poly | orient | both")->check(CLI::IsMember(kMethods));
  budget.attach(atn);

  CLI::App* coef = app.add_subcommand("coef", "One coefficient of the graph polynomial");
  coef->add_option("--graph", graph_path, "Edge-list file")->required();
  coef->add_option("--target", target, "Exponent vector e0,e1,...")->required();
  budget.attach(coef);

  CLI::App* orient = app.add_subcommand("orient", "Orientation tools");
  orient->require_subcommand(1);
  CLI::App* diff = orient->add_subcommand("diff", "Even minus odd spanning Eulerian sub-digraphs");
  diff->add_option("--graph", graph_path, "Edge-list file")->required();
  diff->add_option("--orientation", orient_path, "Orientation file")->required();
  budget.attach(diff);
  CLI::App* eulerian = orient->add_subcommand("eulerian", "Euler-tour orientation of a graph with even degrees");
  eulerian->add_option("--graph", graph_path, "Edge-list file")->required();
  eulerian->add_option("-o,--output", output, "Output file (default: stdout)");

  CLI::App* factorize = app.add_subcommand("factorize", "1-factorization of K_n (n even) or a regular bipartite graph");
  factorize->add_option("--graph", graph_path, "Edge-list file")->required();

  CLI::App* choosable = app.add_subcommand("choosable", "Decide k-choosability by exhaustive list search");
  choosable->add_option("--graph", graph_path, "Edge-list file")->required();
  choosable->add_option("--k", k, "List size")->required();
  budget.attach(choosable);

  CLI::App* verify = app.add_subcommand("verify", "Run a claim suite against both oracles");
  verify->add_option("--suite", suite, "lemma1 | thm1 | cor2 | thm2 | thm3 | thm4 | thm5 | thm6 | cor_total | all")
      ->required();
  verify->add_option("--max-size", max_size, "Largest size parameter to include");
  verify->add_option("--format", format, "json | csv | table")->check(CLI::IsMember({"json", "csv", "table"}));
  verify->add_option("--method", method, "poly | orient | both")->check(CLI::IsMember(kMethods));
  verify->add_flag("--timing", timing, "Include elapsed_ms per instance");
  budget.attach(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const Method m = kMethods.at(method);
    if (*build) return run_graph_build(family, params, output, out);
    if (*atn) return run_atn(graph_path, m, budget.resolve(), out, err);
    if (*coef) return run_coef(graph_path, target, budget.resolve(), out);
    if (*diff) return run_orient_diff(graph_path, orient_path, budget.resolve(), out);
    if (*eulerian) return run_orient_eulerian(graph_path, output, out);
    if (*factorize) return run_factorize(graph_path, out);
    if (*choosable) return run_choosable(graph_path, k, budget.resolve(), out);
    if (*verify) return run_verify(suite, max_size, format, m, timing, budget.resolve(), out);
  } catch (const InconsistencyError& e) {
    err << "error: " << e.what() << "\n" << e.dump();
    return kInconsistent;
  } catch (const BudgetExceeded& e) {
    err << "error: budget exceeded: " << e.what() << "\n";
    if (auto lb = e.proven_lower_bound()) err << "proven lower bound: " << *lb << "\n";
    return kBudget;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  err << "error: no command given\n";
  return kUsage;
}

}  // namespace atnlab::cli
