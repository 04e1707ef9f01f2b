#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hedonic/dynamics.hpp"
#include "hedonic/errors.hpp"
#include "hedonic/json_io.hpp"
#include "hedonic/matching.hpp"
#include "hedonic/packing.hpp"
#include "hedonic/reductions.hpp"
#include "hedonic/solvers.hpp"
#include "hedonic/stability.hpp"

namespace {

using namespace hedonic;

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError(errc::malformed_input, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw DomainError(errc::malformed_input, std::string("invalid json in ") + path + ": " +
                                                 e.what());
  }
}

void emit(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

int resolve_oracle_ceiling(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("COALITION_ORACLE_CEILING")) {
    try {
      return std::stoi(env);
    } catch (...) {
      throw DomainError(errc::malformed_input, "COALITION_ORACLE_CEILING must be an integer");
    }
  }
  return kDefaultOracleCeiling;
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

struct SolveArgs {
  std::string instance_path;
  std::string method;
  int size_bound = 0;
  int count_bound = 0;
  int ceiling_flag = 0;
};

void run_solve(const SolveArgs& args) {
  HedonicGame game = parse_instance(load_json(args.instance_path));
  auto reject_bounds = [&](bool size_ok, bool count_ok) {
    if (args.size_bound > 0 && !size_ok)
      throw std::invalid_argument("--size-bound does not apply to method " + args.method);
    if (args.count_bound > 0 && !count_ok)
      throw std::invalid_argument("--count-bound does not apply to method " + args.method);
  };
  std::optional<SolveResult> result;
  if (args.method == "aeg-approx") {
    reject_bounds(false, false);
    result = aeg_packing_approx(game);
  } else if (args.method == "afg-alg1") {
    reject_bounds(false, false);
    result = afg_algorithm1(game);
  } else if (args.method == "two-coalitions") {
    reject_bounds(false, false);
    result = exact_two_coalitions(game);
    if (!result)
      throw DomainError(errc::no_feasible_partition,
                        "no individually rational split into at most two coalitions exists");
  } else if (args.method == "size-two") {
    reject_bounds(false, false);
    result = exact_size_two(game);
  } else if (args.method == "aeg-size-approx") {
    reject_bounds(true, false);
    if (args.size_bound == 0)
      throw std::invalid_argument("method aeg-size-approx needs --size-bound");
    result = aeg_size_bounded_approx(game, args.size_bound);
  } else if (args.method == "brute") {
    OracleOptions options;
    if (args.size_bound > 0) options.size_bound = args.size_bound;
    if (args.count_bound > 0) options.count_bound = args.count_bound;
    options.ceiling = resolve_oracle_ceiling(args.ceiling_flag);
    result = brute_force_optimal(game, options);
    if (!result)
      throw DomainError(errc::no_feasible_partition,
                        "no individually rational partition satisfies the bounds");
  } else {
    throw std::invalid_argument("unknown method " + args.method);
  }
  emit(serialize_solve_result(*result));
}

StabilityNotion parse_notion(const std::string& name) {
  if (name == "ns") return StabilityNotion::NashStable;
  if (name == "is") return StabilityNotion::IndividuallyStable;
  if (name == "cns") return StabilityNotion::ContractuallyNashStable;
  if (name == "cis") return StabilityNotion::ContractuallyIndividuallyStable;
  throw std::invalid_argument("unknown stability notion " + name);
}

DeviationType parse_deviation_type(const std::string& name) {
  if (name == "nash") return DeviationType::Nash;
  if (name == "individual") return DeviationType::Individual;
  if (name == "contractual-nash") return DeviationType::ContractualNash;
  if (name == "contractual-individual") return DeviationType::ContractualIndividual;
  throw std::invalid_argument("unknown deviation kind " + name);
}

struct ReduceArgs {
  std::string from;
  std::string graph_path;
  std::string witness_path;
  std::string market_path;
  std::string coloring_path;
  int k = 0;
  int s = 0;
  std::string alpha = "1";
  std::string beta;
};

void run_reduce(const ReduceArgs& args) {
  ReductionOutput output = [&]() -> ReductionOutput {
    if (args.from == "triangles") {
      if (args.graph_path.empty()) throw std::invalid_argument("reduction needs --graph");
      SimpleGraph graph = parse_graph(load_json(args.graph_path));
      std::optional<std::vector<std::vector<AgentId>>> witness;
      if (!args.witness_path.empty())
        witness =
            parse_partition(load_json(args.witness_path), graph.vertex_count()).coalitions();
      return from_triangle_partition(graph, witness);
    }
    if (args.from == "two-sided") {
      if (args.market_path.empty()) throw std::invalid_argument("reduction needs --market");
      Json doc = load_json(args.market_path);
      if (!doc.is_object() || !doc.contains("worker_utils") || !doc.contains("firm_utils"))
        throw DomainError(errc::malformed_input,
                          "market file needs worker_utils and firm_utils matrices");
      auto matrix = [&](const char* key) {
        std::vector<std::vector<Rational>> rows;
        if (!doc[key].is_array())
          throw DomainError(errc::malformed_input, std::string(key) + " must be an array");
        for (const Json& row : doc[key]) {
          if (!row.is_array())
            throw DomainError(errc::malformed_input, std::string(key) + " rows must be arrays");
          std::vector<Rational> values;
          for (const Json& cell : row) values.push_back(rational_from_json(cell));
          rows.push_back(std::move(values));
        }
        return rows;
      };
      auto worker_utils = matrix("worker_utils");
      auto firm_utils = matrix("firm_utils");
      std::optional<std::vector<int>> assignment;
      if (doc.contains("assignment")) {
        if (!doc["assignment"].is_array())
          throw DomainError(errc::malformed_input, "assignment must be an array");
        assignment.emplace();
        for (const Json& cell : doc["assignment"]) {
          if (!cell.is_number_integer())
            throw DomainError(errc::malformed_input, "assignment entries must be integers");
          assignment->push_back(cell.get<int>());
        }
      }
      return from_two_sided(static_cast<int>(worker_utils.size()),
                            static_cast<int>(firm_utils.size()), worker_utils, firm_utils,
                            assignment);
    }
    if (args.from == "k-coloring") {
      if (args.graph_path.empty()) throw std::invalid_argument("reduction needs --graph");
      if (args.k == 0) throw std::invalid_argument("reduction needs --k");
      SimpleGraph graph = parse_graph(load_json(args.graph_path));
      std::optional<std::vector<int>> coloring;
      if (!args.coloring_path.empty()) {
        Json doc = load_json(args.coloring_path);
        if (!doc.is_object() || !doc.contains("colors") || !doc["colors"].is_array())
          throw DomainError(errc::malformed_input, "coloring file needs a colors array");
        coloring.emplace();
        for (const Json& cell : doc["colors"]) {
          if (!cell.is_number_integer())
            throw DomainError(errc::malformed_input, "colors must be integers");
          coloring->push_back(cell.get<int>());
        }
      }
      return from_k_coloring(graph, args.k, coloring);
    }
    if (args.from == "ks-factor") {
      if (args.graph_path.empty()) throw std::invalid_argument("reduction needs --graph");
      if (args.s == 0) throw std::invalid_argument("reduction needs --s");
      SimpleGraph graph = parse_graph(load_json(args.graph_path));
      Rational alpha = parse_rational(args.alpha);
      Rational beta = args.beta.empty() ? Rational(-graph.vertex_count())
                                        : parse_rational(args.beta);
      std::optional<std::vector<std::vector<AgentId>>> witness;
      if (!args.witness_path.empty())
        witness =
            parse_partition(load_json(args.witness_path), graph.vertex_count()).coalitions();
      return from_ks_factor(graph, args.s, alpha, beta, witness);
    }
    throw std::invalid_argument("unknown reduction " + args.from);
  }();
  emit(serialize_reduction(output));
}

struct GenArgs {
  std::string cls = "general";
  int n = 8;
  double p = 0.5;
  std::uint64_t seed = 1;
  bool asymmetric = false;
  std::string value_set;
};

void run_gen(const GenArgs& args) {
  GameClass cls;
  if (args.cls == "aeg")
    cls = GameClass::Aeg;
  else if (args.cls == "afg")
    cls = GameClass::Afg;
  else if (args.cls == "general")
    cls = GameClass::General;
  else
    throw std::invalid_argument("unknown class " + args.cls);
  std::optional<std::vector<Rational>> values;
  if (!args.value_set.empty()) {
    values.emplace();
    for (const std::string& item : split_csv(args.value_set))
      values->push_back(parse_rational(item));
  }
  emit(serialize_instance(random_game(cls, args.n, args.p, args.seed, !args.asymmetric, values)));
}

struct BenchArgs {
  std::string family = "aeg";
  int count = 10;
  int n = 8;
  double p = 0.5;
  std::uint64_t seed = 1;
  std::string methods;
  std::string format = "json";
  int size_bound = 0;
  int ceiling_flag = 0;
};

struct BenchRow {
  std::uint64_t seed = 0;
  int n = 0;
  std::string cls;
  std::string method;
  std::optional<Rational> alg;
  std::optional<Rational> opt;
  bool holds = false;
  std::optional<double> ratio;
};

double product_log(const Rational& value) {
  return log_bigint(boost::multiprecision::numerator(value)) -
         log_bigint(boost::multiprecision::denominator(value));
}

void run_bench(const BenchArgs& args) {
  GameClass cls;
  if (args.family == "aeg")
    cls = GameClass::Aeg;
  else if (args.family == "afg")
    cls = GameClass::Afg;
  else if (args.family == "general")
    cls = GameClass::General;
  else
    throw std::invalid_argument("unknown family " + args.family);
  if (args.count < 0) throw std::invalid_argument("count must be non-negative");
  if (args.format != "json" && args.format != "csv")
    throw std::invalid_argument("format must be json or csv");

  int ceiling = resolve_oracle_ceiling(args.ceiling_flag);
  if (args.n > ceiling)
    throw DomainError(errc::instance_too_large,
                      "bench compares against the exhaustive optimum; n " +
                          std::to_string(args.n) + " is over the ceiling " +
                          std::to_string(ceiling));

  std::vector<std::string> methods = split_csv(args.methods);
  if (methods.empty()) {
    if (cls == GameClass::Aeg) methods = {"aeg-approx"};
    if (cls == GameClass::Afg) methods = {"afg-alg1"};
    if (cls == GameClass::General) methods = {"size-two"};
  }
  for (const std::string& m : methods) {
    bool aeg_only = m == "aeg-approx" || m == "two-coalitions" || m == "aeg-size-approx";
    bool afg_only = m == "afg-alg1";
    if (aeg_only && cls != GameClass::Aeg)
      throw DomainError(errc::invalid_class, "method " + m + " needs the aeg family");
    if (afg_only && cls != GameClass::Afg)
      throw DomainError(errc::invalid_class, "method " + m + " needs the afg family");
    if (!aeg_only && !afg_only && m != "size-two" && m != "brute")
      throw std::invalid_argument("unknown method " + m);
  }

  std::vector<BenchRow> rows;
  for (int index = 0; index < args.count; ++index) {
    std::uint64_t seed = args.seed + static_cast<std::uint64_t>(index);
    HedonicGame game = random_game(cls, args.n, args.p, seed, true);
    for (const std::string& m : methods) {
      BenchRow row;
      row.seed = seed;
      row.n = args.n;
      row.cls = args.family;
      row.method = m;
      std::optional<SolveResult> alg;
      OracleOptions oracle_options;
      oracle_options.ceiling = ceiling;
      Rational alpha(1);
      if (m == "aeg-approx") {
        alg = aeg_packing_approx(game);
        alpha = alg->guarantee;
      } else if (m == "afg-alg1") {
        alg = afg_algorithm1(game);
        alpha = alg->guarantee;
      } else if (m == "two-coalitions") {
        alg = exact_two_coalitions(game);
        oracle_options.count_bound = 2;
      } else if (m == "size-two") {
        alg = exact_size_two(game);
        oracle_options.size_bound = 2;
      } else if (m == "aeg-size-approx") {
        int s = args.size_bound > 0 ? args.size_bound : 3;
        alg = aeg_size_bounded_approx(game, s);
        alpha = alg->guarantee;
        oracle_options.size_bound = s;
      } else {
        alg = brute_force_optimal(game, oracle_options);
      }
      std::optional<SolveResult> opt = brute_force_optimal(game, oracle_options);
      if (alg) row.alg = alg->welfare.product;
      if (opt) row.opt = opt->welfare.product;
      if (alg && opt) {
        row.holds = check_approximation(alg->welfare, opt->welfare, alpha);
        if (row.alg > 0 && row.opt > 0)
          row.ratio = std::exp((product_log(*row.opt) - product_log(*row.alg)) / args.n);
        else if (*row.alg == 0 && *row.opt == 0)
          row.ratio = 1.0;
      } else if (!alg && !opt) {
        row.holds = true;
        row.ratio = 1.0;
      }
      rows.push_back(std::move(row));
    }
  }

  bool all_hold = true;
  double worst = 0.0;
  bool worst_defined = false;
  for (const BenchRow& row : rows) {
    all_hold = all_hold && row.holds;
    if (row.ratio) {
      if (!worst_defined || *row.ratio > worst) worst = *row.ratio;
      worst_defined = true;
    }
  }

  if (args.format == "csv") {
    std::cout << "seed,n,class,method,product_alg,product_opt,ratio_bound_holds,empirical_ratio\n";
    for (const BenchRow& row : rows) {
      std::cout << row.seed << "," << row.n << "," << row.cls << "," << row.method << ","
                << (row.alg ? format_rational(*row.alg) : std::string("-")) << ","
                << (row.opt ? format_rational(*row.opt) : std::string("-")) << ","
                << (row.holds ? "true" : "false") << ",";
      if (row.ratio)
        std::cout << *row.ratio;
      else
        std::cout << "inf";
      std::cout << "\n";
    }
    return;
  }

  Json out;
  Json json_rows = Json::array();
  for (const BenchRow& row : rows) {
    Json r;
    r["seed"] = row.seed;
    r["n"] = row.n;
    r["class"] = row.cls;
    r["method"] = row.method;
    r["product_alg"] = row.alg ? Json(format_rational(*row.alg)) : Json(nullptr);
    r["product_opt"] = row.opt ? Json(format_rational(*row.opt)) : Json(nullptr);
    r["ratio_bound_holds"] = row.holds;
    r["empirical_ratio"] = row.ratio ? Json(*row.ratio) : Json(nullptr);
    json_rows.push_back(std::move(r));
  }
  out["rows"] = std::move(json_rows);
  out["aggregate"] = Json{{"instances", args.count},
                          {"rows", static_cast<int>(rows.size())},
                          {"all_bounds_hold", all_hold},
                          {"worst_empirical_ratio", worst_defined ? Json(worst) : Json(nullptr)}};
  emit(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nash welfare toolkit for additively separable hedonic games"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "Solve an instance for Nash welfare");
  solve->add_option("--method", solve_args.method,
                    "aeg-approx | afg-alg1 | two-coalitions | size-two | aeg-size-approx | brute")
      ->required();
  solve->add_option("--size-bound", solve_args.size_bound, "Coalition size bound");
  solve->add_option("--count-bound", solve_args.count_bound, "Coalition count bound");
  solve->add_option("--oracle-ceiling", solve_args.ceiling_flag,
                    "Agent ceiling for exhaustive search");
  solve->add_option("instance", solve_args.instance_path, "Instance JSON file")->required();
  solve->callback([&] { run_solve(solve_args); });

  std::string stability_notion;
  std::string stability_instance, stability_partition;
  CLI::App* stability = app.add_subcommand("stability", "Check a stability notion");
  stability->add_option("--notion", stability_notion, "ns | is | cns | cis")->required();
  stability->add_option("instance", stability_instance, "Instance JSON file")->required();
  stability->add_option("partition", stability_partition, "Partition JSON file")->required();
  stability->callback([&] {
    HedonicGame game = parse_instance(load_json(stability_instance));
    Partition partition = parse_partition(load_json(stability_partition), game.agent_count());
    emit(serialize_stability(
        stability_witness(game, partition, parse_notion(stability_notion))));
  });

  std::string dynamics_kind = "individual";
  bool dynamics_non_abandoning = false;
  long long dynamics_max_steps = 0;
  std::string dynamics_instance, dynamics_partition;
  CLI::App* dynamics = app.add_subcommand("dynamics", "Run deviation dynamics to a fixpoint");
  dynamics->add_option("--kind", dynamics_kind,
                       "nash | individual | contractual-nash | contractual-individual");
  dynamics->add_flag("--non-abandoning", dynamics_non_abandoning,
                     "Forbid leaving a coalition of two");
  dynamics->add_option("--max-steps", dynamics_max_steps, "Step cap (0 = automatic)");
  dynamics->add_option("instance", dynamics_instance, "Instance JSON file")->required();
  dynamics->add_option("partition", dynamics_partition, "Start partition JSON file")->required();
  dynamics->callback([&] {
    HedonicGame game = parse_instance(load_json(dynamics_instance));
    Partition start = parse_partition(load_json(dynamics_partition), game.agent_count());
    DeviationKind kind{parse_deviation_type(dynamics_kind), dynamics_non_abandoning};
    emit(serialize_dynamics(run_dynamics(game, start, kind, dynamics_max_steps)));
  });

  std::string pack_graph;
  CLI::App* pack = app.add_subcommand("pack", "Maximum edge-and-triangle packing of a graph");
  pack->add_option("graph", pack_graph, "Graph JSON file")->required();
  pack->callback([&] {
    SimpleGraph graph = parse_graph(load_json(pack_graph));
    emit(serialize_packing(max_k2k3_packing(graph), graph.vertex_count()));
  });

  ReduceArgs reduce_args;
  CLI::App* reduce = app.add_subcommand("reduce", "Build a hardness-reduction instance");
  reduce->add_option("--from", reduce_args.from,
                     "triangles | two-sided | k-coloring | ks-factor")
      ->required();
  reduce->add_option("--graph", reduce_args.graph_path, "Graph JSON file");
  reduce->add_option("--witness", reduce_args.witness_path, "Witness partition JSON file");
  reduce->add_option("--market", reduce_args.market_path, "Two-sided market JSON file");
  reduce->add_option("--coloring", reduce_args.coloring_path, "Coloring JSON file");
  reduce->add_option("--k", reduce_args.k, "Number of colors");
  reduce->add_option("--s", reduce_args.s, "Clique size");
  reduce->add_option("--alpha", reduce_args.alpha, "Edge value");
  reduce->add_option("--beta", reduce_args.beta, "Non-edge value (default -n)");
  reduce->callback([&] { run_reduce(reduce_args); });

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "Sample a random instance");
  gen->add_option("--class", gen_args.cls, "general | aeg | afg");
  gen->add_option("--n", gen_args.n, "Agent count");
  gen->add_option("--p", gen_args.p, "Edge or entry probability");
  gen->add_option("--seed", gen_args.seed, "Seed");
  gen->add_flag("--asymmetric", gen_args.asymmetric, "Draw each direction independently");
  gen->add_option("--value-set", gen_args.value_set, "Comma separated values for general games");
  gen->callback([&] { run_gen(gen_args); });

  BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand("bench", "Compare methods against the exhaustive optimum");
  bench->add_option("--family", bench_args.family, "aeg | afg | general");
  bench->add_option("--count", bench_args.count, "Number of instances");
  bench->add_option("--n", bench_args.n, "Agent count");
  bench->add_option("--p", bench_args.p, "Edge or entry probability");
  bench->add_option("--seed", bench_args.seed, "Base seed (instance i uses seed+i)");
  bench->add_option("--methods", bench_args.methods, "Comma separated method list");
  bench->add_option("--format", bench_args.format, "json | csv");
  bench->add_option("--size-bound", bench_args.size_bound, "Size bound for aeg-size-approx");
  bench->add_option("--oracle-ceiling", bench_args.ceiling_flag,
                    "Agent ceiling for exhaustive search");
  bench->callback([&] { run_bench(bench_args); });

  try {
    app.parse(argc, argv);
    return 0;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const DomainError& e) {
    Json err{{"error", e.code()}, {"message", e.what()}};
    std::cout << err.dump(2) << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == errc::malformed_input ? 2 : 1;
  } catch (const std::invalid_argument& e) {
    Json err{{"error", "invalid-argument"}, {"message", e.what()}};
    std::cout << err.dump(2) << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    Json err{{"error", "internal-error"}, {"message", e.what()}};
    std::cout << err.dump(2) << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
