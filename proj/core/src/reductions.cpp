#include "hedonic/reductions.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "hedonic/errors.hpp"
#include "hedonic/random.hpp"

namespace hedonic {

namespace {

std::string rational_str(const Rational& r) { return format_rational(r); }

Partition parts_partition(int n, const std::vector<std::vector<AgentId>>& parts) {
  std::vector<std::vector<AgentId>> coalitions = parts;
  std::vector<bool> covered(n, false);
  for (const auto& part : parts)
    for (AgentId v : part) {
      if (v < 0 || v >= n) throw std::invalid_argument("witness member out of range");
      covered[v] = true;
    }
  for (int v = 0; v < n; ++v)
    if (!covered[v]) coalitions.push_back({v});
  return Partition(n, std::move(coalitions));
}

}  // namespace

ReductionOutput from_triangle_partition(
    const SimpleGraph& graph, const std::optional<std::vector<std::vector<AgentId>>>& triangles) {
  int n = graph.vertex_count();
  if (n % 3 != 0)
    throw DomainError(errc::bad_vertex_count, "vertex count must be divisible by 3");
  HedonicGame game = HedonicGame::aeg_from_graph(graph);

  ReductionOutput out{std::move(game), std::nullopt, std::nullopt, std::nullopt, std::nullopt,
                      "triangle-partition(n=" + std::to_string(n) + ")"};
  if (triangles) {
    int covered = 0;
    for (const auto& part : *triangles) {
      if (part.size() != 3 || !graph.is_clique({part.begin(), part.end()}))
        throw std::invalid_argument("witness part is not a triangle of the graph");
      covered += 3;
    }
    if (covered != n) throw std::invalid_argument("witness does not cover every vertex");
    out.witness = parts_partition(n, *triangles);
    out.target_welfare =
        WelfareValue{pow_rational(Rational(2), static_cast<unsigned>(n)), n};
    assert(nash_welfare(out.game, *out.witness).product == out.target_welfare->product);
  }
  return out;
}

ReductionOutput from_two_sided(int workers, int firms,
                               const std::vector<std::vector<Rational>>& worker_utils,
                               const std::vector<std::vector<Rational>>& firm_utils,
                               const std::optional<std::vector<int>>& assignment) {
  if (workers < 1 || firms < 1) throw std::invalid_argument("need at least one worker and firm");
  if (worker_utils.size() != static_cast<size_t>(workers) ||
      firm_utils.size() != static_cast<size_t>(firms))
    throw std::invalid_argument("utility matrix dimensions do not match");
  int n = workers + firms;
  Rational firm_load_max(0);
  for (int f = 0; f < firms; ++f) {
    if (firm_utils[f].size() != static_cast<size_t>(workers))
      throw std::invalid_argument("utility matrix dimensions do not match");
    Rational load(0);
    for (int w = 0; w < workers; ++w) {
      if (firm_utils[f][w] < 0)
        throw DomainError(errc::negative_utility, "firm utilities must be non-negative");
      load += firm_utils[f][w];
    }
    if (load > firm_load_max) firm_load_max = load;
  }
  for (int w = 0; w < workers; ++w) {
    if (worker_utils[w].size() != static_cast<size_t>(firms))
      throw std::invalid_argument("utility matrix dimensions do not match");
    for (int f = 0; f < firms; ++f)
      if (worker_utils[w][f] < 0)
        throw DomainError(errc::negative_utility, "worker utilities must be non-negative");
  }

  BigInt h = ceil_rational(firm_load_max);
  if (h < 2 * n) h = 2 * n;
  h += 1;
  Rational hostility(-Rational(h));

  std::vector<Rational> table(static_cast<size_t>(n) * n, Rational(0));
  auto at = [&](int i, int j) -> Rational& { return table[static_cast<size_t>(i) * n + j]; };
  for (int w = 0; w < workers; ++w)
    for (int f = 0; f < firms; ++f) {
      at(w, workers + f) = worker_utils[w][f];
      at(workers + f, w) = firm_utils[f][w];
    }
  for (int f = 0; f < firms; ++f)
    for (int g = 0; g < firms; ++g)
      if (f != g) at(workers + f, workers + g) = hostility;

  bool symmetric = true;
  for (int i = 0; i < n && symmetric; ++i)
    for (int j = i + 1; j < n; ++j)
      if (at(i, j) != at(j, i)) {
        symmetric = false;
        break;
      }

  ReductionOutput out{HedonicGame(n, std::move(table), GameClass::General, symmetric),
                      std::nullopt,
                      std::nullopt,
                      std::nullopt,
                      std::nullopt,
                      "two-sided-market(workers=" + std::to_string(workers) +
                          ", firms=" + std::to_string(firms) + ", hostility=" + h.str() + ")"};

  if (assignment) {
    if (assignment->size() != static_cast<size_t>(workers))
      throw std::invalid_argument("assignment must list one firm per worker");
    std::vector<std::vector<AgentId>> coalitions(firms);
    for (int f = 0; f < firms; ++f) coalitions[f] = {workers + f};
    Rational matched_product(1);
    for (int w = 0; w < workers; ++w) {
      int f = (*assignment)[w];
      if (f == -1) continue;
      if (f < 0 || f >= firms) throw std::invalid_argument("assignment target out of range");
      coalitions[f].push_back(w);
      matched_product *= worker_utils[w][f];
    }
    for (int f = 0; f < firms; ++f) {
      Rational firm_total(0);
      for (AgentId member : coalitions[f])
        if (member < workers) firm_total += firm_utils[f][member];
      matched_product *= firm_total;
    }
    for (int w = 0; w < workers; ++w)
      if ((*assignment)[w] == -1) matched_product *= 0;

    out.witness = parts_partition(n, coalitions);
    out.target_welfare = WelfareValue{matched_product, n};
    assert(nash_welfare(out.game, *out.witness).product == matched_product);
  }
  return out;
}

ReductionOutput from_k_coloring(const SimpleGraph& graph, int k,
                                const std::optional<std::vector<int>>& coloring) {
  if (k < 3) throw std::invalid_argument("color count must be at least 3");
  int base = graph.vertex_count();
  int n = base + k;
  SimpleGraph friends(n);
  for (int u = 0; u < base; ++u)
    for (int v = u + 1; v < base; ++v)
      if (!graph.has_edge(u, v)) friends.add_edge(u, v);
  for (int c = 0; c < k; ++c)
    for (int v = 0; v < base; ++v) friends.add_edge(base + c, v);

  ReductionOutput out{HedonicGame::aeg_from_graph(friends),
                      std::nullopt,
                      k,
                      std::nullopt,
                      std::nullopt,
                      "k-coloring(k=" + std::to_string(k) +
                          ", vertices=" + std::to_string(base) + ")"};

  if (coloring) {
    if (coloring->size() != static_cast<size_t>(base))
      throw std::invalid_argument("coloring must label every vertex");
    for (int v = 0; v < base; ++v)
      if ((*coloring)[v] < 0 || (*coloring)[v] >= k)
        throw std::invalid_argument("color out of range");
    for (auto [u, v] : graph.edges())
      if ((*coloring)[u] == (*coloring)[v])
        throw std::invalid_argument("coloring is not proper");
    std::vector<std::vector<AgentId>> classes(k);
    for (int v = 0; v < base; ++v) classes[(*coloring)[v]].push_back(v);
    // An empty color class would leave its universal friend alone; refill it
    // from the lowest class that can spare its highest vertex.
    for (int c = 0; c < k; ++c) {
      if (!classes[c].empty()) continue;
      for (int donor = 0; donor < k; ++donor)
        if (classes[donor].size() >= 2) {
          classes[c].push_back(classes[donor].back());
          classes[donor].pop_back();
          break;
        }
    }
    bool complete = true;
    for (int c = 0; c < k; ++c)
      if (classes[c].empty()) complete = false;
    if (complete) {
      std::vector<std::vector<AgentId>> coalitions(k);
      for (int c = 0; c < k; ++c) {
        coalitions[c] = classes[c];
        coalitions[c].push_back(base + c);
      }
      out.witness = parts_partition(n, coalitions);
      assert(nash_welfare(out.game, *out.witness).product > 0);
    } else {
      out.provenance += " witness-dropped(too-few-vertices)";
    }
  }
  return out;
}

ReductionOutput from_ks_factor(
    const SimpleGraph& graph, int s, const Rational& alpha, const Rational& beta,
    const std::optional<std::vector<std::vector<AgentId>>>& factor) {
  if (s < 3) throw std::invalid_argument("clique size must be at least 3");
  if (alpha <= 0 || beta >= alpha)
    throw DomainError(errc::bad_values, "need alpha positive and beta below alpha");
  int n = graph.vertex_count();

  GameClass cls = GameClass::Restricted;
  std::vector<Rational> value_set{alpha, beta};
  if (alpha == 1 && beta == Rational(-n)) {
    cls = GameClass::Aeg;
    value_set.clear();
  } else if (alpha == Rational(n) && beta == -1) {
    cls = GameClass::Afg;
    value_set.clear();
  }

  std::vector<Rational> table(static_cast<size_t>(n) * n, Rational(0));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      table[static_cast<size_t>(u) * n + v] = graph.has_edge(u, v) ? alpha : beta;
    }

  ReductionOutput out{HedonicGame(n, std::move(table), cls, true, std::move(value_set)),
                      s,
                      std::nullopt,
                      std::nullopt,
                      std::nullopt,
                      "ks-factor(s=" + std::to_string(s) + ", alpha=" + rational_str(alpha) +
                          ", beta=" + rational_str(beta) + ")"};

  if (factor) {
    int covered = 0;
    for (const auto& part : *factor) {
      if (static_cast<int>(part.size()) != s || !graph.is_clique({part.begin(), part.end()}))
        throw std::invalid_argument("witness part is not a clique of the required size");
      covered += s;
    }
    if (covered != n) throw std::invalid_argument("witness does not cover every vertex");
    out.witness = parts_partition(n, *factor);
    out.target_welfare =
        WelfareValue{pow_rational(Rational(s - 1) * alpha, static_cast<unsigned>(n)), n};
    assert(nash_welfare(out.game, *out.witness).product == out.target_welfare->product);
  }
  return out;
}

HedonicGame random_game(GameClass game_class, int n, double p, std::uint64_t seed, bool symmetric,
                        const std::optional<std::vector<Rational>>& value_set) {
  if (n < 1) throw std::invalid_argument("agent count must be positive");
  Rng rng(seed);
  if (game_class == GameClass::Aeg || game_class == GameClass::Afg) {
    Rational fv = game_class == GameClass::Aeg ? Rational(1) : Rational(n);
    Rational ev = game_class == GameClass::Aeg ? Rational(-n) : Rational(-1);
    std::vector<Rational> table(static_cast<size_t>(n) * n, Rational(0));
    auto at = [&](int i, int j) -> Rational& { return table[static_cast<size_t>(i) * n + j]; };
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        at(i, j) = next_chance(rng, p) ? fv : ev;
        at(j, i) = symmetric ? at(i, j) : (next_chance(rng, p) ? fv : ev);
      }
    return HedonicGame(n, std::move(table), game_class, symmetric);
  }
  if (game_class != GameClass::General)
    throw std::invalid_argument("random instances cover general, aeg and afg classes");

  std::vector<Rational> values =
      value_set.value_or(std::vector<Rational>{Rational(-(2 * n + 1)), Rational(0), Rational(1),
                                               Rational(2)});
  if (values.empty()) throw std::invalid_argument("value set must be non-empty");
  auto draw = [&]() -> Rational {
    if (!next_chance(rng, p)) return Rational(0);
    return values[next_below(rng, values.size())];
  };
  std::vector<Rational> table(static_cast<size_t>(n) * n, Rational(0));
  auto at = [&](int i, int j) -> Rational& { return table[static_cast<size_t>(i) * n + j]; };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      at(i, j) = draw();
      at(j, i) = symmetric ? at(i, j) : draw();
    }
  return HedonicGame(n, std::move(table), GameClass::General, symmetric);
}

}  // namespace hedonic
