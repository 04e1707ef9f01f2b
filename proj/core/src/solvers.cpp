#include "hedonic/solvers.hpp"

#include <algorithm>
#include <cassert>

#include "hedonic/errors.hpp"
#include "hedonic/matching.hpp"

namespace hedonic {

std::string solve_method_name(SolveMethod method) {
  switch (method) {
    case SolveMethod::AegPackingApprox:
      return "aeg-approx";
    case SolveMethod::AfgAlgorithm1:
      return "afg-alg1";
    case SolveMethod::ExactTwoCoalitions:
      return "two-coalitions";
    case SolveMethod::ExactSizeTwo:
      return "size-two";
    case SolveMethod::AegSizeBoundedApprox:
      return "aeg-size-approx";
    case SolveMethod::BruteForce:
      return "brute";
  }
  return "unknown";
}

namespace {

void require_class(const HedonicGame& game, GameClass cls, const char* where) {
  if (game.game_class() != cls)
    throw DomainError(errc::invalid_class, std::string(where) + ": wrong game class");
}

Partition packing_partition(int n, const Packing& packing) {
  std::vector<std::vector<AgentId>> coalitions;
  std::vector<bool> covered(n, false);
  for (const auto& part : packing.parts) {
    coalitions.emplace_back(part.begin(), part.end());
    for (int v : part) covered[v] = true;
  }
  for (int v = 0; v < n; ++v)
    if (!covered[v]) coalitions.push_back({v});
  return Partition(n, std::move(coalitions));
}

}  // namespace

SolveResult aeg_packing_approx(const HedonicGame& game) {
  require_class(game, GameClass::Aeg, "aeg_packing_approx");
  int n = game.agent_count();
  Packing packing = max_k2k3_packing(game.mutual_friendship_graph());
  Partition partition =
      packing.is_factor(n) ? packing_partition(n, packing) : Partition::singletons(n);
  return SolveResult{partition, nash_welfare(game, partition), SolveMethod::AegPackingApprox,
                     Rational(n - 1), false};
}

SolveResult aeg_size_bounded_approx(const HedonicGame& game, int size_bound) {
  require_class(game, GameClass::Aeg, "aeg_size_bounded_approx");
  if (size_bound < 3)
    throw DomainError(errc::bad_size_bound, "size bound must be at least 3");
  int n = game.agent_count();
  Packing packing = max_k2k3_packing(game.mutual_friendship_graph());
  Partition partition =
      packing.is_factor(n) ? packing_partition(n, packing) : Partition::singletons(n);
  return SolveResult{partition, nash_welfare(game, partition), SolveMethod::AegSizeBoundedApprox,
                     Rational(size_bound - 1), false};
}

SolveResult afg_algorithm1(const HedonicGame& game, Alg1Stats* stats) {
  require_class(game, GameClass::Afg, "afg_algorithm1");
  if (!game.symmetric())
    throw DomainError(errc::not_symmetric, "afg_algorithm1 needs a symmetric game");
  int n = game.agent_count();
  Alg1Stats local;
  Alg1Stats& st = stats ? *stats : local;
  st = Alg1Stats{};
  SimpleGraph friends = game.mutual_friendship_graph();
  Rational guarantee(2 * n);

  for (int v = 0; v < n; ++v)
    if (friends.degree(v) == 0) {
      st.early_singletons = true;
      Partition singles = Partition::singletons(n);
      return SolveResult{singles, nash_welfare(game, singles), SolveMethod::AfgAlgorithm1,
                         guarantee, false};
    }

  Packing packing = max_k2k3_packing(friends);
  std::vector<bool> unpacked(n, true);
  for (const auto& part : packing.parts)
    for (int v : part) unpacked[v] = false;

  std::vector<bool> movable = unpacked;
  for (const auto& part : packing.parts) {
    if (part.size() != 2) continue;
    // A packed pair frees exactly the member that has no unpacked friend
    // left to ever join it; if both or neither qualify, the pair stays put.
    std::vector<int> lonely;
    for (int member : part) {
      bool has_unpacked_friend = false;
      for (int w : friends.neighbors(member))
        if (unpacked[w]) {
          has_unpacked_friend = true;
          break;
        }
      if (!has_unpacked_friend) lonely.push_back(member);
    }
    if (lonely.size() == 1) movable[lonely.front()] = true;
  }
  for (int v = 0; v < n; ++v)
    if (movable[v]) st.movable.push_back(v);

  Partition current = packing_partition(n, packing);
  st.utilitarian_trace.push_back(utilitarian_welfare(game, current));

  const long long cap = static_cast<long long>(n) * n * n + 1;
  for (long long iteration = 0;; ++iteration) {
    if (iteration >= cap)
      throw std::logic_error("improvement phase exceeded its deviation bound");
    AgentId mover = -1;
    int target = -1;
    for (AgentId i : st.movable) {
      int from = current.coalition_index(i);
      const auto& source = current.coalition(from);
      if (source.size() == 2) continue;
      bool leave_ok = true;
      for (AgentId j : source) {
        if (j == i) continue;
        Rational left(0);
        for (AgentId k : source)
          if (k != i && k != j) left += game.valuation(j, k);
        if (left <= 0) {
          leave_ok = false;
          break;
        }
      }
      if (!leave_ok) continue;
      Rational now = utility(game, current, i);
      Rational best_gain(0);
      for (int c = 0; c < current.coalition_count(); ++c) {
        if (c == from) continue;
        Rational there(0);
        for (AgentId j : current.coalition(c)) there += game.valuation(i, j);
        if (there > now && there - now > best_gain) {
          best_gain = there - now;
          target = c;
        }
      }
      if (target != -1) {
        mover = i;
        break;
      }
    }
    if (mover == -1) break;

    std::vector<std::vector<AgentId>> next;
    for (int c = 0; c < current.coalition_count(); ++c) {
      std::vector<AgentId> members = current.coalition(c);
      if (c == current.coalition_index(mover))
        members.erase(std::find(members.begin(), members.end(), mover));
      else if (c == target)
        members.push_back(mover);
      if (!members.empty()) next.push_back(std::move(members));
    }
    current = Partition(n, std::move(next));
    ++st.deviations;
    st.utilitarian_trace.push_back(utilitarian_welfare(game, current));
  }

  return SolveResult{current, nash_welfare(game, current), SolveMethod::AfgAlgorithm1, guarantee,
                     false};
}

std::optional<SolveResult> exact_two_coalitions(const HedonicGame& game) {
  require_class(game, GameClass::Aeg, "exact_two_coalitions");
  int n = game.agent_count();
  SimpleGraph conflict = game.mutual_friendship_graph().complement();
  auto split = bipartition(conflict);
  if (!split) return std::nullopt;
  const auto& comps = *split;
  int k = static_cast<int>(comps.size());

  // Each component contributes one of its two sides to the coalition holding
  // agent 0; the reachable first-coalition sizes come from a subset-sum sweep.
  std::vector<std::vector<bool>> reachable(k + 1, std::vector<bool>(n + 1, false));
  reachable[k][0] = true;
  for (int c = k - 1; c >= 0; --c) {
    int a = static_cast<int>(comps[c].sides[0].size());
    int b = static_cast<int>(comps[c].sides[1].size());
    for (int t = 0; t <= n; ++t) {
      if (!reachable[c + 1][t]) continue;
      if (t + a <= n) reachable[c][t + a] = true;
      if (t + b <= n) reachable[c][t + b] = true;
    }
  }

  auto product_of = [&](int t) -> BigInt {
    using boost::multiprecision::pow;
    if (t == n) return pow(BigInt(n - 1), static_cast<unsigned>(n));
    return pow(BigInt(t - 1), static_cast<unsigned>(t)) *
           pow(BigInt(n - t - 1), static_cast<unsigned>(n - t));
  };

  int base = static_cast<int>(comps[0].sides[0].size());
  BigInt best(-1);
  std::vector<bool> optimal_size(n + 1, false);
  for (int t = 1; t <= n; ++t) {
    if (t - base < 0 || !reachable[1][t - base]) continue;
    BigInt value = product_of(t);
    if (value > best) {
      best = value;
      optimal_size.assign(n + 1, false);
      optimal_size[t] = true;
    } else if (value == best) {
      optimal_size[t] = true;
    }
  }
  assert(best >= 0);

  // Greedy orientation per component, preferring to pull each component's
  // smallest vertex into agent 0's coalition when an optimal total size stays
  // reachable; this lands on the canonically least optimal partition.
  std::vector<AgentId> first{comps[0].sides[0].begin(), comps[0].sides[0].end()};
  std::vector<AgentId> second{comps[0].sides[1].begin(), comps[0].sides[1].end()};
  int current = base;
  for (int c = 1; c < k; ++c) {
    int a = static_cast<int>(comps[c].sides[0].size());
    int b = static_cast<int>(comps[c].sides[1].size());
    bool take_first = false;
    for (int x = 0; x <= n && !take_first; ++x)
      if (reachable[c + 1][x] && current + a + x <= n && optimal_size[current + a + x])
        take_first = true;
    int choose = take_first ? 0 : 1;
    const auto& to_first = comps[c].sides[choose];
    const auto& to_second = comps[c].sides[1 - choose];
    first.insert(first.end(), to_first.begin(), to_first.end());
    second.insert(second.end(), to_second.begin(), to_second.end());
    current += take_first ? a : b;
  }
  assert(optimal_size[current]);

  std::vector<std::vector<AgentId>> coalitions{first};
  if (!second.empty()) coalitions.push_back(second);
  Partition partition(n, std::move(coalitions));
  WelfareValue welfare = nash_welfare(game, partition);
  assert(welfare.product == Rational(best));
  return SolveResult{partition, welfare, SolveMethod::ExactTwoCoalitions, Rational(1), best == 0};
}

SolveResult exact_size_two(const HedonicGame& game) {
  int n = game.agent_count();
  SimpleGraph positive(n);
  std::vector<Rational> weights(static_cast<size_t>(n) * n, Rational(0));
  SimpleGraph nonnegative(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Rational& out = game.valuation(i, j);
      const Rational& in = game.valuation(j, i);
      if (out > 0 && in > 0) {
        positive.add_edge(i, j);
        weights[static_cast<size_t>(i) * n + j] = out * in;
      }
      if (out >= 0 && in >= 0) nonnegative.add_edge(i, j);
    }

  std::optional<Matching> pairs;
  if (n % 2 == 0) pairs = max_product_perfect_matching(positive, weights);
  if (!pairs) {
    // No positive-welfare outcome exists; settle for a zero-welfare partition
    // that still pairs up as many mutually tolerable agents as possible.
    Matching fallback = max_cardinality_matching(nonnegative);
    pairs = std::move(fallback);
  }

  std::vector<std::vector<AgentId>> coalitions;
  std::vector<bool> matched(n, false);
  for (auto [u, v] : pairs->edges) {
    coalitions.push_back({u, v});
    matched[u] = matched[v] = true;
  }
  for (int v = 0; v < n; ++v)
    if (!matched[v]) coalitions.push_back({v});
  Partition partition(n, std::move(coalitions));
  return SolveResult{partition, nash_welfare(game, partition), SolveMethod::ExactSizeTwo,
                     Rational(1), false};
}

}  // namespace hedonic
