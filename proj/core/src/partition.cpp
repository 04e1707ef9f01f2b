#include "hedonic/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hedonic {

Partition::Partition(int n, std::vector<std::vector<AgentId>> coalitions)
    : n_(n), coalitions_(std::move(coalitions)) {
  if (n < 1) throw std::invalid_argument("agent count must be positive");
  std::vector<bool> seen(n, false);
  int covered = 0;
  for (auto& c : coalitions_) {
    if (c.empty()) throw std::invalid_argument("empty coalition");
    std::sort(c.begin(), c.end());
    for (AgentId a : c) {
      if (a < 0 || a >= n) throw std::invalid_argument("agent id out of range");
      if (seen[a]) throw std::invalid_argument("agent appears twice");
      seen[a] = true;
      ++covered;
    }
  }
  if (covered != n) throw std::invalid_argument("partition does not cover all agents");
  std::sort(coalitions_.begin(), coalitions_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  index_of_.assign(n, 0);
  for (int k = 0; k < static_cast<int>(coalitions_.size()); ++k)
    for (AgentId a : coalitions_[k]) index_of_[a] = k;
}

Partition Partition::singletons(int n) {
  std::vector<std::vector<AgentId>> cs(n);
  for (int i = 0; i < n; ++i) cs[i] = {i};
  return Partition(n, std::move(cs));
}

Partition Partition::grand(int n) {
  std::vector<AgentId> all(n);
  std::iota(all.begin(), all.end(), 0);
  return Partition(n, {all});
}

Partition Partition::from_labels(const std::vector<int>& labels) {
  int n = static_cast<int>(labels.size());
  std::vector<std::vector<AgentId>> blocks;
  std::vector<int> remap;
  for (int i = 0; i < n; ++i) {
    int raw = labels[i];
    int block = -1;
    for (size_t k = 0; k < remap.size(); ++k)
      if (remap[k] == raw) {
        block = static_cast<int>(k);
        break;
      }
    if (block == -1) {
      block = static_cast<int>(remap.size());
      remap.push_back(raw);
      blocks.emplace_back();
    }
    blocks[block].push_back(i);
  }
  return Partition(n, std::move(blocks));
}

bool Partition::lex_less(const Partition& a, const Partition& b) {
  return std::lexicographical_compare(a.index_of_.begin(), a.index_of_.end(),
                                      b.index_of_.begin(), b.index_of_.end());
}

}  // namespace hedonic
