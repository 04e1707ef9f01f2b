#pragma once

#include <compare>
#include <vector>

#include "hedonic/game.hpp"

namespace hedonic {

// Partition of agents 0..n-1 into coalitions, kept in canonical form: each
// coalition sorted ascending, coalitions ordered by smallest member. Under
// that ordering the per-agent label vector is a restricted growth string,
// and lexicographic comparison of label vectors is the canonical order used
// for every tie break in the library.
class Partition {
 public:
  Partition(int n, std::vector<std::vector<AgentId>> coalitions);

  static Partition singletons(int n);
  static Partition grand(int n);
  // labels[i] = block of agent i; any labelling accepted, canonicalized here.
  static Partition from_labels(const std::vector<int>& labels);

  int agent_count() const { return n_; }
  int coalition_count() const { return static_cast<int>(coalitions_.size()); }
  const std::vector<AgentId>& coalition(int index) const { return coalitions_[index]; }
  const std::vector<std::vector<AgentId>>& coalitions() const { return coalitions_; }
  int coalition_index(AgentId agent) const { return index_of_[agent]; }
  int coalition_size(AgentId agent) const {
    return static_cast<int>(coalitions_[index_of_[agent]].size());
  }

  // Restricted growth string of the canonical form.
  const std::vector<int>& labels() const { return index_of_; }

  bool operator==(const Partition& other) const {
    return n_ == other.n_ && index_of_ == other.index_of_;
  }

  // Canonical (restricted growth string) lexicographic order.
  static bool lex_less(const Partition& a, const Partition& b);

 private:
  int n_;
  std::vector<std::vector<AgentId>> coalitions_;
  std::vector<int> index_of_;
};

}  // namespace hedonic
