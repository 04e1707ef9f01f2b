#pragma once

#include <stdexcept>
#include <string>

namespace hedonic {

// Domain failures carry a stable machine-readable code next to the human
// message; the CLI surfaces the code in structured error output.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

namespace errc {
inline constexpr const char* not_individually_rational = "not-individually-rational";
inline constexpr const char* mismatched_agent_count = "mismatched-agent-count";
inline constexpr const char* unsupported_game_class = "unsupported-game-class";
inline constexpr const char* invalid_class = "invalid-class";
inline constexpr const char* not_symmetric = "not-symmetric";
inline constexpr const char* invalid_deviation = "invalid-deviation";
inline constexpr const char* non_positive_weight = "non-positive-weight";
inline constexpr const char* instance_too_large = "instance-too-large";
inline constexpr const char* negative_utility = "negative-utility";
inline constexpr const char* bad_vertex_count = "bad-vertex-count";
inline constexpr const char* bad_values = "bad-values";
inline constexpr const char* bad_size_bound = "bad-size-bound";
inline constexpr const char* no_feasible_partition = "no-feasible-partition";
inline constexpr const char* malformed_input = "malformed-input";
}  // namespace errc

}  // namespace hedonic
