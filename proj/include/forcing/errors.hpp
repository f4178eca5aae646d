// Error types shared across the library.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace forcing {

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input (graph6, DIMACS, grids). `offset` is the byte
// position the parser choked on.
class parse_error : public error {
 public:
  parse_error(const std::string& what, std::size_t offset)
      : error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// A documented precondition or contract was violated by the caller.
class precondition_error : public error {
 public:
  using error::error;
};

// Instance exceeds a hard structural limit (64 vertices, enumeration caps).
class capacity_error : public error {
 public:
  using error::error;
};

// Unknown identifier in a registry lookup.
class registry_error : public error {
 public:
  using error::error;
};

// Search exceeded its node budget. Carries whatever bounds the search had
// established; never a silent approximation.
class budget_error : public error {
 public:
  budget_error(const std::string& what, std::optional<int> lower = std::nullopt,
               std::optional<int> upper = std::nullopt)
      : error(what), lower_(lower), upper_(upper) {}
  std::optional<int> lower_bound() const { return lower_; }
  std::optional<int> upper_bound() const { return upper_; }

 private:
  std::optional<int> lower_;
  std::optional<int> upper_;
};

// Node budget for backtracking searches. Default per-query limit is 1e8
// nodes; exceeding it throws budget_error.
struct Budget {
  static constexpr std::uint64_t kDefaultLimit = 100'000'000;

  std::uint64_t limit = kDefaultLimit;
  std::uint64_t used = 0;

  void charge(std::uint64_t n = 1) {
    used += n;
    if (used > limit) throw budget_error("search node budget exceeded");
  }
};

}  // namespace forcing
