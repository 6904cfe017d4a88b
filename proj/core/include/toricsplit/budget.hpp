#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace toricsplit {

/// Thrown when a search or completion exhausts its work budget.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// A single work counter shared by Graver completion, fiber enumeration and
/// partition search. One unit is one pair reduction, one search node or one
/// enumerated fiber prefix.
class Budget {
 public:
  static constexpr std::uint64_t kDefaultLimit = 1'000'000;

  Budget() = default;
  explicit Budget(std::uint64_t limit) : limit_(limit) {}

  void charge(std::uint64_t units = 1, const char* where = "computation") {
    used_ += units;
    if (used_ > limit_) {
      throw BudgetExceeded(std::string("budget of ") + std::to_string(limit_) +
                           " units exhausted in " + where);
    }
  }

  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }
  std::uint64_t remaining() const { return used_ >= limit_ ? 0 : limit_ - used_; }

 private:
  std::uint64_t limit_ = kDefaultLimit;
  std::uint64_t used_ = 0;
};

}  // namespace toricsplit
