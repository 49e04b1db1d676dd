#pragma once

#include <stdexcept>
#include <string>

namespace choose2 {

// Raised when an operation is called outside its documented domain (for
// example an operad whose arity-0 space is not a singleton).
class precondition_violation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Raised when an exhaustive sweep would exceed its enumeration budget.
class resource_limit_error : public std::runtime_error {
 public:
  resource_limit_error(const std::string& what, std::size_t budget)
      : std::runtime_error(what + " (budget " + std::to_string(budget) + ")"),
        budget_(budget) {}

  std::size_t budget() const { return budget_; }

 private:
  std::size_t budget_;
};

class degenerate_configuration : public std::runtime_error {
 public:
  degenerate_configuration(int i, int j)
      : std::runtime_error("points " + std::to_string(i) + " and " +
                           std::to_string(j) + " coincide"),
        i_(i), j_(j) {}

  int first() const { return i_; }
  int second() const { return j_; }

 private:
  int i_, j_;
};

class sampling_failure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Default number of composite checks an exhaustive verifier may perform.
inline constexpr std::size_t kDefaultBudget = 100'000'000;

// Counts work against a budget and throws once it is exhausted.
class Budget {
 public:
  explicit Budget(std::size_t limit = kDefaultBudget, std::string what = "verification")
      : limit_(limit), what_(std::move(what)) {}

  void spend(std::size_t amount = 1) {
    used_ += amount;
    if (used_ > limit_)
      throw resource_limit_error(what_ + " exceeded its enumeration budget", limit_);
  }

  std::size_t used() const { return used_; }
  std::size_t limit() const { return limit_; }

 private:
  std::size_t limit_;
  std::size_t used_ = 0;
  std::string what_;
};

}  // namespace choose2
