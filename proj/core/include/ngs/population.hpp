#pragma once

#include <cstddef>
#include <vector>

#include "ngs/chromosome.hpp"

namespace ngs {

/// Capacity-bounded collection of chromosomes kept in nonincreasing
/// reward order; rank 0 is the best member. Ties are broken by
/// insertion order (older members rank better), which keeps runs
/// reproducible.
class Population {
 public:
  Population() = default;
  explicit Population(std::size_t capacity) : capacity_(capacity) {}

  /// Builds a population from arbitrary-order members. Stable-sorts by
  /// reward so that equal-reward members keep their relative order.
  static Population from_members(std::vector<Chromosome> members,
                                 std::size_t capacity);

  const std::vector<Chromosome>& members() const { return members_; }
  const Chromosome& at_rank(std::size_t rank) const { return members_[rank]; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  std::size_t capacity() const { return capacity_; }

  const Chromosome& best() const { return members_.front(); }

 private:
  std::size_t capacity_ = 0;
  std::vector<Chromosome> members_;
};

}  // namespace ngs
