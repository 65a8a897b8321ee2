#include "ngs/population.hpp"

#include <algorithm>

namespace ngs {

Population Population::from_members(std::vector<Chromosome> members,
                                    std::size_t capacity) {
  Population pop(capacity);
  std::stable_sort(
      members.begin(), members.end(),
      [](const Chromosome& a, const Chromosome& b) { return a.reward > b.reward; });
  pop.members_ = std::move(members);
  return pop;
}

}  // namespace ngs
