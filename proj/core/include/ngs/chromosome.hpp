#pragma once

#include <cstdint>
#include <vector>

namespace ngs {

/// Token id. For routing environments a token is a directed edge
/// (tail, head) encoded as tail * n + head.
using Token = std::uint32_t;

/// A complete token sequence together with its scalar reward
/// (higher is better) and mutation diagnostics.
struct Chromosome {
  std::vector<Token> tokens;
  double reward = 0.0;
  /// Number of decoding steps where the mutation indicator was 1.
  std::uint32_t mutation_count = 0;
  /// Subset of mutation_count that was constraint-enforcing.
  std::uint32_t forced_mutation_count = 0;
};

}  // namespace ngs
