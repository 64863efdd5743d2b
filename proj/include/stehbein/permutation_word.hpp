#pragma once

#include <vector>

namespace stehbein {

/// A word in adjacent generators on `strands` strands. Letter i stands for the
/// generator acting on slots (i, i+1), 1-based. The rightmost letter acts first,
/// so {1, 2} means sigma_12 sigma_23: sigma_23 is applied, then sigma_12.
struct PermutationWord {
  int strands = 0;
  std::vector<int> letters;

  friend bool operator==(const PermutationWord&, const PermutationWord&) = default;
};

/// W_2 = [1], W_n = W_{n-1} ++ [n-1, ..., 1]; a reduced word for the
/// order-reversing permutation.
PermutationWord reverse_word(int n);

/// [n-1, ..., 1] ++ (W'_{n-1} shifted by one); another reduced word for the
/// same permutation, e.g. [2, 1, 2] for n = 3.
PermutationWord alternative_reverse_word(int n);

/// The arrangement of (1..strands) after the letters act as transpositions.
std::vector<int> evaluate_permutation(const PermutationWord& w);

/// Word moving the first block of p slots past the following block of k slots.
enum class BlockOrder {
  MoveLeft,   ///< carry each slot of the right block leftwards, first slot first
  MoveRight,  ///< carry each slot of the left block rightwards, last slot first
};
PermutationWord block_word(int p, int k, BlockOrder order = BlockOrder::MoveLeft);

/// The word shifted by `offset` slots and embedded into `strands` strands.
PermutationWord shifted(const PermutationWord& w, int offset, int strands);

/// w1 w2: apply w2, then w1.
PermutationWord concat(const PermutationWord& w1, const PermutationWord& w2);

}  // namespace stehbein
