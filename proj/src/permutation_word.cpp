#include "stehbein/permutation_word.hpp"

#include <numeric>
#include <utility>

#include "stehbein/errors.hpp"

namespace stehbein {

PermutationWord reverse_word(int n) {
  if (n < 2) throw InputError("reverse_word: need at least two strands");
  PermutationWord w{n, {1}};
  for (int m = 3; m <= n; ++m) {
    for (int i = m - 1; i >= 1; --i) w.letters.push_back(i);
  }
  return w;
}

PermutationWord alternative_reverse_word(int n) {
  if (n < 2) throw InputError("alternative_reverse_word: need at least two strands");
  if (n == 2) return {2, {1}};
  PermutationWord w{n, {}};
  for (int i = n - 1; i >= 1; --i) w.letters.push_back(i);
  for (int letter : alternative_reverse_word(n - 1).letters) w.letters.push_back(letter + 1);
  return w;
}

std::vector<int> evaluate_permutation(const PermutationWord& w) {
  std::vector<int> seq(static_cast<std::size_t>(w.strands));
  std::iota(seq.begin(), seq.end(), 1);
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    const int i = *it;
    if (i < 1 || i >= w.strands) throw InputError("evaluate_permutation: letter out of range");
    std::swap(seq[static_cast<std::size_t>(i - 1)], seq[static_cast<std::size_t>(i)]);
  }
  return seq;
}

PermutationWord block_word(int p, int k, BlockOrder order) {
  if (p < 1 || k < 1) throw InputError("block_word: block sizes must be positive");
  // Collected in application order, then reversed into word order.
  std::vector<int> applied;
  if (order == BlockOrder::MoveLeft) {
    for (int j = 1; j <= k; ++j)
      for (int i = p + j - 1; i >= j; --i) applied.push_back(i);
  } else {
    for (int j = p; j >= 1; --j)
      for (int i = j; i <= j + k - 1; ++i) applied.push_back(i);
  }
  return {p + k, {applied.rbegin(), applied.rend()}};
}

PermutationWord shifted(const PermutationWord& w, int offset, int strands) {
  PermutationWord out{strands, {}};
  for (int letter : w.letters) {
    const int moved = letter + offset;
    if (moved < 1 || moved >= strands) throw InputError("shifted: letter out of range");
    out.letters.push_back(moved);
  }
  return out;
}

PermutationWord concat(const PermutationWord& w1, const PermutationWord& w2) {
  if (w1.strands != w2.strands) throw InputError("concat: strand count mismatch");
  PermutationWord out = w1;
  out.letters.insert(out.letters.end(), w2.letters.begin(), w2.letters.end());
  return out;
}

}  // namespace stehbein
