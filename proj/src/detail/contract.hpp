#pragma once

#include <cstddef>

#include "stehbein/matalg.hpp"

namespace stehbein::detail {

// Views `in` as [outer][block][inner] and writes
//   out[o][c][i] = sum_a m[a * block + c] * in[o][a][i].
// `out` must not alias `in`.
inline void contract_middle(const Complex* in, Complex* out, std::size_t outer,
                            std::size_t block, std::size_t inner, const Complex* m) {
  const std::size_t slab = block * inner;
  for (std::size_t o = 0; o < outer; ++o) {
    const Complex* src = in + o * slab;
    Complex* dst = out + o * slab;
    for (std::size_t k = 0; k < slab; ++k) dst[k] = Complex{};
    for (std::size_t a = 0; a < block; ++a) {
      const Complex* row = src + a * inner;
      for (std::size_t c = 0; c < block; ++c) {
        const Complex w = m[a * block + c];
        if (w == Complex{}) continue;
        Complex* target = dst + c * inner;
        for (std::size_t i = 0; i < inner; ++i) target[i] += w * row[i];
      }
    }
  }
}

inline std::size_t ipow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace stehbein::detail
