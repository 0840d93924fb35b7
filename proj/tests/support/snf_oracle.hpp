#pragma once

#include <algorithm>
#include <vector>

#include "flab/int_matrix.hpp"

namespace flab::oracle {

// Independent oracle: the k-th determinantal divisor is the gcd of all k x k
// minors, and d_k = D_k / D_{k-1}.
inline std::vector<Integer> invariant_factors_by_minors(const IntMatrix& a) {
  const std::size_t r = a.rows(), c = a.cols();
  std::vector<Integer> divisors = {1};
  for (std::size_t k = 1; k <= std::min(r, c); ++k) {
    Integer g = 0;
    std::vector<std::size_t> rows(k), cols(k);
    auto next = [](std::vector<std::size_t>& s, std::size_t n) {
      for (std::size_t i = s.size(); i-- > 0;) {
        if (s[i] < n - s.size() + i) {
          ++s[i];
          for (std::size_t j = i + 1; j < s.size(); ++j) s[j] = s[j - 1] + 1;
          return true;
        }
      }
      return false;
    };
    for (std::size_t i = 0; i < k; ++i) rows[i] = i;
    do {
      for (std::size_t i = 0; i < k; ++i) cols[i] = i;
      do {
        IntMatrix m(k, k);
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) m(i, j) = a(rows[i], cols[j]);
        }
        g = gcd(g, determinant(m));
      } while (next(cols, c));
    } while (next(rows, r));
    if (g == 0) break;
    divisors.push_back(g);
  }
  std::vector<Integer> out;
  for (std::size_t k = 1; k < divisors.size(); ++k) out.push_back(divisors[k] / divisors[k - 1]);
  return out;
}

}  // namespace flab::oracle
