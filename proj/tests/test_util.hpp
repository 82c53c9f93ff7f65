#ifndef CLD_TESTS_TEST_UTIL_HPP
#define CLD_TESTS_TEST_UTIL_HPP

#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "cld/proposition.hpp"

namespace cld::testutil {

// Deterministic random rational proposition: numerators drawn from
// 0..max_numerator and normalized by their sum.
inline Proposition random_proposition(std::mt19937_64& rng, int n,
                                      int max_numerator = 20) {
  std::vector<long> ks(static_cast<size_t>(n));
  long sum = 0;
  while (sum == 0) {
    for (auto& k : ks) k = static_cast<long>(rng() % (max_numerator + 1));
    sum = std::accumulate(ks.begin(), ks.end(), 0L);
  }
  std::vector<Rational> probs;
  probs.reserve(ks.size());
  for (long k : ks) probs.emplace_back(k, sum);
  return Proposition(std::move(probs));
}

// All length-4 propositions with entries i/denom (the order-denom principal
// lattice of the simplex). denom = 4 gives the 5-point-per-coordinate grid.
inline std::vector<Proposition> simplex_grid4(int denom) {
  std::vector<Proposition> out;
  for (int i = 0; i <= denom; ++i)
    for (int j = 0; i + j <= denom; ++j)
      for (int k = 0; i + j + k <= denom; ++k)
        out.push_back(Proposition({Rational(i, denom), Rational(j, denom),
                                   Rational(k, denom),
                                   Rational(denom - i - j - k, denom)}));
  return out;
}

// Malformed scripts; every one must raise a positioned script error.
inline const std::vector<std::string>& malformed_scripts() {
  static const std::vector<std::string> corpus = {
      "show A @ B;",                                // illegal character
      "show A and;",                                // missing operand
      "let = [1/2, 1/2];",                          // missing name
      "show [1/2, 1/3];",                           // not normalized
      "show [1, 2/;",                               // missing denominator
      "matrix G = 4x4 [1, 2, 3];",                  // column count mismatch
      "matrix G = 2x2 [3, 1];",                     // row index out of range
      "matrix M = 0x2 [1, 1];",                     // zero rows
      "show [1/0];",                                // zero denominator
      "show missing_name;",                         // undefined identifier
      "let A = [1, 0];\nlet A = [0, 1];",           // duplicate name
      "show [1/2, 1/2] and [1/4, 1/4, 1/4, 1/4];",  // mixed operand lengths
      "show proj1([1/2, 1/2]);",                    // projection needs 4 outcomes
      "show dist([1, 0], [1, 0, 0, 0]);",           // distance shape mismatch
      "show decompose([1/2, 0, 0, 1/2]);",          // indecomposable operand
      "show ([1, 0] or ;",                          // dangling parenthesis
      "let x = [1, 0];",                            // 'x' is reserved
  };
  return corpus;
}

} // namespace cld::testutil

#endif
