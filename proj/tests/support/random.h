// Copyright 2026 The deformcx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Random generators shared by the test suites. Every generator takes the
// engine explicitly so that each test is reproducible from its seed.
#ifndef DEFORMCX_TESTS_SUPPORT_RANDOM_H_
#define DEFORMCX_TESTS_SUPPORT_RANDOM_H_

#include <random>

#include "deformcx/exactlin.h"
#include "deformcx/laws.h"
#include "deformcx/rational.h"

namespace deformcx::testing {

inline Rat RandomRat(std::mt19937_64& rng, long height = 5, long max_den = 3) {
  std::uniform_int_distribution<long> num(-height, height);
  std::uniform_int_distribution<long> den(1, max_den);
  Rat r(BigInt(num(rng)), BigInt(den(rng)));
  r.canonicalize();
  return r;
}

inline RatVector RandomVector(std::mt19937_64& rng, std::size_t n, long height = 5) {
  RatVector v(n);
  for (auto& x : v) x = RandomRat(rng, height);
  return v;
}

// Sparse-ish random vector: each coordinate is nonzero with probability 1/3.
inline RatVector RandomSparseVector(std::mt19937_64& rng, std::size_t n, long height = 5) {
  RatVector v(n);
  std::uniform_int_distribution<int> coin(0, 2);
  for (auto& x : v) {
    if (coin(rng) == 0) x = RandomRat(rng, height);
  }
  return v;
}

inline Law RandomLaw(std::mt19937_64& rng, std::size_t m, Symmetry s, long height = 3) {
  const LawBasis basis(m, s);
  return Law::FromCoords(m, s, RandomVector(rng, basis.size(), height));
}

inline EndW RandomEnd(std::mt19937_64& rng, std::size_t m, long height = 3) {
  EndW x(m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) x(r, c) = RandomRat(rng, height, 1);
  }
  return x;
}

inline RatMatrix RandomMatrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                              long height = 5) {
  std::vector<RatVector> dense;
  for (std::size_t r = 0; r < rows; ++r) dense.push_back(RandomVector(rng, cols, height));
  return RatMatrix::FromDense(dense, cols);
}

}  // namespace deformcx::testing

#endif  // DEFORMCX_TESTS_SUPPORT_RANDOM_H_
