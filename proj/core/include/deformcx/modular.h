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

#ifndef DEFORMCX_MODULAR_H_
#define DEFORMCX_MODULAR_H_

// Multi-prime acceleration for rank and kernel computations. Ranks modulo a
// prime never exceed the rational rank, so a modular rank r together with an
// exactly verified kernel of dimension cols - r pins the rational rank.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "deformcx/exactlin.h"
#include "deformcx/rational.h"

namespace deformcx::modular {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed2026ULL;
inline constexpr int kCertifyingPrimes = 3;

bool IsPrime(std::uint64_t n);
// Uniformly random prime in (2^60, 2^61).
std::uint64_t RandomPrime(std::mt19937_64& rng);

// Rank of the row-integral rescaling of m reduced modulo p.
std::size_t RankModP(const RatMatrix& m, std::uint64_t p);

// n/d with |n|, d <= sqrt(modulus / 2) and n = a d (mod modulus), if any.
std::optional<Rat> RationalReconstruct(const BigInt& a, const BigInt& modulus);

struct RankCertificate {
  std::size_t rank = 0;
  std::vector<std::uint64_t> primes;
  std::vector<std::size_t> prime_ranks;
  // true: modular ranks agreed and a kernel of dimension cols - rank was
  // reconstructed and verified exactly. false: exact elimination was used.
  bool certified_by_kernel = false;
  Subspace kernel;
};

RankCertificate CertifiedRank(const RatMatrix& m, std::uint64_t seed = kDefaultSeed);

// True when b is certainly outside the column space of m, given the exact
// rank of m: some prime sees rank([m | b]) > exact_rank.
struct ImageCertificate {
  bool not_in_image = false;
  std::vector<std::uint64_t> primes;
  std::vector<std::size_t> augmented_ranks;  // rank of [m | b] mod each prime
};
ImageCertificate CertifyNotInImage(const RatMatrix& m, const RatVector& b,
                                   std::size_t exact_rank, std::uint64_t seed = kDefaultSeed,
                                   int primes = kCertifyingPrimes);
bool CertifiedNotInImage(const RatMatrix& m, const RatVector& b, std::size_t exact_rank,
                         std::uint64_t seed = kDefaultSeed, int primes = kCertifyingPrimes);

}  // namespace deformcx::modular

#endif  // DEFORMCX_MODULAR_H_
