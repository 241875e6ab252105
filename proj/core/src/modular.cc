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

#include "deformcx/modular.h"

#include <algorithm>
#include <map>

#include "deformcx/errors.h"
#include "elimination.h"

namespace deformcx::modular {
namespace {

using internal::PrimeField;
using internal::SparseEchelon;
using ModRow = SparseEchelon<PrimeField>::Row;

std::uint64_t MulMod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t PowMod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = MulMod(r, a, m);
    a = MulMod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t ModOf(const BigInt& x, std::uint64_t p) {
  // mpz_fdiv_ui returns the non-negative residue.
  return mpz_fdiv_ui(x.get_mpz_t(), p);
}

// Integer multiple of a rational row, reduced mod p.
ModRow ReduceRow(const SparseVec& row, std::uint64_t p) {
  BigInt l = 1;
  for (const auto& [c, v] : row) {
    if (v.get_den() != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  }
  ModRow out;
  out.reserve(row.size());
  for (const auto& [c, v] : row) {
    BigInt scaled = v.get_num() * (l / v.get_den());
    std::uint64_t r = ModOf(scaled, p);
    if (r != 0) out.emplace_back(c, r);
  }
  return out;
}

struct ModEchelon {
  std::uint64_t p;
  std::vector<ModRow> rref;
  std::vector<std::size_t> pivots;
};

ModEchelon EchelonModP(const RatMatrix& m, std::uint64_t p, bool reduce) {
  SparseEchelon<PrimeField> ech(PrimeField(p), m.cols());
  std::vector<ModRow> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(ReduceRow(m.Row(r), p));
  internal::InsertAll(ech, rows);
  ModEchelon out{p, {}, ech.SortedPivots()};
  if (reduce) out.rref = ech.Reduced();
  return out;
}

// Kernel basis mod p, one vector per free column, as (index, residue) lists
// with the free column's 1 included.
std::vector<ModRow> KernelModP(const ModEchelon& e, std::size_t cols) {
  std::vector<char> is_pivot(cols, 0);
  for (std::size_t p : e.pivots) is_pivot[p] = 1;
  std::vector<ModRow> vecs(cols);
  for (std::size_t r = 0; r < e.rref.size(); ++r) {
    for (std::size_t k = 1; k < e.rref[r].size(); ++k) {
      const auto& [c, x] = e.rref[r][k];
      vecs[c].emplace_back(e.pivots[r], x == 0 ? 0 : e.p - x);
    }
  }
  std::vector<ModRow> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    ModRow v = std::move(vecs[f]);
    v.emplace_back(f, 1);
    std::sort(v.begin(), v.end());
    out.push_back(std::move(v));
  }
  return out;
}

// CRT-combines kernels computed modulo several primes that share the same
// pivot pattern, then reconstructs rationals. Returns nullopt when some entry
// has no reconstruction within the current modulus.
std::optional<std::vector<SparseVec>> ReconstructKernel(const std::vector<ModEchelon>& echs,
                                                        std::size_t cols) {
  std::vector<std::vector<ModRow>> kernels;
  for (const auto& e : echs) kernels.push_back(KernelModP(e, cols));
  const std::size_t dim = kernels.front().size();
  std::vector<SparseVec> out;
  out.reserve(dim);
  for (std::size_t v = 0; v < dim; ++v) {
    // Union of supports; a missing entry is a zero residue.
    std::map<std::size_t, std::vector<std::uint64_t>> residues;
    for (std::size_t k = 0; k < kernels.size(); ++k) {
      for (const auto& [c, x] : kernels[k][v]) {
        auto& slot = residues[c];
        slot.resize(kernels.size(), 0);
        slot[k] = x;
      }
    }
    SparseVec vec;
    for (auto& [c, rs] : residues) {
      rs.resize(kernels.size(), 0);
      BigInt a = 0;
      BigInt modulus = 1;
      for (std::size_t k = 0; k < rs.size(); ++k) {
        BigInt pk = static_cast<unsigned long>(echs[k].p);
        // a' = a + modulus * ((r - a) * modulus^{-1} mod pk)
        BigInt diff = BigInt(static_cast<unsigned long>(rs[k])) - a;
        BigInt inv;
        mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), pk.get_mpz_t());
        BigInt t = (diff * inv) % pk;
        if (t < 0) t += pk;
        a += modulus * t;
        modulus *= pk;
      }
      auto rec = RationalReconstruct(a, modulus);
      if (!rec) return std::nullopt;
      if (sgn(*rec) != 0) vec.emplace_back(c, *rec);
    }
    out.push_back(std::move(vec));
  }
  return out;
}

bool VerifyKernel(const RatMatrix& m, const std::vector<SparseVec>& vecs) {
  for (const auto& v : vecs) {
    if (!m.Apply(v).empty()) return false;
  }
  return true;
}

}  // namespace

bool IsPrime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are deterministic for all 64-bit n.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = PowMod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = MulMod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t RandomPrime(std::mt19937_64& rng) {
  constexpr std::uint64_t lo = 1ULL << 60;
  std::uniform_int_distribution<std::uint64_t> dist(lo + 1, (lo << 1) - 1);
  while (true) {
    std::uint64_t n = dist(rng) | 1ULL;
    if (IsPrime(n)) return n;
  }
}

std::size_t RankModP(const RatMatrix& m, std::uint64_t p) {
  return EchelonModP(m, p, false).pivots.size();
}

std::optional<Rat> RationalReconstruct(const BigInt& a, const BigInt& modulus) {
  // Half-extended Euclid on (modulus, a) stopping once the remainder drops
  // below sqrt(modulus / 2).
  BigInt bound;
  BigInt half = modulus / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  BigInt r0 = modulus, r1 = a % modulus;
  if (r1 < 0) r1 += modulus;
  BigInt t0 = 0, t1 = 1;
  while (r1 > bound) {
    BigInt q = r0 / r1;
    BigInt r2 = r0 - q * r1;
    BigInt t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  BigInt g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return std::nullopt;
  Rat out(r1, t1);
  out.canonicalize();
  return out;
}

RankCertificate CertifiedRank(const RatMatrix& m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  RankCertificate cert;
  std::vector<ModEchelon> echs;
  for (int i = 0; i < kCertifyingPrimes; ++i) {
    std::uint64_t p = RandomPrime(rng);
    echs.push_back(EchelonModP(m, p, true));
    cert.primes.push_back(p);
    cert.prime_ranks.push_back(echs.back().pivots.size());
  }
  const bool agree = std::all_of(echs.begin(), echs.end(), [&](const ModEchelon& e) {
    return e.pivots == echs.front().pivots;
  });
  if (agree) {
    // Extra primes enlarge the CRT modulus when reconstruction needs it.
    constexpr int kMaxPrimes = 24;
    while (static_cast<int>(echs.size()) <= kMaxPrimes) {
      auto vecs = ReconstructKernel(echs, m.cols());
      if (vecs && VerifyKernel(m, *vecs)) {
        cert.rank = echs.front().pivots.size();
        cert.certified_by_kernel = true;
        cert.kernel = Subspace::Span(m.cols(), std::move(*vecs));
        if (cert.kernel.dim() + cert.rank != m.cols()) {
          throw VerificationFailure("CertifiedRank: reconstructed kernel is rank deficient");
        }
        return cert;
      }
      std::uint64_t p = RandomPrime(rng);
      ModEchelon e = EchelonModP(m, p, true);
      cert.primes.push_back(p);
      cert.prime_ranks.push_back(e.pivots.size());
      if (e.pivots != echs.front().pivots) break;
      echs.push_back(std::move(e));
    }
  }
  cert.certified_by_kernel = false;
  cert.kernel = Kernel(m, RankMode::kExact);
  cert.rank = m.cols() - cert.kernel.dim();
  return cert;
}

ImageCertificate CertifyNotInImage(const RatMatrix& m, const RatVector& b,
                                   std::size_t exact_rank, std::uint64_t seed, int primes) {
  if (b.size() != m.rows()) throw DimensionMismatch("CertifyNotInImage: length");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    SparseVec row = m.Row(r);
    if (sgn(b[r]) != 0) row.emplace_back(m.cols(), b[r]);
    aug.SetRow(r, std::move(row));
  }
  ImageCertificate cert;
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (int i = 0; i < primes; ++i) {
    std::uint64_t p = RandomPrime(rng);
    std::size_t rank = RankModP(aug, p);
    cert.primes.push_back(p);
    cert.augmented_ranks.push_back(rank);
    // rank mod p never exceeds the rational rank of [m | b].
    if (rank > exact_rank) cert.not_in_image = true;
  }
  return cert;
}

bool CertifiedNotInImage(const RatMatrix& m, const RatVector& b, std::size_t exact_rank,
                         std::uint64_t seed, int primes) {
  return CertifyNotInImage(m, b, exact_rank, seed, primes).not_in_image;
}

}  // namespace deformcx::modular
