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

#ifndef DEFORMCX_RATIONAL_H_
#define DEFORMCX_RATIONAL_H_

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace deformcx {

// Exact rationals. mpq_class keeps values canonical (reduced, positive
// denominator) after every arithmetic operation.
using Rat = mpq_class;
using BigInt = mpz_class;

using RatVector = std::vector<Rat>;

// Sparse vector: (index, value) pairs sorted by index, no stored zeros.
using SparseEntry = std::pair<std::size_t, Rat>;
using SparseVec = std::vector<SparseEntry>;

// Parses "p", "-p", "p/q". Throws ParseError on malformed input or q == 0.
Rat ParseRat(std::string_view text);
std::string ToString(const Rat& value);

RatVector ZeroVector(std::size_t n);
bool IsZero(const RatVector& v);
std::vector<std::size_t> Support(const RatVector& v);

SparseVec ToSparse(const RatVector& v);
RatVector ToDense(const SparseVec& v, std::size_t n);

Rat Dot(const RatVector& a, const RatVector& b);
RatVector Add(const RatVector& a, const RatVector& b);
RatVector Sub(const RatVector& a, const RatVector& b);
RatVector Scale(const Rat& s, const RatVector& v);
// a + s * b, in place.
void Axpy(RatVector& a, const Rat& s, const RatVector& b);

// Least common multiple of all denominators (1 for an empty vector).
BigInt DenominatorLcm(const RatVector& v);

}  // namespace deformcx

#endif  // DEFORMCX_RATIONAL_H_
