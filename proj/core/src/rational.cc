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

#include "deformcx/rational.h"

#include <cctype>

#include "deformcx/errors.h"

namespace deformcx {
namespace {

bool IsIntegerLiteral(std::string_view s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rat ParseRat(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!den.empty() && (den[0] == '-' || den[0] == '+')) {
      throw ParseError("rational denominator must be unsigned: '" + std::string(text) + "'");
    }
  }
  if (!IsIntegerLiteral(num) || !IsIntegerLiteral(den)) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  BigInt p(n, 10);
  BigInt q(std::string(den), 10);
  if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rat r(p, q);
  r.canonicalize();
  return r;
}

std::string ToString(const Rat& value) { return value.get_str(10); }

RatVector ZeroVector(std::size_t n) { return RatVector(n); }

bool IsZero(const RatVector& v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

std::vector<std::size_t> Support(const RatVector& v) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) != 0) out.push_back(i);
  }
  return out;
}

SparseVec ToSparse(const RatVector& v) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) != 0) out.emplace_back(i, v[i]);
  }
  return out;
}

RatVector ToDense(const SparseVec& v, std::size_t n) {
  RatVector out(n);
  for (const auto& [i, x] : v) out.at(i) = x;
  return out;
}

Rat Dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("Dot: length mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  }
  return s;
}

RatVector Add(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("Add: length mismatch");
  RatVector out(a);
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

RatVector Sub(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("Sub: length mismatch");
  RatVector out(a);
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

RatVector Scale(const Rat& s, const RatVector& v) {
  RatVector out(v.size());
  if (sgn(s) == 0) return out;
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

void Axpy(RatVector& a, const Rat& s, const RatVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("Axpy: length mismatch");
  if (sgn(s) == 0) return;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (sgn(b[i]) != 0) a[i] += s * b[i];
  }
}

BigInt DenominatorLcm(const RatVector& v) {
  BigInt l = 1;
  for (const auto& x : v) {
    if (x.get_den() != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  }
  return l;
}

}  // namespace deformcx
