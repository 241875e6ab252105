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

#ifndef DEFORMCX_ERRORS_H_
#define DEFORMCX_ERRORS_H_

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace deformcx {

// Base of every error raised by the library. Each subclass corresponds to one
// failure mode that callers (notably the CLI) may want to dispatch on.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "Error"; }
};

#define DEFORMCX_DECLARE_ERROR(Name)                             \
  class Name : public Error {                                    \
   public:                                                       \
    using Error::Error;                                          \
    const char* kind() const noexcept override { return #Name; } \
  }

DEFORMCX_DECLARE_ERROR(DimensionMismatch);
DEFORMCX_DECLARE_ERROR(SubspaceNotContained);
DEFORMCX_DECLARE_ERROR(SingularGroupElement);
DEFORMCX_DECLARE_ERROR(SymmetryMismatch);
DEFORMCX_DECLARE_ERROR(SpanTooLarge);
DEFORMCX_DECLARE_ERROR(AsymmetricTensor);
DEFORMCX_DECLARE_ERROR(NotLie);
DEFORMCX_DECLARE_ERROR(FirstOrderObstructed);
DEFORMCX_DECLARE_ERROR(OrderTooHigh);
DEFORMCX_DECLARE_ERROR(EvenOrderNotAlternating);
DEFORMCX_DECLARE_ERROR(NotScalarMultiple);
DEFORMCX_DECLARE_ERROR(TorusDoesNotFix);
DEFORMCX_DECLARE_ERROR(ParseError);
DEFORMCX_DECLARE_ERROR(VerificationFailure);

#undef DEFORMCX_DECLARE_ERROR

// Raised when a law fails the defining identity of the presentation. Carries
// the indices of the nonzero identity coordinates.
class NotOnLocus : public Error {
 public:
  NotOnLocus(const std::string& what, std::vector<std::size_t> nonzero)
      : Error(what), nonzero_(std::move(nonzero)) {}
  const char* kind() const noexcept override { return "NotOnLocus"; }
  const std::vector<std::size_t>& nonzero_coordinates() const { return nonzero_; }

 private:
  std::vector<std::size_t> nonzero_;
};

}  // namespace deformcx

#endif  // DEFORMCX_ERRORS_H_
