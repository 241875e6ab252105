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

#include "cli/text.h"

#include <sstream>

namespace deformcx::cli {
namespace {

bool IsScalar(const Json& j) { return !j.is_object() && !j.is_array(); }

bool AllScalars(const Json& j) {
  for (const auto& x : j) {
    if (!IsScalar(x)) return false;
  }
  return true;
}

bool IsFlat(const Json& j) {
  if (j.is_array()) {
    for (const auto& x : j) {
      if (!IsScalar(x) && !(x.is_array() && IsFlat(x))) return false;
    }
    return true;
  }
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (!IsScalar(v) && !(v.is_array() && IsFlat(v))) return false;
    }
    return true;
  }
  return true;
}

std::string Scalar(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

std::string Inline(const Json& j) {
  if (IsScalar(j)) return Scalar(j);
  std::string out;
  if (j.is_array()) {
    out = "[";
    bool first = true;
    for (const auto& x : j) {
      out += (first ? "" : ", ") + Inline(x);
      first = false;
    }
    return out + "]";
  }
  bool first = true;
  for (const auto& [k, v] : j.items()) {
    out += (first ? "" : " ") + k + "=" + Inline(v);
    first = false;
  }
  return out;
}

void Render(const Json& j, int indent, std::ostringstream& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (IsScalar(v) || (v.is_array() && (AllScalars(v) || (IsFlat(v) && v.size() <= 16)))) {
        out << pad << k << ": " << Inline(v) << "\n";
      } else if (v.is_array() && v.empty()) {
        out << pad << k << ": []\n";
      } else {
        out << pad << k << ":\n";
        Render(v, indent + 2, out);
      }
    }
    return;
  }
  if (j.is_array()) {
    for (const auto& x : j) {
      if (IsFlat(x)) {
        out << pad << "- " << Inline(x) << "\n";
      } else {
        out << pad << "-\n";
        Render(x, indent + 2, out);
      }
    }
    return;
  }
  out << pad << Scalar(j) << "\n";
}

}  // namespace

std::string RenderText(const Json& report) {
  std::ostringstream out;
  Render(report, 0, out);
  return out.str();
}

}  // namespace deformcx::cli
