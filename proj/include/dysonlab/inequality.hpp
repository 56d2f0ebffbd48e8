// Copyright 2026 The dysonlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

namespace dysonlab {

inline constexpr double kInequalitySlack = -1e-10;

/// Outcome of checking lhs >= rhs.
struct InequalityReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // lhs - rhs, exactly as computed
  bool holds = true;   // slack >= threshold

  static InequalityReport compare(double lhs, double rhs, double threshold = kInequalitySlack) {
    const double slack = lhs - rhs;
    return {lhs, rhs, slack, slack >= threshold};
  }
};

}  // namespace dysonlab
