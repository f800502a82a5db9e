// Copyright 2026 The qdmodel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include "qdm/types.hpp"

namespace qdm {

struct LabeledProjection {
  std::string label;
  Matrix mat;
};

/// Family of rank-one projections built over the computational basis:
/// basis projections pi_a, two-basis superpositions pix_{a,b} (equal
/// weights) and piy_{a,b} (relative phase i), and for d >= 3 the
/// three-basis members pix_{a,b,c}, piy_{a,b,c} and piy_{c,b,a}.
/// Indices are 1-based in labels; members are ordered by kind, then by
/// ascending index tuple.
struct ProjectionSet {
  Index dim = 0;
  std::vector<LabeledProjection> projections;
  Index size() const { return static_cast<Index>(projections.size()); }
};

/// Full set: d + 2*C(d,2) + 3*C(d,3) projections.
ProjectionSet projection_set(Index dim);

/// Process-tomography subset {pi_a, pix_{a,b}, piy_{a,b}}: d^2 members
/// spanning the Hermitian matrices.
ProjectionSet projection_set_qpt(Index dim);

}  // namespace qdm
