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

#include "qdm/projections.hpp"

#include "qdm/linalg.hpp"

namespace qdm {

namespace {

const Complex kI(0.0, 1.0);

Matrix projector(const Vector& v) {
  const Vector n = v / v.norm();
  return n * n.adjoint();
}

Vector basis_vector(Index d, Index a) {
  Vector v = Vector::Zero(d);
  v(a) = 1.0;
  return v;
}

std::string tag(const char* stem, std::initializer_list<Index> idx) {
  std::string label = stem;
  bool first = true;
  for (Index i : idx) {
    label += (first ? "_" : ",") + std::to_string(i + 1);
    first = false;
  }
  return label;
}

}  // namespace

ProjectionSet projection_set_qpt(Index dim) {
  require(dim >= 2, Errc::invalid_argument, "dimension must be at least 2");
  ProjectionSet set;
  set.dim = dim;
  for (Index a = 0; a < dim; ++a)
    set.projections.push_back({tag("pi", {a}), projector(basis_vector(dim, a))});
  for (Index a = 0; a < dim; ++a)
    for (Index b = a + 1; b < dim; ++b) {
      set.projections.push_back(
          {tag("pix", {a, b}),
           projector(basis_vector(dim, a) + basis_vector(dim, b))});
      set.projections.push_back(
          {tag("piy", {a, b}),
           projector(basis_vector(dim, a) + kI * basis_vector(dim, b))});
    }
  return set;
}

ProjectionSet projection_set(Index dim) {
  ProjectionSet set = projection_set_qpt(dim);
  for (Index a = 0; a < dim; ++a)
    for (Index b = a + 1; b < dim; ++b)
      for (Index c = b + 1; c < dim; ++c) {
        const Vector va = basis_vector(dim, a);
        const Vector vb = basis_vector(dim, b);
        const Vector vc = basis_vector(dim, c);
        set.projections.push_back({tag("pix", {a, b, c}), projector(va + vb + vc)});
        set.projections.push_back(
            {tag("piy", {a, b, c}), projector(va + kI * vb + kI * vc)});
        set.projections.push_back(
            {tag("piy", {c, b, a}), projector(vc + kI * vb + kI * va)});
      }
  return set;
}

}  // namespace qdm
