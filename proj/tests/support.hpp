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

#include <vector>

#include "qdm/equivalence.hpp"
#include "qdm/gauge.hpp"
#include "qdm/random.hpp"

namespace qdm::test {

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

inline Matrix mat2(Complex a, Complex b, Complex c, Complex d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

inline Matrix diag(const std::vector<double>& values) {
  Matrix m = Matrix::Zero(static_cast<Index>(values.size()),
                          static_cast<Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

inline Matrix ket_bra(Index d, Index a, Index b) {
  Matrix m = Matrix::Zero(d, d);
  m(a, b) = 1.0;
  return m;
}

/// Random invertible gauge with singular values in [0.5, 2]; conditioning
/// stays mild so double precision keeps gauge-invariance checks tight.
inline GaugeTransform random_invertible_gauge(Index d, Rng& rng) {
  const Matrix q1 = random_unitary_matrix(d * d, rng);
  const Matrix q2 = random_unitary_matrix(d * d, rng);
  std::uniform_real_distribution<double> spread(0.5, 2.0);
  Vector singular(d * d);
  for (Index i = 0; i < d * d; ++i) singular(i) = spread(rng);
  return GaugeTransform(q1 * singular.asDiagonal() * q2.adjoint());
}

/// Random physical gauge: unitary or antiunitary conjugation, or a
/// depolarizing member inside the physical window of the representation it
/// is meant for.
inline GaugeTransform random_physical_gauge(Index d, Rng& rng,
                                            double window = 1.0) {
  std::uniform_int_distribution<int> pick(0, window > 1.0 ? 2 : 1);
  switch (pick(rng)) {
    case 0:
      return WignerTransform{random_unitary_matrix(d, rng), false}.gauge();
    case 1:
      return WignerTransform{random_unitary_matrix(d, rng), true}.gauge();
    default: {
      std::uniform_real_distribution<double> inside(1.0, window);
      return depolarizing(1.0 / inside(rng), d);
    }
  }
}

/// Qubit model with state spectra {0.9, 0.1}, one comfortably full-rank
/// map and full-rank effects: lambda_min is exactly 0.1, so the
/// depolarizing window tops out at 1.25.
inline ModelRepresentation qubit_lambda01_model() {
  ModelRepresentation rep;
  rep.dim = 2;
  rep.label = "lambda 0.1 qubit";
  const Matrix rho0 = diag({0.9, 0.1});
  Matrix h = mat2(1.0, 1.0, 1.0, -1.0) / std::sqrt(2.0);
  rep.states.push_back({rho0, "rho0"});
  rep.states.push_back({h * rho0 * h.adjoint(), "rho1"});
  rep.maps.push_back(depolarizing_map(0.5, 2));
  rep.effects.push_back({diag({0.8, 0.3}), "E0"});
  rep.effects.push_back({h * diag({0.7, 0.2}) * h.adjoint(), "E1"});
  return rep;
}

}  // namespace qdm::test
