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

#include "qdm/linalg.hpp"

namespace qdm {

/// Initial state: a d x d matrix plus a free-form label. Physicality is a
/// property to be checked, not an invariant of the type; gauge images of
/// physical states are legal values here.
struct DensityMatrix {
  Matrix mat;
  std::string label;
  Index dim() const { return mat.rows(); }
};

/// Two-outcome measurement operator (the "true" outcome).
struct Effect {
  Matrix mat;
  std::string label;
  Index dim() const { return mat.rows(); }
};

/// Linear map on d x d matrices, stored as its d^2 x d^2 superoperator with
/// the Choi matrix kept alongside. The two views stay consistent by
/// construction; there is no mutable access to either.
class QuantumMap {
 public:
  QuantumMap() = default;

  static QuantumMap from_superop(Matrix superop, std::string label = "");
  static QuantumMap from_choi(const Matrix& choi, std::string label = "");
  static QuantumMap from_kraus(const std::vector<Matrix>& ops,
                               std::string label = "");
  static QuantumMap from_unitary(const Matrix& u, std::string label = "",
                                 double unitary_tol = 1e-9);

  const Matrix& superop() const { return superop_; }
  const Matrix& choi() const { return choi_; }
  Index dim() const { return dim_; }

  /// Action on a matrix: devectorize(superop * vectorize(x)).
  Matrix apply(const Matrix& x) const;

  std::string label;
  /// Marks a map that is not claimed as part of declared unitary coverage.
  bool extra = false;

 private:
  Matrix superop_;
  Matrix choi_;
  Index dim_ = 0;
};

QuantumMap identity_map(Index d);

// Conversion entry points matching the map constructors.
Matrix choi_of(const QuantumMap& m);
QuantumMap superop_from_choi(const Matrix& choi, std::string label = "");
QuantumMap map_from_kraus(const std::vector<Matrix>& ops,
                          std::string label = "");
QuantumMap map_from_unitary(const Matrix& u, std::string label = "",
                            double unitary_tol = 1e-9);

/// A device description: initial states, evolution maps, measurement
/// effects, all on the same Hilbert space dimension.
struct ModelRepresentation {
  Index dim = 0;
  std::vector<DensityMatrix> states;
  std::vector<QuantumMap> maps;
  std::vector<Effect> effects;
  /// Declared capability flag: the device can reach every unitary map.
  /// Cannot be certified from a finite list; used by the uniqueness checks.
  bool unitary_complete = false;
  std::string label;

  Index n_states() const { return static_cast<Index>(states.size()); }
  Index n_maps() const { return static_cast<Index>(maps.size()); }
  Index n_effects() const { return static_cast<Index>(effects.size()); }

  /// Throws DimensionMismatch / InvalidArgument when members disagree on
  /// dim or a list needed for evaluation is empty.
  void validate() const;
};

struct ElementCheck {
  std::string element;   // e.g. "state rho0"
  std::string quantity;  // e.g. "min_eigenvalue"
  bool pass = true;
  double margin = 0;     // the violating eigenvalue or defect
};

struct PhysicalityReport {
  bool pass = true;
  std::vector<ElementCheck> checks;
  double worst_margin = 0;  // most negative eigenvalue margin seen
};

/// Per-element physicality: states Hermitian/unit-trace/PSD, maps CPTP via
/// the Choi matrix, effects Hermitian with spectrum in [0, 1].
PhysicalityReport check_physical(const ModelRepresentation& rep,
                                 const Tolerances& tol = default_tol());

/// True iff every state is maximally mixed, every map unital and every
/// effect proportional to the identity.
bool is_trivial(const ModelRepresentation& rep,
                const Tolerances& tol = default_tol());

}  // namespace qdm
