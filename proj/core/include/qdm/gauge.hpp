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

#include "qdm/model.hpp"

namespace qdm {

/// Invertible linear map on matrix space, stored as its d^2 x d^2
/// superoperator together with a verified inverse. Gauges are plain matrix
/// algebra here: similarity transforms, duals and Choi reshuffles all act
/// on the stored matrix.
class GaugeTransform {
 public:
  explicit GaugeTransform(Matrix superop, std::string label = "",
                          const Tolerances& tol = default_tol());

  const Matrix& superop() const { return superop_; }
  const Matrix& inverse() const { return inverse_; }
  Index dim() const { return dim_; }
  double cond() const { return cond_; }

  std::string label;

 private:
  Matrix superop_;
  Matrix inverse_;
  Index dim_ = 0;
  double cond_ = 0;
};

GaugeTransform identity_gauge(Index d);

/// Gauge applying `first` and then `second`.
GaugeTransform compose(const GaugeTransform& first,
                       const GaugeTransform& second);
GaugeTransform inverse(const GaugeTransform& t);

Matrix depolarizing_superop(double fidelity, Index d);

/// The depolarizing family as a gauge; invertible for any fidelity != 0,
/// with inverse given by the reciprocal fidelity.
GaugeTransform depolarizing(double fidelity, Index d);

/// The depolarizing family as a physical map; requires 0 <= fidelity <= 1.
QuantumMap depolarizing_map(double fidelity, Index d);

/// Transformed representation: states through the inverse, maps by
/// similarity, effects through the dual. The output may well be
/// non-physical; inspect with check_physical.
ModelRepresentation apply_gauge(const ModelRepresentation& rep,
                                const GaugeTransform& t);

/// Dual gauge: the adjoint superoperator in the Hilbert-Schmidt basis.
GaugeTransform dual(const GaugeTransform& t);

/// Largest fidelity F such that pushing the representation through the
/// inverse depolarizing gauge at F stays physical: (1 - d*lambda_min)^-1
/// over all state and Choi spectra. Returns +infinity when lambda_min
/// reaches 1/d.
double max_depolarizing_fidelity(const ModelRepresentation& rep,
                                 const Tolerances& tol = default_tol());

struct HptpReport {
  bool hermitian_choi = false;
  bool trace_preserving = false;
  double choi_herm_defect = 0;
  double tp_defect = 0;
  bool pass() const { return hermitian_choi && trace_preserving; }
};

/// Hermiticity- and trace-preservation check via the Choi matrix.
HptpReport is_hptp(const GaugeTransform& t,
                   const Tolerances& tol = default_tol());

struct WeightedKrausTerm {
  double weight = 0;  // real by hermiticity of the Choi matrix
  Matrix op;
};

/// Real-weighted Kraus form of an HPTP transform: T(x) = sum_l w_l F_l x F_l†
/// with sum_l w_l F_l† F_l = 1 when T is trace-preserving.
struct WeightedKrausDecomposition {
  std::vector<WeightedKrausTerm> terms;
  Matrix reassembled_superop(Index d) const;
  Matrix completeness_sum(Index d) const;  // sum_l w_l F_l† F_l
};

WeightedKrausDecomposition weighted_kraus(const GaugeTransform& t,
                                          const Tolerances& tol = default_tol());

}  // namespace qdm
