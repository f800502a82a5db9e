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

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qdm/gauge.hpp"
#include "qdm/model.hpp"

namespace qdm {

/// Spanning sets of states and effects in the vectorized picture:
/// m_in columns are vectorized fiducial states, m_out rows are the
/// vectorized fiducial effects (conjugated). The Gram matrix m_out * m_in
/// holds the length-zero probabilities.
struct FiducialFrame {
  Matrix m_in;
  Matrix m_out;
  Matrix gram() const { return m_out * m_in; }
};

/// Greedy selection of the first dim^2 linearly independent states
/// (by vectorization rank); result may be shorter when the set is
/// incomplete.
std::vector<Index> independent_states(const ModelRepresentation& rep,
                                      const Tolerances& tol = default_tol());
std::vector<Index> independent_effects(const ModelRepresentation& rep,
                                       const Tolerances& tol = default_tol());

/// Builds the frame for explicit index selections; requires both frames to
/// have full rank (NotComplete otherwise).
FiducialFrame frame_from_rep(const ModelRepresentation& rep,
                             const std::vector<Index>& state_idx,
                             const std::vector<Index>& effect_idx,
                             const Tolerances& tol = default_tol());

enum class DatasetKind { exact, sampled };

/// Length-0 and length-1 probabilities of a representation against a
/// fiducial frame: the Gram matrix, one sandwich matrix per map, and
/// probability vectors for the non-fiducial states and effects.
struct GstDataset {
  Index dim = 0;
  DatasetKind kind = DatasetKind::exact;
  long shots = 0;
  std::uint64_t seed = 0;
  std::vector<Index> fiducial_states;
  std::vector<Index> fiducial_effects;
  RealMatrix gram;  // gram(k, i) = Tr(E_k rho_i)
  std::vector<std::pair<std::string, RealMatrix>> map_grams;
  std::vector<std::pair<std::string, RealVector>> extra_states;
  std::vector<std::pair<std::string, RealVector>> extra_effects;
};

GstDataset collect_dataset(const ModelRepresentation& rep,
                           std::vector<Index> fiducial_states,
                           std::vector<Index> fiducial_effects,
                           const Tolerances& tol = default_tol());

/// Finite-shot version of collect_dataset: every entry becomes an
/// independent binomial frequency, one counter-derived generator stream per
/// entry, so parallel and serial runs agree exactly.
GstDataset sample_dataset(const ModelRepresentation& rep,
                          std::vector<Index> fiducial_states,
                          std::vector<Index> fiducial_effects, long shots,
                          std::uint64_t seed,
                          const Tolerances& tol = default_tol());

/// Linear-inversion reconstruction in the data gauge: fiducial states land
/// on coordinate vectors, fiducial effects on the rows of the Gram matrix,
/// maps on gram^-1 * map_gram. Output reproduces every dataset entry but
/// will usually fail check_physical; that is the point, not an error.
ModelRepresentation lgst_reconstruct(const GstDataset& dataset,
                                     const Tolerances& tol = default_tol());

/// Moves a reconstruction onto a prior frame: applies the gauge taking the
/// representation's own fiducial states onto the prior's fiducial states.
ModelRepresentation gauge_fix(const ModelRepresentation& rep,
                              const FiducialFrame& prior,
                              const Tolerances& tol = default_tol());

}  // namespace qdm
