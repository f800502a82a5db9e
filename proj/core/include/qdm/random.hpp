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
#include <random>
#include <vector>

#include "qdm/model.hpp"

namespace qdm {

using Rng = std::mt19937_64;

/// Matrix with independent standard complex Gaussian entries.
Matrix ginibre(Index rows, Index cols, Rng& rng);

/// Haar-ish random unitary: QR of a Ginibre draw with the R-diagonal phases
/// absorbed.
Matrix random_unitary_matrix(Index d, Rng& rng);

/// Normalized G G† state; rank limits the number of Ginibre columns.
Matrix random_density_matrix(Index d, Rng& rng, Index rank = 0);

/// Random PSD matrix rescaled so the largest eigenvalue is strictly below
/// one; `singular` forces a zero eigenvalue.
Matrix random_effect_matrix(Index d, Rng& rng, bool singular = false);

/// Random trace-preserving completely positive map from a renormalized
/// Kraus family; kraus_count defaults to d^2 (full-rank Choi matrix).
QuantumMap random_cptp_map(Index d, Rng& rng, Index kraus_count = 0);

struct RandomModelOptions {
  Index kraus_count = 0;  // 0 means d^2
  std::vector<Index> pure_states;
  std::vector<Index> singular_states;
  std::vector<Index> singular_maps;   // Kraus count d^2 - 1
  std::vector<Index> singular_effects;
};

/// Deterministic random physical model for the given seed.
ModelRepresentation random_model(Index dim, Index n_states, Index n_maps,
                                 Index n_effects, std::uint64_t seed,
                                 const RandomModelOptions& options = {});

}  // namespace qdm
