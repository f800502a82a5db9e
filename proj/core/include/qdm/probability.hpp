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
#include <vector>

#include "qdm/model.hpp"

namespace qdm {

struct EvalOptions {
  /// When set, probabilities outside [0,1] beyond tol raise ValueOutOfRange
  /// instead of being clamped. Off by default: non-physical representations
  /// are routinely evaluated here.
  bool strict = false;
};

/// Outcome probability for initial state i, map sequence seq (applied left
/// to right) and effect k, evaluated in the vectorized picture and clamped
/// to [0, 1].
double probability(const ModelRepresentation& rep, Index state,
                   const std::vector<Index>& seq, Index effect,
                   const EvalOptions& opt = {},
                   const Tolerances& tol = default_tol());

/// Same value without clamping or range checks.
double probability_raw(const ModelRepresentation& rep, Index state,
                       const std::vector<Index>& seq, Index effect);

struct TableEntry {
  Index state = 0;
  std::vector<Index> seq;
  Index effect = 0;
  double p = 0;
};

enum class TableKind { exact, sampled };

struct ProbabilityTable {
  Index n_states = 0, n_maps = 0, n_effects = 0, max_len = 0;
  TableKind kind = TableKind::exact;
  long shots = 0;
  std::uint64_t seed = 0;
  std::vector<TableEntry> entries;
};

inline constexpr std::size_t kDefaultTableCap = 1000000;

/// Number of table entries for the given index-set sizes; throws
/// CapExceeded when it would pass `cap`.
std::size_t table_entry_count(Index n_states, Index n_maps, Index n_effects,
                              Index max_len, std::size_t cap);

/// Exact table of all probabilities for sequences up to max_len, in
/// lexicographic (state, sequence, effect) order; a sequence precedes its
/// extensions. Honors the QDM_THREADS environment variable; the output
/// order is identical regardless of thread count.
ProbabilityTable probability_table(const ModelRepresentation& rep,
                                   Index max_len,
                                   std::size_t cap = kDefaultTableCap,
                                   const EvalOptions& opt = {},
                                   const Tolerances& tol = default_tol());

/// Table of binomial frequencies at the given shot count. Each entry uses
/// its own counter-derived generator stream, so the result depends only on
/// (rep, max_len, shots, seed).
ProbabilityTable sample_probability_table(const ModelRepresentation& rep,
                                          Index max_len, long shots,
                                          std::uint64_t seed,
                                          std::size_t cap = kDefaultTableCap);

}  // namespace qdm
