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

#include <optional>
#include <string>
#include <vector>

#include "qdm/equivalence.hpp"
#include "qdm/projections.hpp"

namespace qdm {

enum class UniquenessStatus {
  trivial,
  not_unique,
  necessary_condition_holds,
  unique_by_projection_set,
  unique_by_unitary_family,
};

const char* to_string(UniquenessStatus status);

struct UniquenessVerdict {
  UniquenessStatus status = UniquenessStatus::necessary_condition_holds;
  double lambda_min = 0;  // smallest eigenvalue over states and Choi matrices
  double window = 0;      // largest admissible fidelity; may be +infinity
  double state_det_product = 0;
  double choi_det_product = 0;
  std::vector<std::string> singular_elements;
  std::vector<std::string> matched_projections;
  // Populated for not_unique verdicts.
  double fidelity_used = 0;
  double spectral_gap = 0;  // largest top-eigenvalue shift across elements
  std::optional<ModelRepresentation> counterexample;
};

/// Necessary condition for a model to be identifiable: some state or some
/// Choi matrix must be singular. A nontrivial model with all spectra
/// bounded away from zero is provably not unique, and the verdict carries
/// a distribution-equivalent physical witness built from the inverse
/// depolarizing gauge at the midpoint of the admissible window.
UniquenessVerdict uniqueness_necessary_condition(
    const ModelRepresentation& rep, const Tolerances& tol = default_tol());

/// The witness construction on its own: apply_gauge with the inverse
/// depolarizing gauge at the given fidelity. Requires 1 <= F <= F_max.
ModelRepresentation depolarizing_counterexample(
    const ModelRepresentation& rep, double fidelity,
    const Tolerances& tol = default_tol());

struct ProjectionCriterion {
  bool pass = false;
  std::vector<std::string> matched;
  std::vector<std::string> missing;
};

/// Sufficient condition via state/effect coverage: every member of
/// projection_set(dim) must appear verbatim (entrywise within tol) among
/// the states and among the effects.
ProjectionCriterion projection_set_criterion(const ModelRepresentation& rep,
                                             double tol = 1e-9);

struct UnitaryFamilyCriterion {
  bool pass = false;
  bool declared = false;  // the unitary_complete flag
  std::vector<std::string> unitary_maps;
  std::vector<std::string> extra_maps;
  std::vector<std::string> failing_maps;
  std::vector<std::string> singular_states;
  std::vector<std::string> singular_effects;
};

/// Sufficient condition via dynamics: declared unitary coverage, every
/// non-extra map verified unitary, and at least one singular state and one
/// singular effect. Coverage itself is a declared capability; only the
/// listed maps can be verified.
UnitaryFamilyCriterion unitary_family_criterion(
    const ModelRepresentation& rep, const Tolerances& tol = default_tol());

/// A physical map is a unitary conjugation iff its superoperator has unit
/// determinant; on success the conjugating matrix is extracted from the
/// rank-one Choi matrix (global phase fixed).
std::optional<Matrix> is_unitary_map(const QuantumMap& map,
                                     const Tolerances& tol = default_tol());

/// No product of two eigenphase differences of u lands back on an
/// eigenphase difference (excluding index collisions). Brute force over
/// all tuples with angular tolerance.
bool super_non_degenerate(const Matrix& u, double angle_tol = 1e-9);

/// Nearby super-non-degenerate unitary: same eigenbasis, eigenphases
/// truncated to `digits` decimals (as fractions of a turn) plus distinct
/// dyadic offsets of size 10^(-3*digits).
Matrix snd_approximant(const Matrix& u, int digits);

struct CompleteSetResult {
  std::vector<Matrix> family;
  Index span_rank = 0;
};

/// Finite family of unitary conjugates of a nontrivial Hermitian matrix
/// whose span is certified by the rank of the stacked vectorizations:
/// cyclic averages isolate a rank-one projector, then conjugations move it
/// across a spanning set of rays.
CompleteSetResult complete_set_from(const Matrix& a,
                                    const Tolerances& tol = default_tol());

/// Fits the one-parameter mixing family to a map: the superoperator must
/// act as F times the identity on the traceless subspace and fix the
/// identity. Returns the fitted F or nothing.
std::optional<double> fit_depolarizing(const QuantumMap& map,
                                       double tol = 1e-8);

enum class SpectralRelation { unitary_related, antiunitary_related, unrelated };

struct UnitaryRelation {
  SpectralRelation kind = SpectralRelation::unrelated;
  double omega = 0;  // common rotation aligning the spectra
};

/// Decides whether two unitaries have spectra related by a global rotation
/// (optionally after conjugation). Guaranteed only when an input is
/// super-non-degenerate; best effort otherwise.
UnitaryRelation classify_unitary_relation(const Matrix& ua, const Matrix& ub,
                                          double angle_tol = 1e-9);

/// Dispatch over the uniqueness results: trivial models first, then the
/// two sufficient conditions, then the necessary condition.
UniquenessVerdict assess_uniqueness(const ModelRepresentation& rep,
                                    const Tolerances& tol = default_tol());

}  // namespace qdm
