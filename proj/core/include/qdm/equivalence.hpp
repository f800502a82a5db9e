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
#include <vector>

#include "qdm/gauge.hpp"
#include "qdm/probability.hpp"
#include "qdm/projections.hpp"

namespace qdm {

/// Element of the symmetry group on matrix space: conjugation by a unitary
/// u, optionally preceded by transposition (the antiunitary branch).
struct WignerTransform {
  Matrix u;
  bool antiunitary = false;

  /// swap_operator^antiunitary * kron(u, conj(u)).
  Matrix superop() const;
  GaugeTransform gauge() const;
};

/// The transpose map as a gauge; its superoperator is the swap operator,
/// and it squares to the identity.
GaugeTransform transpose_map(Index d);

struct DistributionComparison {
  bool equal = false;
  double max_dev = 0;
  // Argmax entry over all compared probabilities.
  Index witness_state = -1;
  std::vector<Index> witness_seq;
  Index witness_effect = -1;
};

/// Entrywise comparison of the two probability tables up to max_len.
/// Representations may live on different Hilbert space dimensions; only the
/// index-set sizes must match.
DistributionComparison distributions_equal(const ModelRepresentation& a,
                                           const ModelRepresentation& b,
                                           Index max_len = 3,
                                           double tol = 1e-9);

/// Recovers the gauge T with apply_gauge(a, T) == b from the fiducial
/// frames of two complete, distribution-equivalent representations. The
/// input-frame and output-frame formulas are both evaluated and must agree.
GaugeTransform recover_gauge_gst(const ModelRepresentation& a,
                                 const ModelRepresentation& b,
                                 const Tolerances& tol = default_tol());

enum class TransformKind { unitary, antiunitary, other };

struct TransformClass {
  TransformKind kind = TransformKind::other;
  Matrix u;  // populated for the unitary / antiunitary kinds, phase-fixed
};

/// Membership test in the unitary/antiunitary group: a transform is a
/// unitary conjugation iff its Choi matrix is PSD of rank one with trace d,
/// and antiunitary iff composition with the transpose map is.
TransformClass classify_transform(const GaugeTransform& t,
                                  const Tolerances& tol = default_tol());

/// Whether two representations describe the same physics: recovers the
/// relating gauge and classifies it. Empty result means the gauge exists
/// but lies outside the symmetry group: genuinely distinct models.
std::optional<WignerTransform> same_model(const ModelRepresentation& a,
                                          const ModelRepresentation& b,
                                          const Tolerances& tol = default_tol());

/// Result of reconstructing a symmetry transform from the images of the
/// canonical projection family.
struct WignerFit {
  Matrix basis;                // columns |a'>
  std::vector<double> phases;  // relative phases against basis index 0
  int kappa = 1;               // +1 unitary, -1 antiunitary

  /// The transform S with S^{-1}(pi) = image(pi) for every family member.
  WignerTransform transform() const;
};

/// Reconstructs S from images of projection_set(dim), ordered as that set.
/// Raises NotProjection for inputs that are not rank-one projections and
/// GramMismatch when the overlap pattern cannot come from any symmetry
/// transform.
WignerFit recover_wigner_from_projections(const std::vector<Matrix>& images,
                                          Index dim, double tol = 1e-8);

}  // namespace qdm
