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

#include <utility>

#include "qdm/types.hpp"

namespace qdm {

// Vectorization is row-major throughout: |a><b| maps to the unit vector at
// index a*d + b, so the superoperator of rho -> A rho B is kron(A, B^T) and
// <<A|B>> = Tr(A† B) is the plain inner product of vectorized matrices.

Vector vectorize(const Matrix& m);
Matrix devectorize(const Vector& v);

Matrix kron(const Matrix& a, const Matrix& b);

/// Exchange of the two tensor factors of C^d (x) C^d.
Matrix swap_operator(Index d);

Matrix identity_matrix(Index d);

// Choi matrix with the input label on the first tensor factor:
// C[(a,c),(b,d)] = S[(c,d),(a,b)]. The two reshuffles below are exact
// inverses of each other.
Matrix choi_from_superop(const Matrix& superop);
Matrix superop_from_choi_matrix(const Matrix& choi);

/// Trace over the second tensor factor of a (d*d) x (d*d) matrix.
Matrix partial_trace_second(const Matrix& m, Index d);

/// Largest absolute entry of m - m†.
double herm_defect(const Matrix& m);

/// Eigenvalues of (m + m†)/2, ascending. Callers are expected to have
/// checked hermiticity first; the symmetrization only absorbs roundoff.
RealVector hermitian_eigenvalues(const Matrix& m);
std::pair<RealVector, Matrix> hermitian_eig(const Matrix& m);

Index rank_by_svd(const Matrix& m, double rel_threshold);
double condition_number(const Matrix& m);
double operator_norm(const Matrix& m);

bool is_unitary_matrix(const Matrix& u, double tol);

/// Rescales u by a unit phase so the first nonzero entry (row-major scan)
/// is real and positive.
Matrix fix_global_phase(const Matrix& u, double zero_tol = 1e-12);

/// Eigenphases (in [0, 2pi)) and an orthonormal eigenbasis of a unitary,
/// via the complex Schur form.
std::pair<RealVector, Matrix> unitary_eigensystem(const Matrix& u);

/// Wraps an angle into (-pi, pi].
double wrap_angle(double x);
/// Distance between two angles on the circle, in [0, pi].
double angle_distance(double a, double b);

Index isqrt_exact(Index n);  // throws dimension_mismatch if n is not a square

}  // namespace qdm
