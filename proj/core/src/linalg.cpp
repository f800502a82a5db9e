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

#include "qdm/linalg.hpp"

#include <cmath>

namespace qdm {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::value_out_of_range: return "ValueOutOfRange";
    case Errc::cap_exceeded: return "CapExceeded";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::singular_transform: return "SingularTransform";
    case Errc::not_unitary: return "NotUnitary";
    case Errc::not_hptp: return "NotHPTP";
    case Errc::not_physical: return "NotPhysical";
    case Errc::not_complete: return "NotComplete";
    case Errc::not_equivalent: return "NotEquivalent";
    case Errc::inconsistent_gauge: return "InconsistentGauge";
    case Errc::shape_mismatch: return "ShapeMismatch";
    case Errc::not_projection: return "NotProjection";
    case Errc::gram_mismatch: return "GramMismatch";
    case Errc::fidelity_out_of_window: return "FOutOfWindow";
    case Errc::trivial_model: return "TrivialModel";
    case Errc::trivial_matrix: return "TrivialMatrix";
    case Errc::ill_conditioned: return "IllConditioned";
  }
  return "Error";
}

void fail(Errc code, const std::string& what) { throw Error(code, what); }

const Tolerances& default_tol() {
  static const Tolerances tol{};
  return tol;
}

Index isqrt_exact(Index n) {
  auto r = static_cast<Index>(std::llround(std::sqrt(static_cast<double>(n))));
  require(r * r == n, Errc::dimension_mismatch,
          "size " + std::to_string(n) + " is not a perfect square");
  return r;
}

Vector vectorize(const Matrix& m) {
  require(m.rows() == m.cols(), Errc::dimension_mismatch,
          "vectorize expects a square matrix");
  const Index d = m.rows();
  Vector v(d * d);
  for (Index a = 0; a < d; ++a)
    for (Index b = 0; b < d; ++b) v(a * d + b) = m(a, b);
  return v;
}

Matrix devectorize(const Vector& v) {
  const Index d = isqrt_exact(v.size());
  Matrix m(d, d);
  for (Index a = 0; a < d; ++a)
    for (Index b = 0; b < d; ++b) m(a, b) = v(a * d + b);
  return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix swap_operator(Index d) {
  Matrix w = Matrix::Zero(d * d, d * d);
  for (Index a = 0; a < d; ++a)
    for (Index b = 0; b < d; ++b) w(a * d + b, b * d + a) = 1.0;
  return w;
}

Matrix identity_matrix(Index d) { return Matrix::Identity(d, d); }

Matrix choi_from_superop(const Matrix& superop) {
  require(superop.rows() == superop.cols(), Errc::dimension_mismatch,
          "superoperator must be square");
  const Index d = isqrt_exact(superop.rows());
  Matrix choi(d * d, d * d);
  for (Index a = 0; a < d; ++a)
    for (Index b = 0; b < d; ++b)
      for (Index p = 0; p < d; ++p)
        for (Index q = 0; q < d; ++q)
          choi(a * d + p, b * d + q) = superop(p * d + q, a * d + b);
  return choi;
}

Matrix superop_from_choi_matrix(const Matrix& choi) {
  require(choi.rows() == choi.cols(), Errc::dimension_mismatch,
          "Choi matrix must be square");
  const Index d = isqrt_exact(choi.rows());
  Matrix superop(d * d, d * d);
  for (Index a = 0; a < d; ++a)
    for (Index b = 0; b < d; ++b)
      for (Index p = 0; p < d; ++p)
        for (Index q = 0; q < d; ++q)
          superop(p * d + q, a * d + b) = choi(a * d + p, b * d + q);
  return superop;
}

Matrix partial_trace_second(const Matrix& m, Index d) {
  require(m.rows() == d * d && m.cols() == d * d, Errc::dimension_mismatch,
          "partial trace expects a (d*d) x (d*d) matrix");
  Matrix out = Matrix::Zero(d, d);
  for (Index a = 0; a < d; ++a)
    for (Index b = 0; b < d; ++b)
      for (Index c = 0; c < d; ++c) out(a, b) += m(a * d + c, b * d + c);
  return out;
}

double herm_defect(const Matrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

RealVector hermitian_eigenvalues(const Matrix& m) {
  Matrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

std::pair<RealVector, Matrix> hermitian_eig(const Matrix& m) {
  Matrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Index rank_by_svd(const Matrix& m, double rel_threshold) {
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return 0;
  const double cutoff = rel_threshold * sv(0);
  Index rank = 0;
  for (Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++rank;
  return rank;
}

double condition_number(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(sv.size() - 1) == 0.0)
    return std::numeric_limits<double>::infinity();
  return sv(0) / sv(sv.size() - 1);
}

double operator_norm(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues().size() == 0 ? 0.0 : svd.singularValues()(0);
}

bool is_unitary_matrix(const Matrix& u, double tol) {
  if (u.rows() != u.cols()) return false;
  Matrix defect = u.adjoint() * u - Matrix::Identity(u.rows(), u.cols());
  return defect.cwiseAbs().maxCoeff() <= tol;
}

Matrix fix_global_phase(const Matrix& u, double zero_tol) {
  for (Index a = 0; a < u.rows(); ++a) {
    for (Index b = 0; b < u.cols(); ++b) {
      const Complex entry = u(a, b);
      if (std::abs(entry) > zero_tol) {
        return u * (std::conj(entry) / std::abs(entry));
      }
    }
  }
  return u;
}

std::pair<RealVector, Matrix> unitary_eigensystem(const Matrix& u) {
  Eigen::ComplexSchur<Matrix> schur(u);
  const Index d = u.rows();
  RealVector phases(d);
  for (Index a = 0; a < d; ++a) {
    double theta = std::arg(schur.matrixT()(a, a));
    if (theta < 0) theta += 2.0 * M_PI;
    phases(a) = theta;
  }
  return {phases, schur.matrixU()};
}

double wrap_angle(double x) {
  double r = std::remainder(x, 2.0 * M_PI);
  if (r <= -M_PI) r += 2.0 * M_PI;
  return r;
}

double angle_distance(double a, double b) { return std::abs(wrap_angle(a - b)); }

}  // namespace qdm
