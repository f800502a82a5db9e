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

#include "qdm/gauge.hpp"

#include <cmath>
#include <limits>

namespace qdm {

GaugeTransform::GaugeTransform(Matrix superop, std::string label,
                               const Tolerances& tol)
    : label(std::move(label)) {
  require(superop.rows() == superop.cols(), Errc::dimension_mismatch,
          "gauge superoperator must be square");
  dim_ = isqrt_exact(superop.rows());
  cond_ = condition_number(superop);
  require(std::isfinite(cond_), Errc::singular_transform,
          "gauge superoperator is singular");
  Eigen::PartialPivLU<Matrix> lu(superop);
  inverse_ = lu.inverse();
  const double defect = (superop * inverse_ -
                         Matrix::Identity(superop.rows(), superop.cols()))
                            .cwiseAbs()
                            .maxCoeff();
  require(defect <= tol.inverse * std::max(1.0, cond_),
          Errc::singular_transform,
          "gauge inverse verification failed, defect " +
              std::to_string(defect));
  superop_ = std::move(superop);
}

GaugeTransform identity_gauge(Index d) {
  return GaugeTransform(Matrix::Identity(d * d, d * d), "identity");
}

GaugeTransform compose(const GaugeTransform& first,
                       const GaugeTransform& second) {
  require(first.dim() == second.dim(), Errc::dimension_mismatch,
          "composing gauges of different dimension");
  return GaugeTransform(first.superop() * second.superop());
}

GaugeTransform inverse(const GaugeTransform& t) {
  return GaugeTransform(t.inverse());
}

Matrix depolarizing_superop(double fidelity, Index d) {
  require(d >= 2, Errc::invalid_argument, "dimension must be at least 2");
  const Vector id_vec = vectorize(identity_matrix(d));
  return fidelity * Matrix::Identity(d * d, d * d) +
         ((1.0 - fidelity) / static_cast<double>(d)) * id_vec *
             id_vec.transpose();
}

GaugeTransform depolarizing(double fidelity, Index d) {
  require(fidelity != 0.0, Errc::invalid_argument,
          "depolarizing gauge needs a nonzero fidelity");
  return GaugeTransform(depolarizing_superop(fidelity, d),
                        "depolarizing(" + std::to_string(fidelity) + ")");
}

QuantumMap depolarizing_map(double fidelity, Index d) {
  require(fidelity >= 0.0 && fidelity <= 1.0, Errc::invalid_argument,
          "depolarizing map needs fidelity in [0,1]");
  return QuantumMap::from_superop(
      depolarizing_superop(fidelity, d),
      "depolarizing(" + std::to_string(fidelity) + ")");
}

ModelRepresentation apply_gauge(const ModelRepresentation& rep,
                                const GaugeTransform& t) {
  rep.validate();
  require(rep.dim == t.dim(), Errc::dimension_mismatch,
          "gauge dimension does not match the representation");
  ModelRepresentation out;
  out.dim = rep.dim;
  out.unitary_complete = rep.unitary_complete;
  out.label = rep.label;
  out.states.reserve(rep.states.size());
  for (const auto& s : rep.states)
    out.states.push_back({devectorize(t.inverse() * vectorize(s.mat)), s.label});
  out.maps.reserve(rep.maps.size());
  for (const auto& m : rep.maps) {
    QuantumMap mapped = QuantumMap::from_superop(
        t.inverse() * m.superop() * t.superop(), m.label);
    mapped.extra = m.extra;
    out.maps.push_back(std::move(mapped));
  }
  out.effects.reserve(rep.effects.size());
  for (const auto& e : rep.effects)
    out.effects.push_back(
        {devectorize(t.superop().adjoint() * vectorize(e.mat)), e.label});
  return out;
}

GaugeTransform dual(const GaugeTransform& t) {
  return GaugeTransform(t.superop().adjoint(),
                        t.label.empty() ? "" : t.label + "*");
}

double max_depolarizing_fidelity(const ModelRepresentation& rep,
                                 const Tolerances& tol) {
  const PhysicalityReport report = check_physical(rep, tol);
  require(report.pass, Errc::not_physical,
          "max depolarizing fidelity is defined for physical representations");
  double lambda_min = std::numeric_limits<double>::infinity();
  for (const auto& s : rep.states)
    lambda_min = std::min(lambda_min, hermitian_eigenvalues(s.mat)(0));
  for (const auto& m : rep.maps)
    lambda_min = std::min(lambda_min, hermitian_eigenvalues(m.choi())(0));
  require(std::isfinite(lambda_min), Errc::invalid_argument,
          "representation has no states or maps");
  const double d = static_cast<double>(rep.dim);
  // Inclusive comparison at the sentinel boundary lambda_min = 1/d.
  if (lambda_min >= 1.0 / d - 1e-12)
    return std::numeric_limits<double>::infinity();
  return 1.0 / (1.0 - d * lambda_min);
}

HptpReport is_hptp(const GaugeTransform& t, const Tolerances& tol) {
  const Matrix choi = choi_from_superop(t.superop());
  HptpReport report;
  report.choi_herm_defect = herm_defect(choi);
  report.hermitian_choi = report.choi_herm_defect <= tol.herm;
  report.tp_defect = (partial_trace_second(choi, t.dim()) -
                      identity_matrix(t.dim()))
                         .cwiseAbs()
                         .maxCoeff();
  report.trace_preserving = report.tp_defect <= tol.trace;
  return report;
}

Matrix WeightedKrausDecomposition::reassembled_superop(Index d) const {
  Matrix superop = Matrix::Zero(d * d, d * d);
  for (const auto& term : terms)
    superop += term.weight * kron(term.op, term.op.conjugate());
  return superop;
}

Matrix WeightedKrausDecomposition::completeness_sum(Index d) const {
  Matrix sum = Matrix::Zero(d, d);
  for (const auto& term : terms)
    sum += term.weight * term.op.adjoint() * term.op;
  return sum;
}

WeightedKrausDecomposition weighted_kraus(const GaugeTransform& t,
                                          const Tolerances& tol) {
  const HptpReport hptp = is_hptp(t, tol);
  require(hptp.pass(), Errc::not_hptp,
          "weighted Kraus form needs a Hermiticity- and trace-preserving map");
  const Matrix choi = choi_from_superop(t.superop());
  auto [eigenvalues, eigenvectors] = hermitian_eig(choi);
  const double scale = eigenvalues.cwiseAbs().maxCoeff();

  WeightedKrausDecomposition decomposition;
  for (Index l = 0; l < eigenvalues.size(); ++l) {
    if (std::abs(eigenvalues(l)) <= 1e-12 * scale) continue;
    // With the C[(a,c),(b,q)] index layout, the Kraus operator carried by a
    // Choi eigenvector v is devectorize(v) transposed.
    const Matrix op = devectorize(eigenvectors.col(l)).transpose();
    decomposition.terms.push_back({eigenvalues(l), op});
  }
  return decomposition;
}

}  // namespace qdm
