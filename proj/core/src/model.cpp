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

#include "qdm/model.hpp"

#include <cmath>

namespace qdm {

QuantumMap QuantumMap::from_superop(Matrix superop, std::string label) {
  require(superop.rows() == superop.cols(), Errc::dimension_mismatch,
          "superoperator must be square");
  QuantumMap m;
  m.dim_ = isqrt_exact(superop.rows());
  m.choi_ = choi_from_superop(superop);
  m.superop_ = std::move(superop);
  m.label = std::move(label);
  return m;
}

QuantumMap QuantumMap::from_choi(const Matrix& choi, std::string label) {
  return from_superop(superop_from_choi_matrix(choi), std::move(label));
}

QuantumMap QuantumMap::from_kraus(const std::vector<Matrix>& ops,
                                  std::string label) {
  require(!ops.empty(), Errc::invalid_argument, "empty Kraus list");
  const Index d = ops.front().rows();
  Matrix superop = Matrix::Zero(d * d, d * d);
  for (const Matrix& k : ops) {
    require(k.rows() == d && k.cols() == d, Errc::dimension_mismatch,
            "Kraus operators must share one square dimension");
    superop += kron(k, k.conjugate());
  }
  return from_superop(std::move(superop), std::move(label));
}

QuantumMap QuantumMap::from_unitary(const Matrix& u, std::string label,
                                    double unitary_tol) {
  require(is_unitary_matrix(u, unitary_tol), Errc::not_unitary,
          "matrix is not unitary within tolerance");
  return from_superop(kron(u, u.conjugate()), std::move(label));
}

Matrix QuantumMap::apply(const Matrix& x) const {
  require(x.rows() == dim_ && x.cols() == dim_, Errc::dimension_mismatch,
          "map applied to a matrix of the wrong dimension");
  return devectorize(superop_ * vectorize(x));
}

QuantumMap identity_map(Index d) {
  return QuantumMap::from_superop(Matrix::Identity(d * d, d * d), "identity");
}

Matrix choi_of(const QuantumMap& m) { return m.choi(); }

QuantumMap superop_from_choi(const Matrix& choi, std::string label) {
  return QuantumMap::from_choi(choi, std::move(label));
}

QuantumMap map_from_kraus(const std::vector<Matrix>& ops, std::string label) {
  return QuantumMap::from_kraus(ops, std::move(label));
}

QuantumMap map_from_unitary(const Matrix& u, std::string label,
                            double unitary_tol) {
  return QuantumMap::from_unitary(u, std::move(label), unitary_tol);
}

void ModelRepresentation::validate() const {
  require(dim >= 2, Errc::invalid_argument, "dimension must be at least 2");
  for (const auto& s : states)
    require(s.mat.rows() == dim && s.mat.cols() == dim,
            Errc::dimension_mismatch, "state dimension mismatch");
  for (const auto& m : maps)
    require(m.dim() == dim, Errc::dimension_mismatch, "map dimension mismatch");
  for (const auto& e : effects)
    require(e.mat.rows() == dim && e.mat.cols() == dim,
            Errc::dimension_mismatch, "effect dimension mismatch");
}

namespace {

void push_check(PhysicalityReport& report, std::string element,
                std::string quantity, bool pass, double margin) {
  report.checks.push_back(
      {std::move(element), std::move(quantity), pass, margin});
  if (!pass) report.pass = false;
  report.worst_margin = std::min(report.worst_margin, margin);
}

std::string element_name(const char* kind, const std::string& label,
                         std::size_t index) {
  return std::string(kind) + " " +
         (label.empty() ? "#" + std::to_string(index) : label);
}

}  // namespace

PhysicalityReport check_physical(const ModelRepresentation& rep,
                                 const Tolerances& tol) {
  rep.validate();
  PhysicalityReport report;
  report.worst_margin = std::numeric_limits<double>::infinity();

  for (std::size_t i = 0; i < rep.states.size(); ++i) {
    const auto& s = rep.states[i];
    const std::string name = element_name("state", s.label, i);
    const double hd = herm_defect(s.mat);
    push_check(report, name, "hermiticity", hd <= tol.herm, -hd);
    const double trace_dev = std::abs(s.mat.trace().real() - 1.0) +
                             std::abs(s.mat.trace().imag());
    push_check(report, name, "trace", trace_dev <= tol.trace, -trace_dev);
    const RealVector eig = hermitian_eigenvalues(s.mat);
    push_check(report, name, "min_eigenvalue", eig(0) >= -tol.psd, eig(0));
  }

  for (std::size_t j = 0; j < rep.maps.size(); ++j) {
    const auto& m = rep.maps[j];
    const std::string name = element_name("map", m.label, j);
    const double hd = herm_defect(m.choi());
    push_check(report, name, "choi_hermiticity", hd <= tol.herm, -hd);
    const double tp_dev =
        (partial_trace_second(m.choi(), rep.dim) - identity_matrix(rep.dim))
            .cwiseAbs()
            .maxCoeff();
    push_check(report, name, "trace_preserving", tp_dev <= tol.trace, -tp_dev);
    const RealVector eig = hermitian_eigenvalues(m.choi());
    push_check(report, name, "choi_min_eigenvalue", eig(0) >= -tol.psd, eig(0));
  }

  for (std::size_t k = 0; k < rep.effects.size(); ++k) {
    const auto& e = rep.effects[k];
    const std::string name = element_name("effect", e.label, k);
    const double hd = herm_defect(e.mat);
    push_check(report, name, "hermiticity", hd <= tol.herm, -hd);
    const RealVector eig = hermitian_eigenvalues(e.mat);
    push_check(report, name, "min_eigenvalue", eig(0) >= -tol.psd, eig(0));
    const double top = eig(eig.size() - 1);
    push_check(report, name, "max_eigenvalue_upper_bound", top <= 1.0 + tol.psd,
               1.0 - top);
  }

  return report;
}

bool is_trivial(const ModelRepresentation& rep, const Tolerances& tol) {
  rep.validate();
  const Matrix mixed = identity_matrix(rep.dim) / static_cast<double>(rep.dim);
  for (const auto& s : rep.states)
    if ((s.mat - mixed).cwiseAbs().maxCoeff() > tol.trace) return false;
  for (const auto& m : rep.maps) {
    const Matrix image = m.apply(identity_matrix(rep.dim));
    if ((image - identity_matrix(rep.dim)).cwiseAbs().maxCoeff() > tol.trace)
      return false;
  }
  for (const auto& e : rep.effects) {
    const Complex scale = e.mat.trace() / static_cast<double>(rep.dim);
    if ((e.mat - scale * identity_matrix(rep.dim)).cwiseAbs().maxCoeff() >
        tol.trace)
      return false;
  }
  return true;
}

}  // namespace qdm
