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

#include "qdm/uniqueness.hpp"

#include <algorithm>
#include <cmath>

namespace qdm {

const char* to_string(UniquenessStatus status) {
  switch (status) {
    case UniquenessStatus::trivial: return "trivial";
    case UniquenessStatus::not_unique: return "not_unique";
    case UniquenessStatus::necessary_condition_holds:
      return "necessary_condition_holds";
    case UniquenessStatus::unique_by_projection_set:
      return "unique_by_projection_set";
    case UniquenessStatus::unique_by_unitary_family:
      return "unique_by_unitary_family";
  }
  return "unknown";
}

namespace {

std::string element_id(const char* kind, const std::string& label,
                       std::size_t index) {
  return std::string(kind) + " " +
         (label.empty() ? "#" + std::to_string(index) : label);
}

double top_eigenvalue_gap(const Matrix& before, const Matrix& after) {
  const RealVector a = hermitian_eigenvalues(before);
  const RealVector b = hermitian_eigenvalues(after);
  return std::abs(a(a.size() - 1) - b(b.size() - 1));
}

}  // namespace

ModelRepresentation depolarizing_counterexample(const ModelRepresentation& rep,
                                                double fidelity,
                                                const Tolerances& tol) {
  require(check_physical(rep, tol).pass, Errc::not_physical,
          "counterexample construction needs a physical representation");
  require(!is_trivial(rep, tol), Errc::trivial_model,
          "trivial models admit no spectral witness");
  const double window = max_depolarizing_fidelity(rep, tol);
  require(fidelity >= 1.0 - 1e-12 && fidelity <= window + 1e-12,
          Errc::fidelity_out_of_window,
          "fidelity " + std::to_string(fidelity) + " outside [1, " +
              std::to_string(window) + "]");
  ModelRepresentation out =
      apply_gauge(rep, depolarizing(1.0 / fidelity, rep.dim));
  out.label = rep.label.empty() ? "counterexample"
                                : rep.label + " counterexample";
  return out;
}

UniquenessVerdict uniqueness_necessary_condition(const ModelRepresentation& rep,
                                                 const Tolerances& tol) {
  require(check_physical(rep, tol).pass, Errc::not_physical,
          "uniqueness checks need a physical representation");

  UniquenessVerdict verdict;
  verdict.lambda_min = std::numeric_limits<double>::infinity();
  verdict.state_det_product = 1.0;
  verdict.choi_det_product = 1.0;

  for (std::size_t i = 0; i < rep.states.size(); ++i) {
    const RealVector eig = hermitian_eigenvalues(rep.states[i].mat);
    verdict.lambda_min = std::min(verdict.lambda_min, eig(0));
    verdict.state_det_product *= eig.prod();
    if (eig(0) <= tol.singular_eig)
      verdict.singular_elements.push_back(
          element_id("state", rep.states[i].label, i));
  }
  for (std::size_t j = 0; j < rep.maps.size(); ++j) {
    const RealVector eig = hermitian_eigenvalues(rep.maps[j].choi());
    verdict.lambda_min = std::min(verdict.lambda_min, eig(0));
    verdict.choi_det_product *= eig.prod();
    if (eig(0) <= tol.singular_eig)
      verdict.singular_elements.push_back(
          element_id("map", rep.maps[j].label, j));
  }

  verdict.window = max_depolarizing_fidelity(rep, tol);

  if (is_trivial(rep, tol)) {
    verdict.status = UniquenessStatus::trivial;
    return verdict;
  }

  if (verdict.lambda_min > tol.singular_eig) {
    // All spectra bounded away from zero: build the witness at the middle
    // of the admissible window, clipped away from extreme fidelities.
    const double window = verdict.window;
    const double fidelity =
        std::isfinite(window) ? std::min(0.5 * (1.0 + window), 2.0) : 2.0;
    verdict.status = UniquenessStatus::not_unique;
    verdict.fidelity_used = fidelity;
    verdict.counterexample = depolarizing_counterexample(rep, fidelity, tol);

    double gap = 0;
    for (Index i = 0; i < rep.n_states(); ++i)
      gap = std::max(gap, top_eigenvalue_gap(
                              rep.states[i].mat,
                              verdict.counterexample->states[i].mat));
    for (Index j = 0; j < rep.n_maps(); ++j)
      gap = std::max(gap, top_eigenvalue_gap(
                              rep.maps[j].choi(),
                              verdict.counterexample->maps[j].choi()));
    for (Index k = 0; k < rep.n_effects(); ++k)
      gap = std::max(gap, top_eigenvalue_gap(
                              rep.effects[k].mat,
                              verdict.counterexample->effects[k].mat));
    verdict.spectral_gap = gap;
    return verdict;
  }

  verdict.status = UniquenessStatus::necessary_condition_holds;
  return verdict;
}

ProjectionCriterion projection_set_criterion(const ModelRepresentation& rep,
                                             double tol) {
  rep.validate();
  const ProjectionSet family = projection_set(rep.dim);
  ProjectionCriterion out;
  out.pass = true;
  for (const auto& member : family.projections) {
    const auto matches = [&](const Matrix& m) {
      return (m - member.mat).cwiseAbs().maxCoeff() <= tol;
    };
    const bool in_states =
        std::any_of(rep.states.begin(), rep.states.end(),
                    [&](const DensityMatrix& s) { return matches(s.mat); });
    const bool in_effects =
        std::any_of(rep.effects.begin(), rep.effects.end(),
                    [&](const Effect& e) { return matches(e.mat); });
    if (in_states && in_effects) {
      out.matched.push_back(member.label);
    } else {
      out.missing.push_back(member.label);
      out.pass = false;
    }
  }
  return out;
}

std::optional<Matrix> is_unitary_map(const QuantumMap& map,
                                     const Tolerances& tol) {
  const Index d = map.dim();
  if (herm_defect(map.choi()) > tol.herm) return std::nullopt;
  if (hermitian_eigenvalues(map.choi())(0) < -tol.psd) return std::nullopt;
  if ((partial_trace_second(map.choi(), d) - identity_matrix(d))
          .cwiseAbs()
          .maxCoeff() > tol.trace)
    return std::nullopt;
  const Complex det = map.superop().determinant();
  if (std::abs(det - Complex(1.0, 0.0)) > 1e-8) return std::nullopt;
  const TransformClass cls =
      classify_transform(GaugeTransform(map.superop()), tol);
  if (cls.kind != TransformKind::unitary) return std::nullopt;
  return cls.u;
}

UnitaryFamilyCriterion unitary_family_criterion(const ModelRepresentation& rep,
                                                const Tolerances& tol) {
  require(check_physical(rep, tol).pass, Errc::not_physical,
          "uniqueness checks need a physical representation");
  UnitaryFamilyCriterion out;
  out.declared = rep.unitary_complete;
  for (std::size_t j = 0; j < rep.maps.size(); ++j) {
    const auto& map = rep.maps[j];
    const std::string id = element_id("map", map.label, j);
    if (map.extra) {
      out.extra_maps.push_back(id);
    } else if (is_unitary_map(map, tol)) {
      out.unitary_maps.push_back(id);
    } else {
      out.failing_maps.push_back(id);
    }
  }
  for (std::size_t i = 0; i < rep.states.size(); ++i)
    if (hermitian_eigenvalues(rep.states[i].mat)(0) <= tol.singular_eig)
      out.singular_states.push_back(
          element_id("state", rep.states[i].label, i));
  for (std::size_t k = 0; k < rep.effects.size(); ++k)
    if (hermitian_eigenvalues(rep.effects[k].mat)(0) <= tol.singular_eig)
      out.singular_effects.push_back(
          element_id("effect", rep.effects[k].label, k));
  out.pass = out.declared && out.failing_maps.empty() &&
             !out.singular_states.empty() && !out.singular_effects.empty();
  return out;
}

bool super_non_degenerate(const Matrix& u, double angle_tol) {
  require(is_unitary_matrix(u, default_tol().unitary), Errc::not_unitary,
          "super-non-degeneracy is defined for unitary matrices");
  const Index d = u.rows();
  const RealVector phases = unitary_eigensystem(u).first;

  for (Index c = 0; c < d; ++c)
    for (Index e = 0; e < d; ++e)
      for (Index f = 0; f < d; ++f) {
        if (e == f || c == f) continue;
        for (Index g = 0; g < d; ++g) {
          if (c == g || g == e) continue;
          // product of differences (c,g) and (e,f)
          const double product =
              phases(c) - phases(g) + phases(e) - phases(f);
          for (Index a = 0; a < d; ++a)
            for (Index b = 0; b < d; ++b)
              if (angle_distance(product, phases(a) - phases(b)) <= angle_tol)
                return false;
        }
      }
  return true;
}

Matrix snd_approximant(const Matrix& u, int digits) {
  require(is_unitary_matrix(u, default_tol().unitary), Errc::not_unitary,
          "approximant is defined for unitary matrices");
  require(digits >= 1, Errc::invalid_argument, "digits must be at least 1");
  const Index d = u.rows();
  auto [phases, basis] = unitary_eigensystem(u);
  const double grid = std::pow(10.0, -digits);
  const double offset_scale = std::pow(10.0, -3 * digits);
  Vector diag(d);
  for (Index a = 0; a < d; ++a) {
    const double turn = phases(a) / (2.0 * M_PI);  // in [0, 1)
    const double truncated = std::floor(turn / grid) * grid;
    // Distinct offsets 4^-(a+1): no signed combination of two offset
    // differences can land back on an offset difference (base-4 digits
    // never carry), so the perturbed phases defeat every product collision
    // the non-degeneracy test probes. Dyadic offsets would not: consecutive
    // gaps halve, and (o_1 - o_2) - (o_2 - o_3) = o_2 - o_3.
    const double offset = std::pow(4.0, -static_cast<double>(a + 1));
    diag(a) = std::exp(
        Complex(0, 2.0 * M_PI * (truncated + offset * offset_scale)));
  }
  return basis * diag.asDiagonal() * basis.adjoint();
}

namespace {

Matrix unitary_with_first_column(const Vector& psi) {
  const Index d = psi.size();
  Matrix seed = Matrix::Identity(d, d);
  seed.col(0) = psi / psi.norm();
  // Complete to a unitary; QR may flip the leading column by a phase.
  Eigen::HouseholderQR<Matrix> qr(seed);
  Matrix q = qr.householderQ();
  const Complex overlap = (q.col(0).adjoint() * seed.col(0))(0);
  q.col(0) *= overlap / std::abs(overlap);
  return q;
}

}  // namespace

CompleteSetResult complete_set_from(const Matrix& a, const Tolerances& tol) {
  require(a.rows() == a.cols(), Errc::dimension_mismatch,
          "expected a square matrix");
  require(herm_defect(a) <= tol.herm, Errc::invalid_argument,
          "expected a Hermitian matrix");
  const Index d = a.rows();
  const Complex trace = a.trace();
  require((a - trace / static_cast<double>(d) * identity_matrix(d))
                  .cwiseAbs()
                  .maxCoeff() > tol.trace,
          Errc::trivial_matrix,
          "matrix proportional to the identity generates nothing new");

  auto [eigenvalues, eig_basis] = hermitian_eig(a);
  // Descending order, so index 0 carries the largest eigenvalue.
  Matrix basis(d, d);
  for (Index i = 0; i < d; ++i) basis.col(i) = eig_basis.col(d - 1 - i);

  // Cycle and end-swap unitaries in the eigenbasis of a.
  Matrix cycle = Matrix::Zero(d, d);
  cycle(0, 0) = 1.0;
  cycle(d - 1, 1) = 1.0;
  for (Index i = 2; i < d; ++i) cycle(i - 1, i) = 1.0;
  Matrix end_swap = Matrix::Identity(d, d);
  end_swap(0, 0) = end_swap(d - 1, d - 1) = 0.0;
  end_swap(0, d - 1) = end_swap(d - 1, 0) = 1.0;

  const Matrix cycle_w = basis * cycle * basis.adjoint();
  const Matrix swap_w = basis * end_swap * basis.adjoint();

  std::vector<Matrix> seeds;
  Matrix rotated = a;
  for (Index l = 1; l < d; ++l) {
    rotated = cycle_w * rotated * cycle_w.adjoint();
    seeds.push_back(rotated);
  }
  rotated = swap_w * a * swap_w.adjoint();
  seeds.push_back(rotated);
  for (Index l = 1; l < d; ++l) {
    rotated = cycle_w * rotated * cycle_w.adjoint();
    seeds.push_back(rotated);
  }

  // Conjugators sending the isolated top-eigenvector projector across a
  // spanning set of rays.
  const ProjectionSet rays = projection_set_qpt(d);
  std::vector<Matrix> conjugators;
  for (const auto& ray : rays.projections) {
    auto [rv, rbasis] = hermitian_eig(ray.mat);
    const Vector psi = rbasis.col(d - 1);
    conjugators.push_back(unitary_with_first_column(psi) * basis.adjoint());
  }

  CompleteSetResult result;
  for (const Matrix& v : conjugators)
    for (const Matrix& seed : seeds) result.family.push_back(v * seed * v.adjoint());

  Matrix stacked(static_cast<Index>(result.family.size()), d * d);
  for (std::size_t r = 0; r < result.family.size(); ++r)
    stacked.row(static_cast<Index>(r)) = vectorize(result.family[r]).transpose();
  result.span_rank = rank_by_svd(stacked, tol.rank_rel);
  return result;
}

std::optional<double> fit_depolarizing(const QuantumMap& map, double tol) {
  const Index d = map.dim();
  const Matrix image = map.apply(identity_matrix(d));
  if ((image - identity_matrix(d)).cwiseAbs().maxCoeff() > tol)
    return std::nullopt;
  const Vector id_vec = vectorize(identity_matrix(d));
  const Matrix projector =
      Matrix::Identity(d * d, d * d) -
      id_vec * id_vec.adjoint() / static_cast<double>(d);
  const Matrix traceless_block = projector * map.superop() * projector;
  const double fidelity =
      traceless_block.trace().real() / static_cast<double>(d * d - 1);
  if ((map.superop() - depolarizing_superop(fidelity, d)).norm() > tol)
    return std::nullopt;
  return fidelity;
}

namespace {

RealVector sorted_phases(const Matrix& u) {
  RealVector phases = unitary_eigensystem(u).first;
  std::sort(phases.data(), phases.data() + phases.size());
  return phases;
}

std::optional<double> align_spectra(const RealVector& target,
                                    const RealVector& source,
                                    double angle_tol) {
  const Index d = target.size();
  for (Index shift = 0; shift < d; ++shift) {
    const double omega = target(shift) - source(0);
    bool ok = true;
    for (Index m = 0; m < d && ok; ++m)
      ok = angle_distance(target((shift + m) % d), source(m) + omega) <=
           angle_tol;
    if (ok) return wrap_angle(omega);
  }
  return std::nullopt;
}

}  // namespace

UnitaryRelation classify_unitary_relation(const Matrix& ua, const Matrix& ub,
                                          double angle_tol) {
  require(is_unitary_matrix(ua, default_tol().unitary) &&
              is_unitary_matrix(ub, default_tol().unitary),
          Errc::not_unitary, "both inputs must be unitary");
  require(ua.rows() == ub.rows(), Errc::dimension_mismatch,
          "unitaries act on different dimensions");

  const RealVector theta = sorted_phases(ua);
  const RealVector phi = sorted_phases(ub);
  if (auto omega = align_spectra(theta, phi, angle_tol))
    return {SpectralRelation::unitary_related, *omega};

  RealVector negated(phi.size());
  for (Index i = 0; i < phi.size(); ++i) {
    double value = -phi(i);
    value = std::fmod(value, 2.0 * M_PI);
    if (value < 0) value += 2.0 * M_PI;
    negated(i) = value;
  }
  std::sort(negated.data(), negated.data() + negated.size());
  if (auto omega = align_spectra(theta, negated, angle_tol))
    return {SpectralRelation::antiunitary_related, *omega};
  return {SpectralRelation::unrelated, 0.0};
}

UniquenessVerdict assess_uniqueness(const ModelRepresentation& rep,
                                    const Tolerances& tol) {
  require(check_physical(rep, tol).pass, Errc::not_physical,
          "uniqueness checks need a physical representation");
  if (is_trivial(rep, tol)) {
    UniquenessVerdict verdict = uniqueness_necessary_condition(rep, tol);
    verdict.status = UniquenessStatus::trivial;
    return verdict;
  }
  const ProjectionCriterion projections = projection_set_criterion(rep);
  if (projections.pass) {
    // Projection members are singular, so the necessary-condition pass
    // below cannot have produced a counterexample.
    UniquenessVerdict verdict = uniqueness_necessary_condition(rep, tol);
    verdict.status = UniquenessStatus::unique_by_projection_set;
    verdict.matched_projections = projections.matched;
    return verdict;
  }
  const UnitaryFamilyCriterion family = unitary_family_criterion(rep, tol);
  if (family.pass) {
    UniquenessVerdict verdict = uniqueness_necessary_condition(rep, tol);
    verdict.status = UniquenessStatus::unique_by_unitary_family;
    return verdict;
  }
  return uniqueness_necessary_condition(rep, tol);
}

}  // namespace qdm
