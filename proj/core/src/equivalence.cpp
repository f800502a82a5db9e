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

#include "qdm/equivalence.hpp"

#include <cmath>

#include "qdm/tomography.hpp"

namespace qdm {

Matrix WignerTransform::superop() const {
  Matrix s = kron(u, u.conjugate());
  if (antiunitary) s = swap_operator(u.rows()) * s;
  return s;
}

GaugeTransform WignerTransform::gauge() const {
  return GaugeTransform(superop(), antiunitary ? "antiunitary" : "unitary");
}

GaugeTransform transpose_map(Index d) {
  return GaugeTransform(swap_operator(d), "transpose");
}

DistributionComparison distributions_equal(const ModelRepresentation& a,
                                           const ModelRepresentation& b,
                                           Index max_len, double tol) {
  a.validate();
  b.validate();
  require(a.n_states() == b.n_states() && a.n_maps() == b.n_maps() &&
              a.n_effects() == b.n_effects(),
          Errc::shape_mismatch, "index-set sizes differ");
  table_entry_count(a.n_states(), a.n_maps(), a.n_effects(), max_len,
                    kDefaultTableCap);

  DistributionComparison out;
  std::vector<Index> seq;
  // Depth-first over sequences keeps the two evaluations in lockstep.
  auto visit = [&](auto&& self, const std::vector<Index>& prefix) -> void {
    for (Index i = 0; i < a.n_states(); ++i) {
      for (Index k = 0; k < a.n_effects(); ++k) {
        const double dev = std::abs(probability_raw(a, i, prefix, k) -
                                    probability_raw(b, i, prefix, k));
        if (dev > out.max_dev) {
          out.max_dev = dev;
          out.witness_state = i;
          out.witness_seq = prefix;
          out.witness_effect = k;
        }
      }
    }
    if (static_cast<Index>(prefix.size()) == max_len) return;
    std::vector<Index> extended = prefix;
    for (Index j = 0; j < a.n_maps(); ++j) {
      extended.push_back(j);
      self(self, extended);
      extended.pop_back();
    }
  };
  visit(visit, {});
  out.equal = out.max_dev <= tol;
  return out;
}

GaugeTransform recover_gauge_gst(const ModelRepresentation& a,
                                 const ModelRepresentation& b,
                                 const Tolerances& tol) {
  a.validate();
  b.validate();
  require(a.dim == b.dim, Errc::dimension_mismatch,
          "representations live on different dimensions");
  require(a.n_states() == b.n_states() && a.n_maps() == b.n_maps() &&
              a.n_effects() == b.n_effects(),
          Errc::shape_mismatch, "index-set sizes differ");
  const Index d2 = a.dim * a.dim;

  const std::vector<Index> state_idx = independent_states(a, tol);
  require(static_cast<Index>(state_idx.size()) == d2, Errc::not_complete,
          "only " + std::to_string(state_idx.size()) +
              " linearly independent states, need " + std::to_string(d2));
  const std::vector<Index> effect_idx = independent_effects(a, tol);
  require(static_cast<Index>(effect_idx.size()) == d2, Errc::not_complete,
          "only " + std::to_string(effect_idx.size()) +
              " linearly independent effects, need " + std::to_string(d2));

  const FiducialFrame frame_a = frame_from_rep(a, state_idx, effect_idx, tol);
  const FiducialFrame frame_b = frame_from_rep(b, state_idx, effect_idx, tol);

  const DistributionComparison dist = distributions_equal(a, b, 1, tol.table);
  require(dist.equal, Errc::not_equivalent,
          "distributions differ by " + std::to_string(dist.max_dev) +
              " at sequence length <= 1");

  const Matrix t_in =
      frame_a.m_in * frame_b.m_in.partialPivLu().inverse();
  const Matrix t_out =
      frame_a.m_out.partialPivLu().solve(frame_b.m_out);
  const double scale = std::max(1.0, t_in.cwiseAbs().maxCoeff());
  require((t_in - t_out).cwiseAbs().maxCoeff() <= tol.recover * scale,
          Errc::inconsistent_gauge,
          "input-frame and output-frame gauge formulas disagree");

  GaugeTransform gauge(t_in);
  const ModelRepresentation mapped = apply_gauge(a, gauge);
  double defect = 0;
  for (Index i = 0; i < b.n_states(); ++i)
    defect = std::max(defect, (mapped.states[i].mat - b.states[i].mat)
                                  .cwiseAbs()
                                  .maxCoeff());
  for (Index j = 0; j < b.n_maps(); ++j)
    defect = std::max(defect, (mapped.maps[j].superop() - b.maps[j].superop())
                                  .cwiseAbs()
                                  .maxCoeff());
  for (Index k = 0; k < b.n_effects(); ++k)
    defect = std::max(defect, (mapped.effects[k].mat - b.effects[k].mat)
                                  .cwiseAbs()
                                  .maxCoeff());
  require(defect <= tol.recover * scale, Errc::inconsistent_gauge,
          "recovered gauge does not map the first representation onto the "
          "second, defect " +
              std::to_string(defect));
  return gauge;
}

namespace {

// Attempts to read a transform as a unitary conjugation. The Choi matrix of
// kron(u, conj u) is rank one with trace d; the eigenvector folds back into
// u itself.
std::optional<Matrix> unitary_from_superop(const Matrix& superop,
                                           const Tolerances& tol) {
  const Index d = isqrt_exact(superop.rows());
  const Matrix choi = choi_from_superop(superop);
  if (herm_defect(choi) > 1e-7) return std::nullopt;
  auto [eigenvalues, eigenvectors] = hermitian_eig(choi);
  const Index n = eigenvalues.size();
  const double top = eigenvalues(n - 1);
  if (top <= 0) return std::nullopt;
  if (eigenvalues(0) < -tol.psd * static_cast<double>(d)) return std::nullopt;
  if (eigenvalues.head(n - 1).cwiseAbs().maxCoeff() > tol.rank_rel * top)
    return std::nullopt;
  if (std::abs(top - static_cast<double>(d)) >
      1e-6 * static_cast<double>(d))
    return std::nullopt;
  Matrix u = devectorize(std::sqrt(top) * eigenvectors.col(n - 1)).transpose();
  u = fix_global_phase(u);
  if (!is_unitary_matrix(u, 1e-7)) return std::nullopt;
  if ((kron(u, u.conjugate()) - superop).cwiseAbs().maxCoeff() > 1e-7)
    return std::nullopt;
  return u;
}

}  // namespace

TransformClass classify_transform(const GaugeTransform& t,
                                  const Tolerances& tol) {
  if (auto u = unitary_from_superop(t.superop(), tol))
    return {TransformKind::unitary, std::move(*u)};
  const Matrix unwrapped = swap_operator(t.dim()) * t.superop();
  if (auto u = unitary_from_superop(unwrapped, tol))
    return {TransformKind::antiunitary, std::move(*u)};
  return {TransformKind::other, Matrix()};
}

std::optional<WignerTransform> same_model(const ModelRepresentation& a,
                                          const ModelRepresentation& b,
                                          const Tolerances& tol) {
  const GaugeTransform gauge = recover_gauge_gst(a, b, tol);
  const TransformClass cls = classify_transform(gauge, tol);
  if (cls.kind == TransformKind::other) return std::nullopt;
  return WignerTransform{cls.u, cls.kind == TransformKind::antiunitary};
}

WignerTransform WignerFit::transform() const {
  const Index d = basis.rows();
  Matrix u = Matrix::Zero(d, d);
  for (Index a = 0; a < d; ++a)
    u += std::exp(Complex(0, phases[static_cast<std::size_t>(a)])) *
         basis.col(a) * Matrix::Identity(d, d).row(a);
  // The fit describes S^{-1} as conjugation by u (after optional
  // transposition); S itself conjugates by u†.
  return WignerTransform{u.adjoint(), kappa < 0};
}

WignerFit recover_wigner_from_projections(const std::vector<Matrix>& images,
                                          Index dim, double tol) {
  const ProjectionSet family = projection_set(dim);
  require(static_cast<Index>(images.size()) == family.size(),
          Errc::dimension_mismatch,
          "expected " + std::to_string(family.size()) + " images, got " +
              std::to_string(images.size()));

  for (const Matrix& image : images) {
    require(image.rows() == dim && image.cols() == dim,
            Errc::dimension_mismatch, "image dimension mismatch");
    require(herm_defect(image) <= tol, Errc::not_projection,
            "image is not Hermitian");
    require((image * image - image).cwiseAbs().maxCoeff() <= 10 * tol,
            Errc::not_projection, "image is not idempotent");
    require(std::abs(image.trace().real() - 1.0) +
                    std::abs(image.trace().imag()) <=
                10 * tol,
            Errc::not_projection, "image is not rank one");
  }

  const std::size_t n = images.size();
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) {
      const double expected =
          (family.projections[p].mat * family.projections[q].mat)
              .trace()
              .real();
      const double got = (images[p] * images[q]).trace().real();
      require(std::abs(got - expected) <= 100 * tol, Errc::gram_mismatch,
              "overlap of " + family.projections[p].label + " and " +
                  family.projections[q].label + " is " + std::to_string(got) +
                  ", expected " + std::to_string(expected));
    }

  // Basis vectors from the images of the basis projections.
  Matrix basis(dim, dim);
  for (Index a = 0; a < dim; ++a) {
    auto [eigenvalues, eigenvectors] =
        hermitian_eig(images[static_cast<std::size_t>(a)]);
    require(std::abs(eigenvalues(dim - 1) - 1.0) <= 10 * tol,
            Errc::not_projection, "basis image has no unit eigenvalue");
    basis.col(a) = eigenvectors.col(dim - 1);
  }

  // Pair phases. Lookup into the family: pairs follow the basis members,
  // x then y, ascending (a, b).
  Matrix ephix = Matrix::Zero(dim, dim);
  Matrix ephiy = Matrix::Zero(dim, dim);
  std::size_t cursor = static_cast<std::size_t>(dim);
  double kappa_ref = 0;
  for (Index a = 0; a < dim; ++a)
    for (Index b = a + 1; b < dim; ++b) {
      const Matrix& image_x = images[cursor++];
      const Matrix& image_y = images[cursor++];
      Complex ex = 2.0 * (basis.col(b).adjoint() * image_x * basis.col(a))(0);
      Complex ey = 2.0 * (basis.col(b).adjoint() * image_y * basis.col(a))(0);
      require(std::abs(std::abs(ex) - 1.0) <= 100 * tol, Errc::gram_mismatch,
              "pair-phase magnitude off for an x image");
      require(std::abs(std::abs(ey) - 1.0) <= 100 * tol, Errc::gram_mismatch,
              "pair-phase magnitude off for a y image");
      ex /= std::abs(ex);
      ey /= std::abs(ey);
      ephix(a, b) = ex;
      ephiy(a, b) = ey;
      const Complex ratio = ey / (Complex(0, 1) * ex);
      require(std::abs(ratio.imag()) <= 100 * tol &&
                  std::abs(std::abs(ratio.real()) - 1.0) <= 100 * tol,
              Errc::gram_mismatch, "x/y phase relation violated");
      const double kappa_ab = ratio.real() > 0 ? 1.0 : -1.0;
      if (kappa_ref == 0)
        kappa_ref = kappa_ab;  // the (1,2) pair comes first
      else
        require(kappa_ab == kappa_ref, Errc::gram_mismatch,
                "inconsistent orientation across pairs");
    }

  // Phase-chain consistency against the first basis vector.
  for (Index a = 1; a < dim; ++a)
    for (Index b = a + 1; b < dim; ++b) {
      const Complex chained = ephix(0, b) * std::conj(ephix(0, a));
      require(std::abs(chained - ephix(a, b)) <= 100 * tol,
              Errc::gram_mismatch, "pair phases are not chain-consistent");
    }

  WignerFit fit;
  fit.basis = basis;
  fit.kappa = kappa_ref < 0 ? -1 : 1;
  fit.phases.assign(static_cast<std::size_t>(dim), 0.0);
  for (Index a = 1; a < dim; ++a)
    fit.phases[static_cast<std::size_t>(a)] = std::arg(ephix(0, a));

  // Final verification over the whole family, triples included.
  const WignerTransform s = fit.transform();
  const Matrix s_inverse = s.gauge().inverse();
  for (std::size_t p = 0; p < n; ++p) {
    const Matrix mapped =
        devectorize(s_inverse * vectorize(family.projections[p].mat));
    require((mapped - images[p]).cwiseAbs().maxCoeff() <= 100 * tol,
            Errc::gram_mismatch,
            "images are not reproduced by any symmetry transform (failed at " +
                family.projections[p].label + ")");
  }
  return fit;
}

}  // namespace qdm
