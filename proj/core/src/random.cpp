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

#include "qdm/random.hpp"

#include <algorithm>
#include <cmath>

namespace qdm {

Matrix ginibre(Index rows, Index cols, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(rows, cols);
  for (Index r = 0; r < rows; ++r)
    for (Index c = 0; c < cols; ++c) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      g(r, c) = Complex(re, im) / std::sqrt(2.0);
    }
  return g;
}

Matrix random_unitary_matrix(Index d, Rng& rng) {
  const Matrix g = ginibre(d, d, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index c = 0; c < d; ++c) {
    const Complex pivot = r(c, c);
    if (std::abs(pivot) > 0) q.col(c) *= pivot / std::abs(pivot);
  }
  return q;
}

Matrix random_density_matrix(Index d, Rng& rng, Index rank) {
  if (rank <= 0 || rank > d) rank = d;
  const Matrix g = ginibre(d, rank, rng);
  Matrix rho = g * g.adjoint();
  return rho / rho.trace();
}

Matrix random_effect_matrix(Index d, Rng& rng, bool singular) {
  const Matrix g = ginibre(d, singular ? d - 1 : d, rng);
  Matrix e = g * g.adjoint();
  const RealVector eig = hermitian_eigenvalues(e);
  // Top eigenvalue strictly inside (0, 1); keeps random effects away from
  // the POVM boundary.
  return e * (0.9 / eig(eig.size() - 1));
}

QuantumMap random_cptp_map(Index d, Rng& rng, Index kraus_count) {
  if (kraus_count <= 0) kraus_count = d * d;
  std::vector<Matrix> kraus;
  kraus.reserve(static_cast<std::size_t>(kraus_count));
  Matrix sum = Matrix::Zero(d, d);
  for (Index l = 0; l < kraus_count; ++l) {
    kraus.push_back(ginibre(d, d, rng));
    sum += kraus.back().adjoint() * kraus.back();
  }
  // Renormalize on the input side: K_l -> K_l sum^{-1/2}.
  auto [eigenvalues, eigenvectors] = hermitian_eig(sum);
  Matrix inv_sqrt = eigenvectors *
                    eigenvalues.cwiseSqrt().cwiseInverse().asDiagonal() *
                    eigenvectors.adjoint();
  for (Matrix& k : kraus) k = k * inv_sqrt;
  return QuantumMap::from_kraus(kraus);
}

ModelRepresentation random_model(Index dim, Index n_states, Index n_maps,
                                 Index n_effects, std::uint64_t seed,
                                 const RandomModelOptions& options) {
  require(dim >= 2, Errc::invalid_argument, "dimension must be at least 2");
  require(n_states >= 1 && n_effects >= 1, Errc::invalid_argument,
          "need at least one state and one effect");
  require(n_maps >= 0, Errc::invalid_argument, "negative map count");

  auto contains = [](const std::vector<Index>& list, Index i) {
    return std::find(list.begin(), list.end(), i) != list.end();
  };

  Rng rng(seed);
  ModelRepresentation rep;
  rep.dim = dim;
  rep.label = "random(seed=" + std::to_string(seed) + ")";

  for (Index i = 0; i < n_states; ++i) {
    Index rank = dim;
    if (contains(options.pure_states, i)) rank = 1;
    else if (contains(options.singular_states, i)) rank = dim - 1;
    rep.states.push_back(
        {random_density_matrix(dim, rng, rank), "rho" + std::to_string(i)});
  }
  for (Index j = 0; j < n_maps; ++j) {
    Index kraus_count =
        options.kraus_count > 0 ? options.kraus_count : dim * dim;
    if (contains(options.singular_maps, j))
      kraus_count = std::max<Index>(1, dim * dim - 1);
    QuantumMap map = random_cptp_map(dim, rng, kraus_count);
    map.label = "M" + std::to_string(j);
    rep.maps.push_back(std::move(map));
  }
  for (Index k = 0; k < n_effects; ++k) {
    const bool singular = contains(options.singular_effects, k);
    rep.effects.push_back(
        {random_effect_matrix(dim, rng, singular), "E" + std::to_string(k)});
  }
  return rep;
}

}  // namespace qdm
