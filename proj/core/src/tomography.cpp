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

#include "qdm/tomography.hpp"

#include <algorithm>
#include <random>

#include "qdm/probability.hpp"

namespace qdm {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::vector<Index> greedy_independent(const std::vector<Vector>& vectors,
                                      Index want, double rank_rel) {
  std::vector<Index> picked;
  Matrix stacked(vectors.empty() ? 0 : vectors.front().size(), want);
  Index filled = 0;
  for (std::size_t i = 0; i < vectors.size() && filled < want; ++i) {
    stacked.col(filled) = vectors[i];
    if (rank_by_svd(stacked.leftCols(filled + 1), rank_rel) == filled + 1) {
      picked.push_back(static_cast<Index>(i));
      ++filled;
    }
  }
  return picked;
}

std::string label_or_index(const std::string& label, const char* stem,
                           Index index) {
  return label.empty() ? std::string(stem) + std::to_string(index) : label;
}

}  // namespace

std::vector<Index> independent_states(const ModelRepresentation& rep,
                                      const Tolerances& tol) {
  rep.validate();
  std::vector<Vector> vectors;
  vectors.reserve(rep.states.size());
  for (const auto& s : rep.states) vectors.push_back(vectorize(s.mat));
  return greedy_independent(vectors, rep.dim * rep.dim, tol.rank_rel);
}

std::vector<Index> independent_effects(const ModelRepresentation& rep,
                                       const Tolerances& tol) {
  rep.validate();
  std::vector<Vector> vectors;
  vectors.reserve(rep.effects.size());
  for (const auto& e : rep.effects) vectors.push_back(vectorize(e.mat));
  return greedy_independent(vectors, rep.dim * rep.dim, tol.rank_rel);
}

FiducialFrame frame_from_rep(const ModelRepresentation& rep,
                             const std::vector<Index>& state_idx,
                             const std::vector<Index>& effect_idx,
                             const Tolerances& tol) {
  rep.validate();
  const Index d2 = rep.dim * rep.dim;
  require(static_cast<Index>(state_idx.size()) == d2, Errc::not_complete,
          "need exactly dim^2 fiducial states, got " +
              std::to_string(state_idx.size()));
  require(static_cast<Index>(effect_idx.size()) == d2, Errc::not_complete,
          "need exactly dim^2 fiducial effects, got " +
              std::to_string(effect_idx.size()));

  FiducialFrame frame;
  frame.m_in.resize(d2, d2);
  frame.m_out.resize(d2, d2);
  for (Index c = 0; c < d2; ++c) {
    const Index i = state_idx[static_cast<std::size_t>(c)];
    require(i >= 0 && i < rep.n_states(), Errc::index_out_of_range,
            "fiducial state index " + std::to_string(i));
    frame.m_in.col(c) = vectorize(rep.states[static_cast<std::size_t>(i)].mat);
  }
  for (Index r = 0; r < d2; ++r) {
    const Index k = effect_idx[static_cast<std::size_t>(r)];
    require(k >= 0 && k < rep.n_effects(), Errc::index_out_of_range,
            "fiducial effect index " + std::to_string(k));
    frame.m_out.row(r) =
        vectorize(rep.effects[static_cast<std::size_t>(k)].mat).adjoint();
  }
  require(rank_by_svd(frame.m_in, tol.rank_rel) == d2, Errc::not_complete,
          "fiducial states are not linearly independent");
  require(rank_by_svd(frame.m_out, tol.rank_rel) == d2, Errc::not_complete,
          "fiducial effects are not linearly independent");
  return frame;
}

namespace {

GstDataset collect_impl(const ModelRepresentation& rep,
                        std::vector<Index> fiducial_states,
                        std::vector<Index> fiducial_effects,
                        const Tolerances& tol) {
  rep.validate();
  // Validates completeness as a side effect.
  frame_from_rep(rep, fiducial_states, fiducial_effects, tol);
  const Index d2 = rep.dim * rep.dim;

  GstDataset ds;
  ds.dim = rep.dim;
  ds.fiducial_states = std::move(fiducial_states);
  ds.fiducial_effects = std::move(fiducial_effects);

  auto prob0 = [&](Index k, Index i) {
    return probability_raw(rep, i, {}, k);
  };
  auto prob1 = [&](Index k, Index j, Index i) {
    return probability_raw(rep, i, {j}, k);
  };

  ds.gram.resize(d2, d2);
  for (Index r = 0; r < d2; ++r)
    for (Index c = 0; c < d2; ++c)
      ds.gram(r, c) = prob0(ds.fiducial_effects[static_cast<std::size_t>(r)],
                            ds.fiducial_states[static_cast<std::size_t>(c)]);

  for (Index j = 0; j < rep.n_maps(); ++j) {
    RealMatrix sandwich(d2, d2);
    for (Index r = 0; r < d2; ++r)
      for (Index c = 0; c < d2; ++c)
        sandwich(r, c) =
            prob1(ds.fiducial_effects[static_cast<std::size_t>(r)], j,
                  ds.fiducial_states[static_cast<std::size_t>(c)]);
    ds.map_grams.emplace_back(
        label_or_index(rep.maps[static_cast<std::size_t>(j)].label, "M", j),
        std::move(sandwich));
  }

  for (Index i = 0; i < rep.n_states(); ++i) {
    if (std::find(ds.fiducial_states.begin(), ds.fiducial_states.end(), i) !=
        ds.fiducial_states.end())
      continue;
    RealVector column(d2);
    for (Index r = 0; r < d2; ++r)
      column(r) = prob0(ds.fiducial_effects[static_cast<std::size_t>(r)], i);
    ds.extra_states.emplace_back(
        label_or_index(rep.states[static_cast<std::size_t>(i)].label, "rho", i),
        std::move(column));
  }
  for (Index k = 0; k < rep.n_effects(); ++k) {
    if (std::find(ds.fiducial_effects.begin(), ds.fiducial_effects.end(), k) !=
        ds.fiducial_effects.end())
      continue;
    RealVector row(d2);
    for (Index c = 0; c < d2; ++c)
      row(c) = prob0(k, ds.fiducial_states[static_cast<std::size_t>(c)]);
    ds.extra_effects.emplace_back(
        label_or_index(rep.effects[static_cast<std::size_t>(k)].label, "E", k),
        std::move(row));
  }
  return ds;
}

}  // namespace

GstDataset collect_dataset(const ModelRepresentation& rep,
                           std::vector<Index> fiducial_states,
                           std::vector<Index> fiducial_effects,
                           const Tolerances& tol) {
  return collect_impl(rep, std::move(fiducial_states),
                      std::move(fiducial_effects), tol);
}

GstDataset sample_dataset(const ModelRepresentation& rep,
                          std::vector<Index> fiducial_states,
                          std::vector<Index> fiducial_effects, long shots,
                          std::uint64_t seed, const Tolerances& tol) {
  require(shots >= 1, Errc::invalid_argument, "shots must be at least 1");
  GstDataset ds = collect_impl(rep, std::move(fiducial_states),
                               std::move(fiducial_effects), tol);
  ds.kind = DatasetKind::sampled;
  ds.shots = shots;
  ds.seed = seed;

  std::uint64_t counter = 0;
  auto flip = [&](double p) {
    std::mt19937_64 rng(splitmix64(seed ^ splitmix64(counter++)));
    std::binomial_distribution<long> binomial(shots, std::clamp(p, 0.0, 1.0));
    return static_cast<double>(binomial(rng)) / static_cast<double>(shots);
  };

  for (Index r = 0; r < ds.gram.rows(); ++r)
    for (Index c = 0; c < ds.gram.cols(); ++c)
      ds.gram(r, c) = flip(ds.gram(r, c));
  for (auto& [label, sandwich] : ds.map_grams)
    for (Index r = 0; r < sandwich.rows(); ++r)
      for (Index c = 0; c < sandwich.cols(); ++c)
        sandwich(r, c) = flip(sandwich(r, c));
  for (auto& [label, column] : ds.extra_states)
    for (Index r = 0; r < column.size(); ++r) column(r) = flip(column(r));
  for (auto& [label, row] : ds.extra_effects)
    for (Index c = 0; c < row.size(); ++c) row(c) = flip(row(c));
  return ds;
}

ModelRepresentation lgst_reconstruct(const GstDataset& dataset,
                                     const Tolerances& tol) {
  const Index d = dataset.dim;
  const Index d2 = d * d;
  require(d >= 2, Errc::invalid_argument, "dataset dimension must be >= 2");
  require(dataset.gram.rows() == d2 && dataset.gram.cols() == d2,
          Errc::dimension_mismatch, "Gram matrix must be dim^2 x dim^2");

  const Matrix gram = dataset.gram.cast<Complex>();
  const double cond = condition_number(gram);
  require(cond <= tol.cond_limit, Errc::ill_conditioned,
          "Gram matrix condition number " + std::to_string(cond) +
              " exceeds the gate; fiducials too collinear");
  const Matrix gram_inverse = gram.partialPivLu().inverse();

  ModelRepresentation rep;
  rep.dim = d;
  rep.label = "lgst reconstruction";

  // Data gauge: fiducial states are coordinate vectors, fiducial effects
  // are the rows of the Gram matrix.
  for (Index c = 0; c < d2; ++c) {
    Vector unit = Vector::Zero(d2);
    unit(c) = 1.0;
    rep.states.push_back({devectorize(unit), "f" + std::to_string(c)});
  }
  for (const auto& [label, column] : dataset.extra_states)
    rep.states.push_back(
        {devectorize(gram_inverse * column.cast<Complex>()), label});

  for (const auto& [label, sandwich] : dataset.map_grams)
    rep.maps.push_back(QuantumMap::from_superop(
        gram_inverse * sandwich.cast<Complex>(), label));

  for (Index r = 0; r < d2; ++r) {
    // Row r of the (real) Gram matrix is <<E_r| in the data gauge.
    const Vector row = dataset.gram.row(r).transpose().cast<Complex>();
    rep.effects.push_back({devectorize(row), "g" + std::to_string(r)});
  }
  for (const auto& [label, row] : dataset.extra_effects)
    rep.effects.push_back({devectorize(row.cast<Complex>()), label});

  return rep;
}

ModelRepresentation gauge_fix(const ModelRepresentation& rep,
                              const FiducialFrame& prior,
                              const Tolerances& tol) {
  rep.validate();
  const Index d2 = rep.dim * rep.dim;
  require(prior.m_in.rows() == d2 && prior.m_in.cols() == d2,
          Errc::dimension_mismatch, "prior frame dimension mismatch");
  require(rank_by_svd(prior.m_in, tol.rank_rel) == d2, Errc::not_complete,
          "prior frame is not complete");

  const std::vector<Index> state_idx = independent_states(rep, tol);
  require(static_cast<Index>(state_idx.size()) == d2, Errc::not_complete,
          "representation does not contain dim^2 independent states");
  Matrix m_in(d2, d2);
  for (Index c = 0; c < d2; ++c)
    m_in.col(c) =
        vectorize(rep.states[static_cast<std::size_t>(state_idx[c])].mat);

  // apply_gauge sends states through the inverse, so the gauge matrix that
  // moves the current fiducials onto the prior ones is m_in * prior^-1.
  const GaugeTransform fix(m_in * prior.m_in.partialPivLu().inverse());
  return apply_gauge(rep, fix);
}

}  // namespace qdm
