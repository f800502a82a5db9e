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

#include <doctest.h>

#include <algorithm>

#include "qdm/equivalence.hpp"
#include "qdm/probability.hpp"
#include "qdm/random.hpp"
#include "support.hpp"

using namespace qdm;
using namespace qdm::test;

TEST_CASE("gauge construction rejects singular transforms") {
  Matrix singular = Matrix::Zero(4, 4);
  singular(0, 0) = 1.0;
  CHECK_THROWS_AS(GaugeTransform{singular}, Error);

  Rng rng(2);
  const GaugeTransform t = random_invertible_gauge(2, rng);
  CHECK(max_abs_diff(t.superop() * t.inverse(), Matrix::Identity(4, 4)) <
        1e-10);
}

TEST_CASE("apply_gauge") {
  const ModelRepresentation rep = qubit_lambda01_model();

  SUBCASE("identity gauge is a no-op") {
    const ModelRepresentation out = apply_gauge(rep, identity_gauge(2));
    for (std::size_t i = 0; i < rep.states.size(); ++i)
      CHECK(max_abs_diff(out.states[i].mat, rep.states[i].mat) < 1e-14);
    for (std::size_t k = 0; k < rep.effects.size(); ++k)
      CHECK(max_abs_diff(out.effects[k].mat, rep.effects[k].mat) < 1e-14);
  }

  SUBCASE("unitary conjugation preserves physicality and state spectra") {
    Rng rng(5);
    const GaugeTransform u =
        WignerTransform{random_unitary_matrix(2, rng), false}.gauge();
    const ModelRepresentation out = apply_gauge(rep, u);
    CHECK(check_physical(out).pass);
    for (std::size_t i = 0; i < rep.states.size(); ++i) {
      const RealVector before = hermitian_eigenvalues(rep.states[i].mat);
      const RealVector after = hermitian_eigenvalues(out.states[i].mat);
      CHECK((before - after).cwiseAbs().maxCoeff() < 1e-12);
    }
  }

  SUBCASE("inverse depolarizing gauge inside the window stays physical") {
    const ModelRepresentation out =
        apply_gauge(rep, depolarizing(1.0 / 1.2, 2));
    CHECK(check_physical(out).pass);
    // The transformed spectra move as fidelity * eig + (1-fidelity)/d.
    const RealVector eig = hermitian_eigenvalues(out.states[0].mat);
    CHECK(eig(0) == doctest::Approx(1.2 * 0.1 - 0.1).epsilon(1e-12));
  }

  SUBCASE("round trip and composition") {
    Rng rng(6);
    const GaugeTransform t = random_invertible_gauge(2, rng);
    const ModelRepresentation there = apply_gauge(rep, t);
    const ModelRepresentation back = apply_gauge(there, inverse(t));
    for (std::size_t i = 0; i < rep.states.size(); ++i)
      CHECK(max_abs_diff(back.states[i].mat, rep.states[i].mat) < 1e-10);
    for (std::size_t j = 0; j < rep.maps.size(); ++j)
      CHECK(max_abs_diff(back.maps[j].superop(), rep.maps[j].superop()) <
            1e-10);
    for (std::size_t k = 0; k < rep.effects.size(); ++k)
      CHECK(max_abs_diff(back.effects[k].mat, rep.effects[k].mat) < 1e-10);

    const GaugeTransform t2 = random_invertible_gauge(2, rng);
    const ModelRepresentation two_steps = apply_gauge(there, t2);
    const ModelRepresentation composed = apply_gauge(rep, compose(t, t2));
    for (std::size_t i = 0; i < rep.states.size(); ++i)
      CHECK(max_abs_diff(two_steps.states[i].mat, composed.states[i].mat) <
            1e-10);
    for (std::size_t k = 0; k < rep.effects.size(); ++k)
      CHECK(max_abs_diff(two_steps.effects[k].mat, composed.effects[k].mat) <
            1e-10);
  }
}

TEST_CASE("dual transforms") {
  CHECK(max_abs_diff(dual(identity_gauge(2)).superop(),
                     Matrix::Identity(4, 4)) == 0.0);

  Rng rng(8);
  SUBCASE("dual of a unitary conjugation conjugates the other way") {
    const Matrix u = random_unitary_matrix(3, rng);
    const GaugeTransform t = WignerTransform{u, false}.gauge();
    const GaugeTransform t_dual = dual(t);
    // Defining identity Tr[T*(A) B] = Tr[A T(B)] on random matrices.
    for (int trial = 0; trial < 10; ++trial) {
      const Matrix a = ginibre(3, 3, rng);
      const Matrix b = ginibre(3, 3, rng);
      const Complex lhs =
          (devectorize(t_dual.superop() * vectorize(a)) * b).trace();
      const Complex rhs = (a * devectorize(t.superop() * vectorize(b))).trace();
      CHECK(std::abs(lhs - rhs) < 1e-10);
    }
    CHECK(max_abs_diff(t_dual.superop(),
                       WignerTransform{u.adjoint().eval(), false}.gauge()
                           .superop()) < 1e-12);
  }

  SUBCASE("the mixing family is self-dual and fixes the identity") {
    const GaugeTransform t = depolarizing(0.7, 2);
    CHECK(max_abs_diff(dual(t).superop(), t.superop()) < 1e-14);
    CHECK(max_abs_diff(devectorize(dual(t).superop() *
                                   vectorize(identity_matrix(2))),
                       identity_matrix(2)) < 1e-14);
  }

  SUBCASE("dual is an involution") {
    const GaugeTransform t = random_invertible_gauge(2, rng);
    CHECK(max_abs_diff(dual(dual(t)).superop(), t.superop()) < 1e-12);
  }
}

TEST_CASE("depolarizing family") {
  CHECK(max_abs_diff(depolarizing(1.0, 2).superop(), Matrix::Identity(4, 4)) <
        1e-15);
  CHECK(max_abs_diff(compose(depolarizing(2.0, 2), depolarizing(0.5, 2))
                         .superop(),
                     Matrix::Identity(4, 4)) < 1e-14);
  CHECK_THROWS_AS(depolarizing(0.0, 2), Error);
  CHECK_THROWS_AS(depolarizing_map(1.5, 2), Error);

  SUBCASE("half-mixing of a pure state") {
    const Matrix out = depolarizing_map(0.5, 2).apply(ket_bra(2, 0, 0));
    CHECK(max_abs_diff(out, diag({0.75, 0.25})) < 1e-15);
  }

  SUBCASE("one-parameter group law") {
    Rng rng(4);
    std::uniform_real_distribution<double> window(0.2, 2.0);
    for (int trial = 0; trial < 20; ++trial) {
      const double f1 = window(rng);
      const double f2 = window(rng);
      CHECK(max_abs_diff(
                depolarizing_superop(f1, 3) * depolarizing_superop(f2, 3),
                depolarizing_superop(f1 * f2, 3)) < 1e-12);
    }
    CHECK(max_abs_diff(depolarizing(0.4, 3).inverse(),
                       depolarizing_superop(2.5, 3)) < 1e-12);
  }
}

TEST_CASE("largest admissible fidelity") {
  SUBCASE("a pure state pins the window at one") {
    ModelRepresentation rep = qubit_lambda01_model();
    rep.states.push_back({ket_bra(2, 0, 0), "pure"});
    CHECK(max_depolarizing_fidelity(rep) == doctest::Approx(1.0).epsilon(1e-9));
  }

  SUBCASE("state spectrum {0.9, 0.1} with comfortable maps gives 1.25") {
    CHECK(max_depolarizing_fidelity(qubit_lambda01_model()) ==
          doctest::Approx(1.25).epsilon(1e-12));
  }

  SUBCASE("the identity map's Choi matrix is singular") {
    ModelRepresentation rep;
    rep.dim = 2;
    rep.states.push_back({0.5 * identity_matrix(2), ""});
    rep.maps.push_back(identity_map(2));
    rep.effects.push_back({0.5 * identity_matrix(2), ""});
    CHECK(max_depolarizing_fidelity(rep) == doctest::Approx(1.0).epsilon(1e-9));
  }

  SUBCASE("maximally mixed spectra reach the infinity sentinel") {
    ModelRepresentation rep;
    rep.dim = 2;
    rep.states.push_back({0.5 * identity_matrix(2), ""});
    rep.maps.push_back(depolarizing_map(0.0, 2));
    rep.effects.push_back({ket_bra(2, 0, 0), ""});
    CHECK(std::isinf(max_depolarizing_fidelity(rep)));
  }

  SUBCASE("nonphysical input is rejected") {
    ModelRepresentation rep = qubit_lambda01_model();
    rep.states[0].mat = diag({1.1, -0.1});
    CHECK_THROWS_AS(max_depolarizing_fidelity(rep), Error);
  }
}

TEST_CASE("Hermiticity- and trace-preservation") {
  for (const double fidelity : {0.4, 1.0, 1.7}) {
    const HptpReport report = is_hptp(depolarizing(fidelity, 2));
    CHECK(report.pass());
  }

  SUBCASE("one-sided multiplication by a non-Hermitian matrix fails") {
    Matrix a = mat2(1.0, Complex(0, 0.5), 0.0, 1.0);
    const GaugeTransform t(kron(a, identity_matrix(2)));
    CHECK_FALSE(is_hptp(t).pass());
  }

  SUBCASE("the transpose map is HPTP but not completely positive") {
    const GaugeTransform w = transpose_map(2);
    CHECK(is_hptp(w).pass());
    CHECK(hermitian_eigenvalues(choi_from_superop(w.superop()))(0) ==
          doctest::Approx(-1.0).epsilon(1e-12));
  }

  SUBCASE("physical gauges are HPTP") {
    // Physical-to-physical transforms of complete models must pass.
    Rng rng(31);
    const ModelRepresentation rep = qubit_lambda01_model();
    const double window = max_depolarizing_fidelity(rep);
    for (int trial = 0; trial < 25; ++trial) {
      const GaugeTransform t = random_physical_gauge(2, rng, window);
      CHECK(check_physical(apply_gauge(rep, t)).pass);
      CHECK(is_hptp(t).pass());
    }
  }
}

TEST_CASE("weighted Kraus decomposition") {
  SUBCASE("identity map has the single term 2 * (I/sqrt(2))") {
    const WeightedKrausDecomposition decomposition =
        weighted_kraus(identity_gauge(2));
    REQUIRE(decomposition.terms.size() == 1);
    CHECK(decomposition.terms[0].weight == doctest::Approx(2.0).epsilon(1e-12));
    const Matrix expected = identity_matrix(2) / std::sqrt(2.0);
    const Matrix got = decomposition.terms[0].op;
    // The eigenvector is defined up to phase.
    CHECK(max_abs_diff(fix_global_phase(got), expected) < 1e-12);
  }

  SUBCASE("transpose map weights are {1, 1, 1, -1}") {
    const WeightedKrausDecomposition decomposition =
        weighted_kraus(transpose_map(2));
    REQUIRE(decomposition.terms.size() == 4);
    std::vector<double> weights;
    for (const auto& term : decomposition.terms)
      weights.push_back(term.weight);
    std::sort(weights.begin(), weights.end());
    CHECK(weights[0] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(weights[1] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(weights[3] == doctest::Approx(1.0).epsilon(1e-12));
  }

  SUBCASE("completely positive members have nonnegative weights") {
    for (const auto& term : weighted_kraus(depolarizing(0.5, 2)).terms)
      CHECK(term.weight >= 0.0);
  }

  SUBCASE("reassembly and completeness on random HPTP gauges") {
    Rng rng(13);
    for (int trial = 0; trial < 10; ++trial) {
      const Index d = 2 + trial % 3;
      const GaugeTransform t = random_physical_gauge(d, rng, 1.3);
      const WeightedKrausDecomposition decomposition = weighted_kraus(t);
      CHECK(max_abs_diff(decomposition.reassembled_superop(d), t.superop()) <
            1e-10);
      CHECK(max_abs_diff(decomposition.completeness_sum(d),
                         identity_matrix(d)) < 1e-9);
    }
  }

  SUBCASE("non-HPTP transforms are rejected") {
    Matrix a = mat2(1.0, Complex(0, 0.5), 0.0, 1.0);
    CHECK_THROWS_AS(weighted_kraus(GaugeTransform(kron(a, identity_matrix(2)))),
                    Error);
  }
}

TEST_CASE("gauge invariance of probability tables") {
  Rng rng(17);
  for (int trial = 0; trial < 8; ++trial) {
    const Index d = 2 + trial % 2;
    const ModelRepresentation rep = random_model(d, 3, 2, 3, 300 + trial);
    const GaugeTransform t = random_invertible_gauge(d, rng);
    const DistributionComparison comparison =
        distributions_equal(rep, apply_gauge(rep, t), 3, 1e-9);
    CHECK(comparison.equal);
    CHECK(comparison.max_dev < 1e-9);
  }
}
