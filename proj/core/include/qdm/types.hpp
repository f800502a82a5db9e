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

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qdm {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

enum class Errc {
  index_out_of_range,
  dimension_mismatch,
  value_out_of_range,
  cap_exceeded,
  invalid_argument,
  singular_transform,
  not_unitary,
  not_hptp,
  not_physical,
  not_complete,
  not_equivalent,
  inconsistent_gauge,
  shape_mismatch,
  not_projection,
  gram_mismatch,
  fidelity_out_of_window,
  trivial_model,
  trivial_matrix,
  ill_conditioned,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& what);

inline void require(bool condition, Errc code, const std::string& what) {
  if (!condition) fail(code, what);
}

/// Central numeric policy. Every check in the library reads its threshold
/// from here so the CLI can override them in one place.
struct Tolerances {
  double herm = 1e-9;
  double trace = 1e-9;
  double psd = 1e-9;
  double prob = 1e-9;
  double unitary = 1e-9;
  double rank_rel = 1e-8;     // singular value cutoff, relative to largest
  double singular_eig = 1e-8; // eigenvalue treated as zero in det products
  double inverse = 1e-10;     // gauge inverse verification
  double recover = 1e-8;      // gauge / Wigner recovery agreement
  double angle = 1e-9;        // eigenphase comparisons, radians
  double cond_limit = 1e8;    // inversion condition-number gate
  double table = 1e-9;        // distribution comparisons
};

const Tolerances& default_tol();

}  // namespace qdm
