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

// Command-line front end: model generation, physicality and uniqueness
// checks, probability tables, gauge application, equivalence tests and
// linear-inversion tomography over JSON/CSV files.
//
// Exit codes: 0 success (or check passed / distributions equal), 1 a check
// reported false, 2 invalid input, 3 numerical failure.

#include <cmath>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qdm/io.hpp"
#include "qdm/random.hpp"

namespace {

constexpr int kExitFalse = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitNumerical = 3;

int exit_code_for(qdm::Errc code) {
  switch (code) {
    case qdm::Errc::invalid_argument:
    case qdm::Errc::index_out_of_range:
    case qdm::Errc::dimension_mismatch:
    case qdm::Errc::shape_mismatch:
    case qdm::Errc::cap_exceeded:
    case qdm::Errc::value_out_of_range:
      return kExitInvalid;
    default:
      return kExitNumerical;
  }
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty())
    std::cout << text;
  else
    qdm::io::write_text_file(path, text);
}

std::vector<qdm::Index> to_indices(const std::vector<long>& values) {
  return {values.begin(), values.end()};
}

struct ToleranceFlags {
  qdm::Tolerances tol;
  void attach(CLI::App* app) {
    app->add_option("--tol-herm", tol.herm, "Hermiticity tolerance");
    app->add_option("--tol-trace", tol.trace, "Trace tolerance");
    app->add_option("--tol-psd", tol.psd, "Positivity tolerance");
    app->add_option("--tol-prob", tol.prob, "Probability range tolerance");
    app->add_option("--tol-unitary", tol.unitary, "Unitarity tolerance");
    app->add_option("--tol-rank", tol.rank_rel,
                    "Relative singular value cutoff for rank decisions");
    app->add_option("--tol-singular", tol.singular_eig,
                    "Eigenvalue treated as zero in singularity checks");
    app->add_option("--tol-table", tol.table,
                    "Entrywise tolerance for distribution comparisons");
  }
};

std::string gauge_class_name(const qdm::TransformKind kind) {
  switch (kind) {
    case qdm::TransformKind::unitary: return "unitary";
    case qdm::TransformKind::antiunitary: return "antiunitary";
    case qdm::TransformKind::other: return "other";
  }
  return "other";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite quantum device models: construction, gauge "
               "transformations, uniqueness analysis and tomography"};
  app.require_subcommand(1);

  // ---- gen ----------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "Generate a random model");
  long gen_dim = 2, gen_states = 3, gen_maps = 2, gen_effects = 3;
  std::uint64_t gen_seed = 0;
  long gen_kraus = 0;
  bool gen_pi_qpt = false, gen_unitary_complete = false;
  std::string gen_label, gen_out;
  std::vector<long> gen_pure, gen_singular_states, gen_singular_maps,
      gen_singular_effects;
  gen->add_option("--dim", gen_dim, "Hilbert space dimension")->required();
  gen->add_option("--states", gen_states, "Number of states");
  gen->add_option("--maps", gen_maps, "Number of maps");
  gen->add_option("--effects", gen_effects, "Number of effects");
  gen->add_option("--seed", gen_seed, "Generator seed");
  gen->add_option("--kraus", gen_kraus, "Kraus operators per map");
  gen->add_flag("--pi-qpt", gen_pi_qpt,
                "Use the process-tomography projection family as states "
                "and effects");
  gen->add_flag("--unitary-complete", gen_unitary_complete,
                "Set the declared unitary-coverage flag");
  gen->add_option("--pure-state", gen_pure, "Indices of rank-one states");
  gen->add_option("--singular-state", gen_singular_states,
                  "Indices of rank-deficient states");
  gen->add_option("--singular-map", gen_singular_maps,
                  "Indices of maps with singular Choi matrices");
  gen->add_option("--singular-effect", gen_singular_effects,
                  "Indices of singular effects");
  gen->add_option("--label", gen_label, "Model label");
  gen->add_option("-o,--output", gen_out, "Output path (default stdout)");

  // ---- check --------------------------------------------------------
  auto* check = app.add_subcommand(
      "check", "Physicality report and uniqueness verdict");
  std::string check_model, check_out;
  ToleranceFlags check_tol;
  check->add_option("model", check_model, "Model JSON file")->required();
  check->add_option("-o,--output", check_out, "Output path (default stdout)");
  check_tol.attach(check);

  // ---- prob ---------------------------------------------------------
  auto* prob = app.add_subcommand("prob", "Probability table");
  std::string prob_model, prob_out;
  long prob_maxlen = 3;
  long prob_shots = 0;
  std::uint64_t prob_seed = 0;
  std::size_t prob_cap = qdm::kDefaultTableCap;
  bool prob_json = false, prob_csv = false;
  prob->add_option("model", prob_model, "Model JSON file")->required();
  prob->add_option("-N,--max-len", prob_maxlen, "Maximum sequence length");
  prob->add_option("--shots", prob_shots,
                   "Sample binomial frequencies at this shot count");
  prob->add_option("--seed", prob_seed, "Sampling seed");
  prob->add_option("--cap", prob_cap, "Entry-count cap");
  prob->add_flag("--json", prob_json, "Emit JSON instead of CSV");
  prob->add_flag("--csv", prob_csv, "Emit CSV (default)");
  prob->add_option("-o,--output", prob_out, "Output path (default stdout)");

  // ---- gauge --------------------------------------------------------
  auto* gauge = app.add_subcommand("gauge", "Apply a gauge to a model");
  std::string gauge_model, gauge_file, gauge_out;
  bool gauge_invert = false;
  gauge->add_option("model", gauge_model, "Model JSON file")->required();
  gauge->add_option("gauge", gauge_file, "Gauge JSON file")->required();
  gauge->add_flag("--inverse", gauge_invert, "Apply the inverse gauge");
  gauge->add_option("-o,--output", gauge_out, "Output path (default stdout)");

  // ---- counterexample ------------------------------------------------
  auto* cex = app.add_subcommand(
      "counterexample",
      "Distribution-equivalent physical model with different spectra");
  std::string cex_model, cex_out;
  double cex_fidelity = 0;
  ToleranceFlags cex_tol;
  cex->add_option("model", cex_model, "Model JSON file")->required();
  auto* cex_fidelity_option =
      cex->add_option("--F", cex_fidelity, "Fidelity inside (1, F_max]");
  cex->add_option("-o,--output", cex_out, "Output path (default stdout)");
  cex_tol.attach(cex);

  // ---- equiv ---------------------------------------------------------
  auto* equiv = app.add_subcommand(
      "equiv", "Distribution equivalence and relating-gauge class");
  std::string equiv_a, equiv_b, equiv_out;
  long equiv_maxlen = 3;
  double equiv_tol_value = 1e-9;
  ToleranceFlags equiv_tol;
  equiv->add_option("a", equiv_a, "First model JSON file")->required();
  equiv->add_option("b", equiv_b, "Second model JSON file")->required();
  equiv->add_option("-N,--max-len", equiv_maxlen, "Maximum sequence length");
  equiv->add_option("--tol", equiv_tol_value, "Entrywise tolerance");
  equiv->add_option("-o,--output", equiv_out, "Output path (default stdout)");
  equiv_tol.attach(equiv);

  // ---- pi-set --------------------------------------------------------
  auto* piset = app.add_subcommand("pi-set", "Canonical projection family");
  long piset_dim = 2;
  bool piset_qpt = false;
  std::string piset_out;
  piset->add_option("--dim", piset_dim, "Hilbert space dimension")->required();
  piset->add_flag("--qpt", piset_qpt, "Emit the d^2 tomography subset");
  piset->add_option("-o,--output", piset_out, "Output path (default stdout)");

  // ---- gst -----------------------------------------------------------
  auto* gst = app.add_subcommand(
      "gst", "Linear-inversion gate-set tomography");
  std::string gst_input, gst_prior, gst_out, gst_gauge_out;
  std::vector<long> gst_fid_states, gst_fid_effects;
  long gst_shots = 0;
  std::uint64_t gst_seed = 0;
  bool gst_print_cond = false;
  ToleranceFlags gst_tol;
  gst->add_option("input", gst_input, "Model or dataset JSON file")->required();
  gst->add_option("--fiducial-states", gst_fid_states,
                  "Fiducial state indices (comma separated)")
      ->delimiter(',');
  gst->add_option("--fiducial-effects", gst_fid_effects,
                  "Fiducial effect indices (comma separated)")
      ->delimiter(',');
  gst->add_option("--prior", gst_prior,
                  "Model JSON file supplying the prior fiducial frame");
  gst->add_option("--shots", gst_shots, "Sample the dataset at this shot count");
  gst->add_option("--seed", gst_seed, "Sampling seed");
  gst->add_flag("--print-cond", gst_print_cond,
                "Print the Gram condition number to stderr");
  gst->add_option("-o,--output", gst_out, "Output path (default stdout)");
  gst->add_option("--gauge-out", gst_gauge_out,
                  "Write the gauge applied by the prior fit");
  gst_tol.attach(gst);

  // ---- sample --------------------------------------------------------
  auto* sample = app.add_subcommand(
      "sample", "Finite-shot dataset for gate-set tomography");
  std::string sample_model, sample_out;
  std::vector<long> sample_fid_states, sample_fid_effects;
  long sample_shots = 1000;
  std::uint64_t sample_seed = 0;
  ToleranceFlags sample_tol;
  sample->add_option("model", sample_model, "Model JSON file")->required();
  sample->add_option("--fiducial-states", sample_fid_states,
                     "Fiducial state indices")
      ->delimiter(',');
  sample->add_option("--fiducial-effects", sample_fid_effects,
                     "Fiducial effect indices")
      ->delimiter(',');
  sample->add_option("--shots", sample_shots, "Shot count")->required();
  sample->add_option("--seed", sample_seed, "Sampling seed");
  sample->add_option("-o,--output", sample_out, "Output path (default stdout)");
  sample_tol.attach(sample);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (gen->parsed()) {
      qdm::ModelRepresentation rep;
      if (gen_pi_qpt) {
        const qdm::ProjectionSet family = qdm::projection_set_qpt(gen_dim);
        rep.dim = gen_dim;
        rep.label = gen_label;
        for (const auto& member : family.projections) {
          rep.states.push_back({member.mat, member.label});
          rep.effects.push_back({member.mat, member.label});
        }
        qdm::Rng rng(gen_seed);
        if (gen_maps <= 0) {
          rep.maps.push_back(qdm::identity_map(gen_dim));
        } else {
          for (long j = 0; j < gen_maps; ++j)
            rep.maps.push_back(qdm::QuantumMap::from_unitary(
                qdm::random_unitary_matrix(gen_dim, rng),
                "U" + std::to_string(j)));
        }
      } else {
        qdm::RandomModelOptions options;
        options.kraus_count = gen_kraus;
        options.pure_states = to_indices(gen_pure);
        options.singular_states = to_indices(gen_singular_states);
        options.singular_maps = to_indices(gen_singular_maps);
        options.singular_effects = to_indices(gen_singular_effects);
        rep = qdm::random_model(gen_dim, gen_states, gen_maps, gen_effects,
                                gen_seed, options);
        if (!gen_label.empty()) rep.label = gen_label;
      }
      rep.unitary_complete = gen_unitary_complete;
      emit(qdm::io::validated_model_json(rep), gen_out);
      return 0;
    }

    if (check->parsed()) {
      const auto rep = qdm::io::read_model(check_model);
      const auto report = qdm::check_physical(rep, check_tol.tol);
      std::optional<qdm::UniquenessVerdict> verdict;
      if (report.pass) verdict = qdm::assess_uniqueness(rep, check_tol.tol);
      emit(qdm::io::check_verdict_to_json(report, verdict), check_out);
      return report.pass ? 0 : kExitFalse;
    }

    if (prob->parsed()) {
      const auto rep = qdm::io::read_model(prob_model);
      const qdm::ProbabilityTable table =
          prob_shots > 0
              ? qdm::sample_probability_table(rep, prob_maxlen, prob_shots,
                                              prob_seed, prob_cap)
              : qdm::probability_table(rep, prob_maxlen, prob_cap);
      emit(prob_json && !prob_csv ? qdm::io::table_to_json(table)
                                  : qdm::io::table_to_csv(table),
           prob_out);
      return 0;
    }

    if (gauge->parsed()) {
      const auto rep = qdm::io::read_model(gauge_model);
      qdm::GaugeTransform transform = qdm::io::read_gauge(gauge_file);
      if (gauge_invert) transform = qdm::inverse(transform);
      emit(qdm::io::validated_model_json(qdm::apply_gauge(rep, transform)),
           gauge_out);
      return 0;
    }

    if (cex->parsed()) {
      const auto rep = qdm::io::read_model(cex_model);
      const double window = qdm::max_depolarizing_fidelity(rep, cex_tol.tol);
      double fidelity = cex_fidelity;
      if (cex_fidelity_option->count() == 0)
        fidelity =
            std::isfinite(window) ? std::min(0.5 * (1.0 + window), 2.0) : 2.0;
      const auto witness =
          qdm::depolarizing_counterexample(rep, fidelity, cex_tol.tol);
      std::cerr << "F=" << fidelity << " F_max=" << window << "\n";
      emit(qdm::io::validated_model_json(witness), cex_out);
      return 0;
    }

    if (equiv->parsed()) {
      const auto rep_a = qdm::io::read_model(equiv_a);
      const auto rep_b = qdm::io::read_model(equiv_b);
      const auto comparison =
          qdm::distributions_equal(rep_a, rep_b, equiv_maxlen, equiv_tol_value);
      std::string gauge_class = "none";
      if (comparison.equal && rep_a.dim == rep_b.dim) {
        try {
          const auto transform =
              qdm::recover_gauge_gst(rep_a, rep_b, equiv_tol.tol);
          gauge_class = gauge_class_name(
              qdm::classify_transform(transform, equiv_tol.tol).kind);
        } catch (const qdm::Error&) {
          gauge_class = "none";  // incomplete or inconsistent frames
        }
      }
      emit(qdm::io::equivalence_to_json(comparison, gauge_class), equiv_out);
      return comparison.equal ? 0 : kExitFalse;
    }

    if (piset->parsed()) {
      const qdm::ProjectionSet set = piset_qpt
                                         ? qdm::projection_set_qpt(piset_dim)
                                         : qdm::projection_set(piset_dim);
      emit(qdm::io::projection_set_to_json(set), piset_out);
      return 0;
    }

    if (gst->parsed()) {
      const std::string text = qdm::io::read_text_file(gst_input);
      qdm::GstDataset dataset;
      if (qdm::io::looks_like_dataset(text)) {
        dataset = qdm::io::dataset_from_json(text);
      } else {
        const auto rep = qdm::io::model_from_json(text);
        std::vector<qdm::Index> fid_states = to_indices(gst_fid_states);
        std::vector<qdm::Index> fid_effects = to_indices(gst_fid_effects);
        if (fid_states.empty())
          fid_states = qdm::independent_states(rep, gst_tol.tol);
        if (fid_effects.empty())
          fid_effects = qdm::independent_effects(rep, gst_tol.tol);
        dataset = gst_shots > 0
                      ? qdm::sample_dataset(rep, fid_states, fid_effects,
                                            gst_shots, gst_seed, gst_tol.tol)
                      : qdm::collect_dataset(rep, fid_states, fid_effects,
                                             gst_tol.tol);
      }
      if (gst_print_cond)
        std::cerr << "cond(g)="
                  << qdm::condition_number(dataset.gram.cast<qdm::Complex>())
                  << "\n";
      qdm::ModelRepresentation reconstruction =
          qdm::lgst_reconstruct(dataset, gst_tol.tol);
      if (!gst_prior.empty()) {
        const auto prior_rep = qdm::io::read_model(gst_prior);
        std::vector<qdm::Index> prior_states = to_indices(gst_fid_states);
        std::vector<qdm::Index> prior_effects = to_indices(gst_fid_effects);
        if (prior_states.empty())
          prior_states = qdm::independent_states(prior_rep, gst_tol.tol);
        if (prior_effects.empty())
          prior_effects = qdm::independent_effects(prior_rep, gst_tol.tol);
        const qdm::FiducialFrame prior = qdm::frame_from_rep(
            prior_rep, prior_states, prior_effects, gst_tol.tol);
        const auto fixed = qdm::gauge_fix(reconstruction, prior, gst_tol.tol);
        if (!gst_gauge_out.empty()) {
          const auto applied =
              qdm::recover_gauge_gst(reconstruction, fixed, gst_tol.tol);
          qdm::io::write_text_file(gst_gauge_out,
                                   qdm::io::validated_gauge_json(applied));
        }
        reconstruction = fixed;
      } else if (!gst_gauge_out.empty()) {
        qdm::io::write_gauge(gst_gauge_out,
                             qdm::identity_gauge(reconstruction.dim));
      }
      emit(qdm::io::validated_model_json(reconstruction), gst_out);
      return 0;
    }

    if (sample->parsed()) {
      const auto rep = qdm::io::read_model(sample_model);
      std::vector<qdm::Index> fid_states = to_indices(sample_fid_states);
      std::vector<qdm::Index> fid_effects = to_indices(sample_fid_effects);
      if (fid_states.empty())
        fid_states = qdm::independent_states(rep, sample_tol.tol);
      if (fid_effects.empty())
        fid_effects = qdm::independent_effects(rep, sample_tol.tol);
      const auto dataset = qdm::sample_dataset(
          rep, fid_states, fid_effects, sample_shots, sample_seed,
          sample_tol.tol);
      emit(qdm::io::validated_dataset_json(dataset), sample_out);
      return 0;
    }
  } catch (const qdm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return 0;
}
