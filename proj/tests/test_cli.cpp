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
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include "qdm/io.hpp"
#include "support.hpp"

namespace fs = std::filesystem;
using namespace qdm;
using namespace qdm::test;

namespace {

struct CliRun {
  int exit_code = -1;
  std::string out;
};

fs::path work_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("qdm_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

CliRun run(const std::string& args) {
  const fs::path out_path = work_dir() / "stdout.txt";
  const std::string command = std::string(QDM_CLI_PATH) + " " + args + " > " +
                              out_path.string() + " 2> " +
                              (work_dir() / "stderr.txt").string();
  const int status = std::system(command.c_str());
  CliRun result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_path);
  result.out.assign(std::istreambuf_iterator<char>(in),
                    std::istreambuf_iterator<char>());
  return result;
}

std::string path_of(const char* name) { return (work_dir() / name).string(); }

}  // namespace

TEST_CASE("gen produces schema-valid, reproducible models") {
  const std::string model = path_of("m.json");
  CHECK(run("gen --dim 2 --states 4 --maps 2 --effects 4 --seed 7 -o " + model)
            .exit_code == 0);
  const ModelRepresentation rep = io::read_model(model);
  CHECK(rep.n_states() == 4);
  CHECK(rep.n_maps() == 2);
  CHECK(rep.n_effects() == 4);
  CHECK(check_physical(rep).pass);

  const std::string again = path_of("m2.json");
  CHECK(run("gen --dim 2 --states 4 --maps 2 --effects 4 --seed 7 -o " + again)
            .exit_code == 0);
  CHECK(io::read_text_file(model) == io::read_text_file(again));

  const std::string changed = path_of("m3.json");
  run("gen --dim 2 --states 4 --maps 2 --effects 4 --seed 8 -o " + changed);
  CHECK(io::read_text_file(model) != io::read_text_file(changed));
}

TEST_CASE("gen --pi-qpt emits the projection family") {
  const std::string model = path_of("pi.json");
  CHECK(run("gen --pi-qpt --dim 3 --maps 0 --seed 1 -o " + model).exit_code ==
        0);
  const ModelRepresentation rep = io::read_model(model);
  const ProjectionSet family = projection_set_qpt(3);
  REQUIRE(rep.n_states() == family.size());
  for (Index i = 0; i < family.size(); ++i) {
    CHECK(max_abs_diff(rep.states[static_cast<std::size_t>(i)].mat,
                       family.projections[static_cast<std::size_t>(i)].mat) <
          1e-15);
    CHECK(max_abs_diff(rep.effects[static_cast<std::size_t>(i)].mat,
                       family.projections[static_cast<std::size_t>(i)].mat) <
          1e-15);
  }
}

TEST_CASE("check: verdicts and exit codes") {
  const std::string model = path_of("full_rank.json");
  run("gen --dim 2 --states 4 --maps 2 --effects 4 --seed 7 -o " + model);

  const std::string verdict = path_of("verdict.json");
  const CliRun ok = run("check " + model + " -o " + verdict);
  CHECK(ok.exit_code == 0);
  const std::string verdict_text = io::read_text_file(verdict);
  CHECK(verdict_text.find("\"status\": \"not_unique\"") != std::string::npos);
  CHECK(verdict_text.find("\"counterexample\"") != std::string::npos);

  SUBCASE("projection-family models are reported unique") {
    const std::string pi_model = path_of("pi2.json");
    run("gen --pi-qpt --dim 2 --maps 1 --seed 3 -o " + pi_model);
    const CliRun result = run("check " + pi_model);
    CHECK(result.exit_code == 0);
    CHECK(result.out.find("unique_by_projection_set") != std::string::npos);
  }

  SUBCASE("nonphysical models exit 1 with a report") {
    ModelRepresentation bad = io::read_model(model);
    bad.states[0].mat = diag({1.2, -0.2});
    const std::string bad_path = path_of("bad.json");
    io::write_model(bad_path, bad);
    const CliRun result = run("check " + bad_path);
    CHECK(result.exit_code == 1);
    CHECK(result.out.find("\"physical\": false") != std::string::npos);
  }
}

TEST_CASE("prob: tables, sampling, caps") {
  const std::string model = path_of("prob_model.json");
  run("gen --dim 2 --states 2 --maps 2 --effects 2 --seed 5 -o " + model);

  const CliRun table = run("prob " + model + " -N 2");
  CHECK(table.exit_code == 0);
  // 2 states * (1 + 2 + 4) sequences * 2 effects entries plus the header.
  const auto lines = std::count(table.out.begin(), table.out.end(), '\n');
  CHECK(lines == 2 * 7 * 2 + 1);
  CHECK(table.out.rfind("i,seq,k,p\n", 0) == 0);

  const CliRun repeat = run("prob " + model + " -N 2");
  CHECK(repeat.out == table.out);

  SUBCASE("sampled mode adds the shots column") {
    const CliRun sampled =
        run("prob " + model + " -N 1 --shots 100 --seed 4");
    CHECK(sampled.exit_code == 0);
    CHECK(sampled.out.rfind("i,seq,k,p,shots\n", 0) == 0);
  }

  SUBCASE("cap violations exit 2") {
    CHECK(run("prob " + model + " -N 2 --cap 3").exit_code == 2);
  }
}

TEST_CASE("gauge application and counterexamples") {
  const std::string model = path_of("gauge_model.json");
  run("gen --dim 2 --states 4 --maps 2 --effects 4 --seed 11 -o " + model);

  SUBCASE("unitary gauge file") {
    const std::string gauge_path = path_of("u_gauge.json");
    io::write_text_file(gauge_path, R"({
      "dim": 2, "kind": "unitary",
      "re": [[0, 1], [1, 0]], "im": [[0, 0], [0, 0]]
    })");
    const std::string rotated = path_of("rotated.json");
    CHECK(run("gauge " + model + " " + gauge_path + " -o " + rotated)
              .exit_code == 0);
    const CliRun equiv = run("equiv " + model + " " + rotated);
    CHECK(equiv.exit_code == 0);
    CHECK(equiv.out.find("\"gauge_class\": \"unitary\"") != std::string::npos);

    const std::string back = path_of("back.json");
    run("gauge " + rotated + " " + gauge_path + " --inverse -o " + back);
    const ModelRepresentation original = io::read_model(model);
    const ModelRepresentation returned = io::read_model(back);
    for (Index i = 0; i < original.n_states(); ++i)
      CHECK(max_abs_diff(original.states[static_cast<std::size_t>(i)].mat,
                         returned.states[static_cast<std::size_t>(i)].mat) <
            1e-10);
  }

  SUBCASE("counterexample is equivalent but not the same model") {
    const std::string witness = path_of("witness.json");
    CHECK(run("counterexample " + model + " -o " + witness).exit_code == 0);
    CHECK(run("check " + witness).exit_code == 0);  // physical
    const CliRun equiv = run("equiv " + model + " " + witness);
    CHECK(equiv.exit_code == 0);
    CHECK(equiv.out.find("\"equal\": true") != std::string::npos);
    CHECK(equiv.out.find("\"gauge_class\": \"other\"") != std::string::npos);
  }

  SUBCASE("unrelated models are not equivalent") {
    const std::string other = path_of("other.json");
    run("gen --dim 2 --states 4 --maps 2 --effects 4 --seed 99 -o " + other);
    const CliRun equiv = run("equiv " + model + " " + other);
    CHECK(equiv.exit_code == 1);
    CHECK(equiv.out.find("\"equal\": false") != std::string::npos);
    CHECK(equiv.out.find("\"witness\"") != std::string::npos);
  }
}

TEST_CASE("check recognizes declared unitary coverage") {
  ModelRepresentation rep;
  rep.dim = 2;
  rep.unitary_complete = true;
  rep.states.push_back({ket_bra(2, 0, 0), "ground"});
  rep.maps.push_back(QuantumMap::from_unitary(mat2(0, 1, 1, 0), "flip"));
  QuantumMap mixer = depolarizing_map(0.9, 2);
  mixer.extra = true;
  rep.maps.push_back(std::move(mixer));
  rep.effects.push_back({0.8 * ket_bra(2, 1, 1), "bright"});
  const std::string path = path_of("unitary_family.json");
  io::write_model(path, rep);

  const CliRun result = run("check " + path);
  CHECK(result.exit_code == 0);
  CHECK(result.out.find("unique_by_unitary_family") != std::string::npos);

  // The extra flag must survive the JSON round trip to keep the verdict.
  CHECK(io::read_model(path).maps[1].extra);
}

TEST_CASE("gauge files in the depolarizing form") {
  const std::string model = path_of("depol_model.json");
  run("gen --dim 2 --states 4 --maps 2 --effects 4 --seed 41 -o " + model);
  const std::string gauge_path = path_of("depol_gauge.json");
  io::write_text_file(gauge_path,
                      R"({"dim": 2, "kind": "depolarizing", "F": 0.99})");
  const std::string mixed = path_of("mixed.json");
  CHECK(run("gauge " + model + " " + gauge_path + " --inverse -o " + mixed)
            .exit_code == 0);
  const CliRun equiv = run("equiv " + model + " " + mixed);
  CHECK(equiv.exit_code == 0);
  CHECK(equiv.out.find("\"gauge_class\": \"other\"") != std::string::npos);
}

TEST_CASE("pi-set emits the labeled family") {
  const CliRun full = run("pi-set --dim 3");
  CHECK(full.exit_code == 0);
  CHECK(full.out.find("piy_3,2,1") != std::string::npos);

  const CliRun qpt = run("pi-set --dim 3 --qpt");
  CHECK(qpt.out.find("pix_1,2,3") == std::string::npos);
}

TEST_CASE("gst round trips through the CLI") {
  const std::string model = path_of("gst_model.json");
  run("gen --dim 2 --states 4 --maps 2 --effects 4 --seed 21 -o " + model);

  SUBCASE("with the true prior the hidden model comes back") {
    const std::string recon = path_of("recon.json");
    CHECK(run("gst " + model + " --prior " + model + " -o " + recon)
              .exit_code == 0);
    const ModelRepresentation hidden = io::read_model(model);
    const ModelRepresentation recovered = io::read_model(recon);
    for (Index i = 0; i < hidden.n_states(); ++i)
      CHECK(max_abs_diff(hidden.states[static_cast<std::size_t>(i)].mat,
                         recovered.states[static_cast<std::size_t>(i)].mat) <
            1e-8);
  }

  SUBCASE("data-gauge output is equivalent, generally nonphysical") {
    const std::string recon = path_of("raw_recon.json");
    CHECK(run("gst " + model + " -o " + recon).exit_code == 0);
    CHECK(run("equiv " + model + " " + recon + " -N 1").exit_code == 0);
  }

  SUBCASE("dataset files are accepted directly") {
    const std::string dataset = path_of("ds.json");
    CHECK(run("sample " + model + " --shots 200000 --seed 3 -o " + dataset)
              .exit_code == 0);
    const std::string recon = path_of("sampled_recon.json");
    CHECK(run("gst " + dataset + " -o " + recon).exit_code == 0);
    CHECK(io::read_model(recon).n_states() == 4);
  }

  SUBCASE("collinear fiducials exit 3") {
    ModelRepresentation degenerate = io::read_model(model);
    degenerate.states[1].mat = degenerate.states[0].mat;
    const std::string degenerate_path = path_of("degenerate.json");
    io::write_model(degenerate_path, degenerate);
    CHECK(run("gst " + degenerate_path).exit_code == 3);
  }
}

TEST_CASE("sampling determinism through the CLI") {
  const std::string model = path_of("sample_model.json");
  run("gen --dim 2 --states 4 --maps 1 --effects 4 --seed 31 -o " + model);
  const std::string a = path_of("ds_a.json");
  const std::string b = path_of("ds_b.json");
  CHECK(run("sample " + model + " --shots 500 --seed 8 -o " + a).exit_code == 0);
  CHECK(run("sample " + model + " --shots 500 --seed 8 -o " + b).exit_code == 0);
  CHECK(io::read_text_file(a) == io::read_text_file(b));
}

TEST_CASE("invalid inputs exit 2") {
  CHECK(run("gen --dim 2 --unknown-flag").exit_code == 2);
  CHECK(run("check " + path_of("missing_file.json")).exit_code == 2);
  CHECK(run("prob").exit_code == 2);
}
