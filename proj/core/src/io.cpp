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

#include "qdm/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qdm::io {

using Json = nlohmann::ordered_json;

namespace {

Json matrix_part(const Matrix& m, bool imaginary) {
  Json rows = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < m.cols(); ++c)
      row.push_back(imaginary ? m(r, c).imag() : m(r, c).real());
    rows.push_back(std::move(row));
  }
  return rows;
}

void put_matrix(Json& node, const Matrix& m) {
  node["re"] = matrix_part(m, false);
  node["im"] = matrix_part(m, true);
}

Matrix matrix_from_parts(const Json& re, const Json& im) {
  require(re.is_array() && im.is_array() && !re.empty(), Errc::invalid_argument,
          "matrix parts must be nonempty nested arrays");
  const Index rows = static_cast<Index>(re.size());
  require(im.size() == re.size(), Errc::invalid_argument,
          "re/im row counts differ");
  const Index cols = static_cast<Index>(re.at(0).size());
  Matrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    const auto& re_row = re.at(static_cast<std::size_t>(r));
    const auto& im_row = im.at(static_cast<std::size_t>(r));
    require(static_cast<Index>(re_row.size()) == cols &&
                static_cast<Index>(im_row.size()) == cols,
            Errc::invalid_argument, "ragged matrix rows");
    for (Index c = 0; c < cols; ++c)
      m(r, c) = Complex(re_row.at(static_cast<std::size_t>(c)).get<double>(),
                        im_row.at(static_cast<std::size_t>(c)).get<double>());
  }
  return m;
}

Matrix get_matrix(const Json& node) {
  require(node.contains("re") && node.contains("im"), Errc::invalid_argument,
          "matrix entry needs re and im");
  return matrix_from_parts(node.at("re"), node.at("im"));
}

Json real_matrix_json(const RealMatrix& m) {
  Json rows = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

RealMatrix real_matrix_from_json(const Json& node) {
  require(node.is_array() && !node.empty(), Errc::invalid_argument,
          "expected a nested array");
  const Index rows = static_cast<Index>(node.size());
  const Index cols = static_cast<Index>(node.at(0).size());
  RealMatrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    const auto& row = node.at(static_cast<std::size_t>(r));
    require(static_cast<Index>(row.size()) == cols, Errc::invalid_argument,
            "ragged rows");
    for (Index c = 0; c < cols; ++c)
      m(r, c) = row.at(static_cast<std::size_t>(c)).get<double>();
  }
  return m;
}

Json real_vector_json(const RealVector& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

RealVector real_vector_from_json(const Json& node) {
  require(node.is_array(), Errc::invalid_argument, "expected an array");
  RealVector v(static_cast<Index>(node.size()));
  for (Index i = 0; i < v.size(); ++i)
    v(i) = node.at(static_cast<std::size_t>(i)).get<double>();
  return v;
}

Json parse(const std::string& text) {
  Json parsed = Json::parse(text, nullptr, false);
  require(!parsed.is_discarded(), Errc::invalid_argument, "malformed JSON");
  return parsed;
}

// Json accessor exceptions (wrong types, missing fields) become library
// errors so the CLI can map them onto the invalid-input exit code.
template <typename Fn>
auto with_json_errors(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::invalid_argument, e.what());
  }
}

Json index_array(const std::vector<Index>& indices) {
  Json out = Json::array();
  for (Index i : indices) out.push_back(i);
  return out;
}

std::vector<Index> indices_from_json(const Json& node) {
  std::vector<Index> out;
  for (const auto& v : node) out.push_back(v.get<Index>());
  return out;
}

}  // namespace

std::string model_to_json(const ModelRepresentation& rep) {
  Json root;
  root["dim"] = rep.dim;
  root["unitary_complete"] = rep.unitary_complete;
  root["label"] = rep.label;
  root["states"] = Json::array();
  for (const auto& s : rep.states) {
    Json node;
    node["label"] = s.label;
    put_matrix(node, s.mat);
    root["states"].push_back(std::move(node));
  }
  root["maps"] = Json::array();
  for (const auto& m : rep.maps) {
    Json node;
    node["label"] = m.label;
    node["kind"] = "superop";
    put_matrix(node, m.superop());
    if (m.extra) node["extra"] = true;
    root["maps"].push_back(std::move(node));
  }
  root["effects"] = Json::array();
  for (const auto& e : rep.effects) {
    Json node;
    node["label"] = e.label;
    put_matrix(node, e.mat);
    root["effects"].push_back(std::move(node));
  }
  return root.dump(2) + "\n";
}

ModelRepresentation model_from_json(const std::string& text) {
  return with_json_errors([&]() -> ModelRepresentation {
  const Json root = parse(text);
  require(root.contains("dim"), Errc::invalid_argument, "model needs dim");
  ModelRepresentation rep;
  rep.dim = root.at("dim").get<Index>();
  rep.unitary_complete = root.value("unitary_complete", false);
  rep.label = root.value("label", std::string());

  for (const auto& node : root.value("states", Json::array())) {
    DensityMatrix s{get_matrix(node), node.value("label", std::string())};
    require(s.mat.rows() == rep.dim && s.mat.cols() == rep.dim,
            Errc::dimension_mismatch, "state dimension mismatch in file");
    rep.states.push_back(std::move(s));
  }

  for (const auto& node : root.value("maps", Json::array())) {
    const std::string kind = node.value("kind", std::string("superop"));
    const std::string label = node.value("label", std::string());
    QuantumMap map;
    if (kind == "superop") {
      map = QuantumMap::from_superop(get_matrix(node), label);
    } else if (kind == "choi") {
      map = QuantumMap::from_choi(get_matrix(node), label);
    } else if (kind == "unitary") {
      map = QuantumMap::from_unitary(get_matrix(node), label);
    } else if (kind == "kraus") {
      const auto& re = node.at("re");
      const auto& im = node.at("im");
      require(re.is_array() && im.is_array() && re.size() == im.size() &&
                  !re.empty(),
              Errc::invalid_argument, "kraus kind expects arrays of matrices");
      std::vector<Matrix> ops;
      for (std::size_t l = 0; l < re.size(); ++l)
        ops.push_back(matrix_from_parts(re.at(l), im.at(l)));
      map = QuantumMap::from_kraus(ops, label);
    } else {
      fail(Errc::invalid_argument, "unknown map kind '" + kind + "'");
    }
    require(map.dim() == rep.dim, Errc::dimension_mismatch,
            "map dimension mismatch in file");
    map.extra = node.value("extra", false);
    rep.maps.push_back(std::move(map));
  }

  for (const auto& node : root.value("effects", Json::array())) {
    Effect e{get_matrix(node), node.value("label", std::string())};
    require(e.mat.rows() == rep.dim && e.mat.cols() == rep.dim,
            Errc::dimension_mismatch, "effect dimension mismatch in file");
    rep.effects.push_back(std::move(e));
  }
  return rep;
  });
}

std::string gauge_to_json(const GaugeTransform& t) {
  Json root;
  root["dim"] = t.dim();
  root["kind"] = "superop";
  root["label"] = t.label;
  put_matrix(root, t.superop());
  return root.dump(2) + "\n";
}

GaugeTransform gauge_from_json(const std::string& text) {
  return with_json_errors([&]() -> GaugeTransform {
  const Json root = parse(text);
  require(root.contains("dim") && root.contains("kind"), Errc::invalid_argument,
          "gauge needs dim and kind");
  const Index dim = root.at("dim").get<Index>();
  const std::string kind = root.at("kind").get<std::string>();
  const std::string label = root.value("label", std::string());

  if (kind == "superop") {
    GaugeTransform t(get_matrix(root), label);
    require(t.dim() == dim, Errc::dimension_mismatch,
            "gauge dimension mismatch in file");
    return t;
  }
  if (kind == "unitary" || kind == "antiunitary") {
    const Matrix u = get_matrix(root);
    require(u.rows() == dim && u.cols() == dim, Errc::dimension_mismatch,
            "gauge dimension mismatch in file");
    require(is_unitary_matrix(u, default_tol().unitary), Errc::not_unitary,
            "gauge matrix is not unitary");
    const WignerTransform wigner{u, kind == "antiunitary"};
    GaugeTransform t = wigner.gauge();
    if (!label.empty()) t.label = label;
    return t;
  }
  if (kind == "depolarizing") {
    require(root.contains("F"), Errc::invalid_argument,
            "depolarizing gauge needs F");
    const auto& f_node = root.at("F");
    require(f_node.is_number(), Errc::invalid_argument,
            "depolarizing gauge fidelity must be a finite number");
    return depolarizing(f_node.get<double>(), dim);
  }
  fail(Errc::invalid_argument, "unknown gauge kind '" + kind + "'");
  });
}

std::string dataset_to_json(const GstDataset& ds) {
  Json root;
  root["dim"] = ds.dim;
  root["kind"] = ds.kind == DatasetKind::exact ? "exact" : "sampled";
  if (ds.kind == DatasetKind::sampled) {
    root["shots"] = ds.shots;
    root["seed"] = ds.seed;
  }
  root["fiducial_states"] = index_array(ds.fiducial_states);
  root["fiducial_effects"] = index_array(ds.fiducial_effects);
  root["g"] = real_matrix_json(ds.gram);
  root["maps"] = Json::object();
  for (const auto& [label, sandwich] : ds.map_grams)
    root["maps"][label] = real_matrix_json(sandwich);
  root["extra_states"] = Json::object();
  for (const auto& [label, column] : ds.extra_states)
    root["extra_states"][label] = real_vector_json(column);
  root["extra_effects"] = Json::object();
  for (const auto& [label, row] : ds.extra_effects)
    root["extra_effects"][label] = real_vector_json(row);
  return root.dump(2) + "\n";
}

GstDataset dataset_from_json(const std::string& text) {
  return with_json_errors([&]() -> GstDataset {
  const Json root = parse(text);
  require(root.contains("dim") && root.contains("g"), Errc::invalid_argument,
          "dataset needs dim and g");
  GstDataset ds;
  ds.dim = root.at("dim").get<Index>();
  const std::string kind = root.value("kind", std::string("exact"));
  require(kind == "exact" || kind == "sampled", Errc::invalid_argument,
          "unknown dataset kind '" + kind + "'");
  ds.kind = kind == "exact" ? DatasetKind::exact : DatasetKind::sampled;
  ds.shots = root.value("shots", 0L);
  ds.seed = root.value("seed", std::uint64_t{0});
  if (root.contains("fiducial_states"))
    ds.fiducial_states = indices_from_json(root.at("fiducial_states"));
  if (root.contains("fiducial_effects"))
    ds.fiducial_effects = indices_from_json(root.at("fiducial_effects"));
  ds.gram = real_matrix_from_json(root.at("g"));
  const Json maps = root.value("maps", Json::object());
  for (const auto& [label, node] : maps.items())
    ds.map_grams.emplace_back(label, real_matrix_from_json(node));
  const Json extra_states = root.value("extra_states", Json::object());
  for (const auto& [label, node] : extra_states.items())
    ds.extra_states.emplace_back(label, real_vector_from_json(node));
  const Json extra_effects = root.value("extra_effects", Json::object());
  for (const auto& [label, node] : extra_effects.items())
    ds.extra_effects.emplace_back(label, real_vector_from_json(node));
  return ds;
  });
}

bool looks_like_dataset(const std::string& text) {
  const Json root = parse(text);
  return root.contains("g");
}

namespace {

std::string format_probability(double p) {
  std::ostringstream out;
  out.precision(17);
  out << p;
  return out.str();
}

}  // namespace

std::string table_to_csv(const ProbabilityTable& table) {
  std::ostringstream out;
  const bool sampled = table.kind == TableKind::sampled;
  out << (sampled ? "i,seq,k,p,shots\n" : "i,seq,k,p\n");
  for (const auto& entry : table.entries) {
    out << entry.state << ',';
    for (std::size_t s = 0; s < entry.seq.size(); ++s) {
      if (s > 0) out << ';';
      out << entry.seq[s];
    }
    out << ',' << entry.effect << ',' << format_probability(entry.p);
    if (sampled) out << ',' << table.shots;
    out << '\n';
  }
  return out.str();
}

std::string table_to_json(const ProbabilityTable& table) {
  Json root;
  root["kind"] = table.kind == TableKind::exact ? "exact" : "sampled";
  if (table.kind == TableKind::sampled) {
    root["shots"] = table.shots;
    root["seed"] = table.seed;
  }
  root["max_len"] = table.max_len;
  root["entries"] = Json::array();
  for (const auto& entry : table.entries) {
    Json node;
    node["i"] = entry.state;
    node["seq"] = index_array(entry.seq);
    node["k"] = entry.effect;
    node["p"] = entry.p;
    root["entries"].push_back(std::move(node));
  }
  return root.dump(2) + "\n";
}

std::string projection_set_to_json(const ProjectionSet& set) {
  Json root;
  root["dim"] = set.dim;
  root["projections"] = Json::array();
  for (const auto& member : set.projections) {
    Json node;
    node["label"] = member.label;
    put_matrix(node, member.mat);
    root["projections"].push_back(std::move(node));
  }
  return root.dump(2) + "\n";
}

namespace {

Json physicality_json(const PhysicalityReport& report) {
  Json node;
  node["pass"] = report.pass;
  node["worst_margin"] = report.worst_margin;
  node["checks"] = Json::array();
  for (const auto& check : report.checks) {
    Json c;
    c["element"] = check.element;
    c["quantity"] = check.quantity;
    c["pass"] = check.pass;
    c["margin"] = check.margin;
    node["checks"].push_back(std::move(c));
  }
  return node;
}

}  // namespace

std::string physicality_to_json(const PhysicalityReport& report) {
  return physicality_json(report).dump(2) + "\n";
}

std::string check_verdict_to_json(
    const PhysicalityReport& report,
    const std::optional<UniquenessVerdict>& verdict) {
  Json root;
  root["physical"] = report.pass;
  root["report"] = physicality_json(report);
  if (verdict) {
    Json u;
    u["status"] = to_string(verdict->status);
    u["lambda_min"] = verdict->lambda_min;
    if (std::isfinite(verdict->window))
      u["F_max"] = verdict->window;
    else
      u["F_max"] = "inf";
    u["state_det_product"] = verdict->state_det_product;
    u["choi_det_product"] = verdict->choi_det_product;
    u["singular_elements"] = verdict->singular_elements;
    if (!verdict->matched_projections.empty())
      u["matched_projections"] = verdict->matched_projections;
    if (verdict->status == UniquenessStatus::not_unique) {
      u["F"] = verdict->fidelity_used;
      u["spectral_gap"] = verdict->spectral_gap;
      if (verdict->counterexample)
        u["counterexample"] = Json::parse(model_to_json(*verdict->counterexample));
    }
    root["uniqueness"] = std::move(u);
  }
  return root.dump(2) + "\n";
}

std::string equivalence_to_json(const DistributionComparison& comparison,
                                const std::string& gauge_class) {
  Json root;
  root["equal"] = comparison.equal;
  root["max_dev"] = comparison.max_dev;
  if (comparison.witness_state >= 0) {
    Json witness;
    witness["i"] = comparison.witness_state;
    witness["seq"] = index_array(comparison.witness_seq);
    witness["k"] = comparison.witness_effect;
    root["witness"] = std::move(witness);
  } else {
    root["witness"] = nullptr;
  }
  root["gauge_class"] = gauge_class;
  return root.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), Errc::invalid_argument, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), Errc::invalid_argument, "cannot write '" + path + "'");
  out << text;
  require(out.good(), Errc::invalid_argument, "failed writing '" + path + "'");
}

void write_model(const std::string& path, const ModelRepresentation& rep) {
  write_text_file(path, model_to_json(rep));
}

ModelRepresentation read_model(const std::string& path) {
  return model_from_json(read_text_file(path));
}

void write_gauge(const std::string& path, const GaugeTransform& t) {
  write_text_file(path, gauge_to_json(t));
}

GaugeTransform read_gauge(const std::string& path) {
  return gauge_from_json(read_text_file(path));
}

void write_dataset(const std::string& path, const GstDataset& ds) {
  write_text_file(path, dataset_to_json(ds));
}

GstDataset read_dataset(const std::string& path) {
  return dataset_from_json(read_text_file(path));
}

std::string validated_model_json(const ModelRepresentation& rep) {
  std::string text = model_to_json(rep);
  model_from_json(text);
  return text;
}

std::string validated_gauge_json(const GaugeTransform& t) {
  std::string text = gauge_to_json(t);
  gauge_from_json(text);
  return text;
}

std::string validated_dataset_json(const GstDataset& ds) {
  std::string text = dataset_to_json(ds);
  dataset_from_json(text);
  return text;
}

}  // namespace qdm::io
