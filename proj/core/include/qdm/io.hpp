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

#include <optional>
#include <string>

#include "qdm/equivalence.hpp"
#include "qdm/gauge.hpp"
#include "qdm/model.hpp"
#include "qdm/probability.hpp"
#include "qdm/projections.hpp"
#include "qdm/tomography.hpp"
#include "qdm/uniqueness.hpp"

// File formats. Models, gauges, datasets and verdicts are JSON; bulk
// probability tables are CSV. Matrices are encoded as row-major nested
// arrays of doubles under "re"/"im". Parsers throw Error(invalid_argument)
// on malformed input.

namespace qdm::io {

std::string model_to_json(const ModelRepresentation& rep);
ModelRepresentation model_from_json(const std::string& text);
void write_model(const std::string& path, const ModelRepresentation& rep);
ModelRepresentation read_model(const std::string& path);

// Gauge files carry a "kind": a raw superoperator, a unitary or antiunitary
// conjugation (d x d matrix), or a depolarizing fidelity.
std::string gauge_to_json(const GaugeTransform& t);
GaugeTransform gauge_from_json(const std::string& text);
void write_gauge(const std::string& path, const GaugeTransform& t);
GaugeTransform read_gauge(const std::string& path);

std::string dataset_to_json(const GstDataset& ds);
GstDataset dataset_from_json(const std::string& text);
void write_dataset(const std::string& path, const GstDataset& ds);
GstDataset read_dataset(const std::string& path);

// Serialize and parse back before handing out the text. Catches values the
// plain writers would silently degrade (NaN entries become JSON null).
std::string validated_model_json(const ModelRepresentation& rep);
std::string validated_gauge_json(const GaugeTransform& t);
std::string validated_dataset_json(const GstDataset& ds);

/// True when the JSON text carries a dataset (has a "g" field) rather than
/// a model.
bool looks_like_dataset(const std::string& text);

// Probability tables: columns i, seq (semicolon-joined map indices), k, p,
// plus a shots column for sampled tables.
std::string table_to_csv(const ProbabilityTable& table);
std::string table_to_json(const ProbabilityTable& table);

std::string projection_set_to_json(const ProjectionSet& set);

std::string physicality_to_json(const PhysicalityReport& report);
std::string check_verdict_to_json(const PhysicalityReport& report,
                                  const std::optional<UniquenessVerdict>& verdict);
std::string equivalence_to_json(const DistributionComparison& comparison,
                                const std::string& gauge_class);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace qdm::io
