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

#include "qdm/probability.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <random>
#include <thread>

namespace qdm {

namespace {

void check_indices(const ModelRepresentation& rep, Index state,
                   const std::vector<Index>& seq, Index effect) {
  rep.validate();
  require(state >= 0 && state < rep.n_states(), Errc::index_out_of_range,
          "state index " + std::to_string(state));
  require(effect >= 0 && effect < rep.n_effects(), Errc::index_out_of_range,
          "effect index " + std::to_string(effect));
  for (Index j : seq)
    require(j >= 0 && j < rep.n_maps(), Errc::index_out_of_range,
            "map index " + std::to_string(j));
}

double raw_value(const ModelRepresentation& rep, Index state,
                 const std::vector<Index>& seq, Index effect) {
  Vector v = vectorize(rep.states[static_cast<std::size_t>(state)].mat);
  for (Index j : seq) v = rep.maps[static_cast<std::size_t>(j)].superop() * v;
  const Vector e = vectorize(rep.effects[static_cast<std::size_t>(effect)].mat);
  return e.dot(v).real();  // Eigen's dot conjugates the left argument
}

int thread_count_from_env() {
  const char* env = std::getenv("QDM_THREADS");
  if (env == nullptr) return 1;
  const int n = std::atoi(env);
  return n > 1 ? n : 1;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

double probability_raw(const ModelRepresentation& rep, Index state,
                       const std::vector<Index>& seq, Index effect) {
  check_indices(rep, state, seq, effect);
  return raw_value(rep, state, seq, effect);
}

double probability(const ModelRepresentation& rep, Index state,
                   const std::vector<Index>& seq, Index effect,
                   const EvalOptions& opt, const Tolerances& tol) {
  const double raw = probability_raw(rep, state, seq, effect);
  if (opt.strict && (raw < -tol.prob || raw > 1.0 + tol.prob))
    fail(Errc::value_out_of_range,
         "probability " + std::to_string(raw) + " outside [0,1]");
  return std::clamp(raw, 0.0, 1.0);
}

std::size_t table_entry_count(Index n_states, Index n_maps, Index n_effects,
                              Index max_len, std::size_t cap) {
  require(max_len >= 0, Errc::invalid_argument, "max_len must be nonnegative");
  std::size_t sequences = 0;
  std::size_t level = 1;
  for (Index len = 0; len <= max_len; ++len) {
    sequences += level;
    if (sequences > cap) fail(Errc::cap_exceeded, "sequence count over cap");
    level *= static_cast<std::size_t>(n_maps);
    if (n_maps > 0 && len < max_len && level > cap)
      fail(Errc::cap_exceeded, "sequence count over cap");
  }
  const std::size_t total = sequences * static_cast<std::size_t>(n_states) *
                            static_cast<std::size_t>(n_effects);
  if (total > cap)
    fail(Errc::cap_exceeded, "table would hold " + std::to_string(total) +
                                 " entries, cap " + std::to_string(cap));
  return total;
}

namespace {

// Lexicographic enumeration of (state, sequence, effect): all effects for
// the current sequence come before any extension of that sequence.
void enumerate_sequences(Index n_maps, Index max_len, std::vector<Index>& seq,
                         std::vector<std::vector<Index>>& out) {
  out.push_back(seq);
  if (static_cast<Index>(seq.size()) == max_len) return;
  for (Index j = 0; j < n_maps; ++j) {
    seq.push_back(j);
    enumerate_sequences(n_maps, max_len, seq, out);
    seq.pop_back();
  }
}

template <typename Fn>
void parallel_by_index(std::size_t n, Fn&& fn) {
  const int threads = thread_count_from_env();
  if (threads <= 1 || n < 64) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  std::atomic<std::size_t> next{0};
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1))
        fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

ProbabilityTable build_table(const ModelRepresentation& rep, Index max_len,
                             std::size_t cap) {
  rep.validate();
  require(!rep.states.empty() && !rep.effects.empty(), Errc::invalid_argument,
          "table needs at least one state and one effect");
  table_entry_count(rep.n_states(), rep.n_maps(), rep.n_effects(), max_len,
                    cap);

  std::vector<std::vector<Index>> sequences;
  std::vector<Index> scratch;
  enumerate_sequences(rep.n_maps(), max_len, scratch, sequences);

  ProbabilityTable table;
  table.n_states = rep.n_states();
  table.n_maps = rep.n_maps();
  table.n_effects = rep.n_effects();
  table.max_len = max_len;
  table.entries.resize(static_cast<std::size_t>(rep.n_states()) *
                       sequences.size() *
                       static_cast<std::size_t>(rep.n_effects()));

  const std::size_t per_state =
      sequences.size() * static_cast<std::size_t>(rep.n_effects());
  parallel_by_index(table.entries.size(), [&](std::size_t idx) {
    const Index i = static_cast<Index>(idx / per_state);
    const std::size_t rem = idx % per_state;
    const auto& seq = sequences[rem / static_cast<std::size_t>(rep.n_effects())];
    const Index k =
        static_cast<Index>(rem % static_cast<std::size_t>(rep.n_effects()));
    TableEntry& entry = table.entries[idx];
    entry.state = i;
    entry.seq = seq;
    entry.effect = k;
    entry.p = raw_value(rep, i, seq, k);
  });
  return table;
}

}  // namespace

ProbabilityTable probability_table(const ModelRepresentation& rep,
                                   Index max_len, std::size_t cap,
                                   const EvalOptions& opt,
                                   const Tolerances& tol) {
  ProbabilityTable table = build_table(rep, max_len, cap);
  for (TableEntry& entry : table.entries) {
    if (opt.strict && (entry.p < -tol.prob || entry.p > 1.0 + tol.prob))
      fail(Errc::value_out_of_range,
           "table entry " + std::to_string(entry.p) + " outside [0,1]");
    entry.p = std::clamp(entry.p, 0.0, 1.0);
  }
  return table;
}

ProbabilityTable sample_probability_table(const ModelRepresentation& rep,
                                          Index max_len, long shots,
                                          std::uint64_t seed,
                                          std::size_t cap) {
  require(shots >= 1, Errc::invalid_argument, "shots must be at least 1");
  ProbabilityTable table = build_table(rep, max_len, cap);
  table.kind = TableKind::sampled;
  table.shots = shots;
  table.seed = seed;
  parallel_by_index(table.entries.size(), [&](std::size_t idx) {
    TableEntry& entry = table.entries[idx];
    const double p = std::clamp(entry.p, 0.0, 1.0);
    std::mt19937_64 rng(splitmix64(seed ^ splitmix64(idx)));
    std::binomial_distribution<long> binomial(shots, p);
    entry.p = static_cast<double>(binomial(rng)) / static_cast<double>(shots);
  });
  return table;
}

}  // namespace qdm
