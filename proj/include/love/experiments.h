// Copyright 2026 The love-sim Authors
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

#ifndef LOVE_EXPERIMENTS_H
#define LOVE_EXPERIMENTS_H

#include <array>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "love/encoding.h"
#include "love/noise.h"
#include "love/shot_engine.h"

namespace love {

/// Mode y * width + x sits at (x, y).
std::vector<std::array<int, 2>> grid_coords(size_t width, size_t height);
/// Nearest-neighbour pairs (a < b), sorted.
std::vector<Edge> grid_pairs(size_t width, size_t height);
/// Boundary modes, counter-clockwise from (0, 0).
std::vector<uint32_t> perimeter_modes(size_t width, size_t height);

/// Built-in ids: jw_3x3, jw1_4x3, jw2_4x3, gaqm_4x3, and every fixture name.
std::vector<std::string> builtin_encoding_ids();
/// Resolves an id or a path to a YAML encoding file.
Encoding named_encoding(const std::string &id, const std::string &fixture_dir = LOVE_FIXTURE_DIR);

// ---------------------------------------------------------------------------
// Configuration.

struct RandomParams {
    size_t rotations = 20;
    size_t checkpoint_every = 1;
    size_t realizations = 10;
    std::optional<std::vector<uint32_t>> occupied;  // default: first 2 floor(N/4) modes
};

struct VqeParams {
    double t = -1.0;
    double U = 4.0;
    size_t sweeps = 10;
    double learning_rate = 0.05;
};

struct FloquetParams {
    size_t timesteps = 16;
    double hop_angle = 1.5707963267948966;
    std::vector<uint32_t> initial_modes = {4, 7};
    size_t layers_per_step = 1;
};

struct ExperimentConfig {
    std::string experiment;  // random | vqe | floquet
    std::vector<std::string> encodings;
    size_t width = 0, height = 0;
    size_t shots = 1000;
    uint64_t seed = 1;
    NoiseModel noise;
    bool postselect = true;
    std::string store = "auto";  // auto | full | streaming
    bool noisy_prep = true;
    size_t threads = 0;
    std::string output = "out";
    std::string fixture_dir = LOVE_FIXTURE_DIR;
    RandomParams random;
    VqeParams vqe;
    FloquetParams floquet;

    /// Throws std::invalid_argument on bad values.
    void validate() const;
};

ExperimentConfig parse_config(const std::string &yaml_text);
ExperimentConfig load_config(const std::string &path);
/// YAML echo of every field, for provenance.
std::string dump_config(const ExperimentConfig &cfg);
std::vector<Encoding> resolve_encodings(const ExperimentConfig &cfg);

// ---------------------------------------------------------------------------
// Shared per-encoding setup.

struct EncodedSystem {
    std::unique_ptr<Encoding> enc;
    std::unique_ptr<OperatorTable> table;
    std::unique_ptr<ShotEngine> engine;
    PrepSpec prep;

    /// exp(i theta (a_j^dag a_k + h.c.)) as two commuting rotations.
    void add_hop(Schedule &s, uint32_t j, uint32_t k, double theta) const;
    /// The two Hermitian halves -i B_j A_jk and -i A_jk B_k, minimized.
    std::array<SignedPauli, 2> hop_generators(uint32_t j, uint32_t k) const;
    StoreMode store_mode(const std::string &setting) const;
};

/// Checks the encoding covers a width x height lattice.
EncodedSystem make_system(Encoding enc, size_t width, size_t height, const std::vector<uint32_t> &occupied);

struct ObservableValue {
    std::string name;
    double mitigated = 0, unmitigated = 0;
};

struct MetricsRow {
    std::string encoding;
    double x = 0;
    double fidelity_mitigated = 0, fidelity_unmitigated = 0;
    double kept_shots = 0, total_shots = 0;  // averaged over realizations
    double sampling_increase = 0;
    double circuit_depth = 0;
    std::vector<ObservableValue> observables;
};

void write_metrics_csv(std::ostream &out, const std::vector<MetricsRow> &rows);

// ---------------------------------------------------------------------------
// Random fermionic circuits.

struct LogicalLabel {
    enum class Kind : uint8_t { EDGE, VERTEX, VERTEX_PAIR };
    Kind kind = Kind::VERTEX;
    uint32_t a = 0, b = 0;
    std::string str() const;
};

/// A_ij and B_i B_j over lattice pairs, B_i over modes.
std::vector<LogicalLabel> random_label_set(size_t width, size_t height);
SignedPauli label_operator(const OperatorTable &table, const LogicalLabel &l);

struct RandomStep {
    LogicalLabel label;
    double angle = 0;
};
/// Identical for every encoding given (seed, realization).
std::vector<RandomStep> draw_random_sequence(const std::vector<LogicalLabel> &labels, size_t count, uint64_t seed,
                                             uint64_t realization);

/// Noise seed of realization (or run) `index`.
uint64_t derived_seed(uint64_t seed, uint64_t index);

std::vector<MetricsRow> run_random(const ExperimentConfig &cfg);
std::vector<MetricsRow> run_random(const ExperimentConfig &cfg, const std::vector<Encoding> &encs);

// ---------------------------------------------------------------------------
// Hubbard VQE on the 2x3 lattice. Site (sx, sy) holds spin-up mode
// 4 sy + sx and spin-down mode 4 sy + sx + 2.

uint32_t hubbard_mode(uint32_t site, uint32_t spin);
std::vector<Edge> hubbard_site_edges();
FermionSum hubbard_hamiltonian(double t, double U);
std::vector<uint32_t> hubbard_initial_modes();

struct AnsatzRotation {
    SignedPauli generator;
    size_t parameter = 0;
};

struct Ansatz {
    size_t n_params = 0;
    std::vector<std::string> param_names;
    std::vector<AnsatzRotation> rotations;  // time order
    std::vector<std::vector<size_t>> occurrences;  // rotation indices per parameter

    std::vector<double> rotation_angles(const std::vector<double> &theta) const;
};

Ansatz hubbard_ansatz(const EncodedSystem &sys);

/// Sum over occurrences of E(+pi/4 shift) - E(-pi/4 shift).
double parameter_shift_gradient(const std::function<double(const std::vector<double> &)> &energy,
                                const std::vector<size_t> &occurrences, const std::vector<double> &rotation_angles);

/// Energy estimator for one encoded VQE instance.
class VqeProblem {
   public:
    VqeProblem(EncodedSystem sys, const VqeParams &p);
    const EncodedSystem &system() const { return sys_; }
    const Ansatz &ansatz() const { return ansatz_; }
    const TaperedObservable &hamiltonian() const { return ham_; }
    Schedule schedule(const std::vector<double> &rotation_angles) const;
    double exact_energy(const std::vector<double> &rotation_angles) const;

    struct Sample {
        double mitigated = 0, unmitigated = 0;
        double fidelity_mitigated = 0, fidelity_unmitigated = 0;  // against the noiseless circuit
        PostselectRecord record;
    };
    Sample sampled_energy(const std::vector<double> &rotation_angles, const NoiseModel &noise,
                          const RunOptions &opts, StoreMode mode) const;

   private:
    EncodedSystem sys_;
    Ansatz ansatz_;
    TaperedObservable ham_;
    ShotResult initial_;
};

struct VqeTraceRow {
    std::string encoding;
    size_t update = 0;
    size_t parameter = 0;  // parameter updated in this step; 0 for the start row
    double energy = 0;     // the estimator driving the optimizer
    double energy_mitigated = 0, energy_unmitigated = 0;
    double energy_noiseless = 0;  // noiseless optimizer at the same step
    double difference = 0;        // energy - energy_noiseless
    double sampling_increase = 0;
    double circuit_depth = 0;
};

struct VqeResult {
    std::vector<VqeTraceRow> trace;
    std::vector<MetricsRow> metrics;
};

VqeResult run_vqe(const ExperimentConfig &cfg);
VqeResult run_vqe(const ExperimentConfig &cfg, const std::vector<Encoding> &encs);
void write_trace_csv(std::ostream &out, const std::vector<VqeTraceRow> &rows);

// ---------------------------------------------------------------------------
// Floquet dynamics.

/// Layers A, B, C, D: each even site (x + y even) paired with its
/// right, up, left, down neighbour. Pairs are (even site, neighbour).
std::array<std::vector<Edge>, 4> floquet_layers(size_t width, size_t height);

struct OccupationRow {
    std::string encoding;
    size_t timestep = 0;
    std::vector<double> perimeter;  // perimeter_modes order
};

struct FloquetResult {
    std::vector<MetricsRow> metrics;
    std::vector<OccupationRow> occupations;
};

FloquetResult run_floquet(const ExperimentConfig &cfg);
FloquetResult run_floquet(const ExperimentConfig &cfg, const std::vector<Encoding> &encs);
void write_occupations_csv(std::ostream &out, const std::vector<OccupationRow> &rows, size_t width, size_t height);

// ---------------------------------------------------------------------------
// Scaling workloads.

struct BenchmarkCase {
    size_t n = 0, k = 0;
    double seconds_per_shot = 0;
};

/// k logical qubits padded to n physical by single-qubit Z stabilizers;
/// each rotation also carries Z on two random padding qubits.
struct ScalingWorkload {
    std::vector<SignedPauli> gens;
    Schedule schedule;
    PrepSpec prep;
};
ScalingWorkload scaling_workload(size_t n, size_t k, size_t rotations, uint64_t seed);
BenchmarkCase time_workload(size_t n, size_t k, size_t shots, double p, uint64_t seed);

}  // namespace love

#endif
