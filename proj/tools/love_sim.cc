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

// love-sim command-line driver.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "love/encoding.h"
#include "love/experiments.h"
#include "love/kernels.h"
#include "love/rng.h"
#include "love/tapering.h"

using namespace love;
using nlohmann::json;

namespace {

constexpr const char *kVersion = "0.1.0";

struct Overrides {
    std::string config;
    std::vector<std::string> encodings;
    std::optional<double> noise_p, idle_noise_p, hop_angle;
    std::optional<uint64_t> seed;
    std::optional<size_t> shots, threads;
    std::string postselect, store, noisy_prep, output;
};

void add_run_flags(CLI::App *cmd, Overrides &o) {
    cmd->add_option("--config", o.config, "YAML experiment config")->required()->check(CLI::ExistingFile);
    cmd->add_option("--encoding", o.encodings, "Encoding id or YAML file (repeatable; replaces the config list)");
    cmd->add_option("--noise-p", o.noise_p, "Depolarizing probability after each CNOT, per qubit");
    cmd->add_option("--idle-noise-p", o.idle_noise_p, "Depolarizing probability per qubit per idle step");
    cmd->add_option("--seed", o.seed, "Master seed");
    cmd->add_option("--shots", o.shots, "Shots per circuit");
    cmd->add_option("--threads", o.threads, "Worker threads (0: LOVE_THREADS or all cores)");
    cmd->add_option("--postselect", o.postselect, "Headline values use the code-space block")
        ->check(CLI::IsMember({"on", "off"}));
    cmd->add_option("--store", o.store, "Density store mode")->check(CLI::IsMember({"auto", "full", "streaming"}));
    cmd->add_option("--noisy-prep", o.noisy_prep, "Simulate the noisy initial measurements")
        ->check(CLI::IsMember({"on", "off"}));
    cmd->add_option("--output", o.output, "Output directory");
}

ExperimentConfig resolve(const Overrides &o, const std::string &experiment) {
    ExperimentConfig c = load_config(o.config);
    if (c.experiment != experiment)
        throw std::invalid_argument("config is for '" + c.experiment + "', command runs '" + experiment + "'");
    if (!o.encodings.empty()) c.encodings = o.encodings;
    if (o.noise_p) c.noise.gate_noise_p = *o.noise_p;
    if (o.idle_noise_p) c.noise.idle_noise_p = *o.idle_noise_p;
    if (o.seed) c.seed = *o.seed;
    if (o.shots) c.shots = *o.shots;
    if (o.threads) c.threads = *o.threads;
    if (!o.postselect.empty()) c.postselect = o.postselect == "on";
    if (!o.store.empty()) c.store = o.store;
    if (!o.noisy_prep.empty()) c.noisy_prep = o.noisy_prep == "on";
    if (!o.output.empty()) c.output = o.output;
    if (o.hop_angle) c.floquet.hop_angle = *o.hop_angle;
    c.validate();
    return c;
}

json code_json(const std::string &id, const Encoding &enc) {
    CodeParameters cp = code_parameters(enc, enc.n_qubits <= 16 ? 4 : 3);
    json j = {{"id", id},
              {"name", enc.name},
              {"n", cp.n},
              {"k", cp.k},
              {"r", cp.r},
              {"d", cp.d},
              {"d_is_lower_bound", cp.d_is_lower_bound},
              {"avg_edge_weight", cp.avg_edge_weight},
              {"avg_vertex_weight", cp.avg_vertex_weight}};
    j["avg_stabilizer_weight"] = cp.stabilizer_weight_defined ? json(cp.avg_stabilizer_weight) : json(nullptr);
    return j;
}

json config_json(const ExperimentConfig &c) {
    json j = {{"experiment", c.experiment},
              {"lattice", {{"width", c.width}, {"height", c.height}}},
              {"encodings", c.encodings},
              {"shots", c.shots},
              {"seed", c.seed},
              {"noise", {{"gate_p", c.noise.gate_noise_p}, {"idle_p", c.noise.idle_noise_p}}},
              {"postselect", c.postselect},
              {"store", c.store},
              {"noisy_prep", c.noisy_prep},
              {"threads", c.threads},
              {"output", c.output}};
    if (c.experiment == "random") {
        j["random"] = {{"rotations", c.random.rotations},
                       {"checkpoint_every", c.random.checkpoint_every},
                       {"realizations", c.random.realizations}};
        if (c.random.occupied) j["random"]["occupied"] = *c.random.occupied;
    } else if (c.experiment == "vqe") {
        j["vqe"] = {{"t", c.vqe.t}, {"U", c.vqe.U}, {"sweeps", c.vqe.sweeps}, {"learning_rate", c.vqe.learning_rate}};
    } else {
        j["floquet"] = {{"timesteps", c.floquet.timesteps},
                        {"hop_angle", c.floquet.hop_angle},
                        {"initial_modes", c.floquet.initial_modes},
                        {"layers_per_step", c.floquet.layers_per_step}};
    }
    return j;
}

void write_file(const std::filesystem::path &p, const std::string &text) {
    std::ofstream out(p, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + p.string());
    out << text;
}

template <typename F>
std::string to_text(F &&f) {
    std::ostringstream ss;
    f(ss);
    return ss.str();
}

int run_experiment(const Overrides &o, const std::string &experiment) {
    ExperimentConfig c = resolve(o, experiment);
    std::vector<Encoding> encs = resolve_encodings(c);
    std::filesystem::path dir(c.output);
    std::filesystem::create_directories(dir);
    std::vector<std::string> files = {"metrics.csv"};
    if (experiment == "random") {
        auto rows = run_random(c, encs);
        write_file(dir / "metrics.csv", to_text([&](std::ostream &s) { write_metrics_csv(s, rows); }));
    } else if (experiment == "vqe") {
        auto res = run_vqe(c, encs);
        write_file(dir / "metrics.csv", to_text([&](std::ostream &s) { write_metrics_csv(s, res.metrics); }));
        write_file(dir / "trace.csv", to_text([&](std::ostream &s) { write_trace_csv(s, res.trace); }));
        files.push_back("trace.csv");
    } else {
        auto res = run_floquet(c, encs);
        write_file(dir / "metrics.csv", to_text([&](std::ostream &s) { write_metrics_csv(s, res.metrics); }));
        write_file(dir / "occupations.csv", to_text([&](std::ostream &s) {
                       write_occupations_csv(s, res.occupations, c.width, c.height);
                   }));
        files.push_back("occupations.csv");
    }
    json meta = {{"tool", "love-sim"},
                 {"version", kVersion},
                 {"config", config_json(c)},
                 {"seed", c.seed},
                 {"rng", kRngDescription},
                 {"kernels", kernels().name},
                 {"outputs", files}};
    meta["codes"] = json::array();
    for (size_t i = 0; i < encs.size(); i++) meta["codes"].push_back(code_json(c.encodings[i], encs[i]));
    write_file(dir / "meta.json", meta.dump(2) + "\n");
    std::cerr << "wrote " << dir.string() << "/{";
    for (size_t i = 0; i < files.size(); i++) std::cerr << files[i] << ",";
    std::cerr << "meta.json}\n";
    return 0;
}

std::string encoding_from(const std::string &id, const std::string &config) {
    if (!id.empty()) return id;
    if (!config.empty()) {
        auto c = load_config(config);
        return c.encodings.front();
    }
    throw std::invalid_argument("give --encoding or --config");
}

PauliSum read_sum(const std::string &path) {
    if (path == "-") return PauliSum::read_text(std::cin);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read " + path);
    return PauliSum::read_text(in);
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Stabilizer-postselection simulator for encoded lattice fermions"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    Overrides runs[3];
    const char *names[3] = {"random", "vqe", "floquet"};
    CLI::App *run_cmds[3];
    run_cmds[0] = app.add_subcommand("run-random", "Random fermionic circuits");
    run_cmds[1] = app.add_subcommand("run-vqe", "Hubbard VQE optimization");
    run_cmds[2] = app.add_subcommand("run-floquet", "Floquet edge-mode dynamics");
    for (int i = 0; i < 3; i++) add_run_flags(run_cmds[i], runs[i]);
    run_cmds[2]->add_option("--hop-angle", runs[2].hop_angle, "Angle of each hopping rotation");

    std::string v_config;
    std::vector<std::string> v_encodings;
    auto *validate_cmd = app.add_subcommand("validate-encoding", "Check relations and print code parameters");
    validate_cmd->add_option("--encoding", v_encodings, "Encoding id or YAML file (repeatable)");
    validate_cmd->add_option("--config", v_config, "Take the encodings from a config")->check(CLI::ExistingFile);

    std::string t_encoding, t_config, t_input;
    std::vector<std::string> t_strings;
    auto *taper_cmd = app.add_subcommand("taper", "Map physical Pauli strings to logical ones");
    taper_cmd->add_option("--encoding", t_encoding, "Encoding id or YAML file");
    taper_cmd->add_option("--config", t_config, "Take the encoding from a config")->check(CLI::ExistingFile);
    taper_cmd->add_option("--pauli", t_strings, "Physical string, e.g. XIZY (repeatable)");
    taper_cmd->add_option("--input", t_input, "Pauli sum file ('-' for stdin)");

    std::string r_encoding, r_config, r_input, r_output;
    std::vector<double> r_hubbard;
    auto *reduce_cmd = app.add_subcommand("reduce-hamiltonian", "Encode and recombine Hamiltonian terms");
    reduce_cmd->add_option("--encoding", r_encoding, "Encoding id or YAML file");
    reduce_cmd->add_option("--config", r_config, "Take the encoding from a config")->check(CLI::ExistingFile);
    reduce_cmd->add_option("--input", r_input, "Pauli sum file on the physical qubits ('-' for stdin)");
    reduce_cmd->add_option("--hubbard", r_hubbard, "Encode the 2x3 Hubbard model with hopping t and on-site U")
        ->expected(2);
    reduce_cmd->add_option("--output", r_output, "Write the reduced sum here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        for (int i = 0; i < 3; i++)
            if (*run_cmds[i]) return run_experiment(runs[i], names[i]);

        if (*validate_cmd) {
            if (v_encodings.empty() && !v_config.empty()) v_encodings = load_config(v_config).encodings;
            if (v_encodings.empty()) throw std::invalid_argument("give --encoding or --config");
            int status = 0;
            for (const auto &id : v_encodings) {
                Encoding enc = named_encoding(id);
                auto bad = relation_violations(enc);
                json j = code_json(id, enc);
                j["relations_ok"] = bad.empty();
                j["violations"] = bad;
                std::cout << j.dump() << "\n";
                if (!bad.empty()) status = 1;
            }
            return status;
        }

        if (*taper_cmd) {
            Encoding enc = named_encoding(encoding_from(t_encoding, t_config));
            std::vector<std::pair<cplx, SignedPauli>> in;
            for (const auto &s : t_strings) in.push_back({1.0, SignedPauli::from_text(s)});
            if (!t_input.empty())
                for (const auto &t : read_sum(t_input).terms()) in.push_back({t.coef, t.pauli});
            if (in.empty()) throw std::invalid_argument("give --pauli or --input");
            TaperingContext ctx = make_tapering_context(enc.stabilizers);
            if (enc.stabilizers.empty()) {
                ctx.n_qubits = enc.n_qubits;
                for (size_t q = 0; q < enc.n_qubits; q++) ctx.kept_qubits.push_back(q);
            }
            std::cout << "# coefficient\tphysical\tlogical\tmult_mask\tanticommute_mask\n";
            for (const auto &[c, p] : in) {
                TaperRecord rec = ctx.taper_one(p);
                std::cout << format_coefficient(c) << "\t" << p.str() << "\t" << rec.logical.str() << "\t"
                          << rec.mult_mask.str() << "\t" << rec.anticommute_mask.str() << "\n";
            }
            return 0;
        }

        if (*reduce_cmd) {
            Encoding enc = named_encoding(encoding_from(r_encoding, r_config));
            PauliSum h;
            if (!r_hubbard.empty()) {
                h = encode_hamiltonian(enc, hubbard_hamiltonian(r_hubbard[0], r_hubbard[1]));
            } else if (!r_input.empty()) {
                h = read_sum(r_input);
            } else {
                throw std::invalid_argument("give --hubbard or --input");
            }
            PauliSum red = reduce_terms(h, enc.stabilizers);
            red.sort();
            std::cerr << "terms " << h.size() << " -> " << red.size() << ", l1 norm " << h.l1_norm() << " -> "
                      << red.l1_norm() << "\n";
            if (r_output.empty()) {
                red.write_text(std::cout);
            } else {
                std::ofstream out(r_output);
                red.write_text(out);
            }
            return 0;
        }
    } catch (const std::exception &e) {
        std::cerr << "love-sim: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
