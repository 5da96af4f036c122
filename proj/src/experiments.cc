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

#include "love/experiments.h"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "love/rng.h"

namespace love {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

uint64_t splitmix(uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

uint64_t derive_seed(uint64_t seed, uint64_t a, uint64_t b = 0) { return splitmix(splitmix(seed ^ splitmix(a)) + b); }

size_t uniform_index(Rng &rng, size_t n) { return std::min(n - 1, size_t(uniform01(rng) * double(n))); }

std::string fmt(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::vector<size_t> depth_at(const Schedule &s, const std::vector<size_t> &items) {
    auto prof = s.depth_profile();
    std::vector<size_t> out;
    for (size_t i : items) out.push_back(i == 0 ? 0 : prof[i - 1]);
    return out;
}

}  // namespace

// ---------------------------------------------------------------- lattice

std::vector<std::array<int, 2>> grid_coords(size_t width, size_t height) {
    std::vector<std::array<int, 2>> out;
    for (size_t y = 0; y < height; y++)
        for (size_t x = 0; x < width; x++) out.push_back({int(x), int(y)});
    return out;
}

std::vector<Edge> grid_pairs(size_t width, size_t height) {
    std::vector<Edge> out;
    for (size_t y = 0; y < height; y++) {
        for (size_t x = 0; x < width; x++) {
            uint32_t m = uint32_t(y * width + x);
            if (x + 1 < width) out.push_back({m, m + 1});
            if (y + 1 < height) out.push_back({m, uint32_t(m + width)});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<uint32_t> perimeter_modes(size_t width, size_t height) {
    std::vector<uint32_t> out;
    auto at = [&](size_t x, size_t y) { return uint32_t(y * width + x); };
    if (width == 0 || height == 0) return out;
    if (height == 1 || width == 1) {
        for (size_t m = 0; m < width * height; m++) out.push_back(uint32_t(m));
        return out;
    }
    for (size_t x = 0; x < width; x++) out.push_back(at(x, 0));
    for (size_t y = 1; y < height; y++) out.push_back(at(width - 1, y));
    for (size_t x = width - 1; x-- > 0;) out.push_back(at(x, height - 1));
    for (size_t y = height - 1; y-- > 1;) out.push_back(at(0, y));
    return out;
}

// ---------------------------------------------------------------- encodings

namespace {

const char *const kFixtureIds[] = {"compact_3x3", "compact_4x3", "compact_hubbard_2x3",
                                   "gse_3x3",     "gse_4x3",     "gse_hubbard_2x3"};

Encoding named_jw(const std::string &name, const std::vector<uint32_t> &order, size_t w, size_t h) {
    Encoding e = build_jordan_wigner(order, grid_coords(w, h));
    e.name = name;
    return e;
}

}  // namespace

std::vector<std::string> builtin_encoding_ids() {
    std::vector<std::string> out = {"jw_3x3", "jw1_4x3", "jw2_4x3", "gaqm_4x3"};
    for (const char *f : kFixtureIds) out.push_back(f);
    return out;
}

Encoding named_encoding(const std::string &id, const std::string &fixture_dir) {
    if (id == "jw_3x3") return named_jw(id, {0, 1, 2, 5, 4, 3, 6, 7, 8}, 3, 3);
    if (id == "jw1_4x3") return named_jw(id, {0, 1, 5, 4, 8, 9, 10, 11, 7, 6, 2, 3}, 4, 3);
    if (id == "jw2_4x3") return named_jw(id, {0, 1, 2, 3, 7, 6, 5, 4, 8, 9, 10, 11}, 4, 3);
    if (id == "gaqm_4x3") {
        Encoding base = named_encoding("jw2_4x3");
        auto t = gaqm_walk_strings(base, {1, 5, 9, 8, 4, 0, 1, 2, 3, 7, 11, 10, 6, 2});
        Encoding g = build_gaqm(base, t, gaqm_default_matrix(t.size()));
        g.name = id;
        return g;
    }
    for (const char *f : kFixtureIds)
        if (id == f) return load_encoding(fixture_dir + "/" + id + ".yaml");
    if (std::filesystem::is_regular_file(id)) return load_encoding(id);
    throw std::invalid_argument("unknown encoding '" + id + "'");
}

// ---------------------------------------------------------------- config

namespace {

template <typename T>
void read(const YAML::Node &node, const char *key, T &out) {
    if (node[key]) out = node[key].as<T>();
}

void check_keys(const YAML::Node &node, const std::string &where, std::initializer_list<const char *> keys) {
    if (!node) return;
    if (!node.IsMap()) throw std::invalid_argument(where + " must be a mapping");
    for (const auto &kv : node) {
        std::string k = kv.first.as<std::string>();
        if (std::none_of(keys.begin(), keys.end(), [&](const char *c) { return k == c; }))
            throw std::invalid_argument("unknown key '" + k + "' in " + where);
    }
}

}  // namespace

void ExperimentConfig::validate() const {
    auto bad = [](const std::string &m) { throw std::invalid_argument(m); };
    if (experiment != "random" && experiment != "vqe" && experiment != "floquet")
        bad("experiment must be random, vqe or floquet");
    if (encodings.empty()) bad("no encodings configured");
    if (width == 0 || height == 0) bad("lattice dimensions must be positive");
    if (shots == 0) bad("shots must be positive");
    noise.validate();
    if (store != "auto" && store != "full" && store != "streaming") bad("store must be auto, full or streaming");
    if (experiment == "random") {
        if (random.realizations == 0) bad("random.realizations must be positive");
        if (random.checkpoint_every == 0) bad("random.checkpoint_every must be positive");
    }
    if (experiment == "vqe") {
        if (width != 4 || height != 3) bad("vqe runs the 2x3 Hubbard model on the 4x3 mode layout");
        if (!(vqe.learning_rate > 0)) bad("vqe.learning_rate must be positive");
    }
    if (experiment == "floquet") {
        if (floquet.timesteps == 0) bad("floquet.timesteps must be positive");
        if (floquet.layers_per_step == 0) bad("floquet.layers_per_step must be positive");
        std::set<uint32_t> seen;
        for (uint32_t m : floquet.initial_modes) {
            if (m >= width * height) bad("floquet.initial_modes entry " + std::to_string(m) + " outside the lattice");
            if (!seen.insert(m).second) bad("floquet.initial_modes has a repeated mode");
        }
    }
}

ExperimentConfig parse_config(const std::string &yaml_text) {
    YAML::Node doc;
    try {
        doc = YAML::Load(yaml_text);
    } catch (const YAML::Exception &e) {
        throw std::invalid_argument(std::string("config parse error: ") + e.what());
    }
    check_keys(doc, "config",
               {"experiment", "lattice", "encodings", "shots", "seed", "noise", "postselect", "store", "noisy_prep",
                "threads", "output", "fixture_dir", "random", "vqe", "floquet"});
    check_keys(doc["lattice"], "lattice", {"width", "height"});
    check_keys(doc["noise"], "noise", {"gate_p", "idle_p"});
    check_keys(doc["random"], "random", {"rotations", "checkpoint_every", "realizations", "occupied"});
    check_keys(doc["vqe"], "vqe", {"t", "U", "sweeps", "learning_rate"});
    check_keys(doc["floquet"], "floquet", {"timesteps", "hop_angle", "initial_modes", "layers_per_step"});

    ExperimentConfig c;
    try {
        read(doc, "experiment", c.experiment);
        if (c.experiment == "vqe") c.width = 4, c.height = 3;
        if (auto l = doc["lattice"]) {
            read(l, "width", c.width);
            read(l, "height", c.height);
        }
        if (auto e = doc["encodings"]) {
            if (e.IsScalar())
                c.encodings = {e.as<std::string>()};
            else
                c.encodings = e.as<std::vector<std::string>>();
        }
        read(doc, "shots", c.shots);
        read(doc, "seed", c.seed);
        if (auto n = doc["noise"]) {
            read(n, "gate_p", c.noise.gate_noise_p);
            read(n, "idle_p", c.noise.idle_noise_p);
        }
        read(doc, "postselect", c.postselect);
        read(doc, "store", c.store);
        read(doc, "noisy_prep", c.noisy_prep);
        read(doc, "threads", c.threads);
        read(doc, "output", c.output);
        read(doc, "fixture_dir", c.fixture_dir);
        if (auto r = doc["random"]) {
            read(r, "rotations", c.random.rotations);
            read(r, "checkpoint_every", c.random.checkpoint_every);
            read(r, "realizations", c.random.realizations);
            if (r["occupied"]) c.random.occupied = r["occupied"].as<std::vector<uint32_t>>();
        }
        if (auto v = doc["vqe"]) {
            read(v, "t", c.vqe.t);
            read(v, "U", c.vqe.U);
            read(v, "sweeps", c.vqe.sweeps);
            read(v, "learning_rate", c.vqe.learning_rate);
        }
        if (auto f = doc["floquet"]) {
            read(f, "timesteps", c.floquet.timesteps);
            read(f, "hop_angle", c.floquet.hop_angle);
            if (f["initial_modes"]) c.floquet.initial_modes = f["initial_modes"].as<std::vector<uint32_t>>();
            read(f, "layers_per_step", c.floquet.layers_per_step);
        }
    } catch (const YAML::Exception &e) {
        throw std::invalid_argument(std::string("config: bad value: ") + e.what());
    }
    c.validate();
    return c;
}

ExperimentConfig load_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read config " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string dump_config(const ExperimentConfig &c) {
    YAML::Emitter out;
    out << YAML::BeginMap;
    out << YAML::Key << "experiment" << YAML::Value << c.experiment;
    out << YAML::Key << "lattice" << YAML::Value << YAML::Flow << YAML::BeginMap << YAML::Key << "width"
        << YAML::Value << c.width << YAML::Key << "height" << YAML::Value << c.height << YAML::EndMap;
    out << YAML::Key << "encodings" << YAML::Value << YAML::Flow << c.encodings;
    out << YAML::Key << "shots" << YAML::Value << c.shots;
    out << YAML::Key << "seed" << YAML::Value << c.seed;
    out << YAML::Key << "noise" << YAML::Value << YAML::Flow << YAML::BeginMap << YAML::Key << "gate_p"
        << YAML::Value << c.noise.gate_noise_p << YAML::Key << "idle_p" << YAML::Value << c.noise.idle_noise_p
        << YAML::EndMap;
    out << YAML::Key << "postselect" << YAML::Value << c.postselect;
    out << YAML::Key << "store" << YAML::Value << c.store;
    out << YAML::Key << "noisy_prep" << YAML::Value << c.noisy_prep;
    out << YAML::Key << "threads" << YAML::Value << c.threads;
    out << YAML::Key << "output" << YAML::Value << c.output;
    out << YAML::Key << "fixture_dir" << YAML::Value << c.fixture_dir;
    if (c.experiment == "random") {
        out << YAML::Key << "random" << YAML::Value << YAML::BeginMap;
        out << YAML::Key << "rotations" << YAML::Value << c.random.rotations;
        out << YAML::Key << "checkpoint_every" << YAML::Value << c.random.checkpoint_every;
        out << YAML::Key << "realizations" << YAML::Value << c.random.realizations;
        if (c.random.occupied) out << YAML::Key << "occupied" << YAML::Value << YAML::Flow << *c.random.occupied;
        out << YAML::EndMap;
    } else if (c.experiment == "vqe") {
        out << YAML::Key << "vqe" << YAML::Value << YAML::BeginMap;
        out << YAML::Key << "t" << YAML::Value << c.vqe.t << YAML::Key << "U" << YAML::Value << c.vqe.U;
        out << YAML::Key << "sweeps" << YAML::Value << c.vqe.sweeps;
        out << YAML::Key << "learning_rate" << YAML::Value << c.vqe.learning_rate;
        out << YAML::EndMap;
    } else if (c.experiment == "floquet") {
        out << YAML::Key << "floquet" << YAML::Value << YAML::BeginMap;
        out << YAML::Key << "timesteps" << YAML::Value << c.floquet.timesteps;
        out << YAML::Key << "hop_angle" << YAML::Value << c.floquet.hop_angle;
        out << YAML::Key << "initial_modes" << YAML::Value << YAML::Flow << c.floquet.initial_modes;
        out << YAML::Key << "layers_per_step" << YAML::Value << c.floquet.layers_per_step;
        out << YAML::EndMap;
    }
    out << YAML::EndMap;
    return std::string(out.c_str()) + "\n";
}

std::vector<Encoding> resolve_encodings(const ExperimentConfig &cfg) {
    std::vector<Encoding> out;
    for (const auto &id : cfg.encodings) out.push_back(named_encoding(id, cfg.fixture_dir));
    return out;
}

// ---------------------------------------------------------------- systems

std::array<SignedPauli, 2> EncodedSystem::hop_generators(uint32_t j, uint32_t k) const {
    SignedPauli a = table->exchange(j, k);
    SignedPauli pa = table->vertex(j) * a;
    SignedPauli pb = a * table->vertex(k);
    pa.times_i(3);
    pb.times_i(3);
    return {table->minimized(pa), table->minimized(pb)};
}

void EncodedSystem::add_hop(Schedule &s, uint32_t j, uint32_t k, double theta) const {
    auto g = hop_generators(j, k);
    s.add_rotation(g[0], theta / 2);
    s.add_rotation(g[1], theta / 2);
}

StoreMode EncodedSystem::store_mode(const std::string &setting) const {
    if (setting == "full") return StoreMode::FULL;
    if (setting == "streaming") return StoreMode::STREAMING;
    return default_store_mode(engine->n_logical());
}

EncodedSystem make_system(Encoding enc, size_t width, size_t height, const std::vector<uint32_t> &occupied) {
    if (enc.n_modes() != width * height)
        throw std::invalid_argument("encoding " + enc.name + " has " + std::to_string(enc.n_modes()) +
                                    " modes, lattice has " + std::to_string(width * height));
    if (!enc.graph.coords.empty() && enc.graph.coords != grid_coords(width, height))
        throw std::invalid_argument("encoding " + enc.name + " does not match the " + std::to_string(width) + "x" +
                                    std::to_string(height) + " lattice coordinates");
    EncodedSystem s;
    s.enc = std::make_unique<Encoding>(std::move(enc));
    s.table = std::make_unique<OperatorTable>(*s.enc);
    s.engine = std::make_unique<ShotEngine>(s.enc->n_qubits, s.enc->stabilizers);
    s.prep = make_prep_spec(*s.enc, occupied);
    return s;
}

// ---------------------------------------------------------------- output

void write_metrics_csv(std::ostream &out, const std::vector<MetricsRow> &rows) {
    out << "encoding,x,fidelity_mitigated,fidelity_unmitigated,kept_shots,total_shots,sampling_increase,circuit_depth";
    if (!rows.empty())
        for (const auto &o : rows[0].observables) out << "," << o.name << "_mitigated," << o.name << "_unmitigated";
    out << "\n";
    for (const auto &r : rows) {
        out << r.encoding << "," << fmt(r.x) << "," << fmt(r.fidelity_mitigated) << "," << fmt(r.fidelity_unmitigated)
            << "," << fmt(r.kept_shots) << "," << fmt(r.total_shots) << "," << fmt(r.sampling_increase) << ","
            << fmt(r.circuit_depth);
        for (const auto &o : r.observables) out << "," << fmt(o.mitigated) << "," << fmt(o.unmitigated);
        out << "\n";
    }
}

void write_trace_csv(std::ostream &out, const std::vector<VqeTraceRow> &rows) {
    out << "encoding,update,parameter,energy,energy_mitigated,energy_unmitigated,energy_noiseless,difference,"
           "sampling_increase,circuit_depth\n";
    for (const auto &r : rows)
        out << r.encoding << "," << r.update << "," << r.parameter << "," << fmt(r.energy) << ","
            << fmt(r.energy_mitigated) << "," << fmt(r.energy_unmitigated) << "," << fmt(r.energy_noiseless) << ","
            << fmt(r.difference) << "," << fmt(r.sampling_increase) << "," << fmt(r.circuit_depth) << "\n";
}

void write_occupations_csv(std::ostream &out, const std::vector<OccupationRow> &rows, size_t width, size_t height) {
    out << "encoding,timestep";
    for (uint32_t m : perimeter_modes(width, height)) out << ",n" << m;
    out << "\n";
    for (const auto &r : rows) {
        out << r.encoding << "," << r.timestep;
        for (double v : r.perimeter) out << "," << fmt(v);
        out << "\n";
    }
}

namespace {

/// Fills the store-derived columns of a row.
void fill_row(MetricsRow &row, const DensityBlockStore &st) {
    auto rec = st.postselect();
    auto fm = st.fidelity(true), fu = st.fidelity(false);
    row.fidelity_mitigated = fm.empty ? kNaN : fm.value;
    row.fidelity_unmitigated = fu.value;
    row.kept_shots = double(rec.kept_shots);
    row.total_shots = double(rec.total_shots);
    row.sampling_increase = rec.sampling_increase;
    for (size_t i = 0; i < st.observables().size(); i++) {
        auto m = st.expectation(i, true), u = st.expectation(i, false);
        row.observables.push_back({st.observables()[i].name, m.empty ? kNaN : m.value, u.value});
    }
}

RunOptions run_options(const ExperimentConfig &cfg) {
    RunOptions o;
    o.shots = cfg.shots;
    o.noisy_prep = cfg.noisy_prep;
    o.threads = cfg.threads;
    return o;
}

}  // namespace

// ---------------------------------------------------------------- random circuits

std::string LogicalLabel::str() const {
    switch (kind) {
        case Kind::EDGE:
            return "A" + std::to_string(a) + "_" + std::to_string(b);
        case Kind::VERTEX:
            return "B" + std::to_string(a);
        case Kind::VERTEX_PAIR:
            return "B" + std::to_string(a) + "B" + std::to_string(b);
    }
    return "?";
}

std::vector<LogicalLabel> random_label_set(size_t width, size_t height) {
    std::vector<LogicalLabel> out;
    auto pairs = grid_pairs(width, height);
    for (const auto &[a, b] : pairs) out.push_back({LogicalLabel::Kind::EDGE, a, b});
    for (uint32_t m = 0; m < width * height; m++) out.push_back({LogicalLabel::Kind::VERTEX, m, m});
    for (const auto &[a, b] : pairs) out.push_back({LogicalLabel::Kind::VERTEX_PAIR, a, b});
    return out;
}

SignedPauli label_operator(const OperatorTable &table, const LogicalLabel &l) {
    SignedPauli p;
    switch (l.kind) {
        case LogicalLabel::Kind::EDGE:
            p = table.exchange(l.a, l.b);
            break;
        case LogicalLabel::Kind::VERTEX:
            p = table.vertex(l.a);
            break;
        case LogicalLabel::Kind::VERTEX_PAIR:
            p = table.minimized(table.vertex(l.a) * table.vertex(l.b));
            break;
    }
    if (!p.is_hermitian()) throw std::logic_error("operator " + l.str() + " is not Hermitian");
    return p;
}

std::vector<RandomStep> draw_random_sequence(const std::vector<LogicalLabel> &labels, size_t count, uint64_t seed,
                                             uint64_t realization) {
    if (labels.empty()) throw std::invalid_argument("no labels to draw from");
    Rng rng = make_stream(seed, Stream::ANGLES, realization);
    std::vector<RandomStep> out;
    for (size_t i = 0; i < count; i++) {
        RandomStep s;
        s.label = labels[uniform_index(rng, labels.size())];
        s.angle = 2 * kPi * uniform01(rng);
        out.push_back(s);
    }
    return out;
}

uint64_t derived_seed(uint64_t seed, uint64_t index) { return derive_seed(seed, index); }

std::vector<MetricsRow> run_random(const ExperimentConfig &cfg, const std::vector<Encoding> &encs) {
    cfg.validate();
    const size_t N = cfg.width * cfg.height;
    std::vector<uint32_t> occupied;
    if (cfg.random.occupied) {
        occupied = *cfg.random.occupied;
    } else {
        for (uint32_t m = 0; m < 2 * (N / 4); m++) occupied.push_back(m);
    }
    std::vector<EncodedSystem> systems;
    for (const auto &e : encs) systems.push_back(make_system(e, cfg.width, cfg.height, occupied));

    const auto &rp = cfg.random;
    std::vector<size_t> counts;
    for (size_t c = 0; c < rp.rotations; c += rp.checkpoint_every) counts.push_back(c);
    counts.push_back(rp.rotations);

    auto labels = random_label_set(cfg.width, cfg.height);
    const size_t C = counts.size();
    struct Acc {
        double fm = 0, fu = 0, kept = 0, total = 0, si = 0, depth = 0;
        size_t nfm = 0, nsi = 0;
    };
    std::vector<std::vector<Acc>> acc(systems.size(), std::vector<Acc>(C));
    for (size_t rz = 0; rz < rp.realizations; rz++) {
        auto seq = draw_random_sequence(labels, rp.rotations, cfg.seed, rz);
        NoiseModel noise = cfg.noise;
        noise.rng_seed = derive_seed(cfg.seed, rz);
        for (size_t e = 0; e < systems.size(); e++) {
            const auto &sys = systems[e];
            Schedule s(sys.enc->n_qubits);
            std::vector<size_t> after = {0};
            for (const auto &st : seq) {
                s.add_rotation(label_operator(*sys.table, st.label), st.angle);
                if (cfg.noise.idle_noise_p > 0) s.add_idle(1);
                after.push_back(s.size());
            }
            std::vector<size_t> items;
            for (size_t c : counts) items.push_back(after[c]);
            auto ideal = ideal_states(*sys.engine, s, sys.prep, items);
            std::vector<DensityBlockStore> stores;
            StoreMode mode = sys.store_mode(cfg.store);
            for (size_t i = 0; i < C; i++)
                stores.emplace_back(sys.engine->n_logical(), sys.engine->r(), mode, std::vector<TaperedObservable>{},
                                    ideal[i]);
            run_shots(*sys.engine, s, sys.prep, noise, run_options(cfg), items, stores);
            auto depths = depth_at(s, items);
            for (size_t i = 0; i < C; i++) {
                MetricsRow row;
                fill_row(row, stores[i]);
                Acc &a = acc[e][i];
                if (!std::isnan(row.fidelity_mitigated)) a.fm += row.fidelity_mitigated, a.nfm++;
                if (std::isfinite(row.sampling_increase)) a.si += row.sampling_increase, a.nsi++;
                a.fu += row.fidelity_unmitigated;
                a.kept += row.kept_shots;
                a.total += row.total_shots;
                a.depth += double(depths[i]);
            }
        }
    }
    std::vector<MetricsRow> rows;
    const double R = double(rp.realizations);
    for (size_t e = 0; e < systems.size(); e++) {
        for (size_t i = 0; i < C; i++) {
            const Acc &a = acc[e][i];
            MetricsRow row;
            row.encoding = systems[e].enc->name;
            row.x = double(counts[i]);
            row.fidelity_mitigated = a.nfm ? a.fm / double(a.nfm) : kNaN;
            row.fidelity_unmitigated = a.fu / R;
            row.kept_shots = a.kept / R;
            row.total_shots = a.total / R;
            row.sampling_increase = a.nsi ? a.si / double(a.nsi) : std::numeric_limits<double>::infinity();
            row.circuit_depth = a.depth / R;
            rows.push_back(row);
        }
    }
    return rows;
}

std::vector<MetricsRow> run_random(const ExperimentConfig &cfg) { return run_random(cfg, resolve_encodings(cfg)); }

// ---------------------------------------------------------------- Hubbard VQE

uint32_t hubbard_mode(uint32_t site, uint32_t spin) {
    if (site >= 6 || spin >= 2) throw std::invalid_argument("hubbard site or spin out of range");
    uint32_t sx = site % 2, sy = site / 2;
    return 4 * sy + sx + 2 * spin;
}

std::vector<Edge> hubbard_site_edges() {
    std::vector<Edge> out;
    for (uint32_t s = 0; s < 6; s++) {
        if (s % 2 == 0) out.push_back({s, s + 1});
        if (s + 2 < 6) out.push_back({s, s + 2});
    }
    std::sort(out.begin(), out.end());
    return out;
}

FermionSum hubbard_hamiltonian(double t, double U) {
    FermionSum f;
    f.n_modes = 12;
    for (const auto &[a, b] : hubbard_site_edges())
        for (uint32_t sp = 0; sp < 2; sp++) f.add_hopping(t, hubbard_mode(a, sp), hubbard_mode(b, sp));
    for (uint32_t s = 0; s < 6; s++) f.add_density_density(U, hubbard_mode(s, 0), hubbard_mode(s, 1));
    return f;
}

std::vector<uint32_t> hubbard_initial_modes() {
    return {hubbard_mode(0, 0), hubbard_mode(1, 0), hubbard_mode(0, 1), hubbard_mode(1, 1)};
}

std::vector<double> Ansatz::rotation_angles(const std::vector<double> &theta) const {
    if (theta.size() != n_params)
        throw std::invalid_argument("expected " + std::to_string(n_params) + " parameters, got " +
                                    std::to_string(theta.size()));
    std::vector<double> out;
    for (const auto &r : rotations) out.push_back(theta[r.parameter]);
    return out;
}

Ansatz hubbard_ansatz(const EncodedSystem &sys) {
    if (sys.enc->n_modes() != 12) throw std::invalid_argument("the Hubbard ansatz needs 12 modes");
    const char *spin[2] = {"up", "dn"};
    Ansatz a;
    // Operator order as written; reversed into time order at the end.
    std::vector<AnsatzRotation> written;
    for (uint32_t s = 0; s < 6; s++) {
        for (uint32_t sp = 0; sp < 2; sp++) {
            written.push_back({sys.table->vertex(hubbard_mode(s, sp)), a.n_params++});
            a.param_names.push_back("theta1_s" + std::to_string(s) + "_" + spin[sp]);
        }
    }
    for (uint32_t s = 0; s < 6; s++) {
        auto g = sys.table->minimized(sys.table->vertex(hubbard_mode(s, 0)) * sys.table->vertex(hubbard_mode(s, 1)));
        written.push_back({g, a.n_params++});
        a.param_names.push_back("theta2_s" + std::to_string(s));
    }
    for (const auto &[j, k] : hubbard_site_edges()) {
        for (uint32_t sp = 0; sp < 2; sp++) {
            auto g = sys.hop_generators(hubbard_mode(j, sp), hubbard_mode(k, sp));
            written.push_back({g[1], a.n_params});
            written.push_back({g[0], a.n_params++});
            a.param_names.push_back("theta3_e" + std::to_string(j) + std::to_string(k) + "_" + spin[sp]);
        }
    }
    a.rotations.assign(written.rbegin(), written.rend());
    a.occurrences.resize(a.n_params);
    for (size_t i = 0; i < a.rotations.size(); i++) a.occurrences[a.rotations[i].parameter].push_back(i);
    return a;
}

double parameter_shift_gradient(const std::function<double(const std::vector<double> &)> &energy,
                                const std::vector<size_t> &occurrences, const std::vector<double> &rotation_angles) {
    double g = 0;
    for (size_t j : occurrences) {
        if (j >= rotation_angles.size()) throw std::invalid_argument("occurrence index out of range");
        auto plus = rotation_angles, minus = rotation_angles;
        plus[j] += kPi / 4;
        minus[j] -= kPi / 4;
        g += energy(plus) - energy(minus);
    }
    return g;
}

VqeProblem::VqeProblem(EncodedSystem sys, const VqeParams &p) : sys_(std::move(sys)), ansatz_(hubbard_ansatz(sys_)) {
    ham_ = taper_observable(encode_hamiltonian(*sys_.enc, hubbard_hamiltonian(p.t, p.U)), sys_.engine->context(),
                            "energy");
    initial_ = sys_.engine->ideal_initial(sys_.prep);
}

Schedule VqeProblem::schedule(const std::vector<double> &angles) const {
    if (angles.size() != ansatz_.rotations.size()) throw std::invalid_argument("one angle per ansatz rotation");
    Schedule s(sys_.enc->n_qubits);
    for (size_t i = 0; i < angles.size(); i++) s.add_rotation(ansatz_.rotations[i].generator, angles[i]);
    return s;
}

double VqeProblem::exact_energy(const std::vector<double> &angles) const {
    Rng rng(0);
    ShotResult out = sys_.engine->run_shot(schedule(angles), initial_, NoiseModel{}, rng);
    return ham_.evaluate(out, sys_.engine->kernel_table());
}

VqeProblem::Sample VqeProblem::sampled_energy(const std::vector<double> &angles, const NoiseModel &noise,
                                              const RunOptions &opts, StoreMode mode) const {
    Schedule s = schedule(angles);
    std::vector<DensityBlockStore> stores;
    auto ideal = ideal_states(*sys_.engine, s, sys_.prep, {s.size()});
    stores.emplace_back(sys_.engine->n_logical(), sys_.engine->r(), mode, std::vector<TaperedObservable>{ham_},
                        ideal[0]);
    run_shots(*sys_.engine, s, sys_.prep, noise, opts, {s.size()}, stores);
    Sample out;
    out.record = stores[0].postselect();
    auto fm = stores[0].fidelity(true);
    out.fidelity_mitigated = fm.empty ? kNaN : fm.value;
    out.fidelity_unmitigated = stores[0].fidelity(false).value;
    auto m = stores[0].expectation(0, true);
    out.mitigated = m.empty ? kNaN : m.value;
    out.unmitigated = stores[0].expectation(0, false).value;
    return out;
}

VqeResult run_vqe(const ExperimentConfig &cfg, const std::vector<Encoding> &encs) {
    cfg.validate();
    VqeResult res;
    std::vector<double> theta0(32);
    {
        Rng rng = make_stream(cfg.seed, Stream::ANGLES, 0);
        for (auto &t : theta0) t = 2 * kPi * uniform01(rng);
    }
    const RunOptions opts = run_options(cfg);
    for (const auto &enc : encs) {
        VqeProblem prob(make_system(enc, 4, 3, hubbard_initial_modes()), cfg.vqe);
        const auto &an = prob.ansatz();
        if (an.n_params != theta0.size()) throw std::logic_error("parameter count mismatch");
        const std::string name = prob.system().enc->name;
        StoreMode mode = prob.system().store_mode(cfg.store);
        double depth = double(prob.schedule(an.rotation_angles(theta0)).depth_profile().back());
        uint64_t evals = 0;
        auto sample = [&](const std::vector<double> &angles) {
            NoiseModel nm = cfg.noise;
            nm.rng_seed = derive_seed(cfg.seed, evals++, 1);
            return prob.sampled_energy(angles, nm, opts, mode);
        };
        auto pick = [&](const VqeProblem::Sample &s) { return cfg.postselect ? s.mitigated : s.unmitigated; };
        auto noisy_energy = [&](const std::vector<double> &angles) { return pick(sample(angles)); };
        auto exact = [&](const std::vector<double> &angles) { return prob.exact_energy(angles); };

        std::vector<double> theta = theta0, ref = theta0;
        auto record = [&](size_t update, size_t param) {
            auto s = sample(an.rotation_angles(theta));
            VqeTraceRow row;
            row.encoding = name;
            row.update = update;
            row.parameter = param;
            row.energy_mitigated = s.mitigated;
            row.energy_unmitigated = s.unmitigated;
            row.energy = pick(s);
            row.energy_noiseless = exact(an.rotation_angles(ref));
            row.difference = row.energy - row.energy_noiseless;
            row.sampling_increase = s.record.sampling_increase;
            row.circuit_depth = depth;
            res.trace.push_back(row);
            MetricsRow m;
            m.encoding = name;
            m.x = double(update);
            m.fidelity_mitigated = s.fidelity_mitigated;
            m.fidelity_unmitigated = s.fidelity_unmitigated;
            m.kept_shots = double(s.record.kept_shots);
            m.total_shots = double(s.record.total_shots);
            m.sampling_increase = s.record.sampling_increase;
            m.circuit_depth = depth;
            m.observables.push_back({"energy", s.mitigated, s.unmitigated});
            m.observables.push_back({"energy_noiseless", row.energy_noiseless, row.energy_noiseless});
            res.metrics.push_back(m);
        };
        record(0, 0);
        size_t update = 0;
        for (size_t sweep = 0; sweep < cfg.vqe.sweeps; sweep++) {
            for (size_t p = 0; p < an.n_params; p++) {
                double g = parameter_shift_gradient(noisy_energy, an.occurrences[p], an.rotation_angles(theta));
                if (std::isfinite(g)) theta[p] -= cfg.vqe.learning_rate * g;
                double gr = parameter_shift_gradient(exact, an.occurrences[p], an.rotation_angles(ref));
                ref[p] -= cfg.vqe.learning_rate * gr;
                record(++update, p);
            }
        }
    }
    return res;
}

VqeResult run_vqe(const ExperimentConfig &cfg) { return run_vqe(cfg, resolve_encodings(cfg)); }

// ---------------------------------------------------------------- Floquet

std::array<std::vector<Edge>, 4> floquet_layers(size_t width, size_t height) {
    const int dirs[4][2] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    std::array<std::vector<Edge>, 4> out;
    for (size_t l = 0; l < 4; l++) {
        for (size_t y = 0; y < height; y++) {
            for (size_t x = 0; x < width; x++) {
                if ((x + y) % 2) continue;
                long nx = long(x) + dirs[l][0], ny = long(y) + dirs[l][1];
                if (nx < 0 || ny < 0 || nx >= long(width) || ny >= long(height)) continue;
                out[l].push_back({uint32_t(y * width + x), uint32_t(ny * long(width) + nx)});
            }
        }
    }
    return out;
}

FloquetResult run_floquet(const ExperimentConfig &cfg, const std::vector<Encoding> &encs) {
    cfg.validate();
    const auto &fp = cfg.floquet;
    auto layers = floquet_layers(cfg.width, cfg.height);
    auto perim = perimeter_modes(cfg.width, cfg.height);
    FloquetResult res;
    for (const auto &enc : encs) {
        EncodedSystem sys = make_system(enc, cfg.width, cfg.height, fp.initial_modes);
        Schedule s(sys.enc->n_qubits);
        std::vector<size_t> items = {0};
        for (size_t t = 0; t < fp.timesteps; t++) {
            for (size_t l = 0; l < fp.layers_per_step; l++) {
                for (const auto &[a, b] : layers[(t * fp.layers_per_step + l) % 4]) sys.add_hop(s, a, b, fp.hop_angle);
                if (cfg.noise.idle_noise_p > 0) s.add_idle(1);
            }
            items.push_back(s.size());
        }
        const auto &ctx = sys.engine->context();
        std::vector<TaperedObservable> obs = {taper_observable(number_operator(*sys.enc), ctx, "N")};
        for (uint32_t m : perim)
            obs.push_back(taper_observable(encode_pair(*sys.enc, m, m), ctx, "n" + std::to_string(m)));
        auto ideal = ideal_states(*sys.engine, s, sys.prep, items);
        StoreMode mode = sys.store_mode(cfg.store);
        std::vector<DensityBlockStore> stores;
        for (size_t i = 0; i < items.size(); i++)
            stores.emplace_back(sys.engine->n_logical(), sys.engine->r(), mode, obs, ideal[i]);
        NoiseModel noise = cfg.noise;
        noise.rng_seed = derive_seed(cfg.seed, 0);
        run_shots(*sys.engine, s, sys.prep, noise, run_options(cfg), items, stores);
        auto depths = depth_at(s, items);
        for (size_t i = 0; i < items.size(); i++) {
            MetricsRow row;
            row.encoding = sys.enc->name;
            row.x = double(i);
            row.circuit_depth = double(depths[i]);
            fill_row(row, stores[i]);
            OccupationRow occ;
            occ.encoding = row.encoding;
            occ.timestep = i;
            for (size_t j = 1; j < row.observables.size(); j++)
                occ.perimeter.push_back(cfg.postselect ? row.observables[j].mitigated : row.observables[j].unmitigated);
            res.metrics.push_back(std::move(row));
            res.occupations.push_back(std::move(occ));
        }
    }
    return res;
}

FloquetResult run_floquet(const ExperimentConfig &cfg) { return run_floquet(cfg, resolve_encodings(cfg)); }

// ---------------------------------------------------------------- scaling

ScalingWorkload scaling_workload(size_t n, size_t k, size_t rotations, uint64_t seed) {
    if (k == 0 || k > n || k > 30) throw std::invalid_argument("bad workload size");
    ScalingWorkload w;
    std::vector<SignedPauli> logical;
    for (size_t q = 0; q < k; q++) logical.push_back(SignedPauli::single(n, q, 'Z'));
    for (size_t a = k; a < n; a++) w.gens.push_back(SignedPauli::single(n, a, 'Z'));
    w.prep = make_prep_spec(w.gens, logical);
    w.schedule = Schedule(n);
    Rng rng = make_stream(seed, Stream::ANGLES, n * 1000 + k);
    for (size_t i = 0; i < rotations; i++) {
        SignedPauli p(n);
        size_t q = uniform_index(rng, k);
        switch (uniform_index(rng, 3)) {
            case 0:
                p.set_letter(q, 'Z');
                break;
            case 1:
                p.set_letter(q, 'X');
                p.set_letter((q + 1) % k, k > 1 ? 'X' : 'Z');
                break;
            default:
                p.set_letter(q, 'Y');
                p.set_letter((q + 1) % k, k > 1 ? 'Y' : 'Z');
                break;
        }
        for (int t = 0; t < 2 && n > k; t++) p.set_letter(k + uniform_index(rng, n - k), 'Z');
        w.schedule.add_rotation(p, 2 * kPi * uniform01(rng));
    }
    return w;
}

BenchmarkCase time_workload(size_t n, size_t k, size_t shots, double p, uint64_t seed) {
    ScalingWorkload w = scaling_workload(n, k, 20, seed);
    ShotEngine engine(n, w.gens);
    auto ideal = ideal_states(engine, w.schedule, w.prep, {w.schedule.size()});
    std::vector<DensityBlockStore> stores;
    stores.emplace_back(engine.n_logical(), engine.r(), StoreMode::STREAMING, std::vector<TaperedObservable>{},
                        ideal[0]);
    NoiseModel noise;
    noise.gate_noise_p = p;
    noise.rng_seed = seed;
    RunOptions opts;
    opts.shots = shots;
    opts.threads = 1;
    auto t0 = std::chrono::steady_clock::now();
    run_shots(engine, w.schedule, w.prep, noise, opts, {w.schedule.size()}, stores);
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return {n, k, dt / double(shots)};
}

}  // namespace love
