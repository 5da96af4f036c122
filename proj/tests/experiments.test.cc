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

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "love/rng.h"
#include "love/tapering.h"

using namespace love;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Fock-space state; basis bit m is the occupation of mode m, canonical order.
using Fock = std::vector<cplx>;

Fock ladder(const Fock &v, uint32_t m, bool dagger) {
    Fock out(v.size());
    for (size_t b = 0; b < v.size(); b++) {
        if (v[b] == 0.0) continue;
        bool occ = (b >> m) & 1;
        if (occ == dagger) continue;
        double sign = (__builtin_popcountll(b & ((size_t{1} << m) - 1)) & 1) ? -1 : 1;
        out[b ^ (size_t{1} << m)] += sign * v[b];
    }
    return out;
}

Fock hop(const Fock &v, uint32_t j, uint32_t k) {
    Fock a = ladder(ladder(v, k, false), j, true), b = ladder(ladder(v, j, false), k, true);
    for (size_t i = 0; i < a.size(); i++) a[i] += b[i];
    return a;
}

// exp(i phi (a_j^dag a_k + h.c.)).
Fock hop_rotation(const Fock &v, uint32_t j, uint32_t k, double phi) {
    Fock h = hop(v, j, k), out(v.size());
    for (size_t b = 0; b < v.size(); b++) {
        bool mixed = ((b >> j) & 1) != ((b >> k) & 1);
        out[b] = (mixed ? std::cos(phi) * v[b] : v[b]) + cplx(0, std::sin(phi)) * h[b];
    }
    return out;
}

// exp(i theta (-1)^(n_j + n_k + ...)) for the listed modes.
Fock parity_rotation(const Fock &v, std::vector<uint32_t> modes, double theta) {
    Fock out(v);
    for (size_t b = 0; b < v.size(); b++) {
        int par = 0;
        for (uint32_t m : modes) par ^= (b >> m) & 1;
        out[b] *= std::exp(cplx(0, par ? -theta : theta));
    }
    return out;
}

Fock slater(size_t n_modes, const std::vector<uint32_t> &occ) {
    Fock v(size_t{1} << n_modes);
    size_t b = 0;
    for (uint32_t m : occ) b |= size_t{1} << m;
    v[b] = 1;
    return v;
}

double number(const Fock &v, uint32_t m) {
    double s = 0;
    for (size_t b = 0; b < v.size(); b++)
        if ((b >> m) & 1) s += std::norm(v[b]);
    return s;
}

double hubbard_energy(const Fock &v, double t, double U) {
    cplx e = 0;
    for (const auto &[a, b] : hubbard_site_edges()) {
        for (uint32_t sp = 0; sp < 2; sp++) {
            Fock h = hop(v, hubbard_mode(a, sp), hubbard_mode(b, sp));
            for (size_t i = 0; i < v.size(); i++) e += t * std::conj(v[i]) * h[i];
        }
    }
    for (size_t b = 0; b < v.size(); b++) {
        for (uint32_t s = 0; s < 6; s++)
            if (((b >> hubbard_mode(s, 0)) & 1) && ((b >> hubbard_mode(s, 1)) & 1)) e += U * std::norm(v[b]);
    }
    return e.real();
}

// Ansatz in time order: theta3 pairs exp(2i theta h), then theta2, then theta1.
double oracle_vqe_energy(const std::vector<double> &theta, double t, double U) {
    Fock v = slater(12, hubbard_initial_modes());
    auto edges = hubbard_site_edges();
    for (size_t e = edges.size(); e-- > 0;) {
        for (uint32_t sp = 2; sp-- > 0;) {
            v = hop_rotation(v, hubbard_mode(edges[e].first, sp), hubbard_mode(edges[e].second, sp),
                             2 * theta[18 + 2 * e + sp]);
        }
    }
    for (uint32_t s = 0; s < 6; s++) v = parity_rotation(v, {hubbard_mode(s, 0), hubbard_mode(s, 1)}, theta[12 + s]);
    for (uint32_t s = 0; s < 6; s++)
        for (uint32_t sp = 0; sp < 2; sp++) v = parity_rotation(v, {hubbard_mode(s, sp)}, theta[2 * s + sp]);
    return hubbard_energy(v, t, U);
}

std::vector<double> random_theta(uint64_t seed) {
    Rng rng = make_stream(seed, Stream::ANGLES, 7);
    std::vector<double> th(32);
    for (auto &x : th) x = 2 * kPi * uniform01(rng);
    return th;
}

// 2x2 Jordan-Wigner restricted to even parity: one stabilizer.
Encoding toy_encoding() {
    Encoding e = build_jordan_wigner({0, 1, 3, 2}, grid_coords(2, 2));
    e.stabilizers.push_back(SignedPauli::from_text("ZZZZ"));
    e.name = "toy";
    validate(e);
    return e;
}

ExperimentConfig base_config(const std::string &experiment, size_t w, size_t h) {
    ExperimentConfig c;
    c.experiment = experiment;
    c.encodings = {"unused"};
    c.width = w;
    c.height = h;
    c.threads = 1;
    return c;
}

}  // namespace

TEST(experiments, grid_helpers) {
    EXPECT_EQ(grid_pairs(4, 3).size(), 17u);
    EXPECT_EQ(grid_pairs(3, 3).size(), 12u);
    std::vector<uint32_t> want = {0, 1, 2, 3, 7, 11, 10, 9, 8, 4};
    EXPECT_EQ(perimeter_modes(4, 3), want);
    EXPECT_EQ(perimeter_modes(2, 2), (std::vector<uint32_t>{0, 1, 3, 2}));
    EXPECT_EQ(grid_coords(4, 3)[6], (std::array<int, 2>{2, 1}));
}

TEST(experiments, floquet_layers_cover_each_bond_once) {
    for (auto [w, h] : {std::pair<size_t, size_t>{4, 3}, {3, 3}, {2, 2}}) {
        auto layers = floquet_layers(w, h);
        std::vector<Edge> all;
        for (const auto &l : layers) {
            std::vector<uint32_t> seen;
            for (auto [a, b] : l) {
                auto x = grid_coords(w, h)[a];
                EXPECT_EQ((x[0] + x[1]) % 2, 0);
                seen.push_back(a);
                seen.push_back(b);
                all.push_back({std::min(a, b), std::max(a, b)});
            }
            std::sort(seen.begin(), seen.end());
            EXPECT_EQ(std::adjacent_find(seen.begin(), seen.end()), seen.end()) << "layer touches a mode twice";
        }
        std::sort(all.begin(), all.end());
        EXPECT_EQ(all, grid_pairs(w, h));
    }
}

TEST(experiments, named_encodings) {
    for (const auto &id : builtin_encoding_ids()) {
        Encoding e = named_encoding(id);
        EXPECT_TRUE(relation_violations(e).empty()) << id;
        EXPECT_EQ(e.name, id);
    }
    EXPECT_THROW(named_encoding("nope"), std::invalid_argument);
    EXPECT_EQ(named_encoding(std::string(LOVE_FIXTURE_DIR) + "/gse_3x3.yaml").n_qubits, 14u);
}

TEST(experiments, lattice_mismatch_rejected) {
    EXPECT_THROW(make_system(named_encoding("jw_3x3"), 4, 3, {}), std::invalid_argument);
    EXPECT_THROW(make_system(named_encoding("jw1_4x3"), 3, 4, {}), std::invalid_argument);
}

TEST(experiments, hop_generators_sum_to_hopping) {
    for (const char *id : {"jw_3x3", "compact_3x3", "gse_3x3", "gaqm_4x3"}) {
        Encoding enc = named_encoding(id);
        size_t w = enc.n_modes() == 9 ? 3 : 4;
        auto sys = make_system(enc, w, enc.n_modes() / w, {});
        for (auto [j, k] : grid_pairs(w, enc.n_modes() / w)) {
            auto g = sys.hop_generators(j, k);
            EXPECT_TRUE(g[0].is_hermitian() && g[1].is_hermitian());
            EXPECT_TRUE(g[0].commutes(g[1]));
            PauliSum diff = encode_pair(*sys.enc, j, k) + encode_pair(*sys.enc, k, j);
            diff.add(g[0], -0.5);
            diff.add(g[1], -0.5);
            EXPECT_EQ(reduce_terms(diff, sys.enc->stabilizers).size(), 0u) << id << " " << j << "-" << k;
        }
    }
}

TEST(experiments, random_labels_and_sequence) {
    auto labels = random_label_set(3, 3);
    EXPECT_EQ(labels.size(), 12u + 9u + 12u);
    auto a = draw_random_sequence(labels, 50, 9, 3), b = draw_random_sequence(labels, 50, 9, 3);
    auto c = draw_random_sequence(labels, 50, 9, 4);
    bool differ = false;
    for (size_t i = 0; i < 50; i++) {
        EXPECT_EQ(a[i].label.str(), b[i].label.str());
        EXPECT_EQ(a[i].angle, b[i].angle);
        EXPECT_GE(a[i].angle, 0.0);
        EXPECT_LT(a[i].angle, 2 * kPi);
        differ |= a[i].angle != c[i].angle;
    }
    EXPECT_TRUE(differ);
    // Every label maps to a logical operator in every encoding.
    for (const char *id : {"jw_3x3", "compact_3x3", "gse_3x3"}) {
        auto sys = make_system(named_encoding(id), 3, 3, {});
        for (const auto &l : labels) EXPECT_NO_THROW(sys.engine->check_logical(label_operator(*sys.table, l)));
    }
}

TEST(experiments, random_zero_rotations_noiseless) {
    auto cfg = base_config("random", 3, 3);
    cfg.shots = 20;
    cfg.random.rotations = 0;
    cfg.random.realizations = 2;
    cfg.noisy_prep = true;
    auto rows = run_random(cfg, {named_encoding("jw_3x3"), named_encoding("gse_3x3")});
    ASSERT_EQ(rows.size(), 2u);
    for (const auto &r : rows) {
        EXPECT_NEAR(r.fidelity_mitigated, 1.0, 1e-12);
        EXPECT_NEAR(r.fidelity_unmitigated, 1.0, 1e-12);
        EXPECT_EQ(r.sampling_increase, 1.0);
        EXPECT_EQ(r.circuit_depth, 0.0);
    }
}

TEST(experiments, random_noiseless_fidelity_one) {
    auto cfg = base_config("random", 3, 3);
    cfg.shots = 4;
    cfg.random.rotations = 12;
    cfg.random.checkpoint_every = 4;
    cfg.random.realizations = 2;
    auto rows = run_random(cfg, {named_encoding("compact_3x3")});
    ASSERT_EQ(rows.size(), 4u);
    for (const auto &r : rows) EXPECT_NEAR(r.fidelity_mitigated, 1.0, 1e-10);
    EXPECT_GT(rows.back().circuit_depth, rows[1].circuit_depth);
}

TEST(experiments, random_scripted_replay) {
    auto cfg = base_config("random", 2, 2);
    cfg.shots = 300;
    cfg.seed = 41;
    cfg.noise.gate_noise_p = 0.05;
    cfg.random.rotations = 4;
    cfg.random.checkpoint_every = 2;
    cfg.random.realizations = 1;
    cfg.store = "full";
    auto rows = run_random(cfg, {toy_encoding()});
    ASSERT_EQ(rows.size(), 3u);

    auto sys = make_system(toy_encoding(), 2, 2, {0, 1});
    auto seq = draw_random_sequence(random_label_set(2, 2), 4, 41, 0);
    Schedule s(4);
    for (const auto &st : seq) s.add_rotation(label_operator(*sys.table, st.label), st.angle);
    std::vector<size_t> items = {0, 2, 4};
    auto ideal = ideal_states(*sys.engine, s, sys.prep, items);
    std::vector<DensityBlockStore> stores;
    for (size_t i = 0; i < 3; i++) stores.emplace_back(3, 1, StoreMode::FULL, std::vector<TaperedObservable>{}, ideal[i]);
    NoiseModel noise;
    noise.gate_noise_p = 0.05;
    noise.rng_seed = derived_seed(41, 0);
    RunOptions opts;
    opts.shots = 300;
    opts.threads = 1;
    run_shots(*sys.engine, s, sys.prep, noise, opts, items, stores);
    for (size_t i = 0; i < 3; i++) {
        EXPECT_EQ(rows[i].x, double(items[i]));
        EXPECT_EQ(rows[i].fidelity_mitigated, stores[i].fidelity(true).value);
        EXPECT_EQ(rows[i].fidelity_unmitigated, stores[i].fidelity(false).value);
        EXPECT_EQ(rows[i].kept_shots, double(stores[i].kept_shots()));
        EXPECT_EQ(rows[i].sampling_increase, stores[i].postselect().sampling_increase);
    }
    EXPECT_LT(rows[2].kept_shots, 300.0);
}

TEST(experiments, random_fidelity_monotone_in_noise) {
    auto cfg = base_config("random", 2, 2);
    cfg.shots = 3000;
    cfg.random.rotations = 6;
    cfg.random.checkpoint_every = 6;
    cfg.random.realizations = 1;
    double prev = 1.0;
    for (double p : {0.0, 0.005, 0.01, 0.02}) {
        cfg.noise.gate_noise_p = p;
        auto rows = run_random(cfg, {toy_encoding()});
        double f = rows.back().fidelity_unmitigated;
        double sigma = std::sqrt(std::max(f * (1 - f), 1e-4) / double(cfg.shots));
        EXPECT_LE(f, prev + 3 * sigma) << p;
        prev = f;
    }
    EXPECT_LT(prev, 0.99);
}

TEST(experiments, hubbard_structure) {
    EXPECT_EQ(hubbard_site_edges().size(), 7u);
    EXPECT_EQ(hubbard_mode(0, 0), 0u);
    EXPECT_EQ(hubbard_mode(1, 1), 3u);
    EXPECT_EQ(hubbard_mode(5, 1), 11u);
    FermionSum h = hubbard_hamiltonian(-1, 4);
    EXPECT_EQ(h.terms.size(), 7u * 2 * 2 + 6);
    auto sys = make_system(named_encoding("jw1_4x3"), 4, 3, hubbard_initial_modes());
    Ansatz a = hubbard_ansatz(sys);
    EXPECT_EQ(a.n_params, 32u);
    EXPECT_EQ(a.rotations.size(), 46u);
    size_t tied = 0;
    for (const auto &o : a.occurrences) {
        ASSERT_FALSE(o.empty());
        tied += o.size() == 2;
    }
    EXPECT_EQ(tied, 14u);
    EXPECT_THROW(a.rotation_angles(std::vector<double>(31)), std::invalid_argument);
}

TEST(experiments, parameter_shift_closed_forms) {
    auto c = [](const std::vector<double> &a) { return std::cos(2 * a[0]); };
    auto s = [](const std::vector<double> &a) { return std::sin(2 * a[0]); };
    EXPECT_NEAR(parameter_shift_gradient(c, {0}, {0.0}), 0.0, 1e-15);
    EXPECT_NEAR(parameter_shift_gradient(s, {0}, {0.0}), 2.0, 1e-15);
    // Tied pair: E = sin(2a) cos(2b) at a = b.
    auto e = [](const std::vector<double> &a) { return std::sin(2 * a[0]) * std::cos(2 * a[1]); };
    double th = 0.3, h = 1e-5;
    double fd = (e({th + h, th + h}) - e({th - h, th - h})) / (2 * h);
    EXPECT_NEAR(parameter_shift_gradient(e, {0, 1}, {th, th}), fd, 1e-8);
}

TEST(experiments, vqe_energy_matches_fock_oracle) {
    VqeParams vp;
    auto zero = std::vector<double>(32, 0.0);
    auto th = random_theta(1);
    for (const char *id : {"jw1_4x3", "compact_hubbard_2x3", "gse_hubbard_2x3", "gaqm_4x3"}) {
        VqeProblem prob(make_system(named_encoding(id), 4, 3, hubbard_initial_modes()), vp);
        const auto &an = prob.ansatz();
        // Doubly occupied sites 0 and 1.
        EXPECT_NEAR(prob.exact_energy(an.rotation_angles(zero)), 2 * vp.U, 1e-10) << id;
        EXPECT_NEAR(prob.exact_energy(an.rotation_angles(th)), oracle_vqe_energy(th, vp.t, vp.U), 1e-10) << id;
    }
}

TEST(experiments, vqe_gradients_match_finite_differences) {
    VqeProblem prob(make_system(named_encoding("gse_hubbard_2x3"), 4, 3, hubbard_initial_modes()), VqeParams{});
    const auto &an = prob.ansatz();
    auto th = random_theta(2);
    auto E = [&](const std::vector<double> &a) { return prob.exact_energy(a); };
    for (size_t p = 0; p < 32; p++) {
        double g = parameter_shift_gradient(E, an.occurrences[p], an.rotation_angles(th));
        auto tp = th, tm = th;
        tp[p] += 1e-5;
        tm[p] -= 1e-5;
        double fd = (oracle_vqe_energy(tp, -1, 4) - oracle_vqe_energy(tm, -1, 4)) / 2e-5;
        EXPECT_NEAR(g, fd, 1e-4) << an.param_names[p];
    }
}

TEST(experiments, vqe_noiseless_trace_matches_descent_oracle) {
    auto cfg = base_config("vqe", 4, 3);
    cfg.shots = 1;
    cfg.vqe.sweeps = 1;
    cfg.vqe.learning_rate = 0.02;
    cfg.seed = 5;
    auto res = run_vqe(cfg, {named_encoding("gse_hubbard_2x3")});
    ASSERT_EQ(res.trace.size(), 33u);
    ASSERT_EQ(res.metrics.size(), 33u);

    std::vector<double> th(32);
    Rng rng = make_stream(5, Stream::ANGLES, 0);
    for (auto &x : th) x = 2 * kPi * uniform01(rng);
    double prev = oracle_vqe_energy(th, -1, 4);
    EXPECT_NEAR(res.trace[0].energy, prev, 1e-9);
    for (size_t p = 0; p < 32; p++) {
        auto tp = th, tm = th;
        tp[p] += 1e-6;
        tm[p] -= 1e-6;
        th[p] -= 0.02 * (oracle_vqe_energy(tp, -1, 4) - oracle_vqe_energy(tm, -1, 4)) / 2e-6;
        double e = oracle_vqe_energy(th, -1, 4);
        const auto &row = res.trace[p + 1];
        EXPECT_EQ(row.parameter, p);
        EXPECT_NEAR(row.energy, e, 1e-6);
        EXPECT_NEAR(row.energy_noiseless, e, 1e-6);
        EXPECT_NEAR(row.difference, 0.0, 1e-9);
        EXPECT_LE(row.energy_noiseless, prev + 1e-12);
        prev = row.energy_noiseless;
    }
}

TEST(experiments, floquet_toy_matches_fock_oracle) {
    auto cfg = base_config("floquet", 2, 2);
    cfg.shots = 1;
    cfg.floquet.timesteps = 5;
    cfg.floquet.hop_angle = 0.7;
    cfg.floquet.initial_modes = {0, 3};
    auto res = run_floquet(cfg, {toy_encoding()});
    ASSERT_EQ(res.occupations.size(), 6u);
    auto layers = floquet_layers(2, 2);
    auto perim = perimeter_modes(2, 2);
    Fock v = slater(4, {0, 3});
    for (size_t t = 0; t <= 5; t++) {
        if (t > 0)
            for (auto [a, b] : layers[(t - 1) % 4]) v = hop_rotation(v, a, b, 0.7);
        for (size_t i = 0; i < perim.size(); i++)
            EXPECT_NEAR(res.occupations[t].perimeter[i], number(v, perim[i]), 1e-10) << t << " " << i;
        EXPECT_NEAR(res.metrics[t].observables[0].mitigated, 2.0, 1e-10);
    }
}

TEST(experiments, floquet_noiseless_edge_transport) {
    auto cfg = base_config("floquet", 4, 3);
    cfg.shots = 1;
    cfg.floquet.timesteps = 16;
    auto res = run_floquet(cfg, {named_encoding("jw1_4x3"), named_encoding("compact_4x3")});
    ASSERT_EQ(res.metrics.size(), 34u);
    // Occupied perimeter positions only ever advance, by at most one site per step.
    for (size_t e = 0; e < 2; e++) {
        std::vector<size_t> prev;
        for (size_t t = 0; t <= 16; t++) {
            const auto &row = res.metrics[e * 17 + t];
            EXPECT_NEAR(row.observables[0].mitigated, 2.0, 1e-10);
            EXPECT_NEAR(row.fidelity_mitigated, 1.0, 1e-10);
            std::vector<size_t> pos;
            const auto &occ = res.occupations[e * 17 + t].perimeter;
            for (size_t i = 0; i < occ.size(); i++) {
                EXPECT_TRUE(std::abs(occ[i]) < 1e-10 || std::abs(occ[i] - 1) < 1e-10);
                if (occ[i] > 0.5) pos.push_back(i);
            }
            ASSERT_EQ(pos.size(), 2u);
            if (!prev.empty()) {
                for (size_t i = 0; i < 2; i++) {
                    size_t moved = 10;
                    for (size_t j = 0; j < 2; j++) moved = std::min(moved, (pos[j] + 10 - prev[i]) % 10);
                    EXPECT_LE(moved, 1u) << t;
                }
            }
            prev = pos;
        }
        EXPECT_NE(res.occupations[e * 17 + 16].perimeter, res.occupations[e * 17].perimeter);
    }
    // An interior particle returns to its site after each period.
    cfg.floquet.initial_modes = {5};
    auto inner = run_floquet(cfg, {named_encoding("jw1_4x3")});
    for (size_t t = 0; t <= 16; t += 4) {
        for (double v : inner.occupations[t].perimeter) EXPECT_NEAR(v, 0.0, 1e-10);
        EXPECT_NEAR(inner.metrics[t].observables[0].mitigated, 1.0, 1e-10);
    }
}

TEST(experiments, outputs_are_deterministic) {
    auto cfg = base_config("floquet", 2, 2);
    cfg.shots = 200;
    cfg.noise.gate_noise_p = 0.03;
    cfg.floquet.timesteps = 3;
    cfg.floquet.initial_modes = {0, 3};
    std::string out[2];
    for (int i = 0; i < 2; i++) {
        cfg.threads = i ? 3 : 1;
        auto r = run_floquet(cfg, {toy_encoding()});
        std::ostringstream ss;
        write_metrics_csv(ss, r.metrics);
        write_occupations_csv(ss, r.occupations, 2, 2);
        out[i] = ss.str();
    }
    EXPECT_EQ(out[0], out[1]);
    EXPECT_NE(out[0].find("N_mitigated"), std::string::npos);
}

TEST(experiments, config_roundtrip_and_errors) {
    const char *text = R"(
experiment: floquet
lattice: {width: 4, height: 3}
encodings: [compact_4x3, jw1_4x3]
shots: 500
seed: 9
noise: {gate_p: 0.01, idle_p: 0.001}
postselect: false
store: streaming
noisy_prep: false
floquet: {timesteps: 8, hop_angle: 0.2, initial_modes: [4, 7], layers_per_step: 2}
)";
    ExperimentConfig c = parse_config(text);
    EXPECT_EQ(c.encodings.size(), 2u);
    EXPECT_EQ(c.noise.idle_noise_p, 0.001);
    EXPECT_FALSE(c.postselect);
    EXPECT_EQ(c.floquet.layers_per_step, 2u);
    ExperimentConfig d = parse_config(dump_config(c));
    EXPECT_EQ(dump_config(d), dump_config(c));
    EXPECT_EQ(d.floquet.hop_angle, 0.2);

    EXPECT_EQ(parse_config("experiment: vqe\nencodings: jw1_4x3\n").width, 4u);
    EXPECT_THROW(parse_config("experiment: vqe\nencodings: x\nlattice: {width: 3, height: 3}\n"),
                 std::invalid_argument);
    EXPECT_THROW(parse_config("experiment: random\nencodings: [a]\nlattice: {width: 3, height: 3}\nbogus: 1\n"),
                 std::invalid_argument);
    EXPECT_THROW(parse_config("experiment: random\nencodings: [a]\nlattice: {width: 3, height: 3}\nshots: 0\n"),
                 std::invalid_argument);
    EXPECT_THROW(parse_config("experiment: walk\nencodings: [a]\nlattice: {width: 3, height: 3}\n"),
                 std::invalid_argument);
    EXPECT_THROW(parse_config("experiment: random\nencodings: [a]\nlattice: {width: 3, height: 3}\n"
                              "noise: {gate_p: 1.5}\n"),
                 std::invalid_argument);
    EXPECT_THROW(parse_config("experiment: random\nencodings: [a]\nlattice: {width: 3, height: x}\n"),
                 std::invalid_argument);
    EXPECT_THROW(parse_config("experiment: floquet\nencodings: [a]\nlattice: {width: 2, height: 2}\n"
                              "floquet: {initial_modes: [1, 1]}\n"),
                 std::invalid_argument);
}

TEST(experiments, scaling_workload_is_logical) {
    auto w = scaling_workload(20, 6, 15, 3);
    EXPECT_EQ(w.gens.size(), 14u);
    ShotEngine engine(20, w.gens);
    EXPECT_NO_THROW(engine.check_schedule(w.schedule));
    EXPECT_EQ(engine.n_logical(), 6u);
    auto b = time_workload(14, 4, 20, 0.01, 1);
    EXPECT_GT(b.seconds_per_shot, 0.0);
}
