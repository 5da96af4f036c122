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

#include "love/noise.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace love {

void NoiseModel::validate() const {
    auto ok = [](double p) { return p >= 0 && p <= 1; };
    if (!ok(gate_noise_p)) throw std::invalid_argument("gate noise probability outside [0,1]");
    if (!ok(idle_noise_p)) throw std::invalid_argument("idle noise probability outside [0,1]");
}

size_t RotationGadget::cnot_count() const {
    size_t c = 0;
    for (const Gate &g : circuit) c += g.kind == GateKind::CLIFFORD && g.clifford == CliffordGate::CNOT;
    return c;
}

namespace {

RotationGadget compile(const SignedPauli &generator, double angle, GateKind center_kind) {
    if (generator.is_identity()) throw std::invalid_argument("cannot compile a rotation about the identity");
    if (!generator.is_hermitian()) throw std::invalid_argument("rotation generator must be Hermitian");
    RotationGadget g;
    g.generator = generator;
    g.angle = angle;
    g.generator_sign = generator.phase_exp() == 0 ? 1 : -1;
    for (size_t q = 0; q < generator.num_qubits(); q++)
        if (generator.letter(q) != 'I') g.support.push_back(q);

    auto basis = [&](bool left) {
        for (size_t i = 0; i < g.support.size(); i++) {
            size_t q = g.support[left ? i : g.support.size() - 1 - i];
            char c = generator.letter(q);
            if (c == 'X') g.circuit.push_back({GateKind::CLIFFORD, CliffordGate::H, q, 0, 0});
            if (c == 'Y')
                g.circuit.push_back(
                    {GateKind::CLIFFORD, left ? CliffordGate::RX_PLUS : CliffordGate::RX_MINUS, q, 0, 0});
        }
    };
    basis(true);
    for (size_t k = 0; k + 1 < g.support.size(); k++)
        g.circuit.push_back({GateKind::CLIFFORD, CliffordGate::CNOT, g.support[k], g.support[k + 1], 0});
    g.center = g.circuit.size();
    g.circuit.push_back({center_kind, CliffordGate::CNOT, g.target(), 0, g.generator_sign * angle});
    for (size_t k = g.support.size() - 1; k-- > 0;)
        g.circuit.push_back({GateKind::CLIFFORD, CliffordGate::CNOT, g.support[k], g.support[k + 1], 0});
    basis(false);
    return g;
}

void conjugate(SignedPauli &p, const Gate &g) {
    if (g.kind == GateKind::CLIFFORD) p.conjugate_inplace(g.clifford, g.q0, g.q1);
}

bool is_cnot(const Gate &g) { return g.kind == GateKind::CLIFFORD && g.clifford == CliffordGate::CNOT; }

}  // namespace

RotationGadget compile_gadget(const SignedPauli &generator, double angle) {
    return compile(generator, angle, GateKind::RZ);
}

RotationGadget compile_measurement(const SignedPauli &generator) { return compile(generator, 0, GateKind::MEASURE); }

char draw_depolarizing(double p, Rng &rng) {
    double u = uniform01(rng);
    if (u >= p) return 'I';
    static const char L[3] = {'X', 'Y', 'Z'};
    return L[std::min(2, static_cast<int>(3 * u / p))];
}

GadgetSnapshot expand_gadget(const RotationGadget &gadget, const std::vector<NoiseInsertion> &errors) {
    const size_t n = gadget.generator.num_qubits();
    const size_t c = gadget.center;
    GadgetSnapshot s{SignedPauli(n), gadget.generator, gadget.angle};
    if (errors.empty()) return s;
    std::vector<SignedPauli> after(gadget.circuit.size(), SignedPauli(n));
    for (const NoiseInsertion &e : errors) {
        if (e.gate_index >= gadget.circuit.size()) throw std::out_of_range("noise insertion past the gadget");
        after[e.gate_index] *= SignedPauli::single(n, e.qubit, e.letter);
    }
    s.sin_term = SignedPauli::single(n, gadget.target(), 'Z');
    if (gadget.generator_sign < 0) s.sin_term.times_i(2);
    s.cos_term.left_mul(after[c]);
    s.sin_term.left_mul(after[c]);
    for (size_t k = 1; k <= c; k++) {
        const SignedPauli &el = after[c - k], &er = after[c + k];
        s.cos_term *= el;
        s.sin_term *= el;
        conjugate(s.cos_term, gadget.circuit[c + k]);
        conjugate(s.sin_term, gadget.circuit[c + k]);
        s.cos_term.left_mul(er);
        s.sin_term.left_mul(er);
    }
    return s;
}

GadgetSnapshot sample_gadget(const RotationGadget &gadget, const NoiseModel &noise, Rng &rng,
                             std::vector<NoiseInsertion> *inserted) {
    std::vector<NoiseInsertion> errors;
    const size_t c = gadget.center;
    if (noise.gate_noise_p > 0) {
        for (size_t k = 1; k <= c; k++) {
            for (size_t idx : {c - k, c + k}) {
                const Gate &g = gadget.circuit[idx];
                if (!is_cnot(g)) continue;
                char a = draw_depolarizing(noise.gate_noise_p, rng);
                char b = draw_depolarizing(noise.gate_noise_p, rng);
                if (a != 'I') errors.push_back({idx, g.q0, a});
                if (b != 'I') errors.push_back({idx, g.q1, b});
            }
        }
    }
    if (inserted) *inserted = errors;
    return expand_gadget(gadget, errors);
}

std::vector<SignedPauli> sample_idle(const NoiseModel &noise, size_t n_qubits, size_t n_steps, Rng &rng) {
    std::vector<SignedPauli> out;
    if (noise.idle_noise_p <= 0) return out;
    for (size_t t = 0; t < n_steps; t++) {
        SignedPauli e(n_qubits);
        for (size_t q = 0; q < n_qubits; q++) {
            char l = draw_depolarizing(noise.idle_noise_p, rng);
            if (l != 'I') e.set_letter(q, l);
        }
        if (!e.is_identity()) out.push_back(std::move(e));
    }
    return out;
}

MeasurementNoise sample_measurement(const RotationGadget &gadget, const NoiseModel &noise, Rng &rng) {
    const size_t n = gadget.generator.num_qubits();
    MeasurementNoise m{SignedPauli(n), SignedPauli(n)};
    if (noise.gate_noise_p <= 0) return m;
    for (size_t i = 0; i < gadget.circuit.size(); i++) {
        const Gate &g = gadget.circuit[i];
        if (!is_cnot(g)) continue;
        char a = draw_depolarizing(noise.gate_noise_p, rng);
        char b = draw_depolarizing(noise.gate_noise_p, rng);
        if (a == 'I' && b == 'I') continue;
        SignedPauli e(n);
        e.set_letter(g.q0, a);
        e.set_letter(g.q1, b);
        for (size_t j = i + 1; j < gadget.circuit.size(); j++) conjugate(e, gadget.circuit[j]);
        (i < gadget.center ? m.before_center : m.after_center) *= e;
    }
    return m;
}

void DepthCounter::add(const RotationGadget &gadget) {
    for (const Gate &g : gadget.circuit) {
        size_t t = avail_.at(g.q0);
        bool two = is_cnot(g);
        if (two) t = std::max(t, avail_.at(g.q1));
        t++;
        avail_[g.q0] = t;
        if (two) avail_[g.q1] = t;
        depth_ = std::max(depth_, t);
    }
}

void DepthCounter::add_idle_layer() {
    size_t t = depth_ + 1;
    std::fill(avail_.begin(), avail_.end(), t);
    depth_ = t;
}

size_t circuit_depth(const std::vector<const RotationGadget *> &gadgets, size_t n_qubits) {
    DepthCounter d(n_qubits);
    for (const RotationGadget *g : gadgets) d.add(*g);
    return d.depth();
}

}  // namespace love
