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

#ifndef LOVE_NOISE_H
#define LOVE_NOISE_H

#include <cstddef>
#include <cstdint>
#include <vector>

#include "love/pauli.h"
#include "love/rng.h"

namespace love {

/// Depolarizing noise: each draw is X, Y or Z with probability p/3 apiece.
struct NoiseModel {
    double gate_noise_p = 0;  // per qubit, after every CNOT
    double idle_noise_p = 0;  // per qubit, per idle step
    uint64_t rng_seed = 0;

    /// Throws std::invalid_argument for probabilities outside [0, 1].
    void validate() const;
};

enum class GateKind : uint8_t { CLIFFORD, RZ, MEASURE };

struct Gate {
    GateKind kind = GateKind::CLIFFORD;
    CliffordGate clifford = CliffordGate::CNOT;
    size_t q0 = 0, q1 = 0;  // q1 is the CNOT target
    double angle = 0;       // RZ is exp(i angle Z)
};

/// exp(i angle generator) as basis changes, a CNOT ladder, a central RZ and the mirror.
///
/// The ladder runs over the support in ascending order and ends on the highest
/// index support qubit. X support uses H, Y support uses Rx(+pi/2) on the way
/// in and Rx(-pi/2) on the way out.
struct RotationGadget {
    SignedPauli generator;
    double angle = 0;
    std::vector<size_t> support;
    std::vector<Gate> circuit;  // time order
    size_t center = 0;          // index of the RZ or MEASURE gate
    int generator_sign = 1;     // generator = generator_sign * letters

    size_t cnot_count() const;
    size_t target() const { return support.back(); }
};

/// cos(angle) cos_term + i sin(angle) sin_term.
struct GadgetSnapshot {
    SignedPauli cos_term;
    SignedPauli sin_term;
    double angle = 0;
};

struct CircuitEvent {
    enum class Kind : uint8_t { ROTATION, PAULI };
    Kind kind = Kind::PAULI;
    GadgetSnapshot snapshot;
    SignedPauli pauli;
};

/// Where sample_gadget placed an error: right after circuit[gate_index].
struct NoiseInsertion {
    size_t gate_index;
    size_t qubit;
    char letter;
};

/// Throws std::invalid_argument for identity or non-Hermitian generators.
RotationGadget compile_gadget(const SignedPauli &generator, double angle);
/// Same ladder with a MEASURE gate at the center; measures the generator.
RotationGadget compile_measurement(const SignedPauli &generator);

/// 'I' with probability 1 - p, otherwise X, Y or Z uniformly.
char draw_depolarizing(double p, Rng &rng);

/// Inside-out expansion with the given errors; a qubit may appear more than once.
GadgetSnapshot expand_gadget(const RotationGadget &gadget, const std::vector<NoiseInsertion> &errors);

/// Inside-out expansion of one noisy execution of the gadget.
///
/// Mirror pairs are processed from the center outwards; for each CNOT pair the
/// error after the left gate is drawn first (control, then target), then the
/// error after the right gate.
GadgetSnapshot sample_gadget(const RotationGadget &gadget, const NoiseModel &noise, Rng &rng,
                             std::vector<NoiseInsertion> *inserted = nullptr);

/// Non-identity idle errors, one composed Pauli per step that had any error.
std::vector<SignedPauli> sample_idle(const NoiseModel &noise, size_t n_qubits, size_t n_steps, Rng &rng);

/// Errors of a noisy measurement gadget, each pushed to the end of the gadget.
struct MeasurementNoise {
    SignedPauli before_center;
    SignedPauli after_center;
};
MeasurementNoise sample_measurement(const RotationGadget &gadget, const NoiseModel &noise, Rng &rng);

/// Layers under as-soon-as-possible scheduling of all gadget gates in order.
size_t circuit_depth(const std::vector<const RotationGadget *> &gadgets, size_t n_qubits);

/// Incremental ASAP scheduler.
class DepthCounter {
   public:
    explicit DepthCounter(size_t n_qubits) : avail_(n_qubits, 0) {}
    void add(const RotationGadget &gadget);
    /// One layer touching every qubit.
    void add_idle_layer();
    size_t depth() const { return depth_; }

   private:
    std::vector<size_t> avail_;
    size_t depth_ = 0;
};

}  // namespace love

#endif
