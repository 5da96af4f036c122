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

#ifndef LOVE_SHOT_ENGINE_H
#define LOVE_SHOT_ENGINE_H

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "love/bits.h"
#include "love/encoding.h"
#include "love/kernels.h"
#include "love/noise.h"
#include "love/pauli_sum.h"
#include "love/rng.h"
#include "love/tapering.h"

namespace love {

using StateVector = std::vector<cplx>;

/// Logical state of one trajectory and the processed-generator syndrome it lives in.
struct ShotResult {
    StateVector state;
    BitVector syndrome;
};

/// Ordered list of logical rotations and idle steps.
class Schedule {
   public:
    struct Item {
        enum class Kind : uint8_t { ROTATION, IDLE };
        Kind kind = Kind::ROTATION;
        RotationGadget gadget;
        size_t steps = 0;
    };

    explicit Schedule(size_t n_qubits = 0) : n_qubits_(n_qubits) {}
    /// exp(i angle generator).
    void add_rotation(const SignedPauli &generator, double angle);
    void add_idle(size_t steps = 1);

    size_t n_qubits() const { return n_qubits_; }
    const std::vector<Item> &items() const { return items_; }
    size_t size() const { return items_.size(); }
    /// ASAP depth after each item; idle steps count one layer each.
    std::vector<size_t> depth_profile() const;

   private:
    size_t n_qubits_;
    std::vector<Item> items_;
};

/// Measurement list for the Appendix-style preparation.
///
/// `target_ops` holds the stabilizer generators in their original order
/// followed by n - r commuting logical operators whose +1 eigenstate is the
/// reference state.
struct PrepSpec {
    std::vector<SignedPauli> target_ops;
    std::vector<RotationGadget> gadgets;
    size_t r = 0;
};

/// Generators then +-B_l chosen greedily (mode order) to be independent modulo
/// the stabilizers; occupied modes get -B_l. Throws if the vertex operators do
/// not fix a logical state.
PrepSpec make_prep_spec(const Encoding &enc, const std::vector<uint32_t> &occupied);
/// Explicit list; checks length, commutation and independence.
PrepSpec make_prep_spec(const std::vector<SignedPauli> &gens, const std::vector<SignedPauli> &logical_targets);

/// Noise draws of one shot, for replay against an independent simulator.
struct ShotTrace {
    std::vector<std::vector<NoiseInsertion>> gadget_errors;  // one per rotation, schedule order
    std::vector<std::vector<SignedPauli>> idle_errors;       // one per idle item
};

class ShotEngine {
   public:
    ShotEngine(size_t n_qubits, const std::vector<SignedPauli> &gens, const KernelTable &k = kernels());

    const TaperingContext &context() const { return ctx_; }
    const KernelTable &kernel_table() const { return *k_; }
    size_t n_qubits() const { return n_; }
    size_t r() const { return ctx_.r(); }
    size_t n_logical() const { return ctx_.n_logical(); }
    size_t dim() const { return size_t{1} << n_logical(); }

    /// Throws std::invalid_argument if p anticommutes with a stabilizer generator.
    void check_logical(const SignedPauli &p) const;
    void check_schedule(const Schedule &s) const;

    /// cos cos_term + i sin sin_term on the current block; flips the syndrome once.
    void apply_snapshot(ShotResult &shot, const GadgetSnapshot &snap, StateVector &scratch) const;
    void apply_pauli(ShotResult &shot, const SignedPauli &p, StateVector &scratch) const;

    /// Called after every schedule item with the number of items done.
    using Observer = std::function<void(size_t, const ShotResult &)>;
    ShotResult run_shot(const Schedule &schedule, ShotResult init, const NoiseModel &noise, Rng &rng,
                        const Observer &observer = {}, ShotTrace *trace = nullptr) const;

    /// Normalized joint eigenstate of the logical targets in block lambda.
    /// `flips` negates individual logical targets. Cached.
    StateVector reference_state(const PrepSpec &prep, const BitVector &lambda, const BitVector &flips) const;
    /// Ideal state in the code space.
    ShotResult ideal_initial(const PrepSpec &prep) const;
    /// Noisy measurement sequence tracked as n syndrome bits, then the matching state.
    ShotResult prepare_state(const PrepSpec &prep, const NoiseModel &noise, Rng &rng) const;
    /// Bookkeeping of prepare_state for given errors, one record per measurement.
    ShotResult prepare_from_errors(const PrepSpec &prep, const std::vector<MeasurementNoise> &errs) const;

   private:
    size_t n_;
    TaperingContext ctx_;
    const KernelTable *k_;
    struct Cache {
        std::mutex mu;
        std::map<std::string, StateVector> states;
    };
    std::unique_ptr<Cache> cache_;
};

/// Observable restricted to terms that commute with every generator.
struct TaperedObservable {
    std::string name;
    std::vector<std::pair<cplx, TaperRecord>> terms;
    size_t dropped_terms = 0;
    /// sum_t coef_t sign_t(lambda) <phi|L_t|phi>.
    double evaluate(const ShotResult &shot, const KernelTable &k) const;
};
TaperedObservable taper_observable(const PauliSum &op, const TaperingContext &ctx, std::string name = "");

enum class StoreMode : uint8_t { FULL, STREAMING };
/// Streaming above 10 logical qubits.
StoreMode default_store_mode(size_t n_logical);

struct Estimate {
    double value = 0;
    double std_error = 0;
    bool empty = false;
};

struct PostselectRecord {
    size_t kept_shots = 0;
    size_t total_shots = 0;
    double sampling_increase = 0;  // infinity when nothing is kept
    bool empty = false;
};

/// Per-syndrome accumulation of shots.
class DensityBlockStore {
   public:
    DensityBlockStore(size_t n_logical, size_t r, StoreMode mode, std::vector<TaperedObservable> observables = {},
                      StateVector ideal = {});

    /// Same configuration, no shots.
    DensityBlockStore empty_clone() const;

    void accumulate(const ShotResult &shot, const KernelTable &k = kernels());
    /// Adds another store's shots; results do not depend on merge grouping
    /// beyond floating-point summation order.
    void merge(const DensityBlockStore &other);

    StoreMode mode() const { return mode_; }
    size_t total_shots() const { return total_; }
    size_t kept_shots() const;
    const std::vector<TaperedObservable> &observables() const { return obs_; }
    /// Shot count per syndrome.
    std::map<BitVector, size_t> histogram() const;

    PostselectRecord postselect() const;
    Estimate expectation(size_t observable, bool postselect) const;
    Estimate fidelity(bool postselect) const;

    /// Full mode only: unnormalized block matrix (row-major) for a syndrome, or nullptr.
    const std::vector<cplx> *block_matrix(const BitVector &syndrome) const;
    /// Full mode only: expectation from the block matrices.
    double block_expectation(const TaperedObservable &obs, bool postselect) const;
    double block_fidelity(bool postselect) const;
    /// Full mode only: sum of block traces over total shots.
    double normalized_trace() const;

   private:
    struct Sums {
        double s = 0, s2 = 0;
        void add(double v) {
            s += v;
            s2 += v * v;
        }
    };
    struct Block {
        size_t count = 0;
        std::vector<cplx> rho;
    };
    size_t n_logical_, r_;
    StoreMode mode_;
    std::vector<TaperedObservable> obs_;
    StateVector ideal_;
    size_t total_ = 0;
    std::map<BitVector, Block> blocks_;
    std::vector<Sums> obs_all_, obs_kept_;
    Sums fid_all_, fid_kept_;

    Estimate finish(const Sums &s, size_t n) const;
};

struct RunOptions {
    size_t shots = 1000;
    bool noisy_prep = true;
    size_t threads = 0;  // 0: LOVE_THREADS or hardware concurrency
    size_t block_size = 64;
};

size_t default_thread_count();

/// fn(block_index, begin, end) over [0, n) in fixed blocks, on a thread pool.
void for_each_block(size_t n, size_t block_size, size_t threads, const std::function<void(size_t, size_t, size_t)> &fn);

/// Runs shots with per-shot streams make_stream(noise.rng_seed, NOISE, shot).
/// stores[i] receives every shot's state after checkpoints[i] schedule items.
void run_shots(const ShotEngine &engine, const Schedule &schedule, const PrepSpec &prep, const NoiseModel &noise,
               const RunOptions &opts, const std::vector<size_t> &checkpoints, std::vector<DensityBlockStore> &stores);

/// Noiseless logical states after each checkpoint.
std::vector<StateVector> ideal_states(const ShotEngine &engine, const Schedule &schedule, const PrepSpec &prep,
                                      const std::vector<size_t> &checkpoints);

}  // namespace love

#endif
