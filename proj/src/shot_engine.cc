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

#include "love/shot_engine.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace love {

namespace {

const cplx kIPow[4] = {1.0, cplx(0, 1), -1.0, cplx(0, -1)};

PauliAction action(const SignedPauli &logical, cplx coef) {
    return {logical.x_word(), logical.z_word(), coef * kIPow[logical.raw_phase()]};
}

}  // namespace

// ---------------------------------------------------------------- Schedule

void Schedule::add_rotation(const SignedPauli &generator, double angle) {
    if (n_qubits_ == 0) n_qubits_ = generator.num_qubits();
    if (generator.num_qubits() != n_qubits_)
        throw std::invalid_argument("rotation on " + std::to_string(generator.num_qubits()) +
                                    " qubits in a schedule of " + std::to_string(n_qubits_));
    Item it;
    it.kind = Item::Kind::ROTATION;
    it.gadget = compile_gadget(generator, angle);
    items_.push_back(std::move(it));
}

void Schedule::add_idle(size_t steps) {
    Item it;
    it.kind = Item::Kind::IDLE;
    it.steps = steps;
    items_.push_back(std::move(it));
}

std::vector<size_t> Schedule::depth_profile() const {
    DepthCounter d(n_qubits_);
    std::vector<size_t> out;
    for (const Item &it : items_) {
        if (it.kind == Item::Kind::ROTATION)
            d.add(it.gadget);
        else
            for (size_t s = 0; s < it.steps; s++) d.add_idle_layer();
        out.push_back(d.depth());
    }
    return out;
}

// ---------------------------------------------------------------- PrepSpec

PrepSpec make_prep_spec(const std::vector<SignedPauli> &gens, const std::vector<SignedPauli> &logical_targets) {
    PrepSpec prep;
    prep.r = gens.size();
    prep.target_ops = gens;
    prep.target_ops.insert(prep.target_ops.end(), logical_targets.begin(), logical_targets.end());
    if (prep.target_ops.empty()) throw std::invalid_argument("empty preparation list");
    size_t n = prep.target_ops[0].num_qubits();
    if (prep.target_ops.size() != n)
        throw std::invalid_argument("preparation needs " + std::to_string(n) + " operators, got " +
                                    std::to_string(prep.target_ops.size()));
    Gf2Basis basis(2 * n);
    for (size_t a = 0; a < n; a++) {
        const SignedPauli &p = prep.target_ops[a];
        if (p.num_qubits() != n) throw std::invalid_argument("preparation operator " + p.str() + " has wrong length");
        if (!p.is_hermitian()) throw std::invalid_argument("preparation operator " + p.str() + " is not Hermitian");
        for (size_t b = 0; b < a; b++)
            if (!p.commutes(prep.target_ops[b]))
                throw std::invalid_argument("preparation operators " + prep.target_ops[b].str() + " and " + p.str() +
                                            " anticommute");
        if (!basis.insert(symplectic_vector(p)))
            throw std::invalid_argument("preparation operator " + p.str() + " is dependent");
    }
    for (const SignedPauli &p : prep.target_ops) prep.gadgets.push_back(compile_measurement(p));
    return prep;
}

PrepSpec make_prep_spec(const Encoding &enc, const std::vector<uint32_t> &occupied) {
    const size_t n = enc.n_qubits, r = enc.stabilizers.size();
    std::vector<bool> occ(enc.n_modes(), false);
    for (uint32_t m : occupied) {
        if (m >= enc.n_modes()) throw std::invalid_argument("occupied mode " + std::to_string(m) + " out of range");
        occ[m] = true;
    }
    Gf2Basis basis(2 * n);
    for (const auto &s : enc.stabilizers) basis.insert(symplectic_vector(s));
    std::vector<SignedPauli> logical;
    std::vector<uint32_t> chosen;
    for (uint32_t l = 0; l < enc.n_modes() && logical.size() < n - r; l++) {
        if (!basis.insert(symplectic_vector(enc.B(l)))) continue;
        logical.push_back(occ[l] ? -enc.B(l) : enc.B(l));
        chosen.push_back(l);
    }
    if (logical.size() != n - r)
        throw std::invalid_argument("vertex operators fix only " + std::to_string(logical.size()) + " of " +
                                    std::to_string(n - r) + " logical qubits");
    PrepSpec prep = make_prep_spec(enc.stabilizers, logical);

    // Remaining B_l are products of targets; their values must match the occupation.
    Gf2Basis all(2 * n);
    for (const auto &t : prep.target_ops) all.insert(symplectic_vector(t));
    for (uint32_t l = 0; l < enc.n_modes(); l++) {
        auto combo = all.express(symplectic_vector(enc.B(l)));
        if (!combo) throw std::logic_error("vertex operator outside the preparation span");
        SignedPauli prod(n);
        for (size_t t = 0; t < n; t++)
            if (combo->get(t)) prod *= prep.target_ops[t];
        // prod has eigenvalue +1, so <B_l> = prod / B_l.
        int value = prod == enc.B(l) ? 1 : -1;
        if (value != (occ[l] ? -1 : 1))
            throw std::invalid_argument("occupation of mode " + std::to_string(l) +
                                        " is inconsistent with the stabilizers");
    }
    return prep;
}

// ---------------------------------------------------------------- ShotEngine

ShotEngine::ShotEngine(size_t n_qubits, const std::vector<SignedPauli> &gens, const KernelTable &k)
    : n_(n_qubits), ctx_(make_tapering_context(gens)), k_(&k), cache_(std::make_unique<Cache>()) {
    if (gens.empty()) {
        ctx_.n_qubits = n_qubits;
        ctx_.kept_qubits.resize(n_qubits);
        std::iota(ctx_.kept_qubits.begin(), ctx_.kept_qubits.end(), size_t{0});
    }
    if (ctx_.n_qubits != n_qubits) throw std::invalid_argument("generators do not match the qubit count");
    if (n_logical() > 30) throw std::invalid_argument("logical space of " + std::to_string(n_logical()) +
                                                      " qubits is too large");
}

void ShotEngine::check_logical(const SignedPauli &p) const {
    if (p.num_qubits() != n_) throw std::invalid_argument("operator " + p.str() + " has the wrong length");
    for (size_t m = 0; m < ctx_.original_gens.size(); m++)
        if (!p.commutes(ctx_.original_gens[m]))
            throw std::invalid_argument("operator " + p.str() + " anticommutes with stabilizer " +
                                        ctx_.original_gens[m].str());
}

void ShotEngine::check_schedule(const Schedule &s) const {
    if (s.n_qubits() != n_ && !s.items().empty())
        throw std::invalid_argument("schedule acts on " + std::to_string(s.n_qubits()) + " qubits");
    for (const auto &it : s.items())
        if (it.kind == Schedule::Item::Kind::ROTATION) check_logical(it.gadget.generator);
}

void ShotEngine::apply_snapshot(ShotResult &shot, const GadgetSnapshot &snap, StateVector &scratch) const {
    TaperRecord rc = ctx_.taper_one(snap.cos_term);
    TaperRecord rs = ctx_.taper_one(snap.sin_term);
    if (rc.anticommute_mask != rs.anticommute_mask)
        throw std::runtime_error("snapshot terms " + snap.cos_term.str() + " and " + snap.sin_term.str() +
                                 " flip different syndrome bits");
    double sc = syndrome_sign(rc, shot.syndrome), ss = syndrome_sign(rs, shot.syndrome);
    PauliAction acts[2] = {action(rc.logical, std::cos(snap.angle) * sc),
                           action(rs.logical, cplx(0, std::sin(snap.angle)) * ss)};
    scratch.resize(dim());
    k_->apply_sum(shot.state.data(), scratch.data(), dim(), acts, 2);
    shot.state.swap(scratch);
    shot.syndrome ^= rc.anticommute_mask;
}

void ShotEngine::apply_pauli(ShotResult &shot, const SignedPauli &p, StateVector &scratch) const {
    TaperRecord rec = ctx_.taper_one(p);
    PauliAction a = action(rec.logical, double(syndrome_sign(rec, shot.syndrome)));
    scratch.resize(dim());
    k_->apply_sum(shot.state.data(), scratch.data(), dim(), &a, 1);
    shot.state.swap(scratch);
    shot.syndrome ^= rec.anticommute_mask;
}

ShotResult ShotEngine::run_shot(const Schedule &schedule, ShotResult shot, const NoiseModel &noise, Rng &rng,
                                const Observer &observer, ShotTrace *trace) const {
    if (shot.state.size() != dim() || shot.syndrome.size() != r())
        throw std::invalid_argument("initial shot has the wrong dimensions");
    StateVector scratch(dim());
    std::vector<NoiseInsertion> ins;
    size_t done = 0;
    for (const auto &it : schedule.items()) {
        if (it.kind == Schedule::Item::Kind::ROTATION) {
            GadgetSnapshot snap = sample_gadget(it.gadget, noise, rng, trace ? &ins : nullptr);
            if (trace) trace->gadget_errors.push_back(ins);
            apply_snapshot(shot, snap, scratch);
        } else {
            auto errs = sample_idle(noise, n_, it.steps, rng);
            for (const auto &e : errs) apply_pauli(shot, e, scratch);
            if (trace) trace->idle_errors.push_back(std::move(errs));
        }
        done++;
        if (observer) observer(done, shot);
    }
    return shot;
}

StateVector ShotEngine::reference_state(const PrepSpec &prep, const BitVector &lambda, const BitVector &flips) const {
    if (prep.r != r() || prep.target_ops.size() != n_) throw std::invalid_argument("preparation list does not match");
    std::string key = lambda.str() + "|" + flips.str();
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        auto it = cache_->states.find(key);
        if (it != cache_->states.end()) return it->second;
    }
    const size_t d = dim();
    Rng rng = make_stream(0, Stream::PREP_REFERENCE, 0);
    std::normal_distribution<double> g;
    StateVector v(d), w(d);
    for (auto &a : v) a = {g(rng), g(rng)};
    for (size_t t = r(); t < n_; t++) {
        TaperRecord rec = ctx_.taper_one(prep.target_ops[t]);
        if (rec.anticommute_mask.any())
            throw std::invalid_argument("logical target " + prep.target_ops[t].str() + " anticommutes with a stabilizer");
        double s = syndrome_sign(rec, lambda) * (flips.get(t - r()) ? -1.0 : 1.0);
        PauliAction acts[2] = {{0, 0, 0.5}, action(rec.logical, 0.5 * s)};
        k_->apply_sum(v.data(), w.data(), d, acts, 2);
        v.swap(w);
    }
    double nrm = k_->norm2(v.data(), d);
    if (nrm < 1e-24) throw std::runtime_error("preparation projector annihilated the reference vector");
    double inv = 1 / std::sqrt(nrm);
    for (auto &a : v) a *= inv;
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (cache_->states.size() < 4096) cache_->states.emplace(key, v);
    return v;
}

ShotResult ShotEngine::ideal_initial(const PrepSpec &prep) const {
    BitVector lambda(r());
    return {reference_state(prep, lambda, BitVector(n_ - r())), lambda};
}

ShotResult ShotEngine::prepare_state(const PrepSpec &prep, const NoiseModel &noise, Rng &rng) const {
    if (noise.gate_noise_p <= 0) return ideal_initial(prep);
    std::vector<MeasurementNoise> errs;
    errs.reserve(prep.gadgets.size());
    for (const auto &g : prep.gadgets) errs.push_back(sample_measurement(g, noise, rng));
    return prepare_from_errors(prep, errs);
}

ShotResult ShotEngine::prepare_from_errors(const PrepSpec &prep, const std::vector<MeasurementNoise> &errs) const {
    const size_t n = prep.target_ops.size();
    if (errs.size() != n) throw std::invalid_argument("one error record per measurement");
    BitVector bits(n);
    auto flip_from = [&](const SignedPauli &e) {
        if (e.is_identity()) return;
        for (size_t j = 0; j < n; j++)
            if (!e.commutes(prep.target_ops[j])) bits.flip(j);
    };
    for (size_t k = 0; k < n; k++) {
        flip_from(errs[k].before_center);
        bits.set(k, false);
        flip_from(errs[k].after_center);
    }
    BitVector orig(r()), flips(n - r());
    for (size_t j = 0; j < r(); j++) orig.set(j, bits.get(j));
    for (size_t j = r(); j < n; j++) flips.set(j - r(), bits.get(j));
    BitVector lambda = r() ? ctx_.processed_syndrome(orig) : orig;
    return {reference_state(prep, lambda, flips), lambda};
}

// ---------------------------------------------------------------- Observables

double TaperedObservable::evaluate(const ShotResult &shot, const KernelTable &k) const {
    cplx acc = 0;
    size_t d = shot.state.size();
    for (const auto &[coef, rec] : terms)
        acc += coef * double(syndrome_sign(rec, shot.syndrome)) * kIPow[rec.logical.raw_phase()] *
               k.expectation(shot.state.data(), d, rec.logical.x_word(), rec.logical.z_word());
    return acc.real();
}

TaperedObservable taper_observable(const PauliSum &op, const TaperingContext &ctx, std::string name) {
    if (op.num_qubits() != ctx.n_qubits)
        throw std::invalid_argument("observable on " + std::to_string(op.num_qubits()) + " qubits, code has " +
                                    std::to_string(ctx.n_qubits));
    TaperedObservable out;
    out.name = std::move(name);
    for (const auto &t : op.terms()) {
        TaperRecord rec = ctx.taper_one(t.pauli);
        if (rec.anticommute_mask.any())
            out.dropped_terms++;
        else
            out.terms.emplace_back(t.coef, std::move(rec));
    }
    return out;
}

// ---------------------------------------------------------------- Store

StoreMode default_store_mode(size_t n_logical) { return n_logical > 10 ? StoreMode::STREAMING : StoreMode::FULL; }

DensityBlockStore::DensityBlockStore(size_t n_logical, size_t r, StoreMode mode, std::vector<TaperedObservable> obs,
                                     StateVector ideal)
    : n_logical_(n_logical), r_(r), mode_(mode), obs_(std::move(obs)), ideal_(std::move(ideal)) {
    if (mode == StoreMode::FULL && n_logical > 13)
        throw std::invalid_argument("full-matrix store limited to 13 logical qubits");
    if (!ideal_.empty() && ideal_.size() != (size_t{1} << n_logical))
        throw std::invalid_argument("ideal state has the wrong dimension");
    obs_all_.resize(obs_.size());
    obs_kept_.resize(obs_.size());
}

DensityBlockStore DensityBlockStore::empty_clone() const {
    return DensityBlockStore(n_logical_, r_, mode_, obs_, ideal_);
}

void DensityBlockStore::accumulate(const ShotResult &shot, const KernelTable &k) {
    const size_t d = size_t{1} << n_logical_;
    if (shot.state.size() != d || shot.syndrome.size() != r_)
        throw std::invalid_argument("shot dimensions do not match the store");
    total_++;
    bool kept = !shot.syndrome.any();
    Block &b = blocks_[shot.syndrome];
    b.count++;
    if (mode_ == StoreMode::FULL) {
        if (b.rho.empty()) b.rho.assign(d * d, 0.0);
        k.rank1_update(b.rho.data(), shot.state.data(), d, 1.0);
    }
    for (size_t i = 0; i < obs_.size(); i++) {
        double v = obs_[i].evaluate(shot, k);
        obs_all_[i].add(v);
        if (kept) obs_kept_[i].add(v);
    }
    if (!ideal_.empty()) {
        double f = kept ? std::norm(k.inner(ideal_.data(), shot.state.data(), d)) : 0.0;
        fid_all_.add(f);
        if (kept) fid_kept_.add(f);
    }
}

void DensityBlockStore::merge(const DensityBlockStore &o) {
    if (o.n_logical_ != n_logical_ || o.r_ != r_ || o.mode_ != mode_ || o.obs_.size() != obs_.size())
        throw std::invalid_argument("cannot merge differently configured stores");
    total_ += o.total_;
    for (const auto &[syn, ob] : o.blocks_) {
        Block &b = blocks_[syn];
        b.count += ob.count;
        if (!ob.rho.empty()) {
            if (b.rho.empty()) b.rho.assign(ob.rho.size(), 0.0);
            for (size_t i = 0; i < ob.rho.size(); i++) b.rho[i] += ob.rho[i];
        }
    }
    auto add = [](Sums &a, const Sums &b) {
        a.s += b.s;
        a.s2 += b.s2;
    };
    for (size_t i = 0; i < obs_.size(); i++) {
        add(obs_all_[i], o.obs_all_[i]);
        add(obs_kept_[i], o.obs_kept_[i]);
    }
    add(fid_all_, o.fid_all_);
    add(fid_kept_, o.fid_kept_);
}

size_t DensityBlockStore::kept_shots() const {
    auto it = blocks_.find(BitVector(r_));
    return it == blocks_.end() ? 0 : it->second.count;
}

std::map<BitVector, size_t> DensityBlockStore::histogram() const {
    std::map<BitVector, size_t> h;
    for (const auto &[syn, b] : blocks_) h[syn] = b.count;
    return h;
}

PostselectRecord DensityBlockStore::postselect() const {
    if (total_ == 0) throw std::logic_error("postselect on an empty store");
    PostselectRecord p;
    p.total_shots = total_;
    p.kept_shots = kept_shots();
    p.empty = p.kept_shots == 0;
    p.sampling_increase =
        p.empty ? std::numeric_limits<double>::infinity() : double(p.total_shots) / double(p.kept_shots);
    return p;
}

Estimate DensityBlockStore::finish(const Sums &s, size_t n) const {
    if (n == 0) return {std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN(), true};
    double mean = s.s / double(n);
    double var = std::max(0.0, s.s2 / double(n) - mean * mean);
    return {mean, n > 1 ? std::sqrt(var / double(n - 1)) : 0.0, false};
}

Estimate DensityBlockStore::expectation(size_t i, bool post) const {
    if (i >= obs_.size()) throw std::out_of_range("observable index");
    return post ? finish(obs_kept_[i], kept_shots()) : finish(obs_all_[i], total_);
}

Estimate DensityBlockStore::fidelity(bool post) const {
    if (ideal_.empty()) throw std::logic_error("store has no ideal state");
    return post ? finish(fid_kept_, kept_shots()) : finish(fid_all_, total_);
}

const std::vector<cplx> *DensityBlockStore::block_matrix(const BitVector &syndrome) const {
    auto it = blocks_.find(syndrome);
    return it == blocks_.end() || it->second.rho.empty() ? nullptr : &it->second.rho;
}

double DensityBlockStore::block_expectation(const TaperedObservable &obs, bool post) const {
    if (mode_ != StoreMode::FULL) throw std::logic_error("block matrices need full-matrix mode");
    const size_t d = size_t{1} << n_logical_;
    cplx acc = 0;
    for (const auto &[syn, b] : blocks_) {
        if (post && syn.any()) continue;
        for (const auto &[coef, rec] : obs.terms)
            acc += coef * double(syndrome_sign(rec, syn)) * kIPow[rec.logical.raw_phase()] *
                   trace_pauli(b.rho.data(), d, rec.logical.x_word(), rec.logical.z_word());
    }
    size_t n = post ? kept_shots() : total_;
    return n ? acc.real() / double(n) : std::numeric_limits<double>::quiet_NaN();
}

double DensityBlockStore::block_fidelity(bool post) const {
    if (mode_ != StoreMode::FULL) throw std::logic_error("block matrices need full-matrix mode");
    size_t n = post ? kept_shots() : total_;
    const auto *rho = block_matrix(BitVector(r_));
    if (!n) return std::numeric_limits<double>::quiet_NaN();
    if (!rho) return 0;
    const size_t d = size_t{1} << n_logical_;
    cplx acc = 0;
    for (size_t i = 0; i < d; i++)
        for (size_t j = 0; j < d; j++) acc += std::conj(ideal_[i]) * (*rho)[i * d + j] * ideal_[j];
    return acc.real() / double(n);
}

double DensityBlockStore::normalized_trace() const {
    if (mode_ != StoreMode::FULL) throw std::logic_error("block matrices need full-matrix mode");
    const size_t d = size_t{1} << n_logical_;
    double t = 0;
    for (const auto &[syn, b] : blocks_)
        for (size_t i = 0; i < d; i++) t += b.rho[i * d + i].real();
    return total_ ? t / double(total_) : 0;
}

// ---------------------------------------------------------------- Running

size_t default_thread_count() {
    if (const char *env = std::getenv("LOVE_THREADS")) {
        long v = std::atol(env);
        if (v > 0) return static_cast<size_t>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void for_each_block(size_t n, size_t block_size, size_t threads,
                    const std::function<void(size_t, size_t, size_t)> &fn) {
    if (block_size == 0) throw std::invalid_argument("block size must be positive");
    size_t n_blocks = (n + block_size - 1) / block_size;
    if (threads == 0) threads = default_thread_count();
    threads = std::min(threads, std::max<size_t>(n_blocks, 1));
    std::atomic<size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    auto worker = [&] {
        for (;;) {
            size_t b = next.fetch_add(1);
            if (b >= n_blocks) return;
            try {
                fn(b, b * block_size, std::min(n, (b + 1) * block_size));
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!error) error = std::current_exception();
                next = n_blocks;
            }
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (size_t t = 0; t < threads; t++) pool.emplace_back(worker);
        for (auto &t : pool) t.join();
    }
    if (error) std::rethrow_exception(error);
}

void run_shots(const ShotEngine &engine, const Schedule &schedule, const PrepSpec &prep, const NoiseModel &noise,
               const RunOptions &opts, const std::vector<size_t> &checkpoints, std::vector<DensityBlockStore> &stores) {
    noise.validate();
    engine.check_schedule(schedule);
    if (checkpoints.size() != stores.size()) throw std::invalid_argument("one store per checkpoint");
    std::vector<std::vector<size_t>> at(schedule.size() + 1);
    for (size_t i = 0; i < checkpoints.size(); i++) {
        if (checkpoints[i] > schedule.size()) throw std::invalid_argument("checkpoint past the schedule");
        at[checkpoints[i]].push_back(i);
    }
    const ShotResult ideal = engine.ideal_initial(prep);

    std::mutex mu;
    std::map<size_t, std::vector<DensityBlockStore>> pending;
    size_t next_merge = 0;
    for_each_block(opts.shots, opts.block_size, opts.threads, [&](size_t b, size_t begin, size_t end) {
        std::vector<DensityBlockStore> local;
        for (const auto &s : stores) local.push_back(s.empty_clone());
        const KernelTable &k = engine.kernel_table();
        for (size_t shot = begin; shot < end; shot++) {
            Rng rng = make_stream(noise.rng_seed, Stream::NOISE, shot);
            ShotResult init = opts.noisy_prep ? engine.prepare_state(prep, noise, rng) : ideal;
            for (size_t i : at[0]) local[i].accumulate(init, k);
            engine.run_shot(schedule, std::move(init), noise, rng, [&](size_t done, const ShotResult &s) {
                for (size_t i : at[done]) local[i].accumulate(s, k);
            });
        }
        std::lock_guard<std::mutex> lock(mu);
        pending.emplace(b, std::move(local));
        while (!pending.empty() && pending.begin()->first == next_merge) {
            auto &part = pending.begin()->second;
            for (size_t i = 0; i < stores.size(); i++) stores[i].merge(part[i]);
            pending.erase(pending.begin());
            next_merge++;
        }
    });
}

std::vector<StateVector> ideal_states(const ShotEngine &engine, const Schedule &schedule, const PrepSpec &prep,
                                      const std::vector<size_t> &checkpoints) {
    std::vector<StateVector> out(checkpoints.size());
    ShotResult init = engine.ideal_initial(prep);
    Rng rng(0);
    for (size_t i = 0; i < checkpoints.size(); i++)
        if (checkpoints[i] == 0) out[i] = init.state;
    engine.run_shot(schedule, init, NoiseModel{}, rng, [&](size_t done, const ShotResult &s) {
        for (size_t i = 0; i < checkpoints.size(); i++)
            if (checkpoints[i] == done) out[i] = s.state;
    });
    return out;
}

}  // namespace love
