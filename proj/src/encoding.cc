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

#include "love/encoding.h"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>

namespace love {

namespace {

Edge ordered(uint32_t a, uint32_t b) { return a < b ? Edge{a, b} : Edge{b, a}; }

std::string edge_label(uint32_t a, uint32_t b) { return "A(" + std::to_string(a) + "," + std::to_string(b) + ")"; }
std::string vertex_label(uint32_t k) { return "B(" + std::to_string(k) + ")"; }

const SignedPauli *stored_edge(const Encoding &enc, uint32_t a, uint32_t b) {
    auto it = enc.edge_ops.find(ordered(a, b));
    return it == enc.edge_ops.end() ? nullptr : &it->second;
}

/// Sign s with s*p in the group generated by gens, or 0 when p is not in it.
int group_sign(const std::vector<SignedPauli> &gens, const SignedPauli &p) {
    if (gens.empty()) {
        if (!p.is_identity()) return 0;
        uint8_t k = p.phase_exp();
        return k == 0 ? 1 : (k == 2 ? -1 : 0);
    }
    Gf2Basis basis(2 * p.num_qubits());
    for (const auto &g : gens) basis.insert(symplectic_vector(g));
    auto combo = basis.express(symplectic_vector(p));
    if (!combo) return 0;
    SignedPauli prod(p.num_qubits());
    for (size_t m = 0; m < gens.size(); m++) {
        if (combo->get(m)) prod *= gens[m];
    }
    uint8_t a = prod.phase_exp(), b = p.phase_exp();
    if (a == b) return 1;
    if (((a + 2) & 3) == b) return -1;
    return 0;
}

}  // namespace

bool ModeGraph::has_edge(uint32_t a, uint32_t b) const {
    Edge e = ordered(a, b);
    return std::find(edges.begin(), edges.end(), e) != edges.end();
}

std::vector<uint32_t> ModeGraph::neighbors(uint32_t v) const {
    std::vector<uint32_t> out;
    for (const auto &[a, b] : edges) {
        if (a == v) out.push_back(b);
        if (b == v) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<uint32_t> ModeGraph::shortest_path(uint32_t a, uint32_t b) const {
    // BFS over sorted adjacency yields the lexicographically smallest shortest path.
    std::vector<std::vector<uint32_t>> adj(n_modes);
    for (uint32_t v = 0; v < n_modes; v++) adj[v] = neighbors(v);
    std::vector<int64_t> parent(n_modes, -1);
    std::vector<bool> seen(n_modes, false);
    std::deque<uint32_t> queue{a};
    seen[a] = true;
    while (!queue.empty()) {
        uint32_t u = queue.front();
        queue.pop_front();
        if (u == b) break;
        for (uint32_t w : adj[u]) {
            if (!seen[w]) {
                seen[w] = true;
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    if (!seen[b]) return {};
    std::vector<uint32_t> path{b};
    while (path.back() != a) path.push_back(static_cast<uint32_t>(parent[path.back()]));
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<Edge> ModeGraph::lattice_pairs() const {
    std::vector<Edge> out;
    if (coords.size() != n_modes) return out;
    for (uint32_t a = 0; a < n_modes; a++) {
        for (uint32_t b = a + 1; b < n_modes; b++) {
            int dx = std::abs(coords[a][0] - coords[b][0]);
            int dy = std::abs(coords[a][1] - coords[b][1]);
            if (dx + dy == 1) out.emplace_back(a, b);
        }
    }
    return out;
}

std::vector<Edge> ModeGraph::averaging_pairs() const {
    if (!weight_pairs.empty()) return weight_pairs;
    std::set<Edge> s;
    for (const auto &e : lattice_pairs()) s.insert(e);
    for (const auto &e : edges) s.insert(e);
    return {s.begin(), s.end()};
}

bool ModeGraph::connected() const {
    if (n_modes == 0) return true;
    for (uint32_t v = 1; v < n_modes; v++) {
        if (shortest_path(0, v).empty()) return false;
    }
    return true;
}

std::vector<std::vector<uint32_t>> ModeGraph::cycle_basis() const {
    std::vector<std::vector<uint32_t>> adj(n_modes);
    for (uint32_t v = 0; v < n_modes; v++) adj[v] = neighbors(v);
    std::vector<int64_t> parent(n_modes, -2);
    std::set<Edge> tree;
    for (uint32_t root = 0; root < n_modes; root++) {
        if (parent[root] != -2) continue;
        parent[root] = -1;
        std::deque<uint32_t> queue{root};
        while (!queue.empty()) {
            uint32_t u = queue.front();
            queue.pop_front();
            for (uint32_t w : adj[u]) {
                if (parent[w] == -2) {
                    parent[w] = u;
                    tree.insert(ordered(u, w));
                    queue.push_back(w);
                }
            }
        }
    }
    auto to_root = [&](uint32_t v) {
        std::vector<uint32_t> p{v};
        while (parent[p.back()] >= 0) p.push_back(static_cast<uint32_t>(parent[p.back()]));
        return p;
    };
    std::vector<std::vector<uint32_t>> cycles;
    std::vector<Edge> sorted_edges = edges;
    std::sort(sorted_edges.begin(), sorted_edges.end());
    for (const auto &[a, b] : sorted_edges) {
        if (tree.count(ordered(a, b))) continue;
        auto pa = to_root(a), pb = to_root(b);
        while (pa.size() > 1 && pb.size() > 1 && pa[pa.size() - 2] == pb[pb.size() - 2]) {
            pa.pop_back();
            pb.pop_back();
        }
        std::vector<uint32_t> cyc = pa;
        for (size_t k = pb.size() - 1; k-- > 0;) cyc.push_back(pb[k]);
        cyc.push_back(a);
        cycles.push_back(cyc);
    }
    return cycles;
}

SignedPauli Encoding::A(uint32_t j, uint32_t k) const {
    const SignedPauli *p = stored_edge(*this, j, k);
    if (p == nullptr) {
        throw std::invalid_argument("no edge operator for " + edge_label(j, k));
    }
    return j < k ? *p : -*p;
}

std::vector<std::string> relation_violations(const Encoding &enc) {
    std::vector<std::string> bad;
    size_t n = enc.n_qubits;
    size_t N = enc.graph.n_modes;
    auto check_len = [&](const SignedPauli &p, const std::string &label) {
        if (p.num_qubits() != n) {
            bad.push_back(label + " has " + std::to_string(p.num_qubits()) + " qubits, expected " + std::to_string(n));
            return false;
        }
        if (!p.is_hermitian()) {
            bad.push_back(label + " = " + p.str() + " is not Hermitian");
        }
        return true;
    };
    if (enc.vertex_ops.size() != N) {
        bad.push_back("expected " + std::to_string(N) + " vertex operators, got " + std::to_string(enc.vertex_ops.size()));
        return bad;
    }
    for (const auto &[a, b] : enc.graph.edges) {
        if (a == b || a >= N || b >= N) {
            bad.push_back("bad edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
        } else if (!stored_edge(enc, a, b)) {
            bad.push_back("graph edge without operator: " + edge_label(a, b));
        }
    }
    for (const auto &[e, p] : enc.edge_ops) {
        if (!enc.graph.has_edge(e.first, e.second)) {
            bad.push_back("edge operator " + edge_label(e.first, e.second) + " is not a graph edge");
        }
    }
    if (!bad.empty()) return bad;
    bool sizes_ok = true;
    for (uint32_t k = 0; k < N; k++) sizes_ok &= check_len(enc.vertex_ops[k], vertex_label(k));
    for (const auto &[e, p] : enc.edge_ops) sizes_ok &= check_len(p, edge_label(e.first, e.second));
    for (size_t m = 0; m < enc.stabilizers.size(); m++) {
        sizes_ok &= check_len(enc.stabilizers[m], "S" + std::to_string(m));
    }
    if (!sizes_ok) return bad;

    for (uint32_t j = 0; j < N; j++) {
        for (uint32_t k = j + 1; k < N; k++) {
            if (!enc.vertex_ops[j].commutes(enc.vertex_ops[k])) {
                bad.push_back(vertex_label(j) + " anticommutes with " + vertex_label(k));
            }
        }
    }
    for (const auto &[e, p] : enc.edge_ops) {
        for (uint32_t l = 0; l < N; l++) {
            bool should_anti = (l == e.first || l == e.second);
            if (p.commutes(enc.vertex_ops[l]) == should_anti) {
                bad.push_back(edge_label(e.first, e.second) + (should_anti ? " commutes with " : " anticommutes with ") +
                              vertex_label(l));
            }
        }
    }
    for (auto it = enc.edge_ops.begin(); it != enc.edge_ops.end(); ++it) {
        for (auto jt = std::next(it); jt != enc.edge_ops.end(); ++jt) {
            const auto &[e, p] = *it;
            const auto &[f, q] = *jt;
            int shared = (e.first == f.first) + (e.first == f.second) + (e.second == f.first) + (e.second == f.second);
            bool should_anti = shared == 1;
            if (p.commutes(q) == should_anti) {
                bad.push_back(edge_label(e.first, e.second) + (should_anti ? " commutes with " : " anticommutes with ") +
                              edge_label(f.first, f.second));
            }
        }
    }
    const auto &S = enc.stabilizers;
    for (size_t m = 0; m < S.size(); m++) {
        for (size_t j = m + 1; j < S.size(); j++) {
            if (!S[m].commutes(S[j])) {
                bad.push_back("S" + std::to_string(m) + " anticommutes with S" + std::to_string(j));
            }
        }
        for (uint32_t k = 0; k < N; k++) {
            if (!S[m].commutes(enc.vertex_ops[k])) {
                bad.push_back("S" + std::to_string(m) + " anticommutes with " + vertex_label(k));
            }
        }
        for (const auto &[e, p] : enc.edge_ops) {
            if (!S[m].commutes(p)) {
                bad.push_back("S" + std::to_string(m) + " anticommutes with " + edge_label(e.first, e.second));
            }
        }
    }
    std::vector<BitVector> rows;
    for (const auto &s : S) rows.push_back(symplectic_vector(s));
    if (gf2_rank(rows) != S.size()) {
        bad.push_back("stabilizer generators are not independent");
    }
    if (!bad.empty()) return bad;
    for (const auto &cyc : enc.graph.cycle_basis()) {
        SignedPauli loop = exchange_operator(enc, cyc);
        // exchange_operator applies i^(l-1); a closed loop needs i^l.
        loop.times_i(1);
        std::string label = "loop";
        for (uint32_t v : cyc) label += " " + std::to_string(v);
        if (group_sign(S, loop) != 1) {
            bad.push_back(label + " gives " + loop.str() + ", not a +1 element of the stabilizer group");
        }
    }
    return bad;
}

void validate(const Encoding &enc) {
    auto bad = relation_violations(enc);
    if (!bad.empty()) {
        std::string msg = "encoding '" + enc.name + "' violates relations:";
        for (const auto &b : bad) msg += "\n  " + b;
        throw std::invalid_argument(msg);
    }
}

Encoding build_jordan_wigner(const std::vector<uint32_t> &ordering, std::vector<std::array<int, 2>> coords) {
    size_t N = ordering.size();
    std::vector<bool> seen(N, false);
    for (uint32_t m : ordering) {
        if (m >= N || seen[m]) {
            throw std::invalid_argument("JW ordering is not a permutation of 0..N-1");
        }
        seen[m] = true;
    }
    if (!coords.empty() && coords.size() != N) {
        throw std::invalid_argument("JW coordinates must cover every mode");
    }
    Encoding enc;
    enc.name = "jw";
    enc.n_qubits = N;
    enc.graph.n_modes = N;
    enc.graph.coords = std::move(coords);
    enc.vertex_ops.assign(N, SignedPauli(N));
    for (size_t i = 0; i < N; i++) {
        enc.vertex_ops[ordering[i]] = SignedPauli::single(N, i, 'Z');
    }
    for (size_t i = 0; i + 1 < N; i++) {
        uint32_t a = ordering[i], b = ordering[i + 1];
        SignedPauli p(N);
        p.set_letter(i, 'Y');
        p.set_letter(i + 1, 'X');
        enc.graph.edges.push_back(ordered(a, b));
        enc.edge_ops.emplace(ordered(a, b), a < b ? p : -p);
    }
    return enc;
}

Gf2Matrix gaqm_default_matrix(size_t n_aux) {
    Gf2Matrix M(n_aux, std::vector<uint8_t>(n_aux, 0));
    for (size_t k = 0; k < n_aux; k++) M[k][k] = 1;
    if (n_aux >= 3) {
        M[n_aux - 3][n_aux - 1] = 1;
    } else if (n_aux == 2) {
        M[0][1] = 1;
    }
    return M;
}

std::vector<SignedPauli> gaqm_walk_strings(const Encoding &base_jw, const std::vector<uint32_t> &walk) {
    std::vector<SignedPauli> out;
    for (size_t m = 0; m + 1 < walk.size(); m++) {
        uint32_t a = std::min(walk[m], walk[m + 1]), b = std::max(walk[m], walk[m + 1]);
        out.push_back(exchange_operator(base_jw, a, b));
    }
    return out;
}

Encoding build_gaqm(const Encoding &base, const std::vector<SignedPauli> &t, const Gf2Matrix &M) {
    size_t N = base.n_qubits;
    size_t a = t.size();
    size_t n = N + a;
    if (M.size() != a) {
        throw std::invalid_argument("GAQM matrix must be " + std::to_string(a) + "x" + std::to_string(a));
    }
    for (const auto &s : t) {
        if (s.num_qubits() != N) {
            throw std::invalid_argument("GAQM t-string " + s.str() + " does not act on the " + std::to_string(N) +
                                        " JW qubits");
        }
    }
    auto Minv = gf2_inverse(M);
    if (!Minv) {
        throw std::invalid_argument("GAQM matrix is singular over GF(2)");
    }
    auto extend = [&](const SignedPauli &p) {
        SignedPauli r(n);
        for (size_t q = 0; q < N; q++) r.set_letter(q, p.letter(q));
        r.set_phase_exp(p.phase_exp());
        return r;
    };
    std::vector<SignedPauli> zfrak(a, SignedPauli(n)), xfrak(a, SignedPauli(n));
    for (size_t j = 0; j < a; j++) {
        for (size_t k = 0; k < a; k++) {
            if ((*Minv)[j][k]) zfrak[j].set_letter(N + k, 'Z');
            if (M[j][k]) xfrak[k].set_letter(N + j, 'X');
        }
    }
    auto dress = [&](const SignedPauli &p) {
        SignedPauli r = extend(p);
        for (size_t m = 0; m < a; m++) {
            if (!p.commutes(t[m])) r *= zfrak[m];
        }
        return r;
    };
    Encoding enc;
    enc.name = "gaqm";
    enc.n_qubits = n;
    enc.graph = base.graph;
    for (const auto &b : base.vertex_ops) enc.vertex_ops.push_back(dress(b));
    for (const auto &[e, p] : base.edge_ops) enc.edge_ops.emplace(e, dress(p));
    for (size_t k = 0; k < a; k++) {
        SignedPauli q = extend(t[k]);
        q *= xfrak[k];
        for (size_t j = 0; j < k; j++) {
            if (!t[j].commutes(t[k])) q *= zfrak[j];
        }
        enc.stabilizers.push_back(q);
    }
    return enc;
}

SignedPauli exchange_operator(const Encoding &enc, const std::vector<uint32_t> &path) {
    if (path.size() < 2) {
        throw std::invalid_argument("exchange path needs at least two modes");
    }
    SignedPauli prod(enc.n_qubits);
    for (size_t k = 0; k + 1 < path.size(); k++) {
        if (!enc.graph.has_edge(path[k], path[k + 1])) {
            throw std::invalid_argument("broken exchange path: no edge between " + std::to_string(path[k]) + " and " +
                                        std::to_string(path[k + 1]));
        }
        prod *= enc.A(path[k], path[k + 1]);
    }
    prod.times_i(static_cast<uint8_t>((path.size() - 2) & 3));
    return prod;
}

SignedPauli exchange_operator(const Encoding &enc, uint32_t j, uint32_t k) {
    if (j >= enc.n_modes() || k >= enc.n_modes() || j == k) {
        throw std::invalid_argument("bad exchange pair (" + std::to_string(j) + "," + std::to_string(k) + ")");
    }
    auto path = enc.graph.shortest_path(j, k);
    if (path.empty()) {
        throw std::invalid_argument("modes " + std::to_string(j) + " and " + std::to_string(k) + " are not connected");
    }
    return exchange_operator(enc, path);
}

PauliSum encode_pair(const Encoding &enc, uint32_t j, uint32_t k) {
    size_t n = enc.n_qubits;
    if (j >= enc.n_modes() || k >= enc.n_modes()) {
        throw std::invalid_argument("mode index out of range");
    }
    PauliSum one_minus_bk = PauliSum::identity(n);
    one_minus_bk.add(enc.B(k), -1.0);
    if (j == k) {
        one_minus_bk *= 0.5;
        return one_minus_bk;
    }
    PauliSum one_minus_bj = PauliSum::identity(n);
    one_minus_bj.add(enc.B(j), -1.0);
    PauliSum out = one_minus_bj * PauliSum::of(exchange_operator(enc, j, k)) * one_minus_bk;
    out *= cplx(0, 0.25);
    out.simplify();
    return out;
}

namespace {

struct RawTerm {
    cplx coef;
    std::vector<Ladder> ops;
};

/// Rewrites a ladder product as a sum of products a+_j a_k a+_l a_m ...
std::vector<RawTerm> to_pair_form(const RawTerm &start) {
    std::vector<RawTerm> done;
    std::vector<RawTerm> work{start};
    while (!work.empty()) {
        RawTerm t = std::move(work.back());
        work.pop_back();
        size_t p = 0;
        while (p < t.ops.size() && t.ops[p].dagger == (p % 2 == 0)) p++;
        if (p == t.ops.size()) {
            done.push_back(std::move(t));
            continue;
        }
        bool want = (p % 2 == 0);
        size_t q = p + 1;
        while (q < t.ops.size() && t.ops[q].dagger != want) q++;
        if (q == t.ops.size()) {
            throw std::invalid_argument("fermionic term does not conserve particle number");
        }
        // Bubble ops[q] to position p with anticommutation swaps.
        for (size_t s = q; s > p; s--) {
            const Ladder u = t.ops[s - 1], v = t.ops[s];
            if (u.mode == v.mode && u.dagger != v.dagger) {
                RawTerm contracted{t.coef, {}};
                for (size_t k = 0; k < t.ops.size(); k++) {
                    if (k != s - 1 && k != s) contracted.ops.push_back(t.ops[k]);
                }
                work.push_back(std::move(contracted));
            }
            std::swap(t.ops[s - 1], t.ops[s]);
            t.coef = -t.coef;
        }
        work.push_back(std::move(t));
    }
    return done;
}

}  // namespace

PauliSum encode_hamiltonian(const Encoding &enc, const FermionSum &h) {
    size_t n = enc.n_qubits;
    PauliSum out(n);
    std::map<Edge, PauliSum> pair_cache;
    auto pair = [&](uint32_t j, uint32_t k) -> const PauliSum & {
        auto it = pair_cache.find({j, k});
        if (it == pair_cache.end()) it = pair_cache.emplace(Edge{j, k}, encode_pair(enc, j, k)).first;
        return it->second;
    };
    for (const auto &term : h.terms) {
        if (term.ops.size() % 2) {
            throw std::invalid_argument("fermionic term with an odd number of ladder operators");
        }
        for (const auto &op : term.ops) {
            if (op.mode >= enc.n_modes()) {
                throw std::invalid_argument("mode " + std::to_string(op.mode) + " out of range");
            }
        }
        for (const auto &t : to_pair_form({term.coef, term.ops})) {
            PauliSum prod = PauliSum::identity(n, t.coef);
            for (size_t p = 0; p < t.ops.size(); p += 2) {
                prod = prod * pair(t.ops[p].mode, t.ops[p + 1].mode);
            }
            out += prod;
        }
    }
    out.simplify();
    out.sort();
    return out;
}

PauliSum number_operator(const Encoding &enc) {
    FermionSum f;
    f.n_modes = enc.n_modes();
    for (uint32_t k = 0; k < enc.n_modes(); k++) f.add_number(1.0, k);
    return encode_hamiltonian(enc, f);
}

std::vector<SignedPauli> stabilizer_group(const std::vector<SignedPauli> &gens) {
    if (gens.size() > 24) {
        throw std::invalid_argument("stabilizer group too large to enumerate");
    }
    size_t n = gens.empty() ? 0 : gens[0].num_qubits();
    std::vector<SignedPauli> out;
    out.reserve(size_t{1} << gens.size());
    out.emplace_back(n);
    for (const auto &g : gens) {
        size_t sz = out.size();
        for (size_t k = 0; k < sz; k++) out.push_back(out[k] * g);
    }
    return out;
}

SignedPauli minimize_weight(const SignedPauli &p, const std::vector<SignedPauli> &group) {
    SignedPauli best = p;
    size_t best_w = p.weight();
    for (const auto &g : group) {
        if (g.num_qubits() != p.num_qubits()) continue;
        SignedPauli c = p * g;
        size_t w = c.weight();
        if (w < best_w || (w == best_w && c < best)) {
            best = c;
            best_w = w;
        }
    }
    return best;
}

SignedPauli total_parity(const Encoding &enc) {
    SignedPauli p(enc.n_qubits);
    for (const auto &b : enc.vertex_ops) p *= b;
    return p;
}

std::optional<size_t> code_distance(size_t n, const std::vector<SignedPauli> &gens, size_t max_weight,
                                    const std::vector<SignedPauli> &symmetries) {
    Gf2Basis basis(2 * n);
    for (const auto &g : gens) basis.insert(symplectic_vector(g));
    std::vector<size_t> support;
    static const char kLetters[3] = {'X', 'Y', 'Z'};
    for (size_t w = 1; w <= std::min(max_weight, n); w++) {
        support.assign(w, 0);
        for (size_t k = 0; k < w; k++) support[k] = k;
        while (true) {
            size_t combos = 1;
            for (size_t k = 0; k < w; k++) combos *= 3;
            for (size_t c = 0; c < combos; c++) {
                SignedPauli p(n);
                size_t code = c;
                for (size_t k = 0; k < w; k++) {
                    p.set_letter(support[k], kLetters[code % 3]);
                    code /= 3;
                }
                bool ok = true;
                for (const auto &g : symmetries) {
                    if (!p.commutes(g)) {
                        ok = false;
                        break;
                    }
                }
                for (const auto &g : gens) {
                    if (!ok) break;
                    if (!p.commutes(g)) {
                        ok = false;
                        break;
                    }
                }
                if (ok && !basis.express(symplectic_vector(p))) return w;
            }
            // next combination
            size_t i = w;
            while (i > 0 && support[i - 1] == n - w + i - 1) i--;
            if (i == 0) break;
            support[i - 1]++;
            for (size_t k = i; k < w; k++) support[k] = support[k - 1] + 1;
        }
    }
    return std::nullopt;
}

CodeParameters code_parameters(const Encoding &enc, size_t max_distance_weight) {
    CodeParameters cp;
    cp.n = enc.n_qubits;
    std::vector<BitVector> rows;
    for (const auto &s : enc.stabilizers) rows.push_back(symplectic_vector(s));
    cp.r = gf2_rank(rows);
    cp.rank_deficient = cp.r != enc.stabilizers.size();
    cp.k = cp.n - cp.r;
    auto d = code_distance(cp.n, enc.stabilizers, max_distance_weight, {total_parity(enc)});
    if (d) {
        cp.d = *d;
    } else {
        cp.d = max_distance_weight + 1;
        cp.d_is_lower_bound = true;
    }
    std::vector<SignedPauli> group;
    if (!cp.rank_deficient && enc.stabilizers.size() <= 20) {
        group = stabilizer_group(enc.stabilizers);
    } else {
        group = {SignedPauli(cp.n)};
    }
    auto pairs = enc.graph.averaging_pairs();
    double sum = 0;
    for (const auto &[a, b] : pairs) sum += minimize_weight(exchange_operator(enc, a, b), group).weight();
    cp.avg_edge_weight = pairs.empty() ? 0 : sum / pairs.size();
    sum = 0;
    for (const auto &b : enc.vertex_ops) sum += minimize_weight(b, group).weight();
    cp.avg_vertex_weight = enc.vertex_ops.empty() ? 0 : sum / enc.vertex_ops.size();
    if (cp.r > 0 && group.size() > 1) {
        // Lowest-weight generating set: greedy over elements sorted by weight.
        std::vector<const SignedPauli *> els;
        for (size_t k = 1; k < group.size(); k++) els.push_back(&group[k]);
        std::stable_sort(els.begin(), els.end(), [](const SignedPauli *a, const SignedPauli *b) {
            return a->weight() != b->weight() ? a->weight() < b->weight() : *a < *b;
        });
        Gf2Basis basis(2 * cp.n);
        size_t total = 0, taken = 0;
        for (const auto *e : els) {
            if (basis.insert(symplectic_vector(*e))) {
                total += e->weight();
                if (++taken == cp.r) break;
            }
        }
        cp.avg_stabilizer_weight = static_cast<double>(total) / cp.r;
        cp.stabilizer_weight_defined = true;
    } else if (cp.r > 0) {
        double t = 0;
        for (const auto &s : enc.stabilizers) t += s.weight();
        cp.avg_stabilizer_weight = t / enc.stabilizers.size();
        cp.stabilizer_weight_defined = true;
    }
    return cp;
}

OperatorTable::OperatorTable(const Encoding &enc, size_t max_group_gens) : enc_(&enc) {
    if (!enc.stabilizers.empty() && enc.stabilizers.size() <= max_group_gens) {
        group_ = stabilizer_group(enc.stabilizers);
    }
}

SignedPauli OperatorTable::minimized(const SignedPauli &p) const {
    return group_.empty() ? p : minimize_weight(p, group_);
}

SignedPauli OperatorTable::vertex(uint32_t k) const { return minimized(enc_->B(k)); }

SignedPauli OperatorTable::exchange(uint32_t j, uint32_t k) const {
    return minimized(exchange_operator(*enc_, j, k));
}

// ---------------------------------------------------------------- file format

Encoding parse_encoding(const std::string &text, const std::string &origin) {
    YAML::Node doc;
    try {
        doc = YAML::Load(text);
    } catch (const YAML::Exception &e) {
        throw std::invalid_argument(origin + ": parse error: " + e.what());
    }
    auto fail = [&](const std::string &msg) { throw std::invalid_argument(origin + ": " + msg); };
    Encoding enc;
    try {
        enc.name = doc["name"] ? doc["name"].as<std::string>() : origin;
        YAML::Node g = doc["graph"];
        if (!g) fail("missing 'graph' section");
        enc.graph.n_modes = g["modes"].as<size_t>();
        for (const auto &e : g["edges"]) {
            uint32_t a = e[0].as<uint32_t>(), b = e[1].as<uint32_t>();
            enc.graph.edges.push_back(ordered(a, b));
        }
        if (g["coords"]) {
            for (const auto &c : g["coords"]) enc.graph.coords.push_back({c[0].as<int>(), c[1].as<int>()});
        }
        if (g["pairs"]) {
            for (const auto &e : g["pairs"]) {
                enc.graph.weight_pairs.push_back(ordered(e[0].as<uint32_t>(), e[1].as<uint32_t>()));
            }
        }
        YAML::Node v = doc["vertex_ops"];
        if (!v) fail("missing 'vertex_ops' section");
        enc.vertex_ops.assign(enc.graph.n_modes, SignedPauli());
        std::vector<bool> have(enc.graph.n_modes, false);
        for (const auto &kv : v) {
            uint32_t m = kv.first.as<uint32_t>();
            if (m >= enc.graph.n_modes) fail("vertex operator for mode " + std::to_string(m) + " out of range");
            enc.vertex_ops[m] = SignedPauli::from_text(kv.second.as<std::string>());
            have[m] = true;
        }
        for (size_t m = 0; m < have.size(); m++) {
            if (!have[m]) fail("missing vertex operator for mode " + std::to_string(m));
        }
        YAML::Node eo = doc["edge_ops"];
        if (eo) {
            for (const auto &kv : eo) {
                std::string key = kv.first.as<std::string>();
                auto dash = key.find('-');
                if (dash == std::string::npos) fail("edge label '" + key + "' is not of the form j-k");
                uint32_t a = std::stoul(key.substr(0, dash)), b = std::stoul(key.substr(dash + 1));
                SignedPauli p = SignedPauli::from_text(kv.second.as<std::string>());
                if (a > b) p = -p;
                if (!enc.edge_ops.emplace(ordered(a, b), p).second) fail("duplicate edge operator " + key);
            }
        }
        if (doc["stabilizers"]) {
            for (const auto &s : doc["stabilizers"]) enc.stabilizers.push_back(SignedPauli::from_text(s.as<std::string>()));
        }
        enc.n_qubits = enc.vertex_ops.empty() ? 0 : enc.vertex_ops[0].num_qubits();
        if (doc["meta"]) {
            YAML::Node m = doc["meta"];
            ExpectedParameters ex;
            ex.n = m["n"].as<size_t>();
            ex.k = m["k"].as<size_t>();
            ex.d = m["d"].as<size_t>();
            if (m["avg_edge_weight"]) ex.avg_edge_weight = m["avg_edge_weight"].as<double>();
            if (m["avg_vertex_weight"]) ex.avg_vertex_weight = m["avg_vertex_weight"].as<double>();
            if (m["avg_stabilizer_weight"]) ex.avg_stabilizer_weight = m["avg_stabilizer_weight"].as<double>();
            if (ex.n != enc.n_qubits) {
                fail("meta.n = " + std::to_string(ex.n) + " but operators act on " + std::to_string(enc.n_qubits) +
                     " qubits");
            }
            enc.expected = ex;
        }
    } catch (const YAML::Exception &e) {
        fail(std::string("malformed definition: ") + e.what());
    }
    validate(enc);
    return enc;
}

Encoding load_encoding(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open encoding file " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_encoding(ss.str(), path);
}

std::string dump_encoding(const Encoding &enc) {
    YAML::Emitter out;
    out << YAML::BeginMap;
    out << YAML::Key << "name" << YAML::Value << enc.name;
    out << YAML::Key << "graph" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "modes" << YAML::Value << enc.graph.n_modes;
    out << YAML::Key << "edges" << YAML::Value << YAML::BeginSeq;
    for (const auto &[a, b] : enc.graph.edges) out << YAML::Flow << std::vector<uint32_t>{a, b};
    out << YAML::EndSeq;
    if (!enc.graph.coords.empty()) {
        out << YAML::Key << "coords" << YAML::Value << YAML::BeginSeq;
        for (const auto &c : enc.graph.coords) out << YAML::Flow << std::vector<int>{c[0], c[1]};
        out << YAML::EndSeq;
    }
    out << YAML::EndMap;
    out << YAML::Key << "vertex_ops" << YAML::Value << YAML::BeginMap;
    for (size_t k = 0; k < enc.vertex_ops.size(); k++) out << YAML::Key << k << YAML::Value << enc.vertex_ops[k].str();
    out << YAML::EndMap;
    out << YAML::Key << "edge_ops" << YAML::Value << YAML::BeginMap;
    for (const auto &[e, p] : enc.edge_ops) {
        out << YAML::Key << (std::to_string(e.first) + "-" + std::to_string(e.second)) << YAML::Value << p.str();
    }
    out << YAML::EndMap;
    out << YAML::Key << "stabilizers" << YAML::Value << YAML::BeginSeq;
    for (const auto &s : enc.stabilizers) out << s.str();
    out << YAML::EndSeq;
    out << YAML::EndMap;
    return std::string(out.c_str()) + "\n";
}

}  // namespace love
