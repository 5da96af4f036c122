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

#ifndef LOVE_ENCODING_H
#define LOVE_ENCODING_H

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "love/bits.h"
#include "love/pauli.h"
#include "love/pauli_sum.h"

namespace love {

using Edge = std::pair<uint32_t, uint32_t>;

/// Modes are 0-based. Edges are stored with first < second.
struct ModeGraph {
    size_t n_modes = 0;
    std::vector<Edge> edges;
    /// Optional lattice coordinates (x, y) per mode.
    std::vector<std::array<int, 2>> coords;
    /// Optional explicit pair list used for the average edge-operator weight.
    std::vector<Edge> weight_pairs;

    bool has_edge(uint32_t a, uint32_t b) const;
    std::vector<uint32_t> neighbors(uint32_t v) const;
    /// Shortest path from a to b; ties broken lexicographically on the
    /// vertex sequence. Empty when unreachable.
    std::vector<uint32_t> shortest_path(uint32_t a, uint32_t b) const;
    /// Pairs at unit lattice distance (requires coords).
    std::vector<Edge> lattice_pairs() const;
    /// weight_pairs if given, else lattice pairs plus graph edges.
    std::vector<Edge> averaging_pairs() const;
    bool connected() const;
    /// Independent cycles as closed vertex sequences (first == last).
    std::vector<std::vector<uint32_t>> cycle_basis() const;
};

struct ExpectedParameters {
    size_t n = 0, k = 0, d = 0;
    std::optional<double> avg_edge_weight, avg_vertex_weight, avg_stabilizer_weight;
};

class Encoding {
   public:
    std::string name;
    size_t n_qubits = 0;
    ModeGraph graph;
    std::vector<SignedPauli> vertex_ops;     // B_k
    std::map<Edge, SignedPauli> edge_ops;    // A_jk for j < k
    std::vector<SignedPauli> stabilizers;    // S^(m)
    std::optional<ExpectedParameters> expected;

    size_t n_modes() const { return graph.n_modes; }
    const SignedPauli &B(uint32_t k) const { return vertex_ops.at(k); }
    /// Directed edge operator; A(k, j) = -A(j, k).
    SignedPauli A(uint32_t j, uint32_t k) const;
};

/// Every violated relation as a human-readable line. Empty means valid.
std::vector<std::string> relation_violations(const Encoding &enc);
/// Throws std::invalid_argument listing the violations.
void validate(const Encoding &enc);

/// JW over the given mode order: qubit i carries mode ordering[i].
Encoding build_jordan_wigner(const std::vector<uint32_t> &ordering, std::vector<std::array<int, 2>> coords = {});

/// Appendix-style auxiliary-qubit construction on top of a JW code.
/// `t_strings` act on the JW qubits; M is the auxiliary basis matrix.
Encoding build_gaqm(const Encoding &base_jw, const std::vector<SignedPauli> &t_strings, const Gf2Matrix &M);
/// Identity plus M[a-3][a-1] = 1 tying off the last auxiliary qubit
/// (falls back to [[1,1],[0,1]] when a = 2).
Gf2Matrix gaqm_default_matrix(size_t n_aux);
/// JW exchange operators along consecutive links of a mode walk.
std::vector<SignedPauli> gaqm_walk_strings(const Encoding &base_jw, const std::vector<uint32_t> &walk);

Encoding load_encoding(const std::string &path);
Encoding parse_encoding(const std::string &yaml_text, const std::string &origin = "<string>");
std::string dump_encoding(const Encoding &enc);

/// i^(l-1) times the product of edge operators along the path.
SignedPauli exchange_operator(const Encoding &enc, const std::vector<uint32_t> &path);
/// Exchange operator along the auto-routed shortest path.
SignedPauli exchange_operator(const Encoding &enc, uint32_t j, uint32_t k);

/// Image of a^dagger_j a_k as a Pauli sum.
PauliSum encode_pair(const Encoding &enc, uint32_t j, uint32_t k);
PauliSum encode_hamiltonian(const Encoding &enc, const FermionSum &h);
/// Total number operator.
PauliSum number_operator(const Encoding &enc);

/// All 2^r elements of the stabilizer group (r <= 24).
std::vector<SignedPauli> stabilizer_group(const std::vector<SignedPauli> &gens);
/// Lowest-weight p*g over the group, ties broken by letters.
SignedPauli minimize_weight(const SignedPauli &p, const std::vector<SignedPauli> &group);

struct CodeParameters {
    size_t n = 0, k = 0, r = 0;
    size_t d = 0;
    bool d_is_lower_bound = false;
    bool rank_deficient = false;
    double avg_edge_weight = 0, avg_vertex_weight = 0, avg_stabilizer_weight = 0;
    bool stabilizer_weight_defined = false;
};

/// Distance counts parity-even logicals only. `max_distance_weight` bounds
/// the exhaustive search.
CodeParameters code_parameters(const Encoding &enc, size_t max_distance_weight = 4);

/// Minimum weight over strings commuting with every generator and every
/// symmetry but outside the stabilizer group; nullopt when nothing is found
/// up to max_weight.
std::optional<size_t> code_distance(size_t n, const std::vector<SignedPauli> &gens, size_t max_weight,
                                    const std::vector<SignedPauli> &symmetries = {});
/// Product of all vertex operators.
SignedPauli total_parity(const Encoding &enc);

/// Operators of an encoding with stabilizer-minimized weights, cached.
class OperatorTable {
   public:
    explicit OperatorTable(const Encoding &enc, size_t max_group_gens = 16);
    const Encoding &encoding() const { return *enc_; }
    SignedPauli vertex(uint32_t k) const;
    SignedPauli exchange(uint32_t j, uint32_t k) const;
    SignedPauli minimized(const SignedPauli &p) const;

   private:
    const Encoding *enc_;
    std::vector<SignedPauli> group_;
};

}  // namespace love

#endif
