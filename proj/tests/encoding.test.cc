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

#include <gtest/gtest.h>

#include <fstream>

#include "dense.h"

using namespace love;
using namespace love::testing;

namespace {

std::string fixture(const std::string &name) { return std::string(LOVE_FIXTURE_DIR) + "/" + name + ".yaml"; }

std::vector<std::array<int, 2>> grid(int w, int h) {
    std::vector<std::array<int, 2>> c;
    for (int y = 0; y < h; y++)
        for (int x = 0; x < w; x++) c.push_back({x, y});
    return c;
}

/// Fermion operators on the qubit space, a_m = (-1)^p (prod_{l<p} Z_l) |0><1|_p with p the JW position.
struct FermionMatrices {
    std::vector<Mat> a;
    explicit FermionMatrices(const std::vector<uint32_t> &ordering) {
        size_t N = ordering.size();
        size_t d = size_t{1} << N;
        a.assign(N, Mat());
        for (size_t p = 0; p < N; p++) {
            Mat m = Mat::Zero(d, d);
            for (size_t c = 0; c < d; c++) {
                if (!((c >> p) & 1)) continue;
                int s = (std::popcount(c & ((size_t{1} << p) - 1)) + p) % 2 ? -1 : 1;
                m(c ^ (size_t{1} << p), c) = s;
            }
            a[ordering[p]] = m;
        }
    }
    Mat term(const FermionTerm &t) const {
        Mat m = Mat::Identity(a[0].rows(), a[0].cols());
        for (const auto &op : t.ops) m = m * (op.dagger ? Mat(a[op.mode].adjoint()) : a[op.mode]);
        return t.coef * m;
    }
    Mat sum(const FermionSum &f) const {
        Mat m = Mat::Zero(a[0].rows(), a[0].cols());
        for (const auto &t : f.terms) m += term(t);
        return m;
    }
};

FermionSum random_hermitian_fermion_sum(size_t N, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(-1, 1);
    FermionSum f;
    f.n_modes = N;
    for (uint32_t j = 0; j < N; j++) {
        f.add_number(u(rng), j);
        for (uint32_t k = j + 1; k < N; k++) {
            f.add_hopping(cplx(u(rng), u(rng)), j, k);
            f.add_density_density(u(rng), j, k);
        }
    }
    // A generic quartic term plus its conjugate.
    cplx c(u(rng), u(rng));
    f.add(c, {{0, true}, {1, true}, {2, false}, {uint32_t(N - 1), false}});
    f.add(std::conj(c), {{uint32_t(N - 1), true}, {2, true}, {1, false}, {0, false}});
    return f;
}

}  // namespace

TEST(encoding, jw_two_modes) {
    auto enc = build_jordan_wigner({0, 1});
    EXPECT_EQ(enc.A(0, 1), SignedPauli::from_text("YX"));
    EXPECT_EQ(enc.A(1, 0), SignedPauli::from_text("-YX"));
    EXPECT_EQ(enc.B(0), SignedPauli::from_text("ZI"));
    EXPECT_TRUE(enc.stabilizers.empty());
    EXPECT_TRUE(relation_violations(enc).empty());
}

TEST(encoding, jw_bad_permutation) {
    EXPECT_THROW(build_jordan_wigner({0, 0, 1}), std::invalid_argument);
    EXPECT_THROW(build_jordan_wigner({0, 3, 1}), std::invalid_argument);
}

TEST(encoding, jw_3x3_parameters) {
    auto enc = build_jordan_wigner({0, 1, 2, 5, 4, 3, 6, 7, 8}, grid(3, 3));
    auto cp = code_parameters(enc);
    EXPECT_EQ(cp.n, 9u);
    EXPECT_EQ(cp.k, 9u);
    EXPECT_EQ(cp.d, 1u);
    EXPECT_FALSE(cp.d_is_lower_bound);
    EXPECT_NEAR(cp.avg_edge_weight, 3.0, 0.005);
    EXPECT_NEAR(cp.avg_vertex_weight, 1.0, 1e-12);
}

TEST(encoding, jw_4x3_horizontal_snake) {
    auto enc = build_jordan_wigner({0, 1, 2, 3, 7, 6, 5, 4, 8, 9, 10, 11}, grid(4, 3));
    auto cp = code_parameters(enc);
    EXPECT_EQ(cp.k, 12u);
    EXPECT_NEAR(cp.avg_edge_weight, 58.0 / 17.0, 1e-12);
}

TEST(encoding, exchange_operator_paths) {
    auto enc = build_jordan_wigner({0, 1, 2});
    EXPECT_EQ(exchange_operator(enc, std::vector<uint32_t>{0, 1}), enc.A(0, 1));
    auto a02 = exchange_operator(enc, std::vector<uint32_t>{0, 1, 2});
    Mat oracle = C(0, 1) * dense(enc.A(0, 1)) * dense(enc.A(1, 2));
    EXPECT_TRUE(close(dense(a02), oracle));
    EXPECT_EQ(a02.unsigned_copy(), SignedPauli::from_text("YZX"));
    EXPECT_THROW(exchange_operator(enc, std::vector<uint32_t>{0, 2}), std::invalid_argument);
    EXPECT_EQ(exchange_operator(enc, 0, 2), a02);
}

TEST(encoding, shortest_path_is_lexicographic) {
    ModeGraph g;
    g.n_modes = 4;
    g.edges = {{0, 1}, {0, 2}, {1, 3}, {2, 3}};
    EXPECT_EQ(g.shortest_path(0, 3), (std::vector<uint32_t>{0, 1, 3}));
    EXPECT_EQ(g.shortest_path(3, 0), (std::vector<uint32_t>{3, 1, 0}));
    EXPECT_EQ(g.cycle_basis().size(), 1u);
}

TEST(encoding, number_operator_jw) {
    auto enc = build_jordan_wigner({0, 1, 2});
    FermionSum f;
    f.add_number(1.0, 1);
    auto h = encode_hamiltonian(enc, f);
    PauliSum expect = PauliSum::identity(3, 0.5);
    expect.add(SignedPauli::from_text("IZI"), -0.5);
    EXPECT_TRUE(close(dense(h), dense(expect)));
}

TEST(encoding, hopping_two_modes) {
    auto enc = build_jordan_wigner({0, 1});
    FermionSum f;
    f.add_hopping(0.7, 0, 1);
    auto h = encode_hamiltonian(enc, f);
    FermionMatrices fm({0, 1});
    EXPECT_TRUE(close(dense(h), fm.sum(f)));
    PauliSum xx = PauliSum::of(SignedPauli::from_text("XX"), 0.35);
    xx.add(SignedPauli::from_text("YY"), 0.35);
    // Same operator up to the sign convention of a_k.
    EXPECT_TRUE(close(dense(h), dense(xx)) || close(dense(h), -dense(xx)));
}

TEST(encoding, hubbard_onsite_four_terms) {
    auto enc = build_jordan_wigner({0, 1});
    FermionSum f;
    f.add_density_density(1.0, 0, 1);
    auto h = encode_hamiltonian(enc, f);
    EXPECT_EQ(h.size(), 4u);
    for (const auto &t : h.terms()) EXPECT_NEAR(std::abs(t.coef), 0.25, 1e-12);
}

TEST(encoding, jw_dense_oracle_random_hamiltonians) {
    std::mt19937_64 rng(31);
    for (size_t N = 3; N <= 5; N++) {
        std::vector<uint32_t> ord(N);
        for (size_t k = 0; k < N; k++) ord[k] = k;
        for (int rep = 0; rep < 2; rep++) {
            auto enc = build_jordan_wigner(ord);
            auto f = random_hermitian_fermion_sum(N, rng);
            auto h = encode_hamiltonian(enc, f);
            EXPECT_TRUE(h.is_hermitian());
            EXPECT_TRUE(close(dense(h), FermionMatrices(ord).sum(f), 1e-9)) << "N=" << N;
            std::shuffle(ord.begin(), ord.end(), rng);
        }
    }
}

TEST(encoding, encode_errors) {
    auto enc = build_jordan_wigner({0, 1});
    FermionSum odd;
    odd.add(1.0, {{0, true}});
    EXPECT_THROW(encode_hamiltonian(enc, odd), std::invalid_argument);
    FermionSum out_of_range;
    out_of_range.add_number(1.0, 5);
    EXPECT_THROW(encode_hamiltonian(enc, out_of_range), std::invalid_argument);
    FermionSum non_conserving;
    non_conserving.add(1.0, {{0, true}, {1, true}});
    EXPECT_THROW(encode_hamiltonian(enc, non_conserving), std::invalid_argument);
}

TEST(encoding, empty_generators_distance_one) {
    auto enc = build_jordan_wigner({0, 1, 2, 3});
    auto cp = code_parameters(enc);
    EXPECT_EQ(cp.d, 1u);
    EXPECT_EQ(cp.k, cp.n);
}

struct FixtureCase {
    const char *name;
    size_t n, k, d;
    double a, b, s;
};

class TableFixtures : public ::testing::TestWithParam<FixtureCase> {};

TEST_P(TableFixtures, parameters) {
    const auto &c = GetParam();
    auto enc = load_encoding(fixture(c.name));
    auto cp = code_parameters(enc);
    EXPECT_EQ(cp.n, c.n);
    EXPECT_EQ(cp.k, c.k);
    EXPECT_EQ(cp.d, c.d);
    EXPECT_NEAR(cp.avg_edge_weight, c.a, 0.005);
    EXPECT_NEAR(cp.avg_vertex_weight, c.b, 0.005);
    EXPECT_NEAR(cp.avg_stabilizer_weight, c.s, 0.005);
    ASSERT_TRUE(enc.expected.has_value());
    EXPECT_EQ(enc.expected->k, c.k);
}

INSTANTIATE_TEST_SUITE_P(encoding, TableFixtures,
                         ::testing::Values(FixtureCase{"compact_3x3", 11, 9, 1, 2.67, 1, 6},
                                           FixtureCase{"compact_4x3", 15, 12, 1, 2.71, 1, 6.33},
                                           FixtureCase{"compact_hubbard_2x3", 14, 12, 1, 2.57, 1, 5},
                                           FixtureCase{"gse_3x3", 14, 8, 1, 2.71, 1.56, 4.67},
                                           FixtureCase{"gse_4x3", 20, 12, 1, 2.76, 1.67, 5},
                                           FixtureCase{"gse_hubbard_2x3", 16, 10, 1, 2.43, 1.33, 4}),
                         [](const auto &info) { return std::string(info.param.name); });

TEST(encoding, fixtures_pass_relation_check_and_path_independence) {
    for (const char *name : {"compact_3x3", "compact_4x3", "gse_3x3", "gse_4x3"}) {
        auto enc = load_encoding(fixture(name));
        EXPECT_TRUE(relation_violations(enc).empty());
        auto group = stabilizer_group(enc.stabilizers);
        // Two routes between opposite corners of a plaquette agree up to the group.
        for (const auto &cyc : enc.graph.cycle_basis()) {
            std::vector<uint32_t> one(cyc.begin(), cyc.begin() + 2);
            std::vector<uint32_t> other(cyc.rbegin(), cyc.rend() - 1);
            auto p1 = exchange_operator(enc, one);
            auto p2 = exchange_operator(enc, other);
            auto prod = p1 * p2;
            bool found = false;
            for (const auto &g : group) found |= g.same_letters(prod);
            EXPECT_TRUE(found) << name;
        }
    }
}

TEST(encoding, rejects_broken_relations) {
    std::ifstream in(fixture("compact_3x3"));
    std::stringstream ss;
    ss << in.rdbuf();
    auto enc = parse_encoding(ss.str());
    // Swap in an edge operator that commutes with B at its endpoint.
    auto [j, k] = enc.edge_ops.begin()->first;
    enc.edge_ops.begin()->second = enc.B(k);
    auto bad = relation_violations(enc);
    std::string want = "A(" + std::to_string(j) + "," + std::to_string(k) + ") commutes with B(" + std::to_string(j) + ")";
    EXPECT_NE(std::find(bad.begin(), bad.end(), want), bad.end());
    auto text = dump_encoding(enc);
    EXPECT_THROW(parse_encoding(text), std::invalid_argument);
}

TEST(encoding, rejects_anticommuting_stabilizer) {
    auto enc = build_jordan_wigner({0, 1});
    enc.stabilizers.push_back(SignedPauli::from_text("XI"));
    auto bad = relation_violations(enc);
    EXPECT_FALSE(bad.empty());
}

TEST(encoding, parse_errors) {
    EXPECT_THROW(parse_encoding("graph: [1, 2"), std::invalid_argument);
    EXPECT_THROW(parse_encoding("name: x\n"), std::invalid_argument);
    EXPECT_THROW(load_encoding("/nonexistent.yaml"), std::invalid_argument);
}

TEST(encoding, dump_roundtrip) {
    auto enc = load_encoding(fixture("gse_3x3"));
    auto back = parse_encoding(dump_encoding(enc));
    EXPECT_EQ(back.n_qubits, enc.n_qubits);
    EXPECT_EQ(back.stabilizers, enc.stabilizers);
    EXPECT_EQ(back.vertex_ops, enc.vertex_ops);
    for (const auto &[e, p] : enc.edge_ops) EXPECT_EQ(back.A(e.first, e.second), p);
}

TEST(encoding, fixtures_encode_hermitian) {
    auto enc = load_encoding(fixture("compact_3x3"));
    FermionSum f;
    for (const auto &[a, b] : enc.graph.lattice_pairs()) f.add_hopping(-1.0, a, b);
    for (uint32_t k = 0; k < 9; k++) f.add_number(0.3, k);
    auto h = encode_hamiltonian(enc, f);
    EXPECT_TRUE(h.is_hermitian());
    for (const auto &t : h.terms()) EXPECT_NEAR(t.coef.imag(), 0, 1e-12);
}

TEST(encoding, gaqm_commuting_strings_reduce_to_aqm) {
    auto base = build_jordan_wigner({0, 1, 2, 3});
    std::vector<SignedPauli> t = {SignedPauli::from_text("ZZII"), SignedPauli::from_text("IIZZ"),
                                  SignedPauli::from_text("ZIIZ")};
    auto g = build_gaqm(base, t, gaqm_default_matrix(3));
    ASSERT_EQ(g.stabilizers.size(), 3u);
    // No anticommuting pairs: Q^k = t^k (x) fX^k.
    for (size_t k = 0; k < 3; k++) {
        for (size_t q = 0; q < 4; q++) EXPECT_EQ(g.stabilizers[k].letter(q), t[k].letter(q));
    }
    EXPECT_EQ(g.stabilizers[0].letter(4), 'X');
    EXPECT_EQ(g.stabilizers[1].letter(5), 'X');
}

TEST(encoding, gaqm_errors) {
    auto base = build_jordan_wigner({0, 1, 2});
    std::vector<SignedPauli> t = {SignedPauli::from_text("YXI"), SignedPauli::from_text("IYX")};
    Gf2Matrix singular = {{1, 1}, {1, 1}};
    EXPECT_THROW(build_gaqm(base, t, singular), std::invalid_argument);
    std::vector<SignedPauli> wrong = {SignedPauli::from_text("YX")};
    EXPECT_THROW(build_gaqm(base, wrong, gaqm_default_matrix(1)), std::invalid_argument);
}

TEST(encoding, gaqm_4x3_distance_two) {
    auto base = build_jordan_wigner({0, 1, 2, 3, 7, 6, 5, 4, 8, 9, 10, 11}, grid(4, 3));
    auto t = gaqm_walk_strings(base, {1, 5, 9, 8, 4, 0, 1, 2, 3, 7, 11, 10, 6, 2});
    auto g = build_gaqm(base, t, gaqm_default_matrix(t.size()));
    EXPECT_TRUE(relation_violations(g).empty());
    auto cp = code_parameters(g, 3);
    EXPECT_EQ(cp.n, 25u);
    EXPECT_EQ(cp.k, 12u);
    EXPECT_EQ(cp.d, 2u);
    EXPECT_NEAR(cp.avg_stabilizer_weight, 5.46, 0.005);
    // Every parity-preserving single-qubit error is flagged by some generator.
    auto parity = total_parity(g);
    for (size_t q = 0; q < g.n_qubits; q++) {
        for (char l : {'X', 'Y', 'Z'}) {
            auto e = SignedPauli::single(g.n_qubits, q, l);
            if (!e.commutes(parity)) continue;
            bool flagged = false;
            for (const auto &s : g.stabilizers) flagged |= !e.commutes(s);
            EXPECT_TRUE(flagged) << q << l;
        }
    }
}

TEST(encoding, operator_table_minimizes) {
    auto enc = load_encoding(fixture("compact_3x3"));
    OperatorTable table(enc);
    for (const auto &[a, b] : enc.graph.lattice_pairs()) {
        auto m = table.exchange(a, b);
        auto raw = exchange_operator(enc, a, b);
        EXPECT_LE(m.weight(), raw.weight());
        // Equal on the codespace: differs by a group element.
        EXPECT_TRUE(m.commutes(enc.B(a)) == raw.commutes(enc.B(a)));
    }
}
