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

#ifndef LOVE_PAULI_SUM_H
#define LOVE_PAULI_SUM_H

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include "love/pauli.h"

namespace love {

using cplx = std::complex<double>;

struct PauliTerm {
    cplx coef;
    SignedPauli pauli;  // stored with phase_exp() == 0
};

/// Linear combination of Pauli strings. Terms are kept unique by letters and
/// the string phases are folded into the coefficients.
class PauliSum {
   public:
    PauliSum() = default;
    explicit PauliSum(size_t num_qubits) : n_(num_qubits) {}

    static PauliSum identity(size_t num_qubits, cplx c = 1.0);
    static PauliSum of(const SignedPauli &p, cplx c = 1.0);

    size_t num_qubits() const { return n_; }
    const std::vector<PauliTerm> &terms() const { return terms_; }
    size_t size() const { return terms_.size(); }

    /// Adds c * p, merging with an existing term with the same letters.
    void add(const SignedPauli &p, cplx c);
    PauliSum &operator+=(const PauliSum &o);
    PauliSum &operator*=(cplx c);
    /// Drops terms with |coef| below tol.
    void simplify(double tol = 1e-12);
    /// Sorts terms by letters for deterministic output.
    void sort();

    double l1_norm() const;
    bool is_hermitian(double tol = 1e-12) const;
    PauliSum adjoint() const;

    /// Lines of "coefficient<TAB>pauli-string". Coefficients print as a real
    /// number or "(re,im)".
    void write_text(std::ostream &out) const;
    static PauliSum read_text(std::istream &in);

   private:
    size_t n_ = 0;
    std::vector<PauliTerm> terms_;
};

PauliSum operator*(const PauliSum &a, const PauliSum &b);
PauliSum operator+(const PauliSum &a, const PauliSum &b);

std::string format_coefficient(cplx c);
cplx parse_coefficient(const std::string &s);

/// One ladder operator a_mode or a_mode^dagger.
struct Ladder {
    uint32_t mode;
    bool dagger;
};

struct FermionTerm {
    cplx coef;
    std::vector<Ladder> ops;  // product, leftmost first
};

/// Fermionic operator as a sum of ladder-operator products.
struct FermionSum {
    size_t n_modes = 0;
    std::vector<FermionTerm> terms;

    void add(cplx c, std::vector<Ladder> ops) { terms.push_back({c, std::move(ops)}); }
    /// c (a_j^dagger a_k + a_k^dagger a_j).
    void add_hopping(cplx c, uint32_t j, uint32_t k);
    /// c n_j.
    void add_number(cplx c, uint32_t j);
    /// c n_j n_k.
    void add_density_density(cplx c, uint32_t j, uint32_t k);
};

}  // namespace love

#endif
