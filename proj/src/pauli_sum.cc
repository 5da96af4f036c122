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

#include "love/pauli_sum.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace love {

namespace {

const cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

}  // namespace

PauliSum PauliSum::identity(size_t num_qubits, cplx c) {
    PauliSum s(num_qubits);
    s.add(SignedPauli(num_qubits), c);
    return s;
}

PauliSum PauliSum::of(const SignedPauli &p, cplx c) {
    PauliSum s(p.num_qubits());
    s.add(p, c);
    return s;
}

void PauliSum::add(const SignedPauli &p, cplx c) {
    if (terms_.empty() && n_ == 0) {
        n_ = p.num_qubits();
    }
    if (p.num_qubits() != n_) {
        throw std::invalid_argument("Pauli sum term has wrong qubit count");
    }
    cplx coef = c * kIPow[p.phase_exp()];
    for (auto &t : terms_) {
        if (t.pauli.same_letters(p)) {
            t.coef += coef;
            return;
        }
    }
    terms_.push_back({coef, p.unsigned_copy()});
}

PauliSum &PauliSum::operator+=(const PauliSum &o) {
    if (terms_.empty() && n_ == 0) {
        n_ = o.n_;
    }
    if (o.terms_.size() > 8) {
        std::unordered_map<SignedPauli, size_t, LettersHash, LettersEqual> index;
        for (size_t k = 0; k < terms_.size(); k++) index.emplace(terms_[k].pauli, k);
        for (const auto &t : o.terms_) {
            if (t.pauli.num_qubits() != n_) {
                throw std::invalid_argument("Pauli sum qubit count mismatch");
            }
            auto it = index.find(t.pauli);
            if (it == index.end()) {
                index.emplace(t.pauli, terms_.size());
                terms_.push_back(t);
            } else {
                terms_[it->second].coef += t.coef;
            }
        }
    } else {
        for (const auto &t : o.terms_) add(t.pauli, t.coef);
    }
    return *this;
}

PauliSum &PauliSum::operator*=(cplx c) {
    for (auto &t : terms_) t.coef *= c;
    return *this;
}

PauliSum operator*(const PauliSum &a, const PauliSum &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("Pauli sum qubit count mismatch");
    }
    PauliSum out(a.num_qubits());
    PauliSum partial(a.num_qubits());
    for (const auto &ta : a.terms()) {
        for (const auto &tb : b.terms()) {
            partial.add(ta.pauli * tb.pauli, ta.coef * tb.coef);
        }
    }
    out += partial;
    return out;
}

PauliSum operator+(const PauliSum &a, const PauliSum &b) {
    PauliSum r = a;
    r += b;
    return r;
}

void PauliSum::simplify(double tol) {
    std::erase_if(terms_, [&](const PauliTerm &t) { return std::abs(t.coef) < tol; });
}

void PauliSum::sort() {
    std::sort(terms_.begin(), terms_.end(), [](const PauliTerm &a, const PauliTerm &b) { return a.pauli < b.pauli; });
}

double PauliSum::l1_norm() const {
    double s = 0;
    for (const auto &t : terms_) s += std::abs(t.coef);
    return s;
}

PauliSum PauliSum::adjoint() const {
    PauliSum r = *this;
    for (auto &t : r.terms_) t.coef = std::conj(t.coef);
    return r;
}

bool PauliSum::is_hermitian(double tol) const {
    for (const auto &t : terms_) {
        if (std::abs(t.coef.imag()) > tol) return false;
    }
    return true;
}

std::string format_coefficient(cplx c) {
    char buf[96];
    if (c.imag() == 0.0) {
        std::snprintf(buf, sizeof(buf), "%.17g", c.real());
    } else {
        std::snprintf(buf, sizeof(buf), "(%.17g,%.17g)", c.real(), c.imag());
    }
    return buf;
}

cplx parse_coefficient(const std::string &s) {
    std::istringstream in(s);
    if (!s.empty() && s[0] == '(') {
        cplx c;
        in >> c;
        if (in.fail()) throw std::invalid_argument("bad complex coefficient: " + s);
        return c;
    }
    double re;
    in >> re;
    if (in.fail()) throw std::invalid_argument("bad coefficient: " + s);
    return {re, 0.0};
}

void PauliSum::write_text(std::ostream &out) const {
    for (const auto &t : terms_) {
        out << format_coefficient(t.coef) << '\t' << t.pauli.str() << '\n';
    }
}

PauliSum PauliSum::read_text(std::istream &in) {
    PauliSum s;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        auto tab = line.find('\t', first);
        if (tab == std::string::npos) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": expected coefficient<TAB>pauli-string");
        }
        std::string coef = line.substr(first, tab - first);
        std::string pauli = line.substr(tab + 1);
        while (!pauli.empty() && (pauli.back() == '\r' || pauli.back() == ' ')) pauli.pop_back();
        SignedPauli p = SignedPauli::from_text(pauli);
        if (s.terms_.empty() && s.n_ == 0) s.n_ = p.num_qubits();
        s.add(p, parse_coefficient(coef));
    }
    return s;
}

void FermionSum::add_hopping(cplx c, uint32_t j, uint32_t k) {
    add(c, {{j, true}, {k, false}});
    add(std::conj(c), {{k, true}, {j, false}});
}

void FermionSum::add_number(cplx c, uint32_t j) { add(c, {{j, true}, {j, false}}); }

void FermionSum::add_density_density(cplx c, uint32_t j, uint32_t k) {
    add(c, {{j, true}, {j, false}, {k, true}, {k, false}});
}

}  // namespace love
