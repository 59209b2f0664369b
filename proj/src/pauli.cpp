// Copyright 2026 The geoecon developers
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

#include "geoecon/pauli.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace geoecon {

const ComplexMatrix& sigma(int index) {
    static const std::array<ComplexMatrix, 4> matrices = [] {
        std::array<ComplexMatrix, 4> s{ComplexMatrix(2), ComplexMatrix(2), ComplexMatrix(2),
                                       ComplexMatrix(2)};
        s[0](0, 0) = 1.0;
        s[0](1, 1) = 1.0;
        s[1](0, 1) = 1.0;
        s[1](1, 0) = 1.0;
        s[2](0, 1) = Complex{0.0, -1.0};
        s[2](1, 0) = Complex{0.0, 1.0};
        s[3](0, 0) = 1.0;
        s[3](1, 1) = -1.0;
        return s;
    }();
    if (index < 0 || index > 3) {
        throw std::invalid_argument("sigma: index must be 0..3");
    }
    return matrices[static_cast<std::size_t>(index)];
}

PauliString::PauliString(std::vector<std::uint8_t> letters) : letters_(std::move(letters)) {
    if (letters_.empty()) {
        throw std::invalid_argument("PauliString: length must be >= 1");
    }
    if (letters_.size() > kMaxQubits) {
        throw std::invalid_argument("PauliString: length exceeds supported qubit count");
    }
    for (auto l : letters_) {
        if (l > 3) {
            throw std::invalid_argument("PauliString: letters must be 0..3");
        }
    }
}

PauliString PauliString::parse(std::string_view word) {
    std::vector<std::uint8_t> letters;
    letters.reserve(word.size());
    for (char c : word) {
        switch (std::toupper(static_cast<unsigned char>(c))) {
            case 'I': letters.push_back(0); break;
            case 'X': letters.push_back(1); break;
            case 'Y': letters.push_back(2); break;
            case 'Z': letters.push_back(3); break;
            default:
                throw std::invalid_argument("PauliString: invalid letter '" + std::string(1, c) +
                                            "'");
        }
    }
    return PauliString(std::move(letters));
}

std::string PauliString::str() const {
    static constexpr char names[] = {'I', 'X', 'Y', 'Z'};
    std::string out;
    out.reserve(letters_.size());
    for (auto l : letters_) {
        out.push_back(names[l]);
    }
    return out;
}

int PauliString::weight() const {
    int w = 0;
    for (auto l : letters_) {
        w += (l != 0);
    }
    return w;
}

ComplexMatrix PauliString::to_matrix() const {
    ComplexMatrix out = sigma(letters_[0]);
    for (std::size_t i = 1; i < letters_.size(); ++i) {
        out = kron(out, sigma(letters_[i]));
    }
    return out;
}

AlgebraElement::AlgebraElement(std::size_t qubits) : qubits_(qubits) {
    if (qubits < 1 || qubits > kMaxQubits) {
        throw std::invalid_argument("AlgebraElement: qubit count out of range");
    }
}

void AlgebraElement::set(const PauliString& s, double coefficient) {
    if (s.size() != qubits_) {
        throw std::invalid_argument("AlgebraElement: string length != qubit count");
    }
    if (s.is_identity()) {
        throw std::invalid_argument("AlgebraElement: the identity string is not a basis element");
    }
    if (coefficient == 0.0) {
        coords_.erase(s);
    } else {
        coords_[s] = coefficient;
    }
}

void AlgebraElement::add(const PauliString& s, double coefficient) {
    set(s, coeff(s) + coefficient);
}

double AlgebraElement::coeff(const PauliString& s) const {
    auto it = coords_.find(s);
    return it == coords_.end() ? 0.0 : it->second;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
    if (other.qubits_ != qubits_) {
        throw std::invalid_argument("AlgebraElement: qubit count mismatch");
    }
    for (const auto& [s, c] : other.coords_) {
        add(s, c);
    }
    return *this;
}

AlgebraElement& AlgebraElement::operator*=(double scale) {
    if (scale == 0.0) {
        coords_.clear();
        return *this;
    }
    for (auto& [s, c] : coords_) {
        c *= scale;
    }
    return *this;
}

ComplexMatrix AlgebraElement::to_matrix() const {
    ComplexMatrix out(std::size_t{1} << qubits_);
    for (const auto& [s, c] : coords_) {
        out += Complex{c, 0.0} * s.to_matrix();
    }
    return out;
}

double AlgebraElement::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& [s, c] : coords_) {
        m = std::max(m, std::abs(c));
    }
    return m;
}

namespace {

// A Pauli-string matrix has exactly one nonzero entry per row; for row j the
// nonzero column and value are products over the qubit bits. This gives the
// trace against m in O(2^n) per string without materializing the string.
Complex trace_against(const ComplexMatrix& m, const std::vector<std::uint8_t>& letters) {
    const std::size_t n = letters.size();
    const std::size_t dim = std::size_t{1} << n;
    Complex total = 0.0;
    for (std::size_t row = 0; row < dim; ++row) {
        std::size_t col = 0;
        Complex value = 1.0;
        for (std::size_t q = 0; q < n; ++q) {
            const int bit = static_cast<int>((row >> (n - 1 - q)) & 1u);
            int out_bit = bit;
            switch (letters[q]) {
                case 0: break;
                case 1: out_bit = 1 - bit; break;
                case 2:
                    out_bit = 1 - bit;
                    value *= (bit == 0) ? Complex{0.0, -1.0} : Complex{0.0, 1.0};
                    break;
                case 3:
                    if (bit == 1) {
                        value = -value;
                    }
                    break;
            }
            col = (col << 1) | static_cast<std::size_t>(out_bit);
        }
        // Tr(m sigma) = sum_row sigma(row, col) * m(col, row)
        total += value * m(col, row);
    }
    return total;
}

}  // namespace

Decomposition decompose(const ComplexMatrix& m, std::size_t qubits, double tol) {
    if (qubits < 1 || qubits > kMaxQubits || m.dim() != (std::size_t{1} << qubits)) {
        throw std::invalid_argument("decompose: dimension is not 2^qubits in supported range");
    }
    if (!m.is_hermitian(tol)) {
        throw std::invalid_argument("decompose: matrix is not Hermitian within tolerance");
    }
    const double norm = 1.0 / static_cast<double>(m.dim());
    AlgebraElement element(qubits);
    double identity_coeff = 0.0;

    std::vector<std::uint8_t> letters(qubits, 0);
    const std::size_t count = std::size_t{1} << (2 * qubits);
    for (std::size_t code = 0; code < count; ++code) {
        std::size_t rest = code;
        for (std::size_t q = 0; q < qubits; ++q) {
            letters[qubits - 1 - q] = static_cast<std::uint8_t>(rest & 3u);
            rest >>= 2;
        }
        const double c = (trace_against(m, letters) * norm).real();
        if (code == 0) {
            identity_coeff = c;
        } else if (c != 0.0) {
            element.set(PauliString(letters), c);
        }
    }
    return Decomposition{std::move(element), identity_coeff};
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a * b - b * a;
}

}  // namespace geoecon
