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

#ifndef GEOECON_PAULI_HPP
#define GEOECON_PAULI_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "geoecon/complex_matrix.hpp"

namespace geoecon {

/// Largest supported register; operators are dense 2^n x 2^n.
inline constexpr std::size_t kMaxQubits = 6;

/// The four single-qubit Pauli matrices, sigma(0) being the identity.
const ComplexMatrix& sigma(int index);

/// Word over {I,X,Y,Z}, stored as letters 0..3. The all-identity word is
/// representable (it carries the identity coefficient of a decomposition)
/// but is not a basis element of su(2^n).
class PauliString {
  public:
    explicit PauliString(std::vector<std::uint8_t> letters);

    /// Parses an uppercase word like "XXI"; accepted case-insensitively.
    static PauliString parse(std::string_view word);

    std::string str() const;

    std::size_t size() const { return letters_.size(); }
    std::uint8_t letter(std::size_t i) const { return letters_[i]; }

    /// Number of non-identity letters.
    int weight() const;

    bool is_identity() const { return weight() == 0; }

    /// 2^n x 2^n tensor product of the letters, leftmost letter as the
    /// most significant factor. Hermitian; squares to the identity.
    ComplexMatrix to_matrix() const;

    auto operator<=>(const PauliString&) const = default;

  private:
    std::vector<std::uint8_t> letters_;
};

/// Sparse real coordinates on the su(2^n) Pauli basis, identity excluded.
/// Matrices are materialized on demand; the basis has 4^n - 1 elements and
/// elements of interest touch only a few of them.
class AlgebraElement {
  public:
    explicit AlgebraElement(std::size_t qubits);

    std::size_t qubits() const { return qubits_; }

    /// Sets one coordinate; zero coefficients erase the entry. Rejects the
    /// identity string and strings of the wrong length.
    void set(const PauliString& s, double coefficient);
    void add(const PauliString& s, double coefficient);

    double coeff(const PauliString& s) const;
    const std::map<PauliString, double>& coords() const { return coords_; }
    bool empty() const { return coords_.empty(); }

    AlgebraElement& operator+=(const AlgebraElement& other);
    AlgebraElement& operator*=(double scale);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator*(double s, AlgebraElement a) { return a *= s; }

    ComplexMatrix to_matrix() const;

    double max_abs_coeff() const;

  private:
    std::size_t qubits_;
    std::map<PauliString, double> coords_;
};

struct Decomposition {
    AlgebraElement element;
    double identity_coeff;
};

/// Coordinates of a Hermitian matrix on the Pauli basis:
/// c_s = Tr(m sigma_s) / 2^n. Throws if the dimension is not a power of two
/// in [2, 2^kMaxQubits] or the matrix is not Hermitian within tol.
Decomposition decompose(const ComplexMatrix& m, std::size_t qubits, double tol = 1e-10);

/// ab - ba; dims must match.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace geoecon

#endif
