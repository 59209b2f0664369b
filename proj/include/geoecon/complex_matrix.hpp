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

#ifndef GEOECON_COMPLEX_MATRIX_HPP
#define GEOECON_COMPLEX_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace geoecon {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major. Sized for operators on at most
/// six qubits (64x64); everything is a value type.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim);

    static ComplexMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }

    Complex& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
    const Complex& operator()(std::size_t row, std::size_t col) const {
        return entries_[row * dim_ + col];
    }

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex scale);

    ComplexMatrix adjoint() const;
    Complex trace() const;

    /// Largest |entry| of this - other; dims must match.
    double max_abs_diff(const ComplexMatrix& other) const;
    double max_abs() const;

    bool is_hermitian(double tol) const;
    bool is_unitary(double tol) const;

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix m) { return m *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

  private:
    std::size_t dim_ = 0;
    std::vector<Complex> entries_;
};

/// Kronecker product; left factor indexes the most significant block.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace geoecon

#endif
