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

#ifndef GEOECON_CIRCUIT_HPP
#define GEOECON_CIRCUIT_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "geoecon/complex_matrix.hpp"

namespace geoecon {

/// One primitive microprocess on a register of qudits. The three kinds:
///   Determination — an arbitrary single-qudit unitary on the target;
///   Phase         — multiplies the target's highest basis state by e^{i phi};
///   Controlled    — applies the payload to the target when the control
///                   qudit is in its highest basis state, identity otherwise.
struct Gate {
    enum class Kind { Determination, Phase, Controlled };

    Kind kind;
    std::size_t target = 0;
    std::optional<std::size_t> control;  // Controlled only
    ComplexMatrix payload;               // d x d unitary for Determination/Controlled
    double phase = 0.0;                  // Phase only

    static Gate determination(std::size_t target, ComplexMatrix payload);
    static Gate phase_shift(std::size_t target, double angle);
    static Gate controlled(std::size_t control, std::size_t target, ComplexMatrix payload);
};

/// An ordered gate list on n agents with a d-valued wealth spectrum.
/// Gates apply left to right in list order (time order).
class Circuit {
  public:
    Circuit(std::size_t agents, std::size_t levels);

    std::size_t agents() const { return agents_; }
    std::size_t levels() const { return levels_; }
    const std::vector<Gate>& gates() const { return gates_; }

    /// Validates indices against n and the payload's dimension/unitarity
    /// (tolerance 1e-10) before accepting the gate.
    void append(Gate gate);

    /// Product of the gate embeddings in application order: the circuit
    /// [g1, g2, ...] compiles to ... E(g2) E(g1). Requires d^n <= 4096.
    ComplexMatrix compile() const;

    /// Text form, one gate per line after a "n=<n> d=<d>" header:
    ///   DET <target> <d*d complex entries>
    ///   PHASE <target> <angle>
    ///   CTRL <control> <target> <d*d complex entries>
    /// Complex entries are "re,im" pairs in row-major order.
    static Circuit parse(std::istream& in);
    std::string str() const;

  private:
    std::size_t agents_;
    std::size_t levels_;
    std::vector<Gate> gates_;
};

}  // namespace geoecon

#endif
