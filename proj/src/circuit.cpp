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

#include "geoecon/circuit.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace geoecon {

namespace {

constexpr std::size_t kMaxCompiledDim = 4096;
constexpr double kUnitaryTol = 1e-10;

std::size_t power(std::size_t base, std::size_t exp) {
    std::size_t out = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (out > kMaxCompiledDim) {
            break;  // caller range-checks; avoid overflow
        }
        out *= base;
    }
    return out;
}

}  // namespace

Gate Gate::determination(std::size_t target, ComplexMatrix payload) {
    Gate g;
    g.kind = Kind::Determination;
    g.target = target;
    g.payload = std::move(payload);
    return g;
}

Gate Gate::phase_shift(std::size_t target, double angle) {
    Gate g;
    g.kind = Kind::Phase;
    g.target = target;
    g.phase = angle;
    return g;
}

Gate Gate::controlled(std::size_t control, std::size_t target, ComplexMatrix payload) {
    Gate g;
    g.kind = Kind::Controlled;
    g.target = target;
    g.control = control;
    g.payload = std::move(payload);
    return g;
}

Circuit::Circuit(std::size_t agents, std::size_t levels) : agents_(agents), levels_(levels) {
    if (agents < 1) {
        throw std::invalid_argument("Circuit: agent count must be >= 1");
    }
    if (levels < 2) {
        throw std::invalid_argument("Circuit: wealth-spectrum dimension must be >= 2");
    }
}

void Circuit::append(Gate gate) {
    if (gate.target >= agents_) {
        throw std::invalid_argument("Circuit: gate target out of range");
    }
    if (gate.kind == Gate::Kind::Controlled) {
        if (!gate.control || *gate.control >= agents_) {
            throw std::invalid_argument("Circuit: gate control out of range");
        }
        if (*gate.control == gate.target) {
            throw std::invalid_argument("Circuit: control must differ from target");
        }
    }
    if (gate.kind != Gate::Kind::Phase) {
        if (gate.payload.dim() != levels_) {
            throw std::invalid_argument("Circuit: payload dimension != d");
        }
        if (!gate.payload.is_unitary(kUnitaryTol)) {
            throw std::invalid_argument("Circuit: payload is not unitary");
        }
    }
    gates_.push_back(std::move(gate));
}

ComplexMatrix Circuit::compile() const {
    const std::size_t dim = power(levels_, agents_);
    if (dim > kMaxCompiledDim) {
        throw std::invalid_argument("Circuit: d^n exceeds the supported size");
    }
    // Agent 0 is the most significant digit of a basis index.
    const auto digit = [this](std::size_t index, std::size_t agent) {
        std::size_t div = 1;
        for (std::size_t q = agents_ - 1; q > agent; --q) {
            div *= levels_;
        }
        return (index / div) % levels_;
    };
    const auto stride_of = [this](std::size_t agent) {
        std::size_t s = 1;
        for (std::size_t q = agents_ - 1; q > agent; --q) {
            s *= levels_;
        }
        return s;
    };

    ComplexMatrix u = ComplexMatrix::identity(dim);
    std::vector<Complex> mixed(levels_);
    for (const Gate& gate : gates_) {
        const std::size_t stride = stride_of(gate.target);
        switch (gate.kind) {
            case Gate::Kind::Phase: {
                const Complex factor = std::exp(Complex{0.0, gate.phase});
                for (std::size_t row = 0; row < dim; ++row) {
                    if (digit(row, gate.target) == levels_ - 1) {
                        for (std::size_t col = 0; col < dim; ++col) {
                            u(row, col) *= factor;
                        }
                    }
                }
                break;
            }
            case Gate::Kind::Determination:
            case Gate::Kind::Controlled: {
                // Left-multiply by the embedding: rows in each target-digit
                // group mix through the payload; all other rows are fixed.
                for (std::size_t base = 0; base < dim; ++base) {
                    if (digit(base, gate.target) != 0) {
                        continue;
                    }
                    if (gate.kind == Gate::Kind::Controlled &&
                        digit(base, *gate.control) != levels_ - 1) {
                        continue;
                    }
                    for (std::size_t col = 0; col < dim; ++col) {
                        for (std::size_t a = 0; a < levels_; ++a) {
                            Complex acc = 0.0;
                            for (std::size_t b = 0; b < levels_; ++b) {
                                acc += gate.payload(a, b) * u(base + b * stride, col);
                            }
                            mixed[a] = acc;
                        }
                        for (std::size_t a = 0; a < levels_; ++a) {
                            u(base + a * stride, col) = mixed[a];
                        }
                    }
                }
                break;
            }
        }
    }
    return u;
}

namespace {

ComplexMatrix read_payload(std::istringstream& line, std::size_t d) {
    ComplexMatrix payload(d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            std::string pair;
            if (!(line >> pair)) {
                throw std::invalid_argument("Circuit: missing payload entries");
            }
            const auto comma = pair.find(',');
            if (comma == std::string::npos) {
                throw std::invalid_argument("Circuit: payload entry must be re,im");
            }
            payload(i, j) = Complex{std::stod(pair.substr(0, comma)),
                                    std::stod(pair.substr(comma + 1))};
        }
    }
    return payload;
}

}  // namespace

Circuit Circuit::parse(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) {
        throw std::invalid_argument("Circuit: empty input");
    }
    std::size_t n = 0;
    std::size_t d = 0;
    if (std::sscanf(header.c_str(), "n=%zu d=%zu", &n, &d) != 2) {
        throw std::invalid_argument("Circuit: header must be 'n=<n> d=<d>'");
    }
    Circuit circuit(n, d);
    std::string text;
    while (std::getline(in, text)) {
        if (text.empty() || text[0] == '#') {
            continue;
        }
        std::istringstream line(text);
        std::string op;
        line >> op;
        if (op == "DET") {
            std::size_t target;
            if (!(line >> target)) {
                throw std::invalid_argument("Circuit: DET needs a target");
            }
            circuit.append(Gate::determination(target, read_payload(line, d)));
        } else if (op == "PHASE") {
            std::size_t target;
            double angle;
            if (!(line >> target >> angle)) {
                throw std::invalid_argument("Circuit: PHASE needs target and angle");
            }
            circuit.append(Gate::phase_shift(target, angle));
        } else if (op == "CTRL") {
            std::size_t control;
            std::size_t target;
            if (!(line >> control >> target)) {
                throw std::invalid_argument("Circuit: CTRL needs control and target");
            }
            circuit.append(Gate::controlled(control, target, read_payload(line, d)));
        } else {
            throw std::invalid_argument("Circuit: unknown gate '" + op + "'");
        }
    }
    return circuit;
}

std::string Circuit::str() const {
    std::ostringstream out;
    out << "n=" << agents_ << " d=" << levels_ << "\n";
    const auto payload_text = [&](const ComplexMatrix& p) {
        std::ostringstream s;
        for (std::size_t i = 0; i < p.dim(); ++i) {
            for (std::size_t j = 0; j < p.dim(); ++j) {
                char buf[64];
                std::snprintf(buf, sizeof buf, " %.17g,%.17g", p(i, j).real(), p(i, j).imag());
                s << buf;
            }
        }
        return s.str();
    };
    for (const Gate& g : gates_) {
        switch (g.kind) {
            case Gate::Kind::Determination:
                out << "DET " << g.target << payload_text(g.payload) << "\n";
                break;
            case Gate::Kind::Phase: {
                char buf[64];
                std::snprintf(buf, sizeof buf, "%.17g", g.phase);
                out << "PHASE " << g.target << " " << buf << "\n";
                break;
            }
            case Gate::Kind::Controlled:
                out << "CTRL " << *g.control << " " << g.target << payload_text(g.payload) << "\n";
                break;
        }
    }
    return out.str();
}

}  // namespace geoecon
