// Copyright 2026 The qnnphase Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "qnn/qcore.hpp"

#include "qnn/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qnn {

Operator4 Operator4::identity() {
    Operator4 m;
    for (std::size_t i = 0; i < kDim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

Operator4 Operator4::adjoint() const {
    Operator4 out;
    for (std::size_t r = 0; r < kDim; ++r) {
        for (std::size_t c = 0; c < kDim; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

Complex Operator4::trace() const {
    Complex t{};
    for (std::size_t i = 0; i < kDim; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

double Operator4::max_abs_diff(const Operator4 &other) const {
    double worst = 0.0;
    for (std::size_t i = 0; i < m_.size(); ++i) {
        worst = std::max(worst, std::abs(m_[i] - other.m_[i]));
    }
    return worst;
}

bool Operator4::is_hermitian(double tol) const {
    return max_abs_diff(adjoint()) < tol;
}

Operator4 &Operator4::operator+=(const Operator4 &rhs) {
    for (std::size_t i = 0; i < m_.size(); ++i) {
        m_[i] += rhs.m_[i];
    }
    return *this;
}

Operator4 &Operator4::operator-=(const Operator4 &rhs) {
    for (std::size_t i = 0; i < m_.size(); ++i) {
        m_[i] -= rhs.m_[i];
    }
    return *this;
}

Operator4 &Operator4::operator*=(Complex s) {
    for (auto &v : m_) {
        v *= s;
    }
    return *this;
}

Operator4 operator*(const Operator4 &a, const Operator4 &b) {
    Operator4 out;
    for (std::size_t r = 0; r < kDim; ++r) {
        for (std::size_t k = 0; k < kDim; ++k) {
            const Complex ark = a(r, k);
            for (std::size_t c = 0; c < kDim; ++c) {
                out(r, c) += ark * b(k, c);
            }
        }
    }
    return out;
}

Amplitudes operator*(const Operator4 &a, const Amplitudes &v) {
    Amplitudes out{};
    for (std::size_t r = 0; r < kDim; ++r) {
        Complex acc{};
        for (std::size_t c = 0; c < kDim; ++c) {
            acc += a(r, c) * v[c];
        }
        out[r] = acc;
    }
    return out;
}

Operator4 kron(const std::array<Complex, 4> &a,
               const std::array<Complex, 4> &b) {
    Operator4 out;
    for (std::size_t ra = 0; ra < 2; ++ra) {
        for (std::size_t ca = 0; ca < 2; ++ca) {
            for (std::size_t rb = 0; rb < 2; ++rb) {
                for (std::size_t cb = 0; cb < 2; ++cb) {
                    out(2 * ra + rb, 2 * ca + cb) =
                        a[2 * ra + ca] * b[2 * rb + cb];
                }
            }
        }
    }
    return out;
}

Amplitudes operator+(const Amplitudes &a, const Amplitudes &b) {
    Amplitudes out;
    for (std::size_t i = 0; i < kDim; ++i) {
        out[i] = a[i] + b[i];
    }
    return out;
}

Amplitudes operator*(Complex s, const Amplitudes &a) {
    Amplitudes out;
    for (std::size_t i = 0; i < kDim; ++i) {
        out[i] = s * a[i];
    }
    return out;
}

Complex inner(const Amplitudes &a, const Amplitudes &b) {
    Complex acc{};
    for (std::size_t i = 0; i < kDim; ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

double norm_squared(const Amplitudes &a) {
    double acc = 0.0;
    for (const auto &z : a) {
        acc += std::norm(z);
    }
    return acc;
}

QuantumState::QuantumState() : amps_{Complex{1.0, 0.0}, {}, {}, {}} {}

QuantumState QuantumState::from_amplitudes(const Amplitudes &raw) {
    for (const auto &z : raw) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw InvalidStateError("non-finite amplitude");
        }
    }
    const double n2 = qnn::norm_squared(raw);
    if (!(n2 > 0.0) || !std::isfinite(n2)) {
        throw InvalidStateError("cannot normalize a zero state");
    }
    const double inv = 1.0 / std::sqrt(n2);
    Amplitudes amps;
    for (std::size_t i = 0; i < kDim; ++i) {
        amps[i] = raw[i] * inv;
    }
    return QuantumState{amps};
}

QuantumState QuantumState::basis(std::size_t index) {
    if (index >= kDim) {
        throw DomainError("basis index out of range: " +
                          std::to_string(index));
    }
    Amplitudes amps{};
    amps[index] = 1.0;
    return QuantumState{amps};
}

double QuantumState::norm_squared() const noexcept {
    return qnn::norm_squared(amps_);
}

DensityMatrix DensityMatrix::from_matrix(const Operator4 &m) {
    if (!m.is_hermitian(1e-12)) {
        throw DomainError("density matrix is not Hermitian");
    }
    if (std::abs(m.trace() - Complex{1.0, 0.0}) > 1e-12) {
        throw DomainError("density matrix trace differs from 1");
    }
    return DensityMatrix{m};
}

QuantumState make_state(const std::array<double, 4> &magnitudes,
                        const std::array<double, 3> &phases) {
    for (double m : magnitudes) {
        if (!std::isfinite(m) || m < 0.0) {
            throw InvalidStateError("magnitudes must be finite and >= 0");
        }
    }
    for (double p : phases) {
        if (!std::isfinite(p)) {
            throw InvalidStateError("phases must be finite");
        }
    }
    Amplitudes raw{
        Complex{magnitudes[0], 0.0},
        std::polar(magnitudes[1], phases[0]),
        std::polar(magnitudes[2], phases[1]),
        std::polar(magnitudes[3], phases[2]),
    };
    return QuantumState::from_amplitudes(raw);
}

namespace {

constexpr std::array<Complex, 4> kI{1.0, 0.0, 0.0, 1.0};
constexpr std::array<Complex, 4> kX{0.0, 1.0, 1.0, 0.0};
constexpr std::array<Complex, 4> kZ{1.0, 0.0, 0.0, -1.0};

} // namespace

const Operator4 &pauli_operator(Pauli which) {
    static const std::array<Operator4, 5> table{
        kron(kX, kI), kron(kI, kX), kron(kZ, kI), kron(kI, kZ), kron(kZ, kZ),
    };
    return table[static_cast<std::size_t>(which)];
}

double projection_probability(const Amplitudes &amps,
                              std::size_t basis_index) {
    if (basis_index >= kDim) {
        throw DomainError("basis index out of range: " +
                          std::to_string(basis_index));
    }
    return std::norm(amps[basis_index]);
}

double projection_probability(const QuantumState &state,
                              std::size_t basis_index) {
    return projection_probability(state.amplitudes(), basis_index);
}

QuantumState global_phase(const QuantumState &state, double alpha) {
    const Complex factor = std::polar(1.0, alpha);
    Amplitudes out;
    for (std::size_t i = 0; i < kDim; ++i) {
        out[i] = factor * state[i];
    }
    // |factor| == 1 to rounding; renormalizing keeps the invariant exact.
    return QuantumState::from_amplitudes(out);
}

DensityMatrix pure_density(const QuantumState &state) {
    Operator4 rho;
    for (std::size_t r = 0; r < kDim; ++r) {
        for (std::size_t c = 0; c < kDim; ++c) {
            rho(r, c) = state[r] * std::conj(state[c]);
        }
    }
    return DensityMatrix::unchecked(rho);
}

} // namespace qnn
