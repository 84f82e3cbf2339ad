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
/**
 * @file
 * Dense linear algebra on the two-qubit Hilbert space.
 *
 * Basis ordering is |00>, |01>, |10>, |11> (indices 0..3), i.e. the
 * lexicographic order of the tensor product A (x) B. Qubit A is the most
 * significant bit. sigma_z has |0> as its +1 eigenstate.
 */
#pragma once

#include <array>
#include <complex>
#include <cstddef>

namespace qnn {

using Complex = std::complex<double>;

inline constexpr std::size_t kDim = 4;

/// Amplitudes over the charge basis.
using Amplitudes = std::array<Complex, kDim>;

/// Dense 4x4 complex matrix, row major.
class Operator4 {
  public:
    constexpr Operator4() = default;

    static Operator4 identity();
    static Operator4 zero() { return {}; }

    [[nodiscard]] Complex &operator()(std::size_t r, std::size_t c) {
        return m_[r * kDim + c];
    }
    [[nodiscard]] const Complex &operator()(std::size_t r,
                                            std::size_t c) const {
        return m_[r * kDim + c];
    }

    [[nodiscard]] Operator4 adjoint() const;
    [[nodiscard]] Complex trace() const;

    /// Largest entrywise modulus of (this - other).
    [[nodiscard]] double max_abs_diff(const Operator4 &other) const;
    [[nodiscard]] bool is_hermitian(double tol) const;

    Operator4 &operator+=(const Operator4 &rhs);
    Operator4 &operator-=(const Operator4 &rhs);
    Operator4 &operator*=(Complex s);

    friend Operator4 operator+(Operator4 a, const Operator4 &b) {
        return a += b;
    }
    friend Operator4 operator-(Operator4 a, const Operator4 &b) {
        return a -= b;
    }
    friend Operator4 operator*(Operator4 a, Complex s) { return a *= s; }
    friend Operator4 operator*(Complex s, Operator4 a) { return a *= s; }
    friend Operator4 operator*(const Operator4 &a, const Operator4 &b);
    friend Amplitudes operator*(const Operator4 &a, const Amplitudes &v);

  private:
    std::array<Complex, kDim * kDim> m_{};
};

/// Tensor product of two single-qubit operators, a acting on qubit A.
Operator4 kron(const std::array<Complex, 4> &a, const std::array<Complex, 4> &b);

/**
 * Normalized pure state. The only ways to build one check the norm, so
 * holding a QuantumState means |sum |amp|^2 - 1| < 1e-12.
 */
class QuantumState {
  public:
    /// |00>.
    QuantumState();

    /// Normalizes raw amplitudes; throws InvalidStateError on zero or
    /// non-finite input.
    static QuantumState from_amplitudes(const Amplitudes &raw);

    static QuantumState basis(std::size_t index);

    [[nodiscard]] const Amplitudes &amplitudes() const noexcept {
        return amps_;
    }
    [[nodiscard]] const Complex &operator[](std::size_t i) const {
        return amps_[i];
    }
    [[nodiscard]] double norm_squared() const noexcept;

  private:
    explicit QuantumState(const Amplitudes &amps) : amps_(amps) {}
    Amplitudes amps_;
};

/// Hermitian 4x4 matrix with unit trace.
class DensityMatrix {
  public:
    /// Validates Hermiticity to 1e-12 and trace to 1e-12.
    static DensityMatrix from_matrix(const Operator4 &m);
    /// Skips validation. Used for intermediate integration values.
    static DensityMatrix unchecked(const Operator4 &m) {
        return DensityMatrix{m};
    }

    [[nodiscard]] const Operator4 &matrix() const noexcept { return m_; }
    [[nodiscard]] const Complex &operator()(std::size_t r,
                                            std::size_t c) const {
        return m_(r, c);
    }
    [[nodiscard]] double trace_real() const { return m_.trace().real(); }

  private:
    explicit DensityMatrix(const Operator4 &m) : m_(m) {}
    Operator4 m_;
};

enum class Pauli { xA, xB, zA, zB, zAzB };

/**
 * a00|00> + a01 e^{i xi}|01> + a10 e^{i theta}|10> + a11 e^{i phi}|11>,
 * normalized. `phases` = {xi, theta, phi}; |00> stays real.
 */
QuantumState make_state(const std::array<double, 4> &magnitudes,
                        const std::array<double, 3> &phases);

const Operator4 &pauli_operator(Pauli which);

double projection_probability(const QuantumState &state,
                              std::size_t basis_index);
/// Same measurement on raw (e.g. propagated) amplitudes.
double projection_probability(const Amplitudes &amps, std::size_t basis_index);

QuantumState global_phase(const QuantumState &state, double alpha);

DensityMatrix pure_density(const QuantumState &state);

// Small vector helpers shared by the propagators.
Amplitudes operator+(const Amplitudes &a, const Amplitudes &b);
Amplitudes operator*(Complex s, const Amplitudes &a);
Complex inner(const Amplitudes &a, const Amplitudes &b); ///< <a|b>
double norm_squared(const Amplitudes &a);

} // namespace qnn
