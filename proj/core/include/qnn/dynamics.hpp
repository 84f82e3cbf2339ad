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
 * Time evolution of the driven two-qubit system
 *
 *     H(t) = K_A sx_A + K_B sx_B + eps_A sz_A + eps_B sz_B + zeta sz_A sz_B
 *
 * with hbar = 1 and controls in rad/ns. Controls are piecewise constant:
 * sample k is held over [k dt, (k+1) dt), including the RK4 stages.
 */
#pragma once

#include "qnn/qcore.hpp"

#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace qnn {

inline constexpr std::size_t kNumControls = 5;

enum class Control : std::size_t { K_A = 0, K_B, eps_A, eps_B, zeta };

inline constexpr std::array<Control, kNumControls> kAllControls{
    Control::K_A, Control::K_B, Control::eps_A, Control::eps_B,
    Control::zeta};

std::string_view control_name(Control c);
/// Inverse of control_name; throws DomainError on an unknown name.
Control parse_control(std::string_view name);

/// The Pauli term each control multiplies.
Pauli control_generator(Control c);

struct ControlVector {
    double K_A = 0.0;
    double K_B = 0.0;
    double eps_A = 0.0;
    double eps_B = 0.0;
    double zeta = 0.0;

    [[nodiscard]] double operator[](Control c) const;
    [[nodiscard]] double &operator[](Control c);
    bool operator==(const ControlVector &) const = default;
};

/// Default sampling of the control fields.
inline constexpr double kDefaultDt = 0.05;     // ns
inline constexpr double kDefaultFinalTime = 190.0; // ns
inline constexpr std::size_t kDefaultSteps = 3800;

/// One sample per integration step for each of the five controls.
class ControlWaveforms {
  public:
    ControlWaveforms(double dt, std::size_t n_steps,
                     const ControlVector &fill = {});

    [[nodiscard]] double dt() const noexcept { return dt_; }
    [[nodiscard]] std::size_t n_steps() const noexcept { return n_steps_; }
    [[nodiscard]] double final_time() const noexcept {
        return dt_ * static_cast<double>(n_steps_);
    }

    [[nodiscard]] ControlVector at(std::size_t step) const;
    void set(std::size_t step, const ControlVector &c);

    [[nodiscard]] std::span<const double> series(Control c) const {
        return series_[static_cast<std::size_t>(c)];
    }
    [[nodiscard]] std::span<double> series(Control c) {
        return series_[static_cast<std::size_t>(c)];
    }

    bool operator==(const ControlWaveforms &) const = default;

  private:
    double dt_;
    std::size_t n_steps_;
    std::array<std::vector<double>, kNumControls> series_;
};

/// Step-boundary states psi_0 .. psi_N of one forward run.
struct Trajectory {
    std::vector<Amplitudes> states;

    [[nodiscard]] const Amplitudes &initial_state() const { return states.front(); }
    [[nodiscard]] const Amplitudes &final_state() const { return states.back(); }
};

Operator4 build_hamiltonian(const ControlVector &c);

/// H v without forming H.
Amplitudes apply_hamiltonian(const ControlVector &c, const Amplitudes &v);
/// P v for the Pauli term multiplying control `which`.
Amplitudes apply_generator(Control which, const Amplitudes &v);

/// Classic four-stage RK4 for d psi/dt = -i H psi.
Amplitudes rk4_step(const Amplitudes &psi, const ControlVector &c, double dt);

/// Exact exp(-i H dt) psi via eigendecomposition of H.
Amplitudes expm_step(const Amplitudes &psi, const ControlVector &c, double dt);
Operator4 expm_propagator(const ControlVector &c, double dt);

/**
 * Runs rk4_step over every sample of `w` and keeps all step-boundary
 * states. Throws IntegrationDivergedError if the norm leaves
 * [1 - 1e-6, 1 + 1e-6] times the initial norm.
 */
Trajectory propagate(const QuantumState &state0, const ControlWaveforms &w);
Trajectory propagate(const Amplitudes &psi0, const ControlWaveforms &w);

/// Final state only; no trajectory storage.
Amplitudes propagate_final(const Amplitudes &psi0, const ControlWaveforms &w);

/// Composed expm_step over the whole waveform. Oracle for propagate.
Amplitudes propagate_expm(const Amplitudes &psi0, const ControlWaveforms &w);

/// RK4 on d rho/dt = -i [H, rho] with the same sampling as propagate.
DensityMatrix propagate_density(const DensityMatrix &rho0,
                                const ControlWaveforms &w);

inline constexpr double kDivergenceTolerance = 1e-6;

} // namespace qnn
