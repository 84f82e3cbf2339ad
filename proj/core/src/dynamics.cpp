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
#include "qnn/dynamics.hpp"

#include "qnn/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>

namespace qnn {

namespace {

constexpr std::array<std::string_view, kNumControls> kControlNames{
    "K_A", "K_B", "eps_A", "eps_B", "zeta"};

constexpr Complex kMinusI{0.0, -1.0};

Amplitudes axpy(const Amplitudes &y, Complex a, const Amplitudes &x) {
    Amplitudes out;
    for (std::size_t i = 0; i < kDim; ++i) {
        out[i] = y[i] + a * x[i];
    }
    return out;
}

void check_norm(double n2, double n2_ref, std::size_t step) {
    const double drift = std::abs(std::sqrt(n2 / n2_ref) - 1.0);
    if (!(drift <= kDivergenceTolerance)) {
        throw IntegrationDivergedError(
            "state norm drifted by " + std::to_string(drift) + " at step " +
                std::to_string(step),
            step);
    }
}

double purity(const Operator4 &rho) {
    double sum = 0.0;
    for (std::size_t r = 0; r < kDim; ++r) {
        for (std::size_t c = 0; c < kDim; ++c) {
            sum += std::norm(rho(r, c));
        }
    }
    return sum;
}

Operator4 commutator_rhs(const Operator4 &h, const Operator4 &rho) {
    // -i [H, rho]
    return (h * rho - rho * h) * kMinusI;
}

} // namespace

std::string_view control_name(Control c) {
    return kControlNames[static_cast<std::size_t>(c)];
}

Control parse_control(std::string_view name) {
    for (std::size_t i = 0; i < kNumControls; ++i) {
        if (kControlNames[i] == name) {
            return static_cast<Control>(i);
        }
    }
    throw DomainError("unknown control: " + std::string(name));
}

Pauli control_generator(Control c) {
    switch (c) {
    case Control::K_A:
        return Pauli::xA;
    case Control::K_B:
        return Pauli::xB;
    case Control::eps_A:
        return Pauli::zA;
    case Control::eps_B:
        return Pauli::zB;
    case Control::zeta:
        return Pauli::zAzB;
    }
    throw DomainError("bad control index");
}

double ControlVector::operator[](Control c) const {
    switch (c) {
    case Control::K_A:
        return K_A;
    case Control::K_B:
        return K_B;
    case Control::eps_A:
        return eps_A;
    case Control::eps_B:
        return eps_B;
    case Control::zeta:
        return zeta;
    }
    throw DomainError("bad control index");
}

double &ControlVector::operator[](Control c) {
    switch (c) {
    case Control::K_A:
        return K_A;
    case Control::K_B:
        return K_B;
    case Control::eps_A:
        return eps_A;
    case Control::eps_B:
        return eps_B;
    case Control::zeta:
        return zeta;
    }
    throw DomainError("bad control index");
}

ControlWaveforms::ControlWaveforms(double dt, std::size_t n_steps,
                                   const ControlVector &fill)
    : dt_(dt), n_steps_(n_steps) {
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw DomainError("dt must be positive and finite");
    }
    if (n_steps == 0) {
        throw DomainError("n_steps must be positive");
    }
    for (Control c : kAllControls) {
        if (!std::isfinite(fill[c])) {
            throw DomainError("control values must be finite");
        }
        series_[static_cast<std::size_t>(c)].assign(n_steps, fill[c]);
    }
}

ControlVector ControlWaveforms::at(std::size_t step) const {
    ControlVector c;
    for (Control which : kAllControls) {
        c[which] = series_[static_cast<std::size_t>(which)].at(step);
    }
    return c;
}

void ControlWaveforms::set(std::size_t step, const ControlVector &c) {
    for (Control which : kAllControls) {
        series_[static_cast<std::size_t>(which)].at(step) = c[which];
    }
}

Amplitudes apply_hamiltonian(const ControlVector &c, const Amplitudes &v) {
    // sz_A = diag(1,1,-1,-1), sz_B = diag(1,-1,1,-1), sz_A sz_B = diag(1,-1,-1,1)
    const double d0 = c.eps_A + c.eps_B + c.zeta;
    const double d1 = c.eps_A - c.eps_B - c.zeta;
    const double d2 = -c.eps_A + c.eps_B - c.zeta;
    const double d3 = -c.eps_A - c.eps_B + c.zeta;
    return {
        d0 * v[0] + c.K_B * v[1] + c.K_A * v[2],
        d1 * v[1] + c.K_B * v[0] + c.K_A * v[3],
        d2 * v[2] + c.K_A * v[0] + c.K_B * v[3],
        d3 * v[3] + c.K_A * v[1] + c.K_B * v[2],
    };
}

Amplitudes apply_generator(Control which, const Amplitudes &v) {
    switch (which) {
    case Control::K_A:
        return {v[2], v[3], v[0], v[1]};
    case Control::K_B:
        return {v[1], v[0], v[3], v[2]};
    case Control::eps_A:
        return {v[0], v[1], -v[2], -v[3]};
    case Control::eps_B:
        return {v[0], -v[1], v[2], -v[3]};
    case Control::zeta:
        return {v[0], -v[1], -v[2], v[3]};
    }
    throw DomainError("bad control index");
}

Operator4 build_hamiltonian(const ControlVector &c) {
    Operator4 h;
    for (Control which : kAllControls) {
        h += pauli_operator(control_generator(which)) * Complex{c[which], 0.0};
    }
    return h;
}

Amplitudes rk4_step(const Amplitudes &psi, const ControlVector &c, double dt) {
    const Complex half{0.0, -0.5 * dt}; // -i dt/2
    const Complex full{0.0, -dt};       // -i dt
    // k_i below are H y_i; the -i factor is folded into the step weights.
    const Amplitudes k1 = apply_hamiltonian(c, psi);
    const Amplitudes k2 = apply_hamiltonian(c, axpy(psi, half, k1));
    const Amplitudes k3 = apply_hamiltonian(c, axpy(psi, half, k2));
    const Amplitudes k4 = apply_hamiltonian(c, axpy(psi, full, k3));
    const Complex w{0.0, -dt / 6.0};
    Amplitudes out;
    for (std::size_t i = 0; i < kDim; ++i) {
        out[i] = psi[i] + w * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    return out;
}

Operator4 expm_propagator(const ControlVector &c, double dt) {
    const Operator4 h = build_hamiltonian(c);
    Eigen::Matrix4cd m;
    for (std::size_t r = 0; r < kDim; ++r) {
        for (std::size_t col = 0; col < kDim; ++col) {
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(col)) =
                h(r, col);
        }
    }
    const Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> eig(m);
    if (eig.info() != Eigen::Success) {
        throw Error("Hermitian eigendecomposition failed");
    }
    Eigen::Vector4cd phases;
    for (Eigen::Index i = 0; i < 4; ++i) {
        phases(i) = std::polar(1.0, -eig.eigenvalues()(i) * dt);
    }
    const Eigen::Matrix4cd u = eig.eigenvectors() * phases.asDiagonal() *
                               eig.eigenvectors().adjoint();
    Operator4 out;
    for (std::size_t r = 0; r < kDim; ++r) {
        for (std::size_t col = 0; col < kDim; ++col) {
            out(r, col) = u(static_cast<Eigen::Index>(r),
                            static_cast<Eigen::Index>(col));
        }
    }
    return out;
}

Amplitudes expm_step(const Amplitudes &psi, const ControlVector &c,
                     double dt) {
    return expm_propagator(c, dt) * psi;
}

Trajectory propagate(const Amplitudes &psi0, const ControlWaveforms &w) {
    Trajectory traj;
    traj.states.reserve(w.n_steps() + 1);
    traj.states.push_back(psi0);
    const double n2_ref = norm_squared(psi0);
    if (!(n2_ref > 0.0)) {
        throw InvalidStateError("cannot propagate a zero state");
    }
    for (std::size_t k = 0; k < w.n_steps(); ++k) {
        traj.states.push_back(rk4_step(traj.states.back(), w.at(k), w.dt()));
        check_norm(norm_squared(traj.states.back()), n2_ref, k + 1);
    }
    return traj;
}

Trajectory propagate(const QuantumState &state0, const ControlWaveforms &w) {
    return propagate(state0.amplitudes(), w);
}

Amplitudes propagate_final(const Amplitudes &psi0, const ControlWaveforms &w) {
    const double n2_ref = norm_squared(psi0);
    if (!(n2_ref > 0.0)) {
        throw InvalidStateError("cannot propagate a zero state");
    }
    Amplitudes psi = psi0;
    for (std::size_t k = 0; k < w.n_steps(); ++k) {
        psi = rk4_step(psi, w.at(k), w.dt());
        check_norm(norm_squared(psi), n2_ref, k + 1);
    }
    return psi;
}

Amplitudes propagate_expm(const Amplitudes &psi0, const ControlWaveforms &w) {
    Amplitudes psi = psi0;
    for (std::size_t k = 0; k < w.n_steps(); ++k) {
        psi = expm_step(psi, w.at(k), w.dt());
    }
    return psi;
}

DensityMatrix propagate_density(const DensityMatrix &rho0,
                                const ControlWaveforms &w) {
    const double dt = w.dt();
    const double tr0 = rho0.trace_real();
    const double pur0 = purity(rho0.matrix());
    Operator4 rho = rho0.matrix();
    for (std::size_t k = 0; k < w.n_steps(); ++k) {
        const Operator4 h = build_hamiltonian(w.at(k));
        const Operator4 k1 = commutator_rhs(h, rho);
        const Operator4 k2 = commutator_rhs(h, rho + k1 * Complex{0.5 * dt});
        const Operator4 k3 = commutator_rhs(h, rho + k2 * Complex{0.5 * dt});
        const Operator4 k4 = commutator_rhs(h, rho + k3 * Complex{dt});
        rho += (k1 + k2 * Complex{2.0} + k3 * Complex{2.0} + k4) *
               Complex{dt / 6.0};
        const double drift = std::max(std::abs(rho.trace().real() - tr0),
                                      std::abs(purity(rho) - pur0));
        if (!(drift <= kDivergenceTolerance)) {
            throw IntegrationDivergedError(
                "density trace or purity drifted by " + std::to_string(drift) +
                    " at step " + std::to_string(k + 1),
                k + 1);
        }
    }
    return DensityMatrix::unchecked(rho);
}

} // namespace qnn
