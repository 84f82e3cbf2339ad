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
#include "qnn/learning.hpp"

#include "qnn/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qnn {

TrainingPair::TrainingPair(const QuantumState &input_state, std::size_t index,
                           double target_value)
    : input(input_state), measure_index(index), target(target_value) {
    if (measure_index >= kDim) {
        throw DomainError("measure index out of range: " +
                          std::to_string(measure_index));
    }
    if (!std::isfinite(target) || target < 0.0 || target > 1.0) {
        throw DomainError("target must lie in [0, 1], got " +
                          std::to_string(target));
    }
}

GradientSet::GradientSet(std::size_t n_steps) : n_steps_(n_steps) {
    for (auto &s : series_) {
        s.assign(n_steps, 0.0);
    }
}

bool GradientSet::all_finite() const {
    return std::all_of(series_.begin(), series_.end(), [](const auto &s) {
        return std::all_of(s.begin(), s.end(),
                           [](double v) { return std::isfinite(v); });
    });
}

double GradientSet::max_abs() const {
    double worst = 0.0;
    for (const auto &s : series_) {
        for (double v : s) {
            worst = std::max(worst, std::abs(v));
        }
    }
    return worst;
}

void TrainConfig::validate() const {
    if (!(learning_rate >= 0.0) || !std::isfinite(learning_rate)) {
        throw ConfigError("learning_rate must be finite and >= 0");
    }
    if (epochs == 0) {
        throw ConfigError("epochs must be positive");
    }
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw ConfigError("dt must be positive");
    }
    if (n_steps == 0) {
        throw ConfigError("n_steps must be positive");
    }
}

double pair_loss(double output, double target) {
    const double d = output - target;
    return d * d;
}

double forward_output(const TrainingPair &pair, const ControlWaveforms &w) {
    const Amplitudes psi = propagate_final(pair.input.amplitudes(), w);
    return projection_probability(psi, pair.measure_index);
}

double loss(const TrainingPair &pair, const ControlWaveforms &w) {
    return pair_loss(forward_output(pair, w), pair.target);
}

namespace {

Amplitudes axpy(const Amplitudes &y, Complex a, const Amplitudes &x) {
    Amplitudes out;
    for (std::size_t i = 0; i < kDim; ++i) {
        out[i] = y[i] + a * x[i];
    }
    return out;
}

// Stage k = H y depends on a control through P y, so dL/dc = 2 Re <g_k, P y>.
double stage_sensitivity(const Amplitudes &g, Control which,
                         const Amplitudes &y) {
    return 2.0 * inner(g, apply_generator(which, y)).real();
}

} // namespace

LossAndGradient loss_and_gradient(const TrainingPair &pair,
                                  const ControlWaveforms &w) {
    const Trajectory traj = propagate(pair.input, w);
    const std::size_t m = pair.measure_index;
    const Amplitudes &psi_f = traj.final_state();
    const double output = projection_probability(psi_f, m);

    LossAndGradient out{output, pair_loss(output, pair.target),
                        GradientSet(w.n_steps())};

    // Adjoint g with dL = 2 Re <g, d psi>. At t_f only component m is live.
    Amplitudes g{};
    g[m] = 2.0 * (output - pair.target) * psi_f[m];

    const double dt = w.dt();
    // RK4 stage coefficients as used by rk4_step, and their conjugates for
    // the transposed recursion.
    const Complex alpha{0.0, -0.5 * dt};
    const Complex beta{0.0, -dt};
    const Complex gamma{0.0, -dt / 6.0};
    const Complex alpha_c = std::conj(alpha);
    const Complex beta_c = std::conj(beta);
    const Complex gamma_c = std::conj(gamma);

    for (std::size_t k = w.n_steps(); k-- > 0;) {
        const ControlVector c = w.at(k);
        const Amplitudes &psi = traj.states[k];

        // Recompute the forward stages of step k.
        const Amplitudes &y1 = psi;
        const Amplitudes k1 = apply_hamiltonian(c, y1);
        const Amplitudes y2 = axpy(psi, alpha, k1);
        const Amplitudes k2 = apply_hamiltonian(c, y2);
        const Amplitudes y3 = axpy(psi, alpha, k2);
        const Amplitudes k3 = apply_hamiltonian(c, y3);
        const Amplitudes y4 = axpy(psi, beta, k3);

        // Reverse sweep; H is Hermitian so H^dagger g = H g.
        const Amplitudes gk4 = gamma_c * g;
        const Amplitudes gy4 = apply_hamiltonian(c, gk4);
        const Amplitudes gk3 = axpy(2.0 * gamma_c * g, beta_c, gy4);
        const Amplitudes gy3 = apply_hamiltonian(c, gk3);
        const Amplitudes gk2 = axpy(2.0 * gamma_c * g, alpha_c, gy3);
        const Amplitudes gy2 = apply_hamiltonian(c, gk2);
        const Amplitudes gk1 = axpy(gamma_c * g, alpha_c, gy2);
        const Amplitudes gy1 = apply_hamiltonian(c, gk1);

        for (Control which : kAllControls) {
            out.gradient.series(which)[k] =
                stage_sensitivity(gk1, which, y1) +
                stage_sensitivity(gk2, which, y2) +
                stage_sensitivity(gk3, which, y3) +
                stage_sensitivity(gk4, which, y4);
        }

        g = g + gy1 + gy2 + gy3 + gy4;
    }
    return out;
}

GradientSet gradient(const TrainingPair &pair, const ControlWaveforms &w) {
    return loss_and_gradient(pair, w).gradient;
}

namespace {

// Forward-only loss in extended precision, for the finite-difference oracle.
// Shares nothing with the reverse pass; the same RK4 recursion with
// H applied densely.
long double extended_loss(const TrainingPair &pair, const ControlWaveforms &w,
                          std::size_t step, Control which, double value) {
    using C = std::complex<long double>;
    std::array<C, kDim> psi;
    for (std::size_t i = 0; i < kDim; ++i) {
        psi[i] = C(pair.input[i].real(), pair.input[i].imag());
    }
    const long double dt = w.dt();
    const auto apply = [](const std::array<C, 16> &h,
                          const std::array<C, kDim> &v) {
        std::array<C, kDim> out{};
        for (std::size_t r = 0; r < kDim; ++r) {
            for (std::size_t c = 0; c < kDim; ++c) {
                out[r] += h[r * kDim + c] * v[c];
            }
        }
        return out;
    };
    const C minus_i(0.0L, -1.0L);
    for (std::size_t k = 0; k < w.n_steps(); ++k) {
        ControlVector cv = w.at(k);
        if (k == step) {
            cv[which] = value;
        }
        const Operator4 hd = build_hamiltonian(cv);
        std::array<C, 16> h;
        for (std::size_t r = 0; r < kDim; ++r) {
            for (std::size_t c = 0; c < kDim; ++c) {
                h[r * kDim + c] = C(hd(r, c).real(), hd(r, c).imag());
            }
        }
        std::array<C, kDim> y = psi;
        const auto k1 = apply(h, y);
        for (std::size_t i = 0; i < kDim; ++i) {
            y[i] = psi[i] + minus_i * (dt / 2) * k1[i];
        }
        const auto k2 = apply(h, y);
        for (std::size_t i = 0; i < kDim; ++i) {
            y[i] = psi[i] + minus_i * (dt / 2) * k2[i];
        }
        const auto k3 = apply(h, y);
        for (std::size_t i = 0; i < kDim; ++i) {
            y[i] = psi[i] + minus_i * dt * k3[i];
        }
        const auto k4 = apply(h, y);
        for (std::size_t i = 0; i < kDim; ++i) {
            psi[i] += minus_i * (dt / 6) *
                      (k1[i] + 2.0L * k2[i] + 2.0L * k3[i] + k4[i]);
        }
    }
    const long double d = std::norm(psi[pair.measure_index]) - pair.target;
    return d * d;
}

} // namespace

double fd_gradient(const TrainingPair &pair, const ControlWaveforms &w,
                   std::size_t step, Control which, double h) {
    if (!(h > 0.0)) {
        throw DomainError("finite-difference step must be positive");
    }
    if (step >= w.n_steps()) {
        throw DomainError("step index out of range");
    }
    const double centre = w.series(which)[step];
    const double plus = centre + h;
    const double minus = centre - h;
    // Divide by the perturbation actually representable in double.
    return static_cast<double>(
        (extended_loss(pair, w, step, which, plus) -
         extended_loss(pair, w, step, which, minus)) /
        (static_cast<long double>(plus) - static_cast<long double>(minus)));
}

Evaluation evaluate(std::span<const TrainingPair> pairs,
                    const ControlWaveforms &w) {
    if (pairs.empty()) {
        throw DomainError("evaluate needs at least one pair");
    }
    Evaluation ev;
    ev.pairs.reserve(pairs.size());
    double sum = 0.0;
    for (const auto &pair : pairs) {
        const double output = forward_output(pair, w);
        const double error = std::abs(output - pair.target);
        ev.pairs.push_back({output, pair.target, error});
        sum += error;
    }
    ev.mean_rms = sum / static_cast<double>(pairs.size());
    return ev;
}

RunReport train(std::span<const TrainingPair> pairs, const TrainConfig &cfg,
                const EpochCallback &on_epoch) {
    cfg.validate();
    return train(pairs, cfg, ControlWaveforms(cfg.dt, cfg.n_steps, cfg.initial),
                 on_epoch);
}

RunReport train(std::span<const TrainingPair> pairs, const TrainConfig &cfg,
                ControlWaveforms w, const EpochCallback &on_epoch) {
    cfg.validate();
    if (pairs.empty()) {
        throw DomainError("train needs at least one pair");
    }

    RunReport report{evaluate(pairs, w).mean_rms, {}, {}, w};
    report.epoch_rms.reserve(cfg.epochs);

    for (std::size_t epoch = 0; epoch < cfg.epochs; ++epoch) {
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            LossAndGradient lg = [&] {
                try {
                    return loss_and_gradient(pairs[i], w);
                } catch (const IntegrationDivergedError &e) {
                    throw TrainingDivergedError(
                        std::string("integration diverged: ") + e.what(),
                        epoch, i);
                }
            }();
            if (!std::isfinite(lg.loss) || !lg.gradient.all_finite()) {
                throw TrainingDivergedError(
                    "non-finite loss or gradient at epoch " +
                        std::to_string(epoch + 1) + ", pair " +
                        std::to_string(i),
                    epoch, i);
            }
            for (Control which : kAllControls) {
                auto samples = w.series(which);
                const auto grad = lg.gradient.series(which);
                for (std::size_t k = 0; k < samples.size(); ++k) {
                    samples[k] -= cfg.learning_rate * grad[k];
                }
            }
        }
        const double rms = [&] {
            try {
                return evaluate(pairs, w).mean_rms;
            } catch (const IntegrationDivergedError &e) {
                throw TrainingDivergedError(
                    std::string("integration diverged: ") + e.what(), epoch,
                    pairs.size() - 1);
            }
        }();
        if (!std::isfinite(rms)) {
            throw TrainingDivergedError("non-finite epoch error", epoch,
                                        pairs.size() - 1);
        }
        report.epoch_rms.push_back(rms);
        if (on_epoch) {
            on_epoch(epoch, rms);
        }
    }

    report.final_evaluation = evaluate(pairs, w);
    report.waveforms = std::move(w);
    return report;
}

} // namespace qnn
