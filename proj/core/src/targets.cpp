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
#include "qnn/targets.hpp"

#include "qnn/errors.hpp"
#include "qnn/qcore.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qnn {

namespace {

constexpr double kNormTolerance = 1e-9;
constexpr double kThird = 1.0 / 3.0;

void require_normalized(std::initializer_list<double> mags) {
    double sum = 0.0;
    for (double a : mags) {
        if (!std::isfinite(a) || a < 0.0) {
            throw DomainError("magnitudes must be finite and nonnegative");
        }
        sum += a * a;
    }
    if (std::abs(sum - 1.0) > kNormTolerance) {
        throw DomainError("magnitudes are not normalized (sum of squares " +
                          std::to_string(sum) + ")");
    }
}

double cos2_half(double angle) {
    const double c = std::cos(0.5 * angle);
    return c * c;
}

// 2(1/2 - p^2)^2 q^2 + 2 p q cos^2(x/2)
double two_amplitude(double p, double q, double x) {
    const double d = 0.5 - p * p;
    return 2.0 * d * d * q * q + 2.0 * p * q * cos2_half(x);
}

// 2|1/3 - c^2| s^2 q^2 + 3|1/3 - s^2| c^2 q^2 + 2 s q cos^2(x/2)
// c is the contaminant, s the unphased partner of the entangled pair and q
// the amplitude whose product with s carries the phase term.
double three_amplitude(double c, double s, double q, double x) {
    return 2.0 * std::abs(kThird - c * c) * s * s * q * q +
           3.0 * std::abs(kThird - s * s) * c * c * q * q +
           2.0 * s * q * cos2_half(x);
}

} // namespace

PhaseOffset phase_offset(FamilyKind kind) {
    switch (kind) {
    case FamilyKind::BELL:
    case FamilyKind::BP1:
    case FamilyKind::BP2:
        return PhaseOffset::phi;
    case FamilyKind::EPR:
    case FamilyKind::EP1:
    case FamilyKind::EP2:
        return PhaseOffset::theta;
    case FamilyKind::EPRX:
    case FamilyKind::EP3:
    case FamilyKind::EP4:
        return PhaseOffset::xi;
    }
    throw DomainError("bad family kind");
}

std::size_t measure_index(FamilyKind kind) {
    switch (phase_offset(kind)) {
    case PhaseOffset::phi:
        return 3;
    case PhaseOffset::theta:
        return 2;
    case PhaseOffset::xi:
        return 1;
    }
    throw DomainError("bad phase offset");
}

double target_equal_bell(double phi) { return cos2_half(phi); }

double target_bell(double a00, double a11, double phi) {
    require_normalized({a00, a11});
    return two_amplitude(a00, a11, phi);
}

double target_bp1(double a00, double a01, double a11, double phi) {
    require_normalized({a00, a01, a11});
    // 2|1/3 - a01^2| a00^2 a11^2 + 3|1/3 - a00^2| a01^2 a11^2 + 2 a00 a11 cos^2
    return three_amplitude(a01, a00, a11, phi);
}

double target_bp2(double a00, double a10, double a11, double phi) {
    require_normalized({a00, a10, a11});
    return three_amplitude(a10, a00, a11, phi);
}

double target_epr(double a01, double a10, double theta) {
    require_normalized({a01, a10});
    return two_amplitude(a01, a10, theta);
}

double target_ep1(double a00, double a01, double a10, double theta) {
    require_normalized({a00, a01, a10});
    // 2|1/3 - a00^2| a01^2 a10^2 + 3|1/3 - a01^2| a00^2 a10^2 + 2 a01 a10 cos^2
    return three_amplitude(a00, a01, a10, theta);
}

double target_ep2(double a01, double a10, double a11, double theta) {
    require_normalized({a01, a10, a11});
    // 2|1/3 - a11^2| a01^2 a10^2 + 3|1/3 - a01^2| a11^2 a10^2 + 2 a01 a10 cos^2
    return three_amplitude(a11, a01, a10, theta);
}

double target_eprx(double a01, double a10, double xi) {
    require_normalized({a01, a10});
    // 2(1/2 - a10^2)^2 a01^2 + 2 a10 a01 cos^2(xi/2)
    return two_amplitude(a10, a01, xi);
}

double target_ep3(double a01, double a10, double a11, double xi) {
    require_normalized({a01, a10, a11});
    // 2|1/3 - a11^2| a10^2 a01^2 + 3|1/3 - a10^2| a11^2 a01^2 + 2 a10 a01 cos^2
    return three_amplitude(a11, a10, a01, xi);
}

double target_ep4(double a00, double a01, double a10, double xi) {
    require_normalized({a00, a01, a10});
    // 2|1/3 - a00^2| a10^2 a01^2 + 3|1/3 - a10^2| a00^2 a01^2 + 2 a10 a01 cos^2
    return three_amplitude(a00, a10, a01, xi);
}

double parity_closed_form(double p, double phi) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw DomainError("p must lie in [0, 1]");
    }
    return 0.5 + std::sqrt(p * (1.0 - p)) * std::cos(phi);
}

double hadamard_parity_probe(double p, double phi) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw DomainError("p must lie in [0, 1]");
    }
    const Amplitudes psi{Complex{std::sqrt(p), 0.0}, {}, {},
                         std::polar(std::sqrt(1.0 - p), phi)};
    const double s = 1.0 / std::numbers::sqrt2;
    const std::array<Complex, 4> hadamard{s, s, s, -s};
    const Amplitudes out = kron(hadamard, hadamard) * psi;
    // Even parity: zero or two qubits in |1>.
    return std::norm(out[0]) + std::norm(out[3]);
}

} // namespace qnn
