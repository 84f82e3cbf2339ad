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
 * Target functions mapping an input state's magnitudes and relative phase to
 * the probability the trained network should output, one per state family.
 *
 * All functions take real magnitudes (a_ij >= 0) and the phase separately.
 * Normalization of the magnitudes that appear is checked to 1e-9; magnitudes
 * of a family's absent basis states are implicitly zero.
 */
#pragma once

#include <cstddef>

namespace qnn {

enum class FamilyKind { BELL, BP1, BP2, EPR, EP1, EP2, EPRX, EP3, EP4 };

/// Phase-carrying amplitude for each family; also the measured basis index.
enum class PhaseOffset { phi, theta, xi };

PhaseOffset phase_offset(FamilyKind kind);

/// phi -> 3 (|11>), theta -> 2 (|10>), xi -> 1 (|01>).
std::size_t measure_index(FamilyKind kind);

/// cos^2(phi/2): the equal-amplitude Bell training target.
double target_equal_bell(double phi);

// a00|00> + e^{i phi} a11|11>
double target_bell(double a00, double a11, double phi);
// a00|00> + a01|01> + e^{i phi} a11|11>
double target_bp1(double a00, double a01, double a11, double phi);
// a00|00> + a10|10> + e^{i phi} a11|11>
double target_bp2(double a00, double a10, double a11, double phi);

// a01|01> + e^{i theta} a10|10>
double target_epr(double a01, double a10, double theta);
// a00|00> + a01|01> + e^{i theta} a10|10>
double target_ep1(double a00, double a01, double a10, double theta);
// a01|01> + e^{i theta} a10|10> + a11|11>
double target_ep2(double a01, double a10, double a11, double theta);

// e^{i xi} a01|01> + a10|10>
double target_eprx(double a01, double a10, double xi);
// e^{i xi} a01|01> + a10|10> + a11|11>
double target_ep3(double a01, double a10, double a11, double xi);
// a00|00> + e^{i xi} a01|01> + a10|10>
double target_ep4(double a00, double a01, double a10, double xi);

/**
 * Two-qubit parity probe for sqrt(p)|00> + e^{i phi} sqrt(1-p)|11>.
 *
 * Builds the state, applies H (x) H, and returns the probability of an even
 * number of ones (|00> plus |11>). Throws DomainError for p outside [0, 1].
 */
double hadamard_parity_probe(double p, double phi);

/// 1/2 + sqrt(p(1-p)) cos(phi).
double parity_closed_form(double p, double phi);

} // namespace qnn
