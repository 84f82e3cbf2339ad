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
 * The fixed training set and seeded random test sets for the nine input
 * state families.
 */
#pragma once

#include "qnn/learning.hpp"
#include "qnn/targets.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace qnn {

inline constexpr std::array<FamilyKind, 9> kAllFamilies{
    FamilyKind::BELL, FamilyKind::BP1,  FamilyKind::BP2,
    FamilyKind::EPR,  FamilyKind::EP1,  FamilyKind::EP2,
    FamilyKind::EPRX, FamilyKind::EP3,  FamilyKind::EP4};

std::string_view family_name(FamilyKind kind);
FamilyKind parse_family(std::string_view name);

std::string_view phase_offset_name(PhaseOffset set);
/// "phi", "theta" or "xi".
PhaseOffset parse_phase_offset(std::string_view name);

/// The three kinds tested against one phase offset, in plotting order.
std::array<FamilyKind, 3> families_for(PhaseOffset set);

/// Basis indices with a nonzero magnitude in `kind`.
std::span<const std::size_t> family_support(FamilyKind kind);

/**
 * One member of a family: magnitudes over |00>,|01>,|10>,|11> (zero off the
 * family's support) and the relative phase on the family's phased amplitude.
 */
struct StateFamily {
    FamilyKind kind = FamilyKind::BELL;
    std::array<double, 4> magnitudes{};
    double phase = 0.0;

    /// Throws DomainError if magnitudes are negative, off-support,
    /// unnormalized (1e-9), or the phase is outside (-pi, pi].
    void validate() const;
};

QuantumState family_state(const StateFamily &fam);

/// Routes to the family's target function.
double family_target(const StateFamily &fam);

/// Throws RejectedSampleError if the target is outside [0, 1].
TrainingPair to_training_pair(const StateFamily &fam);

/// Eleven equal-amplitude Bell pairs, phi from -pi/2 to pi/2 in steps of
/// pi/10, measured on |11> with target cos^2(phi/2).
std::vector<TrainingPair> build_training_set();

/// The phases used by build_training_set, in order.
std::array<double, 11> training_phases();

struct SampleBatch {
    std::vector<StateFamily> samples;
    std::size_t rejected = 0; ///< draws discarded for an out-of-range target
};

/**
 * `count` seeded samples of one family. Magnitudes are |N(0,1)| draws on the
 * family's support, normalized; the phase is uniform on (-pi, pi]. Draws
 * whose target falls outside [0, 1] are discarded and counted. Throws
 * ConfigError once more than half of all draws have been rejected.
 */
SampleBatch sample_family(FamilyKind kind, std::uint64_t seed,
                          std::size_t count);

struct TestSet {
    PhaseOffset offset = PhaseOffset::phi;
    std::vector<StateFamily> states;
    std::vector<TrainingPair> pairs;
    std::array<std::size_t, 3> rejected{}; ///< per kind, as families_for()
};

/// `total` states split as evenly as possible across families_for(offset),
/// earlier kinds taking the remainder. Each kind gets its own seed stream.
TestSet build_test_set(PhaseOffset offset, std::uint64_t seed,
                       std::size_t total = 550);

} // namespace qnn
