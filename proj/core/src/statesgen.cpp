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
#include "qnn/statesgen.hpp"

#include "qnn/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace qnn {

namespace {

using std::numbers::pi;

constexpr std::array<std::string_view, 9> kFamilyNames{
    "BELL", "BP1", "BP2", "EPR", "EP1", "EP2", "EPRX", "EP3", "EP4"};

constexpr std::array<std::size_t, 2> kSupBell{0, 3};
constexpr std::array<std::size_t, 3> kSupBp1{0, 1, 3};
constexpr std::array<std::size_t, 3> kSupBp2{0, 2, 3};
constexpr std::array<std::size_t, 2> kSupEpr{1, 2};
constexpr std::array<std::size_t, 3> kSupEp1{0, 1, 2};
constexpr std::array<std::size_t, 3> kSupEp2{1, 2, 3};

std::size_t kind_index(FamilyKind kind) {
    return static_cast<std::size_t>(kind);
}

} // namespace

std::string_view family_name(FamilyKind kind) {
    return kFamilyNames.at(kind_index(kind));
}

FamilyKind parse_family(std::string_view name) {
    for (std::size_t i = 0; i < kFamilyNames.size(); ++i) {
        if (kFamilyNames[i] == name) {
            return static_cast<FamilyKind>(i);
        }
    }
    throw DomainError("unknown state family: " + std::string(name));
}

std::string_view phase_offset_name(PhaseOffset set) {
    switch (set) {
    case PhaseOffset::phi:
        return "phi";
    case PhaseOffset::theta:
        return "theta";
    case PhaseOffset::xi:
        return "xi";
    }
    throw DomainError("bad phase offset");
}

PhaseOffset parse_phase_offset(std::string_view name) {
    if (name == "phi") {
        return PhaseOffset::phi;
    }
    if (name == "theta") {
        return PhaseOffset::theta;
    }
    if (name == "xi") {
        return PhaseOffset::xi;
    }
    throw DomainError("unknown family set: " + std::string(name) +
                      " (expected phi, theta or xi)");
}

std::array<FamilyKind, 3> families_for(PhaseOffset set) {
    switch (set) {
    case PhaseOffset::phi:
        return {FamilyKind::BELL, FamilyKind::BP1, FamilyKind::BP2};
    case PhaseOffset::theta:
        return {FamilyKind::EPR, FamilyKind::EP1, FamilyKind::EP2};
    case PhaseOffset::xi:
        return {FamilyKind::EPRX, FamilyKind::EP3, FamilyKind::EP4};
    }
    throw DomainError("bad phase offset");
}

std::span<const std::size_t> family_support(FamilyKind kind) {
    switch (kind) {
    case FamilyKind::BELL:
        return kSupBell;
    case FamilyKind::BP1:
        return kSupBp1;
    case FamilyKind::BP2:
        return kSupBp2;
    case FamilyKind::EPR:
    case FamilyKind::EPRX:
        return kSupEpr;
    case FamilyKind::EP1:
    case FamilyKind::EP4:
        return kSupEp1;
    case FamilyKind::EP2:
    case FamilyKind::EP3:
        return kSupEp2;
    }
    throw DomainError("bad family kind");
}

void StateFamily::validate() const {
    const auto support = family_support(kind);
    double sum = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        const double a = magnitudes[i];
        if (!std::isfinite(a) || a < 0.0) {
            throw DomainError("magnitudes must be finite and nonnegative");
        }
        const bool on_support =
            std::find(support.begin(), support.end(), i) != support.end();
        if (!on_support && a != 0.0) {
            throw DomainError(std::string(family_name(kind)) +
                              " has no amplitude on basis index " +
                              std::to_string(i));
        }
        sum += a * a;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        throw DomainError("family magnitudes are not normalized");
    }
    if (!std::isfinite(phase) || phase <= -pi || phase > pi) {
        throw DomainError("phase must lie in (-pi, pi]");
    }
}

QuantumState family_state(const StateFamily &fam) {
    fam.validate();
    std::array<double, 3> phases{}; // xi, theta, phi
    switch (phase_offset(fam.kind)) {
    case PhaseOffset::xi:
        phases[0] = fam.phase;
        break;
    case PhaseOffset::theta:
        phases[1] = fam.phase;
        break;
    case PhaseOffset::phi:
        phases[2] = fam.phase;
        break;
    }
    return make_state(fam.magnitudes, phases);
}

double family_target(const StateFamily &fam) {
    const auto &a = fam.magnitudes;
    const double x = fam.phase;
    switch (fam.kind) {
    case FamilyKind::BELL:
        return target_bell(a[0], a[3], x);
    case FamilyKind::BP1:
        return target_bp1(a[0], a[1], a[3], x);
    case FamilyKind::BP2:
        return target_bp2(a[0], a[2], a[3], x);
    case FamilyKind::EPR:
        return target_epr(a[1], a[2], x);
    case FamilyKind::EP1:
        return target_ep1(a[0], a[1], a[2], x);
    case FamilyKind::EP2:
        return target_ep2(a[1], a[2], a[3], x);
    case FamilyKind::EPRX:
        return target_eprx(a[1], a[2], x);
    case FamilyKind::EP3:
        return target_ep3(a[1], a[2], a[3], x);
    case FamilyKind::EP4:
        return target_ep4(a[0], a[1], a[2], x);
    }
    throw DomainError("bad family kind");
}

TrainingPair to_training_pair(const StateFamily &fam) {
    const QuantumState input = family_state(fam);
    const double target = family_target(fam);
    if (!(target >= 0.0 && target <= 1.0)) {
        throw RejectedSampleError(std::string(family_name(fam.kind)) +
                                  " target outside [0, 1]: " +
                                  std::to_string(target));
    }
    return TrainingPair(input, measure_index(fam.kind), target);
}

std::array<double, 11> training_phases() {
    std::array<double, 11> phases{};
    for (std::size_t n = 1; n <= phases.size(); ++n) {
        phases[n - 1] = -pi / 2.0 + static_cast<double>(n - 1) * pi / 10.0;
    }
    return phases;
}

std::vector<TrainingPair> build_training_set() {
    std::vector<TrainingPair> pairs;
    const double a = 1.0 / std::numbers::sqrt2;
    for (double phi : training_phases()) {
        pairs.emplace_back(make_state({a, 0.0, 0.0, a}, {0.0, 0.0, phi}), 3,
                           target_equal_bell(phi));
    }
    return pairs;
}

SampleBatch sample_family(FamilyKind kind, std::uint64_t seed,
                          std::size_t count) {
    if (count == 0) {
        throw DomainError("sample count must be positive");
    }
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(kind_index(kind))};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    const auto support = family_support(kind);
    SampleBatch batch;
    batch.samples.reserve(count);
    while (batch.samples.size() < count) {
        StateFamily fam{kind, {}, 0.0};
        double sum = 0.0;
        for (std::size_t i : support) {
            const double g = std::abs(normal(rng));
            fam.magnitudes[i] = g;
            sum += g * g;
        }
        // Maps [0, 1) onto (-pi, pi].
        fam.phase = pi - 2.0 * pi * unit(rng);
        if (!(sum > 0.0)) {
            continue;
        }
        const double inv = 1.0 / std::sqrt(sum);
        for (std::size_t i : support) {
            fam.magnitudes[i] *= inv;
        }
        const double target = family_target(fam);
        if (target >= 0.0 && target <= 1.0) {
            batch.samples.push_back(fam);
            continue;
        }
        ++batch.rejected;
        if (batch.rejected > count) {
            throw ConfigError(std::string(family_name(kind)) +
                              ": more than half of all sampled targets fall "
                              "outside [0, 1]");
        }
    }
    return batch;
}

TestSet build_test_set(PhaseOffset offset, std::uint64_t seed,
                       std::size_t total) {
    if (total == 0) {
        throw DomainError("test set size must be positive");
    }
    TestSet set;
    set.offset = offset;
    const auto kinds = families_for(offset);
    const std::size_t base = total / kinds.size();
    const std::size_t extra = total % kinds.size();
    for (std::size_t j = 0; j < kinds.size(); ++j) {
        const std::size_t count = base + (j < extra ? 1 : 0);
        if (count == 0) {
            continue;
        }
        SampleBatch batch = sample_family(kinds[j], seed, count);
        set.rejected[j] = batch.rejected;
        for (const auto &fam : batch.samples) {
            set.states.push_back(fam);
            set.pairs.push_back(to_training_pair(fam));
        }
    }
    return set;
}

} // namespace qnn
